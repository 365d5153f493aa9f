#include "arcmetric/topology.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "arcmetric/errors.hpp"

namespace arcmetric {

namespace {

std::string arc_id(int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 10 && j < 10) return "a" + std::to_string(i) + std::to_string(j);
  return "a" + std::to_string(i) + "_" + std::to_string(j);
}

std::string slope_suffix(const Slope& s) {
  return "(" + std::to_string(s.p) + "," + std::to_string(s.q) + ")";
}

std::optional<int> parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<Slope> parse_slope(std::string_view body) {
  if (body.size() < 5 || body.front() != '(' || body.back() != ')') return std::nullopt;
  body = body.substr(1, body.size() - 2);
  const auto comma = body.find(',');
  if (comma == std::string_view::npos) return std::nullopt;
  auto p = parse_int(body.substr(0, comma));
  auto q = parse_int(body.substr(comma + 1));
  if (!p || !q) return std::nullopt;
  if (std::gcd(*p, *q) != 1) return std::nullopt;
  return Slope::normalized(*p, *q);
}

long cross(const Slope& a, const Slope& b) {
  return static_cast<long>(a.p) * b.q - static_cast<long>(a.q) * b.p;
}

}  // namespace

const std::string& PantsDecomposition::label(Side s) const {
  switch (s.kind) {
    case SideKind::interior: return interior_labels.at(s.index);
    case SideKind::boundary: return boundary_labels.at(s.index);
    case SideKind::puncture: return puncture_labels.at(s.index);
  }
  throw std::logic_error("unreachable side kind");
}

std::pair<int, int> PantsDecomposition::boundary_slot(int j) const {
  for (std::size_t k = 0; k < pants.size(); ++k)
    for (int slot = 0; slot < 3; ++slot)
      if (pants[k].sides[slot] == Side{SideKind::boundary, j}) return {static_cast<int>(k), slot};
  throw std::out_of_range("boundary label not in decomposition");
}

void PantsDecomposition::validate() const {
  std::vector<int> interior(interior_labels.size()), boundary(boundary_labels.size()),
      puncture(puncture_labels.size());
  for (const Pants& p : pants)
    for (const Side& s : p.sides) {
      auto& counts = s.kind == SideKind::interior   ? interior
                     : s.kind == SideKind::boundary ? boundary
                                                    : puncture;
      counts.at(s.index) += 1;
    }
  auto all = [](const std::vector<int>& v, int n) {
    return std::all_of(v.begin(), v.end(), [n](int c) { return c == n; });
  };
  if (!all(interior, 2) || !all(boundary, 1) || !all(puncture, 1))
    throw std::logic_error("inconsistent pants adjacency");
}

Word reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return reduce(std::move(out));
}

Word cyclic_reduce(Word w) {
  w = reduce(std::move(w));
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(w.begin() + static_cast<long>(lo), w.begin() + static_cast<long>(hi));
}

Slope Slope::normalized(int p, int q) {
  if (p == 0 && q == 0) throw DomainError("zero slope");
  const int g = std::gcd(p, q);
  p /= g;
  q /= g;
  if (p < 0 || (p == 0 && q < 0)) {
    p = -p;
    q = -q;
  }
  return Slope{p, q};
}

int slope_det(const Slope& a, const Slope& b) {
  return static_cast<int>(std::abs(cross(a, b)));
}

std::pair<Word, Word> torus_basis(const Slope& s) {
  const Word a{1}, b{2};
  if (s == Slope{1, 0}) return {a, b};
  if (s == Slope{0, 1}) return {Word{1, 2, -1}, Word{-1}};
  // Farey descent. Directions du, dv span the cone containing s; in the
  // lower quadrant dv is the slope of v^-1.
  const bool upper = s.q > 0;
  Word u = a, v = b;
  Slope du{1, 0}, dv{0, upper ? 1 : -1};
  for (;;) {
    const Slope m{du.p + dv.p, du.q + dv.q};
    const Word v_step = upper ? v : inverse(v);
    if (cross(m, s) == 0) return {concat(u, v_step), v};
    const bool near_du = (cross(s, m) > 0) == (cross(du, m) > 0);
    if (near_du) {
      v = upper ? concat(v, u) : concat(v, inverse(u));
      dv = m;
    } else {
      u = concat(u, v_step);
      du = m;
    }
  }
}

std::optional<std::size_t> Panel::index_of(std::string_view id) const {
  for (std::size_t k = 0; k < entries.size(); ++k)
    if (entries[k].id == id) return k;
  return std::nullopt;
}

Surface Surface::build(int genus, int punctures, int boundaries) {
  if (genus < 0 || punctures < 0 || boundaries < 0)
    throw UnsupportedError("surface signature entries must be nonnegative");
  Surface s;
  s.signature_ = {genus, punctures, boundaries};
  if (s.signature_.euler_characteristic() >= 0)
    throw UnsupportedError("surface is not hyperbolic (Euler characteristic >= 0)");
  if (boundaries < 1) throw UnsupportedError("surface must have at least one boundary component");

  auto& d = s.decomposition_;
  for (int j = 0; j < boundaries; ++j) d.boundary_labels.push_back("B" + std::to_string(j + 1));
  for (int j = 0; j < punctures; ++j) d.puncture_labels.push_back("P" + std::to_string(j + 1));
  const int interior = s.signature_.interior_curve_count();
  for (int k = 0; k < interior; ++k) d.interior_labels.push_back("C" + std::to_string(k + 1));

  auto in = [](int k) { return Side{SideKind::interior, k}; };
  if (genus == 1 && punctures == 0 && boundaries == 1) {
    d.pants.push_back({{in(0), in(0), Side{SideKind::boundary, 0}}});
  } else {
    // Handles C_k | D_k first, then a chain over the legs D, B, P joined by E curves.
    int next = 0;
    std::vector<Side> legs;
    std::vector<int> handle(genus);
    for (int k = 0; k < genus; ++k) handle[k] = next++;
    for (int k = 0; k < genus; ++k) {
      const int dk = next++;
      d.pants.push_back({{in(handle[k]), in(handle[k]), in(dk)}});
      legs.push_back(in(dk));
    }
    for (int j = 0; j < boundaries; ++j) legs.push_back({SideKind::boundary, j});
    for (int j = 0; j < punctures; ++j) legs.push_back({SideKind::puncture, j});
    const int m = static_cast<int>(legs.size());
    if (m == 3) {
      d.pants.push_back({{legs[0], legs[1], legs[2]}});
    } else {
      Side carry = legs[0];
      for (int k = 1; k + 2 < m; ++k) {
        const Side e = in(next++);
        d.pants.push_back({{carry, legs[k], e}});
        carry = e;
      }
      d.pants.push_back({{carry, legs[m - 2], legs[m - 1]}});
    }
  }
  d.validate();

  if (genus == 0 && punctures == 0 && boundaries == 3) s.marking_ = Marking::pants;
  if (genus == 1 && punctures == 0 && boundaries == 1) s.marking_ = Marking::one_holed_torus;

  std::vector<HomotopyClass> same, distinct;
  for (int k = 0; k < static_cast<int>(d.pants.size()); ++k) {
    const auto& sides = d.pants[k].sides;
    for (int x = 0; x < 3; ++x) {
      if (sides[x].kind != SideKind::boundary) continue;
      HomotopyClass c;
      c.kind = ClassKind::pants_arc;
      c.host = k;
      c.same_boundary = true;
      c.pattern = {sides[x], sides[(x + 1) % 3], sides[(x + 2) % 3]};
      c.id = arc_id(sides[x].index + 1, sides[x].index + 1);
      same.push_back(c);
      for (int y = x + 1; y < 3; ++y) {
        if (sides[y].kind != SideKind::boundary) continue;
        HomotopyClass e;
        e.kind = ClassKind::pants_arc;
        e.host = k;
        Side lo = sides[x], hi = sides[y];
        if (hi.index < lo.index) std::swap(lo, hi);
        e.pattern = {lo, hi, sides[3 - x - y]};
        e.id = arc_id(lo.index + 1, hi.index + 1);
        distinct.push_back(e);
      }
    }
  }
  auto by_pattern = [](const HomotopyClass& l, const HomotopyClass& r) {
    return std::pair(l.pattern[0].index, l.pattern[1].index) <
           std::pair(r.pattern[0].index, r.pattern[1].index);
  };
  std::sort(same.begin(), same.end(), by_pattern);
  std::sort(distinct.begin(), distinct.end(), by_pattern);
  s.arcs_ = same;
  s.arcs_.insert(s.arcs_.end(), distinct.begin(), distinct.end());
  for (auto& c : s.arcs_) {
    if (s.marking_ == Marking::one_holed_torus) c.slope = Slope{1, 0};
  }
  return s;
}

HomotopyClass Surface::boundary(int j) const {
  HomotopyClass c;
  c.kind = ClassKind::boundary_curve;
  c.label = j;
  c.id = decomposition_.boundary_labels.at(j);
  if (marking_ == Marking::one_holed_torus) c.word = Word{1, 2, -1, -2};
  return c;
}

HomotopyClass Surface::decomposition_curve(int k) const {
  HomotopyClass c;
  c.kind = ClassKind::decomposition_curve;
  c.label = k;
  c.id = decomposition_.interior_labels.at(k);
  if (marking_ == Marking::one_holed_torus) {
    c.slope = Slope{1, 0};
    c.word = Word{1};
  }
  return c;
}

HomotopyClass Surface::word_curve(const Slope& s) const {
  if (marking_ != Marking::one_holed_torus)
    throw UnsupportedError("word classes are registered on the one-holed torus only");
  if (s == Slope{1, 0}) return decomposition_curve(0);
  HomotopyClass c;
  c.kind = ClassKind::word_curve;
  c.slope = s;
  c.word = torus_basis(s).first;
  c.id = "c" + slope_suffix(s);
  return c;
}

HomotopyClass Surface::word_arc(const Slope& s) const {
  if (marking_ != Marking::one_holed_torus)
    throw UnsupportedError("word classes are registered on the one-holed torus only");
  if (s == Slope{1, 0}) return arcs_.front();
  HomotopyClass c;
  c.kind = ClassKind::word_arc;
  c.slope = s;
  c.word = torus_basis(s).first;
  c.id = "a" + slope_suffix(s);
  return c;
}

HomotopyClass Surface::find(std::string_view id) const {
  const auto& d = decomposition_;
  for (std::size_t j = 0; j < d.boundary_labels.size(); ++j)
    if (d.boundary_labels[j] == id) return boundary(static_cast<int>(j));
  for (std::size_t k = 0; k < d.interior_labels.size(); ++k)
    if (d.interior_labels[k] == id) return decomposition_curve(static_cast<int>(k));
  for (const auto& a : arcs_)
    if (a.id == id) return a;
  if (id.size() > 1 && (id[0] == 'c' || id[0] == 'a')) {
    if (auto s = parse_slope(id.substr(1))) {
      if (marking_ != Marking::one_holed_torus)
        throw UnsupportedError("word class '" + std::string(id) + "' needs the one-holed torus");
      return id[0] == 'c' ? word_curve(*s) : word_arc(*s);
    }
  }
  throw UnsupportedError("unknown class id '" + std::string(id) + "'");
}

std::optional<Slope> Surface::slope_of(const HomotopyClass& c) const {
  if (marking_ != Marking::one_holed_torus || c.kind == ClassKind::boundary_curve)
    return std::nullopt;
  return c.slope;
}

Panel Surface::panel(int complexity) const {
  if (complexity < 0) throw DomainError("panel complexity must be >= 0");
  Panel p;
  p.complexity = complexity;
  for (int j = 0; j < signature_.boundaries; ++j) p.entries.push_back(boundary(j));
  for (int k = 0; k < signature_.interior_curve_count(); ++k)
    p.entries.push_back(decomposition_curve(k));
  p.entries.insert(p.entries.end(), arcs_.begin(), arcs_.end());
  if (marking_ != Marking::one_holed_torus) return p;

  std::vector<Slope> slopes;
  for (int a = 0; a <= complexity; ++a)
    for (int b = -complexity; b <= complexity; ++b) {
      if (a + std::abs(b) > complexity || std::gcd(a, b) != 1) continue;
      const Slope s = Slope::normalized(a, b);
      if (s == Slope{1, 0} || s.p != a || s.q != b) continue;
      slopes.push_back(s);
    }
  std::sort(slopes.begin(), slopes.end(), [](const Slope& l, const Slope& r) {
    return std::tuple(l.complexity(), l.p, l.q) < std::tuple(r.complexity(), r.p, r.q);
  });
  for (const Slope& s : slopes) {
    p.entries.push_back(word_curve(s));
    p.entries.push_back(word_arc(s));
  }
  return p;
}

DoubledTopology double_topology(const Surface& s) {
  const auto& sig = s.signature();
  const auto& d = s.decomposition();
  DoubledTopology out;
  out.signature = {2 * sig.genus + sig.boundaries - 1, 2 * sig.punctures, 0};
  const int k = sig.interior_curve_count();
  const int p = sig.boundaries;
  out.base_interior = k;
  out.base_boundaries = p;

  auto& dd = out.decomposition;
  dd.interior_labels = d.interior_labels;
  dd.interior_labels.insert(dd.interior_labels.end(), d.boundary_labels.begin(),
                            d.boundary_labels.end());
  for (const auto& l : d.interior_labels) dd.interior_labels.push_back(l + "bar");
  dd.puncture_labels = d.puncture_labels;
  for (const auto& l : d.puncture_labels) dd.puncture_labels.push_back(l + "bar");

  auto lift = [&](Side side, bool lower) -> Side {
    switch (side.kind) {
      case SideKind::interior: return {SideKind::interior, lower ? k + p + side.index : side.index};
      case SideKind::boundary: return {SideKind::interior, k + side.index};
      case SideKind::puncture:
        return {SideKind::puncture, lower ? sig.punctures + side.index : side.index};
    }
    throw std::logic_error("unreachable side kind");
  };
  for (bool lower : {false, true})
    for (const Pants& pa : d.pants)
      dd.pants.push_back({{lift(pa.sides[0], lower), lift(pa.sides[1], lower),
                           lift(pa.sides[2], lower)}});
  dd.validate();

  out.mirror.resize(2 * k + p);
  for (int i = 0; i < k; ++i) {
    out.mirror[i] = k + p + i;
    out.mirror[k + p + i] = i;
  }
  for (int j = 0; j < p; ++j) out.mirror[k + j] = k + j;
  return out;
}

}  // namespace arcmetric
