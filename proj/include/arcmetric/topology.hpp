#pragma once

#include <array>
#include <compare>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace arcmetric {

struct SurfaceSignature {
  int genus = 0;
  int punctures = 0;
  int boundaries = 0;

  int euler_characteristic() const { return 2 - 2 * genus - punctures - boundaries; }
  int pants_count() const { return 2 * genus - 2 + punctures + boundaries; }
  int interior_curve_count() const { return 3 * genus - 3 + punctures + boundaries; }

  bool operator==(const SurfaceSignature&) const = default;
};

enum class SideKind { interior, boundary, puncture };

struct Side {
  SideKind kind = SideKind::interior;
  int index = 0;

  auto operator<=>(const Side&) const = default;
};

struct Pants {
  std::array<Side, 3> sides;
};

/// Adjacency data: every interior curve sits on two pants sides (possibly of
/// the same pants), every boundary and puncture on exactly one.
struct PantsDecomposition {
  std::vector<std::string> interior_labels;
  std::vector<std::string> boundary_labels;
  std::vector<std::string> puncture_labels;
  std::vector<Pants> pants;

  const std::string& label(Side s) const;
  /// Pants containing boundary j, with the side slot it occupies.
  std::pair<int, int> boundary_slot(int j) const;
  void validate() const;
};

/// Free-group word; letter k > 0 is generator k-1, -k its inverse.
using Word = std::vector<int>;

Word reduce(Word w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
Word cyclic_reduce(Word w);

/// Primitive homology class on the one-holed torus, up to sign.
/// Normalized so that p > 0, or p == 0 and q == 1.
struct Slope {
  int p = 1;
  int q = 0;

  static Slope normalized(int p, int q);
  int complexity() const { return std::abs(p) + std::abs(q); }
  auto operator<=>(const Slope&) const = default;
};

/// |det| of two slopes: the geometric intersection of the curves.
int slope_det(const Slope& a, const Slope& b);

/// Element u of <a,b> with slope s, extended to a basis (u,v) with
/// u v u^-1 v^-1 = a b a^-1 b^-1.
std::pair<Word, Word> torus_basis(const Slope& s);

enum class ClassKind { boundary_curve, decomposition_curve, word_curve, pants_arc, word_arc };

/// Homotopy class of an essential simple closed curve or essential arc.
///
/// Pants arcs carry their host pants and the side pattern
/// (beta, gamma1, gamma2) when same_boundary, else (beta1, beta2, gamma).
/// Word classes exist on the one-holed torus only and are keyed by slope;
/// the word arc of slope s is the arc disjoint from the curve of slope s.
struct HomotopyClass {
  ClassKind kind = ClassKind::boundary_curve;
  int label = -1;
  int host = -1;
  bool same_boundary = false;
  std::array<Side, 3> pattern{};
  Slope slope{};
  Word word;
  std::string id;

  bool is_arc() const { return kind == ClassKind::pants_arc || kind == ClassKind::word_arc; }
  bool is_curve() const { return !is_arc(); }
  bool operator==(const HomotopyClass& o) const { return id == o.id; }
};

struct Panel {
  std::vector<HomotopyClass> entries;
  int complexity = 0;

  std::size_t size() const { return entries.size(); }
  std::optional<std::size_t> index_of(std::string_view id) const;
};

enum class Marking { none, pants, one_holed_torus };

/// A bordered surface with its canonical pants decomposition.
class Surface {
 public:
  static Surface build(int genus, int punctures, int boundaries);
  static Surface build(const SurfaceSignature& s) {
    return build(s.genus, s.punctures, s.boundaries);
  }

  const SurfaceSignature& signature() const { return signature_; }
  const PantsDecomposition& decomposition() const { return decomposition_; }
  Marking marking() const { return marking_; }
  bool tier_one() const { return marking_ != Marking::none; }

  HomotopyClass boundary(int j) const;
  HomotopyClass decomposition_curve(int k) const;
  /// Pants-local arcs in panel order: same-boundary arcs, then distinct ones.
  const std::vector<HomotopyClass>& pants_arcs() const { return arcs_; }
  HomotopyClass word_curve(const Slope& s) const;
  HomotopyClass word_arc(const Slope& s) const;

  /// Resolves B1, C1, a12, a33, c(p,q), a(p,q) style identifiers.
  HomotopyClass find(std::string_view id) const;

  /// Slope of a class on the one-holed torus, if it has one.
  std::optional<Slope> slope_of(const HomotopyClass& c) const;

  Panel panel(int complexity) const;

 private:
  SurfaceSignature signature_;
  PantsDecomposition decomposition_;
  Marking marking_ = Marking::none;
  std::vector<HomotopyClass> arcs_;
};

/// The closed double with its symmetric decomposition C, B, Cbar.
struct DoubledTopology {
  SurfaceSignature signature;
  PantsDecomposition decomposition;
  /// mirror[k] is the interior curve index of the mirror image of curve k.
  std::vector<int> mirror;
  int base_interior = 0;
  int base_boundaries = 0;
};

DoubledTopology double_topology(const Surface& s);

}  // namespace arcmetric
