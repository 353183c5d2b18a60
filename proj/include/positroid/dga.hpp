#ifndef POSITROID_DGA_HPP
#define POSITROID_DGA_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "positroid/braid.hpp"
#include "positroid/braid_matrix.hpp"
#include "positroid/poly.hpp"

namespace positroid {

// A braid word whose crossings carry their global z-/w-labels: the j-th
// positive crossing is z_j, the k-th negative crossing w_k, left to right.
struct LabeledCrossing {
  int index = 1;
  bool positive = true;
  int label = 1;  // z-number if positive, w-number if negative
};

struct LabeledWord {
  int strands = 1;
  std::vector<LabeledCrossing> crossings;

  static LabeledWord from_braid(const BraidWord& w);
  BraidWord word() const;
  std::size_t length() const { return crossings.size(); }
  int position_of_z(int j) const;  // 1-based position
  int position_of_w(int k) const;
};

// beta(x, y): subword strictly between two crossing positions.
LabeledWord between_word(const LabeledWord& beta, int pos_a, int pos_b);
// beta^c(x, y): cyclic complement, read from right of the rightmost crossing
// around to left of the leftmost.
LabeledWord complement_word(const LabeledWord& beta, int pos_a, int pos_b);
// Opposite word with indices flipped i -> n-i; labels preserved.
LabeledWord dotted(const LabeledWord& w);

// A matrix path decorated with its gap levels and jump positions.
struct DecoratedPath {
  std::vector<int> gaps;        // length L+1 strand levels
  std::vector<bool> jump;       // length L, true where the path corners
  Monomial monomial;            // product of z-labels at jumps
};

std::vector<DecoratedPath> enumerate_paths(const LabeledWord& w, int from, int to);

enum class RegionMode { Z, Sh };

// Local rules of the immersed-region predicate. The pinch flags govern
// whether both boundary arcs may pass through a crossing of the given sign
// while the fiber inverts in the given direction; twisted pairs connect the
// transposed cap entries and enter with twisted_sign.
struct RegionRules {
  bool pinch_pos_down = false;  // positive crossing, upper drops below lower
  bool pinch_pos_up = false;    // positive crossing, inverted pair restores
  bool pinch_neg_down = true;
  bool pinch_neg_up = true;
  int twisted_sign = 1;
  bool corners_need_positive_state = true;
};
RegionRules& region_rules();

// The coefficient E(B(eta); i1u, i1l, i2u, i2l): sum of monomial products over
// path pairs bounding an immersed oriented region. The predicate lives here,
// isolated; see is_immersed_pair.
Polynomial region_coefficient(const LabeledWord& eta, int i1u, int i1l, int i2u, int i2l,
                              RegionMode mode = RegionMode::Z);
// Abbreviation E(B(eta); i1, i2) with adjacent cap strands.
Polynomial region_coefficient(const LabeledWord& eta, int i1, int i2);

// The fiber test on a lower/upper boundary pair (upper already converted to
// the eta frame): widths never vanish, inversions only across shared
// negative crossings, corners only in non-inverted state, one corner per
// crossing.
bool is_immersed_pair(const LabeledWord& eta, const DecoratedPath& lower,
                      const DecoratedPath& upper);

struct YGen {
  int l = 1, m = 1;
  friend auto operator<=>(const YGen&, const YGen&) = default;
};

// Element of the free graded-commutative algebra on y (deg 1), z (deg 0),
// w (deg -1) over Z[t^+-]: coefficients are polynomials in z and t.
class DgaElement {
 public:
  using Key = std::pair<std::vector<YGen>, std::vector<int>>;  // sorted y's, sorted w's

  DgaElement() = default;
  static DgaElement from_poly(const Polynomial& p);
  static DgaElement y(int l, int m);
  static DgaElement w(int k);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, Polynomial>& terms() const { return terms_; }
  Polynomial poly_part() const;  // coefficient of the empty odd part
  Polynomial w_coefficient(int k) const;  // coefficient of plain w_k

  DgaElement operator-() const;
  DgaElement& operator+=(const DgaElement& o);
  friend DgaElement operator+(DgaElement a, const DgaElement& b) { return a += b; }
  friend DgaElement operator-(DgaElement a, const DgaElement& b) { return a += -b; }
  friend DgaElement operator*(const DgaElement& a, const DgaElement& b);
  bool operator==(const DgaElement& o) const { return terms_ == o.terms_; }

  void add(const Key& key, const Polynomial& c);

 private:
  std::map<Key, Polynomial> terms_;
};

struct DGAlgebraPresentation {
  LabeledWord beta;  // eta * Delta_n
  int negatives = 0;
  int positives = 0;
  std::map<std::pair<int, int>, DgaElement> dy;  // (l,m) -> differential
  std::vector<DgaElement> dz;                    // index j-1
  bool sh_vanishes = true;

  const DgaElement& dz_of(int j) const { return dz[j - 1]; }
};

// Sum over k of Sh(y_lm; w_k) w_k.
DgaElement sha_terms(const LabeledWord& beta, int l, int m);

// Full DG-algebra of A(eta * Delta_n). If set_t is given, ground variables
// are specialized to +-1 with product -1 on each closure component.
DGAlgebraPresentation build_dga(const BraidWord& eta, bool set_t = false);

// d^2 = 0 on every generator.
bool differential_squares_to_zero(const DGAlgebraPresentation& p);
DgaElement differentiate(const DGAlgebraPresentation& p, const DgaElement& e);

struct DerivationSet {
  std::vector<Variable> zs;                    // ambient z-variables of X(eta)
  std::vector<std::vector<Polynomial>> coeff;  // coeff[k-1][j-1] = c_{jk}
};

DerivationSet derivations(const BraidWord& eta);

struct SliceElimination {
  VarietyPresentation quotient;
  std::vector<std::pair<Variable, int>> slices;  // (z chosen for w_k, k)
};

// Iterated slice elimination of the braid pair (X(eta), V(eta)); requires a
// unit-coefficient slice for each w_k, else throws.
SliceElimination slice_eliminate(const BraidWord& eta, bool set_t = false);

// t-specialization per closure component: all +1 except the least strand of
// each component, which gets -1.
std::map<Variable, Polynomial> footnote_signs(const BraidWord& beta_full);

}  // namespace positroid

#endif
