#ifndef POSITROID_VARIETIES_HPP
#define POSITROID_VARIETIES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "positroid/braid_matrix.hpp"
#include "positroid/positroid_data.hpp"

namespace positroid {

struct CountReport {
  std::string label;
  std::uint64_t q = 2;
  std::uint64_t count = 0;
  std::string method;  // "brute" or "product-split"
};

struct CountOptions {
  std::uint64_t assignment_cap = 100'000'000;  // abort above this many points
  bool product_split = true;
};

// Exact count of F_q points by exhaustive evaluation; T-variables range over
// nonzero values unless already specialized away.
CountReport count_points(const VarietyPresentation& v, std::uint64_t q,
                         const CountOptions& opts = {});

// Brute-force count of complete flags in F_q^n lying in the open Richardson
// variety R^w_u (Schubert cell of w intersected with opposite cell of u).
std::uint64_t richardson_oracle(const Permutation& u, const Permutation& w, std::uint64_t q);

struct PositroidCountReport {
  std::uint64_t lhs = 0;     // |X(beta(w) beta(u^{-1} w0); w0)(F_q)|
  std::uint64_t juggling = 0; // |X(J_k(f); w0k)(F_q)|
  std::uint64_t rhs = 0;     // juggling * (q-1)^{n-s-k}
  bool equal = false;
};
PositroidCountReport positroid_count_check(const PositroidPair& p, std::uint64_t q,
                                           const CountOptions& opts = {});

struct BrickStratum {
  std::vector<int> positions;  // subset I, 1-based
  int dim = 0;
  std::uint64_t count = 0;
};

struct BrickStratification {
  BraidWord beta;
  Permutation demazure;
  std::vector<BrickStratum> strata;  // includes the full index set
};

BrickStratification brick_stratify(const BraidWord& beta);
std::uint64_t brick_count(const BraidWord& beta, std::uint64_t q, const CountOptions& opts = {});

// beta * mu with mu a reduced word for delta(beta)^{-1} w_0.
BraidWord enlarge_to_w0(const BraidWord& beta);

struct MarkovCountReport {
  std::uint64_t base = 0;      // |X(eta Delta_n; w0)(F_q)|
  std::uint64_t stabilized = 0;
  std::uint64_t disjoint = 0;
  bool stab_ratio_ok = false;  // stabilized == base*(q-1)
  bool disjoint_ok = false;    // disjoint == base
};
MarkovCountReport markov_count_check(const BraidWord& eta, std::uint64_t q,
                                     const CountOptions& opts = {});

// Specializes T-variables by the per-component sign rule and counts.
std::uint64_t count_braid_pair_points(const BraidWord& eta, std::uint64_t q,
                                      const CountOptions& opts = {});
std::uint64_t count_presentation_with_signs(VarietyPresentation v, const BraidWord& beta_full,
                                            std::uint64_t q, const CountOptions& opts = {});

}  // namespace positroid

#endif
