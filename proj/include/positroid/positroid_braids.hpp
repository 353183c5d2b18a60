#ifndef POSITROID_POSITROID_BRAIDS_HPP
#define POSITROID_POSITROID_BRAIDS_HPP

#include <utility>
#include <vector>

#include "positroid/positroid_data.hpp"

namespace positroid {

// R_n(u,w) = beta(w) * beta(u)^{-1}. Grassmannian w is lifted by column
// reading (the reading the Le diagram and the worked examples use);
// u by its lexicographically least reduced word.
BraidWord richardson_braid(const PositroidPair& p,
                           LiftStrategy w_strategy = LiftStrategy::ColumnReading);

// Juggling braid J_k(f) read off the arc diagram: arcs (i, f(i)) for the
// non-fixed window points, crossings of interleaved arcs ordered by
// decreasing x-coordinate, positions counted from the top.
BraidWord juggling_braid_diagram(const AffinePermutation& f);

// The two recursive interval-prepending procedures.
BraidWord juggling_braid_algorithm(const AffinePermutation& f);   // J_k(f)
BraidWord juggling_braid_delta(const AffinePermutation& f);       // word for J_k(f)*Delta_k

// State for the braid-group action route: pairs (a_i, b_i) labeled by a
// left (n-k)-Grassmannian permutation.
struct ActionState {
  int n = 1;
  int k = 1;          // Grassmannian parameter of the LABELS (n-k for juggling use)
  std::vector<std::pair<int, int>> ab;   // (a_i, b_i), i = 1..n
  std::vector<int> labels;               // the permutation w(1..n)

  bool label_is_grassmannian() const;
};

ActionState initial_state(const std::vector<int>& lambda, int k, int n);  // x_lambda
ActionState apply_action(const ActionState& s, int i);                    // sigma_i . s

struct JugglingFactors {
  int k = 1;
  std::vector<std::pair<int, int>> intervals;  // (a_i, b_i), i = 1..n; word is
                                               // sigma_[a_n,b_n] ... sigma_[a_1,b_1]
  BraidWord word() const;
};

// J_k(u, w) via the braid-group action applied to x_lambda.
JugglingFactors juggling_braid_action_factors(const PositroidPair& p);
BraidWord juggling_braid_action(const PositroidPair& p);

struct JugglingDecomposition {
  BraidWord j;        // J = j2 * j1 as words
  BraidWord j1;       // first n-k interval factors (rightmost in the word)
  BraidWord j2;       // last k interval factors (leftmost in the word)
  std::size_t split;  // letters of j2, i.e. j = j2 . j1 splits after this many letters
};

JugglingDecomposition juggling_split(const JugglingFactors& factors, int n_minus_k);
// script J = J1 * Delta_k^{-1} * J2, conjugate to J * Delta_k^{-1}.
BraidWord script_j(const PositroidPair& p);

// M_k(r): positive word traced through the rank matrix grid, one letter per
// saddle corner, read by columns right to left and bottom to top.
BraidWord matrix_braid(const CyclicRankMatrix& r);

// Column tangle of a dot set delta(c) in [1,k] (row 1 = bottom), as a word.
BraidWord column_tangle(const std::vector<int>& dot_rows, int k);
// D_k(Le): column tangles concatenated right-to-left.
BraidWord le_braid(const LeDiagram& d);

// l(w) + C(k,2) - l(u) - (n-k) + s, s = #fixed points of f in [1,n].
int juggling_length(const PositroidPair& p);

// gamma = (s_{k-1}..s_{k-lambda_d}) ... (s_{k-1}..s_{k-lambda_1}), lambda_1 <= k-1.
BraidWord reverse_family(const std::vector<int>& lambda, int k);
// FT_2^{a_2} ... FT_k^{a_k} (s_{k-1}...s_1)^s with FT_i the full twist on the
// last i strands.
BraidWord twist_family(const std::vector<int>& a, int s, int k);

}  // namespace positroid

#endif
