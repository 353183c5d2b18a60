#ifndef POSITROID_POSITROID_DATA_HPP
#define POSITROID_POSITROID_DATA_HPP

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "positroid/braid.hpp"

namespace positroid {

// (u, w) with u <= w in Bruhat order and w k-Grassmannian.
struct PositroidPair {
  int n = 1;
  int k = 0;
  Permutation u;
  Permutation w;

  std::optional<std::string> violation() const;
};

// Partition-with-dots in French notation: row 1 is the bottom (longest) row,
// column 1 the leftmost. Cells are (row, col) with 1 <= col <= lambda[row-1].
struct LeDiagram {
  int k = 0;
  int n = 1;
  std::vector<int> lambda;                 // weakly decreasing, <= k parts, parts <= n-k
  std::set<std::pair<int, int>> dots;      // (row, col)

  bool has_dot(int row, int col) const { return dots.count({row, col}) > 0; }
  int columns() const { return lambda.empty() ? 0 : lambda[0]; }
  int rows() const { return static_cast<int>(lambda.size()); }
  int column_height(int col) const;
  std::vector<int> column_dot_rows(int col) const;  // bottom-up

  std::optional<std::string> violation() const;
  std::string to_ascii() const;  // '*' dot, '.' empty, top row first
  static LeDiagram from_ascii(int k, int n, const std::string& text);
};

// Periodic rank array stored on the fundamental window r_{ij}, i in [1,n],
// j in [i, i+n-1]; extended by r_{ij} = r_{(i+n)(j+n)}, 0 below, k above.
class CyclicRankMatrix {
 public:
  CyclicRankMatrix() = default;
  CyclicRankMatrix(int n, int k, std::vector<std::vector<int>> window);

  int n() const { return n_; }
  int k() const { return k_; }
  int at(long i, long j) const;

  std::optional<std::string> violation() const;
  bool operator==(const CyclicRankMatrix& o) const = default;

 private:
  int n_ = 1;
  int k_ = 0;
  std::vector<std::vector<int>> window_;  // window_[i-1][j-i] for j in [i, i+n-1]
};

// --- KLS bijections --------------------------------------------------------

AffinePermutation translation_element(int k, int n);  // t_k
AffinePermutation pair_to_affine(const PositroidPair& p);
PositroidPair affine_to_pair(const AffinePermutation& f);

CyclicRankMatrix affine_to_rank(const AffinePermutation& f);
AffinePermutation rank_to_affine(const CyclicRankMatrix& r);

LeDiagram pair_to_le(const PositroidPair& p);
PositroidPair le_to_pair(const LeDiagram& d);

// Leftmost reduced subexpression of u inside the column-reading word of w;
// returns the selected 1-based positions. Empty optional if u is not <= w.
std::optional<std::vector<int>> leftmost_subexpression(const Permutation& u, const BraidWord& word);
// Rightmost variant (used by the Markov reduction).
std::optional<std::vector<int>> rightmost_subexpression(const Permutation& u, const BraidWord& word);

enum class LeCase { EmptyColumn, EmptyRow, TopAdjustedLastColumn, Empty };
struct LeInductiveCase {
  LeCase kind = LeCase::Empty;
  int index = 0;  // column or row for the first two kinds
};
LeInductiveCase le_inductive_case(const LeDiagram& d);

// Enumeration helpers for test suites.
std::vector<PositroidPair> all_positroid_pairs(int k, int n);
std::vector<PositroidPair> all_positroid_pairs(int n);

}  // namespace positroid

#endif
