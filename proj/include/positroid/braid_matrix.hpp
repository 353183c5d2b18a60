#ifndef POSITROID_BRAID_MATRIX_HPP
#define POSITROID_BRAID_MATRIX_HPP

#include <string>
#include <vector>

#include "positroid/braid.hpp"
#include "positroid/poly.hpp"

namespace positroid {

// n x n matrix of polynomials; the product of generator matrices over a word.
class BraidMatrix {
 public:
  explicit BraidMatrix(int n);
  static BraidMatrix identity(int n);

  int size() const { return n_; }
  const Polynomial& at(int i, int j) const { return entries_[(i - 1) * n_ + (j - 1)]; }
  Polynomial& at(int i, int j) { return entries_[(i - 1) * n_ + (j - 1)]; }

  BraidMatrix operator*(const BraidMatrix& o) const;
  bool operator==(const BraidMatrix& o) const = default;

 private:
  int n_;
  std::vector<Polynomial> entries_;
};

// Identity outside the 2x2 block [[0,1],[1,z]] at rows/cols (i, i+1).
BraidMatrix generator_matrix(int i, const Polynomial& z, int n);

// Left-to-right product; the j-th positive crossing contributes B_i(z_j),
// negative crossings contribute B_i(0).
BraidMatrix word_matrix(const BraidWord& beta);

// A path from the left end of a strand to the right end of another, jumping
// at the recorded positive crossings.
struct Path {
  int start = 1;
  int end = 1;
  std::vector<int> jumps;  // 1-based letter positions
  bool operator==(const Path& o) const = default;
};

// One (path, monomial) pair per additive term of word_matrix(beta)[i][j].
std::vector<std::pair<Path, Polynomial>> paths_of_entry(const BraidWord& beta, int i, int j);

struct VarietyPresentation {
  std::vector<Variable> ambient;     // z-variables, in order
  std::vector<Polynomial> equations; // over Z[t^+-]
  std::string label;

  bool uses_ground_ring() const;
  std::string to_json() const;
};

// X(beta; pi): strictly-lower-triangular entries of B_beta(z) * pi vanish,
// where pi acts on the right as the matrix with pi_{pi(j), j} = 1.
VarietyPresentation variety_upper_triangular(const BraidWord& beta, const Permutation& pi);

// Braid pair variety X(eta) for beta := eta * Delta_n: every entry of
// B_beta + diag(t_1..t_n) vanishes. Caller asserts [eta] is a positive braid.
VarietyPresentation variety_braid_pair(const BraidWord& eta);

}  // namespace positroid

#endif
