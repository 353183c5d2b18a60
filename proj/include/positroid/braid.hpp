#ifndef POSITROID_BRAID_HPP
#define POSITROID_BRAID_HPP

#include <optional>
#include <string>
#include <vector>

namespace positroid {

// One Artin letter sigma_index^(+-1).
struct Letter {
  int index = 1;
  bool positive = true;
  friend bool operator==(const Letter&, const Letter&) = default;
};

// A braid word on a fixed number of strands. Strand 1 is the first matrix
// row; sigma_i acts on strands (i, i+1).
struct BraidWord {
  int strands = 1;
  std::vector<Letter> letters;

  BraidWord() = default;
  BraidWord(int n, std::vector<Letter> ls);

  static BraidWord identity(int n) { return BraidWord(n, {}); }

  std::size_t length() const { return letters.size(); }
  bool is_positive() const;
  int writhe() const;
  BraidWord inverse() const;                 // reversed with signs flipped
  BraidWord concat(const BraidWord& o) const;
  BraidWord opposite() const;                // read right to left
  bool operator==(const BraidWord& o) const = default;
};

// Permutation of [1, n] in one-line notation.
class Permutation {
 public:
  Permutation() : img_{1} {}
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);
  static Permutation longest(int n);  // w_0
  static Permutation transposition(int n, int i);  // s_i

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i - 1]; }
  const std::vector<int>& one_line() const { return img_; }

  Permutation inverse() const;
  Permutation compose(const Permutation& o) const;  // (this o other)(i) = this(other(i))
  bool is_identity() const;
  int length() const;  // number of inversions
  std::vector<int> left_descents() const;

  bool operator==(const Permutation& o) const = default;
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

  std::string to_string() const;
  static Permutation parse(const std::string& text);

 private:
  std::vector<int> img_;
};

// k-bounded n-periodic bijection Z -> Z in window notation.
class AffinePermutation {
 public:
  AffinePermutation() = default;
  AffinePermutation(int n, std::vector<long> window);

  int period() const { return n_; }
  const std::vector<long>& window() const { return window_; }
  long operator()(long i) const;
  long preimage(long j) const;
  int k() const;  // average shift; requires validity

  // i <= f(i) <= i+n and sum of shifts = n*k for some integer k.
  std::optional<std::string> bounded_violation() const;
  bool is_bounded() const { return !bounded_violation().has_value(); }

  bool operator==(const AffinePermutation& o) const = default;
  std::string to_string() const;
  static AffinePermutation parse(const std::string& text);

 private:
  int n_ = 1;
  std::vector<long> window_{1};
};

// --- parsing / rendering -------------------------------------------------

// Grammar: header "n=<int>:" then whitespace-separated "s<k>" or "s<k>^-1".
BraidWord parse_braid(const std::string& text);
std::string render_braid(const BraidWord& w);

// --- Coxeter combinatorics ------------------------------------------------

// Delta_n = (s1)(s2 s1)...(s_{n-1}...s1), length n(n-1)/2.
BraidWord half_twist(int n);
// sigma_[a,b] = sigma_b ... sigma_a as a word on n strands (1 <= a <= b < n).
BraidWord interval_word(int a, int b, int n);

Permutation coxeter_projection(const BraidWord& w);

enum class LiftStrategy { RowReading, ColumnReading, LexLeast };
BraidWord positive_lift(const Permutation& w, LiftStrategy strategy = LiftStrategy::LexLeast);

bool bruhat_leq(const Permutation& u, const Permutation& w);
bool bruhat_leq_bruteforce(const Permutation& u, const Permutation& w);

bool is_k_grassmannian(const Permutation& w, int k);
// Partition of a k-Grassmannian permutation inside the k x (n-k) box.
std::vector<int> grassmannian_partition(const Permutation& w, int k);
Permutation grassmannian_from_partition(const std::vector<int>& lambda, int k, int n);
std::vector<int> transpose_partition(const std::vector<int>& lambda);

Permutation demazure_product(const BraidWord& w);

// Positions (1-based) of beta not in the rightmost reduced w_0 subword.
// Requires delta(beta) = w_0.
std::vector<int> jump_set(const BraidWord& beta);

std::vector<Permutation> all_permutations(int n);

}  // namespace positroid

#endif
