#include "positroid/braid.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace positroid {

BraidWord::BraidWord(int n, std::vector<Letter> ls) : strands(n), letters(std::move(ls)) {
  if (n < 1) throw std::invalid_argument("braid needs at least one strand");
  for (const auto& l : letters)
    if (l.index < 1 || l.index >= n)
      throw std::invalid_argument("letter index " + std::to_string(l.index) +
                                  " out of range for " + std::to_string(n) + " strands");
}

bool BraidWord::is_positive() const {
  return std::all_of(letters.begin(), letters.end(), [](const Letter& l) { return l.positive; });
}

int BraidWord::writhe() const {
  int w = 0;
  for (const auto& l : letters) w += l.positive ? 1 : -1;
  return w;
}

BraidWord BraidWord::inverse() const {
  std::vector<Letter> ls(letters.rbegin(), letters.rend());
  for (auto& l : ls) l.positive = !l.positive;
  return BraidWord(strands, std::move(ls));
}

BraidWord BraidWord::concat(const BraidWord& o) const {
  if (strands != o.strands) throw std::invalid_argument("strand count mismatch in concat");
  std::vector<Letter> ls = letters;
  ls.insert(ls.end(), o.letters.begin(), o.letters.end());
  return BraidWord(strands, std::move(ls));
}

BraidWord BraidWord::opposite() const {
  std::vector<Letter> ls(letters.rbegin(), letters.rend());
  return BraidWord(strands, std::move(ls));
}

Permutation::Permutation(std::vector<int> one_line) : img_(std::move(one_line)) {
  int n = static_cast<int>(img_.size());
  if (n == 0) throw std::invalid_argument("empty permutation");
  std::vector<bool> seen(n + 1, false);
  for (int v : img_) {
    if (v < 1 || v > n || seen[v]) throw std::invalid_argument("not a permutation of 1..n");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::longest(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n - i;
  return Permutation(std::move(v));
}

Permutation Permutation::transposition(int n, int i) {
  if (i < 1 || i >= n) throw std::invalid_argument("bad transposition index");
  Permutation p = identity(n);
  std::swap(p.img_[i - 1], p.img_[i]);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(img_.size());
  for (int i = 1; i <= size(); ++i) inv[img_[i - 1] - 1] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& o) const {
  if (size() != o.size()) throw std::invalid_argument("size mismatch in compose");
  std::vector<int> v(img_.size());
  for (int i = 1; i <= size(); ++i) v[i - 1] = (*this)(o(i));
  return Permutation(std::move(v));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

int Permutation::length() const {
  int inv = 0;
  for (int i = 1; i <= size(); ++i)
    for (int j = i + 1; j <= size(); ++j)
      if ((*this)(i) > (*this)(j)) ++inv;
  return inv;
}

std::vector<int> Permutation::left_descents() const {
  // i with l(s_i w) < l(w), i.e. i appears after i+1 in the one-line word.
  std::vector<int> pos(size() + 1);
  for (int i = 1; i <= size(); ++i) pos[img_[i - 1]] = i;
  std::vector<int> ds;
  for (int i = 1; i < size(); ++i)
    if (pos[i] > pos[i + 1]) ds.push_back(i);
  return ds;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < size(); ++i) os << (i ? "," : "") << img_[i];
  os << "]";
  return os.str();
}

Permutation Permutation::parse(const std::string& text) {
  std::vector<int> vals;
  std::size_t i = 0;
  auto skip = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  skip();
  if (i >= text.size() || text[i] != '[') throw std::invalid_argument("permutation must start with [");
  ++i;
  for (;;) {
    skip();
    if (i < text.size() && text[i] == ']') { ++i; break; }
    int v = 0;
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("digit expected in permutation");
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      v = v * 10 + (text[i++] - '0');
    vals.push_back(v);
    skip();
    if (i < text.size() && text[i] == ',') ++i;
  }
  skip();
  if (i != text.size()) throw std::invalid_argument("trailing input after permutation");
  return Permutation(std::move(vals));
}

AffinePermutation::AffinePermutation(int n, std::vector<long> window)
    : n_(n), window_(std::move(window)) {
  if (n < 1 || static_cast<int>(window_.size()) != n)
    throw std::invalid_argument("affine permutation window must have length n");
  std::vector<bool> seen(n, false);
  for (long v : window_) {
    long r = ((v - 1) % n + n) % n;
    if (seen[r]) throw std::invalid_argument("window values not distinct mod n");
    seen[r] = true;
  }
}

long AffinePermutation::operator()(long i) const {
  long r = ((i - 1) % n_ + n_) % n_;       // 0-based residue
  long shift = (i - 1 - r) / n_;
  return window_[r] + shift * n_;
}

long AffinePermutation::preimage(long j) const {
  for (int r = 0; r < n_; ++r) {
    long diff = j - window_[r];
    if (diff % n_ == 0) return (r + 1) + diff;
  }
  throw std::logic_error("affine permutation preimage not found");
}

int AffinePermutation::k() const {
  long total = 0;
  for (int i = 1; i <= n_; ++i) total += window_[i - 1] - i;
  if (total % n_ != 0) throw std::domain_error("shift sum not divisible by n");
  return static_cast<int>(total / n_);
}

std::optional<std::string> AffinePermutation::bounded_violation() const {
  for (int i = 1; i <= n_; ++i) {
    if (window_[i - 1] < i)
      return "i <= f(i) fails at i=" + std::to_string(i);
    if (window_[i - 1] > i + n_)
      return "f(i) <= i+n fails at i=" + std::to_string(i);
  }
  long total = 0;
  for (int i = 1; i <= n_; ++i) total += window_[i - 1] - i;
  if (total % n_ != 0)
    return "sum of f(i)-i is not a multiple of n";
  return std::nullopt;
}

std::string AffinePermutation::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < n_; ++i) os << (i ? "," : "") << window_[i];
  os << "]";
  return os.str();
}

AffinePermutation AffinePermutation::parse(const std::string& text) {
  // Accept "[a,b,...]" or "k=<int> f=[a,b,...]" (k is recomputed anyway).
  std::string body = text;
  auto fpos = text.find("f=");
  if (fpos != std::string::npos) body = text.substr(fpos + 2);
  std::vector<long> vals;
  std::size_t i = 0;
  auto skip = [&] { while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i; };
  skip();
  if (i >= body.size() || body[i] != '[') throw std::invalid_argument("window must start with [");
  ++i;
  for (;;) {
    skip();
    if (i < body.size() && body[i] == ']') { ++i; break; }
    long v = 0;
    bool neg = false;
    if (i < body.size() && body[i] == '-') { neg = true; ++i; }
    if (i >= body.size() || !std::isdigit(static_cast<unsigned char>(body[i])))
      throw std::invalid_argument("digit expected in window");
    while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i])))
      v = v * 10 + (body[i++] - '0');
    vals.push_back(neg ? -v : v);
    skip();
    if (i < body.size() && body[i] == ',') ++i;
  }
  int n = static_cast<int>(vals.size());
  return AffinePermutation(n, std::move(vals));
}

BraidWord parse_braid(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("braid text needs 'n=<int>:' header");
  std::string head = text.substr(0, colon);
  auto eq = head.find('=');
  if (eq == std::string::npos || head.find('n') == std::string::npos)
    throw std::invalid_argument("braid text needs 'n=<int>:' header");
  int n = std::stoi(head.substr(eq + 1));
  std::istringstream body(text.substr(colon + 1));
  std::vector<Letter> letters;
  std::string tok;
  while (body >> tok) {
    if (tok.size() < 2 || tok[0] != 's')
      throw std::invalid_argument("bad braid token '" + tok + "'");
    bool positive = true;
    std::string idx = tok.substr(1);
    auto caret = idx.find('^');
    if (caret != std::string::npos) {
      std::string e = idx.substr(caret + 1);
      if (e != "-1") throw std::invalid_argument("bad exponent in token '" + tok + "'");
      positive = false;
      idx = idx.substr(0, caret);
    }
    for (char c : idx)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("bad braid token '" + tok + "'");
    int i = std::stoi(idx);
    if (i < 1 || i >= n)
      throw std::invalid_argument("index " + std::to_string(i) + " out of range for n=" +
                                  std::to_string(n));
    letters.push_back(Letter{i, positive});
  }
  return BraidWord(n, std::move(letters));
}

std::string render_braid(const BraidWord& w) {
  std::ostringstream os;
  os << "n=" << w.strands << ":";
  for (const auto& l : w.letters) {
    os << " s" << l.index;
    if (!l.positive) os << "^-1";
  }
  return os.str();
}

BraidWord half_twist(int n) {
  std::vector<Letter> ls;
  for (int row = 1; row < n; ++row)
    for (int i = row; i >= 1; --i) ls.push_back(Letter{i, true});
  return BraidWord(n, std::move(ls));
}

BraidWord interval_word(int a, int b, int n) {
  if (!(1 <= a && a <= b && b < n)) throw std::invalid_argument("bad interval [a,b]");
  std::vector<Letter> ls;
  for (int i = b; i >= a; --i) ls.push_back(Letter{i, true});
  return BraidWord(n, std::move(ls));
}

Permutation coxeter_projection(const BraidWord& w) {
  Permutation p = Permutation::identity(w.strands);
  for (const auto& l : w.letters) p = p.compose(Permutation::transposition(w.strands, l.index));
  return p;
}

namespace {

BraidWord lift_lex_least(const Permutation& w) {
  int n = w.size();
  Permutation cur = w;
  std::vector<Letter> ls;
  while (!cur.is_identity()) {
    auto ds = cur.left_descents();
    int i = ds.front();  // smallest left descent
    ls.push_back(Letter{i, true});
    cur = Permutation::transposition(n, i).compose(cur);
  }
  return BraidWord(n, std::move(ls));
}

}  // namespace

bool is_k_grassmannian(const Permutation& w, int k) {
  int n = w.size();
  if (k < 0 || k > n) return false;
  Permutation wi = w.inverse();
  for (int i = 1; i < k; ++i)
    if (wi(i) >= wi(i + 1)) return false;
  for (int i = k + 1; i < n; ++i)
    if (wi(i) >= wi(i + 1)) return false;
  return true;
}

std::vector<int> grassmannian_partition(const Permutation& w, int k) {
  if (!is_k_grassmannian(w, k))
    throw std::invalid_argument("permutation is not k-Grassmannian");
  int n = w.size();
  // w^{-1} = [1+lambda_k, 2+lambda_{k-1}, ..., k+lambda_1, ...].
  Permutation wi = w.inverse();
  std::vector<int> lambda(k, 0);
  for (int i = 1; i <= k; ++i) {
    int part = wi(i) - i;
    if (part < 0 || part > n - k) throw std::logic_error("partition entry out of box");
    lambda[k - i] = part;
  }
  for (int i = 0; i + 1 < k; ++i)
    if (lambda[i] < lambda[i + 1]) throw std::logic_error("partition not weakly decreasing");
  while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
  return lambda;
}

Permutation grassmannian_from_partition(const std::vector<int>& lambda, int k, int n) {
  std::vector<int> lam = lambda;
  lam.resize(k, 0);
  for (int i = 0; i + 1 < static_cast<int>(lam.size()); ++i)
    if (lam[i] < lam[i + 1]) throw std::invalid_argument("partition not weakly decreasing");
  if (!lam.empty() && lam[0] > n - k) throw std::invalid_argument("partition exceeds box");
  std::vector<int> winv(n);
  for (int i = 1; i <= k; ++i) winv[i - 1] = i + lam[k - i];
  auto lt = transpose_partition(lam);
  lt.resize(n - k, 0);
  for (int j = 1; j <= n - k; ++j) winv[k + j - 1] = k + j - lt[j - 1];
  return Permutation(std::move(winv)).inverse();
}

std::vector<int> transpose_partition(const std::vector<int>& lambda) {
  std::vector<int> t;
  if (lambda.empty()) return t;
  t.resize(lambda[0], 0);
  for (int col = 1; col <= lambda[0]; ++col)
    for (int part : lambda)
      if (part >= col) ++t[col - 1];
  return t;
}

BraidWord positive_lift(const Permutation& w, LiftStrategy strategy) {
  int n = w.size();
  if (strategy == LiftStrategy::LexLeast) return lift_lex_least(w);
  // Row/column reading of the filled Young diagram; requires Grassmannian w.
  if (w.is_identity()) return BraidWord::identity(n);
  Permutation wi = w.inverse();
  int k = 0;
  for (int i = 1; i < n; ++i) {
    if (wi(i) > wi(i + 1)) {
      if (k != 0)
        throw std::invalid_argument("row/column reading requires a Grassmannian permutation");
      k = i;
    }
  }
  if (!is_k_grassmannian(w, k))
    throw std::invalid_argument("row/column reading requires a Grassmannian permutation");
  auto lambda = grassmannian_partition(w, k);
  std::vector<Letter> ls;
  if (strategy == LiftStrategy::RowReading) {
    // (s_k s_{k+1} ... s_{k+lambda_1-1})(s_{k-1} ... s_{k+lambda_2-2})...
    for (std::size_t r = 0; r < lambda.size(); ++r) {
      int start = k - static_cast<int>(r);
      for (int j = 0; j < lambda[r]; ++j) ls.push_back(Letter{start + j, true});
    }
  } else {
    // (s_k s_{k-1} ... s_{k+1-lt_1})(s_{k+1} ... s_{k+2-lt_2})...
    auto lt = transpose_partition(lambda);
    for (std::size_t c = 0; c < lt.size(); ++c) {
      int start = k + static_cast<int>(c);
      for (int j = 0; j < lt[c]; ++j) ls.push_back(Letter{start - j, true});
    }
  }
  return BraidWord(n, std::move(ls));
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
  if (u.size() != w.size()) throw std::invalid_argument("size mismatch in bruhat_leq");
  int n = u.size();
  // Rank criterion: u <= w iff #{i<=p : u(i)<=q} >= #{i<=p : w(i)<=q} for all p,q.
  for (int p = 1; p <= n; ++p) {
    for (int q = 1; q <= n; ++q) {
      int cu = 0, cw = 0;
      for (int i = 1; i <= p; ++i) {
        if (u(i) <= q) ++cu;
        if (w(i) <= q) ++cw;
      }
      if (cu < cw) return false;
    }
  }
  return true;
}

bool bruhat_leq_bruteforce(const Permutation& u, const Permutation& w) {
  // Subword criterion on one reduced word of w.
  BraidWord bw = positive_lift(w, LiftStrategy::LexLeast);
  int n = w.size();
  std::size_t m = bw.length();
  int lu = u.length();
  // Scan subwords via DFS keeping the partial product reduced.
  std::vector<Permutation> stack = {Permutation::identity(n)};
  std::vector<std::size_t> at = {0};
  std::vector<int> len = {0};
  while (!stack.empty()) {
    Permutation cur = stack.back(); stack.pop_back();
    std::size_t pos = at.back(); at.pop_back();
    int l = len.back(); len.pop_back();
    if (l == lu && cur == u) return true;
    if (pos == m || l >= lu) continue;
    // skip letter
    stack.push_back(cur); at.push_back(pos + 1); len.push_back(l);
    // take letter if it lengthens
    Permutation next = cur.compose(Permutation::transposition(n, bw.letters[pos].index));
    if (next.length() == l + 1) {
      stack.push_back(next); at.push_back(pos + 1); len.push_back(l + 1);
    }
  }
  return false;
}

Permutation demazure_product(const BraidWord& w) {
  if (!w.is_positive()) throw std::invalid_argument("demazure_product needs a positive word");
  Permutation p = Permutation::identity(w.strands);
  for (const auto& l : w.letters) {
    Permutation next = p.compose(Permutation::transposition(w.strands, l.index));
    if (next.length() > p.length()) p = next;
  }
  return p;
}

std::vector<int> jump_set(const BraidWord& beta) {
  if (!beta.is_positive()) throw std::invalid_argument("jump_set needs a positive word");
  int n = beta.strands;
  if (!(demazure_product(beta) == Permutation::longest(n)))
    throw std::invalid_argument("jump_set requires Demazure product w_0");
  // Rightmost reduced w_0 subword, greedily from the right.
  Permutation v = Permutation::longest(n);
  std::vector<bool> selected(beta.length(), false);
  for (int j = static_cast<int>(beta.length()) - 1; j >= 0; --j) {
    int i = beta.letters[j].index;
    Permutation next = v.compose(Permutation::transposition(n, i));
    if (next.length() < v.length()) {
      selected[j] = true;
      v = next;
    }
  }
  if (!v.is_identity()) throw std::logic_error("rightmost w_0 subword extraction failed");
  std::vector<int> jumps;
  for (std::size_t j = 0; j < beta.length(); ++j)
    if (!selected[j]) jumps.push_back(static_cast<int>(j) + 1);
  return jumps;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace positroid
