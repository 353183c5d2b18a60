#include "positroid/positroid_data.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace positroid {

std::optional<std::string> PositroidPair::violation() const {
  if (u.size() != n || w.size() != n) return "permutation size differs from n";
  if (k < 0 || k > n) return "k out of range";
  if (!is_k_grassmannian(w, k)) return "w is not k-Grassmannian";
  if (!bruhat_leq(u, w)) return "u is not below w in Bruhat order";
  return std::nullopt;
}

int LeDiagram::column_height(int col) const {
  int h = 0;
  for (int part : lambda)
    if (part >= col) ++h;
  return h;
}

std::vector<int> LeDiagram::column_dot_rows(int col) const {
  std::vector<int> rows;
  for (int r = 1; r <= column_height(col); ++r)
    if (has_dot(r, col)) rows.push_back(r);
  return rows;
}

std::optional<std::string> LeDiagram::violation() const {
  if (static_cast<int>(lambda.size()) > k) return "partition has more than k parts";
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] <= 0) return "partition parts must be positive";
    if (lambda[i] > n - k) return "partition part exceeds n-k";
    if (i + 1 < lambda.size() && lambda[i] < lambda[i + 1])
      return "partition not weakly decreasing";
  }
  for (const auto& [r, c] : dots)
    if (r < 1 || r > rows() || c < 1 || c > lambda[r - 1]) return "dot outside the diagram";
  // Le condition: a cell with a dot strictly below it in its column and a
  // dot strictly to its left in its row must itself carry a dot.
  for (int r = 1; r <= rows(); ++r)
    for (int c = 1; c <= lambda[r - 1]; ++c) {
      if (has_dot(r, c)) continue;
      bool below = false, left = false;
      for (int rr = 1; rr < r && !below; ++rr) below = has_dot(rr, c);
      for (int cc = 1; cc < c && !left; ++cc) left = has_dot(r, cc);
      if (below && left)
        return "Le condition fails at cell (" + std::to_string(r) + "," + std::to_string(c) + ")";
    }
  return std::nullopt;
}

std::string LeDiagram::to_ascii() const {
  std::ostringstream os;
  for (int r = rows(); r >= 1; --r) {
    for (int c = 1; c <= lambda[r - 1]; ++c) os << (has_dot(r, c) ? '*' : '.');
    if (r > 1) os << "\n";
  }
  return os.str();
}

LeDiagram LeDiagram::from_ascii(int k, int n, const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line))
    if (!line.empty()) lines.push_back(line);
  LeDiagram d;
  d.k = k;
  d.n = n;
  int nrows = static_cast<int>(lines.size());
  d.lambda.resize(nrows);
  for (int r = 1; r <= nrows; ++r) {
    const std::string& row = lines[nrows - r];  // bottom row printed last
    d.lambda[r - 1] = static_cast<int>(row.size());
    for (int c = 1; c <= static_cast<int>(row.size()); ++c) {
      if (row[c - 1] == '*')
        d.dots.insert({r, c});
      else if (row[c - 1] != '.')
        throw std::invalid_argument("Le diagram characters must be '*' or '.'");
    }
  }
  return d;
}

CyclicRankMatrix::CyclicRankMatrix(int n, int k, std::vector<std::vector<int>> window)
    : n_(n), k_(k), window_(std::move(window)) {
  if (static_cast<int>(window_.size()) != n)
    throw std::invalid_argument("rank matrix window must have n rows");
  for (const auto& row : window_)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("rank matrix rows must have n entries");
}

int CyclicRankMatrix::at(long i, long j) const {
  long r = ((i - 1) % n_ + n_) % n_;  // 0-based row in the window
  long shift = (i - 1 - r) / n_;
  j -= shift * n_;
  i = r + 1;
  if (j < i) return 0;
  if (j >= i + n_ - 1) return k_;
  return window_[i - 1][j - i];
}

std::optional<std::string> CyclicRankMatrix::violation() const {
  for (int i = 1; i <= n_; ++i)
    for (int j = i - 1; j <= i + n_; ++j) {
      int v = at(i, j);
      int down = v - at(i + 1, j);
      int rightstep = v - at(i, j - 1);
      if (down < 0 || down > 1)
        return "row step violation at (" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (rightstep < 0 || rightstep > 1)
        return "column step violation at (" + std::to_string(i) + "," + std::to_string(j) + ")";
      // The corner condition applies strictly above the diagonal: at j = i a
      // rank jump is exactly a strand start.
      if (j > i && at(i + 1, j - 1) == at(i + 1, j) && at(i + 1, j) == at(i, j - 1) &&
          v != at(i + 1, j - 1))
        return "corner condition fails at (" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
  return std::nullopt;
}

AffinePermutation translation_element(int k, int n) {
  std::vector<long> w(n);
  for (int i = 1; i <= k; ++i) w[i - 1] = i + n;
  for (int i = k + 1; i <= n; ++i) w[i - 1] = i;
  return AffinePermutation(n, std::move(w));
}

AffinePermutation pair_to_affine(const PositroidPair& p) {
  if (auto v = p.violation()) throw std::invalid_argument("invalid positroid pair: " + *v);
  AffinePermutation tk = translation_element(p.k, p.n);
  Permutation uinv = p.u.inverse();
  std::vector<long> window(p.n);
  for (int i = 1; i <= p.n; ++i) {
    long x = tk(p.w(i));
    long r = ((x - 1) % p.n + p.n) % p.n;
    long shift = (x - 1 - r) / p.n;
    window[i - 1] = uinv(static_cast<int>(r) + 1) + shift * p.n;
  }
  return AffinePermutation(p.n, std::move(window));
}

PositroidPair affine_to_pair(const AffinePermutation& f) {
  if (auto v = f.bounded_violation())
    throw std::invalid_argument("affine permutation not bounded: " + *v);
  int n = f.period();
  int k = f.k();
  std::vector<int> is, js;
  for (int i = 1; i <= n; ++i)
    (f(i) > n ? is : js).push_back(i);
  if (static_cast<int>(is.size()) != k)
    throw std::logic_error("wrong number of long arcs for k");
  std::vector<int> winv(n), uinv(n);
  for (int a = 0; a < k; ++a) {
    winv[a] = is[a];
    uinv[a] = static_cast<int>(f(is[a])) - n;
  }
  for (int b = 0; b < n - k; ++b) {
    winv[k + b] = js[b];
    uinv[k + b] = static_cast<int>(f(js[b]));
  }
  PositroidPair p;
  p.n = n;
  p.k = k;
  p.w = Permutation(std::move(winv)).inverse();
  p.u = Permutation(std::move(uinv)).inverse();
  return p;
}

CyclicRankMatrix affine_to_rank(const AffinePermutation& f) {
  if (auto v = f.bounded_violation())
    throw std::invalid_argument("affine permutation not bounded: " + *v);
  int n = f.period();
  std::vector<std::vector<int>> window(n, std::vector<int>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= i + n - 1; ++j) {
      int count = 0;
      for (long a = i; a <= j; ++a)
        if (f(a) > j) ++count;
      window[i - 1][j - i] = count;
    }
  return CyclicRankMatrix(n, f.k(), std::move(window));
}

AffinePermutation rank_to_affine(const CyclicRankMatrix& r) {
  if (auto v = r.violation()) throw std::invalid_argument("invalid rank matrix: " + *v);
  int n = r.n();
  std::vector<long> window(n, 0);
  for (int i = 1; i <= n; ++i) {
    if (r.at(i, i) == 0) {  // rows i and i+1 agree: a fixed point of f
      window[i - 1] = i;
      continue;
    }
    bool found = false;
    for (long j = i; j <= i + n; ++j) {
      if (r.at(i, j) == r.at(i + 1, j) && r.at(i, j) == r.at(i, j - 1) &&
          r.at(i, j) == r.at(i + 1, j - 1) + 1) {
        window[i - 1] = j;
        found = true;
        break;
      }
    }
    if (!found) throw std::invalid_argument("rank matrix determines no f(" + std::to_string(i) + ")");
  }
  return AffinePermutation(n, std::move(window));
}

namespace {

// Column-reading word of w_lambda together with the cell of each letter.
struct ColumnWord {
  BraidWord word;
  std::vector<std::pair<int, int>> cells;  // (row, col), bottom-up within columns
};

ColumnWord column_word(const std::vector<int>& lambda, int k, int n) {
  auto lt = transpose_partition(lambda);
  std::vector<Letter> letters;
  std::vector<std::pair<int, int>> cells;
  for (int c = 1; c <= static_cast<int>(lt.size()); ++c)
    for (int rr = 1; rr <= lt[c - 1]; ++rr) {
      letters.push_back(Letter{k + c - rr, true});
      cells.emplace_back(rr, c);
    }
  return ColumnWord{BraidWord(n, std::move(letters)), std::move(cells)};
}

}  // namespace

std::optional<std::vector<int>> leftmost_subexpression(const Permutation& u, const BraidWord& word) {
  int n = u.size();
  Permutation rest = u;  // remaining product still to spell
  std::vector<int> picked;
  for (std::size_t p = 0; p < word.length(); ++p) {
    if (rest.is_identity()) break;
    int i = word.letters[p].index;
    Permutation ri = rest.inverse();
    if (ri(i) > ri(i + 1)) {  // l(s_i * rest) < l(rest)
      picked.push_back(static_cast<int>(p) + 1);
      rest = Permutation::transposition(n, i).compose(rest);
    }
  }
  if (!rest.is_identity()) return std::nullopt;
  return picked;
}

std::optional<std::vector<int>> rightmost_subexpression(const Permutation& u, const BraidWord& word) {
  int n = u.size();
  Permutation rest = u;
  std::vector<int> picked;
  for (int p = static_cast<int>(word.length()) - 1; p >= 0; --p) {
    if (rest.is_identity()) break;
    int i = word.letters[p].index;
    if (rest(i) > rest(i + 1)) {  // l(rest * s_i) < l(rest)
      picked.push_back(p + 1);
      rest = rest.compose(Permutation::transposition(n, i));
    }
  }
  if (!rest.is_identity()) return std::nullopt;
  std::reverse(picked.begin(), picked.end());
  return picked;
}

LeDiagram pair_to_le(const PositroidPair& p) {
  if (auto v = p.violation()) throw std::invalid_argument("invalid positroid pair: " + *v);
  auto lambda = grassmannian_partition(p.w, p.k);
  ColumnWord cw = column_word(lambda, p.k, p.n);
  auto picked = leftmost_subexpression(p.u, cw.word);
  if (!picked) throw std::logic_error("u has no subexpression in the w-word");
  LeDiagram d;
  d.k = p.k;
  d.n = p.n;
  d.lambda = lambda;
  std::vector<bool> undotted(cw.word.length() + 1, false);
  for (int pos : *picked) undotted[pos] = true;
  for (std::size_t i = 0; i < cw.cells.size(); ++i)
    if (!undotted[i + 1]) d.dots.insert(cw.cells[i]);
  return d;
}

PositroidPair le_to_pair(const LeDiagram& d) {
  if (auto v = d.violation()) throw std::invalid_argument("invalid Le diagram: " + *v);
  PositroidPair p;
  p.n = d.n;
  p.k = d.k;
  p.w = grassmannian_from_partition(d.lambda, d.k, d.n);
  ColumnWord cw = column_word(d.lambda, d.k, d.n);
  Permutation u = Permutation::identity(d.n);
  for (std::size_t i = 0; i < cw.cells.size(); ++i)
    if (!d.dots.count(cw.cells[i]))
      u = u.compose(Permutation::transposition(d.n, cw.word.letters[i].index));
  p.u = u;
  return p;
}

LeInductiveCase le_inductive_case(const LeDiagram& d) {
  if (d.lambda.empty()) return {LeCase::Empty, 0};
  for (int c = 1; c <= d.columns(); ++c)
    if (d.column_dot_rows(c).empty()) return {LeCase::EmptyColumn, c};
  for (int r = 1; r <= d.rows(); ++r) {
    bool empty = true;
    for (int c = 1; c <= d.lambda[r - 1] && empty; ++c) empty = !d.has_dot(r, c);
    if (empty) return {LeCase::EmptyRow, r};
  }
  return {LeCase::TopAdjustedLastColumn, d.columns()};
}

std::vector<PositroidPair> all_positroid_pairs(int k, int n) {
  std::vector<PositroidPair> out;
  for (const auto& w : all_permutations(n)) {
    if (!is_k_grassmannian(w, k)) continue;
    for (const auto& u : all_permutations(n)) {
      if (!bruhat_leq(u, w)) continue;
      out.push_back(PositroidPair{n, k, u, w});
    }
  }
  return out;
}

std::vector<PositroidPair> all_positroid_pairs(int n) {
  std::vector<PositroidPair> out;
  for (int k = 1; k <= n - 1; ++k) {
    auto pairs = all_positroid_pairs(k, n);
    out.insert(out.end(), pairs.begin(), pairs.end());
  }
  return out;
}

}  // namespace positroid
