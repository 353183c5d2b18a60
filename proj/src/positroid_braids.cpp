#include "positroid/positroid_braids.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <boost/rational.hpp>

namespace positroid {

BraidWord richardson_braid(const PositroidPair& p, LiftStrategy w_strategy) {
  if (auto v = p.violation()) throw std::invalid_argument("invalid positroid pair: " + *v);
  BraidWord bw = positive_lift(p.w, w_strategy);
  // beta(u) is the rightmost reduced subexpression of u inside beta(w); the
  // Markov reduction consumes exactly this decomposition.
  auto picked = rightmost_subexpression(p.u, bw);
  if (!picked) throw std::logic_error("u has no subexpression in the w-word");
  std::vector<Letter> uls;
  for (int pos : *picked) uls.push_back(bw.letters[pos - 1]);
  BraidWord bu(p.n, std::move(uls));
  return bw.concat(bu.inverse());
}

namespace {

using Rat = boost::rational<long long>;

// First-order jet a0 + eps*a1 for breaking ties among concurrent arcs.
struct Jet {
  Rat a0, a1;
  friend bool operator<(const Jet& x, const Jet& y) {
    return x.a0 != y.a0 ? x.a0 < y.a0 : x.a1 < y.a1;
  }
  friend bool operator==(const Jet& x, const Jet& y) { return x.a0 == y.a0 && x.a1 == y.a1; }
};

struct Arc {
  long left, right;  // endpoints (i, f(i)), left < right
  long weight;       // perturbation weight, distinct per arc
  Rat height(const Rat& x) const { return (x - left) * (Rat(right) - x); }
  Rat slope(const Rat& x) const { return Rat(left + right) - 2 * x; }
  bool covers(const Rat& x) const { return Rat(left) < x && x < Rat(right); }
};

}  // namespace

BraidWord juggling_braid_diagram(const AffinePermutation& f) {
  if (auto v = f.bounded_violation())
    throw std::invalid_argument("affine permutation not bounded: " + *v);
  int n = f.period();
  int k = f.k();
  std::vector<Arc> arcs;
  for (int i = 1; i <= n; ++i)
    if (f(i) != i) arcs.push_back(Arc{i, f(i), i});
  if (k < 1) return BraidWord::identity(1);

  struct Crossing {
    Jet x;
    std::size_t a, b;  // arc indices
  };
  std::vector<Crossing> crossings;
  for (std::size_t a = 0; a < arcs.size(); ++a)
    for (std::size_t b = a + 1; b < arcs.size(); ++b) {
      const Arc &A = arcs[a], &B = arcs[b];
      // interleaved iff A.left < B.left < A.right < B.right
      if (!(A.left < B.left && B.left < A.right && A.right < B.right)) continue;
      Rat x0 = Rat(B.left * B.right - A.left * A.right,
                   (B.left + B.right) - (A.left + A.right));
      Rat y0 = A.height(x0);
      Rat x1 = Rat(B.weight - A.weight) * y0 / (A.slope(x0) - B.slope(x0));
      crossings.push_back({Jet{x0, x1}, a, b});
    }
  // The strands travel right to left; read crossings by decreasing x.
  std::stable_sort(crossings.begin(), crossings.end(), [&](const Crossing& c1, const Crossing& c2) {
    if (!(c1.x == c2.x)) return c2.x < c1.x;
    return arcs[c1.a].left > arcs[c2.a].left;
  });

  std::vector<Letter> letters;
  for (const auto& cr : crossings) {
    const Arc &A = arcs[cr.a], &B = arcs[cr.b];
    Rat x0 = cr.x.a0;
    Rat y0 = A.height(x0);
    Jet ch{y0, cr.x.a1 * A.slope(x0) + A.weight * y0};
    int above = 0;
    for (std::size_t c = 0; c < arcs.size(); ++c) {
      if (c == cr.a || c == cr.b) continue;
      const Arc& C = arcs[c];
      if (!C.covers(x0)) continue;
      Jet hc{C.height(x0), cr.x.a1 * C.slope(x0) + C.weight * C.height(x0)};
      if (ch < hc) ++above;
    }
    int p = above + 1;
    if (p < 1 || p >= k)
      throw std::logic_error("juggling crossing position out of braid range");
    letters.push_back(Letter{p, true});
  }
  return BraidWord(k, std::move(letters));
}

namespace {

BraidWord juggling_by_algorithm(const AffinePermutation& f, bool cap_by_n) {
  if (auto v = f.bounded_violation())
    throw std::invalid_argument("affine permutation not bounded: " + *v);
  int n = f.period();
  int k = f.k();
  if (k < 1) return BraidWord::identity(1);
  std::vector<long> a;
  for (int i = 1; i <= n; ++i)
    if (f(i) > n) a.push_back(f(i) - n);
  std::sort(a.begin(), a.end());
  BraidWord word = BraidWord::identity(k);
  for (;;) {
    int i0 = -1;
    for (int idx = 0; idx < k; ++idx) {
      if (a[idx] > n) continue;
      if (i0 < 0 || f(a[idx]) < f(a[i0])) i0 = idx;
    }
    if (i0 < 0) break;
    long m = f(a[i0]);
    long bound = cap_by_n ? std::min<long>(m, n) : m;
    int j0 = 0;
    for (int j = 0; j < k; ++j)
      if (a[j] <= bound) j0 = j + 1;  // 1-based
    if (j0 - 1 >= i0 + 1) {
      BraidWord iv = interval_word(i0 + 1, j0 - 1, k);
      word = iv.concat(word);
    }
    a[i0] = m;
    std::sort(a.begin(), a.end());
  }
  return word;
}

}  // namespace

BraidWord juggling_braid_algorithm(const AffinePermutation& f) {
  return juggling_by_algorithm(f, true);
}

BraidWord juggling_braid_delta(const AffinePermutation& f) {
  return juggling_by_algorithm(f, false);
}

bool ActionState::label_is_grassmannian() const {
  for (int i = 1; i < k; ++i)
    if (labels[i - 1] >= labels[i]) return false;
  for (int i = k + 1; i < n; ++i)
    if (labels[i - 1] >= labels[i]) return false;
  return true;
}

ActionState initial_state(const std::vector<int>& lambda, int k, int n) {
  auto lt = transpose_partition(lambda);
  lt.resize(n - k, 0);
  ActionState s;
  s.n = n;
  s.k = n - k;  // labels form a left (n-k)-Grassmannian permutation
  s.ab.resize(n);
  s.labels.resize(n);
  for (int i = 1; i <= n - k; ++i) {
    s.ab[i - 1] = {k - lt[i - 1] + 1, k - 1};
    s.labels[i - 1] = k + i;
  }
  for (int j = 1; j <= k; ++j) {
    s.ab[n - k + j - 1] = {1, k - j};
    s.labels[n - k + j - 1] = j;
  }
  return s;
}

ActionState apply_action(const ActionState& s, int i) {
  if (i < 1 || i >= s.n) throw std::invalid_argument("action generator out of range");
  ActionState t = s;
  int pos_i = 0, pos_i1 = 0;
  for (int p = 1; p <= s.n; ++p) {
    if (s.labels[p - 1] == i) pos_i = p;
    if (s.labels[p - 1] == i + 1) pos_i1 = p;
  }
  int m = s.k;
  bool i_left = pos_i <= m, i1_left = pos_i1 <= m;
  if (i_left == i1_left) {
    // w does not break i; the two labels sit at adjacent positions j, j+1.
    int j = pos_i;
    if (pos_i1 != pos_i + 1)
      throw std::logic_error("non-breaking labels are not adjacent");
    auto [aj, bj] = s.ab[j - 1];
    auto [aj1, bj1] = s.ab[j];
    if (i_left)
      t.ab[j - 1] = {aj1 + 1, bj1}, t.ab[j] = {aj, bj};
    else
      t.ab[j - 1] = {aj1 + 1, bj}, t.ab[j] = {aj, bj1};
  } else if (pos_i < pos_i1) {
    // label i first: only the labels swap
    std::swap(t.labels[pos_i - 1], t.labels[pos_i1 - 1]);
  } else {
    // label i+1 first: its end point drops by one and the labels swap
    t.ab[pos_i1 - 1].second -= 1;
    std::swap(t.labels[pos_i - 1], t.labels[pos_i1 - 1]);
  }
  if (!t.label_is_grassmannian())
    throw std::logic_error("braid action left the Grassmannian label set");
  return t;
}

BraidWord JugglingFactors::word() const {
  BraidWord w = BraidWord::identity(k);
  for (auto it = intervals.rbegin(); it != intervals.rend(); ++it) {
    auto [a, b] = *it;
    if (0 < a && a <= b) w = w.concat(interval_word(a, b, k));
  }
  return w;
}

JugglingFactors juggling_braid_action_factors(const PositroidPair& p) {
  if (auto v = p.violation()) throw std::invalid_argument("invalid positroid pair: " + *v);
  auto lambda = grassmannian_partition(p.w, p.k);
  ActionState s = initial_state(lambda, p.k, p.n);
  BraidWord uword = positive_lift(p.u, LiftStrategy::LexLeast);
  for (const auto& l : uword.letters) s = apply_action(s, l.index);
  JugglingFactors out;
  out.k = std::max(p.k, 1);
  out.intervals = s.ab;
  return out;
}

BraidWord juggling_braid_action(const PositroidPair& p) {
  return juggling_braid_action_factors(p).word();
}

JugglingDecomposition juggling_split(const JugglingFactors& factors, int n_minus_k) {
  JugglingDecomposition d;
  JugglingFactors f1{factors.k, {}}, f2{factors.k, {}};
  f1.intervals.assign(factors.intervals.begin(), factors.intervals.begin() + n_minus_k);
  f2.intervals.assign(factors.intervals.begin() + n_minus_k, factors.intervals.end());
  d.j1 = f1.word();
  d.j2 = f2.word();
  d.j = d.j2.concat(d.j1);
  d.split = d.j2.length();
  return d;
}

BraidWord script_j(const PositroidPair& p) {
  auto factors = juggling_braid_action_factors(p);
  auto d = juggling_split(factors, p.n - p.k);
  return d.j1.concat(half_twist(factors.k).inverse()).concat(d.j2);
}

BraidWord matrix_braid(const CyclicRankMatrix& r) {
  if (auto v = r.violation()) throw std::invalid_argument("invalid rank matrix: " + *v);
  int n = r.n();
  int k = r.k();
  struct Saddle {
    long col, row;
    int gen;
  };
  std::vector<Saddle> saddles;
  for (int i = 1; i <= n; ++i)
    for (long j = i; j <= i + n; ++j) {
      int a = r.at(i, j), b = r.at(i, j + 1), c = r.at(i + 1, j), d = r.at(i + 1, j + 1);
      if (a == c + 1 && b == a + 1 && d == c + 1) saddles.push_back({j, i, a});
    }
  std::sort(saddles.begin(), saddles.end(), [](const Saddle& s1, const Saddle& s2) {
    return s1.col != s2.col ? s1.col > s2.col : s1.row > s2.row;
  });
  std::vector<Letter> letters;
  for (const auto& s : saddles) letters.push_back(Letter{s.gen, true});
  return BraidWord(std::max(k, 1), std::move(letters));
}

BraidWord column_tangle(const std::vector<int>& dot_rows, int k) {
  std::vector<int> d = dot_rows;
  std::sort(d.begin(), d.end());
  if (d.empty()) return BraidWord::identity(k);
  int m = static_cast<int>(d.size());
  std::vector<bool> dotted(k + 1, false);
  for (int h : d) {
    if (h < 1 || h > k) throw std::invalid_argument("dot row out of range");
    dotted[h] = true;
  }
  auto horizontals_above = [&](int h) {
    int c = 0;
    for (int u = h + 1; u <= k; ++u)
      if (!dotted[u]) ++c;
    return c;
  };

  struct Ev {
    int key1, key2;
    Letter letter;
  };
  std::vector<Ev> phase1, phase2;
  // Descending strands cross the horizontals sitting between consecutive dots.
  for (int i = 2; i <= m; ++i)
    for (int h = d[i - 2] + 1; h < d[i - 1]; ++h) {
      int tau = d[i - 1] - h;
      int above = horizontals_above(h);
      for (int l = 2; l <= m; ++l) {
        if (l == i) continue;
        int height = std::max(d[l - 1] - tau, d[l - 2]);
        if (height > h) ++above;
      }
      phase1.push_back({tau, -h, Letter{above + 1, false}});
    }
  std::sort(phase1.begin(), phase1.end(), [](const Ev& a, const Ev& b) {
    return a.key1 != b.key1 ? a.key1 < b.key1 : a.key2 < b.key2;
  });
  // The bottom strand rises from the lowest dot to the highest, crossing the
  // settled descending strands and the horizontals in its way.
  for (int i = 2; i <= m; ++i) {
    int above = horizontals_above(d[i - 2]) + (m - i);
    phase2.push_back({d[i - 2], 0, Letter{above + 1, true}});
  }
  for (int h = d[0] + 1; h < d[m - 1]; ++h) {
    if (dotted[h]) continue;
    int above = horizontals_above(h);
    for (int l = 2; l <= m; ++l)
      if (d[l - 2] > h) ++above;
    phase2.push_back({h, 1, Letter{above + 1, true}});
  }
  std::sort(phase2.begin(), phase2.end(), [](const Ev& a, const Ev& b) {
    return a.key1 != b.key1 ? a.key1 < b.key1 : a.key2 < b.key2;
  });

  std::vector<Letter> letters;
  for (const auto& e : phase1) letters.push_back(e.letter);
  for (const auto& e : phase2) letters.push_back(e.letter);
  return BraidWord(k, std::move(letters));
}

BraidWord le_braid(const LeDiagram& d) {
  if (auto v = d.violation()) throw std::invalid_argument("invalid Le diagram: " + *v);
  int k = std::max(d.k, 1);
  BraidWord w = BraidWord::identity(k);
  for (int c = d.columns(); c >= 1; --c) w = w.concat(column_tangle(d.column_dot_rows(c), k));
  return w;
}

int juggling_length(const PositroidPair& p) {
  if (auto v = p.violation()) throw std::invalid_argument("invalid positroid pair: " + *v);
  AffinePermutation f = pair_to_affine(p);
  int s = 0;
  for (int i = 1; i <= p.n; ++i)
    if (f(i) == i) ++s;
  return p.w.length() + p.k * (p.k - 1) / 2 - p.u.length() - (p.n - p.k) + s;
}

BraidWord reverse_family(const std::vector<int>& lambda, int k) {
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] < 1 || lambda[i] > k - 1)
      throw std::invalid_argument("reverse family needs 1 <= lambda_i <= k-1");
    if (i + 1 < lambda.size() && lambda[i] < lambda[i + 1])
      throw std::invalid_argument("partition not weakly decreasing");
  }
  BraidWord w = BraidWord::identity(k);
  for (auto it = lambda.rbegin(); it != lambda.rend(); ++it)
    w = w.concat(interval_word(k - *it, k - 1, k));
  return w;
}

BraidWord twist_family(const std::vector<int>& a, int s, int k) {
  if (static_cast<int>(a.size()) != std::max(k - 1, 0))
    throw std::invalid_argument("twist family needs exponents a_2..a_k");
  BraidWord w = BraidWord::identity(k);
  for (int i = 2; i <= k; ++i) {
    BraidWord ft = BraidWord::identity(k);
    for (int rep = 0; rep < i; ++rep) ft = ft.concat(interval_word(k - i + 1, k - 1, k));
    for (int rep = 0; rep < a[i - 2]; ++rep) w = w.concat(ft);
  }
  for (int rep = 0; rep < s; ++rep) w = w.concat(interval_word(1, k - 1, k));
  return w;
}

}  // namespace positroid
