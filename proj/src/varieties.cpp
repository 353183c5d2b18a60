#include "positroid/varieties.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "positroid/dga.hpp"
#include "positroid/positroid_braids.hpp"

namespace positroid {

namespace {

// Connected components of the variable/equation incidence graph.
std::vector<std::vector<int>> split_components(const VarietyPresentation& v,
                                               const std::vector<Variable>& vars) {
  int m = static_cast<int>(vars.size());
  std::vector<int> comp(m, -1);
  std::vector<std::vector<int>> groups;
  std::map<Variable, int> index;
  for (int i = 0; i < m; ++i) index[vars[i]] = i;
  // union-find over variables joined by equations
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& e : v.equations) {
    int prev = -1;
    for (const auto& var : e.variables()) {
      auto it = index.find(var);
      if (it == index.end()) continue;
      if (prev < 0)
        prev = find(it->second);
      else
        parent[find(it->second)] = prev = find(prev);
    }
  }
  std::map<int, int> roots;
  for (int i = 0; i < m; ++i) {
    int r = find(i);
    auto [it, fresh] = roots.emplace(r, static_cast<int>(groups.size()));
    if (fresh) groups.emplace_back();
    groups[it->second].push_back(i);
  }
  return groups;
}

std::uint64_t count_group(const VarietyPresentation& v, const std::vector<Variable>& vars,
                          const std::vector<int>& group, std::uint64_t q,
                          const CountOptions& opts) {
  // equations supported entirely inside this group
  std::vector<const Polynomial*> eqs;
  for (const auto& e : v.equations) {
    bool mine = false, foreign = false;
    for (const auto& var : e.variables()) {
      bool in_group = false;
      for (int gi : group)
        if (vars[gi] == var) in_group = true;
      (in_group ? mine : foreign) = true;
    }
    if (!e.is_zero() && !foreign) {
      if (e.is_constant()) {
        if (e.eval_mod_p({}, q) != 0) return 0;
        continue;
      }
      if (mine) eqs.push_back(&e);
    }
  }
  std::vector<Variable> gv;
  for (int gi : group) gv.push_back(vars[gi]);
  double size_estimate = 1;
  for (const auto& var : gv) size_estimate *= (var.family == Variable::Family::T ? q - 1 : q);
  if (size_estimate > static_cast<double>(opts.assignment_cap))
    throw std::runtime_error("point count exceeds the assignment safety bound");

  std::map<Variable, std::uint64_t> assign;
  std::vector<std::uint64_t> odo(gv.size(), 0);
  for (std::size_t i = 0; i < gv.size(); ++i)
    assign[gv[i]] = gv[i].family == Variable::Family::T ? 1 : 0;
  std::uint64_t total = 0;
  for (;;) {
    bool ok = true;
    for (const auto* e : eqs)
      if (e->eval_mod_p(assign, q) != 0) {
        ok = false;
        break;
      }
    if (ok) ++total;
    std::size_t pos = 0;
    while (pos < gv.size()) {
      bool is_t = gv[pos].family == Variable::Family::T;
      std::uint64_t top = is_t ? q - 1 : q;
      if (++odo[pos] < top) {
        assign[gv[pos]] = odo[pos] + (is_t ? 1 : 0);
        break;
      }
      odo[pos] = 0;
      assign[gv[pos]] = is_t ? 1 : 0;
      ++pos;
    }
    if (pos == gv.size()) break;
  }
  return total;
}

}  // namespace

CountReport count_points(const VarietyPresentation& v, std::uint64_t q, const CountOptions& opts) {
  // collect every variable: declared ambient z's plus any t's in equations
  std::vector<Variable> vars = v.ambient;
  for (const auto& e : v.equations)
    for (const auto& var : e.variables())
      if (std::find(vars.begin(), vars.end(), var) == vars.end()) vars.push_back(var);
  CountReport rep;
  rep.label = v.label;
  rep.q = q;
  for (const auto& e : v.equations)
    if (e.is_constant() && !e.is_zero() && e.eval_mod_p({}, q) != 0) {
      rep.count = 0;
      rep.method = "brute";
      return rep;
    }
  if (!opts.product_split || vars.empty()) {
    std::vector<int> everything(vars.size());
    std::iota(everything.begin(), everything.end(), 0);
    rep.count = vars.empty() ? 1 : count_group(v, vars, everything, q, opts);
    rep.method = "brute";
    return rep;
  }
  auto groups = split_components(v, vars);
  std::uint64_t total = 1;
  for (const auto& g : groups) total *= count_group(v, vars, g, q, opts);
  rep.count = total;
  rep.method = groups.size() > 1 ? "product-split" : "brute";
  return rep;
}

namespace {

// Subspaces of F_q^n as sorted lists of vectors (each vector encoded base q).
struct FlagSpace {
  int n;
  std::uint64_t q;
  std::vector<std::vector<int>> points;  // all nonzero vectors

  FlagSpace(int n_, std::uint64_t q_) : n(n_), q(q_) {
    std::vector<int> v(n, 0);
    for (;;) {
      int pos = 0;
      while (pos < n && ++v[pos] == static_cast<int>(q)) v[pos++] = 0;
      if (pos == n) break;
      points.push_back(v);
    }
  }
};

std::vector<int> add_scaled(const std::vector<int>& a, const std::vector<int>& b, int c,
                            std::uint64_t q) {
  std::vector<int> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = static_cast<int>((a[i] + static_cast<std::uint64_t>(c) * b[i]) % q);
  return r;
}

// Span of a list of vectors, as a set of all vectors in it.
std::vector<std::vector<int>> span_of(const std::vector<std::vector<int>>& basis, int n,
                                      std::uint64_t q) {
  std::vector<std::vector<int>> cur = {std::vector<int>(n, 0)};
  for (const auto& b : basis) {
    std::vector<std::vector<int>> next;
    for (const auto& v : cur)
      for (int c = 0; c < static_cast<int>(q); ++c) next.push_back(add_scaled(v, b, c, q));
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    cur = std::move(next);
  }
  return cur;
}

int log_q(std::size_t size, std::uint64_t q) {
  int d = 0;
  std::size_t s = 1;
  while (s < size) s *= q, ++d;
  return d;
}

struct Flag {
  // spaces[d] = sorted vector set of the d-dimensional space, d = 1..n-1
  std::vector<std::vector<std::vector<int>>> spaces;
};

void enumerate_flags(const FlagSpace& fs, std::vector<std::vector<std::vector<int>>>& stack,
                     std::vector<Flag>& out) {
  int d = static_cast<int>(stack.size());
  if (d == fs.n - 1) {
    out.push_back(Flag{stack});
    return;
  }
  std::vector<std::vector<int>> zero = {std::vector<int>(fs.n, 0)};
  // copy: the recursion below grows the stack and may reallocate it
  const std::vector<std::vector<int>> cur = stack.empty() ? zero : stack.back();
  // extend by any vector outside the current space; dedupe extensions
  std::vector<std::vector<std::vector<int>>> seen;
  for (const auto& p : fs.points) {
    if (std::binary_search(cur.begin(), cur.end(), p)) continue;
    std::vector<std::vector<int>> next;
    for (const auto& v : cur)
      for (int c = 0; c < static_cast<int>(fs.q); ++c) next.push_back(add_scaled(v, p, c, fs.q));
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    if (std::find(seen.begin(), seen.end(), next) != seen.end()) continue;
    seen.push_back(next);
    stack.push_back(next);
    enumerate_flags(fs, stack, out);
    stack.pop_back();
  }
}

int intersection_dim(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b,
                     std::uint64_t q) {
  std::size_t common = 0;
  for (const auto& v : a)
    if (std::binary_search(b.begin(), b.end(), v)) ++common;
  return log_q(common, q);
}

}  // namespace

std::uint64_t richardson_oracle(const Permutation& u, const Permutation& w, std::uint64_t q) {
  int n = u.size();
  if (w.size() != n) throw std::invalid_argument("size mismatch");
  FlagSpace fs(n, q);
  // standard and antistandard flags
  std::vector<std::vector<std::vector<int>>> st(n + 1), anti(n + 1);
  for (int d = 0; d <= n; ++d) {
    std::vector<std::vector<int>> basis_s, basis_a;
    for (int i = 0; i < d; ++i) {
      std::vector<int> e(n, 0), f(n, 0);
      e[i] = 1;
      f[n - 1 - i] = 1;
      basis_s.push_back(e);
      basis_a.push_back(f);
    }
    st[d] = span_of(basis_s, n, q);
    anti[d] = span_of(basis_a, n, q);
  }
  std::vector<Flag> flags;
  std::vector<std::vector<std::vector<int>>> stack;
  enumerate_flags(fs, stack, flags);
  Permutation w0u = Permutation::longest(n).compose(u);
  std::uint64_t total = 0;
  std::vector<std::vector<int>> full;  // the whole space
  {
    std::vector<std::vector<int>> basis;
    for (int i = 0; i < n; ++i) {
      std::vector<int> e(n, 0);
      e[i] = 1;
      basis.push_back(e);
    }
    full = span_of(basis, n, q);
  }
  auto space_of = [&](const Flag& fl, int d) -> const std::vector<std::vector<int>>& {
    static std::vector<std::vector<int>> zero;
    if (d == 0) {
      if (zero.empty()) zero = {std::vector<int>(n, 0)};
      return zero;
    }
    if (d == n) return full;
    return fl.spaces[d - 1];
  };
  for (const auto& fl : flags) {
    bool ok = true;
    for (int p = 1; p <= n && ok; ++p)
      for (int qq = 1; qq <= n && ok; ++qq) {
        int expect_w = 0, expect_u = 0;
        for (int i = 1; i <= p; ++i) {
          if (w(i) <= qq) ++expect_w;
          if (w0u(i) <= qq) ++expect_u;
        }
        if (intersection_dim(st[p], space_of(fl, qq), q) != expect_w) ok = false;
        if (ok && intersection_dim(space_of(fl, p), anti[qq], q) != expect_u) ok = false;
      }
    if (ok) ++total;
  }
  return total;
}

PositroidCountReport positroid_count_check(const PositroidPair& p, std::uint64_t q,
                                           const CountOptions& opts) {
  if (auto v = p.violation()) throw std::invalid_argument("invalid positroid pair: " + *v);
  int n = p.n;
  BraidWord bw = positive_lift(p.w, LiftStrategy::ColumnReading);
  Permutation target = p.u.inverse().compose(Permutation::longest(n));
  BraidWord tail = positive_lift(target, LiftStrategy::LexLeast);
  BraidWord beta = bw.concat(tail);
  PositroidCountReport rep;
  rep.lhs = count_points(variety_upper_triangular(beta, Permutation::longest(n)), q, opts).count;
  AffinePermutation f = pair_to_affine(p);
  int s = 0;
  for (int i = 1; i <= n; ++i)
    if (f(i) == i) ++s;
  BraidWord j = juggling_braid_diagram(f);
  rep.juggling =
      count_points(variety_upper_triangular(j, Permutation::longest(j.strands)), q, opts).count;
  std::uint64_t factor = 1;
  for (int i = 0; i < n - s - p.k; ++i) factor *= (q - 1);
  rep.rhs = rep.juggling * factor;
  rep.equal = rep.lhs == rep.rhs;
  return rep;
}

BrickStratification brick_stratify(const BraidWord& beta) {
  if (!beta.is_positive()) throw std::invalid_argument("brick_stratify needs a positive word");
  BrickStratification out;
  out.beta = beta;
  out.demazure = demazure_product(beta);
  int L = static_cast<int>(beta.length());
  int target_len = out.demazure.length();
  for (std::uint64_t mask = 0; mask < (1ull << L); ++mask) {
    std::vector<Letter> sub;
    std::vector<int> positions;
    for (int i = 0; i < L; ++i)
      if (mask & (1ull << i)) {
        sub.push_back(beta.letters[i]);
        positions.push_back(i + 1);
      }
    if (static_cast<int>(sub.size()) < target_len) continue;
    BraidWord word(beta.strands, sub);
    if (!(demazure_product(word) == out.demazure)) continue;
    BrickStratum s;
    s.positions = positions;
    s.dim = static_cast<int>(sub.size()) - target_len;
    out.strata.push_back(std::move(s));
  }
  return out;
}

std::uint64_t brick_count(const BraidWord& beta, std::uint64_t q, const CountOptions& opts) {
  BrickStratification strat = brick_stratify(beta);
  std::uint64_t total = 0;
  for (auto& s : strat.strata) {
    std::vector<Letter> sub;
    for (int p : s.positions) sub.push_back(beta.letters[p - 1]);
    BraidWord word(beta.strands, std::move(sub));
    s.count = count_points(variety_upper_triangular(word.opposite(), strat.demazure), q, opts).count;
    total += s.count;
  }
  return total;
}

BraidWord enlarge_to_w0(const BraidWord& beta) {
  if (!beta.is_positive()) throw std::invalid_argument("enlarge_to_w0 needs a positive word");
  Permutation delta = demazure_product(beta);
  Permutation mu = delta.inverse().compose(Permutation::longest(beta.strands));
  return beta.concat(positive_lift(mu, LiftStrategy::LexLeast));
}

MarkovCountReport markov_count_check(const BraidWord& eta, std::uint64_t q,
                                     const CountOptions& opts) {
  MarkovCountReport rep;
  int n = eta.strands;
  BraidWord base = eta.concat(half_twist(n));
  rep.base = count_points(variety_upper_triangular(base, Permutation::longest(n)), q, opts).count;
  // positive stabilization: same word on n+1 strands, sigma_n appended
  std::vector<Letter> stab_letters = eta.letters;
  stab_letters.push_back(Letter{n, true});
  BraidWord stab =
      BraidWord(n + 1, std::move(stab_letters)).concat(half_twist(n + 1));
  rep.stabilized =
      count_points(variety_upper_triangular(stab, Permutation::longest(n + 1)), q, opts).count;
  // disjoint strand: same word on n+1 strands
  BraidWord disj = BraidWord(n + 1, eta.letters).concat(half_twist(n + 1));
  rep.disjoint =
      count_points(variety_upper_triangular(disj, Permutation::longest(n + 1)), q, opts).count;
  rep.stab_ratio_ok = rep.stabilized == rep.base * (q - 1);
  rep.disjoint_ok = rep.disjoint == rep.base;
  return rep;
}

std::uint64_t count_presentation_with_signs(VarietyPresentation v, const BraidWord& beta_full,
                                            std::uint64_t q, const CountOptions& opts) {
  auto subs = footnote_signs(beta_full);
  for (auto& e : v.equations) e = e.substitute(subs);
  return count_points(v, q, opts).count;
}

std::uint64_t count_braid_pair_points(const BraidWord& eta, std::uint64_t q,
                                      const CountOptions& opts) {
  VarietyPresentation v = variety_braid_pair(eta);
  BraidWord beta = eta.concat(half_twist(eta.strands));
  return count_presentation_with_signs(std::move(v), beta, q, opts);
}

}  // namespace positroid
