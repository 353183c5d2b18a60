#include "positroid/dga.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace positroid {

LabeledWord LabeledWord::from_braid(const BraidWord& w) {
  LabeledWord lw;
  lw.strands = w.strands;
  int z = 0, neg = 0;
  for (const auto& l : w.letters)
    lw.crossings.push_back({l.index, l.positive, l.positive ? ++z : ++neg});
  return lw;
}

BraidWord LabeledWord::word() const {
  std::vector<Letter> ls;
  for (const auto& c : crossings) ls.push_back(Letter{c.index, c.positive});
  return BraidWord(strands, std::move(ls));
}

int LabeledWord::position_of_z(int j) const {
  for (std::size_t p = 0; p < crossings.size(); ++p)
    if (crossings[p].positive && crossings[p].label == j) return static_cast<int>(p) + 1;
  throw std::invalid_argument("no such z-crossing");
}

int LabeledWord::position_of_w(int k) const {
  for (std::size_t p = 0; p < crossings.size(); ++p)
    if (!crossings[p].positive && crossings[p].label == k) return static_cast<int>(p) + 1;
  throw std::invalid_argument("no such w-crossing");
}

LabeledWord between_word(const LabeledWord& beta, int pos_a, int pos_b) {
  if (pos_a == pos_b) throw std::invalid_argument("between_word needs distinct crossings");
  int lo = std::min(pos_a, pos_b), hi = std::max(pos_a, pos_b);
  LabeledWord out;
  out.strands = beta.strands;
  for (int p = lo + 1; p < hi; ++p) out.crossings.push_back(beta.crossings[p - 1]);
  return out;
}

LabeledWord complement_word(const LabeledWord& beta, int pos_a, int pos_b) {
  if (pos_a == pos_b) throw std::invalid_argument("complement_word needs distinct crossings");
  int lo = std::min(pos_a, pos_b), hi = std::max(pos_a, pos_b);
  int L = static_cast<int>(beta.length());
  LabeledWord out;
  out.strands = beta.strands;
  for (int p = hi + 1; p <= L; ++p) out.crossings.push_back(beta.crossings[p - 1]);
  for (int p = 1; p < lo; ++p) out.crossings.push_back(beta.crossings[p - 1]);
  return out;
}

LabeledWord dotted(const LabeledWord& w) {
  LabeledWord out;
  out.strands = w.strands;
  for (auto it = w.crossings.rbegin(); it != w.crossings.rend(); ++it)
    out.crossings.push_back({w.strands - it->index, it->positive, it->label});
  return out;
}

std::vector<DecoratedPath> enumerate_paths(const LabeledWord& w, int from, int to) {
  std::vector<DecoratedPath> out;
  std::size_t L = w.length();
  std::vector<int> gaps(L + 1);
  std::vector<bool> jumps(L, false);
  gaps[0] = from;
  std::function<void(std::size_t)> walk = [&](std::size_t pos) {
    if (pos == L) {
      if (gaps[L] == to) {
        DecoratedPath p;
        p.gaps = gaps;
        p.jump = jumps;
        Monomial mono;
        for (std::size_t q = 0; q < L; ++q)
          if (jumps[q]) mono = mono.times(Monomial::of(zvar(w.crossings[q].label)));
        p.monomial = mono;
        out.push_back(std::move(p));
      }
      return;
    }
    const auto& c = w.crossings[pos];
    int level = gaps[pos];
    if (c.positive && level == c.index + 1) {
      jumps[pos] = true;
      gaps[pos + 1] = level;
      walk(pos + 1);
      jumps[pos] = false;
      gaps[pos + 1] = c.index;
      walk(pos + 1);
      return;
    }
    int next = level;
    if (level == c.index) next = c.index + 1;
    else if (level == c.index + 1) next = c.index;
    gaps[pos + 1] = next;
    walk(pos + 1);
  };
  walk(0);
  return out;
}

namespace {

// Convert a path on dotted(eta) into the eta frame: reverse the gap sequence
// and flip levels through n+1-l; jump positions mirror.
DecoratedPath to_eta_frame(const DecoratedPath& d, int n) {
  DecoratedPath p;
  std::size_t L = d.jump.size();
  p.gaps.resize(L + 1);
  p.jump.resize(L);
  for (std::size_t g = 0; g <= L; ++g) p.gaps[g] = n + 1 - d.gaps[L - g];
  for (std::size_t q = 0; q < L; ++q) p.jump[q] = d.jump[L - 1 - q];
  p.monomial = d.monomial;
  return p;
}

}  // namespace

RegionRules& region_rules() {
  static RegionRules rules;
  return rules;
}

bool is_immersed_pair(const LabeledWord& eta, const DecoratedPath& lower,
                      const DecoratedPath& upper) {
  const RegionRules& rules = region_rules();
  std::size_t L = eta.length();
  std::vector<int> sign(L + 1);
  for (std::size_t g = 0; g <= L; ++g) {
    int d = upper.gaps[g] - lower.gaps[g];
    if (d == 0) return false;
    sign[g] = d > 0 ? 1 : -1;
  }
  for (std::size_t p = 0; p < L; ++p) {
    if (sign[p] != sign[p + 1]) {
      // Both boundaries pass through this crossing and the fiber inverts.
      if (lower.jump[p] || upper.jump[p]) return false;
      bool down = sign[p] > 0;
      bool ok = eta.crossings[p].positive ? (down ? rules.pinch_pos_down : rules.pinch_pos_up)
                                          : (down ? rules.pinch_neg_down : rules.pinch_neg_up);
      if (!ok) return false;
    }
    if (lower.jump[p] && upper.jump[p]) return false;  // one corner per crossing
    if (rules.corners_need_positive_state && (lower.jump[p] || upper.jump[p]) && sign[p] < 0)
      return false;
  }
  return true;
}

Polynomial region_coefficient(const LabeledWord& eta, int i1u, int i1l, int i2u, int i2l,
                              RegionMode mode) {
  int n = eta.strands;
  Polynomial total;
  auto accumulate = [&](int from_l, int to_l, int dot_from, int dot_to, int sign) {
    auto plain = enumerate_paths(eta, from_l, to_l);
    if (plain.empty()) return;
    auto dot = enumerate_paths(dotted(eta), dot_from, dot_to);
    for (const auto& d : dot) {
      DecoratedPath conv = to_eta_frame(d, n);
      for (const auto& pl : plain) {
        const DecoratedPath& lower = mode == RegionMode::Z ? pl : conv;
        const DecoratedPath& upper = mode == RegionMode::Z ? conv : pl;
        if (!is_immersed_pair(eta, lower, upper)) continue;
        // corners on the upper boundary reverse orientation
        int s = sign;
        for (bool j : upper.jump)
          if (j) s = -s;
        total += Polynomial::term(pl.monomial.times(conv.monomial), s);
      }
    }
  };
  // Untwisted pairs: lower i1l -> i2l against the upper arc i1u -> i2u.
  accumulate(i1l, i2l, n - i2u + 1, n - i1u + 1, 1);
  if (mode == RegionMode::Z && i1u == i1l + 1 && i2u == i2l + 1) {
    // Cap-twisted pairs: the arc leaving the lower cap strand arrives on the
    // upper one; they carry an odd number of inversions.
    accumulate(i1l, i2u, n - i2l + 1, n - i1u + 1, region_rules().twisted_sign);
  }
  return total;
}

Polynomial region_coefficient(const LabeledWord& eta, int i1, int i2) {
  return region_coefficient(eta, i1 + 1, i1, i2 + 1, i2, RegionMode::Z);
}

DgaElement DgaElement::from_poly(const Polynomial& p) {
  DgaElement e;
  if (!p.is_zero()) e.terms_[{{}, {}}] = p;
  return e;
}

DgaElement DgaElement::y(int l, int m) {
  DgaElement e;
  e.terms_[{{YGen{l, m}}, {}}] = Polynomial::constant(1);
  return e;
}

DgaElement DgaElement::w(int k) {
  DgaElement e;
  e.terms_[{{}, {k}}] = Polynomial::constant(1);
  return e;
}

Polynomial DgaElement::poly_part() const {
  auto it = terms_.find({{}, {}});
  return it == terms_.end() ? Polynomial::zero() : it->second;
}

Polynomial DgaElement::w_coefficient(int k) const {
  auto it = terms_.find({{}, {k}});
  return it == terms_.end() ? Polynomial::zero() : it->second;
}

void DgaElement::add(const Key& key, const Polynomial& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DgaElement DgaElement::operator-() const {
  DgaElement e;
  for (const auto& [k, c] : terms_) e.terms_[k] = -c;
  return e;
}

DgaElement& DgaElement::operator+=(const DgaElement& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

namespace {

// Merge two sorted odd-generator lists; (-1)^{crossings}, zero on repeats.
template <typename T>
std::optional<std::pair<std::vector<T>, int>> merge_odd(const std::vector<T>& a,
                                                        const std::vector<T>& b) {
  std::vector<T> out;
  out.reserve(a.size() + b.size());
  int sign = 1;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return std::nullopt;
    if (a[i] < b[j]) {
      out.push_back(a[i++]);
    } else {
      if ((a.size() - i) % 2 == 1) sign = -sign;
      out.push_back(b[j++]);
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) out.push_back(b[j++]);
  return std::make_pair(std::move(out), sign);
}

}  // namespace

DgaElement operator*(const DgaElement& a, const DgaElement& b) {
  DgaElement out;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      auto ys = merge_odd(ka.first, kb.first);
      if (!ys) continue;
      auto ws = merge_odd(ka.second, kb.second);
      if (!ws) continue;
      // Moving kb's y-block left past ka's w-block.
      int cross = static_cast<int>(ka.second.size() * kb.first.size());
      int sign = ys->second * ws->second * (cross % 2 == 1 ? -1 : 1);
      out.add({ys->first, ws->first}, ca * cb * Polynomial::constant(sign));
    }
  return out;
}

namespace {

int sign_of(const LabeledWord& beta, int zpos, int wpos) {
  return zpos < wpos ? 1 : -1;
}

// d z_j as a DgaElement, using the between- and complement-regions.
DgaElement dz_of_crossing(const LabeledWord& beta, int j, int wcount) {
  DgaElement out;
  int zpos = beta.position_of_z(j);
  int iz = beta.crossings[zpos - 1].index;
  for (int k = 1; k <= wcount; ++k) {
    int wpos = beta.position_of_w(k);
    int iw = beta.crossings[wpos - 1].index;
    int west_idx = zpos < wpos ? iz : iw;
    int east_idx = zpos < wpos ? iw : iz;
    LabeledWord mid = between_word(beta, zpos, wpos);
    Polynomial e_mid = region_coefficient(mid, west_idx + 1, west_idx, east_idx + 1, east_idx,
                                          RegionMode::Z);
    // Complement runs from the right of the rightmost crossing back to the
    // left of the leftmost; its west cap is the rightmost crossing.
    LabeledWord comp = complement_word(beta, zpos, wpos);
    Polynomial e_comp = region_coefficient(comp, east_idx + 1, east_idx, west_idx + 1, west_idx,
                                           RegionMode::Z);
    Polynomial coeff = e_mid - e_comp;
    if (sign_of(beta, zpos, wpos) < 0) coeff = -coeff;
    if (!coeff.is_zero())
      out += DgaElement::from_poly(coeff) * DgaElement::w(k);
  }
  return out;
}

}  // namespace

DgaElement sha_terms(const LabeledWord& beta, int l, int m) {
  int n = beta.strands;
  DgaElement out;
  int wcount = 0;
  for (const auto& c : beta.crossings)
    if (!c.positive) ++wcount;
  for (int k = 1; k <= wcount; ++k) {
    int wpos = beta.position_of_w(k);
    int iw = beta.crossings[wpos - 1].index;
    LabeledWord left;
    left.strands = n;
    for (int p = 1; p < wpos; ++p) left.crossings.push_back(beta.crossings[p - 1]);
    for (int p = l + 1; p <= n; ++p) {
      Polynomial e = region_coefficient(left, l, p, iw, iw + 1, RegionMode::Sh);
      if (!e.is_zero())
        out += DgaElement::from_poly(e) * DgaElement::y(p, m) * DgaElement::w(k);
    }
    for (int p = 1; p < m; ++p) {
      Polynomial e = region_coefficient(left, p, m, iw, iw + 1, RegionMode::Sh);
      if (!e.is_zero())
        out += DgaElement::from_poly(e) * DgaElement::y(l, p) * DgaElement::w(k);
    }
  }
  return out;
}

std::map<Variable, Polynomial> footnote_signs(const BraidWord& beta_full) {
  // Closure components = cycles of the underlying permutation; the least
  // strand in each component carries -1, the rest +1.
  Permutation pi = coxeter_projection(beta_full);
  std::map<Variable, Polynomial> out;
  std::vector<bool> seen(beta_full.strands + 1, false);
  for (int s = 1; s <= beta_full.strands; ++s) {
    if (seen[s]) continue;
    int cur = s;
    bool first = true;
    while (!seen[cur]) {
      seen[cur] = true;
      out[tvar(cur)] = Polynomial::constant(first ? -1 : 1);
      first = false;
      cur = pi(cur);
    }
  }
  return out;
}

DGAlgebraPresentation build_dga(const BraidWord& eta, bool set_t) {
  DGAlgebraPresentation p;
  BraidWord beta = eta.concat(half_twist(eta.strands));
  p.beta = LabeledWord::from_braid(beta);
  for (const auto& c : p.beta.crossings) (c.positive ? p.positives : p.negatives)++;

  std::map<Variable, Polynomial> tsubs;
  if (set_t) tsubs = footnote_signs(beta);

  BraidMatrix bm = word_matrix(beta);
  int n = beta.strands;
  for (int l = 1; l <= n; ++l)
    for (int m = 1; m <= n; ++m) {
      Polynomial entry = bm.at(l, m);
      if (l == m) entry += Polynomial::variable(tvar(l));
      if (set_t) entry = entry.substitute(tsubs);
      DgaElement d = DgaElement::from_poly(entry);
      DgaElement sh = sha_terms(p.beta, l, m);
      if (!sh.is_zero()) p.sh_vanishes = false;
      d += sh;
      p.dy[{l, m}] = d;
    }
  for (int j = 1; j <= p.positives; ++j)
    p.dz.push_back(dz_of_crossing(p.beta, j, p.negatives));
  return p;
}

DgaElement differentiate(const DGAlgebraPresentation& p, const DgaElement& e) {
  DgaElement out;
  for (const auto& [key, coeff] : e.terms()) {
    const auto& ys = key.first;
    const auto& ws = key.second;
    // d of the polynomial coefficient: chain rule over its z-variables.
    for (const auto& v : coeff.variables()) {
      if (v.family != Variable::Family::Z) continue;
      int j = v.index;
      if (j < 1 || j > static_cast<int>(p.dz.size())) continue;
      if (p.dz_of(j).is_zero()) continue;
      // partial derivative with respect to z_j
      Polynomial partial;
      for (const auto& [mono, c] : coeff.terms()) {
        int ex = mono.exponent(v);
        if (ex == 0) continue;
        std::vector<std::pair<Variable, int>> rest;
        for (const auto& [vv, ee] : mono.exponents())
          rest.emplace_back(vv, vv == v ? ee - 1 : ee);
        partial += Polynomial::term(Monomial(std::move(rest)), c * ex);
      }
      DgaElement rest;
      rest.add({ys, ws}, Polynomial::constant(1));
      out += DgaElement::from_poly(partial) * p.dz_of(j) * rest;
    }
    // d of each odd generator, with Koszul signs.
    for (std::size_t i = 0; i < ys.size(); ++i) {
      auto it = p.dy.find({ys[i].l, ys[i].m});
      if (it == p.dy.end() || it->second.is_zero()) continue;
      std::vector<YGen> rest_y;
      for (std::size_t q = 0; q < ys.size(); ++q)
        if (q != i) rest_y.push_back(ys[q]);
      int sgn = i % 2 == 0 ? 1 : -1;
      DgaElement frame;
      frame.add({{}, {}}, coeff * Polynomial::constant(sgn));
      DgaElement rest;
      rest.add({rest_y, ws}, Polynomial::constant(1));
      out += frame * it->second * rest;
    }
    // dw = 0 for all degree -1 generators.
  }
  return out;
}

bool differential_squares_to_zero(const DGAlgebraPresentation& p) {
  for (const auto& [lm, d] : p.dy)
    if (!differentiate(p, d).is_zero()) return false;
  for (const auto& d : p.dz)
    if (!differentiate(p, d).is_zero()) return false;
  return true;
}

DerivationSet derivations(const BraidWord& eta) {
  DGAlgebraPresentation p = build_dga(eta);
  DerivationSet out;
  for (int j = 1; j <= p.positives; ++j) out.zs.push_back(zvar(j));
  out.coeff.resize(p.negatives);
  for (int k = 1; k <= p.negatives; ++k) {
    out.coeff[k - 1].resize(p.positives);
    for (int j = 1; j <= p.positives; ++j)
      out.coeff[k - 1][j - 1] = p.dz_of(j).w_coefficient(k);
  }
  return out;
}

SliceElimination slice_eliminate(const BraidWord& eta, bool set_t) {
  DGAlgebraPresentation p = build_dga(eta, set_t);
  VarietyPresentation v = variety_braid_pair(eta);
  if (set_t) {
    auto subs = footnote_signs(p.beta.word());
    for (auto& e : v.equations) e = e.substitute(subs);
  }
  std::vector<std::vector<Polynomial>> coeff(p.negatives,
                                             std::vector<Polynomial>(p.positives));
  for (int k = 1; k <= p.negatives; ++k)
    for (int j = 1; j <= p.positives; ++j) coeff[k - 1][j - 1] = p.dz_of(j).w_coefficient(k);

  SliceElimination result;
  std::vector<bool> eliminated(p.positives + 1, false);
  for (int k = 1; k <= p.negatives; ++k) {
    int slice = 0;
    for (int j = 1; j <= p.positives && slice == 0; ++j)
      if (!eliminated[j] && coeff[k - 1][j - 1].is_unit()) slice = j;
    if (slice == 0)
      throw std::runtime_error("no unit-coefficient slice for w_" + std::to_string(k));
    Polynomial unit = coeff[k - 1][slice - 1];
    Polynomial uinv = unit.unit_inverse();
    std::map<Variable, Polynomial> kill{{zvar(slice), Polynomial::zero()}};
    for (auto& e : v.equations) e = e.substitute(kill);
    // Project the remaining fields along V(w_k) and restrict to the slice.
    for (int l = 1; l <= p.negatives; ++l) {
      if (l == k) continue;
      Polynomial factor = coeff[l - 1][slice - 1] * uinv;
      for (int j = 1; j <= p.positives; ++j) {
        coeff[l - 1][j - 1] -= factor * coeff[k - 1][j - 1];
        coeff[l - 1][j - 1] = coeff[l - 1][j - 1].substitute(kill);
      }
    }
    eliminated[slice] = true;
    result.slices.emplace_back(zvar(slice), k);
  }
  VarietyPresentation q;
  for (const auto& zv : v.ambient)
    if (!eliminated[zv.index]) q.ambient.push_back(zv);
  for (const auto& e : v.equations)
    if (!e.is_zero()) q.equations.push_back(e);
  q.label = "slice quotient of " + v.label;
  result.quotient = q;
  return result;
}

}  // namespace positroid
