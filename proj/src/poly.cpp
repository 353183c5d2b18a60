#include "positroid/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace positroid {

std::string to_string(const Variable& v) {
  return (v.family == Variable::Family::Z ? "z" : "t") + std::to_string(v.index);
}

Monomial::Monomial(std::vector<std::pair<Variable, int>> exps) : exps_(std::move(exps)) {
  std::sort(exps_.begin(), exps_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<Variable, int>> merged;
  for (const auto& [v, e] : exps_) {
    if (!merged.empty() && merged.back().first == v)
      merged.back().second += e;
    else
      merged.emplace_back(v, e);
  }
  std::erase_if(merged, [](const auto& p) { return p.second == 0; });
  for (const auto& [v, e] : merged)
    if (v.family == Variable::Family::Z && e < 0)
      throw std::invalid_argument("negative exponent on z-variable " + to_string(v));
  exps_ = std::move(merged);
}

Monomial Monomial::of(Variable v, int e) {
  if (e == 0) return Monomial();
  return Monomial({{v, e}});
}

int Monomial::exponent(const Variable& v) const {
  for (const auto& [w, e] : exps_)
    if (w == v) return e;
  return 0;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [v, e] : exps_) d += e;
  return d;
}

Monomial Monomial::times(const Monomial& o) const {
  std::vector<std::pair<Variable, int>> all = exps_;
  all.insert(all.end(), o.exps_.begin(), o.exps_.end());
  return Monomial(std::move(all));
}

bool Monomial::z_free() const {
  for (const auto& [v, e] : exps_)
    if (v.family == Variable::Family::Z) return false;
  return true;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
  // Graded order: total degree first, then lexicographic on (family, index)
  // with the higher power on the earliest differing variable sorting first.
  if (degree() != o.degree())
    return degree() < o.degree() ? std::strong_ordering::less : std::strong_ordering::greater;
  std::size_t i = 0, j = 0;
  while (i < exps_.size() && j < o.exps_.size()) {
    if (exps_[i].first != o.exps_[j].first) {
      // The side owning the earlier variable has a nonzero exponent there.
      if (exps_[i].first < o.exps_[j].first)
        return exps_[i].second > 0 ? std::strong_ordering::less : std::strong_ordering::greater;
      return o.exps_[j].second > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (exps_[i].second != o.exps_[j].second)
      return exps_[i].second > o.exps_[j].second ? std::strong_ordering::less
                                                 : std::strong_ordering::greater;
    ++i, ++j;
  }
  if (i < exps_.size())
    return exps_[i].second > 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  if (j < o.exps_.size())
    return o.exps_[j].second > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
  return std::strong_ordering::equal;
}

Polynomial Polynomial::constant(Int c) {
  Polynomial p;
  if (c != 0) p.terms_[Monomial::one()] = std::move(c);
  return p;
}

Polynomial Polynomial::term(Monomial m, Int c) {
  Polynomial p;
  if (c != 0) p.terms_[std::move(m)] = std::move(c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

bool Polynomial::is_unit() const {
  if (terms_.size() != 1) return false;
  const auto& [m, c] = *terms_.begin();
  return (c == 1 || c == -1) && m.z_free();
}

Polynomial Polynomial::unit_inverse() const {
  if (!is_unit()) throw std::domain_error("not a unit: " + to_string());
  const auto& [m, c] = *terms_.begin();
  std::vector<std::pair<Variable, int>> inv;
  for (const auto& [v, e] : m.exponents()) inv.emplace_back(v, -e);
  return term(Monomial(std::move(inv)), c);
}

Int Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Int(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial p;
  for (const auto& [m, c] : terms_) p.terms_[m] = -c;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial p;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) p.add_term(ma.times(mb), ca * cb);
  return p;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) return unit_inverse().pow(-e);
  Polynomial r = constant(1);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::set<Variable> Polynomial::variables() const {
  std::set<Variable> vs;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.exponents()) vs.insert(v);
  return vs;
}

bool Polynomial::depends_on(const Variable& v) const {
  for (const auto& [m, c] : terms_)
    if (m.exponent(v) != 0) return true;
  return false;
}

Polynomial Polynomial::substitute(const std::map<Variable, Polynomial>& bindings) const {
  Polynomial result;
  for (const auto& [m, c] : terms_) {
    Polynomial factor = constant(c);
    std::vector<std::pair<Variable, int>> untouched;
    for (const auto& [v, e] : m.exponents()) {
      auto it = bindings.find(v);
      if (it == bindings.end()) {
        untouched.emplace_back(v, e);
        continue;
      }
      if (e < 0 && !it->second.is_unit())
        throw std::domain_error("substituting inverted variable " + positroid::to_string(v) +
                                " by a non-invertible polynomial");
      factor = factor * it->second.pow(e);
    }
    result += factor * term(Monomial(std::move(untouched)), 1);
  }
  return result;
}

std::uint64_t mod_pow(std::uint64_t base, long long exp, std::uint64_t q) {
  base %= q;
  if (exp < 0) {
    base = mod_inverse(base, q);
    exp = -exp;
  }
  std::uint64_t r = 1;
  while (exp > 0) {
    if (exp & 1) r = r * base % q;
    base = base * base % q;
    exp >>= 1;
  }
  return r;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t q) {
  if (a % q == 0) throw std::domain_error("division by zero mod q");
  return mod_pow(a, static_cast<long long>(q) - 2, q);  // q prime
}

std::uint64_t Polynomial::eval_mod_p(const std::map<Variable, std::uint64_t>& assignment,
                                     std::uint64_t q) const {
  std::uint64_t total = 0;
  for (const auto& [m, c] : terms_) {
    Int cm = c % Int(q);
    if (cm < 0) cm += q;
    std::uint64_t val = cm.convert_to<std::uint64_t>();
    for (const auto& [v, e] : m.exponents()) {
      auto it = assignment.find(v);
      if (it == assignment.end())
        throw std::invalid_argument("missing assignment for " + positroid::to_string(v));
      std::uint64_t x = it->second % q;
      if (v.family == Variable::Family::T && x == 0)
        throw std::domain_error("zero value for invertible variable " + positroid::to_string(v));
      val = val * mod_pow(x, e, q) % q;
    }
    total = (total + val) % q;
  }
  return total;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Int a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool coeff_shown = false;
    if (a != 1 || m.is_one()) {
      os << a.str();
      coeff_shown = true;
    }
    bool anyvar = false;
    for (const auto& [v, e] : m.exponents()) {
      if (coeff_shown || anyvar) os << "*";
      os << positroid::to_string(v);
      if (e != 1) os << "^" << e;
      anyvar = true;
    }
  }
  return os.str();
}

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("polynomial parse error at position " + std::to_string(pos) +
                                ": " + what);
  }
  Int integer() {
    skip_ws();
    bool neg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) neg = s[pos++] == '-';
    skip_ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("digit expected");
    Int v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      v = v * 10 + (s[pos++] - '0');
    return neg ? -v : v;
  }
  Polynomial factor() {
    skip_ws();
    if (pos < s.size() && (s[pos] == 'z' || s[pos] == 't')) {
      auto family = s[pos] == 'z' ? Variable::Family::Z : Variable::Family::T;
      ++pos;
      if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
        fail("variable index expected");
      int idx = 0;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        idx = idx * 10 + (s[pos++] - '0');
      int e = 1;
      if (eat('^')) e = static_cast<int>(integer());
      return Polynomial::term(Monomial::of(Variable{family, idx}, e), 1);
    }
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      return Polynomial::constant(integer());
    fail("factor expected");
  }
  Polynomial product() {
    Polynomial p = factor();
    while (eat('*')) p = p * factor();
    return p;
  }
  Polynomial sum() {
    skip_ws();
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    Polynomial p = product();
    if (neg) p = -p;
    for (;;) {
      skip_ws();
      if (eat('+'))
        p += product();
      else if (eat('-'))
        p -= product();
      else
        break;
    }
    skip_ws();
    if (pos != s.size()) fail("trailing input");
    return p;
  }
};

}  // namespace

Polynomial Polynomial::parse(const std::string& text) {
  Parser p{text};
  return p.sum();
}

}  // namespace positroid
