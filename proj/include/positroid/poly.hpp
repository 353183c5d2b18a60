#ifndef POSITROID_POLY_HPP
#define POSITROID_POLY_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace positroid {

using Int = boost::multiprecision::cpp_int;

// Two variable families: ordinary z-variables (exponents >= 0) and
// invertible ground t-variables (signed exponents, Laurent).
struct Variable {
  enum class Family : std::uint8_t { Z = 0, T = 1 };
  Family family = Family::Z;
  int index = 1;

  friend auto operator<=>(const Variable&, const Variable&) = default;
};

inline Variable zvar(int i) { return Variable{Variable::Family::Z, i}; }
inline Variable tvar(int i) { return Variable{Variable::Family::T, i}; }

std::string to_string(const Variable& v);

// Product of variable powers, kept sorted by variable. Z-exponents must be
// positive here (zero exponents are dropped); T-exponents may be negative.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::pair<Variable, int>> exps);

  static Monomial one() { return Monomial(); }
  static Monomial of(Variable v, int e = 1);

  bool is_one() const { return exps_.empty(); }
  int exponent(const Variable& v) const;
  const std::vector<std::pair<Variable, int>>& exponents() const { return exps_; }
  int degree() const;

  Monomial times(const Monomial& o) const;
  bool z_free() const;  // only T-variables

  std::strong_ordering operator<=>(const Monomial& o) const;
  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }

 private:
  std::vector<std::pair<Variable, int>> exps_;
};

// Sparse multivariate polynomial over the integers in z- and t-variables,
// with t's inverted freely. Canonical term order makes equality structural.
class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial zero() { return Polynomial(); }
  static Polynomial constant(Int c);
  static Polynomial constant(long c) { return constant(Int(c)); }
  static Polynomial variable(Variable v) { return term(Monomial::of(v), 1); }
  static Polynomial term(Monomial m, Int c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // A unit of Z[t^+-][z]: single term, coefficient +-1, t-variables only.
  bool is_unit() const;
  Polynomial unit_inverse() const;

  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Int>& terms() const { return terms_; }
  Int coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

  Polynomial pow(int e) const;  // e >= 0, or e < 0 for units

  std::set<Variable> variables() const;
  bool depends_on(const Variable& v) const;

  // Simultaneous substitution; unbound variables stay. Substituting a
  // variable that occurs with a negative exponent requires a unit image.
  Polynomial substitute(const std::map<Variable, Polynomial>& bindings) const;

  // Value in F_q. Every variable must be assigned; T-variables nonzero.
  std::uint64_t eval_mod_p(const std::map<Variable, std::uint64_t>& assignment,
                           std::uint64_t q) const;

  std::string to_string() const;
  static Polynomial parse(const std::string& text);

 private:
  void add_term(const Monomial& m, const Int& c);
  std::map<Monomial, Int> terms_;
};

std::uint64_t mod_pow(std::uint64_t base, long long exp, std::uint64_t q);
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t q);

}  // namespace positroid

#endif
