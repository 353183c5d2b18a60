#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "positroid/poly.hpp"

using namespace positroid;

namespace {

Polynomial Z(int i) { return Polynomial::variable(zvar(i)); }
Polynomial T(int i) { return Polynomial::variable(tvar(i)); }
Polynomial C(long c) { return Polynomial::constant(c); }

Polynomial random_poly(std::mt19937& rng, int maxvars = 4, int maxdeg = 4, int terms = 4) {
  std::uniform_int_distribution<int> coin(0, 1), coeff(-3, 3), deg(0, 2);
  Polynomial p;
  for (int t = 0; t < terms; ++t) {
    std::vector<std::pair<Variable, int>> exps;
    int total = 0;
    for (int v = 1; v <= maxvars && total < maxdeg; ++v) {
      int e = deg(rng);
      if (e > 0 && coin(rng)) {
        exps.emplace_back(zvar(v), e);
        total += e;
      }
    }
    p += Polynomial::term(Monomial(std::move(exps)), coeff(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("additive inverse and like-term merge") {
  CHECK((Z(1) + (-Z(1))).is_zero());
  Polynomial p = C(1) + Z(1) * Z(2);
  CHECK(p + Z(1) * Z(2) == C(1) + C(2) * Z(1) * Z(2));
}

TEST_CASE("the dy11 sum of the two-strand example") {
  // z3 + (1 + z3 z4) z5
  Polynomial lhs = Z(3) + (C(1) + Z(3) * Z(4)) * Z(5);
  CHECK(lhs == Z(3) + Z(5) + Z(3) * Z(4) * Z(5));
}

TEST_CASE("multiplication basics") {
  CHECK(Z(1) * C(1) == Z(1));
  CHECK(((C(1) + Z(1) * Z(2)) * C(0)).is_zero());
  CHECK((Z(1) + Z(2)) * Z(3) == Z(1) * Z(3) + Z(2) * Z(3));
}

TEST_CASE("substitution") {
  Polynomial z3p = Z(3);
  std::map<Variable, Polynomial> rii{{zvar(3), Z(3) + Z(1) * Z(2)}};
  CHECK(z3p.substitute(rii) == Z(3) + Z(1) * Z(2));
  CHECK(Z(1).substitute({}) == Z(1));
  Polynomial p = Z(1) + Z(3) * (C(1) + Z(1) * Z(2));
  CHECK(p.substitute({{zvar(1), Polynomial::zero()}}) == Z(3));
}

TEST_CASE("substitution respects invertibility") {
  Polynomial p = Polynomial::term(Monomial::of(tvar(1), -1), 1);
  CHECK_THROWS(p.substitute({{tvar(1), Z(1) + C(1)}}));
  Polynomial q = p.substitute({{tvar(1), -T(2)}});
  CHECK(q == -Polynomial::term(Monomial::of(tvar(2), -1), 1));
}

TEST_CASE("evaluation mod p") {
  Polynomial p = Z(1) + Z(3) * (C(1) + Z(1) * Z(2));
  std::map<Variable, std::uint64_t> a{{zvar(1), 0}, {zvar(2), 0}, {zvar(3), 0}};
  CHECK(p.eval_mod_p(a, 3) == 0);
  Polynomial q = C(1) + Z(1) * Z(2);
  CHECK(q.eval_mod_p({{zvar(1), 1}, {zvar(2), 2}}, 3) == 0);
  CHECK(T(1).eval_mod_p({{tvar(1), 2}}, 5) == 2);
  CHECK_THROWS(T(1).eval_mod_p({{tvar(1), 0}}, 5));
  CHECK_THROWS(Z(1).eval_mod_p({}, 5));
  Polynomial inv = Polynomial::term(Monomial::of(tvar(1), -1), 1);
  CHECK(inv.eval_mod_p({{tvar(1), 2}}, 5) == 3);
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    Polynomial a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("substitute is a ring homomorphism") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial a = random_poly(rng), b = random_poly(rng);
    std::map<Variable, Polynomial> bind{{zvar(1), random_poly(rng, 3, 2, 2)},
                                        {zvar(2), random_poly(rng, 3, 2, 2)}};
    CHECK((a * b).substitute(bind) == a.substitute(bind) * b.substitute(bind));
    CHECK((a + b).substitute(bind) == a.substitute(bind) + b.substitute(bind));
  }
}

TEST_CASE("evaluation commutes with arithmetic and substitution") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<std::uint64_t> val(0, 4);
  const std::uint64_t q = 5;
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial a = random_poly(rng), b = random_poly(rng);
    std::map<Variable, std::uint64_t> assign;
    for (int v = 1; v <= 4; ++v) assign[zvar(v)] = val(rng);
    CHECK((a + b).eval_mod_p(assign, q) ==
          (a.eval_mod_p(assign, q) + b.eval_mod_p(assign, q)) % q);
    CHECK((a * b).eval_mod_p(assign, q) ==
          (a.eval_mod_p(assign, q) * b.eval_mod_p(assign, q)) % q);
    std::map<Variable, Polynomial> bind{{zvar(1), random_poly(rng, 3, 2, 2)}};
    std::map<Variable, std::uint64_t> pushed = assign;
    pushed[zvar(1)] = bind[zvar(1)].eval_mod_p(assign, q);
    CHECK(a.substitute(bind).eval_mod_p(assign, q) == a.eval_mod_p(pushed, q));
  }
}

TEST_CASE("text round trip") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    Polynomial p = random_poly(rng);
    CHECK(Polynomial::parse(p.to_string()) == p);
  }
  CHECK(Polynomial::parse("1 + z1*z2") == C(1) + Z(1) * Z(2));
  CHECK(Polynomial::parse("t1^-1*z3") ==
        Polynomial::term(Monomial::of(tvar(1), -1).times(Monomial::of(zvar(3))), 1));
  CHECK((C(1) + Z(1) * Z(2)).to_string() == "1 + z1*z2");
  CHECK(Polynomial::parse("-z1 - 2*z2^2") == -Z(1) - C(2) * Z(2) * Z(2));
}
