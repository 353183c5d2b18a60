#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "positroid/braid.hpp"

using namespace positroid;

namespace {

BraidWord W(int n, const std::string& body) { return parse_braid("n=" + std::to_string(n) + ":" + body); }

}  // namespace

TEST_CASE("braid grammar round trip") {
  BraidWord intro = W(7, " s3 s2 s1 s4 s3 s2 s5 s4 s6 s5 s3^-1 s2^-1");
  CHECK(intro.length() == 12);
  CHECK(intro.letters[10].index == 3);
  CHECK_FALSE(intro.letters[10].positive);
  CHECK(parse_braid(render_braid(intro)) == intro);

  CHECK(W(2, "") == BraidWord::identity(2));
  CHECK(W(3, " s1 s2 s1") == half_twist(3));
  CHECK_THROWS(parse_braid("n=3: s3"));
  CHECK_THROWS(parse_braid("n=3: q1"));
}

TEST_CASE("half twist words") {
  CHECK(half_twist(2) == W(2, " s1"));
  CHECK(half_twist(3) == W(3, " s1 s2 s1"));
  CHECK(half_twist(4) == W(4, " s1 s2 s1 s3 s2 s1"));
  CHECK(half_twist(4).length() == 6);
  CHECK(coxeter_projection(half_twist(5)) == Permutation::longest(5));
}

TEST_CASE("interval, opposite, inverse") {
  CHECK(interval_word(2, 4, 6) == W(6, " s4 s3 s2"));
  BraidWord b = W(4, " s1 s2^-1 s3");
  CHECK(b.opposite() == W(4, " s3 s2^-1 s1"));
  CHECK(b.opposite().opposite() == b);
  CHECK(b.inverse() == W(4, " s3^-1 s2 s1^-1"));
}

TEST_CASE("coxeter projection") {
  CHECK(coxeter_projection(W(3, " s1 s2 s1")) == Permutation({3, 2, 1}));
  CHECK(coxeter_projection(W(7, " s3 s2 s1 s4 s3 s2 s5 s4 s6 s5")) ==
        Permutation({4, 5, 1, 6, 7, 2, 3}));
  CHECK(coxeter_projection(W(3, "")) == Permutation::identity(3));
}

TEST_CASE("positive lifts") {
  Permutation w({4, 5, 1, 6, 7, 2, 3});
  CHECK(positive_lift(w, LiftStrategy::ColumnReading) ==
        W(7, " s3 s2 s1 s4 s3 s2 s5 s4 s6 s5"));
  CHECK(positive_lift(w, LiftStrategy::RowReading) ==
        W(7, " s3 s4 s5 s6 s2 s3 s4 s5 s1 s2"));
  CHECK(positive_lift(Permutation::identity(4), LiftStrategy::ColumnReading) ==
        BraidWord::identity(4));
  // lambda = (4,3,1), k = 3, n = 7
  Permutation wl = grassmannian_from_partition({4, 3, 1}, 3, 7);
  CHECK(positive_lift(wl, LiftStrategy::ColumnReading) ==
        W(7, " s3 s2 s1 s4 s3 s5 s4 s6"));
  CHECK(positive_lift(wl, LiftStrategy::RowReading) == W(7, " s3 s4 s5 s6 s2 s3 s4 s1"));
  CHECK(coxeter_projection(positive_lift(wl, LiftStrategy::RowReading)) == wl);
  CHECK(wl.length() == 8);
}

TEST_CASE("lift invariants across small symmetric groups") {
  std::mt19937 rng(3);
  for (int n = 2; n <= 5; ++n) {
    for (const auto& w : all_permutations(n)) {
      BraidWord lift = positive_lift(w, LiftStrategy::LexLeast);
      CHECK(coxeter_projection(lift) == w);
      CHECK(static_cast<int>(lift.length()) == w.length());
    }
  }
  // sampled checks for n = 6
  auto perms = all_permutations(6);
  std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
  for (int t = 0; t < 50; ++t) {
    const auto& w = perms[pick(rng)];
    CHECK(coxeter_projection(positive_lift(w, LiftStrategy::LexLeast)) == w);
  }
}

TEST_CASE("bruhat order") {
  Permutation u({1, 3, 4, 2, 5, 6, 7});
  Permutation w({4, 5, 1, 6, 7, 2, 3});
  CHECK(bruhat_leq(u, w));
  CHECK(bruhat_leq(w, w));
  CHECK_FALSE(bruhat_leq(Permutation({2, 1, 3}), Permutation({1, 3, 2})));
  for (int n = 2; n <= 4; ++n)
    for (const auto& a : all_permutations(n))
      for (const auto& b : all_permutations(n))
        CHECK(bruhat_leq(a, b) == bruhat_leq_bruteforce(a, b));
}

TEST_CASE("k-grassmannian tests") {
  Permutation w({4, 5, 1, 6, 7, 2, 3});
  CHECK(is_k_grassmannian(w, 3));
  CHECK_FALSE(is_k_grassmannian(w, 2));
  CHECK(is_k_grassmannian(Permutation::identity(5), 2));
  CHECK_FALSE(is_k_grassmannian(Permutation({2, 1, 3}), 2));
  CHECK(grassmannian_partition(w, 3) == std::vector<int>({4, 4, 2}));
  CHECK(grassmannian_from_partition({4, 4, 2}, 3, 7) == w);
  CHECK(transpose_partition({4, 4, 2}) == std::vector<int>({3, 3, 2, 2}));
}

TEST_CASE("demazure product") {
  CHECK(demazure_product(W(2, " s1 s1")) == Permutation({2, 1}));
  CHECK(demazure_product(W(3, " s1 s2 s1 s2")) == Permutation({3, 2, 1}));
  for (int n = 2; n <= 4; ++n)
    for (const auto& w : all_permutations(n))
      CHECK(demazure_product(positive_lift(w, LiftStrategy::LexLeast)) == w);
  CHECK_THROWS(demazure_product(W(2, " s1^-1")));
}

TEST_CASE("jump set") {
  // beta(w_k) Delta_4 with beta(w_k) the 8-crossing reverse-family word
  std::vector<Letter> ls;
  for (int rep = 0; rep < 4; ++rep) {
    ls.push_back(Letter{3, true});
    ls.push_back(Letter{2, true});
  }
  BraidWord gamma(4, ls);
  BraidWord beta = gamma.concat(half_twist(4));
  auto jumps = jump_set(beta);
  std::vector<int> expect;
  for (int i = 1; i <= 8; ++i) expect.push_back(i);
  CHECK(jumps == expect);
  CHECK_THROWS(jump_set(W(3, " s1 s1")));
}

TEST_CASE("affine permutations") {
  AffinePermutation f(7, {3, 5, 8, 6, 7, 11, 9});
  CHECK(f.is_bounded());
  CHECK(f.k() == 3);
  CHECK(f(8) == 10);
  CHECK(f(0) == 2);
  CHECK(f.preimage(11) == 6);
  AffinePermutation bad(3, {2, 1, 6});
  auto v = bad.bounded_violation();
  REQUIRE(v.has_value());
  CHECK(v->find("i=2") != std::string::npos);
  CHECK(AffinePermutation::parse("k=3 f=[3,5,8,6,7,11,9]") == f);
  CHECK(AffinePermutation::parse(f.to_string()) == f);
}
