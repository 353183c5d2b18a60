#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "positroid/positroid_data.hpp"

using namespace positroid;

namespace {

PositroidPair intro_pair() {
  PositroidPair p;
  p.n = 7;
  p.k = 3;
  p.u = Permutation({1, 3, 4, 2, 5, 6, 7});
  p.w = Permutation({4, 5, 1, 6, 7, 2, 3});
  return p;
}

AffinePermutation intro_f() { return AffinePermutation(7, {3, 5, 8, 6, 7, 11, 9}); }

PositroidPair markov44_pair() {
  // (k, n) = (4, 6), lambda = (2,2,2,2), u = s3 s4 s2
  PositroidPair p;
  p.n = 6;
  p.k = 4;
  p.w = grassmannian_from_partition({2, 2, 2, 2}, 4, 6);
  Permutation s2 = Permutation::transposition(6, 2);
  Permutation s3 = Permutation::transposition(6, 3);
  Permutation s4 = Permutation::transposition(6, 4);
  p.u = s3.compose(s4).compose(s2);
  return p;
}

std::vector<AffinePermutation> random_bounded(int n, int count, std::mt19937& rng) {
  std::vector<AffinePermutation> out;
  auto perms = all_permutations(n);
  std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  while (static_cast<int>(out.size()) < count) {
    // f(i) = pi(i) + n * lift(i) for a random permutation and random lifts
    const Permutation& pi = perms[pick(rng)];
    std::vector<long> window(n);
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i) {
      int base = pi(i);
      long v = base + (coin(rng) ? n : 0);
      if (v < i || v > i + n) {
        if (base + n <= i + n && base + n >= i)
          v = base + n;
        else if (base >= i && base <= i + n)
          v = base;
        else
          ok = false;
      }
      window[i - 1] = v;
    }
    if (!ok) continue;
    AffinePermutation f(n, window);
    if (f.is_bounded()) out.push_back(f);
  }
  return out;
}

}  // namespace

TEST_CASE("pair to affine on the intro pair") {
  CHECK(pair_to_affine(intro_pair()) == intro_f());
  PositroidPair trivial{5, 2, Permutation::identity(5), Permutation::identity(5)};
  CHECK(pair_to_affine(trivial) == translation_element(2, 5));
  // u = id, w = max k-Grassmannian: f(i) = i + k
  PositroidPair maxp{7, 3, Permutation::identity(7),
                     grassmannian_from_partition({4, 4, 4}, 3, 7)};
  AffinePermutation f = pair_to_affine(maxp);
  for (int i = 1; i <= 7; ++i) CHECK(f(i) == i + 3);
}

TEST_CASE("affine to pair") {
  PositroidPair p = affine_to_pair(intro_f());
  CHECK(p.u == intro_pair().u);
  CHECK(p.w == intro_pair().w);
  CHECK(p.k == 3);

  PositroidPair tk = affine_to_pair(translation_element(3, 7));
  CHECK(tk.u.is_identity());
  CHECK(tk.w.is_identity());

  // f(i) = i + k gives the maximal k-Grassmannian w with u the identity
  AffinePermutation shift(7, {4, 5, 6, 7, 8, 9, 10});
  PositroidPair sp = affine_to_pair(shift);
  CHECK(sp.u.is_identity());
  CHECK(sp.w == grassmannian_from_partition({4, 4, 4}, 3, 7));
}

TEST_CASE("rank matrix values from the intro figure") {
  CyclicRankMatrix r = affine_to_rank(intro_f());
  CHECK(r.at(1, 1) == 1);
  CHECK(r.at(1, 3) == 2);
  CHECK(r.at(4, 6) == 2);
  CHECK(r.at(3, 5) == 3);
  CHECK(r.at(1, 4) == 3);
  CHECK(r.at(2, 1) == 0);
  CHECK(r.at(1, 10) == 3);
  CHECK(r.at(8, 8) == 1);  // periodic copy of (1,1)
  CHECK_FALSE(r.violation().has_value());
  CHECK(rank_to_affine(r) == intro_f());
}

TEST_CASE("rank round trips on random bounded permutations") {
  std::mt19937 rng(31);
  for (int n = 2; n <= 7; ++n)
    for (const auto& f : random_bounded(n, 20, rng)) {
      CHECK(rank_to_affine(affine_to_rank(f)) == f);
      auto p = affine_to_pair(f);
      CHECK(pair_to_affine(p) == f);
    }
}

TEST_CASE("t1 rank matrix for two strands") {
  AffinePermutation f(2, {3, 2});
  CyclicRankMatrix r = affine_to_rank(f);
  // the defining corner condition recovers f cell by cell
  CHECK(rank_to_affine(r) == f);
  CHECK(r.at(1, 1) == 1);
  CHECK(r.at(2, 2) == 0);  // fixed point
}

TEST_CASE("le diagram of the markov example") {
  LeDiagram d = pair_to_le(markov44_pair());
  CHECK(d.lambda == std::vector<int>({2, 2, 2, 2}));
  CHECK(d.dots.size() == 5);
  CHECK(d.has_dot(1, 1));
  CHECK(d.has_dot(4, 1));
  CHECK(d.has_dot(1, 2));
  CHECK(d.has_dot(3, 2));
  CHECK(d.has_dot(4, 2));
  CHECK_FALSE(d.violation().has_value());
  PositroidPair back = le_to_pair(d);
  CHECK(back.u == markov44_pair().u);
  CHECK(back.w == markov44_pair().w);
}

TEST_CASE("le diagram basics") {
  // u identity: all cells dotted
  PositroidPair p{6, 2, Permutation::identity(6), grassmannian_from_partition({3, 2}, 2, 6)};
  LeDiagram d = pair_to_le(p);
  CHECK(static_cast<int>(d.dots.size()) == 5);

  // cells minus dots = length of u
  for (auto& pr : all_positroid_pairs(2, 4)) {
    LeDiagram dd = pair_to_le(pr);
    int cells = 0;
    for (int part : dd.lambda) cells += part;
    CHECK(cells - static_cast<int>(dd.dots.size()) == pr.u.length());
    CHECK(is_k_grassmannian(pr.w, pr.k));
    CHECK(pr.w.length() == cells);
  }
}

TEST_CASE("le condition violations") {
  LeDiagram bad;
  bad.k = 2;
  bad.n = 4;
  bad.lambda = {2, 2};
  bad.dots = {{1, 2}, {2, 1}};
  auto v = bad.violation();
  REQUIRE(v.has_value());
  CHECK(v->find("Le condition") != std::string::npos);
  bad.dots.insert({2, 2});
  CHECK_FALSE(bad.violation().has_value());
}

TEST_CASE("ascii rendering") {
  LeDiagram d = pair_to_le(markov44_pair());
  std::string ascii = d.to_ascii();
  CHECK(ascii == "**\n.*\n..\n**");
  LeDiagram back = LeDiagram::from_ascii(4, 6, ascii);
  CHECK(back.lambda == d.lambda);
  CHECK(back.dots == d.dots);
}

TEST_CASE("inductive case analysis") {
  LeDiagram one;
  one.k = 1;
  one.n = 2;
  one.lambda = {1};
  one.dots = {{1, 1}};
  CHECK(le_inductive_case(one).kind == LeCase::TopAdjustedLastColumn);

  LeDiagram ec;
  ec.k = 2;
  ec.n = 4;
  ec.lambda = {2, 2};
  ec.dots = {{1, 1}, {2, 1}};
  auto c = le_inductive_case(ec);
  CHECK(c.kind == LeCase::EmptyColumn);
  CHECK(c.index == 2);

  CHECK(le_inductive_case(pair_to_le(markov44_pair())).kind == LeCase::EmptyRow);

  LeDiagram fig9b = pair_to_le(markov44_pair());
  fig9b.dots.insert({2, 2});
  CHECK(le_inductive_case(fig9b).kind == LeCase::TopAdjustedLastColumn);

  LeDiagram empty;
  empty.k = 2;
  empty.n = 4;
  CHECK(le_inductive_case(empty).kind == LeCase::Empty);
}

TEST_CASE("le empty lemma") {
  for (int n = 3; n <= 5; ++n)
    for (auto& p : all_positroid_pairs(n)) {
      LeDiagram d = pair_to_le(p);
      AffinePermutation f = pair_to_affine(p);
      bool has_empty_col = false, has_empty_row = false;
      for (int c = 1; c <= d.columns(); ++c)
        if (d.column_dot_rows(c).empty()) has_empty_col = true;
      for (int r = 1; r <= d.rows(); ++r) {
        bool empty = true;
        for (int c = 1; c <= d.lambda[r - 1]; ++c)
          if (d.has_dot(r, c)) empty = false;
        if (empty) has_empty_row = true;
      }
      bool fixed = false, full = false;
      for (int i = 1; i <= n; ++i) {
        if (f(i) == i) fixed = true;
        if (f(i) == i + n) full = true;
      }
      if (has_empty_col) CHECK(fixed);
      if (has_empty_row) CHECK(full);
    }
}

TEST_CASE("bijection round trips exhaustively") {
  std::vector<std::pair<int, int>> sizes{{1, 3}, {2, 4}, {1, 4}, {2, 5}, {3, 5}};
  for (auto [k, n] : sizes) {
    for (auto& p : all_positroid_pairs(k, n)) {
      CHECK_FALSE(p.violation().has_value());
      AffinePermutation f = pair_to_affine(p);
      PositroidPair p2 = affine_to_pair(f);
      CHECK(p2.u == p.u);
      CHECK(p2.w == p.w);
      CHECK(rank_to_affine(affine_to_rank(f)) == f);
      PositroidPair p3 = le_to_pair(pair_to_le(p));
      CHECK(p3.u == p.u);
      CHECK(p3.w == p.w);
      // the triangle commutes: rank via affine twice
      CHECK(affine_to_rank(pair_to_affine(p2)) == affine_to_rank(f));
    }
  }
}

TEST_CASE("validation reports") {
  CHECK_FALSE(intro_pair().violation().has_value());
  AffinePermutation bad(3, {2, 1, 6});
  CHECK(bad.bounded_violation().has_value());
  PositroidPair notgrass{3, 1, Permutation::identity(3), Permutation({3, 2, 1})};
  CHECK(notgrass.violation().has_value());
  PositroidPair notbelow{3, 1, Permutation({3, 1, 2}), Permutation({2, 1, 3})};
  CHECK(notbelow.violation().has_value());
}
