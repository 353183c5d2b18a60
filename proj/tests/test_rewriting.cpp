#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "positroid/positroid_braids.hpp"
#include "positroid/rewriting.hpp"

using namespace positroid;

namespace {

BraidWord W(int n, const std::string& body) { return parse_braid("n=" + std::to_string(n) + ":" + body); }

PositroidPair intro_pair() {
  return PositroidPair{7, 3, Permutation({1, 3, 4, 2, 5, 6, 7}), Permutation({4, 5, 1, 6, 7, 2, 3})};
}

PositroidPair markov44_pair() {
  PositroidPair p;
  p.n = 6;
  p.k = 4;
  p.w = grassmannian_from_partition({2, 2, 2, 2}, 4, 6);
  p.u = Permutation::transposition(6, 3)
            .compose(Permutation::transposition(6, 4))
            .compose(Permutation::transposition(6, 2));
  return p;
}

}  // namespace

TEST_CASE("elementary moves") {
  BraidWord w = W(3, " s1 s2 s1");
  CHECK(apply_move(w, Move{MoveKind::RIII, 1}) == W(3, " s2 s1 s2"));
  CHECK_THROWS(apply_move(W(3, " s1 s2 s2"), Move{MoveKind::RIII, 1}));
  CHECK_THROWS(apply_move(W(3, " s1 s2^-1 s1"), Move{MoveKind::RIII, 1}));

  CHECK(apply_move(W(2, " s1 s1^-1"), Move{MoveKind::RIIRemove, 1}) == W(2, ""));
  CHECK_THROWS(apply_move(W(2, " s1 s1"), Move{MoveKind::RIIRemove, 1}));
  BraidWord ins = apply_move(W(2, " s1"), Move{MoveKind::RIIInsert, 2, 1, false, true});
  CHECK(ins == W(2, " s1 s1^-1 s1"));

  CHECK(apply_move(W(4, " s1 s3"), Move{MoveKind::Commute, 1}) == W(4, " s3 s1"));
  CHECK_THROWS(apply_move(W(4, " s1 s2"), Move{MoveKind::Commute, 1}));

  // Delta conjugation flips the index through n - i
  BraidWord conj = apply_move(W(4, " s2 s1 s3"), Move{MoveKind::DeltaConjugate, 0, 0, true, true});
  CHECK(conj == W(4, " s1 s3 s2"));
  BraidWord conj2 = apply_move(W(4, " s1 s3"), Move{MoveKind::DeltaConjugate, 0, 0, true, true});
  CHECK(conj2 == W(4, " s3 s3"));

  CHECK(apply_move(W(3, " s1 s2"), Move{MoveKind::CyclicRotate, 0, 0, true, true}) ==
        W(3, " s2 s1"));
  CHECK(apply_move(W(3, " s1 s2"), Move{MoveKind::CyclicRotate, 0, 0, true, false}) ==
        W(3, " s2 s1"));

  BraidWord stab = apply_move(W(2, " s1"), Move{MoveKind::PosStabilize, 0});
  CHECK(stab == W(3, " s1 s2"));
  CHECK(apply_move(stab, Move{MoveKind::PosDestabilize, 2}) == W(2, " s1"));
  CHECK_THROWS(apply_move(W(3, " s2 s1 s2"), Move{MoveKind::PosDestabilize, 1}));

  CHECK(apply_move(W(2, " s1"), Move{MoveKind::AddDisjointStrand, 0}) == W(3, " s1"));
  CHECK(apply_move(W(3, " s1"), Move{MoveKind::RemoveDisjointStrand, 0}) == W(2, " s1"));
  CHECK_THROWS(apply_move(W(3, " s2"), Move{MoveKind::RemoveDisjointStrand, 0}));
}

TEST_CASE("replay verifies traces") {
  MoveTrace t;
  t.start = W(3, " s1 s2 s1");
  t.moves = {Move{MoveKind::RIII, 1}};
  t.end = W(3, " s2 s1 s2");
  CHECK_FALSE(replay(t).has_value());
  t.end = W(3, " s1 s2 s1");
  CHECK(replay(t) == 2);  // end mismatch reported one past the moves
  MoveTrace empty{W(2, " s1"), {}, W(2, " s1")};
  CHECK_FALSE(replay(empty).has_value());
}

TEST_CASE("rii insert then remove is the identity") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> idx(1, 2), coin(0, 1);
  for (int t = 0; t < 50; ++t) {
    std::vector<Letter> ls;
    for (int i = 0; i < 5; ++i) ls.push_back(Letter{idx(rng), coin(rng) == 1});
    BraidWord w(3, ls);
    int pos = 1 + t % 6;
    Move ins{MoveKind::RIIInsert, pos, idx(rng), coin(rng) == 1, true};
    BraidWord w2 = apply_move(w, ins);
    CHECK(apply_move(w2, Move{MoveKind::RIIRemove, pos}) == w);
  }
}

TEST_CASE("sliding lemma") {
  // sigma_[k,c] s_k^{-1} = sigma_[k+1,c]
  SlideResult s1 = slide(2, 4, W(6, " s2"), 6);
  CHECK(s1.b == 3);
  CHECK(s1.upsilon.length() == 0);
  CHECK_FALSE(replay(s1.trace).has_value());
  CHECK(s1.trace.end == interval_word(3, 4, 6));

  // sigma_[l,c] s_k^{-1} = s_{k-1}^{-1} sigma_[l,c] for l < k
  SlideResult s2 = slide(2, 5, W(6, " s4"), 6);
  CHECK(s2.b == 2);
  CHECK(s2.upsilon == W(6, " s3"));
  CHECK_FALSE(replay(s2.trace).has_value());
  CHECK(s2.trace.end == W(6, " s3^-1 s5 s4 s3 s2"));

  // first step of the markov example: (s5 s4 s3 s2)(s2^-1 s4^-1)
  SlideResult s3 = slide(2, 5, W(6, " s4 s2"), 6);
  CHECK_FALSE(replay(s3.trace).has_value());
  CHECK(s3.b == 3);
  CHECK(s3.upsilon == W(6, " s3"));
  CHECK(s3.trace.end == W(6, " s3^-1 s5 s4 s3"));
}

TEST_CASE("nested interval exchange") {
  // single letter: s2 sigma_[1,3] = sigma_[1,3] s3
  MoveTrace t = nested_exchange(1, 3, 3, 3, true, 4);
  CHECK(t.start == W(4, " s2 s3 s2 s1"));
  CHECK(t.end == W(4, " s3 s2 s1 s3"));
  CHECK_FALSE(replay(t).has_value());

  MoveTrace tn = nested_exchange(1, 3, 3, 3, false, 4);
  CHECK(tn.start == W(4, " s2^-1 s3 s2 s1"));
  CHECK(tn.end == W(4, " s3 s2 s1 s3^-1"));
  CHECK_FALSE(replay(tn).has_value());

  // block case: sigma_[2,3] sigma_[1,4] = sigma_[1,4] sigma_[3,4]
  MoveTrace tb = nested_exchange(1, 3, 4, 4, true, 5);
  CHECK(tb.start == W(5, " s3 s2 s4 s3 s2 s1"));
  CHECK(tb.end == W(5, " s4 s3 s2 s1 s4 s3"));
  CHECK_FALSE(replay(tb).has_value());

  // degenerate a = b-1, c = d
  MoveTrace td = nested_exchange(2, 3, 3, 3, true, 5);
  CHECK_FALSE(replay(td).has_value());
  CHECK(coxeter_projection(td.start) == coxeter_projection(td.end));
}

TEST_CASE("markov reduction of the markov example") {
  MarkovReduction mr = markov_reduce(markov44_pair());
  CHECK_FALSE(replay(mr.trace).has_value());
  CHECK(mr.trace.start == richardson_braid(markov44_pair()));
  CHECK(mr.reduced == W(4, " s2^-1 s3 s2 s2^-1 s3 s2 s1"));
  CHECK(mr.reduced.strands == 4);
}

TEST_CASE("markov reduction of the intro pair") {
  MarkovReduction mr = markov_reduce(intro_pair());
  CHECK_FALSE(replay(mr.trace).has_value());
  CHECK(mr.trace.start == richardson_braid(intro_pair()));
  CHECK(mr.reduced.strands == 3);
  CHECK(mr.reduced.writhe() == 10 - 2 - 4);
}

TEST_CASE("markov reduction replays across small pairs") {
  for (int n = 3; n <= 6; ++n)
    for (auto& p : all_positroid_pairs(n)) {
      MarkovReduction mr = markov_reduce(p);
      CHECK_FALSE(replay(mr.trace).has_value());
      CHECK(mr.reduced.strands == std::max(p.k, 1));
    }
}

TEST_CASE("markov reduction with u = 1 gives the interval normal form") {
  // lambda = (n-k)^k: reduced word (s_{k-1} ... s_1)^{n-k}
  PositroidPair p{5, 3, Permutation::identity(5),
                  grassmannian_from_partition({2, 2, 2}, 3, 5)};
  MarkovReduction mr = markov_reduce(p);
  CHECK(mr.reduced == W(3, " s2 s1 s2 s1"));
  // general u = 1: sigma_[k-lt_d+1, k-1] ... sigma_[k-lt_1+1, k-1]
  PositroidPair p2{6, 3, Permutation::identity(6),
                   grassmannian_from_partition({3, 2}, 3, 6)};
  MarkovReduction mr2 = markov_reduce(p2);
  auto lt = transpose_partition({3, 2});  // (2,2,1)
  BraidWord expect = BraidWord::identity(3);
  for (int i = static_cast<int>(lt.size()); i >= 1; --i) {
    if (3 - lt[i - 1] + 1 <= 2) expect = expect.concat(interval_word(3 - lt[i - 1] + 1, 2, 3));
  }
  CHECK(mr2.reduced == expect);
}

TEST_CASE("find equivalence basics") {
  BraidWord a = W(3, " s1 s2 s1");
  CHECK(find_equivalence(a, a).has_value());
  CHECK(find_equivalence(a, a)->moves.empty());
  CHECK_FALSE(find_equivalence(W(2, " s1"), W(2, " s1 s1")).has_value());

  auto t = find_equivalence(W(3, " s1 s2 s1"), W(3, " s2 s1 s2"));
  REQUIRE(t.has_value());
  CHECK(t->start == W(3, " s1 s2 s1"));
  CHECK(t->end == W(3, " s2 s1 s2"));
  CHECK_FALSE(replay(*t).has_value());
}

TEST_CASE("intro chain: juggling vs matrix braid") {
  AffinePermutation f(7, {3, 5, 8, 6, 7, 11, 9});
  BraidWord jd = juggling_braid_diagram(f).concat(half_twist(3));
  BraidWord m = matrix_braid(affine_to_rank(f));
  auto t = find_equivalence(jd, m);
  REQUIRE(t.has_value());
  CHECK_FALSE(replay(*t).has_value());
  CHECK(t->moves.size() <= 20);
}

TEST_CASE("intro chain: richardson reduces to s2^2 s1^2") {
  MarkovReduction mr = markov_reduce(intro_pair());
  BraidWord target = W(3, " s2 s2 s1 s1");
  SearchBudget budget;
  budget.max_states = 2'000'000;
  auto tail = find_equivalence(mr.reduced, target, budget);
  REQUIRE(tail.has_value());
  MoveTrace full = compose(mr.trace, *tail);
  CHECK_FALSE(replay(full).has_value());
  CHECK(full.start == richardson_braid(intro_pair()));
  CHECK(full.end == target);
}

TEST_CASE("script j is conjugate to j delta inverse") {
  AffinePermutation f(7, {3, 4, 9, 6, 7, 12, 8});
  PositroidPair p = affine_to_pair(f);
  auto factors = juggling_braid_action_factors(p);
  auto dec = juggling_split(factors, p.n - p.k);
  BraidWord lhs = dec.j.concat(half_twist(factors.k).inverse());
  BraidWord rhs = script_j(p);
  // rotation by |J2| letters realizes the conjugation
  Rewriter rw(lhs);
  for (std::size_t i = 0; i < dec.split; ++i)
    rw.apply(Move{MoveKind::CyclicRotate, 0, 0, true, true});
  CHECK(rw.word() == rhs);
  CHECK_FALSE(replay(rw.trace()).has_value());
}

TEST_CASE("route agreement via certificates at small sizes") {
  SearchBudget budget;
  budget.allow_rii = false;
  budget.allow_conjugation = false;
  for (int n = 3; n <= 4; ++n)
    for (auto& p : all_positroid_pairs(n)) {
      AffinePermutation f = pair_to_affine(p);
      BraidWord a = juggling_braid_diagram(f);
      BraidWord b = juggling_braid_action(p);
      CHECK(a.length() == b.length());
      auto t = find_equivalence(a, b, budget);
      REQUIRE(t.has_value());
      CHECK_FALSE(replay(*t).has_value());
    }
}
