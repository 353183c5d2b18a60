#ifndef POSITROID_REWRITING_HPP
#define POSITROID_REWRITING_HPP

#include <optional>
#include <string>
#include <vector>

#include "positroid/positroid_data.hpp"

namespace positroid {

enum class MoveKind {
  RIIInsert,
  RIIRemove,
  RIII,
  Commute,
  DeltaConjugate,
  PosStabilize,
  PosDestabilize,
  AddDisjointStrand,
  RemoveDisjointStrand,
  CyclicRotate,
};

// Every kind carries exactly the parameters needed to apply it
// deterministically at a position.
struct Move {
  MoveKind kind = MoveKind::RIII;
  int pos = 1;               // 1-based letter position where applicable
  int index = 1;             // generator index for RIIInsert
  bool positive_first = true;  // RIIInsert pattern s_i s_i^-1 vs s_i^-1 s_i
  bool forward = true;       // DeltaConjugate / CyclicRotate direction

  std::string to_json() const;
  static Move from_json(const std::string& text);
};

std::string move_kind_name(const Move& m, const BraidWord& before);

BraidWord apply_move(const BraidWord& w, const Move& m);
Move invert_move(const BraidWord& before, const Move& m);

struct MoveTrace {
  BraidWord start;
  std::vector<Move> moves;
  BraidWord end;

  std::string to_json() const;
};

// Replays the trace; returns the failing step (1-based) or nullopt on success.
std::optional<std::size_t> replay(const MoveTrace& t);

MoveTrace compose(const MoveTrace& a, const MoveTrace& b);

// --- structured rewrites ----------------------------------------------------

// A rewriter accumulates moves while transforming a working word.
class Rewriter {
 public:
  explicit Rewriter(BraidWord w) : start_(w), word_(std::move(w)) {}

  const BraidWord& word() const { return word_; }
  MoveTrace trace() const { return MoveTrace{start_, moves_, word_}; }

  void apply(const Move& m);

  // sigma_[a,d] block at positions [bs, bs+d-a], single letter sigma_j^{+-}
  // right after it; rewrites to sigma_{j-1}^{+-} at bs followed by the block.
  void pull_letter_left(int bs, int a, int d);
  // Inverse: letter at bs, block at [bs+1, ...]; letter index j-1 becomes j
  // to the right of the block.
  void push_letter_right(int bs, int a, int d);

 private:
  BraidWord start_;
  BraidWord word_;
  std::vector<Move> moves_;
};

// Sliding lemma: sigma_[a,c] u^{-1} = upsilon^{-1} sigma_[b,c].
struct SlideResult {
  BraidWord upsilon;  // positive word, subword of sigma_[b, c-1]
  int b = 0;
  MoveTrace trace;    // on the word sigma_[a,c] . u^{-1}
};
SlideResult slide(int a, int c, const BraidWord& u, int n);

// Nested interval exchange sigma^{+-}_[b-1,c-1] sigma_[a,d] ->
// sigma_[a,d] sigma^{+-}_[b,c], as a replayable trace (a < b <= c <= d).
MoveTrace nested_exchange(int a, int b, int c, int d, bool positive, int n);

// Markov reduction of Prop. general-markov: from R_n(u,w) down to a
// k-stranded word by slides, pushes and positive destabilizations.
struct MarkovReduction {
  BraidWord reduced;
  MoveTrace trace;
};
MarkovReduction markov_reduce(const PositroidPair& p);

// --- bounded equivalence search ---------------------------------------------

struct SearchBudget {
  std::size_t max_states = 1'000'000;
  int extra_length = 4;       // allowed growth over the larger input
  bool allow_rii = true;      // insertions/removals
  bool allow_conjugation = true;  // cyclic rotation and Delta-conjugation
};

// Certificate search between same-strand words; not-found is not a disproof.
std::optional<MoveTrace> find_equivalence(const BraidWord& b1, const BraidWord& b2,
                                          const SearchBudget& budget = {});

}  // namespace positroid

#endif
