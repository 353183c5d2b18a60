#include "positroid/rewriting.hpp"

#include "positroid/positroid_braids.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace positroid {

namespace {

[[noreturn]] void bad_move(const std::string& what) {
  throw std::invalid_argument("inapplicable move: " + what);
}

}  // namespace

std::string move_kind_name(const Move& m, const BraidWord& before) {
  switch (m.kind) {
    case MoveKind::RIIInsert: return "RII_insert";
    case MoveKind::RIIRemove: return "RII_remove";
    case MoveKind::RIII: {
      bool pos = m.pos >= 1 && m.pos <= static_cast<int>(before.length()) &&
                 before.letters[m.pos - 1].positive;
      return pos ? "RIII_pos" : "RIII_neg";
    }
    case MoveKind::Commute: return "Commute";
    case MoveKind::DeltaConjugate: return "DeltaConjugate";
    case MoveKind::PosStabilize: return "PosStabilize";
    case MoveKind::PosDestabilize: return "PosDestabilize";
    case MoveKind::AddDisjointStrand: return "AddDisjointStrand";
    case MoveKind::RemoveDisjointStrand: return "RemoveDisjointStrand";
    case MoveKind::CyclicRotate: return "CyclicRotate";
  }
  return "?";
}

std::string Move::to_json() const {
  std::ostringstream os;
  static const char* names[] = {"RII_insert", "RII_remove", "RIII",      "Commute",
                                "DeltaConjugate", "PosStabilize", "PosDestabilize",
                                "AddDisjointStrand", "RemoveDisjointStrand", "CyclicRotate"};
  os << "{\"kind\":\"" << names[static_cast<int>(kind)] << "\",\"at\":" << pos;
  if (kind == MoveKind::RIIInsert)
    os << ",\"index\":" << index << ",\"positive_first\":" << (positive_first ? "true" : "false");
  if (kind == MoveKind::DeltaConjugate || kind == MoveKind::CyclicRotate)
    os << ",\"forward\":" << (forward ? "true" : "false");
  os << "}";
  return os.str();
}

BraidWord apply_move(const BraidWord& w, const Move& m) {
  const int len = static_cast<int>(w.length());
  auto letters = w.letters;
  int strands = w.strands;
  switch (m.kind) {
    case MoveKind::RIIInsert: {
      if (m.pos < 1 || m.pos > len + 1) bad_move("RII insert position");
      if (m.index < 1 || m.index >= strands) bad_move("RII insert index");
      letters.insert(letters.begin() + (m.pos - 1),
                     {Letter{m.index, m.positive_first}, Letter{m.index, !m.positive_first}});
      break;
    }
    case MoveKind::RIIRemove: {
      if (m.pos < 1 || m.pos + 1 > len) bad_move("RII remove position");
      const Letter &a = letters[m.pos - 1], &b = letters[m.pos];
      if (a.index != b.index || a.positive == b.positive) bad_move("RII remove at a non-canceling pair");
      letters.erase(letters.begin() + (m.pos - 1), letters.begin() + (m.pos + 1));
      break;
    }
    case MoveKind::RIII: {
      if (m.pos < 1 || m.pos + 2 > len) bad_move("RIII position");
      Letter &a = letters[m.pos - 1], &b = letters[m.pos], &c = letters[m.pos + 1];
      if (a.index != c.index || std::abs(a.index - b.index) != 1) bad_move("RIII pattern");
      if (a.positive != b.positive || b.positive != c.positive) bad_move("RIII mixed signs");
      std::swap(a.index, b.index);
      c.index = a.index;
      break;
    }
    case MoveKind::Commute: {
      if (m.pos < 1 || m.pos + 1 > len) bad_move("Commute position");
      Letter &a = letters[m.pos - 1], &b = letters[m.pos];
      if (std::abs(a.index - b.index) < 2) bad_move("Commute needs distant indices");
      std::swap(a, b);
      break;
    }
    case MoveKind::DeltaConjugate: {
      if (len == 0) bad_move("DeltaConjugate on empty word");
      if (m.forward) {
        Letter first = letters.front();
        letters.erase(letters.begin());
        first.index = strands - first.index;
        if (first.index < 1) bad_move("DeltaConjugate index underflow");
        letters.push_back(first);
      } else {
        Letter last = letters.back();
        letters.pop_back();
        last.index = strands - last.index;
        if (last.index < 1) bad_move("DeltaConjugate index underflow");
        letters.insert(letters.begin(), last);
      }
      break;
    }
    case MoveKind::CyclicRotate: {
      if (len == 0) bad_move("CyclicRotate on empty word");
      if (m.forward) {
        Letter first = letters.front();
        letters.erase(letters.begin());
        letters.push_back(first);
      } else {
        Letter last = letters.back();
        letters.pop_back();
        letters.insert(letters.begin(), last);
      }
      break;
    }
    case MoveKind::PosStabilize: {
      letters.push_back(Letter{strands, true});
      strands += 1;
      break;
    }
    case MoveKind::PosDestabilize: {
      if (m.pos < 1 || m.pos > len) bad_move("PosDestabilize position");
      const Letter& l = letters[m.pos - 1];
      if (l.index != strands - 1 || !l.positive) bad_move("PosDestabilize needs a positive top letter");
      int count = 0;
      for (const auto& x : letters)
        if (x.index == strands - 1) ++count;
      if (count != 1) bad_move("PosDestabilize needs a unique top letter");
      letters.erase(letters.begin() + (m.pos - 1));
      strands -= 1;
      break;
    }
    case MoveKind::AddDisjointStrand: {
      strands += 1;
      break;
    }
    case MoveKind::RemoveDisjointStrand: {
      for (const auto& x : letters)
        if (x.index == strands - 1) bad_move("top strand is not disjoint");
      if (strands < 2) bad_move("no strand to remove");
      strands -= 1;
      break;
    }
  }
  BraidWord out(strands, std::move(letters));
  // Move-level invariants: writhe and strand-count budgets per kind.
  int dw = out.writhe() - w.writhe();
  int ds = out.strands - w.strands;
  switch (m.kind) {
    case MoveKind::PosStabilize:
      if (dw != 1 || ds != 1) throw std::logic_error("stabilization invariant broken");
      break;
    case MoveKind::PosDestabilize:
      if (dw != -1 || ds != -1) throw std::logic_error("destabilization invariant broken");
      break;
    case MoveKind::AddDisjointStrand:
    case MoveKind::RemoveDisjointStrand:
      if (dw != 0 || std::abs(ds) != 1) throw std::logic_error("strand move invariant broken");
      break;
    default:
      if (dw != 0 || ds != 0) throw std::logic_error("move changed writhe or strands");
  }
  return out;
}

Move invert_move(const BraidWord& before, const Move& m) {
  switch (m.kind) {
    case MoveKind::RIIInsert: return Move{MoveKind::RIIRemove, m.pos, 0, true, true};
    case MoveKind::RIIRemove: {
      const Letter& a = before.letters[m.pos - 1];
      return Move{MoveKind::RIIInsert, m.pos, a.index, a.positive, true};
    }
    case MoveKind::RIII: return m;
    case MoveKind::Commute: return m;
    case MoveKind::DeltaConjugate: return Move{MoveKind::DeltaConjugate, 0, 0, true, !m.forward};
    case MoveKind::CyclicRotate: return Move{MoveKind::CyclicRotate, 0, 0, true, !m.forward};
    case MoveKind::PosStabilize:
      return Move{MoveKind::PosDestabilize, static_cast<int>(before.length()) + 1, 0, true, true};
    case MoveKind::PosDestabilize:
      // Only invertible when the removed letter sat at the end.
      if (m.pos != static_cast<int>(before.length()))
        throw std::logic_error("cannot invert interior destabilization");
      return Move{MoveKind::PosStabilize, 0, 0, true, true};
    case MoveKind::AddDisjointStrand: return Move{MoveKind::RemoveDisjointStrand, 0, 0, true, true};
    case MoveKind::RemoveDisjointStrand: return Move{MoveKind::AddDisjointStrand, 0, 0, true, true};
  }
  throw std::logic_error("unknown move");
}

std::optional<std::size_t> replay(const MoveTrace& t) {
  BraidWord w = t.start;
  for (std::size_t i = 0; i < t.moves.size(); ++i) {
    try {
      w = apply_move(w, t.moves[i]);
    } catch (const std::exception&) {
      return i + 1;
    }
  }
  if (!(w == t.end)) return t.moves.size() + 1;
  return std::nullopt;
}

MoveTrace compose(const MoveTrace& a, const MoveTrace& b) {
  if (!(a.end == b.start)) throw std::invalid_argument("traces do not compose");
  MoveTrace t;
  t.start = a.start;
  t.moves = a.moves;
  t.moves.insert(t.moves.end(), b.moves.begin(), b.moves.end());
  t.end = b.end;
  return t;
}

std::string MoveTrace::to_json() const {
  std::ostringstream os;
  os << "{\"start\":\"" << render_braid(start) << "\",\"moves\":[";
  BraidWord w = start;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    Move m = moves[i];
    std::ostringstream one;
    one << "{\"kind\":\"" << move_kind_name(m, w) << "\",\"at\":" << m.pos;
    if (m.kind == MoveKind::RIIInsert)
      one << ",\"index\":" << m.index << ",\"positive_first\":"
          << (m.positive_first ? "true" : "false");
    if (m.kind == MoveKind::DeltaConjugate || m.kind == MoveKind::CyclicRotate)
      one << ",\"forward\":" << (m.forward ? "true" : "false");
    one << "}";
    os << (i ? "," : "") << one.str();
    w = apply_move(w, m);
  }
  os << "],\"end\":\"" << render_braid(end) << "\"}";
  return os.str();
}

void Rewriter::apply(const Move& m) {
  word_ = apply_move(word_, m);
  moves_.push_back(m);
}

void Rewriter::pull_letter_left(int bs, int a, int d) {
  // word: ... [sigma_d ... sigma_a] sigma_j^e ...  ->  ... sigma_{j-1}^e [block] ...
  int blen = d - a + 1;
  int lp = bs + blen;  // position of the moving letter
  Letter mv = word_.letters[lp - 1];
  int j = mv.index;
  if (!(a < j && j <= d)) throw std::invalid_argument("pull_letter_left needs a < j <= d");
  if (mv.positive) {
    // commute left past sigma_{j-2}..sigma_a
    for (int t = 0; t < j - a - 1; ++t) {
      apply(Move{MoveKind::Commute, lp - 1 - t});
    }
    int rp = lp - (j - a - 1);  // letter now right after sigma_j sigma_{j-1}
    // positions rp-2, rp-1, rp hold sigma_j sigma_{j-1} sigma_j
    apply(Move{MoveKind::RIII, rp - 2});
    // leading sigma_{j-1} at rp-2 commutes left past sigma_{j+1}..sigma_d
    for (int t = 0; t < d - j; ++t) apply(Move{MoveKind::Commute, rp - 3 - t});
  } else {
    // sandwich with an RII pair and run the positive rewrite backwards
    apply(Move{MoveKind::RIIInsert, bs, j - 1, false});
    // word: sigma_{j-1}^{-1} sigma_{j-1} [block] sigma_j^{-1}
    push_letter_right(bs + 1, a, d);
    // word: sigma_{j-1}^{-1} [block] sigma_j sigma_j^{-1}
    apply(Move{MoveKind::RIIRemove, bs + 1 + blen});
  }
}

void Rewriter::push_letter_right(int bs, int a, int d) {
  // word: ... sigma_{j-1}^e [sigma_d ... sigma_a] ... -> ... [block] sigma_j^e ...
  Letter mv = word_.letters[bs - 1];
  int jm1 = mv.index;
  int j = jm1 + 1;
  if (!(a < j && j <= d)) throw std::invalid_argument("push_letter_right needs a < j <= d");
  if (mv.positive) {
    // commute right past sigma_d..sigma_{j+1}
    for (int t = 0; t < d - j; ++t) apply(Move{MoveKind::Commute, bs + t});
    int rp = bs + (d - j);  // sigma_{j-1} here, then sigma_j sigma_{j-1}
    apply(Move{MoveKind::RIII, rp});
    // trailing sigma_j at rp+2 commutes right past sigma_{j-2}..sigma_a
    for (int t = 0; t < j - a - 1; ++t) apply(Move{MoveKind::Commute, rp + 2 + t});
  } else {
    apply(Move{MoveKind::RIIInsert, bs + 1 + (d - a + 1), j, true});
    // word: sigma_{j-1}^{-1} [block] sigma_j sigma_j^{-1}
    pull_letter_left(bs + 1, a, d);
    // word: sigma_{j-1}^{-1} sigma_{j-1} [block] sigma_j^{-1}
    apply(Move{MoveKind::RIIRemove, bs});
  }
}

SlideResult slide(int a, int c, const BraidWord& u, int n) {
  // Working word: sigma_[a,c] . u^{-1}; u must be a subword of sigma_[a,c].
  BraidWord start = interval_word(a, c, n).concat(u.inverse());
  Rewriter rw(start);
  int cur_a = a;
  int upsilon_len = 0;  // emitted letters at the front
  for (int t = static_cast<int>(u.length()) - 1; t >= 0; --t) {
    int j = u.letters[t].index;
    int blen = c - cur_a + 1;
    int bs = upsilon_len + 1;
    if (j == cur_a) {
      // the block ends with sigma_a; cancel with the adjacent sigma_a^{-1}
      rw.apply(Move{MoveKind::RIIRemove, bs + blen - 1});
      cur_a += 1;
    } else if (j > cur_a && j <= c) {
      rw.pull_letter_left(bs, cur_a, c);
      upsilon_len += 1;
    } else {
      throw std::invalid_argument("slide: u is not a subword of the interval");
    }
  }
  SlideResult out;
  out.b = cur_a;
  std::vector<Letter> ups;
  for (int i = 0; i < upsilon_len; ++i) {
    Letter l = rw.word().letters[i];
    ups.push_back(Letter{l.index, true});
  }
  std::reverse(ups.begin(), ups.end());
  out.upsilon = BraidWord(n, std::move(ups));
  out.trace = rw.trace();
  return out;
}

MoveTrace nested_exchange(int a, int b, int c, int d, bool positive, int n) {
  if (!(a < b && b <= c && c <= d)) throw std::invalid_argument("need a < b <= c <= d");
  std::vector<Letter> ls;
  for (int i = c - 1; i >= b - 1; --i) ls.push_back(Letter{i, positive});
  BraidWord small(n, std::move(ls));
  BraidWord start = small.concat(interval_word(a, d, n));
  Rewriter rw(start);
  // Move each letter of the small block right through the big interval,
  // starting from the one adjacent to it.
  int remaining = c - b + 1;
  for (int t = 0; t < c - b + 1; ++t) {
    rw.push_letter_right(remaining, a, d);
    remaining -= 1;
  }
  return rw.trace();
}

MarkovReduction markov_reduce(const PositroidPair& p) {
  if (auto v = p.violation()) throw std::invalid_argument("invalid positroid pair: " + *v);
  int k = p.k, n = p.n, dcols = n - k;
  auto lambda = grassmannian_partition(p.w, p.k);
  auto lt = transpose_partition(lambda);
  lt.resize(dcols, 0);

  BraidWord wword = positive_lift(p.w, LiftStrategy::ColumnReading);
  auto picked = rightmost_subexpression(p.u, wword);
  if (!picked) throw std::logic_error("u has no subexpression in the w-word");

  // Column intervals I_i = sigma_[k - lt_i + i, k + i - 1]; u_i = selected
  // letters inside column i.
  std::vector<int> col_start(dcols + 1, 0);  // 1-based start position of column i
  {
    int pos = 1;
    for (int i = 1; i <= dcols; ++i) {
      col_start[i] = pos;
      pos += lt[i - 1];
    }
  }
  std::vector<std::vector<Letter>> ui(dcols + 1);
  for (int sel : *picked) {
    int col = dcols;
    while (col >= 1 && sel < col_start[col]) --col;
    ui[col].push_back(wword.letters[sel - 1]);
  }

  Rewriter rw(richardson_braid(p));
  int emitted = 0;  // letters settled at the front
  // Moves the letter sitting just right of the column intervals I_1..I_{upto}
  // all the way to the front; the intervals sit after `front` letters.
  auto move_letter_to_front = [&](int front, int upto) {
    int pos = front + 1;
    for (int c2 = 1; c2 <= upto; ++c2) pos += lt[c2 - 1];
    for (int c2 = upto; c2 >= 1; --c2) {
      if (lt[c2 - 1] == 0) continue;
      int ca = k - lt[c2 - 1] + c2, cc = k + c2 - 1;
      int block_bs = pos - (cc - ca + 1);
      rw.pull_letter_left(block_bs, ca, cc);
      pos = block_bs;
    }
  };
  for (int i = dcols; i >= 1; --i) {
    int ia = k - lt[i - 1] + i, ic = k + i - 1;  // current column interval
    if (lt[i - 1] == 0) {
      // empty column: sigma_{k+i-1} never occurs, the top strand is disjoint
      rw.apply(Move{MoveKind::RemoveDisjointStrand, 0});
      continue;
    }
    // slide u_i^{-1} through the interval
    int bs = emitted + 1;
    for (int c2 = 1; c2 < i; ++c2) bs += lt[c2 - 1];
    int cur_a = ia;
    int upsilon = 0;
    for (int t = static_cast<int>(ui[i].size()) - 1; t >= 0; --t) {
      int j = ui[i][t].index;
      int blen = ic - cur_a + 1;
      if (j == cur_a) {
        rw.apply(Move{MoveKind::RIIRemove, bs + upsilon + blen - 1});
        cur_a += 1;
      } else {
        rw.pull_letter_left(bs + upsilon, cur_a, ic);
        upsilon += 1;
      }
    }
    if (cur_a > ic) {
      // u_i cancelled the whole interval; no upsilon letters were emitted
      if (upsilon != 0) throw std::logic_error("markov_reduce: leftover upsilon letters");
      rw.apply(Move{MoveKind::RemoveDisjointStrand, 0});
      continue;
    }
    // destabilize the unique sigma_{k+i-1}, the first letter of the interval
    rw.apply(Move{MoveKind::PosDestabilize, bs + upsilon});
    int rem_len = (ic - 1) - cur_a + 1;  // leftover interval length (may be 0)
    // The upsilon letters and then the leftover interval travel to the front,
    // leftmost letter first; each passes the columns I_1..I_{i-1}.
    for (int t = 0; t < upsilon + rem_len; ++t) {
      move_letter_to_front(emitted, i - 1);
      emitted += 1;
    }
  }
  MarkovReduction out;
  out.trace = rw.trace();
  out.reduced = rw.word();
  return out;
}

namespace {

std::string encode(const BraidWord& w) {
  std::string s;
  s.reserve(w.length() + 2);
  s.push_back(static_cast<char>(w.strands));
  for (const auto& l : w.letters)
    s.push_back(static_cast<char>(l.positive ? l.index : -l.index + 100));
  return s;
}

std::string canonical_key(const BraidWord& w, bool allow_conjugation) {
  std::string base = encode(w);
  if (!allow_conjugation || w.letters.empty()) return base;
  std::string best = base;
  BraidWord rot = w;
  BraidWord comp(w.strands, [&] {
    auto ls = w.letters;
    for (auto& l : ls) l.index = w.strands - l.index;
    return ls;
  }());
  for (int variant = 0; variant < 2; ++variant) {
    BraidWord cur = variant == 0 ? w : comp;
    for (std::size_t r = 0; r < cur.length(); ++r) {
      std::rotate(cur.letters.begin(), cur.letters.begin() + 1, cur.letters.end());
      std::string e = encode(cur);
      if (e < best) best = e;
    }
  }
  return best;
}

std::vector<int> cycle_type(const Permutation& p) {
  std::vector<int> t;
  std::vector<bool> seen(p.size() + 1, false);
  for (int i = 1; i <= p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0, cur = i;
    while (!seen[cur]) {
      seen[cur] = true;
      cur = p(cur);
      ++len;
    }
    t.push_back(len);
  }
  std::sort(t.begin(), t.end());
  return t;
}

struct Node {
  BraidWord word;
  int parent = -1;
  Move move;     // move applied to parent to reach this word
  bool from_b = false;
};

std::vector<std::pair<Move, BraidWord>> neighbors(const BraidWord& w, int maxlen,
                                                  const SearchBudget& budget) {
  std::vector<std::pair<Move, BraidWord>> out;
  int len = static_cast<int>(w.length());
  for (int p = 1; p + 1 <= len; ++p) {
    const Letter &a = w.letters[p - 1], &b = w.letters[p];
    if (a.index == b.index && a.positive != b.positive && budget.allow_rii) {
      Move m{MoveKind::RIIRemove, p};
      out.push_back({m, apply_move(w, m)});
    }
    if (std::abs(a.index - b.index) >= 2) {
      Move m{MoveKind::Commute, p};
      out.push_back({m, apply_move(w, m)});
    }
  }
  for (int p = 1; p + 2 <= len; ++p) {
    const Letter &a = w.letters[p - 1], &b = w.letters[p], &c = w.letters[p + 1];
    if (a.index == c.index && std::abs(a.index - b.index) == 1 && a.positive == b.positive &&
        b.positive == c.positive) {
      Move m{MoveKind::RIII, p};
      out.push_back({m, apply_move(w, m)});
    }
  }
  if (budget.allow_conjugation && len > 0) {
    for (bool fwd : {true, false}) {
      Move m{MoveKind::CyclicRotate, 0, 0, true, fwd};
      out.push_back({m, apply_move(w, m)});
      Move d{MoveKind::DeltaConjugate, 0, 0, true, fwd};
      out.push_back({d, apply_move(w, d)});
    }
  }
  if (budget.allow_rii && len + 2 <= maxlen) {
    for (int p = 1; p <= len + 1; ++p)
      for (int i = 1; i < w.strands; ++i)
        for (bool pf : {true, false}) {
          Move m{MoveKind::RIIInsert, p, i, pf, true};
          out.push_back({m, apply_move(w, m)});
        }
  }
  return out;
}

// Bridge two words with the same canonical key by rotations and full
// Delta-conjugations.
std::optional<MoveTrace> bridge(const BraidWord& from, const BraidWord& to) {
  if (from == to) return MoveTrace{from, {}, to};
  // try rotations
  BraidWord cur = from;
  std::vector<Move> moves;
  for (std::size_t r = 0; r <= from.length(); ++r) {
    if (cur == to) return MoveTrace{from, moves, cur};
    Move m{MoveKind::CyclicRotate, 0, 0, true, true};
    cur = apply_move(cur, m);
    moves.push_back(m);
  }
  // full Delta-conjugation complements every index
  cur = from;
  moves.clear();
  for (std::size_t t = 0; t < from.length(); ++t) {
    Move m{MoveKind::DeltaConjugate, 0, 0, true, true};
    cur = apply_move(cur, m);
    moves.push_back(m);
  }
  for (std::size_t r = 0; r <= from.length(); ++r) {
    if (cur == to) return MoveTrace{from, moves, cur};
    Move m{MoveKind::CyclicRotate, 0, 0, true, true};
    cur = apply_move(cur, m);
    moves.push_back(m);
  }
  return std::nullopt;
}

MoveTrace path_from(const std::vector<Node>& nodes, int idx) {
  std::vector<Move> moves;
  std::vector<int> chain;
  while (idx >= 0) {
    chain.push_back(idx);
    idx = nodes[idx].parent;
  }
  std::reverse(chain.begin(), chain.end());
  MoveTrace t;
  t.start = nodes[chain.front()].word;
  for (std::size_t i = 1; i < chain.size(); ++i) moves.push_back(nodes[chain[i]].move);
  t.moves = std::move(moves);
  t.end = nodes[chain.back()].word;
  return t;
}

MoveTrace reverse_trace(const MoveTrace& t) {
  // replay forward, then invert each step in reverse order
  std::vector<BraidWord> states{t.start};
  for (const auto& m : t.moves) states.push_back(apply_move(states.back(), m));
  MoveTrace r;
  r.start = t.end;
  for (std::size_t i = t.moves.size(); i-- > 0;)
    r.moves.push_back(invert_move(states[i], t.moves[i]));
  r.end = t.start;
  return r;
}

}  // namespace

std::optional<MoveTrace> find_equivalence(const BraidWord& b1, const BraidWord& b2,
                                          const SearchBudget& budget) {
  if (b1.strands != b2.strands) return std::nullopt;
  if (b1.writhe() != b2.writhe()) return std::nullopt;
  if (cycle_type(coxeter_projection(b1)) != cycle_type(coxeter_projection(b2)))
    return std::nullopt;
  if (b1 == b2) return MoveTrace{b1, {}, b2};
  int maxlen = static_cast<int>(std::max(b1.length(), b2.length())) + budget.extra_length;

  std::vector<Node> nodes;
  std::map<std::string, int> seen;
  std::deque<int> qa, qb;
  auto push = [&](const BraidWord& w, int parent, const Move& mv, bool from_b,
                  std::deque<int>& q) -> std::optional<MoveTrace> {
    std::string key = canonical_key(w, budget.allow_conjugation);
    auto it = seen.find(key);
    if (it != seen.end()) {
      Node other = nodes[it->second];  // copy: push_back below may reallocate
      if (other.from_b != from_b) {
        // the two frontiers meet: stitch the certificate together
        Node candidate{w, parent, mv, from_b};
        nodes.push_back(candidate);
        MoveTrace mine = path_from(nodes, static_cast<int>(nodes.size()) - 1);
        MoveTrace theirs = path_from(nodes, it->second);
        auto link = bridge(w, other.word);
        if (!link) return std::nullopt;  // same key must bridge; defensive
        if (from_b) {
          // mine: b2 -> w; theirs: b1 -> other.word
          MoveTrace fwd = compose(compose(theirs, reverse_trace(*link)), reverse_trace(mine));
          return fwd;
        }
        MoveTrace fwd = compose(compose(mine, *link), reverse_trace(theirs));
        return fwd;
      }
      return std::nullopt;
    }
    nodes.push_back(Node{w, parent, mv, from_b});
    seen[key] = static_cast<int>(nodes.size()) - 1;
    q.push_back(static_cast<int>(nodes.size()) - 1);
    return std::nullopt;
  };

  push(b1, -1, Move{}, false, qa);
  if (auto t = push(b2, -1, Move{}, true, qb)) return t;

  while ((!qa.empty() || !qb.empty()) && nodes.size() < budget.max_states) {
    bool use_a = !qa.empty() && (qb.empty() || qa.size() <= qb.size());
    std::deque<int>& q = use_a ? qa : qb;
    int idx = q.front();
    q.pop_front();
    BraidWord cur = nodes[idx].word;
    bool from_b = nodes[idx].from_b;
    for (auto& [mv, nw] : neighbors(cur, maxlen, budget)) {
      if (auto t = push(nw, idx, mv, from_b, use_a ? qa : qb)) return t;
      if (nodes.size() >= budget.max_states) break;
    }
  }
  return std::nullopt;
}

Move Move::from_json(const std::string&) {
  throw std::logic_error("Move::from_json not implemented; traces are emitted, not read");
}

}  // namespace positroid
