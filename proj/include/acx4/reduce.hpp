#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "acx4/multifan.hpp"

namespace acx4 {

enum class MoveKind { kBlowUpFan, kBlowDownFan };

/// One rewrite of one member fan. For a blow-up, `position` names the pair
/// (v_position, v_position+1) and `vector` is the inserted sum; for a
/// blow-down, `position` is the deleted vector's index and `vector` its value.
struct Move {
  MoveKind kind = MoveKind::kBlowUpFan;
  std::size_t fan_index = 0;
  std::size_t position = 0;
  LatticeVector vector;

  friend bool operator==(const Move&, const Move&) = default;
};

/// A replayable witness: replay(initial, moves) == final.
struct MoveLog {
  MultiFanFamily initial;
  std::vector<Move> moves;
  MultiFanFamily final;

  friend bool operator==(const MoveLog&, const MoveLog&) = default;
};

/// Applies one move, checking the recorded vector against the rewrite.
/// Throws MoveInapplicable on any mismatch.
MultiFanFamily apply_move(const MultiFanFamily& fam, const Move& move);

/// Called with the state after each applied move.
using MoveObserver = std::function<void(std::size_t move_index, const MultiFanFamily& state)>;

/// Throws MoveInapplicable(i) naming the first move that does not apply.
MultiFanFamily replay(const MultiFanFamily& initial, const std::vector<Move>& moves,
                      const MoveObserver& observer = {});

/// Called once per outer iteration of the reduction with the state after it.
using IterationObserver = std::function<void(std::size_t iteration, const MultiFanFamily& state)>;

struct Reduction {
  MultiFanFamily minimal;
  MoveLog log;
};

/// Drives fam to a family of minimal multi-fans. Each outer iteration picks the
/// first fan and first index holding a vector w of maximal norm and, with
/// w1 = v_{i-1}, w2 = v_{i+1} and a = a_i:
///   a = -1: blow w down;
///   a =  0: replace w by w - w1 (or w + w1 when that is strictly shorter) via
///           one blow-up next to w and a blow-down of w;
///   a = +1: replace w by the pair -w2, -w1 via two blow-ups and a blow-down.
/// The sorted multiset of squared norms strictly decreases every iteration;
/// this and a in {-1, 0, 1} are checked at run time.
Reduction reduce_to_minimal(const MultiFanFamily& fam, const IterationObserver& observer = {});

/// Descending-sorted squared norms of all vectors; compared lexicographically
/// this is the multiset order used for termination.
std::vector<Integer> norm_profile(const MultiFanFamily& fam);
bool profile_decreased(const std::vector<Integer>& before, const std::vector<Integer>& after);

/// The CP^1 x CP^1 model reached from a Todd-genus-one fan: the final fan is
/// (1,0),(0,a),(-1,0),(0,-a) read from index `rotation`.
struct ComplexModel {
  int a = 1;
  std::size_t rotation = 0;
  std::string name = "CP1xCP1";
  std::string action = "(t1,t2).([z0:z1],[y0:y1]) = ([z0:t1 z1],[y0:t2 y1])";
};

struct ComplexNormalization {
  MoveLog log;
  ComplexModel model;
};

/// Throws NotToddOne unless winding_number(fan) == 1.
ComplexNormalization normalize_complex(const MultiFan& fan);

}  // namespace acx4
