#include "acx4/reduce.hpp"

#include <algorithm>

#include "acx4/error.hpp"

namespace acx4 {

namespace {

MultiFanFamily replace_fan(const MultiFanFamily& fam, std::size_t j, MultiFan fan) {
  std::vector<MultiFan> fans = fam.fans();
  fans[j] = std::move(fan);
  return MultiFanFamily(std::move(fans));
}

std::string describe(const Move& m) {
  return std::string(m.kind == MoveKind::kBlowUpFan ? "blow_up" : "blow_down") + " fan " +
         std::to_string(m.fan_index) + " position " + std::to_string(m.position) + " vector " +
         to_string(m.vector);
}

// Applies and records moves against an evolving state.
class Rewriter {
 public:
  explicit Rewriter(MultiFanFamily state) : state_(std::move(state)) {}

  void blow_up(std::size_t j, std::size_t position) {
    const auto& fan = state_[j];
    const LatticeVector sum = fan[position] + fan[(position + 1) % fan.size()];
    push({MoveKind::kBlowUpFan, j, position, sum});
  }
  void blow_down(std::size_t j, std::size_t position) {
    push({MoveKind::kBlowDownFan, j, position, state_[j][position]});
  }

  const MultiFanFamily& state() const { return state_; }
  std::vector<Move>& moves() { return moves_; }

 private:
  void push(Move m) {
    state_ = apply_move(state_, m);
    moves_.push_back(std::move(m));
  }

  MultiFanFamily state_;
  std::vector<Move> moves_;
};

}  // namespace

MultiFanFamily apply_move(const MultiFanFamily& fam, const Move& move) {
  if (move.fan_index >= fam.size()) {
    throw Error(ErrorCode::kMoveInapplicable,
                describe(move) + ": family has only " + std::to_string(fam.size()) + " fans");
  }
  const auto& fan = fam[move.fan_index];
  if (move.position >= fan.size()) {
    throw Error(ErrorCode::kMoveInapplicable,
                describe(move) + ": fan has only " + std::to_string(fan.size()) + " vectors");
  }
  try {
    if (move.kind == MoveKind::kBlowUpFan) {
      const LatticeVector sum = fan[move.position] + fan[(move.position + 1) % fan.size()];
      if (sum != move.vector) {
        throw Error(ErrorCode::kMoveInapplicable,
                    describe(move) + ": rewrite would insert " + to_string(sum));
      }
      return replace_fan(fam, move.fan_index, blow_up_fan(fan, move.position));
    }
    if (fan[move.position] != move.vector) {
      throw Error(ErrorCode::kMoveInapplicable,
                  describe(move) + ": vector at that position is " + to_string(fan[move.position]));
    }
    return replace_fan(fam, move.fan_index, blow_down_fan(fan, move.position));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kMoveInapplicable) throw;
    throw Error(ErrorCode::kMoveInapplicable, describe(move) + ": " + e.what());
  }
}

MultiFanFamily replay(const MultiFanFamily& initial, const std::vector<Move>& moves,
                      const MoveObserver& observer) {
  MultiFanFamily state = initial;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    try {
      state = apply_move(state, moves[i]);
    } catch (const Error& e) {
      throw Error(ErrorCode::kMoveInapplicable, "move " + std::to_string(i) + ": " + e.detail(), i);
    }
    if (observer) observer(i, state);
  }
  return state;
}

std::vector<Integer> norm_profile(const MultiFanFamily& fam) {
  std::vector<Integer> out;
  for (const auto& fan : fam.fans()) {
    for (const auto& v : fan.vectors()) out.push_back(norm_sq(v));
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

bool profile_decreased(const std::vector<Integer>& before, const std::vector<Integer>& after) {
  return std::lexicographical_compare(after.begin(), after.end(), before.begin(), before.end());
}

Reduction reduce_to_minimal(const MultiFanFamily& fam, const IterationObserver& observer) {
  Rewriter rw(fam);
  for (std::size_t iteration = 0;; ++iteration) {
    const MultiFanFamily& state = rw.state();
    Integer best = 1;
    std::size_t j = 0;
    std::size_t i = 0;
    bool found = false;
    for (std::size_t fj = 0; fj < state.size(); ++fj) {
      for (std::size_t fi = 0; fi < state[fj].size(); ++fi) {
        const Integer n = norm_sq(state[fj][fi]);
        if (n > best) {
          best = n;
          j = fj;
          i = fi;
          found = true;
        }
      }
    }
    if (!found) break;

    const auto before = norm_profile(state);
    const MultiFan fan = state[j];
    const std::size_t k = fan.size();
    const std::size_t prev = (i + k - 1) % k;
    const LatticeVector w = fan[i];
    const LatticeVector w1 = fan[prev];
    const Integer a = self_intersections(fan)[i];
    // After blowing up the pair (v_{i-1}, v_i), w sits one slot further right
    // unless the new vector was appended behind it (i == 0).
    const std::size_t shifted = i == 0 ? 0 : i + 1;

    if (a == -1) {
      rw.blow_down(j, i);
    } else if (a == 0) {
      if (reduction_choice(w1, w) < 0) {
        rw.blow_up(j, i);
        rw.blow_down(j, i);
      } else {
        rw.blow_up(j, prev);
        rw.blow_down(j, shifted);
      }
    } else if (a == 1) {
      rw.blow_up(j, prev);
      rw.blow_up(j, shifted);
      rw.blow_down(j, shifted);
    } else {
      internal_inconsistency("self-intersection " + a.str() + " at maximal vector " +
                             to_string(w) + "; expected -1, 0 or 1");
    }

    if (!profile_decreased(before, norm_profile(rw.state()))) {
      internal_inconsistency("norm profile did not decrease at iteration " +
                             std::to_string(iteration));
    }
    if (observer) observer(iteration, rw.state());
  }

  MultiFanFamily final_state = rw.state();
  for (const auto& f : final_state.fans()) {
    if (!is_minimal_fan(f)) internal_inconsistency("reduction ended on a non-minimal fan");
  }
  return {final_state, MoveLog{fam, std::move(rw.moves()), final_state}};
}

ComplexNormalization normalize_complex(const MultiFan& fan) {
  const std::size_t t = winding_number(fan);
  if (t != 1) {
    throw Error(ErrorCode::kNotToddOne,
                "winding number is " + std::to_string(t) + "; a complex model needs 1");
  }
  auto reduction = reduce_to_minimal(MultiFanFamily({fan}));
  const MultiFan& last = reduction.minimal[0];
  if (last.size() != 4) {
    internal_inconsistency("Todd-one fan reduced to " + std::to_string(last.size()) + " vectors");
  }
  ComplexModel model;
  const auto start = std::find(last.vectors().begin(), last.vectors().end(), LatticeVector(1, 0));
  if (start == last.vectors().end()) internal_inconsistency("minimal fan lacks (1,0)");
  model.rotation = static_cast<std::size_t>(start - last.vectors().begin());
  model.a = last[(model.rotation + 1) % 4].y.convert_to<int>();
  const LatticeVector expected[4] = {{1, 0}, {0, model.a}, {-1, 0}, {0, -model.a}};
  for (std::size_t s = 0; s < 4; ++s) {
    if (last[(model.rotation + s) % 4] != expected[s]) {
      internal_inconsistency("minimal Todd-one fan does not match the CP1xCP1 pattern");
    }
  }
  return {std::move(reduction.log), model};
}

}  // namespace acx4
