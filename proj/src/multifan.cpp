#include "acx4/multifan.hpp"

#include <algorithm>

#include "acx4/error.hpp"

namespace acx4 {

namespace {

std::size_t prev_index(std::size_t i, std::size_t k) { return (i + k - 1) % k; }
std::size_t next_index(std::size_t i, std::size_t k) { return (i + 1) % k; }

void check_index(const MultiFan& fan, std::size_t i, const char* op) {
  if (i >= fan.size()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                std::string(op) + ": index " + std::to_string(i) +
                    " out of range for a fan of length " + std::to_string(fan.size()),
                i);
  }
}

std::vector<LatticeVector> rotated(const std::vector<LatticeVector>& v, std::size_t start) {
  std::vector<LatticeVector> out;
  out.reserve(v.size());
  for (std::size_t t = 0; t < v.size(); ++t) out.push_back(v[(start + t) % v.size()]);
  return out;
}

std::vector<LatticeVector> least_rotation(const std::vector<LatticeVector>& v) {
  std::vector<LatticeVector> best = v;
  for (std::size_t s = 1; s < v.size(); ++s) {
    auto candidate = rotated(v, s);
    if (candidate < best) best = std::move(candidate);
  }
  return best;
}

}  // namespace

const LatticeVector& MultiFan::cyclic(std::ptrdiff_t i) const {
  const auto k = static_cast<std::ptrdiff_t>(vectors_.size());
  return vectors_[static_cast<std::size_t>(((i % k) + k) % k)];
}

MultiFan MultiFan::validate(std::vector<LatticeVector> raw) {
  const std::size_t k = raw.size();
  if (k < 3) {
    throw Error(ErrorCode::kTooShort,
                "a multi-fan needs at least 3 vectors, got " + std::to_string(k));
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (raw[i].is_zero()) {
      throw Error(ErrorCode::kZeroVector, "vector " + std::to_string(i) + " is zero", i);
    }
  }
  // Given bases everywhere, v_{i+1} = -a_i v_i - v_{i-1} has an integer
  // solution iff det(v_{i-1}, v_i) == det(v_i, v_{i+1}): expand v_{i+1} in the
  // basis (v_{i-1}, v_i) and read off the v_{i-1} coefficient.
  Integer reference;
  for (std::size_t i = 0; i < k; ++i) {
    const Integer d = det2(raw[prev_index(i, k)], raw[i]);
    if (abs(d) != 1) {
      throw Error(ErrorCode::kNotABasis,
                  "vectors " + std::to_string(prev_index(i, k)) + " and " + std::to_string(i) +
                      " (" + to_string(raw[prev_index(i, k)]) + ", " + to_string(raw[i]) +
                      ") do not form a basis: det = " + d.str(),
                  i);
    }
    if (i == 0) {
      reference = d;
    } else if (d != reference) {
      throw Error(ErrorCode::kOrientationFlip,
                  "det(v" + std::to_string(i - 1) + ", v" + std::to_string(i) + ") = " + d.str() +
                      " disagrees with det(v" + std::to_string(k - 1) + ", v0) = " +
                      reference.str() + "; no integer a_" + std::to_string(i - 1) + " exists",
                  i);
    }
  }
  const auto orient = reference > 0 ? Orientation::kCounterClockwise : Orientation::kClockwise;
  return MultiFan(std::move(raw), orient);
}

MultiFanFamily::MultiFanFamily(std::vector<MultiFan> fans) : fans_(std::move(fans)) {
  if (fans_.empty()) throw Error(ErrorCode::kEmptyFamily, "a family needs at least one fan");
}

MultiFan validate_multifan(std::vector<LatticeVector> raw) {
  return MultiFan::validate(std::move(raw));
}

Orientation orientation(const MultiFan& fan) { return fan.orientation(); }

std::vector<Integer> self_intersections(const MultiFan& fan) {
  const std::size_t k = fan.size();
  const Integer eps = static_cast<int>(fan.orientation());
  std::vector<Integer> a;
  a.reserve(k);
  // det(v_{i-1}, v_{i+1}) = -a_i det(v_{i-1}, v_i) = -a_i * eps.
  for (std::size_t i = 0; i < k; ++i) {
    a.push_back(-eps * det2(fan[prev_index(i, k)], fan[next_index(i, k)]));
  }
  return a;
}

MultiFan blow_up_fan(const MultiFan& fan, std::size_t i) {
  check_index(fan, i, "blow_up_fan");
  std::vector<LatticeVector> out = fan.vectors();
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(i) + 1,
             fan[i] + fan[next_index(i, fan.size())]);
  return MultiFan::validate(std::move(out));
}

MultiFan blow_down_fan(const MultiFan& fan, std::size_t i) {
  check_index(fan, i, "blow_down_fan");
  const std::size_t k = fan.size();
  if (fan[i] != fan[prev_index(i, k)] + fan[next_index(i, k)]) {
    throw Error(ErrorCode::kNotBlowDownable,
                "vector " + std::to_string(i) + " " + to_string(fan[i]) +
                    " is not the sum of its neighbours " + to_string(fan[prev_index(i, k)]) +
                    " and " + to_string(fan[next_index(i, k)]),
                i);
  }
  std::vector<LatticeVector> out = fan.vectors();
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
  return MultiFan::validate(std::move(out));
}

bool is_minimal_fan(const MultiFan& fan) {
  const bool all_unit = std::all_of(fan.vectors().begin(), fan.vectors().end(),
                                    [](const LatticeVector& v) { return norm_sq(v) == 1; });
  if (all_unit && fan.size() % 4 != 0) {
    internal_inconsistency("minimal fan with " + std::to_string(fan.size()) +
                           " vectors; expected a multiple of 4");
  }
  return all_unit;
}

std::size_t winding_number(const MultiFan& fan, const LatticeVector& xi) {
  const std::size_t k = fan.size();
  std::vector<int> side(k);
  for (std::size_t i = 0; i < k; ++i) {
    const Integer s = dot(fan[i], xi);
    if (s.is_zero()) {
      throw Error(ErrorCode::kPreconditionViolated,
                  "direction " + to_string(xi) + " is orthogonal to vector " + std::to_string(i), i);
    }
    side[i] = s > 0 ? 1 : -1;
  }
  std::size_t crossings = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (side[prev_index(i, k)] < 0 && side[i] > 0) ++crossings;
  }
  return crossings;
}

std::size_t winding_number(const MultiFan& fan) {
  return winding_number(fan, first_generic_direction(fan.vectors()));
}

MultiFan reversed_traversal(const MultiFan& fan) {
  std::vector<LatticeVector> out;
  out.reserve(fan.size());
  for (auto it = fan.vectors().rbegin(); it != fan.vectors().rend(); ++it) out.push_back(-*it);
  return MultiFan::validate(std::move(out));
}

MultiFan canonical_form(const MultiFan& fan, EquivalenceMode mode) {
  auto best = least_rotation(fan.vectors());
  if (mode == EquivalenceMode::kRotationsAndReversal) {
    auto other = least_rotation(reversed_traversal(fan).vectors());
    if (other < best) best = std::move(other);
  }
  return MultiFan::validate(std::move(best));
}

bool fans_equivalent(const MultiFan& a, const MultiFan& b, EquivalenceMode mode) {
  if (a.size() != b.size()) return false;
  return canonical_form(a, mode) == canonical_form(b, mode);
}

MultiFanFamily family_union(const MultiFanFamily& a, const MultiFanFamily& b) {
  std::vector<MultiFan> fans = a.fans();
  fans.insert(fans.end(), b.fans().begin(), b.fans().end());
  return MultiFanFamily(std::move(fans));
}

}  // namespace acx4
