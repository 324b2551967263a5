#pragma once

#include <cstddef>
#include <vector>

#include "acx4/lattice.hpp"

namespace acx4 {

enum class Orientation : int { kClockwise = -1, kCounterClockwise = 1 };

/// An admissible multi-fan: a cyclic sequence v_0, ..., v_{k-1} of lattice
/// vectors, k >= 3, where every consecutive pair (v_{i-1}, v_i) is a basis of
/// Z^2 with the same determinant. Index arithmetic is mod k. Instances exist
/// only in validated form; every rewrite returns a new validated value.
///
/// Indices are 0-based. Position i here is position i+1 in the usual
/// 1-based notation v_1, ..., v_k.
class MultiFan {
 public:
  /// Validates raw input. Checks run in this order and report the first
  /// failing index: TooShort, ZeroVector(i), then for i = 0, 1, ...
  /// NotABasis(i) when (v_{i-1}, v_i) is not a basis and OrientationFlip(i)
  /// when det(v_{i-1}, v_i) differs from det(v_{k-1}, v_0).
  static MultiFan validate(std::vector<LatticeVector> raw);

  const std::vector<LatticeVector>& vectors() const { return vectors_; }
  std::size_t size() const { return vectors_.size(); }
  const LatticeVector& operator[](std::size_t i) const { return vectors_[i]; }
  /// v_{i mod k}, accepting negative i.
  const LatticeVector& cyclic(std::ptrdiff_t i) const;
  Orientation orientation() const { return orientation_; }

  friend bool operator==(const MultiFan& a, const MultiFan& b) {
    return a.vectors_ == b.vectors_;
  }

 private:
  MultiFan(std::vector<LatticeVector> vectors, Orientation orientation)
      : vectors_(std::move(vectors)), orientation_(orientation) {}

  std::vector<LatticeVector> vectors_;
  Orientation orientation_;
};

/// A nonempty list of admissible multi-fans: the complete fixed-point datum.
class MultiFanFamily {
 public:
  /// Throws EmptyFamily on an empty list.
  explicit MultiFanFamily(std::vector<MultiFan> fans);

  const std::vector<MultiFan>& fans() const { return fans_; }
  std::size_t size() const { return fans_.size(); }
  const MultiFan& operator[](std::size_t j) const { return fans_[j]; }

  friend bool operator==(const MultiFanFamily&, const MultiFanFamily&) = default;

 private:
  std::vector<MultiFan> fans_;
};

MultiFan validate_multifan(std::vector<LatticeVector> raw);

Orientation orientation(const MultiFan& fan);

/// a_i with v_{i+1} = -a_i v_i - v_{i-1}: the self-intersection number of the
/// invariant sphere joining p_i and p_{i+1}.
std::vector<Integer> self_intersections(const MultiFan& fan);

/// Inserts v_i + v_{i+1} between v_i and v_{i+1}; the new vector sits at i+1.
MultiFan blow_up_fan(const MultiFan& fan, std::size_t i);

/// Deletes v_i, which must equal v_{i-1} + v_{i+1} (equivalently a_i = -1).
/// blow_down_fan(blow_up_fan(F, i), i + 1) == F.
MultiFan blow_down_fan(const MultiFan& fan, std::size_t i);

/// True iff v_i is a unit vector for every i.
bool is_minimal_fan(const MultiFan& fan);

/// Number of revolutions of v_0, ..., v_{k-1}, v_0 around the origin, counted
/// as the number of steps that cross from <.,xi> < 0 into <.,xi> > 0 for a
/// generic direction xi. Always >= 1.
std::size_t winding_number(const MultiFan& fan);
/// Same count with a caller-chosen direction. Throws PreconditionViolated if
/// xi is orthogonal to some vector of the fan.
std::size_t winding_number(const MultiFan& fan, const LatticeVector& xi);

enum class EquivalenceMode {
  kRotations,
  /// Rotations of the fan and of its reversed traversal -v_{k-1}, ..., -v_0.
  kRotationsAndReversal,
};

/// Lexicographically least representative (vectors compared by (x, y)).
MultiFan canonical_form(const MultiFan& fan, EquivalenceMode mode);
bool fans_equivalent(const MultiFan& a, const MultiFan& b, EquivalenceMode mode);

/// The same sphere cycle traversed backwards: -v_{k-1}, ..., -v_0.
MultiFan reversed_traversal(const MultiFan& fan);

MultiFanFamily family_union(const MultiFanFamily& a, const MultiFanFamily& b);

}  // namespace acx4
