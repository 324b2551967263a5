#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "acx4/multifan.hpp"

namespace acx4 {

/// Tangent weights {v_{j,i}, -v_{j,i-1}} at the fixed point p_{j,i}.
struct FixedPointDatum {
  std::size_t fan_index = 0;
  std::size_t position = 0;
  std::array<LatticeVector, 2> weights;

  friend bool operator==(const FixedPointDatum&, const FixedPointDatum&) = default;
};

std::vector<FixedPointDatum> fixed_point_data(const MultiFanFamily& fam);

/// A disk bundle over an invariant sphere, to be plumbed with its neighbours.
struct PlumbingPiece {
  Integer euler_number;
  std::array<LatticeVector, 2> sphere_weights;

  friend bool operator==(const PlumbingPiece&, const PlumbingPiece&) = default;
};

std::vector<PlumbingPiece> plumbing_description(const MultiFan& fan);

struct ThreePointForm {
  LatticeVector v1;
  LatticeVector v2;
};

/// Requires k = 3. Every such fan reads v1, v2, -v1-v2.
ThreePointForm recognize_three(const MultiFan& fan);

/// Rotated by `rotation`, the fan reads v1, v2, -v1 + a*v2, -v2.
struct FourPointForm {
  LatticeVector v1;
  LatticeVector v2;
  Integer a;
  std::size_t rotation = 0;
};

/// Requires k = 4. Scans rotations 0..3 and returns the first that fits.
FourPointForm recognize_four(const MultiFan& fan);

MultiFan make_cp2_fan(const LatticeVector& v1, const LatticeVector& v2);
MultiFan make_hirzebruch_fan(const LatticeVector& v1, const LatticeVector& v2, const Integer& n);

/// (1,0),(0,sign),(-1,0),(0,-sign) repeated `revolutions` times; winding
/// number equals `revolutions`. sign must be +1 or -1.
MultiFan make_minimal_fan(int sign, std::size_t revolutions = 1);
MultiFanFamily make_minimal_family(const std::vector<int>& signs);

/// (1,0),(2,1),(-3,-1),(4,1),...,(-k,-1) with k = 2*n0 + 1.
MultiFan make_todd_fan(std::int64_t n0);

/// A one-fan family with chi_y coefficients (n0, n1, n0). Throws
/// NonPositiveInput unless both arguments are at least 1.
MultiFanFamily realize_chi_y(std::int64_t n0, std::int64_t n1);

/// A family with the given Chern numbers, or NotRealizable when
/// n0 = (c1_sq + c2)/12 and n1 = (5 c2 - c1_sq)/6 are not positive integers.
MultiFanFamily realize_chern(std::int64_t c1_sq, std::int64_t c2);

}  // namespace acx4
