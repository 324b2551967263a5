#include "acx4/classify.hpp"

#include "acx4/error.hpp"

namespace acx4 {

std::vector<FixedPointDatum> fixed_point_data(const MultiFanFamily& fam) {
  std::vector<FixedPointDatum> out;
  for (std::size_t j = 0; j < fam.size(); ++j) {
    const auto& fan = fam[j];
    for (std::size_t i = 0; i < fan.size(); ++i) {
      out.push_back({j, i, {fan[i], -fan.cyclic(static_cast<std::ptrdiff_t>(i) - 1)}});
    }
  }
  return out;
}

std::vector<PlumbingPiece> plumbing_description(const MultiFan& fan) {
  const auto a = self_intersections(fan);
  std::vector<PlumbingPiece> out;
  out.reserve(fan.size());
  for (std::size_t i = 0; i < fan.size(); ++i) {
    out.push_back({a[i], {fan[i], -fan.cyclic(static_cast<std::ptrdiff_t>(i) - 1)}});
  }
  return out;
}

ThreePointForm recognize_three(const MultiFan& fan) {
  if (fan.size() != 3) {
    throw Error(ErrorCode::kPreconditionViolated,
                "recognize_three needs 3 vectors, got " + std::to_string(fan.size()));
  }
  if (fan[2] != -fan[0] - fan[1]) {
    internal_inconsistency("three-point fan " + to_string(fan[0]) + "," + to_string(fan[1]) + "," +
                           to_string(fan[2]) + " is not of the form v1, v2, -v1-v2");
  }
  return {fan[0], fan[1]};
}

FourPointForm recognize_four(const MultiFan& fan) {
  if (fan.size() != 4) {
    throw Error(ErrorCode::kPreconditionViolated,
                "recognize_four needs 4 vectors, got " + std::to_string(fan.size()));
  }
  for (std::size_t r = 0; r < 4; ++r) {
    const auto& w1 = fan[r];
    const auto& w2 = fan[(r + 1) % 4];
    const auto& w3 = fan[(r + 2) % 4];
    const auto& w4 = fan[(r + 3) % 4];
    if (w4 != -w2) continue;
    // det(w1, w2) = +-1, so a is exact whenever the normal form exists.
    const Integer a = det2(w1, w3) * det2(w1, w2);
    if (w3 == -w1 + a * w2) return {w1, w2, a, r};
  }
  internal_inconsistency("four-point fan admits no rotation of the form v1, v2, -v1+a*v2, -v2");
}

MultiFan make_cp2_fan(const LatticeVector& v1, const LatticeVector& v2) {
  return MultiFan::validate({v1, v2, -v1 - v2});
}

MultiFan make_hirzebruch_fan(const LatticeVector& v1, const LatticeVector& v2, const Integer& n) {
  return MultiFan::validate({v1, v2, -v1 + n * v2, -v2});
}

MultiFan make_minimal_fan(int sign, std::size_t revolutions) {
  if ((sign != 1 && sign != -1) || revolutions == 0) {
    throw Error(ErrorCode::kPreconditionViolated,
                "minimal fan needs sign +-1 and at least one revolution");
  }
  std::vector<LatticeVector> v;
  for (std::size_t s = 0; s < revolutions; ++s) {
    v.insert(v.end(), {{1, 0}, {0, sign}, {-1, 0}, {0, -sign}});
  }
  return MultiFan::validate(std::move(v));
}

MultiFanFamily make_minimal_family(const std::vector<int>& signs) {
  if (signs.empty()) throw Error(ErrorCode::kEmptyFamily, "no signs given");
  std::vector<MultiFan> fans;
  for (int s : signs) fans.push_back(make_minimal_fan(s));
  return MultiFanFamily(std::move(fans));
}

MultiFan make_todd_fan(std::int64_t n0) {
  if (n0 < 1) {
    throw Error(ErrorCode::kNonPositiveInput, "n0 must be at least 1, got " + std::to_string(n0));
  }
  const std::int64_t k = 2 * n0 + 1;
  std::vector<LatticeVector> v{{1, 0}};
  for (std::int64_t j = 2; j <= k; ++j) {
    v.push_back(j % 2 == 0 ? LatticeVector(j, 1) : LatticeVector(-j, -1));
  }
  return MultiFan::validate(std::move(v));
}

MultiFanFamily realize_chi_y(std::int64_t n0, std::int64_t n1) {
  if (n0 < 1 || n1 < 1) {
    throw Error(ErrorCode::kNonPositiveInput,
                "n0 and n1 must be positive, got (" + std::to_string(n0) + ", " +
                    std::to_string(n1) + ")");
  }
  MultiFan fan = make_todd_fan(n0);
  for (std::int64_t s = 1; s < n1; ++s) fan = blow_up_fan(fan, 0);
  return MultiFanFamily({fan});
}

MultiFanFamily realize_chern(std::int64_t c1_sq, std::int64_t c2) {
  const Integer p0 = Integer(c1_sq) + c2;
  const Integer p1 = 5 * Integer(c2) - c1_sq;
  auto fraction = [](const Integer& num, int den) {
    return num % den == 0 ? (num / den).str() : num.str() + "/" + std::to_string(den);
  };
  if (p0 % 12 != 0 || p1 % 6 != 0 || p0 <= 0 || p1 <= 0) {
    throw Error(ErrorCode::kNotRealizable, "(c1_sq, c2) = (" + std::to_string(c1_sq) + ", " +
                                               std::to_string(c2) + ") gives n0 = " +
                                               fraction(p0, 12) + ", n1 = " + fraction(p1, 6));
  }
  return realize_chi_y((p0 / 12).convert_to<std::int64_t>(), (p1 / 6).convert_to<std::int64_t>());
}

}  // namespace acx4
