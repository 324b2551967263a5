#include "acx4/invariants.hpp"

#include "acx4/error.hpp"

namespace acx4 {

GenericDirection choose_generic_direction(const MultiFanFamily& fam) {
  std::vector<LatticeVector> all;
  for (const auto& fan : fam.fans()) all.insert(all.end(), fan.vectors().begin(), fan.vectors().end());
  return {first_generic_direction(all)};
}

KosniowskiCounts kosniowski_counts(const MultiFanFamily& fam, const GenericDirection& dir) {
  KosniowskiCounts counts;
  for (const auto& fan : fam.fans()) {
    const auto k = static_cast<std::ptrdiff_t>(fan.size());
    for (std::ptrdiff_t i = 0; i < k; ++i) {
      const Integer out = dot(fan.cyclic(i), dir.xi);
      const Integer in = -dot(fan.cyclic(i - 1), dir.xi);
      if (out.is_zero() || in.is_zero()) {
        throw Error(ErrorCode::kPreconditionViolated,
                    "direction " + to_string(dir.xi) + " is not generic for this family");
      }
      const int negative = (out < 0 ? 1 : 0) + (in < 0 ? 1 : 0);
      if (negative == 0) ++counts.a0;
      else if (negative == 1) ++counts.a1;
      else ++counts.a2;
    }
  }
  return counts;
}

std::int64_t todd_genus(const MultiFanFamily& fam) {
  std::int64_t total = 0;
  for (const auto& fan : fam.fans()) total += static_cast<std::int64_t>(winding_number(fan));
  return total;
}

std::int64_t fixed_point_count(const MultiFanFamily& fam) {
  std::int64_t total = 0;
  for (const auto& fan : fam.fans()) total += static_cast<std::int64_t>(fan.size());
  return total;
}

ChiYReport report_from_counts(const KosniowskiCounts& c) {
  ChiYReport r;
  r.a0 = c.a0;
  r.a1 = c.a1;
  r.a2 = c.a2;
  r.todd = c.a0;
  r.euler = c.a0 + c.a1 + c.a2;
  r.signature = c.a0 - c.a1 + c.a2;
  r.c1_sq = 10 * c.a0 - c.a1;
  r.c2 = 2 * c.a0 + c.a1;
  return r;
}

ChiYReport chi_y_report(const MultiFanFamily& fam) {
  const auto counts = kosniowski_counts(fam, choose_generic_direction(fam));
  if (counts.a0 != counts.a2) {
    internal_inconsistency("Kosniowski counts a0 = " + std::to_string(counts.a0) +
                           " and a2 = " + std::to_string(counts.a2) + " differ");
  }
  const std::int64_t todd = todd_genus(fam);
  if (counts.a0 != todd) {
    internal_inconsistency("Kosniowski a0 = " + std::to_string(counts.a0) +
                           " disagrees with winding-number Todd genus " + std::to_string(todd));
  }
  return report_from_counts(counts);
}

}  // namespace acx4
