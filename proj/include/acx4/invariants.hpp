#pragma once

#include <cstdint>

#include "acx4/lattice.hpp"
#include "acx4/multifan.hpp"

namespace acx4 {

/// A direction xi with <xi, v> != 0 for every vector v of some family. It
/// splits the plane into R+ = {<., xi> > 0} and R- = {<., xi> < 0}.
struct GenericDirection {
  LatticeVector xi;
};

/// xi = (1, N) for the least N >= 1 that is generic for every vector in fam.
GenericDirection choose_generic_direction(const MultiFanFamily& fam);

/// Fixed points classified by how many of their two weights {v_i, -v_{i-1}}
/// fall in R-: a[d] counts the points with d negative weights.
struct KosniowskiCounts {
  std::int64_t a0 = 0;
  std::int64_t a1 = 0;
  std::int64_t a2 = 0;

  friend bool operator==(const KosniowskiCounts&, const KosniowskiCounts&) = default;
};

/// Throws PreconditionViolated if xi is not generic for fam.
KosniowskiCounts kosniowski_counts(const MultiFanFamily& fam, const GenericDirection& xi);

/// Sum of the winding numbers of the member fans.
std::int64_t todd_genus(const MultiFanFamily& fam);

std::int64_t fixed_point_count(const MultiFanFamily& fam);

/// chi_y = a0 - a1*y + a2*y^2 together with its evaluations and the Chern
/// numbers it determines in real dimension 4.
struct ChiYReport {
  std::int64_t a0 = 0;
  std::int64_t a1 = 0;
  std::int64_t a2 = 0;
  std::int64_t todd = 0;       // chi_0 = a0
  std::int64_t euler = 0;      // chi_{-1} = a0 + a1 + a2
  std::int64_t signature = 0;  // chi_1 = a0 - a1 + a2
  std::int64_t c1_sq = 0;      // 10 a0 - a1
  std::int64_t c2 = 0;         // 2 a0 + a1

  friend bool operator==(const ChiYReport&, const ChiYReport&) = default;
};

/// Builds the report from the Kosniowski counts at choose_generic_direction.
/// Cross-checks a0 == a2 and a0 == todd_genus(fam); a mismatch raises
/// InternalInconsistency.
ChiYReport chi_y_report(const MultiFanFamily& fam);

/// Report with all derived fields filled in from (a0, a1, a2).
ChiYReport report_from_counts(const KosniowskiCounts& counts);

}  // namespace acx4
