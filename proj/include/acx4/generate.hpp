#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "acx4/multifan.hpp"

namespace acx4 {

/// mt19937_64 with a portable bounded draw. The standard distributions are
/// implementation-defined, which would make seeded output differ between
/// standard libraries.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  bool coin() { return below(2) == 1; }

 private:
  std::mt19937_64 engine_;
};

/// Starts from one minimal fan per component and applies `blowups` blow-ups,
/// each at a uniformly chosen fan and then a uniformly chosen position. The
/// component orientations are `signs` when given (one per component) and are
/// otherwise drawn from the seed. Requires components >= 1.
MultiFanFamily gen_random_family(std::uint64_t seed, std::size_t components, std::size_t blowups,
                                 const std::optional<std::vector<int>>& signs = std::nullopt);

}  // namespace acx4
