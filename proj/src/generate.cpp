#include "acx4/generate.hpp"

#include "acx4/classify.hpp"
#include "acx4/error.hpp"

namespace acx4 {

std::uint64_t SeededRng::below(std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorCode::kPreconditionViolated, "empty range");
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t r;
  do {
    r = engine_();
  } while (r >= limit);
  return r % bound;
}

std::int64_t SeededRng::between(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw Error(ErrorCode::kPreconditionViolated, "empty range");
  const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + below(span));
}

MultiFanFamily gen_random_family(std::uint64_t seed, std::size_t components, std::size_t blowups,
                                 const std::optional<std::vector<int>>& signs) {
  if (components == 0) {
    throw Error(ErrorCode::kPreconditionViolated, "components must be at least 1");
  }
  if (signs && signs->size() != components) {
    throw Error(ErrorCode::kPreconditionViolated,
                "got " + std::to_string(signs->size()) + " signs for " +
                    std::to_string(components) + " components");
  }
  SeededRng rng(seed);
  std::vector<int> chosen;
  for (std::size_t j = 0; j < components; ++j) {
    chosen.push_back(signs ? (*signs)[j] : (rng.coin() ? 1 : -1));
  }
  std::vector<MultiFan> fans = make_minimal_family(chosen).fans();
  for (std::size_t n = 0; n < blowups; ++n) {
    const std::size_t j = rng.below(fans.size());
    const std::size_t i = rng.below(fans[j].size());
    fans[j] = blow_up_fan(fans[j], i);
  }
  return MultiFanFamily(std::move(fans));
}

}  // namespace acx4
