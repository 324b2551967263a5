#include "oracles.hpp"

#include <cmath>
#include <numbers>

#include "acx4/classify.hpp"

namespace oracle {

std::vector<V> to_pairs(const acx4::MultiFan& fan) {
  std::vector<V> out;
  for (const auto& v : fan.vectors()) {
    out.emplace_back(v.x.convert_to<std::int64_t>(), v.y.convert_to<std::int64_t>());
  }
  return out;
}

acx4::MultiFan to_fan(const Fan& raw) {
  std::vector<acx4::LatticeVector> v;
  for (const auto& [x, y] : raw) v.emplace_back(static_cast<long long>(x), static_cast<long long>(y));
  return acx4::MultiFan::validate(std::move(v));
}

namespace {

std::int64_t cross(const V& a, const V& b) { return a.first * b.second - a.second * b.first; }

}  // namespace

std::optional<std::vector<std::int64_t>> recurrence_solution(const Fan& fan) {
  const std::size_t k = fan.size();
  if (k < 3) return std::nullopt;
  std::vector<std::int64_t> a(k);
  for (std::size_t i = 0; i < k; ++i) {
    const V& prev = fan[(i + k - 1) % k];
    const V& cur = fan[i];
    const V& next = fan[(i + 1) % k];
    const std::int64_t d = cross(prev, cur);
    if (d != 1 && d != -1) return std::nullopt;
    // s = -a * cur must hold coordinate-wise with one integer a.
    const V s{next.first + prev.first, next.second + prev.second};
    std::optional<std::int64_t> coef;
    for (const auto& [sc, cc] : {std::pair{s.first, cur.first}, std::pair{s.second, cur.second}}) {
      if (cc == 0) {
        if (sc != 0) return std::nullopt;
        continue;
      }
      if (sc % cc != 0) return std::nullopt;
      const std::int64_t q = -sc / cc;
      if (coef && *coef != q) return std::nullopt;
      coef = q;
    }
    if (!coef) return std::nullopt;
    a[i] = *coef;
  }
  return a;
}

double angle_sum_winding(const Fan& fan) {
  double total = 0.0;
  for (std::size_t i = 0; i < fan.size(); ++i) {
    const V& a = fan[i];
    const V& b = fan[(i + 1) % fan.size()];
    const auto det = static_cast<double>(cross(a, b));
    const auto dot = static_cast<double>(a.first * b.first + a.second * b.second);
    total += std::atan2(det, dot);
  }
  return std::abs(total) / (2 * std::numbers::pi);
}

namespace {

void extend(Fan& cur, int length, int box, std::vector<Fan>& out) {
  if (static_cast<int>(cur.size()) == length) {
    if (recurrence_solution(cur)) out.push_back(cur);
    return;
  }
  for (std::int64_t x = -box; x <= box; ++x) {
    for (std::int64_t y = -box; y <= box; ++y) {
      const V v{x, y};
      // Only prune on the basis condition; the recurrence is checked on the
      // completed cycle.
      if (!cur.empty()) {
        const std::int64_t d = cross(cur.back(), v);
        if (d != 1 && d != -1) continue;
      }
      cur.push_back(v);
      extend(cur, length, box, out);
      cur.pop_back();
    }
  }
}

}  // namespace

std::vector<Fan> enumerate_admissible(int length, int box) {
  std::vector<Fan> out;
  Fan cur;
  extend(cur, length, box, out);
  return out;
}

acx4::MultiFanFamily random_mutations(acx4::SeededRng& rng, acx4::MultiFanFamily fam, int steps) {
  std::vector<acx4::MultiFan> fans = fam.fans();
  for (int s = 0; s < steps; ++s) {
    const std::size_t j = rng.below(fans.size());
    std::vector<std::size_t> downs;
    if (fans[j].size() > 3) {
      const auto a = acx4::self_intersections(fans[j]);
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == -1) downs.push_back(i);
      }
    }
    if (!downs.empty() && rng.coin()) {
      fans[j] = acx4::blow_down_fan(fans[j], downs[rng.below(downs.size())]);
    } else {
      fans[j] = acx4::blow_up_fan(fans[j], rng.below(fans[j].size()));
    }
  }
  return acx4::MultiFanFamily(std::move(fans));
}

acx4::MultiFanFamily random_family(acx4::SeededRng& rng) {
  const std::size_t components = 1 + rng.below(3);
  const std::size_t blowups = rng.below(51);
  auto fam = acx4::gen_random_family(rng.below(UINT64_MAX), components, blowups);
  return random_mutations(rng, std::move(fam), 10);
}

acx4::MultiFan random_fan(acx4::SeededRng& rng, std::size_t revolutions, int blowups) {
  acx4::MultiFan fan = acx4::make_minimal_fan(rng.coin() ? 1 : -1, revolutions);
  for (int s = 0; s < blowups; ++s) fan = acx4::blow_up_fan(fan, rng.below(fan.size()));
  return random_mutations(rng, acx4::MultiFanFamily({fan}), 10)[0];
}

}  // namespace oracle
