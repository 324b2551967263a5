#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"

#include "acx4/error.hpp"
#include "acx4/multifan.hpp"

namespace testing_util {

inline acx4::MultiFan fan(std::initializer_list<std::pair<long long, long long>> v) {
  std::vector<acx4::LatticeVector> out;
  for (const auto& [x, y] : v) out.emplace_back(x, y);
  return acx4::MultiFan::validate(std::move(out));
}

inline std::vector<acx4::LatticeVector> vecs(std::initializer_list<std::pair<long long, long long>> v) {
  std::vector<acx4::LatticeVector> out;
  for (const auto& [x, y] : v) out.emplace_back(x, y);
  return out;
}

inline acx4::MultiFan cp2() { return fan({{1, 0}, {-1, 1}, {0, -1}}); }
inline acx4::MultiFan sigma(long long n) { return fan({{1, 0}, {0, 1}, {-1, n}, {0, -1}}); }
inline acx4::MultiFan minimal() { return fan({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}); }

template <typename F>
acx4::ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const acx4::Error& e) {
    return e.code();
  }
  FAIL("expected an acx4::Error");
  return acx4::ErrorCode::kInternalInconsistency;
}

template <typename F>
acx4::Error error_of(F&& f) {
  try {
    f();
  } catch (const acx4::Error& e) {
    return e;
  }
  FAIL("expected an acx4::Error");
  throw;
}

}  // namespace testing_util
