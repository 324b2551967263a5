#include "acx4/lattice.hpp"

#include "acx4/error.hpp"

namespace acx4 {

std::string to_string(const LatticeVector& v) {
  return "(" + v.x.str() + "," + v.y.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const LatticeVector& v) {
  return os << to_string(v);
}

Integer det2(const LatticeVector& u, const LatticeVector& v) {
  return u.x * v.y - u.y * v.x;
}

Integer dot(const LatticeVector& u, const LatticeVector& v) {
  return u.x * v.x + u.y * v.y;
}

Integer norm_sq(const LatticeVector& v) { return v.x * v.x + v.y * v.y; }

bool is_basis(const LatticeVector& u, const LatticeVector& v) {
  return abs(det2(u, v)) == 1;
}

int reduction_choice(const LatticeVector& v1, const LatticeVector& v2) {
  if (!is_basis(v1, v2)) {
    throw Error(ErrorCode::kPreconditionViolated,
                "reduction_choice: " + to_string(v1) + ", " + to_string(v2) +
                    " is not a basis");
  }
  const Integer n1 = norm_sq(v1);
  const Integer n2 = norm_sq(v2);
  if (!(n1 < n2)) {
    throw Error(ErrorCode::kPreconditionViolated,
                "reduction_choice: requires |v1| < |v2|");
  }
  const Integer minus = norm_sq(v2 - v1);
  const Integer plus = norm_sq(v2 + v1);
  if (minus < n2 && !(plus < minus)) return -1;
  if (plus < n2) return +1;
  // Unreachable for a basis with strictly ordered norms.
  internal_inconsistency("reduction_choice: neither sign shortens " + to_string(v2));
}

LatticeVector first_generic_direction(std::span<const LatticeVector> vectors) {
  // <(1,N), v> = x + N*y vanishes for at most one N per direction, so the scan
  // stops after at most |vectors| + 1 candidates.
  for (const auto& v : vectors) {
    if (v.is_zero()) {
      throw Error(ErrorCode::kPreconditionViolated,
                  "first_generic_direction: zero vector has no generic direction");
    }
  }
  for (long long n = 1;; ++n) {
    const LatticeVector xi(1, n);
    bool generic = true;
    for (const auto& v : vectors) {
      if (dot(xi, v).is_zero()) {
        generic = false;
        break;
      }
    }
    if (generic) return xi;
  }
}

}  // namespace acx4
