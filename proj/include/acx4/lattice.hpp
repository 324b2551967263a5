#pragma once

#include <compare>
#include <ostream>
#include <span>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace acx4 {

// Exact integers. Repeated blow-ups add vectors, so coordinates are unbounded.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;

/// A point of Z^2. Fan vectors, edge labels and weights are all LatticeVectors.
struct LatticeVector {
  Integer x;
  Integer y;

  LatticeVector() = default;
  LatticeVector(Integer x_, Integer y_) : x(std::move(x_)), y(std::move(y_)) {}
  LatticeVector(long long x_, long long y_) : x(x_), y(y_) {}

  bool is_zero() const { return x.is_zero() && y.is_zero(); }

  friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.x == b.x && a.y == b.y;
  }
  /// Lexicographic (x, then y).
  friend std::strong_ordering operator<=>(const LatticeVector& a, const LatticeVector& b) {
    if (a.x < b.x) return std::strong_ordering::less;
    if (b.x < a.x) return std::strong_ordering::greater;
    if (a.y < b.y) return std::strong_ordering::less;
    if (b.y < a.y) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
    return {a.x + b.x, a.y + b.y};
  }
  friend LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
    return {a.x - b.x, a.y - b.y};
  }
  friend LatticeVector operator-(const LatticeVector& a) { return {-a.x, -a.y}; }
  friend LatticeVector operator*(const Integer& k, const LatticeVector& a) {
    return {k * a.x, k * a.y};
  }
};

std::string to_string(const LatticeVector& v);
std::ostream& operator<<(std::ostream& os, const LatticeVector& v);

/// u.x*v.y - u.y*v.x
Integer det2(const LatticeVector& u, const LatticeVector& v);
Integer dot(const LatticeVector& u, const LatticeVector& v);
Integer norm_sq(const LatticeVector& v);

/// True iff |det2(u, v)| == 1.
bool is_basis(const LatticeVector& u, const LatticeVector& v);

/// For a basis (v1, v2) with |v1| < |v2|, returns the sign s in {-1, +1} such
/// that |v2 + s*v1| < |v2|. When both signs shrink v2 the one giving the
/// smaller result wins; an exact tie returns -1.
/// Throws PreconditionViolated when the inputs are not a basis or the norms
/// are not strictly ordered.
int reduction_choice(const LatticeVector& v1, const LatticeVector& v2);

/// The first xi = (1, N), N = 1, 2, ..., with <xi, v> != 0 for every v.
/// Every v must be nonzero.
LatticeVector first_generic_direction(std::span<const LatticeVector> vectors);

}  // namespace acx4
