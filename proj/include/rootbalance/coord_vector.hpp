#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace rootbalance {

/// Exact vector in the ambient space, stored in half-units: an entry k
/// stands for the true coordinate k/2. Half-spin roots therefore have odd
/// entries and all other roots even ones.
class CoordVector {
public:
  CoordVector() = default;
  explicit CoordVector(std::size_t dim) : coords_(dim, 0) {}
  explicit CoordVector(std::vector<int> doubled) : coords_(std::move(doubled)) {}
  CoordVector(std::initializer_list<int> doubled) : coords_(doubled) {}

  /// multiple * e_i with i 1-based.
  static CoordVector basis(std::size_t dim, std::size_t i, int multiple = 1);
  /// Builds from true integer coordinates.
  static CoordVector from_true(std::initializer_list<int> coords);

  std::size_t dim() const noexcept { return coords_.size(); }
  int operator[](std::size_t i) const { return coords_[i]; }
  int& operator[](std::size_t i) { return coords_[i]; }
  std::span<const int> doubled() const noexcept { return coords_; }

  bool is_zero() const noexcept;

  CoordVector& operator+=(const CoordVector& rhs);
  CoordVector& operator-=(const CoordVector& rhs);
  CoordVector& operator*=(int k);
  CoordVector operator-() const;

  friend CoordVector operator+(CoordVector a, const CoordVector& b) { return a += b; }
  friend CoordVector operator-(CoordVector a, const CoordVector& b) { return a -= b; }
  friend CoordVector operator*(int k, CoordVector a) { return a *= k; }

  friend bool operator==(const CoordVector&, const CoordVector&) = default;
  friend auto operator<=>(const CoordVector& a, const CoordVector& b) {
    return a.coords_ <=> b.coords_;
  }

  /// True coordinates, halves written as "1/2".
  std::string to_string() const;
  /// Expression in the basis e_i, e.g. "e1-e3", "2e4", "1/2(e1-e2+...)".
  std::string expression() const;

private:
  std::vector<int> coords_;
};

std::ostream& operator<<(std::ostream& os, const CoordVector& v);

struct CoordVectorHash {
  std::size_t operator()(const CoordVector& v) const noexcept;
};

/// 4 * <a, b>; the factor comes from the half-unit storage of both sides.
long long scaled_inner(const CoordVector& a, const CoordVector& b);

/// 1-based indices of nonzero coordinates.
std::vector<std::size_t> support(const CoordVector& v);

} // namespace rootbalance
