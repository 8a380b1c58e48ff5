#include "rootbalance/coord_vector.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "rootbalance/errors.hpp"

namespace rootbalance {

CoordVector CoordVector::basis(std::size_t dim, std::size_t i, int multiple) {
  if (i == 0 || i > dim)
    throw DimensionMismatch("basis index " + std::to_string(i) + " outside dimension " +
                            std::to_string(dim));
  CoordVector v(dim);
  v.coords_[i - 1] = 2 * multiple;
  return v;
}

CoordVector CoordVector::from_true(std::initializer_list<int> coords) {
  CoordVector v(coords.size());
  std::size_t k = 0;
  for (int c : coords) v.coords_[k++] = 2 * c;
  return v;
}

bool CoordVector::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c == 0; });
}

CoordVector& CoordVector::operator+=(const CoordVector& rhs) {
  if (dim() != rhs.dim()) throw DimensionMismatch("vector addition across dimensions");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
  return *this;
}

CoordVector& CoordVector::operator-=(const CoordVector& rhs) {
  if (dim() != rhs.dim()) throw DimensionMismatch("vector subtraction across dimensions");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
  return *this;
}

CoordVector& CoordVector::operator*=(int k) {
  for (int& c : coords_) c *= k;
  return *this;
}

CoordVector CoordVector::operator-() const {
  CoordVector r = *this;
  r *= -1;
  return r;
}

namespace {

std::string half_units(int c) {
  if (c % 2 == 0) return std::to_string(c / 2);
  return std::to_string(c) + "/2";
}

} // namespace

std::string CoordVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ',';
    os << half_units(coords_[i]);
  }
  os << ')';
  return os.str();
}

std::string CoordVector::expression() const {
  if (is_zero()) return "0";
  const bool half = std::any_of(coords_.begin(), coords_.end(), [](int c) { return c % 2 != 0; });
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    int c = half ? coords_[i] : coords_[i] / 2;
    if (c == 0) continue;
    if (c < 0)
      os << '-';
    else if (!first)
      os << '+';
    if (std::abs(c) != 1) os << std::abs(c);
    os << 'e' << (i + 1);
    first = false;
  }
  return half ? "1/2(" + os.str() + ")" : os.str();
}

std::ostream& operator<<(std::ostream& os, const CoordVector& v) { return os << v.to_string(); }

std::size_t CoordVectorHash::operator()(const CoordVector& v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (int c : v.doubled()) {
    h ^= static_cast<std::size_t>(static_cast<unsigned>(c));
    h *= 0x100000001b3ull;
  }
  return h;
}

long long scaled_inner(const CoordVector& a, const CoordVector& b) {
  if (a.dim() != b.dim())
    throw DimensionMismatch("inner product of vectors of dimension " + std::to_string(a.dim()) +
                            " and " + std::to_string(b.dim()));
  long long acc = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) acc += static_cast<long long>(a[i]) * b[i];
  return acc;
}

std::vector<std::size_t> support(const CoordVector& v) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.dim(); ++i)
    if (v[i] != 0) out.push_back(i + 1);
  return out;
}

} // namespace rootbalance
