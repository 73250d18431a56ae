#pragma once

#include "berggren/bigint.hpp"
#include "berggren/error.hpp"
#include "berggren/ppt.hpp"

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>

namespace berggren {

/// 3x3 integer matrix.
class mat3 {
 public:
  using row_type = std::array<bigint, 3>;

  mat3() = default;
  mat3(std::initializer_list<std::initializer_list<long long>> rows) {
    std::size_t i = 0;
    for (const auto& row : rows) {
      std::size_t j = 0;
      for (long long v : row) m_[i][j++] = v;
      ++i;
    }
  }

  static mat3 identity() { return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}; }

  bigint& operator()(std::size_t i, std::size_t j) { return m_[i][j]; }
  const bigint& operator()(std::size_t i, std::size_t j) const { return m_[i][j]; }

  friend bool operator==(const mat3&, const mat3&) = default;

  friend mat3 operator*(const mat3& a, const mat3& b) {
    mat3 c;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        c.m_[i][j] = a.m_[i][0] * b.m_[0][j] + a.m_[i][1] * b.m_[1][j] + a.m_[i][2] * b.m_[2][j];
    return c;
  }

  friend mat3 operator-(const mat3& a, const mat3& b) {
    mat3 c;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) c.m_[i][j] = a.m_[i][j] - b.m_[i][j];
    return c;
  }

  /// M * (x, y, z)^T
  raw_triple apply(const bigint& x, const bigint& y, const bigint& z) const {
    return {m_[0][0] * x + m_[0][1] * y + m_[0][2] * z,
            m_[1][0] * x + m_[1][1] * y + m_[1][2] * z,
            m_[2][0] * x + m_[2][1] * y + m_[2][2] * z};
  }
  raw_triple apply(const raw_triple& t) const { return apply(t.x, t.y, t.z); }
  raw_triple apply(const ppt& t) const { return apply(t.x(), t.y(), t.z()); }

  bigint det() const {
    return m_[0][0] * (m_[1][1] * m_[2][2] - m_[1][2] * m_[2][1]) -
           m_[0][1] * (m_[1][0] * m_[2][2] - m_[1][2] * m_[2][0]) +
           m_[0][2] * (m_[1][0] * m_[2][1] - m_[1][1] * m_[2][0]);
  }

  /// Integer inverse via the adjugate; empty unless det = +-1.
  std::optional<mat3> integer_inverse() const {
    const bigint d = det();
    if (d != 1 && d != -1) return std::nullopt;
    mat3 inv;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        // cofactor of (j, i)
        const std::size_t r0 = j == 0 ? 1 : 0, r1 = j == 2 ? 1 : 2;
        const std::size_t c0 = i == 0 ? 1 : 0, c1 = i == 2 ? 1 : 2;
        bigint minor = m_[r0][c0] * m_[r1][c1] - m_[r0][c1] * m_[r1][c0];
        if ((i + j) % 2 == 1) minor = -minor;
        inv.m_[i][j] = minor * d;  // d = 1 / d for units
      }
    }
    return inv;
  }

  friend std::ostream& operator<<(std::ostream& os, const mat3& a) {
    os << '[';
    for (std::size_t i = 0; i < 3; ++i) {
      os << (i ? ",[" : "[") << a.m_[i][0] << ',' << a.m_[i][1] << ',' << a.m_[i][2] << ']';
    }
    return os << ']';
  }

 private:
  std::array<row_type, 3> m_{};
};

}  // namespace berggren
