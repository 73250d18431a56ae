#pragma once

// Brute-force reference implementations for cross-checking the closed forms
// and constructions elsewhere in the library. Deliberately shares nothing with
// them beyond the triple type: no closed-form powers, no divisor construction,
// its own copy of the three generating matrices.

#include "berggren/bigint.hpp"
#include "berggren/matrix.hpp"
#include "berggren/path.hpp"
#include "berggren/ppt.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace berggren::oracle {

inline mat3 base_matrix(letter l) {
  switch (l) {
    case letter::A: return {{1, -2, 2}, {2, -1, 2}, {2, -2, 3}};
    case letter::B: return {{1, 2, 2}, {2, 1, 2}, {2, 2, 3}};
    case letter::C: return {{-1, 2, 2}, {-2, 1, 2}, {-2, 2, 3}};
  }
  return mat3::identity();
}

/// Every (m, n) with m^2 + n^2 <= z_bound, m > n >= 1, coprime, opposite
/// parity, mapped through Euclid's formula. Sorted by z, then x.
inline std::vector<ppt> scan_ppt_by_hypotenuse(std::uint64_t z_bound) {
  std::vector<ppt> out;
  for (std::uint64_t m = 2; m * m + 1 <= z_bound; ++m) {
    for (std::uint64_t n = 1; n < m && m * m + n * n <= z_bound; ++n) {
      if ((m - n) % 2 == 0 || std::gcd(m, n) != 1) continue;
      out.push_back(from_euclid(euclid_pair::make(m, n)));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Tries every factorization r = n * d (found by trial division), builds
/// (m^2 - n^2, 2mn, m^2 + n^2) with m = n + d and keeps whatever passes full
/// triple validation.
inline std::vector<ppt> scan_ppt_by_inradius(std::uint64_t r) {
  std::vector<ppt> out;
  for (std::uint64_t n = 1; n <= r; ++n) {
    if (r % n != 0) continue;
    const bigint bn = n;
    const bigint m = bn + r / n;
    const bigint x = m * m - bn * bn;
    const bigint y = 2 * m * bn;
    const bigint z = m * m + bn * bn;
    if (check_canonical(x, y, z)) continue;
    out.push_back(ppt::make(x, y, z));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// n-fold product of the base matrix.
inline mat3 naive_matrix_power(letter l, std::uint64_t n) {
  const mat3 base = base_matrix(l);
  mat3 result = mat3::identity();
  for (std::uint64_t i = 0; i < n; ++i) result = result * base;
  return result;
}

/// (p_n, q_n) with (3 + 2 sqrt 2)^n = p_n + q_n sqrt 2, by
/// p_{k+1} = 3 p_k + 4 q_k, q_{k+1} = 2 p_k + 3 q_k from (1, 0).
inline std::pair<bigint, bigint> pell_recurrence(std::uint64_t n) {
  bigint p = 1;
  bigint q = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    bigint next_p = 3 * p + 4 * q;
    q = 2 * p + 3 * q;
    p = std::move(next_p);
  }
  return {p, q};
}

}  // namespace berggren::oracle
