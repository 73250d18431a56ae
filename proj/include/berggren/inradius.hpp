#pragma once

/// Counting and constructing all primitive triples with a prescribed inradius.
///
/// With Euclid's parametrization the inradius is r = n (m - n). Writing
/// d = m - n, the triples with inradius r correspond exactly to splittings
/// r = n * d with d odd and gcd(n, d) = 1, i.e. to the unitary divisors of r
/// that absorb the whole power of two. Hence 2^omega(r) triples for odd r and
/// 2^(omega(r) - 1) for even r.

#include "berggren/bigint.hpp"
#include "berggren/error.hpp"
#include "berggren/ppt.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace berggren {

struct prime_power {
  bigint prime;
  unsigned exponent;

  friend bool operator==(const prime_power&, const prime_power&) = default;
};

/// Ascending primes; empty for 1.
struct factorization {
  std::vector<prime_power> prime_powers;

  std::size_t omega() const noexcept { return prime_powers.size(); }

  bigint product() const {
    bigint p = 1;
    for (const auto& pp : prime_powers) p *= pow(pp.prime, pp.exponent);
    return p;
  }

  friend bool operator==(const factorization&, const factorization&) = default;
};

namespace detail {

inline bool miller_rabin_round(const bigint& n, const bigint& base, const bigint& d, unsigned s) {
  bigint x = boost::multiprecision::powm(base, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < s; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return true;
  }
  return false;
}

// The first twelve prime bases are a deterministic witness set below
// 3.3 * 10^24; beyond that the test is probabilistic with 12 fixed bases
// plus 20 extra bases.
inline bool is_prime(const bigint& n) {
  if (n < 2) return false;
  static constexpr unsigned small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (unsigned p : small) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  bigint d = n - 1;
  unsigned s = 0;
  while (is_even(d)) {
    d >>= 1;
    ++s;
  }
  for (unsigned p : small)
    if (!miller_rabin_round(n, p, d, s)) return false;
  if (n.convert_to<double>() > 3.3e24) {
    for (unsigned p = 41; p < 41 + 2 * 20; p += 2)
      if (!miller_rabin_round(n, p, d, s)) return false;
  }
  return true;
}

// Brent's variant of Pollard's rho; n must be odd and composite.
inline bigint pollard_brent(const bigint& n) {
  for (bigint c = 1;; ++c) {
    bigint y = 2, x, g = 1, q = 1, ys;
    std::size_t r = 1;
    const std::size_t m = 128;
    auto f = [&](const bigint& v) { return (v * v + c) % n; };
    do {
      x = y;
      for (std::size_t i = 0; i < r; ++i) y = f(y);
      std::size_t k = 0;
      do {
        ys = y;
        for (std::size_t i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = (q * abs(x - y)) % n;
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

inline void split(const bigint& n, std::map<bigint, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  bigint factor = pollard_brent(n);
  split(factor, out);
  split(n / factor, out);
}

}  // namespace detail

/// Trial division by small primes, then Miller-Rabin and Pollard-Brent on the
/// remaining cofactor. Exact and deterministic below 3.3 * 10^24; larger
/// inputs are correct with overwhelming probability but may be slow.
inline factorization factorize(bigint r) {
  if (r < 1) throw error(error_code::non_positive, "factorize needs r >= 1");
  std::map<bigint, unsigned> found;
  for (unsigned p = 2; p < 1000 && r > 1; p += (p == 2 ? 1 : 2)) {
    while (r % p == 0) {
      ++found[p];
      r /= p;
    }
    if (bigint(p) * p > r) break;
  }
  if (r > 1) detail::split(r, found);
  factorization f;
  for (auto& [prime, exponent] : found) f.prime_powers.push_back({prime, exponent});
  return f;
}

inline bigint count_with_inradius(const bigint& r) {
  const factorization f = factorize(r);
  const auto omega = static_cast<unsigned>(f.omega());
  if (is_odd(r)) return pow(bigint(2), omega);
  return pow(bigint(2), omega - 1);
}

/// All PPTs with inradius r, ascending by hypotenuse: for each split
/// r = n * d with d odd and gcd(n, d) = 1, emit Euclid(m = n + d, n).
inline std::vector<ppt> enumerate_with_inradius(const bigint& r) {
  const factorization f = factorize(r);
  bigint forced = 1;  // the power of two must sit in n
  std::vector<bigint> odd_parts;
  for (const auto& pp : f.prime_powers) {
    if (pp.prime == 2)
      forced = pow(bigint(2), pp.exponent);
    else
      odd_parts.push_back(pow(pp.prime, pp.exponent));
  }
  if (odd_parts.size() >= 63) throw error(error_code::invariant_violation, "too many prime factors to enumerate");

  std::vector<ppt> out;
  const std::uint64_t subsets = std::uint64_t{1} << odd_parts.size();
  out.reserve(subsets);
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    bigint n = forced;
    for (std::size_t i = 0; i < odd_parts.size(); ++i)
      if (mask >> i & 1U) n *= odd_parts[i];
    const bigint d = r / n;
    out.push_back(from_euclid(euclid_pair::make(n + d, n)));
  }
  std::sort(out.begin(), out.end());
  if (bigint(out.size()) != count_with_inradius(r))
    throw error(error_code::invariant_violation, "inradius enumeration size disagrees with the count");
  for (const auto& t : out)
    if (inradius(t) != r) throw error(error_code::invariant_violation, "enumerated triple has the wrong inradius");
  return out;
}

}  // namespace berggren
