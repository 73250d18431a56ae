#pragma once

// Incircle and circumcircle radii of descendants, and closed forms along the
// pure A^n, B^n, C^n chains from (3, 4, 5).

#include "berggren/bigint.hpp"
#include "berggren/error.hpp"
#include "berggren/path.hpp"
#include "berggren/ppt.hpp"
#include "berggren/quad_ring.hpp"
#include "berggren/tree.hpp"

#include <cstdint>
#include <string>

namespace berggren {

struct chain_point {
  letter chain;
  std::uint64_t n;
  ppt triple;
  bigint r;
  rational R;
};

/// r_A = r - y + z, r_B = r + z, r_C = r - x + z.
inline bigint child_inradius(const ppt& t, letter l) {
  const bigint r = inradius(t);
  switch (l) {
    case letter::A: return r - t.y() + t.z();
    case letter::B: return r + t.z();
    case letter::C: return r - t.x() + t.z();
  }
  return r;
}

/// R_A = x - y + 3R, R_B = x + y + 3R, R_C = -x + y + 3R.
inline rational child_circumradius(const ppt& t, letter l) {
  const rational three_r = 3 * circumradius(t);
  switch (l) {
    case letter::A: return rational(t.x() - t.y()) + three_r;
    case letter::B: return rational(t.x() + t.y()) + three_r;
    case letter::C: return rational(t.y() - t.x()) + three_r;
  }
  return three_r;
}

/// A: n + 1. C: 2n + 1. B: q_{n+1} / 2 where (3 + 2 sqrt 2)^(n+1) = p + q sqrt 2.
/// n = 0 gives the root's inradius 1 for every chain.
inline bigint chain_inradius(letter l, std::uint64_t n) {
  const bigint k = n;
  switch (l) {
    case letter::A: return k + 1;
    case letter::C: return 2 * k + 1;
    case letter::B: {
      const quad_int s = silver_power(n + 1);
      if (is_odd(s.b)) throw error(error_code::invariant_violation, "odd sqrt2 coefficient in B-chain inradius");
      return s.b / 2;
    }
  }
  return k;
}

/// A: n^2 + 3n + 5/2. C: 2n^2 + 4n + 5/2. B: (5 p_n + 7 q_n) / 2.
inline rational chain_circumradius(letter l, std::uint64_t n) {
  const bigint k = n;
  const rational five_halves(5, 2);
  switch (l) {
    case letter::A: return rational(k * k + 3 * k) + five_halves;
    case letter::C: return rational(2 * k * k + 4 * k) + five_halves;
    case letter::B: {
      const quad_int s = silver_power(n);
      return rational(5 * s.a + 7 * s.b, 2);
    }
  }
  return five_halves;
}

/// Triple from the closed-form matrix power, radii from the chain formulas,
/// cross-checked against direct computation.
inline chain_point make_chain_point(letter l, std::uint64_t n) {
  raw_triple raw = matrix_power(l, n).apply(ppt::root());
  ppt triple = ppt::make(std::move(raw.x), std::move(raw.y), std::move(raw.z));
  chain_point cp{l, n, triple, chain_inradius(l, n), chain_circumradius(l, n)};
  if (cp.r != inradius(triple) || cp.R != circumradius(triple))
    throw error(error_code::invariant_violation,
                std::string(1, to_char(l)) + "-chain radii disagree with the triple at n=" + std::to_string(n));
  return cp;
}

}  // namespace berggren
