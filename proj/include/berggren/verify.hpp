#pragma once

// Main-path vs. oracle checks for every claimed identity. Shared by the
// `verify` subcommand and the acceptance suite.

#include "berggren/bigint.hpp"
#include "berggren/error.hpp"
#include "berggren/geometry.hpp"
#include "berggren/inradius.hpp"
#include "berggren/oracle.hpp"
#include "berggren/path.hpp"
#include "berggren/ppt.hpp"
#include "berggren/quad_ring.hpp"
#include "berggren/radius.hpp"
#include "berggren/tree.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <future>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace berggren::verify {

struct check_result {
  std::string name;
  bool passed = true;
  std::string detail;  // first counterexample, or a case count on success
  std::uint64_t cases = 0;
  double seconds = 0;
};

struct options {
  std::uint64_t max_z = 10'000;
  std::uint64_t max_n = 30;
  std::uint64_t max_r = 500;
  std::uint64_t max_lemma_n = 500;
  std::uint64_t samples = 10'000;
  std::size_t max_depth = 25;
  std::uint64_t seed = 20240101;
  unsigned jobs = 1;
};

namespace detail {

inline bool relative_close(double a, double b, double tol) {
  return std::fabs(a - b) <= tol * std::max(std::fabs(a), std::fabs(b));
}

template <typename Body>
check_result run(std::string name, Body&& body) {
  check_result res;
  res.name = std::move(name);
  const auto start = std::chrono::steady_clock::now();
  auto fail = [&res](const std::string& why) {
    if (res.passed) {
      res.passed = false;
      res.detail = why;
    }
  };
  try {
    body(res, fail);
  } catch (const std::exception& e) {
    fail(std::string("exception: ") + e.what());
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (res.passed && res.detail.empty()) res.detail = std::to_string(res.cases) + " cases";
  return res;
}

template <typename T>
std::string show(const T& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

}  // namespace detail

/// Euclid parametrization round trip for all valid pairs with m <= max_m.
inline check_result check_euclid_round_trip(std::uint64_t max_m) {
  return detail::run("Euclid parametrization is a bijection (round trip)", [&](check_result& res, auto fail) {
    for (std::uint64_t m = 2; m <= max_m; ++m)
      for (std::uint64_t n = 1; n < m; ++n) {
        auto pair = euclid_pair::try_make(m, n);
        if (!pair) continue;
        ++res.cases;
        if (!(to_euclid(from_euclid(*pair)) == *pair))
          return fail("m=" + std::to_string(m) + " n=" + std::to_string(n));
      }
  });
}

/// |enumerate_with_inradius(r)| = 2^omega(r) or 2^(omega(r) - 1), and the set
/// equals the brute-force factorization scan.
inline check_result check_robbins_count(std::uint64_t max_r) {
  return detail::run("Inradius count 2^omega(r) and unitary-divisor enumeration", [&](check_result& res, auto fail) {
    for (std::uint64_t r = 1; r <= max_r; ++r) {
      ++res.cases;
      const auto main = enumerate_with_inradius(r);
      const auto scan = oracle::scan_ppt_by_inradius(r);
      if (bigint(main.size()) != count_with_inradius(r))
        return fail("r=" + std::to_string(r) + ": size " + std::to_string(main.size()) + " != count");
      if (main != scan) return fail("r=" + std::to_string(r) + ": enumeration differs from oracle scan");
    }
  });
}

/// Breadth-first tree enumeration with z <= max_z equals the Euclid-pair scan,
/// without duplicates.
inline check_result check_tree_coverage(const tree& tr, std::uint64_t max_z) {
  return detail::run("Berggren tree covers every PPT exactly once", [&](check_result& res, auto fail) {
    const auto scan = oracle::scan_ppt_by_hypotenuse(max_z);
    std::set<ppt> seen;
    for (const auto& node : tr.enumerate(max_z)) {
      ++res.cases;
      if (!seen.insert(node.triple).second) return fail("duplicate " + detail::show(node.triple));
      if (seen.size() > scan.size()) return fail("more nodes than PPTs with z <= bound");
    }
    if (!std::equal(seen.begin(), seen.end(), scan.begin(), scan.end()))
      return fail("tree has " + std::to_string(seen.size()) + " nodes, scan has " + std::to_string(scan.size()));
  });
}

/// Closed-form A^n, B^n, C^n against repeated multiplication; the generator
/// set in use must be the n = 1 case.
inline check_result check_closed_form_powers(const tree& tr, std::uint64_t max_n) {
  return detail::run("Closed-form powers A^n, B^n, C^n", [&](check_result& res, auto fail) {
    for (letter l : all_letters) {
      if (!(matrix_power(l, 1) == tr.generators()[l]))
        return fail(std::string(1, to_char(l)) + " generator differs from the closed form at n=1");
      for (std::uint64_t n = 0; n <= max_n; ++n) {
        ++res.cases;
        if (!(matrix_power(l, n) == oracle::naive_matrix_power(l, n)))
          return fail(std::string(1, to_char(l)) + "^" + std::to_string(n));
      }
    }
    for (std::uint64_t n = 0; n <= std::max<std::uint64_t>(max_n, 200); ++n) {
      const auto [p, q] = oracle::pell_recurrence(n);
      const quad_int s = silver_power(n);
      if (s.a != p || s.b != q) return fail("(3+2sqrt2)^" + std::to_string(n) + " differs from the recurrence");
      if (norm(s) != 1) return fail("norm of (3+2sqrt2)^" + std::to_string(n) + " is not 1");
    }
  });
}

/// A^(n-1) (3, 4, 5)^T = F(1, n).
inline check_result check_lemma_f1n(std::uint64_t max_n) {
  return detail::run("A^(n-1)(3,4,5) = F(1,n)", [&](check_result& res, auto fail) {
    for (std::uint64_t n = 1; n <= max_n; ++n) {
      ++res.cases;
      if (!lemma_f1n_check(n)) return fail("n=" + std::to_string(n));
      const bigint k = n;
      if (!(f_param(1, k) == raw_triple{2 * k + 1, 2 * k * k + 2 * k, 2 * k * k + 2 * k + 1}))
        return fail("F(1," + std::to_string(n) + ") differs from (2n+1, 2n^2+2n, 2n^2+2n+1)");
    }
  });
}

/// r_A, r_B, r_C and R_A, R_B, R_C against the radii of the actual children.
inline check_result check_radius_recurrences(const tree& tr, std::uint64_t max_z) {
  return detail::run("Descendant inradius and circumradius recurrences", [&](check_result& res, auto fail) {
    for (const auto& t : oracle::scan_ppt_by_hypotenuse(max_z)) {
      for (letter l : all_letters) {
        ++res.cases;
        const ppt child = tr.descend(t, l);
        if (child_inradius(t, l) != inradius(child))
          return fail("r_" + std::string(1, to_char(l)) + " at " + detail::show(t));
        if (child_circumradius(t, l) != circumradius(child))
          return fail("R_" + std::string(1, to_char(l)) + " at " + detail::show(t));
      }
    }
  });
}

/// Chain formulas against n-fold descent from (3, 4, 5).
inline check_result check_chains(const tree& tr, std::uint64_t max_n) {
  return detail::run("Inradius and circumradius along the A, B, C chains", [&](check_result& res, auto fail) {
    for (letter l : all_letters) {
      ppt t = ppt::root();
      for (std::uint64_t n = 1; n <= max_n; ++n) {
        ++res.cases;
        t = tr.descend(t, l);
        const std::string where = std::string(1, to_char(l)) + " n=" + std::to_string(n);
        if (chain_inradius(l, n) != inradius(t)) return fail("inradius " + where);
        if (chain_circumradius(l, n) != circumradius(t)) return fail("circumradius " + where);
        if (!(make_chain_point(l, n).triple == t)) return fail("closed-form triple " + where);
      }
    }
    for (std::uint64_t n = 1; n <= max_n; ++n) {
      if (chain_inradius(letter::A, n) != n + 1) return fail("r(A,n) != n+1");
      if (chain_inradius(letter::C, n) != 2 * n + 1) return fail("r(C,n) != 2n+1");
      if (n >= 2 && chain_inradius(letter::B, n + 1) != 6 * chain_inradius(letter::B, n) - chain_inradius(letter::B, n - 1))
        return fail("B-chain inradius breaks r_{n+1} = 6 r_n - r_{n-1} at n=" + std::to_string(n));
    }
    if (chain_inradius(letter::B, 1) != 6) return fail("r(B,1) != 6");
    if (chain_circumradius(letter::B, 1) != rational(29, 2)) return fail("R(B,1) != 29/2");
  });
}

/// Plane, area, non-rightness and radii of the descendant triangle.
inline check_result check_descendant_geometry(const tree& tr, std::uint64_t max_z) {
  return detail::run("Geometry of the descendant triangle", [&](check_result& res, auto fail) {
    for (const auto& t : oracle::scan_ppt_by_hypotenuse(max_z)) {
      ++res.cases;
      const bigint& x = t.x();
      const bigint& y = t.y();
      const std::string at = " at " + detail::show(t);
      const auto pts = descendant_points(t, tr);
      const plane pl = descendant_plane(t);
      for (const auto& p : pts)
        if (!pl.contains(p)) return fail("point off plane (2,2,-3,z)" + at);
      const auto e = edges_of(pts);
      if (!(cross(e.u, e.v) == vec3{8 * x * y, 8 * x * y, -12 * x * y})) return fail("u x v != (8xy,8xy,-12xy)" + at);
      if (rational(norm2(cross(e.u, e.v)), 4) != descendant_area(t).squared() ||
          descendant_area(t).squared() != rational(68 * x * x * y * y))
        return fail("area^2 != 68x^2y^2" + at);
      const auto [uv, uw, vw] = check_non_right(t, tr);
      if (uv == 0 || uw == 0 || vw == 0) return fail("right angle" + at);
      if (uv != -32 * x * y + 36 * y * y || uw != -32 * x * y || vw != 36 * x * x - 32 * x * y)
        return fail("dot products differ from closed forms" + at);
      const auto m = descendant_triangle_metrics(t, tr);
      if (norm2(e.v) != 4 * m.D) return fail("|v|^2 != 4D" + at);
      if (17 * m.circumradius_sq != rational(81 * m.D)) return fail("17R^2 != 81D" + at);
      const auto generic = triangle_radii_from_vectors(pts[0], pts[1], pts[2]);
      if (!detail::relative_close(m.inradius_float, generic.inradius, 1e-12)) return fail("inradius float" + at);
      if (!detail::relative_close(m.inradius_float, inradius_quotient_form(t), 1e-12))
        return fail("inradius forms disagree" + at);
      if (!detail::relative_close(m.circumradius_float, generic.circumradius, 1e-12))
        return fail("circumradius float" + at);
      if (!detail::relative_close(m.circumradius_float * m.circumradius_float, to_double(m.circumradius_sq), 1e-12))
        return fail("R_float^2 vs 81D/17" + at);
    }
  });
}

/// descend_path(path_of(t)) = t over random paths, and parent undoes descend.
inline check_result check_round_trip(const tree& tr, std::uint64_t samples, std::size_t max_depth,
                                     std::uint64_t seed) {
  return detail::run("Unique ascent: path_of and descend_path are inverse", [&](check_result& res, auto fail) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> depth(0, max_depth);
    std::uniform_int_distribution<int> pick(0, 2);
    for (std::uint64_t i = 0; i < samples; ++i) {
      ++res.cases;
      tree_path path;
      for (std::size_t d = depth(rng); d > 0; --d) path.push_back(static_cast<letter>(pick(rng)));
      const ppt t = tr.descend_path(path);
      const tree_path back = tr.path_of(t);
      if (!(back == path)) return fail("path_of(descend_path(\"" + path.str() + "\")) = \"" + back.str() + "\"");
      if (!(tr.descend_path(back) == t)) return fail("descend_path(path_of(t)) != t for \"" + path.str() + "\"");
      const letter l = static_cast<letter>(pick(rng));
      const auto up = tr.parent(tr.descend(t, l));
      if (!up || !(up->triple == t) || up->via != l) return fail("parent(descend(t, l)) != (t, l)");
    }
  });
}

inline std::vector<check_result> run_all(const options& opt, const tree& tr = standard_tree()) {
  std::vector<std::function<check_result()>> checks{
      [&] { return check_euclid_round_trip(200); },
      [&] { return check_robbins_count(opt.max_r); },
      [&] { return check_tree_coverage(tr, opt.max_z); },
      [&] { return check_closed_form_powers(tr, opt.max_n); },
      [&] { return check_lemma_f1n(opt.max_lemma_n); },
      [&] { return check_radius_recurrences(tr, opt.max_z); },
      [&] { return check_chains(tr, opt.max_n); },
      [&] { return check_descendant_geometry(tr, opt.max_z); },
      [&] { return check_round_trip(tr, opt.samples, opt.max_depth, opt.seed); },
  };
  std::vector<check_result> results;
  if (opt.jobs <= 1) {
    for (auto& check : checks) results.push_back(check());
    return results;
  }
  std::vector<std::future<check_result>> running;
  for (auto& check : checks) running.push_back(std::async(std::launch::async, check));
  for (auto& f : running) results.push_back(f.get());
  return results;
}

}  // namespace berggren::verify
