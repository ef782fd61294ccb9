#pragma once

#include <cstdint>
#include <vector>

#include "theta/theta_poly.hpp"
#include "theta/xseries.hpp"

namespace theta::cob {

inline constexpr std::uint64_t default_seed = 987654321;

// z + sum_{m>=1} θ_m z^{m+1}/(m+1)!
ring::xseries beta_series(unsigned order);

// (n+1)! times the coefficient of z^{n+1} in beta_series^{k+1};
// homogeneous of theta-grade n-k
ring::theta_poly intersection_class(unsigned n, unsigned k);

// genus of the curve obtained by intersecting n-1 theta divisors:
// 1 - Td(intersection_class(n, n-1)), which must equal 1 + n(n+1)!/2
integer curve_genus(unsigned n);

// n+1 pairwise distinct rational evaluation values for the z_i
struct evaluation_point {
  std::vector<rational> z;
  std::uint64_t seed = 0;  // seed actually used to draw the values
};

// distinct uniform integers in [1, 10^6] from a seeded mt19937_64
evaluation_point random_point(unsigned n, std::uint64_t seed = default_seed);

// Sum over S_{n+1} of prod_i 1/β(t w_i), w_i = z_{σ(i)} - z_{σ(i+1)},
// expanded as a Laurent polynomial in t with theta-grade cap n.  The
// principal part of the sum must vanish; the t^0 coefficient is the class.
// A nonvanishing principal part raises formula_violation_error naming the
// offending exponent and residue.
ring::theta_poly permutohedral_class(unsigned n, const evaluation_point& pt);

struct independence_report {
  unsigned n = 0;
  unsigned trials = 0;
  std::vector<std::uint64_t> seeds;
  std::vector<ring::theta_poly> values;    // one per trial
  std::vector<ring::theta_poly> distinct;  // distinct values observed
  bool all_equal = false;
};

// recompute permutohedral_class at `trials` independently drawn points;
// the class must not depend on the point
independence_report class_independence_check(unsigned n, unsigned trials,
                                             std::uint64_t seed = default_seed);

}  // namespace theta::cob
