#include "theta/cobordism.hpp"

#include <random>
#include <set>
#include <utility>

#include "theta/combinatorics.hpp"
#include "theta/error.hpp"
#include "theta/genus.hpp"
#include "theta/tlaurent.hpp"

namespace theta::cob {

using ring::mpoly;
using ring::symbol;
using ring::theta_poly;
using ring::tlaurent;
using ring::xseries;

xseries beta_series(unsigned order) {
  if (order < 1) throw precondition_error("beta_series: order must be >= 1");
  xseries r(order);
  r.set_coeff(1, mpoly(1));
  for (unsigned m = 1; m + 1 <= order; ++m)
    r.set_coeff(m + 1, mpoly(ring::monomial(symbol::theta(m)),
                             ratio(integer(1), comb::factorial(m + 1))));
  return r;
}

theta_poly intersection_class(unsigned n, unsigned k) {
  if (k > n) throw precondition_error("intersection_class: need k <= n");
  xseries beta = beta_series(n + 1);
  mpoly c = beta.pow(k + 1).coeff(n + 1);
  return theta_poly(rational(comb::factorial(n + 1)) * c);
}

integer curve_genus(unsigned n) {
  if (n < 1) throw precondition_error("curve_genus: need n >= 1");
  mpoly td = genus::evaluate(genus::todd(), intersection_class(n, n - 1));
  if (!td.is_constant())
    throw formula_violation_error("curve_genus: Todd value is not a scalar: " +
                                  td.str());
  return require_integral(rational(1) - td.constant_term(), "curve genus");
}

evaluation_point random_point(unsigned n, std::uint64_t seed) {
  if (seed == 0) {
    std::random_device rd;
    do {
      seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    } while (seed == 0);
  }
  // raw engine output modulo the range keeps the draw identical across
  // standard libraries, unlike uniform_int_distribution
  std::mt19937_64 rng(seed);
  std::set<std::uint64_t> used;
  evaluation_point pt;
  pt.seed = seed;
  while (pt.z.size() < n + 1) {
    std::uint64_t v = 1 + rng() % 1000000;
    if (!used.insert(v).second) continue;
    pt.z.push_back(rational(static_cast<unsigned long>(v)));
  }
  return pt;
}

namespace {

void validate_point(unsigned n, const evaluation_point& pt) {
  if (pt.z.size() != n + 1)
    throw precondition_error("permutohedral_class: point must have n+1 values");
  for (std::size_t i = 0; i < pt.z.size(); ++i)
    for (std::size_t j = i + 1; j < pt.z.size(); ++j)
      if (pt.z[i] == pt.z[j])
        throw precondition_error(
            "permutohedral_class: evaluation values must be pairwise "
            "distinct");
}

// 1/β(t·w) as a Laurent polynomial on the window [-1, n-1]: the coefficient
// of t^{m-1} is G_m w^{m-1}, where G = u/β(u) has G_m of pure grade m
tlaurent reciprocal_factor(const xseries& g, const rational& w, unsigned n) {
  tlaurent f(-1, static_cast<int>(n) - 1, n);
  rational wpow = 1 / w;
  for (unsigned m = 0; m <= n; ++m) {
    f.set_coeff(static_cast<int>(m) - 1,
                ring::theta_poly(mpoly(wpow) * g.coeff(m)));
    wpow *= w;
  }
  return f;
}

}  // namespace

theta_poly permutohedral_class(unsigned n, const evaluation_point& pt) {
  if (n < 1) throw precondition_error("permutohedral_class: need n >= 1");
  validate_point(n, pt);

  // G = u / β(u), inverted termwise; constant term is 1
  xseries beta = beta_series(n + 1);
  xseries beta_over_u(n);
  for (unsigned m = 0; m <= n; ++m)
    beta_over_u.set_coeff(m, beta.coeff(m + 1));
  xseries g = xseries::constant(mpoly(1), n).divide(beta_over_u);

  // one factor per ordered pair (i, j), i != j, keyed as i*(n+1)+j
  std::vector<tlaurent> factors;
  factors.reserve((n + 1) * (n + 1));
  for (unsigned i = 0; i <= n; ++i)
    for (unsigned j = 0; j <= n; ++j) {
      if (i == j)
        factors.push_back(tlaurent(0, 0, n));
      else
        factors.push_back(
            reciprocal_factor(g, rational(pt.z[i] - pt.z[j]), n));
    }

  tlaurent sum(-static_cast<int>(n), 0, n);
  comb::for_each_permutation(n + 1, [&](const comb::permutation& p) {
    tlaurent prod = factors[static_cast<unsigned>(p[0] - 1) * (n + 1) +
                            static_cast<unsigned>(p[1] - 1)];
    for (unsigned i = 1; i < n; ++i)
      prod = prod * factors[static_cast<unsigned>(p[i] - 1) * (n + 1) +
                            static_cast<unsigned>(p[i + 1] - 1)];
    // every term of the n-factor product has theta-grade (exponent + n), so
    // the grade cap leaves nothing above t^0; anything else is a bug
    for (int e = 1; e <= prod.hi(); ++e)
      if (!prod.coeff(e).is_zero())
        throw error("permutohedral_class: grading violation at t^" +
                    std::to_string(e) + ": " + prod.coeff(e).str());
    sum = sum + prod.restrict_window(-static_cast<int>(n), 0);
  });

  for (int e : sum.principal_exponents())
    throw formula_violation_error(
        "permutohedral_class: principal part does not vanish at t^" +
        std::to_string(e) + ", residue " + sum.coeff(e).str());
  return sum.constant_coeff();
}

independence_report class_independence_check(unsigned n, unsigned trials,
                                             std::uint64_t seed) {
  if (trials < 2)
    throw precondition_error("class_independence_check: need trials >= 2");
  independence_report rep;
  rep.n = n;
  rep.trials = trials;
  for (unsigned t = 0; t < trials; ++t) {
    evaluation_point pt = random_point(n, seed == 0 ? 0 : seed + t);
    rep.seeds.push_back(pt.seed);
    rep.values.push_back(permutohedral_class(n, pt));
  }
  for (const auto& v : rep.values) {
    bool seen = false;
    for (const auto& d : rep.distinct)
      if (d == v) {
        seen = true;
        break;
      }
    if (!seen) rep.distinct.push_back(v);
  }
  rep.all_equal = rep.distinct.size() == 1;
  return rep;
}

}  // namespace theta::cob
