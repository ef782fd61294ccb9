#include "theta/tomei.hpp"

#include <algorithm>

#include "theta/combinatorics.hpp"
#include "theta/error.hpp"
#include "theta/genus.hpp"
#include "theta/hodge.hpp"
#include "theta/permutohedron.hpp"

namespace theta::tomei {

invariants tomei_invariants(unsigned n) {
  invariants r;
  r.n = n;
  r.betti = comb::eulerian_row(n + 1);
  integer power = pow_integer(integer(2), n + 2);
  rational closed =
      ratio(power * (power - 1), integer(n + 2)) * comb::bernoulli(n + 2);
  r.euler = require_integral(closed, "Tomei Euler characteristic");
  integer alt = 0;
  for (unsigned k = 0; k <= n; ++k)
    alt += (k % 2 == 0) ? r.betti[k] : integer(-r.betti[k]);
  if (alt != r.euler)
    throw formula_violation_error(
        "tomei_invariants: Bernoulli form " + str(r.euler) +
        " disagrees with the alternating Betti sum " + str(alt));
  return r;
}

triality_report triality(unsigned n) {
  triality_report rep;
  rep.n = n;
  invariants inv = tomei_invariants(n);
  for (unsigned k = 0; k <= n; ++k) {
    triality_row row;
    row.k = k;
    row.tomei_betti = inv.betti[k];
    row.toric_betti = perm::toric_betti(n, k);
    integer chi = genus::chi_p(n, k);
    row.signed_chi = (n - k) % 2 == 0 ? chi : integer(-chi);
    row.equal =
        row.tomei_betti == row.toric_betti && row.toric_betti == row.signed_chi;
    rep.rows.push_back(row);
  }
  rep.all_equal = std::all_of(rep.rows.begin(), rep.rows.end(),
                              [](const triality_row& r) { return r.equal; });
  if (n % 2 == 0) {
    rep.has_signature_triple = true;
    rep.chi_tomei = inv.euler;
    rep.tau_xpi = 0;
    for (unsigned k = 0; k <= n; ++k) {
      integer b = perm::toric_betti(n, k);
      rep.tau_xpi += (k % 2 == 0) ? b : integer(-b);
    }
    rep.tau_theta = hodge::signature_theta(n);
    rep.signature_equal =
        rep.chi_tomei == rep.tau_xpi && rep.tau_xpi == rep.tau_theta;
    rep.all_equal = rep.all_equal && rep.signature_equal;
  }
  return rep;
}

}  // namespace theta::tomei
