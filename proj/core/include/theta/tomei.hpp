#pragma once

#include <string>
#include <vector>

#include "theta/numeric.hpp"

namespace theta::tomei {

// mod-2 Betti numbers and Euler characteristic of the Tomei manifold
struct invariants {
  unsigned n = 0;
  std::vector<integer> betti;  // b_0..b_n = Eulerian row A_{n+1}
  integer euler;               // Bernoulli closed form, checked against
                               // the alternating Betti sum
  friend bool operator==(const invariants&, const invariants&) = default;
};

invariants tomei_invariants(unsigned n);

struct triality_row {
  unsigned k = 0;
  integer tomei_betti;  // b_k(M_T^n)
  integer toric_betti;  // b_{2k}(X_Π^n)
  integer signed_chi;   // (-1)^{n-k} chi^k(Θ^n)
  bool equal = false;
};

// the three-way agreement of Betti data across the Tomei manifold, the
// permutohedral variety, and the theta divisor; for even n also the
// chi = tau = tau coincidence
struct triality_report {
  unsigned n = 0;
  std::vector<triality_row> rows;
  bool has_signature_triple = false;
  integer chi_tomei;
  integer tau_xpi;
  integer tau_theta;
  bool signature_equal = false;
  bool all_equal = false;
};

triality_report triality(unsigned n);

}  // namespace theta::tomei
