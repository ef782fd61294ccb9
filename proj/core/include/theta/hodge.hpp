#pragma once

#include <string>
#include <vector>

#include "theta/mpoly.hpp"
#include "theta/numeric.hpp"

namespace theta::hodge {

// middle-row correction S_{n,p} via the closed binomial formula; the
// rational prefactor must cancel, enforced by an integrality check
integer s_correction_closed(unsigned n, unsigned p);

// the same quantity recomputed as (-1)^{n-p} sum_{q != n-p} (-1)^q h^{p,q},
// which uses only the off-middle binomial products
integer s_correction_oracle(unsigned n, unsigned p);

// h^{p,q}(Θ^n): C(n+1,p)C(n+1,q) below the middle row, C(n+1,p+1)C(n+1,q+1)
// above it, A_{n+1,p} - S_{n,p} on it
integer hodge_number(unsigned n, unsigned p, unsigned q,
                     bool middle_via_oracle = false);

struct hodge_diamond {
  unsigned n = 0;
  std::vector<std::vector<integer>> h;  // h[p][q], 0 <= p,q <= n
  std::vector<integer> betti;           // b_0..b_{2n}

  friend bool operator==(const hodge_diamond&, const hodge_diamond&) = default;
};

hodge_diamond diamond(unsigned n, bool middle_via_oracle = false);

// (-1)^n (n+1)!
integer euler_char_theta(unsigned n);

// 2^{n+2}(2^{n+2}-1)/(n+2) * B_{n+2}; n must be even; asserted integral and
// equal to the alternating Eulerian sum
integer signature_theta(unsigned n);

// h^{p,q} of the permutohedral variety: diagonal Eulerian numbers
integer hodge_xpi(unsigned n, unsigned p, unsigned q);

struct duality_pairing {
  std::string label;
  std::string lhs;
  std::string rhs;
  bool equal = false;
};

// the Betti-vs-chi^k pairings, the Poincare-polynomial identity, and (for
// even n) the two signature computations
struct duality_report {
  unsigned n = 0;
  std::vector<duality_pairing> pairings;
  bool all_equal = false;
};

duality_report duality(unsigned n);

std::string diamond_text(const hodge_diamond& d);
std::string diamond_latex(const hodge_diamond& d);

}  // namespace theta::hodge
