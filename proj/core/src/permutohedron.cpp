#include "theta/permutohedron.hpp"

#include <algorithm>

#include "theta/error.hpp"

namespace theta::perm {

using ring::monomial;
using ring::mpoly;
using ring::symbol;

fvector f_vector(unsigned n) {
  fvector r{n, std::vector<integer>(n + 1)};
  for (unsigned k = 0; k <= n; ++k)
    r.counts[n - k] = comb::factorial(k + 1) * comb::stirling2(n + 1, k + 1);
  return r;
}

fvector face_oracle(unsigned n, int cap) {
  if (cap >= 0 && n > static_cast<unsigned>(cap))
    throw enumeration_limit_error("face_oracle: n = " + std::to_string(n) +
                                  " exceeds cap " + std::to_string(cap));
  fvector r{n, std::vector<integer>(n + 1)};
  for (unsigned k = 0; k <= n; ++k)
    r.counts[n - k] =
        comb::ordered_set_partition_count(n + 1, k + 1, static_cast<int>(n) + 1);
  return r;
}

mpoly f_poly(unsigned n) {
  fvector f = f_vector(n);
  mpoly acc;
  for (unsigned k = 0; k <= n; ++k)
    acc += mpoly(monomial::from_factors({{symbol::s(), n - k}, {symbol::t(), k}}),
                 rational(f.counts[n - k]));
  return acc;
}

mpoly h_poly(unsigned n) {
  return f_poly(n).subst(symbol::s(), mpoly(symbol::s()) - mpoly(symbol::t()));
}

std::vector<integer> h_vector(unsigned n) {
  mpoly h = h_poly(n);
  std::vector<integer> r(n + 1);
  for (unsigned k = 0; k <= n; ++k) {
    rational c = h.coeff(
        monomial::from_factors({{symbol::s(), k}, {symbol::t(), n - k}}));
    r[k] = require_integral(c, "h-vector entry");
  }
  return r;
}

integer toric_betti(unsigned n, unsigned k) {
  if (k > n) throw precondition_error("toric_betti: need k <= n");
  return comb::eulerian(n + 1, k);
}

std::vector<rational> default_height(unsigned n) {
  std::vector<rational> h(n + 1);
  integer p = 1;
  for (unsigned i = 0; i <= n; ++i) {
    h[i] = rational(p);
    p *= 2;
  }
  return h;
}

std::vector<integer> vertex_index_oracle(unsigned n,
                                         const std::vector<rational>& height,
                                         int cap) {
  if (height.size() != n + 1)
    throw precondition_error("vertex_index_oracle: need n+1 height values");
  if (cap >= 0 && n + 1 > static_cast<unsigned>(cap))
    throw enumeration_limit_error("vertex_index_oracle: n+1 = " +
                                  std::to_string(n + 1) + " exceeds cap " +
                                  std::to_string(cap));

  // A vertex is the point (p_1,...,p_{n+1}); its neighbors swap the entries
  // holding the consecutive values k and k+1, which changes the height by
  // height[pos(k)] - height[pos(k+1)].  The index is how many of those n
  // moves go down.  A zero difference ties the vertex with a neighbor, so
  // the index is ill defined and the height is rejected.  Ties between
  // non-adjacent vertices are harmless.
  std::vector<integer> histogram(n + 1, integer(0));
  std::vector<unsigned> pos(n + 2);
  comb::for_each_permutation(n + 1, [&](const comb::permutation& p) {
    for (unsigned i = 0; i <= n; ++i) pos[static_cast<unsigned>(p[i])] = i;
    unsigned index = 0;
    for (unsigned k = 1; k <= n; ++k) {
      if (height[pos[k]] == height[pos[k + 1]])
        throw degenerate_height_error(
            "vertex_index_oracle: a vertex ties with its neighbor swapping " +
            std::to_string(k) + " and " + std::to_string(k + 1));
      if (height[pos[k]] < height[pos[k + 1]]) ++index;
    }
    histogram[index] += 1;
  });
  return histogram;
}

}  // namespace theta::perm
