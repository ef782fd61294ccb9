#pragma once

#include <vector>

#include "theta/combinatorics.hpp"
#include "theta/mpoly.hpp"

namespace theta::perm {

inline constexpr int default_face_cap = 7;

// face counts by dimension: counts[d] = number of d-dimensional faces,
// the polytope itself included as the single n-face
struct fvector {
  unsigned n = 0;
  std::vector<integer> counts;

  friend bool operator==(const fvector&, const fvector&) = default;
};

// f_{n-k} = (k+1)! S(n+1, k+1)
fvector f_vector(unsigned n);

// same counts by exhaustive enumeration of ordered set partitions
fvector face_oracle(unsigned n, int cap = default_face_cap);

// sum_k f_{n-k} s^{n-k} t^k
ring::mpoly f_poly(unsigned n);

// f_poly with s -> s - t; coefficients are the Eulerian row A_{n+1}
ring::mpoly h_poly(unsigned n);

// h_0..h_n with h_k the coefficient of s^k t^{n-k} in h_poly
std::vector<integer> h_vector(unsigned n);

// even Betti number b_{2k} of the permutohedral toric variety = A_{n+1,k}
integer toric_betti(unsigned n, unsigned k);

// generic default height (1, 2, 4, ..., 2^n)
std::vector<rational> default_height(unsigned n);

// Histogram over vertex indices for a height function given by n+1 pairwise
// distinct values: the index of a vertex is the number of adjacent vertices
// (consecutive-value swaps) of strictly smaller height.  A tie between a
// vertex and one of its neighbors raises degenerate_height_error.  The cap
// bounds n+1, the number of points being permuted.
std::vector<integer> vertex_index_oracle(unsigned n,
                                         const std::vector<rational>& height,
                                         int cap = comb::default_enum_cap);

}  // namespace theta::perm
