#ifndef THETA_COMBINATORICS_HPP
#define THETA_COMBINATORICS_HPP

#include <functional>
#include <vector>

#include "theta/numeric.hpp"

namespace theta::comb {

using theta::factorial;

// Default cap for the exhaustive enumeration oracles (n! growth).
inline constexpr int default_enum_cap = 9;

// C(n, k); zero when k < 0 or k > n.
integer binomial(unsigned n, long k);

// Stirling numbers of the second kind, S(0,0) = 1,
// S(n+1,k) = k S(n,k) + S(n,k-1).
integer stirling2(unsigned n, unsigned k);

// Eulerian number A_{n,k} via the recurrence
// A_{n,k} = (n-k) A_{n-1,k-1} + (k+1) A_{n-1,k}; zero outside 0 <= k <= n-1.
integer eulerian(unsigned n, long k);

// The full row (A_{n,0}, ..., A_{n,n-1}).
std::vector<integer> eulerian_row(unsigned n);

// A_{n,m} as the alternating binomial sum
// sum_{k=0}^{m} (-1)^k C(n+1,k) (m+1-k)^n.
integer eulerian_by_formula(unsigned n, unsigned m);

// Descent histogram of S_n by exhaustive enumeration: entry k counts the
// permutations with exactly k descents. Throws enumeration_limit_error when
// n exceeds the cap.
std::vector<integer> eulerian_by_descents(unsigned n, int cap = default_enum_cap);

// Bernoulli number B_n under the convention u/(e^u - 1) = sum B_n u^n / n!.
rational bernoulli(unsigned n);

// Number of ordered set partitions of an n-set into `blocks` nonempty blocks,
// counted by direct enumeration of surjections (not via the Stirling
// recurrence). Equals blocks! * S(n, blocks). Throws enumeration_limit_error
// when n exceeds the cap.
integer ordered_set_partition_count(unsigned n, unsigned blocks,
                                    int cap = default_enum_cap);

// A permutation of {1..n} as its sequence of images.
using permutation = std::vector<int>;

// Visits every permutation of {1..n} in lexicographic order.
void for_each_permutation(unsigned n,
                          const std::function<void(const permutation&)>& fn);

}  // namespace theta::comb

#endif
