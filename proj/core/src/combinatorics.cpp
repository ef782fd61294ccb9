#include "theta/combinatorics.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "theta/error.hpp"

namespace theta {

rational ratio(long num, long den) {
  if (den == 0) throw precondition_error("ratio: zero denominator");
  rational q(num, den);
  q.canonicalize();
  return q;
}

rational ratio(const integer& num, const integer& den) {
  if (den == 0) throw precondition_error("ratio: zero denominator");
  rational q(num, den);
  q.canonicalize();
  return q;
}

bool is_integral(const rational& q) { return q.get_den() == 1; }

integer require_integral(const rational& q, const char* what) {
  if (!is_integral(q))
    throw integrality_error(std::string(what) + " is not an integer: " + str(q));
  return q.get_num();
}

integer factorial(unsigned n) {
  integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

integer pow_integer(const integer& base, unsigned exp) {
  integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

rational pow_rational(const rational& base, long exp) {
  if (exp == 0) return rational(1);
  if (base == 0 && exp < 0)
    throw precondition_error("pow_rational: negative power of zero");
  rational r;
  unsigned long e = exp < 0 ? static_cast<unsigned long>(-exp)
                            : static_cast<unsigned long>(exp);
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
  if (exp < 0) {
    if (r == 0) throw precondition_error("pow_rational: negative power of zero");
    r = 1 / r;
  }
  return r;
}

std::string str(const integer& z) { return z.get_str(); }
std::string str(const rational& q) { return q.get_str(); }

}  // namespace theta

namespace theta::comb {

namespace {

// Memoized recurrence tables. Rows are appended under the mutex and never
// mutated afterwards.
std::mutex table_mutex;
std::vector<std::vector<integer>> stirling_rows;   // stirling_rows[n][k]
std::vector<std::vector<integer>> eulerian_rows;   // eulerian_rows[n] = A_{n,.}
std::vector<rational> bernoulli_values;

void grow_stirling(unsigned n) {
  if (stirling_rows.empty()) stirling_rows.push_back({integer(1)});  // S(0,0)=1
  while (stirling_rows.size() <= n) {
    const auto& prev = stirling_rows.back();
    unsigned m = static_cast<unsigned>(stirling_rows.size());
    std::vector<integer> row(m + 1);
    row[0] = 0;
    for (unsigned k = 1; k <= m; ++k) {
      integer v = (k < prev.size()) ? integer(k * prev[k]) : integer(0);
      if (k - 1 < prev.size()) v += prev[k - 1];
      row[k] = v;
    }
    stirling_rows.push_back(std::move(row));
  }
}

void grow_eulerian(unsigned n) {
  if (eulerian_rows.empty()) {
    eulerian_rows.push_back({});            // no row A_0
    eulerian_rows.push_back({integer(1)});  // A_{1,0} = 1
  }
  while (eulerian_rows.size() <= n) {
    const auto& prev = eulerian_rows.back();
    unsigned m = static_cast<unsigned>(eulerian_rows.size());  // building A_m
    std::vector<integer> row(m);
    for (unsigned k = 0; k < m; ++k) {
      integer v = 0;
      if (k >= 1 && k - 1 < prev.size()) v += integer(m - k) * prev[k - 1];
      if (k < prev.size()) v += integer(k + 1) * prev[k];
      row[k] = v;
    }
    eulerian_rows.push_back(std::move(row));
  }
}

void grow_bernoulli(unsigned n) {
  if (bernoulli_values.empty()) bernoulli_values.push_back(rational(1));
  while (bernoulli_values.size() <= n) {
    unsigned m = static_cast<unsigned>(bernoulli_values.size());
    // sum_{j=0}^{m} C(m+1,j) B_j = 0 for m >= 1.
    rational acc = 0;
    for (unsigned j = 0; j < m; ++j)
      acc += rational(binomial(m + 1, j)) * bernoulli_values[j];
    bernoulli_values.push_back(-acc / rational(m + 1));
  }
}

// Counts surjections of {1..n} onto {1..blocks} by walking the assignment
// tree, pruning branches that cannot cover the remaining blocks.
unsigned long count_surjections(unsigned n, unsigned blocks) {
  unsigned long count = 0;
  std::vector<unsigned> block_sizes(blocks, 0);
  unsigned used = 0;
  // Iterative depth-first walk; choice[i] is the block of element i+1.
  std::vector<unsigned> choice(n, 0);
  unsigned depth = 0;
  while (true) {
    if (depth == n) {
      if (used == blocks) ++count;
    } else if (blocks - used <= n - depth) {
      // descend with choice 0
      choice[depth] = 0;
      if (block_sizes[0]++ == 0) ++used;
      ++depth;
      continue;
    }
    // backtrack to the next sibling
    while (depth > 0) {
      --depth;
      unsigned c = choice[depth];
      if (--block_sizes[c] == 0) --used;
      if (c + 1 < blocks) {
        choice[depth] = c + 1;
        if (block_sizes[c + 1]++ == 0) ++used;
        ++depth;
        break;
      }
    }
    if (depth == 0) break;
  }
  return count;
}

}  // namespace

integer binomial(unsigned n, long k) {
  if (k < 0 || static_cast<unsigned long>(k) > n) return 0;
  integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
  return r;
}

integer stirling2(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::lock_guard lock(table_mutex);
  grow_stirling(n);
  return stirling_rows[n][k];
}

integer eulerian(unsigned n, long k) {
  if (n < 1) throw precondition_error("eulerian: n must be >= 1");
  if (k < 0 || static_cast<unsigned long>(k) >= n) return 0;
  std::lock_guard lock(table_mutex);
  grow_eulerian(n);
  return eulerian_rows[n][static_cast<unsigned>(k)];
}

std::vector<integer> eulerian_row(unsigned n) {
  if (n < 1) throw precondition_error("eulerian_row: n must be >= 1");
  std::lock_guard lock(table_mutex);
  grow_eulerian(n);
  return eulerian_rows[n];
}

integer eulerian_by_formula(unsigned n, unsigned m) {
  if (n < 1) throw precondition_error("eulerian_by_formula: n must be >= 1");
  if (m >= n)
    throw precondition_error("eulerian_by_formula: need 0 <= m <= n-1");
  integer acc = 0;
  for (unsigned k = 0; k <= m; ++k) {
    integer term = binomial(n + 1, k) * pow_integer(integer(m + 1 - k), n);
    if (k % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

std::vector<integer> eulerian_by_descents(unsigned n, int cap) {
  if (n < 1) throw precondition_error("eulerian_by_descents: n must be >= 1");
  if (cap >= 0 && n > static_cast<unsigned>(cap))
    throw enumeration_limit_error("eulerian_by_descents: n = " +
                                  std::to_string(n) + " exceeds cap " +
                                  std::to_string(cap));
  std::vector<integer> histogram(n, integer(0));
  for_each_permutation(n, [&](const permutation& p) {
    unsigned descents = 0;
    for (unsigned i = 0; i + 1 < n; ++i)
      if (p[i] > p[i + 1]) ++descents;
    histogram[descents] += 1;
  });
  return histogram;
}

rational bernoulli(unsigned n) {
  std::lock_guard lock(table_mutex);
  grow_bernoulli(n);
  return bernoulli_values[n];
}

integer ordered_set_partition_count(unsigned n, unsigned blocks, int cap) {
  if (blocks < 1 || blocks > n)
    throw precondition_error(
        "ordered_set_partition_count: need 1 <= blocks <= n");
  if (cap >= 0 && n > static_cast<unsigned>(cap))
    throw enumeration_limit_error("ordered_set_partition_count: n = " +
                                  std::to_string(n) + " exceeds cap " +
                                  std::to_string(cap));
  return integer(count_surjections(n, blocks));
}

void for_each_permutation(unsigned n,
                          const std::function<void(const permutation&)>& fn) {
  permutation p(n);
  std::iota(p.begin(), p.end(), 1);
  do {
    fn(p);
  } while (std::next_permutation(p.begin(), p.end()));
}

}  // namespace theta::comb
