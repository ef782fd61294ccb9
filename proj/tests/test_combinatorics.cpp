#include <doctest.h>

#include "theta/combinatorics.hpp"
#include "theta/error.hpp"

using namespace theta;
using namespace theta::comb;

TEST_SUITE("combinatorics") {

TEST_CASE("binomial handles edges and known values") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(40, 20) == integer("137846528820"));
}

TEST_CASE("stirling2 satisfies the recurrence and known rows") {
  CHECK(stirling2(0, 0) == 1);
  CHECK(stirling2(4, 2) == 7);
  CHECK(stirling2(5, 2) == 15);
  CHECK(stirling2(5, 3) == 25);
  // S(n+1,2) = 2^n - 1
  for (unsigned n = 1; n <= 12; ++n)
    CHECK(stirling2(n + 1, 2) == pow_integer(2, n) - 1);
  for (unsigned n = 1; n <= 10; ++n)
    for (unsigned k = 1; k <= n; ++k)
      CHECK(stirling2(n, k) ==
            integer(k) * stirling2(n - 1, k) + stirling2(n - 1, k - 1));
}

TEST_CASE("eulerian rows match the published triangles") {
  CHECK(eulerian_row(1) == std::vector<integer>{1});
  CHECK(eulerian_row(3) == std::vector<integer>{1, 4, 1});
  CHECK(eulerian_row(4) == std::vector<integer>{1, 11, 11, 1});
  CHECK(eulerian_row(5) == std::vector<integer>{1, 26, 66, 26, 1});
  CHECK(eulerian_row(6) == std::vector<integer>{1, 57, 302, 302, 57, 1});
}

TEST_CASE("eulerian recurrence agrees with the explicit sum") {
  for (unsigned n = 1; n <= 9; ++n)
    for (unsigned k = 0; k < n; ++k)
      CHECK(eulerian(n, k) == eulerian_by_formula(n, k));
}

TEST_CASE("eulerian closed forms for the first columns") {
  // A_{n,1} = 2^n - (n+1)
  for (unsigned n = 2; n <= 12; ++n)
    CHECK(eulerian(n, 1) == pow_integer(2, n) - (n + 1));
  // A_{n,2} = 3^n - 2^n (n+1) + C(n+1,2)
  for (unsigned n = 3; n <= 12; ++n)
    CHECK(eulerian(n, 2) == pow_integer(3, n) -
                                pow_integer(2, n) * (n + 1) +
                                integer(n) * (n + 1) / 2);
}

TEST_CASE("descent enumeration reproduces the rows and respects the cap") {
  for (unsigned n = 1; n <= 7; ++n)
    CHECK(eulerian_by_descents(n) == eulerian_row(n));
  CHECK_THROWS_AS((void)eulerian_by_descents(10), enumeration_limit_error);
  CHECK(eulerian_by_descents(10, 10) == eulerian_row(10));
}

TEST_CASE("eulerian rejects n = 0 and is zero out of range") {
  CHECK_THROWS_AS((void)eulerian_row(0), precondition_error);
  CHECK(eulerian(3, -1) == 0);
  CHECK(eulerian(3, 3) == 0);
}

TEST_CASE("bernoulli numbers match the classical table") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == ratio(-1, 2));
  CHECK(bernoulli(2) == ratio(1, 6));
  CHECK(bernoulli(3) == 0);
  CHECK(bernoulli(4) == ratio(-1, 30));
  CHECK(bernoulli(6) == ratio(1, 42));
  CHECK(bernoulli(8) == ratio(-1, 30));
  CHECK(bernoulli(10) == ratio(5, 66));
  CHECK(bernoulli(12) == ratio(-691, 2730));
}

TEST_CASE("ordered set partitions count surjections") {
  CHECK(ordered_set_partition_count(3, 2) == 6);
  CHECK(ordered_set_partition_count(4, 2) == 14);
  for (unsigned n = 1; n <= 8; ++n)
    for (unsigned k = 1; k <= n; ++k)
      CHECK(ordered_set_partition_count(n, k) ==
            factorial(k) * stirling2(n, k));
  CHECK_THROWS_AS((void)ordered_set_partition_count(12, 3),
                  enumeration_limit_error);
  CHECK_THROWS_AS((void)ordered_set_partition_count(4, 5), precondition_error);
  CHECK_THROWS_AS((void)ordered_set_partition_count(4, 0), precondition_error);
}

TEST_CASE("permutation visitor covers S_n exactly once") {
  unsigned count = 0;
  for_each_permutation(4, [&](const permutation& p) {
    ++count;
    CHECK(p.size() == 4);
  });
  CHECK(count == 24);
}

TEST_CASE("rational helpers canonicalize and police integrality") {
  CHECK(ratio(2, 4) == ratio(1, 2));
  CHECK(ratio(-2, -4) == ratio(1, 2));
  CHECK(ratio(2, -4) == ratio(-1, 2));
  CHECK(is_integral(ratio(6, 3)));
  CHECK_FALSE(is_integral(ratio(1, 3)));
  CHECK(require_integral(ratio(6, 3), "test") == 2);
  CHECK_THROWS_AS((void)require_integral(ratio(1, 3), "test"),
                  integrality_error);
}

}  // TEST_SUITE
