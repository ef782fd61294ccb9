#include <doctest.h>

#include "theta/combinatorics.hpp"
#include "theta/error.hpp"
#include "theta/mpoly.hpp"
#include "theta/permutohedron.hpp"

using namespace theta;
using namespace theta::perm;
using theta::ring::mpoly;
using theta::ring::symbol;

namespace {
const mpoly S{symbol::s()};
const mpoly T{symbol::t()};
}  // namespace

TEST_SUITE("permutohedron") {

TEST_CASE("f-vectors by the Stirling closed form") {
  CHECK(f_vector(0).counts == std::vector<integer>{1});
  CHECK(f_vector(1).counts == std::vector<integer>{2, 1});
  CHECK(f_vector(2).counts == std::vector<integer>{6, 6, 1});
  CHECK(f_vector(3).counts == std::vector<integer>{24, 36, 14, 1});
}

TEST_CASE("face enumeration agrees and respects the cap") {
  for (unsigned n = 0; n <= 5; ++n) CHECK(f_vector(n) == face_oracle(n));
  CHECK_THROWS_AS((void)face_oracle(8), enumeration_limit_error);
  CHECK(face_oracle(8, 8) == f_vector(8));
}

TEST_CASE("f-polynomials match the published low cases") {
  CHECK(f_poly(1) == S + 2 * T);
  CHECK(f_poly(2) == S * S + 6 * T * S + 6 * T * T);
  CHECK(f_poly(3) ==
        S * S * S + 14 * S * S * T + 36 * S * T * T + 24 * T * T * T);
}

TEST_CASE("h-polynomials carry the Eulerian coefficients") {
  CHECK(h_poly(2) == S * S + 4 * S * T + T * T);
  CHECK(h_poly(3) == S * S * S + 11 * S * S * T + 11 * S * T * T + T * T * T);
  for (unsigned n = 0; n <= 9; ++n)
    CHECK(h_vector(n) == comb::eulerian_row(n + 1));
}

TEST_CASE("toric Betti numbers read off the h-vector") {
  CHECK(toric_betti(3, 0) == 1);
  CHECK(toric_betti(3, 1) == 11);
  CHECK(toric_betti(3, 3) == 1);
  CHECK_THROWS_AS((void)toric_betti(3, 4), precondition_error);
}

TEST_CASE("default height is generic and reproduces the h-vector") {
  for (unsigned n = 1; n <= 4; ++n)
    CHECK(vertex_index_oracle(n, default_height(n)) == h_vector(n));
}

TEST_CASE("vertex index histogram for a hand-checked height") {
  // n = 2, height (1, 10, 100): indices over S_3 give (1, 4, 1)
  std::vector<rational> height{1, 10, 100};
  CHECK(vertex_index_oracle(2, height) == std::vector<integer>{1, 4, 1});
}

TEST_CASE("degenerate heights are rejected, non-adjacent ties are fine") {
  // two equal entries tie every vertex with the neighbor swapping them
  std::vector<rational> height{1, 1, 5};
  CHECK_THROWS_AS((void)vertex_index_oracle(2, height),
                  degenerate_height_error);
  // (1,2,3) makes non-adjacent vertices share a height value, which does not
  // disturb the index computation
  std::vector<rational> arithmetic{1, 2, 3};
  CHECK(vertex_index_oracle(2, arithmetic) == std::vector<integer>{1, 4, 1});
}

TEST_CASE("height vector preconditions") {
  std::vector<rational> wrong_size{1, 2};
  CHECK_THROWS_AS((void)vertex_index_oracle(2, wrong_size),
                  precondition_error);
  CHECK_THROWS_AS((void)vertex_index_oracle(9, default_height(9)),
                  enumeration_limit_error);
}

}  // TEST_SUITE
