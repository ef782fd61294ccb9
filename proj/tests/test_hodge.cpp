#include <doctest.h>

#include <string>

#include "theta/combinatorics.hpp"
#include "theta/error.hpp"
#include "theta/genus.hpp"
#include "theta/hodge.hpp"

using namespace theta;
using namespace theta::hodge;

TEST_SUITE("hodge") {

TEST_CASE("middle-row correction values") {
  CHECK(s_correction_closed(2, 0) == -2);
  CHECK(s_correction_closed(2, 1) == -6);
  CHECK(s_correction_closed(2, 2) == -2);
  CHECK(s_correction_closed(3, 0) == -3);
  CHECK(s_correction_closed(3, 1) == -18);
  CHECK(s_correction_closed(4, 0) == -4);
  CHECK(s_correction_closed(4, 1) == -40);
  CHECK(s_correction_closed(4, 2) == -80);
}

TEST_CASE("closed form matches the off-middle oracle and is symmetric") {
  for (unsigned n = 0; n <= 9; ++n)
    for (unsigned p = 0; p <= n; ++p) {
      CHECK(s_correction_closed(n, p) == s_correction_oracle(n, p));
      CHECK(s_correction_closed(n, p) == s_correction_closed(n, n - p));
    }
}

TEST_CASE("off-middle entries are products of binomials") {
  CHECK(hodge_number(3, 0, 0) == 1);
  CHECK(hodge_number(3, 1, 0) == 4);
  CHECK(hodge_number(3, 1, 1) == 16);
  CHECK(hodge_number(3, 2, 2) == 16);
  CHECK(hodge_number(3, 3, 2) == 4);
  CHECK(hodge_number(3, 3, 3) == 1);
  CHECK(hodge_number(4, 2, 1) == 50);
}

TEST_CASE("middle rows carry the Eulerian correction") {
  // h^{p,n-p} = A_{n+1,p} - S_{n,p}
  CHECK(hodge_number(2, 0, 2) == 3);
  CHECK(hodge_number(2, 1, 1) == 10);
  CHECK(hodge_number(3, 1, 2) == 29);
  CHECK(hodge_number(4, 2, 2) == 146);
  CHECK(hodge_number(4, 1, 3) == 66);
  CHECK(hodge_number(4, 0, 4) == 5);
  // h^{0,n} = n + 1
  for (unsigned n = 0; n <= 8; ++n) CHECK(hodge_number(n, 0, n) == n + 1);
}

TEST_CASE("published diamonds for n = 2, 3, 4") {
  auto d2 = diamond(2);
  CHECK(d2.h == std::vector<std::vector<integer>>{
                    {1, 3, 3}, {3, 10, 3}, {3, 3, 1}});
  CHECK(d2.betti == std::vector<integer>{1, 6, 16, 6, 1});

  auto d3 = diamond(3);
  CHECK(d3.h == std::vector<std::vector<integer>>{{1, 4, 6, 4},
                                                  {4, 16, 29, 6},
                                                  {6, 29, 16, 4},
                                                  {4, 6, 4, 1}});
  CHECK(d3.betti == std::vector<integer>{1, 8, 28, 66, 28, 8, 1});

  auto d4 = diamond(4);
  CHECK(d4.betti ==
        std::vector<integer>{1, 10, 45, 120, 288, 120, 45, 10, 1});
  CHECK(d4.h[2][2] == 146);
  CHECK(d4.h[1][3] == 66);
  CHECK(d4.h[0][4] == 5);
  CHECK(d4.h[1][2] == 50);
  CHECK(d4.h[1][1] == 25);
}

TEST_CASE("oracle middle row agrees with the closed form") {
  for (unsigned n = 0; n <= 7; ++n) CHECK(diamond(n) == diamond(n, true));
}

TEST_CASE("euler characteristic and signature") {
  CHECK(euler_char_theta(1) == -2);
  CHECK(euler_char_theta(2) == 6);
  CHECK(euler_char_theta(3) == -24);
  CHECK(signature_theta(0) == 1);
  CHECK(signature_theta(2) == -2);
  CHECK(signature_theta(4) == 16);
  CHECK_THROWS_AS((void)signature_theta(3), precondition_error);
}

TEST_CASE("permutohedral variety hodge numbers sit on the diagonal") {
  CHECK(hodge_xpi(2, 1, 1) == 4);
  CHECK(hodge_xpi(2, 1, 0) == 0);
  CHECK(hodge_xpi(4, 2, 2) == 66);
}

TEST_CASE("duality pairings all hold through n = 8") {
  for (unsigned n = 0; n <= 8; ++n) {
    auto rep = duality(n);
    CHECK(rep.all_equal);
    for (const auto& pairing : rep.pairings) CHECK(pairing.lhs == pairing.rhs);
  }
}

TEST_CASE("text rendering centers rows and appends Betti numbers") {
  std::string art = diamond_text(diamond(2));
  CHECK(art.find("10") != std::string::npos);
  CHECK(art.find("16") != std::string::npos);
  // five diamond rows
  int lines = 0;
  for (char c : art) lines += c == '\n' ? 1 : 0;
  CHECK(lines == 5);
  std::string tex = diamond_latex(diamond(2));
  CHECK(tex.find("\\begin{array}") != std::string::npos);
  CHECK(tex.find("16") != std::string::npos);
}

}  // TEST_SUITE
