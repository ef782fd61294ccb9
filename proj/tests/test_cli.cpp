// golden tests for the command-line tool: spawns the real binary and checks
// output text, JSON structure, reproducibility, and exit codes

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include <json.hpp>

#include "theta/hodge.hpp"

namespace {

int failures = 0;

#define REQUIRE(cond, msg)                                                   \
  do {                                                                       \
    if (!(cond)) {                                                           \
      std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__ << " " << (msg)  \
                << "\n";                                                     \
      ++failures;                                                            \
    }                                                                        \
  } while (0)

struct run_result {
  int exit_code = -1;
  std::string out;
};

run_result run_cli(const std::string& args) {
  std::string cmd = std::string(THETAPERM_CLI_PATH) + " " + args + " 2>/dev/null";
  run_result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    std::cerr << "[FAIL] cannot spawn: " << cmd << "\n";
    ++failures;
    return r;
  }
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

int main() {
  // sequences: published rows
  auto eul = run_cli("sequences eulerian 6");
  REQUIRE(eul.exit_code == 0, "eulerian exit");
  REQUIRE(contains(eul.out, "n=6: 1 57 302 302 57 1"), "A_6 row");
  REQUIRE(contains(eul.out, "n=4: 1 11 11 1"), "A_4 row");

  auto bern = run_cli("sequences bernoulli 8");
  REQUIRE(bern.exit_code == 0, "bernoulli exit");
  REQUIRE(contains(bern.out, "B_8: -1/30"), "B_8 value");
  REQUIRE(contains(bern.out, "B_1: -1/2"), "B_1 value");

  auto stir = run_cli("sequences stirling2 5");
  REQUIRE(stir.exit_code == 0, "stirling exit");
  REQUIRE(contains(stir.out, "n=5: 0 1 15 25 10 1"), "S(5,k) row");

  REQUIRE(run_cli("sequences eulerian 51").exit_code == 3,
          "n_max cap exits 3");

  // permutohedron: canonical polynomial text
  auto fp = run_cli("permutohedron 3 --what f");
  REQUIRE(fp.exit_code == 0, "f-poly exit");
  REQUIRE(contains(fp.out, "s^3 + 14*s^2*t + 36*s*t^2 + 24*t^3"), "f-poly 3");
  REQUIRE(contains(fp.out, "f-vector: 24 36 14 1"), "f-vector 3");

  auto hp = run_cli("permutohedron 2 --what h");
  REQUIRE(contains(hp.out, "s^2 + 4*s*t + t^2"), "h-poly 2");
  REQUIRE(contains(hp.out, "h-vector: 1 4 1"), "h-vector 2");

  auto orc = run_cli("permutohedron 3 --what oracle");
  REQUIRE(orc.exit_code == 0, "oracle exit");
  REQUIRE(contains(orc.out, "match"), "oracle match");
  REQUIRE(run_cli("permutohedron 9 --what oracle").exit_code == 3,
          "face cap exits 3");

  // hodge: text mode byte-identical with the library rendering
  auto d4 = run_cli("hodge 4");
  REQUIRE(d4.exit_code == 0, "hodge exit");
  REQUIRE(d4.out == theta::hodge::diamond_text(theta::hodge::diamond(4)),
          "diamond text matches the library rendering");
  REQUIRE(contains(d4.out, "146"), "diamond middle entry");
  REQUIRE(contains(d4.out, "288"), "diamond middle Betti");

  // genus listings
  auto gh = run_cli("genus h 3");
  REQUIRE(contains(gh.out, "n=3: s^3 + 11*s^2*t + 11*s*t^2 + t^3"),
          "h series listing");
  auto gc = run_cli("genus chi-y 2");
  REQUIRE(contains(gc.out, "n=2: y^2 - 4*y + 1"), "chi_y listing");

  // cobordism JSON: class value, checks, config echo
  auto cob = run_cli("cobordism 2 --format json");
  REQUIRE(cob.exit_code == 0, "cobordism exit");
  {
    auto doc = nlohmann::json::parse(cob.out, nullptr, false);
    REQUIRE(!doc.is_discarded(), "cobordism emits valid JSON");
    if (!doc.is_discarded()) {
      REQUIRE(doc["paper_anchor"] == "xpi", "anchor label");
      REQUIRE(doc["config"]["seed"] == 987654321, "seed echoed");
      REQUIRE(doc["class"]["str"] == "θ2", "class text");
      REQUIRE(doc["class"]["grade"] == 2, "class grade");
      REQUIRE(doc["checks"]["todd_is_one"] == true, "todd check");
      REQUIRE(doc["checks"]["signed_h_poly"] == true, "h-poly check");
      REQUIRE(doc["point_independent"] == true, "independence");
    }
  }

  // JSON reproducibility: identical config implies identical bytes
  auto j1 = run_cli("hodge 3 --format json");
  auto j2 = run_cli("hodge 3 --format json");
  REQUIRE(j1.out == j2.out, "byte-identical JSON reruns");
  {
    auto doc = nlohmann::json::parse(j1.out, nullptr, false);
    REQUIRE(!doc.is_discarded(), "hodge emits valid JSON");
    if (!doc.is_discarded()) {
      REQUIRE(doc["betti"][3] == "66", "middle Betti in JSON");
      REQUIRE(doc["h"][1][2] == "29", "middle entry in JSON");
      REQUIRE(doc["paper_anchor"] == "hpn", "hodge anchor");
    }
  }

  // tomei text
  auto tom = run_cli("tomei 4");
  REQUIRE(tom.exit_code == 0, "tomei exit");
  REQUIRE(contains(tom.out, "all rows agree"), "tomei agreement");
  REQUIRE(contains(tom.out, "16"), "tomei signature 16");

  // latex escape hatch
  auto tex = run_cli("permutohedron 2 --what h --format latex");
  REQUIRE(contains(tex.out, "s^{2} + 4 s t + t^{2}"), "latex h-poly");

  // verify fast pass
  auto ver = run_cli("verify 3 --fast");
  REQUIRE(ver.exit_code == 0, "verify --fast exits 0");
  REQUIRE(contains(ver.out, "checks passed"), "verify summary");

  // unknown flags are a usage error
  REQUIRE(run_cli("hodge 3 --bogus").exit_code == 3, "usage error exits 3");

  if (failures) {
    std::cerr << failures << " golden check(s) failed\n";
    return 1;
  }
  std::cout << "all golden checks passed\n";
  return 0;
}
