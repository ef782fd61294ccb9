// command-line front end: tables, diamonds, genus series, cobordism classes,
// and the full verification suite, in text, JSON, or LaTeX

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "theta/cobordism.hpp"
#include "theta/combinatorics.hpp"
#include "theta/error.hpp"
#include "theta/genus.hpp"
#include "theta/hodge.hpp"
#include "theta/permutohedron.hpp"
#include "theta/tomei.hpp"
#include "theta/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using theta::integer;
using theta::rational;
using theta::ring::mpoly;
using theta::ring::symbol;
using theta::ring::theta_poly;
using theta::ring::xseries;

struct config {
  unsigned order = 12;
  int face_cap = theta::perm::default_face_cap;
  int enum_cap = theta::comb::default_enum_cap;
  std::uint64_t seed = theta::cob::default_seed;
  unsigned grade_cap = 12;
  std::string format = "text";
};

json config_json(const config& cfg) {
  return json{{"order", cfg.order},
              {"face_cap", cfg.face_cap},
              {"enum_cap", cfg.enum_cap},
              {"seed", cfg.seed},
              {"grade_cap", cfg.grade_cap},
              {"format", cfg.format}};
}

json document(const config& cfg, const std::string& anchor) {
  json doc;
  doc["config"] = config_json(cfg);
  doc["paper_anchor"] = anchor;
  return doc;
}

json poly_json(const mpoly& p) {
  json terms = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    json mono = json::object();
    for (const auto& f : it->first.factors()) mono[f.sym.name()] = f.exp;
    terms.push_back(json{{"monomial", mono}, {"coeff", theta::str(it->second)}});
  }
  return json{{"terms", terms}, {"str", p.str()}};
}

json theta_json(const theta_poly& p) {
  json terms = json::array();
  for (auto it = p.poly().terms().rbegin(); it != p.poly().terms().rend();
       ++it) {
    json mono = json::object();
    for (const auto& f : it->first.factors())
      mono[std::to_string(f.sym.index())] = f.exp;
    terms.push_back(json{{"monomial", mono}, {"coeff", theta::str(it->second)}});
  }
  return json{{"grade", p.max_grade()}, {"terms", terms}, {"str", p.str()}};
}

json integer_row(const std::vector<integer>& row) {
  json out = json::array();
  for (const auto& v : row) out.push_back(theta::str(v));
  return out;
}

std::string join_integers(const std::vector<integer>& row,
                          const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += sep;
    out += theta::str(row[i]);
  }
  return out;
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

// ---------------------------------------------------------------- sequences

int cmd_sequences(const config& cfg, const std::string& kind, unsigned n_max) {
  if (n_max > 50)
    throw theta::precondition_error("sequences: n_max must be at most 50");
  std::string anchor =
      kind == "eulerian" ? "expli" : (kind == "stirling2" ? "st" : "tau");

  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> labels;
  if (kind == "stirling2") {
    for (unsigned n = 0; n <= n_max; ++n) {
      std::vector<std::string> row;
      for (unsigned k = 0; k <= n; ++k)
        row.push_back(theta::str(theta::comb::stirling2(n, k)));
      rows.push_back(std::move(row));
      labels.push_back("n=" + std::to_string(n));
    }
  } else if (kind == "eulerian") {
    for (unsigned n = 1; n <= n_max; ++n) {
      std::vector<std::string> row;
      for (const auto& a : theta::comb::eulerian_row(n))
        row.push_back(theta::str(a));
      rows.push_back(std::move(row));
      labels.push_back("n=" + std::to_string(n));
    }
  } else {
    for (unsigned m = 0; m <= n_max; ++m) {
      rows.push_back({theta::str(theta::comb::bernoulli(m))});
      labels.push_back("B_" + std::to_string(m));
    }
  }

  if (cfg.format == "json") {
    json doc = document(cfg, anchor);
    doc["kind"] = kind;
    doc["n_max"] = n_max;
    json jrows = json::array();
    for (const auto& row : rows) jrows.push_back(row);
    doc["rows"] = jrows;
    emit(doc);
  } else if (cfg.format == "latex") {
    std::cout << "\\begin{array}{l|l}\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      std::cout << labels[i] << " & ";
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        if (j) std::cout << " \\; ";
        std::cout << rows[i][j];
      }
      std::cout << " \\\\\n";
    }
    std::cout << "\\end{array}\n";
  } else {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      std::cout << labels[i] << ":";
      for (const auto& v : rows[i]) std::cout << " " << v;
      std::cout << "\n";
    }
  }
  return 0;
}

// ------------------------------------------------------------ permutohedron

int cmd_permutohedron(const config& cfg, unsigned n, const std::string& what) {
  std::string anchor = what == "f" ? "fpol" : (what == "h" ? "hf" : "st");

  if (what == "oracle") {
    auto closed = theta::perm::f_vector(n);
    auto counted = theta::perm::face_oracle(n, cfg.face_cap);
    bool match = closed == counted;
    if (cfg.format == "json") {
      json doc = document(cfg, anchor);
      doc["n"] = n;
      doc["f_vector"] = integer_row(closed.counts);
      doc["face_counts"] = integer_row(counted.counts);
      doc["match"] = match;
      emit(doc);
    } else {
      std::cout << "f-vector (closed form): " << join_integers(closed.counts, " ")
                << "\n";
      std::cout << "face counts (enumerated): "
                << join_integers(counted.counts, " ") << "\n";
      std::cout << (match ? "match" : "MISMATCH") << "\n";
    }
    if (!match)
      throw theta::formula_violation_error(
          "face counts disagree with the closed form at n=" +
          std::to_string(n));
    return 0;
  }

  mpoly p = what == "f" ? theta::perm::f_poly(n) : theta::perm::h_poly(n);
  if (cfg.format == "json") {
    json doc = document(cfg, anchor);
    doc["n"] = n;
    doc["poly"] = poly_json(p);
    if (what == "f")
      doc["f_vector"] = integer_row(theta::perm::f_vector(n).counts);
    else
      doc["h_vector"] = integer_row(theta::perm::h_vector(n));
    emit(doc);
  } else if (cfg.format == "latex") {
    std::cout << "$" << p.latex() << "$\n";
  } else {
    std::cout << p.str() << "\n";
    if (what == "f")
      std::cout << "f-vector: "
                << join_integers(theta::perm::f_vector(n).counts, " ") << "\n";
    else
      std::cout << "h-vector: " << join_integers(theta::perm::h_vector(n), " ")
                << "\n";
  }
  return 0;
}

// -------------------------------------------------------------------- hodge

int cmd_hodge(const config& cfg, unsigned n, bool oracle) {
  auto d = theta::hodge::diamond(n, oracle);
  if (cfg.format == "json") {
    json doc = document(cfg, "hpn");
    doc["n"] = n;
    json rows = json::array();
    for (unsigned p = 0; p <= n; ++p) rows.push_back(integer_row(d.h[p]));
    doc["h"] = rows;
    doc["betti"] = integer_row(d.betti);
    doc["middle_via_oracle"] = oracle;
    emit(doc);
  } else if (cfg.format == "latex") {
    std::cout << theta::hodge::diamond_latex(d);
  } else {
    std::cout << theta::hodge::diamond_text(d);
  }
  return 0;
}

// -------------------------------------------------------------------- genus

int cmd_genus(const config& cfg, const std::string& which, unsigned n_max) {
  unsigned order = std::max(cfg.order, n_max + 1);
  xseries gf(0u);
  std::string anchor;
  if (which == "td") {
    gf = theta::genus::td_theta_gf(order);
    anchor = "FE";
  } else if (which == "f") {
    gf = theta::genus::f_gf(order);
    anchor = "Fex";
  } else if (which == "h") {
    gf = theta::genus::h_gf(order);
    anchor = "Hex";
  } else {
    gf = theta::genus::chi_y_gf(order);
    anchor = "geny";
  }

  std::vector<mpoly> values;
  for (unsigned n = 0; n <= n_max; ++n)
    values.push_back(theta::genus::egf_coeff(gf, n));

  if (cfg.format == "json") {
    json doc = document(cfg, anchor);
    doc["which"] = which;
    doc["n_max"] = n_max;
    json vals = json::array();
    for (const auto& v : values) vals.push_back(poly_json(v));
    doc["values"] = vals;
    emit(doc);
  } else if (cfg.format == "latex") {
    std::cout << "\\begin{array}{l|l}\n";
    for (unsigned n = 0; n <= n_max; ++n)
      std::cout << "n=" << n << " & " << values[n].latex() << " \\\\\n";
    std::cout << "\\end{array}\n";
  } else {
    for (unsigned n = 0; n <= n_max; ++n)
      std::cout << "n=" << n << ": " << values[n].str() << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- cobordism

int cmd_cobordism(const config& cfg, unsigned n, unsigned trials) {
  if (n == 0)
    throw theta::precondition_error("cobordism: n must be at least 1");
  if (n > cfg.grade_cap)
    throw theta::precondition_error(
        "cobordism: n exceeds the theta-grade cap " +
        std::to_string(cfg.grade_cap));
  if (n > 5)
    std::cerr << "warning: the class sum runs over " << n + 1
              << "! permutations; expect a long run\n";

  auto rep = theta::cob::class_independence_check(n, trials, cfg.seed);
  if (!rep.all_equal)
    throw theta::formula_violation_error(
        "class value depends on the evaluation point at n=" +
        std::to_string(n));
  const theta_poly& cls = rep.values.front();

  // genus cross-checks of the class value
  mpoly td = theta::genus::evaluate(theta::genus::todd(), cls);
  mpoly tdst =
      theta::genus::evaluate(theta::genus::todd_two_parameter(), cls);
  mpoly chi =
      theta::genus::evaluate(theta::genus::euler_characteristic(), cls);
  mpoly h_expected = theta::perm::h_poly(n);
  if (n % 2 == 1) h_expected = -h_expected;
  bool td_ok = td == mpoly(1);
  bool tdst_ok = tdst == h_expected;
  bool chi_ok = chi == mpoly(theta::comb::factorial(n + 1));

  if (cfg.format == "json") {
    json doc = document(cfg, "xpi");
    doc["n"] = n;
    doc["trials"] = trials;
    json seeds = json::array();
    for (auto s : rep.seeds) seeds.push_back(s);
    doc["point_seeds"] = seeds;
    doc["class"] = theta_json(cls);
    doc["point_independent"] = rep.all_equal;
    doc["checks"] = json{{"todd_is_one", td_ok},
                         {"signed_h_poly", tdst_ok},
                         {"euler_is_vertex_count", chi_ok}};
    emit(doc);
  } else if (cfg.format == "latex") {
    std::cout << "$[X^{" << n << "}] = " << cls.latex() << "$\n";
  } else {
    std::cout << "class: " << cls.str() << "\n";
    std::cout << "evaluation points tried: " << rep.values.size()
              << " (all equal)\n";
    std::cout << "Todd genus = 1: " << (td_ok ? "ok" : "FAIL") << "\n";
    std::cout << "Td_{s,t} = " << (n % 2 ? "-" : "") << "h-polynomial: "
              << (tdst_ok ? "ok" : "FAIL") << "\n";
    std::cout << "Euler characteristic = " << (n + 1) << "!: "
              << (chi_ok ? "ok" : "FAIL") << "\n";
  }
  if (!(td_ok && tdst_ok && chi_ok))
    throw theta::formula_violation_error(
        "genus cross-check failed for the class at n=" + std::to_string(n));
  return 0;
}

// -------------------------------------------------------------------- tomei

int cmd_tomei(const config& cfg, unsigned n) {
  auto rep = theta::tomei::triality(n);
  if (cfg.format == "json") {
    json doc = document(cfg, "chitX");
    doc["n"] = n;
    json rows = json::array();
    for (const auto& row : rep.rows)
      rows.push_back(json{{"k", row.k},
                          {"tomei_betti", theta::str(row.tomei_betti)},
                          {"toric_betti", theta::str(row.toric_betti)},
                          {"signed_chi", theta::str(row.signed_chi)},
                          {"equal", row.equal}});
    doc["rows"] = rows;
    if (rep.has_signature_triple)
      doc["signature"] = json{{"chi_tomei", theta::str(rep.chi_tomei)},
                              {"tau_xpi", theta::str(rep.tau_xpi)},
                              {"tau_theta", theta::str(rep.tau_theta)},
                              {"equal", rep.signature_equal}};
    doc["all_equal"] = rep.all_equal;
    emit(doc);
  } else {
    std::cout << "k | b_k(Tomei) | b_2k(toric) | signed chi^k\n";
    for (const auto& row : rep.rows)
      std::cout << row.k << " | " << theta::str(row.tomei_betti) << " | "
                << theta::str(row.toric_betti) << " | "
                << theta::str(row.signed_chi)
                << (row.equal ? "" : "  MISMATCH") << "\n";
    if (rep.has_signature_triple)
      std::cout << "chi(Tomei) = " << theta::str(rep.chi_tomei)
                << ", tau via Eulerian = " << theta::str(rep.tau_xpi)
                << ", tau via Bernoulli = " << theta::str(rep.tau_theta)
                << (rep.signature_equal ? "" : "  MISMATCH") << "\n";
    std::cout << (rep.all_equal ? "all rows agree" : "DISAGREEMENT") << "\n";
  }
  if (!rep.all_equal)
    throw theta::formula_violation_error(
        "triality rows disagree at n=" + std::to_string(n));
  return 0;
}

// ------------------------------------------------------------------- verify

int cmd_verify(const config& cfg, unsigned n_max, bool fast) {
  theta::verify::options opts;
  opts.n_max = n_max;
  opts.fast = fast;
  opts.seed = cfg.seed;

  bool text = cfg.format == "text";
  auto results = theta::verify::run(opts, text ? &std::cout : nullptr);
  bool ok = theta::verify::all_passed(results);

  if (cfg.format == "json") {
    json doc = document(cfg, "all");
    doc["n_max"] = n_max;
    doc["fast"] = fast;
    json checks = json::array();
    for (const auto& r : results) {
      json c{{"name", r.name},
             {"anchor", r.anchor},
             {"passed", r.passed},
             {"seconds", r.seconds}};
      if (!r.passed) c["detail"] = r.detail;
      checks.push_back(c);
    }
    doc["checks"] = checks;
    doc["passed"] = ok;
    emit(doc);
  } else {
    unsigned passed = 0;
    for (const auto& r : results) passed += r.passed ? 1 : 0;
    if (!text)
      for (const auto& r : results)
        std::cout << (r.passed ? "ok" : "fail") << " & " << r.name << " \\\\\n";
    std::cout << passed << "/" << results.size() << " checks passed\n";
  }
  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact invariants of theta divisors, permutohedra, and the "
      "manifolds built from them"};
  app.require_subcommand(1);
  app.fallthrough();

  config cfg;
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "json", "latex"}))
      ->envname("THETAPERM_FORMAT");
  app.add_option("--order", cfg.order, "series truncation order")
      ->check(CLI::PositiveNumber)
      ->envname("THETAPERM_ORDER");
  app.add_option("--face-cap", cfg.face_cap, "face enumeration cap")
      ->check(CLI::PositiveNumber)
      ->envname("THETAPERM_FACE_CAP");
  app.add_option("--enum-cap", cfg.enum_cap, "permutation enumeration cap")
      ->check(CLI::PositiveNumber)
      ->envname("THETAPERM_ENUM_CAP");
  app.add_option("--seed", cfg.seed,
                 "RNG seed for evaluation points (0 requests entropy)")
      ->envname("THETAPERM_SEED");
  app.add_option("--grade-cap", cfg.grade_cap, "theta grading cap")
      ->check(CLI::PositiveNumber)
      ->envname("THETAPERM_GRADE_CAP");

  std::string seq_kind;
  unsigned seq_n_max = 0;
  auto* seq = app.add_subcommand("sequences",
                                 "integer sequence tables and cross-checks");
  seq->add_option("kind", seq_kind, "which sequence")
      ->required()
      ->check(CLI::IsMember({"stirling2", "eulerian", "bernoulli"}));
  seq->add_option("n_max", seq_n_max, "largest row")->required();

  unsigned perm_n = 0;
  std::string perm_what = "f";
  auto* permc = app.add_subcommand("permutohedron",
                                   "face and h-polynomial data");
  permc->add_option("n", perm_n, "dimension")->required();
  permc->add_option("--what", perm_what, "f, h, or oracle")
      ->check(CLI::IsMember({"f", "h", "oracle"}));

  unsigned hodge_n = 0;
  bool hodge_oracle = false;
  auto* hodgec = app.add_subcommand("hodge", "Hodge diamond of a divisor");
  hodgec->add_option("n", hodge_n, "dimension")->required();
  hodgec->add_flag("--oracle", hodge_oracle,
                   "recompute the middle row from the off-middle entries");

  std::string genus_which;
  unsigned genus_n_max = 0;
  auto* genusc = app.add_subcommand("genus", "genus values of the divisors");
  genusc->add_option("which", genus_which, "which genus")
      ->required()
      ->check(CLI::IsMember({"td", "f", "h", "chi-y"}));
  genusc->add_option("n_max", genus_n_max, "largest dimension")->required();

  unsigned cob_n = 0;
  unsigned cob_trials = 3;
  auto* cobc = app.add_subcommand("cobordism",
                                  "cobordism class of the toric variety");
  cobc->add_option("n", cob_n, "dimension")->required();
  cobc->add_option("--trials", cob_trials, "number of evaluation points")
      ->check(CLI::PositiveNumber);

  unsigned tomei_n = 0;
  auto* tomeic = app.add_subcommand("tomei", "Betti and signature triples");
  tomeic->add_option("n", tomei_n, "dimension")->required();

  unsigned verify_n_max = 10;
  bool verify_fast = false;
  auto* verifyc = app.add_subcommand("verify", "run every identity check");
  verifyc->add_option("n_max", verify_n_max, "largest dimension");
  verifyc->add_flag("--fast", verify_fast, "restrict to n <= 4");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }

  try {
    if (*seq) return cmd_sequences(cfg, seq_kind, seq_n_max);
    if (*permc) return cmd_permutohedron(cfg, perm_n, perm_what);
    if (*hodgec) return cmd_hodge(cfg, hodge_n, hodge_oracle);
    if (*genusc) return cmd_genus(cfg, genus_which, genus_n_max);
    if (*cobc) return cmd_cobordism(cfg, cob_n, cob_trials);
    if (*tomeic) return cmd_tomei(cfg, tomei_n);
    if (*verifyc) return cmd_verify(cfg, verify_n_max, verify_fast);
  } catch (const theta::formula_violation_error& e) {
    std::cerr << "identity violation: " << e.what() << "\n";
    return 2;
  } catch (const theta::precondition_error& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return 3;
  } catch (const theta::error& e) {
    std::cerr << "internal: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
