// Command-line front end: exact counts, series coefficients, growth rates,
// diagram classification, brute-force oracle counts, and verification of the
// embedded reference tables.
//
// Exit codes: 0 success, 1 verification mismatch or runtime failure,
// 2 flag errors, 3 brute-force size refusal.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pkenum/pkenum.hpp"

namespace {

using namespace pkenum;
using nlohmann::json;

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return 2;
}

std::string format_rate(const Real& rate) {
  std::ostringstream out;
  out << std::setprecision(6) << rate.convert_to<double>();
  return out.str();
}

std::string format_gamma(const Real& gamma) {
  std::ostringstream out;
  out << std::setprecision(20) << gamma;
  return out.str();
}

std::string format_residual(const Real& residual) {
  std::ostringstream out;
  out << std::scientific << std::setprecision(2)
      << residual.convert_to<double>();
  return out.str();
}

std::string rational_text(const Rational& value) {
  return numerator(value).str() + "/" + denominator(value).str();
}

// ---------------------------------------------------------------------------

struct count_flags {
  int k = 3;
  int sigma = 1;
  int lambda = 4;
  int n_max = 24;
  bool per_h = false;
  std::string format = "csv";
};

int run_count(const count_flags& f) {
  if (f.k < 2) return usage_error("--k must be at least 2");
  if (f.lambda == 4 && f.sigma < 3)
    return usage_error("--lambda 4 requires --sigma >= 3");
  if (f.lambda == 2 && f.sigma < 1)
    return usage_error("--sigma must be at least 1");
  if (f.lambda == 2 && f.per_h)
    return usage_error("--per-h is only available with --lambda 4");

  struct row {
    long long n;
    long long h;  // -1 for totals
    Count value;
  };
  std::vector<row> rows;
  if (f.lambda == 4) {
    for (long long n = 0; n <= f.n_max; ++n) {
      if (f.per_h) {
        for (long long h = 0; 2 * h <= n; ++h)
          rows.push_back({n, h, canonical_count(f.k, f.sigma, n, h)});
      } else {
        rows.push_back({n, -1, canonical_total(f.k, f.sigma, n)});
      }
    }
  } else if (f.sigma == 1) {
    for (long long n = 0; n <= f.n_max; ++n)
      rows.push_back({n, -1, rna_structure_count(f.k, n)});
  } else {
    const series gf = arc2_structure_gf(f.k, f.sigma, f.n_max);
    for (long long n = 0; n <= f.n_max; ++n) {
      const Rational& c = gf[static_cast<int>(n)];
      rows.push_back({n, -1, numerator(c)});
    }
  }

  if (f.format == "json") {
    json doc;
    doc["kind"] = "count";
    doc["k"] = f.k;
    doc["sigma"] = f.sigma;
    doc["lambda"] = f.lambda;
    doc["counts"] = json::array();
    for (const row& r : rows) {
      json entry;
      entry["n"] = r.n;
      if (r.h >= 0) entry["h"] = r.h;
      entry["count"] = r.value.str();
      doc["counts"].push_back(entry);
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << (f.per_h ? "n,h,count" : "n,count") << "\n";
    for (const row& r : rows) {
      if (r.h >= 0)
        std::cout << r.n << ',' << r.h << ',' << r.value.str() << "\n";
      else
        std::cout << r.n << ',' << r.value.str() << "\n";
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct series_flags {
  std::string recipe = "k4sigma";
  int k = 3;
  int sigma = 3;
  int lambda = 2;
  int order = 30;
  std::string format = "csv";
};

int run_series(const series_flags& f) {
  series gf(0);
  std::string id;
  if (f.recipe == "secondary") {
    if (f.lambda < 1) return usage_error("--lambda must be at least 1");
    if (f.order < 1) return usage_error("--order must be at least 1");
    gf = secondary_gf(f.lambda, f.order);
    id = "secondary(lambda=" + std::to_string(f.lambda) + ")";
  } else if (f.recipe == "k4sigma") {
    if (f.k < 2) return usage_error("--k must be at least 2");
    if (f.sigma < 3) return usage_error("k4sigma requires --sigma >= 3");
    gf = canonical_gf(f.k, f.sigma, f.order);
    id = "k4sigma(k=" + std::to_string(f.k) + ",sigma=" + std::to_string(f.sigma) + ")";
  } else {
    if (f.k < 2) return usage_error("--k must be at least 2");
    if (f.sigma < 1) return usage_error("--sigma must be at least 1");
    gf = arc2_structure_gf(f.k, f.sigma, f.order);
    id = "k2sigma(k=" + std::to_string(f.k) + ",sigma=" + std::to_string(f.sigma) + ")";
  }

  if (f.format == "json") {
    json doc;
    doc["kind"] = "series";
    doc["order"] = gf.order();
    doc["recipe"] = id;
    doc["coefficients"] = json::array();
    for (int n = 0; n <= gf.order(); ++n)
      doc["coefficients"].push_back({{"n", n}, {"value", rational_text(gf[n])}});
    std::cout << doc.dump(2) << "\n";
  } else {
    dump_series(std::cout, gf, id);
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct growth_flags {
  std::string kind;
  int k = 3;
  int sigma = -1;
  double tol = 1e-12;
  std::string format = "csv";
};

int run_growth(const growth_flags& f) {
  growth_kind kind;
  bool needs_sigma = false;
  if (f.kind == "k21") {
    kind = growth_kind::k21;
  } else if (f.kind == "k41") {
    kind = growth_kind::k41;
  } else if (f.kind == "k2sigma") {
    kind = growth_kind::k2sigma;
    needs_sigma = true;
  } else {
    kind = growth_kind::k4sigma;
    needs_sigma = true;
  }
  if (f.k < 2) return usage_error("--k must be at least 2");
  if (needs_sigma && f.sigma < 0)
    return usage_error("--sigma is required for kind " + f.kind);
  if (f.tol <= 0) return usage_error("--tol must be positive");

  const root_equation eq(kind, f.k, needs_sigma ? f.sigma : 1);
  const growth_result res = solve_growth(eq, Real(f.tol));

  if (f.format == "json") {
    json doc;
    doc["kind"] = f.kind;
    doc["k"] = res.k;
    doc["sigma"] = res.sigma;
    doc["lambda"] = res.lambda;
    doc["gamma"] = format_gamma(res.gamma);
    doc["rate"] = format_rate(res.rate);
    doc["dominance_verified"] = res.dominance_verified;
    doc["residual"] = format_residual(res.residual);
    doc["note"] = res.note;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "k,sigma,lambda,gamma,rate,dominance_verified,residual\n"
              << res.k << ',' << res.sigma << ',' << res.lambda << ','
              << format_gamma(res.gamma) << ',' << format_rate(res.rate) << ','
              << (res.dominance_verified ? "true" : "false") << ','
              << format_residual(res.residual) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------

int run_classify(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  const diagram d = read_diagram(in);

  const int crossing = max_crossing(d);
  const int arc_len = min_arc_length(d);
  const int stack_len = min_stack_length(d);
  auto bound_text = [](int v) {
    return v == unbounded_length ? std::string("inf") : std::to_string(v);
  };

  std::cout << "n=" << d.vertices() << " arcs=" << d.arcs().size() << "\n";
  std::cout << "crossing_number=" << crossing << "\n";
  std::cout << "min_arc_length=" << bound_text(arc_len) << "\n";
  std::cout << "min_stack_length=" << bound_text(stack_len) << "\n";
  std::cout << "class=<" << std::max(2, crossing + 1) << ','
            << bound_text(arc_len) << ',' << bound_text(stack_len) << ">\n";
  std::cout << "stacks:";
  for (const stack_run& r : stack_decomposition(d))
    std::cout << " (" << r.outermost.lo << ',' << r.outermost.hi << ")x"
              << r.length;
  std::cout << "\n";
  std::cout << "core:\n";
  write_diagram(std::cout, core_map(d));
  return 0;
}

// ---------------------------------------------------------------------------

struct oracle_flags {
  int k = 3;
  int sigma = 1;
  int lambda = 2;
  int n = 8;
  std::string format = "csv";
};

int run_oracle(const oracle_flags& f) {
  if (f.k < 2) return usage_error("--k must be at least 2");
  if (f.sigma < 1) return usage_error("--sigma must be at least 1");
  if (f.lambda < 1) return usage_error("--lambda must be at least 1");
  int limit = oracle::default_vertex_limit;
  if (const char* env = std::getenv("PSEUDOKNOT_ORACLE_MAX")) {
    try {
      std::size_t used = 0;
      limit = std::stoi(env, &used);
      if (used != std::string(env).size() || limit < 0)
        throw std::invalid_argument("not a count");
    } catch (const std::exception&) {
      return usage_error("PSEUDOKNOT_ORACLE_MAX must be a nonnegative integer");
    }
  }
  const Count count =
      oracle::count_class(f.n, structure_class(f.k, f.lambda, f.sigma), limit);
  if (f.format == "json") {
    json doc;
    doc["kind"] = "oracle";
    doc["k"] = f.k;
    doc["sigma"] = f.sigma;
    doc["lambda"] = f.lambda;
    doc["n"] = f.n;
    doc["count"] = count.str();
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "n,count\n" << f.n << ',' << count.str() << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------

int run_verify(const std::string& table) {
  bool all_ok = true;
  std::cout << "table,entry,expected,computed,status\n";
  auto report = [&all_ok, &table](const std::string& entry,
                                  const std::string& expected,
                                  const std::string& computed, bool ok) {
    all_ok = all_ok && ok;
    std::cout << table << ',' << entry << ',' << expected << ',' << computed
              << ',' << (ok ? "ok" : "MISMATCH") << "\n";
  };

  if (table == "T000") {
    for (int sigma : {3, 4}) {
      const auto& row = sigma == 3 ? golden::t000_sigma3 : golden::t000_sigma4;
      for (int i = 0; i <= golden::t000_n_max - golden::t000_n_min; ++i) {
        const int n = golden::t000_n_min + i;
        const Count computed = canonical_total(3, sigma, n);
        const Count expected = row[static_cast<std::size_t>(i)];
        report("sigma=" + std::to_string(sigma) + " n=" + std::to_string(n),
               expected.str(), computed.str(), computed == expected);
      }
    }
  } else {
    auto check_rate = [&report](const root_equation& eq, double expected) {
      const Real rate = solve_growth(eq).rate;
      const bool ok =
          abs(rate - Real(expected)) <= Real(golden::rate_tolerance);
      std::ostringstream expect_text;
      expect_text << std::setprecision(6) << expected;
      report("k=" + std::to_string(eq.k) +
                 ((eq.kind == growth_kind::k2sigma ||
                   eq.kind == growth_kind::k4sigma)
                      ? " sigma=" + std::to_string(eq.sigma)
                      : std::string()),
             expect_text.str(), format_rate(rate), ok);
    };
    if (table == "table1") {
      for (int s = 3; s <= 9; ++s)
        for (int k = 3; k <= 9; ++k)
          check_rate(root_equation(growth_kind::k4sigma, k, s),
                     golden::table1[static_cast<std::size_t>(s - 3)]
                                   [static_cast<std::size_t>(k - 3)]);
    } else if (table == "tab1b") {
      for (int k = 2; k <= 10; ++k)
        check_rate(root_equation(growth_kind::k21, k),
                   golden::tab1b[static_cast<std::size_t>(k - 2)]);
    } else if (table == "tab2") {
      for (int k = 4; k <= 9; ++k)
        check_rate(root_equation(growth_kind::k41, k),
                   golden::tab2[static_cast<std::size_t>(k - 4)]);
    } else {  // tab3
      for (int s = 2; s <= 5; ++s)
        for (int k = 2; k <= 10; ++k)
          check_rate(root_equation(growth_kind::k2sigma, k, s),
                     golden::tab3[static_cast<std::size_t>(s - 2)]
                                 [static_cast<std::size_t>(k - 2)]);
    }
  }
  if (!all_ok) {
    std::cerr << "verification failed for table " << table << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact and asymptotic enumeration of k-noncrossing pseudoknot structures"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "pkenum 1.0.0");

  count_flags cf;
  auto* count = app.add_subcommand("count", "exact structure counts");
  count->add_option("--k", cf.k, "crossing bound k")->required();
  count->add_option("--sigma", cf.sigma, "minimum stack length")->required();
  count->add_option("--lambda", cf.lambda, "minimum arc length (2 or 4)")
      ->required()
      ->check(CLI::IsMember({2, 4}));
  count->add_option("--n-max", cf.n_max, "largest n")->required()
      ->check(CLI::Range(0, 2000));
  count->add_flag("--per-h", cf.per_h, "emit per-arc-number counts");
  count->add_option("--format", cf.format)->check(CLI::IsMember({"csv", "json"}));

  series_flags sf;
  auto* series_cmd = app.add_subcommand("series", "generating-function coefficients");
  series_cmd->add_option("--recipe", sf.recipe)
      ->check(CLI::IsMember({"secondary", "k2sigma", "k4sigma"}));
  series_cmd->add_option("--k", sf.k, "crossing bound k");
  series_cmd->add_option("--sigma", sf.sigma, "minimum stack length");
  series_cmd->add_option("--lambda", sf.lambda, "minimum arc length (secondary)");
  series_cmd->add_option("--order", sf.order, "truncation order")->required()
      ->check(CLI::Range(0, 2000));
  series_cmd->add_option("--format", sf.format)->check(CLI::IsMember({"csv", "json"}));

  growth_flags gf;
  auto* growth = app.add_subcommand("growth", "dominant singularity and growth rate");
  growth->add_option("--kind", gf.kind)
      ->required()
      ->check(CLI::IsMember({"k21", "k41", "k2sigma", "k4sigma"}));
  growth->add_option("--k", gf.k, "crossing bound k")->required();
  growth->add_option("--sigma", gf.sigma, "minimum stack length");
  growth->add_option("--tol", gf.tol, "residual tolerance");
  growth->add_option("--format", gf.format)->check(CLI::IsMember({"csv", "json"}));

  std::string classify_path;
  auto* classify = app.add_subcommand("classify", "classify a diagram file");
  classify->add_option("--in", classify_path, "diagram file")->required();

  oracle_flags of;
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force class count");
  oracle_cmd->add_option("--k", of.k, "crossing bound k")->required();
  oracle_cmd->add_option("--sigma", of.sigma, "minimum stack length")->required();
  oracle_cmd->add_option("--lambda", of.lambda, "minimum arc length")->required();
  oracle_cmd->add_option("--n", of.n, "vertex count")->required();
  oracle_cmd->add_option("--format", of.format)->check(CLI::IsMember({"csv", "json"}));

  std::string verify_table;
  auto* verify = app.add_subcommand("verify", "recompute embedded reference tables");
  verify->add_option("--table", verify_table)
      ->required()
      ->check(CLI::IsMember({"T000", "table1", "tab1b", "tab2", "tab3"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (count->parsed()) return run_count(cf);
    if (series_cmd->parsed()) return run_series(sf);
    if (growth->parsed()) return run_growth(gf);
    if (classify->parsed()) return run_classify(classify_path);
    if (oracle_cmd->parsed()) return run_oracle(of);
    if (verify->parsed()) return run_verify(verify_table);
  } catch (const pkenum::oracle::vertex_limit_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
