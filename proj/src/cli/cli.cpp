// Copyright 2026 The Laughlin Bundle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "laughlin/cli.hpp"
#include "laughlin/error.hpp"
#include "laughlin/laurent_series.hpp"
#include "laughlin/pushforward.hpp"

namespace laughlin::cli {
namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Format require_format(const std::string& s) {
  if (const auto f = parse_format(s)) return *f;
  throw UsageError("unknown --format '" + s + "' (json|csv|table)");
}

Level require_level(const std::string& s) {
  if (const auto l = parse_level(s)) return *l;
  throw UsageError("unknown --level '" + s + "' (closed|series|oracle)");
}

IntRange require_range(const std::string& flag, const std::string& s) {
  try {
    return parse_range(s);
  } catch (const Error& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

LaurentSeries named_series(const std::string& name, long power, int order, long p, int b) {
  if (name == "td") return pow_int(td_series(order), power);
  if (name == "exp") return exp_series(LaurentSeries::monomial(1, Rational(power), order));
  if (name == "integrand-A") {
    if (power < 0) throw UsageError("integrand-A needs --power r >= 0");
    return integrand_A(p, static_cast<int>(power), order);
  }
  if (name == "integrand-B") return pow_int(integrand_B(b, order), power);
  throw UsageError("unknown series '" + name + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chern characters of the Laughlin vector bundle over the Picard torus"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "laughlin 1.0.0");

  std::string format = "table";
  std::string level = "closed";
  int jobs = default_jobs();

  // compute
  auto* compute = app.add_subcommand("compute", "Chern characters on a parameter grid");
  std::string genus_s = "0", particles_s = "1", vanishing_s = "1", degree_s, quasiholes_s;
  compute->add_option("-g,--genus", genus_s, "genus g or range a:b")->capture_default_str();
  compute->add_option("-N,--particles", particles_s, "particle count N or range")->capture_default_str();
  compute->add_option("-b,--vanishing", vanishing_s, "vanishing order b >= 1 or range")->capture_default_str();
  auto* degree_opt = compute->add_option("-d,--degree", degree_s, "line-bundle degree d or range");
  auto* quasi_opt = compute->add_option("-p,--quasiholes", quasiholes_s, "quasi-hole count p or range");
  degree_opt->excludes(quasi_opt);
  compute->add_option("--format", format, "json|csv|table")->capture_default_str();
  compute->add_option("--level", level, "cross-check level closed|series|oracle")->capture_default_str();
  compute->add_option("--jobs", jobs, "worker threads (default $LAUGHLIN_JOBS or 1)")->check(CLI::PositiveNumber);

  // verify
  auto* verify = app.add_subcommand("verify", "run the identity suites");
  VerifyOptions vopts;
  verify->add_option("--max-genus", vopts.max_genus)->capture_default_str();
  verify->add_option("--max-particles", vopts.max_particles)->capture_default_str();
  verify->add_option("--max-vanishing", vopts.max_vanishing)->capture_default_str();
  verify->add_option("--max-quasiholes", vopts.max_quasiholes)->capture_default_str();
  verify->add_option("--level", level, "closed|series|oracle")->capture_default_str();
  verify->add_option("--jobs", jobs, "worker threads (default $LAUGHLIN_JOBS or 1)")->check(CLI::PositiveNumber);

  // series
  auto* series = app.add_subcommand("series", "dump exact series coefficients");
  std::string series_name;
  long power = 1;
  int order = 10;
  long series_p = 0;
  int series_b = 1;
  series->add_option("name", series_name, "td | exp | integrand-A | integrand-B")->required();
  series->add_option("--power", power, "exponent (td^n, e^{n x}, r for integrand-A, B^n)")->capture_default_str();
  series->add_option("--order", order, "highest exponent printed")->capture_default_str()->check(CLI::NonNegativeNumber);
  series->add_option("-p,--quasiholes", series_p, "p for integrand-A")->capture_default_str();
  series->add_option("-b,--vanishing", series_b, "b for integrand-B")->capture_default_str();
  series->add_option("--format", format, "table|json")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << "laughlin 1.0.0\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*compute) {
      SweepSpec spec;
      spec.genus = require_range("--genus", genus_s);
      spec.particles = require_range("--particles", particles_s);
      spec.vanishing = require_range("--vanishing", vanishing_s);
      if (*degree_opt) spec.degree = require_range("--degree", degree_s);
      if (*quasi_opt) spec.quasiholes = require_range("--quasiholes", quasiholes_s);
      spec.format = require_format(format);
      spec.level = require_level(level);
      spec.jobs = jobs;
      write_records(out, compute_records(spec), spec.format);
      return 0;
    }
    if (*verify) {
      vopts.level = require_level(level);
      vopts.jobs = jobs;
      std::vector<FamilyResult> results;
      try {
        results = run_verification(vopts);
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
      bool all = true;
      for (const auto& r : results) {
        out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)";
        if (!r.passed) out << " -- first counterexample: " << r.counterexample;
        out << '\n';
        all = all && r.passed;
      }
      out << (all ? "all identities hold" : "verification FAILED") << " at level " << to_string(vopts.level)
          << '\n';
      return all ? 0 : kExitVerifyFailed;
    }
    if (*series) {
      const Format f = require_format(format);
      LaurentSeries s;
      try {
        s = named_series(series_name, power, order, series_p, series_b);
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
      const int lo = s.valuation();
      if (f == Format::Json) {
        nlohmann::ordered_json j;
        j["name"] = series_name;
        j["power"] = power;
        j["valuation"] = lo;
        j["order"] = order;
        j["coefficients"] = nlohmann::ordered_json::array();
        for (int k = lo; k <= order; ++k) j["coefficients"].push_back(s.coefficient(k).to_string());
        out << j.dump(2) << '\n';
      } else {
        for (int k = lo; k <= order; ++k) out << s.coefficient(k) << '\n';
      }
      return 0;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace laughlin::cli
