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

#include <sstream>

#include "laughlin/cli.hpp"
#include "laughlin/error.hpp"
#include "laughlin/grassmann.hpp"
#include "laughlin/laughlin.hpp"
#include "laughlin/pushforward.hpp"

namespace laughlin::cli {
namespace {

using Failure = std::optional<std::string>;

template <class MakeWorker>
FamilyResult run_family(std::string name, std::size_t n, int jobs, MakeWorker make_worker) {
  FamilyResult result;
  result.name = std::move(name);
  result.cases = n;
  const auto outcomes = parallel_map<Failure>(n, jobs, make_worker);
  for (const auto& o : outcomes) {
    if (o) {
      result.passed = false;
      result.counterexample = *o;
      break;
    }
  }
  return result;
}

std::vector<LaughlinParams> sweep(int max_genus, int max_particles, int max_b, int max_p) {
  std::vector<LaughlinParams> out;
  for (int g = 0; g <= max_genus; ++g) {
    for (int n = 2 * g; n <= max_particles; ++n) {
      for (int b = 1; b <= max_b; ++b) {
        const int r = n - g + 1;
        for (long p = -r + 1; p <= max_p; ++p) out.push_back(LaughlinParams::from_quasiholes(g, n, b, p));
      }
    }
  }
  return out;
}

template <class T>
std::string describe(const LaughlinParams& params, const T& got, const T& want) {
  std::ostringstream os;
  os << params << ": got " << got << ", expected " << want;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ExtElement& e) {
  if (e.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [mask, c] : e.terms()) {
    os << (first ? "" : " + ") << c << "*[" << mask << "]";
    first = false;
  }
  return os;
}

ExtElement theta_d_term(int g, const Rational& coeff, int m) {
  return wedge_power(-theta_d(g), m) * (coeff / Rational(factorial(m)));
}

std::vector<FamilyResult> closed_families(const std::vector<LaughlinParams>& points, int jobs) {
  std::vector<FamilyResult> out;
  out.push_back(run_family("rank is a nonnegative integer, zero iff p < 0", points.size(), jobs, [&] {
    return [&](std::size_t i) -> Failure {
      const auto& P = points[i];
      const Rational rk = closed_form_ch(P).rank();
      if (!rk.is_integer() || rk.sign() < 0 || rk.is_zero() != (P.p() < 0)) {
        return describe(P, rk, Rational(P.p() < 0 ? 0 : 1));
      }
      return std::nullopt;
    };
  }));
  out.push_back(run_family("Wen-Zee shift and vanishing", points.size(), jobs, [&] {
    return [&](std::size_t i) -> Failure {
      const auto report = wen_zee_check(points[i]);
      if (report.passed()) return std::nullopt;
      std::ostringstream os;
      os << points[i] << ": vanishing " << report.vanishing_matches << ", shift " << report.shift_matches;
      return os.str();
    };
  }));
  out.push_back(run_family("Wen-Niu degeneracy: c_m = b^(g-m) at p = 0", points.size(), jobs, [&] {
    return [&](std::size_t i) -> Failure {
      const auto& P = points[i];
      if (P.p() != 0) return std::nullopt;
      ChernVector want;
      for (int m = 0; m <= P.g; ++m) want.c.push_back(Rational(P.b).pow(P.g - m));
      const auto got = closed_form_ch(P);
      return got == want ? Failure{} : describe(P, got, want);
    };
  }));
  out.push_back(run_family("genus 0 and genus 1 closed forms", points.size(), jobs, [&] {
    return [&](std::size_t i) -> Failure {
      const auto& P = points[i];
      const long p = P.p();
      if (P.g > 1 || p < 0) return std::nullopt;
      ChernVector want;
      if (P.g == 0) {
        want.c = {Rational(binomial(P.N + p, p))};
      } else {
        const Rational c1(binomial(P.N + p - 1, p));
        want.c = {c1 * (Rational(P.b) + Rational(p, P.N)), c1};
      }
      const auto got = closed_form_ch(P);
      return got == want ? Failure{} : describe(P, got, want);
    };
  }));
  out.push_back(run_family("projective-flatness defects vanish at p = 0", points.size(), jobs, [&] {
    return [&](std::size_t i) -> Failure {
      const auto& P = points[i];
      if (P.p() != 0) return std::nullopt;
      for (const auto& d : projective_flatness_defect(closed_form_ch(P))) {
        if (!d.is_zero()) return describe(P, d, Rational(0));
      }
      return std::nullopt;
    };
  }));
  return out;
}

std::vector<FamilyResult> series_families(const std::vector<LaughlinParams>& points, int max_particles,
                                          int jobs) {
  std::vector<FamilyResult> out;
  const int max_r = std::max(max_particles + 1, 30);
  out.push_back(run_family("[x^(r-1)] td^r = 1, direct and via z = 1 - e^(-x)", static_cast<std::size_t>(max_r),
                           jobs, [] {
    return [](std::size_t i) -> Failure {
      const int r = static_cast<int>(i) + 1;
      const Rational direct = coefficient(pow_int(td_series(r), r), r - 1);
      // Res (1 - e^{-x})^{-r} dx with x = -log(1 - z): dx = dz / (1 - z).
      const int order = r + 1;
      LaurentSeries one_minus_exp = LaurentSeries::constant(1, order) -
                                    exp_series(LaurentSeries::monomial(1, -1, order));
      const LaurentSeries integrand = pow_int(one_minus_exp.normalized(), -r);
      const LaurentSeries x_of_z = -log_series(LaurentSeries(0, {1, -1}, order));
      const Rational via_z = residue(mul(compose(integrand, x_of_z), derivative(x_of_z)));
      if (direct != 1 || via_z != 1) {
        return "r=" + std::to_string(r) + ": direct " + direct.to_string() + ", via z " + via_z.to_string();
      }
      return std::nullopt;
    };
  }));
  out.push_back(run_family("closed form = series coefficient", points.size(), jobs, [&] {
    return [&, evaluator = ChernSeriesEvaluator(max_particles)](std::size_t i) mutable -> Failure {
      const auto& P = points[i];
      const auto series = evaluator.evaluate(P);
      const auto closed = closed_form_ch(P);
      return series == closed ? Failure{} : describe(P, series, closed);
    };
  }));
  return out;
}

std::vector<FamilyResult> oracle_families(const VerifyOptions& o) {
  std::vector<FamilyResult> out;
  const int jobs = o.jobs;

  struct Monomial {
    int g, N, xi, ell, eta_power;
  };
  std::vector<Monomial> p2_cases;
  for (int g = 0; g <= o.max_genus; ++g) {
    for (int ell = 0; ell <= g + 1; ++ell) {
      for (int e = 0; e <= 2 * g + 1; ++e) p2_cases.push_back({g, 0, 0, ell, e});
    }
  }
  out.push_back(run_family("p2 pushforward of theta_N^l eta^e", p2_cases.size(), jobs, [&] {
    return [&](std::size_t i) -> Failure {
      const auto [g, N, xi, ell, e] = p2_cases[i];
      const ExtElement got = integrate_picN(wedge_power(theta_N(g), ell) * wedge_power(eta(g), e));
      ExtElement want(g);
      if (e % 2 == 0 && ell + e / 2 == g) {
        const int m = e / 2;
        want = theta_d_term(g, Rational(factorial(ell) * factorial(2 * m)), m);
      }
      if (got == want) return std::nullopt;
      std::ostringstream os;
      os << "g=" << g << " l=" << ell << " e=" << e << ": got " << got << ", expected " << want;
      return os.str();
    };
  }));

  std::vector<Monomial> mono_cases;
  for (int g = 0; g <= o.max_genus; ++g) {
    for (int n = 2 * g; n <= o.max_particles; ++n) {
      for (int xi = 0; xi <= n; ++xi) {
        for (int ell = 0; ell <= g; ++ell) {
          for (int e = 0; e <= 2 * g; ++e) mono_cases.push_back({g, n, xi, ell, e});
        }
      }
    }
  }
  out.push_back(run_family("pushforward of xi^j theta_N^l eta^e", mono_cases.size(), jobs, [&] {
    return [&](std::size_t i) -> Failure {
      const auto [g, N, xi, ell, e] = mono_cases[i];
      const ExtElement base = wedge_power(theta_N(g), ell) * wedge_power(eta(g), e);
      const FiberedClass cls = base * FiberedClass::xi_power(g, xi, N);
      const ExtElement got = integrate_picN(segre_pushforward(cls, N, g));
      ExtElement want(g);
      const int k = xi - (N - g);
      if (k >= 0 && e % 2 == 0 && k + ell + e / 2 == g) {
        const int m = e / 2;
        const Rational c = Rational(factorial(ell + k) * factorial(2 * m)) / Rational(factorial(k));
        want = theta_d_term(g, c, m);
      }
      if (got == want) return std::nullopt;
      std::ostringstream os;
      os << "g=" << g << " N=" << N << " xi^" << xi << " l=" << ell << " e=" << e << ": got " << got
         << ", expected " << want;
      return os.str();
    };
  }));

  std::vector<std::pair<int, int>> shapes;
  for (int g = 0; g <= o.max_genus; ++g) {
    for (int n = std::max(2 * g, 1); n <= o.max_particles; ++n) shapes.emplace_back(g, n);
  }
  out.push_back(run_family("Td(T S^N C) from ch matches the closed class", shapes.size(), jobs, [&] {
    return [&](std::size_t i) -> Failure {
      const auto [g, N] = shapes[i];
      if (todd_from_ch(tangent_ch_SNC(N, g, N), N) == todd_class_SNC(N, g, N)) return std::nullopt;
      return "g=" + std::to_string(g) + " N=" + std::to_string(N);
    };
  }));
  out.push_back(run_family("c(T S^N C) from ch matches (1+xi)^r exp(-theta_N/(1+xi))", shapes.size(), jobs, [&] {
    return [&](std::size_t i) -> Failure {
      const auto [g, N] = shapes[i];
      if (chern_from_ch(tangent_ch_SNC(N, g, N), N) == chern_class_SNC(N, g, N)) return std::nullopt;
      return "g=" + std::to_string(g) + " N=" + std::to_string(N);
    };
  }));
  out.push_back(run_family("Segre pushforward kills the S^N C ring relation", shapes.size(), jobs, [&] {
    return [&](std::size_t i) -> Failure {
      const auto [g, N] = shapes[i];
      const int r = N - g + 1;
      for (int j = 0; j <= g + 1; ++j) {
        const int cap = std::max(N, r + j);
        FiberedClass relation(g, cap);
        ExtElement coeff = ExtElement::scalar(g, 1);  // (-theta_N)^i / i!
        for (int k = 0; k <= g; ++k) {
          if (k > 0) coeff = coeff * (-theta_N(g)) * Rational(1, k);
          relation.at(r - k + j) += coeff;
        }
        const ExtElement pushed = segre_pushforward(relation, N, g);
        if (!pushed.is_zero()) {
          return "g=" + std::to_string(g) + " N=" + std::to_string(N) + " j=" + std::to_string(j);
        }
      }
      return std::nullopt;
    };
  }));

  const auto points = sweep(o.max_genus, o.max_particles, o.max_vanishing, o.max_quasiholes);
  out.push_back(run_family("closed form = binomial 1/x reduction = GRR oracle", points.size(), jobs, [&] {
    return [&](std::size_t i) -> Failure {
      const auto& P = points[i];
      const auto oracle = grr_oracle(P);
      const auto closed = closed_form_ch(P);
      if (oracle != closed) return describe(P, oracle, closed);
      const LaurentSeries A = integrand_A(P.p(), P.r(), P.N);
      const LaurentSeries B = integrand_B(P.b, P.N);
      ChernVector reduced;
      for (int m = 0; m <= P.g; ++m) reduced.c.push_back(lemma_ab_eval(A, B, P.g, m, P.N));
      return reduced == oracle ? Failure{} : describe(P, reduced, oracle);
    };
  }));
  return out;
}

}  // namespace

std::vector<FamilyResult> run_verification(const VerifyOptions& options) {
  if (options.level == Level::Oracle &&
      (options.max_genus > kOracleMaxGenus || options.max_particles > kOracleMaxParticles)) {
    throw Error(Errc::OracleScaleExceeded, "oracle level supports --max-genus <= " +
                                               std::to_string(kOracleMaxGenus) + " and --max-particles <= " +
                                               std::to_string(kOracleMaxParticles));
  }
  if (options.max_genus < 0 || options.max_particles < 0 || options.max_vanishing < 1) {
    throw Error(Errc::InvalidArgument, "verification bounds must be nonnegative (vanishing >= 1)");
  }
  const auto points = sweep(options.max_genus, options.max_particles, options.max_vanishing, options.max_quasiholes);
  auto results = closed_families(points, options.jobs);
  if (options.level == Level::Closed) return results;
  for (auto& f : series_families(points, options.max_particles, options.jobs)) results.push_back(std::move(f));
  if (options.level == Level::Series) return results;
  for (auto& f : oracle_families(options)) results.push_back(std::move(f));
  return results;
}

}  // namespace laughlin::cli
