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

// Acceptance runner: one PASS/FAIL line per criterion, each timed against
// its budget. Exit status is 0 iff every criterion passes.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "laughlin/error.hpp"
#include "laughlin/laughlin.hpp"
#include "laughlin/pushforward.hpp"
#include "oracles.hpp"

using namespace laughlin;

namespace {

// A criterion body returns an empty string on success, else the first
// failure. `note` collects anything worth reporting either way.
struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<std::string(std::string& note)> body;
};

template <class T>
std::string show(const T& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

ExtElement theta_d_power_over_fact(int g, int m) {
  return wedge_power(-theta_d(g), m) * Rational(mpz_class(1), factorial(m));
}

// The sweep shared by several criteria: g <= 6, N <= 40, b <= 5, -r < p <= 6.
template <class Fn>
std::string for_each_sweep_point(int max_g, int max_n, Fn&& fn) {
  for (int g = 0; g <= max_g; ++g) {
    for (int N = std::max(2 * g, 1); N <= max_n; ++N) {
      const int r = N - g + 1;
      for (int b = 1; b <= 5; ++b) {
        for (long p = -r + 1; p <= 6; ++p) {
          auto failure = fn(LaughlinParams::from_quasiholes(g, N, b, p));
          if (!failure.empty()) return failure;
        }
      }
    }
  }
  return {};
}

std::string td6_constants(std::string&) {
  const std::vector<Rational> want = {1, 3, Rational(17, 4), Rational(15, 4), Rational(137, 60), 1,
                                      Rational(19087, 60480), Rational(275, 4032), Rational(9829, 1209600),
                                      Rational(-19, 80640)};
  const auto td6 = pow_int(td_series(9), 6);
  // Independent route: Bernoulli numbers and schoolbook products.
  const auto td = oracle::todd_from_bernoulli(9);
  oracle::Poly power = {1};
  for (int i = 0; i < 6; ++i) power = oracle::truncated_product(power, td, 9);
  for (int k = 0; k <= 9; ++k) {
    const auto& w = want[static_cast<std::size_t>(k)];
    if (td6.coefficient(k) != w) return "x^" + show(k) + ": series gives " + show(td6.coefficient(k));
    if (power[static_cast<std::size_t>(k)] != w) return "x^" + show(k) + ": Bernoulli route gives " + show(power[k]);
  }
  return {};
}

std::string residue_law(std::string&) {
  for (int r = 1; r <= 30; ++r) {
    if (pow_int(td_series(r - 1), r).coefficient(r - 1) != 1) return "direct, r=" + show(r);
    // [x^{r-1}] td^r = res_x (1 - e^{-x})^{-r}; pull back along x = -log(1 - z).
    const int T = r + 2;
    const auto x = LaurentSeries::variable(T);
    const auto one_minus_exp = (LaurentSeries::constant(1, T) - exp_series(-x)).normalized();
    const auto F = pow_int(invert(one_minus_exp), r);
    const auto u = -log_series(LaurentSeries::constant(1, T) - x);
    const auto pulled = mul(compose(F, u), derivative(u));
    if (residue(F) != 1 || residue(pulled) != 1) return "change of variables, r=" + show(r);
    // After substitution the integrand is z^{-r} / (1 - z) exactly.
    for (int k = -r; k <= -1; ++k) {
      if (pulled.coefficient(k) != 1) return "pulled-back integrand, r=" + show(r) + ", k=" + show(k);
    }
  }
  return {};
}

std::string p2_pushforward(std::string& note) {
  std::size_t cases = 0;
  for (int g = 0; g <= kMaxGenus; ++g) {
    for (int ell = 0; ell <= 2 * g + 1; ++ell) {
      for (int e = 0; e <= 2 * g + 1; ++e) {
        const auto got = integrate_picN(wedge_power(theta_N(g), ell) * wedge_power(eta(g), e));
        ExtElement want(g);
        if (e % 2 == 0 && ell + e / 2 == g) {
          want = theta_d_power_over_fact(g, e / 2) * Rational(factorial(ell) * factorial(e));
        }
        ++cases;
        if (got != want) return "g=" + show(g) + " l=" + show(ell) + " e=" + show(e);
      }
    }
  }
  note = show(cases) + " (g, l, e) triples";
  return {};
}

std::string monomial_pushforward(std::string& note) {
  std::size_t cases = 0;
  for (int g = 0; g <= 3; ++g) {
    for (int N = std::max(2 * g, 1); N <= 8; ++N) {
      for (int j = 0; j <= N; ++j) {
        for (int ell = 0; ell <= 2 * g; ++ell) {
          for (int e = 0; e <= 2 * g; ++e) {
            const auto base = wedge_power(theta_N(g), ell) * wedge_power(eta(g), e);
            const auto got = integrate_picN(segre_pushforward(base * FiberedClass::xi_power(g, j, N), N, g));
            const int k = j - (N - g);
            ExtElement want(g);
            if (k >= 0 && e % 2 == 0 && k + ell + e / 2 == g) {
              const int m = e / 2;
              want = wedge_power(-theta_d(g), m) *
                     (Rational(factorial(ell + k) * factorial(2 * m)) / Rational(factorial(k) * factorial(m)));
            }
            ++cases;
            if (got != want) {
              return "g=" + show(g) + " N=" + show(N) + " xi^" + show(j) + " l=" + show(ell) + " e=" + show(e);
            }
          }
        }
      }
    }
  }
  note = show(cases) + " monomials";
  return {};
}

std::string todd_chern(std::string&) {
  for (int g = 0; g <= 3; ++g) {
    for (int N = std::max(2 * g, 1); N <= 10; ++N) {
      const int r = N - g + 1;
      const auto ch = tangent_ch_SNC(N, g, N);
      if (todd_from_ch(ch, N) != todd_class_SNC(N, g, N)) return "Todd, g=" + show(g) + " N=" + show(N);
      const auto one_plus_x = LaurentSeries(0, {1, 1}, N);
      const auto want = FiberedClass::from_series(pow_int(one_plus_x, r), g, N) *
                        exp_theta_times_series(-theta_N(g), invert(one_plus_x), N);
      if (chern_from_ch(ch, N) != want) return "Chern, g=" + show(g) + " N=" + show(N);
    }
  }
  return {};
}

std::string three_way(std::string& note) {
  std::size_t series_points = 0, oracle_points = 0;
  ChernSeriesEvaluator evaluator(40);
  auto failure = for_each_sweep_point(6, 40, [&](const LaughlinParams& params) -> std::string {
    ++series_points;
    const auto closed = closed_form_ch(params);
    if (evaluator.evaluate(params) != closed) return "closed vs series at " + show(params);
    if (params.g <= 3 && params.N <= 8) {
      ++oracle_points;
      if (grr_oracle(params) != closed) return "closed vs oracle at " + show(params);
    }
    return {};
  });
  note = show(series_points) + " closed=series points, " + show(oracle_points) + " oracle points";
  return failure;
}

std::string wen_niu(std::string& note) {
  std::size_t cases = 0;
  for (int g = 0; g <= 6; ++g) {
    for (int b = 1; b <= 5; ++b) {
      for (int N = std::max(2 * g, 1); N <= 40; ++N) {
        const auto params = LaughlinParams::from_quasiholes(g, N, b, 0);
        const auto v = closed_form_ch(params);
        if (rank(params) != Rational(b).pow(g)) return "rank at " + show(params);
        for (int m = 0; m <= g; ++m) {
          if (v.c[static_cast<std::size_t>(m)] != Rational(b).pow(g - m)) return "c_" + show(m) + " at " + show(params);
        }
        // Where the exterior algebra is available, also as classes:
        // ch(V) = b^g exp(-theta_d / b).
        if (g <= kMaxGenus) {
          ExtElement ch(g);
          for (int m = 0; m <= g; ++m) ch += theta_d_power_over_fact(g, m) * v.c[static_cast<std::size_t>(m)];
          if (ch != exp_nilpotent(theta_d(g) * Rational(-1, b)) * Rational(b).pow(g)) return "ch at " + show(params);
        }
        ++cases;
      }
    }
  }
  note = show(cases) + " points";
  return {};
}

std::string wen_zee(std::string& note) {
  std::size_t cases = 0;
  auto failure = for_each_sweep_point(6, 40, [&](const LaughlinParams& params) -> std::string {
    if (!wen_zee_check(params).passed()) return "report at " + show(params);
    if (params.p() >= 0) return {};
    ++cases;
    for (const auto& c : closed_form_ch(params).c) {
      if (!c.is_zero()) return "nonzero ch at " + show(params);
    }
    return {};
  });
  note = show(cases) + " points with -r < p < 0";
  return failure;
}

std::string hall_slope(std::string&) {
  for (int g = 1; g <= 6; ++g) {
    for (int b = 1; b <= 5; ++b) {
      for (int N = 2 * g; N <= 40; ++N) {
        const auto params = LaughlinParams::from_quasiholes(g, N, b, 0);
        if (slope(params) != Rational(1, b)) return "p=0 at " + show(params);
      }
    }
  }
  for (int N = 2; N <= 40; ++N) {
    for (int b = 1; b <= 5; ++b) {
      for (long p = 0; p <= 6; ++p) {
        const auto params = LaughlinParams::from_quasiholes(1, N, b, p);
        if (slope(params) != (Rational(b) + Rational(p, N)).reciprocal()) return "genus 1 at " + show(params);
      }
    }
  }
  return {};
}

std::string flatness(std::string& note) {
  for (int g = 0; g <= 6; ++g) {
    for (int b = 1; b <= 5; ++b) {
      for (int N = std::max(2 * g, 1); N <= 40; ++N) {
        const auto params = LaughlinParams::from_quasiholes(g, N, b, 0);
        for (const auto& d : projective_flatness_defect(closed_form_ch(params))) {
          if (!d.is_zero()) return "defect at p=0, " + show(params);
        }
      }
    }
  }
  for (int g = 2; g <= 6; ++g) {
    for (int N = 2 * g; N <= 40; ++N) {
      for (int b = 1; b <= 5; ++b) {
        for (long p = 1; p <= 6; ++p) {
          const auto params = LaughlinParams::from_quasiholes(g, N, b, p);
          const auto defects = projective_flatness_defect(closed_form_ch(params));
          for (std::size_t i = 0; i < defects.size(); ++i) {
            if (!defects[i].is_zero()) {
              note = "witness " + show(params) + ": ch " + show(closed_form_ch(params)) + ", defect(m=" +
                     show(i + 2) + ") = " + defects[i].to_string();
              return {};
            }
          }
        }
      }
    }
  }
  return "no witness with p > 0, g >= 2";
}

// --- criterion 11: randomized property suites ----------------------------

LaurentSeries random_series(std::mt19937_64& rng, int min_val, int max_val, int max_len) {
  const int v = std::uniform_int_distribution<int>(min_val, max_val)(rng);
  const int n = std::uniform_int_distribution<int>(1, max_len)(rng);
  std::vector<Rational> c;
  for (int i = 0; i < n; ++i) c.push_back(oracle::random_rational(rng));
  return LaurentSeries(v, std::move(c), v + n - 1);
}

ExtElement random_element(std::mt19937_64& rng, int g, int parity) {
  std::uniform_int_distribution<unsigned> mask(0, (1u << (4 * g)) - 1);
  ExtElement e(g);
  for (int t = 0; t < 6; ++t) {
    const auto m = static_cast<GeneratorSet>(mask(rng));
    if (degree(m) % 2 == parity) e.add_term(m, oracle::random_rational(rng));
  }
  return e;
}

bool agrees_to(const LaurentSeries& low, const LaurentSeries& high) {
  if (low.trunc() > high.trunc()) return false;
  for (int k = std::min(low.valuation(), high.valuation()); k <= low.trunc(); ++k) {
    if (low.coefficient(k) != high.coefficient(k)) return false;
  }
  return true;
}

std::string properties(std::string& note) {
  std::mt19937_64 rng(20261016);
  std::size_t ring = 0, explog = 0, residues = 0, graded = 0, soundness = 0;

  for (; ring < 300; ++ring) {
    const auto a = random_series(rng, -2, 2, 5), b = random_series(rng, -2, 2, 5), c = random_series(rng, -2, 2, 5);
    if (mul(mul(a, b), c) != mul(a, mul(b, c)) || mul(a, b) != mul(b, a) ||
        mul(a, add(b, c)) != add(mul(a, b), mul(a, c)) || add(add(a, b), c) != add(a, add(b, c))) {
      return "ring axioms, case " + show(ring);
    }
  }
  while (explog < 250) {
    const auto a = random_series(rng, 1, 2, 6);
    const auto unit = add(LaurentSeries::constant(1, a.trunc()), a);
    if (log_series(exp_series(a)) != a) return "log(exp a), case " + show(explog);
    if (exp_series(log_series(unit)) != unit) return "exp(log(1+a)), case " + show(explog);
    ++explog;
  }
  for (; residues < 250; ++residues) {
    const auto raw = random_series(rng, -3, 0, 4);
    const LaurentSeries F(raw.valuation(), {raw.coeffs().begin(), raw.coeffs().end()}, 2);
    std::vector<Rational> uc = {oracle::random_rational(rng)};
    if (uc[0].is_zero()) uc[0] = 1;
    for (int k = 0; k < 7; ++k) uc.push_back(oracle::random_rational(rng));
    const LaurentSeries u(1, uc, 8);
    if (residue(mul(compose(F, u), derivative(u))) != residue(F)) return "residue, case " + show(residues);
  }
  for (; graded < 250; ++graded) {
    const int g = 1 + static_cast<int>(graded % 4);
    const int pa = static_cast<int>(graded % 2), pb = static_cast<int>((graded / 2) % 2);
    const auto x = random_element(rng, g, pa), y = random_element(rng, g, pb), z = random_element(rng, g, 0);
    const Rational sign = (pa * pb) ? -1 : 1;
    if (wedge(x, y) != wedge(y, x) * sign || wedge(wedge(x, y), z) != wedge(x, wedge(y, z))) {
      return "graded commutativity, case " + show(graded);
    }
  }
  for (; soundness < 200; ++soundness) {
    std::vector<Rational> c;
    for (int k = 0; k < 5; ++k) c.push_back(oracle::random_rational(rng));
    if (c[0].is_zero()) c[0] = 1;
    auto pos = c;
    pos[0] = 0;
    const int val = std::uniform_int_distribution<int>(-2, 1)(rng);
    auto at = [](const std::vector<Rational>& coeffs, int v, int t) {
      return LaurentSeries(v, {coeffs.begin(), coeffs.begin() + std::min<std::ptrdiff_t>(coeffs.size(), t - v + 1)}, t);
    };
    const auto lo = at(c, val, 5), hi = at(c, val, 9), plo = at(pos, 0, 5), phi = at(pos, 0, 9);
    if (!agrees_to(mul(lo, lo), mul(hi, hi)) || !agrees_to(invert(lo), invert(hi)) ||
        !agrees_to(pow_int(lo, -3), pow_int(hi, -3)) || !agrees_to(exp_series(plo), exp_series(phi))) {
      return "truncation soundness, case " + show(soundness);
    }
  }
  note = show(ring + explog + residues + graded + soundness) + " randomized cases";
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "td^6 pinned constants", 1, td6_constants},
      {2, "residue law [x^{r-1}] td^r = 1, r <= 30", 5, residue_law},
      {3, "p2 pushforward of theta_N^l eta^2m, g <= 4", 10, p2_pushforward},
      {4, "pushforward of xi-theta-eta monomials, g <= 3, N <= 8", 30, monomial_pushforward},
      {5, "Todd/Chern identities, g <= 3, N <= 10", 30, todd_chern},
      {6, "three-way Chern character agreement", 300, three_way},
      {7, "Wen-Niu degeneracy at p = 0", 10, wen_niu},
      {8, "Wen-Zee vanishing for -r < p < 0", 10, wen_zee},
      {9, "slope / Hall conductance", 5, hall_slope},
      {10, "projective-flatness compatibility", 30, flatness},
      {11, "randomized property suites", 60, properties},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    std::string note, failure;
    const auto start = std::chrono::steady_clock::now();
    try {
      failure = c.body(note);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (failure.empty() && seconds > c.budget_seconds) failure = "over budget";
    failed += failure.empty() ? 0 : 1;
    std::printf("%s  [%2d] %s  (%.2f s / %.0f s)%s%s\n", failure.empty() ? "PASS" : "FAIL", c.id, c.name.c_str(),
                seconds, c.budget_seconds, note.empty() ? "" : "  ", note.c_str());
    if (!failure.empty()) std::printf("      first failure: %s\n", failure.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
