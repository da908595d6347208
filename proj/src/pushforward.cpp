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

#include "laughlin/pushforward.hpp"

#include <sstream>
#include <string>

#include "laughlin/error.hpp"

namespace laughlin {
namespace {

void require_cap(int cap, int needed, const char* what) {
  if (cap < needed) {
    throw Error(Errc::CapTooSmall, std::string(what) + ": xi cap " + std::to_string(cap) +
                                       " below required " + std::to_string(needed));
  }
}

// (td x - 1 - x) / x; the numerator starts at -x/2, so the quotient has a
// nonzero constant term.
LaurentSeries todd_exponent_series(int order) {
  LaurentSeries numerator = td_series(order + 1);
  numerator -= LaurentSeries(0, {1, 1}, order + 1);
  return numerator.shifted(-1).normalized();
}

// exp(sum_i i! w_i ch_i(V)) to xi^cap.
FiberedClass multiplicative_class(const BundleChData& data, const LaurentSeries& log_weights, int cap) {
  require_cap(data.ch().cap(), cap, "characteristic class");
  const FiberedClass& ch = data.ch();
  FiberedClass exponent(ch.genus(), cap);
  for (int i = 1; i <= ch.max_degree(); ++i) {
    const Rational w = log_weights.coefficient(i) * Rational(factorial(i));
    if (w.is_zero()) continue;
    exponent += ch.degree_component(i) * w;
  }
  return exp_class(exponent);
}

}  // namespace

BundleChData::BundleChData(Rational rank, FiberedClass ch) : rank_(std::move(rank)), ch_(std::move(ch)) {
  if (!rank_.is_integer() || rank_.sign() < 0) {
    throw Error(Errc::InvalidArgument, "bundle rank must be a nonnegative integer, got " + rank_.to_string());
  }
  const FiberedClass ch0 = ch_.degree_component(0);
  if (ch0[0].scalar_part() != rank_) {
    throw Error(Errc::InvalidArgument, "ch_0 = " + ch0[0].scalar_part().to_string() +
                                           " does not match rank " + rank_.to_string());
  }
}

BundleChData tangent_ch_SNC(int N, int g, int cap) {
  const int r = N - g + 1;
  const ExtElement fiber = ExtElement::scalar(g, r) - theta_N(g);
  FiberedClass ch(g, cap);
  ch.at(0).add_term(0, g - 1);
  for (int j = 0; j <= cap; ++j) ch.at(j) += fiber * Rational(mpz_class(1), factorial(j));
  return BundleChData(Rational(N), std::move(ch));
}

ExtElement segre_pushforward(const FiberedClass& c, int N, int g) {
  if (N <= 2 * g - 1) {
    throw Error(Errc::InvalidRegime, "segre pushforward needs N > 2g - 1 (N=" + std::to_string(N) +
                                         ", g=" + std::to_string(g) + ")");
  }
  require_cap(c.cap(), N, "segre_pushforward");
  if (c.genus() != g) throw Error(Errc::GenusMismatch, "class genus differs from g");
  const ExtElement theta = theta_N(g);
  ExtElement out(g);
  ExtElement w = ExtElement::scalar(g, 1);  // W_k = theta_N^k / k!
  for (int k = 0; k <= g; ++k) {
    if (k > 0) w = wedge(w, theta) * Rational(1, k);
    const ExtElement& coeff = c[N - g + k];
    if (!coeff.is_zero()) out += wedge(coeff, w);
  }
  return out;
}

FiberedClass todd_class_SNC(int N, int g, int cap) {
  require_cap(cap, N, "todd_class_SNC");
  const int r = N - g + 1;
  const FiberedClass td_r = FiberedClass::from_series(pow_int(td_series(cap), r), g, cap);
  return td_r * exp_theta_times_series(theta_N(g), todd_exponent_series(cap), cap);
}

FiberedClass chern_class_SNC(int N, int g, int cap) {
  require_cap(cap, N, "chern_class_SNC");
  const int r = N - g + 1;
  const LaurentSeries one_plus_xi(0, {1, 1}, cap);
  const FiberedClass top = FiberedClass::from_series(pow_int(one_plus_xi, r), g, cap);
  return top * exp_theta_times_series(-theta_N(g), invert(one_plus_xi), cap);
}

FiberedClass todd_from_ch(const BundleChData& ch, int cap) {
  const int order = ch.ch().max_degree();
  return multiplicative_class(ch, log_series(td_series(order)), cap);
}

FiberedClass chern_from_ch(const BundleChData& ch, int cap) {
  const int order = ch.ch().max_degree();
  return multiplicative_class(ch, log_series(LaurentSeries(0, {1, 1}, order)), cap);
}

LaurentSeries integrand_A(long p, int r, int order) {
  const LaurentSeries e_px = exp_series(LaurentSeries::monomial(1, Rational(p), order));
  return mul(e_px, pow_int(td_series(order), r));
}

LaurentSeries integrand_B(int b, int order) {
  return todd_exponent_series(order) + LaurentSeries::constant(b, order);
}

FiberedClass grr_integrand(const LaughlinParams& params, int cap) {
  params.validate();
  require_cap(cap, params.N, "grr_integrand");
  const int g = params.g;
  const ExtElement line_part = exp_nilpotent(theta_N(g) * Rational(params.b) - eta(g));
  const FiberedClass series_part = FiberedClass::from_series(integrand_A(params.p(), params.r(), cap), g, cap) *
                                   exp_theta_times_series(theta_N(g), todd_exponent_series(cap), cap);
  return line_part * series_part;
}

ChernVector grr_oracle(const LaughlinParams& params) {
  params.validate();
  if (params.g > kOracleMaxGenus || params.N > kOracleMaxParticles) {
    std::ostringstream os;
    os << params << " exceeds oracle scale g <= " << kOracleMaxGenus << ", N <= " << kOracleMaxParticles;
    throw Error(Errc::OracleScaleExceeded, os.str());
  }
  const FiberedClass integrand = grr_integrand(params, params.N);
  return ChernVector{as_theta_d_vector(integrate_picN(segre_pushforward(integrand, params.N, params.g)))};
}

Rational lemma_ab_eval(const LaurentSeries& A, const LaurentSeries& B, int g, int m, int N) {
  if (m < 0 || m > g) throw Error(Errc::InvalidArgument, "need 0 <= m <= g");
  if (N <= 2 * g - 1) throw Error(Errc::InvalidRegime, "need N > 2g - 1");
  // (B + 1/x)^{g-m} = sum_l binom(g-m, l) B^l x^{-(g-m-l)}.
  Rational sum = Rational(binomial(g - m, 0)) * A.coefficient(N - m);
  LaurentSeries b_power = B;
  for (int l = 1; l <= g - m; ++l) {
    if (l > 1) b_power = mul(b_power, B);
    sum += Rational(binomial(g - m, l)) * coefficient_of_product(A, b_power, N - m - l);
  }
  return sum;
}

ChernVector chern_via_series(const LaughlinParams& params) {
  params.validate();
  const int g = params.g;
  const int r = params.r();
  const int order = r - 1 + g;
  const LaurentSeries td = td_series(order);
  const LaurentSeries A = mul(exp_series(LaurentSeries::monomial(1, Rational(params.p()), order)),
                              pow_int(td, r));
  const LaurentSeries q = td.shifted(-1) + LaurentSeries::constant(params.b - 1, order - 1);
  ChernVector v;
  v.c.resize(static_cast<std::size_t>(g + 1));
  for (int m = 0; m <= g; ++m) {
    v.c[static_cast<std::size_t>(m)] = coefficient(mul(A, pow_int(q, g - m)), r - 1);
  }
  return v;
}

ChernSeriesEvaluator::ChernSeriesEvaluator(int max_particles)
    : order_(max_particles), td_(td_series(max_particles)), td_over_x_(td_.shifted(-1)) {}

const LaurentSeries& ChernSeriesEvaluator::td_power(int r) {
  auto it = td_powers_.find(r);
  if (it == td_powers_.end()) it = td_powers_.emplace(r, pow_int(td_, r)).first;
  return it->second;
}

const LaurentSeries& ChernSeriesEvaluator::a_series(long p, int r) {
  const auto key = std::make_pair(p, r);
  auto it = a_series_.find(key);
  if (it == a_series_.end()) {
    const LaurentSeries e_px = exp_series(LaurentSeries::monomial(1, Rational(p), order_));
    it = a_series_.emplace(key, mul(e_px, td_power(r))).first;
  }
  return it->second;
}

const LaurentSeries& ChernSeriesEvaluator::q_power(int b, int j) {
  const auto key = std::make_pair(b, j);
  auto it = q_powers_.find(key);
  if (it != q_powers_.end()) return it->second;
  const LaurentSeries q = td_over_x_ + LaurentSeries::constant(b - 1, order_ - 1);
  LaurentSeries value = j == 0 ? LaurentSeries::constant(1, order_) : (j == 1 ? q : mul(q_power(b, j - 1), q));
  return q_powers_.emplace(key, std::move(value)).first->second;
}

ChernVector ChernSeriesEvaluator::evaluate(const LaughlinParams& params) {
  params.validate();
  if (params.N > order_) {
    throw Error(Errc::BeyondTruncation, "evaluator built for N <= " + std::to_string(order_));
  }
  const int g = params.g;
  const int r = params.r();
  const LaurentSeries& A = a_series(params.p(), r);
  ChernVector v;
  v.c.resize(static_cast<std::size_t>(g + 1));
  for (int m = 0; m <= g; ++m) {
    v.c[static_cast<std::size_t>(m)] = coefficient_of_product(A, q_power(params.b, g - m), r - 1);
  }
  return v;
}

}  // namespace laughlin
