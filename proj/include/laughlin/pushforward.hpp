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

#ifndef LAUGHLIN_PUSHFORWARD_HPP
#define LAUGHLIN_PUSHFORWARD_HPP

#include <map>
#include <utility>
#include <vector>

#include "laughlin/fibered_class.hpp"
#include "laughlin/grassmann.hpp"
#include "laughlin/laurent_series.hpp"
#include "laughlin/params.hpp"

namespace laughlin {

/// Largest genus and particle count accepted by grr_oracle.
inline constexpr int kOracleMaxGenus = 4;
inline constexpr int kOracleMaxParticles = 10;

/// Total Chern character of a bundle on S^N C as a class; ch_0 must equal
/// the (nonnegative integer) rank.
class BundleChData {
 public:
  BundleChData(Rational rank, FiberedClass ch);

  const Rational& rank() const { return rank_; }
  const FiberedClass& ch() const { return ch_; }

 private:
  Rational rank_;
  FiberedClass ch_;
};

/// ch(T_* S^N C) = (g - 1) + (r - theta_N) e^xi, to xi^cap.
BundleChData tangent_ch_SNC(int N, int g, int cap);

/// Segre pushforward S^N C -> Pic^N (fibers of the projective bundle):
/// xi^{N-g+k} -> theta_N^k / k!, lower powers -> 0.
ExtElement segre_pushforward(const FiberedClass& c, int N, int g);

/// td^r(xi) exp(theta_N (td xi - 1 - xi) / xi), r = N - g + 1.
FiberedClass todd_class_SNC(int N, int g, int cap);

/// (1 + xi)^r exp(-theta_N / (1 + xi)).
FiberedClass chern_class_SNC(int N, int g, int cap);

/// Td(V) = exp(sum_i i! a_i ch_i(V)) with ln td x = sum_i a_i x^i.
FiberedClass todd_from_ch(const BundleChData& ch, int cap);

/// c(V) = exp(sum_i i! b_i ch_i(V)) with b_i = (-1)^{i-1} / i.
FiberedClass chern_from_ch(const BundleChData& ch, int cap);

/// A(x) = e^{px} td^r x, through x^order.
LaurentSeries integrand_A(long p, int r, int order);
/// B(x) = (td x - 1 - x) / x + b, through x^order.
LaurentSeries integrand_B(int b, int order);

/// exp(b theta_N - eta + p xi) td^r(xi) exp(theta_N (td xi - xi - 1) / xi),
/// to xi^cap.
FiberedClass grr_integrand(const LaughlinParams& params, int cap);

/// Full pushforward of the GRR integrand through the exterior algebra.
/// OracleScaleExceeded beyond g <= 4, N <= 10.
ChernVector grr_oracle(const LaughlinParams& params);

/// [x^{N-g}] A(x) (B(x) + 1/x)^{g-m}, expanded binomially in 1/x.
Rational lemma_ab_eval(const LaurentSeries& A, const LaurentSeries& B, int g, int m, int N);

/// c_m = [x^{r-1}] e^{px} td^r x (td x / x + b - 1)^{g-m}.
ChernVector chern_via_series(const LaughlinParams& params);

/// chern_via_series with the series pieces cached across calls, for sweeps.
/// Every cached series is held at a single truncation order large enough for
/// all parameters with N - g + g <= max_order; lower-order queries read the
/// same (sound) coefficients. Not thread-safe: use one per worker.
class ChernSeriesEvaluator {
 public:
  explicit ChernSeriesEvaluator(int max_particles);

  ChernVector evaluate(const LaughlinParams& params);

 private:
  const LaurentSeries& td_power(int r);
  const LaurentSeries& a_series(long p, int r);
  const LaurentSeries& q_power(int b, int j);

  int order_;
  LaurentSeries td_;
  LaurentSeries td_over_x_;
  std::map<int, LaurentSeries> td_powers_;
  std::map<std::pair<long, int>, LaurentSeries> a_series_;
  std::map<std::pair<int, int>, LaurentSeries> q_powers_;
};

}  // namespace laughlin

#endif  // LAUGHLIN_PUSHFORWARD_HPP
