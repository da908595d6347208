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

#ifndef LAUGHLIN_LAURENT_SERIES_HPP
#define LAUGHLIN_LAURENT_SERIES_HPP

#include <optional>
#include <span>
#include <vector>

#include "laughlin/rational.hpp"

namespace laughlin {

/// Truncated Laurent series in one indeterminate x over the rationals.
///
/// Holds the exact coefficients of x^valuation .. x^trunc (inclusive). The
/// truncation order is the highest exponent that is known to be correct;
/// every operation propagates it and coefficient() refuses to answer beyond
/// it. trunc == valuation - 1 is an exactly-zero series that knows nothing
/// above trunc. The declared valuation may carry a zero coefficient.
class LaurentSeries {
 public:
  /// The zero series known to no order (valuation 0, trunc -1).
  LaurentSeries() = default;

  /// Coefficients for x^valuation, x^(valuation+1), ...; missing entries up
  /// to trunc are zero, extra entries beyond trunc are dropped.
  LaurentSeries(int valuation, std::vector<Rational> coeffs, int trunc);

  static LaurentSeries zero(int trunc);
  static LaurentSeries constant(const Rational& c, int trunc);
  static LaurentSeries monomial(int exponent, const Rational& c, int trunc);
  /// The indeterminate x itself.
  static LaurentSeries variable(int trunc) { return monomial(1, 1, trunc); }

  int valuation() const { return valuation_; }
  int trunc() const { return trunc_; }
  std::span<const Rational> coeffs() const { return coeffs_; }

  /// Exact coefficient of x^k: zero below the valuation, BeyondTruncation
  /// above trunc.
  Rational coefficient(int k) const;

  /// Lowest exponent carrying a nonzero coefficient, if any.
  std::optional<int> leading_exponent() const;
  bool is_zero() const { return !leading_exponent().has_value(); }

  /// Same series with leading zero coefficients dropped from the valuation.
  LaurentSeries normalized() const;
  LaurentSeries truncated(int trunc) const;
  /// Multiplication by x^k.
  LaurentSeries shifted(int k) const;
  LaurentSeries scaled(const Rational& c) const;

  LaurentSeries& operator+=(const LaurentSeries& o);
  LaurentSeries& operator-=(const LaurentSeries& o);

  friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
  friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
  friend LaurentSeries operator-(const LaurentSeries& a) { return a.scaled(-1); }
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);

  /// Equal truncation orders and equal coefficients at every exponent up to it.
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);

 private:
  int valuation_ = 0;
  int trunc_ = -1;
  std::vector<Rational> coeffs_;
};

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b);

/// Cauchy product. valuation = a.val + b.val,
/// trunc = min(a.trunc + b.val, b.trunc + a.val).
LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b);

/// Coefficient of x^k in a*b without forming the whole product.
Rational coefficient_of_product(const LaurentSeries& a, const LaurentSeries& b, int k);

/// Multiplicative inverse; the coefficient at a.valuation() must be nonzero.
LaurentSeries invert(const LaurentSeries& a);

/// exp(a) for a without terms of exponent <= 0.
LaurentSeries exp_series(const LaurentSeries& a);

/// log(a) for a = 1 + (terms of positive exponent).
LaurentSeries log_series(const LaurentSeries& a);

/// a^n; negative n goes through invert().
LaurentSeries pow_int(const LaurentSeries& a, long n);

/// x / (1 - e^{-x}) through x^order, by inverting (1 - e^{-x}) / x.
LaurentSeries td_series(int order);

inline Rational coefficient(const LaurentSeries& a, int k) { return a.coefficient(k); }
inline Rational residue(const LaurentSeries& a) { return a.coefficient(-1); }

/// Term-by-term derivative d/dx.
LaurentSeries derivative(const LaurentSeries& a);

/// outer(inner(x)). inner must have no terms of exponent <= 0; when outer has
/// negative-exponent terms inner must have a nonzero x^1 coefficient.
LaurentSeries compose(const LaurentSeries& outer, const LaurentSeries& inner);

}  // namespace laughlin

#endif  // LAUGHLIN_LAURENT_SERIES_HPP
