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

#include "laughlin/laurent_series.hpp"

#include <algorithm>
#include <string>

#include "laughlin/error.hpp"

namespace laughlin {

LaurentSeries::LaurentSeries(int valuation, std::vector<Rational> coeffs, int trunc)
    : valuation_(valuation), trunc_(trunc), coeffs_(std::move(coeffs)) {
  if (trunc < valuation - 1) {
    throw Error(Errc::InvalidArgument, "truncation order below valuation - 1");
  }
  coeffs_.resize(static_cast<std::size_t>(trunc - valuation + 1));
}

LaurentSeries LaurentSeries::zero(int trunc) { return LaurentSeries(trunc + 1, {}, trunc); }

LaurentSeries LaurentSeries::constant(const Rational& c, int trunc) {
  return monomial(0, c, trunc);
}

LaurentSeries LaurentSeries::monomial(int exponent, const Rational& c, int trunc) {
  if (exponent > trunc) return zero(trunc);
  return LaurentSeries(exponent, {c}, trunc);
}

Rational LaurentSeries::coefficient(int k) const {
  if (k > trunc_) {
    throw Error(Errc::BeyondTruncation, "coefficient of x^" + std::to_string(k) +
                                            " requested from a series truncated at x^" +
                                            std::to_string(trunc_));
  }
  if (k < valuation_) return 0;
  return coeffs_[static_cast<std::size_t>(k - valuation_)];
}

std::optional<int> LaurentSeries::leading_exponent() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return valuation_ + static_cast<int>(i);
  }
  return std::nullopt;
}

LaurentSeries LaurentSeries::normalized() const {
  const auto lead = leading_exponent();
  if (!lead) return zero(trunc_);
  const auto skip = static_cast<std::ptrdiff_t>(*lead - valuation_);
  return LaurentSeries(*lead, std::vector<Rational>(coeffs_.begin() + skip, coeffs_.end()), trunc_);
}

LaurentSeries LaurentSeries::truncated(int trunc) const {
  if (trunc > trunc_) {
    throw Error(Errc::BeyondTruncation, "cannot raise truncation order from " +
                                            std::to_string(trunc_) + " to " + std::to_string(trunc));
  }
  if (trunc < valuation_ - 1) return zero(trunc);
  return LaurentSeries(valuation_, coeffs_, trunc);
}

LaurentSeries LaurentSeries::shifted(int k) const {
  return LaurentSeries(valuation_ + k, coeffs_, trunc_ + k);
}

LaurentSeries LaurentSeries::scaled(const Rational& c) const {
  LaurentSeries r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o) { return *this = add(*this, o); }

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& o) { return *this = add(*this, -o); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) { return mul(a, b); }

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.trunc_ != b.trunc_) return false;
  for (int k = std::min(a.valuation_, b.valuation_); k <= a.trunc_; ++k) {
    if (a.coefficient(k) != b.coefficient(k)) return false;
  }
  return true;
}

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b) {
  const int val = std::min(a.valuation(), b.valuation());
  const int trunc = std::min(a.trunc(), b.trunc());
  if (trunc < val) return LaurentSeries::zero(trunc);
  std::vector<Rational> out(static_cast<std::size_t>(trunc - val + 1));
  for (int k = val; k <= trunc; ++k) {
    out[static_cast<std::size_t>(k - val)] = a.coefficient(k) + b.coefficient(k);
  }
  return LaurentSeries(val, std::move(out), trunc);
}

LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b) {
  const int val = a.valuation() + b.valuation();
  const int trunc = std::min(a.trunc() + b.valuation(), b.trunc() + a.valuation());
  if (trunc < val) return LaurentSeries(val, {}, trunc);
  std::vector<Rational> out(static_cast<std::size_t>(trunc - val + 1));
  const auto ac = a.coeffs();
  const auto bc = b.coeffs();
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i].is_zero()) continue;
    for (std::size_t j = 0; j < bc.size() && i + j < out.size(); ++j) {
      if (bc[j].is_zero()) continue;
      out[i + j] += ac[i] * bc[j];
    }
  }
  return LaurentSeries(val, std::move(out), trunc);
}

Rational coefficient_of_product(const LaurentSeries& a, const LaurentSeries& b, int k) {
  const int trunc = std::min(a.trunc() + b.valuation(), b.trunc() + a.valuation());
  if (k > trunc) {
    throw Error(Errc::BeyondTruncation, "product coefficient of x^" + std::to_string(k) +
                                            " beyond truncation x^" + std::to_string(trunc));
  }
  Rational sum;
  const int lo = std::max(a.valuation(), k - b.trunc());
  const int hi = std::min(a.trunc(), k - b.valuation());
  for (int i = lo; i <= hi; ++i) {
    const Rational ai = a.coefficient(i);
    if (ai.is_zero()) continue;
    sum += ai * b.coefficient(k - i);
  }
  return sum;
}

LaurentSeries invert(const LaurentSeries& a) {
  if (a.trunc() < a.valuation() || a.coeffs().front().is_zero()) {
    throw Error(Errc::ZeroLeadingCoefficient,
                "cannot invert: coefficient at the valuation is zero or unknown");
  }
  const auto c = a.coeffs();
  const std::size_t n = c.size();
  const Rational lead_inv = c[0].reciprocal();
  std::vector<Rational> d(n);
  d[0] = lead_inv;
  for (std::size_t k = 1; k < n; ++k) {
    Rational s;
    for (std::size_t i = 1; i <= k; ++i) {
      if (c[i].is_zero()) continue;
      s += c[i] * d[k - i];
    }
    d[k] = -(s * lead_inv);
  }
  return LaurentSeries(-a.valuation(), std::move(d), a.trunc() - 2 * a.valuation());
}

LaurentSeries exp_series(const LaurentSeries& a) {
  if (a.trunc() < 0) {
    throw Error(Errc::NonPositiveValuation, "exp of a series whose constant term is unknown");
  }
  if (const auto lead = a.leading_exponent(); lead && *lead <= 0) {
    throw Error(Errc::NonPositiveValuation, "exp of a series with a term of exponent " +
                                                std::to_string(*lead));
  }
  const int n = a.trunc();
  std::vector<Rational> f(static_cast<std::size_t>(n + 1));
  f[0] = 1;
  // n f_n = sum_{k=1}^{n} k a_k f_{n-k}, from f' = a' f.
  std::vector<Rational> ka(static_cast<std::size_t>(n + 1));
  for (int k = 1; k <= n; ++k) ka[static_cast<std::size_t>(k)] = a.coefficient(k) * Rational(k);
  for (int m = 1; m <= n; ++m) {
    Rational s;
    for (int k = 1; k <= m; ++k) {
      const auto& w = ka[static_cast<std::size_t>(k)];
      if (w.is_zero()) continue;
      s += w * f[static_cast<std::size_t>(m - k)];
    }
    f[static_cast<std::size_t>(m)] = s / Rational(m);
  }
  return LaurentSeries(0, std::move(f), n);
}

LaurentSeries log_series(const LaurentSeries& a) {
  if (a.trunc() < 0) throw Error(Errc::BadConstantTerm, "log of a series whose constant term is unknown");
  if (const auto lead = a.leading_exponent(); lead && *lead < 0) {
    throw Error(Errc::BadConstantTerm, "log of a series with negative valuation");
  }
  if (a.coefficient(0) != 1) {
    throw Error(Errc::BadConstantTerm, "log needs constant term 1, got " + a.coefficient(0).to_string());
  }
  const int n = a.trunc();
  std::vector<Rational> ac(static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k) ac[static_cast<std::size_t>(k)] = a.coefficient(k);
  // a l' = a'  =>  m l_m = m a_m - sum_{k=1}^{m-1} k l_k a_{m-k}.
  std::vector<Rational> l(static_cast<std::size_t>(n + 1));
  for (int m = 1; m <= n; ++m) {
    Rational s = ac[static_cast<std::size_t>(m)] * Rational(m);
    for (int k = 1; k < m; ++k) {
      const auto& w = ac[static_cast<std::size_t>(m - k)];
      if (w.is_zero()) continue;
      s -= l[static_cast<std::size_t>(k)] * Rational(k) * w;
    }
    l[static_cast<std::size_t>(m)] = s / Rational(m);
  }
  return LaurentSeries(0, std::move(l), n);
}

LaurentSeries pow_int(const LaurentSeries& a, long n) {
  if (n == 0) return LaurentSeries::constant(1, a.trunc() - a.valuation());
  if (n < 0) return pow_int(invert(a), -n);
  LaurentSeries base = a;
  std::optional<LaurentSeries> acc;
  for (long e = n;;) {
    if (e & 1) acc = acc ? mul(*acc, base) : base;
    e >>= 1;
    if (e == 0) break;
    base = mul(base, base);
  }
  return *acc;
}

LaurentSeries td_series(int order) {
  if (order < 0) throw Error(Errc::InvalidArgument, "td_series order must be nonnegative");
  // (1 - e^{-x}) / x = sum_k (-1)^k x^k / (k+1)!
  std::vector<Rational> d(static_cast<std::size_t>(order + 1));
  for (int k = 0; k <= order; ++k) {
    d[static_cast<std::size_t>(k)] = Rational(k % 2 == 0 ? 1 : -1) / Rational(factorial(k + 1));
  }
  return invert(LaurentSeries(0, std::move(d), order));
}

LaurentSeries derivative(const LaurentSeries& a) {
  std::vector<Rational> out(a.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = a.coeffs()[i] * Rational(a.valuation() + static_cast<int>(i));
  }
  return LaurentSeries(a.valuation() - 1, std::move(out), a.trunc() - 1);
}

LaurentSeries compose(const LaurentSeries& outer, const LaurentSeries& inner) {
  if (inner.trunc() < 0) {
    throw Error(Errc::CompositionInvalid, "inner series has unknown constant term");
  }
  const auto inner_lead = inner.leading_exponent();
  if (inner_lead && *inner_lead <= 0) {
    throw Error(Errc::CompositionInvalid, "inner series must vanish at 0");
  }
  const LaurentSeries in = inner.normalized();
  const int inner_val = in.valuation();  // trunc + 1 when inner is zero to its order

  // Outer terms above outer.trunc() are unknown; the lowest of them lands at
  // (outer.trunc() + 1) * inner_val.
  LaurentSeries acc = LaurentSeries::zero((outer.trunc() + 1) * inner_val - 1);

  std::optional<LaurentSeries> inverse;
  std::optional<LaurentSeries> power;  // in^k for the current positive k
  int power_k = 0;
  for (int k = outer.valuation(); k <= outer.trunc(); ++k) {
    const Rational c = outer.coefficient(k);
    if (c.is_zero()) continue;
    if (k == 0) {
      acc += LaurentSeries::constant(c, acc.trunc());
      continue;
    }
    if (k < 0) {
      if (!inner_lead || inner_val != 1) {
        throw Error(Errc::CompositionInvalid,
                    "negative powers need an inner series with nonzero x^1 coefficient");
      }
      if (!inverse) inverse = invert(in);
      acc += pow_int(*inverse, -k).scaled(c);
      continue;
    }
    if (static_cast<long>(k) * inner_val > acc.trunc()) break;
    if (!power) {
      power = in;
      power_k = 1;
    }
    while (power_k < k) {
      power = mul(*power, in);
      ++power_k;
    }
    acc += power->scaled(c);
  }
  return acc;
}

}  // namespace laughlin
