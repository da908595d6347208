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

#include "laughlin/fibered_class.hpp"

#include <algorithm>
#include <string>

#include "laughlin/error.hpp"

namespace laughlin {

FiberedClass::FiberedClass(int genus, int cap)
    : genus_(genus), coeffs_(static_cast<std::size_t>(cap + 1), ExtElement(genus)) {
  if (cap < 0) throw Error(Errc::InvalidArgument, "xi cap must be nonnegative");
}

FiberedClass FiberedClass::from_series(const LaurentSeries& s, int genus, int cap) {
  if (s.trunc() < cap) {
    throw Error(Errc::BeyondTruncation, "series known to xi^" + std::to_string(s.trunc()) +
                                            ", class needs xi^" + std::to_string(cap));
  }
  if (const auto lead = s.leading_exponent(); lead && *lead < 0) {
    throw Error(Errc::InvalidArgument, "classes carry no negative powers of xi");
  }
  FiberedClass out(genus, cap);
  for (int j = 0; j <= cap; ++j) out.at(j).add_term(0, s.coefficient(j));
  return out;
}

FiberedClass FiberedClass::from_ext(const ExtElement& e, int cap) {
  FiberedClass out(e.genus(), cap);
  out.at(0) = e;
  return out;
}

FiberedClass FiberedClass::xi_power(int genus, int k, int cap) {
  FiberedClass out(genus, cap);
  if (k >= 0 && k <= cap) out.at(k).add_term(0, 1);
  return out;
}

bool FiberedClass::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const ExtElement& e) { return e.is_zero(); });
}

bool FiberedClass::is_even() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const ExtElement& e) { return e.is_even(); });
}

FiberedClass FiberedClass::degree_component(int i) const {
  FiberedClass out(genus_, cap());
  for (int j = 0; j <= std::min(i, cap()); ++j) {
    const int ext_degree = 2 * (i - j);
    for (const auto& [mask, c] : (*this)[j].terms()) {
      if (degree(mask) == ext_degree) out.at(j).add_term(mask, c);
    }
  }
  return out;
}

FiberedClass& FiberedClass::operator+=(const FiberedClass& o) {
  if (o.genus_ != genus_) throw Error(Errc::GenusMismatch, "adding classes of different genus");
  coeffs_.resize(static_cast<std::size_t>(std::min(cap(), o.cap()) + 1), ExtElement(genus_));
  for (int j = 0; j <= cap(); ++j) at(j) += o[j];
  return *this;
}

FiberedClass& FiberedClass::operator-=(const FiberedClass& o) {
  FiberedClass neg = o;
  neg *= Rational(-1);
  return *this += neg;
}

FiberedClass& FiberedClass::operator*=(const Rational& c) {
  for (auto& e : coeffs_) e *= c;
  return *this;
}

FiberedClass operator*(const FiberedClass& a, const FiberedClass& b) {
  if (a.genus_ != b.genus_) throw Error(Errc::GenusMismatch, "multiplying classes of different genus");
  const int cap = std::min(a.cap(), b.cap());
  FiberedClass out(a.genus_, cap);
  for (int i = 0; i <= cap; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= cap; ++j) {
      if (b[j].is_zero()) continue;
      out.at(i + j) += wedge(a[i], b[j]);
    }
  }
  return out;
}

FiberedClass operator*(const ExtElement& e, const FiberedClass& a) {
  FiberedClass out(a.genus_, a.cap());
  for (int j = 0; j <= a.cap(); ++j) {
    if (!a[j].is_zero()) out.at(j) = wedge(e, a[j]);
  }
  return out;
}

FiberedClass exp_class(const FiberedClass& a) {
  if (!a[0].scalar_part().is_zero()) {
    throw Error(Errc::InvalidArgument, "exp_class needs a vanishing degree-0 part");
  }
  FiberedClass sum = FiberedClass::xi_power(a.genus(), 0, a.cap());
  FiberedClass term = sum;
  for (int n = 1; n <= a.max_degree(); ++n) {
    term = term * a;
    term *= Rational(1, n);
    if (term.is_zero()) break;
    sum += term;
  }
  return sum;
}

FiberedClass exp_theta_times_series(const ExtElement& theta, const LaurentSeries& s, int cap) {
  const int g = theta.genus();
  FiberedClass out(g, cap);
  ExtElement theta_k = ExtElement::scalar(g, 1);  // theta^k / k!
  const LaurentSeries s_normal = s.normalized();
  LaurentSeries s_k = LaurentSeries::constant(1, cap);
  for (int k = 0; !theta_k.is_zero(); ++k) {
    if (k > 0) {
      theta_k = wedge(theta_k, theta) * Rational(1, k);
      if (theta_k.is_zero()) break;
      s_k = mul(s_k, s_normal).truncated(cap);
    }
    out += theta_k * FiberedClass::from_series(s_k, g, cap);
  }
  return out;
}

}  // namespace laughlin
