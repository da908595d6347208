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

#ifndef LAUGHLIN_FIBERED_CLASS_HPP
#define LAUGHLIN_FIBERED_CLASS_HPP

#include <vector>

#include "laughlin/grassmann.hpp"
#include "laughlin/laurent_series.hpp"

namespace laughlin {

/// Cohomology class on S^N C x Pic^d(C): a polynomial in xi, truncated at
/// xi^cap, with exterior-algebra coefficients.
///
/// Cohomological (complex) degree of xi^j * monomial is j + |monomial| / 2.
class FiberedClass {
 public:
  FiberedClass(int genus, int cap);

  /// A scalar series in xi; needs no negative exponents and trunc >= cap.
  static FiberedClass from_series(const LaurentSeries& s, int genus, int cap);
  /// A class constant in xi.
  static FiberedClass from_ext(const ExtElement& e, int cap);
  static FiberedClass xi_power(int genus, int k, int cap);

  int genus() const { return genus_; }
  int cap() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// Coefficient of xi^j (zero above the cap).
  const ExtElement& operator[](int j) const { return coeffs_.at(static_cast<std::size_t>(j)); }
  ExtElement& at(int j) { return coeffs_.at(static_cast<std::size_t>(j)); }

  bool is_zero() const;
  bool is_even() const;

  /// Homogeneous component of complex degree i.
  FiberedClass degree_component(int i) const;
  /// Highest complex degree that can occur below the cap.
  int max_degree() const { return cap() + 2 * genus_; }

  FiberedClass& operator+=(const FiberedClass& o);
  FiberedClass& operator-=(const FiberedClass& o);
  FiberedClass& operator*=(const Rational& c);

  friend FiberedClass operator+(FiberedClass a, const FiberedClass& b) { return a += b; }
  friend FiberedClass operator-(FiberedClass a, const FiberedClass& b) { return a -= b; }
  friend FiberedClass operator*(FiberedClass a, const Rational& c) { return a *= c; }
  /// Product truncated at the smaller of the two caps.
  friend FiberedClass operator*(const FiberedClass& a, const FiberedClass& b);
  friend FiberedClass operator*(const ExtElement& e, const FiberedClass& a);

  friend bool operator==(const FiberedClass&, const FiberedClass&) = default;

 private:
  int genus_;
  std::vector<ExtElement> coeffs_;
};

/// exp(a) for a class with vanishing degree-0 part.
FiberedClass exp_class(const FiberedClass& a);

/// sum_k theta^k / k! * s(xi)^k: the exponential of theta_N times a scalar
/// series in xi, expanded with the nilpotent theta^k (k <= g).
FiberedClass exp_theta_times_series(const ExtElement& theta, const LaurentSeries& s, int cap);

}  // namespace laughlin

#endif  // LAUGHLIN_FIBERED_CLASS_HPP
