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

#ifndef LAUGHLIN_GRASSMANN_HPP
#define LAUGHLIN_GRASSMANN_HPP

#include <bit>
#include <cstdint>
#include <map>
#include <vector>

#include "laughlin/rational.hpp"

namespace laughlin {

// Exterior algebra on the odd generators of H^1(Pic^N x Pic^d). A monomial
// is a bit mask over the 4g generators in canonical order
//   alpha_1, beta_1, ..., alpha_g, beta_g, alpha'_1, beta'_1, ..., alpha'_g, beta'_g
// with bit 0 = alpha_1. Monomials are always read in increasing bit order.

using GeneratorSet = std::uint16_t;

inline constexpr int kMaxGenus = 4;

enum class Generator { Alpha, Beta, AlphaPrime, BetaPrime };

/// Bit position of a generator; index is 1-based as in alpha_1..alpha_g.
int generator_bit(int genus, Generator kind, int index);

/// All unprimed generators alpha_1 .. beta_g.
inline GeneratorSet unprimed_block(int genus) {
  return static_cast<GeneratorSet>((1u << (2 * genus)) - 1u);
}

inline int degree(GeneratorSet s) { return std::popcount(static_cast<unsigned>(s)); }

/// Sign picked up by reordering (monomial a) ^ (monomial b) into canonical
/// order; 0 when the two share a generator.
int wedge_sign(GeneratorSet a, GeneratorSet b);

/// Element of the exterior algebra: sparse map monomial -> nonzero coefficient.
class ExtElement {
 public:
  explicit ExtElement(int genus);

  static ExtElement scalar(int genus, const Rational& c);
  static ExtElement monomial(int genus, GeneratorSet mask, const Rational& c = 1);
  static ExtElement generator(int genus, Generator kind, int index);

  int genus() const { return genus_; }
  const std::map<GeneratorSet, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(GeneratorSet mask) const;
  /// Coefficient of the empty monomial.
  Rational scalar_part() const { return coefficient(0); }
  bool is_even() const;

  /// Adds c * monomial, dropping the entry if it cancels.
  void add_term(GeneratorSet mask, const Rational& c);

  ExtElement& operator+=(const ExtElement& o);
  ExtElement& operator-=(const ExtElement& o);
  ExtElement& operator*=(const Rational& c);

  friend ExtElement operator+(ExtElement a, const ExtElement& b) { return a += b; }
  friend ExtElement operator-(ExtElement a, const ExtElement& b) { return a -= b; }
  friend ExtElement operator-(ExtElement a) { return a *= Rational(-1); }
  friend ExtElement operator*(ExtElement a, const Rational& c) { return a *= c; }
  friend ExtElement operator*(const Rational& c, ExtElement a) { return a *= c; }
  friend bool operator==(const ExtElement& a, const ExtElement& b) = default;

 private:
  int genus_;
  std::map<GeneratorSet, Rational> terms_;
};

/// Bilinear wedge product; GenusMismatch when the genera differ.
ExtElement wedge(const ExtElement& a, const ExtElement& b);
inline ExtElement operator*(const ExtElement& a, const ExtElement& b) { return wedge(a, b); }

/// a^k under the wedge product (a^0 = 1).
ExtElement wedge_power(const ExtElement& a, int k);

/// sum_n a^n / n! for a with zero scalar part (a is nilpotent).
ExtElement exp_nilpotent(const ExtElement& a);

/// theta_N = sum_i alpha_i ^ beta_i on the unprimed block.
ExtElement theta_N(int genus);
/// theta_d = sum_i alpha'_i ^ beta'_i on the primed block.
ExtElement theta_d(int genus);
/// eta = sum_i (alpha_i ^ beta'_i + alpha'_i ^ beta_i).
ExtElement eta(int genus);

/// Fiber integral over the Pic^N block: keeps the terms containing
/// alpha_1 ^ beta_1 ^ ... ^ alpha_g ^ beta_g, strips that factor (which
/// integrates to +1) and returns the primed remainder.
ExtElement integrate_picN(const ExtElement& a);

/// Coefficients c_0..c_g with a = sum_m c_m (-theta_d)^m / m!.
/// NotInThetaSubalgebra when a is not of that shape.
std::vector<Rational> as_theta_d_vector(const ExtElement& a);

}  // namespace laughlin

#endif  // LAUGHLIN_GRASSMANN_HPP
