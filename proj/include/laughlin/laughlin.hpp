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

#ifndef LAUGHLIN_LAUGHLIN_HPP
#define LAUGHLIN_LAUGHLIN_HPP

#include <optional>
#include <vector>

#include "laughlin/params.hpp"
#include "laughlin/rational.hpp"

namespace laughlin {

/// Closed-form Chern characters of the Laughlin bundle:
///   c_m = sum_{k=m}^{g} binom(g-m, k-m) binom(N-g+p, k-g+p) b^{k-m},
/// where a binomial with negative lower index vanishes.
ChernVector closed_form_ch(const LaughlinParams& params);

/// Rank of V (c_0). Throws NonIntegerRank if it is not an integer.
Rational rank(const LaughlinParams& params);

/// s = c_1 / c_0; the Hall conductance class is -s * theta_d.
/// Empty at genus 0 (no c_1). ZeroRank when the bundle has rank 0.
std::optional<Rational> slope(const LaughlinParams& params);
std::optional<Rational> slope(const ChernVector& v);

struct WenZeeReport {
  Rational rank;
  bool vanishing_matches = false;  // rank == 0  <=>  p < 0
  bool shift_matches = false;      // p == 0  <=>  bN == d + b(1 - g)

  bool passed() const { return vanishing_matches && shift_matches; }
};

WenZeeReport wen_zee_check(const LaughlinParams& params);

/// d_m = c[m] - c[1]^m / c[0]^(m-1) for m = 2..g; all zero iff ch(V) has the
/// form rk * exp(c_1 / rk). Empty for g <= 1. ZeroRank when c[0] == 0.
std::vector<Rational> projective_flatness_defect(const ChernVector& v);

}  // namespace laughlin

#endif  // LAUGHLIN_LAUGHLIN_HPP
