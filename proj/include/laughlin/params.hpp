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

#ifndef LAUGHLIN_PARAMS_HPP
#define LAUGHLIN_PARAMS_HPP

#include <iosfwd>
#include <vector>

#include "laughlin/rational.hpp"

namespace laughlin {

/// Parameters of the Laughlin bundle V_{N,d,b,g} over Pic^d(C).
///
/// The quasi-hole count p = d - b(N + g - 1) and the fiber rank r = N - g + 1
/// are derived. validate() enforces N > 2g - 1 and p > -r.
struct LaughlinParams {
  int g = 0;  // genus
  int N = 0;  // particles
  long d = 0; // degree of the magnetic line bundle
  int b = 1;  // vanishing order

  static LaughlinParams from_quasiholes(int g, int N, int b, long p);
  static LaughlinParams from_degree(int g, int N, int b, long d);

  long p() const { return d - static_cast<long>(b) * (N + g - 1); }
  int r() const { return N - g + 1; }

  /// Throws Error(InvalidRegime) outside the validity regime.
  void validate() const;
  bool valid() const noexcept;

  friend bool operator==(const LaughlinParams&, const LaughlinParams&) = default;
};

std::ostream& operator<<(std::ostream& os, const LaughlinParams& params);

/// ch_m(V) = c[m] (-theta_d)^m / m! for m = 0..g.
struct ChernVector {
  std::vector<Rational> c;

  int genus() const { return static_cast<int>(c.size()) - 1; }
  const Rational& rank() const { return c.front(); }

  friend bool operator==(const ChernVector&, const ChernVector&) = default;
};

std::ostream& operator<<(std::ostream& os, const ChernVector& v);

}  // namespace laughlin

#endif  // LAUGHLIN_PARAMS_HPP
