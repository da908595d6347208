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

#include "laughlin/laughlin.hpp"

#include <sstream>

#include "laughlin/error.hpp"

namespace laughlin {

ChernVector closed_form_ch(const LaughlinParams& params) {
  params.validate();
  const int g = params.g;
  const long p = params.p();
  const long top = params.N - g + p;  // >= 0 because p > -r
  ChernVector v;
  v.c.resize(static_cast<std::size_t>(g + 1));
  for (int m = 0; m <= g; ++m) {
    mpz_class sum = 0;
    mpz_class b_power = 1;  // b^{k-m}
    for (int k = m; k <= g; ++k) {
      sum += binomial(g - m, k - m) * binomial(top, k - g + p) * b_power;
      b_power *= params.b;
    }
    v.c[static_cast<std::size_t>(m)] = Rational(sum);
  }
  return v;
}

Rational rank(const LaughlinParams& params) {
  Rational r = closed_form_ch(params).rank();
  if (!r.is_integer() || r.sign() < 0) {
    std::ostringstream os;
    os << params << " gave rank " << r;
    throw Error(Errc::NonIntegerRank, os.str());
  }
  return r;
}

std::optional<Rational> slope(const ChernVector& v) {
  if (v.rank().is_zero()) throw Error(Errc::ZeroRank, "slope of a rank-0 bundle");
  if (v.genus() < 1) return std::nullopt;
  return v.c[1] / v.rank();
}

std::optional<Rational> slope(const LaughlinParams& params) { return slope(closed_form_ch(params)); }

WenZeeReport wen_zee_check(const LaughlinParams& params) {
  WenZeeReport report;
  report.rank = rank(params);
  const long p = params.p();
  report.vanishing_matches = report.rank.is_zero() == (p < 0);
  const long shift = static_cast<long>(params.b) * (1 - params.g);
  report.shift_matches = (p == 0) == (static_cast<long>(params.b) * params.N == params.d + shift);
  return report;
}

std::vector<Rational> projective_flatness_defect(const ChernVector& v) {
  if (v.rank().is_zero()) throw Error(Errc::ZeroRank, "flatness defect of a rank-0 bundle");
  std::vector<Rational> defects;
  for (int m = 2; m <= v.genus(); ++m) {
    defects.push_back(v.c[static_cast<std::size_t>(m)] -
                      v.c[1].pow(m) / v.rank().pow(m - 1));
  }
  return defects;
}

}  // namespace laughlin
