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

#include "laughlin/params.hpp"

#include <ostream>
#include <sstream>

#include "laughlin/error.hpp"

namespace laughlin {

LaughlinParams LaughlinParams::from_quasiholes(int g, int N, int b, long p) {
  LaughlinParams params{g, N, 0, b};
  params.d = p + static_cast<long>(b) * (N + g - 1);
  return params;
}

LaughlinParams LaughlinParams::from_degree(int g, int N, int b, long d) {
  return LaughlinParams{g, N, d, b};
}

void LaughlinParams::validate() const {
  auto fail = [this](const char* why) {
    std::ostringstream os;
    os << *this << ": " << why;
    throw Error(Errc::InvalidRegime, os.str());
  };
  if (g < 0) fail("genus must be nonnegative");
  if (b < 1) fail("vanishing order must be at least 1");
  if (N <= 2 * g - 1) fail("need N > 2g - 1");
  if (p() <= -r()) fail("need p > -r");
}

bool LaughlinParams::valid() const noexcept {
  return g >= 0 && b >= 1 && N > 2 * g - 1 && p() > -r();
}

std::ostream& operator<<(std::ostream& os, const LaughlinParams& params) {
  return os << "(g=" << params.g << ", N=" << params.N << ", d=" << params.d
            << ", b=" << params.b << ", p=" << params.p() << ", r=" << params.r() << ")";
}

std::ostream& operator<<(std::ostream& os, const ChernVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.c.size(); ++i) os << (i ? ", " : "") << v.c[i];
  return os << ')';
}

}  // namespace laughlin
