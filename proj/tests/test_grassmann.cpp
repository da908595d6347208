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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "laughlin/error.hpp"
#include "laughlin/grassmann.hpp"
#include "oracles.hpp"

using namespace laughlin;

namespace {

using G = Generator;

ExtElement gen(int g, G kind, int i) { return ExtElement::generator(g, kind, i); }

ExtElement random_element(std::mt19937_64& rng, int g, int terms) {
  std::uniform_int_distribution<unsigned> mask(0, (1u << (4 * g)) - 1);
  ExtElement e(g);
  for (int t = 0; t < terms; ++t) e.add_term(static_cast<GeneratorSet>(mask(rng)), oracle::random_rational(rng));
  return e;
}

// Parity-homogeneous part of a random element, and its parity.
ExtElement homogeneous_part(const ExtElement& e, int parity) {
  ExtElement out(e.genus());
  for (const auto& [mask, c] : e.terms()) {
    if (degree(mask) % 2 == parity) out.add_term(mask, c);
  }
  return out;
}

ExtElement theta_d_power_over_fact(int g, int m) {
  return wedge_power(-theta_d(g), m) * Rational(mpz_class(1), factorial(m));
}

}  // namespace

TEST_CASE("wedge of generators") {
  const int g = 1;
  const auto a = gen(g, G::Alpha, 1), b = gen(g, G::Beta, 1);
  CHECK(wedge(a, b) == ExtElement::monomial(g, 0b0011));
  CHECK(wedge(b, a) == ExtElement::monomial(g, 0b0011, -1));
  CHECK(wedge(a, a).is_zero());

  // (alpha_1 ^ beta'_1) ^ (alpha'_1 ^ beta_1) = -(alpha_1 ^ beta_1) ^ (alpha'_1 ^ beta'_1)
  const auto lhs = wedge(wedge(a, gen(g, G::BetaPrime, 1)), wedge(gen(g, G::AlphaPrime, 1), b));
  const auto rhs = -wedge(wedge(a, b), wedge(gen(g, G::AlphaPrime, 1), gen(g, G::BetaPrime, 1)));
  CHECK(lhs == rhs);
  CHECK(lhs == ExtElement::monomial(g, 0b1111, -1));
}

TEST_CASE("wedge_sign") {
  CHECK(wedge_sign(0b01, 0b10) == 1);
  CHECK(wedge_sign(0b10, 0b01) == -1);
  CHECK(wedge_sign(0b11, 0b01) == 0);
  CHECK(wedge_sign(0b1100, 0b0011) == 1);  // moving an even block
  CHECK(wedge_sign(0b0100, 0b1011) == 1);
  CHECK(wedge_sign(0b0100, 0b1001) == -1);
}

TEST_CASE("theta and eta classes") {
  CHECK(theta_N(1) == wedge(gen(1, G::Alpha, 1), gen(1, G::Beta, 1)));
  CHECK(eta(1) == wedge(gen(1, G::Alpha, 1), gen(1, G::BetaPrime, 1)) +
                      wedge(gen(1, G::AlphaPrime, 1), gen(1, G::Beta, 1)));
  CHECK(theta_d(1) == ExtElement::monomial(1, 0b1100));
  CHECK(theta_N(0).is_zero());
  CHECK(eta(0).is_zero());
  CHECK(theta_d(0).is_zero());

  for (int g = 0; g <= kMaxGenus; ++g) {
    CAPTURE(g);
    CHECK(wedge_power(theta_N(g), g + 1).is_zero());
    CHECK(wedge_power(theta_d(g), g + 1).is_zero());
    CHECK(wedge_power(eta(g), 2 * g + 1).is_zero());
    if (g > 0) {
      CHECK_FALSE(wedge_power(theta_N(g), g).is_zero());
      CHECK_FALSE(wedge_power(eta(g), 2 * g).is_zero());
    }
    const std::vector<ExtElement> classes = {theta_N(g), theta_d(g), eta(g)};
    for (const auto& x : classes) {
      for (const auto& y : classes) CHECK(wedge(x, y) == wedge(y, x));
    }
  }
}

TEST_CASE("integrate_picN") {
  for (int g = 0; g <= kMaxGenus; ++g) {
    CAPTURE(g);
    CHECK(integrate_picN(ExtElement::monomial(g, unprimed_block(g))) == ExtElement::scalar(g, 1));
    CHECK(integrate_picN(wedge_power(theta_N(g), g) * Rational(mpz_class(1), factorial(g))) ==
          ExtElement::scalar(g, 1));
  }
  // Terms without the full unprimed top form drop out.
  CHECK(integrate_picN(theta_d(2)).is_zero());
  CHECK(integrate_picN(theta_N(2)).is_zero());
}

TEST_CASE("p2 pushforward of theta_N^l eta^e, exhaustive to genus 4") {
  for (int g = 0; g <= kMaxGenus; ++g) {
    for (int ell = 0; ell <= 2 * g; ++ell) {
      for (int e = 0; ell + e <= 2 * g + 1; ++e) {
        CAPTURE(g);
        CAPTURE(ell);
        CAPTURE(e);
        const auto got = integrate_picN(wedge_power(theta_N(g), ell) * wedge_power(eta(g), e));
        if (e % 2 == 0 && ell + e / 2 == g) {
          const int m = e / 2;
          const Rational c(factorial(ell) * factorial(2 * m));
          CHECK(got == theta_d_power_over_fact(g, m) * c);
        } else {
          CHECK(got.is_zero());
        }
      }
    }
  }
}

TEST_CASE("as_theta_d_vector") {
  CHECK(as_theta_d_vector(ExtElement::scalar(3, 1)) == std::vector<Rational>{1, 0, 0, 0});
  CHECK(as_theta_d_vector(-theta_d(3)) == std::vector<Rational>{0, 1, 0, 0});
  // eta^2 = 2 alpha_1 beta'_1 alpha'_1 beta_1 at genus 1.
  const auto eta2 = wedge_power(eta(1), 2);
  CHECK(eta2 == wedge(wedge(gen(1, G::Alpha, 1), gen(1, G::BetaPrime, 1)),
                      wedge(gen(1, G::AlphaPrime, 1), gen(1, G::Beta, 1))) *
                    Rational(2));
  CHECK(as_theta_d_vector(integrate_picN(eta2)) == std::vector<Rational>{0, 2});

  std::vector<Rational> c = {3, Rational(-1, 2), 7};
  ExtElement built(2);
  for (int m = 0; m <= 2; ++m) built += theta_d_power_over_fact(2, m) * c[static_cast<std::size_t>(m)];
  CHECK(as_theta_d_vector(built) == c);

  auto code_of = [](const ExtElement& e) {
    try {
      as_theta_d_vector(e);
    } catch (const Error& err) {
      return err.code();
    }
    return Errc::InvalidArgument;
  };
  CHECK(code_of(theta_N(2)) == Errc::NotInThetaSubalgebra);
  CHECK(code_of(ExtElement::monomial(2, 0b0100'0000)) == Errc::NotInThetaSubalgebra);  // alpha'_2 ^ ... odd
  CHECK(code_of(ExtElement::monomial(2, 0b0011'0000)) == Errc::NotInThetaSubalgebra);  // one pair only
}

TEST_CASE("exp of theta_N against exp of -theta_N") {
  for (int g = 0; g <= kMaxGenus; ++g) {
    const auto product = wedge(exp_nilpotent(theta_N(g)), exp_nilpotent(-theta_N(g)));
    CHECK(product == ExtElement::scalar(g, 1));
    // exp(theta) = sum W_i with W_i = theta^i / i!.
    ExtElement sum(g);
    for (int i = 0; i <= g; ++i) sum += wedge_power(theta_N(g), i) * Rational(mpz_class(1), factorial(i));
    CHECK(exp_nilpotent(theta_N(g)) == sum);
  }
  CHECK_THROWS_AS(exp_nilpotent(ExtElement::scalar(1, 1)), Error);
}

TEST_CASE("associativity and graded commutativity on random elements") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 300; ++i) {
    const int g = 1 + i % 3;
    const auto a = random_element(rng, g, 6), b = random_element(rng, g, 6), c = random_element(rng, g, 6);
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    for (int pa = 0; pa < 2; ++pa) {
      for (int pb = 0; pb < 2; ++pb) {
        const auto x = homogeneous_part(a, pa), y = homogeneous_part(b, pb);
        const Rational sign = (pa * pb) ? -1 : 1;
        CHECK(wedge(x, y) == wedge(y, x) * sign);
      }
    }
  }
}

TEST_CASE("errors") {
  try {
    wedge(theta_N(1), theta_N(2));
    FAIL("expected GenusMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::GenusMismatch);
  }
  CHECK_THROWS_AS(ExtElement(kMaxGenus + 1), Error);
  CHECK_THROWS_AS(ExtElement::monomial(1, 0b10000), Error);
  CHECK_THROWS_AS(gen(2, G::Alpha, 3), Error);
}
