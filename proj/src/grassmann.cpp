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

#include "laughlin/grassmann.hpp"

#include <optional>
#include <string>

#include "laughlin/error.hpp"

namespace laughlin {
namespace {

void check_genus(int genus) {
  if (genus < 0 || genus > kMaxGenus) {
    throw Error(Errc::InvalidArgument, "exterior algebra supports genus 0.." +
                                           std::to_string(kMaxGenus) + ", got " +
                                           std::to_string(genus));
  }
}

void check_same_genus(const ExtElement& a, const ExtElement& b) {
  if (a.genus() != b.genus()) {
    throw Error(Errc::GenusMismatch, "genus " + std::to_string(a.genus()) + " vs " +
                                         std::to_string(b.genus()));
  }
}

GeneratorSet pair_mask(int genus, int index, bool primed) {
  const int base = primed ? 2 * genus : 0;
  return static_cast<GeneratorSet>(3u << (base + 2 * (index - 1)));
}

}  // namespace

int generator_bit(int genus, Generator kind, int index) {
  check_genus(genus);
  if (index < 1 || index > genus) {
    throw Error(Errc::InvalidArgument, "generator index out of range 1.." + std::to_string(genus));
  }
  const int slot = 2 * (index - 1);
  switch (kind) {
    case Generator::Alpha: return slot;
    case Generator::Beta: return slot + 1;
    case Generator::AlphaPrime: return 2 * genus + slot;
    case Generator::BetaPrime: return 2 * genus + slot + 1;
  }
  return -1;
}

int wedge_sign(GeneratorSet a, GeneratorSet b) {
  if ((a & b) != 0) return 0;
  // Each generator of b moves left past every generator of a with a higher bit.
  int swaps = 0;
  for (unsigned rest = b; rest != 0; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    swaps += std::popcount(static_cast<unsigned>(a) >> (j + 1));
  }
  return (swaps & 1) ? -1 : 1;
}

ExtElement::ExtElement(int genus) : genus_(genus) { check_genus(genus); }

ExtElement ExtElement::scalar(int genus, const Rational& c) { return monomial(genus, 0, c); }

ExtElement ExtElement::monomial(int genus, GeneratorSet mask, const Rational& c) {
  ExtElement e(genus);
  if ((mask >> (4 * genus)) != 0) {
    throw Error(Errc::InvalidArgument, "monomial uses generators beyond genus " + std::to_string(genus));
  }
  e.add_term(mask, c);
  return e;
}

ExtElement ExtElement::generator(int genus, Generator kind, int index) {
  return monomial(genus, static_cast<GeneratorSet>(1u << generator_bit(genus, kind, index)));
}

Rational ExtElement::coefficient(GeneratorSet mask) const {
  const auto it = terms_.find(mask);
  return it == terms_.end() ? Rational() : it->second;
}

bool ExtElement::is_even() const {
  for (const auto& [mask, c] : terms_) {
    if (degree(mask) % 2 != 0) return false;
  }
  return true;
}

void ExtElement::add_term(GeneratorSet mask, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mask, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

ExtElement& ExtElement::operator+=(const ExtElement& o) {
  check_same_genus(*this, o);
  for (const auto& [mask, c] : o.terms_) add_term(mask, c);
  return *this;
}

ExtElement& ExtElement::operator-=(const ExtElement& o) {
  check_same_genus(*this, o);
  for (const auto& [mask, c] : o.terms_) add_term(mask, -c);
  return *this;
}

ExtElement& ExtElement::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [mask, v] : terms_) v *= c;
  return *this;
}

ExtElement wedge(const ExtElement& a, const ExtElement& b) {
  check_same_genus(a, b);
  ExtElement out(a.genus());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      const int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      Rational c = ca * cb;
      if (s < 0) c = -c;
      out.add_term(static_cast<GeneratorSet>(ma | mb), c);
    }
  }
  return out;
}

ExtElement wedge_power(const ExtElement& a, int k) {
  if (k < 0) throw Error(Errc::InvalidArgument, "negative wedge power");
  ExtElement acc = ExtElement::scalar(a.genus(), 1);
  for (int i = 0; i < k && !acc.is_zero(); ++i) acc = wedge(acc, a);
  return acc;
}

ExtElement exp_nilpotent(const ExtElement& a) {
  if (!a.scalar_part().is_zero()) {
    throw Error(Errc::InvalidArgument, "exp_nilpotent needs a zero scalar part");
  }
  ExtElement sum = ExtElement::scalar(a.genus(), 1);
  ExtElement term = sum;
  // Every term raises the degree, so the series stops by degree 4g.
  for (int n = 1; n <= 4 * a.genus(); ++n) {
    term = wedge(term, a) * Rational(1, n);
    if (term.is_zero()) break;
    sum += term;
  }
  return sum;
}

ExtElement theta_N(int genus) {
  ExtElement t(genus);
  for (int i = 1; i <= genus; ++i) t.add_term(pair_mask(genus, i, false), 1);
  return t;
}

ExtElement theta_d(int genus) {
  ExtElement t(genus);
  for (int i = 1; i <= genus; ++i) t.add_term(pair_mask(genus, i, true), 1);
  return t;
}

ExtElement eta(int genus) {
  ExtElement e(genus);
  for (int i = 1; i <= genus; ++i) {
    using G = Generator;
    e += wedge(ExtElement::generator(genus, G::Alpha, i), ExtElement::generator(genus, G::BetaPrime, i));
    e += wedge(ExtElement::generator(genus, G::AlphaPrime, i), ExtElement::generator(genus, G::Beta, i));
  }
  return e;
}

ExtElement integrate_picN(const ExtElement& a) {
  const GeneratorSet top = unprimed_block(a.genus());
  ExtElement out(a.genus());
  for (const auto& [mask, c] : a.terms()) {
    // The unprimed block precedes every primed generator, so peeling the
    // full top form off the front costs no sign.
    if ((mask & top) == top) out.add_term(static_cast<GeneratorSet>(mask & ~top), c);
  }
  return out;
}

std::vector<Rational> as_theta_d_vector(const ExtElement& a) {
  const int g = a.genus();
  std::vector<std::optional<Rational>> level(static_cast<std::size_t>(g + 1));
  std::size_t matched = 0;
  for (unsigned subset = 0; subset < (1u << g); ++subset) {
    GeneratorSet mask = 0;
    for (int i = 1; i <= g; ++i) {
      if (subset & (1u << (i - 1))) mask |= pair_mask(g, i, true);
    }
    const int m = std::popcount(subset);
    const Rational c = a.coefficient(mask);
    if (!c.is_zero()) ++matched;
    auto& slot = level[static_cast<std::size_t>(m)];
    if (!slot) {
      slot = c;
    } else if (*slot != c) {
      throw Error(Errc::NotInThetaSubalgebra,
                  "pair monomials of degree " + std::to_string(2 * m) + " carry unequal coefficients");
    }
  }
  if (matched != a.terms().size()) {
    throw Error(Errc::NotInThetaSubalgebra, "element has monomials outside the theta_d subalgebra");
  }
  // (-theta_d)^m / m! puts (-1)^m on each pair monomial of degree 2m.
  std::vector<Rational> out(static_cast<std::size_t>(g + 1));
  for (int m = 0; m <= g; ++m) {
    const Rational& c = *level[static_cast<std::size_t>(m)];
    out[static_cast<std::size_t>(m)] = (m % 2 == 0) ? c : -c;
  }
  return out;
}

}  // namespace laughlin
