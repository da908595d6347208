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

#include "laughlin/rational.hpp"

#include <ostream>

#include "laughlin/error.hpp"

namespace laughlin {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::ZeroLeadingCoefficient: return "ZeroLeadingCoefficient";
    case Errc::NonPositiveValuation: return "NonPositiveValuation";
    case Errc::BadConstantTerm: return "BadConstantTerm";
    case Errc::BeyondTruncation: return "BeyondTruncation";
    case Errc::CompositionInvalid: return "CompositionInvalid";
    case Errc::GenusMismatch: return "GenusMismatch";
    case Errc::NotInThetaSubalgebra: return "NotInThetaSubalgebra";
    case Errc::CapTooSmall: return "CapTooSmall";
    case Errc::OracleScaleExceeded: return "OracleScaleExceeded";
    case Errc::InvalidRegime: return "InvalidRegime";
    case Errc::NonIntegerRank: return "NonIntegerRank";
    case Errc::ZeroRank: return "ZeroRank";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(Errc::InvalidArgument, "zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::string_view digits = s;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos) {
      throw Error(Errc::InvalidArgument, "not a rational: '" + std::string(text) + "'");
    }
    // mpz_class rejects a leading '+'.
    if (s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const mpz_class den = parse_int(text.substr(slash + 1));
  if (den <= 0) throw Error(Errc::InvalidArgument, "denominator must be positive: '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return reciprocal().pow(-exponent);
  Rational r;
  mpz_pow_ui(r.value_.get_num_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(r.value_.get_den_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return r;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw Error(Errc::InvalidArgument, "reciprocal of zero");
  Rational r;
  r.value_ = 1 / value_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(Errc::InvalidArgument, "division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

mpz_class factorial(long n) {
  if (n < 0) throw Error(Errc::InvalidArgument, "factorial of a negative number");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

mpz_class binomial(long n, long k) {
  if (n < 0) throw Error(Errc::InvalidArgument, "binomial with negative upper index");
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace laughlin
