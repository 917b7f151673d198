#include "weylshape/rational.hpp"

#include <limits>
#include <ostream>

#include "weylshape/error.hpp"

namespace weylshape {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonDivisible: return "NonDivisible";
    case ErrorCode::UndefinedGcd: return "UndefinedGcd";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::InvalidElement: return "InvalidElement";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::InvalidDirection: return "InvalidDirection";
    case ErrorCode::ForbiddenDirection: return "ForbiddenDirection";
    case ErrorCode::DiagonalPoint: return "DiagonalPoint";
    case ErrorCode::NonPositiveRho: return "NonPositiveRho";
    case ErrorCode::IdentityViolation: return "IdentityViolation";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::ZeroAtOrigin: return "ZeroAtOrigin";
    case ErrorCode::DirectionMismatch: return "DirectionMismatch";
    case ErrorCode::UnknownFormat: return "UnknownFormat";
  }
  return "Unknown";
}

Rational::Rational(long long value) : v_(static_cast<long>(value)) {
  static_assert(sizeof(long) == sizeof(long long), "LP64 platform expected");
}

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  v_ = mpq_class(numerator, denominator);
  v_.canonicalize();
}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  v_ = mpq_class(numerator, denominator);
  v_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(mpz_class(text));
    mpz_class num(text.substr(0, slash));
    mpz_class den(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::ParseError, "not a rational: '" + text + "'");
  }
}

std::int64_t Rational::to_int64() const {
  if (!is_integer() || !v_.get_num().fits_slong_p())
    throw Error(ErrorCode::PreconditionViolated, "not a 64-bit integer: " + to_string());
  return v_.get_num().get_si();
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "reciprocal of zero");
  return Rational(mpq_class(1 / v_));
}

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

std::string Rational::to_string() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  v_ /= o.v_;
  return *this;
}

std::size_t Rational::hash() const {
  const std::size_t a = mpz_get_ui(v_.get_num_mpz_t()) ^ (sign() < 0 ? 0x9e3779b97f4a7c15ULL : 0);
  const std::size_t b = mpz_get_ui(v_.get_den_mpz_t());
  return a * 1000003u ^ b;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational factorial(unsigned k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return Rational(f);
}

Rational generalized_binomial(const Rational& c, unsigned k) {
  Rational acc(1);
  for (unsigned i = 0; i < k; ++i) {
    acc *= c - Rational(static_cast<long>(i));
    acc /= Rational(static_cast<long>(i + 1));
  }
  return acc;
}

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  const mpz_class r = lcm(mpz_class(static_cast<long>(a)), mpz_class(static_cast<long>(b)));
  if (!r.fits_slong_p()) throw Error(ErrorCode::PreconditionViolated, "level overflow");
  return r.get_si();
}

}  // namespace weylshape
