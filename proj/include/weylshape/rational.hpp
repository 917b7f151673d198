#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>

namespace weylshape {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class; the wrapper pins the canonical
/// form after every operation and gives the rest of the library a single
/// scalar vocabulary (integer tests, "p/q" text, hashing).
class Rational {
 public:
  Rational() = default;
  Rational(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : v_(value) {}   // NOLINT(google-explicit-constructor)
  Rational(long long value);           // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);
  explicit Rational(const mpz_class& integer) : v_(integer) {}
  Rational(const mpz_class& numerator, const mpz_class& denominator);
  explicit Rational(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }

  /// Parses "p" or "p/q" (q nonzero). Throws Error(ParseError) otherwise.
  static Rational from_string(const std::string& text);

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  /// Only valid when is_integer() and the value fits; throws otherwise.
  std::int64_t to_int64() const;

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  Rational reciprocal() const;
  /// Largest integer not exceeding the value.
  mpz_class floor() const;

  std::string to_string() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::size_t hash() const;

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// c(c-1)...(c-k+1)/k!
Rational generalized_binomial(const Rational& c, unsigned k);

Rational factorial(unsigned k);

mpz_class lcm(const mpz_class& a, const mpz_class& b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

}  // namespace weylshape

template <>
struct std::hash<weylshape::Rational> {
  std::size_t operator()(const weylshape::Rational& r) const noexcept { return r.hash(); }
};
