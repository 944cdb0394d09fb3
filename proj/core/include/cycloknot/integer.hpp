#pragma once

// Arbitrary-precision signed integer with an inline 64-bit fast path.
//
// Values that fit in int64_t never touch GMP; anything larger is promoted to
// an immutable, shared mpz_class.  Results are demoted back whenever they fit,
// so equality can compare representations directly.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cycloknot {

class Integer {
 public:
  Integer() = default;
  Integer(std::int64_t v) : small_(v) {}  // NOLINT(google-explicit-constructor)
  Integer(int v) : small_(v) {}           // NOLINT(google-explicit-constructor)
  explicit Integer(const mpz_class& v);

  static Integer from_string(std::string_view text);

  bool is_zero() const { return !big_ && small_ == 0; }
  bool is_one() const { return !big_ && small_ == 1; }
  int sign() const;
  bool fits_int64() const { return !big_; }
  std::int64_t to_int64() const;
  mpz_class to_mpz() const;
  std::string to_string() const;

  bool is_even() const;
  bool divisible_by(const Integer& d) const;

  Integer operator-() const;
  friend Integer operator+(const Integer& a, const Integer& b);
  friend Integer operator-(const Integer& a, const Integer& b);
  friend Integer operator*(const Integer& a, const Integer& b);

  Integer& operator+=(const Integer& b) { return *this = *this + b; }
  Integer& operator-=(const Integer& b) { return *this = *this - b; }
  Integer& operator*=(const Integer& b) { return *this = *this * b; }

  /// this += a * b, with no temporaries on the int64 path.
  void add_product(const Integer& a, const Integer& b);

  /// Exact quotient; throws std::domain_error when d does not divide *this.
  Integer divexact(const Integer& d) const;

  Integer pow(unsigned e) const;

  friend bool operator==(const Integer& a, const Integer& b);
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b);

 private:
  static Integer normalize(mpz_class v);

  std::int64_t small_ = 0;
  std::shared_ptr<const mpz_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Integer& v);

/// Ordinary binomial coefficient C(n, k); zero outside 0 <= k <= n.
Integer binomial(std::int64_t n, std::int64_t k);

}  // namespace cycloknot
