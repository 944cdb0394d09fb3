#pragma once

// Elements of Z[zeta_m], stored as the reduced residue modulo the m-th
// cyclotomic polynomial: the coefficient vector of 1, zeta, ..., zeta^{phi(m)-1}.
// Powers of zeta form a Z-basis of the ring of integers, so coefficient
// equality is ring equality and divisibility by a rational integer can be
// read off the coefficients.

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "cycloknot/integer.hpp"

namespace cycloknot {

namespace detail {
struct CycContext;
std::shared_ptr<const CycContext> cyc_context(std::int64_t order);
}  // namespace detail

/// Euler's totient.
std::int64_t totient(std::int64_t m);

/// Coefficients c_0..c_{phi(m)} of the m-th cyclotomic polynomial (monic).
/// Cached; computed by exact division of t^m - 1 by Phi_d over proper divisors d.
const std::vector<Integer>& cyclotomic_coefficients(std::int64_t m);

class CycNumber {
 public:
  /// Zero of Z[zeta_1] = Z.
  CycNumber();

  static CycNumber zero(std::int64_t order);
  static CycNumber one(std::int64_t order);
  static CycNumber from_integer(std::int64_t order, const Integer& v);
  /// zeta_order^k for any integer k.
  static CycNumber zeta(std::int64_t order, std::int64_t k = 1);
  /// Reduces an arbitrary-length coefficient vector (coefficient of zeta^i at index i).
  static CycNumber from_coeffs(std::int64_t order, std::vector<Integer> coeffs);

  std::int64_t order() const;
  std::int64_t degree() const;  // phi(order)
  std::span<const Integer> coeffs() const { return coeffs_; }

  bool is_zero() const;
  /// The value as a rational integer, when it lies in Z.
  std::optional<Integer> as_integer() const;

  CycNumber operator-() const;
  friend CycNumber operator+(const CycNumber& a, const CycNumber& b);
  friend CycNumber operator-(const CycNumber& a, const CycNumber& b);
  friend CycNumber operator*(const CycNumber& a, const CycNumber& b);
  friend CycNumber operator*(const CycNumber& a, const Integer& s);
  friend CycNumber operator*(const Integer& s, const CycNumber& a) { return a * s; }

  CycNumber& operator+=(const CycNumber& b);
  CycNumber& operator-=(const CycNumber& b);
  CycNumber& operator*=(const CycNumber& b) { return *this = *this * b; }

  CycNumber pow(std::uint64_t e) const;

  /// Image under zeta_d -> zeta_m^{m/d}; requires order() | m.
  CycNumber embed(std::int64_t m) const;
  /// Galois automorphism zeta -> zeta^j, gcd(j, order) = 1.
  CycNumber galois(std::int64_t j) const;
  CycNumber conj() const { return galois(-1); }

  /// Field norm down to Q (an integer).
  Integer norm() const;
  /// Exact quotient by a rational integer; throws std::domain_error if inexact.
  CycNumber divexact(const Integer& d) const;
  /// Exact quotient in Z[zeta_m], or nullopt when b does not divide *this.
  std::optional<CycNumber> divide(const CycNumber& b) const;

  friend bool operator==(const CycNumber& a, const CycNumber& b);

 private:
  CycNumber(std::shared_ptr<const detail::CycContext> ctx, std::vector<Integer> coeffs)
      : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {}

  void require_same_order(const CycNumber& b, const char* op) const;

  std::shared_ptr<const detail::CycContext> ctx_;
  std::vector<Integer> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CycNumber& v);

}  // namespace cycloknot
