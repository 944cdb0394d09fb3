#include "cycloknot/integer.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace cycloknot {

namespace {

mpz_class mpz_from_int64(std::int64_t v) {
  mpz_class r;
  // mpz_set_si takes a long, which is 64-bit on every platform we build for.
  static_assert(sizeof(long) == sizeof(std::int64_t));
  mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
  return r;
}

}  // namespace

Integer::Integer(const mpz_class& v) { *this = normalize(v); }

Integer Integer::normalize(mpz_class v) {
  Integer r;
  if (mpz_fits_slong_p(v.get_mpz_t())) {
    r.small_ = mpz_get_si(v.get_mpz_t());
  } else {
    r.big_ = std::make_shared<const mpz_class>(std::move(v));
  }
  return r;
}

Integer Integer::from_string(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("Integer::from_string: empty input");
  mpz_class v;
  if (v.set_str(s, 10) != 0) {
    throw std::invalid_argument("Integer::from_string: not a decimal integer: " + s);
  }
  return normalize(std::move(v));
}

int Integer::sign() const {
  if (big_) return mpz_sgn(big_->get_mpz_t());
  return (small_ > 0) - (small_ < 0);
}

std::int64_t Integer::to_int64() const {
  if (big_) throw std::overflow_error("Integer::to_int64: value exceeds 64 bits");
  return small_;
}

mpz_class Integer::to_mpz() const { return big_ ? *big_ : mpz_from_int64(small_); }

std::string Integer::to_string() const {
  return big_ ? big_->get_str() : std::to_string(small_);
}

bool Integer::is_even() const {
  return big_ ? mpz_even_p(big_->get_mpz_t()) != 0 : (small_ % 2 == 0);
}

bool Integer::divisible_by(const Integer& d) const {
  if (d.is_zero()) return is_zero();
  if (!big_ && !d.big_) {
    if (d.small_ == -1) return true;
    return small_ % d.small_ == 0;
  }
  return mpz_divisible_p(to_mpz().get_mpz_t(), d.to_mpz().get_mpz_t()) != 0;
}

Integer Integer::operator-() const {
  if (!big_ && small_ != std::numeric_limits<std::int64_t>::min()) return Integer(-small_);
  return normalize(-to_mpz());
}

Integer operator+(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) {
    std::int64_t r;
    if (!__builtin_add_overflow(a.small_, b.small_, &r)) return Integer(r);
  }
  return Integer::normalize(a.to_mpz() + b.to_mpz());
}

Integer operator-(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) {
    std::int64_t r;
    if (!__builtin_sub_overflow(a.small_, b.small_, &r)) return Integer(r);
  }
  return Integer::normalize(a.to_mpz() - b.to_mpz());
}

Integer operator*(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) {
    std::int64_t r;
    if (!__builtin_mul_overflow(a.small_, b.small_, &r)) return Integer(r);
  }
  return Integer::normalize(a.to_mpz() * b.to_mpz());
}

void Integer::add_product(const Integer& a, const Integer& b) {
  if (!big_ && !a.big_ && !b.big_) {
    std::int64_t p, r;
    if (!__builtin_mul_overflow(a.small_, b.small_, &p) &&
        !__builtin_add_overflow(small_, p, &r)) {
      small_ = r;
      return;
    }
  }
  *this = normalize(to_mpz() + a.to_mpz() * b.to_mpz());
}

Integer Integer::divexact(const Integer& d) const {
  if (d.is_zero()) throw std::domain_error("Integer::divexact: division by zero");
  if (!divisible_by(d)) {
    throw std::domain_error("Integer::divexact: " + to_string() + " is not divisible by " +
                            d.to_string());
  }
  if (!big_ && !d.big_ && !(small_ == std::numeric_limits<std::int64_t>::min() && d.small_ == -1)) {
    return Integer(small_ / d.small_);
  }
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), to_mpz().get_mpz_t(), d.to_mpz().get_mpz_t());
  return normalize(std::move(q));
}

Integer Integer::pow(unsigned e) const {
  Integer result(1), base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

bool operator==(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) return a.small_ == b.small_;
  // Normalized form: a big value never fits in int64, so mixed cases differ.
  if (!a.big_ || !b.big_) return false;
  return *a.big_ == *b.big_;
}

std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
  const int c = cmp(a.to_mpz(), b.to_mpz());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_string(); }

Integer binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return Integer(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Integer(r);
}

}  // namespace cycloknot
