#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace thuemorse {

using BigInt = mpz_class;

/// Exact rational in lowest terms with positive denominator.
class ExactQ {
 public:
  ExactQ() = default;
  ExactQ(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  ExactQ(const BigInt& num, const BigInt& den);
  explicit ExactQ(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

  /// Accepts "n", "n/d", or "n/q^k".
  static ExactQ parse(std::string_view text);

  const mpq_class& value() const noexcept { return value_; }
  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_nonnegative() const { return sgn(value_) >= 0; }
  /// If the denominator is q^k, returns k.
  std::optional<unsigned> q_power(unsigned q) const;
  /// Least k with the denominator dividing q^k; nullopt outside Z[1/q].
  /// Differs from q_power when q is not prime: 1/2 lies in Z[1/4] with k = 1.
  std::optional<unsigned> q_adic_exponent(unsigned q) const;
  /// An element of Z[1/q] cap R_+.
  bool in_nonneg_q_adic(unsigned q) const { return is_nonnegative() && q_adic_exponent(q).has_value(); }

  /// "num/q^k" when the denominator is a nontrivial power of q, "num" for
  /// integers, "num/den" otherwise.
  std::string render(unsigned q) const;
  std::string to_string() const { return value_.get_str(); }

  friend ExactQ operator+(const ExactQ& a, const ExactQ& b) { return ExactQ(mpq_class(a.value_ + b.value_)); }
  friend ExactQ operator-(const ExactQ& a, const ExactQ& b) { return ExactQ(mpq_class(a.value_ - b.value_)); }
  friend ExactQ operator*(const ExactQ& a, const ExactQ& b) { return ExactQ(mpq_class(a.value_ * b.value_)); }
  friend ExactQ operator/(const ExactQ& a, const ExactQ& b) { return ExactQ(mpq_class(a.value_ / b.value_)); }
  ExactQ& operator+=(const ExactQ& b) { value_ += b.value_; return *this; }
  friend bool operator==(const ExactQ& a, const ExactQ& b) { return a.value_ == b.value_; }
  friend bool operator<(const ExactQ& a, const ExactQ& b) { return a.value_ < b.value_; }
  friend bool operator<=(const ExactQ& a, const ExactQ& b) { return a.value_ <= b.value_; }

 private:
  mpq_class value_{0};
};

/// q^k as a big integer.
BigInt ipow(unsigned q, unsigned k);

}  // namespace thuemorse
