#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace winfour {

__extension__ using uint128 = unsigned __int128;

/// Non-negative 128-bit integer with overflow-checked arithmetic. All
/// operations are exact; anything that would wrap throws std::overflow_error
/// instead.
class ExactUint {
 public:
  ExactUint() : v_(0) {}
  ExactUint(std::uint64_t v) : v_(v) {}

  static ExactUint from_raw(uint128 v) {
    ExactUint r;
    r.v_ = v;
    return r;
  }

  ExactUint operator+(const ExactUint& o) const {
    uint128 r;
    if (__builtin_add_overflow(v_, o.v_, &r)) {
      throw std::overflow_error("ExactUint: addition overflow");
    }
    return from_raw(r);
  }

  ExactUint operator-(const ExactUint& o) const {
    if (o.v_ > v_) {
      throw std::overflow_error("ExactUint: negative result");
    }
    return from_raw(v_ - o.v_);
  }

  ExactUint operator*(const ExactUint& o) const {
    uint128 r;
    if (__builtin_mul_overflow(v_, o.v_, &r)) {
      throw std::overflow_error("ExactUint: multiplication overflow");
    }
    return from_raw(r);
  }

  /// Exact division; throws if the divisor does not divide evenly.
  ExactUint divide_exact(const ExactUint& o) const {
    if (o.v_ == 0) {
      throw std::invalid_argument("ExactUint: division by zero");
    }
    if (v_ % o.v_ != 0) {
      throw std::logic_error("ExactUint: inexact division");
    }
    return from_raw(v_ / o.v_);
  }

  bool operator==(const ExactUint& o) const { return v_ == o.v_; }
  bool operator!=(const ExactUint& o) const { return v_ != o.v_; }
  bool operator<(const ExactUint& o) const { return v_ < o.v_; }

  double to_double() const { return static_cast<double>(v_); }

  std::string to_string() const {
    if (v_ == 0) return "0";
    std::string s;
    uint128 x = v_;
    while (x > 0) {
      s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(x % 10)));
      x /= 10;
    }
    return s;
  }

  uint128 raw() const { return v_; }

 private:
  uint128 v_;
};

/// Exact non-negative rational with a reduced representation.
struct ExactRatio {
  ExactUint num;
  ExactUint den;

  ExactRatio(ExactUint n, ExactUint d) : num(n), den(d) {
    if (d.raw() == 0) {
      throw std::invalid_argument("ExactRatio: zero denominator");
    }
    uint128 a = n.raw(), b = d.raw();
    while (b != 0) {
      const uint128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      num = ExactUint::from_raw(n.raw() / a);
      den = ExactUint::from_raw(d.raw() / a);
    }
  }

  bool operator==(const ExactRatio& o) const {
    return num == o.num && den == o.den;
  }

  bool is_integral() const { return den.raw() == 1; }

  double to_double() const { return num.to_double() / den.to_double(); }

  std::string to_string() const {
    if (is_integral()) return num.to_string();
    return num.to_string() + "/" + den.to_string();
  }
};

/// Factorial and binomial coefficient in exact arithmetic.
ExactUint exact_factorial(int n);
ExactUint exact_binomial(int n, int k);

}  // namespace winfour
