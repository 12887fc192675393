#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace bastep {

using BigNat = boost::multiprecision::cpp_int;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A dyadic rational num/2^exp in [0,1], kept in lowest terms
/// (num odd, or num == 0 with exp == 0; the value 1 is stored as 1/1).
class Dyadic {
 public:
  Dyadic() = default;  // zero

  Dyadic(BigNat num, std::uint32_t exp) : num_(std::move(num)), exp_(exp) {
    if (num_ < 0) throw Error("dyadic: negative numerator");
    normalize();
    if (num_ > (BigNat(1) << exp_)) throw Error("dyadic: value above 1");
  }

  static Dyadic zero() { return Dyadic(); }
  static Dyadic one() { return Dyadic(1, 0); }

  /// num/den with den an exact power of two (not necessarily reduced).
  static Dyadic from_fraction(const BigNat& num, const BigNat& den);

  const BigNat& num() const { return num_; }
  std::uint32_t exp() const { return exp_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return exp_ == 0 && num_ == 1; }

  /// Decimal "num/den" form, e.g. "3/8", "0/1", "1/1".
  std::string str() const;

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exp_ == b.exp_ && a.num_ == b.num_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
    int c = cmp(a, b);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  static int cmp(const Dyadic& a, const Dyadic& b);

 private:
  void normalize();

  BigNat num_ = 0;
  std::uint32_t exp_ = 0;
};

/// An exact rational in lowest terms, nonnegative. Only the little that the
/// ultrafilter point and the test oracles need.
class Rational {
 public:
  Rational() = default;
  Rational(BigNat num, BigNat den);

  static Rational parse(const std::string& text);  // "a/b" or "a"

  const BigNat& num() const { return num_; }
  const BigNat& den() const { return den_; }
  bool is_dyadic() const;  // den a power of two
  std::string str() const;

  /// floor(value * 2^k)
  BigNat floor_scaled(std::uint32_t k) const { return (num_ << k) / den_; }

  friend bool operator==(const Rational&, const Rational&) = default;

  /// <0, 0, >0 as the rational compares to the dyadic.
  int cmp(const Dyadic& d) const;
  bool operator<(const Dyadic& d) const { return cmp(d) < 0; }

 private:
  BigNat num_ = 0;
  BigNat den_ = 1;
};

}  // namespace bastep
