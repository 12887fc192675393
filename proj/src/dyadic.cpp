#include "bastep/dyadic.hpp"

#include <boost/integer/common_factor_rt.hpp>

namespace bastep {

namespace mp = boost::multiprecision;

void Dyadic::normalize() {
  if (num_.is_zero()) {
    exp_ = 0;
    return;
  }
  unsigned tz = mp::lsb(num_);
  if (tz > exp_) tz = exp_;
  num_ >>= tz;
  exp_ -= tz;
}

int Dyadic::cmp(const Dyadic& a, const Dyadic& b) {
  // Fast path: both values fit a machine word once brought to a common
  // denominator (num <= 2^exp <= 2^62).
  if (a.exp_ <= 62 && b.exp_ <= 62) {
    std::uint32_t e = std::max(a.exp_, b.exp_);
    std::uint64_t av = static_cast<std::uint64_t>(a.num_) << (e - a.exp_);
    std::uint64_t bv = static_cast<std::uint64_t>(b.num_) << (e - b.exp_);
    return av < bv ? -1 : av > bv ? 1 : 0;
  }
  if (a.exp_ == b.exp_) return a.num_.compare(b.num_);
  if (a.exp_ < b.exp_) {
    BigNat av = a.num_ << (b.exp_ - a.exp_);
    return av.compare(b.num_);
  }
  BigNat bv = b.num_ << (a.exp_ - b.exp_);
  return a.num_.compare(bv);
}

Dyadic Dyadic::from_fraction(const BigNat& num, const BigNat& den) {
  if (den <= 0) throw Error("dyadic: nonpositive denominator");
  if ((den & (den - 1)) != 0) throw Error("dyadic: denominator not a power of two");
  unsigned k = mp::msb(den);
  return Dyadic(num, k);
}

std::string Dyadic::str() const {
  return num_.str() + "/" + (BigNat(1) << exp_).str();
}

Rational::Rational(BigNat num, BigNat den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ <= 0 || num_ < 0) throw Error("rational: expected a nonnegative fraction");
  BigNat g = boost::integer::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigNat(text), 1);
    return Rational(BigNat(text.substr(0, slash)), BigNat(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw Error("rational: cannot parse '" + text + "'");
  }
}

bool Rational::is_dyadic() const { return (den_ & (den_ - 1)) == 0; }

std::string Rational::str() const { return num_.str() + "/" + den_.str(); }

int Rational::cmp(const Dyadic& d) const {
  // num/den vs dnum/2^k  <=>  num*2^k vs dnum*den
  BigNat lhs = num_ << d.exp();
  BigNat rhs = d.num() * den_;
  return lhs.compare(rhs);
}

}  // namespace bastep
