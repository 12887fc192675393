#include "bastep/encoding.hpp"

namespace bastep {

namespace mp = boost::multiprecision;

Dyadic encode(const BigNat& n) {
  if (n < 0) throw Error("encode: negative index");
  if (n.is_zero()) return Dyadic::zero();
  std::uint32_t k = mp::msb(n) + 1;  // n in [2^(k-1), 2^k)
  BigNat t = n - (BigNat(1) << (k - 1));
  return Dyadic(2 * t + 1, k);
}

BigNat decode(const Dyadic& d) {
  if (d.is_zero()) return 0;
  if (d.is_one()) throw Error("decode: 1 is not an encoded point");
  std::uint32_t k = d.exp();  // numerator odd, so k >= 1 here
  BigNat t = (d.num() - 1) >> 1;
  return (BigNat(1) << (k - 1)) + t;
}

bool contains_point(const IntervalSet& a, const BigNat& n) { return a.contains(encode(n)); }

}  // namespace bastep
