// Reference implementations used only by the tests. They are written from
// the definitions, deliberately slow, and share nothing with the library
// beyond the packed element encoding.

#ifndef TRACECODE_TESTS_ORACLES_HPP
#define TRACECODE_TESTS_ORACLES_HPP

#include <array>
#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

using Poly = std::vector<int>;  // coefficient of x^i at index i, values in {0,1,2}

inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

inline Poly unpack(std::uint32_t v, int m) {
  Poly p(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i, v /= 3) p[static_cast<std::size_t>(i)] = static_cast<int>(v % 3);
  return p;
}

inline std::uint32_t pack(const Poly& p) {
  std::uint32_t v = 0;
  for (std::size_t i = p.size(); i-- > 0;) v = v * 3 + static_cast<std::uint32_t>(((p[i] % 3) + 3) % 3);
  return v;
}

// Schoolbook product followed by long division by a monic modulus of degree m.
inline std::uint32_t field_mul(std::uint32_t x, std::uint32_t y, const std::vector<int>& modulus) {
  const int m = static_cast<int>(modulus.size()) - 1;
  Poly a = unpack(x, m), b = unpack(y, m);
  Poly prod(static_cast<std::size_t>(2 * m), 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) prod[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
  for (int d = 2 * m - 1; d >= m; --d) {
    const int lead = prod[static_cast<std::size_t>(d)] % 3;
    if (lead == 0) continue;
    for (int i = 0; i <= m; ++i) prod[static_cast<std::size_t>(d - m + i)] -= lead * modulus[static_cast<std::size_t>(i)];
  }
  prod.resize(static_cast<std::size_t>(m));
  return pack(prod);
}

inline std::uint32_t field_add(std::uint32_t x, std::uint32_t y, int m) {
  Poly a = unpack(x, m), b = unpack(y, m);
  for (int i = 0; i < m; ++i) a[static_cast<std::size_t>(i)] += b[static_cast<std::size_t>(i)];
  return pack(a);
}

inline std::uint32_t field_pow(std::uint32_t x, std::uint64_t e, const std::vector<int>& modulus) {
  std::uint32_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r = field_mul(r, x, modulus);
  return r;
}

// tr(x) = x + x^3 + ... + x^{3^{m-1}}, which lands in the prime field.
inline int field_trace(std::uint32_t x, const std::vector<int>& modulus) {
  const int m = static_cast<int>(modulus.size()) - 1;
  std::uint32_t acc = 0, f = x;
  for (int i = 0; i < m; ++i) {
    acc = field_add(acc, f, m);
    f = field_mul(field_mul(f, f, modulus), f, modulus);
  }
  return static_cast<int>(acc);
}

// Ring elements as three field coordinates; product is the cyclic convolution
// of the coefficient sequences (u^3 = 1).
using RingTriple = std::array<std::uint32_t, 3>;

inline RingTriple ring_mul(const RingTriple& x, const RingTriple& y, const std::vector<int>& modulus) {
  const int m = static_cast<int>(modulus.size()) - 1;
  RingTriple r{0, 0, 0};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r[static_cast<std::size_t>((i + j) % 3)] =
          field_add(r[static_cast<std::size_t>((i + j) % 3)], field_mul(x[static_cast<std::size_t>(i)], y[static_cast<std::size_t>(j)], modulus), m);
  return r;
}

// sum_{j<K} ceil(d / 3^j) in plain 64-bit arithmetic.
inline std::uint64_t griesmer_sum(std::uint64_t K, std::uint64_t d) {
  std::uint64_t sum = 0, q = 1;
  for (std::uint64_t j = 0; j < K; ++j, q *= 3) sum += (d + q - 1) / q;
  return sum;
}

inline int hamming(const std::vector<int>& v) {
  int w = 0;
  for (int x : v) w += x != 0;
  return w;
}

}  // namespace oracle

#endif
