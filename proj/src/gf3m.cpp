#include "tracecode/gf3m.hpp"

#include <stdexcept>
#include <string>

namespace tracecode {

namespace {

using Poly = std::vector<Trit>;

int degree_of(const Poly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

// Remainder of a modulo the monic polynomial b.
Poly poly_mod(Poly a, const Poly& b) {
  const int db = degree_of(b);
  for (int i = degree_of(a); i >= db; --i) {
    const Trit lead = a[i];
    if (lead == 0) continue;
    for (int j = 0; j <= db; ++j)
      a[i - db + j] = sub3(a[i - db + j], mul3(lead, b[j]));
  }
  a.resize(db > 0 ? db : 1);
  return a;
}

Poly digits(std::uint64_t v, int n) {
  Poly d(n);
  for (int i = 0; i < n; ++i, v /= 3) d[i] = static_cast<Trit>(v % 3);
  return d;
}

std::uint16_t pack(const Poly& d, int n) {
  std::uint32_t v = 0;
  for (int i = n - 1; i >= 0; --i) v = v * 3 + (i < static_cast<int>(d.size()) ? d[i] : 0);
  return static_cast<std::uint16_t>(v);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_irreducible(std::span<const Trit> poly) {
  Poly f(poly.begin(), poly.end());
  const int deg = degree_of(f);
  if (deg < 1) return false;
  if (deg == 1) return true;
  for (int d = 1; d <= deg / 2; ++d) {
    for (std::uint64_t v = 0; v < pow3(d); ++v) {
      Poly g = digits(v, d);
      g.push_back(1);
      const Poly r = poly_mod(f, g);
      if (degree_of(r) < 0) return false;
    }
  }
  return true;
}

FieldParams field_new(int m) {
  if (m < 1 || m > kMaxFieldDegree)
    throw std::out_of_range("field_new: extension degree " + std::to_string(m) +
                            " outside supported range [1, 8]");
  for (std::uint64_t v = 0; v < pow3(m); ++v) {
    Poly f = digits(v, m);
    f.push_back(1);
    if (is_irreducible(f)) return FieldParams{m, f};
  }
  throw std::logic_error("field_new: no irreducible polynomial found");
}

Field::Field(int m) : Field(field_new(m)) {}

Field::Field(FieldParams params) : params_(std::move(params)) {
  const int m = params_.m;
  if (m < 1 || m > kMaxFieldDegree)
    throw std::out_of_range("Field: extension degree outside supported range [1, 8]");
  if (static_cast<int>(params_.modulus.size()) != m + 1 || params_.modulus[m] != 1)
    throw std::invalid_argument("Field: modulus must be monic of degree m");
  for (Trit c : params_.modulus)
    if (c > 2) throw std::invalid_argument("Field: modulus coefficient outside F_3");
  if (!is_irreducible(params_.modulus))
    throw std::invalid_argument("Field: modulus is reducible");

  size_ = static_cast<std::uint32_t>(pow3(m));

  neg_.resize(size_);
  for (std::uint32_t x = 0; x < size_; ++x) {
    Poly d = digits(x, m);
    for (auto& c : d) c = neg3(c);
    neg_[x] = pack(d, m);
  }
  if (m <= 5) {
    add_.resize(static_cast<std::size_t>(size_) * size_);
    for (std::uint32_t x = 0; x < size_; ++x)
      for (std::uint32_t y = 0; y < size_; ++y)
        add_[x * size_ + y] = add_digits({static_cast<std::uint16_t>(x)},
                                         {static_cast<std::uint16_t>(y)}).value;
  }

  // Multiplicative generator by order test, using polynomial multiplication.
  const std::uint64_t order = size_ - 1;
  const auto factors = prime_factors(order);
  auto pow_poly = [&](FieldElement x, std::uint64_t e) {
    FieldElement r = one();
    while (e) {
      if (e & 1) r = mul_poly(r, x);
      x = mul_poly(x, x);
      e >>= 1;
    }
    return r;
  };
  FieldElement gen{};
  for (std::uint32_t g = 1; g < size_; ++g) {
    bool ok = true;
    for (auto p : factors)
      if (pow_poly({static_cast<std::uint16_t>(g)}, order / p) == one()) {
        ok = false;
        break;
      }
    if (ok) {
      gen = {static_cast<std::uint16_t>(g)};
      break;
    }
  }
  if (gen.is_zero()) throw std::logic_error("Field: no primitive element");

  exp_.resize(order);
  log_.assign(size_, 0);
  FieldElement cur = one();
  for (std::uint64_t i = 0; i < order; ++i) {
    exp_[i] = cur.value;
    log_[cur.value] = static_cast<std::uint16_t>(i);
    cur = mul_poly(cur, gen);
  }
  if (cur != one()) throw std::logic_error("Field: generator order mismatch");

  trace_.resize(size_);
  for (std::uint32_t x = 0; x < size_; ++x) {
    FieldElement y{static_cast<std::uint16_t>(x)};
    FieldElement t = y;
    for (int j = 1; j < m; ++j) {
      y = frobenius(y);
      t = add(t, y);
    }
    if (t.value >= 3) throw std::logic_error("Field: trace left the prime field");
    trace_[x] = static_cast<Trit>(t.value);
  }

  eta_.assign(size_, 0);
  const FieldElement minus_one = scalar(2);
  for (std::uint32_t x = 1; x < size_; ++x) {
    const FieldElement r = pow({static_cast<std::uint16_t>(x)}, order / 2);
    if (r == one())
      eta_[x] = 1;
    else if (r == minus_one)
      eta_[x] = -1;
    else
      throw std::logic_error("Field: Euler criterion failed");
  }
}

FieldElement Field::alpha() const {
  if (degree() == 1) return zero();
  return {3};
}

FieldElement Field::from_coeffs(std::span<const Trit> coeffs) const {
  if (static_cast<int>(coeffs.size()) != degree())
    throw std::invalid_argument("Field::from_coeffs: expected m coefficients");
  Poly d(coeffs.begin(), coeffs.end());
  for (auto c : d)
    if (c > 2) throw std::invalid_argument("Field::from_coeffs: coefficient outside F_3");
  return {pack(d, degree())};
}

std::vector<Trit> Field::coeffs(FieldElement x) const { return digits(x.value, degree()); }

FieldElement Field::add_digits(FieldElement x, FieldElement y) const {
  std::uint32_t a = x.value, b = y.value, r = 0, place = 1;
  for (int i = 0; i < degree(); ++i, a /= 3, b /= 3, place *= 3) r += place * ((a % 3 + b % 3) % 3);
  return {static_cast<std::uint16_t>(r)};
}

FieldElement Field::add(FieldElement x, FieldElement y) const {
  if (!add_.empty()) return {add_[x.value * size_ + y.value]};
  return add_digits(x, y);
}

FieldElement Field::neg(FieldElement x) const { return {neg_[x.value]}; }

FieldElement Field::sub(FieldElement x, FieldElement y) const { return add(x, neg(y)); }

FieldElement Field::scale(Trit s, FieldElement x) const {
  switch (s % 3) {
    case 0: return zero();
    case 1: return x;
    default: return neg(x);
  }
}

FieldElement Field::mul_poly(FieldElement x, FieldElement y) const {
  const int m = degree();
  const Poly a = digits(x.value, m), b = digits(y.value, m);
  Poly prod(2 * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) prod[i + j] = add3(prod[i + j], mul3(a[i], b[j]));
  return {pack(poly_mod(prod, params_.modulus), m)};
}

FieldElement Field::mul(FieldElement x, FieldElement y) const {
  if (x.is_zero() || y.is_zero()) return zero();
  const std::uint32_t order = size_ - 1;
  return {exp_[(static_cast<std::uint32_t>(log_[x.value]) + log_[y.value]) % order]};
}

FieldElement Field::inv(FieldElement x) const {
  if (x.is_zero()) throw std::domain_error("Field::inv: zero has no inverse");
  const std::uint32_t order = size_ - 1;
  return {exp_[(order - log_[x.value]) % order]};
}

FieldElement Field::pow(FieldElement x, std::uint64_t e) const {
  if (e == 0) return one();
  if (x.is_zero()) return zero();
  const std::uint64_t order = size_ - 1;
  return {exp_[(static_cast<std::uint64_t>(log_[x.value]) * (e % order)) % order]};
}

int Field::eta(FieldElement x) const {
  if (x.is_zero()) throw std::domain_error("Field::eta: quadratic character undefined at zero");
  return eta_[x.value];
}

std::vector<FieldElement> Field::elements() const {
  std::vector<FieldElement> out(size_);
  for (std::uint32_t x = 0; x < size_; ++x) out[x] = {static_cast<std::uint16_t>(x)};
  return out;
}

}  // namespace tracecode
