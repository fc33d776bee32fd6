// Arithmetic in F_3 and its extensions F_{3^m}, 1 <= m <= 8.
//
// Elements are stored packed in base 3: the coefficient of x^i contributes
// c_i * 3^i, so the packed value doubles as the canonical element order and as
// an index into the lookup tables held by Field.

#ifndef TRACECODE_GF3M_HPP
#define TRACECODE_GF3M_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace tracecode {

using Trit = std::uint8_t;

inline constexpr int kMaxFieldDegree = 8;

constexpr Trit add3(Trit x, Trit y) { return static_cast<Trit>((x + y) % 3); }
constexpr Trit sub3(Trit x, Trit y) { return static_cast<Trit>((x + 3 - y) % 3); }
constexpr Trit mul3(Trit x, Trit y) { return static_cast<Trit>((x * y) % 3); }
constexpr Trit neg3(Trit x) { return static_cast<Trit>((3 - x) % 3); }

constexpr std::uint64_t pow3(int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= 3;
  return r;
}

struct FieldElement {
  std::uint16_t value = 0;

  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
  constexpr bool is_zero() const { return value == 0; }
};

/// Extension degree and defining modulus of F_{3^m}. The modulus is monic of
/// degree m, stored constant term first (m + 1 coefficients).
struct FieldParams {
  int m = 1;
  std::vector<Trit> modulus;
};

/// True iff the monic polynomial (constant term first) is irreducible over F_3.
/// Trial division by every monic polynomial of degree <= deg/2.
bool is_irreducible(std::span<const Trit> poly);

/// The monic irreducible polynomial of degree m with the smallest packed value
/// sum c_i 3^i. Throws std::out_of_range for m outside [1, 8].
FieldParams field_new(int m);

class Field {
 public:
  explicit Field(int m);
  explicit Field(FieldParams params);

  int degree() const { return params_.m; }
  std::uint32_t size() const { return size_; }
  const FieldParams& params() const { return params_; }

  FieldElement zero() const { return {}; }
  FieldElement one() const { return {1}; }
  /// Embedding of the prime field.
  FieldElement scalar(Trit s) const { return {static_cast<std::uint16_t>(s % 3)}; }
  /// The class of x modulo the modulus (zero when m = 1).
  FieldElement alpha() const;
  /// A fixed generator of the multiplicative group.
  FieldElement primitive() const { return {exp_[1]}; }

  FieldElement from_coeffs(std::span<const Trit> coeffs) const;
  std::vector<Trit> coeffs(FieldElement x) const;
  bool contains(FieldElement x) const { return x.value < size_; }

  FieldElement add(FieldElement x, FieldElement y) const;
  FieldElement sub(FieldElement x, FieldElement y) const;
  FieldElement neg(FieldElement x) const;
  FieldElement scale(Trit s, FieldElement x) const;
  FieldElement mul(FieldElement x, FieldElement y) const;
  /// Throws std::domain_error on zero.
  FieldElement inv(FieldElement x) const;
  FieldElement pow(FieldElement x, std::uint64_t e) const;
  FieldElement frobenius(FieldElement x) const { return pow(x, 3); }

  /// Absolute trace to F_3.
  Trit tr(FieldElement x) const { return trace_[x.value]; }
  /// Quadratic character; throws std::domain_error on zero.
  int eta(FieldElement x) const;
  bool is_square(FieldElement x) const { return !x.is_zero() && eta(x) == 1; }

  /// All elements in canonical (packed-value) order.
  std::vector<FieldElement> elements() const;

 private:
  FieldElement mul_poly(FieldElement x, FieldElement y) const;
  FieldElement add_digits(FieldElement x, FieldElement y) const;

  FieldParams params_;
  std::uint32_t size_ = 3;
  std::vector<std::uint16_t> exp_;  // exp_[i] = g^i, length size_ - 1
  std::vector<std::uint16_t> log_;  // log_[x] for x != 0
  std::vector<std::uint16_t> add_;  // full addition table for small fields
  std::vector<std::uint16_t> neg_;
  std::vector<Trit> trace_;
  std::vector<std::int8_t> eta_;
};

}  // namespace tracecode

#endif  // TRACECODE_GF3M_HPP
