// The chain ring R_m = F_{3^m}[u]/(u^3 - 1), local with maximal ideal <u - 1>.
//
// Storage is the standard basis {1, u, u^2}. The nilpotent basis
// {1, (u-1), (u-1)^2} is a view: unit membership and the index-2 subgroup L'
// are defined through its first coordinate.

#ifndef TRACECODE_CHAIN_RING_HPP
#define TRACECODE_CHAIN_RING_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <string_view>
#include <vector>

#include "tracecode/gf3m.hpp"

namespace tracecode {

/// a + u b + u^2 c.
struct RingElement {
  FieldElement a, b, c;

  friend constexpr auto operator<=>(const RingElement&, const RingElement&) = default;
};

/// x1 + x2 (u-1) + x3 (u-1)^2.
struct NilpotentCoords {
  FieldElement x1, x2, x3;

  friend constexpr auto operator<=>(const NilpotentCoords&, const NilpotentCoords&) = default;
};

enum class SetKind {
  Lprime,  // Q x F x F in nilpotent coordinates, index 2 in the units
  Units,   // all of R_m^*
};

std::string_view to_string(SetKind kind);
SetKind parse_set_kind(std::string_view name);

class ChainRing {
 public:
  explicit ChainRing(int m) : field_(m) {}
  explicit ChainRing(Field field) : field_(std::move(field)) {}

  int degree() const { return field_.degree(); }
  const Field& field() const { return field_; }
  /// 3^{3m}.
  std::uint64_t size() const { return pow3(3 * degree()); }

  RingElement zero() const { return {}; }
  RingElement one() const { return {field_.one(), {}, {}}; }
  RingElement u() const { return {{}, field_.one(), {}}; }
  RingElement u2() const { return {{}, {}, field_.one()}; }
  RingElement embed(FieldElement x) const { return {x, {}, {}}; }

  RingElement add(const RingElement& x, const RingElement& y) const;
  RingElement sub(const RingElement& x, const RingElement& y) const;
  RingElement neg(const RingElement& x) const;
  RingElement scale(Trit s, const RingElement& x) const;
  RingElement mul(const RingElement& x, const RingElement& y) const;

  RingElement frobenius(const RingElement& x) const;
  /// Tr = sum_j F^j, returned in base-ring coordinates (each component in F_3).
  RingElement trace(const RingElement& x) const;

  NilpotentCoords to_nilpotent(const RingElement& x) const;
  RingElement from_nilpotent(const NilpotentCoords& n) const;
  bool is_unit(const RingElement& x) const;

  /// Bijection with [0, 3^{3m}): a + 3^m b + 3^{2m} c on packed components.
  std::uint64_t index(const RingElement& x) const;
  RingElement element_at(std::uint64_t index) const;

  // Base ring only; throw std::domain_error when degree() != 1.
  std::array<Trit, 3> gray(const RingElement& x) const;
  int lee_weight(const RingElement& x) const;

 private:
  void require_base(const char* what) const;

  Field field_;
};

struct DefiningSet {
  SetKind kind = SetKind::Lprime;
  int m = 1;
  std::vector<RingElement> elements;  // sorted by nilpotent coordinates

  std::size_t size() const { return elements.size(); }
};

/// Largest m for which defining sets (and codewords) are materialized.
inline constexpr int kMaxMaterializedDegree = 3;

/// |L'| = (3^{3m} - 3^{2m}) / 2, |R*| = 3^{3m} - 3^{2m}.
std::uint64_t defining_set_size(int m, SetKind kind);

/// Throws std::length_error above kMaxMaterializedDegree.
DefiningSet defining_set(const ChainRing& ring, SetKind kind);

}  // namespace tracecode

#endif  // TRACECODE_CHAIN_RING_HPP
