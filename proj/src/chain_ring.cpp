#include "tracecode/chain_ring.hpp"

#include <stdexcept>
#include <string>

namespace tracecode {

std::string_view to_string(SetKind kind) { return kind == SetKind::Lprime ? "lprime" : "units"; }

SetKind parse_set_kind(std::string_view name) {
  if (name == "lprime") return SetKind::Lprime;
  if (name == "units") return SetKind::Units;
  throw std::invalid_argument("unknown defining set '" + std::string(name) + "'");
}

RingElement ChainRing::add(const RingElement& x, const RingElement& y) const {
  return {field_.add(x.a, y.a), field_.add(x.b, y.b), field_.add(x.c, y.c)};
}

RingElement ChainRing::sub(const RingElement& x, const RingElement& y) const {
  return {field_.sub(x.a, y.a), field_.sub(x.b, y.b), field_.sub(x.c, y.c)};
}

RingElement ChainRing::neg(const RingElement& x) const {
  return {field_.neg(x.a), field_.neg(x.b), field_.neg(x.c)};
}

RingElement ChainRing::scale(Trit s, const RingElement& x) const {
  return {field_.scale(s, x.a), field_.scale(s, x.b), field_.scale(s, x.c)};
}

RingElement ChainRing::mul(const RingElement& x, const RingElement& y) const {
  const Field& f = field_;
  // u^3 = 1 folds u^3 and u^4 back onto 1 and u.
  const FieldElement a = f.add(f.mul(x.a, y.a), f.add(f.mul(x.b, y.c), f.mul(x.c, y.b)));
  const FieldElement b = f.add(f.mul(x.a, y.b), f.add(f.mul(x.b, y.a), f.mul(x.c, y.c)));
  const FieldElement c = f.add(f.mul(x.a, y.c), f.add(f.mul(x.b, y.b), f.mul(x.c, y.a)));
  return {a, b, c};
}

RingElement ChainRing::frobenius(const RingElement& x) const {
  return {field_.frobenius(x.a), field_.frobenius(x.b), field_.frobenius(x.c)};
}

RingElement ChainRing::trace(const RingElement& x) const {
  return {field_.scalar(field_.tr(x.a)), field_.scalar(field_.tr(x.b)),
          field_.scalar(field_.tr(x.c))};
}

NilpotentCoords ChainRing::to_nilpotent(const RingElement& x) const {
  const Field& f = field_;
  return {f.add(x.a, f.add(x.b, x.c)), f.sub(x.b, x.c), x.c};
}

RingElement ChainRing::from_nilpotent(const NilpotentCoords& n) const {
  const Field& f = field_;
  // (u-1)^2 = 1 + u + u^2 in characteristic 3.
  return {f.add(f.sub(n.x1, n.x2), n.x3), f.add(n.x2, n.x3), n.x3};
}

bool ChainRing::is_unit(const RingElement& x) const { return !to_nilpotent(x).x1.is_zero(); }

std::uint64_t ChainRing::index(const RingElement& x) const {
  const std::uint64_t q = field_.size();
  return x.a.value + q * (x.b.value + q * x.c.value);
}

RingElement ChainRing::element_at(std::uint64_t index) const {
  const std::uint64_t q = field_.size();
  if (index >= q * q * q) throw std::out_of_range("ChainRing::element_at: index out of range");
  return {{static_cast<std::uint16_t>(index % q)},
          {static_cast<std::uint16_t>((index / q) % q)},
          {static_cast<std::uint16_t>(index / (q * q))}};
}

void ChainRing::require_base(const char* what) const {
  if (degree() != 1)
    throw std::domain_error(std::string(what) + ": defined on the base ring only (m = 1)");
}

std::array<Trit, 3> ChainRing::gray(const RingElement& x) const {
  require_base("gray");
  return {static_cast<Trit>(x.a.value), static_cast<Trit>(x.b.value),
          static_cast<Trit>(x.c.value)};
}

int ChainRing::lee_weight(const RingElement& x) const {
  require_base("lee_weight");
  return (x.a.value != 0) + (x.b.value != 0) + (x.c.value != 0);
}

std::uint64_t defining_set_size(int m, SetKind kind) {
  const std::uint64_t units = pow3(3 * m) - pow3(2 * m);
  return kind == SetKind::Lprime ? units / 2 : units;
}

DefiningSet defining_set(const ChainRing& ring, SetKind kind) {
  const int m = ring.degree();
  if (m > kMaxMaterializedDegree)
    throw std::length_error("defining_set: m = " + std::to_string(m) +
                            " too large to materialize (max 3)");
  const Field& f = ring.field();
  DefiningSet out{kind, m, {}};
  out.elements.reserve(defining_set_size(m, kind));
  const auto all = f.elements();
  for (FieldElement x1 : all) {
    if (x1.is_zero()) continue;
    if (kind == SetKind::Lprime && f.eta(x1) != 1) continue;
    for (FieldElement x2 : all)
      for (FieldElement x3 : all) out.elements.push_back(ring.from_nilpotent({x1, x2, x3}));
  }
  return out;
}

}  // namespace tracecode
