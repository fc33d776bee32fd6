#include <doctest.h>

#include <stdexcept>

#include <random>
#include <set>

#include "oracles.hpp"
#include "tracecode/chain_ring.hpp"

using namespace tracecode;

namespace {

oracle::RingTriple triple(const RingElement& x) { return {x.a.value, x.b.value, x.c.value}; }

std::vector<int> modulus_of(const ChainRing& r) {
  const auto& mod = r.field().params().modulus;
  return {mod.begin(), mod.end()};
}

RingElement random_element(const ChainRing& r, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> pick(0, r.size() - 1);
  return r.element_at(pick(rng));
}

}  // namespace

TEST_CASE("multiplication is the cyclic convolution with u^3 = 1") {
  for (int m = 1; m <= 2; ++m) {
    const ChainRing r(m);
    const auto mod = modulus_of(r);
    for (std::uint64_t i = 0; i < r.size(); i += (m == 1 ? 1 : 7))
      for (std::uint64_t j = 0; j < r.size(); j += (m == 1 ? 1 : 11)) {
        const auto x = r.element_at(i), y = r.element_at(j);
        REQUIRE(triple(r.mul(x, y)) == oracle::ring_mul(triple(x), triple(y), mod));
      }
  }
  const ChainRing r(1);
  CHECK(r.mul(r.u(), r.u2()) == r.one());
  CHECK(r.mul(r.u(), r.u()) == r.u2());
}

TEST_CASE("ring axioms on random inputs") {
  std::mt19937_64 rng(17);
  for (int m = 1; m <= 3; ++m) {
    const ChainRing r(m);
    for (int t = 0; t < 300; ++t) {
      const auto x = random_element(r, rng), y = random_element(r, rng), z = random_element(r, rng);
      CHECK(r.mul(x, r.add(y, z)) == r.add(r.mul(x, y), r.mul(x, z)));
      CHECK(r.mul(r.mul(x, y), z) == r.mul(x, r.mul(y, z)));
      CHECK(r.mul(x, y) == r.mul(y, x));
      CHECK(r.add(x, r.neg(x)) == r.zero());
      CHECK(r.sub(x, y) == r.add(x, r.neg(y)));
    }
  }
}

TEST_CASE("nilpotent coordinates") {
  for (int m = 1; m <= 2; ++m) {
    const ChainRing r(m);
    const Field& f = r.field();
    for (std::uint64_t i = 0; i < r.size(); ++i) {
      const auto x = r.element_at(i);
      const auto n = r.to_nilpotent(x);
      REQUIRE(n.x1 == f.add(f.add(x.a, x.b), x.c));
      REQUIRE(n.x2 == f.sub(x.b, x.c));
      REQUIRE(n.x3 == x.c);
      REQUIRE(r.from_nilpotent(n) == x);
    }
  }
}

TEST_CASE("units are exactly the invertible elements") {
  const ChainRing r(1);
  std::set<std::uint64_t> invertible;
  for (std::uint64_t i = 0; i < r.size(); ++i)
    for (std::uint64_t j = 0; j < r.size(); ++j)
      if (r.mul(r.element_at(i), r.element_at(j)) == r.one()) invertible.insert(i);
  for (std::uint64_t i = 0; i < r.size(); ++i) CHECK(r.is_unit(r.element_at(i)) == (invertible.count(i) == 1));
  CHECK(invertible.size() == 18);
}

TEST_CASE("defining sets: sizes, membership and order") {
  for (int m = 1; m <= 2; ++m) {
    const ChainRing r(m);
    const auto q = pow3(m);
    std::uint64_t units = 0, lprime = 0;
    for (std::uint64_t i = 0; i < r.size(); ++i) {
      const auto x = r.element_at(i);
      const auto n = r.to_nilpotent(x);
      if (!n.x1.is_zero()) {
        ++units;
        lprime += r.field().eta(n.x1) == 1;
      }
    }
    CHECK(units == (q - 1) * q * q);
    CHECK(lprime == units / 2);
    CHECK(defining_set_size(m, SetKind::Units) == units);
    CHECK(defining_set_size(m, SetKind::Lprime) == lprime);

    for (SetKind k : {SetKind::Lprime, SetKind::Units}) {
      const auto set = defining_set(r, k);
      REQUIRE(set.size() == defining_set_size(m, k));
      for (std::size_t i = 0; i + 1 < set.size(); ++i)
        CHECK(r.to_nilpotent(set.elements[i]) < r.to_nilpotent(set.elements[i + 1]));
      for (const auto& x : set.elements) {
        CHECK(r.is_unit(x));
        if (k == SetKind::Lprime) CHECK(r.field().is_square(r.to_nilpotent(x).x1));
      }
    }
  }
  CHECK(defining_set_size(1, SetKind::Lprime) == 9);
  CHECK(defining_set_size(2, SetKind::Lprime) == 324);
  CHECK(defining_set_size(8, SetKind::Units) == (pow3(8) - 1) * pow3(16));
  CHECK_THROWS_AS(defining_set(ChainRing(4), SetKind::Lprime), std::length_error);
}

TEST_CASE("L' is a subgroup of index 2 closed under multiplication by u") {
  const ChainRing r(1);
  const auto set = defining_set(r, SetKind::Lprime);
  std::set<RingElement> members(set.elements.begin(), set.elements.end());
  for (const auto& x : set.elements) {
    CHECK(members.count(r.mul(r.u(), x)) == 1);
    for (const auto& y : set.elements) CHECK(members.count(r.mul(x, y)) == 1);
  }
}

TEST_CASE("Frobenius is an endomorphism of order m") {
  std::mt19937_64 rng(23);
  for (int m = 1; m <= 3; ++m) {
    const ChainRing r(m);
    for (int t = 0; t < 200; ++t) {
      const auto x = random_element(r, rng), y = random_element(r, rng);
      CHECK(r.frobenius(r.mul(x, y)) == r.mul(r.frobenius(x), r.frobenius(y)));
      CHECK(r.frobenius(r.add(x, y)) == r.add(r.frobenius(x), r.frobenius(y)));
      RingElement z = x;
      for (int i = 0; i < m; ++i) z = r.frobenius(z);
      CHECK(z == x);
    }
  }
}

TEST_CASE("trace equals the sum of Frobenius powers and lands in the base ring") {
  std::mt19937_64 rng(29);
  for (int m = 1; m <= 3; ++m) {
    const ChainRing r(m);
    for (int t = 0; t < 500; ++t) {
      const auto x = random_element(r, rng);
      RingElement acc = r.zero(), f = x;
      for (int i = 0; i < m; ++i, f = r.frobenius(f)) acc = r.add(acc, f);
      REQUIRE(r.trace(x) == acc);
      CHECK(acc.a.value < 3);
      CHECK(acc.b.value < 3);
      CHECK(acc.c.value < 3);
    }
  }
}

TEST_CASE("index and element_at are inverse, with index a + 3^m b + 3^2m c") {
  const ChainRing r(2);
  for (std::uint64_t i = 0; i < r.size(); ++i) REQUIRE(r.index(r.element_at(i)) == i);
  const auto x = r.element_at(1 + 9 * 2 + 81 * 5);
  CHECK(x.a.value == 1);
  CHECK(x.b.value == 2);
  CHECK(x.c.value == 5);
}

TEST_CASE("Gray map and Lee weight on the base ring") {
  const ChainRing r(1);
  CHECK(r.gray(r.u2()) == std::array<Trit, 3>{0, 0, 1});
  int total = 0;
  for (std::uint64_t i = 0; i < r.size(); ++i) {
    const auto g = r.gray(r.element_at(i));
    const int w = (g[0] != 0) + (g[1] != 0) + (g[2] != 0);
    CHECK(r.lee_weight(r.element_at(i)) == w);
    total += w;
  }
  CHECK(total == 3 * 2 * 9);  // every coordinate is nonzero on 2/3 of the ring
  CHECK_THROWS_AS(ChainRing(2).lee_weight(ChainRing(2).one()), std::domain_error);
}

TEST_CASE("set kind names round trip") {
  CHECK(parse_set_kind(to_string(SetKind::Lprime)) == SetKind::Lprime);
  CHECK(parse_set_kind("units") == SetKind::Units);
  CHECK_THROWS(parse_set_kind("squares"));
}
