#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <random>
#include <set>

#include "tracecode/sss.hpp"

using namespace tracecode;

namespace {

std::vector<std::size_t> support(const TritVector& v) {
  std::vector<std::size_t> s;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) s.push_back(static_cast<std::size_t>(i));
  return s;
}

bool subset(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Minimal codewords by the literal definition over all 3^k codewords: no
// non-proportional nonzero codeword has support inside this one.
std::set<std::uint64_t> minimal_by_definition(const TernaryCode& code) {
  const TritMatrix all = all_codewords(code);
  std::set<std::uint64_t> out;
  for (Eigen::Index s = 1; s < all.rows(); ++s) {
    if (!is_class_representative(static_cast<std::uint64_t>(s))) continue;
    const TritVector c = all.row(s), twice = scale_mod3(2, c);
    const auto sc = support(c);
    bool minimal = true;
    for (Eigen::Index t = 1; t < all.rows() && minimal; ++t) {
      const TritVector d = all.row(t);
      if (d == c || d == twice) continue;
      minimal = !subset(support(d), sc);
    }
    if (minimal) out.insert(static_cast<std::uint64_t>(s));
  }
  return out;
}

}  // namespace

TEST_CASE("class representatives split each pair {s, 2s}") {
  const TernaryCode code = build_code(CodeSpec{1, SetKind::Lprime});
  int reps = 0;
  for (std::uint64_t s = 1; s < 27; ++s) {
    reps += is_class_representative(s);
    // Exactly one of codeword(s) and 2 codeword(s) is a representative.
    const TritVector twice = scale_mod3(2, codeword(code, s));
    for (std::uint64_t t = 1; t < 27; ++t)
      if (codeword(code, t) == twice) CHECK(is_class_representative(s) != is_class_representative(t));
  }
  CHECK(reps == 13);
  CHECK_FALSE(is_class_representative(0));
}

TEST_CASE("minimality at m = 1: only full-support codewords fail") {
  for (SetKind k : {SetKind::Lprime, SetKind::Units}) {
    const TernaryCode code = build_code(CodeSpec{1, k});
    const MinimalityReport r = minimal_codewords(code);
    CHECK(r.class_count == 13);
    CHECK(r.convention == "up to scalar multiples");
    CHECK_FALSE(r.ab_ratio_holds);
    CHECK(std::set<std::uint64_t>(r.minimal_classes.begin(), r.minimal_classes.end()) ==
          minimal_by_definition(code));
    REQUIRE(r.non_minimal_examples.size() == 1);
    CHECK(hamming_weight(codeword(code, r.non_minimal_examples.front())) == code.length);
    for (auto s : r.minimal_classes) CHECK(hamming_weight(codeword(code, s)) < code.length);
    CHECK(*r.bruteforce_minimal_count == 12);
  }
}

TEST_CASE("minimality at m = 2 L': the two full-support classes fail") {
  const TernaryCode code = build_code(CodeSpec{2, SetKind::Lprime});
  const MinimalityReport r = minimal_codewords(code);
  CHECK(r.class_count == 364);
  CHECK(r.non_minimal_examples.size() == 2);
  for (auto s : r.non_minimal_examples) CHECK(hamming_weight(codeword(code, s)) == 972);
}

TEST_CASE("ratio condition in exact arithmetic") {
  CHECK_FALSE(ab_condition(formula_distribution(CodeSpec{1, SetKind::Lprime})));  // 54 > 54 fails
  CHECK_FALSE(ab_condition(formula_distribution(CodeSpec{1, SetKind::Units})));
  CHECK(ab_condition(formula_distribution(CodeSpec{3, SetKind::Lprime})));
  CHECK(ab_condition(formula_distribution(CodeSpec{3, SetKind::Units})));
  CHECK_FALSE(ab_condition(formula_distribution(CodeSpec{2, SetKind::Lprime})));
}

TEST_CASE("whenever the ratio condition holds, brute force finds no non-minimal class") {
  // Both m = 2 unit codes and the block layout variants are within k <= 6.
  for (Layout l : {Layout::Interleaved, Layout::Block}) {
    const TernaryCode code = build_code(CodeSpec{2, SetKind::Units, l});
    const MinimalityReport r = minimal_codewords(code);
    if (r.ab_ratio_holds) CHECK(r.non_minimal_examples.empty());
  }
}

TEST_CASE("access structure and dictators") {
  for (SetKind k : {SetKind::Lprime, SetKind::Units}) {
    const TernaryCode code = build_code(CodeSpec{1, k});
    const AccessStructure a = access_structure(code);
    CHECK(a.secret_position == 0);
    REQUIRE_FALSE(a.minimal_access_sets.empty());
    CHECK(std::is_sorted(a.minimal_access_sets.begin(), a.minimal_access_sets.end()));

    // Recompute the intersection from the raw list.
    std::set<std::size_t> common(a.minimal_access_sets.front().begin(), a.minimal_access_sets.front().end());
    for (const auto& s : a.minimal_access_sets) {
      CHECK(std::is_sorted(s.begin(), s.end()));
      CHECK(std::find(s.begin(), s.end(), 0) == s.end());
      std::set<std::size_t> keep;
      for (auto p : s)
        if (common.count(p)) keep.insert(p);
      common = keep;
    }
    CHECK(std::vector<std::size_t>(common.begin(), common.end()) == a.dictators);
    CHECK_FALSE(a.dictators.empty());

    // Dictators are the coordinates proportional to coordinate 0 on the code.
    for (auto p : a.dictators) {
      const auto c0 = code.generators.col(0), cp = code.generators.col(static_cast<Eigen::Index>(p));
      CHECK((cp == c0 || TritColumn(scale_mod3(2, cp)) == TritColumn(c0)));
    }
    const auto j = to_json(a);
    CHECK(j["dictators"].size() == a.dictators.size());
    CHECK(j["convention"] == "up to scalar multiples");
  }
}

TEST_CASE("Massey scheme round trip over every minimal access set") {
  for (SetKind k : {SetKind::Lprime, SetKind::Units}) {
    const TernaryCode code = build_code(CodeSpec{1, k});
    const MasseyScheme scheme(code);
    CHECK(scheme.participants() == static_cast<std::size_t>(code.length) - 1);
    const AccessStructure a = access_structure(code);
    std::mt19937_64 rng(99);
    for (const auto& set : a.minimal_access_sets) {
      CHECK(scheme.is_qualified(set));
      for (int t = 0; t < 50; ++t) {
        const Trit secret = static_cast<Trit>(rng() % 3);
        const ShareVector sh = scheme.deal(secret, rng());
        std::map<std::size_t, Trit> sub;
        for (auto p : set) sub[p] = sh.shares[p - 1];
        REQUIRE(scheme.reconstruct(sub) == secret);
      }
      // Dropping any one participant that is not forced leaves an unqualified set.
      std::vector<std::size_t> smaller(set.begin() + 1, set.end());
      CHECK_FALSE(scheme.is_qualified(smaller));
    }
  }
}

TEST_CASE("shares lie in the dual code and embed the secret") {
  const TernaryCode code = build_code(CodeSpec{1, SetKind::Units});
  const MasseyScheme scheme(code);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Trit secret = static_cast<Trit>(seed % 3);
    const ShareVector sh = scheme.deal(secret, seed);
    TritVector y(code.length);
    y(0) = secret;
    for (Eigen::Index i = 1; i < code.length; ++i) y(i) = sh.shares[static_cast<std::size_t>(i) - 1];
    for (Eigen::Index r = 0; r < code.generators.rows(); ++r) {
      int acc = 0;
      for (Eigen::Index i = 0; i < code.length; ++i) acc += code.generators(r, i) * y(i);
      CHECK(acc % 3 == 0);
    }
  }
  // Same seed, same shares.
  CHECK(scheme.deal(1, 42).shares == scheme.deal(1, 42).shares);
}

TEST_CASE("reconstruction: full set, supersets, and unqualified sets") {
  const TernaryCode code = build_code(CodeSpec{1, SetKind::Lprime});
  const MasseyScheme scheme(code);
  const ShareVector sh = scheme.deal(2, 7);

  std::map<std::size_t, Trit> all;
  for (std::size_t p = 1; p <= scheme.participants(); ++p) all[p] = sh.shares[p - 1];
  CHECK(scheme.reconstruct(all) == 2);
  CHECK(reconstruct(all, code) == 2);

  const AccessStructure a = access_structure(code);
  std::map<std::size_t, Trit> bigger;
  for (auto p : a.minimal_access_sets.back()) bigger[p] = sh.shares[p - 1];
  for (std::size_t p = 1; p <= 5; ++p) bigger[p] = sh.shares[p - 1];
  CHECK(scheme.reconstruct(bigger) == 2);

  CHECK_THROWS_AS(scheme.reconstruct({}), UnqualifiedSetError);
  // No dictator present: nobody in the remaining set can be combined into coordinate 0
  // unless a minimal access set survives.
  std::map<std::size_t, Trit> without;
  for (std::size_t p = 1; p <= scheme.participants(); ++p)
    if (std::find(a.dictators.begin(), a.dictators.end(), p) == a.dictators.end()) without[p] = sh.shares[p - 1];
  CHECK_THROWS_AS(scheme.reconstruct(without), UnqualifiedSetError);
  CHECK(massey_shares(code, 2, 7).shares == sh.shares);
}
