#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "tracecode/weight_dist.hpp"

using namespace tracecode;

namespace {

using Dist = std::map<std::uint64_t, std::uint64_t>;

const std::complex<double> kOmega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);

// Histogram of Hamming weights over the 3^{3m} scalars, independent of the
// scanner: each codeword is formed separately from the generator rows.
Dist histogram_by_rows(const TernaryCode& code) {
  Dist d;
  const auto k = static_cast<int>(code.generators.rows());
  for (std::uint64_t s = 0; s < pow3(k); ++s) {
    const auto digits = ternary_digits(s, k);
    d[static_cast<std::uint64_t>(hamming_weight(combine_rows(code.generators, digits)))]++;
  }
  return d;
}

}  // namespace

TEST_CASE("enumerated distributions of the four small codes") {
  CHECK(enumerate_distribution(CodeSpec{1, SetKind::Lprime}).entries == Dist{{0, 1}, {18, 24}, {27, 2}});
  CHECK(enumerate_distribution(CodeSpec{1, SetKind::Units}).entries == Dist{{0, 1}, {36, 24}, {54, 2}});
  CHECK(enumerate_distribution(CodeSpec{2, SetKind::Lprime}).entries ==
        Dist{{0, 1}, {486, 4}, {648, 720}, {972, 4}});
  CHECK(enumerate_distribution(CodeSpec{2, SetKind::Units}).entries == Dist{{0, 1}, {1296, 720}, {1458, 8}});
}

TEST_CASE("scanner agrees with row-by-row recombination") {
  for (int m = 1; m <= 2; ++m)
    for (SetKind k : {SetKind::Lprime, SetKind::Units})
      for (Layout l : {Layout::Interleaved, Layout::Block}) {
        const TernaryCode code = build_code(CodeSpec{m, k, l});
        CHECK(enumerate_distribution(code).entries == histogram_by_rows(code));
      }
}

TEST_CASE("weights per scalar do not depend on the thread count") {
  const TernaryCode code = build_code(CodeSpec{2, SetKind::Units});
  const auto one = weights_by_scalar(code, 1);
  for (unsigned t : {2u, 3u, 8u}) CHECK(weights_by_scalar(code, t) == one);
  for (std::uint64_t s = 0; s < one.size(); s += 37)
    CHECK(one[s] == static_cast<std::uint32_t>(hamming_weight(codeword(code, s))));
}

TEST_CASE("formula equals enumeration for m <= 2") {
  for (int m = 1; m <= 2; ++m)
    for (SetKind k : {SetKind::Lprime, SetKind::Units}) {
      const CodeSpec spec{m, k};
      const auto f = formula_distribution(spec);
      CHECK(f.method == Method::Formula);
      CHECK(f.same_weights(enumerate_distribution(spec)));
    }
}

TEST_CASE("closed forms: totals, first moments and scope") {
  for (int m = 1; m <= kMaxFieldDegree; ++m) {
    CHECK(total_holds(formula_distribution(CodeSpec{m, SetKind::Units})));
    CHECK(first_moment_holds(formula_distribution(CodeSpec{m, SetKind::Units})));
    if (m % 4 == 0) {
      CHECK_THROWS_WITH_AS(formula_distribution(CodeSpec{m, SetKind::Lprime}),
                           doctest::Contains("outside theorem scope"), std::domain_error);
      const auto x = formula_distribution(CodeSpec{m, SetKind::Lprime}, true);
      CHECK(x.extrapolated);
      CHECK(to_json(x)["provenance"] == "unverified extrapolation");
    } else {
      const auto d = formula_distribution(CodeSpec{m, SetKind::Lprime});
      CHECK(total_holds(d));
      CHECK(first_moment_holds(d));
      CHECK(d.nonzero_weight_count() == (m % 2 == 1 ? 2u : 3u));
    }
  }
}

TEST_CASE("first moment values") {
  auto moment = [](const WeightDistribution& d) {
    std::uint64_t s = 0;
    for (auto [w, f] : d.entries) s += w * f;
    return s;
  };
  CHECK(moment(enumerate_distribution(CodeSpec{1, SetKind::Lprime})) == 486);
  CHECK(moment(enumerate_distribution(CodeSpec{2, SetKind::Lprime})) == 472392);
  CHECK(moment(enumerate_distribution(CodeSpec{2, SetKind::Units})) == 2 * 1944 * oracle::ipow(3, 5));
}

TEST_CASE("character-sum weights match direct weights for every scalar") {
  for (int m = 1; m <= 2; ++m)
    for (SetKind k : {SetKind::Lprime, SetKind::Units}) {
      const ChainRing ring(m);
      const DefiningSet set = defining_set(ring, k);
      const TernaryCode code = build_code(ring, set, Layout::Interleaved);
      for (std::uint64_t s = 0; s < ring.size(); ++s) {
        const auto tw = theta_weight(ring, set, ring.element_at(s));
        REQUIRE(tw.residual < 1e-6);
        REQUIRE(tw.weight == static_cast<std::uint64_t>(hamming_weight(codeword(code, s))));
      }
      CHECK(charsum_distribution(CodeSpec{m, k}).same_weights(enumerate_distribution(CodeSpec{m, k})));
    }
}

TEST_CASE("sum over s of Theta(s y) is 2N - 3 w_H(y)") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> trit(0, 2);
  for (Eigen::Index n : {27, 54, 972}) {
    for (int t = 0; t < 1000; ++t) {
      TritVector y(n);
      for (Eigen::Index i = 0; i < n; ++i) y(i) = static_cast<Trit>(trit(rng));
      const Eisenstein sum = theta_exact(y) + theta_exact(TritVector(scale_mod3(2, y)));
      REQUIRE(sum == Eisenstein{2 * n - 3 * hamming_weight(y), 0});
    }
  }
}

TEST_CASE("theta_exact against floating cube roots") {
  TritVector y(5);
  y << 0, 1, 2, 2, 1;
  std::complex<double> direct = 0;
  for (Eigen::Index i = 0; i < y.size(); ++i) direct += std::pow(kOmega, static_cast<int>(y(i)));
  CHECK(std::abs(theta_exact(y).to_complex() - direct) < 1e-12);
}

TEST_CASE("Gaussian periods match closed forms for m <= 6") {
  for (int m = 1; m <= 6; ++m) {
    const GaussPeriodValue g = gauss_period(m);
    const Field f(m);
    std::complex<double> q = 0, n = 0, gauss = 0;
    for (auto x : f.elements()) {
      if (x.is_zero()) continue;
      const auto w = std::pow(kOmega, static_cast<int>(f.tr(x)));
      (f.is_square(x) ? q : n) += w;
      gauss += static_cast<double>(f.eta(x)) * w;
    }
    const double scale = std::pow(3.0, m / 2.0);
    CHECK(std::abs(q - g.q_value()) <= 1e-6 * std::max(1.0, std::abs(g.q_value())));
    CHECK(std::abs(n - g.n_value()) <= 1e-6 * std::max(1.0, std::abs(g.n_value())));
    CHECK(std::abs(gauss - g.gauss_value()) <= 1e-6 * scale);
    CHECK(std::abs(g.gauss_value()) == doctest::Approx(scale));
    CHECK(g.sum_is_minus_one());
    if (m % 2 == 0) {
      REQUIRE(g.exact_even.has_value());
      CHECK(g.exact_even->first + g.exact_even->second == -1);
    } else {
      CHECK(g.symbolic_odd.has_value());
    }
  }
  CHECK(gauss_period(2).exact_even->first == 1);   // G = 3, Q = 1
  CHECK(gauss_period(4).exact_even->first == -5);  // G = -9
}

TEST_CASE("report formats") {
  const auto d = enumerate_distribution(CodeSpec{1, SetKind::Lprime});
  CHECK(to_csv(d) == "weight,frequency\n0,1\n18,24\n27,2\n");
  const auto j = to_json(d);
  CHECK(j["N"] == 27);
  CHECK(j["total"] == 27);
  CHECK(j["method"] == "enumerated");
  CHECK(j["entries"].size() == 3);
  CHECK_FALSE(j.contains("provenance"));
}
