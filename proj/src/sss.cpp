#include "tracecode/sss.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "rng.hpp"

namespace tracecode {

namespace {

using Support = std::vector<std::uint64_t>;

Support support_of(const TritMatrix& words, Eigen::Index row) {
  Support s((static_cast<std::size_t>(words.cols()) + 63) / 64, 0);
  for (Eigen::Index i = 0; i < words.cols(); ++i)
    if (words(row, i) != 0) s[static_cast<std::size_t>(i) / 64] |= std::uint64_t{1} << (i % 64);
  return s;
}

bool contained_in(const Support& inner, const Support& outer) {
  for (std::size_t w = 0; w < inner.size(); ++w)
    if ((inner[w] & ~outer[w]) != 0) return false;
  return true;
}

void require_small_dimension(const TernaryCode& code, const char* what) {
  if (code.generators.rows() > 6)
    throw std::length_error(std::string(what) + ": brute force limited to dimension 6");
  if (code.dimension != code.generators.rows())
    throw std::invalid_argument(std::string(what) + ": generator rows are not independent");
}

}  // namespace

bool ab_condition(const WeightDistribution& dist) {
  // Weights stay below 2^40 for m <= 8, so 3 w fits comfortably.
  return 3 * dist.min_nonzero() > 2 * dist.max_nonzero();
}

bool is_class_representative(std::uint64_t scalar) {
  if (scalar == 0) return false;
  while (scalar >= 3) scalar /= 3;
  return scalar == 1;
}

MinimalityReport minimal_codewords(const TernaryCode& code) {
  require_small_dimension(code, "minimal_codewords");
  const TritMatrix words = all_codewords(code);

  struct ClassInfo {
    std::uint64_t scalar;
    Eigen::Index weight;
    Support support;
  };
  std::vector<ClassInfo> classes;
  for (Eigen::Index s = 1; s < words.rows(); ++s) {
    if (!is_class_representative(static_cast<std::uint64_t>(s))) continue;
    classes.push_back({static_cast<std::uint64_t>(s), hamming_weight(words.row(s)), support_of(words, s)});
  }
  std::stable_sort(classes.begin(), classes.end(),
                   [](const ClassInfo& x, const ClassInfo& y) { return x.weight < y.weight; });

  MinimalityReport report;
  report.class_count = classes.size();
  Eigen::Index w_min = classes.front().weight, w_max = classes.back().weight;
  report.ab_ratio_holds = 3 * w_min > 2 * w_max;

  for (std::size_t i = 0; i < classes.size(); ++i) {
    bool minimal = true;
    // A class of larger weight cannot have its support inside this one.
    for (std::size_t j = 0; j < classes.size() && classes[j].weight <= classes[i].weight; ++j) {
      if (j == i) continue;
      if (contained_in(classes[j].support, classes[i].support)) {
        minimal = false;
        break;
      }
    }
    (minimal ? report.minimal_classes : report.non_minimal_examples).push_back(classes[i].scalar);
  }
  std::sort(report.minimal_classes.begin(), report.minimal_classes.end());
  std::sort(report.non_minimal_examples.begin(), report.non_minimal_examples.end());
  report.bruteforce_minimal_count = report.minimal_classes.size();
  return report;
}

AccessStructure access_structure(const TernaryCode& code) {
  return access_structure(code, minimal_codewords(code));
}

AccessStructure access_structure(const TernaryCode& code, const MinimalityReport& minimality) {
  AccessStructure out;
  std::vector<bool> in_all;
  for (auto s : minimality.minimal_classes) {
    const TritVector c = codeword(code, s);
    if (c(0) == 0) continue;
    std::vector<std::size_t> set;
    for (Eigen::Index i = 1; i < c.size(); ++i)
      if (c(i) != 0) set.push_back(static_cast<std::size_t>(i));
    out.minimal_access_sets.push_back(std::move(set));
  }
  std::sort(out.minimal_access_sets.begin(), out.minimal_access_sets.end());
  if (!out.minimal_access_sets.empty()) {
    out.dictators = out.minimal_access_sets.front();
    for (const auto& set : out.minimal_access_sets) {
      std::vector<std::size_t> keep;
      std::set_intersection(out.dictators.begin(), out.dictators.end(), set.begin(), set.end(),
                            std::back_inserter(keep));
      out.dictators = std::move(keep);
    }
  }
  return out;
}

nlohmann::json to_json(const MinimalityReport& r) {
  nlohmann::json j = {{"ab_ratio_holds", r.ab_ratio_holds},
                      {"class_count", r.class_count},
                      {"non_minimal_examples", r.non_minimal_examples},
                      {"convention", r.convention}};
  j["bruteforce_minimal_count"] =
      r.bruteforce_minimal_count ? nlohmann::json(*r.bruteforce_minimal_count) : nlohmann::json();
  return j;
}

nlohmann::json to_json(const AccessStructure& a) {
  return {{"secret_position", a.secret_position},
          {"minimal_access_sets", a.minimal_access_sets},
          {"dictators", a.dictators},
          {"convention", a.convention}};
}

MasseyScheme::MasseyScheme(const TernaryCode& code)
    : generators_(code.generators), echelon_(row_echelon(code.generators)) {
  if (generators_.cols() < 2) throw std::invalid_argument("MasseyScheme: code too short");
  if (echelon_.pivots.empty() || echelon_.pivots.front() != 0)
    throw std::invalid_argument("MasseyScheme: every codeword vanishes at coordinate 0");
  std::vector<bool> pivot(static_cast<std::size_t>(generators_.cols()), false);
  for (auto p : echelon_.pivots) pivot[static_cast<std::size_t>(p)] = true;
  for (Eigen::Index col = 0; col < generators_.cols(); ++col)
    if (!pivot[static_cast<std::size_t>(col)]) free_columns_.push_back(col);
  for (auto f : free_columns_)
    if (echelon_.rows(0, f) != 0) {
      secret_free_ = f;
      break;
    }
  if (secret_free_ < 0)
    throw std::invalid_argument("MasseyScheme: a weight-1 codeword pins coordinate 0 of the dual");
}

ShareVector MasseyScheme::deal(Trit secret, std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  const Eigen::Index n = generators_.cols();
  TritVector y = TritVector::Zero(n);
  for (auto f : free_columns_)
    if (f != secret_free_) y(f) = static_cast<Trit>(detail::uniform_below(rng, 3));

  // Row i of the echelon form reads y_{pivot_i} + sum_f E(i, f) y_f = 0.
  auto pivot_value = [&](Eigen::Index i) {
    Trit acc = 0;
    for (auto f : free_columns_) acc = add3(acc, mul3(echelon_.rows(i, f), y(f)));
    return neg3(acc);
  };
  // Choose y at the distinguished free column so that y_0 = secret; E(0, f)^{-1} = E(0, f).
  const Trit e = echelon_.rows(0, secret_free_);
  const Trit y0_without = pivot_value(0);
  y(secret_free_) = mul3(e, sub3(y0_without, static_cast<Trit>(secret % 3)));
  for (Eigen::Index i = 0; i < echelon_.rank(); ++i) y(echelon_.pivots[i]) = pivot_value(i);
  if (y(0) != secret % 3) throw std::logic_error("MasseyScheme::deal: secret not embedded");

  ShareVector out;
  out.shares.assign(y.data() + 1, y.data() + n);
  return out;
}

std::optional<TritVector> MasseyScheme::recombination(std::span<const std::size_t> set) const {
  const Eigen::Index n = generators_.cols(), k = generators_.rows();
  std::vector<bool> allowed(static_cast<std::size_t>(n), false);
  allowed[0] = true;
  for (auto p : set) {
    if (p == 0 || p >= static_cast<std::size_t>(n))
      throw std::invalid_argument("MasseyScheme: participant position outside [1, N)");
    allowed[p] = true;
  }
  std::vector<Eigen::Index> forced_zero;
  for (Eigen::Index i = 1; i < n; ++i)
    if (!allowed[static_cast<std::size_t>(i)]) forced_zero.push_back(i);

  // Unknowns: message coefficients lambda; constraint rows are columns of G.
  TritMatrix system(static_cast<Eigen::Index>(forced_zero.size()) + 1, k);
  TritColumn rhs = TritColumn::Zero(system.rows());
  system.row(0) = generators_.col(0).transpose();
  rhs(0) = 1;
  for (std::size_t r = 0; r < forced_zero.size(); ++r)
    system.row(static_cast<Eigen::Index>(r) + 1) = generators_.col(forced_zero[r]).transpose();
  const auto lambda = solve_mod3(system, rhs);
  if (!lambda) return std::nullopt;
  std::vector<Trit> coeffs(lambda->data(), lambda->data() + lambda->size());
  return combine_rows(generators_, coeffs);
}

Trit MasseyScheme::reconstruct(const std::map<std::size_t, Trit>& shares) const {
  std::vector<std::size_t> set;
  for (const auto& [pos, value] : shares) set.push_back(pos);
  const auto c = recombination(set);
  if (!c) throw UnqualifiedSetError("MasseyScheme::reconstruct: set is not qualified");
  Trit acc = 0;
  for (const auto& [pos, value] : shares)
    acc = add3(acc, mul3((*c)(static_cast<Eigen::Index>(pos)), static_cast<Trit>(value % 3)));
  return neg3(acc);
}

ShareVector massey_shares(const TernaryCode& code, Trit secret, std::uint64_t seed) {
  return MasseyScheme(code).deal(secret, seed);
}

Trit reconstruct(const std::map<std::size_t, Trit>& shares, const TernaryCode& code) {
  return MasseyScheme(code).reconstruct(shares);
}

}  // namespace tracecode
