// Minimal codewords of the ternary image and the Massey secret-sharing scheme
// they describe.
//
// The scheme is the one whose access structure is read off the minimal
// codewords of the code C: the dealer draws a random word y of the dual code
// C^perp with y_0 = secret and hands y_i to participant i (1 <= i < N). A set A
// is qualified iff some c in C has c_0 = 1 and support inside {0} u A, in
// which case y_0 = -sum_{i in A} c_i y_i.

#ifndef TRACECODE_SSS_HPP
#define TRACECODE_SSS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "tracecode/trace_code.hpp"
#include "tracecode/weight_dist.hpp"

namespace tracecode {

inline constexpr const char* kMinimalityConvention = "up to scalar multiples";

/// 3 w_min > 2 w_max, in exact integers.
bool ab_condition(const WeightDistribution& dist);

struct MinimalityReport {
  bool ab_ratio_holds = false;
  std::optional<std::uint64_t> bruteforce_minimal_count;   // projective classes
  std::uint64_t class_count = 0;                           // (3^k - 1) / 2
  std::vector<std::uint64_t> minimal_classes;              // representative scalars
  std::vector<std::uint64_t> non_minimal_examples;         // representative scalars
  std::string convention = kMinimalityConvention;
};

/// Canonical representative of {s, 2s}: the top nonzero base-3 digit is 1.
bool is_class_representative(std::uint64_t scalar);

/// Brute-force support inclusion over projective classes; dimension <= 6.
MinimalityReport minimal_codewords(const TernaryCode& code);

struct AccessStructure {
  std::size_t secret_position = 0;
  std::vector<std::vector<std::size_t>> minimal_access_sets;  // positions in [1, N)
  std::vector<std::size_t> dictators;
  std::string convention = kMinimalityConvention;
};

/// dimension <= 6.
AccessStructure access_structure(const TernaryCode& code);
AccessStructure access_structure(const TernaryCode& code, const MinimalityReport& minimality);

nlohmann::json to_json(const MinimalityReport& report);
nlohmann::json to_json(const AccessStructure& access);

class UnqualifiedSetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shares for participants 1..N-1; shares[i - 1] belongs to participant i.
struct ShareVector {
  std::vector<Trit> shares;
};

class MasseyScheme {
 public:
  /// Throws std::invalid_argument when coordinate 0 cannot carry a secret.
  explicit MasseyScheme(const TernaryCode& code);

  std::size_t participants() const { return static_cast<std::size_t>(generators_.cols()) - 1; }

  /// Uniform over dual words with y_0 = secret; deterministic in seed.
  ShareVector deal(Trit secret, std::uint64_t seed) const;

  /// Coefficients c in C with c_0 = 1 and support in {0} u set, if any.
  std::optional<TritVector> recombination(std::span<const std::size_t> set) const;
  bool is_qualified(std::span<const std::size_t> set) const { return recombination(set).has_value(); }

  /// Keys are participant positions in [1, N). Throws UnqualifiedSetError.
  Trit reconstruct(const std::map<std::size_t, Trit>& shares) const;

 private:
  TritMatrix generators_;
  EchelonForm echelon_;
  std::vector<Eigen::Index> free_columns_;
  Eigen::Index secret_free_ = -1;  // a free column with nonzero weight in the row of pivot 0
};

ShareVector massey_shares(const TernaryCode& code, Trit secret, std::uint64_t seed);
Trit reconstruct(const std::map<std::size_t, Trit>& shares, const TernaryCode& code);

}  // namespace tracecode

#endif  // TRACECODE_SSS_HPP
