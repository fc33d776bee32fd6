// Griesmer and Hamming (sphere-packing) bounds, and certification of the dual
// Lee distance by bounded-weight search plus an explicit weight-2 witness.

#ifndef TRACECODE_BOUNDS_HPP
#define TRACECODE_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "tracecode/trace_code.hpp"
#include "tracecode/weight_dist.hpp"

namespace tracecode {

using BigInt = boost::multiprecision::cpp_int;

struct GriesmerReport {
  BigInt N, K, d;
  BigInt sum_at_d;         // sum_{j<K} ceil(d / 3^j)
  BigInt sum_at_d_plus_1;  // same at d + 1
  bool meets_bound = false;  // sum_at_d <= N
  bool optimal = false;      // sum_at_d_plus_1 > N: no [N, K, d+1] ternary code
};

GriesmerReport griesmer(const BigInt& N, const BigInt& K, const BigInt& d);

/// Closed-form total of the d+1 Griesmer sum as stated for the two optimal
/// families; nullopt for L' with m even. Kept only for comparison with the
/// direct sum (for L' with m odd it is one short).
std::optional<BigInt> griesmer_closed_form_d_plus_1(const CodeSpec& spec);

/// Whether a ternary code of length N with 3^log3_size words could have
/// minimum distance >= 3, i.e. size * (1 + 2N) <= 3^N.
bool sphere_packing_t1(std::uint64_t N, std::uint64_t log3_size);

struct DualWitness {
  int distance = 0;     // 2 once the witness is verified, 0 when only weight 1 was searched
  int lower_bound = 0;  // 2 once weight 1 is excluded
  bool weight1_exhausted = false;
  /// Sparse ring vector (position in the defining set, base-ring value).
  std::vector<std::pair<std::size_t, RingElement>> witness;
};

/// Inner product sum_i x_i y_i in the base ring over a sparse y.
RingElement sparse_inner_product(const RingCodeword& x,
                                 const std::vector<std::pair<std::size_t, RingElement>>& y);

/// wmax in {1, 2}, m <= 3. Throws std::logic_error when a dual word of Lee
/// weight 1 exists or the witness fails to be orthogonal to every generator.
DualWitness dual_weight_search(const CodeSpec& spec, int wmax = 2);

struct Verdict {
  CodeSpec spec;
  std::uint64_t N = 0, K = 0, d = 0;
  Method d_source = Method::Formula;
  GriesmerReport griesmer;
  bool optimality_claimed = false;  // L' with m odd, or all units
  std::optional<BigInt> closed_form_d_plus_1;
  bool dual_sphere_packing_allows_d3 = true;
  DualWitness dual;
  std::vector<std::string> notes;
};

/// d by enumeration (m <= 3) or from the closed forms (m <= 8). The dual
/// search needs materialized codewords and runs for m <= 3.
Verdict verdict(const CodeSpec& spec, Method d_source = Method::Formula, unsigned threads = 0);

nlohmann::json to_json(const GriesmerReport& report);
nlohmann::json to_json(const DualWitness& dual);
nlohmann::json to_json(const Verdict& verdict);

}  // namespace tracecode

#endif  // TRACECODE_BOUNDS_HPP
