// Trace codes C(m) = { (Tr(a x))_{x in L} : a in R_m } and their ternary Gray
// images.

#ifndef TRACECODE_TRACE_CODE_HPP
#define TRACECODE_TRACE_CODE_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string_view>
#include <vector>

#include "tracecode/chain_ring.hpp"
#include "tracecode/ternary.hpp"

namespace tracecode {

enum class Layout {
  Interleaved,  // (a_0, b_0, c_0, a_1, b_1, c_1, ...)
  Block,        // (a_0 .. a_{n-1}, b_0 .. b_{n-1}, c_0 .. c_{n-1})
};

std::string_view to_string(Layout layout);
Layout parse_layout(std::string_view name);

struct CodeSpec {
  int m = 1;
  SetKind set = SetKind::Lprime;
  Layout layout = Layout::Interleaved;

  std::uint64_t support_size() const { return defining_set_size(m, set); }
  /// Ternary length N = 3 |L|.
  std::uint64_t length() const { return 3 * support_size(); }
};

/// Coordinates in the base ring R = F_3 + uF_3 + u^2F_3.
using RingCodeword = std::vector<RingElement>;

struct TernaryCode {
  CodeSpec spec;
  Eigen::Index length = 0;
  Eigen::Index dimension = 0;
  /// Row j is the Gray image of ev(basis_scalar(j)); there are 3m rows.
  TritMatrix generators;

  Layout layout() const { return spec.layout; }
};

/// F_3-basis of R_m: e_j for j < m, u e_{j-m} for j < 2m, u^2 e_{j-2m} otherwise,
/// where e_i is the i-th polynomial basis element of F_{3^m}.
/// Digit j of ring.index(a) is the coefficient of basis_scalar(j) in a.
RingElement basis_scalar(const ChainRing& ring, int j);

RingCodeword evaluate(const ChainRing& ring, const RingElement& a, const DefiningSet& set);

TritVector gray_image(const RingCodeword& word, Layout layout);

/// Throws std::length_error for m above kMaxMaterializedDegree.
TernaryCode build_code(const CodeSpec& spec);
TernaryCode build_code(const ChainRing& ring, const DefiningSet& set, Layout layout);

/// Gray image of ev(a) for a = ring.element_at(scalar), from the generators.
TritVector codeword(const TernaryCode& code, std::uint64_t scalar);

/// Every codeword, row s = codeword(code, s). Requires dimension <= 8.
TritMatrix all_codewords(const TernaryCode& code);

struct InjectivityReport {
  bool injective = false;
  std::uint64_t distinct = 0;  // |{ev(a)}|
  std::uint64_t scalars = 0;   // 3^{3m}
};

/// Exhaustive over all scalars; m <= 2 for the spec overload.
InjectivityReport check_injectivity(const CodeSpec& spec);
InjectivityReport check_injectivity(const ChainRing& ring, const DefiningSet& set);

/// Structural checks run over every codeword, or over a seeded random sample.
struct Sampling {
  std::size_t codewords = 200;
  std::uint64_t seed = 1;
};

/// Position of v x_i in the defining set, for each i. Throws if v x_i leaves L.
std::vector<std::size_t> coordinate_permutation(const ChainRing& ring, const DefiningSet& set,
                                                const RingElement& v);

/// For every v in L, x -> v x permutes the coordinates, fixes none unless
/// v = 1, and maps the code onto itself. m <= 2.
bool check_group_action(const CodeSpec& spec, std::optional<Sampling> sampling = std::nullopt);

/// Block layout only: the ternary image is invariant under cyclic shift by |L|.
/// Throws std::invalid_argument for interleaved layout. m <= 2.
bool check_quasicyclic(const CodeSpec& spec, std::optional<Sampling> sampling = std::nullopt);

/// Right rotation: out[(i + by) mod N] = v[i].
TritVector cyclic_shift(const TritVector& v, Eigen::Index by);

/// "# ternary code N=.. k=.. layout=.. m=.. set=.." then one row of trits per line.
void write_generators(std::ostream& out, const TernaryCode& code);

}  // namespace tracecode

#endif  // TRACECODE_TRACE_CODE_HPP
