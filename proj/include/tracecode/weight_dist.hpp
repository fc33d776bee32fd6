// Lee weight distributions of the Gray images phi(C(m)), computed three
// independent ways:
//   - enumeration over all 3^{3m} scalars (exact, m <= 3),
//   - the character sum w_L(ev(a)) = (2N - theta(a) - theta(2a)) / 3 (m <= 2),
//   - closed forms in terms of 3-powers (any m <= 8),
// plus the quadratic Gauss sum and the Gaussian periods over squares and
// nonsquares of F_{3^m}.

#ifndef TRACECODE_WEIGHT_DIST_HPP
#define TRACECODE_WEIGHT_DIST_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tracecode/trace_code.hpp"

namespace tracecode {

enum class Method { Enumerated, Formula, Charsum };

std::string_view to_string(Method method);

struct WeightDistribution {
  std::map<std::uint64_t, std::uint64_t> entries;  // weight -> frequency, zero word included
  std::uint64_t total = 0;
  Method method = Method::Enumerated;
  int m = 0;
  std::uint64_t length = 0;  // N
  bool extrapolated = false;

  std::uint64_t min_nonzero() const;
  std::uint64_t max_nonzero() const;
  std::size_t nonzero_weight_count() const;

  /// Same entries and total; method and provenance are ignored.
  bool same_weights(const WeightDistribution& other) const {
    return entries == other.entries && total == other.total;
  }
};

/// sum f_w = 3^{3m}.
bool total_holds(const WeightDistribution& dist);
/// sum w f_w = 2 N 3^{3m-1}, in exact big-integer arithmetic.
bool first_moment_holds(const WeightDistribution& dist);

/// Element re + om * omega of Z[omega], omega = exp(2 pi i / 3).
struct Eisenstein {
  long long re = 0;
  long long om = 0;

  friend bool operator==(const Eisenstein&, const Eisenstein&) = default;
  Eisenstein operator+(const Eisenstein& o) const { return {re + o.re, om + o.om}; }
  std::complex<double> to_complex() const;
};

/// Theta(y) = sum_j omega^{y_j}, exactly.
Eisenstein theta_exact(const TritVector& y);

/// Quadratic Gauss sum G(eta) = sign * i^{m mod 2} * 3^{m/2} and the periods
/// Q = (G - 1) / 2 over squares, N = (-G - 1) / 2 over nonsquares.
struct GaussPeriodValue {
  /// Q or N as (twice_real + imag_sign * i^{m mod 2} * 3^{m/2}) / 2.
  struct Closed {
    long long twice_real = -1;
    int sqrt_sign = 1;
  };

  int m = 1;
  int gauss_sign = 1;
  Closed q_closed, n_closed;
  std::optional<std::pair<long long, long long>> exact_even;  // (Q, N), m even
  /// Signs of Im(Q), Im(N) when m is odd; real parts are -1/2.
  std::optional<std::pair<int, int>> symbolic_odd;
  std::complex<double> q_numeric, n_numeric;  // direct sums of omega^{tr(x)}
  std::complex<double> gauss_numeric;         // direct sum of eta(x) omega^{tr(x)}

  std::complex<double> q_value() const;
  std::complex<double> n_value() const;
  std::complex<double> gauss_value() const;
  /// Q + N = -1 read off the closed forms, no floating point.
  bool sum_is_minus_one() const;
};

/// m in [1, 8].
GaussPeriodValue gauss_period(int m);

/// theta(a) = Theta(phi(ev(a))) as a floating sum of N cube roots of unity.
std::complex<double> theta(const ChainRing& ring, const DefiningSet& set, const RingElement& a);

struct ThetaWeight {
  std::uint64_t weight = 0;
  double residual = 0.0;  // distance of (2N - theta(a) - theta(2a)) / 3 from an integer
};

/// Throws std::runtime_error when the residual is 1e-6 or more.
ThetaWeight theta_weight(const ChainRing& ring, const DefiningSet& set, const RingElement& a);
std::uint64_t weight_from_theta(const ChainRing& ring, const DefiningSet& set, const RingElement& a);

/// Hamming weight of codeword(code, s) for every scalar s; threads = 0 uses
/// the hardware concurrency. Output is independent of the thread count.
std::vector<std::uint32_t> weights_by_scalar(const TernaryCode& code, unsigned threads = 0);

WeightDistribution enumerate_distribution(const TernaryCode& code, unsigned threads = 0);
/// m <= 3.
WeightDistribution enumerate_distribution(const CodeSpec& spec, unsigned threads = 0);
/// Every scalar through weight_from_theta; m <= 2.
WeightDistribution charsum_distribution(const CodeSpec& spec);
/// Throws std::domain_error for L' with 4 | m unless extrapolate is set.
WeightDistribution formula_distribution(const CodeSpec& spec, bool extrapolate = false);

std::string to_csv(const WeightDistribution& dist);
nlohmann::json to_json(const WeightDistribution& dist);

}  // namespace tracecode

#endif  // TRACECODE_WEIGHT_DIST_HPP
