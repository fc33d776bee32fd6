#include "tracecode/weight_dist.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <boost/multiprecision/cpp_int.hpp>

namespace tracecode {

using boost::multiprecision::cpp_int;

namespace {

const std::complex<double> kOmega[3] = {
    {1.0, 0.0},
    {-0.5, std::numbers::sqrt3 / 2.0},
    {-0.5, -std::numbers::sqrt3 / 2.0},
};

cpp_int pow3_big(int e) { return boost::multiprecision::pow(cpp_int(3), static_cast<unsigned>(e)); }

void require_degree(int m, int max, const char* what) {
  if (m < 1 || m > max)
    throw std::length_error(std::string(what) + ": m = " + std::to_string(m) +
                            " outside supported range [1, " + std::to_string(max) + "]");
}

// Depth-first walk over the scalar digits. buf[level] is the sum of the rows
// for digits above `level`; the last level resolves three leaves per pass.
class WeightScanner {
 public:
  WeightScanner(const TernaryCode& code, std::uint32_t* out)
      : k_(static_cast<int>(code.generators.rows())),
        n_(static_cast<std::size_t>(code.length)),
        out_(out) {
    rows_.resize(k_);
    neg_rows_.resize(k_);
    for (int j = 0; j < k_; ++j) {
      rows_[j].resize(n_);
      neg_rows_[j].resize(n_);
      for (std::size_t i = 0; i < n_; ++i) {
        rows_[j][i] = code.generators(j, static_cast<Eigen::Index>(i));
        neg_rows_[j][i] = neg3(rows_[j][i]);
      }
    }
  }

  int dimension() const { return k_; }

  // Scan every scalar whose top `top` digits spell `prefix`.
  void scan_prefix(std::uint64_t prefix, int top) {
    std::vector<std::vector<Trit>> buf(k_, std::vector<Trit>(n_, 0));
    const int low = k_ - top;
    auto& start = buf[low - 1];
    std::fill(start.begin(), start.end(), Trit{0});
    std::uint64_t p = prefix;
    for (int j = low; j < k_; ++j, p /= 3) accumulate(start, start, j, static_cast<Trit>(p % 3));
    walk(buf, low - 1, prefix * pow3(low));
  }

 private:
  void accumulate(std::vector<Trit>& dst, const std::vector<Trit>& src, int row, Trit d) const {
    if (d == 0) {
      if (&dst != &src) dst = src;
      return;
    }
    const auto& g = d == 1 ? rows_[row] : neg_rows_[row];
    for (std::size_t i = 0; i < n_; ++i) {
      Trit t = static_cast<Trit>(src[i] + g[i]);
      t = static_cast<Trit>(t - 3 * (t >= 3));
      dst[i] = t;
    }
  }

  void walk(std::vector<std::vector<Trit>>& buf, int level, std::uint64_t base) {
    const auto& cur = buf[level];
    if (level == 0) {
      const auto& g = rows_[0];
      const auto& ng = neg_rows_[0];
      std::uint32_t w0 = 0, w1 = 0, w2 = 0;
      // cur + g = 0 iff cur = -g; cur + 2g = 0 iff cur = g.
      for (std::size_t i = 0; i < n_; ++i) {
        w0 += cur[i] != 0;
        w1 += cur[i] != ng[i];
        w2 += cur[i] != g[i];
      }
      out_[base] = w0;
      out_[base + 1] = w1;
      out_[base + 2] = w2;
      return;
    }
    const std::uint64_t place = pow3(level);
    for (Trit d = 0; d < 3; ++d) {
      accumulate(buf[level - 1], cur, level, d);
      walk(buf, level - 1, base + d * place);
    }
  }

  int k_;
  std::size_t n_;
  std::uint32_t* out_;
  std::vector<std::vector<Trit>> rows_, neg_rows_;
};

WeightDistribution histogram(const std::vector<std::uint32_t>& weights, const CodeSpec& spec,
                             Method method) {
  WeightDistribution d;
  d.method = method;
  d.m = spec.m;
  d.length = spec.length();
  for (auto w : weights) ++d.entries[w];
  d.total = weights.size();
  return d;
}

}  // namespace

std::string_view to_string(Method method) {
  switch (method) {
    case Method::Enumerated: return "enumerated";
    case Method::Formula: return "formula";
    default: return "charsum";
  }
}

std::uint64_t WeightDistribution::min_nonzero() const {
  for (const auto& [w, f] : entries)
    if (w != 0 && f != 0) return w;
  throw std::domain_error("WeightDistribution: no nonzero weight");
}

std::uint64_t WeightDistribution::max_nonzero() const {
  for (auto it = entries.rbegin(); it != entries.rend(); ++it)
    if (it->first != 0 && it->second != 0) return it->first;
  throw std::domain_error("WeightDistribution: no nonzero weight");
}

std::size_t WeightDistribution::nonzero_weight_count() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.first != 0; }));
}

bool total_holds(const WeightDistribution& dist) {
  cpp_int sum = 0;
  for (const auto& [w, f] : dist.entries) sum += f;
  return sum == pow3_big(3 * dist.m) && sum == cpp_int(dist.total);
}

bool first_moment_holds(const WeightDistribution& dist) {
  cpp_int sum = 0;
  for (const auto& [w, f] : dist.entries) sum += cpp_int(w) * f;
  return sum == 2 * cpp_int(dist.length) * pow3_big(3 * dist.m - 1);
}

std::complex<double> Eisenstein::to_complex() const {
  return static_cast<double>(re) + static_cast<double>(om) * kOmega[1];
}

Eisenstein theta_exact(const TritVector& y) {
  long long count[3] = {0, 0, 0};
  for (Eigen::Index i = 0; i < y.size(); ++i) ++count[y(i) % 3];
  // omega^2 = -1 - omega.
  return {count[0] - count[2], count[1] - count[2]};
}

std::complex<double> GaussPeriodValue::gauss_value() const {
  const double root = std::pow(3.0, m / 2.0);
  return m % 2 == 0 ? std::complex<double>(gauss_sign * root, 0.0)
                    : std::complex<double>(0.0, gauss_sign * root);
}

namespace {
std::complex<double> closed_value(const GaussPeriodValue::Closed& c, int m) {
  const double root = std::pow(3.0, m / 2.0);
  const double real = c.twice_real / 2.0;
  return m % 2 == 0 ? std::complex<double>(real + c.sqrt_sign * root / 2.0, 0.0)
                    : std::complex<double>(real, c.sqrt_sign * root / 2.0);
}
}  // namespace

std::complex<double> GaussPeriodValue::q_value() const { return closed_value(q_closed, m); }
std::complex<double> GaussPeriodValue::n_value() const { return closed_value(n_closed, m); }

bool GaussPeriodValue::sum_is_minus_one() const {
  if (q_closed.twice_real + n_closed.twice_real != -2) return false;
  if (q_closed.sqrt_sign + n_closed.sqrt_sign != 0) return false;
  if (exact_even && exact_even->first + exact_even->second != -1) return false;
  if (symbolic_odd && symbolic_odd->first + symbolic_odd->second != 0) return false;
  return true;
}

GaussPeriodValue gauss_period(int m) {
  require_degree(m, kMaxFieldDegree, "gauss_period");
  GaussPeriodValue g;
  g.m = m;
  // (-1)^{m-1} i^m = (-1)^{m-1} (-1)^{floor(m/2)} i^{m mod 2}.
  g.gauss_sign = ((m - 1) + m / 2) % 2 == 0 ? 1 : -1;
  g.q_closed = {-1, g.gauss_sign};
  g.n_closed = {-1, -g.gauss_sign};
  if (m % 2 == 0) {
    const auto root = static_cast<long long>(pow3(m / 2));
    g.exact_even = std::pair{(g.gauss_sign * root - 1) / 2, (-g.gauss_sign * root - 1) / 2};
  } else {
    g.symbolic_odd = std::pair{g.gauss_sign, -g.gauss_sign};
  }

  const Field field(m);
  for (FieldElement x : field.elements()) {
    if (x.is_zero()) continue;
    const auto psi = kOmega[field.tr(x)];
    if (field.eta(x) == 1) {
      g.q_numeric += psi;
      g.gauss_numeric += psi;
    } else {
      g.n_numeric += psi;
      g.gauss_numeric -= psi;
    }
  }
  return g;
}

std::complex<double> theta(const ChainRing& ring, const DefiningSet& set, const RingElement& a) {
  require_degree(ring.degree(), 2, "theta");
  std::complex<double> sum = 0.0;
  for (const RingElement& t : evaluate(ring, a, set))
    sum += kOmega[t.a.value] + kOmega[t.b.value] + kOmega[t.c.value];
  return sum;
}

ThetaWeight theta_weight(const ChainRing& ring, const DefiningSet& set, const RingElement& a) {
  const double n = 3.0 * static_cast<double>(set.size());
  const std::complex<double> sum = theta(ring, set, a) + theta(ring, set, ring.scale(2, a));
  const std::complex<double> w = (2.0 * n - sum) / 3.0;
  const double rounded = std::round(w.real());
  ThetaWeight out;
  out.residual = std::max(std::abs(w.real() - rounded), std::abs(w.imag()));
  if (out.residual >= 1e-6)
    throw std::runtime_error("weight_from_theta: non-integer weight, residual " +
                             std::to_string(out.residual));
  out.weight = static_cast<std::uint64_t>(rounded);
  return out;
}

std::uint64_t weight_from_theta(const ChainRing& ring, const DefiningSet& set,
                                const RingElement& a) {
  return theta_weight(ring, set, a).weight;
}

std::vector<std::uint32_t> weights_by_scalar(const TernaryCode& code, unsigned threads) {
  const int k = static_cast<int>(code.generators.rows());
  if (k < 1) throw std::invalid_argument("weights_by_scalar: empty generator matrix");
  if (k > 3 * kMaxMaterializedDegree)
    throw std::length_error("weights_by_scalar: more than 3^9 codewords");
  std::vector<std::uint32_t> out(pow3(k));
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  WeightScanner scanner(code, out.data());
  int top = 0;
  while (top < k - 1 && pow3(top) < 8ull * threads) ++top;
  if (threads == 1) top = 0;
  const std::uint64_t tasks = pow3(top);

  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t t = next++; t < tasks; t = next++) scanner.scan_prefix(t, top);
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  return out;
}

WeightDistribution enumerate_distribution(const TernaryCode& code, unsigned threads) {
  return histogram(weights_by_scalar(code, threads), code.spec, Method::Enumerated);
}

WeightDistribution enumerate_distribution(const CodeSpec& spec, unsigned threads) {
  require_degree(spec.m, kMaxMaterializedDegree, "enumerate_distribution");
  return enumerate_distribution(build_code(spec), threads);
}

WeightDistribution charsum_distribution(const CodeSpec& spec) {
  require_degree(spec.m, 2, "charsum_distribution");
  const ChainRing ring(spec.m);
  const DefiningSet set = defining_set(ring, spec.set);
  std::vector<std::uint32_t> weights(ring.size());
  for (std::uint64_t s = 0; s < ring.size(); ++s)
    weights[s] = static_cast<std::uint32_t>(weight_from_theta(ring, set, ring.element_at(s)));
  return histogram(weights, spec, Method::Charsum);
}

WeightDistribution formula_distribution(const CodeSpec& spec, bool extrapolate) {
  const int m = spec.m;
  require_degree(m, kMaxFieldDegree, "formula_distribution");
  WeightDistribution d;
  d.method = Method::Formula;
  d.m = m;
  d.length = spec.length();
  d.total = pow3(3 * m);
  d.entries[0] = 1;

  const std::uint64_t q3 = pow3(3 * m), q2 = pow3(2 * m), q1 = pow3(m);
  if (spec.set == SetKind::Units) {
    d.entries[2 * (q3 - q2)] += q3 - q1;
    d.entries[2 * q3] += q1 - 1;
  } else if (m % 2 == 1) {
    d.entries[q3 - q2] += q3 - q1;
    d.entries[q3] += q1 - 1;
  } else {
    if (m % 4 == 0) {
      if (!extrapolate)
        throw std::domain_error("formula_distribution: lprime with m = " + std::to_string(m) +
                                " (divisible by 4) is outside theorem scope; use --extrapolate");
      d.extrapolated = true;
    }
    const std::uint64_t q52 = pow3(5 * m / 2);
    d.entries[q3 - q52] += (q1 - 1) / 2;
    d.entries[q3 - q2] += q3 - q1;
    d.entries[q3 + q52] += (q1 - 1) / 2;
  }
  return d;
}

std::string to_csv(const WeightDistribution& dist) {
  std::ostringstream out;
  out << "weight,frequency\n";
  for (const auto& [w, f] : dist.entries) out << w << ',' << f << '\n';
  return out.str();
}

nlohmann::json to_json(const WeightDistribution& dist) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [w, f] : dist.entries) entries.push_back({{"weight", w}, {"frequency", f}});
  nlohmann::json j = {{"entries", entries},
                      {"total", dist.total},
                      {"method", std::string(to_string(dist.method))},
                      {"m", dist.m},
                      {"N", dist.length}};
  if (dist.extrapolated) j["provenance"] = "unverified extrapolation";
  return j;
}

}  // namespace tracecode
