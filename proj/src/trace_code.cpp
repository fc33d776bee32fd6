#include "tracecode/trace_code.hpp"

#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "rng.hpp"

namespace tracecode {

namespace {

using WordKey = std::vector<Trit>;

WordKey ring_key(const RingCodeword& w) {
  WordKey key(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    key[i] = static_cast<Trit>(w[i].a.value + 3 * w[i].b.value + 9 * w[i].c.value);
  return key;
}

WordKey vector_key(const TritVector& v) { return WordKey(v.data(), v.data() + v.size()); }

void require_small(int m, const char* what) {
  if (m > 2) throw std::length_error(std::string(what) + ": exhaustive check limited to m <= 2");
}

std::vector<std::uint64_t> chosen_scalars(std::uint64_t total, std::optional<Sampling> sampling) {
  std::vector<std::uint64_t> out;
  if (!sampling) {
    out.resize(total);
    for (std::uint64_t s = 0; s < total; ++s) out[s] = s;
    return out;
  }
  std::mt19937_64 rng(sampling->seed);
  out.resize(sampling->codewords);
  for (auto& s : out) s = detail::uniform_below(rng, total);
  return out;
}

}  // namespace

std::string_view to_string(Layout layout) {
  return layout == Layout::Interleaved ? "interleaved" : "block";
}

Layout parse_layout(std::string_view name) {
  if (name == "interleaved") return Layout::Interleaved;
  if (name == "block") return Layout::Block;
  throw std::invalid_argument("unknown layout '" + std::string(name) + "'");
}

RingElement basis_scalar(const ChainRing& ring, int j) {
  const int m = ring.degree();
  if (j < 0 || j >= 3 * m) throw std::out_of_range("basis_scalar: index outside [0, 3m)");
  const FieldElement e{static_cast<std::uint16_t>(pow3(j % m))};
  switch (j / m) {
    case 0: return {e, {}, {}};
    case 1: return {{}, e, {}};
    default: return {{}, {}, e};
  }
}

RingCodeword evaluate(const ChainRing& ring, const RingElement& a, const DefiningSet& set) {
  if (set.m != ring.degree()) throw std::invalid_argument("evaluate: ring and set degree differ");
  RingCodeword out(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) out[i] = ring.trace(ring.mul(a, set.elements[i]));
  return out;
}

TritVector gray_image(const RingCodeword& word, Layout layout) {
  const auto n = static_cast<Eigen::Index>(word.size());
  TritVector out(3 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Trit t[3] = {static_cast<Trit>(word[i].a.value), static_cast<Trit>(word[i].b.value),
                       static_cast<Trit>(word[i].c.value)};
    for (Eigen::Index k = 0; k < 3; ++k) {
      if (layout == Layout::Interleaved)
        out(3 * i + k) = t[k];
      else
        out(k * n + i) = t[k];
    }
  }
  return out;
}

TernaryCode build_code(const ChainRing& ring, const DefiningSet& set, Layout layout) {
  const int m = ring.degree();
  TernaryCode code;
  code.spec = {m, set.kind, layout};
  code.length = static_cast<Eigen::Index>(3 * set.size());
  code.generators.resize(3 * m, code.length);
  for (int j = 0; j < 3 * m; ++j)
    code.generators.row(j) = gray_image(evaluate(ring, basis_scalar(ring, j), set), layout);
  code.dimension = rank_mod3(code.generators);
  return code;
}

TernaryCode build_code(const CodeSpec& spec) {
  if (spec.m > kMaxMaterializedDegree)
    throw std::length_error("build_code: codewords materialized only for m <= 3");
  const ChainRing ring(spec.m);
  return build_code(ring, defining_set(ring, spec.set), spec.layout);
}

TritVector codeword(const TernaryCode& code, std::uint64_t scalar) {
  const auto digits = ternary_digits(scalar, static_cast<int>(code.generators.rows()));
  return combine_rows(code.generators, digits);
}

TritMatrix all_codewords(const TernaryCode& code) {
  const auto k = code.generators.rows();
  if (k > 8) throw std::length_error("all_codewords: more than 3^8 codewords");
  const std::uint64_t total = pow3(static_cast<int>(k));
  TritMatrix out(static_cast<Eigen::Index>(total), code.length);
  out.row(0).setZero();
  // Row s = row (s - 3^j * d_j) + d_j * g_j for the top nonzero digit d_j of s.
  for (std::uint64_t s = 1; s < total; ++s) {
    int j = 0;
    while (pow3(j + 1) <= s) ++j;
    const std::uint64_t place = pow3(j);
    const auto d = static_cast<Trit>(s / place);
    out.row(static_cast<Eigen::Index>(s)) =
        add_mod3(out.row(static_cast<Eigen::Index>(s - d * place)),
                 scale_mod3(d, code.generators.row(j)));
  }
  return out;
}

InjectivityReport check_injectivity(const ChainRing& ring, const DefiningSet& set) {
  std::set<WordKey> seen;
  InjectivityReport r;
  r.scalars = ring.size();
  for (std::uint64_t s = 0; s < r.scalars; ++s)
    seen.insert(ring_key(evaluate(ring, ring.element_at(s), set)));
  r.distinct = seen.size();
  r.injective = r.distinct == r.scalars;
  return r;
}

InjectivityReport check_injectivity(const CodeSpec& spec) {
  require_small(spec.m, "check_injectivity");
  const ChainRing ring(spec.m);
  return check_injectivity(ring, defining_set(ring, spec.set));
}

std::vector<std::size_t> coordinate_permutation(const ChainRing& ring, const DefiningSet& set,
                                                const RingElement& v) {
  std::vector<std::int64_t> position(ring.size(), -1);
  for (std::size_t i = 0; i < set.size(); ++i)
    position[ring.index(set.elements[i])] = static_cast<std::int64_t>(i);
  std::vector<std::size_t> perm(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) {
    const auto p = position[ring.index(ring.mul(v, set.elements[i]))];
    if (p < 0) throw std::invalid_argument("coordinate_permutation: v x leaves the defining set");
    perm[i] = static_cast<std::size_t>(p);
  }
  return perm;
}

bool check_group_action(const CodeSpec& spec, std::optional<Sampling> sampling) {
  require_small(spec.m, "check_group_action");
  const ChainRing ring(spec.m);
  const DefiningSet set = defining_set(ring, spec.set);

  std::vector<RingCodeword> words(ring.size());
  std::set<WordKey> code;
  for (std::uint64_t s = 0; s < ring.size(); ++s) {
    words[s] = evaluate(ring, ring.element_at(s), set);
    code.insert(ring_key(words[s]));
  }
  const auto scalars = chosen_scalars(ring.size(), sampling);

  for (const RingElement& v : set.elements) {
    const auto perm = coordinate_permutation(ring, set, v);
    std::vector<bool> hit(set.size(), false);
    for (std::size_t i = 0; i < perm.size(); ++i) {
      if (hit[perm[i]]) return false;
      hit[perm[i]] = true;
      if (v != ring.one() && perm[i] == i) return false;
    }
    for (auto s : scalars) {
      RingCodeword moved(set.size());
      for (std::size_t i = 0; i < set.size(); ++i) moved[i] = words[s][perm[i]];
      if (!code.contains(ring_key(moved))) return false;
    }
  }
  return true;
}

TritVector cyclic_shift(const TritVector& v, Eigen::Index by) {
  const Eigen::Index n = v.size();
  TritVector out(n);
  for (Eigen::Index i = 0; i < n; ++i) out(((i + by) % n + n) % n) = v(i);
  return out;
}

bool check_quasicyclic(const CodeSpec& spec, std::optional<Sampling> sampling) {
  if (spec.layout != Layout::Block)
    throw std::invalid_argument("check_quasicyclic: certified in block layout only");
  require_small(spec.m, "check_quasicyclic");
  const TernaryCode code = build_code(spec);
  const TritMatrix words = all_codewords(code);
  std::set<WordKey> members;
  for (Eigen::Index s = 0; s < words.rows(); ++s) members.insert(vector_key(words.row(s)));
  const Eigen::Index shift = code.length / 3;
  for (auto s : chosen_scalars(static_cast<std::uint64_t>(words.rows()), sampling))
    if (!members.contains(vector_key(cyclic_shift(words.row(static_cast<Eigen::Index>(s)), shift))))
      return false;
  return true;
}

void write_generators(std::ostream& out, const TernaryCode& code) {
  out << "# ternary code N=" << code.length << " k=" << code.dimension
      << " layout=" << to_string(code.layout()) << " m=" << code.spec.m
      << " set=" << to_string(code.spec.set) << '\n';
  for (Eigen::Index j = 0; j < code.generators.rows(); ++j) {
    std::string row(static_cast<std::size_t>(code.length), '0');
    for (Eigen::Index i = 0; i < code.length; ++i)
      row[static_cast<std::size_t>(i)] = static_cast<char>('0' + code.generators(j, i));
    out << row << '\n';
  }
}

}  // namespace tracecode
