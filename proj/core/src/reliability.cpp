#include "depolar/reliability.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "depolar/errors.hpp"
#include "depolar/hilbert.hpp"
#include "depolar/mvt.hpp"

namespace depolar::rel {

namespace {

void check_level(const SystemSpec& spec, int level) {
  if (level < 0)
    throw Error("system level must be nonnegative, got " +
                std::to_string(level));
  (void)spec;
}

std::vector<Monomial> k_subsets_at_level(int n, int k, int level,
                                         const std::vector<int>& state_counts) {
  std::vector<Monomial> out;
  if (k < 1 || k > n) return out;
  std::vector<int> pick(k);
  auto rec = [&](auto&& self, int start, int depth) -> void {
    if (depth == k) {
      std::vector<int> e(n, 0);
      for (int i : pick) e[i] = level;
      out.emplace_back(std::move(e));
      return;
    }
    for (int i = start; i <= n - (k - depth); ++i) {
      if (state_counts[i] < level) continue;  // component cannot reach it
      pick[depth] = i;
      self(self, i + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace

void ProbabilityTable::validate(const SystemSpec& spec) const {
  if (static_cast<int>(point.size()) != spec.components)
    throw Error("probability table needs one row per component");
  for (int i = 0; i < spec.components; ++i) {
    if (static_cast<int>(point[i].size()) != spec.state_counts[i] + 1)
      throw Error("component " + std::to_string(i + 1) + " needs " +
                  std::to_string(spec.state_counts[i] + 1) +
                  " state probabilities");
    Rational sum(0);
    for (const Rational& p : point[i]) {
      if (p < 0) throw Error("negative probability");
      sum += p;
    }
    if (sum != 1)
      throw Error("probabilities of component " + std::to_string(i + 1) +
                  " do not sum to 1");
  }
}

Rational ProbabilityTable::cumulative(int component, int state) const {
  if (state <= 0) return Rational(1);
  const auto& row = point[component];
  if (state >= static_cast<int>(row.size())) return Rational(0);
  Rational sum(0);
  for (std::size_t s = state; s < row.size(); ++s) sum += row[s];
  return sum;
}

MonomialIdeal multistate_k_out_of_n_ideal(const std::vector<int>& k,
                                          const std::vector<int>& state_counts,
                                          int level) {
  int n = static_cast<int>(state_counts.size());
  int m = static_cast<int>(k.size());
  for (int kl : k)
    if (kl < 1 || kl > n)
      throw Error("k values must lie between 1 and the component count");
  if (level <= 0)
    return MonomialIdeal(n, {Monomial(std::vector<int>(n, 0))});
  std::vector<Monomial> gens;
  for (int l = level; l <= m; ++l) {
    auto batch = k_subsets_at_level(n, k[l - 1], l, state_counts);
    gens.insert(gens.end(), batch.begin(), batch.end());
  }
  return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal flow_network_ideal(const std::vector<int>& capacities, int level) {
  int n = static_cast<int>(capacities.size());
  if (level <= 0)
    return MonomialIdeal(n, {Monomial(std::vector<int>(n, 0))});
  // Minimal states moving `level` units: the compositions of level that
  // respect the line capacities.
  std::vector<Monomial> gens;
  std::vector<int> s(n, 0);
  auto rec = [&](auto&& self, int i, int remaining) -> void {
    if (i == n - 1) {
      if (remaining <= capacities[i]) {
        s[i] = remaining;
        gens.emplace_back(s);
        s[i] = 0;
      }
      return;
    }
    for (int v = 0; v <= std::min(capacities[i], remaining); ++v) {
      s[i] = v;
      self(self, i + 1, remaining - v);
      s[i] = 0;
    }
  };
  if (n > 0) rec(rec, 0, level);
  return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal consecutive_k_out_of_n_ideal(int k, int n) {
  if (k < 1 || k > n) throw Error("need 1 <= k <= n for consecutive windows");
  std::vector<Monomial> gens;
  gens.reserve(n - k + 1);
  for (int start = 0; start + k <= n; ++start) {
    std::vector<int> e(n, 0);
    for (int i = 0; i < k; ++i) e[start + i] = 1;
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal binary_k_out_of_n_ideal(int k, int n) {
  if (k < 1 || k > n) throw Error("need 1 <= k <= n");
  return MonomialIdeal(n,
                       k_subsets_at_level(n, k, 1, std::vector<int>(n, 1)));
}

MonomialIdeal reliability_ideal(const SystemSpec& spec, int level) {
  check_level(spec, level);
  int n = spec.components;
  if (level == 0) return MonomialIdeal(n, {Monomial(std::vector<int>(n, 0))});
  if (level > spec.levels) return MonomialIdeal(n, {});

  if (auto* e = std::get_if<SystemSpec::ExplicitPaths>(&spec.structure)) {
    std::vector<Monomial> gens;
    for (const auto& [j, paths] : e->paths)
      if (j >= level) gens.insert(gens.end(), paths.begin(), paths.end());
    return MonomialIdeal(n, std::move(gens));
  }
  if (auto* k = std::get_if<SystemSpec::MultiStateKOutOfN>(&spec.structure))
    return multistate_k_out_of_n_ideal(k->k, spec.state_counts, level);
  if (std::get_if<SystemSpec::FlowNetwork>(&spec.structure))
    return flow_network_ideal(spec.state_counts, level);
  if (auto* c = std::get_if<SystemSpec::ConsecutiveKOutOfN>(&spec.structure))
    return consecutive_k_out_of_n_ideal(c->k, n);
  auto& b = std::get<SystemSpec::BinaryKOutOfN>(spec.structure);
  return binary_k_out_of_n_ideal(b.k, n);
}

EvalMap EvalMap::direct(const std::vector<int>& state_counts) {
  EvalMap map;
  map.slots.resize(state_counts.size());
  for (std::size_t i = 0; i < state_counts.size(); ++i)
    for (int s = 1; s <= state_counts[i]; ++s)
      map.slots[i].emplace_back(static_cast<int>(i), s);
  return map;
}

EvalMap EvalMap::polarized(const VariableMap& layout) {
  EvalMap map;
  map.slots.resize(layout.target_num_vars);
  for (int b = 0; b < layout.num_bases(); ++b)
    for (int l = 1; l <= layout.slots(b); ++l)
      map.slots[layout.target(b, l)] = {{b, l}};
  return map;
}

EvalMap EvalMap::depolarized(const VariableMap& depolarization_map,
                             const EvalMap& polarized_map) {
  EvalMap map;
  map.slots.resize(depolarization_map.num_bases());
  for (int b = 0; b < depolarization_map.num_bases(); ++b) {
    for (int l = 1; l <= depolarization_map.slots(b); ++l) {
      int target = depolarization_map.target(b, l);
      const auto& entry = polarized_map.slots[target];
      if (entry.size() != 1)
        throw EvaluationError(
            "depolarized slot does not map to a single component state");
      map.slots[b].push_back(entry[0]);
    }
  }
  return map;
}

Rational evaluate(const MultigradedPolynomial& poly,
                  const ProbabilityTable& probs, const EvalMap& map) {
  if (static_cast<int>(map.slots.size()) != poly.num_vars())
    throw EvaluationError("evaluation map does not match the ring");
  Rational total(0);
  std::vector<std::vector<int>> states(probs.point.size());
  for (const auto& [mono, coeff] : poly.terms()) {
    for (auto& s : states) s.clear();
    for (int v = 0; v < mono.num_vars(); ++v) {
      int e = mono[v];
      if (e == 0) continue;
      if (e > static_cast<int>(map.slots[v].size()))
        throw EvaluationError("term consumes more slots than variable " +
                              std::to_string(v) + " provides");
      for (int l = 0; l < e; ++l) {
        auto [component, state] = map.slots[v][l];
        states[component].push_back(state);
      }
    }
    Rational factor(1);
    for (std::size_t i = 0; i < states.size(); ++i) {
      if (states[i].empty()) continue;
      std::sort(states[i].begin(), states[i].end());
      for (std::size_t l = 0; l < states[i].size(); ++l)
        if (states[i][l] != static_cast<int>(l) + 1)
          throw EvaluationError(
              "state slots of component " + std::to_string(i + 1) +
              " do not form a prefix; the polynomial does not specialize");
      factor *= probs.cumulative(static_cast<int>(i),
                                 static_cast<int>(states[i].size()));
    }
    total += coeff * factor;
  }
  return total;
}

Rational evaluate(const MultigradedPolynomial& poly,
                  const ProbabilityTable& probs) {
  std::vector<int> counts;
  counts.reserve(probs.point.size());
  for (const auto& row : probs.point)
    counts.push_back(static_cast<int>(row.size()) - 1);
  return evaluate(poly, probs, EvalMap::direct(counts));
}

Rational reliability(const SystemSpec& spec, const ProbabilityTable& probs,
                     int level) {
  probs.validate(spec);
  MonomialIdeal ideal = reliability_ideal(spec, level);
  return evaluate(hilbert_numerator(ideal), probs);
}

ReliabilityReport full_reliability(const SystemSpec& spec,
                                   const ProbabilityTable& probs) {
  probs.validate(spec);
  ReliabilityReport report;
  HilbertCache cache;
  std::vector<Rational> r(spec.levels + 2, Rational(0));
  for (int j = 1; j <= spec.levels; ++j)
    r[j] = evaluate(hilbert_numerator(reliability_ideal(spec, j), cache), probs);
  for (int j = 1; j <= spec.levels; ++j)
    report.levels.push_back({j, r[j], r[j] - r[j + 1]});
  report.level0_mass = Rational(1) - r[1];
  return report;
}

std::vector<Int> reliability_polynomial(const SystemSpec& spec, int level,
                                        HilbertCache& cache) {
  return hilbert_numerator_graded(reliability_ideal(spec, level), cache);
}

std::vector<Int> reliability_polynomial(const SystemSpec& spec, int level) {
  HilbertCache cache;
  return reliability_polynomial(spec, level, cache);
}

std::vector<BoundStep> reliability_bounds(const SystemSpec& spec,
                                          const ProbabilityTable& probs,
                                          int level, BoundsKind kind) {
  probs.validate(spec);
  MonomialIdeal ideal = reliability_ideal(spec, level);
  if (ideal.is_improper())
    return {{0, Rational(1), true, true}};
  if (ideal.is_zero())
    return {{0, Rational(0), true, true}};

  std::map<int, std::map<Monomial, long>> degrees;
  if (kind == BoundsKind::MayerVietoris) {
    degrees = relevant_multidegrees(mayer_vietoris_tree(ideal));
  } else {
    const auto& gens = ideal.generators();
    if (gens.size() > 22)
      throw LimitExceededError("Taylor ladder limited to 22 generators");
    unsigned r = static_cast<unsigned>(gens.size());
    std::vector<Monomial> sub_lcm(1u << r);
    sub_lcm[0] = Monomial(std::vector<int>(ideal.num_vars(), 0));
    for (unsigned mask = 1; mask < (1u << r); ++mask) {
      unsigned low = mask & (~mask + 1);
      sub_lcm[mask] =
          lcm(sub_lcm[mask & ~low], gens[__builtin_ctz(mask)]);
      ++degrees[__builtin_popcount(mask) - 1][sub_lcm[mask]];
    }
  }

  int max_dim = degrees.empty() ? 0 : degrees.rbegin()->first;
  std::vector<BoundStep> steps;
  Rational partial(0);
  for (int d = 0; d <= max_dim; ++d) {
    auto it = degrees.find(d);
    if (it != degrees.end()) {
      Rational layer(0);
      for (const auto& [mono, count] : it->second)
        layer += Rational(count) *
                 evaluate(MultigradedPolynomial::term(mono), probs);
      partial += (d % 2 == 0) ? layer : -layer;
    }
    steps.push_back({d, partial, d % 2 == 0, d == max_dim});
  }
  return steps;
}

Rational exhaustive_reliability(const SystemSpec& spec,
                                const ProbabilityTable& probs, int level,
                                long long max_states) {
  probs.validate(spec);
  long long total = 1;
  for (int m : spec.state_counts) {
    total *= m + 1;
    if (total > max_states)
      throw LimitExceededError("state space exceeds the exhaustive budget");
  }
  MonomialIdeal ideal = reliability_ideal(spec, level);

  int n = spec.components;
  // Integer weights over a common denominator keep the accumulation exact
  // without per-state rational arithmetic.
  std::vector<std::vector<Int>> weights(n);
  Int denom(1);
  for (int i = 0; i < n; ++i) {
    Int di(1);
    for (const Rational& p : probs.point[i])
      di = boost::multiprecision::lcm(di, denominator(p));
    for (const Rational& p : probs.point[i])
      weights[i].push_back(numerator(p) * (di / denominator(p)));
    denom *= di;
  }

  std::vector<int> state(n, 0);
  std::vector<Int> prefix(n + 1);
  prefix[0] = 1;
  for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] * weights[i][0];

  Int accepted(0);
  for (;;) {
    if (ideal.contains(Monomial(state))) accepted += prefix[n];
    int d = n - 1;
    while (d >= 0 && state[d] == spec.state_counts[d]) state[d--] = 0;
    if (d < 0) break;
    ++state[d];
    for (int i = d; i < n; ++i) prefix[i + 1] = prefix[i] * weights[i][state[i]];
  }
  return Rational(accepted, denom);
}

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

MonteCarloResult monte_carlo_reliability(const SystemSpec& spec,
                                         const ProbabilityTable& probs,
                                         int level, long long trials,
                                         unsigned long long seed) {
  probs.validate(spec);
  if (trials <= 0) throw Error("need a positive number of trials");
  MonomialIdeal ideal = reliability_ideal(spec, level);

  int n = spec.components;
  std::vector<std::vector<double>> cdf(n);
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    for (const Rational& p : probs.point[i]) {
      acc += static_cast<double>(p);
      cdf[i].push_back(acc);
    }
  }

  long long hits = 0;
  std::vector<int> state(n);
  for (long long t = 0; t < trials; ++t) {
    // Counter-based stream: the state depends only on (seed, t).
    std::uint64_t stream = seed ^ (static_cast<std::uint64_t>(t) *
                                   0x9e3779b97f4a7c15ULL);
    for (int i = 0; i < n; ++i) {
      double u = static_cast<double>(splitmix64(stream) >> 11) * 0x1.0p-53;
      int s = 0;
      while (s < spec.state_counts[i] && u >= cdf[i][s]) ++s;
      state[i] = s;
    }
    if (ideal.contains(Monomial(state))) ++hits;
  }
  double estimate = static_cast<double>(hits) / static_cast<double>(trials);
  double se = std::sqrt(estimate * (1.0 - estimate) /
                        static_cast<double>(trials));
  return {estimate, se, trials};
}

namespace {

std::string trimmed(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

int parse_int(const std::string& word, int line) {
  try {
    std::size_t used = 0;
    int v = std::stoi(word, &used);
    if (used != word.size()) throw std::invalid_argument(word);
    return v;
  } catch (const std::exception&) {
    throw FormatError("expected an integer, got '" + word + "'", line);
  }
}

}  // namespace

NamedSystem read_system(std::istream& in) {
  NamedSystem sys;
  sys.spec.components = -1;
  sys.spec.levels = -1;
  std::string line;
  int lineno = 0;
  bool have_family = false;
  int current_paths_level = -1;
  SystemSpec::ExplicitPaths explicit_paths;
  bool have_explicit = false;

  auto need_components = [&](int ln) {
    if (sys.spec.components < 0)
      throw FormatError("components must be declared first", ln);
  };

  while (std::getline(in, line)) {
    ++lineno;
    std::string body = trimmed(line);
    if (body.empty() || body[0] == '#') continue;

    std::istringstream words(body);
    std::string head;
    words >> head;

    if (head == "components:") {
      std::string w;
      words >> w;
      sys.spec.components = parse_int(w, lineno);
      if (sys.spec.components < 1)
        throw FormatError("need at least one component", lineno);
      sys.spec.state_counts.assign(sys.spec.components, 1);
      sys.probs.point.assign(sys.spec.components, {});
      current_paths_level = -1;
      continue;
    }
    if (head == "levels:") {
      std::string w;
      words >> w;
      sys.spec.levels = parse_int(w, lineno);
      if (sys.spec.levels < 1) throw FormatError("need at least one level", lineno);
      current_paths_level = -1;
      continue;
    }
    if (head == "states") {
      need_components(lineno);
      std::string idx, count;
      words >> idx >> count;
      if (idx.empty() || idx.back() != ':')
        throw FormatError("expected 'states i:'", lineno);
      int i = parse_int(idx.substr(0, idx.size() - 1), lineno);
      if (i < 1 || i > sys.spec.components)
        throw FormatError("component index out of range", lineno);
      sys.spec.state_counts[i - 1] = parse_int(count, lineno);
      if (sys.spec.state_counts[i - 1] < 1)
        throw FormatError("component needs at least one working state", lineno);
      current_paths_level = -1;
      continue;
    }
    if (head == "p") {
      need_components(lineno);
      std::string idx;
      words >> idx;
      if (idx.empty() || idx.back() != ':')
        throw FormatError("expected 'p i:'", lineno);
      int i = parse_int(idx.substr(0, idx.size() - 1), lineno);
      if (i < 1 || i > sys.spec.components)
        throw FormatError("component index out of range", lineno);
      std::vector<Rational> row;
      std::string w;
      while (words >> w) row.push_back(parse_rational(w));
      sys.probs.point[i - 1] = std::move(row);
      current_paths_level = -1;
      continue;
    }
    if (head == "family:") {
      need_components(lineno);
      std::string name;
      words >> name;
      if (name == "ms_k_of_n") {
        SystemSpec::MultiStateKOutOfN fam;
        std::string w;
        while (words >> w) fam.k.push_back(parse_int(w, lineno));
        if (fam.k.empty())
          throw FormatError("ms_k_of_n needs k values", lineno);
        sys.spec.structure = std::move(fam);
      } else if (name == "flow") {
        sys.spec.structure = SystemSpec::FlowNetwork{};
      } else if (name == "consecutive") {
        std::string w;
        words >> w;
        sys.spec.structure =
            SystemSpec::ConsecutiveKOutOfN{parse_int(w, lineno)};
      } else if (name == "binary_k_of_n") {
        std::string w;
        words >> w;
        sys.spec.structure = SystemSpec::BinaryKOutOfN{parse_int(w, lineno)};
      } else {
        throw FormatError("unknown family '" + name + "'", lineno);
      }
      have_family = true;
      current_paths_level = -1;
      continue;
    }
    if (head == "paths") {
      need_components(lineno);
      std::string idx;
      words >> idx;
      if (idx.empty() || idx.back() != ':')
        throw FormatError("expected 'paths j:'", lineno);
      current_paths_level = parse_int(idx.substr(0, idx.size() - 1), lineno);
      if (current_paths_level < 1)
        throw FormatError("path level must be at least 1", lineno);
      have_explicit = true;
      explicit_paths.paths[current_paths_level];
      continue;
    }

    // A bare line: a state vector belonging to the open paths block.
    if (current_paths_level < 0)
      throw FormatError("unexpected line '" + body + "'", lineno);
    std::vector<int> state;
    state.push_back(parse_int(head, lineno));
    std::string w;
    while (words >> w) state.push_back(parse_int(w, lineno));
    if (static_cast<int>(state.size()) != sys.spec.components)
      throw FormatError("state vector needs one entry per component", lineno);
    explicit_paths.paths[current_paths_level].emplace_back(std::move(state));
  }

  if (sys.spec.components < 0) throw FormatError("missing 'components:'");
  if (sys.spec.levels < 0) {
    if (auto* k = std::get_if<SystemSpec::MultiStateKOutOfN>(&sys.spec.structure);
        k && have_family)
      sys.spec.levels = static_cast<int>(k->k.size());
    else if (have_explicit && !explicit_paths.paths.empty())
      sys.spec.levels = explicit_paths.paths.rbegin()->first;
    else
      sys.spec.levels = 1;
  }
  if (have_family && have_explicit)
    throw FormatError("a system takes either a family or explicit paths");
  if (have_explicit) sys.spec.structure = std::move(explicit_paths);
  if (!have_family && !have_explicit)
    throw FormatError("missing 'family:' or 'paths j:'");

  if (auto* k = std::get_if<SystemSpec::MultiStateKOutOfN>(&sys.spec.structure))
    if (static_cast<int>(k->k.size()) != sys.spec.levels)
      throw FormatError("ms_k_of_n needs one k value per level");
  for (int i = 0; i < sys.spec.components; ++i)
    if (sys.probs.point[i].empty())
      throw FormatError("missing probabilities for component " +
                        std::to_string(i + 1));
  sys.probs.validate(sys.spec);

  if (auto* e = std::get_if<SystemSpec::ExplicitPaths>(&sys.spec.structure)) {
    for (const auto& [j, paths] : e->paths) {
      if (j > sys.spec.levels)
        throw FormatError("paths block for level above 'levels:'");
      for (const Monomial& s : paths)
        for (int i = 0; i < sys.spec.components; ++i)
          if (s[i] > sys.spec.state_counts[i])
            throw FormatError("path state exceeds component state count");
    }
  }
  return sys;
}

NamedSystem read_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  try {
    return read_system(in);
  } catch (FormatError& e) {
    throw FormatError(path + ":" + std::to_string(e.line()) + ": " + e.what(),
                      e.line());
  }
}

void write_system(std::ostream& out, const NamedSystem& sys) {
  out << "components: " << sys.spec.components << "\n";
  out << "levels: " << sys.spec.levels << "\n";
  for (int i = 0; i < sys.spec.components; ++i)
    out << "states " << i + 1 << ": " << sys.spec.state_counts[i] << "\n";
  for (int i = 0; i < sys.spec.components; ++i) {
    out << "p " << i + 1 << ":";
    for (const Rational& p : sys.probs.point[i])
      out << " " << render_rational(p);
    out << "\n";
  }
  if (auto* k = std::get_if<SystemSpec::MultiStateKOutOfN>(
          &sys.spec.structure)) {
    out << "family: ms_k_of_n";
    for (int v : k->k) out << " " << v;
    out << "\n";
  } else if (std::get_if<SystemSpec::FlowNetwork>(&sys.spec.structure)) {
    out << "family: flow\n";
  } else if (auto* c = std::get_if<SystemSpec::ConsecutiveKOutOfN>(
                 &sys.spec.structure)) {
    out << "family: consecutive " << c->k << "\n";
  } else if (auto* b = std::get_if<SystemSpec::BinaryKOutOfN>(
                 &sys.spec.structure)) {
    out << "family: binary_k_of_n " << b->k << "\n";
  } else {
    const auto& e = std::get<SystemSpec::ExplicitPaths>(sys.spec.structure);
    for (const auto& [j, paths] : e.paths) {
      out << "paths " << j << ":\n";
      for (const Monomial& s : paths) {
        for (int i = 0; i < s.num_vars(); ++i)
          out << (i ? " " : "") << s[i];
        out << "\n";
      }
    }
  }
}

}  // namespace depolar::rel
