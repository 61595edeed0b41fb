#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "depolar/betti.hpp"
#include "depolar/depolarization.hpp"
#include "depolar/errors.hpp"
#include "depolar/hilbert.hpp"
#include "depolar/io.hpp"
#include "depolar/polarization.hpp"
#include "depolar/polynomial.hpp"
#include "depolar/reliability.hpp"
#include "depolar/support_poset.hpp"

namespace depolar::cli {

namespace {

std::ostream& open_output(const std::string& path, std::ofstream& file,
                          std::ostream& fallback) {
  if (path.empty() || path == "-") return fallback;
  file.open(path, std::ios::binary);
  if (!file) throw Error("cannot open output file: " + path);
  return file;
}

NamedIdeal load_ideal(const std::string& path) {
  if (path == "-") return read_ideal(std::cin);
  return read_ideal_file(path);
}

// Ensures the squarefree setting the poset operations need.  Non-squarefree
// input is replaced by its polarization, with slot names, and the flag
// reports that the switch happened.
struct SquarefreeInput {
  NamedIdeal named;
  bool polarized = false;
};

SquarefreeInput make_squarefree(NamedIdeal named) {
  if (named.ideal.is_squarefree()) return {std::move(named), false};
  auto [pol, map] = polarize_ideal(named.ideal);
  return {{slot_names(named.names, map), std::move(pol)}, true};
}

int resolve_variable(const std::string& token,
                     const std::vector<std::string>& names) {
  auto it = std::find(names.begin(), names.end(), token);
  if (it != names.end()) return static_cast<int>(it - names.begin());
  if (!token.empty() &&
      std::all_of(token.begin(), token.end(),
                  [](unsigned char c) { return std::isdigit(c); })) {
    int index = std::stoi(token) - 1;  // 1-based on the command line
    if (index >= 0 && index < static_cast<int>(names.size())) return index;
  }
  throw Error("unknown variable '" + token + "'");
}

std::vector<std::string> split_on(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

PathPartition parse_partition(const std::string& spec,
                              const std::vector<std::string>& names) {
  PathPartition partition;
  for (const std::string& block_text : split_on(spec, ';')) {
    std::vector<int> block;
    for (const std::string& token : split_on(block_text, ','))
      if (!token.empty()) block.push_back(resolve_variable(token, names));
    if (!block.empty()) partition.blocks.push_back(std::move(block));
  }
  if (partition.blocks.empty()) throw Error("empty partition specification");
  return partition;
}

std::vector<int> parse_order(const std::string& spec,
                             const std::vector<std::string>& names) {
  std::vector<int> order;
  for (const std::string& token : split_on(spec, ','))
    if (!token.empty()) order.push_back(resolve_variable(token, names));
  return order;
}

std::string block_to_string(const std::vector<int>& block,
                            const std::vector<std::string>& names) {
  std::string text;
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (i > 0) text += ",";
    text += names[block[i]];
  }
  return text;
}

std::string partition_to_string(const PathPartition& partition,
                                const std::vector<std::string>& names) {
  std::string text;
  for (std::size_t b = 0; b < partition.blocks.size(); ++b) {
    if (b > 0) text += " ; ";
    text += block_to_string(partition.blocks[b], names);
  }
  return text;
}

std::string format_ms(double ms) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(3) << ms;
  return out.str();
}

double time_call(const std::function<void()>& fn) {
  auto start = std::chrono::steady_clock::now();
  fn();
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

void cmd_polarize(const std::string& input, std::ostream& os) {
  NamedIdeal named = load_ideal(input);
  auto [pol, map] = polarize_ideal(named.ideal);
  write_ideal(os, {slot_names(named.names, map), pol});
}

void cmd_depolarize(const std::string& input, const std::string& partition_spec,
                    const std::string& order_spec, std::ostream& os) {
  SquarefreeInput in = make_squarefree(load_ideal(input));
  const std::vector<std::string>& names = in.named.names;

  PathPartition partition;
  if (!partition_spec.empty()) {
    partition = parse_partition(partition_spec, names);
  } else {
    std::vector<int> order;
    if (!order_spec.empty()) order = parse_order(order_spec, names);
    partition = min_path_partition(ordered_support_poset(in.named.ideal, order));
  }

  DepolarizationRecord record = depolarize(in.named.ideal, partition);
  std::vector<std::string> block_names =
      default_names(static_cast<int>(record.partition.blocks.size()));
  for (auto& name : block_names) name[0] = 'y';

  if (in.polarized) os << "# input was polarized; blocks refer to its slots\n";
  for (std::size_t b = 0; b < record.partition.blocks.size(); ++b) {
    os << "# block " << block_names[b] << " =";
    for (int v : record.partition.blocks[b]) os << " " << names[v];
    os << "\n";
  }
  write_ideal(os, {block_names, record.ideal});
}

void cmd_support_poset(const std::string& input, const std::string& order_spec,
                       bool dot, bool list_partitions,
                       std::size_t max_partitions, std::ostream& os) {
  SquarefreeInput in = make_squarefree(load_ideal(input));
  const std::vector<std::string>& names = in.named.names;

  if (dot) {
    os << to_dot(support_poset(in.named.ideal), names);
    return;
  }

  std::vector<int> order;
  if (!order_spec.empty()) order = parse_order(order_spec, names);
  OrderedSupportPoset poset = ordered_support_poset(in.named.ideal, order);

  os << "elements:";
  for (int v : poset.vars) os << " " << names[v];
  os << "\n";
  for (std::size_t i = 0; i < poset.vars.size(); ++i) {
    os << "C(" << names[poset.vars[i]] << ") =";
    for (int c : poset.csets[i]) os << " " << names[c];
    os << "\n";
  }
  os << "cover pairs:\n";
  for (auto [u, v] : poset.cover_pairs())
    os << names[u] << " < " << names[v] << "\n";
  os << "width: " << width(poset) << "\n";
  os << "min path partition: "
     << partition_to_string(min_path_partition(poset), names) << "\n";
  if (list_partitions) {
    std::vector<PathPartition> all = all_path_partitions(poset, max_partitions);
    os << "path partitions: " << all.size() << "\n";
    for (const PathPartition& p : all)
      os << partition_to_string(p, names) << "\n";
  }
}

void cmd_enumerate(const std::string& input, const EnumerationOptions& options,
                   bool jsonl, std::ostream& os) {
  SquarefreeInput in = make_squarefree(load_ideal(input));
  DepolarizationEnumeration enumeration =
      enumerate_depolarizations(in.named.ideal, options);

  if (jsonl) {
    os << enumeration_to_jsonl(enumeration, in.named.names);
    return;
  }

  os << "records: " << enumeration.records.size() << "\n";
  std::vector<bool> maximal(enumeration.records.size(), false);
  for (int i : enumeration.maximum_indices) maximal[i] = true;
  for (std::size_t i = 0; i < enumeration.records.size(); ++i) {
    const DepolarizationRecord& record = enumeration.records[i];
    os << "record " << i << ": vars=" << record.ideal.num_vars() << " blocks="
       << partition_to_string(record.partition, in.named.names);
    if (maximal[i]) os << " maximal";
    os << "\n";
  }
  os << "refinements: " << enumeration.refinements.size() << "\n";
  os << "maxima:";
  for (int i : enumeration.maximum_indices) os << " " << i;
  os << "\n";
  if (enumeration.class_orders_truncated)
    os << "note: class orders truncated\n";
}

void cmd_hilbert(const std::string& input, bool graded, std::ostream& os) {
  NamedIdeal named = load_ideal(input);
  if (graded) {
    os << graded_to_string(hilbert_numerator_graded(named.ideal)) << "\n";
  } else {
    os << hilbert_numerator(named.ideal).to_string(named.names) << "\n";
  }
}

void cmd_betti(const std::string& input, int max_gens, bool full,
               std::ostream& os) {
  NamedIdeal named = load_ideal(input);
  BettiTable table = betti_numbers(named.ideal, max_gens);
  os << "totals:";
  for (long b : table.totals()) os << " " << b;
  os << "\n";
  os << "proj dim: " << table.proj_dim() << "\n";
  os << "regularity: " << table.regularity() << "\n";
  os << "graded:\n";
  for (const auto& [key, value] : table.graded())
    os << key.first << " " << key.second << " " << value << "\n";
  if (full) {
    os << "multigraded:\n";
    for (const auto& [key, value] : table.entries)
      os << key.first << " " << monomial_to_string(key.second, named.names)
         << " " << value << "\n";
  }
}

void cmd_quasi_stable(const std::string& input, std::ostream& os) {
  os << (is_quasi_stable(load_ideal(input).ideal) ? "yes" : "no") << "\n";
}

void cmd_reliability(const std::string& input, int level, bool polynomial,
                     bool exhaustive, long long trials,
                     unsigned long long seed, std::ostream& os) {
  rel::NamedSystem system = rel::read_system_file(input);

  if (polynomial) {
    HilbertCache cache;
    if (level > 0) {
      os << graded_to_string(
                rel::reliability_polynomial(system.spec, level, cache), "p")
         << "\n";
    } else {
      os << "level,polynomial\n";
      for (int j = 1; j <= system.spec.levels; ++j)
        os << j << ","
           << graded_to_string(
                  rel::reliability_polynomial(system.spec, j, cache), "p")
           << "\n";
    }
    return;
  }

  if (level > 0) {
    os << render_rational(rel::reliability(system.spec, system.probs, level))
       << "\n";
    if (exhaustive)
      os << "exhaustive = "
         << render_rational(
                rel::exhaustive_reliability(system.spec, system.probs, level))
         << "\n";
    if (trials > 0) {
      rel::MonteCarloResult mc = rel::monte_carlo_reliability(
          system.spec, system.probs, level, trials, seed);
      os << "monte-carlo = " << std::fixed << std::setprecision(6)
         << mc.estimate << " (se = " << mc.std_error << ")\n";
      os.unsetf(std::ios::fixed);
    }
    return;
  }

  rel::ReliabilityReport report =
      rel::full_reliability(system.spec, system.probs);
  for (const rel::LevelReport& lv : report.levels)
    os << "R_" << lv.level << " = " << render_rational(lv.reliability) << "\n";
  os << "r_0 = " << render_rational(report.level0_mass) << "\n";
  for (const rel::LevelReport& lv : report.levels)
    os << "r_" << lv.level << " = " << render_rational(lv.point_mass) << "\n";
}

void cmd_bounds(const std::string& input, int level, const std::string& kind,
                std::ostream& os) {
  rel::NamedSystem system = rel::read_system_file(input);
  rel::BoundsKind bounds_kind = kind == "taylor" ? rel::BoundsKind::Taylor
                                                 : rel::BoundsKind::MayerVietoris;
  for (const rel::BoundStep& step :
       rel::reliability_bounds(system.spec, system.probs, level, bounds_kind)) {
    os << "depth " << step.depth << ": " << render_rational(step.value) << " ("
       << (step.exact ? "exact" : step.upper ? "upper" : "lower") << ")\n";
  }
}

void cmd_bench(const std::vector<int>& ns, const std::vector<int>& ks,
               std::ostream& os) {
  os << "n,k,gens,time_original_ms,time_depolarized_ms,equal\n";
  for (std::size_t i = 0; i < ns.size(); ++i) {
    int n = ns[i], k = ks[i];
    MonomialIdeal original = rel::consecutive_k_out_of_n_ideal(k, n);
    DepolarizationRecord record =
        depolarize(original, min_path_partition(ordered_support_poset(original)));

    MultigradedPolynomial numerator_original, numerator_depolarized;
    HilbertCache cache_original, cache_depolarized;
    double ms_original = time_call([&] {
      numerator_original = hilbert_numerator(original, cache_original);
    });
    double ms_depolarized = time_call([&] {
      numerator_depolarized =
          hilbert_numerator(record.ideal, cache_depolarized);
    });
    bool equal = numerator_original.graded() == numerator_depolarized.graded();

    os << n << "," << k << "," << original.generators().size() << ","
       << format_ms(ms_original) << "," << format_ms(ms_depolarized) << ","
       << (equal ? 1 : 0) << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact algebra for monomial ideals: polarization, support "
               "posets, depolarization, Hilbert series, Betti numbers, and "
               "multi-state system reliability."};
  app.name("depolar");
  app.require_subcommand(1);

  std::string input, output, partition_spec, order_spec, kind = "mvt";
  int level = 0, max_gens = 20;
  bool graded = false, full = false, dot = false, jsonl = false;
  bool list_partitions = false, raw = false, exhaustive = false;
  bool polynomial = false;
  long long trials = 0;
  unsigned long long seed = 1;
  EnumerationOptions enum_options;
  std::vector<int> bench_n, bench_k;

  auto add_io = [&](CLI::App* sub, bool needs_input = true) {
    if (needs_input)
      sub->add_option("input", input, "input file, or - for stdin")
          ->required();
    sub->add_option("-o,--output", output, "output file (default: stdout)");
  };

  CLI::App* polarize = app.add_subcommand(
      "polarize", "replace powers by products of slot variables");
  add_io(polarize);

  CLI::App* depolarize = app.add_subcommand(
      "depolarize", "rewrite along a path partition of the support poset");
  add_io(depolarize);
  depolarize->add_option("--partition", partition_spec,
                         "blocks 'a,b;c' of variable names or 1-based indices "
                         "(default: a minimum path partition)");
  depolarize->add_option("--order", order_spec,
                         "variable order refining the poset, 'z,x,y'");

  CLI::App* poset = app.add_subcommand(
      "support-poset", "C-sets, cover relations, width, path partitions");
  add_io(poset);
  poset->add_option("--order", order_spec, "variable order refining the poset");
  poset->add_flag("--dot", dot, "emit GraphViz instead of text");
  poset->add_flag("--all-partitions", list_partitions,
                  "list every path partition");
  poset->add_option("--max-partitions", enum_options.max_partitions,
                    "partition enumeration budget");

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "all depolarizations over class orders and partitions");
  add_io(enumerate);
  enumerate->add_flag("--jsonl", jsonl, "one JSON object per record");
  enumerate->add_flag("--raw", raw, "keep isomorphic duplicates");
  enumerate->add_option("--max-support", enum_options.max_support,
                        "largest poset size to enumerate");
  enumerate->add_option("--max-class-size", enum_options.max_class_size,
                        "largest class to permute exhaustively");
  enumerate->add_option("--max-partitions", enum_options.max_partitions,
                        "partition enumeration budget");

  CLI::App* hilbert = app.add_subcommand(
      "hilbert", "numerator of the Hilbert series of the ideal");
  add_io(hilbert);
  hilbert->add_flag("--graded", graded, "single grading x_i -> t");

  CLI::App* betti = app.add_subcommand(
      "betti", "Betti numbers, projective dimension, regularity");
  add_io(betti);
  betti->add_option("--max-gens", max_gens,
                    "refuse ideals with more generators than this");
  betti->add_flag("--full", full, "also list multigraded entries");

  CLI::App* quasi = app.add_subcommand(
      "quasi-stable", "test for nested-type (quasi-stable) ideals");
  add_io(quasi);

  CLI::App* reliability = app.add_subcommand(
      "reliability", "exact system reliability from a system file");
  add_io(reliability);
  CLI::Option* level_option = reliability->add_option(
      "--level", level, "system level j (default: report all levels)");
  reliability->add_flag("--polynomial", polynomial,
                        "reliability in one parameter p, Pr(c_i >= s) = p^s");
  reliability->add_flag("--exhaustive", exhaustive,
                        "also print the state-enumeration oracle")
      ->needs(level_option);
  reliability->add_option("--trials", trials,
                          "Monte Carlo cross-check sample count")
      ->needs(level_option);
  reliability->add_option("--seed", seed, "Monte Carlo seed");

  CLI::App* bounds = app.add_subcommand(
      "bounds", "truncation bounds ladder for a system level");
  add_io(bounds);
  bounds->add_option("--level", level, "system level j")->required();
  bounds->add_option("--kind", kind, "mvt or taylor")
      ->check(CLI::IsMember({"mvt", "taylor"}));

  CLI::App* bench = app.add_subcommand(
      "bench", "consecutive k-of-n Hilbert timing, original vs depolarized");
  add_io(bench, false);
  bench->add_option("--n", bench_n, "component counts")
      ->delimiter(',')
      ->required();
  bench->add_option("--k", bench_k, "run lengths")->delimiter(',')->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);

    std::ofstream file;
    std::ostream& os = open_output(output, file, out);

    if (*polarize) cmd_polarize(input, os);
    if (*depolarize) cmd_depolarize(input, partition_spec, order_spec, os);
    if (*poset)
      cmd_support_poset(input, order_spec, dot, list_partitions,
                        enum_options.max_partitions, os);
    if (*enumerate) {
      enum_options.dedup = !raw;
      cmd_enumerate(input, enum_options, jsonl, os);
    }
    if (*hilbert) cmd_hilbert(input, graded, os);
    if (*betti) cmd_betti(input, max_gens, full, os);
    if (*quasi) cmd_quasi_stable(input, os);
    if (*reliability)
      cmd_reliability(input, level, polynomial, exhaustive, trials, seed, os);
    if (*bounds) cmd_bounds(input, level, kind, os);
    if (*bench) {
      if (bench_n.size() != bench_k.size())
        throw CLI::ValidationError("--n and --k need the same number of entries");
      cmd_bench(bench_n, bench_k, os);
    }
    os.flush();
    if (!os) throw Error("failed writing output");
    return 0;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace depolar::cli
