// Command-line front end: enumerate simples, compute meets/joins, list the
// words of the Garside element, convert between trees and words, export the
// move graphs, dump the counting tables, and run the verification sweep.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource
// limit exceeded.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "fiblat/fiblat.hpp"

namespace {

using namespace fiblat;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

void emit(std::string const& text, std::string const& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw Error("cannot open output file " + output_path);
  out << text;
}

// The lattice data behind the simples/meet/join commands, either computed or
// reloaded from a cache directory keyed by n.
struct LatticeData {
  int n = 0;
  FinitePoset left;
  std::vector<int> odd;
};

LatticeData load_lattice(int n, std::string const& cache_dir) {
  std::filesystem::path const cache_file =
      cache_dir.empty() ? std::filesystem::path{}
                        : std::filesystem::path(cache_dir) / ("simples_" + std::to_string(n) + ".json");
  if (!cache_dir.empty() && std::filesystem::exists(cache_file)) {
    std::ifstream in(cache_file);
    nlohmann::json doc;
    in >> doc;
    CachedLattice cached = lattice_from_json(doc);
    if (cached.n != n) throw Error("cache file " + cache_file.string() + " is for another n");
    return {n, std::move(cached.poset), std::move(cached.odd)};
  }
  SimplesSet const s = enumerate_simples(MonoidContext(n));
  FinitePoset left = build_poset(s, Side::left);
  std::vector<int> odd = odd_ideal_indices(s, left);
  if (!cache_dir.empty()) {
    std::filesystem::create_directories(cache_dir);
    std::ofstream out(cache_file);
    out << simples_to_json(n, left, odd).dump(2) << "\n";
  }
  return {n, std::move(left), std::move(odd)};
}

int find_element(LatticeData const& data, Word const& w) {
  Word const c = canonical(MonoidContext(data.n), w);
  for (int e = 0; e < data.left.size(); ++e) {
    if (data.left.elements[static_cast<std::size_t>(e)].repr == c) return e;
  }
  throw DomainError("\"" + to_string(w) + "\" does not represent a simple of M_" +
                    std::to_string(data.n));
}

int run(int argc, char** argv) {
  CLI::App app{"even/odd Fibonacci lattices of the Garside monoid M_n"};
  app.require_subcommand(1);

  int n = 1;
  int n_max = 6;
  int m = 0;
  int leaves = 1;
  std::string x_text, y_text, word_text, tree_text;
  std::string format = "json";
  std::string kind = "words";
  std::string output_path;
  std::string cache_dir;

  auto* simples_cmd = app.add_subcommand("simples", "enumerate Div(Delta_n) with its Hasse diagram");
  simples_cmd->add_option("--n", n, "rank of the monoid")->required()->check(CLI::Range(1, 8));
  simples_cmd->add_option("--format", format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));
  simples_cmd->add_option("--output", output_path, "write to a file instead of stdout");
  simples_cmd->add_option("--cache", cache_dir, "cache directory keyed by n");

  auto* meet_cmd = app.add_subcommand("meet", "meet of two simples (formula checked against oracle)");
  meet_cmd->add_option("--n", n, "rank")->required()->check(CLI::Range(1, 8));
  meet_cmd->add_option("--x", x_text, "first word, e.g. \"3,3\"")->required();
  meet_cmd->add_option("--y", y_text, "second word")->required();
  meet_cmd->add_option("--cache", cache_dir, "cache directory keyed by n");

  auto* join_cmd = app.add_subcommand("join", "join of two simples (brute-force oracle)");
  join_cmd->add_option("--n", n, "rank")->required()->check(CLI::Range(1, 8));
  join_cmd->add_option("--x", x_text, "first word")->required();
  join_cmd->add_option("--y", y_text, "second word")->required();
  join_cmd->add_option("--cache", cache_dir, "cache directory keyed by n");

  auto* words_cmd = app.add_subcommand("words-of-delta", "all expressions of the Garside element");
  words_cmd->add_option("--n", n, "rank")->required()->check(CLI::Range(1, 8));
  words_cmd->add_option("--output", output_path, "write to a file instead of stdout");

  auto* t2w_cmd = app.add_subcommand("tree-to-word", "post-order label word of a Schroeder tree");
  t2w_cmd->add_option("--m", m, "labelling parameter")->required()->check(CLI::NonNegativeNumber);
  t2w_cmd->add_option("--tree", tree_text, "tree as nested JSON arrays, leaf = []")->required();

  auto* w2t_cmd = app.add_subcommand("word-to-tree", "parse a word back into its tree");
  w2t_cmd->add_option("--m", m, "labelling parameter")->required()->check(CLI::NonNegativeNumber);
  w2t_cmd->add_option("--leaves", leaves, "leaf count of the tree")->required()->check(CLI::PositiveNumber);
  w2t_cmd->add_option("--word", word_text, "word, e.g. \"3,3,3,3\"");

  auto* graph_cmd = app.add_subcommand("graph", "word graph of Delta_n or local-move tree graph");
  graph_cmd->add_option("--kind", kind, "words or trees")->check(CLI::IsMember({"words", "trees"}));
  graph_cmd->add_option("--n", n, "rank (words) or leaf count (trees)")->required()
      ->check(CLI::Range(1, 12));
  graph_cmd->add_option("--format", format, "dot or json")->check(CLI::IsMember({"json", "dot"}));
  graph_cmd->add_option("--output", output_path, "write to a file instead of stdout");

  auto* counts_cmd = app.add_subcommand("counts", "sequence tables (F, A, B, s, word counts)");
  counts_cmd->add_option("--n-max", n_max, "table length")->check(CLI::Range(1, 8));
  counts_cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"json", "csv"}));
  counts_cmd->add_option("--output", output_path, "write to a file instead of stdout");

  auto* verify_cmd = app.add_subcommand("verify", "run the acceptance sweep");
  verify_cmd->add_option("--n-max", n_max, "sweep bound (criteria clamp to their pinned ranges)")
      ->check(CLI::Range(1, 8));

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (simples_cmd->parsed()) {
    LatticeData const data = load_lattice(n, cache_dir);
    if (format == "dot") {
      emit(hasse_to_dot(n, data.left, data.odd), output_path);
    } else {
      emit(simples_to_json(n, data.left, data.odd).dump(2) + "\n", output_path);
    }
    return kExitOk;
  }

  if (meet_cmd->parsed() || join_cmd->parsed()) {
    LatticeData const data = load_lattice(n, cache_dir);
    int const x = find_element(data, word_from_string(x_text));
    int const y = find_element(data, word_from_string(y_text));
    int result = 0;
    if (meet_cmd->parsed()) {
      result = meet_oracle(data.left, x, y);
      int const by_formula = meet_formula(data.left, x, y);
      if (by_formula != result) {
        std::cerr << "meet formula disagrees with the oracle: "
                  << to_string(data.left.elements[static_cast<std::size_t>(by_formula)].repr)
                  << " vs "
                  << to_string(data.left.elements[static_cast<std::size_t>(result)].repr) << "\n";
        return kExitVerification;
      }
    } else {
      result = join_oracle(data.left, x, y);
    }
    std::cout << to_string(data.left.elements[static_cast<std::size_t>(result)].repr) << "\n";
    return kExitOk;
  }

  if (words_cmd->parsed()) {
    MonoidContext const ctx(n);
    std::string text;
    for (Word const& w : equivalence_class(ctx, ctx.delta_word())) {
      text += to_string(w) + "\n";
    }
    emit(text, output_path);
    return kExitOk;
  }

  if (t2w_cmd->parsed()) {
    SchroederTree const t = tree_from_string(tree_text);
    std::cout << to_string(phi(t, m)) << "\n";
    return kExitOk;
  }

  if (w2t_cmd->parsed()) {
    LabelledTree const lt = parse_word(word_from_string(word_text), m, leaves);
    std::cout << tree_to_compact_string(lt.tree) << "\n";
    return kExitOk;
  }

  if (graph_cmd->parsed()) {
    MoveGraph const g = kind == "words" ? word_graph(MonoidContext(n)) : tree_graph(n);
    if (format == "dot") {
      emit(graph_to_dot(g, kind + "_" + std::to_string(n)), output_path);
    } else {
      emit(graph_to_json(g).dump(2) + "\n", output_path);
    }
    return kExitOk;
  }

  if (counts_cmd->parsed()) {
    std::vector<SequenceTable> tables;
    SequenceTable fib{"F", 0, {}, "recurrence"};
    for (int i = 0; i <= 2 * n_max; ++i) fib.values.push_back(fibonacci(i));
    tables.push_back(std::move(fib));
    tables.push_back(a_sequence(n_max));
    tables.push_back(b_sequence(n_max));
    tables.push_back(little_schroeder_recurrence(n_max + 1));
    SequenceTable generated{"s", 0, {}, "generated"};
    for (int k = 0; k <= n_max + 1; ++k) generated.values.push_back(schroeder_tree_count(k + 1));
    tables.push_back(std::move(generated));
    SequenceTable words{"d", 0, {}, "closure"};
    for (int k = 0; k <= n_max; ++k) words.values.push_back(count_words_all_divisors(k));
    tables.push_back(std::move(words));
    if (format == "csv") {
      emit(tables_to_csv(tables), output_path);
    } else {
      emit(tables_to_json(tables).dump(2) + "\n", output_path);
    }
    return kExitOk;
  }

  if (verify_cmd->parsed()) {
    bool all_pass = true;
    for (auto const& r : run_acceptance_criteria(n_max)) {
      std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.name << " ("
                << r.detail << ")\n";
      all_pass = all_pass && r.pass;
    }
    std::cout << (all_pass ? "all criteria passed" : "FAILURES present") << "\n";
    return all_pass ? kExitOk : kExitVerification;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (ResourceLimitError const& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (InvalidWordError const& e) {
    std::cerr << "invalid word: " << e.what() << "\n";
    return kExitUsage;
  } catch (InvalidTreeError const& e) {
    std::cerr << "invalid tree: " << e.what() << "\n";
    return kExitUsage;
  } catch (NotInImageError const& e) {
    std::cerr << "not parseable: " << e.what() << "\n";
    return kExitUsage;
  } catch (DomainError const& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitUsage;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerification;
  }
}
