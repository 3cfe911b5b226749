#pragma once

// Wire formats: words as comma-separated strings or integer arrays, trees as
// nested JSON arrays (leaf = []), the simples/Hasse/odd-ideal JSON document,
// DOT exports, and CSV/JSON sequence tables. All outputs are deterministic.

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fiblat/errors.hpp"
#include "fiblat/graphs.hpp"
#include "fiblat/lattice.hpp"
#include "fiblat/monoid.hpp"
#include "fiblat/schroeder.hpp"
#include "fiblat/sequences.hpp"
#include "fiblat/simples.hpp"

namespace fiblat {

inline nlohmann::json word_to_json(Word const& w) { return nlohmann::json(w); }

inline Word word_from_json(nlohmann::json const& j) {
  if (!j.is_array()) throw InvalidWordError("a word must be a JSON array of integers");
  Word out;
  for (auto const& x : j) {
    if (!x.is_number_integer()) throw InvalidWordError("a word must be a JSON array of integers");
    out.push_back(x.get<int>());
  }
  return out;
}

inline nlohmann::json tree_to_json(SchroederTree const& t) {
  nlohmann::json j = nlohmann::json::array();
  for (auto const& c : t.children) j.push_back(tree_to_json(c));
  return j;
}

inline SchroederTree tree_from_json(nlohmann::json const& j) {
  if (!j.is_array()) throw InvalidTreeError("a tree must be a JSON array (leaf = [])");
  if (j.empty()) return leaf();
  if (j.size() < 2) {
    throw InvalidTreeError("an inner vertex needs at least two children, got " +
                           std::to_string(j.size()));
  }
  std::vector<SchroederTree> kids;
  kids.reserve(j.size());
  for (auto const& c : j) kids.push_back(tree_from_json(c));
  return node(std::move(kids));
}

inline SchroederTree tree_from_string(std::string const& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InvalidTreeError("unparseable tree literal: " + text);
  return tree_from_json(j);
}

// {"n": ..., "elements": [{"word": "3,1", "d": 1}, ...],
//  "hasse": [[from, to], ...], "odd": [indices]}
inline nlohmann::json simples_to_json(int n, FinitePoset const& left,
                                      std::vector<int> const& odd) {
  nlohmann::json j;
  j["n"] = n;
  j["elements"] = nlohmann::json::array();
  for (Simple const& e : left.elements) {
    j["elements"].push_back({{"word", to_string(e.repr)}, {"d", e.dvalue}});
  }
  j["hasse"] = nlohmann::json::array();
  for (auto const& [a, b] : left.hasse) j["hasse"].push_back({a, b});
  j["odd"] = odd;
  return j;
}

inline nlohmann::json simples_to_json(SimplesSet const& s, FinitePoset const& left,
                                      std::vector<int> const& odd) {
  return simples_to_json(s.context.n, left, odd);
}

// A lattice reloaded from the simples JSON document; enough to answer the
// same poset queries without re-enumerating.
struct CachedLattice {
  int n = 0;
  FinitePoset poset;
  std::vector<int> odd;
};

inline CachedLattice lattice_from_json(nlohmann::json const& j) {
  CachedLattice out;
  if (!j.contains("n") || !j.contains("elements") || !j.contains("hasse")) {
    throw Error("simples document needs the fields n, elements, hasse");
  }
  out.n = j.at("n").get<int>();
  std::size_t const count = j.at("elements").size();
  out.poset.elements.reserve(count);
  for (auto const& e : j.at("elements")) {
    out.poset.elements.push_back(
        Simple{word_from_string(e.at("word").get<std::string>()), e.at("d").get<int>()});
  }
  out.poset.below.assign(count, detail::Bitset(count));
  out.poset.above.assign(count, detail::Bitset(count));
  for (std::size_t e = 0; e < count; ++e) {
    out.poset.below[e].set(e);
    out.poset.above[e].set(e);
  }
  for (auto const& edge : j.at("hasse")) {
    out.poset.hasse.emplace_back(edge.at(0).get<int>(), edge.at(1).get<int>());
  }
  // Transitive closure over the cover relation, in cover order: hasse pairs
  // (a, b) always point upward, so sweeping them repeatedly until stable is
  // cheap at these sizes.
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto const& [a, b] : out.poset.hasse) {
      auto const sa = static_cast<std::size_t>(a);
      auto const sb = static_cast<std::size_t>(b);
      detail::Bitset merged = out.poset.below[sb];
      merged |= out.poset.below[sa];
      if (!(merged == out.poset.below[sb])) {
        out.poset.below[sb] = std::move(merged);
        changed = true;
      }
    }
  }
  for (std::size_t y = 0; y < count; ++y) {
    out.poset.below[y].for_each([&](std::size_t x) { out.poset.above[x].set(y); });
  }
  if (j.contains("odd")) out.odd = j.at("odd").get<std::vector<int>>();
  return out;
}

// Hasse diagram as a DOT digraph; odd-ideal members carry odd=true.
inline std::string hasse_to_dot(int n, FinitePoset const& left, std::vector<int> const& odd) {
  std::vector<bool> is_odd(left.elements.size(), false);
  for (int e : odd) is_odd[static_cast<std::size_t>(e)] = true;
  std::string out = "digraph simples_" + std::to_string(n) + " {\n  rankdir=BT;\n";
  for (std::size_t e = 0; e < left.elements.size(); ++e) {
    out += "  v" + std::to_string(e) + " [label=\"" + to_string(left.elements[e].repr) + "\"";
    if (is_odd[e]) out += ", odd=true, color=blue";
    out += "];\n";
  }
  for (auto const& [a, b] : left.hasse) {
    out += "  v" + std::to_string(a) + " -> v" + std::to_string(b) + ";\n";
  }
  out += "}\n";
  return out;
}

inline std::string hasse_to_dot(SimplesSet const& s, FinitePoset const& left,
                                std::vector<int> const& odd) {
  return hasse_to_dot(s.context.n, left, odd);
}

inline nlohmann::json graph_to_json(MoveGraph const& g) {
  nlohmann::json j;
  j["kind"] = g.kind == MoveGraph::Kind::words ? "words" : "trees";
  j["vertices"] = nlohmann::json::array();
  if (g.kind == MoveGraph::Kind::words) {
    for (Word const& w : g.word_vertices) j["vertices"].push_back(word_to_json(w));
  } else {
    for (SchroederTree const& t : g.tree_vertices) j["vertices"].push_back(tree_to_json(t));
  }
  j["edges"] = nlohmann::json::array();
  for (auto const& [a, b] : g.edges) j["edges"].push_back({a, b});
  return j;
}

inline std::string graph_to_dot(MoveGraph const& g, std::string const& name = "moves") {
  std::string out = "graph " + name + " {\n";
  std::size_t const count = g.vertex_count();
  for (std::size_t i = 0; i < count; ++i) {
    std::string const label = g.kind == MoveGraph::Kind::words
                                  ? to_string(g.word_vertices[i])
                                  : tree_to_compact_string(g.tree_vertices[i]);
    out += "  v" + std::to_string(i) + " [label=\"" + label + "\"];\n";
  }
  for (auto const& [a, b] : g.edges) {
    out += "  v" + std::to_string(a) + " -- v" + std::to_string(b) + ";\n";
  }
  out += "}\n";
  return out;
}

inline std::string tables_to_csv(std::vector<SequenceTable> const& tables) {
  std::string out = "name,index,value,provenance\n";
  for (SequenceTable const& t : tables) {
    for (std::size_t k = 0; k < t.values.size(); ++k) {
      out += t.name + "," + std::to_string(t.start_index + static_cast<int>(k)) + "," +
             std::to_string(t.values[k]) + "," + t.provenance + "\n";
    }
  }
  return out;
}

inline nlohmann::json tables_to_json(std::vector<SequenceTable> const& tables) {
  nlohmann::json j = nlohmann::json::array();
  for (SequenceTable const& t : tables) {
    j.push_back({{"name", t.name},
                 {"start", t.start_index},
                 {"values", t.values},
                 {"provenance", t.provenance}});
  }
  return j;
}

}  // namespace fiblat
