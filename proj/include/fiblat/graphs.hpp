#pragma once

// The word graph of Delta_n (vertices: expressions, edges: single relation
// applications) and the local-move graph of Schroeder trees, together with
// the explicit isomorphism check through Phi_n.

#include <algorithm>
#include <deque>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fiblat/errors.hpp"
#include "fiblat/monoid.hpp"
#include "fiblat/schroeder.hpp"

namespace fiblat {

struct MoveGraph {
  enum class Kind { words, trees };

  Kind kind = Kind::words;
  std::vector<Word> word_vertices;           // populated when kind == words
  std::vector<SchroederTree> tree_vertices;  // populated when kind == trees
  std::vector<std::pair<int, int>> edges;    // a < b, sorted, no loops

  std::size_t vertex_count() const {
    return kind == Kind::words ? word_vertices.size() : tree_vertices.size();
  }
};

inline MoveGraph word_graph(MonoidContext const& ctx, int rank_cap = kDefaultRankCap,
                            std::size_t class_cap = kDefaultClassCap) {
  if (ctx.n > rank_cap) {
    throw ResourceLimitError("word graph is capped at rank " + std::to_string(rank_cap) +
                             ", got n=" + std::to_string(ctx.n));
  }
  MoveGraph g;
  g.kind = MoveGraph::Kind::words;
  g.word_vertices = equivalence_class(ctx, ctx.delta_word(), class_cap);
  std::map<Word, int> index;
  for (std::size_t i = 0; i < g.word_vertices.size(); ++i) {
    index.emplace(g.word_vertices[i], static_cast<int>(i));
  }
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < g.word_vertices.size(); ++i) {
    for (RelationSite const& s : relation_sites(ctx, g.word_vertices[i])) {
      int const j = index.at(apply_site(ctx, g.word_vertices[i], s));
      if (static_cast<int>(i) != j) {
        edges.emplace_back(std::min<int>(static_cast<int>(i), j), std::max<int>(static_cast<int>(i), j));
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  g.edges = std::move(edges);
  return g;
}

inline MoveGraph tree_graph(int leaves, int leaf_cap = kDefaultLeafCap) {
  MoveGraph g;
  g.kind = MoveGraph::Kind::trees;
  g.tree_vertices = all_trees(leaves, leaf_cap);
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < g.tree_vertices.size(); ++i) {
    index.emplace(tree_to_compact_string(g.tree_vertices[i]), static_cast<int>(i));
  }
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < g.tree_vertices.size(); ++i) {
    for (LocalMoveSite const& s : local_move_sites(g.tree_vertices[i])) {
      int const j = index.at(tree_to_compact_string(apply_local_move(g.tree_vertices[i], s)));
      if (static_cast<int>(i) != j) {
        edges.emplace_back(std::min<int>(static_cast<int>(i), j), std::max<int>(static_cast<int>(i), j));
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  g.edges = std::move(edges);
  return g;
}

inline bool is_connected(MoveGraph const& g) {
  std::size_t const count = g.vertex_count();
  if (count <= 1) return true;
  std::vector<std::vector<int>> adj(count);
  for (auto const& [a, b] : g.edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  std::vector<bool> seen(count, false);
  std::deque<int> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    int const u = queue.front();
    queue.pop_front();
    for (int v : adj[static_cast<std::size_t>(u)]) {
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = true;
        ++reached;
        queue.push_back(v);
      }
    }
  }
  return reached == count;
}

// Checks that Phi_n maps the local-move graph on trees with n+1 leaves
// vertex- and edge-exactly onto the word graph of Delta_n.
inline bool verify_isomorphism(int n, int rank_cap = kDefaultRankCap,
                               std::size_t class_cap = kDefaultClassCap) {
  if (n < 1) throw DomainError("the graph isomorphism needs n >= 1");
  MoveGraph const words = word_graph(MonoidContext(n), rank_cap, class_cap);
  MoveGraph const trees = tree_graph(n + 1, std::max(kDefaultLeafCap, n + 1));
  if (words.word_vertices.size() != trees.tree_vertices.size()) return false;

  std::map<Word, int> windex;
  for (std::size_t i = 0; i < words.word_vertices.size(); ++i) {
    windex.emplace(words.word_vertices[i], static_cast<int>(i));
  }
  std::vector<int> image(trees.tree_vertices.size(), -1);
  std::vector<bool> hit(words.word_vertices.size(), false);
  for (std::size_t i = 0; i < trees.tree_vertices.size(); ++i) {
    auto it = windex.find(phi(trees.tree_vertices[i], n));
    if (it == windex.end() || hit[static_cast<std::size_t>(it->second)]) return false;
    image[i] = it->second;
    hit[static_cast<std::size_t>(it->second)] = true;
  }
  std::vector<std::pair<int, int>> mapped;
  mapped.reserve(trees.edges.size());
  for (auto const& [a, b] : trees.edges) {
    int const ia = image[static_cast<std::size_t>(a)];
    int const ib = image[static_cast<std::size_t>(b)];
    mapped.emplace_back(std::min(ia, ib), std::max(ia, ib));
  }
  std::sort(mapped.begin(), mapped.end());
  return mapped == words.edges;
}

}  // namespace fiblat
