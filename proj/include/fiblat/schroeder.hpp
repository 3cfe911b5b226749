#pragma once

// Schroeder trees (rooted plane trees whose inner vertices have >= 2
// children), the post-order labelling L_m, the tree-to-word map Phi_m and its
// inverse parser, and the local moves that mirror the defining relation of
// M_m on label words.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "fiblat/errors.hpp"
#include "fiblat/monoid.hpp"

namespace fiblat {

inline constexpr int kDefaultLeafCap = 12;

struct SchroederTree {
  std::vector<SchroederTree> children;  // empty = leaf, otherwise >= 2 entries

  bool is_leaf() const { return children.empty(); }

  friend bool operator==(SchroederTree const&, SchroederTree const&) = default;
};

inline SchroederTree leaf() { return {}; }

inline SchroederTree node(std::vector<SchroederTree> children) {
  if (children.size() < 2) {
    throw InvalidTreeError("an inner vertex needs at least two children, got " +
                           std::to_string(children.size()));
  }
  return SchroederTree{std::move(children)};
}

inline int leaf_count(SchroederTree const& t) {
  if (t.is_leaf()) return 1;
  int s = 0;
  for (auto const& c : t.children) s += leaf_count(c);
  return s;
}

inline int vertex_count(SchroederTree const& t) {
  int s = 1;
  for (auto const& c : t.children) s += vertex_count(c);
  return s;
}

// Compact bracket form: leaf = "[]", node = "[child,child,...]". This matches
// the JSON wire format for trees, e.g. bush(3) = "[[],[],[]]".
inline std::string tree_to_compact_string(SchroederTree const& t) {
  if (t.is_leaf()) return "[]";
  std::string out = "[";
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (i) out += ',';
    out += tree_to_compact_string(t.children[i]);
  }
  out += ']';
  return out;
}

// ---- named shapes ----

// Depth-one tree whose root's children are all leaves; the single leaf for
// leaves = 1.
inline SchroederTree bush(int leaves) {
  if (leaves < 1) throw DomainError("a tree needs at least one leaf");
  if (leaves == 1) return leaf();
  return node(std::vector<SchroederTree>(static_cast<std::size_t>(leaves)));
}

inline SchroederTree left_comb(int leaves) {
  if (leaves < 1) throw DomainError("a tree needs at least one leaf");
  SchroederTree t = leaf();
  for (int i = 1; i < leaves; ++i) t = node({std::move(t), leaf()});
  return t;
}

inline SchroederTree right_comb(int leaves) {
  if (leaves < 1) throw DomainError("a tree needs at least one leaf");
  SchroederTree t = leaf();
  for (int i = 1; i < leaves; ++i) t = node({leaf(), std::move(t)});
  return t;
}

// ---- generation ----

namespace detail {

// Compositions of `total` into >= min_parts positive parts, lexicographically.
template <typename Fn>
void for_each_composition(int total, int min_parts, Fn&& fn) {
  std::vector<int> parts;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      if (static_cast<int>(parts.size()) >= min_parts) fn(parts);
      return;
    }
    for (int first = 1; first <= remaining; ++first) {
      parts.push_back(first);
      self(self, remaining - first);
      parts.pop_back();
    }
  };
  rec(rec, total);
}

using TreeSink = std::function<void(SchroederTree const&)>;

inline void for_each_tree_unchecked(int leaves, TreeSink const& fn) {
  if (leaves == 1) {
    fn(leaf());
    return;
  }
  for_each_composition(leaves, 2, [&](std::vector<int> const& parts) {
    std::vector<SchroederTree> kids(parts.size());
    auto fill = [&](auto&& self, std::size_t i) -> void {
      if (i == parts.size()) {
        fn(SchroederTree{kids});
        return;
      }
      for_each_tree_unchecked(parts[i], TreeSink([&](SchroederTree const& t) {
                                kids[i] = t;
                                self(self, i + 1);
                              }));
    };
    fill(fill, 0);
  });
}

}  // namespace detail

// Streams every Schroeder tree with the given leaf count exactly once, in the
// deterministic order induced by lexicographic root compositions.
template <typename Fn>
void for_each_tree(int leaves, Fn&& fn, int cap = kDefaultLeafCap) {
  if (leaves < 1) throw DomainError("a tree needs at least one leaf");
  if (leaves > cap) {
    throw ResourceLimitError("tree generation is capped at " + std::to_string(cap) +
                             " leaves, got " + std::to_string(leaves));
  }
  detail::for_each_tree_unchecked(leaves,
                                  detail::TreeSink([&](SchroederTree const& t) { fn(t); }));
}

inline std::vector<SchroederTree> all_trees(int leaves, int cap = kDefaultLeafCap) {
  std::vector<SchroederTree> out;
  for_each_tree(leaves, [&](SchroederTree const& t) { out.push_back(t); }, cap);
  return out;
}

// ---- labelling ----

struct LabelledTree {
  SchroederTree tree;
  std::vector<int> labels;  // one per vertex in post-order; only the last (root) may be 0
  int m = 0;
};

// Labels a tree by the parameter m >= leaves - 1: a leftmost child gets the
// leaf count of its right-sibling forest, every other vertex gets m minus the
// label sum of its leftmost-descendant chain.
inline LabelledTree label(SchroederTree const& t, int m) {
  int const size = leaf_count(t);
  if (m < size - 1) {
    throw DomainError("labelling needs m >= leaves-1; got m=" + std::to_string(m) + " for " +
                      std::to_string(size) + " leaves");
  }
  std::vector<int> labels;
  labels.reserve(static_cast<std::size_t>(vertex_count(t)));
  // Post-order visit returning (label, chain sum) of the subtree root, where
  // the chain sum is the label total over the leftmost-descendant chain.
  auto visit = [&](auto&& self, SchroederTree const& v, bool is_leftmost,
                   int right_leaves) -> std::pair<int, int> {
    int chain = 0;
    if (!v.is_leaf()) {
      int rl = 0;
      for (std::size_t j = 1; j < v.children.size(); ++j) rl += leaf_count(v.children[j]);
      auto [first_label, first_chain] = self(self, v.children[0], true, rl);
      chain = first_label + first_chain;
      for (std::size_t j = 1; j < v.children.size(); ++j) self(self, v.children[j], false, 0);
    }
    int lab = is_leftmost ? right_leaves : m - chain;
    labels.push_back(lab);
    return {lab, chain};
  };
  visit(visit, t, false, 0);
  return {t, std::move(labels), m};
}

inline long long label_weight(LabelledTree const& lt) {
  long long s = 0;
  for (int x : lt.labels) s += x;
  return s;
}

// Post-order flags: flags[r] is true iff the vertex of rank r is the leftmost
// child of its parent.
inline std::vector<bool> leftmost_child_flags(SchroederTree const& t) {
  std::vector<bool> flags;
  flags.reserve(static_cast<std::size_t>(vertex_count(t)));
  auto visit = [&](auto&& self, SchroederTree const& v, bool is_leftmost) -> void {
    for (std::size_t j = 0; j < v.children.size(); ++j) self(self, v.children[j], j == 0);
    flags.push_back(is_leftmost);
  };
  visit(visit, t, false);
  return flags;
}

// Post-order reading of L_m(t) with zero labels dropped (rho_0 = identity).
// A word for rho_{k-1} (rho_m)^{k-1} rho_{m-k+1} in M_m, k = leaf count.
inline Word phi(SchroederTree const& t, int m) {
  LabelledTree lt = label(t, m);
  Word w;
  w.reserve(lt.labels.size());
  for (int x : lt.labels) {
    if (x != 0) w.push_back(x);
  }
  return w;
}

// ---- parsing (inverse of phi) ----

namespace detail {

// Parses the half-open label range [lo, hi) of W as one Schroeder tree with
// the given leaf count. last_override, when >= 0, replaces W[hi-1]: it
// carries the "corrected" root label of a first subtree. Follows the
// injectivity proof: walk the leftmost branch accumulating labels until the
// running sum hits the target (leaves-1 for the first subtree, m for the
// others), skipping each chain vertex's right forest by its weight m*label.
inline SchroederTree parse_labels(std::vector<int> const& W, std::size_t lo, std::size_t hi,
                                  int m, int n_leaves, int last_override) {
  auto at = [&](std::size_t idx) -> int {
    return (idx == hi - 1 && last_override >= 0) ? last_override : W[idx];
  };
  if (hi <= lo) throw NotInImageError("empty label block");
  std::size_t const len = hi - lo;
  long long total = 0;
  for (std::size_t i = lo; i < hi; ++i) total += at(i);
  if (n_leaves == 1) {
    if (len != 1 || at(lo) != m) {
      throw NotInImageError("a single leaf must carry the label " + std::to_string(m));
    }
    return leaf();
  }
  if (m <= 0 || total != static_cast<long long>(n_leaves) * m) {
    throw NotInImageError("label weight " + std::to_string(total) + " does not match " +
                          std::to_string(n_leaves) + "*" + std::to_string(m));
  }

  // Scans a leftmost branch from `from`, staying below `limit`; returns the
  // index of the chain vertex at which the running label sum reaches target.
  auto scan_chain = [&](std::size_t from, std::size_t limit, long long target) -> std::size_t {
    long long chain = 0;
    std::size_t pos = from;
    for (;;) {
      if (pos >= limit) throw NotInImageError("label scan ran past the block");
      int const w = at(pos);
      if (w <= 0) throw NotInImageError("nonpositive label inside a subtree");
      chain += w;
      if (chain == target) return pos;
      if (chain > target) throw NotInImageError("chain sum overshoots its target");
      long long const forest = static_cast<long long>(m) * w;
      long long acc = 0;
      std::size_t q = pos + 1;
      while (acc < forest) {
        if (q >= limit) throw NotInImageError("forest scan ran past the block");
        if (at(q) <= 0) throw NotInImageError("nonpositive label inside a forest");
        acc += at(q);
        ++q;
      }
      if (acc != forest) throw NotInImageError("forest weight mismatch");
      pos = q;
    }
  };

  int const root_label = at(hi - 1);
  if (root_label < 0) throw NotInImageError("negative root label");

  // First subtree: chain labels are leaf counts summing to n_leaves - 1; its
  // standalone root label is the in-tree label plus the root label.
  std::size_t const t1_end = scan_chain(lo, hi - 1, n_leaves - 1);
  long long w1 = root_label;
  for (std::size_t i = lo; i <= t1_end; ++i) w1 += at(i);
  if (w1 % m != 0) throw NotInImageError("first subtree weight is not a multiple of m");
  int const n1 = static_cast<int>(w1 / m);
  std::vector<SchroederTree> kids;
  kids.push_back(parse_labels(W, lo, t1_end + 1, m, n1, at(t1_end) + root_label));

  // Remaining subtrees: chain sums reach m exactly (their roots are not
  // leftmost children), no correction.
  int leaves_seen = n1;
  std::size_t cursor = t1_end + 1;
  while (cursor < hi - 1) {
    std::size_t const end_i = scan_chain(cursor, hi - 1, m);
    long long wi = 0;
    for (std::size_t i = cursor; i <= end_i; ++i) wi += at(i);
    if (wi % m != 0) throw NotInImageError("subtree weight is not a multiple of m");
    int const ni = static_cast<int>(wi / m);
    kids.push_back(parse_labels(W, cursor, end_i + 1, m, ni, -1));
    leaves_seen += ni;
    cursor = end_i + 1;
  }
  if (kids.size() < 2 || leaves_seen != n_leaves) {
    throw NotInImageError("subtree leaf counts do not assemble to " + std::to_string(n_leaves));
  }
  return SchroederTree{std::move(kids)};
}

}  // namespace detail

// Reconstructs the unique tree with phi(tree, m) == w. The dropped zero root
// label (possible only when m = leaves - 1) is reattached by trying both
// readings; at most one can succeed since Phi_m is injective.
inline LabelledTree parse_word(Word const& w, int m, int leaves) {
  if (leaves < 1) throw DomainError("a tree needs at least one leaf");
  if (m < leaves - 1) {
    throw DomainError("no labelling with m=" + std::to_string(m) + " for " +
                      std::to_string(leaves) + " leaves");
  }
  for (Letter x : w) {
    if (x < 1 || x > m) {
      throw InvalidWordError("letter " + std::to_string(x) + " is outside {1.." +
                             std::to_string(m) + "}");
    }
  }
  std::vector<std::vector<int>> attempts;
  attempts.emplace_back(w.begin(), w.end());
  if (m == leaves - 1) {
    attempts.push_back(attempts.front());
    attempts.back().push_back(0);
  }
  for (auto const& labels : attempts) {
    if (labels.empty()) continue;
    try {
      SchroederTree t = detail::parse_labels(labels, 0, labels.size(), m, leaves, -1);
      LabelledTree lt = label(t, m);
      if (phi(t, m) == w) return lt;
    } catch (NotInImageError const&) {
      // fall through to the other reading
    }
  }
  throw NotInImageError("\"" + to_string(w) + "\" is not the label word of a Schroeder tree with " +
                        std::to_string(leaves) + " leaves at m=" + std::to_string(m));
}

// ---- local moves ----

// A contract site names (by post-order rank) a non-root vertex r1 with
// exactly two children whose second child is a leaf; the move splices r1's
// children into its parent. An expand site names a child followed by a leaf
// sibling under a parent with >= 3 children; the move wraps the pair.
struct LocalMoveSite {
  int vertex = 0;  // post-order rank of r1 (contract) / of the wrapped child (expand)
  MoveKind direction = MoveKind::contract;

  friend bool operator==(LocalMoveSite const&, LocalMoveSite const&) = default;
};

inline std::vector<LocalMoveSite> local_move_sites(SchroederTree const& t) {
  std::vector<LocalMoveSite> out;
  int rank = 0;
  auto visit = [&](auto&& self, SchroederTree const& v) -> int {
    std::vector<int> kid_ranks;
    kid_ranks.reserve(v.children.size());
    for (auto const& c : v.children) kid_ranks.push_back(self(self, c));
    std::size_t const k = v.children.size();
    for (std::size_t j = 0; j < k; ++j) {
      auto const& c = v.children[j];
      if (!c.is_leaf() && c.children.size() == 2 && c.children[1].is_leaf()) {
        out.push_back({kid_ranks[j], MoveKind::contract});
      }
      if (k >= 3 && j + 1 < k && v.children[j + 1].is_leaf()) {
        out.push_back({kid_ranks[j], MoveKind::expand});
      }
    }
    return rank++;
  };
  visit(visit, t);
  std::sort(out.begin(), out.end(), [](LocalMoveSite const& a, LocalMoveSite const& b) {
    if (a.vertex != b.vertex) return a.vertex < b.vertex;
    return a.direction == MoveKind::contract && b.direction == MoveKind::expand;
  });
  return out;
}

inline SchroederTree apply_local_move(SchroederTree const& t, LocalMoveSite const& site) {
  auto const sites = local_move_sites(t);
  if (std::find(sites.begin(), sites.end(), site) == sites.end()) {
    throw InvalidSiteError("no " +
                           std::string(site.direction == MoveKind::contract ? "contract" : "expand") +
                           " site at post-order rank " + std::to_string(site.vertex));
  }
  int rank = 0;
  auto rebuild = [&](auto&& self, SchroederTree const& v) -> std::pair<int, SchroederTree> {
    std::vector<SchroederTree> kids;
    std::vector<int> kid_ranks;
    kids.reserve(v.children.size());
    for (auto const& c : v.children) {
      auto [r, copy] = self(self, c);
      kid_ranks.push_back(r);
      kids.push_back(std::move(copy));
    }
    for (std::size_t j = 0; j < kid_ranks.size(); ++j) {
      if (kid_ranks[j] != site.vertex) continue;
      if (site.direction == MoveKind::contract) {
        std::vector<SchroederTree> grand = std::move(kids[j].children);
        kids.erase(kids.begin() + static_cast<std::ptrdiff_t>(j));
        kids.insert(kids.begin() + static_cast<std::ptrdiff_t>(j),
                    std::make_move_iterator(grand.begin()), std::make_move_iterator(grand.end()));
      } else {
        SchroederTree wrapped = node({std::move(kids[j]), std::move(kids[j + 1])});
        kids.erase(kids.begin() + static_cast<std::ptrdiff_t>(j),
                   kids.begin() + static_cast<std::ptrdiff_t>(j) + 2);
        kids.insert(kids.begin() + static_cast<std::ptrdiff_t>(j), std::move(wrapped));
      }
      break;
    }
    return {rank++, SchroederTree{std::move(kids)}};
  };
  return rebuild(rebuild, t).second;
}

// True iff the local-move graph on all trees with the given leaf count is
// connected (breadth-first search from the bush).
inline bool connectivity_check(int leaves, int cap = kDefaultLeafCap) {
  std::vector<SchroederTree> trees = all_trees(leaves, cap);
  std::vector<std::string> keys;
  keys.reserve(trees.size());
  for (auto const& t : trees) keys.push_back(tree_to_compact_string(t));
  std::vector<std::string> sorted_keys = keys;
  std::sort(sorted_keys.begin(), sorted_keys.end());
  auto index_of = [&](std::string const& k) {
    return static_cast<std::size_t>(
        std::lower_bound(sorted_keys.begin(), sorted_keys.end(), k) - sorted_keys.begin());
  };
  std::vector<bool> seen(trees.size(), false);
  std::vector<SchroederTree> queue{bush(leaves)};
  seen[index_of(tree_to_compact_string(queue.front()))] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    SchroederTree u = std::move(queue.back());
    queue.pop_back();
    for (LocalMoveSite const& s : local_move_sites(u)) {
      SchroederTree v = apply_local_move(u, s);
      std::size_t const i = index_of(tree_to_compact_string(v));
      if (!seen[i]) {
        seen[i] = true;
        ++reached;
        queue.push_back(std::move(v));
      }
    }
  }
  return reached == trees.size();
}

}  // namespace fiblat
