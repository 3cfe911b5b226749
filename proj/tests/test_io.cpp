#include <catch2/catch_amalgamated.hpp>

#include "fiblat/io.hpp"

using namespace fiblat;

TEST_CASE("tree json round trip", "[io]") {
  CHECK(tree_to_json(bush(3)).dump() == "[[],[],[]]");
  CHECK(tree_from_string("[[],[],[]]") == bush(3));
  CHECK(tree_from_string("[]") == leaf());
  CHECK(tree_from_json(tree_to_json(left_comb(4))) == left_comb(4));
  CHECK_THROWS_AS(tree_from_string("[[]]"), InvalidTreeError);
  CHECK_THROWS_AS(tree_from_string("[[],"), InvalidTreeError);
  CHECK_THROWS_AS(tree_from_string("{\"a\":1}"), InvalidTreeError);
}

TEST_CASE("simples document", "[io]") {
  auto const s = enumerate_simples(MonoidContext(3));
  auto const left = build_poset(s, Side::left);
  auto const odd = odd_ideal_indices(s, left);
  auto const doc = simples_to_json(s, left, odd);

  CHECK(doc.at("n") == 3);
  CHECK(doc.at("elements").size() == 21);
  CHECK(doc.at("hasse").size() == 29);
  CHECK(doc.at("odd").size() == 13);
  CHECK(doc.at("elements")[0].at("word") == "");
  CHECK(doc.at("elements")[0].at("d") == 0);

  // byte-identical across runs
  auto const s2 = enumerate_simples(MonoidContext(3));
  auto const left2 = build_poset(s2, Side::left);
  CHECK(simples_to_json(s2, left2, odd_ideal_indices(s2, left2)).dump() == doc.dump());
}

TEST_CASE("a reloaded document answers the same poset queries", "[io]") {
  auto const s = enumerate_simples(MonoidContext(3));
  auto const left = build_poset(s, Side::left);
  auto const odd = odd_ideal_indices(s, left);
  auto const cached = lattice_from_json(simples_to_json(s, left, odd));

  REQUIRE(cached.poset.size() == left.size());
  for (int x = 0; x < left.size(); ++x) {
    for (int y = 0; y < left.size(); ++y) {
      CHECK(cached.poset.less_eq(x, y) == left.less_eq(x, y));
      CHECK(meet_oracle(cached.poset, x, y) == meet_oracle(left, x, y));
      CHECK(join_oracle(cached.poset, x, y) == join_oracle(left, x, y));
    }
  }
  CHECK(cached.odd == odd);
}

TEST_CASE("hasse dot export", "[io]") {
  auto const s = enumerate_simples(MonoidContext(1));
  auto const left = build_poset(s, Side::left);
  auto const odd = odd_ideal_indices(s, left);
  CHECK(hasse_to_dot(s, left, odd) ==
        "digraph simples_1 {\n"
        "  rankdir=BT;\n"
        "  v0 [label=\"\", odd=true, color=blue];\n"
        "  v1 [label=\"1\", odd=true, color=blue];\n"
        "  v2 [label=\"1,1\"];\n"
        "  v0 -> v1;\n"
        "  v1 -> v2;\n"
        "}\n");
}

TEST_CASE("graph exports", "[io]") {
  auto const g = word_graph(MonoidContext(2));
  auto const j = graph_to_json(g);
  CHECK(j.at("kind") == "words");
  CHECK(j.at("vertices").size() == 3);
  CHECK(j.at("edges").size() == g.edges.size());
  CHECK(j.at("vertices")[0] == nlohmann::json({2, 2, 2}));

  CHECK(graph_to_dot(g, "words_2") ==
        "graph words_2 {\n"
        "  v0 [label=\"2,2,2\"];\n"
        "  v1 [label=\"1,2,1,2\"];\n"
        "  v2 [label=\"2,1,2,1\"];\n"
        "  v0 -- v1;\n"
        "  v0 -- v2;\n"
        "}\n");

  auto const t = tree_graph(3);
  auto const tj = graph_to_json(t);
  CHECK(tj.at("kind") == "trees");
  CHECK(tj.at("vertices")[0].dump() == "[[],[],[]]");
  CHECK(graph_to_dot(t).find("v0 [label=\"[[],[],[]]\"]") != std::string::npos);

  auto const g3 = word_graph(MonoidContext(3));
  CHECK(graph_to_dot(g3).find("v0 [label=\"3,3,3,3\"]") != std::string::npos);
  CHECK(graph_to_dot(tree_graph(4)).find("[label=\"[[],[],[],[]]\"]") != std::string::npos);
}

TEST_CASE("sequence tables", "[io]") {
  auto const tables = std::vector<SequenceTable>{a_sequence(2), b_sequence(2)};
  auto const csv = tables_to_csv(tables);
  CHECK(csv ==
        "name,index,value,provenance\n"
        "A,0,1,recurrence\n"
        "A,1,3,recurrence\n"
        "A,2,8,recurrence\n"
        "B,1,2,recurrence\n"
        "B,2,5,recurrence\n");
  auto const j = tables_to_json(tables);
  CHECK(j.size() == 2);
  CHECK(j[0].at("name") == "A");
  CHECK(j[1].at("start") == 1);
}
