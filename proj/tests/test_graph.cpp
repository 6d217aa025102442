#include <doctest.h>

#include <algorithm>

#include "resumkit/fixtures.hpp"
#include "resumkit/graph.hpp"

using namespace resumkit;

TEST_CASE("construction validates labels") {
  CHECK_THROWS_WITH_AS(Multigraph({"A", "A"}, {}), doctest::Contains("duplicate vertex"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(Multigraph({"A", "B"}, {{"e", "A", "B"}, {"e", "A", "B"}}),
                       doctest::Contains("duplicate edge"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(Multigraph({"A"}, {{"e", "A", "Z"}}),
                       doctest::Contains("unknown vertex"), std::invalid_argument);
}

TEST_CASE("connectivity") {
  CHECK(fixtures::g_eye().is_connected());
  CHECK(Multigraph({"A"}, {}).is_connected());
  CHECK_FALSE(Multigraph({"A", "B"}, {}).is_connected());
  // Self-loops never connect anything.
  CHECK_FALSE(Multigraph({"A", "B"}, {{"e", "A", "A"}}).is_connected());
  CHECK_THROWS_AS(Multigraph({}, {}).is_connected(), std::invalid_argument);
}

TEST_CASE("contraction merges into the smaller label") {
  const Multigraph b = fixtures::bubble();
  const Multigraph c = b.contract_edge("l1");
  CHECK(c.vertex_count() == 1);
  CHECK(c.vertices()[0] == "v1");
  REQUIRE(c.edge_count() == 1);
  CHECK(c.edge("l2").is_self_loop());

  const Multigraph eye = fixtures::g_eye();
  const Multigraph merged = eye.contract_edge("l5");
  CHECK(merged.vertex_count() == 3);
  CHECK(merged.has_vertex("B"));
  CHECK_FALSE(merged.has_vertex("C"));
  CHECK(merged.edge("l6").is_self_loop());  // parallel edge becomes a loop
  CHECK(merged.edge("l3").end_b == "B");

  CHECK_THROWS_AS(fixtures::tadpole().contract_edge("l1"), std::invalid_argument);
}

TEST_CASE("deletion preserves the rest") {
  const Multigraph eye = fixtures::g_eye();
  const Multigraph cut = eye.delete_edge("l4");
  CHECK(cut.edge_count() == 5);
  CHECK(cut.vertex_count() == 4);
  CHECK_FALSE(cut.has_edge("l4"));
  CHECK(cut.edge("l5").end_a == "B");
}

TEST_CASE("spanning tree recognition") {
  const Multigraph eye = fixtures::g_eye();
  CHECK(is_spanning_tree(eye, {"l1", "l2", "l3"}));
  CHECK(is_spanning_tree(eye, {"l1", "l2", "l5"}));
  CHECK_FALSE(is_spanning_tree(eye, {"l1", "l2"}));            // too small
  CHECK_FALSE(is_spanning_tree(eye, {"l1", "l3", "l5"}));      // cycle
  CHECK_FALSE(is_spanning_tree(eye, {"l5", "l6", "l1"}));      // parallel pair
  CHECK_FALSE(is_spanning_tree(eye, {"l1", "l2", "zz"}));      // unknown label
  CHECK(is_spanning_tree(Multigraph({"A"}, {}), {}));          // single vertex
  CHECK_FALSE(is_spanning_tree(fixtures::tadpole(), {"l1"}));  // self-loop
  CHECK(is_spanning_tree(fixtures::tadpole(), {"l2"}));
}

TEST_CASE("tree paths") {
  const Multigraph eye = fixtures::g_eye();
  const SpanningTree t{"l1", "l2", "l3"};
  CHECK(tree_path(eye, t, "B", "C") == TreePath{"l1", "l3"});
  CHECK(tree_path(eye, t, "B", "D") == TreePath{"l1", "l3", "l2"});
  CHECK(tree_path(eye, t, "A", "A").empty());
  CHECK_THROWS_AS(tree_path(eye, {"l1", "l3", "l5"}, "A", "B"), std::invalid_argument);
}

TEST_CASE("canonical keys are relabeling invariant") {
  const Multigraph eye = fixtures::g_eye();
  // g_eye under A->z, B->y, C->w, D->x with scrambled edge names.
  const Multigraph shuffled({"x", "y", "z", "w"}, {{"a", "z", "y"},
                                                   {"b", "w", "x"},
                                                   {"c", "z", "w"},
                                                   {"d", "y", "x"},
                                                   {"e", "y", "w"},
                                                   {"f", "y", "w"}});
  CHECK(canonical_key(eye, {}) == canonical_key(shuffled, {}));
  CHECK(canonical_key(eye, {"l1", "l2", "l3"}) == canonical_key(shuffled, {"a", "b", "c"}));
  CHECK(canonical_key(eye, {"l1", "l2", "l5"}) == canonical_key(shuffled, {"a", "b", "e"}));

  CHECK(canonical_key(fixtures::triangle(), {}) == canonical_key(fixtures::cycle(3), {}));
  CHECK(canonical_key(fixtures::bubble(), {}) == canonical_key(fixtures::cycle(2), {}));
  CHECK(canonical_key(fixtures::bubble(), {}) != canonical_key(fixtures::cycle(3), {}));
}

TEST_CASE("canonical keys separate marked trees") {
  const Multigraph eye = fixtures::g_eye();
  const std::string k123 = canonical_key(eye, {"l1", "l2", "l3"});
  const std::string k125 = canonical_key(eye, {"l1", "l2", "l5"});
  CHECK(k123 != k125);
  CHECK(canonical_key(eye, {}) != k123);

  // Swapping l5 and l6 is an automorphism of g_eye.
  CHECK(canonical_key(eye, {"l1", "l2", "l6"}) == k125);
  // So is B<->C, which sends T_123 to {l1,l3,l4}.
  CHECK(canonical_key(eye, {"l1", "l3", "l4"}) == k123);
}

TEST_CASE("canonical form handles self-loops and multi-edges") {
  const Multigraph a({"u", "v"}, {{"e1", "u", "u"}, {"e2", "u", "v"}});
  CHECK(canonical_key(a, {}) == canonical_key(fixtures::tadpole(), {}));
  CHECK(canonical_key(a, {"e2"}) == canonical_key(fixtures::tadpole(), {"l2"}));
  CHECK(canonical_key(a, {"e1"}) != canonical_key(a, {"e2"}));

  const CanonicalForm form = canonical_form(fixtures::tadpole(), {"l2"});
  CHECK(form.vertex_count == 2);
  CHECK(form.edges.size() == 2);
}

TEST_CASE("normalized_tree sorts labels") {
  CHECK(normalized_tree({"l5", "l1", "l3"}) == SpanningTree{"l1", "l3", "l5"});
}
