#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "stanley/plane_tree.hpp"

using stanley::build_T0;
using stanley::ClusterTable;
using stanley::Color;
using stanley::compute_cluster_table;
using stanley::leftist_vertices;
using stanley::MinimalFactorization;
using stanley::parse_line;
using stanley::parse_tree_text;
using stanley::PlaneTree;
using stanley::relabel_to_T1;
using stanley::spine_path;
using stanley::to_dot;
using stanley::to_text;
using stanley::validate_structure;

namespace {

int white_by_t0_label(PlaneTree const& t0, int label) {
    for (auto const& v : t0.vertices)
        if (v.alive && v.color == Color::white && v.label == label) return v.id;
    REQUIRE(false);
    return -1;
}

// Black-neighbor labels around a white vertex, in rotation order.
std::vector<int> black_labels_ccw(PlaneTree const& t, int white_id) {
    std::vector<int> out;
    for (int eid : t.vertex(white_id).ccw)
        out.push_back(t.vertex(t.edge(eid).black_end).label);
    return out;
}

// Equality of cyclic sequences.
bool cyclically_equal(std::vector<int> a, std::vector<int> const& b) {
    if (a.size() != b.size()) return false;
    for (size_t r = 0; r < a.size(); ++r) {
        std::rotate(a.begin(), a.begin() + 1, a.end());
        if (a == b) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("toy path tree of type (2,2)") {
    auto f = parse_line("k=3; (1,2)(1,3)");
    PlaneTree t = build_T0(f);
    validate_structure(t);
    CHECK(t.n_blacks() == 2);
    int edges_alive = 0;
    for (auto const& e : t.edges)
        if (e.alive) ++edges_alive;
    CHECK(edges_alive == 2 + 3 - 1);

    auto path = spine_path(t);
    REQUIRE(path.size() == 3);
    CHECK(t.vertex(path[0]).label == 1);
    CHECK(t.vertex(path[1]).color == Color::white);
    CHECK(t.vertex(path[1]).label == 1);
    CHECK(t.vertex(path[2]).label == 2);

    // Spine white: both edges, anchor side first.
    CHECK(black_labels_ccw(t, path[1]) == std::vector<int>{1, 2});

    ClusterTable table = compute_cluster_table(relabel_to_T1(t));
    CHECK(table.spine_blacks == std::vector<int>{1, 2});
    CHECK(table.spine_clusters == std::vector<int>{1});
    CHECK(table.sigma.empty());
    CHECK(table.cluster(1).black_members == std::vector<int>{1, 2});
    CHECK(table.cluster(1).anchor == 1);
    CHECK_FALSE(table.cluster(1).is_leaf);
    CHECK(table.cluster(2).black_members == std::vector<int>{1});
    CHECK(table.cluster(2).anchor == 1);
    CHECK(table.cluster(2).is_leaf);
    CHECK(table.cluster(3).black_members == std::vector<int>{2});
    CHECK(table.cluster(3).anchor == 2);
    // Root of the spine cluster is the edge toward the smaller black label.
    CHECK(t.edge(table.cluster(1).root_edge).black_end == t.black_with_label(1));
}

TEST_CASE("black rotations spell the input cycles") {
    auto f = stanley::testing::golden27();
    PlaneTree t = build_T0(f);
    validate_structure(t);
    int edges_alive = 0;
    for (auto const& e : t.edges)
        if (e.alive) ++edges_alive;
    CHECK(edges_alive == 14 + 27 - 1);
    for (int i = 1; i <= f.n(); ++i) {
        std::vector<int> entries;
        for (int eid : t.vertex(t.black_with_label(i)).ccw)
            entries.push_back(t.vertex(t.edge(eid).white_end).label);
        CHECK(stanley::Cycle(entries, f.k()) == f.factors[static_cast<size_t>(i - 1)]);
    }
}

TEST_CASE("white rotations of the degree-27 tree") {
    auto f = stanley::testing::golden27();
    PlaneTree t = build_T0(f);

    auto path = spine_path(t);
    std::vector<int> spine_black_labels;
    for (size_t i = 0; i < path.size(); i += 2)
        spine_black_labels.push_back(t.vertex(path[i]).label);
    CHECK(spine_black_labels == std::vector<int>{1, 11, 7, 14});
    std::vector<int> spine_white_labels;
    for (size_t i = 1; i < path.size(); i += 2)
        spine_white_labels.push_back(t.vertex(path[i]).label);
    CHECK(spine_white_labels == std::vector<int>{2, 1, 16});

    // Spine whites: anchor first, then the ascending wrap, then the larger
    // spine neighbor last.
    CHECK(black_labels_ccw(t, white_by_t0_label(t, 1)) == std::vector<int>{7, 13, 4, 11});
    CHECK(black_labels_ccw(t, white_by_t0_label(t, 2)) == std::vector<int>{1, 11});
    CHECK(black_labels_ccw(t, white_by_t0_label(t, 16)) == std::vector<int>{7, 10, 14});
    // Non-spine whites: ascending cyclic order.
    CHECK(cyclically_equal(black_labels_ccw(t, white_by_t0_label(t, 6)), {3, 4, 6}));
    CHECK(cyclically_equal(black_labels_ccw(t, white_by_t0_label(t, 15)), {2, 5, 7}));
    CHECK(cyclically_equal(black_labels_ccw(t, white_by_t0_label(t, 20)), {11, 12}));
}

TEST_CASE("relabeling drops white labels and defines clusters") {
    auto f = stanley::testing::golden27();
    PlaneTree t0 = build_T0(f);
    PlaneTree t1 = relabel_to_T1(t0);
    validate_structure(t1);
    for (auto const& v : t1.vertices)
        if (v.alive && v.color == Color::white) CHECK(v.label == -1);
    // Edge labels still equal the former white endpoint labels.
    for (auto const& e : t1.edges)
        if (e.alive) CHECK(e.label == t0.vertex(e.white_end).label);
}

TEST_CASE("cluster table of the degree-27 tree") {
    auto f = stanley::testing::golden27();
    PlaneTree t1 = relabel_to_T1(build_T0(f));
    ClusterTable table = compute_cluster_table(t1);

    CHECK(table.spine_blacks == stanley::testing::golden27_spine_blacks());
    CHECK(table.spine_clusters == stanley::testing::golden27_spine_clusters());
    CHECK(table.sigma == stanley::testing::golden27_sigma());

    for (auto const& expect : stanley::testing::golden27_expected_clusters()) {
        auto const& info = table.cluster(expect.label);
        CHECK(info.black_members == expect.black_members);
        CHECK(info.anchor == expect.anchor);
        // In the initial tree the root's black endpoint is the anchor.
        CHECK(t1.vertex(t1.edge(info.root_edge).black_end).label == expect.anchor);
        CHECK(t1.edge(info.root_edge).white_end == info.center);
    }
    CHECK(table.cluster(10).is_leaf);
    CHECK_FALSE(table.cluster(1).is_leaf);
    CHECK(table.cluster(1).is_spine);
    CHECK_FALSE(table.cluster(15).is_spine);

    // Every cluster has as many edges as its member list.
    for (int c = 1; c <= 27; ++c) {
        int count = 0;
        for (auto const& e : t1.edges)
            if (e.alive && e.label == c) ++count;
        CHECK(count == static_cast<int>(table.cluster(c).black_members.size()));
    }
}

TEST_CASE("leftmost children") {
    SUBCASE("path tree: every pendant white is leftist") {
        PlaneTree t = build_T0(parse_line("k=3; (1,2)(1,3)"));
        auto leftist = leftist_vertices(t);
        CHECK(leftist == std::vector<int>{white_by_t0_label(t, 2), white_by_t0_label(t, 3)});
    }
    SUBCASE("clockwise-first child wins") {
        // Black 1 has pendant whites 2 and 3; from its spine edge the first
        // clockwise child is white 3.
        PlaneTree t = build_T0(parse_line("k=4; (1,2,3)(1,4)"));
        auto leftist = leftist_vertices(t);
        CHECK(leftist == std::vector<int>{white_by_t0_label(t, 3), white_by_t0_label(t, 4)});
    }
    SUBCASE("interior spine black with no children") {
        PlaneTree t = build_T0(parse_line("k=4; (1,2)(1,3)(3,4)"));
        auto leftist = leftist_vertices(t);
        CHECK(leftist == std::vector<int>{white_by_t0_label(t, 2), white_by_t0_label(t, 4)});
    }
    SUBCASE("degree-27 tree") {
        auto f = stanley::testing::golden27();
        PlaneTree t0 = build_T0(f);
        PlaneTree t1 = relabel_to_T1(t0);
        std::vector<int> expected_labels{3, 4, 7, 10, 11, 13, 15, 17, 18, 20, 21, 24, 25, 26};
        std::vector<int> expected_ids;
        for (int c : expected_labels) expected_ids.push_back(white_by_t0_label(t0, c));
        std::sort(expected_ids.begin(), expected_ids.end());
        CHECK(leftist_vertices(t1) == expected_ids);
    }
}

TEST_CASE("tree text round-trips byte for byte") {
    auto f = stanley::testing::golden27();
    PlaneTree t1 = relabel_to_T1(build_T0(f));
    std::string text = to_text(t1);
    PlaneTree parsed = parse_tree_text(text);
    CHECK(to_text(parsed) == text);
    validate_structure(parsed);
    CHECK(parsed.n_blacks() == 14);
    CHECK(parsed.max_edge_label() == 27);

    PlaneTree t0 = build_T0(f);
    std::string text0 = to_text(t0);
    CHECK(to_text(parse_tree_text(text0)) == text0);
}

TEST_CASE("tree text parser rejects inconsistent input") {
    CHECK_THROWS_AS(parse_tree_text("v0 black label=1 ccw=[e0]\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_tree_text("garbage\n"), std::invalid_argument);
    // Rotation omits an incident edge.
    std::string broken =
        "v0 black label=1 ccw=[]\n"
        "v1 white label=1 ccw=[e0]\n"
        "e0 label=1 black=v0 white=v1\n";
    CHECK_THROWS_AS(parse_tree_text(broken), std::invalid_argument);
    // Minimal consistent tree parses.
    std::string ok =
        "v0 black label=1 ccw=[e0]\n"
        "v1 white label=1 ccw=[e0]\n"
        "e0 label=1 black=v0 white=v1\n";
    PlaneTree t = parse_tree_text(ok);
    CHECK(t.vertex(0).color == Color::black);
    CHECK(t.edge(0).label == 1);
}

TEST_CASE("dot output") {
    auto f = stanley::testing::golden27();
    PlaneTree t1 = relabel_to_T1(build_T0(f));
    std::string dot = to_dot(t1);
    CHECK(dot == to_dot(t1));  // deterministic
    size_t filled = 0, red = 0, edges = 0;
    for (size_t pos = 0; (pos = dot.find("fillcolor=black", pos)) != std::string::npos; ++pos)
        ++filled;
    for (size_t pos = 0; (pos = dot.find("color=red", pos)) != std::string::npos; ++pos) ++red;
    for (size_t pos = 0; (pos = dot.find(" -- ", pos)) != std::string::npos; ++pos) ++edges;
    CHECK(filled == 14);
    CHECK(red == 6);  // three spine whites, two spine edges each
    CHECK(edges == 40);
}

TEST_CASE("rotation helpers") {
    PlaneTree t;
    int b = t.new_vertex(Color::black, 1);
    int w1 = t.new_vertex(Color::white, 1);
    int w2 = t.new_vertex(Color::white, 2);
    int w3 = t.new_vertex(Color::white, 3);
    int e1 = t.new_edge(1, b, w1);
    int e2 = t.new_edge(2, b, w2);
    int e3 = t.new_edge(3, b, w3);
    t.vertex(b).ccw = {e1, e2, e3};
    t.vertex(w1).ccw = {e1};
    t.vertex(w2).ccw = {e2};
    t.vertex(w3).ccw = {e3};

    CHECK(t.ccw_next(b, e1) == e2);
    CHECK(t.ccw_next(b, e3) == e1);
    CHECK(t.cw_next(b, e1) == e3);
    CHECK(t.cw_next(b, e2) == e1);
    CHECK(t.rotation_after(b, e2) == std::vector<int>{e3, e1});
    CHECK(t.other_end(e2, b) == w2);
    CHECK(t.other_end(e2, w2) == b);

    t.rotation_remove(b, e2);
    CHECK(t.vertex(b).ccw == std::vector<int>{e1, e3});
    t.rotation_insert_after(b, e1, {e2});
    CHECK(t.vertex(b).ccw == std::vector<int>{e1, e2, e3});
    t.rotation_remove(b, e2);
    t.rotation_insert_before(b, e3, {e2});
    CHECK(t.vertex(b).ccw == std::vector<int>{e1, e2, e3});

    validate_structure(t);
    t.vertex(b).ccw = {e1, e2};  // drop e3 from the rotation
    CHECK_THROWS_AS(validate_structure(t), std::logic_error);
}
