#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "stanley/forward_bijection.hpp"

using namespace stanley;
using namespace stanley::testing;

namespace {

int alive_whites(PlaneTree const& t) {
    int count = 0;
    for (TreeVertex const& v : t.vertices)
        if (v.alive && v.color == Color::white) ++count;
    return count;
}

int alive_edges(PlaneTree const& t) {
    int count = 0;
    for (TreeEdge const& e : t.edges)
        if (e.alive) ++count;
    return count;
}

// Compares log entries against the expected (kind, x, y) triples; j is
// checked for presence only (its value is pinned by the j < y assertions).
void check_op_log(std::vector<OpRecord> const& log, std::vector<OpExpectation> const& expected) {
    REQUIRE(log.size() == expected.size());
    for (size_t i = 0; i < log.size(); ++i) {
        CAPTURE(i);
        CHECK(log[i].kind == (expected[i].kind == 'B' ? OpKind::bend : OpKind::jump));
        CHECK(log[i].x == expected[i].x);
        CHECK(log[i].y == expected[i].y);
        CHECK(log[i].j.has_value() == (expected[i].kind == 'J'));
    }
}

std::string message_of(std::function<void()> f) {
    try {
        f();
    } catch (std::exception const& e) {
        return e.what();
    }
    return {};
}

// Factor-length tuples within the theorem's domain (endpoints at least 2,
// interior at least 3) with 1 + sum(a_i - 1) == k, including n = 1.
std::vector<FactorizationType> domain_types(int k) {
    std::vector<FactorizationType> out;
    std::vector<int> a;
    auto rec = [&](auto&& self, int remaining) -> void {
        // remaining = k - 1 - sum so far of (a_i - 1)
        if (remaining == 0 && !a.empty()) {
            bool ok = true;
            for (size_t i = 1; i + 1 < a.size(); ++i)
                if (a[i] < 3) ok = false;
            if (ok) out.push_back(FactorizationType{a});
            return;
        }
        for (int ai = 2; ai - 1 <= remaining; ++ai) {
            a.push_back(ai);
            self(self, remaining - (ai - 1));
            a.pop_back();
        }
    };
    rec(rec, k - 1);
    return out;
}

}  // namespace

TEST_CASE("output type: endpoints lose one, interior factors lose two") {
    CHECK(output_type_for(FactorizationType{{5}}) == StanleyType{{5}});
    CHECK(output_type_for(FactorizationType{{2, 2}}) == StanleyType{{1, 1}});
    CHECK(output_type_for(FactorizationType{{2, 3, 2}}) == StanleyType{{1, 1, 1}});
    CHECK(output_type_for(FactorizationType{{4, 3, 5, 2}}) == StanleyType{{3, 1, 3, 1}});
}

TEST_CASE("initial state: roots flagged, spine touched, attraction at factor lengths") {
    AlgorithmState s = make_initial_state(golden27());
    CHECK(s.attraction == std::vector<int>{2, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 2});
    CHECK(s.op_log.empty());
    CHECK(s.touched_clusters.empty());
    CHECK(check_invariant1(s));
    int flagged = 0;
    for (TreeEdge const& e : s.tree.edges)
        if (e.alive && e.is_cluster_root) ++flagged;
    CHECK(flagged == 27);
    for (int label : golden27_spine_blacks())
        CHECK(s.tree.vertex(s.tree.black_with_label(label)).touched);
    CHECK_FALSE(s.tree.vertex(s.tree.black_with_label(4)).touched);
}

TEST_CASE("check_invariant1 goes false on corrupted root flags") {
    AlgorithmState s = make_initial_state(golden27());
    std::vector<int> cluster1_edges;
    for (TreeEdge const& e : s.tree.edges)
        if (e.alive && e.label == 1) cluster1_edges.push_back(e.id);
    REQUIRE(cluster1_edges.size() == 4);

    AlgorithmState none = s;
    for (int eid : cluster1_edges) none.tree.edge(eid).is_cluster_root = false;
    CHECK_FALSE(check_invariant1(none));

    AlgorithmState both = s;
    for (int eid : cluster1_edges) both.tree.edge(eid).is_cluster_root = true;
    CHECK_FALSE(check_invariant1(both));
}

TEST_CASE("smallest instance: one bend merges the spine whites") {
    MinimalFactorization f = parse_line("k=3; (1,2)(2,3)");
    AlgorithmState s = make_initial_state(f, true);
    CHECK(alive_whites(s.tree) == 3);
    CHECK(alive_edges(s.tree) == 4);

    s = rib_treatment(spine_treatment(std::move(s)));
    check_op_log(s.op_log, {{'B', 1, 2}});
    CHECK(alive_whites(s.tree) == 2);
    CHECK(alive_edges(s.tree) == 3);
    CHECK(type_of(from_plane_tree(s.tree)) == StanleyType{{1, 1}});
    CHECK(s.attraction == std::vector<int>{1, 1});
}

TEST_CASE("every type (2,2) input maps to a Stanley tree of type (1,1)") {
    std::vector<MinimalFactorization> all = enumerate(FactorizationType{{2, 2}});
    REQUIRE(all.size() == 6);
    std::set<StanleyTree> images;
    for (MinimalFactorization const& f : all) {
        StanleyTree out = run_A(f, true);
        CHECK(type_of(out) == StanleyType{{1, 1}});
        images.insert(out);
    }
    CHECK(images.size() == 6);
    std::vector<StanleyTree> targets = enumerate(StanleyType{{1, 1}});
    CHECK(images == std::set<StanleyTree>(targets.begin(), targets.end()));
}

TEST_CASE("golden run: op log, final type, attraction, touched clusters") {
    AlgorithmState s = make_initial_state(golden27(), true);
    s = spine_treatment(std::move(s));
    std::vector<OpExpectation> expected = golden27_expected_ops();
    check_op_log(s.op_log, {expected.begin(), expected.begin() + 6});
    CHECK(s.touched_clusters == std::set<int>{1, 2, 16});

    s = rib_treatment(std::move(s));
    check_op_log(s.op_log, expected);
    CHECK(s.touched_clusters == std::set<int>{1, 2, 6, 15, 16, 20, 21, 22});
    CHECK(s.attraction == std::vector<int>(14, 1));

    StanleyTree out = from_plane_tree(s.tree);
    CHECK(type_of(out) == StanleyType(std::vector<int>(14, 1)));
    CHECK(run_A(golden27()) == out);
    CHECK(run_A(golden27(), true) == out);
}

TEST_CASE("golden run: single public steps match the driver") {
    AlgorithmState s = make_initial_state(golden27());
    int whites_before = alive_whites(s.tree);
    int edges_before = alive_edges(s.tree);
    s = bend(std::move(s), 1, 11);
    CHECK(alive_whites(s.tree) == whites_before - 1);
    CHECK(alive_edges(s.tree) == edges_before - 1);
    CHECK(s.touched_clusters == std::set<int>{2});
    CHECK(s.tree.vertex(s.tree.black_with_label(11)).touched);
    check_op_log(s.op_log, {{'B', 1, 11}});
    CHECK(check_invariant1(s));
}

TEST_CASE("precondition violations name the failed assumption") {
    AlgorithmState s = make_initial_state(golden27());

    CHECK(message_of([&] { bend(s, 7, 9); }).find("B1") != std::string::npos);
    CHECK(message_of([&] { bend(s, 7, 7); }).find("B2") != std::string::npos);
    CHECK(message_of([&] { jump(s, 7, 9); }).find("J1") != std::string::npos);
    CHECK(message_of([&] { jump(s, 12, 8); }).find("J1") != std::string::npos);
    CHECK(message_of([&] { jump(s, 7, 14); }).find("J2") != std::string::npos);
    CHECK(message_of([&] { jump(s, 4, 6); }).find("J4") != std::string::npos);

    AlgorithmState toy = make_initial_state(parse_line("k=3; (1,2)(2,3)"));
    CHECK(message_of([&] { jump(toy, 1, 2); }).find("J3") != std::string::npos);

    CHECK_THROWS_AS((void)bend(s, 7, 9), std::runtime_error);
    CHECK_THROWS_AS((void)jump(s, 4, 6), std::runtime_error);
}

TEST_CASE("outside the theorem's domain the preconditions can fail honestly") {
    // Valid minimal factorization whose interior factors are transpositions
    // (interior list entry 0): the spine runs 1-3-2-4, vertex 3 is the upper
    // member of both its spine clusters, and the second bend aimed at it
    // finds a degree-1 vertex.
    MinimalFactorization f = parse_line("k=5; (1,2)(3,4)(2,3)(4,5)");
    REQUIRE(validate(f));
    CHECK(message_of([&] { run_A(f); }).find("B3") != std::string::npos);
    CHECK_THROWS_AS(run_A(f), std::runtime_error);
}

TEST_CASE("single factor: no operations, star output") {
    MinimalFactorization f = parse_line("k=4; (1,2,3,4)");
    AlgorithmState s = make_initial_state(f, true);
    CHECK(s.cluster_table.spine_clusters.empty());
    CHECK(s.cluster_table.sigma.empty());
    StanleyTree out = run_A(f, true);
    CHECK(type_of(out) == StanleyType{{4}});
    CHECK(out.sigma1 == Permutation::identity(4));
}

TEST_CASE("instrumented exhaustive runs for small in-domain types") {
    for (int k = 2; k <= 5; ++k) {
        for (FactorizationType const& t : domain_types(k)) {
            StanleyType target = output_type_for(t);
            std::set<StanleyTree> images;
            size_t total = 0;
            enumerate_streaming(t, [&](MinimalFactorization const& f) {
                StanleyTree out = run_A(f, true);
                CHECK(type_of(out) == target);
                images.insert(out);
                ++total;
                return true;
            });
            CHECK(images.size() == total);  // injective
            std::vector<StanleyTree> targets = enumerate(target);
            CHECK(images == std::set<StanleyTree>(targets.begin(), targets.end()));
        }
    }
}

TEST_CASE("phase orders do not change the output tree") {
    StanleyTree base = run_A(golden27());
    std::vector<int> spine_rev{16, 2, 1};
    std::vector<int> rib_alt{20, 15, 6, 22, 21};
    CHECK(run_A_with_orders(golden27(), spine_rev, rib_alt, true) == base);
    std::vector<int> spine_alt{2, 16, 1};
    std::vector<int> rib_alt2{15, 20, 6, 21, 22};
    CHECK(run_A_with_orders(golden27(), spine_alt, rib_alt2, true) == base);

    std::vector<int> not_spine{1, 2, 6};
    CHECK_THROWS_AS(run_A_with_orders(golden27(), not_spine, rib_alt, false),
                    std::invalid_argument);
}

TEST_CASE("rejects invalid input") {
    MinimalFactorization bad = parse_line("k=3; (1,2)(1,2)");
    CHECK_THROWS_AS(make_initial_state(bad), std::invalid_argument);
}
