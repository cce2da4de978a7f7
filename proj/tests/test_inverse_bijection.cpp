// Tests for the inverse map: greedy subsequences, unfolding, backbone
// segmentation, per-vertex cycle recovery, and the full round trip.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "fixtures.hpp"
#include "stanley/factorization.hpp"
#include "stanley/forward_bijection.hpp"
#include "stanley/inverse_bijection.hpp"
#include "stanley/plane_tree.hpp"
#include "stanley/stanley_tree.hpp"

using namespace stanley;
using stanley::testing::golden27;
using stanley::testing::sample10;

namespace {

// Factor-length tuples accepted by the inverse: endpoints at least 2,
// interior at least 3, at least two factors, 1 + sum(a_i - 1) == k.
std::vector<FactorizationType> domain_types(int k) {
    std::vector<FactorizationType> out;
    std::vector<int> a;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0 && a.size() >= 2) {
            bool ok = true;
            for (size_t i = 1; i + 1 < a.size(); ++i)
                if (a[i] < 3) ok = false;
            if (ok) out.push_back(FactorizationType{a});
        }
        if (remaining == 0) return;
        for (int ai = 2; ai - 1 <= remaining; ++ai) {
            a.push_back(ai);
            self(self, remaining - (ai - 1));
            a.pop_back();
        }
    };
    rec(rec, k - 1);
    return out;
}

std::vector<int> preorder(UnfoldedTree const& u) {
    std::vector<int> out;
    auto walk = [&](auto&& self, int b) -> void {
        out.push_back(b);
        auto it = u.children.find(b);
        if (it == u.children.end()) return;
        for (int c : it->second) self(self, c);
    };
    for (int b : u.top_level) walk(walk, b);
    return out;
}

}  // namespace

TEST_CASE("greedy subsequence on the worked list") {
    std::vector<int> L{14, 2, 11, 18, 8, 4, 6, 7, 10, 12, 3, 5, 9, 20, 21, 13, 16, 30, 15, 17};
    std::vector<std::size_t> up = greedy_subsequence(L, GreedyDirection::increasing);
    std::vector<int> picked;
    for (std::size_t i : up) picked.push_back(L[i]);
    CHECK(picked == std::vector<int>{14, 18, 20, 21, 30});
    CHECK(up == std::vector<std::size_t>{0, 3, 13, 14, 17});

    CHECK(greedy_subsequence({5}, GreedyDirection::increasing) ==
          std::vector<std::size_t>{0});
    CHECK(greedy_subsequence({5, 3, 4, 1}, GreedyDirection::decreasing) ==
          std::vector<std::size_t>{0, 1, 3});
}

TEST_CASE("greedy subsequence properties on shuffled input") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<int> L(20);
        for (int i = 0; i < 20; ++i) L[static_cast<size_t>(i)] = i + 1;
        std::shuffle(L.begin(), L.end(), rng);
        std::vector<std::size_t> picks = greedy_subsequence(L, GreedyDirection::increasing);
        REQUIRE(!picks.empty());
        CHECK(picks.front() == 0);
        for (size_t p = 1; p < picks.size(); ++p)
            CHECK(L[picks[p - 1]] < L[picks[p]]);
        // Everything between two picks stays below the earlier pick.
        for (size_t p = 0; p < picks.size(); ++p) {
            size_t stop = p + 1 < picks.size() ? picks[p + 1] : L.size();
            for (size_t i = picks[p] + 1; i < stop; ++i) CHECK(L[i] < L[picks[p]]);
        }
    }
}

TEST_CASE("unfolding the folded star") {
    std::vector<int> L{14, 2, 11, 18, 8, 4, 6, 7, 10, 12, 3, 5, 9, 20, 21, 13, 16, 30, 15, 17};
    std::vector<FoldEntry> entries;
    for (int v : L) entries.push_back({v, v});
    UnfoldedTree u = unfold(entries, 99, GreedyDirection::increasing);

    CHECK(u.top_level == std::vector<int>{14, 18, 20, 21, 30});
    CHECK(u.children.at(14) == std::vector<int>{2, 11});
    CHECK(u.children.at(18) == std::vector<int>{8, 10, 12});
    CHECK(u.children.at(8) == std::vector<int>{4, 6, 7});
    CHECK(u.children.at(12) == std::vector<int>{3, 5, 9});
    CHECK(u.children.count(10) == 0);
    CHECK(u.children.at(21) == std::vector<int>{13, 16});

    std::vector<int> visit = preorder(u);
    REQUIRE(visit.size() == L.size());
    CHECK(std::vector<int>(visit.begin(), visit.begin() + 6) ==
          std::vector<int>{14, 2, 11, 18, 8, 4});

    CHECK(u.first_label.at(14) == 99);
    CHECK(u.first_label.at(30) == 99);
    CHECK(u.first_label.at(8) == 18);
    CHECK(u.first_label.at(9) == 12);

    std::vector<FoldEntry> dup{{3, 7}, {4, 8}, {3, 9}};
    CHECK_THROWS_AS(unfold(dup, 1, GreedyDirection::increasing), std::runtime_error);
}

TEST_CASE("backbone of the worked example") {
    StanleyTree t2 = run_A(golden27());
    PlaneTree p = to_plane_tree(t2);
    Backbone bb = build_backbone(p);

    CHECK(bb.vertices == std::vector<int>{1, 11, 7, 14});
    REQUIRE(bb.edges.size() == 3);
    CHECK(bb.edges[0] == BackboneEdge{1, 11, BackboneEdgeKind::hairy});
    CHECK(bb.edges[1] == BackboneEdge{7, 11, BackboneEdgeKind::bald});
    CHECK(bb.edges[2] == BackboneEdge{7, 14, BackboneEdgeKind::hairy});

    REQUIRE(bb.segments.size() == 2);
    CHECK(bb.segments[0].a_chain == std::vector<int>{1});
    CHECK(bb.segments[0].b_chain == std::vector<int>{11, 7});
    CHECK(bb.segments[1].a_chain == std::vector<int>{7});
    CHECK(bb.segments[1].b_chain == std::vector<int>{14});
}

TEST_CASE("two-factor backbones are a single hairy edge") {
    for (MinimalFactorization const& f : enumerate(FactorizationType{{2, 2}})) {
        PlaneTree p = to_plane_tree(run_A(f));
        Backbone bb = build_backbone(p);
        REQUIRE(bb.vertices.size() == 2);
        REQUIRE(bb.edges.size() == 1);
        CHECK(bb.edges[0].kind == BackboneEdgeKind::hairy);
        REQUIRE(bb.segments.size() == 1);
        CHECK(bb.segments[0].a_chain.size() == 1);
        CHECK(bb.segments[0].b_chain.size() == 1);
    }
}

TEST_CASE("recovery cases across the worked example") {
    MinimalFactorization f = golden27();
    PlaneTree p = to_plane_tree(run_A(f));
    Backbone bb = build_backbone(p);

    struct Expect {
        int black;
        RecoveryCase rcase;
    };
    std::vector<Expect> table{
        {1, RecoveryCase::near_iii}, {2, RecoveryCase::away_a},
        {3, RecoveryCase::away_a},   {4, RecoveryCase::near_i},
        {5, RecoveryCase::away_a},   {6, RecoveryCase::away_d},
        {7, RecoveryCase::near_iii}, {8, RecoveryCase::away_b},
        {9, RecoveryCase::away_c},   {10, RecoveryCase::away_d},
        {11, RecoveryCase::near_ii}, {12, RecoveryCase::away_d},
        {13, RecoveryCase::away_d},  {14, RecoveryCase::near_iii},
    };
    for (Expect const& e : table) {
        RecoveredCycle r = recover_cycle(p, bb, e.black);
        CHECK(r.rcase == e.rcase);
        CHECK(r.cycle == f.factors[static_cast<size_t>(e.black) - 1]);
    }

    // Spot values read off the published run: the jump-created vertex 13 and
    // the bent vertices 9 and 11.
    CHECK(recover_cycle(p, bb, 13).cycle == Cycle({1, 5, 4}, 27));
    CHECK(recover_cycle(p, bb, 9).cycle == Cycle({22, 23, 25}, 27));
    CHECK(recover_cycle(p, bb, 11).cycle == Cycle({2, 20, 1}, 27));
    CHECK(recover_cycle(p, bb, 1).cycle == Cycle({2, 3}, 27));
}

TEST_CASE("round trips on the named instances") {
    for (MinimalFactorization const& f :
         {golden27(), parse_line("k=5; (1,5)(1,2,3)(2,4)"),
          parse_line("k=7; (1,6)(1,4,2)(2,5,3)(3,7)"),
          sample_uniform(FactorizationType{{2, 3, 3, 4}}, 7)}) {
        CHECK(run_A_inverse(run_A(f)) == f);
    }
}

TEST_CASE("exhaustive round trip and backbone shape through k=6") {
    for (int k = 2; k <= 6; ++k) {
        for (FactorizationType const& t : domain_types(k)) {
            enumerate_streaming(t, [&](MinimalFactorization const& f) {
                StanleyTree t2 = run_A(f);
                CHECK(run_A_inverse(t2) == f);

                Backbone bb = build_backbone(to_plane_tree(t2));
                for (BackboneSegment const& s : bb.segments) {
                    REQUIRE(!s.a_chain.empty());
                    REQUIRE(!s.b_chain.empty());
                    CHECK(s.a_1() < s.b_1());
                    for (size_t i = 1; i < s.a_chain.size(); ++i)
                        CHECK(s.a_chain[i - 1] < s.a_chain[i]);
                    for (size_t i = 1; i < s.b_chain.size(); ++i)
                        CHECK(s.b_chain[i - 1] > s.b_chain[i]);
                }
            });
        }
    }
}

TEST_CASE("classification agrees with the recorded origins") {
    for (int k = 2; k <= 5; ++k) {
        for (FactorizationType const& t : domain_types(k)) {
            enumerate_streaming(t, [&](MinimalFactorization const& f) {
                AlgorithmState s = rib_treatment(spine_treatment(make_initial_state(f)));
                for (TreeVertex const& v : s.tree.vertices) {
                    if (!v.alive || v.color != Color::white) continue;
                    Origin got;
                    try {
                        got = classify_white(s.tree, v.id);
                    } catch (std::invalid_argument const&) {
                        continue;  // spine whites carry no classification
                    }
                    CHECK(got == v.origin);
                }
            });
        }
    }
}

TEST_CASE("inverse input validation") {
    PlaneTree p = to_plane_tree(run_A(golden27()));
    Backbone bb = build_backbone(p);

    // 13 hangs away from the spine, 1 is a spine vertex.
    CHECK_THROWS_AS(recover_cycle_near_spine(p, bb, 13), std::invalid_argument);
    CHECK_THROWS_AS(recover_cycle_away(p, 1), std::invalid_argument);

    // A single-factor tree is outside the inverse's domain.
    std::vector<StanleyTree> singles = enumerate(StanleyType{{3}});
    REQUIRE(!singles.empty());
    CHECK_THROWS_AS(run_A_inverse(singles.front()), std::invalid_argument);
}
