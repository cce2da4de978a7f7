// The inverse map from Stanley trees back to minimal factorizations: every
// black vertex's factor is read off the output tree by classifying the white
// vertices, undoing the folds with greedy monotone subsequences, and cutting
// the spine into backbone segments.
#pragma once

#include <cstddef>
#include <map>
#include <string_view>
#include <vector>

#include "stanley/factorization.hpp"
#include "stanley/plane_tree.hpp"
#include "stanley/stanley_tree.hpp"

namespace stanley {

// A non-spine white vertex is organic when its highest-labeled black
// neighbor is its parent (the neighbor toward the spine); otherwise it was
// minted by a jump and its highest neighbor is the jump target it is named
// after.  Spine whites are handled by the segment machinery instead and are
// rejected here.
Origin classify_white(PlaneTree const& t2, int white_id);

enum class GreedyDirection { increasing, decreasing };

// 0-based indices of the leftmost greedy monotone subsequence: start with
// the first element, then take each later element that extends the run in
// the requested direction.
std::vector<std::size_t> greedy_subsequence(std::vector<int> const& labels,
                                            GreedyDirection direction);

// One entry of a folded neighborhood: a black vertex label together with the
// label currently carried by its edge into the folded white vertex.
struct FoldEntry {
    int black = -1;
    int edge_label = -1;
    bool operator==(FoldEntry const&) const = default;
};

// The rooted genealogy recovered from a folded neighborhood list.  Levels
// are black-to-black (the intermediate whites of the original subtree are
// implicit); parent 0 marks the top level.  first_label[b] is the label that
// vertex b's factor starts with: the parental label for the top level, and
// the edge label of the black-level parent below it, because a removed root
// edge hands its label to the surviving edge of the same cluster.
struct UnfoldedTree {
    std::vector<int> order;                    // blacks in input order
    std::map<int, int> parent;                 // black -> parent black (0 = top level)
    std::map<int, std::vector<int>> children;  // black -> ordered black children
    std::map<int, int> edge_label;             // black -> edge label from the input list
    std::map<int, int> first_label;            // black -> recovered first label
    std::vector<int> top_level;                // the greedy picks, in order
};

// Undoes one fold.  The entries are read in the stored order; `direction`
// selects the increasing (counterclockwise lists) or decreasing (clockwise
// genealogy groups) greedy.  Throws std::runtime_error when the entries
// cannot be the image of any fold (repeated labels).
UnfoldedTree unfold(std::vector<FoldEntry> const& entries, int parental_label,
                    GreedyDirection direction);

enum class BackboneEdgeKind { bald, hairy };

struct BackboneEdge {
    int v1 = -1;  // smaller black label
    int v2 = -1;  // larger black label
    BackboneEdgeKind kind = BackboneEdgeKind::bald;
    bool operator==(BackboneEdge const&) const = default;
};

// One maximal backbone segment: the former spine vertices merged around a
// single white spine vertex.  a_chain lists A_r..A_1 (ascending labels,
// A_r a spine vertex of the output tree), b_chain lists B_1..B_s (descending,
// B_s a spine vertex).  The hairy edge is (A_1, B_1); all other edges of the
// segment are bald.
struct BackboneSegment {
    int white = -1;            // vertex id of the merged white spine vertex
    std::vector<int> a_chain;  // A_r .. A_1
    std::vector<int> b_chain;  // B_1 .. B_s
    std::vector<int> spine_order;  // segment vertices in global spine order

    int a_r() const { return a_chain.front(); }
    int a_1() const { return a_chain.back(); }
    int b_1() const { return b_chain.front(); }
    int b_s() const { return b_chain.back(); }
};

struct Backbone {
    std::vector<int> vertices;  // black labels in spine order, 1 first, n last
    std::vector<BackboneEdge> edges;  // between consecutive backbone vertices
    std::vector<BackboneSegment> segments;  // in spine order
};

// Reconstructs the backbone of the input factorization from the output tree:
// identifies, around every white spine vertex, which black neighbors are
// former spine vertices, splits them into the two chains, and orients each
// segment so that A_1 < B_1.  The highest-labeled neighbor of a white spine
// vertex is always its B_1.
Backbone build_backbone(PlaneTree const& t2);

enum class RecoveryCase {
    away_a,    // organic white parent: plain unfold
    away_b,    // artificial parent, target on the first-removed side
    away_c,    // artificial parent, target on the second-removed side
    away_d,    // the vertex is itself the jump target of its parent
    near_i,    // hangs directly on a white spine vertex, never on the spine
    near_ii,   // former spine vertex now folded onto a white spine vertex
    near_iii,  // spine vertex of the output tree
};
std::string_view to_string(RecoveryCase c);

struct RecoveredCycle {
    Cycle cycle;
    RecoveryCase rcase = RecoveryCase::away_a;
};

// Recovers the factor of a black vertex lying at distance two or more from
// the spine (cases a-d).  Throws std::runtime_error on neighborhoods no tree
// in the image can produce.
Cycle recover_cycle_away(PlaneTree const& t2, int black_label);

// Recovers the factor of a spine vertex or of a black vertex adjacent to a
// white spine vertex (cases i-iii), using the segment data of the backbone.
Cycle recover_cycle_near_spine(PlaneTree const& t2, Backbone const& bb, int black_label);

// Dispatches to the away or near-spine recovery and reports which case fired.
RecoveredCycle recover_cycle(PlaneTree const& t2, Backbone const& bb, int black_label);

// The full inverse map: recovers all n factors and validates the result.
// Requires every type entry b_i >= 1 and n >= 2 (std::invalid_argument
// otherwise); structural failures on trees outside the image raise
// std::runtime_error.
MinimalFactorization run_A_inverse(StanleyTree const& t);

// Predicts the complete output tree directly from the relabeled initial
// tree, without running the rewriting algorithm: folds every branch by the
// two prunings, resolves every jump target's landing vertex, assembles the
// merged white spine vertices segment by segment, and reads off the final
// rotations.  The result equals the rewriting output on the whole domain.
StanleyTree predict_direct_neighborhoods(PlaneTree const& t1);

}  // namespace stanley
