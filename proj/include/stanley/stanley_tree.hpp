// Stanley trees: bicolored plane trees with k labeled edges, n labeled black
// vertices, and unlabeled white vertices, encoded by a pair of permutations
// (sigma1, sigma2) of the edge labels whose cycles spell the counterclockwise
// rotations at white and black vertices, plus a labeling of sigma2's cycles.
#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "stanley/perm.hpp"
#include "stanley/plane_tree.hpp"

namespace stanley {

struct StanleyType {
    std::vector<int> b;

    explicit StanleyType(std::vector<int> b_);
    int n() const { return static_cast<int>(b.size()); }
    int k() const;  // sum of b plus n minus 1

    bool operator==(StanleyType const&) const = default;
    auto operator<=>(StanleyType const&) const = default;
};

struct StanleyTree {
    Permutation sigma1;  // white-vertex rotations
    Permutation sigma2;  // black-vertex rotations
    // Black labeling: (cycle minimum of a sigma2 cycle, black label in 1..n),
    // sorted by cycle minimum; a bijection onto {1..n}.
    std::vector<std::pair<int, int>> labels;

    // Validates that the pair encodes a plane tree (the cycle-incidence graph
    // is connected and #cycles(sigma1) + #cycles(sigma2) = k + 1) and that
    // the labeling is a bijection from sigma2's cycles onto {1..n}.
    // Throws std::invalid_argument otherwise.
    StanleyTree(Permutation sigma1_, Permutation sigma2_,
                std::vector<std::pair<int, int>> labels_);

    int k() const { return sigma1.k(); }
    int n() const { return static_cast<int>(labels.size()); }

    bool operator==(StanleyTree const&) const = default;
    // Canonical order: lexicographic on sigma1, then sigma2, then labels.
    auto operator<=>(StanleyTree const&) const = default;
};

bool equal(StanleyTree const& t1, StanleyTree const& t2);

// b_i = number of white vertices whose maximal black-neighbor label is i.
StanleyType type_of(StanleyTree const& t);

// Reads the encoding off a plane tree whose edges are labeled 1..k each once
// and whose black vertices are labeled 1..n.  Throws std::invalid_argument on
// repeated or missing labels.
StanleyTree from_plane_tree(PlaneTree const& p);

// Rebuilds the rotation-system form: black vertices first (ids 0..n-1 in
// label order), then white vertices in order of their cycles' minima.
PlaneTree to_plane_tree(StanleyTree const& t);

// All Stanley trees of the given type, each exactly once, in the canonical
// order.  Throws std::invalid_argument when k() exceeds
// stanley_enumeration_bound().
std::vector<StanleyTree> enumerate(StanleyType const& bt);

// Unbounded streaming variant; visiting order is deterministic but not the
// canonical sorted order.  Return false from the visitor to stop early.
void enumerate_streaming(StanleyType const& bt,
                         std::function<bool(StanleyTree const&)> const& visit);

// Default 8; the STANLEY_BIJ_MAX_K environment variable overrides it.
int stanley_enumeration_bound();

// Line format: `k=3; s1=(1,3,2); s2=(1)(2,3); labels=1:1,2:2` where every
// cycle (fixed points included) is printed sorted by its minimum and labels
// maps sigma2-cycle minima to black labels.
std::string to_line(StanleyTree const& t);
StanleyTree parse_stanley_line(std::string const& line);

}  // namespace stanley
