#pragma once

/*
 * Shared test fixtures.
 *
 * golden27: a 14-factor minimal factorization in S_27 of type
 * (2,3,3,3,3,3,3,3,3,3,3,3,3,2) used as the worked end-to-end example
 * throughout the test suite, together with its expected cluster metadata
 * and the expected operation log of the forward algorithm.
 *
 * sample10: a 4-factor minimal factorization in S_10 whose product being
 * (1,2,...,10) pins down the composition convention (rightmost factor
 * acts first); with the opposite convention the product is not a long
 * cycle in the required way.
 */

#include <string>
#include <vector>

#include "stanley/factorization.hpp"

namespace stanley::testing {

inline MinimalFactorization sample10() {
    return parse_line("k=10; (7,8,9,10)(1,2)(2,5,6,10)(2,3,4)");
}

inline MinimalFactorization golden27() {
    return parse_line(
        "k=27; "
        "(2,3)(13,15,14)(6,9,10)(1,6,26)(11,15,12)(6,8,7)(1,16,15)"
        "(21,27,24)(22,23,25)(16,19,18)(2,20,1)(20,22,21)(1,5,4)(16,17)");
}

struct OpExpectation {
    char kind;  // 'B' or 'J'
    int x;
    int y;
};

// Forward run on golden27 with spine clusters processed in ascending label
// order (1, 2, 16) and the rib sequence (6, 15, 20, 21, 22).
inline std::vector<OpExpectation> golden27_expected_ops() {
    return {
        {'B', 7, 4}, {'B', 7, 11}, {'J', 7, 13},   // spine cluster 1
        {'B', 1, 11},                              // spine cluster 2
        {'J', 7, 10}, {'B', 7, 14},                // spine cluster 16
        {'B', 4, 3}, {'J', 4, 6},                  // rib cluster 6
        {'B', 7, 2}, {'B', 7, 5},                  // rib cluster 15
        {'J', 11, 12},                             // rib cluster 20
        {'B', 12, 8},                              // rib cluster 21
        {'B', 12, 9},                              // rib cluster 22
    };
}

struct ClusterExpectation {
    int label;
    std::vector<int> black_members;  // sorted
    int anchor;
};

inline std::vector<ClusterExpectation> golden27_expected_clusters() {
    return {
        {1, {4, 7, 11, 13}, 7},
        {2, {1, 11}, 1},
        {6, {3, 4, 6}, 4},
        {15, {2, 5, 7}, 7},
        {16, {7, 10, 14}, 7},
        {20, {11, 12}, 11},
        {21, {8, 12}, 12},
        {22, {9, 12}, 12},
    };
}

inline std::vector<int> golden27_spine_blacks() { return {1, 7, 11, 14}; }
inline std::vector<int> golden27_spine_clusters() { return {1, 2, 16}; }
inline std::vector<int> golden27_sigma() { return {6, 15, 20, 21, 22}; }

}  // namespace stanley::testing
