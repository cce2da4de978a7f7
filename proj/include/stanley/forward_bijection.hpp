// The forward map from minimal factorizations to Stanley trees: the two
// local rewriting steps (bend and jump), the spine and rib phases that drive
// them, and the instrumented runtime checks used to verify the structural
// invariants on every step.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "stanley/factorization.hpp"
#include "stanley/plane_tree.hpp"
#include "stanley/stanley_tree.hpp"

namespace stanley {

enum class OpKind { bend, jump };

struct OpRecord {
    OpKind kind = OpKind::bend;
    int x = -1;            // anchor of the driving cluster
    int y = -1;            // the black vertex being folded in
    std::optional<int> j;  // jump only: the landing black vertex
    bool operator==(OpRecord const&) const = default;
};

// Frozen pictures of the initial tree consulted by the instrumented checks:
// the rotation of every spine-cluster center and the shape of every non-spine
// branch (which must stay intact until its top black vertex is touched).
struct InstrumentBaseline {
    // spine cluster label -> ccw black labels around its center initially
    std::map<int, std::vector<int>> spine_center_blacks;
    // non-spine black vertex id -> edge id of its outgoing (spineward) edge
    std::map<int, int> branch_edge;
    // non-spine black vertex id -> serialized branch below that edge
    std::map<int, std::vector<int>> branch_shape;
    // non-spine black vertex id -> ids of all edges inside the branch
    std::map<int, std::vector<int>> branch_edges;
};

struct AlgorithmState {
    PlaneTree tree;
    ClusterTable cluster_table;
    std::set<int> touched_clusters;
    // attraction[i-1] counts white vertices attracted to black i: joined to i
    // by a solid edge, or by a dashed edge with i maximal among dashed
    // neighbors.  Kept current after every step; each entry only ever
    // decreases, ending at the output type.
    std::vector<int> attraction;
    std::vector<OpRecord> op_log;
    bool instrument = false;
    InstrumentBaseline baseline;  // populated when instrument is set
};

// Type of the output tree determined by the factor lengths: the first and
// last factors lose one, interior factors lose two; a single factor keeps
// its full length.
StanleyType output_type_for(FactorizationType const& t);

// Initial state: the relabeled tree with cluster roots flagged, spine black
// vertices touched, every edge solid, and attraction counters at the factor
// lengths.  Throws std::invalid_argument if the factorization is invalid.
AlgorithmState make_initial_state(MinimalFactorization const& f, bool instrument = false);

// One rewriting step.  Preconditions are hard errors: std::runtime_error
// whose message names the violated assumption (B1..B3 for bend, J1..J4 for
// jump).  When s.instrument is set, every structural invariant is re-checked
// after the step and violations throw std::logic_error.
AlgorithmState bend(AlgorithmState s, int x, int y);
AlgorithmState jump(AlgorithmState s, int x, int y);

// The two phases.  The default order is ascending cluster label for the
// spine phase and the precomputed sigma sequence for the rib phase; a
// non-null order overrides it (it must be a permutation of the default set;
// the output is the same for every admissible order, which the tests check
// rather than assume).
AlgorithmState spine_treatment(AlgorithmState s, std::vector<int> const* cluster_order = nullptr);
AlgorithmState rib_treatment(AlgorithmState s, std::vector<int> const* cluster_order = nullptr);

// The full forward map.  Runs both phases, verifies the always-on sanity
// conditions (operation count n-1, every jump lands below its target, output
// type as predicted), and returns the canonical encoding of the final tree.
StanleyTree run_A(MinimalFactorization const& f, bool instrument = false);

// run_A under explicit phase orders (used by the order-independence tests).
StanleyTree run_A_with_orders(MinimalFactorization const& f, std::vector<int> const& spine_order,
                              std::vector<int> const& rib_order, bool instrument = false);

// True iff each cluster's alive edges share a white endpoint, its anchor is
// adjacent to that endpoint, exactly one cluster edge is flagged as the root,
// and a root whose black endpoint differs from the anchor ends in a touched
// vertex.
bool check_invariant1(AlgorithmState const& s);

}  // namespace stanley
