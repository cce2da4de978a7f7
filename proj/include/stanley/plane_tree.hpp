// Bicolored plane trees represented as rotation systems: each vertex stores
// the counterclockwise cyclic order of its incident edges, and "clockwise"
// is the reverse of the stored order.  This header also declares the
// construction of the initial trees from a minimal factorization and the
// static cluster metadata read off the relabeled tree.
#pragma once

#include <string>
#include <vector>

#include "stanley/factorization.hpp"

namespace stanley {

enum class Color { black, white };
enum class EdgeState { solid, dashed };
enum class Origin { organic, artificial };

// Vertices and edges carry stable surrogate ids: rewriting steps that merge
// or mint vertices retire old records (alive = false) instead of renumbering,
// so ids held by callers stay valid.
struct TreeVertex {
    int id = -1;
    Color color = Color::black;
    int label = -1;        // -1 means unlabeled
    std::vector<int> ccw;  // incident edge ids in counterclockwise order
    bool touched = false;
    Origin origin = Origin::organic;
    bool alive = true;
};

struct TreeEdge {
    int id = -1;
    int label = -1;
    int black_end = -1;
    int white_end = -1;
    EdgeState state = EdgeState::solid;
    bool is_cluster_root = false;
    bool alive = true;
};

struct PlaneTree {
    std::vector<TreeVertex> vertices;  // indexed by id; may contain retired records
    std::vector<TreeEdge> edges;       // indexed by id; may contain retired records

    TreeVertex& vertex(int id) { return vertices.at(static_cast<size_t>(id)); }
    TreeVertex const& vertex(int id) const { return vertices.at(static_cast<size_t>(id)); }
    TreeEdge& edge(int id) { return edges.at(static_cast<size_t>(id)); }
    TreeEdge const& edge(int id) const { return edges.at(static_cast<size_t>(id)); }

    int new_vertex(Color color, int label = -1);
    // Creates an edge record; rotations of the endpoints are not modified.
    int new_edge(int label, int black_id, int white_id);

    int black_with_label(int label) const;  // vertex id; throws if absent
    int n_blacks() const;                   // number of alive black vertices
    int max_edge_label() const;             // over alive edges

    int degree(int vertex_id) const { return static_cast<int>(vertex(vertex_id).ccw.size()); }
    int other_end(int edge_id, int vertex_id) const;

    // Cyclic neighbors of an edge in a vertex rotation.
    int ccw_next(int vertex_id, int edge_id) const;
    int cw_next(int vertex_id, int edge_id) const;

    // Rotation surgery used by the rewriting steps.
    void rotation_insert_after(int vertex_id, int after_edge, std::vector<int> const& block);
    void rotation_insert_before(int vertex_id, int before_edge, std::vector<int> const& block);
    void rotation_remove(int vertex_id, int edge_id);
    // All rotation entries strictly after `from_edge`, wrapping around, in
    // counterclockwise order (length = degree - 1).
    std::vector<int> rotation_after(int vertex_id, int from_edge) const;
};

// Structural sanity: connected bipartite tree over the alive records,
// rotations consistent with edge endpoints, black labels a bijection with
// {1..n}.  Throws std::logic_error with a description on violation.
void validate_structure(PlaneTree const& t);

// Tree with n labeled black and k labeled white vertices built from the
// factors: the counterclockwise rotation at black vertex i spells the cycle
// sigma_i, white rotations follow the spine/non-spine ordering rules, and
// every edge is labeled by its white endpoint.
PlaneTree build_T0(MinimalFactorization const& f);

// Copy of t0 with white labels removed; edge labels (= former white-endpoint
// labels) survive and define clusters as label classes.
PlaneTree relabel_to_T1(PlaneTree const& t0);

// Unique tree path from black vertex 1 to black vertex n, alternating
// black/white, as vertex ids.
std::vector<int> spine_path(PlaneTree const& t);

// White non-spine vertices that are leftmost children of their parent: the
// child edge reached first going clockwise from the parent-side edge.  For a
// black spine vertex each incident spine edge serves as a parent-side
// reference, so such a vertex can have up to two leftmost children.
// Returns sorted vertex ids.
std::vector<int> leftist_vertices(PlaneTree const& t1);

struct ClusterInfo {
    int label = -1;
    std::vector<int> black_members;  // sorted black labels (B_c)
    int anchor = -1;                 // alpha_c
    int root_edge = -1;              // edge id
    int center = -1;                 // vertex id
    bool is_spine = false;           // contains two black spine vertices
    bool is_leaf = false;            // exactly one edge
    int rib_depth = -1;  // cluster centers strictly between center and spine
                         // (set for non-spine non-leaf clusters only); any
                         // depth-respecting order of sigma is valid
};

struct ClusterTable {
    std::vector<ClusterInfo> clusters;  // indexed by label - 1
    std::vector<int> spine_blacks;      // sorted black labels on the spine
    std::vector<int> spine_clusters;    // sorted labels of spine clusters
    // Non-spine non-leaf cluster labels in processing order: sorted by the
    // number of cluster centers strictly between the center and the spine
    // (so predecessors always come first), ties by smaller label.
    std::vector<int> sigma;

    ClusterInfo const& cluster(int label) const {
        return clusters.at(static_cast<size_t>(label - 1));
    }
};

ClusterTable compute_cluster_table(PlaneTree const& t1);

// Text format, one record per alive vertex then per alive edge:
//   v<id> <black|white> label=<int|-> ccw=[e3,e7,e1]
//   e<id> label=<int> black=v<id> white=v<id>
// The format captures the labeled rotation system; runtime flags (touched,
// dashed, cluster roots, origin) are not part of the interchange format.
// parse_tree_text(to_text(t)) reproduces the structure and to_text of the
// parse reproduces the text byte for byte.
std::string to_text(PlaneTree const& t);
PlaneTree parse_tree_text(std::string const& text);

// Graphviz DOT: black vertices filled, white hollow, edge labels printed,
// spine edges red when black vertices 1..n are present, dashed edges dashed,
// artificial whites double-circled.  Edges are emitted in a contour order
// compatible with the rotations (ordering=out) so renderers that honor
// ordering reproduce the embedding.
std::string to_dot(PlaneTree const& t);

}  // namespace stanley
