#include "stanley/forward_bijection.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>

namespace stanley {

namespace {

std::string describe(char const* op, char const* tag, int x, int y, std::string const& detail) {
    std::ostringstream out;
    out << op << " " << tag << " violated (x=" << x << ", y=" << y << "): " << detail;
    return out.str();
}

// Label of the unique cluster anchored at x that contains y, or -1.  The
// membership sets come from the initial tree and never change.
int find_cluster_label(ClusterTable const& table, int x, int y) {
    for (ClusterInfo const& info : table.clusters)
        if (info.anchor == x &&
            std::binary_search(info.black_members.begin(), info.black_members.end(), y))
            return info.label;
    return -1;
}

// The alive edge with the given label whose black endpoint is the given
// vertex, or -1.  A tree has no parallel edges, so it is unique.
int cluster_edge_at(PlaneTree const& t, int label, int black_id) {
    for (TreeEdge const& e : t.edges)
        if (e.alive && e.label == label && e.black_end == black_id) return e.id;
    return -1;
}

int current_root_edge(PlaneTree const& t, int label) {
    int found = -1;
    for (TreeEdge const& e : t.edges) {
        if (!e.alive || e.label != label || !e.is_cluster_root) continue;
        if (found != -1)
            throw std::logic_error("cluster " + std::to_string(label) + " has two root edges");
        found = e.id;
    }
    if (found == -1)
        throw std::logic_error("cluster " + std::to_string(label) + " has no root edge");
    return found;
}

int edge_between(PlaneTree const& t, int vertex_id, int other_id) {
    for (int eid : t.vertex(vertex_id).ccw)
        if (t.other_end(eid, vertex_id) == other_id) return eid;
    return -1;
}

std::vector<int> compute_attraction(PlaneTree const& t, int n) {
    std::vector<int> b(static_cast<size_t>(n), 0);
    for (TreeVertex const& v : t.vertices) {
        if (!v.alive || v.color != Color::white) continue;
        std::set<int> attracted;
        int max_dashed = 0;
        for (int eid : v.ccw) {
            TreeEdge const& e = t.edge(eid);
            int label = t.vertex(e.black_end).label;
            if (e.state == EdgeState::solid)
                attracted.insert(label);
            else
                max_dashed = std::max(max_dashed, label);
        }
        if (max_dashed > 0) attracted.insert(max_dashed);
        for (int label : attracted) ++b[static_cast<size_t>(label - 1)];
    }
    return b;
}

// Reason Invariant 1 fails, or empty if it holds.
std::string invariant1_reason(AlgorithmState const& s) {
    PlaneTree const& t = s.tree;
    int k = 0;
    for (TreeEdge const& e : t.edges)
        if (e.alive) k = std::max(k, e.label);
    for (int c = 1; c <= k; ++c) {
        std::vector<int> eids;
        for (TreeEdge const& e : t.edges)
            if (e.alive && e.label == c) eids.push_back(e.id);
        if (eids.empty()) return "cluster " + std::to_string(c) + " has no edges";
        int center = t.edge(eids.front()).white_end;
        for (int eid : eids)
            if (t.edge(eid).white_end != center)
                return "cluster " + std::to_string(c) + " edges have no common white endpoint";
        int anchor = s.cluster_table.cluster(c).anchor;
        bool anchored = false;
        for (int eid : t.vertex(center).ccw)
            if (t.vertex(t.edge(eid).black_end).label == anchor) anchored = true;
        if (!anchored)
            return "anchor of cluster " + std::to_string(c) + " is not adjacent to the center";
        int roots = 0, root_black = -1;
        for (int eid : eids)
            if (t.edge(eid).is_cluster_root) {
                ++roots;
                root_black = t.edge(eid).black_end;
            }
        if (roots != 1)
            return "cluster " + std::to_string(c) + " has " + std::to_string(roots) +
                   " root edges";
        if (t.vertex(root_black).label != anchor && !t.vertex(root_black).touched)
            return "root of cluster " + std::to_string(c) +
                   " ends at an untouched non-anchor vertex";
    }
    return {};
}

// Serializes the subtree hanging below in_edge at vid with rotations
// normalized to start at the incoming edge.  Sentinels mark structure that
// the baseline cannot contain, so any corruption shows up as a mismatch.
void serialize_subtree(PlaneTree const& t, int vid, int in_edge, std::vector<int>& out) {
    TreeVertex const& v = t.vertex(vid);
    if (!v.alive) {
        out.push_back(-7);
        return;
    }
    out.push_back(vid);
    out.push_back(static_cast<int>(v.ccw.size()));
    size_t base = v.ccw.size();
    for (size_t i = 0; i < v.ccw.size(); ++i)
        if (v.ccw[i] == in_edge) base = i;
    if (base == v.ccw.size()) {
        out.push_back(-8);
        return;
    }
    for (size_t sft = 1; sft < v.ccw.size(); ++sft) {
        int eid = v.ccw[(base + sft) % v.ccw.size()];
        TreeEdge const& e = t.edge(eid);
        out.push_back(eid);
        out.push_back(e.label);
        if (!e.alive) {
            out.push_back(-9);
            continue;
        }
        serialize_subtree(t, t.other_end(eid, vid), eid, out);
    }
}

std::vector<int> branch_stream(PlaneTree const& t, int black_id, int out_edge) {
    std::vector<int> s{out_edge, t.edge(out_edge).label};
    serialize_subtree(t, black_id, out_edge, s);
    return s;
}

void collect_subtree_edges(PlaneTree const& t, int vid, int in_edge, std::vector<int>& out) {
    for (int eid : t.vertex(vid).ccw) {
        if (eid == in_edge) continue;
        out.push_back(eid);
        collect_subtree_edges(t, t.other_end(eid, vid), eid, out);
    }
}

// Parent edge of every non-spine vertex in the direction of the spine.
std::vector<int> parent_edges_toward_spine(PlaneTree const& t) {
    std::vector<int> path = spine_path(t);
    std::vector<int> parent_edge(t.vertices.size(), -1);
    std::vector<char> seen(t.vertices.size(), 0);
    std::vector<int> queue;
    for (int v : path) {
        seen[static_cast<size_t>(v)] = 1;
        queue.push_back(v);
    }
    for (size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int eid : t.vertex(v).ccw) {
            int u = t.other_end(eid, v);
            if (seen[static_cast<size_t>(u)]) continue;
            seen[static_cast<size_t>(u)] = 1;
            parent_edge[static_cast<size_t>(u)] = eid;
            queue.push_back(u);
        }
    }
    return parent_edge;
}

// The spine member of a spine cluster other than its anchor.
int upper_spine_member(ClusterTable const& table, ClusterInfo const& info) {
    for (int m : info.black_members)
        if (m != info.anchor &&
            std::binary_search(table.spine_blacks.begin(), table.spine_blacks.end(), m))
            return m;
    throw std::logic_error("spine cluster " + std::to_string(info.label) +
                           " has no second spine member");
}

// Untouched spine clusters must still look like their initial picture: the
// anchor holds the root, the cluster edges keep their initial cyclic order
// around the center, and foreign edges appear only next to the edge leading
// to the upper spine member.
void check_untouched_spine_clusters(AlgorithmState const& s) {
    PlaneTree const& t = s.tree;
    for (int c : s.cluster_table.spine_clusters) {
        if (s.touched_clusters.count(c)) continue;
        ClusterInfo const& info = s.cluster_table.cluster(c);
        int root = current_root_edge(t, c);
        if (t.vertex(t.edge(root).black_end).label != info.anchor)
            throw std::logic_error("untouched spine cluster " + std::to_string(c) +
                                   ": root separated from the anchor");
        int y1 = upper_spine_member(s.cluster_table, info);
        int center = t.edge(root).white_end;
        std::vector<int> const& rot = t.vertex(center).ccw;
        std::vector<size_t> positions;
        std::vector<int> labels;
        for (size_t i = 0; i < rot.size(); ++i)
            if (t.edge(rot[i]).label == c) {
                positions.push_back(i);
                labels.push_back(t.vertex(t.edge(rot[i]).black_end).label);
            }
        std::vector<int> const& initial = s.baseline.spine_center_blacks.at(c);
        bool same = labels.size() == initial.size();
        if (same && !labels.empty()) {
            bool any = false;
            for (size_t off = 0; off < labels.size() && !any; ++off) {
                bool ok = true;
                for (size_t i = 0; i < labels.size() && ok; ++i)
                    ok = labels[(off + i) % labels.size()] == initial[i];
                any = ok;
            }
            same = any;
        }
        if (!same)
            throw std::logic_error("untouched spine cluster " + std::to_string(c) +
                                   ": edge cyclic order changed");
        size_t m = positions.size();
        for (size_t a = 0; a < m; ++a) {
            size_t next = (a + 1) % m;
            size_t gap = (positions[next] + rot.size() - positions[a] - 1) % rot.size();
            if (gap == 0) continue;
            if (labels[a] != y1 && labels[next] != y1)
                throw std::logic_error("untouched spine cluster " + std::to_string(c) +
                                       ": foreign edges away from the upper spine edge");
        }
    }
}

// Branches of untouched non-spine black vertices must match their initial
// serialization exactly.
void check_branches(AlgorithmState const& s) {
    for (auto const& [black_id, out_edge] : s.baseline.branch_edge) {
        if (s.tree.vertex(black_id).touched) continue;
        if (branch_stream(s.tree, black_id, out_edge) != s.baseline.branch_shape.at(black_id))
            throw std::logic_error("branch of untouched black vertex " +
                                   std::to_string(s.tree.vertex(black_id).label) +
                                   " changed");
    }
}

struct PreOpInfo {
    std::vector<char> coincide;  // per label: root's black endpoint == anchor
    std::vector<int> attraction;
};

std::vector<char> root_anchor_coincidence(AlgorithmState const& s) {
    PlaneTree const& t = s.tree;
    size_t k = s.cluster_table.clusters.size();
    std::vector<int> root_black(k + 1, -1);
    for (TreeEdge const& e : t.edges)
        if (e.alive && e.is_cluster_root)
            root_black[static_cast<size_t>(e.label)] = t.vertex(e.black_end).label;
    std::vector<char> coincide(k + 1, 0);
    for (size_t c = 1; c <= k; ++c)
        coincide[c] = root_black[c] == s.cluster_table.cluster(static_cast<int>(c)).anchor;
    return coincide;
}

PreOpInfo capture_pre_op(AlgorithmState const& s) {
    PreOpInfo pre;
    if (s.instrument) pre.coincide = root_anchor_coincidence(s);
    pre.attraction = s.attraction;
    return pre;
}

// Checks shared by both operations after the rewrite.  separating_label is
// the one cluster a jump may separate (-1 for bends, which may separate
// none); separation is legal only if that cluster's anchor is y and its root
// ended at y beforehand.
void instrument_after_op(AlgorithmState& s, PreOpInfo const& pre, int separating_label,
                         int y) {
    s.attraction = compute_attraction(s.tree, static_cast<int>(s.attraction.size()));
    if (!s.instrument) return;
    std::string reason = invariant1_reason(s);
    if (!reason.empty()) throw std::logic_error("invariant broken: " + reason);
    for (size_t i = 0; i < s.attraction.size(); ++i)
        if (s.attraction[i] > pre.attraction[i])
            throw std::logic_error("attraction counter " + std::to_string(i + 1) +
                                   " increased");
    std::vector<char> now = root_anchor_coincidence(s);
    for (size_t c = 1; c < now.size(); ++c) {
        if (!pre.coincide[c] || now[c]) continue;
        if (static_cast<int>(c) != separating_label)
            throw std::logic_error("operation separated root and anchor in cluster " +
                                   std::to_string(c));
        if (s.cluster_table.cluster(static_cast<int>(c)).anchor != y)
            throw std::logic_error("jump separated root and anchor in cluster " +
                                   std::to_string(c) + " not anchored at y");
    }
    check_untouched_spine_clusters(s);
    check_branches(s);
}

// When the target is a non-spine vertex, every edge of its (still intact)
// branch must be solid at the moment it is folded in.
void check_branch_solid(AlgorithmState const& s, int y_black_id) {
    if (!s.instrument) return;
    auto it = s.baseline.branch_edges.find(y_black_id);
    if (it == s.baseline.branch_edges.end()) return;  // spine vertex
    for (int eid : it->second) {
        TreeEdge const& e = s.tree.edge(eid);
        if (!e.alive || e.state != EdgeState::solid)
            throw std::logic_error("branch of the operation target is not all solid");
    }
}

void apply_bend(AlgorithmState& s, int x, int y) {
    PlaneTree& t = s.tree;
    int c1 = find_cluster_label(s.cluster_table, x, y);
    if (c1 == -1)
        throw std::runtime_error(
            describe("bend", "B1", x, y, "no cluster anchored at x contains y"));
    int yid = t.black_with_label(y);
    int e1y = cluster_edge_at(t, c1, yid);
    if (e1y == -1)
        throw std::runtime_error(
            describe("bend", "B1", x, y, "y no longer carries an edge of the cluster"));
    int v1 = t.edge(e1y).white_end;
    int root = current_root_edge(t, c1);
    if (t.edge(root).black_end == yid)
        throw std::runtime_error(
            describe("bend", "B2", x, y, "the cluster root ends at y"));
    if (t.degree(yid) < 2)
        throw std::runtime_error(describe("bend", "B3", x, y, "y has degree below 2"));

    check_branch_solid(s, yid);
    PreOpInfo pre = capture_pre_op(s);

    int e2y = t.cw_next(yid, e1y);
    int label2 = t.edge(e2y).label;
    int v2 = t.edge(e2y).white_end;
    std::vector<int> block = t.rotation_after(v2, e2y);

    t.rotation_remove(yid, e2y);
    t.rotation_remove(v2, e2y);
    bool was_root = t.edge(e2y).is_cluster_root;
    t.edge(e2y).alive = false;
    t.edge(e2y).is_cluster_root = false;

    t.edge(e1y).label = label2;
    if (was_root) t.edge(e1y).is_cluster_root = true;

    t.rotation_insert_after(v1, e1y, block);
    for (int eid : block) t.edge(eid).white_end = v1;
    t.vertex(v2).alive = false;
    t.vertex(v2).ccw.clear();

    s.touched_clusters.insert(c1);
    t.vertex(yid).touched = true;

    int xv = edge_between(t, v1, t.black_with_label(x));
    if (xv == -1) throw std::logic_error("bend: anchor lost adjacency to the center");
    t.edge(xv).state = EdgeState::dashed;
    t.edge(e1y).state = EdgeState::dashed;

    s.op_log.push_back({OpKind::bend, x, y, std::nullopt});
    instrument_after_op(s, pre, -1, y);
}

void apply_jump(AlgorithmState& s, int x, int y) {
    PlaneTree& t = s.tree;
    int c1 = find_cluster_label(s.cluster_table, x, y);
    if (c1 == -1)
        throw std::runtime_error(
            describe("jump", "J1", x, y, "no cluster anchored at x contains y"));
    if (!(x < y))
        throw std::runtime_error(describe("jump", "J1", x, y, "requires x < y"));
    int yid = t.black_with_label(y);
    int e1y = cluster_edge_at(t, c1, yid);
    if (e1y == -1)
        throw std::runtime_error(
            describe("jump", "J1", x, y, "y no longer carries an edge of the cluster"));
    int v1 = t.edge(e1y).white_end;
    int root = current_root_edge(t, c1);
    if (t.cw_next(v1, e1y) != root)
        throw std::runtime_error(describe(
            "jump", "J2", x, y, "the clockwise neighbor of y around the center is not the root"));
    int jid = t.edge(root).black_end;
    if (jid == yid)
        throw std::runtime_error(describe("jump", "J2", x, y, "the landing vertex equals y"));
    if (t.degree(yid) < 3)
        throw std::runtime_error(describe("jump", "J3", x, y, "y has degree below 3"));
    if (!t.vertex(t.black_with_label(x)).touched)
        throw std::runtime_error(describe("jump", "J4", x, y, "x is untouched"));
    int j_label = t.vertex(jid).label;
    if (!(j_label < y))
        throw std::logic_error("jump: landing vertex label is not below y");

    check_branch_solid(s, yid);
    PreOpInfo pre = capture_pre_op(s);

    int e2 = t.cw_next(yid, e1y);
    int e3 = t.cw_next(yid, e2);
    int label2 = t.edge(e2).label;
    int label3 = t.edge(e3).label;
    int v2 = t.edge(e2).white_end;
    int v3 = t.edge(e3).white_end;
    std::vector<int> block2 = t.rotation_after(v2, e2);
    std::vector<int> block3 = t.rotation_after(v3, e3);
    int d = t.degree(yid);
    int e4 = d > 3 ? t.cw_next(yid, e3) : -1;
    bool root2 = t.edge(e2).is_cluster_root;
    bool root3 = t.edge(e3).is_cluster_root;

    for (auto [eid, wv] : {std::pair{e1y, v1}, {e2, v2}, {e3, v3}}) {
        t.rotation_remove(yid, eid);
        t.rotation_remove(wv, eid);
        t.edge(eid).alive = false;
        t.edge(eid).is_cluster_root = false;
    }

    int w = t.new_vertex(Color::white);
    t.vertex(w).origin = Origin::artificial;

    int edge_a = t.new_edge(label2, jid, w);
    t.rotation_insert_before(jid, root, {edge_a});
    if (root2) t.edge(edge_a).is_cluster_root = true;

    int edge_d = t.new_edge(label3, yid, w);
    if (e4 == -1)
        t.vertex(yid).ccw.push_back(edge_d);
    else
        t.rotation_insert_after(yid, e4, {edge_d});
    if (root3) t.edge(edge_d).is_cluster_root = true;

    std::vector<int>& wrot = t.vertex(w).ccw;
    wrot.push_back(edge_a);
    wrot.insert(wrot.end(), block2.begin(), block2.end());
    wrot.push_back(edge_d);
    wrot.insert(wrot.end(), block3.begin(), block3.end());
    for (int eid : block2) t.edge(eid).white_end = w;
    for (int eid : block3) t.edge(eid).white_end = w;
    t.vertex(v2).alive = false;
    t.vertex(v2).ccw.clear();
    t.vertex(v3).alive = false;
    t.vertex(v3).ccw.clear();

    s.touched_clusters.insert(c1);
    t.vertex(yid).touched = true;
    t.edge(edge_a).state = EdgeState::dashed;
    t.edge(edge_d).state = EdgeState::dashed;

    s.op_log.push_back({OpKind::jump, x, y, j_label});
    instrument_after_op(s, pre, label2, y);
}

void run_phase(AlgorithmState& s, std::vector<int> const& order, bool spine_phase) {
    std::set<int> processed = s.touched_clusters;
    for (int c : order) {
        ClusterInfo const& info = s.cluster_table.cluster(c);
        if (spine_phase != info.is_spine)
            throw std::invalid_argument("cluster " + std::to_string(c) +
                                        " does not belong to this phase");
        int y1 = spine_phase ? upper_spine_member(s.cluster_table, info) : -1;
        for (int y : info.black_members) {
            if (y == info.anchor) continue;
            bool do_bend = spine_phase ? (y == y1 || y < info.anchor) : y < info.anchor;
            if (do_bend)
                apply_bend(s, info.anchor, y);
            else
                apply_jump(s, info.anchor, y);
        }
        if (s.instrument) {
            processed.insert(c);
            if (s.touched_clusters != processed)
                throw std::logic_error("touched clusters diverge from the processed ones");
        }
    }
}

void ensure_permutation_of(std::vector<int> const& order, std::vector<int> expected,
                           char const* phase) {
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    std::sort(expected.begin(), expected.end());
    if (sorted != expected)
        throw std::invalid_argument(std::string(phase) +
                                    " order is not a permutation of the phase's clusters");
}

StanleyTree finish_run(AlgorithmState& s, MinimalFactorization const& f) {
    if (static_cast<int>(s.op_log.size()) != f.n() - 1)
        throw std::logic_error("operation count is not n-1");
    for (OpRecord const& op : s.op_log)
        if (op.kind == OpKind::jump && (!op.j || *op.j >= op.y))
            throw std::logic_error("a jump landed at or above its target");
    StanleyTree out = from_plane_tree(s.tree);
    StanleyType expected = output_type_for(f.ftype);
    if (!(type_of(out) == expected))
        throw std::logic_error("output type differs from the predicted one");
    if (s.instrument && s.attraction != expected.b)
        throw std::logic_error("final attraction counters differ from the output type");
    return out;
}

}  // namespace

StanleyType output_type_for(FactorizationType const& t) {
    if (t.n() == 1) return StanleyType{{t.a.front()}};
    std::vector<int> b(t.a.size());
    for (size_t i = 0; i < t.a.size(); ++i) {
        bool endpoint = i == 0 || i + 1 == t.a.size();
        b[i] = t.a[i] - (endpoint ? 1 : 2);
    }
    return StanleyType{std::move(b)};
}

AlgorithmState make_initial_state(MinimalFactorization const& f, bool instrument) {
    ValidationFailure why = validate_reason(f);
    if (why != ValidationFailure::ok)
        throw std::invalid_argument("make_initial_state: " + std::string(to_string(why)));
    AlgorithmState s;
    s.instrument = instrument;
    s.tree = relabel_to_T1(build_T0(f));
    s.cluster_table = compute_cluster_table(s.tree);
    for (ClusterInfo const& info : s.cluster_table.clusters)
        s.tree.edge(info.root_edge).is_cluster_root = true;
    std::vector<int> path = spine_path(s.tree);
    for (size_t i = 0; i < path.size(); i += 2) s.tree.vertex(path[i]).touched = true;
    s.attraction = compute_attraction(s.tree, f.n());
    if (instrument) {
        for (int c : s.cluster_table.spine_clusters) {
            ClusterInfo const& info = s.cluster_table.cluster(c);
            std::vector<int> labels;
            for (int eid : s.tree.vertex(info.center).ccw)
                labels.push_back(s.tree.vertex(s.tree.edge(eid).black_end).label);
            s.baseline.spine_center_blacks[c] = std::move(labels);
        }
        std::vector<int> parent_edge = parent_edges_toward_spine(s.tree);
        for (TreeVertex const& v : s.tree.vertices) {
            if (!v.alive || v.color != Color::black) continue;
            int out_edge = parent_edge[static_cast<size_t>(v.id)];
            if (out_edge == -1) continue;  // spine vertex
            s.baseline.branch_edge[v.id] = out_edge;
            s.baseline.branch_shape[v.id] = branch_stream(s.tree, v.id, out_edge);
            std::vector<int> eids{out_edge};
            collect_subtree_edges(s.tree, v.id, out_edge, eids);
            s.baseline.branch_edges[v.id] = std::move(eids);
        }
        std::string reason = invariant1_reason(s);
        if (!reason.empty()) throw std::logic_error("initial state: " + reason);
        check_untouched_spine_clusters(s);
    }
    return s;
}

AlgorithmState bend(AlgorithmState s, int x, int y) {
    apply_bend(s, x, y);
    return s;
}

AlgorithmState jump(AlgorithmState s, int x, int y) {
    apply_jump(s, x, y);
    return s;
}

AlgorithmState spine_treatment(AlgorithmState s, std::vector<int> const* cluster_order) {
    std::vector<int> order =
        cluster_order ? *cluster_order : s.cluster_table.spine_clusters;
    ensure_permutation_of(order, s.cluster_table.spine_clusters, "spine");
    run_phase(s, order, true);
    return s;
}

AlgorithmState rib_treatment(AlgorithmState s, std::vector<int> const* cluster_order) {
    std::vector<int> order = cluster_order ? *cluster_order : s.cluster_table.sigma;
    ensure_permutation_of(order, s.cluster_table.sigma, "rib");
    run_phase(s, order, false);
    return s;
}

StanleyTree run_A(MinimalFactorization const& f, bool instrument) {
    AlgorithmState s = make_initial_state(f, instrument);
    run_phase(s, s.cluster_table.spine_clusters, true);
    run_phase(s, s.cluster_table.sigma, false);
    return finish_run(s, f);
}

StanleyTree run_A_with_orders(MinimalFactorization const& f, std::vector<int> const& spine_order,
                              std::vector<int> const& rib_order, bool instrument) {
    AlgorithmState s = make_initial_state(f, instrument);
    ensure_permutation_of(spine_order, s.cluster_table.spine_clusters, "spine");
    ensure_permutation_of(rib_order, s.cluster_table.sigma, "rib");
    run_phase(s, spine_order, true);
    run_phase(s, rib_order, false);
    return finish_run(s, f);
}

bool check_invariant1(AlgorithmState const& s) { return invariant1_reason(s).empty(); }

}  // namespace stanley
