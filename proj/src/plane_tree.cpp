#include "stanley/plane_tree.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace stanley {

int PlaneTree::new_vertex(Color color, int label) {
    TreeVertex v;
    v.id = static_cast<int>(vertices.size());
    v.color = color;
    v.label = label;
    vertices.push_back(std::move(v));
    return vertices.back().id;
}

int PlaneTree::new_edge(int label, int black_id, int white_id) {
    if (vertex(black_id).color != Color::black || vertex(white_id).color != Color::white)
        throw std::logic_error("new_edge: endpoint colors are wrong");
    TreeEdge e;
    e.id = static_cast<int>(edges.size());
    e.label = label;
    e.black_end = black_id;
    e.white_end = white_id;
    edges.push_back(std::move(e));
    return edges.back().id;
}

int PlaneTree::black_with_label(int label) const {
    for (TreeVertex const& v : vertices)
        if (v.alive && v.color == Color::black && v.label == label) return v.id;
    throw std::invalid_argument("black_with_label: no black vertex labeled " + std::to_string(label));
}

int PlaneTree::n_blacks() const {
    int n = 0;
    for (TreeVertex const& v : vertices)
        if (v.alive && v.color == Color::black) ++n;
    return n;
}

int PlaneTree::max_edge_label() const {
    int m = 0;
    for (TreeEdge const& e : edges)
        if (e.alive) m = std::max(m, e.label);
    return m;
}

int PlaneTree::other_end(int edge_id, int vertex_id) const {
    TreeEdge const& e = edge(edge_id);
    if (e.black_end == vertex_id) return e.white_end;
    if (e.white_end == vertex_id) return e.black_end;
    throw std::logic_error("other_end: vertex is not an endpoint of the edge");
}

namespace {

size_t rotation_index(TreeVertex const& v, int edge_id) {
    for (size_t i = 0; i < v.ccw.size(); ++i)
        if (v.ccw[i] == edge_id) return i;
    throw std::logic_error("edge " + std::to_string(edge_id) + " not in rotation of vertex " +
                           std::to_string(v.id));
}

}  // namespace

int PlaneTree::ccw_next(int vertex_id, int edge_id) const {
    TreeVertex const& v = vertex(vertex_id);
    size_t i = rotation_index(v, edge_id);
    return v.ccw[(i + 1) % v.ccw.size()];
}

int PlaneTree::cw_next(int vertex_id, int edge_id) const {
    TreeVertex const& v = vertex(vertex_id);
    size_t i = rotation_index(v, edge_id);
    return v.ccw[(i + v.ccw.size() - 1) % v.ccw.size()];
}

void PlaneTree::rotation_insert_after(int vertex_id, int after_edge, std::vector<int> const& block) {
    TreeVertex& v = vertex(vertex_id);
    size_t i = rotation_index(v, after_edge);
    v.ccw.insert(v.ccw.begin() + static_cast<long>(i) + 1, block.begin(), block.end());
}

void PlaneTree::rotation_insert_before(int vertex_id, int before_edge, std::vector<int> const& block) {
    TreeVertex& v = vertex(vertex_id);
    size_t i = rotation_index(v, before_edge);
    v.ccw.insert(v.ccw.begin() + static_cast<long>(i), block.begin(), block.end());
}

void PlaneTree::rotation_remove(int vertex_id, int edge_id) {
    TreeVertex& v = vertex(vertex_id);
    size_t i = rotation_index(v, edge_id);
    v.ccw.erase(v.ccw.begin() + static_cast<long>(i));
}

std::vector<int> PlaneTree::rotation_after(int vertex_id, int from_edge) const {
    TreeVertex const& v = vertex(vertex_id);
    size_t i = rotation_index(v, from_edge);
    std::vector<int> out;
    out.reserve(v.ccw.size() - 1);
    for (size_t s = 1; s < v.ccw.size(); ++s) out.push_back(v.ccw[(i + s) % v.ccw.size()]);
    return out;
}

void validate_structure(PlaneTree const& t) {
    std::vector<int> alive_vertices;
    for (TreeVertex const& v : t.vertices)
        if (v.alive) alive_vertices.push_back(v.id);
    int edge_count = 0;
    for (TreeEdge const& e : t.edges) {
        if (!e.alive) continue;
        ++edge_count;
        TreeVertex const& b = t.vertex(e.black_end);
        TreeVertex const& w = t.vertex(e.white_end);
        if (!b.alive || !w.alive) throw std::logic_error("edge with retired endpoint");
        if (b.color != Color::black || w.color != Color::white)
            throw std::logic_error("edge endpoints have wrong colors");
        if (std::count(b.ccw.begin(), b.ccw.end(), e.id) != 1 ||
            std::count(w.ccw.begin(), w.ccw.end(), e.id) != 1)
            throw std::logic_error("edge must appear exactly once in each endpoint rotation");
    }
    for (TreeVertex const& v : t.vertices) {
        if (!v.alive) continue;
        for (int eid : v.ccw) {
            TreeEdge const& e = t.edge(eid);
            if (!e.alive) throw std::logic_error("rotation refers to a retired edge");
            if (e.black_end != v.id && e.white_end != v.id)
                throw std::logic_error("rotation refers to a non-incident edge");
        }
    }
    if (edge_count != static_cast<int>(alive_vertices.size()) - 1)
        throw std::logic_error("edge count must be vertex count minus one");
    // Connectivity over alive records.
    if (!alive_vertices.empty()) {
        std::map<int, std::vector<int>> adj;
        for (TreeEdge const& e : t.edges)
            if (e.alive) {
                adj[e.black_end].push_back(e.white_end);
                adj[e.white_end].push_back(e.black_end);
            }
        std::vector<int> seen;
        std::deque<int> queue{alive_vertices.front()};
        std::map<int, bool> visited{{alive_vertices.front(), true}};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            seen.push_back(v);
            for (int u : adj[v])
                if (!visited[u]) {
                    visited[u] = true;
                    queue.push_back(u);
                }
        }
        if (seen.size() != alive_vertices.size()) throw std::logic_error("tree is not connected");
    }
    // Black labels form a bijection with {1..n}.
    std::vector<int> black_labels;
    for (TreeVertex const& v : t.vertices)
        if (v.alive && v.color == Color::black) black_labels.push_back(v.label);
    std::sort(black_labels.begin(), black_labels.end());
    for (size_t i = 0; i < black_labels.size(); ++i)
        if (black_labels[i] != static_cast<int>(i) + 1)
            throw std::logic_error("black labels are not a bijection with 1..n");
}

namespace {

// Breadth-first parents toward a source set; parent[v] = {edge to parent,
// parent vertex}, or {-1,-1} for sources / unreachable records.
struct ParentMap {
    std::vector<int> parent_edge;
    std::vector<int> parent_vertex;
};

ParentMap parents_toward(PlaneTree const& t, std::vector<int> const& sources) {
    ParentMap pm;
    pm.parent_edge.assign(t.vertices.size(), -1);
    pm.parent_vertex.assign(t.vertices.size(), -1);
    std::vector<char> visited(t.vertices.size(), 0);
    std::deque<int> queue;
    for (int s : sources) {
        visited[static_cast<size_t>(s)] = 1;
        queue.push_back(s);
    }
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int eid : t.vertex(v).ccw) {
            int u = t.other_end(eid, v);
            if (visited[static_cast<size_t>(u)]) continue;
            visited[static_cast<size_t>(u)] = 1;
            pm.parent_edge[static_cast<size_t>(u)] = eid;
            pm.parent_vertex[static_cast<size_t>(u)] = v;
            queue.push_back(u);
        }
    }
    return pm;
}

}  // namespace

std::vector<int> spine_path(PlaneTree const& t) {
    int start = t.black_with_label(1);
    int goal = t.black_with_label(t.n_blacks());
    ParentMap pm = parents_toward(t, {goal});
    std::vector<int> path;
    for (int v = start; v != -1; v = pm.parent_vertex[static_cast<size_t>(v)]) {
        path.push_back(v);
        if (v == goal) return path;
    }
    throw std::logic_error("spine_path: endpoints are not connected");
}

PlaneTree build_T0(MinimalFactorization const& f) {
    if (validate_reason(f) != ValidationFailure::ok)
        throw std::invalid_argument("build_T0: input is not a minimal factorization");
    int n = f.n();
    int k = f.k();
    PlaneTree t;
    t.vertices.reserve(static_cast<size_t>(n + k));
    for (int i = 1; i <= n; ++i) t.new_vertex(Color::black, i);
    for (int c = 1; c <= k; ++c) t.new_vertex(Color::white, c);
    auto white_id = [&](int c) { return n + c - 1; };

    // Black rotations spell the cycles; each edge is labeled by its white
    // endpoint from the start (the relabeling step then only drops white
    // vertex labels).
    for (int i = 1; i <= n; ++i)
        for (int c : f.factors[static_cast<size_t>(i - 1)].entries) {
            int e = t.new_edge(c, i - 1, white_id(c));
            t.vertex(i - 1).ccw.push_back(e);
        }

    // Identify the spine before ordering white rotations.  White rotations do
    // not exist yet, so walk edge records directly.
    std::vector<std::vector<std::pair<int, int>>> adj(t.vertices.size());  // (edge, other end)
    for (TreeEdge const& e : t.edges) {
        adj[static_cast<size_t>(e.black_end)].push_back({e.id, e.white_end});
        adj[static_cast<size_t>(e.white_end)].push_back({e.id, e.black_end});
    }
    std::vector<int> prev(t.vertices.size(), -2);
    std::deque<int> queue{0};  // black vertex labeled 1 has id 0
    prev[0] = -1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (auto [eid, u] : adj[static_cast<size_t>(v)]) {
            (void)eid;
            if (prev[static_cast<size_t>(u)] != -2) continue;
            prev[static_cast<size_t>(u)] = v;
            queue.push_back(u);
        }
    }
    std::vector<int> path;  // black n .. black 1, then reversed
    for (int v = n - 1; v != -1; v = prev[static_cast<size_t>(v)]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    std::vector<char> on_spine(t.vertices.size(), 0);
    for (int v : path) on_spine[static_cast<size_t>(v)] = 1;
    // Spine neighbors of each spine white: the path entries around it.
    std::vector<std::pair<int, int>> spine_neighbors(t.vertices.size(), {-1, -1});
    for (size_t i = 1; i + 1 < path.size(); i += 2)
        spine_neighbors[static_cast<size_t>(path[i])] = {path[i - 1], path[i + 1]};

    for (int c = 1; c <= k; ++c) {
        int w = white_id(c);
        auto black_label_of = [&](std::pair<int, int> const& inc) {
            return t.vertex(inc.second).label;
        };
        std::vector<std::pair<int, int>> inc = adj[static_cast<size_t>(w)];  // (edge, black id)
        std::sort(inc.begin(), inc.end(), [&](auto const& l, auto const& r) {
            return black_label_of(l) < black_label_of(r);
        });
        std::vector<int>& ccw = t.vertex(w).ccw;
        if (!on_spine[static_cast<size_t>(w)]) {
            // Counterclockwise neighbor labels increase.
            for (auto const& p : inc) ccw.push_back(p.first);
        } else {
            // Two spine neighbors alpha < y1; every other edge sits after
            // alpha and before y1, and dropping y1 leaves an increasing
            // cyclic order.
            auto [s1, s2] = spine_neighbors[static_cast<size_t>(w)];
            int alpha = std::min(t.vertex(s1).label, t.vertex(s2).label);
            int y1 = std::max(t.vertex(s1).label, t.vertex(s2).label);
            std::vector<std::pair<int, int>> rest;  // everything except y1's edge
            int y1_edge = -1;
            for (auto const& p : inc) {
                if (black_label_of(p) == y1)
                    y1_edge = p.first;
                else
                    rest.push_back(p);
            }
            size_t start = 0;
            while (black_label_of(rest[start]) != alpha) ++start;
            for (size_t s = 0; s < rest.size(); ++s)
                ccw.push_back(rest[(start + s) % rest.size()].first);
            ccw.push_back(y1_edge);
        }
    }
    return t;
}

PlaneTree relabel_to_T1(PlaneTree const& t0) {
    PlaneTree t = t0;
    for (TreeVertex& v : t.vertices)
        if (v.color == Color::white) v.label = -1;
    return t;
}

std::vector<int> leftist_vertices(PlaneTree const& t1) {
    std::vector<int> path = spine_path(t1);
    std::vector<char> on_spine(t1.vertices.size(), 0);
    for (int v : path) on_spine[static_cast<size_t>(v)] = 1;
    ParentMap pm = parents_toward(t1, path);
    std::vector<char> is_spine_edge(t1.edges.size(), 0);
    for (size_t i = 0; i + 1 < path.size(); ++i)
        for (int eid : t1.vertex(path[i]).ccw)
            if (t1.other_end(eid, path[i]) == path[i + 1]) is_spine_edge[static_cast<size_t>(eid)] = 1;

    std::vector<int> result;
    for (TreeVertex const& w : t1.vertices) {
        if (!w.alive || w.color != Color::white || on_spine[static_cast<size_t>(w.id)]) continue;
        int e_wb = pm.parent_edge[static_cast<size_t>(w.id)];
        int b = pm.parent_vertex[static_cast<size_t>(w.id)];
        bool leftist = false;
        if (on_spine[static_cast<size_t>(b)]) {
            for (int eid : t1.vertex(b).ccw)
                if (is_spine_edge[static_cast<size_t>(eid)] && t1.cw_next(b, eid) == e_wb)
                    leftist = true;
        } else {
            leftist = t1.cw_next(b, pm.parent_edge[static_cast<size_t>(b)]) == e_wb;
        }
        if (leftist) result.push_back(w.id);
    }
    std::sort(result.begin(), result.end());
    return result;
}

ClusterTable compute_cluster_table(PlaneTree const& t) {
    int k = t.max_edge_label();
    std::vector<int> path = spine_path(t);
    std::vector<char> on_spine(t.vertices.size(), 0);
    for (int v : path) on_spine[static_cast<size_t>(v)] = 1;
    ParentMap pm = parents_toward(t, path);

    ClusterTable table;
    table.clusters.resize(static_cast<size_t>(k));
    std::vector<std::vector<int>> edges_of(static_cast<size_t>(k) + 1);
    for (TreeEdge const& e : t.edges)
        if (e.alive) edges_of[static_cast<size_t>(e.label)].push_back(e.id);

    for (size_t i = 0; i < path.size(); i += 2)
        table.spine_blacks.push_back(t.vertex(path[i]).label);
    std::sort(table.spine_blacks.begin(), table.spine_blacks.end());

    for (int c = 1; c <= k; ++c) {
        ClusterInfo& info = table.clusters[static_cast<size_t>(c - 1)];
        info.label = c;
        std::vector<int> const& eids = edges_of[static_cast<size_t>(c)];
        if (eids.empty()) throw std::logic_error("cluster " + std::to_string(c) + " has no edges");
        info.center = t.edge(eids.front()).white_end;
        for (int eid : eids) {
            if (t.edge(eid).white_end != info.center)
                throw std::logic_error("cluster " + std::to_string(c) +
                                       " edges do not share a white endpoint");
            info.black_members.push_back(t.vertex(t.edge(eid).black_end).label);
        }
        std::sort(info.black_members.begin(), info.black_members.end());
        info.is_leaf = eids.size() == 1;
        info.is_spine = on_spine[static_cast<size_t>(info.center)] != 0;
        if (info.is_spine) {
            // Root is the spine edge whose black endpoint has the smaller label.
            int best_label = 0;
            for (int eid : eids) {
                int b = t.edge(eid).black_end;
                if (!on_spine[static_cast<size_t>(b)]) continue;
                // Only the two path neighbors of the center count as spine edges.
                bool path_neighbor = false;
                for (size_t i = 0; i + 1 < path.size(); ++i)
                    if ((path[i] == info.center && path[i + 1] == b) ||
                        (path[i] == b && path[i + 1] == info.center))
                        path_neighbor = true;
                if (!path_neighbor) continue;
                int lab = t.vertex(b).label;
                if (best_label == 0 || lab < best_label) {
                    best_label = lab;
                    info.root_edge = eid;
                }
            }
            info.anchor = best_label;
            table.spine_clusters.push_back(c);
        } else {
            info.root_edge = pm.parent_edge[static_cast<size_t>(info.center)];
            info.anchor = t.vertex(pm.parent_vertex[static_cast<size_t>(info.center)]).label;
        }
    }

    // Processing order for non-spine non-leaf clusters: every white vertex
    // strictly between a center and the spine is itself the center of a
    // non-spine non-leaf cluster (it is internal to the path), so counting
    // those whites sorts predecessors before successors.
    std::vector<std::pair<int, int>> keyed;  // (depth, label)
    for (ClusterInfo& info : table.clusters) {
        if (info.is_spine || info.is_leaf) continue;
        int depth = 0;
        for (int v = pm.parent_vertex[static_cast<size_t>(info.center)];
             !on_spine[static_cast<size_t>(v)]; v = pm.parent_vertex[static_cast<size_t>(v)])
            if (t.vertex(v).color == Color::white) ++depth;
        info.rib_depth = depth;
        keyed.push_back({depth, info.label});
    }
    std::sort(keyed.begin(), keyed.end());
    for (auto const& [depth, label] : keyed) {
        (void)depth;
        table.sigma.push_back(label);
    }
    return table;
}

std::string to_text(PlaneTree const& t) {
    std::ostringstream out;
    for (TreeVertex const& v : t.vertices) {
        if (!v.alive) continue;
        out << 'v' << v.id << ' ' << (v.color == Color::black ? "black" : "white") << " label=";
        if (v.label == -1)
            out << '-';
        else
            out << v.label;
        out << " ccw=[";
        for (size_t i = 0; i < v.ccw.size(); ++i) {
            if (i) out << ',';
            out << 'e' << v.ccw[i];
        }
        out << "]\n";
    }
    for (TreeEdge const& e : t.edges) {
        if (!e.alive) continue;
        out << 'e' << e.id << " label=" << e.label << " black=v" << e.black_end << " white=v"
            << e.white_end << "\n";
    }
    return out.str();
}

namespace {

int parse_prefixed_id(std::string const& token, char prefix, std::string const& what) {
    if (token.size() < 2 || token[0] != prefix)
        throw std::invalid_argument("expected " + what + ", got '" + token + "'");
    size_t pos = 0;
    int value = std::stoi(token.substr(1), &pos);
    if (pos + 1 != token.size() || value < 0)
        throw std::invalid_argument("bad " + what + " '" + token + "'");
    return value;
}

std::string strip_key(std::string const& token, std::string const& key) {
    if (token.rfind(key, 0) != 0)
        throw std::invalid_argument("expected '" + key + "...', got '" + token + "'");
    return token.substr(key.size());
}

}  // namespace

PlaneTree parse_tree_text(std::string const& text) {
    PlaneTree t;
    std::istringstream in(text);
    std::string line;
    struct PendingVertex {
        int id;
        Color color;
        int label;
        std::vector<int> ccw;
    };
    std::vector<PendingVertex> pending_vertices;
    struct PendingEdge {
        int id;
        int label;
        int black_id;
        int white_id;
    };
    std::vector<PendingEdge> pending_edges;
    int max_vertex = -1;
    int max_edge = -1;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string piece; ls >> piece;) tok.push_back(piece);
        if (tok.size() == 4 && (tok[1] == "black" || tok[1] == "white")) {
            PendingVertex v;
            v.id = parse_prefixed_id(tok[0], 'v', "vertex id");
            v.color = tok[1] == "black" ? Color::black : Color::white;
            std::string lab = strip_key(tok[2], "label=");
            v.label = lab == "-" ? -1 : std::stoi(lab);
            std::string rot = strip_key(tok[3], "ccw=");
            if (rot.size() < 2 || rot.front() != '[' || rot.back() != ']')
                throw std::invalid_argument("bad rotation '" + rot + "'");
            std::string inner = rot.substr(1, rot.size() - 2);
            if (!inner.empty()) {
                std::istringstream rs(inner);
                std::string item;
                while (std::getline(rs, item, ','))
                    v.ccw.push_back(parse_prefixed_id(item, 'e', "edge id"));
            }
            max_vertex = std::max(max_vertex, v.id);
            pending_vertices.push_back(std::move(v));
        } else if (tok.size() == 4) {
            PendingEdge e;
            e.id = parse_prefixed_id(tok[0], 'e', "edge id");
            e.label = std::stoi(strip_key(tok[1], "label="));
            e.black_id = parse_prefixed_id(strip_key(tok[2], "black="), 'v', "vertex id");
            e.white_id = parse_prefixed_id(strip_key(tok[3], "white="), 'v', "vertex id");
            max_edge = std::max(max_edge, e.id);
            pending_edges.push_back(e);
        } else {
            throw std::invalid_argument("unrecognized tree record '" + line + "'");
        }
    }
    t.vertices.resize(static_cast<size_t>(max_vertex + 1));
    for (size_t i = 0; i < t.vertices.size(); ++i) {
        t.vertices[i].id = static_cast<int>(i);
        t.vertices[i].alive = false;
    }
    for (PendingVertex& pv : pending_vertices) {
        TreeVertex& v = t.vertices.at(static_cast<size_t>(pv.id));
        if (v.alive) throw std::invalid_argument("duplicate vertex id " + std::to_string(pv.id));
        v.alive = true;
        v.color = pv.color;
        v.label = pv.label;
        v.ccw = std::move(pv.ccw);
    }
    t.edges.resize(static_cast<size_t>(max_edge + 1));
    for (size_t i = 0; i < t.edges.size(); ++i) {
        t.edges[i].id = static_cast<int>(i);
        t.edges[i].alive = false;
    }
    for (PendingEdge const& pe : pending_edges) {
        TreeEdge& e = t.edges.at(static_cast<size_t>(pe.id));
        if (e.alive) throw std::invalid_argument("duplicate edge id " + std::to_string(pe.id));
        e.alive = true;
        e.label = pe.label;
        e.black_end = pe.black_id;
        e.white_end = pe.white_id;
    }
    try {
        validate_structure(t);
    } catch (std::logic_error const& err) {
        throw std::invalid_argument(std::string("inconsistent tree text: ") + err.what());
    }
    return t;
}

std::string to_dot(PlaneTree const& t) {
    std::vector<char> is_spine_edge(t.edges.size(), 0);
    try {
        std::vector<int> path = spine_path(t);
        for (size_t i = 0; i + 1 < path.size(); ++i)
            for (int eid : t.vertex(path[i]).ccw)
                if (t.other_end(eid, path[i]) == path[i + 1])
                    is_spine_edge[static_cast<size_t>(eid)] = 1;
    } catch (std::exception const&) {
        // No identifiable spine (e.g. hand-built fragment); render unstyled.
    }
    std::ostringstream out;
    out << "graph stanley_tree {\n  graph [ordering=out];\n  node [shape=circle];\n";
    for (TreeVertex const& v : t.vertices) {
        if (!v.alive) continue;
        out << "  v" << v.id << " [label=\"";
        if (v.label != -1) out << v.label;
        out << "\"";
        if (v.color == Color::black) out << ", style=filled, fillcolor=black, fontcolor=white";
        if (v.color == Color::white && v.origin == Origin::artificial) out << ", peripheries=2";
        out << "];\n";
    }
    // Emit edges in a contour order rooted at the first alive vertex so the
    // per-vertex adjacency order in the file matches the rotations.
    std::vector<char> emitted(t.edges.size(), 0);
    int root = -1;
    for (TreeVertex const& v : t.vertices)
        if (v.alive) {
            root = v.id;
            break;
        }
    if (root != -1) {
        std::vector<std::pair<int, int>> stack{{root, -1}};  // (vertex, arrival edge)
        while (!stack.empty()) {
            auto [v, arrival] = stack.back();
            stack.pop_back();
            std::vector<int> order =
                arrival == -1 ? t.vertex(v).ccw : t.rotation_after(v, arrival);
            std::vector<std::pair<int, int>> children;
            for (int eid : order) {
                if (emitted[static_cast<size_t>(eid)]) continue;
                emitted[static_cast<size_t>(eid)] = 1;
                TreeEdge const& e = t.edge(eid);
                out << "  v" << e.black_end << " -- v" << e.white_end << " [label=\"" << e.label
                    << "\"";
                if (is_spine_edge[static_cast<size_t>(eid)]) out << ", color=red";
                if (e.state == EdgeState::dashed) out << ", style=dashed";
                out << "];\n";
                children.push_back({t.other_end(eid, v), eid});
            }
            for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(*it);
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace stanley
