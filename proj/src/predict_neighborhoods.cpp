// Direct prediction of every vertex's final neighborhood from the input tree
// alone.  The cluster table determines statically which black vertices fold
// in place and which relocate, what label every surviving edge ends up with,
// and where each relocated vertex lands; the final rotations are then
// assembled per vertex by the folding rules (members that fold keep their
// slot and absorb the consumed arc; relocated members leave a fresh white
// vertex at the landing site).  No rewriting pass over an evolving tree, no
// preconditions, no instrumentation: everything is read off the input.
#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "stanley/inverse_bijection.hpp"
#include "stanley/plane_tree.hpp"
#include "stanley/stanley_tree.hpp"

namespace stanley {

namespace {

// One edge of the evolving picture: its black endpoint (by label), current
// edge label, and positions in two circular orders (around the black vertex
// and inside the white content list that currently holds it).
struct Tok {
    int black = -1;
    int label = -1;
    long order = -1;  // tie-break order mirroring edge creation ids
    bool alive = true;
    int list = -1;
    int wprev = -1, wnext = -1;
    int bprev = -1, bnext = -1;
};

struct ContentList {
    bool alive = true;
    bool artificial = false;
    int head = -1;
};

struct Predictor {
    std::vector<Tok> toks;
    std::vector<ContentList> lists;
    std::vector<int> bhead;     // by black label, 1-based
    std::vector<int> root_tok;  // by cluster label, 1-based
    long next_order = 0;

    // --- circular list helpers -------------------------------------------
    void b_remove(int t) {
        int p = toks[t].bprev, q = toks[t].bnext;
        if (p == t) {
            bhead[toks[t].black] = -1;
        } else {
            toks[p].bnext = q;
            toks[q].bprev = p;
            if (bhead[toks[t].black] == t) bhead[toks[t].black] = q;
        }
        toks[t].bprev = toks[t].bnext = t;
    }

    void b_insert_between(int p, int q, int t) {
        toks[p].bnext = t;
        toks[t].bprev = p;
        toks[t].bnext = q;
        toks[q].bprev = t;
    }

    void b_insert_before(int ref, int t) { b_insert_between(toks[ref].bprev, ref, t); }
    void b_insert_after(int ref, int t) { b_insert_between(ref, toks[ref].bnext, t); }

    void b_make_singleton(int black, int t) {
        toks[t].bprev = toks[t].bnext = t;
        bhead[black] = t;
    }

    // All tokens of t's list counterclockwise after t, excluding t; the list
    // is dissolved (t dies with it, the rest move elsewhere).
    std::vector<int> w_take_rest(int t) {
        std::vector<int> seq;
        for (int u = toks[t].wnext; u != t; u = toks[u].wnext) seq.push_back(u);
        lists[toks[t].list].alive = false;
        return seq;
    }

    void w_remove(int t) {
        int p = toks[t].wprev, q = toks[t].wnext;
        ContentList& l = lists[toks[t].list];
        if (p == t) {
            l.head = -1;
        } else {
            toks[p].wnext = q;
            toks[q].wprev = p;
            if (l.head == t) l.head = q;
        }
        toks[t].wprev = toks[t].wnext = t;
    }

    void w_insert_seq_after(int ref, std::vector<int> const& seq) {
        int list = toks[ref].list;
        int at = ref;
        for (int t : seq) {
            int q = toks[at].wnext;
            toks[at].wnext = t;
            toks[t].wprev = at;
            toks[t].wnext = q;
            toks[q].wprev = t;
            toks[t].list = list;
            at = t;
        }
    }

    int new_list_from(std::vector<int> const& seq, bool artificial) {
        int id = static_cast<int>(lists.size());
        lists.push_back({true, artificial, seq.front()});
        int m = static_cast<int>(seq.size());
        for (int i = 0; i < m; ++i) {
            int t = seq[static_cast<size_t>(i)];
            toks[t].list = id;
            toks[t].wnext = seq[static_cast<size_t>((i + 1) % m)];
            toks[t].wprev = seq[static_cast<size_t>((i + m - 1) % m)];
        }
        return id;
    }

    int new_tok(int black, int label) {
        toks.push_back({black, label, next_order++, true, -1, -1, -1, -1, -1});
        return static_cast<int>(toks.size()) - 1;
    }

    // The alive edge of the given cluster at the given black vertex; ties on
    // the earliest-created edge, matching how edges are looked up by label.
    int find_cluster_tok(int black, int label) const {
        int h = bhead[black];
        if (h == -1) throw std::logic_error("predict: vertex has no edges left");
        int best = -1;
        int t = h;
        do {
            if (toks[t].label == label && (best == -1 || toks[t].order < toks[best].order))
                best = t;
            t = toks[t].bnext;
        } while (t != h);
        if (best == -1)
            throw std::logic_error("predict: vertex " + std::to_string(black) +
                                   " carries no edge of cluster " + std::to_string(label));
        return best;
    }

    // --- the two folding moves -------------------------------------------
    // A member that folds keeps its slot: the clockwise-adjacent edge is
    // consumed, its label migrates onto the kept edge, and the consumed arc's
    // remaining content is absorbed right after the kept slot.
    void fold_member(int e1) {
        int e2 = toks[e1].bprev;
        if (e2 == e1) throw std::logic_error("predict: fold at a degree-one vertex");
        if (toks[e2].list == toks[e1].list)
            throw std::logic_error("predict: fold would consume its own arc");
        int label2 = toks[e2].label;
        std::vector<int> seq = w_take_rest(e2);
        b_remove(e2);
        toks[e2].alive = false;
        if (root_tok[label2] == e2) root_tok[label2] = e1;
        toks[e1].label = label2;
        w_insert_seq_after(e1, seq);
    }

    // A member that relocates: its cluster edge and the two clockwise-adjacent
    // edges disappear, a fresh white vertex takes their content, attached to
    // the landing vertex (current holder of the cluster's root edge) by a new
    // edge slotted counterclockwise-before the root, and back to the member
    // by a new edge in the vacated slot.
    void relocate_member(int cluster, int y, int e1) {
        int e2 = toks[e1].bprev;
        int e3 = toks[e2].bprev;
        if (e2 == e1 || e3 == e1)
            throw std::logic_error("predict: relocation at a vertex of degree below 3");
        int jtok = root_tok[cluster];
        if (jtok == -1 || !toks[jtok].alive)
            throw std::logic_error("predict: cluster root of " + std::to_string(cluster) +
                                   " is gone");
        int jid = toks[jtok].black;
        if (jid == y) throw std::logic_error("predict: relocation lands on its own source");
        int label2 = toks[e2].label;
        int label3 = toks[e3].label;
        int slot = toks[e3].bprev == e1 ? -1 : toks[e3].bprev;

        std::vector<int> seq2 = w_take_rest(e2);
        std::vector<int> seq3 = w_take_rest(e3);
        w_remove(e1);
        for (int e : {e1, e2, e3}) {
            b_remove(e);
            toks[e].alive = false;
        }

        int a = new_tok(jid, label2);
        b_insert_before(jtok, a);
        int d = new_tok(y, label3);
        if (slot == -1)
            b_make_singleton(y, d);
        else
            b_insert_after(slot, d);
        if (root_tok[label2] == e2) root_tok[label2] = a;
        if (root_tok[label3] == e3) root_tok[label3] = d;

        std::vector<int> wrot;
        wrot.push_back(a);
        wrot.insert(wrot.end(), seq2.begin(), seq2.end());
        wrot.push_back(d);
        wrot.insert(wrot.end(), seq3.begin(), seq3.end());
        new_list_from(wrot, true);
    }
};

}  // namespace

StanleyTree predict_direct_neighborhoods(PlaneTree const& t1) {
    ClusterTable ct = compute_cluster_table(t1);
    int n = t1.n_blacks();

    Predictor pr;
    pr.bhead.assign(static_cast<size_t>(n) + 1, -1);
    pr.root_tok.assign(ct.clusters.size() + 1, -1);

    // Tokens mirror the input edges; both circular orders copy the rotations.
    std::vector<int> tok_of_edge(t1.edges.size(), -1);
    for (TreeEdge const& e : t1.edges) {
        if (!e.alive) continue;
        tok_of_edge[static_cast<size_t>(e.id)] =
            pr.new_tok(t1.vertex(e.black_end).label, e.label);
    }
    pr.next_order = static_cast<long>(t1.edges.size());
    std::vector<int> white_of_list;  // original white vertex id per list
    for (TreeVertex const& v : t1.vertices) {
        if (!v.alive) continue;
        std::vector<int> ring;
        for (int eid : v.ccw) ring.push_back(tok_of_edge[static_cast<size_t>(eid)]);
        if (ring.empty()) throw std::invalid_argument("predict: isolated vertex in the input");
        int m = static_cast<int>(ring.size());
        if (v.color == Color::black) {
            for (int i = 0; i < m; ++i) {
                pr.toks[static_cast<size_t>(ring[static_cast<size_t>(i)])].bnext =
                    ring[static_cast<size_t>((i + 1) % m)];
                pr.toks[static_cast<size_t>(ring[static_cast<size_t>(i)])].bprev =
                    ring[static_cast<size_t>((i + m - 1) % m)];
            }
            pr.bhead[static_cast<size_t>(v.label)] = ring.front();
        } else {
            int id = static_cast<int>(pr.lists.size());
            pr.lists.push_back({true, false, ring.front()});
            for (int i = 0; i < m; ++i) {
                int t = ring[static_cast<size_t>(i)];
                pr.toks[static_cast<size_t>(t)].list = id;
                pr.toks[static_cast<size_t>(t)].wnext = ring[static_cast<size_t>((i + 1) % m)];
                pr.toks[static_cast<size_t>(t)].wprev =
                    ring[static_cast<size_t>((i + m - 1) % m)];
            }
            white_of_list.push_back(v.id);
        }
    }
    for (ClusterInfo const& info : ct.clusters)
        pr.root_tok[static_cast<size_t>(info.label)] =
            tok_of_edge[static_cast<size_t>(info.root_edge)];

    // Static member classification.  Around a spine white the larger path
    // neighbor always folds; every other member folds exactly when its label
    // is below the cluster's anchor (its grandparent on the rib side) and
    // relocates otherwise.  Clusters are visited spine-first by label, then
    // ribs outward by depth, members ascending.
    std::vector<char> on_spine(static_cast<size_t>(n) + 1, 0);
    for (int s : ct.spine_blacks) on_spine[static_cast<size_t>(s)] = 1;
    auto process = [&](int c, bool spine) {
        ClusterInfo const& info = ct.cluster(c);
        int y1 = -1;
        if (spine)
            for (int m : info.black_members)
                if (m != info.anchor && on_spine[static_cast<size_t>(m)]) y1 = m;
        for (int m : info.black_members) {
            if (m == info.anchor) continue;
            bool fold = spine ? (m == y1 || m < info.anchor) : m < info.anchor;
            int e1 = pr.find_cluster_tok(m, c);
            if (fold)
                pr.fold_member(e1);
            else
                pr.relocate_member(c, m, e1);
        }
    };
    for (int c : ct.spine_clusters) process(c, true);
    for (int c : ct.sigma) process(c, false);

    // Assemble the predicted tree: blacks in label order, then the surviving
    // white content lists, each list spelling its rotation.
    PlaneTree out;
    std::vector<int> black_vid(static_cast<size_t>(n) + 1, -1);
    for (int i = 1; i <= n; ++i) black_vid[static_cast<size_t>(i)] = out.new_vertex(Color::black, i);
    std::vector<int> white_vid(pr.lists.size(), -1);
    for (size_t li = 0; li < pr.lists.size(); ++li) {
        if (!pr.lists[li].alive) continue;
        white_vid[li] = out.new_vertex(Color::white);
        if (pr.lists[li].artificial) out.vertex(white_vid[li]).origin = Origin::artificial;
    }
    std::vector<int> edge_of_tok(pr.toks.size(), -1);
    for (size_t ti = 0; ti < pr.toks.size(); ++ti) {
        Tok const& t = pr.toks[ti];
        if (!t.alive) continue;
        if (!pr.lists[static_cast<size_t>(t.list)].alive)
            throw std::logic_error("predict: surviving edge in a dissolved arc");
        edge_of_tok[ti] = out.new_edge(t.label, black_vid[static_cast<size_t>(t.black)],
                                       white_vid[static_cast<size_t>(t.list)]);
    }
    for (int i = 1; i <= n; ++i) {
        int h = pr.bhead[static_cast<size_t>(i)];
        if (h == -1) throw std::logic_error("predict: black vertex lost all edges");
        std::vector<int>& ccw = out.vertex(black_vid[static_cast<size_t>(i)]).ccw;
        int t = h;
        do {
            ccw.push_back(edge_of_tok[static_cast<size_t>(t)]);
            t = pr.toks[static_cast<size_t>(t)].bnext;
        } while (t != h);
    }
    for (size_t li = 0; li < pr.lists.size(); ++li) {
        if (!pr.lists[li].alive) continue;
        std::vector<int>& ccw = out.vertex(white_vid[li]).ccw;
        int h = pr.lists[li].head;
        int t = h;
        do {
            ccw.push_back(edge_of_tok[static_cast<size_t>(t)]);
            t = pr.toks[static_cast<size_t>(t)].wnext;
        } while (t != h);
    }
    return from_plane_tree(out);
}

}  // namespace stanley
