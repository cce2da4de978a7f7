#include "stanley/inverse_bijection.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace stanley {

namespace {

// Shared read-only view of one output tree: the spine, the orientation of
// every off-spine vertex toward it, and each white vertex's strongest black
// neighbor.  Computed once and threaded through the recovery helpers.
struct Analysis {
    PlaneTree const* t = nullptr;
    std::vector<int> spine;          // alternating vertex ids, black 1 .. black n
    std::vector<char> on_spine;      // by vertex id
    std::vector<int> parent_edge;    // edge toward the spine, -1 on the spine
    std::vector<int> parent_vertex;  // neighbor toward the spine, -1 on the spine
    std::vector<int> max_nbr;        // white id -> highest black neighbor label
};

Analysis analyze(PlaneTree const& t) {
    Analysis a;
    a.t = &t;
    a.spine = spine_path(t);
    a.on_spine.assign(t.vertices.size(), 0);
    a.parent_edge.assign(t.vertices.size(), -1);
    a.parent_vertex.assign(t.vertices.size(), -1);
    a.max_nbr.assign(t.vertices.size(), -1);
    for (int v : a.spine) a.on_spine[static_cast<size_t>(v)] = 1;
    std::vector<int> queue = a.spine;
    for (size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int e : t.vertex(v).ccw) {
            int u = t.other_end(e, v);
            if (a.on_spine[static_cast<size_t>(u)] || a.parent_edge[static_cast<size_t>(u)] != -1)
                continue;
            a.parent_edge[static_cast<size_t>(u)] = e;
            a.parent_vertex[static_cast<size_t>(u)] = v;
            queue.push_back(u);
        }
    }
    for (TreeVertex const& v : t.vertices) {
        if (!v.alive || v.color != Color::white) continue;
        int best = -1;
        for (int e : v.ccw) best = std::max(best, t.vertex(t.edge(e).black_end).label);
        a.max_nbr[static_cast<size_t>(v.id)] = best;
    }
    return a;
}

int black_label_of_edge(PlaneTree const& t, int eid) {
    return t.vertex(t.edge(eid).black_end).label;
}

Origin classify_white_impl(Analysis const& a, int white_id) {
    PlaneTree const& t = *a.t;
    TreeVertex const& w = t.vertex(white_id);
    if (w.color != Color::white)
        throw std::invalid_argument("classify_white: vertex is not white");
    if (a.on_spine[static_cast<size_t>(white_id)])
        throw std::invalid_argument("classify_white: spine vertices carry no origin");
    int parent = a.parent_vertex[static_cast<size_t>(white_id)];
    return a.max_nbr[static_cast<size_t>(white_id)] == t.vertex(parent).label
               ? Origin::organic
               : Origin::artificial;
}

// Labels of the attracted child whites around a black vertex, counterclockwise
// strictly after start_edge.  A white is attracted to its highest neighbor, so
// this drops every white that was grafted on by the rewriting rather than kept.
std::vector<int> attracted_after(Analysis const& a, int black_id, int start_edge) {
    PlaneTree const& t = *a.t;
    int label = t.vertex(black_id).label;
    std::vector<int> out;
    for (int e : t.rotation_after(black_id, start_edge))
        if (a.max_nbr[static_cast<size_t>(t.edge(e).white_end)] == label)
            out.push_back(t.edge(e).label);
    return out;
}

int edge_to_black_label(PlaneTree const& t, int white_id, int black_label) {
    for (int e : t.vertex(white_id).ccw)
        if (black_label_of_edge(t, e) == black_label) return e;
    throw std::runtime_error("output tree lacks an edge between a white vertex and black " +
                             std::to_string(black_label));
}

int edge_to_white(PlaneTree const& t, int black_id, int white_id) {
    for (int e : t.vertex(black_id).ccw)
        if (t.edge(e).white_end == white_id) return e;
    throw std::logic_error("expected a black-white edge that is not present");
}

// Edge ids counterclockwise strictly between from_e and to_e around vid.
std::vector<int> ccw_between(PlaneTree const& t, int vid, int from_e, int to_e) {
    std::vector<int> out;
    for (int e : t.rotation_after(vid, from_e)) {
        if (e == to_e) return out;
        out.push_back(e);
    }
    throw std::logic_error("ccw_between: bounding edges do not share the vertex");
}

int first_label_of(UnfoldedTree const& u, int black) {
    auto it = u.first_label.find(black);
    if (it == u.first_label.end())
        throw std::logic_error("unfold result lacks the requested vertex");
    return it->second;
}

// ---------------------------------------------------------------------------
// Backbone

// Working data for one spine white: the slot edges of the folded former spine
// vertices in counterclockwise order, starting at the flank stayer A_r.
struct SegmentSlots {
    std::vector<int> edges;   // slot edge ids, ccw
    std::vector<int> labels;  // black labels matching `edges`
};

SegmentSlots segment_slots(PlaneTree const& t, BackboneSegment const& seg) {
    SegmentSlots s;
    auto add = [&](int black_label) {
        s.edges.push_back(edge_to_black_label(t, seg.white, black_label));
        s.labels.push_back(black_label);
    };
    for (int lab : seg.a_chain) add(lab);
    add(seg.b_chain.front());
    for (size_t i = seg.b_chain.size(); i-- > 1;) add(seg.b_chain[i]);
    return s;
}

// Decomposes the rotation of the segment white into the slot edges and the
// folded arcs that follow each of them, verifying the slots appear in the
// expected counterclockwise order.
std::vector<std::vector<int>> segment_arcs(PlaneTree const& t, BackboneSegment const& seg,
                                           SegmentSlots const& slots) {
    std::vector<std::vector<int>> arcs(slots.edges.size());
    size_t cursor = 0;
    for (int e : t.rotation_after(seg.white, slots.edges.front())) {
        auto it = std::find(slots.edges.begin(), slots.edges.end(), e);
        if (it == slots.edges.end()) {
            arcs[cursor].push_back(e);
            continue;
        }
        size_t idx = static_cast<size_t>(it - slots.edges.begin());
        if (idx != cursor + 1)
            throw std::runtime_error("segment rotation does not follow the chain order");
        cursor = idx;
    }
    if (cursor + 1 != slots.edges.size())
        throw std::runtime_error("segment rotation does not follow the chain order");
    return arcs;
}

// Seeded greedy walk used to split a segment white's rotation into the two
// monotone chains: collect the black labels of the edges counterclockwise
// strictly between from_e and to_e that exceed everything collected so far.
std::vector<int> rising_picks(PlaneTree const& t, int white, int from_e, int to_e, int seed) {
    std::vector<int> picks;
    int best = seed;
    for (int e : ccw_between(t, white, from_e, to_e)) {
        int lab = black_label_of_edge(t, e);
        if (lab > best) {
            picks.push_back(lab);
            best = lab;
        }
    }
    return picks;
}

Backbone build_backbone_impl(Analysis const& a) {
    PlaneTree const& t = *a.t;
    Backbone bb;
    if (a.spine.size() == 1) {
        bb.vertices.push_back(t.vertex(a.spine.front()).label);
        return bb;
    }
    for (size_t pos = 1; pos + 1 < a.spine.size(); pos += 2) {
        int W = a.spine[pos];
        int prev_label = t.vertex(a.spine[pos - 1]).label;
        int next_label = t.vertex(a.spine[pos + 1]).label;
        int e_prev = edge_to_black_label(t, W, prev_label);
        int e_next = edge_to_black_label(t, W, next_label);

        // The strongest neighbor of the segment white is always the top of
        // the descending chain; when it is one of the flank stayers the
        // descending chain is that single vertex.
        int b1 = a.max_nbr[static_cast<size_t>(W)];
        BackboneSegment seg;
        seg.white = W;
        int ar_label, bs_label, e_ar, e_bs;
        bool b1_is_stayer = b1 == prev_label || b1 == next_label;
        if (b1_is_stayer) {
            bs_label = b1;
            ar_label = b1 == prev_label ? next_label : prev_label;
        } else {
            // The folded top separates the halves: the first spine edge
            // counterclockwise after its own edge bounds the descending half.
            int e_b1 = edge_to_black_label(t, W, b1);
            bs_label = -1;
            for (int e : t.rotation_after(W, e_b1)) {
                int lab = black_label_of_edge(t, e);
                if (lab == prev_label || lab == next_label) {
                    bs_label = lab;
                    break;
                }
            }
            if (bs_label == -1)
                throw std::logic_error("segment white lost its spine neighbors");
            ar_label = bs_label == prev_label ? next_label : prev_label;
        }
        e_ar = ar_label == prev_label ? e_prev : e_next;
        e_bs = bs_label == prev_label ? e_prev : e_next;

        std::vector<int> up = rising_picks(t, W, e_ar, e_bs, ar_label);
        std::vector<int> down = rising_picks(t, W, e_bs, e_ar, bs_label);

        seg.a_chain.push_back(ar_label);
        if (b1_is_stayer) {
            if (!down.empty())
                throw std::runtime_error("unexpected rising labels behind the chain top");
            seg.a_chain.insert(seg.a_chain.end(), up.begin(), up.end());
            seg.b_chain.push_back(b1);
        } else {
            if (up.empty() || up.back() != b1)
                throw std::runtime_error("chain top not reachable from the ascending flank");
            seg.a_chain.insert(seg.a_chain.end(), up.begin(), up.end() - 1);
            seg.b_chain.push_back(b1);
            for (size_t i = down.size(); i-- > 0;) seg.b_chain.push_back(down[i]);
            seg.b_chain.push_back(bs_label);
        }

        for (size_t i = 1; i < seg.a_chain.size(); ++i)
            if (seg.a_chain[i - 1] >= seg.a_chain[i])
                throw std::runtime_error("ascending chain out of order");
        for (size_t i = 1; i < seg.b_chain.size(); ++i)
            if (seg.b_chain[i - 1] <= seg.b_chain[i])
                throw std::runtime_error("descending chain out of order");
        if (seg.a_1() >= seg.b_1())
            throw std::runtime_error("chain tops out of order");

        seg.spine_order = seg.a_chain;
        seg.spine_order.insert(seg.spine_order.end(), seg.b_chain.begin(), seg.b_chain.end());
        if (ar_label != prev_label)
            std::reverse(seg.spine_order.begin(), seg.spine_order.end());
        bb.segments.push_back(std::move(seg));
    }

    for (BackboneSegment const& seg : bb.segments) {
        size_t start = bb.vertices.empty() ? 0 : 1;
        bb.vertices.insert(bb.vertices.end(), seg.spine_order.begin() + start,
                           seg.spine_order.end());
        int hi = seg.b_1();
        int lo = seg.b_chain.size() > 1 ? seg.b_chain[1] : seg.a_1();
        for (size_t i = 1; i < seg.spine_order.size(); ++i) {
            BackboneEdge edge;
            edge.v1 = std::min(seg.spine_order[i - 1], seg.spine_order[i]);
            edge.v2 = std::max(seg.spine_order[i - 1], seg.spine_order[i]);
            bool hairy = edge.v2 == hi && edge.v1 == std::min(seg.a_1(), lo) &&
                         edge.v1 == seg.a_1();
            edge.kind = hairy ? BackboneEdgeKind::hairy : BackboneEdgeKind::bald;
            bb.edges.push_back(edge);
        }
    }
    return bb;
}

// ---------------------------------------------------------------------------
// Recovery of single factors

BackboneSegment const& segment_of_white(Backbone const& bb, int white_id) {
    for (BackboneSegment const& seg : bb.segments)
        if (seg.white == white_id) return seg;
    throw std::logic_error("spine white without a backbone segment");
}

// The vertex kept its spine position.  Its rotation reads off directly except
// across a side whose neighbor chain descends toward it: there the surviving
// slot edge moved to the end of the factor and the entry that opened the
// factor on that side survives on the neighboring segment white instead.
Cycle recover_stayer(Analysis const& a, Backbone const& bb, int beta) {
    PlaneTree const& t = *a.t;
    int v = t.black_with_label(beta);
    int k = t.max_edge_label();

    size_t pos = 0;
    while (a.spine[pos] != v) pos += 2;
    auto it = std::find(bb.vertices.begin(), bb.vertices.end(), beta);
    size_t bpos = static_cast<size_t>(it - bb.vertices.begin());

    std::vector<int> entries;
    if (pos == 0) {
        // Endpoint 1 is below every neighbor, so its side never bends.
        int e_right = edge_to_white(t, v, a.spine[pos + 1]);
        entries.push_back(t.edge(e_right).label);
        for (int lab : attracted_after(a, v, e_right)) entries.push_back(lab);
        return Cycle(entries, k);
    }
    if (pos + 1 == a.spine.size()) {
        // Endpoint n is above every neighbor, so its single side always bends.
        int u = bb.vertices[bpos - 1];
        int W = a.spine[pos - 1];
        int e_left = edge_to_white(t, v, W);
        entries.push_back(t.edge(edge_to_black_label(t, W, u)).label);
        for (int lab : attracted_after(a, v, e_left)) entries.push_back(lab);
        entries.push_back(t.edge(e_left).label);
        return Cycle(entries, k);
    }

    int u_left = bb.vertices[bpos - 1];
    int u_right = bb.vertices[bpos + 1];
    int W_left = a.spine[pos - 1];
    int W_right = a.spine[pos + 1];
    int e_left = edge_to_white(t, v, W_left);
    int e_right = edge_to_white(t, v, W_right);
    bool bent_left = beta > u_left;
    bool bent_right = beta > u_right;

    auto attracted_arc = [&](int from_e, int to_e) {
        std::vector<int> labs;
        for (int e : ccw_between(t, v, from_e, to_e))
            if (a.max_nbr[static_cast<size_t>(t.edge(e).white_end)] == beta)
                labs.push_back(t.edge(e).label);
        return labs;
    };
    std::vector<int> arc1 = attracted_arc(e_left, e_right);
    std::vector<int> arc2 = attracted_arc(e_right, e_left);

    entries.push_back(bent_left ? t.edge(edge_to_black_label(t, W_left, u_left)).label
                                : t.edge(e_left).label);
    entries.insert(entries.end(), arc1.begin(), arc1.end());
    if (bent_right) entries.push_back(t.edge(e_right).label);
    entries.push_back(bent_right ? t.edge(edge_to_black_label(t, W_right, u_right)).label
                                 : t.edge(e_right).label);
    entries.insert(entries.end(), arc2.begin(), arc2.end());
    if (bent_left) entries.push_back(t.edge(e_left).label);
    return Cycle(entries, k);
}

// The vertex left the spine but still hangs on a segment white as a chain
// member.  Its removed spine edge pointed at the chain neighbor away from the
// chain top; the label that opened its factor survives on the segment white's
// edge toward that neighbor.
Cycle recover_leaver(Analysis const& a, BackboneSegment const& seg, int beta) {
    PlaneTree const& t = *a.t;
    int v = t.black_with_label(beta);
    int k = t.max_edge_label();
    int e_par = a.parent_edge[static_cast<size_t>(v)];

    bool apex = beta == seg.b_1();
    int u_out;
    if (apex) {
        u_out = seg.a_1();
    } else {
        auto ia = std::find(seg.a_chain.begin(), seg.a_chain.end(), beta);
        if (ia != seg.a_chain.end()) {
            u_out = *(ia - 1);
        } else {
            auto ib = std::find(seg.b_chain.begin(), seg.b_chain.end(), beta);
            u_out = *(ib + 1);
        }
    }

    std::vector<int> entries;
    entries.push_back(t.edge(edge_to_black_label(t, seg.white, u_out)).label);
    for (int lab : attracted_after(a, v, e_par)) entries.push_back(lab);
    entries.push_back(t.edge(e_par).label);
    if (apex) entries.push_back(t.edge(edge_to_black_label(t, seg.white, seg.b_chain[1])).label);
    return Cycle(entries, k);
}

// The vertex was folded onto a segment white.  Each stretch of the white's
// rotation between consecutive slot edges is one folded subtree whose top
// entries all opened with the current label of the slot edge that opens the
// stretch; deeper entries opened with the edge label of their fold parent.
Cycle recover_near_fold(Analysis const& a, BackboneSegment const& seg, int beta) {
    PlaneTree const& t = *a.t;
    int v = t.black_with_label(beta);
    int k = t.max_edge_label();
    int e_par = a.parent_edge[static_cast<size_t>(v)];

    SegmentSlots slots = segment_slots(t, seg);
    std::vector<std::vector<int>> arcs = segment_arcs(t, seg, slots);
    size_t which = arcs.size();
    for (size_t i = 0; i < arcs.size(); ++i)
        if (std::find(arcs[i].begin(), arcs[i].end(), e_par) != arcs[i].end()) which = i;
    if (which == arcs.size())
        throw std::logic_error("folded vertex missing from every segment stretch");

    std::vector<FoldEntry> entries;
    for (int e : arcs[which])
        entries.push_back({black_label_of_edge(t, e), t.edge(e).label});
    UnfoldedTree u =
        unfold(entries, t.edge(slots.edges[which]).label, GreedyDirection::increasing);

    std::vector<int> factor;
    factor.push_back(first_label_of(u, beta));
    for (int lab : attracted_after(a, v, e_par)) factor.push_back(lab);
    factor.push_back(t.edge(e_par).label);
    return Cycle(factor, k);
}

// First entry of a factor recovered far from the spine when the vertex was
// moved under a fresh white: the label it opened with survives on the root
// edge of the group it was moved out of, found by walking counterclockwise
// from its attachment run to the next edge that is not such an attachment.
int genealogy_first_label(Analysis const& a, int j_black, int e_entry, int beta) {
    PlaneTree const& t = *a.t;
    int j_label = t.vertex(j_black).label;

    auto is_separator = [&](int e) {
        int w = t.edge(e).white_end;
        if (a.on_spine[static_cast<size_t>(w)]) return true;
        if (!a.on_spine[static_cast<size_t>(j_black)] &&
            e == a.parent_edge[static_cast<size_t>(j_black)])
            return true;
        return a.max_nbr[static_cast<size_t>(w)] == j_label;
    };

    std::vector<int> const& rot = t.vertex(j_black).ccw;
    size_t deg = rot.size();
    size_t at = 0;
    while (rot[at] != e_entry) ++at;

    std::vector<int> run;  // counterclockwise order, e_entry included
    size_t back = at;
    while (true) {
        size_t prevpos = (back + deg - 1) % deg;
        if (is_separator(rot[prevpos])) break;
        back = prevpos;
    }
    for (size_t i = back; i != at; i = (i + 1) % deg) run.push_back(rot[i]);
    run.push_back(rot[at]);
    size_t fwd = at;
    int sep = -1;
    while (true) {
        fwd = (fwd + 1) % deg;
        if (is_separator(rot[fwd])) {
            sep = rot[fwd];
            break;
        }
        run.push_back(rot[fwd]);
    }

    // Within the run, an edge hangs below another exactly when its white's name
    // is larger; reading clockwise from the separator, an edge's parent is the
    // nearest earlier edge with a smaller name.  The recovered first entry is
    // the parent's label, or the separator's label at top level.
    std::vector<int> names;   // clockwise from the separator
    std::vector<int> labels;
    for (size_t i = run.size(); i-- > 0;) {
        int w = t.edge(run[i]).white_end;
        names.push_back(a.max_nbr[static_cast<size_t>(w)]);
        labels.push_back(t.edge(run[i]).label);
    }
    size_t self = 0;
    while (names[self] != beta) ++self;
    for (size_t j = self; j-- > 0;)
        if (names[j] < beta) return labels[j];
    return t.edge(sep).label;
}

Cycle recover_away_impl(Analysis const& a, int black_label, RecoveryCase& rcase) {
    PlaneTree const& t = *a.t;
    int v = t.black_with_label(black_label);
    int k = t.max_edge_label();
    int e_par = a.parent_edge[static_cast<size_t>(v)];
    int W = a.parent_vertex[static_cast<size_t>(v)];
    int j_black = a.parent_vertex[static_cast<size_t>(W)];
    int e_wj = a.parent_edge[static_cast<size_t>(W)];

    std::vector<int> kids = attracted_after(a, v, e_par);

    if (classify_white_impl(a, W) == Origin::organic) {
        rcase = RecoveryCase::away_a;
        std::vector<FoldEntry> entries;
        for (int e : t.rotation_after(W, e_wj))
            entries.push_back({black_label_of_edge(t, e), t.edge(e).label});
        UnfoldedTree u = unfold(entries, t.edge(e_wj).label, GreedyDirection::increasing);
        std::vector<int> factor{first_label_of(u, black_label)};
        factor.insert(factor.end(), kids.begin(), kids.end());
        factor.push_back(t.edge(e_par).label);
        return Cycle(factor, k);
    }

    int y_label = a.max_nbr[static_cast<size_t>(W)];
    if (y_label == black_label) {
        rcase = RecoveryCase::away_d;
        std::vector<int> factor{genealogy_first_label(a, j_black, e_wj, black_label)};
        factor.insert(factor.end(), kids.begin(), kids.end());
        factor.push_back(t.edge(e_par).label);
        factor.push_back(t.edge(e_wj).label);
        return Cycle(factor, k);
    }

    int e_wy = edge_to_black_label(t, W, y_label);
    std::vector<int> blues = ccw_between(t, W, e_wj, e_wy);
    std::vector<int> reds = ccw_between(t, W, e_wy, e_wj);
    bool in_blues = std::find(blues.begin(), blues.end(), e_par) != blues.end();
    rcase = in_blues ? RecoveryCase::away_b : RecoveryCase::away_c;
    std::vector<int> const& group = in_blues ? blues : reds;
    int parental = in_blues ? t.edge(e_wj).label : t.edge(e_wy).label;

    std::vector<FoldEntry> entries;
    for (int e : group) entries.push_back({black_label_of_edge(t, e), t.edge(e).label});
    UnfoldedTree u = unfold(entries, parental, GreedyDirection::increasing);
    std::vector<int> factor{first_label_of(u, black_label)};
    factor.insert(factor.end(), kids.begin(), kids.end());
    factor.push_back(t.edge(e_par).label);
    return Cycle(factor, k);
}

RecoveredCycle recover_impl(Analysis const& a, Backbone const& bb, int black_label) {
    PlaneTree const& t = *a.t;
    int v = t.black_with_label(black_label);
    if (a.on_spine[static_cast<size_t>(v)])
        return {recover_stayer(a, bb, black_label), RecoveryCase::near_iii};
    int W = a.parent_vertex[static_cast<size_t>(v)];
    if (a.on_spine[static_cast<size_t>(W)]) {
        BackboneSegment const& seg = segment_of_white(bb, W);
        bool in_chain =
            std::find(seg.a_chain.begin(), seg.a_chain.end(), black_label) != seg.a_chain.end() ||
            std::find(seg.b_chain.begin(), seg.b_chain.end(), black_label) != seg.b_chain.end();
        if (in_chain) return {recover_leaver(a, seg, black_label), RecoveryCase::near_ii};
        return {recover_near_fold(a, seg, black_label), RecoveryCase::near_i};
    }
    RecoveryCase rcase = RecoveryCase::away_a;
    Cycle c = recover_away_impl(a, black_label, rcase);
    return {std::move(c), rcase};
}

}  // namespace

Origin classify_white(PlaneTree const& t2, int white_id) {
    Analysis a = analyze(t2);
    return classify_white_impl(a, white_id);
}

std::vector<std::size_t> greedy_subsequence(std::vector<int> const& labels,
                                            GreedyDirection direction) {
    std::vector<std::size_t> picks;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (!picks.empty()) {
            int last = labels[picks.back()];
            bool take = direction == GreedyDirection::increasing ? labels[i] > last
                                                                 : labels[i] < last;
            if (!take) continue;
        }
        picks.push_back(i);
    }
    return picks;
}

UnfoldedTree unfold(std::vector<FoldEntry> const& entries, int parental_label,
                    GreedyDirection direction) {
    UnfoldedTree out;
    for (FoldEntry const& fe : entries) {
        if (out.edge_label.count(fe.black))
            throw std::runtime_error("unfold: vertex " + std::to_string(fe.black) +
                                     " appears twice in the folded list");
        out.order.push_back(fe.black);
        out.edge_label[fe.black] = fe.edge_label;
    }

    // Recursively split [lo, hi) below `parent` (0 for the top level): the
    // greedy picks are the children, each owning the stretch up to the next
    // pick.
    auto split = [&](auto&& self, std::size_t lo, std::size_t hi, int parent) -> void {
        if (lo >= hi) return;
        std::vector<int> names;
        for (std::size_t i = lo; i < hi; ++i) names.push_back(entries[i].black);
        std::vector<std::size_t> picks = greedy_subsequence(names, direction);
        for (std::size_t p = 0; p < picks.size(); ++p) {
            std::size_t here = lo + picks[p];
            std::size_t next = p + 1 < picks.size() ? lo + picks[p + 1] : hi;
            int black = entries[here].black;
            out.parent[black] = parent;
            if (parent == 0)
                out.top_level.push_back(black);
            else
                out.children[parent].push_back(black);
            self(self, here + 1, next, black);
        }
    };
    split(split, 0, entries.size(), 0);

    for (FoldEntry const& fe : entries) {
        int p = out.parent.at(fe.black);
        out.first_label[fe.black] = p == 0 ? parental_label : out.edge_label.at(p);
    }
    return out;
}

std::string_view to_string(RecoveryCase c) {
    switch (c) {
        case RecoveryCase::away_a: return "a";
        case RecoveryCase::away_b: return "b";
        case RecoveryCase::away_c: return "c";
        case RecoveryCase::away_d: return "d";
        case RecoveryCase::near_i: return "i";
        case RecoveryCase::near_ii: return "ii";
        case RecoveryCase::near_iii: return "iii";
    }
    return "?";
}

Backbone build_backbone(PlaneTree const& t2) {
    Analysis a = analyze(t2);
    return build_backbone_impl(a);
}

Cycle recover_cycle_away(PlaneTree const& t2, int black_label) {
    Analysis a = analyze(t2);
    int v = t2.black_with_label(black_label);
    if (a.on_spine[static_cast<size_t>(v)] ||
        a.on_spine[static_cast<size_t>(a.parent_vertex[static_cast<size_t>(v)])])
        throw std::invalid_argument("recover_cycle_away: vertex touches the spine");
    RecoveryCase rcase = RecoveryCase::away_a;
    return recover_away_impl(a, black_label, rcase);
}

Cycle recover_cycle_near_spine(PlaneTree const& t2, Backbone const& bb, int black_label) {
    Analysis a = analyze(t2);
    int v = t2.black_with_label(black_label);
    if (!a.on_spine[static_cast<size_t>(v)] &&
        !a.on_spine[static_cast<size_t>(a.parent_vertex[static_cast<size_t>(v)])])
        throw std::invalid_argument("recover_cycle_near_spine: vertex is away from the spine");
    return recover_impl(a, bb, black_label).cycle;
}

RecoveredCycle recover_cycle(PlaneTree const& t2, Backbone const& bb, int black_label) {
    Analysis a = analyze(t2);
    return recover_impl(a, bb, black_label);
}

MinimalFactorization run_A_inverse(StanleyTree const& t) {
    StanleyType bt = type_of(t);
    if (bt.n() < 2)
        throw std::invalid_argument("run_A_inverse: the tree must have at least two blacks");
    for (int b : bt.b)
        if (b < 1) throw std::invalid_argument("run_A_inverse: every type entry must be >= 1");

    PlaneTree p = to_plane_tree(t);
    Analysis a = analyze(p);
    Backbone bb = build_backbone_impl(a);

    std::vector<Cycle> factors;
    std::vector<int> lengths;
    for (int label = 1; label <= bt.n(); ++label) {
        try {
            factors.push_back(recover_impl(a, bb, label).cycle);
        } catch (std::logic_error const&) {
            throw;
        } catch (std::exception const& e) {
            throw std::runtime_error("run_A_inverse: factor " + std::to_string(label) + ": " +
                                     e.what());
        }
        lengths.push_back(factors.back().length());
    }

    MinimalFactorization f{FactorizationType{lengths}, factors};
    if (ValidationFailure r = validate_reason(f); r != ValidationFailure::ok)
        throw std::runtime_error("run_A_inverse: recovered factors do not multiply back (" +
                                 std::string(to_string(r)) + ")");
    return f;
}

}  // namespace stanley
