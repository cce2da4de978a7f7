#include "stanley/stanley_tree.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace stanley {

StanleyType::StanleyType(std::vector<int> b_) : b(std::move(b_)) {
    if (b.empty()) throw std::invalid_argument("StanleyType: empty type");
    for (int v : b)
        if (v < 0) throw std::invalid_argument("StanleyType: negative entry");
    if (k() < 1) throw std::invalid_argument("StanleyType: degree must be at least 1");
}

int StanleyType::k() const {
    return std::accumulate(b.begin(), b.end(), 0) + n() - 1;
}

StanleyTree::StanleyTree(Permutation sigma1_, Permutation sigma2_,
                         std::vector<std::pair<int, int>> labels_)
    : sigma1(std::move(sigma1_)), sigma2(std::move(sigma2_)), labels(std::move(labels_)) {
    if (sigma1.k() != sigma2.k())
        throw std::invalid_argument("StanleyTree: permutation degrees differ");
    int deg = sigma1.k();
    if (deg < 1) throw std::invalid_argument("StanleyTree: degree must be at least 1");
    auto whites = cycles_of(sigma1);
    auto blacks = cycles_of(sigma2);
    if (static_cast<int>(whites.size() + blacks.size()) != deg + 1)
        throw std::invalid_argument("StanleyTree: cycle counts do not add up to k+1");
    // Connectivity of the cycle-incidence graph: gluing the elements of every
    // cycle of either permutation must identify all k edge labels.
    std::vector<int> parent(static_cast<size_t>(deg));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    auto glue = [&](std::vector<Cycle> const& cycles) {
        for (Cycle const& c : cycles)
            for (size_t i = 1; i < c.entries.size(); ++i)
                parent[static_cast<size_t>(find(c.entries[i] - 1))] = find(c.entries[0] - 1);
    };
    glue(whites);
    glue(blacks);
    for (int x = 0; x < deg; ++x)
        if (find(x) != find(0))
            throw std::invalid_argument("StanleyTree: the encoded graph is not connected");
    // Labeling: exactly the cycle minima of sigma2, sorted, mapping onto
    // {1..n} bijectively.
    if (labels.size() != blacks.size())
        throw std::invalid_argument("StanleyTree: labeling size differs from the cycle count");
    std::vector<char> label_seen(blacks.size() + 1, 0);
    for (size_t i = 0; i < labels.size(); ++i) {
        if (labels[i].first != blacks[i].entries.front())
            throw std::invalid_argument("StanleyTree: labeling keys must be the cycle minima in order");
        int lab = labels[i].second;
        if (lab < 1 || lab > static_cast<int>(blacks.size()) || label_seen[static_cast<size_t>(lab)])
            throw std::invalid_argument("StanleyTree: labels must form a bijection onto 1..n");
        label_seen[static_cast<size_t>(lab)] = 1;
    }
}

bool equal(StanleyTree const& t1, StanleyTree const& t2) { return t1 == t2; }

StanleyType type_of(StanleyTree const& t) {
    auto blacks = cycles_of(t.sigma2);
    std::vector<int> label_of_element(static_cast<size_t>(t.k()) + 1, 0);
    for (size_t i = 0; i < blacks.size(); ++i)
        for (int e : blacks[i].entries)
            label_of_element[static_cast<size_t>(e)] = t.labels[i].second;
    std::vector<int> b(static_cast<size_t>(t.n()), 0);
    for (Cycle const& white : cycles_of(t.sigma1)) {
        int f = 0;
        for (int e : white.entries) f = std::max(f, label_of_element[static_cast<size_t>(e)]);
        ++b[static_cast<size_t>(f - 1)];
    }
    return StanleyType(b);
}

StanleyTree from_plane_tree(PlaneTree const& p) {
    int k = 0;
    for (TreeEdge const& e : p.edges)
        if (e.alive) ++k;
    std::vector<char> seen(static_cast<size_t>(k) + 1, 0);
    for (TreeEdge const& e : p.edges) {
        if (!e.alive) continue;
        if (e.label < 1 || e.label > k || seen[static_cast<size_t>(e.label)])
            throw std::invalid_argument("from_plane_tree: edge labels must be 1..k each once");
        seen[static_cast<size_t>(e.label)] = 1;
    }
    std::vector<int> img1(static_cast<size_t>(k)), img2(static_cast<size_t>(k));
    std::vector<std::pair<int, int>> labels;
    for (TreeVertex const& v : p.vertices) {
        if (!v.alive) continue;
        if (v.ccw.empty()) throw std::invalid_argument("from_plane_tree: isolated vertex");
        std::vector<int>& img = v.color == Color::white ? img1 : img2;
        int min_label = p.edge(v.ccw.front()).label;
        for (size_t i = 0; i < v.ccw.size(); ++i) {
            int cur = p.edge(v.ccw[i]).label;
            int nxt = p.edge(v.ccw[(i + 1) % v.ccw.size()]).label;
            img[static_cast<size_t>(cur - 1)] = nxt;
            min_label = std::min(min_label, cur);
        }
        if (v.color == Color::black) labels.push_back({min_label, v.label});
    }
    std::sort(labels.begin(), labels.end());
    return StanleyTree(Permutation(std::move(img1)), Permutation(std::move(img2)),
                       std::move(labels));
}

PlaneTree to_plane_tree(StanleyTree const& t) {
    auto whites = cycles_of(t.sigma1);
    auto blacks = cycles_of(t.sigma2);
    PlaneTree p;
    std::vector<int> black_of_element(static_cast<size_t>(t.k()) + 1);
    std::vector<int> white_of_element(static_cast<size_t>(t.k()) + 1);
    // Blacks in label order get ids 0..n-1.
    std::vector<size_t> by_label(blacks.size());
    for (size_t i = 0; i < blacks.size(); ++i)
        by_label[static_cast<size_t>(t.labels[i].second - 1)] = i;
    for (size_t lab = 0; lab < by_label.size(); ++lab) {
        int vid = p.new_vertex(Color::black, static_cast<int>(lab) + 1);
        for (int e : blacks[by_label[lab]].entries) black_of_element[static_cast<size_t>(e)] = vid;
    }
    for (Cycle const& w : whites) {
        int vid = p.new_vertex(Color::white, -1);
        for (int e : w.entries) white_of_element[static_cast<size_t>(e)] = vid;
    }
    std::vector<int> edge_of_label(static_cast<size_t>(t.k()) + 1);
    for (int c = 1; c <= t.k(); ++c)
        edge_of_label[static_cast<size_t>(c)] =
            p.new_edge(c, black_of_element[static_cast<size_t>(c)],
                       white_of_element[static_cast<size_t>(c)]);
    for (size_t lab = 0; lab < by_label.size(); ++lab)
        for (int e : blacks[by_label[lab]].entries)
            p.vertex(static_cast<int>(lab)).ccw.push_back(edge_of_label[static_cast<size_t>(e)]);
    int wid = static_cast<int>(by_label.size());
    for (Cycle const& w : whites) {
        for (int e : w.entries)
            p.vertex(wid).ccw.push_back(edge_of_label[static_cast<size_t>(e)]);
        ++wid;
    }
    validate_structure(p);
    return p;
}

int stanley_enumeration_bound() {
    if (char const* env = std::getenv("STANLEY_BIJ_MAX_K")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 8;
}

void enumerate_streaming(StanleyType const& bt,
                         std::function<bool(StanleyTree const&)> const& visit) {
    int k = bt.k();
    int n = bt.n();
    // For each sigma2 with n cycles, sigma1 is determined by the (arbitrary)
    // long-cycle product: sigma1 = product o sigma2^{-1}.  Scan sigma2 in
    // one-line lexicographic order and products as cyclic words starting at 1.
    std::vector<int> one_line(static_cast<size_t>(k));
    std::iota(one_line.begin(), one_line.end(), 1);
    std::vector<int> label_perm(static_cast<size_t>(n));
    do {
        Permutation sigma2{std::vector<int>(one_line)};
        auto blacks = cycles_of(sigma2);
        if (static_cast<int>(blacks.size()) != n) continue;
        Permutation sigma2_inv = inverse(sigma2);
        std::vector<int> black_index_of(static_cast<size_t>(k) + 1);
        for (size_t i = 0; i < blacks.size(); ++i)
            for (int e : blacks[i].entries)
                black_index_of[static_cast<size_t>(e)] = static_cast<int>(i);
        std::vector<int> tail(static_cast<size_t>(k) - 1);
        std::iota(tail.begin(), tail.end(), 2);
        do {
            std::vector<int> cyc{1};
            cyc.insert(cyc.end(), tail.begin(), tail.end());
            Permutation sigma1 = compose(Cycle(cyc, k).to_permutation(), sigma2_inv);
            auto whites = cycles_of(sigma1);
            if (static_cast<int>(whites.size() + blacks.size()) != k + 1) continue;
            std::iota(label_perm.begin(), label_perm.end(), 1);
            do {
                std::vector<int> b(static_cast<size_t>(n), 0);
                bool feasible = true;
                for (Cycle const& w : whites) {
                    int f = 0;
                    for (int e : w.entries)
                        f = std::max(f, label_perm[static_cast<size_t>(
                                            black_index_of[static_cast<size_t>(e)])]);
                    if (++b[static_cast<size_t>(f - 1)] > bt.b[static_cast<size_t>(f - 1)]) {
                        feasible = false;
                        break;
                    }
                }
                if (!feasible || b != bt.b) continue;
                std::vector<std::pair<int, int>> labels;
                for (size_t i = 0; i < blacks.size(); ++i)
                    labels.push_back({blacks[i].entries.front(), label_perm[i]});
                if (!visit(StanleyTree(sigma1, sigma2, std::move(labels)))) return;
            } while (std::next_permutation(label_perm.begin(), label_perm.end()));
        } while (std::next_permutation(tail.begin(), tail.end()));
    } while (std::next_permutation(one_line.begin(), one_line.end()));
}

std::vector<StanleyTree> enumerate(StanleyType const& bt) {
    if (bt.k() > stanley_enumeration_bound())
        throw std::invalid_argument(
            "enumerate: k=" + std::to_string(bt.k()) + " exceeds the bound " +
            std::to_string(stanley_enumeration_bound()) + "; use enumerate_streaming");
    std::vector<StanleyTree> out;
    enumerate_streaming(bt, [&](StanleyTree const& t) {
        out.push_back(t);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_line(StanleyTree const& t) {
    std::ostringstream os;
    os << "k=" << t.k() << "; s1=" << cycles_to_string(cycles_of(t.sigma1))
       << "; s2=" << cycles_to_string(cycles_of(t.sigma2)) << "; labels=";
    for (size_t i = 0; i < t.labels.size(); ++i) {
        if (i) os << ',';
        os << t.labels[i].first << ':' << t.labels[i].second;
    }
    return os.str();
}

StanleyTree parse_stanley_line(std::string const& line) {
    auto expect = [&](std::string const& text, size_t& pos, std::string const& token) {
        if (text.compare(pos, token.size(), token) != 0)
            throw std::invalid_argument("parse_stanley_line: expected '" + token + "' in '" +
                                        line + "'");
        pos += token.size();
    };
    size_t pos = 0;
    expect(line, pos, "k=");
    size_t used = 0;
    int k = std::stoi(line.substr(pos), &used);
    if (k < 1) throw std::invalid_argument("parse_stanley_line: bad degree");
    pos += used;
    expect(line, pos, "; s1=");
    size_t next = line.find("; s2=", pos);
    if (next == std::string::npos) throw std::invalid_argument("parse_stanley_line: missing s2");
    Permutation sigma1 = parse_permutation(line.substr(pos, next - pos), k);
    pos = next;
    expect(line, pos, "; s2=");
    next = line.find("; labels=", pos);
    if (next == std::string::npos)
        throw std::invalid_argument("parse_stanley_line: missing labels");
    Permutation sigma2 = parse_permutation(line.substr(pos, next - pos), k);
    pos = next;
    expect(line, pos, "; labels=");
    std::vector<std::pair<int, int>> labels;
    std::istringstream ls(line.substr(pos));
    std::string item;
    while (std::getline(ls, item, ',')) {
        size_t colon = item.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("parse_stanley_line: bad label entry '" + item + "'");
        labels.push_back({std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1))});
    }
    return StanleyTree(std::move(sigma1), std::move(sigma2), std::move(labels));
}

}  // namespace stanley
