#include "stanley/perm.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace stanley {

Permutation::Permutation(std::vector<int> images) : img(std::move(images)) {
    int const k = static_cast<int>(img.size());
    std::vector<char> seen(static_cast<size_t>(k), 0);
    for (int v : img) {
        if (v < 1 || v > k) throw std::invalid_argument("permutation image out of range");
        if (seen[static_cast<size_t>(v - 1)]) throw std::invalid_argument("permutation image repeated");
        seen[static_cast<size_t>(v - 1)] = 1;
    }
}

Permutation Permutation::identity(int k) {
    std::vector<int> img(static_cast<size_t>(k));
    for (int i = 1; i <= k; ++i) img[static_cast<size_t>(i - 1)] = i;
    Permutation p;
    p.img = std::move(img);
    return p;
}

Cycle::Cycle(std::vector<int> entries_in, int degree) : entries(std::move(entries_in)), k(degree) {
    if (entries.empty()) throw std::invalid_argument("cycle must be nonempty");
    std::vector<char> seen(static_cast<size_t>(k), 0);
    for (int v : entries) {
        if (v < 1 || v > k) throw std::invalid_argument("cycle entry out of range");
        if (seen[static_cast<size_t>(v - 1)]) throw std::invalid_argument("cycle entry repeated");
        seen[static_cast<size_t>(v - 1)] = 1;
    }
    auto min_it = std::min_element(entries.begin(), entries.end());
    std::rotate(entries.begin(), min_it, entries.end());
}

Permutation Cycle::to_permutation() const {
    Permutation p = Permutation::identity(k);
    int const len = length();
    for (int i = 0; i < len; ++i)
        p.img[static_cast<size_t>(entries[static_cast<size_t>(i)] - 1)] =
            entries[static_cast<size_t>((i + 1) % len)];
    return p;
}

Permutation compose(Permutation const& f, Permutation const& g) {
    if (f.k() != g.k()) throw std::invalid_argument("compose: degree mismatch");
    Permutation r;
    r.img.resize(f.img.size());
    for (int x = 1; x <= f.k(); ++x) r.img[static_cast<size_t>(x - 1)] = f(g(x));
    return r;
}

Permutation inverse(Permutation const& p) {
    Permutation r;
    r.img.resize(p.img.size());
    for (int x = 1; x <= p.k(); ++x) r.img[static_cast<size_t>(p(x) - 1)] = x;
    return r;
}

int norm(Permutation const& p) {
    return p.k() - static_cast<int>(cycles_of(p).size());
}

bool is_long_cycle(Permutation const& p) {
    int const k = p.k();
    if (k == 0) return false;
    int x = 1, steps = 0;
    do {
        x = p(x);
        ++steps;
    } while (x != 1 && steps <= k);
    return steps == k;
}

std::vector<Cycle> cycles_of(Permutation const& p) {
    int const k = p.k();
    std::vector<char> seen(static_cast<size_t>(k), 0);
    std::vector<Cycle> out;
    for (int start = 1; start <= k; ++start) {
        if (seen[static_cast<size_t>(start - 1)]) continue;
        std::vector<int> entries;
        int x = start;
        do {
            seen[static_cast<size_t>(x - 1)] = 1;
            entries.push_back(x);
            x = p(x);
        } while (x != start);
        out.emplace_back(std::move(entries), k);
    }
    // Scanning starts at each cycle's minimum, so the list is already
    // sorted by minima; keep the sort as a guarantee, not an assumption.
    std::sort(out.begin(), out.end(),
              [](Cycle const& a, Cycle const& b) { return a.entries[0] < b.entries[0]; });
    return out;
}

std::string to_string(Cycle const& c) {
    std::string s = "(";
    for (size_t i = 0; i < c.entries.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(c.entries[i]);
    }
    s += ')';
    return s;
}

std::string to_string(Permutation const& p) {
    std::string s;
    for (Cycle const& c : cycles_of(p))
        if (c.length() > 1) s += to_string(c);
    if (s.empty()) s = "()";
    return s;
}

std::string cycles_to_string(std::vector<Cycle> const& cycles) {
    std::string s;
    for (Cycle const& c : cycles) s += to_string(c);
    return s;
}

std::vector<std::vector<int>> parse_cycle_groups(std::string_view text) {
    std::vector<std::vector<int>> groups;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(') throw std::invalid_argument("cycle notation: expected '('");
        ++i;
        std::vector<int> group;
        skip_ws();
        if (i < text.size() && text[i] == ')') {      // "()" = empty group (identity)
            ++i;
        } else {
            while (true) {
                skip_ws();
                size_t j = i;
                while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
                if (j == i) throw std::invalid_argument("cycle notation: expected integer");
                group.push_back(std::stoi(std::string(text.substr(i, j - i))));
                i = j;
                skip_ws();
                if (i >= text.size()) throw std::invalid_argument("cycle notation: unterminated cycle");
                if (text[i] == ',') {
                    ++i;
                    continue;
                }
                if (text[i] == ')') {
                    ++i;
                    break;
                }
                throw std::invalid_argument("cycle notation: expected ',' or ')'");
            }
        }
        if (!group.empty()) groups.push_back(std::move(group));
        skip_ws();
    }
    return groups;
}

Cycle parse_cycle(std::string_view text, int degree) {
    auto groups = parse_cycle_groups(text);
    if (groups.size() != 1) throw std::invalid_argument("expected exactly one cycle");
    return Cycle(std::move(groups[0]), degree);
}

Permutation parse_permutation(std::string_view text, int degree) {
    Permutation p = Permutation::identity(degree);
    for (auto const& group : parse_cycle_groups(text)) {
        Cycle c(group, degree);  // validates range and distinctness
        for (size_t i = 0; i < group.size(); ++i) {
            int const from = group[i];
            int const to = group[(i + 1) % group.size()];
            if (p.img[static_cast<size_t>(from - 1)] != from)
                throw std::invalid_argument("cycle notation: cycles are not disjoint");
            p.img[static_cast<size_t>(from - 1)] = to;
        }
    }
    return p;
}

}  // namespace stanley
