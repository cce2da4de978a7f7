#pragma once

/*
 * Exact permutation arithmetic on {1..k}: composition, cycle structure,
 * Cayley norm, and parsing/printing of cycle notation.
 *
 * Conventions:
 *  - Values are 1-based; a Permutation of degree k acts on {1..k}.
 *  - compose(f, g) is the function x -> f(g(x)), so in a product the
 *    rightmost factor acts first.
 *  - A Cycle is stored with its minimum entry first; two cycles are equal
 *    iff their canonical forms are equal (rotations are identified).
 */

#include <string>
#include <string_view>
#include <vector>

namespace stanley {

struct Permutation {
    std::vector<int> img;  // img[i-1] = image of i; values are 1..k

    Permutation() = default;
    explicit Permutation(std::vector<int> images);  // checks bijectivity
    static Permutation identity(int k);

    int k() const { return static_cast<int>(img.size()); }
    int operator()(int x) const { return img[x - 1]; }

    bool operator==(Permutation const&) const = default;
    auto operator<=>(Permutation const&) const = default;
};

struct Cycle {
    std::vector<int> entries;  // canonical: minimum entry first
    int k = 0;                 // degree of the ambient symmetric group

    Cycle() = default;
    Cycle(std::vector<int> entries, int degree);  // canonicalizes, checks

    int length() const { return static_cast<int>(entries.size()); }
    Permutation to_permutation() const;

    bool operator==(Cycle const&) const = default;
    auto operator<=>(Cycle const&) const = default;
};

// compose(f, g)(x) == f(g(x)); degrees must match.
Permutation compose(Permutation const& f, Permutation const& g);

Permutation inverse(Permutation const& p);

// Minimal number of transpositions needed to express p: k minus the number
// of cycles of p (fixed points included).
int norm(Permutation const& p);

// True iff p is a single cycle visiting all of {1..k}.
bool is_long_cycle(Permutation const& p);

// Full cycle decomposition, fixed points included; each cycle is canonical
// (minimum first) and the list is sorted by the cycles' minima.
std::vector<Cycle> cycles_of(Permutation const& p);

// Text syntax: "(2,5,6,10)" for a single cycle, "(1,2)(3,4)" for a
// permutation given as concatenated cycles (fixed points omissible).
// Parsing tolerates whitespace; printing emits none.
std::string to_string(Cycle const& c);
std::string to_string(Permutation const& p);  // fixed points omitted; identity -> "()"
std::string cycles_to_string(std::vector<Cycle> const& cycles);  // every cycle printed

// Raw parenthesized groups of a cycle-notation string, in input order.
std::vector<std::vector<int>> parse_cycle_groups(std::string_view text);
Cycle parse_cycle(std::string_view text, int degree);
Permutation parse_permutation(std::string_view text, int degree);

}  // namespace stanley
