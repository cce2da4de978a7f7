#pragma once

/*
 * Minimal factorizations of a long cycle.
 *
 * A factorization type is a sequence (a_1..a_n), each a_i >= 2; it fixes the
 * degree k = 1 + sum(a_i - 1).  A minimal factorization of that type is a
 * tuple of cycles (s_1..s_n) in S_k, factor i of length a_i, whose product
 * s_1 ... s_n (rightmost acting first) is a cycle of length k.  Because
 * norm(product) = k-1 equals the sum of the factor norms, such tuples are
 * factorizations of minimal possible length, and every partial product has
 * saturated norm -- which is what the enumerator prunes on.
 */

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "stanley/perm.hpp"

namespace stanley {

using BigInt = boost::multiprecision::cpp_int;

struct FactorizationType {
    std::vector<int> a;  // factor lengths, each >= 2

    explicit FactorizationType(std::vector<int> lengths);

    int n() const { return static_cast<int>(a.size()); }
    int k() const;  // 1 + sum(a_i - 1)

    bool operator==(FactorizationType const&) const = default;
};

struct MinimalFactorization {
    FactorizationType ftype;
    std::vector<Cycle> factors;  // factor i has length ftype.a[i], degree ftype.k()

    MinimalFactorization(FactorizationType t, std::vector<Cycle> fs)
        : ftype(std::move(t)), factors(std::move(fs)) {}

    int n() const { return ftype.n(); }
    int k() const { return ftype.k(); }
    Permutation product() const;  // compose(s1, compose(s2, ...))

    bool operator==(MinimalFactorization const&) const = default;
};

enum class ValidationFailure {
    ok,
    factor_count_mismatch,   // number of factors != n
    degree_mismatch,         // some factor lives in the wrong symmetric group
    factor_length_mismatch,  // some factor has the wrong length
    product_not_long_cycle,  // product is not a single k-cycle
};
std::string_view to_string(ValidationFailure f);

ValidationFailure validate_reason(MinimalFactorization const& f);
bool validate(MinimalFactorization const& f);

// (k-1)! * k^(n-1), the exact size of the set of minimal factorizations.
BigInt count_formula(FactorizationType const& t);

// All canonical cycles of the given length in S_k, lexicographically by
// canonical entry sequence; the callback returns false to stop early.
void for_each_cycle(int k, int length, std::function<bool(Cycle const&)> const& visit);

// Streaming enumeration of every minimal factorization of type t, exactly
// once, in lexicographic order of the concatenated canonical cycle
// sequences.  No size bound applies to the streaming form.
void enumerate_streaming(FactorizationType const& t,
                         std::function<void(MinimalFactorization const&)> const& visit);

// Convenience wrapper; refuses k beyond the enumeration bound.
std::vector<MinimalFactorization> enumerate(FactorizationType const& t);

// Default bound 10; the STANLEY_BIJ_MAX_K environment variable overrides it.
int enumeration_bound();

// Uniformly distributed over the type's factorizations (rejection sampling
// over independent uniform cycle tuples); deterministic for a fixed seed.
MinimalFactorization sample_uniform(FactorizationType const& t, std::uint64_t seed);

// File format, one factorization per line:
//   k=10; (7,8,9,10)(1,2)(2,5,6,10)(2,3,4)
std::string to_line(MinimalFactorization const& f);
MinimalFactorization parse_line(std::string_view line);

}  // namespace stanley
