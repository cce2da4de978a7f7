#include "stanley/factorization.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <stdexcept>

namespace stanley {

FactorizationType::FactorizationType(std::vector<int> lengths) : a(std::move(lengths)) {
    if (a.empty()) throw std::invalid_argument("factorization type must be nonempty");
    for (int ai : a)
        if (ai < 2) throw std::invalid_argument("factorization type entries must be >= 2");
}

int FactorizationType::k() const {
    int k = 1;
    for (int ai : a) k += ai - 1;
    return k;
}

Permutation MinimalFactorization::product() const {
    Permutation p = Permutation::identity(k());
    for (auto it = factors.rbegin(); it != factors.rend(); ++it)
        p = compose(it->to_permutation(), p);
    return p;
}

std::string_view to_string(ValidationFailure f) {
    switch (f) {
        case ValidationFailure::ok: return "ok";
        case ValidationFailure::factor_count_mismatch: return "factor_count_mismatch";
        case ValidationFailure::degree_mismatch: return "degree_mismatch";
        case ValidationFailure::factor_length_mismatch: return "factor_length_mismatch";
        case ValidationFailure::product_not_long_cycle: return "product_not_long_cycle";
    }
    return "unknown";
}

ValidationFailure validate_reason(MinimalFactorization const& f) {
    if (static_cast<int>(f.factors.size()) != f.n())
        return ValidationFailure::factor_count_mismatch;
    for (Cycle const& c : f.factors)
        if (c.k != f.k()) return ValidationFailure::degree_mismatch;
    for (int i = 0; i < f.n(); ++i)
        if (f.factors[static_cast<size_t>(i)].length() != f.ftype.a[static_cast<size_t>(i)])
            return ValidationFailure::factor_length_mismatch;
    if (!is_long_cycle(f.product())) return ValidationFailure::product_not_long_cycle;
    return ValidationFailure::ok;
}

bool validate(MinimalFactorization const& f) {
    return validate_reason(f) == ValidationFailure::ok;
}

BigInt count_formula(FactorizationType const& t) {
    BigInt r = 1;
    for (int i = 2; i < t.k(); ++i) r *= i;
    for (int i = 1; i < t.n(); ++i) r *= t.k();
    return r;
}

void for_each_cycle(int k, int length, std::function<bool(Cycle const&)> const& visit) {
    // Canonical form puts the minimum first: later entries are distinct
    // values all exceeding the first, in any order.  Choosing entries in
    // ascending candidate order yields lexicographic output.
    std::vector<int> entries;
    entries.reserve(static_cast<size_t>(length));
    std::vector<char> used(static_cast<size_t>(k + 1), 0);
    bool stop = false;
    auto rec = [&](auto&& self, int depth) -> void {
        if (stop) return;
        if (depth == length) {
            Cycle c;
            c.entries = entries;
            c.k = k;
            if (!visit(c)) stop = true;
            return;
        }
        int const lo = depth == 0 ? 1 : entries[0] + 1;
        for (int v = lo; v <= k && !stop; ++v) {
            if (used[static_cast<size_t>(v)]) continue;
            used[static_cast<size_t>(v)] = 1;
            entries.push_back(v);
            self(self, depth + 1);
            entries.pop_back();
            used[static_cast<size_t>(v)] = 0;
        }
    };
    rec(rec, 0);
}

void enumerate_streaming(FactorizationType const& t,
                         std::function<void(MinimalFactorization const&)> const& visit) {
    int const k = t.k();
    int const n = t.n();
    std::vector<Cycle> chosen(static_cast<size_t>(n));
    // DFS over factor positions; a partial product s_1..s_i of a minimal
    // factorization must have exactly saturated norm sum(a_j - 1, j <= i),
    // which prunes hard and leaves exactly the long-cycle products at the
    // bottom (norm k-1 means a single cycle).
    auto rec = [&](auto&& self, int pos, Permutation const& partial, int norm_budget) -> void {
        if (pos == n) {
            visit(MinimalFactorization(t, chosen));
            return;
        }
        int const len = t.a[static_cast<size_t>(pos)];
        for_each_cycle(k, len, [&](Cycle const& c) {
            Permutation next = compose(partial, c.to_permutation());
            if (norm(next) == norm_budget + len - 1) {
                chosen[static_cast<size_t>(pos)] = c;
                self(self, pos + 1, next, norm_budget + len - 1);
            }
            return true;
        });
    };
    rec(rec, 0, Permutation::identity(k), 0);
}

int enumeration_bound() {
    if (char const* env = std::getenv("STANLEY_BIJ_MAX_K")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 10;
}

std::vector<MinimalFactorization> enumerate(FactorizationType const& t) {
    if (t.k() > enumeration_bound())
        throw std::runtime_error(
            "enumeration bound exceeded (k=" + std::to_string(t.k()) + " > " +
            std::to_string(enumeration_bound()) +
            "); use enumerate_streaming or raise STANLEY_BIJ_MAX_K");
    std::vector<MinimalFactorization> out;
    enumerate_streaming(t, [&](MinimalFactorization const& f) { out.push_back(f); });
    return out;
}

MinimalFactorization sample_uniform(FactorizationType const& t, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    int const k = t.k();
    std::vector<int> pool(static_cast<size_t>(k));
    for (int i = 1; i <= k; ++i) pool[static_cast<size_t>(i - 1)] = i;
    while (true) {
        std::vector<Cycle> factors;
        factors.reserve(static_cast<size_t>(t.n()));
        for (int len : t.a) {
            // A uniformly random sequence of `len` distinct values induces a
            // uniformly random cycle (each cycle has `len` sequence forms).
            for (int i = 0; i < len; ++i) {
                std::uniform_int_distribution<int> pick(i, k - 1);
                std::swap(pool[static_cast<size_t>(i)], pool[static_cast<size_t>(pick(rng))]);
            }
            factors.emplace_back(std::vector<int>(pool.begin(), pool.begin() + len), k);
        }
        MinimalFactorization f(t, std::move(factors));
        if (validate(f)) return f;
    }
}

std::string to_line(MinimalFactorization const& f) {
    std::string s = "k=" + std::to_string(f.k()) + "; ";
    for (Cycle const& c : f.factors) s += to_string(c);
    return s;
}

MinimalFactorization parse_line(std::string_view line) {
    size_t const semi = line.find(';');
    if (semi == std::string_view::npos || line.substr(0, 2) != "k=")
        throw std::invalid_argument("factorization line must start with 'k=<int>;'");
    int const k = std::stoi(std::string(line.substr(2, semi - 2)));
    if (k < 1) throw std::invalid_argument("factorization line: invalid degree");
    auto groups = parse_cycle_groups(line.substr(semi + 1));
    if (groups.empty()) throw std::invalid_argument("factorization line: no factors");
    std::vector<Cycle> factors;
    std::vector<int> lengths;
    for (auto& g : groups) {
        lengths.push_back(static_cast<int>(g.size()));
        factors.emplace_back(std::move(g), k);
    }
    FactorizationType t(std::move(lengths));
    if (t.k() != k)
        throw std::invalid_argument("factorization line: degree inconsistent with factor lengths");
    return MinimalFactorization(std::move(t), std::move(factors));
}

}  // namespace stanley
