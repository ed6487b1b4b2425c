#include "dmat/core.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

#include "dmat/gf2.hpp"

namespace dmat {

void check_mask(int n, SubsetMask a) {
    if ((a & ~full_mask(n)) != 0)
        throw InputError("subset " + format_subset(a) + " is outside the ground set of size " +
                         std::to_string(n));
}

void check_enumerable(int n, const char* what) {
    if (n > kMaxEnumerationSize)
        throw UnsupportedSizeError(std::string(what) + ": ground set of size " + std::to_string(n) +
                                   " exceeds the supported maximum of " +
                                   std::to_string(kMaxEnumerationSize));
}

SetSystem::SetSystem(int n, std::vector<SubsetMask> feasible) : n_(n), feasible_(std::move(feasible)) {
    if (n < 0 || n > kMaxStructuralSize)
        throw InputError("ground set size " + std::to_string(n) + " is out of range");
    for (SubsetMask f : feasible_)
        check_mask(n, f);
    std::sort(feasible_.begin(), feasible_.end());
    auto dup = std::adjacent_find(feasible_.begin(), feasible_.end());
    if (dup != feasible_.end())
        throw InputError("duplicate feasible set " + format_subset(*dup));
}

bool SetSystem::has(SubsetMask a) const {
    return std::binary_search(feasible_.begin(), feasible_.end(), a);
}

bool is_delta_matroid(const SetSystem& s) {
    if (!s.is_proper())
        return false;
    const int n = s.size();
    const auto& fam = s.feasible();

    std::vector<std::uint8_t> table;
    if (n <= 20) {
        table.assign(std::size_t{1} << n, 0);
        for (SubsetMask f : fam)
            table[f] = 1;
    }
    auto member = [&](SubsetMask a) { return table.empty() ? s.has(a) : table[a] != 0; };

    // rescue[u] holds every v with X delta {u, v} feasible.
    std::vector<SubsetMask> rescue(n);
    for (SubsetMask x : fam) {
        for (int u = 0; u < n; ++u) {
            SubsetMask xu = x ^ (SubsetMask{1} << u);
            SubsetMask good = 0;
            for (int v = 0; v < n; ++v) {
                SubsetMask probe = v == u ? xu : xu ^ (SubsetMask{1} << v);
                if (member(probe))
                    good |= SubsetMask{1} << v;
            }
            rescue[u] = good;
        }
        for (SubsetMask y : fam) {
            SubsetMask diff = x ^ y;
            for (SubsetMask rest = diff; rest; rest &= rest - 1) {
                int u = std::countr_zero(rest);
                if ((rescue[u] & diff) == 0)
                    return false;
            }
        }
    }
    return true;
}

DeltaMatroid::DeltaMatroid(const SetSystem& s) : SetSystem(s) {
    if (!is_delta_matroid(s))
        throw InputError("set system is not a delta-matroid");
}

DeltaMatroid DeltaMatroid::assume(int n, std::vector<SubsetMask> feasible) {
    std::sort(feasible.begin(), feasible.end());
    DeltaMatroid d(Trusted{}, n, std::move(feasible));
#ifndef NDEBUG
    assert(std::adjacent_find(d.feasible_.begin(), d.feasible_.end()) == d.feasible_.end());
    assert(is_delta_matroid(d));
#endif
    return d;
}

Matroid::Matroid(const DeltaMatroid& d) : DeltaMatroid(d) {
    int r = popcount(feasible_.front());
    for (SubsetMask b : feasible_)
        if (popcount(b) != r)
            throw InputError("bases of a matroid must have equal size");
}

DeltaMatroid twist(const DeltaMatroid& d, SubsetMask a) {
    check_mask(d.size(), a);
    std::vector<SubsetMask> out;
    out.reserve(d.count());
    for (SubsetMask f : d.feasible())
        out.push_back(f ^ a);
    return DeltaMatroid::assume(d.size(), std::move(out));
}

DeltaMatroid dual(const DeltaMatroid& d) { return twist(d, full_mask(d.size())); }

DeltaMatroid direct_sum(const DeltaMatroid& d1, const DeltaMatroid& d2) {
    const int n = d1.size() + d2.size();
    if (n > kMaxStructuralSize)
        throw UnsupportedSizeError("direct sum would have " + std::to_string(n) + " elements");
    std::vector<SubsetMask> out;
    out.reserve(d1.count() * d2.count());
    for (SubsetMask f : d1.feasible())
        for (SubsetMask g : d2.feasible())
            out.push_back(f | (g << d1.size()));
    return DeltaMatroid::assume(n, std::move(out));
}

DeltaMatroid delete_element(const DeltaMatroid& d, int e) {
    if (e < 0 || e >= d.size())
        throw InputError("element " + std::to_string(e) + " is outside the ground set of size " +
                         std::to_string(d.size()));
    const bool coloop = contains(loops_coloops(d).coloops, e);
    std::vector<SubsetMask> out;
    for (SubsetMask f : d.feasible())
        if (coloop || !contains(f, e))
            out.push_back(drop_bit(f, e));
    return DeltaMatroid::assume(d.size() - 1, std::move(out));
}

DeltaMatroid restrict_to(const DeltaMatroid& d, SubsetMask a) {
    check_mask(d.size(), a);
    // Deletion order does not matter; going downward keeps indices stable.
    DeltaMatroid out = d;
    for (int e = d.size() - 1; e >= 0; --e)
        if (!contains(a, e))
            out = delete_element(out, e);
    return out;
}

LoopsColoops loops_coloops(const DeltaMatroid& d) {
    SubsetMask any = 0;
    SubsetMask all = full_mask(d.size());
    for (SubsetMask f : d.feasible()) {
        any |= f;
        all &= f;
    }
    return {full_mask(d.size()) & ~any, all};
}

Predicates predicates(const DeltaMatroid& d) {
    const auto& fam = d.feasible();
    const int size0 = popcount(fam.front());
    Predicates p;
    p.is_normal = fam.front() == 0;
    p.is_even = std::all_of(fam.begin(), fam.end(),
                            [&](SubsetMask f) { return (popcount(f) - size0) % 2 == 0; });
    p.is_matroid = std::all_of(fam.begin(), fam.end(),
                               [&](SubsetMask f) { return popcount(f) == size0; });
    return p;
}

int rho(const DeltaMatroid& d, SubsetMask a) {
    check_mask(d.size(), a);
    int best = d.size();
    for (SubsetMask f : d.feasible())
        best = std::min(best, popcount(a ^ f));
    return d.size() - best;
}

int matroid_rank(const Matroid& m, SubsetMask a) {
    check_mask(m.size(), a);
    int best = 0;
    for (SubsetMask b : m.feasible())
        best = std::max(best, popcount(a & b));
    return best;
}

int matroid_nullity(const Matroid& m, SubsetMask a) { return popcount(a) - matroid_rank(m, a); }

MinMaxParts min_max_parts(const DeltaMatroid& d) {
    int lo = d.size(), hi = 0;
    for (SubsetMask f : d.feasible()) {
        lo = std::min(lo, popcount(f));
        hi = std::max(hi, popcount(f));
    }
    std::vector<SubsetMask> small, large;
    for (SubsetMask f : d.feasible()) {
        if (popcount(f) == lo)
            small.push_back(f);
        if (popcount(f) == hi)
            large.push_back(f);
    }
    return {Matroid(DeltaMatroid(d.size(), std::move(small))),
            Matroid(DeltaMatroid(d.size(), std::move(large)))};
}

namespace {

// Projects every feasible set onto part and counts the distinct images.
std::size_t projection_count(const DeltaMatroid& d, SubsetMask part, std::vector<SubsetMask>& scratch) {
    scratch.clear();
    for (SubsetMask f : d.feasible())
        scratch.push_back(f & part);
    std::sort(scratch.begin(), scratch.end());
    return static_cast<std::size_t>(std::unique(scratch.begin(), scratch.end()) - scratch.begin());
}

}  // namespace

bool is_connected(const DeltaMatroid& d) {
    const int n = d.size();
    if (n <= 1)
        return true;
    if (n > kMaxEnumerationSize)
        throw UnsupportedSizeError("is_connected: ground set of size " + std::to_string(n) +
                                   " exceeds the brute-force cutoff");
    if (is_normal_binary(d))
        return graph_predicates(intersection_graph(d)).components.size() == 1;
    return is_connected_bruteforce(d);
}

bool is_connected_bruteforce(const DeltaMatroid& d) {
    const int n = d.size();
    check_enumerable(n, "is_connected_bruteforce");
    if (n <= 1)
        return true;
    // The family always embeds in the product of its two projections, so it
    // factorizes over (S, E\S) exactly when the sizes agree. Element n-1 is
    // kept out of S to visit each bipartition once.
    const SubsetMask all = full_mask(n);
    std::vector<SubsetMask> scratch;
    for (SubsetMask s = 1; s < (SubsetMask{1} << (n - 1)); ++s) {
        std::size_t a = projection_count(d, s, scratch);
        std::size_t b = projection_count(d, all & ~s, scratch);
        if (a * b == d.count())
            return false;
    }
    return true;
}

std::string format_subset(SubsetMask a) {
    std::string out = "{";
    bool first = true;
    for (int e = 0; a; ++e, a >>= 1) {
        if (a & 1u) {
            if (!first)
                out += ",";
            out += std::to_string(e);
            first = false;
        }
    }
    return out + "}";
}

}  // namespace dmat
