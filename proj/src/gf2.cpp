#include "dmat/gf2.hpp"

#include <array>

namespace dmat {

SymMatrixGF2::SymMatrixGF2(int n) : n_(n), rows_(n, 0) {
    if (n < 0 || n > kMaxStructuralSize)
        throw InputError("matrix dimension " + std::to_string(n) + " is out of range");
}

SymMatrixGF2::SymMatrixGF2(int n, std::vector<SubsetMask> rows) : SymMatrixGF2(n) {
    if (static_cast<int>(rows.size()) != n)
        throw InputError("expected " + std::to_string(n) + " rows, got " + std::to_string(rows.size()));
    for (int u = 0; u < n; ++u)
        check_mask(n, rows[u]);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (contains(rows[u], v) != contains(rows[v], u))
                throw InputError("matrix is not symmetric at (" + std::to_string(u) + "," +
                                 std::to_string(v) + ")");
    rows_ = std::move(rows);
}

void SymMatrixGF2::set(int u, int v, bool bit) {
    if (bit) {
        rows_[u] |= SubsetMask{1} << v;
        rows_[v] |= SubsetMask{1} << u;
    } else {
        rows_[u] &= ~(SubsetMask{1} << v);
        rows_[v] &= ~(SubsetMask{1} << u);
    }
}

SubsetMask SymMatrixGF2::diagonal() const {
    SubsetMask d = 0;
    for (int u = 0; u < n_; ++u)
        if (get(u, u))
            d |= SubsetMask{1} << u;
    return d;
}

int gf2_rank(const SymMatrixGF2& c, SubsetMask a) {
    check_mask(c.size(), a);
    // pivot[b] is the reduced row whose highest set column is b.
    std::array<SubsetMask, kMaxStructuralSize> pivot{};
    int rank = 0;
    for (SubsetMask rest = a; rest; rest &= rest - 1) {
        SubsetMask v = c.row(std::countr_zero(rest)) & a;
        while (v) {
            int b = 31 - std::countl_zero(v);
            if (!pivot[b]) {
                pivot[b] = v;
                ++rank;
                break;
            }
            v ^= pivot[b];
        }
    }
    return rank;
}

DeltaMatroid delta_matroid_of_matrix(const SymMatrixGF2& c) {
    check_enumerable(c.size(), "delta_matroid_of_matrix");
    std::vector<SubsetMask> fam;
    const SubsetMask end = SubsetMask{1} << c.size();
    for (SubsetMask a = 0; a < end; ++a)
        if (is_nonsingular(c, a))
            fam.push_back(a);
    return DeltaMatroid::assume(c.size(), std::move(fam));
}

SymMatrixGF2 matrix_of_normal(const DeltaMatroid& d) {
    if (!d.has(0))
        throw PreconditionError("matrix_of_normal requires a normal delta-matroid");
    const int n = d.size();
    SymMatrixGF2 c(n);
    std::vector<bool> single(n);
    for (int v = 0; v < n; ++v) {
        single[v] = d.has(SubsetMask{1} << v);
        c.set(v, v, single[v]);
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool pair = d.has((SubsetMask{1} << u) | (SubsetMask{1} << v));
            bool both = single[u] && single[v];
            c.set(u, v, pair != both);
        }
    return c;
}

bool is_normal_binary(const DeltaMatroid& d) {
    if (!d.has(0))
        return false;
    check_enumerable(d.size(), "is_normal_binary");
    SymMatrixGF2 c = matrix_of_normal(d);
    const SubsetMask end = SubsetMask{1} << d.size();
    const auto& fam = d.feasible();
    std::size_t next = 0;
    // Walk subsets in mask order alongside the sorted family.
    for (SubsetMask a = 0; a < end; ++a) {
        bool feasible = next < fam.size() && fam[next] == a;
        if (feasible)
            ++next;
        if (feasible != is_nonsingular(c, a))
            return false;
    }
    return true;
}

IntersectionGraph intersection_graph(const DeltaMatroid& d) {
    if (!is_normal_binary(d))
        throw PreconditionError("intersection graph requires a normal binary delta-matroid");
    return {matrix_of_normal(d)};
}

GraphPredicates graph_predicates(const IntersectionGraph& g) {
    const SymMatrixGF2& adj = g.adjacency;
    const int n = adj.size();
    GraphPredicates out;

    std::vector<int> color(n, -1);
    bool bipartite = !g.has_loops();
    SubsetMask unseen = full_mask(n);
    std::vector<int> stack;
    while (unseen) {
        int start = std::countr_zero(unseen);
        SubsetMask comp = 0;
        color[start] = 0;
        stack.assign(1, start);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp |= SubsetMask{1} << u;
            SubsetMask nbrs = adj.row(u) & ~(SubsetMask{1} << u);
            for (; nbrs; nbrs &= nbrs - 1) {
                int v = std::countr_zero(nbrs);
                if (color[v] < 0) {
                    color[v] = 1 - color[u];
                    stack.push_back(v);
                } else if (color[v] == color[u]) {
                    bipartite = false;
                }
            }
        }
        unseen &= ~comp;
        out.components.push_back(comp);
    }
    out.is_bipartite = bipartite;
    for (int u = 0; u < n; ++u)
        if (color[u] == 0)
            out.side |= SubsetMask{1} << u;

    auto clique = [&](SubsetMask part) {
        for (SubsetMask rest = part; rest; rest &= rest - 1) {
            int u = std::countr_zero(rest);
            if ((adj.row(u) & part) != (part & ~(SubsetMask{1} << u)))
                return false;
        }
        return true;
    };
    out.is_complete = !g.has_loops() && clique(full_mask(n));
    out.all_components_complete_odd = !g.has_loops();
    for (SubsetMask comp : out.components)
        if (!clique(comp) || popcount(comp) % 2 == 0)
            out.all_components_complete_odd = false;
    return out;
}

SymMatrixGF2 complete_graph_adjacency(int v) {
    SymMatrixGF2 c(v);
    for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b)
            c.set(a, b, true);
    return c;
}

}  // namespace dmat
