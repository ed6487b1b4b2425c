#ifndef DMAT_GF2_HPP
#define DMAT_GF2_HPP

#include <vector>

#include "dmat/core.hpp"

namespace dmat {

// Symmetric n x n matrix over GF(2), one bitmask row per index.
class SymMatrixGF2 {
public:
    SymMatrixGF2() = default;
    explicit SymMatrixGF2(int n);
    // Throws InputError if rows are not symmetric or wider than n.
    SymMatrixGF2(int n, std::vector<SubsetMask> rows);

    int size() const { return n_; }
    const std::vector<SubsetMask>& rows() const { return rows_; }
    SubsetMask row(int u) const { return rows_[u]; }
    bool get(int u, int v) const { return contains(rows_[u], v); }
    // Sets entry (u, v) and its mirror.
    void set(int u, int v, bool bit);

    SubsetMask diagonal() const;

    friend bool operator==(const SymMatrixGF2&, const SymMatrixGF2&) = default;

private:
    int n_ = 0;
    std::vector<SubsetMask> rows_;
};

// Rank of the principal submatrix C[A]. C[emptyset] has rank 0.
int gf2_rank(const SymMatrixGF2& c, SubsetMask a);

inline bool is_nonsingular(const SymMatrixGF2& c, SubsetMask a) { return gf2_rank(c, a) == popcount(a); }

// D(C): the index sets of nonsingular principal submatrices.
DeltaMatroid delta_matroid_of_matrix(const SymMatrixGF2& c);

// Rebuilds C from the feasible sets of size at most two. Defined for any
// normal delta-matroid; is_normal_binary decides whether D(C) gives d back.
SymMatrixGF2 matrix_of_normal(const DeltaMatroid& d);

bool is_normal_binary(const DeltaMatroid& d);

// Looped simple graph; a set diagonal bit is a loop.
struct IntersectionGraph {
    SymMatrixGF2 adjacency;

    int vertex_count() const { return adjacency.size(); }
    bool has_loops() const { return adjacency.diagonal() != 0; }
    friend bool operator==(const IntersectionGraph&, const IntersectionGraph&) = default;
};

IntersectionGraph intersection_graph(const DeltaMatroid& d);

struct GraphPredicates {
    bool is_bipartite = false;
    // Vertices colored 0 by the 2-coloring; a bipartition witness when
    // is_bipartite holds.
    SubsetMask side = 0;
    // Vertex sets of the connected components, ordered by smallest vertex.
    std::vector<SubsetMask> components;
    // Loop-free and every pair adjacent.
    bool is_complete = false;
    // Every component is a loop-free complete graph on an odd number of vertices.
    bool all_components_complete_odd = false;
};

GraphPredicates graph_predicates(const IntersectionGraph& g);

SymMatrixGF2 complete_graph_adjacency(int v);

}  // namespace dmat

#endif
