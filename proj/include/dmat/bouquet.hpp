#ifndef DMAT_BOUQUET_HPP
#define DMAT_BOUQUET_HPP

#include <string>
#include <string_view>
#include <vector>

#include "dmat/core.hpp"
#include "dmat/gf2.hpp"
#include "dmat/poly.hpp"

namespace dmat {

inline constexpr int kMaxBouquetEdges = 16;

// One half-edge around the vertex.
struct HalfEdge {
    int edge = 0;
    bool negative = false;

    friend bool operator==(const HalfEdge&, const HalfEdge&) = default;
};

// Cyclic order of half-edges at the single vertex of a bouquet. Edges are
// numbered 0..e-1 in order of first appearance; labels() keeps the
// identifiers the rotation was written with.
class SignedRotation {
public:
    // Validates that every edge 0..e-1 occurs exactly twice.
    SignedRotation(std::vector<HalfEdge> seq, std::vector<int> labels);
    // Canonical labels 1..e.
    explicit SignedRotation(std::vector<HalfEdge> seq);

    int edge_count() const { return static_cast<int>(labels_.size()); }
    const std::vector<HalfEdge>& sequence() const { return seq_; }
    const std::vector<int>& labels() const { return labels_; }

    // Rotation positions of the two half-edges of edge e, ascending.
    std::pair<int, int> positions(int e) const { return positions_[e]; }
    // True when both half-edges carry the same sign.
    bool is_orientable(int e) const;

    // Space-separated signed labels, e.g. "-1 -2 3 4 2 1 3 4".
    std::string to_string() const;

    friend bool operator==(const SignedRotation& a, const SignedRotation& b) {
        return a.seq_ == b.seq_ && a.labels_ == b.labels_;
    }

private:
    std::vector<HalfEdge> seq_;
    std::vector<int> labels_;
    std::vector<std::pair<int, int>> positions_;
};

// Accepts "(-1, -2, 3, 4, 2, 1, 3, 4)" or "-1 -2 3 4 2 1 3 4"; U+2212 is
// accepted as a minus sign.
SignedRotation parse_signed_rotation(std::string_view text);

// Boundary components of the spanning ribbon subgraph on edge set a.
int boundary_components(const SignedRotation& b, SubsetMask a);

// 1 + |a| - f(a).
int euler_genus(const SignedRotation& b, SubsetMask a);

// Quasi-tree family {A : f(A) = 1}, re-validated against the exchange axiom.
DeltaMatroid delta_matroid_of_bouquet(const SignedRotation& b);

// Diagonal marks nonorientable edges; off-diagonal marks interlaced chords.
SymMatrixGF2 interlacement_matrix(const SignedRotation& b);

// (1, 2, ..., t, 1, 2, ..., t).
SignedRotation canonical_bouquet(int t);

// Twist polynomial of the bouquet's delta-matroid, which enumerates its
// partial duals by Euler genus.
WidthPolynomial partial_duality_polynomial(const SignedRotation& b);

}  // namespace dmat

#endif
