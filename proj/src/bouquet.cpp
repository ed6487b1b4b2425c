#include "dmat/bouquet.hpp"

#include <algorithm>
#include <charconv>
#include <map>

namespace dmat {

SignedRotation::SignedRotation(std::vector<HalfEdge> seq, std::vector<int> labels)
    : seq_(std::move(seq)), labels_(std::move(labels)) {
    const int e = edge_count();
    if (seq_.empty())
        throw InputError("rotation is empty");
    if (e > kMaxBouquetEdges)
        throw UnsupportedSizeError("bouquet has " + std::to_string(e) + " edges; at most " +
                                   std::to_string(kMaxBouquetEdges) + " are supported");
    if (static_cast<int>(seq_.size()) != 2 * e)
        throw InputError("rotation length must be twice the number of edges");
    positions_.assign(e, {-1, -1});
    for (int i = 0; i < static_cast<int>(seq_.size()); ++i) {
        int edge = seq_[i].edge;
        if (edge < 0 || edge >= e)
            throw InputError("half-edge refers to unknown edge " + std::to_string(edge));
        auto& [p, q] = positions_[edge];
        if (p < 0)
            p = i;
        else if (q < 0)
            q = i;
        else
            throw InputError("edge " + std::to_string(labels_[edge]) + " occurs more than twice");
    }
    for (int edge = 0; edge < e; ++edge)
        if (positions_[edge].second < 0)
            throw InputError("edge " + std::to_string(labels_[edge]) + " occurs only once");
}

namespace {

std::vector<int> default_labels(const std::vector<HalfEdge>& seq) {
    int e = 0;
    for (const HalfEdge& h : seq)
        e = std::max(e, h.edge + 1);
    std::vector<int> labels(e);
    for (int i = 0; i < e; ++i)
        labels[i] = i + 1;
    return labels;
}

}  // namespace

SignedRotation::SignedRotation(std::vector<HalfEdge> seq)
    : SignedRotation(seq, default_labels(seq)) {}

bool SignedRotation::is_orientable(int e) const {
    auto [p, q] = positions_[e];
    return seq_[p].negative == seq_[q].negative;
}

std::string SignedRotation::to_string() const {
    std::string out;
    for (const HalfEdge& h : seq_) {
        if (!out.empty())
            out += ' ';
        if (h.negative)
            out += '-';
        out += std::to_string(labels_[h.edge]);
    }
    return out;
}

SignedRotation parse_signed_rotation(std::string_view text) {
    static constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";

    std::string_view body = text;
    auto trim = [](std::string_view s) {
        auto first = s.find_first_not_of(" \t\r\n");
        if (first == std::string_view::npos)
            return std::string_view{};
        auto last = s.find_last_not_of(" \t\r\n");
        return s.substr(first, last - first + 1);
    };
    body = trim(body);
    if (!body.empty() && body.front() == '(') {
        if (body.back() != ')')
            throw InputError("unbalanced parenthesis in rotation");
        body = trim(body.substr(1, body.size() - 2));
    }
    if (body.empty())
        throw InputError("rotation is empty");

    std::vector<std::pair<int, bool>> tokens;
    std::size_t i = 0;
    while (i < body.size()) {
        char ch = body[i];
        if (ch == ' ' || ch == '\t' || ch == ',' || ch == '\r' || ch == '\n') {
            ++i;
            continue;
        }
        bool negative = false;
        if (ch == '-') {
            negative = true;
            ++i;
        } else if (ch == '+') {
            ++i;
        } else if (body.substr(i, kUnicodeMinus.size()) == kUnicodeMinus) {
            negative = true;
            i += kUnicodeMinus.size();
        }
        int label = 0;
        auto [ptr, ec] = std::from_chars(body.data() + i, body.data() + body.size(), label);
        std::size_t used = static_cast<std::size_t>(ptr - (body.data() + i));
        if (ec != std::errc{} || used == 0)
            throw InputError("malformed token in rotation at offset " + std::to_string(i));
        i += used;
        if (i < body.size() && body[i] != ' ' && body[i] != '\t' && body[i] != ',' &&
            body[i] != '\r' && body[i] != '\n')
            throw InputError("malformed token in rotation at offset " + std::to_string(i));
        if (label <= 0)
            throw InputError("edge labels must be positive integers");
        tokens.emplace_back(label, negative);
    }

    std::map<int, int> index;
    std::map<int, int> seen;
    std::vector<int> labels;
    std::vector<HalfEdge> seq;
    for (auto [label, negative] : tokens) {
        auto [it, fresh] = index.try_emplace(label, static_cast<int>(labels.size()));
        if (fresh)
            labels.push_back(label);
        ++seen[label];
        seq.push_back({it->second, negative});
    }
    for (auto [label, count] : seen)
        if (count != 2)
            throw InputError("edge " + std::to_string(label) + " occurs " + std::to_string(count) +
                             " times; every edge needs exactly two half-edges");
    return SignedRotation(std::move(seq), std::move(labels));
}

int boundary_components(const SignedRotation& b, SubsetMask a) {
    check_mask(b.edge_count(), a);
    if (a == 0)
        return 1;

    // Keep the half-edges of a, in rotation order.
    std::vector<int> local(b.edge_count(), -1);
    std::vector<std::pair<int, int>> ends;
    std::vector<int> edge_of;
    for (const HalfEdge& h : b.sequence()) {
        if (!contains(a, h.edge))
            continue;
        int pos = static_cast<int>(edge_of.size());
        edge_of.push_back(h.edge);
        if (local[h.edge] < 0) {
            local[h.edge] = static_cast<int>(ends.size());
            ends.push_back({pos, -1});
        } else {
            ends[local[h.edge]].second = pos;
        }
    }

    // Point 2i is the side before position i, 2i+1 the side after it.
    const int m = static_cast<int>(edge_of.size());
    auto before = [](int i) { return 2 * i; };
    auto after = [](int i) { return 2 * i + 1; };
    std::vector<int> vertex_mate(2 * m), edge_mate(2 * m);
    for (int i = 0; i < m; ++i) {
        int j = (i + 1) % m;
        vertex_mate[after(i)] = before(j);
        vertex_mate[before(j)] = after(i);
    }
    for (std::size_t k = 0; k < ends.size(); ++k) {
        auto [p, q] = ends[k];
        if (b.is_orientable(edge_of[p])) {
            edge_mate[before(p)] = after(q);
            edge_mate[after(q)] = before(p);
            edge_mate[after(p)] = before(q);
            edge_mate[before(q)] = after(p);
        } else {
            edge_mate[before(p)] = before(q);
            edge_mate[before(q)] = before(p);
            edge_mate[after(p)] = after(q);
            edge_mate[after(q)] = after(p);
        }
    }

    std::vector<bool> visited(2 * m, false);
    int cycles = 0;
    for (int start = 0; start < 2 * m; ++start) {
        if (visited[start])
            continue;
        ++cycles;
        int x = start;
        do {
            visited[x] = true;
            int y = vertex_mate[x];
            visited[y] = true;
            x = edge_mate[y];
        } while (x != start);
    }
    return cycles;
}

int euler_genus(const SignedRotation& b, SubsetMask a) {
    return 1 + popcount(a) - boundary_components(b, a);
}

DeltaMatroid delta_matroid_of_bouquet(const SignedRotation& b) {
    const int e = b.edge_count();
    check_enumerable(e, "delta_matroid_of_bouquet");
    std::vector<SubsetMask> fam;
    const SubsetMask end = SubsetMask{1} << e;
    for (SubsetMask a = 0; a < end; ++a)
        if (boundary_components(b, a) == 1)
            fam.push_back(a);
    return DeltaMatroid(e, std::move(fam));
}

SymMatrixGF2 interlacement_matrix(const SignedRotation& b) {
    const int e = b.edge_count();
    SymMatrixGF2 c(e);
    for (int u = 0; u < e; ++u) {
        c.set(u, u, !b.is_orientable(u));
        auto [p, q] = b.positions(u);
        for (int v = u + 1; v < e; ++v) {
            auto [r, s] = b.positions(v);
            bool r_inside = p < r && r < q;
            bool s_inside = p < s && s < q;
            c.set(u, v, r_inside != s_inside);
        }
    }
    return c;
}

SignedRotation canonical_bouquet(int t) {
    if (t < 1)
        throw InputError("canonical bouquet needs at least one edge");
    std::vector<HalfEdge> seq;
    for (int round = 0; round < 2; ++round)
        for (int i = 0; i < t; ++i)
            seq.push_back({i, false});
    return SignedRotation(std::move(seq));
}

WidthPolynomial partial_duality_polynomial(const SignedRotation& b) {
    return twist_polynomial_fast(delta_matroid_of_bouquet(b));
}

}  // namespace dmat
