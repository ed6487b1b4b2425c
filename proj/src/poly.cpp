#include "dmat/poly.hpp"

#include <algorithm>

namespace dmat {

WidthPolynomial::WidthPolynomial(std::vector<std::uint64_t> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

std::uint64_t WidthPolynomial::coeff(int k) const {
    return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[k] : 0;
}

bool WidthPolynomial::is_monomial() const {
    return std::count_if(coeffs_.begin(), coeffs_.end(), [](std::uint64_t c) { return c != 0; }) == 1;
}

std::uint64_t WidthPolynomial::eval_at_1() const {
    std::uint64_t s = 0;
    for (std::uint64_t c : coeffs_)
        s += c;
    return s;
}

std::string WidthPolynomial::to_string() const {
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        std::uint64_t c = coeffs_[k];
        if (c == 0)
            continue;
        if (!out.empty())
            out += " + ";
        if (k == 0 || c != 1)
            out += std::to_string(c);
        if (k >= 1)
            out += "z";
        if (k >= 2)
            out += "^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

std::string WidthPolynomial::machine_line() const {
    std::string out = "coeffs:";
    if (coeffs_.empty())
        return out + " 0";
    for (std::uint64_t c : coeffs_)
        out += " " + std::to_string(c);
    return out;
}

WidthPolynomial operator*(const WidthPolynomial& a, const WidthPolynomial& b) {
    if (a.coeffs_.empty() || b.coeffs_.empty())
        return {};
    std::vector<std::uint64_t> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return WidthPolynomial(std::move(out));
}

PolyProps poly_props(const WidthPolynomial& p) {
    return {p.constant_term(), p.is_monomial(), p.eval_at_1()};
}

int width(const DeltaMatroid& d) {
    int lo = d.size(), hi = 0;
    for (SubsetMask f : d.feasible()) {
        lo = std::min(lo, popcount(f));
        hi = std::max(hi, popcount(f));
    }
    return hi - lo;
}

int twist_width(const DeltaMatroid& d, SubsetMask a) {
    check_mask(d.size(), a);
    int lo = d.size(), hi = 0;
    for (SubsetMask f : d.feasible()) {
        int k = popcount(a ^ f);
        lo = std::min(lo, k);
        hi = std::max(hi, k);
    }
    return hi - lo;
}

WidthPolynomial twist_polynomial_naive(const DeltaMatroid& d) {
    check_enumerable(d.size(), "twist_polynomial_naive");
    std::vector<std::uint64_t> hist(d.size() + 1, 0);
    const SubsetMask end = SubsetMask{1} << d.size();
    for (SubsetMask a = 0; a < end; ++a)
        ++hist[twist_width(d, a)];
    return WidthPolynomial(std::move(hist));
}

namespace {

constexpr std::uint8_t kUnvisited = 0xFF;

// dist[A] = min over sources S of |A delta S|, by BFS on the n-cube.
void hypercube_bfs(int n, const std::vector<SubsetMask>& sources, std::vector<std::uint8_t>& dist,
                   std::vector<SubsetMask>& queue) {
    const std::size_t cube = std::size_t{1} << n;
    dist.assign(cube, kUnvisited);
    queue.resize(cube);
    std::size_t head = 0, tail = 0;
    for (SubsetMask s : sources) {
        dist[s] = 0;
        queue[tail++] = s;
    }
    while (head < tail) {
        SubsetMask a = queue[head++];
        std::uint8_t next = dist[a] + 1;
        for (int e = 0; e < n; ++e) {
            SubsetMask b = a ^ (SubsetMask{1} << e);
            if (dist[b] == kUnvisited) {
                dist[b] = next;
                queue[tail++] = b;
            }
        }
    }
}

}  // namespace

WidthPolynomial twist_polynomial_fast(const DeltaMatroid& d) {
    const int n = d.size();
    check_enumerable(n, "twist_polynomial_fast");
    const SubsetMask all = full_mask(n);

    std::vector<SubsetMask> queue;
    std::vector<std::uint8_t> nearest, farthest;
    hypercube_bfs(n, d.feasible(), nearest, queue);

    // max_F |A delta F| = n - min_F |A delta (E \ F)|.
    std::vector<SubsetMask> complements;
    complements.reserve(d.count());
    for (SubsetMask f : d.feasible())
        complements.push_back(all & ~f);
    hypercube_bfs(n, complements, farthest, queue);

    std::vector<std::uint64_t> hist(n + 1, 0);
    const std::size_t cube = std::size_t{1} << n;
    for (std::size_t a = 0; a < cube; ++a)
        ++hist[n - farthest[a] - nearest[a]];
    return WidthPolynomial(std::move(hist));
}

}  // namespace dmat
