#ifndef DMAT_POLY_HPP
#define DMAT_POLY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dmat/core.hpp"

namespace dmat {

// Width-enumerating polynomial; coeffs[k] multiplies z^k. Trailing zero
// coefficients are trimmed, so the last entry is nonzero unless the
// polynomial is zero.
class WidthPolynomial {
public:
    WidthPolynomial() = default;
    explicit WidthPolynomial(std::vector<std::uint64_t> coeffs);

    const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::uint64_t coeff(int k) const;

    std::uint64_t constant_term() const { return coeff(0); }
    bool is_monomial() const;
    std::uint64_t eval_at_1() const;

    // Descending, e.g. "2z^2 + 2".
    std::string to_string() const;
    // "coeffs: c0 c1 ... ck".
    std::string machine_line() const;

    friend WidthPolynomial operator*(const WidthPolynomial& a, const WidthPolynomial& b);
    friend bool operator==(const WidthPolynomial&, const WidthPolynomial&) = default;

private:
    std::vector<std::uint64_t> coeffs_;
};

struct PolyProps {
    std::uint64_t constant_term = 0;
    bool is_monomial = false;
    std::uint64_t eval_at_1 = 0;
};
PolyProps poly_props(const WidthPolynomial& p);

int width(const DeltaMatroid& d);

// Width of d*a without building the twisted family.
int twist_width(const DeltaMatroid& d, SubsetMask a);

// Sums z^{twist_width(d, A)} over every A, one subset at a time.
WidthPolynomial twist_polynomial_naive(const DeltaMatroid& d);

// Same result in O(2^n n): two multi-source BFS passes over the n-cube give
// min_F |A delta F| and max_F |A delta F| for every A at once.
WidthPolynomial twist_polynomial_fast(const DeltaMatroid& d);

inline WidthPolynomial twist_polynomial(const DeltaMatroid& d) { return twist_polynomial_fast(d); }

}  // namespace dmat

#endif
