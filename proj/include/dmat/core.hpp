#ifndef DMAT_CORE_HPP
#define DMAT_CORE_HPP

#include <cstdint>
#include <bit>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dmat {

// A subset of the ground set {0, ..., n-1}; bit i set means element i is present.
using SubsetMask = std::uint32_t;

// Widest ground set a mask can carry.
inline constexpr int kMaxStructuralSize = 32;
// Widest ground set for anything that enumerates all 2^n subsets.
inline constexpr int kMaxEnumerationSize = 16;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input: out-of-range masks or elements, duplicates, bad text.
class InputError : public Error {
public:
    using Error::Error;
};

// Ground set exceeds the envelope supported by an exhaustive operation.
class UnsupportedSizeError : public Error {
public:
    using Error::Error;
};

// Argument is well formed but violates an operation's precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

constexpr SubsetMask full_mask(int n) {
    return n >= 32 ? ~SubsetMask{0} : (SubsetMask{1} << n) - 1;
}

constexpr int popcount(SubsetMask m) { return std::popcount(m); }

constexpr bool contains(SubsetMask m, int e) { return (m >> e) & 1u; }

// Removes bit e and shifts every higher bit down by one.
constexpr SubsetMask drop_bit(SubsetMask m, int e) {
    SubsetMask low = m & ((SubsetMask{1} << e) - 1);
    SubsetMask high = e + 1 >= 32 ? 0 : (m >> (e + 1)) << e;
    return low | high;
}

void check_mask(int n, SubsetMask a);
void check_enumerable(int n, const char* what);

// A ground set of size n together with a strictly sorted, duplicate-free
// family of feasible subsets.
class SetSystem {
public:
    SetSystem() = default;
    // Sorts the family; throws InputError on duplicates or masks >= 2^n.
    SetSystem(int n, std::vector<SubsetMask> feasible);

    int size() const { return n_; }
    const std::vector<SubsetMask>& feasible() const { return feasible_; }
    std::size_t count() const { return feasible_.size(); }

    bool is_proper() const { return !feasible_.empty(); }
    bool is_trivial() const { return n_ == 0; }
    bool has(SubsetMask a) const;

    friend bool operator==(const SetSystem&, const SetSystem&) = default;

protected:
    struct Trusted {};
    SetSystem(Trusted, int n, std::vector<SubsetMask> sorted)
        : n_(n), feasible_(std::move(sorted)) {}

    int n_ = 0;
    std::vector<SubsetMask> feasible_{0};
};

bool is_delta_matroid(const SetSystem& s);

// A set system satisfying the symmetric exchange axiom. Default-constructs
// to the trivial delta-matroid (n = 0, F = {emptyset}).
class DeltaMatroid : public SetSystem {
public:
    DeltaMatroid() = default;
    // Throws InputError unless s is a delta-matroid.
    explicit DeltaMatroid(const SetSystem& s);
    DeltaMatroid(int n, std::vector<SubsetMask> feasible)
        : DeltaMatroid(SetSystem(n, std::move(feasible))) {}

    // For families that are delta-matroids by construction. The family is
    // sorted here; the axiom is only re-checked in builds without NDEBUG.
    static DeltaMatroid assume(int n, std::vector<SubsetMask> feasible);

    friend bool operator==(const DeltaMatroid&, const DeltaMatroid&) = default;

private:
    DeltaMatroid(Trusted t, int n, std::vector<SubsetMask> sorted)
        : SetSystem(t, n, std::move(sorted)) {}
};

// A delta-matroid whose feasible sets (bases) all have the same size.
class Matroid : public DeltaMatroid {
public:
    // Throws InputError if the bases have different sizes.
    explicit Matroid(const DeltaMatroid& d);

    int rank() const { return popcount(feasible_.front()); }
};

DeltaMatroid twist(const DeltaMatroid& d, SubsetMask a);
DeltaMatroid dual(const DeltaMatroid& d);

// Elements of d2 are re-indexed to n1 .. n1+n2-1.
DeltaMatroid direct_sum(const DeltaMatroid& d1, const DeltaMatroid& d2);

// Surviving elements are re-indexed downward without gaps.
DeltaMatroid delete_element(const DeltaMatroid& d, int e);
DeltaMatroid restrict_to(const DeltaMatroid& d, SubsetMask a);

struct LoopsColoops {
    SubsetMask loops = 0;
    SubsetMask coloops = 0;
};
LoopsColoops loops_coloops(const DeltaMatroid& d);

struct Predicates {
    bool is_even = false;
    bool is_normal = false;
    bool is_matroid = false;
};
Predicates predicates(const DeltaMatroid& d);

int rho(const DeltaMatroid& d, SubsetMask a);

int matroid_rank(const Matroid& m, SubsetMask a);
int matroid_nullity(const Matroid& m, SubsetMask a);

struct MinMaxParts {
    Matroid min;
    Matroid max;
};
MinMaxParts min_max_parts(const DeltaMatroid& d);

// Labeled direct-sum factorization test. Normal binary inputs are decided
// through connectivity of the intersection graph.
bool is_connected(const DeltaMatroid& d);
// Searches every bipartition of the ground set; n <= 16.
bool is_connected_bruteforce(const DeltaMatroid& d);

std::string format_subset(SubsetMask a);

}  // namespace dmat

#endif
