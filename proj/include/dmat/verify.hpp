#ifndef DMAT_VERIFY_HPP
#define DMAT_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "dmat/bouquet.hpp"
#include "dmat/core.hpp"
#include "dmat/gf2.hpp"
#include "dmat/poly.hpp"

namespace dmat::verify {

// Exhaustive bounds for the enumerated families.
inline constexpr int kMaxSetSystemSize = 4;
inline constexpr int kMaxMatrixSize = 6;
inline constexpr int kMaxRotationEdges = 4;

using Rng = std::mt19937_64;

enum class FamilyKind {
    AllSetSystems,
    AllDeltaMatroids,
    AllSymmetricGF2,
    AllSimpleGraphs,
    AllSignedRotations,
    CanonicalBouquet,
    CompleteGraph,
};

// Every member of the family at exactly the given size; CanonicalBouquet
// and CompleteGraph contain a single instance.
struct InstanceFamily {
    FamilyKind kind;
    int size;
};

using Instance = std::variant<SetSystem, DeltaMatroid, SymMatrixGF2, SignedRotation>;

// Streams the family in a fixed order. Throws UnsupportedSizeError past the
// exhaustive bound.
void enumerate(const InstanceFamily& family, const std::function<void(const Instance&)>& visit);

std::vector<DeltaMatroid> all_delta_matroids(int n);
void for_each_symmetric_matrix(int n, bool zero_diagonal, const std::function<void(const SymMatrixGF2&)>& visit);
void for_each_signed_rotation(int e, const std::function<void(const SignedRotation&)>& visit);

SymMatrixGF2 random_symmetric(int n, bool zero_diagonal, Rng& rng);
SignedRotation random_rotation(int e, Rng& rng);
// A random twist of D(C) for a uniformly random symmetric C.
DeltaMatroid random_binary_delta_matroid(int n, Rng& rng);

// 2^t z^{t-1} for odd t, 2^{t-1} z^t + 2^{t-1} z^{t-2} for even t.
WidthPolynomial complete_graph_closed_form(int t);

struct VerificationReport {
    std::string theorem;
    std::uint64_t checked = 0;
    // Offending instances with both sides of the violated identity.
    std::vector<std::string> counterexamples;
    // Expected witnesses that were observed (e.g. a known non-example).
    std::vector<std::string> notes;
    std::optional<std::uint64_t> seed;
    double elapsed_seconds = 0.0;

    bool passed() const { return counterexamples.empty(); }
    // "THEOREM <id> PASS|FAIL checked=<k> seed=<s>"
    std::string machine_line() const;
    std::string render() const;
};

VerificationReport check_prop2(int n_max, int trials, std::uint64_t seed);
VerificationReport check_lemma4(int t_max);
VerificationReport check_prop1(int v_max);
VerificationReport check_constant_iff_single(int n_max);
VerificationReport check_bipartite_constant_term(int n_max);
VerificationReport check_monomial_complete_odd(int n_max, int samples, int sample_n, std::uint64_t seed);
VerificationReport check_lemma5_and_lemma2(int n_max);
VerificationReport check_interlacement_oracle(int e_max, int samples, std::uint64_t seed);
VerificationReport check_fast_naive(int n_max, int samples, int sample_n, std::uint64_t seed);
// Equal intersection graphs force equal delta-matroids and polynomials,
// for normal binary delta-matroids and for bouquets.
VerificationReport check_same_intersection_graph(int n_max, int min_pairs);

struct SuiteOptions {
    std::string suite = "all";
    std::optional<int> max_n;
    std::uint64_t seed = 1;
};

const std::vector<std::string>& suite_names();

// Throws InputError for unknown suites or a negative bound and
// UnsupportedSizeError for a bound past a suite's envelope.
std::vector<VerificationReport> run_suite(const SuiteOptions& options);

}  // namespace dmat::verify

#endif
