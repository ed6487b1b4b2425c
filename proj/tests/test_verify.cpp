#include <doctest.h>

#include <set>

#include "dmat/verify.hpp"

using namespace dmat;
using namespace dmat::verify;

namespace {

using Coeffs = std::vector<std::uint64_t>;

std::size_t family_count(FamilyKind kind, int size) {
    std::size_t n = 0;
    enumerate({kind, size}, [&](const Instance&) { ++n; });
    return n;
}

}  // namespace

TEST_CASE("enumeration counts") {
    CHECK(family_count(FamilyKind::AllSetSystems, 2) == 16);
    CHECK(family_count(FamilyKind::AllSetSystems, 0) == 2);
    const std::size_t dm[] = {1, 3, 15, 155, 5959};
    for (int n = 0; n <= 4; ++n) {
        CHECK(family_count(FamilyKind::AllDeltaMatroids, n) == dm[n]);
        CHECK(all_delta_matroids(n).size() == dm[n]);
    }
    CHECK(family_count(FamilyKind::AllSymmetricGF2, 2) == 8);
    CHECK(family_count(FamilyKind::AllSymmetricGF2, 6) == (1u << 21));
    CHECK(family_count(FamilyKind::AllSimpleGraphs, 3) == 8);
    CHECK(family_count(FamilyKind::AllSignedRotations, 1) == 2);
    CHECK(family_count(FamilyKind::AllSignedRotations, 2) == 12);
    CHECK(family_count(FamilyKind::AllSignedRotations, 3) == 120);
    CHECK(family_count(FamilyKind::AllSignedRotations, 4) == 1680);
    CHECK(family_count(FamilyKind::CanonicalBouquet, 5) == 1);
    CHECK(family_count(FamilyKind::CompleteGraph, 5) == 1);
}

TEST_CASE("enumeration bounds") {
    auto noop = [](const Instance&) {};
    CHECK_THROWS_AS(enumerate({FamilyKind::AllSetSystems, 5}, noop), UnsupportedSizeError);
    CHECK_THROWS_AS(enumerate({FamilyKind::AllDeltaMatroids, 5}, noop), UnsupportedSizeError);
    CHECK_THROWS_AS(enumerate({FamilyKind::AllSymmetricGF2, 7}, noop), UnsupportedSizeError);
    CHECK_THROWS_AS(enumerate({FamilyKind::AllSimpleGraphs, 7}, noop), UnsupportedSizeError);
    CHECK_THROWS_AS(enumerate({FamilyKind::AllSignedRotations, 5}, noop), UnsupportedSizeError);
    CHECK_THROWS_AS(check_fast_naive(5, 0, 4, 1), UnsupportedSizeError);
    CHECK_THROWS_AS(run_suite({"fast", 5, 1}), UnsupportedSizeError);
}

TEST_CASE("enumerations have no duplicates") {
    std::set<std::vector<SubsetMask>> seen;
    for (const auto& d : all_delta_matroids(4))
        CHECK(seen.insert(d.feasible()).second);

    std::set<std::string> rotations;
    for_each_signed_rotation(4, [&](const SignedRotation& b) { CHECK(rotations.insert(b.to_string()).second); });
    CHECK(rotations.size() == 1680);

    std::set<std::vector<SubsetMask>> matrices;
    for_each_symmetric_matrix(4, false, [&](const SymMatrixGF2& c) { CHECK(matrices.insert(c.rows()).second); });
    CHECK(matrices.size() == 1024);
}

TEST_CASE("random generators stay in their families") {
    Rng rng(99);
    for (int i = 0; i < 50; ++i) {
        int n = 1 + i % 8;
        CHECK(random_symmetric(n, true, rng).diagonal() == 0);
        CHECK(random_rotation(n, rng).edge_count() == n);
        CHECK(is_delta_matroid(random_binary_delta_matroid(n, rng)));
    }
}

TEST_CASE("closed forms") {
    CHECK(complete_graph_closed_form(1).coeffs() == Coeffs{2});
    CHECK(complete_graph_closed_form(2).coeffs() == Coeffs{2, 0, 2});
    CHECK(complete_graph_closed_form(3).coeffs() == Coeffs{0, 0, 8});
    CHECK(complete_graph_closed_form(4).coeffs() == Coeffs{0, 0, 8, 0, 8});
    CHECK(complete_graph_closed_form(5).coeffs() == Coeffs{0, 0, 0, 0, 32});
    CHECK(complete_graph_closed_form(6).coeffs() == Coeffs{0, 0, 0, 0, 32, 0, 32});
    for (int t = 1; t <= 8; ++t)
        CHECK(partial_duality_polynomial(canonical_bouquet(t)) == complete_graph_closed_form(t));

    DeltaMatroid b2 = delta_matroid_of_bouquet(canonical_bouquet(2));
    CHECK(twist_polynomial(direct_sum(b2, b2)).coeffs() == Coeffs{4, 0, 8, 0, 4});
}

TEST_CASE("each check passes at small bounds") {
    CHECK(check_prop2(2, 20, 3).passed());
    CHECK(check_lemma4(6).passed());
    CHECK(check_prop1(6).passed());
    CHECK(check_constant_iff_single(3).passed());
    CHECK(check_bipartite_constant_term(4).passed());
    CHECK(check_monomial_complete_odd(4, 200, 6, 5).passed());
    VerificationReport l5 = check_lemma5_and_lemma2(3);
    CHECK(l5.passed());
    CHECK_FALSE(l5.notes.empty());
    CHECK(check_interlacement_oracle(3, 50, 2).passed());
    CHECK(check_fast_naive(3, 20, 8, 4).passed());
    VerificationReport m = check_same_intersection_graph(3, 5);
    CHECK(m.passed());
    CHECK(m.checked > 0);
}

TEST_CASE("a pair threshold that cannot be met fails") {
    CHECK_FALSE(check_same_intersection_graph(1, 1000).passed());
}

TEST_CASE("report lines") {
    VerificationReport r;
    r.theorem = "lemma4";
    r.checked = 12;
    CHECK(r.machine_line() == "THEOREM lemma4 PASS checked=12 seed=-");
    r.seed = 42;
    r.counterexamples.push_back("x");
    CHECK(r.machine_line() == "THEOREM lemma4 FAIL checked=12 seed=42");
    CHECK(r.render().find("THEOREM lemma4 FAIL") != std::string::npos);

    CHECK(check_prop2(1, 3, 17).seed == std::optional<std::uint64_t>{17});
    CHECK_FALSE(check_lemma4(2).seed.has_value());
}

TEST_CASE("run_suite") {
    CHECK_THROWS_AS(run_suite({"nonsense", std::nullopt, 1}), InputError);
    CHECK_THROWS_AS(run_suite({"lemma4", -3, 1}), InputError);
    auto reports = run_suite({"lemma4", 5, 1});
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].theorem == "lemma4");
    CHECK(reports[0].passed());
    CHECK(suite_names().size() == 10);
}
