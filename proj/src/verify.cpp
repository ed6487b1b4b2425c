#include "dmat/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

namespace dmat::verify {

namespace {

std::string describe(const SetSystem& s) {
    std::string out = "n=" + std::to_string(s.size()) + " F={";
    for (std::size_t i = 0; i < s.count(); ++i) {
        if (i)
            out += ",";
        out += format_subset(s.feasible()[i]);
    }
    return out + "}";
}

std::string describe(const SymMatrixGF2& c) {
    std::string out = "C=[";
    for (int u = 0; u < c.size(); ++u) {
        if (u)
            out += ' ';
        for (int v = 0; v < c.size(); ++v)
            out += c.get(u, v) ? '1' : '0';
    }
    return out + "]";
}

std::string describe(const SignedRotation& b) { return "rotation \"" + b.to_string() + "\""; }

std::string show(const WidthPolynomial& p) { return p.to_string(); }

// Times a check and finalizes its report.
class Scope {
public:
    explicit Scope(std::string theorem) : start_(std::chrono::steady_clock::now()) {
        report_.theorem = std::move(theorem);
    }
    VerificationReport& report() { return report_; }
    void fail(std::string what) { report_.counterexamples.push_back(std::move(what)); }
    VerificationReport finish() {
        std::sort(report_.counterexamples.begin(), report_.counterexamples.end());
        report_.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        return std::move(report_);
    }

private:
    VerificationReport report_;
    std::chrono::steady_clock::time_point start_;
};

void require_at_most(int value, int bound, const char* what) {
    if (value > bound)
        throw UnsupportedSizeError(std::string(what) + " is exhaustive only up to size " + std::to_string(bound) +
                                   ", requested " + std::to_string(value));
}

void pairings(std::vector<int>& slot, int next_edge, const std::function<void(const std::vector<int>&)>& visit) {
    auto open = std::find(slot.begin(), slot.end(), -1);
    if (open == slot.end()) {
        visit(slot);
        return;
    }
    *open = next_edge;
    for (auto it = open + 1; it != slot.end(); ++it) {
        if (*it != -1)
            continue;
        *it = next_edge;
        pairings(slot, next_edge + 1, visit);
        *it = -1;
    }
    *open = -1;
}

}  // namespace

void enumerate(const InstanceFamily& family, const std::function<void(const Instance&)>& visit) {
    const int n = family.size;
    if (n < 0)
        throw InputError("family size must be nonnegative");
    switch (family.kind) {
    case FamilyKind::AllSetSystems: {
        require_at_most(n, kMaxSetSystemSize, "set-system enumeration");
        const std::uint64_t subsets = std::uint64_t{1} << n;
        const std::uint64_t families = std::uint64_t{1} << subsets;
        std::vector<SubsetMask> fam;
        for (std::uint64_t bits = 0; bits < families; ++bits) {
            fam.clear();
            for (std::uint64_t a = 0; a < subsets; ++a)
                if ((bits >> a) & 1u)
                    fam.push_back(static_cast<SubsetMask>(a));
            visit(SetSystem(n, fam));
        }
        break;
    }
    case FamilyKind::AllDeltaMatroids:
        for (DeltaMatroid& d : all_delta_matroids(n))
            visit(d);
        break;
    case FamilyKind::AllSymmetricGF2:
    case FamilyKind::AllSimpleGraphs:
        for_each_symmetric_matrix(n, family.kind == FamilyKind::AllSimpleGraphs,
                                  [&](const SymMatrixGF2& c) { visit(c); });
        break;
    case FamilyKind::AllSignedRotations:
        for_each_signed_rotation(n, [&](const SignedRotation& b) { visit(b); });
        break;
    case FamilyKind::CanonicalBouquet:
        visit(canonical_bouquet(n));
        break;
    case FamilyKind::CompleteGraph:
        visit(complete_graph_adjacency(n));
        break;
    }
}

std::vector<DeltaMatroid> all_delta_matroids(int n) {
    std::vector<DeltaMatroid> out;
    enumerate({FamilyKind::AllSetSystems, n}, [&](const Instance& inst) {
        const auto& s = std::get<SetSystem>(inst);
        if (is_delta_matroid(s))
            out.push_back(DeltaMatroid::assume(s.size(), s.feasible()));
    });
    return out;
}

void for_each_symmetric_matrix(int n, bool zero_diagonal, const std::function<void(const SymMatrixGF2&)>& visit) {
    require_at_most(n, kMaxMatrixSize, "matrix enumeration");
    std::vector<std::pair<int, int>> cells;
    for (int u = 0; u < n; ++u)
        for (int v = zero_diagonal ? u + 1 : u; v < n; ++v)
            cells.emplace_back(u, v);
    const std::uint64_t total = std::uint64_t{1} << cells.size();
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        SymMatrixGF2 c(n);
        for (std::size_t k = 0; k < cells.size(); ++k)
            if ((bits >> k) & 1u)
                c.set(cells[k].first, cells[k].second, true);
        visit(c);
    }
}

void for_each_signed_rotation(int e, const std::function<void(const SignedRotation&)>& visit) {
    require_at_most(e, kMaxRotationEdges, "rotation enumeration");
    if (e < 1)
        throw InputError("rotations need at least one edge");
    std::vector<int> slot(2 * e, -1);
    pairings(slot, 0, [&](const std::vector<int>& edges) {
        // Orientability is chosen per edge by negating its second half-edge.
        for (SubsetMask twisted = 0; twisted < (SubsetMask{1} << e); ++twisted) {
            std::vector<HalfEdge> seq;
            std::vector<bool> started(e, false);
            for (int edge : edges) {
                bool second = started[edge];
                started[edge] = true;
                seq.push_back({edge, second && contains(twisted, edge)});
            }
            visit(SignedRotation(std::move(seq)));
        }
    });
}

SymMatrixGF2 random_symmetric(int n, bool zero_diagonal, Rng& rng) {
    SymMatrixGF2 c(n);
    std::bernoulli_distribution coin(0.5);
    for (int u = 0; u < n; ++u)
        for (int v = zero_diagonal ? u + 1 : u; v < n; ++v)
            if (coin(rng))
                c.set(u, v, true);
    return c;
}

SignedRotation random_rotation(int e, Rng& rng) {
    std::vector<int> order;
    for (int i = 0; i < e; ++i) {
        order.push_back(i);
        order.push_back(i);
    }
    std::shuffle(order.begin(), order.end(), rng);
    std::bernoulli_distribution coin(0.5);
    // Relabel by first appearance and draw both signs independently.
    std::vector<int> relabel(e, -1);
    int next = 0;
    std::vector<HalfEdge> seq;
    for (int edge : order) {
        if (relabel[edge] < 0)
            relabel[edge] = next++;
        seq.push_back({relabel[edge], coin(rng)});
    }
    return SignedRotation(std::move(seq));
}

DeltaMatroid random_binary_delta_matroid(int n, Rng& rng) {
    DeltaMatroid d = delta_matroid_of_matrix(random_symmetric(n, false, rng));
    std::uniform_int_distribution<SubsetMask> pick(0, full_mask(n));
    return twist(d, pick(rng));
}

WidthPolynomial complete_graph_closed_form(int t) {
    std::vector<std::uint64_t> c(t + 1, 0);
    if (t % 2 == 1) {
        c[t - 1] = std::uint64_t{1} << t;
    } else {
        c[t] = std::uint64_t{1} << (t - 1);
        c[t - 2] += std::uint64_t{1} << (t - 1);
    }
    return WidthPolynomial(std::move(c));
}

std::string VerificationReport::machine_line() const {
    return "THEOREM " + theorem + (passed() ? " PASS" : " FAIL") + " checked=" + std::to_string(checked) +
           " seed=" + (seed ? std::to_string(*seed) : std::string("-"));
}

std::string VerificationReport::render() const {
    std::ostringstream out;
    out << theorem << ": " << (passed() ? "pass" : "FAIL") << ", " << checked << " instances checked in "
        << elapsed_seconds << " s\n";
    for (const auto& note : notes)
        out << "  note: " << note << "\n";
    for (const auto& bad : counterexamples)
        out << "  counterexample: " << bad << "\n";
    out << machine_line() << "\n";
    return out.str();
}

VerificationReport check_prop2(int n_max, int trials, std::uint64_t seed) {
    require_at_most(n_max, kMaxSetSystemSize, "prop2");
    Scope scope("prop2");
    auto& report = scope.report();
    report.seed = seed;

    std::vector<DeltaMatroid> partners;
    for (int n = 0; n <= std::min(n_max, 2); ++n)
        for (auto& d : all_delta_matroids(n))
            partners.push_back(d);
    std::vector<WidthPolynomial> partner_polys;
    for (const auto& q : partners)
        partner_polys.push_back(twist_polynomial_fast(q));

    auto check_sum = [&](const DeltaMatroid& a, const WidthPolynomial& pa, const DeltaMatroid& b,
                         const WidthPolynomial& pb) {
        WidthPolynomial lhs = twist_polynomial_fast(direct_sum(a, b));
        WidthPolynomial rhs = pa * pb;
        if (lhs != rhs)
            scope.fail("direct sum of " + describe(a) + " and " + describe(b) + ": " + show(lhs) +
                       " != " + show(rhs));
    };

    for (int n = 0; n <= n_max; ++n) {
        for (const auto& d : all_delta_matroids(n)) {
            ++report.checked;
            WidthPolynomial p = twist_polynomial_fast(d);
            if (p.eval_at_1() != (std::uint64_t{1} << n))
                scope.fail(describe(d) + ": value at 1 is " + std::to_string(p.eval_at_1()));
            for (SubsetMask a = 0; a <= full_mask(n); ++a) {
                WidthPolynomial q = twist_polynomial_fast(twist(d, a));
                if (q != p)
                    scope.fail(describe(d) + " twisted by " + format_subset(a) + ": " + show(q) + " != " +
                               show(p));
            }
            for (std::size_t i = 0; i < partners.size(); ++i)
                check_sum(d, p, partners[i], partner_polys[i]);
        }
    }

    Rng rng(seed);
    std::uniform_int_distribution<int> size(0, 10);
    for (int t = 0; t < trials; ++t) {
        int n1 = size(rng);
        int n2 = std::uniform_int_distribution<int>(0, 10 - n1)(rng);
        DeltaMatroid a = random_binary_delta_matroid(n1, rng);
        DeltaMatroid b = random_binary_delta_matroid(n2, rng);
        ++report.checked;
        check_sum(a, twist_polynomial_fast(a), b, twist_polynomial_fast(b));
    }
    return scope.finish();
}

VerificationReport check_lemma4(int t_max) {
    require_at_most(t_max, kMaxBouquetEdges, "lemma4");
    Scope scope("lemma4");
    for (int t = 1; t <= t_max; ++t) {
        ++scope.report().checked;
        SignedRotation b = canonical_bouquet(t);
        WidthPolynomial got = partial_duality_polynomial(b);
        WidthPolynomial want = complete_graph_closed_form(t);
        if (got != want)
            scope.fail("B_" + std::to_string(t) + ": " + show(got) + " != " + show(want));
    }
    return scope.finish();
}

VerificationReport check_prop1(int v_max) {
    require_at_most(v_max, kMaxEnumerationSize, "prop1");
    Scope scope("prop1");
    for (int v = 1; v <= v_max; ++v) {
        ++scope.report().checked;
        SymMatrixGF2 k = complete_graph_adjacency(v);
        DeltaMatroid d = delta_matroid_of_matrix(k);
        if (!graph_predicates(intersection_graph(d)).is_complete)
            scope.fail("K_" + std::to_string(v) + ": reconstructed intersection graph is not complete");
        WidthPolynomial got = twist_polynomial_fast(d);
        WidthPolynomial want = complete_graph_closed_form(v);
        if (got != want)
            scope.fail("K_" + std::to_string(v) + ": " + show(got) + " != " + show(want));
    }
    return scope.finish();
}

VerificationReport check_constant_iff_single(int n_max) {
    require_at_most(n_max, kMaxSetSystemSize, "constant");
    Scope scope("constant");
    for (int n = 0; n <= n_max; ++n)
        for (const auto& d : all_delta_matroids(n)) {
            ++scope.report().checked;
            WidthPolynomial p = twist_polynomial_fast(d);
            bool constant = p.degree() == 0;
            bool single = d.count() == 1;
            if (constant != single)
                scope.fail(describe(d) + ": polynomial " + show(p) + " with |F|=" + std::to_string(d.count()));
        }
    return scope.finish();
}

VerificationReport check_bipartite_constant_term(int n_max) {
    require_at_most(n_max, kMaxMatrixSize, "bipartite");
    Scope scope("bipartite");
    auto check = [&](const SymMatrixGF2& c) {
        ++scope.report().checked;
        DeltaMatroid d = delta_matroid_of_matrix(c);
        IntersectionGraph g = intersection_graph(d);
        if (g.adjacency != c) {
            scope.fail(describe(c) + ": reconstructed intersection graph differs");
            return;
        }
        GraphPredicates gp = graph_predicates(g);
        WidthPolynomial p = twist_polynomial_fast(d);
        bool has_constant = p.constant_term() > 0;
        if (has_constant != gp.is_bipartite)
            scope.fail(describe(c) + ": constant term " + std::to_string(p.constant_term()) + ", bipartite " +
                       (gp.is_bipartite ? "yes" : "no"));
        if (gp.is_bipartite) {
            // The bipartition sides restrict to matroids, so the twist by
            // one side has width zero.
            SubsetMask x = gp.side;
            SubsetMask y = full_mask(c.size()) & ~x;
            int wx = width(restrict_to(d, x));
            int wy = width(restrict_to(d, y));
            int wt = twist_width(d, x);
            if (wx != 0 || wy != 0 || wt != wx + wy)
                scope.fail(describe(c) + ": bipartition " + format_subset(x) + " gives w(D|X)=" +
                           std::to_string(wx) + ", w(D|Y)=" + std::to_string(wy) +
                           ", w(D*X)=" + std::to_string(wt));
        }
    };
    for (int n = 1; n <= n_max; ++n) {
        for_each_symmetric_matrix(n, true, check);
        // Odd (looped) binary delta-matroids: never bipartite, never a
        // constant term.
        if (n <= 5)
            for_each_symmetric_matrix(n, false, [&](const SymMatrixGF2& c) {
                if (c.diagonal() != 0)
                    check(c);
            });
    }
    return scope.finish();
}

VerificationReport check_monomial_complete_odd(int n_max, int samples, int sample_n, std::uint64_t seed) {
    require_at_most(n_max, kMaxMatrixSize, "monomial");
    require_at_most(sample_n, kMaxEnumerationSize, "monomial sampling");
    Scope scope("monomial");
    scope.report().seed = seed;
    auto check = [&](const SymMatrixGF2& c) {
        ++scope.report().checked;
        DeltaMatroid d = delta_matroid_of_matrix(c);
        GraphPredicates gp = graph_predicates(intersection_graph(d));
        WidthPolynomial p = twist_polynomial_fast(d);
        if (p.is_monomial() != gp.all_components_complete_odd)
            scope.fail(describe(c) + ": polynomial " + show(p) + ", components complete of odd order " +
                       (gp.all_components_complete_odd ? "yes" : "no"));
    };
    for (int n = 1; n <= n_max; ++n)
        for_each_symmetric_matrix(n, true, check);
    Rng rng(seed);
    for (int s = 0; s < samples; ++s)
        check(random_symmetric(sample_n, true, rng));
    return scope.finish();
}

VerificationReport check_lemma5_and_lemma2(int n_max) {
    require_at_most(n_max, kMaxSetSystemSize, "lemma5");
    Scope scope("lemma5");
    for (int n = 0; n <= n_max; ++n)
        for (const auto& d : all_delta_matroids(n)) {
            ++scope.report().checked;
            const SubsetMask all = full_mask(n);
            const bool normal = d.has(0);
            MinMaxParts parts = min_max_parts(d);
            const int null_e = matroid_nullity(parts.min, all);
            for (SubsetMask a = 0; a <= all; ++a) {
                int wa = width(restrict_to(d, a));
                int lemma2 = rho(d, a) - matroid_rank(parts.min, a) - null_e + matroid_nullity(parts.min, a);
                if (wa != lemma2)
                    scope.fail("lemma2 " + describe(d) + " A=" + format_subset(a) + ": w(D|A)=" +
                               std::to_string(wa) + " vs " + std::to_string(lemma2));
                if (normal) {
                    int split = wa + width(restrict_to(d, all & ~a));
                    int wt = twist_width(d, a);
                    if (split != wt)
                        scope.fail("lemma5 " + describe(d) + " A=" + format_subset(a) + ": w(D*A)=" +
                                   std::to_string(wt) + " vs " + std::to_string(split));
                }
            }
        }

    // The splitting identity is known to break without normality.
    DeltaMatroid witness(2, {0b01, 0b10});
    int wt = twist_width(witness, 0b01);
    int split = width(restrict_to(witness, 0b01)) + width(restrict_to(witness, 0b10));
    if (wt != split)
        scope.report().notes.push_back("non-normal witness " + describe(witness) + " A={0}: w(D*A)=" +
                                       std::to_string(wt) + " but w(D|A)+w(D|A^c)=" + std::to_string(split));
    else
        scope.fail("non-normal witness " + describe(witness) + " unexpectedly satisfies the splitting identity");
    return scope.finish();
}

VerificationReport check_interlacement_oracle(int e_max, int samples, std::uint64_t seed) {
    require_at_most(e_max, kMaxBouquetEdges, "interlacement");
    Scope scope("interlacement");
    scope.report().seed = seed;

    auto check = [&](const SignedRotation& b) {
        ++scope.report().checked;
        DeltaMatroid traced;
        try {
            traced = delta_matroid_of_bouquet(b);
        } catch (const Error& err) {
            scope.fail(describe(b) + ": " + err.what());
            return;
        }
        DeltaMatroid algebraic = delta_matroid_of_matrix(interlacement_matrix(b));
        if (traced != algebraic)
            scope.fail(describe(b) + ": traced " + describe(traced) + " vs matrix " + describe(algebraic));
        const SubsetMask all = full_mask(b.edge_count());
        if (euler_genus(b, all) != width(traced))
            scope.fail(describe(b) + ": genus " + std::to_string(euler_genus(b, all)) + " vs width " +
                       std::to_string(width(traced)));
        bool orientable = true;
        for (int e = 0; e < b.edge_count(); ++e)
            orientable = orientable && b.is_orientable(e);
        if (orientable)
            for (SubsetMask a = 0; a <= all; ++a)
                if (euler_genus(b, a) % 2 != 0)
                    scope.fail(describe(b) + ": odd genus on orientable subset " + format_subset(a));
    };

    struct Anchor {
        const char* rotation;
        int faces;
        int genus;
    };
    for (Anchor anchor : {Anchor{"1 1", 2, 0}, Anchor{"1 -1", 1, 1}, Anchor{"1 2 1 2", 1, 2}}) {
        SignedRotation b = parse_signed_rotation(anchor.rotation);
        SubsetMask all = full_mask(b.edge_count());
        int f = boundary_components(b, all);
        int g = euler_genus(b, all);
        if (f != anchor.faces || g != anchor.genus)
            scope.fail(std::string("anchor ") + anchor.rotation + ": f=" + std::to_string(f) +
                       " genus=" + std::to_string(g));
    }

    for (int e = 1; e <= std::min(e_max, kMaxRotationEdges); ++e)
        for_each_signed_rotation(e, check);
    Rng rng(seed);
    std::uniform_int_distribution<int> size(1, std::max(1, e_max));
    for (int s = 0; s < samples; ++s)
        check(random_rotation(size(rng), rng));
    return scope.finish();
}

VerificationReport check_fast_naive(int n_max, int samples, int sample_n, std::uint64_t seed) {
    require_at_most(n_max, kMaxSetSystemSize, "fast");
    require_at_most(sample_n, kMaxEnumerationSize, "fast sampling");
    Scope scope("fast");
    scope.report().seed = seed;
    auto check = [&](const DeltaMatroid& d) {
        ++scope.report().checked;
        WidthPolynomial fast = twist_polynomial_fast(d);
        WidthPolynomial naive = twist_polynomial_naive(d);
        if (fast.coeffs() != naive.coeffs())
            scope.fail(describe(d) + ": fast " + fast.machine_line() + " vs naive " + naive.machine_line());
    };
    for (int n = 0; n <= n_max; ++n)
        for (const auto& d : all_delta_matroids(n))
            check(d);
    Rng rng(seed);
    for (int s = 0; s < samples; ++s)
        check(random_binary_delta_matroid(sample_n, rng));
    return scope.finish();
}

VerificationReport check_same_intersection_graph(int n_max, int min_pairs) {
    require_at_most(n_max, kMaxRotationEdges, "main");
    Scope scope("main");
    std::uint64_t pairs = 0;

    // Normal binary delta-matroids: the intersection graph pins down D.
    std::map<std::vector<SubsetMask>, DeltaMatroid> by_graph;
    for (int n = 0; n <= n_max; ++n)
        for (const auto& d : all_delta_matroids(n)) {
            if (!is_normal_binary(d))
                continue;
            ++scope.report().checked;
            auto rows = intersection_graph(d).adjacency.rows();
            rows.push_back(static_cast<SubsetMask>(n));
            auto [it, fresh] = by_graph.try_emplace(rows, d);
            if (!fresh)
                scope.fail(describe(d) + " and " + describe(it->second) + " share an intersection graph");
        }

    // Bouquets: group labeled rotations by interlacement matrix and compare
    // every member of a group with its first member.
    for (int e = 1; e <= n_max; ++e) {
        std::map<std::vector<SubsetMask>, std::vector<SignedRotation>> groups;
        for_each_signed_rotation(e, [&](const SignedRotation& b) {
            groups[interlacement_matrix(b).rows()].push_back(b);
        });
        for (const auto& [rows, members] : groups) {
            const SignedRotation& first = members.front();
            DeltaMatroid d0 = delta_matroid_of_bouquet(first);
            WidthPolynomial p0 = partial_duality_polynomial(first);
            for (std::size_t i = 1; i < members.size(); ++i) {
                ++pairs;
                ++scope.report().checked;
                DeltaMatroid d1 = delta_matroid_of_bouquet(members[i]);
                WidthPolynomial p1 = partial_duality_polynomial(members[i]);
                if (d1 != d0 || p1 != p0)
                    scope.fail(describe(first) + " vs " + describe(members[i]) + ": " + show(p0) + " vs " +
                               show(p1));
            }
        }
    }
    scope.report().notes.push_back(std::to_string(pairs) + " rotation pairs with equal interlacement graphs");
    if (pairs < static_cast<std::uint64_t>(min_pairs))
        scope.fail("only " + std::to_string(pairs) + " rotation pairs constructed, need " +
                   std::to_string(min_pairs));
    return scope.finish();
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"prop2",    "lemma4",    "lemma5",        "prop1",
                                                   "constant", "bipartite", "monomial",      "interlacement",
                                                   "fast",     "main"};
    return names;
}

std::vector<VerificationReport> run_suite(const SuiteOptions& options) {
    const auto& names = suite_names();
    const bool all = options.suite == "all";
    if (!all && std::find(names.begin(), names.end(), options.suite) == names.end())
        throw InputError("unknown suite '" + options.suite + "'");

    // An explicit bound is taken as given for a single suite and clamped to
    // each suite's envelope under "all".
    auto bound = [&](int fallback, int limit) {
        if (!options.max_n)
            return fallback;
        if (*options.max_n < 0)
            throw InputError("--max-n must be nonnegative");
        return all ? std::min(*options.max_n, limit) : *options.max_n;
    };
    const std::uint64_t seed = options.seed;

    std::vector<VerificationReport> out;
    auto want = [&](const char* name) { return all || options.suite == name; };
    if (want("prop2"))
        out.push_back(check_prop2(bound(4, kMaxSetSystemSize), 200, seed));
    if (want("lemma4"))
        out.push_back(check_lemma4(bound(12, kMaxBouquetEdges)));
    if (want("lemma5"))
        out.push_back(check_lemma5_and_lemma2(bound(4, kMaxSetSystemSize)));
    if (want("prop1"))
        out.push_back(check_prop1(bound(12, kMaxEnumerationSize)));
    if (want("constant"))
        out.push_back(check_constant_iff_single(bound(4, kMaxSetSystemSize)));
    if (want("bipartite"))
        out.push_back(check_bipartite_constant_term(bound(6, kMaxMatrixSize)));
    if (want("monomial"))
        out.push_back(check_monomial_complete_odd(bound(6, kMaxMatrixSize), 100000, 7, seed));
    if (want("interlacement"))
        out.push_back(check_interlacement_oracle(bound(8, kMaxBouquetEdges), 10000, seed));
    if (want("fast"))
        out.push_back(check_fast_naive(bound(4, kMaxSetSystemSize), 500, 12, seed));
    if (want("main"))
        out.push_back(check_same_intersection_graph(bound(4, kMaxRotationEdges), 20));
    return out;
}

}  // namespace dmat::verify
