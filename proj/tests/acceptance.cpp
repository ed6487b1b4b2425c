// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "dmat/bouquet.hpp"
#include "dmat/verify.hpp"

using namespace dmat;
using namespace dmat::verify;

namespace {

constexpr std::uint64_t kSeed = 20240101;

int failures = 0;

struct Outcome {
    bool ok = true;
    std::string detail;
};

void criterion(const char* id, const char* title, double limit_s, const std::function<Outcome()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("threw: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = secs < limit_s;
    bool ok = o.ok && in_time;
    failures += !ok;
    std::printf("[%s] %s %s (%.2f s, limit %.0f s)%s%s\n", ok ? "PASS" : "FAIL", id, title, secs, limit_s,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
    if (!in_time)
        std::printf("       %s exceeded its time limit\n", id);
    std::fflush(stdout);
}

Outcome from_report(const VerificationReport& r, std::uint64_t min_checked = 0) {
    Outcome o;
    o.ok = r.passed() && r.checked >= min_checked;
    o.detail = r.machine_line();
    if (!r.passed())
        o.detail += " first counterexample: " + r.counterexamples.front();
    if (r.checked < min_checked)
        o.detail += " expected at least " + std::to_string(min_checked) + " instances";
    return o;
}

}  // namespace

int main() {
    criterion("AC1", "canonical bouquet closed form, t=1..12", 10,
              [] { return from_report(check_lemma4(12), 12); });

    criterion("AC2", "complete graph closed form, v=1..12", 10,
              [] { return from_report(check_prop1(12), 12); });

    criterion("AC3", "evaluation at 1, twist invariance, direct-sum product, n<=4", 120,
              [] { return from_report(check_prop2(4, 200, kSeed), 5959); });

    criterion("AC4", "constant polynomial iff one feasible set, n<=4", 120,
              [] { return from_report(check_constant_iff_single(4), 1 + 3 + 15 + 155 + 5959); });

    criterion("AC5", "twist-width splitting and restriction width, n<=4", 120, [] {
        VerificationReport r = check_lemma5_and_lemma2(4);
        Outcome o = from_report(r, 5959);
        bool witness = false;
        for (const auto& note : r.notes)
            witness = witness || note.find("non-normal witness") != std::string::npos;
        if (!witness) {
            o.ok = false;
            o.detail += " non-normal witness not reported";
        } else {
            o.detail += " witness: " + r.notes.front();
        }
        return o;
    });

    criterion("AC6", "bipartite iff nonzero constant term, zero-diagonal n<=6", 60,
              [] { return from_report(check_bipartite_constant_term(6), 32768); });

    criterion("AC7", "monomial iff components complete of odd order, n<=6 plus 1e5 at n=7", 300,
              [] { return from_report(check_monomial_complete_odd(6, 100000, 7, kSeed), 33867 + 100000); });

    criterion("AC8", "boundary tracing equals interlacement matrix, e<=4 plus 1e4 random e<=8", 60, [] {
        Outcome o = from_report(check_interlacement_oracle(8, 10000, kSeed), 2 + 12 + 120 + 1680 + 10000);
        std::size_t e4 = 0;
        for_each_signed_rotation(4, [&](const SignedRotation&) { ++e4; });
        if (e4 != 1680) {
            o.ok = false;
            o.detail += " e=4 diagrams: " + std::to_string(e4);
        }
        struct Anchor {
            const char* rotation;
            int faces, genus;
        };
        for (Anchor a : {Anchor{"1 1", 2, 0}, Anchor{"1 -1", 1, 1}, Anchor{"1 2 1 2", 1, 2}}) {
            SignedRotation b = parse_signed_rotation(a.rotation);
            SubsetMask all = full_mask(b.edge_count());
            if (boundary_components(b, all) != a.faces || euler_genus(b, all) != a.genus) {
                o.ok = false;
                o.detail += std::string(" anchor ") + a.rotation + " mismatch";
            }
        }
        return o;
    });

    criterion("AC9", "fast and naive polynomials agree, n<=4 plus 500 at n=12", 60,
              [] { return from_report(check_fast_naive(4, 500, 12, kSeed), 1 + 3 + 15 + 155 + 5959 + 500); });

    criterion("AC10", "equal interlacement graphs give equal polynomials, >=20 pairs", 600, [] {
        VerificationReport r = check_same_intersection_graph(4, 20);
        Outcome o = from_report(r);
        for (const auto& note : r.notes)
            o.detail += " (" + note + ")";
        return o;
    });

    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
