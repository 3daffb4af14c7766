// Acceptance suite: one criterion per closed-form family or structural
// property, each run at its stated exactness (Betti numbers and torsion over
// the integers). Prints one pass/fail line per criterion; exit 1 on failure.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "fcx/verify.hpp"

using namespace fcx;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool ok = true;
    long long cases = 0;
    std::vector<std::string> failures;

    void absorb(const std::vector<CaseReport>& reports) {
        for (const auto& r : reports) {
            ++cases;
            if (r.verdict != Verdict::Pass)
                failures.push_back(r.id + (r.detail.empty() ? "" : " -- " + r.detail));
        }
        ok = ok && failures.empty();
    }

    void require(bool cond, const std::string& what) {
        ++cases;
        if (!cond) {
            ok = false;
            failures.push_back(what);
        }
    }
};

std::uint64_t g_seed = 20240810;
int g_jobs = 0; // 0 = pick from hardware

std::vector<CaseReport> run_tokens(const std::vector<std::string>& tokens) {
    std::vector<TheoremCase> cases;
    for (const auto& t : tokens) cases.push_back(case_from_token(t, g_seed));
    return run_reports(cases, g_jobs, Budget{});
}

std::vector<CaseReport> run_filtered(const std::string& filter) {
    SuiteOptions opts;
    opts.seed = g_seed;
    opts.jobs = g_jobs;
    opts.filter = filter;
    return run_catalog_suite(opts);
}

DegreeBound fin(int d) { return DegreeBound::finite(d); }

Outcome ac01_paths_cycles() {
    Outcome out;
    std::vector<std::string> tokens;
    for (int n = 1; n <= 12; ++n) tokens.push_back("path:" + std::to_string(n) + ":d1");
    for (int n = 3; n <= 12; ++n) tokens.push_back("cycle:" + std::to_string(n) + ":d1");
    out.absorb(run_tokens(tokens));
    out.require(full_reduced_homology(path_graph(7), fin(1)).at(3).betti == 1,
                "cap-1 homology of the 7-path");
    out.require(full_reduced_homology(cycle_graph(8), fin(1)).at(3).betti == 3,
                "cap-1 homology of the 8-cycle");
    out.require(full_reduced_homology(cycle_graph(5), fin(1)).at(1).betti == 1,
                "cap-1 homology of the 5-cycle");
    return out;
}

Outcome ac02_complete() {
    Outcome out;
    std::vector<std::string> tokens;
    for (int n = 3; n <= 7; ++n)
        for (const char* d : {"d1", "d2", "d3", "dinf"})
            tokens.push_back("complete:" + std::to_string(n) + ":" + d);
    out.absorb(run_tokens(tokens));
    return out;
}

Outcome ac03_chorded_cycles() {
    Outcome out;
    std::vector<std::string> tokens;
    for (int r = 1; r <= 7; ++r)
        for (int k = 1; r + k + 2 <= 9; ++k)
            tokens.push_back("cycle-chord:" + std::to_string(r) + "," + std::to_string(k) +
                             ":dinf");
    out.absorb(run_tokens(tokens));
    return out;
}

Outcome ac04_double_stars() {
    Outcome out;
    std::vector<std::string> tokens;
    for (int r = 1; r <= 4; ++r)
        for (int s = 1; s <= 4; ++s)
            tokens.push_back("double-star:" + std::to_string(r) + "," + std::to_string(s) +
                             ":d1");
    for (int r = 1; r <= 5; ++r)
        for (int s = 1; s <= 5; ++s)
            for (int d : {2, 3})
                tokens.push_back("double-star:" + std::to_string(r) + "," +
                                 std::to_string(s) + ":d" + std::to_string(d));
    out.absorb(run_tokens(tokens));
    // Contractibility when one side is too small for the cap.
    for (int d : {2, 3})
        for (int s = 1; s <= 5; ++s)
            out.require(
                full_reduced_homology(double_star(d - 1, s), fin(d)).all_trivial(),
                "contractible double star r=d-1, s=" + std::to_string(s));
    return out;
}

Outcome ac05_bipartite_multipartite() {
    Outcome out;
    std::vector<std::string> tokens;
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 4; ++m)
            for (const char* d : {"d0", "d1", "d2", "dinf"})
                tokens.push_back("bipartite:" + std::to_string(n) + "," +
                                 std::to_string(m) + ":" + d);
    tokens.push_back("multipartite:2,2,2:d1");
    out.absorb(run_tokens(tokens));
    out.require(full_reduced_homology(complete_multipartite({3, 3}), fin(2)).at(2).betti ==
                    10,
                "cap-2 homology of K_{3,3} (4 + 6 spheres)");
    out.require(full_reduced_homology(complete_multipartite({3, 3}),
                                      DegreeBound::unbounded())
                        .at(2)
                        .betti == 4,
                "uncapped homology of K_{3,3}");
    out.require(full_reduced_homology(complete_multipartite({2, 2, 2}), fin(1))
                        .at(1)
                        .betti == 10,
                "cap-1 homology of the octahedron graph");
    return out;
}

Outcome ac06_wheels() {
    Outcome out;
    std::vector<std::string> tokens{"wheel:4:d1", "wheel:6:d3", "wheel:6:dinf"};
    for (int rim = 3; rim <= 8; ++rim) {
        tokens.push_back("wheel:" + std::to_string(rim) + ":d1");
        tokens.push_back("wheel:" + std::to_string(rim) + ":dinf");
    }
    out.absorb(run_tokens(tokens));
    auto w5 = full_reduced_homology(wheel_graph(4), fin(1));
    out.require(w5.at(1).betti == 6, "cap-1 homology of the 5-wheel (3 + 3 circles)");
    auto w7 = full_reduced_homology(wheel_graph(6), fin(3));
    out.require(w7.at(4).betti == 1 && w7.at(2).betti == 2,
                "cap-3 homology of the 7-wheel (suspension composition)");
    return out;
}

Outcome ac07_cactus() {
    Outcome out;
    out.absorb(run_filtered("cactus"));
    return out;
}

Outcome ac08_products() {
    Outcome out;
    std::vector<std::string> tokens;
    for (int k = 1; k <= 8; ++k) tokens.push_back("grid-p2xp:" + std::to_string(k) + ":dinf");
    tokens.insert(tokens.end(), {"product-knxkm:3,3:d1", "product-knxkm:2,4:d2",
                                 "product-knxkm:3,3:d2", "product-knxkm:2,3:d1",
                                 "product-knxkm:2,4:d3", "product-knxkm:2,4:dinf",
                                 "product-k2k2kn:3:d1", "product-k2k2kn:3:d2",
                                 "product-k2k2kn:3:d0", "product-k2k2kn:4:d0"});
    out.absorb(run_tokens(tokens));
    auto g33 = full_reduced_homology(
        categorical_product(complete_graph(3), complete_graph(3)), fin(1));
    out.require(g33.at(2).betti == 5, "cap-1 homology of K_3 x K_3");
    auto g24 = full_reduced_homology(
        categorical_product(complete_graph(2), complete_graph(4)), fin(2));
    out.require(g24.at(4).betti == 4 && g24.at(3).betti == 1,
                "cap-2 homology of K_2 x K_4");
    auto g33b = full_reduced_homology(
        categorical_product(complete_graph(3), complete_graph(3)), fin(2));
    out.require(g33b.at(4).betti == 6 && g33b.at(3).betti == 1,
                "cap-2 homology of K_3 x K_3");
    auto k223 = full_reduced_homology(
        categorical_product(categorical_product(complete_graph(2), complete_graph(2)),
                            complete_graph(3)),
        fin(1));
    out.require(k223.at(5).betti == 1, "cap-1 homology of K_2 x K_2 x K_3");
    return out;
}

Outcome ac09_property_suites() {
    Outcome out;
    SuiteOptions opts;
    opts.seed = g_seed;
    opts.jobs = g_jobs;
    opts.random_graphs = 100;
    out.absorb(run_property_suite(opts));
    return out;
}

Outcome ac10_small_order() {
    Outcome out;
    for (int order = 4; order <= 6; ++order) {
        auto r = run_small_order_class(order);
        out.require(r.verdict == Verdict::Pass, r.id + " -- " + r.detail);
    }
    return out;
}

Outcome ac11_torsion_witness() {
    Outcome out;
    auto witness = torsion_witness(3);
    out.require(witness.verdict == Verdict::Pass, witness.id + " -- " + witness.detail);
    auto rp2 = run_case(case_from_token("rp2-independence:d0", g_seed));
    out.require(rp2.verdict == Verdict::Pass, rp2.id + " -- " + rp2.detail);
    out.require(rp2.computed.at(1).torsion == std::vector<long long>{2},
                "projective-plane profile has Z/2 at dimension 1");
    return out;
}

} // namespace

int main(int argc, char** argv) {
    std::string only;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--only") && i + 1 < argc) only = argv[++i];
        if (!std::strcmp(argv[i], "--seed") && i + 1 < argc) g_seed = std::stoull(argv[++i]);
        if (!std::strcmp(argv[i], "--jobs") && i + 1 < argc) g_jobs = std::stoi(argv[++i]);
    }
    if (g_jobs <= 0)
        g_jobs = std::max(1u, std::min(4u, std::thread::hardware_concurrency()));

    struct Criterion {
        const char* id;
        const char* name;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> criteria = {
        {"AC-01", "cap-1 paths and cycles, 4-periodic tables", ac01_paths_cycles},
        {"AC-02", "complete graphs across the filtration", ac02_complete},
        {"AC-03", "chorded cycles", ac03_chorded_cycles},
        {"AC-04", "double stars", ac04_double_stars},
        {"AC-05", "complete bipartite and multipartite", ac05_bipartite_multipartite},
        {"AC-06", "wheels", ac06_wheels},
        {"AC-07", "cactus spheres and duals", ac07_cactus},
        {"AC-08", "grid and tensor products", ac08_products},
        {"AC-09", "structural property suites", ac09_property_suites},
        {"AC-10", "exhaustive small-order classification", ac10_small_order},
        {"AC-11", "torsion witness", ac11_torsion_witness},
    };

    bool all_ok = true;
    for (const auto& c : criteria) {
        if (!only.empty() && only != c.id) continue;
        auto t0 = Clock::now();
        Outcome out = c.run();
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        std::printf("[%s] %-45s %s (%.1fs, %lld checks)\n", c.id, c.name,
                    out.ok ? "PASS" : "FAIL", secs, out.cases);
        for (std::size_t i = 0; i < out.failures.size() && i < 10; ++i)
            std::printf("        failed: %s\n", out.failures[i].c_str());
        all_ok = all_ok && out.ok;
    }
    return all_ok ? 0 : 1;
}
