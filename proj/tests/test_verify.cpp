#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fcx/rng.hpp"
#include "fcx/verify.hpp"

using namespace fcx;

namespace {
DegreeBound fin(int d) { return DegreeBound::finite(d); }
DegreeBound inf() { return DegreeBound::unbounded(); }
} // namespace

TEST_CASE("closed-form profiles") {
    CHECK(expected_bipartite(3, 3, inf()).at(2).betti == 4);
    CHECK(expected_bipartite(3, 3, fin(2)).at(2).betti == 10); // 4 + 3 + 3
    CHECK(expected_bipartite(3, 3, fin(1)).at(1).betti == 8);
    CHECK(expected_bipartite(2, 2, fin(0)).at(0).betti == 1);

    CHECK(expected_kn_x_km(3, 3, fin(1)).at(2).betti == 5);
    CHECK(expected_kn_x_km(2, 4, fin(2)).at(4).betti == 4);
    CHECK(expected_kn_x_km(2, 4, fin(2)).at(3).betti == 1);
    CHECK(expected_kn_x_km(3, 3, fin(2)).at(4).betti == 6);
    CHECK(expected_kn_x_km(3, 3, fin(2)).at(3).betti == 1);

    CHECK(expected_double_star(2, 2, fin(2)).at(3).betti == 1);
    CHECK(expected_double_star(1, 4, fin(2)).all_trivial()); // r <= d-1

    CHECK(expected_complete(5, fin(1)).at(1).betti == 6);
    CHECK(expected_wheel(4, fin(1)).at(1).betti == 6);
    CHECK(expected_wheel(6, fin(3)).at(4).betti == 1);
    CHECK(expected_wheel(6, fin(3)).at(2).betti == 2);
    CHECK(expected_k2_k2_kn(3, fin(1)).at(5).betti == 1);
    CHECK(expected_multipartite({2, 2, 2}, fin(1)).at(1).betti == 10);
    CHECK(expected_grid_p2(4).all_trivial());
    CHECK(expected_grid_p2(3).at(3).betti == 1);

    CHECK_THROWS_AS(expected_wheel(8, fin(2)), std::invalid_argument);
    CHECK_THROWS_AS(expected_complete(4, fin(0)), std::invalid_argument);
    CHECK_THROWS_AS(expected_kn_x_km(3, 4, inf()), std::invalid_argument);

    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(4, 0) == 1);
}

TEST_CASE("run_case verdicts") {
    auto chord = case_from_token("cycle-chord:2,2:dinf", 1);
    auto r = run_case(chord);
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.computed.at(3).betti == 1); // n = 6 gives S^3

    auto path = run_case(case_from_token("path:5:d1", 1));
    CHECK(path.verdict == Verdict::Pass);
    CHECK(path.computed.all_trivial());

    // A deliberately wrong expectation fails with a located mismatch.
    TheoremCase bogus;
    bogus.id = "bogus";
    bogus.graph = cycle_graph(5);
    bogus.d = inf();
    HomologyProfile wrong;
    wrong.set_betti(2, 7);
    bogus.expected = Expected::exact(wrong);
    auto rb = run_case(bogus);
    CHECK(rb.verdict == Verdict::Fail);
    CHECK(rb.detail.find("dim 2") != std::string::npos);

    // Budget exhaustion is a skip, not a failure.
    Budget tiny;
    tiny.max_faces_per_dim = 2;
    auto skipped = run_case(case_from_token("cycle:8:dinf", 1), tiny);
    CHECK(skipped.verdict == Verdict::Skipped);
}

TEST_CASE("bowtie cactus and its dual") {
    Graph bowtie = make_graph(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
    TheoremCase c;
    c.id = "bowtie";
    c.graph = bowtie;
    c.d = inf();
    HomologyProfile s2;
    s2.set_betti(2, 1);
    c.expected = Expected::exact(s2);
    CHECK(run_case(c).verdict == Verdict::Pass);

    TheoremCase dualc = c;
    dualc.dual = true;
    HomologyProfile s0;
    s0.set_betti(0, 1); // b - 2 = 0
    dualc.expected = Expected::exact(s0);
    CHECK(run_case(dualc).verdict == Verdict::Pass);
}

TEST_CASE("brute force t_d") {
    CHECK(brute_force_t_d(cycle_graph(6), inf()) == 5);
    CHECK(brute_force_t_d(complete_graph(4), fin(1)) == 2);
    Graph pet = petersen_graph();
    CHECK(brute_force_t_d(pet, fin(2)) == t_d(pet, fin(2)));
    CHECK(brute_force_t_d(pet, inf()) == t_d(pet, inf()));
    CHECK_THROWS_AS(brute_force_t_d(make_graph(30, {}), inf()), std::invalid_argument);
}

TEST_CASE("projective-plane independence complex profile") {
    auto r = run_case(case_from_token("rp2-independence:d0", 1));
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.computed.at(1).torsion == std::vector<long long>{2});
    CHECK(r.computed.at(1).betti == 0);
    CHECK(r.computed.at(2).trivial());
}

TEST_CASE("catalog cross-consistency: K_2 x K_3 is a hexagon") {
    auto a = full_reduced_homology(
        categorical_product(complete_graph(2), complete_graph(3)), fin(1));
    auto b = full_reduced_homology(cycle_graph(6), fin(1));
    CHECK(a.same_as(b));
}

TEST_CASE("property runners on fixed inputs") {
    SplitMix64 rng(2024);
    Graph g = random_graph(rng.next(), 7);
    CHECK(run_property(PropertyId::SkeletonAgree, g, fin(2), 5).verdict == Verdict::Pass);
    CHECK(run_property(PropertyId::PairConnectivity, g, fin(1), 5).verdict == Verdict::Pass);
    CHECK(run_property(PropertyId::F1Flagness, g, fin(1), 5).verdict == Verdict::Pass);
    CHECK(run_property(PropertyId::BridgeInvariance, g, inf(), 5).verdict == Verdict::Pass);
    CHECK(run_property(PropertyId::NoCycleVertex, g, inf(), 5).verdict == Verdict::Pass);
    CHECK(run_property(PropertyId::MinDegreeOne, g, inf(), 5).verdict == Verdict::Pass);
    CHECK(run_property(PropertyId::Degree2Suspension, g, inf(), 5).verdict == Verdict::Pass);
    CHECK(run_property(PropertyId::ForestCount, g, fin(1), 5).verdict == Verdict::Pass);
    CHECK(run_property(PropertyId::GirthVanishing, g, inf(), 5).verdict == Verdict::Pass);
    CHECK(run_property(PropertyId::DisjointJoin, g, inf(), 5).verdict == Verdict::Pass);
    CHECK(run_property(PropertyId::ConeLemma, g, fin(2), 5).verdict == Verdict::Pass);
    CHECK(run_property(PropertyId::JoinLemmaHomology, g, fin(2), 5).verdict == Verdict::Pass);
    CHECK(run_property(PropertyId::AlexanderDuality, g, inf(), 5).verdict == Verdict::Pass);
    CHECK(run_property(PropertyId::ConnDisjoint, g, fin(1), 5).verdict == Verdict::Pass);

    CHECK(run_small_order_class(4).verdict == Verdict::Pass);
}

TEST_CASE("seeded cacti satisfy the sphere bound and dual sphere") {
    SuiteOptions opts;
    opts.seed = 99;
    opts.filter = "cactus";
    auto reports = run_catalog_suite(opts);
    CHECK(reports.size() > 50);
    for (const auto& r : reports) {
        CAPTURE(r.id);
        CHECK(r.verdict == Verdict::Pass);
    }
}

TEST_CASE("case tokens") {
    CHECK_THROWS_AS(case_from_token("nonsense", 1), std::invalid_argument);
    CHECK_THROWS_AS(case_from_token("path:4", 1), std::invalid_argument);
    auto c = case_from_token("bipartite:2,3:d2", 1);
    CHECK(c.graph.n == 5);
    CHECK(run_case(c).verdict == Verdict::Pass);
    auto w = case_from_token("wheel:5:dinf", 1);
    CHECK(run_case(w).verdict == Verdict::Pass);
}

TEST_CASE("torsion witness outside the claimed range is informational") {
    auto r = torsion_witness(0, Budget{});
    CHECK(r.verdict == Verdict::Pass);
    CHECK(!r.note.empty());
    // The independence stage splits as a disjoint union, so the projective
    // plane sits inside whole and its Z/2 already shows at dimension 1.
    CHECK(r.computed.at(1).torsion == std::vector<long long>{2});
}

TEST_CASE("reports serialization") {
    SuiteOptions opts;
    opts.seed = 7;
    opts.filter = "complete:4";
    auto reports = run_catalog_suite(opts);
    CHECK(!reports.empty());
    CHECK(all_passed(reports));
    auto json = reports_to_json(reports);
    CHECK(json.find("\"verdict\"") != std::string::npos);
    auto table = reports_summary(reports);
    CHECK(table.find("passed") != std::string::npos);
}
