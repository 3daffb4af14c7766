#ifndef FCX_VERIFY_HPP
#define FCX_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fcx/graph.hpp"
#include "fcx/homology.hpp"
#include "fcx/limits.hpp"

namespace fcx {

// --- catalog cases ----------------------------------------------------------

// What a catalog case asserts about the computed profile.
struct Expected {
    enum class Kind {
        Profile,            // exact match, torsion included
        Contractible,       // all reduced homology trivial
        SingleSphereAtLeast,// trivial, or a single Z in one dimension >= min_dim
        TorsionInWindow,    // some invariant factor divisible by `factor`
    };

    Kind kind = Kind::Contractible;
    HomologyProfile profile;
    int min_dim = 0;
    long long factor = 2;

    static Expected exact(HomologyProfile p) {
        Expected e;
        e.kind = Kind::Profile;
        e.profile = std::move(p);
        return e;
    }
    static Expected contractible() { return Expected{}; }
    static Expected sphere_at_least(int dim) {
        Expected e;
        e.kind = Kind::SingleSphereAtLeast;
        e.min_dim = dim;
        return e;
    }
    static Expected torsion(long long factor) {
        Expected e;
        e.kind = Kind::TorsionInWindow;
        e.factor = factor;
        return e;
    }
};

struct TheoremCase {
    std::string id;
    Graph graph;
    DegreeBound d = DegreeBound::unbounded();
    Expected expected;
    bool dual = false;        // check the Alexander dual of the forest complex
    int window_lo = 0;        // only for TorsionInWindow
    int window_hi = 0;
    std::string note;
};

enum class Verdict { Pass, Fail, Skipped };

struct CaseReport {
    std::string id;
    Verdict verdict = Verdict::Skipped;
    std::string detail;
    HomologyProfile computed;
    double seconds = 0;
    std::string note;
};

CaseReport run_case(const TheoremCase& c, const Budget& = {});

// --- closed-form expected profiles -------------------------------------------
// Evaluated from parameters at runtime; parameters outside a formula's stated
// validity raise std::invalid_argument.

HomologyProfile expected_complete(int n, const DegreeBound& d);          // d >= 1
HomologyProfile expected_path(int n, const DegreeBound& d);              // any d
HomologyProfile expected_cycle(int n, const DegreeBound& d);             // any d
HomologyProfile expected_chorded_cycle(int r, int k);                    // unbounded
HomologyProfile expected_double_star(int r, int s, const DegreeBound& d);
HomologyProfile expected_bipartite(int n, int m, const DegreeBound& d);
HomologyProfile expected_multipartite(const std::vector<int>& parts, const DegreeBound& d);
HomologyProfile expected_wheel(int rim, const DegreeBound& d);
HomologyProfile expected_grid_p2(int k);                                 // unbounded
HomologyProfile expected_kn_x_km(int n, int m, const DegreeBound& d);
HomologyProfile expected_k2_k2_kn(int n, const DegreeBound& d);          // d >= 1

long long binomial(long long n, long long k);

// The desk-scale catalog sweep. max_param > 0 caps family size parameters.
std::vector<TheoremCase> results_catalog(std::uint64_t seed, int max_param = 0);

// A single case from a token like "bipartite:3,3:d2" or "cycle:8:dinf".
TheoremCase case_from_token(const std::string& token, std::uint64_t seed);

// --- property suites -----------------------------------------------------------

enum class PropertyId {
    SkeletonAgree,
    PairConnectivity,
    F1Flagness,
    SmallOrderClass,
    BridgeInvariance,
    NoCycleVertex,
    MinDegreeOne,
    Degree2Suspension,
    ForestCount,
    GirthVanishing,
    DisjointJoin,
    ConeLemma,
    JoinLemmaHomology,
    AlexanderDuality,
    ConnDisjoint,
};

std::string property_name(PropertyId id);
std::optional<PropertyId> property_from_name(const std::string& name);
std::vector<PropertyId> all_properties();

// Checks one structural property on one input graph. `seed` drives any
// auxiliary random inputs the property needs (second join factor, etc).
CaseReport run_property(PropertyId prop, const Graph& g, const DegreeBound& d,
                        std::uint64_t seed, const Budget& = {});

// Exhaustive scan over all labeled graphs of the given order (4..6).
CaseReport run_small_order_class(int order, const Budget& = {});

// --- oracles ----------------------------------------------------------------------

// Maximum over all 2^n subsets passing induced_forest_check; n <= 24.
int brute_force_t_d(const Graph& g, const DegreeBound& d);

// Join of P_4 with the barycentric projective-plane complement; asserts an
// invariant factor divisible by 2 in homology dimensions 1..3 when d >= 3.
CaseReport torsion_witness(int d, const Budget& = {});

// --- suite drivers -------------------------------------------------------------------

struct SuiteOptions {
    std::string filter;         // substring of case id; empty = all
    std::uint64_t seed = 1;
    int jobs = 1;
    Budget budget;
    int max_param = 0;          // cap on family size parameters (0 = defaults)
    int random_graphs = 100;    // property-suite sample size
};

std::vector<CaseReport> run_catalog_suite(const SuiteOptions& opts);
std::vector<CaseReport> run_property_suite(const SuiteOptions& opts);
std::vector<CaseReport> run_reports(const std::vector<TheoremCase>& cases, int jobs,
                                    const Budget& budget);

std::string reports_to_json(const std::vector<CaseReport>& reports);
std::string reports_summary(const std::vector<CaseReport>& reports);
bool all_passed(const std::vector<CaseReport>& reports);
bool any_skipped(const std::vector<CaseReport>& reports);

} // namespace fcx

#endif // FCX_VERIFY_HPP
