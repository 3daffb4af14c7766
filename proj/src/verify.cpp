#include "fcx/verify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <set>
#include <sstream>
#include <thread>

#include "fcx/rng.hpp"
#include "json.hpp"

namespace fcx {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

HomologyProfile wedge(std::initializer_list<std::pair<int, long long>> parts) {
    HomologyProfile p;
    for (auto [q, b] : parts)
        if (b > 0) p.set_betti(q, b);
    return p;
}

HomologyProfile profile_times(const HomologyProfile& p, long long m) {
    HomologyProfile out;
    if (m <= 0) return out;
    for (const auto& [q, h] : p.entries()) {
        DimHomology scaled;
        scaled.betti = h.betti * m;
        for (long long i = 0; i < m; ++i)
            scaled.torsion.insert(scaled.torsion.end(), h.torsion.begin(), h.torsion.end());
        std::sort(scaled.torsion.begin(), scaled.torsion.end());
        out.set(q, scaled);
    }
    return out;
}

// First dimension with nontrivial reduced homology; nullopt when the whole
// profile is trivial (contractible-like).
std::optional<int> first_nontrivial(const HomologyProfile& p) {
    for (const auto& [q, h] : p.entries())
        if (!h.trivial()) return q;
    return std::nullopt;
}

std::string mismatch_detail(const HomologyProfile& got, const HomologyProfile& want) {
    std::set<int> keys;
    for (const auto& [q, h] : got.entries()) keys.insert(q);
    for (const auto& [q, h] : want.entries()) keys.insert(q);
    for (int q : keys)
        if (!(got.at(q) == want.at(q))) {
            std::ostringstream os;
            os << "dim " << q << ": expected betti " << want.at(q).betti << " torsion [";
            for (auto t : want.at(q).torsion) os << t << " ";
            os << "], got betti " << got.at(q).betti << " torsion [";
            for (auto t : got.at(q).torsion) os << t << " ";
            os << "]";
            return os.str();
        }
    return "";
}

} // namespace

long long binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// --- closed-form profiles ------------------------------------------------------

namespace {

HomologyProfile independence_cycle(int n) { // the 3-periodic table
    int r = n / 3, m = n % 3;
    if (m == 0) return wedge({{r - 1, 2}});
    if (m == 1) return wedge({{r - 1, 1}});
    return wedge({{r, 1}});
}

HomologyProfile independence_path(int k) {
    int r = k / 3, m = k % 3;
    if (m == 0) return wedge({{r - 1, 1}});
    if (m == 1) return {};
    return wedge({{r, 1}});
}

HomologyProfile cap1_path(int n) { // the 4-periodic table
    int r = n / 4, m = n % 4;
    if (m == 0) return wedge({{2 * r - 1, 1}});
    if (m == 3) return wedge({{2 * r + 1, 1}});
    return {};
}

HomologyProfile cap1_cycle(int n) {
    int r = n / 4, m = n % 4;
    if (m == 0) return wedge({{2 * r - 1, 3}});
    if (m == 1) return wedge({{2 * r - 1, 1}});
    if (m == 2) return wedge({{2 * r, 1}});
    return wedge({{2 * r + 1, 1}});
}

} // namespace

HomologyProfile expected_complete(int n, const DegreeBound& d) {
    if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
    if (d.is_finite() && d.value() < 1)
        throw std::invalid_argument("complete-graph formula needs d >= 1");
    return wedge({{1, static_cast<long long>(n - 1) * (n - 2) / 2}});
}

HomologyProfile expected_path(int n, const DegreeBound& d) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    if (d.is_finite() && d.value() == 0) return independence_path(n);
    if (d.is_finite() && d.value() == 1) return cap1_path(n);
    return {}; // trees are contractible once the cap is >= 2
}

HomologyProfile expected_cycle(int n, const DegreeBound& d) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    if (d.is_finite() && d.value() == 0) return independence_cycle(n);
    if (d.is_finite() && d.value() == 1) return cap1_cycle(n);
    return wedge({{n - 2, 1}});
}

HomologyProfile expected_chorded_cycle(int r, int k) {
    if (r < 1 || k < 1) throw std::invalid_argument("chorded cycle needs r, k >= 1");
    return wedge({{r + k - 1, 1}}); // n - 3 with n = r + k + 2
}

HomologyProfile expected_double_star(int r, int s, const DegreeBound& d) {
    if (r < 1 || s < 1) throw std::invalid_argument("double star needs r, s >= 1");
    if (d.is_unbounded()) return {}; // tree
    if (d.value() == 1) return wedge({{1, 1}});
    if (d.value() < 1) throw std::invalid_argument("double-star formula needs d >= 1");
    int dd = d.value();
    return wedge({{2 * dd - 1, binomial(r - 1, dd - 1) * binomial(s - 1, dd - 1)}});
}

HomologyProfile expected_bipartite(int n, int m, const DegreeBound& d) {
    if (n < 1 || m < 1) throw std::invalid_argument("bipartite sizes must be >= 1");
    if (d.is_unbounded()) return wedge({{2, static_cast<long long>(n - 1) * (m - 1)}});
    int dd = d.value();
    if (dd == 0) return wedge({{0, 1}});
    if (dd == 1) return wedge({{1, static_cast<long long>(n) * m - 1}});
    HomologyProfile p = wedge({{2, static_cast<long long>(n - 1) * (m - 1)}});
    long long hi = n * binomial(m - 1, dd) + m * binomial(n - 1, dd);
    return HomologyProfile::wedge_sum(p, wedge({{dd, hi}}));
}

HomologyProfile expected_multipartite(const std::vector<int>& parts, const DegreeBound& d) {
    if (d.is_finite() && d.value() < 1)
        throw std::invalid_argument("multipartite formula needs d >= 1");
    long long k = static_cast<long long>(parts.size());
    HomologyProfile p = wedge({{1, (k - 1) * (k - 2) / 2}});
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            p = HomologyProfile::wedge_sum(p, expected_bipartite(parts[i], parts[j], d));
    return p;
}

HomologyProfile expected_wheel(int rim, const DegreeBound& d) {
    if (rim < 3) throw std::invalid_argument("wheel needs rim >= 3");
    if (d.is_finite() && d.value() == 1)
        return HomologyProfile::wedge_sum(cap1_cycle(rim), wedge({{1, rim - 1}}));
    if (d.is_finite() && d.value() <= rim / 2 - 1)
        throw std::invalid_argument("wheel formula needs d > floor(rim/2) - 1 (or d = 1)");
    // Sphere from the rim cycle plus the suspended independence complex.
    return HomologyProfile::wedge_sum(wedge({{rim - 2, 1}}), independence_cycle(rim).shifted(1));
}

HomologyProfile expected_grid_p2(int k) {
    if (k < 1) throw std::invalid_argument("grid needs k >= 1");
    int r = k / 3, m = k % 3;
    if (m == 0) return wedge({{4 * r - 1, 1}});
    if (m == 1) return {};
    return wedge({{4 * r + 2, 1}});
}

HomologyProfile expected_kn_x_km(int n, int m, const DegreeBound& d) {
    if (n < 1 || m < 1) throw std::invalid_argument("factor sizes must be >= 1");
    if (d.is_unbounded() && std::min(n, m) > 2)
        throw std::invalid_argument("unbounded product formula only stated for a K_2 factor");
    if (d.is_finite() && d.value() == 0)
        return wedge({{1, static_cast<long long>(n - 1) * (m - 1)}});
    if (d.is_finite() && d.value() == 1) {
        long long prod = (static_cast<long long>(n) * m - 4) * (n - 1) * (m - 1);
        if (prod % 4 != 0) throw std::logic_error("product wedge count not divisible by 4");
        return wedge({{2, prod / 4}});
    }
    if (std::min(n, m) == 1) return {}; // edgeless product
    long long a = binomial(m, 2) * binomial(n, 3) + binomial(n, 2) * binomial(m, 3);
    long long b = binomial(m, 2) * binomial(n - 1, 3) + binomial(n, 2) * binomial(m - 1, 3);
    long long c = binomial(n - 1, 2) * binomial(m - 1, 2);
    return wedge({{4, a}, {3, b + c}});
}

HomologyProfile expected_k2_k2_kn(int n, const DegreeBound& d) {
    if (n < 1) throw std::invalid_argument("factor size must be >= 1");
    if (d.is_finite() && d.value() == 0) {
        long long w = static_cast<long long>(n - 1) * (n - 1);
        return wedge({{3, w}});
    }
    if (d.is_finite() && d.value() == 1) {
        long long half = static_cast<long long>(n - 2) * (n - 1);
        if (half % 2 != 0) throw std::logic_error("wedge count not even");
        half /= 2;
        return wedge({{5, half * half}});
    }
    long long c3 = binomial(n, 3), c3m = binomial(n - 1, 3);
    return wedge({{9, c3 * c3}, {8, 2 * c3 * c3m}, {7, c3m * c3m}});
}

// --- run_case -----------------------------------------------------------------

CaseReport run_case(const TheoremCase& c, const Budget& budget) {
    CaseReport r;
    r.id = c.id;
    r.note = c.note;
    auto t0 = Clock::now();
    try {
        if (c.expected.kind == Expected::Kind::TorsionInWindow) {
            r.computed = reduced_homology(c.graph, c.d, c.window_lo, c.window_hi, budget);
            std::optional<int> where;
            for (const auto& [q, h] : r.computed.entries())
                for (auto t : h.torsion)
                    if (t % c.expected.factor == 0) where = q;
            if (where) {
                r.verdict = Verdict::Pass;
                r.detail = "invariant factor divisible by " + std::to_string(c.expected.factor) +
                           " at dim " + std::to_string(*where);
            } else {
                r.verdict = Verdict::Fail;
                r.detail = "no invariant factor divisible by " + std::to_string(c.expected.factor) +
                           " in window";
            }
        } else {
            if (c.dual) {
                SimplicialComplex dual = alexander_dual(forest_complex(c.graph, c.d, budget));
                r.computed = full_reduced_homology_of_complex(dual, budget);
            } else {
                r.computed = full_reduced_homology(c.graph, c.d, budget);
            }
            switch (c.expected.kind) {
                case Expected::Kind::Profile: {
                    if (r.computed.same_as(c.expected.profile)) {
                        r.verdict = Verdict::Pass;
                    } else {
                        r.verdict = Verdict::Fail;
                        r.detail = mismatch_detail(r.computed, c.expected.profile);
                    }
                    break;
                }
                case Expected::Kind::Contractible: {
                    r.verdict = r.computed.all_trivial() ? Verdict::Pass : Verdict::Fail;
                    if (r.verdict == Verdict::Fail)
                        r.detail = "nontrivial homology: " + r.computed.to_string();
                    break;
                }
                case Expected::Kind::SingleSphereAtLeast: {
                    bool ok = !r.computed.has_torsion();
                    int nonzero_dims = 0, dim = 0;
                    for (const auto& [q, h] : r.computed.entries())
                        if (h.betti != 0) {
                            ++nonzero_dims;
                            dim = q;
                            ok = ok && h.betti == 1;
                        }
                    if (nonzero_dims > 1) ok = false;
                    if (nonzero_dims == 1 && dim < c.expected.min_dim) ok = false;
                    r.verdict = ok ? Verdict::Pass : Verdict::Fail;
                    r.detail = nonzero_dims == 0 ? "contractible"
                                                 : "sphere at dim " + std::to_string(dim) +
                                                       " (bound " +
                                                       std::to_string(c.expected.min_dim) + ")";
                    if (!ok) r.detail = "not a single sphere above bound: " + r.computed.to_string();
                    break;
                }
                default: break;
            }
        }
    } catch (const CapacityError& e) {
        r.verdict = Verdict::Skipped;
        r.detail = e.what();
    }
    r.seconds = seconds_since(t0);
    return r;
}

// --- catalog -------------------------------------------------------------------

namespace {

std::string dtag(const DegreeBound& d) { return "d" + d.to_string(); }

TheoremCase make_case(std::string id, Graph g, DegreeBound d, Expected e) {
    TheoremCase c;
    c.id = std::move(id);
    c.graph = std::move(g);
    c.d = d;
    c.expected = std::move(e);
    return c;
}

// Seeded cactus with n <= max_n; resamples substreams deterministically.
Graph bounded_cactus(SplitMix64& rng, int max_n, bool all_cycle_no_saturated) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::uint64_t sub = rng.next();
        int blocks = 1 + static_cast<int>(SplitMix64(sub).below(4));
        Graph g = random_cactus(sub, blocks, 6);
        if (g.n > max_n) continue;
        if (all_cycle_no_saturated) {
            auto bd = block_decomposition(g);
            if (!bd.bridges.empty() || bd.sb > 0 || bd.b < 1) continue;
            if (g.min_degree() < 2) continue;
        }
        return g;
    }
    throw std::logic_error("cactus sampling failed");
}

} // namespace

std::vector<TheoremCase> results_catalog(std::uint64_t seed, int max_param) {
    auto cap = [&](int dflt) { return max_param > 0 ? std::min(max_param, dflt) : dflt; };
    std::vector<TheoremCase> cases;
    DegreeBound dinf = DegreeBound::unbounded();

    for (int n = 1; n <= cap(12); ++n)
        for (const auto& d : {DegreeBound::finite(0), DegreeBound::finite(1),
                              DegreeBound::finite(2), dinf})
            cases.push_back(make_case("path:" + std::to_string(n) + ":" + dtag(d), path_graph(n),
                                      d, Expected::exact(expected_path(n, d))));

    for (int n = 3; n <= cap(12); ++n)
        for (const auto& d : {DegreeBound::finite(0), DegreeBound::finite(1),
                              DegreeBound::finite(2), dinf})
            cases.push_back(make_case("cycle:" + std::to_string(n) + ":" + dtag(d),
                                      cycle_graph(n), d, Expected::exact(expected_cycle(n, d))));

    for (int n = 3; n <= cap(7); ++n)
        for (const auto& d : {DegreeBound::finite(1), DegreeBound::finite(2),
                              DegreeBound::finite(3), dinf})
            cases.push_back(make_case("complete:" + std::to_string(n) + ":" + dtag(d),
                                      complete_graph(n), d,
                                      Expected::exact(expected_complete(n, d))));

    for (int r = 1; r <= cap(7); ++r)
        for (int k = 1; k + r + 2 <= cap(9); ++k)
            cases.push_back(make_case(
                "cycle-chord:" + std::to_string(r) + "," + std::to_string(k) + ":dinf",
                cycle_with_chord(r, k), dinf, Expected::exact(expected_chorded_cycle(r, k))));

    for (int r = 1; r <= cap(5); ++r)
        for (int s = 1; s <= cap(5); ++s)
            for (const auto& d : {DegreeBound::finite(1), DegreeBound::finite(2),
                                  DegreeBound::finite(3), dinf})
                cases.push_back(make_case(
                    "double-star:" + std::to_string(r) + "," + std::to_string(s) + ":" + dtag(d),
                    double_star(r, s), d, Expected::exact(expected_double_star(r, s, d))));

    for (int n = 1; n <= cap(4); ++n)
        for (int m = n; m <= cap(4); ++m)
            for (const auto& d : {DegreeBound::finite(0), DegreeBound::finite(1),
                                  DegreeBound::finite(2), DegreeBound::finite(3), dinf})
                cases.push_back(make_case(
                    "bipartite:" + std::to_string(n) + "," + std::to_string(m) + ":" + dtag(d),
                    complete_multipartite({n, m}), d,
                    Expected::exact(expected_bipartite(n, m, d))));

    for (const auto& parts : std::vector<std::vector<int>>{{1, 1, 1}, {2, 2, 2}, {1, 2, 3},
                                                           {2, 2, 3}, {1, 1, 1, 1}})
        for (const auto& d : {DegreeBound::finite(1), DegreeBound::finite(2)}) {
            std::string ps;
            for (std::size_t i = 0; i < parts.size(); ++i)
                ps += (i ? "," : "") + std::to_string(parts[i]);
            cases.push_back(make_case("multipartite:" + ps + ":" + dtag(d),
                                      complete_multipartite(parts), d,
                                      Expected::exact(expected_multipartite(parts, d))));
        }

    for (int rim = 3; rim <= cap(8); ++rim) {
        cases.push_back(make_case("wheel:" + std::to_string(rim) + ":d1", wheel_graph(rim),
                                  DegreeBound::finite(1),
                                  Expected::exact(expected_wheel(rim, DegreeBound::finite(1)))));
        DegreeBound dmid = DegreeBound::finite(std::max(rim / 2, 2));
        cases.push_back(make_case("wheel:" + std::to_string(rim) + ":" + dtag(dmid),
                                  wheel_graph(rim), dmid,
                                  Expected::exact(expected_wheel(rim, dmid))));
        cases.push_back(make_case("wheel:" + std::to_string(rim) + ":dinf", wheel_graph(rim),
                                  dinf, Expected::exact(expected_wheel(rim, dinf))));
    }

    // Cactus sweep: exact sphere for the bowtie, predicate bounds for seeded
    // samples, exact dual spheres for the all-cycle/no-saturated-block family.
    Graph bowtie = make_graph(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
    cases.push_back(make_case("cactus:bowtie:dinf", bowtie, dinf,
                              Expected::exact(wedge({{2, 1}}))));
    SplitMix64 rng(seed);
    for (int i = 0; i < 50; ++i) {
        Graph g = bounded_cactus(rng, 14, false);
        auto bd = block_decomposition(g);
        cases.push_back(make_case("cactus:rand" + std::to_string(i) + ":dinf", g, dinf,
                                  Expected::sphere_at_least(g.n - bd.b - 1)));
    }
    for (int i = 0; i < 50; ++i) {
        Graph g = bounded_cactus(rng, 14, true);
        auto bd = block_decomposition(g);
        TheoremCase c = make_case("cactus-dual:rand" + std::to_string(i), g, dinf,
                                  Expected::exact(wedge({{bd.b - 2, 1}})));
        c.dual = true;
        c.note = "dual sphere dimension b-2 (forced by Alexander duality against the "
                 "S^(n-b-1) primal sphere; the b-1 variant fails this check)";
        cases.push_back(c);
        cases.push_back(make_case("cactus:no-saturated" + std::to_string(i) + ":dinf", g, dinf,
                                  Expected::exact(wedge({{g.n - bd.b - 1, 1}}))));
    }

    for (int k = 1; k <= cap(8); ++k)
        cases.push_back(make_case("grid-p2xp:" + std::to_string(k) + ":dinf",
                                  cartesian_product(path_graph(2), path_graph(k)), dinf,
                                  Expected::exact(expected_grid_p2(k))));

    auto knxkm = [&](int n, int m, DegreeBound d) {
        cases.push_back(make_case(
            "product-knxkm:" + std::to_string(n) + "," + std::to_string(m) + ":" + dtag(d),
            categorical_product(complete_graph(n), complete_graph(m)), d,
            Expected::exact(expected_kn_x_km(n, m, d))));
    };
    for (int n = 2; n <= cap(4); ++n)
        for (int m = n; m <= cap(4); ++m) knxkm(n, m, DegreeBound::finite(0));
    for (int n = 2; n <= cap(3); ++n)
        for (int m = n; m <= cap(3); ++m) knxkm(n, m, DegreeBound::finite(1));
    knxkm(2, 4, DegreeBound::finite(1));
    knxkm(2, 3, DegreeBound::finite(2));
    knxkm(2, 4, DegreeBound::finite(2));
    knxkm(3, 3, DegreeBound::finite(2));
    knxkm(2, 4, DegreeBound::finite(3)); // cap-raise invariance
    knxkm(2, 4, dinf);

    auto k2k2kn = [&](int n, DegreeBound d) {
        Graph g = categorical_product(categorical_product(complete_graph(2), complete_graph(2)),
                                      complete_graph(n));
        cases.push_back(make_case("product-k2k2kn:" + std::to_string(n) + ":" + dtag(d), g, d,
                                  Expected::exact(expected_k2_k2_kn(n, d))));
    };
    k2k2kn(3, DegreeBound::finite(0));
    k2k2kn(4, DegreeBound::finite(0));
    k2k2kn(3, DegreeBound::finite(1));
    k2k2kn(4, DegreeBound::finite(1));
    k2k2kn(3, DegreeBound::finite(2));

    // Torsion carriers: the projective-plane profile and its join witness.
    HomologyProfile rp2;
    rp2.set(1, DimHomology{0, {2}});
    cases.push_back(make_case("rp2-independence:d0", rp2_barycentric_complement(),
                              DegreeBound::finite(0), Expected::exact(rp2)));
    {
        TheoremCase c;
        c.id = "torsion-witness:d3";
        c.graph = join_graphs(path_graph(4), rp2_barycentric_complement());
        c.d = DegreeBound::finite(3);
        c.expected = Expected::torsion(2);
        c.window_lo = 1;
        c.window_hi = 3;
        cases.push_back(c);
    }
    return cases;
}

TheoremCase case_from_token(const std::string& token, std::uint64_t seed) {
    auto catalog_match = [&](const std::string& tok) -> std::optional<TheoremCase> {
        for (auto& c : results_catalog(seed))
            if (c.id == tok) return c;
        return std::nullopt;
    };
    if (auto c = catalog_match(token)) return *c;
    // Fall back to family:params:dX construction with profile formulas.
    std::vector<std::string> parts;
    std::stringstream ss(token);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() != 3 || parts[2].size() < 2 || parts[2][0] != 'd')
        throw std::invalid_argument("bad case token '" + token + "'");
    DegreeBound d = DegreeBound::parse(parts[2].substr(1));
    std::vector<int> nums;
    std::stringstream ps(parts[1]);
    while (std::getline(ps, item, ',')) nums.push_back(std::stoi(item));
    const std::string& fam = parts[0];
    auto need = [&](std::size_t k) {
        if (nums.size() != k)
            throw std::invalid_argument("case '" + token + "' needs " + std::to_string(k) +
                                        " parameters");
    };
    if (fam == "path") {
        need(1);
        return make_case(token, path_graph(nums[0]), d,
                         Expected::exact(expected_path(nums[0], d)));
    }
    if (fam == "cycle") {
        need(1);
        return make_case(token, cycle_graph(nums[0]), d,
                         Expected::exact(expected_cycle(nums[0], d)));
    }
    if (fam == "complete") {
        need(1);
        return make_case(token, complete_graph(nums[0]), d,
                         Expected::exact(expected_complete(nums[0], d)));
    }
    if (fam == "cycle-chord") {
        need(2);
        return make_case(token, cycle_with_chord(nums[0], nums[1]), d,
                         Expected::exact(expected_chorded_cycle(nums[0], nums[1])));
    }
    if (fam == "double-star") {
        need(2);
        return make_case(token, double_star(nums[0], nums[1]), d,
                         Expected::exact(expected_double_star(nums[0], nums[1], d)));
    }
    if (fam == "bipartite") {
        need(2);
        return make_case(token, complete_multipartite({nums[0], nums[1]}), d,
                         Expected::exact(expected_bipartite(nums[0], nums[1], d)));
    }
    if (fam == "multipartite")
        return make_case(token, complete_multipartite(nums), d,
                         Expected::exact(expected_multipartite(nums, d)));
    if (fam == "wheel") {
        need(1);
        return make_case(token, wheel_graph(nums[0]), d,
                         Expected::exact(expected_wheel(nums[0], d)));
    }
    if (fam == "grid-p2xp") {
        need(1);
        return make_case(token, cartesian_product(path_graph(2), path_graph(nums[0])), d,
                         Expected::exact(expected_grid_p2(nums[0])));
    }
    if (fam == "knxkm" || fam == "product-knxkm") {
        need(2);
        return make_case(token,
                         categorical_product(complete_graph(nums[0]), complete_graph(nums[1])),
                         d, Expected::exact(expected_kn_x_km(nums[0], nums[1], d)));
    }
    if (fam == "k2k2kn" || fam == "product-k2k2kn") {
        need(1);
        Graph g = categorical_product(
            categorical_product(complete_graph(2), complete_graph(2)), complete_graph(nums[0]));
        return make_case(token, g, d, Expected::exact(expected_k2_k2_kn(nums[0], d)));
    }
    throw std::invalid_argument("unknown case family '" + fam + "'");
}

// --- properties -------------------------------------------------------------------

std::string property_name(PropertyId id) {
    switch (id) {
        case PropertyId::SkeletonAgree: return "skeleton-agree";
        case PropertyId::PairConnectivity: return "pair-connectivity";
        case PropertyId::F1Flagness: return "f1-flagness";
        case PropertyId::SmallOrderClass: return "small-order-class";
        case PropertyId::BridgeInvariance: return "bridge-invariance";
        case PropertyId::NoCycleVertex: return "no-cycle-vertex";
        case PropertyId::MinDegreeOne: return "min-degree-one";
        case PropertyId::Degree2Suspension: return "degree2-suspension";
        case PropertyId::ForestCount: return "forest-count";
        case PropertyId::GirthVanishing: return "girth-vanishing";
        case PropertyId::DisjointJoin: return "disjoint-join";
        case PropertyId::ConeLemma: return "cone-lemma";
        case PropertyId::JoinLemmaHomology: return "join-lemma-homology";
        case PropertyId::AlexanderDuality: return "alexander-duality";
        case PropertyId::ConnDisjoint: return "conn-disjoint";
    }
    return "?";
}

std::vector<PropertyId> all_properties() {
    return {PropertyId::SkeletonAgree,    PropertyId::PairConnectivity,
            PropertyId::F1Flagness,       PropertyId::SmallOrderClass,
            PropertyId::BridgeInvariance, PropertyId::NoCycleVertex,
            PropertyId::MinDegreeOne,     PropertyId::Degree2Suspension,
            PropertyId::ForestCount,      PropertyId::GirthVanishing,
            PropertyId::DisjointJoin,     PropertyId::ConeLemma,
            PropertyId::JoinLemmaHomology, PropertyId::AlexanderDuality,
            PropertyId::ConnDisjoint};
}

std::optional<PropertyId> property_from_name(const std::string& name) {
    for (auto id : all_properties())
        if (property_name(id) == name) return id;
    return std::nullopt;
}

namespace {

struct PropOutcome {
    bool ok = true;
    std::string detail;
    HomologyProfile computed;
};

PropOutcome prop_skeleton_agree(const Graph& g, int d, const Budget& budget) {
    for (int i = 0; i <= d; ++i) {
        auto a = faces_of_dim(g, DegreeBound::finite(d), i, budget);
        auto b = faces_of_dim(g, DegreeBound::finite(d + 1), i, budget);
        auto c = faces_of_dim(g, DegreeBound::unbounded(), i, budget);
        if (a != b || a != c)
            return {false, "skeleta differ at dim " + std::to_string(i), {}};
    }
    return {};
}

PropOutcome prop_pair_connectivity(const Graph& g, int d, const Budget& budget) {
    PropOutcome out;
    out.computed = relative_homology(g, DegreeBound::finite(d), DegreeBound::finite(d + 1), 0,
                                     d, budget);
    if (!out.computed.all_trivial()) {
        out.ok = false;
        out.detail = "relative homology nonzero at or below d";
    }
    return out;
}

PropOutcome prop_f1_flagness(const Graph& g, const Budget&) {
    if (g.n > 16) throw CapacityError("flagness scan is exhaustive; n > 16");
    DegreeBound one = DegreeBound::finite(1);
    // Non-faces of dimension 2 decide the implication.
    std::vector<std::uint32_t> bad;
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b)
            for (int c = b + 1; c < g.n; ++c) {
                VertexSet t = VertexSet::of({a, b, c});
                if (!induced_forest_check(g, t, one))
                    bad.push_back((1u << a) | (1u << b) | (1u << c));
            }
    std::uint32_t total = std::uint32_t{1} << g.n;
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        bool all3 = true;
        for (auto t : bad)
            if ((mask & t) == t) {
                all3 = false;
                break;
            }
        if (!all3) continue;
        VertexSet s;
        for (int v = 0; v < g.n; ++v)
            if (mask >> v & 1) s.set(v);
        if (!induced_forest_check(g, s, one))
            return {false, "2-skeleton present but " + s.to_string() + " is not a face", {}};
    }
    return {};
}

PropOutcome prop_bridge_invariance(const Graph& g0, const Budget& budget) {
    Graph g = g0;
    auto bd = block_decomposition(g);
    if (bd.bridges.empty()) {
        if (g.n == 0) return {};
        auto e = g.edges();
        e.emplace_back(0, g.n);
        g = make_graph(g.n + 1, e); // pendant edge is a bridge
        bd = block_decomposition(g);
    }
    DegreeBound dinf = DegreeBound::unbounded();
    SimplicialComplex whole = forest_complex(g, dinf, budget);
    for (auto [u, v] : bd.bridges) {
        SimplicialComplex cut = forest_complex(delete_edge(g, u, v), dinf, budget);
        if (whole != cut)
            return {false,
                    "complex changed after deleting bridge (" + std::to_string(u) + "," +
                        std::to_string(v) + ")",
                    {}};
    }
    return {};
}

PropOutcome prop_no_cycle_vertex(const Graph& g, const Budget& budget) {
    if (g.n == 0) return {};
    // Two copies bridged through a fresh vertex, which then lies on no cycle.
    Graph two = disjoint_union(g, g);
    auto e = two.edges();
    e.emplace_back(0, two.n);
    e.emplace_back(g.n, two.n);
    Graph h = make_graph(two.n + 1, e);
    PropOutcome out;
    out.computed = full_reduced_homology(h, DegreeBound::unbounded(), budget);
    if (!out.computed.all_trivial()) {
        out.ok = false;
        out.detail = "expected contractible, got " + out.computed.to_string();
    }
    return out;
}

PropOutcome prop_min_degree_one(const Graph& g, const Budget& budget) {
    if (g.n == 0) return {};
    auto e = g.edges();
    e.emplace_back(0, g.n);
    Graph h = make_graph(g.n + 1, e);
    PropOutcome out;
    out.computed = full_reduced_homology(h, DegreeBound::unbounded(), budget);
    if (!out.computed.all_trivial()) {
        out.ok = false;
        out.detail = "expected contractible, got " + out.computed.to_string();
    }
    return out;
}

PropOutcome prop_degree2_suspension(const Graph& g, std::uint64_t seed, const Budget& budget) {
    if (g.n < 2) return {};
    SplitMix64 rng(seed);
    int v1 = static_cast<int>(rng.below(g.n));
    int v2 = static_cast<int>(rng.below(g.n - 1));
    if (v2 >= v1) ++v2;
    auto e = g.edges();
    e.emplace_back(v1, g.n);
    e.emplace_back(v2, g.n);
    Graph h = make_graph(g.n + 1, e);
    DegreeBound dinf = DegreeBound::unbounded();
    PropOutcome out;
    out.computed = full_reduced_homology(h, dinf, budget);
    SimplicialComplex K = forest_complex(h, dinf, budget);
    for (int vi : {v1, v2}) {
        SimplicialComplex L = link(K, VertexSet::of({vi}));
        HomologyProfile lp = full_reduced_homology_of_complex(L, budget).shifted(1);
        if (!out.computed.same_as(lp)) {
            out.ok = false;
            out.detail = "suspension shift failed at neighbor " + std::to_string(vi) + ": " +
                         mismatch_detail(out.computed, lp);
            return out;
        }
    }
    return out;
}

PropOutcome prop_forest_count(const Graph& g, const DegreeBound& d, const Budget& budget) {
    PropOutcome out;
    out.computed = full_reduced_homology(g, d, budget);
    for (const auto& [q, h] : out.computed.entries()) {
        if (h.trivial() || q < 0) continue;
        long long count = static_cast<long long>(faces_of_dim(g, d, q, budget).size());
        if (count < q + 2)
            return {false,
                    "H~" + std::to_string(q) + " nonzero but only " + std::to_string(count) +
                        " faces of that dimension",
                    out.computed};
    }
    return out;
}

PropOutcome prop_girth_vanishing(const Graph& g, const Budget& budget) {
    int gg = girth(g);
    PropOutcome out;
    if (gg == kGirthInfinity) {
        out.computed = full_reduced_homology(g, DegreeBound::unbounded(), budget);
        if (!out.computed.all_trivial())
            return {false, "forest with noncontractible complex", out.computed};
        return out;
    }
    out.computed = reduced_homology(g, DegreeBound::unbounded(), -1, gg - 3, budget);
    if (!out.computed.all_trivial())
        return {false, "homology below girth-2 nonzero", out.computed};
    return out;
}

PropOutcome prop_disjoint_join(const Graph& g, std::uint64_t seed, const Budget& budget) {
    SplitMix64 rng(seed);
    Graph h = random_graph(rng.next(), 1 + static_cast<int>(rng.below(4)));
    for (const auto& d : {DegreeBound::finite(0), DegreeBound::finite(1),
                          DegreeBound::unbounded()}) {
        SimplicialComplex lhs = forest_complex(disjoint_union(g, h), d, budget);
        SimplicialComplex rhs =
            join_complex(forest_complex(g, d, budget), forest_complex(h, d, budget));
        if (lhs != rhs)
            return {false, "union complex differs from join at " + dtag(d), {}};
    }
    return {};
}

PropOutcome prop_cone_lemma(const Graph& g, int d, const Budget& budget) {
    if (g.n == 0 || d < 1) return {};
    DegreeBound dd = DegreeBound::finite(d);
    Graph coned = join_graphs(g, complete_graph(1)); // apex = g.n
    SimplicialComplex K = forest_complex(coned, dd, budget);
    SimplicialComplex apex_link = link(K, VertexSet::of({g.n}));
    SimplicialComplex sk = skeleton(forest_complex(g, DegreeBound::finite(0), budget), d - 1,
                                    budget);
    if (apex_link.facets() != sk.facets())
        return {false, "apex link is not the (d-1)-skeleton of the independence complex", {}};
    PropOutcome out;
    out.computed = full_reduced_homology_of_complex(K, budget);
    SimplicialComplex glued = add_cone_over_subcomplex(forest_complex(g, dd, budget), sk);
    HomologyProfile gp = full_reduced_homology_of_complex(glued, budget);
    if (!out.computed.same_as(gp))
        return {false, "cone profile mismatch: " + mismatch_detail(out.computed, gp),
                out.computed};
    return out;
}

PropOutcome prop_join_lemma(const Graph& g, int d, std::uint64_t seed, const Budget& budget) {
    if (g.n == 0 || d < 1) return {};
    SplitMix64 rng(seed);
    Graph h = random_graph(rng.next(), 1 + static_cast<int>(rng.below(4)));
    long long n1 = g.n, n2 = h.n;
    Graph joined = join_graphs(g, h);
    PropOutcome out;
    if (d == 1) {
        out.computed = full_reduced_homology(joined, DegreeBound::finite(1), budget);
        HomologyProfile want = HomologyProfile::wedge_sum(
            full_reduced_homology(g, DegreeBound::finite(1), budget),
            full_reduced_homology(h, DegreeBound::finite(1), budget));
        want = HomologyProfile::wedge_sum(want, wedge({{1, n1 * n2 - 1}}));
        if (!out.computed.same_as(want))
            return {false, "cap-1 join wedge mismatch: " + mismatch_detail(out.computed, want),
                    out.computed};
        return out;
    }
    DegreeBound dd = DegreeBound::finite(d);
    DegreeBound d0 = DegreeBound::finite(0);
    HomologyProfile f0g = full_reduced_homology(g, d0, budget);
    HomologyProfile f0h = full_reduced_homology(h, d0, budget);
    if (f0g.at(0).betti != 0 || f0h.at(0).betti != 0) {
        out.detail = "independence complexes not connected; decomposition clause vacuous";
        return out;
    }
    SimplicialComplex skg = skeleton(forest_complex(g, d0, budget), d - 1, budget);
    SimplicialComplex skh = skeleton(forest_complex(h, d0, budget), d - 1, budget);
    HomologyProfile want = profile_times(
        full_reduced_homology_of_complex(skg, budget).shifted(1), n2 - 1);
    want = HomologyProfile::wedge_sum(
        want, profile_times(full_reduced_homology_of_complex(skh, budget).shifted(1), n1 - 1));
    want = HomologyProfile::wedge_sum(want, wedge({{2, (n1 - 1) * (n2 - 1)}}));
    want = HomologyProfile::wedge_sum(
        want, full_reduced_homology_of_complex(
                  add_cone_over_subcomplex(forest_complex(g, dd, budget), skg), budget));
    want = HomologyProfile::wedge_sum(
        want, full_reduced_homology_of_complex(
                  add_cone_over_subcomplex(forest_complex(h, dd, budget), skh), budget));
    out.computed = full_reduced_homology(joined, dd, budget);
    if (!out.computed.same_as(want))
        return {false, "join decomposition mismatch: " + mismatch_detail(out.computed, want),
                out.computed};
    return out;
}

PropOutcome prop_alexander_duality(const Graph& g, const DegreeBound& d, const Budget& budget) {
    if (g.n > 18) throw CapacityError("duality check enumerates the dual; n > 18");
    PropOutcome out;
    out.computed = full_reduced_homology(g, d, budget);
    SimplicialComplex dual = alexander_dual(forest_complex(g, d, budget));
    HomologyProfile co = reduced_cohomology_of_complex(dual, -1, std::max(g.n - 1, 0), budget);
    for (int i = -1; i <= g.n; ++i) {
        DimHomology lhs = out.computed.at(i);
        DimHomology rhs = co.at(g.n - i - 3);
        if (!(lhs == rhs))
            return {false,
                    "H~_" + std::to_string(i) + " vs dual H^" + std::to_string(g.n - i - 3) +
                        " differ",
                    out.computed};
    }
    return out;
}

PropOutcome prop_conn_disjoint(const Graph& g, std::uint64_t seed, const Budget& budget) {
    SplitMix64 rng(seed);
    int extra = 1 + static_cast<int>(rng.below(2));
    std::vector<Graph> parts{g};
    for (int i = 0; i < extra; ++i)
        parts.push_back(random_graph(rng.next(), 1 + static_cast<int>(rng.below(4))));
    Graph all = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) all = disjoint_union(all, parts[i]);
    for (const auto& d : {DegreeBound::finite(0), DegreeBound::finite(1),
                          DegreeBound::unbounded()}) {
        bool contractible_part = false;
        long long bound = 2 * (static_cast<long long>(parts.size()) - 1);
        for (const auto& part : parts) {
            auto p = full_reduced_homology(part, d, budget);
            auto first = first_nontrivial(p);
            if (!first) {
                contractible_part = true;
                break;
            }
            bound += *first - 1;
        }
        auto whole = full_reduced_homology(all, d, budget);
        for (const auto& [q, h] : whole.entries()) {
            if (h.trivial()) continue;
            if (contractible_part || q <= bound)
                return {false,
                        "connectivity bound violated at " + dtag(d) + ", dim " +
                            std::to_string(q),
                        whole};
        }
    }
    return {};
}

} // namespace

CaseReport run_property(PropertyId prop, const Graph& g, const DegreeBound& d,
                        std::uint64_t seed, const Budget& budget) {
    CaseReport r;
    r.id = "prop:" + property_name(prop);
    auto t0 = Clock::now();
    try {
        PropOutcome out;
        switch (prop) {
            case PropertyId::SkeletonAgree:
                out = prop_skeleton_agree(g, d.is_finite() ? d.value() : 2, budget);
                break;
            case PropertyId::PairConnectivity:
                out = prop_pair_connectivity(g, d.is_finite() ? d.value() : 1, budget);
                break;
            case PropertyId::F1Flagness: out = prop_f1_flagness(g, budget); break;
            case PropertyId::SmallOrderClass:
                throw std::invalid_argument("use run_small_order_class for exhaustive scans");
            case PropertyId::BridgeInvariance: out = prop_bridge_invariance(g, budget); break;
            case PropertyId::NoCycleVertex: out = prop_no_cycle_vertex(g, budget); break;
            case PropertyId::MinDegreeOne: out = prop_min_degree_one(g, budget); break;
            case PropertyId::Degree2Suspension:
                out = prop_degree2_suspension(g, seed, budget);
                break;
            case PropertyId::ForestCount: out = prop_forest_count(g, d, budget); break;
            case PropertyId::GirthVanishing: out = prop_girth_vanishing(g, budget); break;
            case PropertyId::DisjointJoin: out = prop_disjoint_join(g, seed, budget); break;
            case PropertyId::ConeLemma:
                out = prop_cone_lemma(g, d.is_finite() ? d.value() : 1, budget);
                break;
            case PropertyId::JoinLemmaHomology:
                out = prop_join_lemma(g, d.is_finite() ? d.value() : 2, seed, budget);
                break;
            case PropertyId::AlexanderDuality:
                out = prop_alexander_duality(g, d, budget);
                break;
            case PropertyId::ConnDisjoint: out = prop_conn_disjoint(g, seed, budget); break;
        }
        r.verdict = out.ok ? Verdict::Pass : Verdict::Fail;
        r.detail = out.detail;
        r.computed = out.computed;
    } catch (const CapacityError& e) {
        r.verdict = Verdict::Skipped;
        r.detail = e.what();
    }
    r.seconds = seconds_since(t0);
    return r;
}

CaseReport run_small_order_class(int order, const Budget& budget) {
    CaseReport r;
    r.id = "prop:small-order-class:order" + std::to_string(order);
    auto t0 = Clock::now();
    if (order < 3 || order > 6) {
        r.verdict = Verdict::Skipped;
        r.detail = "exhaustive scan supports orders 3..6";
        return r;
    }
    int q = order - 2;
    int m = order * (order - 1) / 2;
    std::vector<std::pair<int, int>> all_edges;
    for (int i = 0; i < order; ++i)
        for (int j = i + 1; j < order; ++j) all_edges.emplace_back(i, j);
    long long stars = 0, cycles = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (int b = 0; b < m; ++b)
            if (mask >> b & 1) edges.push_back(all_edges[b]);
        Graph g = make_graph(order, edges);
        bool star = false, cyc = false;
        if (g.component_count() == 1) {
            int deg_one = 0, deg_hub = 0, deg_two = 0;
            for (int v = 0; v < order; ++v) {
                int dv = g.degree(v);
                if (dv == 1) ++deg_one;
                if (dv == 2) ++deg_two;
                if (dv == order - 1) ++deg_hub;
            }
            star = deg_hub >= 1 && deg_one == order - 1;
            cyc = deg_two == order;
        }
        if (star) ++stars;
        if (cyc) ++cycles;
        bool hq_cap = !reduced_homology(g, DegreeBound::finite(q), q, q, budget)
                           .at(q)
                           .trivial();
        bool hq_inf = !reduced_homology(g, DegreeBound::unbounded(), q, q, budget)
                           .at(q)
                           .trivial();
        if (hq_cap != (star || cyc)) {
            r.verdict = Verdict::Fail;
            r.detail = "capped classification fails at edge mask " + std::to_string(mask);
            r.seconds = seconds_since(t0);
            return r;
        }
        if (hq_inf != cyc) {
            r.verdict = Verdict::Fail;
            r.detail = "uncapped classification fails at edge mask " + std::to_string(mask);
            r.seconds = seconds_since(t0);
            return r;
        }
    }
    r.verdict = Verdict::Pass;
    r.detail = std::to_string(std::uint64_t{1} << m) + " graphs scanned; " +
               std::to_string(stars) + " stars, " + std::to_string(cycles) + " cycles detected";
    r.seconds = seconds_since(t0);
    return r;
}

// --- oracles ---------------------------------------------------------------------

int brute_force_t_d(const Graph& g, const DegreeBound& d) {
    if (g.n > 24) throw std::invalid_argument("exhaustive scan limited to n <= 24");
    int best = 0;
    std::uint32_t total = g.n >= 32 ? 0 : (std::uint32_t{1} << g.n);
    for (std::uint32_t mask = 1; mask < total; ++mask) {
        int size = std::popcount(mask);
        if (size <= best) continue;
        VertexSet s;
        for (int v = 0; v < g.n; ++v)
            if (mask >> v & 1) s.set(v);
        if (induced_forest_check(g, s, d)) best = size;
    }
    return best;
}

CaseReport torsion_witness(int d, const Budget& budget) {
    TheoremCase c;
    c.id = "torsion-witness:d" + std::to_string(d);
    c.graph = join_graphs(path_graph(4), rp2_barycentric_complement());
    c.d = DegreeBound::finite(d);
    c.expected = Expected::torsion(2);
    c.window_lo = 1;
    c.window_hi = 3;
    if (d >= 3) return run_case(c, budget);
    // Below the claimed range the run is informational only.
    CaseReport r;
    r.id = c.id;
    r.note = "cap below claimed range (needs d >= 3); informational";
    auto t0 = Clock::now();
    try {
        r.computed = reduced_homology(c.graph, c.d, 1, 3, budget);
        r.verdict = Verdict::Pass;
        r.detail = r.computed.to_string();
    } catch (const CapacityError& e) {
        r.verdict = Verdict::Skipped;
        r.detail = e.what();
    }
    r.seconds = seconds_since(t0);
    return r;
}

// --- drivers ----------------------------------------------------------------------

std::vector<CaseReport> run_reports(const std::vector<TheoremCase>& cases, int jobs,
                                    const Budget& budget) {
    std::vector<CaseReport> reports(cases.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < cases.size(); ++i) reports[i] = run_case(cases[i], budget);
        return reports;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= cases.size()) break;
            reports[i] = run_case(cases[i], budget);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return reports;
}

std::vector<CaseReport> run_catalog_suite(const SuiteOptions& opts) {
    std::vector<TheoremCase> cases;
    for (auto& c : results_catalog(opts.seed, opts.max_param))
        if (opts.filter.empty() || c.id.find(opts.filter) != std::string::npos)
            cases.push_back(std::move(c));
    return run_reports(cases, opts.jobs, opts.budget);
}

namespace {

struct PropJob {
    PropertyId prop;
    Graph graph;
    DegreeBound d = DegreeBound::unbounded();
    std::uint64_t seed = 0;
    std::string id;
    int order = 0; // SmallOrderClass only
};

std::vector<std::pair<std::string, Graph>> named_property_instances(std::uint64_t seed) {
    std::vector<std::pair<std::string, Graph>> out;
    out.emplace_back("path7", path_graph(7));
    out.emplace_back("path12", path_graph(12));
    out.emplace_back("cycle8", cycle_graph(8));
    out.emplace_back("cycle12", cycle_graph(12));
    out.emplace_back("complete6", complete_graph(6));
    out.emplace_back("bipartite33", complete_multipartite({3, 3}));
    out.emplace_back("bipartite44", complete_multipartite({4, 4}));
    out.emplace_back("multipartite222", complete_multipartite({2, 2, 2}));
    out.emplace_back("wheel6", wheel_graph(6));
    out.emplace_back("double-star44", double_star(4, 4));
    out.emplace_back("cycle-chord33", cycle_with_chord(3, 3));
    out.emplace_back("petersen", petersen_graph());
    out.emplace_back("bowtie",
                     make_graph(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}}));
    out.emplace_back("cactus", random_cactus(seed ^ 0x5eedULL, 4, 5));
    out.emplace_back("k3xk3", categorical_product(complete_graph(3), complete_graph(3)));
    out.emplace_back("k2xk4", categorical_product(complete_graph(2), complete_graph(4)));
    out.emplace_back("grid4", cartesian_product(path_graph(2), path_graph(4)));
    out.emplace_back("grid8", cartesian_product(path_graph(2), path_graph(8)));
    out.emplace_back("k2k2k3",
                     categorical_product(
                         categorical_product(complete_graph(2), complete_graph(2)),
                         complete_graph(3)));
    return out;
}

} // namespace

std::vector<CaseReport> run_property_suite(const SuiteOptions& opts) {
    SplitMix64 rng(opts.seed);
    std::vector<Graph> random;
    std::vector<std::string> random_ids;
    for (int i = 0; i < opts.random_graphs; ++i) {
        int n = 2 + static_cast<int>(rng.below(8));
        std::uint64_t num = 3 + rng.below(5); // density 0.3 .. 0.7
        random.push_back(random_graph(rng.next(), n, num, 10));
        random_ids.push_back("rand" + std::to_string(i));
    }
    auto named = named_property_instances(opts.seed);

    std::vector<PropJob> jobs;
    auto add = [&](PropertyId p, const std::string& gid, const Graph& g, DegreeBound d,
                   std::uint64_t s) {
        PropJob j;
        j.prop = p;
        j.graph = g;
        j.d = d;
        j.seed = s;
        j.id = "prop:" + property_name(p) + ":" + gid + ":" + dtag(d);
        jobs.push_back(std::move(j));
    };

    struct Plan {
        PropertyId prop;
        std::vector<DegreeBound> random_d;
        DegreeBound named_d;
        int named_max_n;
        bool named = true;
    };
    DegreeBound dinf = DegreeBound::unbounded();
    std::vector<Plan> plans = {
        {PropertyId::SkeletonAgree,
         {DegreeBound::finite(0), DegreeBound::finite(1), DegreeBound::finite(2),
          DegreeBound::finite(3)},
         DegreeBound::finite(2), 16, true},
        {PropertyId::PairConnectivity,
         {DegreeBound::finite(0), DegreeBound::finite(1), DegreeBound::finite(2)},
         DegreeBound::finite(2), 16, true},
        {PropertyId::F1Flagness, {DegreeBound::finite(1)}, DegreeBound::finite(1), 16, true},
        {PropertyId::BridgeInvariance, {dinf}, dinf, 16, true},
        {PropertyId::GirthVanishing, {dinf}, dinf, 16, true},
        {PropertyId::DisjointJoin,
         {DegreeBound::finite(0), DegreeBound::finite(1), dinf},
         dinf, 16, true},
        {PropertyId::ConeLemma,
         {DegreeBound::finite(1), DegreeBound::finite(2), DegreeBound::finite(3)},
         DegreeBound::finite(1), 16, true},
        {PropertyId::Degree2Suspension, {dinf}, dinf, 16, true},
        {PropertyId::ForestCount,
         {DegreeBound::finite(0), DegreeBound::finite(1), dinf},
         DegreeBound::finite(1), 16, true},
        {PropertyId::AlexanderDuality,
         {DegreeBound::finite(0), DegreeBound::finite(1), DegreeBound::finite(2), dinf},
         dinf, 16, true},
        {PropertyId::NoCycleVertex, {dinf}, dinf, 9, true},
        {PropertyId::MinDegreeOne, {dinf}, dinf, 9, true},
        {PropertyId::JoinLemmaHomology,
         {DegreeBound::finite(1), DegreeBound::finite(2)},
         DegreeBound::finite(2), 9, true},
        {PropertyId::ConnDisjoint,
         {DegreeBound::finite(0), DegreeBound::finite(1), dinf},
         dinf, 9, true},
    };
    for (const auto& plan : plans) {
        for (std::size_t i = 0; i < random.size(); ++i)
            for (const auto& d : plan.random_d)
                add(plan.prop, random_ids[i], random[i], d, opts.seed ^ (i * 7919 + 13));
        if (plan.named)
            for (const auto& [gid, g] : named)
                if (g.n <= plan.named_max_n)
                    add(plan.prop, gid, g, plan.named_d, opts.seed ^ 0xabcdULL);
    }
    for (int order = 4; order <= 6; ++order) {
        PropJob j;
        j.prop = PropertyId::SmallOrderClass;
        j.order = order;
        j.id = "prop:small-order-class:order" + std::to_string(order);
        jobs.push_back(std::move(j));
    }

    if (!opts.filter.empty()) {
        std::vector<PropJob> kept;
        for (auto& j : jobs)
            if (j.id.find(opts.filter) != std::string::npos) kept.push_back(std::move(j));
        jobs = std::move(kept);
    }

    std::vector<CaseReport> reports(jobs.size());
    auto run_one = [&](std::size_t i) {
        const PropJob& j = jobs[i];
        CaseReport r = j.prop == PropertyId::SmallOrderClass
                           ? run_small_order_class(j.order, opts.budget)
                           : run_property(j.prop, j.graph, j.d, j.seed, opts.budget);
        r.id = j.id;
        reports[i] = std::move(r);
    };
    if (opts.jobs <= 1) {
        for (std::size_t i = 0; i < jobs.size(); ++i) run_one(i);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= jobs.size()) break;
                run_one(i);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < opts.jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return reports;
}

// --- reports --------------------------------------------------------------------

namespace {
const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Skipped: return "skipped";
    }
    return "?";
}
} // namespace

std::string reports_to_json(const std::vector<CaseReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) {
        nlohmann::json dims = nlohmann::json::object();
        for (const auto& [q, h] : r.computed.entries())
            dims[std::to_string(q)] = {{"betti", h.betti}, {"torsion", h.torsion}};
        nlohmann::json item = {{"id", r.id},
                               {"verdict", verdict_name(r.verdict)},
                               {"detail", r.detail},
                               {"seconds", r.seconds},
                               {"profile", {{"dims", dims}, {"euler", r.computed.euler()}}}};
        if (!r.note.empty()) item["note"] = r.note;
        arr.push_back(item);
    }
    return arr.dump(2) + "\n";
}

std::string reports_summary(const std::vector<CaseReport>& reports) {
    std::ostringstream os;
    long long pass = 0, fail = 0, skip = 0;
    for (const auto& r : reports) {
        switch (r.verdict) {
            case Verdict::Pass: ++pass; break;
            case Verdict::Fail: ++fail; break;
            case Verdict::Skipped: ++skip; break;
        }
    }
    for (const auto& r : reports) {
        if (r.verdict == Verdict::Pass && reports.size() > 200) continue; // keep logs short
        os << verdict_name(r.verdict) << "  " << r.id;
        if (!r.detail.empty()) os << "  -- " << r.detail;
        if (!r.note.empty()) os << "  [" << r.note << "]";
        os << "\n";
    }
    os << "total " << reports.size() << ": " << pass << " passed, " << fail << " failed, "
       << skip << " skipped\n";
    return os.str();
}

bool all_passed(const std::vector<CaseReport>& reports) {
    for (const auto& r : reports)
        if (r.verdict == Verdict::Fail) return false;
    return true;
}

bool any_skipped(const std::vector<CaseReport>& reports) {
    for (const auto& r : reports)
        if (r.verdict == Verdict::Skipped) return true;
    return false;
}

} // namespace fcx
