#include "fcx/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "fcx/complex.hpp"
#include "fcx/graph.hpp"
#include "fcx/homology.hpp"
#include "fcx/rng.hpp"
#include "fcx/verify.hpp"
#include "json.hpp"

namespace fcx::cli {

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kStrictSkip = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& path, const std::string& data) {
    if (path.empty()) {
        std::cout << data;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << data;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

// Family mini-language: "cycle:8", "doublestar:3,3", "knxkm:3,3", "petersen",
// "cactus:4,6" (seeded), "random:9" or "random:9,3,10" (seeded).
Graph build_family(const std::string& token, bool have_seed, std::uint64_t seed) {
    auto colon = token.find(':');
    std::string name = token.substr(0, colon);
    std::vector<int> p;
    if (colon != std::string::npos) p = parse_int_list(token.substr(colon + 1));
    auto need = [&](std::size_t k) {
        if (p.size() != k)
            throw std::invalid_argument("family '" + name + "' needs " + std::to_string(k) +
                                        " parameters");
    };
    auto need_seed = [&] {
        if (!have_seed)
            throw std::invalid_argument("family '" + name + "' is randomized; pass --seed");
    };
    if (name == "path") { need(1); return path_graph(p[0]); }
    if (name == "cycle") { need(1); return cycle_graph(p[0]); }
    if (name == "complete" || name == "kn") { need(1); return complete_graph(p[0]); }
    if (name == "multipartite") return complete_multipartite(p);
    if (name == "knm" || name == "bipartite") { need(2); return complete_multipartite({p[0], p[1]}); }
    if (name == "doublestar") { need(2); return double_star(p[0], p[1]); }
    if (name == "wheel") { need(1); return wheel_graph(p[0]); }
    if (name == "cyclechord") { need(2); return cycle_with_chord(p[0], p[1]); }
    if (name == "petersen") { need(0); return petersen_graph(); }
    if (name == "rp2bc") { need(0); return rp2_barycentric_complement(); }
    if (name == "knxkm") { need(2); return categorical_product(complete_graph(p[0]), complete_graph(p[1])); }
    if (name == "p2pk" || name == "grid") {
        need(1);
        return cartesian_product(path_graph(2), path_graph(p[0]));
    }
    if (name == "k2k2kn") {
        need(1);
        return categorical_product(categorical_product(complete_graph(2), complete_graph(2)),
                                   complete_graph(p[0]));
    }
    if (name == "cactus") {
        need(2);
        need_seed();
        return random_cactus(seed, p[0], p[1]);
    }
    if (name == "random") {
        need_seed();
        if (p.size() == 1) return random_graph(seed, p[0]);
        if (p.size() == 3) return random_graph(seed, p[0], p[1], p[2]);
        throw std::invalid_argument("random family takes n or n,p_num,p_den");
    }
    throw std::invalid_argument("unknown family '" + name + "'");
}

bool family_is_randomized(const std::string& token) {
    return token.rfind("cactus", 0) == 0 || token.rfind("random", 0) == 0;
}

std::pair<int, int> parse_dims(const std::string& s) {
    auto pos = s.find("..");
    if (pos == std::string::npos)
        throw std::invalid_argument("dims must look like 'lo..hi'");
    return {std::stoi(s.substr(0, pos)), std::stoi(s.substr(pos + 2))};
}

std::string profile_table(const HomologyProfile& p) {
    std::ostringstream os;
    os << "dim  betti  torsion\n";
    for (const auto& [q, h] : p.entries()) {
        os << q << "  " << h.betti << "  [";
        for (std::size_t i = 0; i < h.torsion.size(); ++i)
            os << (i ? " " : "") << h.torsion[i];
        os << "]\n";
    }
    os << "euler " << p.euler() << "\n";
    return os.str();
}

struct CommonOpts {
    std::string family;
    std::string graph_file;
    std::uint64_t seed = 0;
    bool have_seed = false;
};

Graph load_graph(const CommonOpts& o) {
    if (!o.graph_file.empty()) {
        std::string text = read_file(o.graph_file);
        if (text.find('{') != std::string::npos) return graph_from_json(text);
        return graph_from_edge_text(text);
    }
    return build_family(o.family, o.have_seed, o.seed);
}

} // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"forest complex toolkit: build graphs and forest-complex filtrations, "
                 "compute exact integer homology, verify closed-form results"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph and write it out");
    std::string gen_family, gen_out, gen_format = "json";
    std::uint64_t gen_seed = 0;
    bool gen_has_seed = false;
    gen->add_option("--family", gen_family, "family token, e.g. cycle:8, doublestar:3,3")
        ->required();
    gen->add_option("--seed", gen_seed, "seed for randomized families")
        ->each([&](const std::string&) { gen_has_seed = true; });
    gen->add_option("--out", gen_out, "output path (default stdout)");
    gen->add_option("--format", gen_format, "json|edgelist")
        ->check(CLI::IsMember({"json", "edgelist"}));

    // complex
    auto* cpx = app.add_subcommand("complex", "build the forest complex of a graph");
    std::string cpx_family, cpx_graph, cpx_d = "inf", cpx_out;
    bool cpx_facets_only = false;
    long long cpx_budget = Budget{}.max_facets;
    auto* cpx_fam_opt = cpx->add_option("--family", cpx_family, "family token");
    cpx->add_option("--graph", cpx_graph, "graph file (json or edge list)")
        ->excludes(cpx_fam_opt);
    cpx->add_option("--d", cpx_d, "degree cap: 0,1,... or inf");
    cpx->add_option("--out", cpx_out, "output path (default stdout)");
    cpx->add_flag("--facets-only", cpx_facets_only, "write one facet per line instead of json");
    cpx->add_option("--budget-facets", cpx_budget, "facet budget");

    // hom
    auto* hom = app.add_subcommand("hom", "compute reduced integer homology");
    std::string hom_family, hom_graph, hom_complex, hom_d = "inf", hom_dims, hom_out,
                hom_format = "json";
    long long hom_budget = Budget{}.max_faces_per_dim;
    auto* hom_fam_opt = hom->add_option("--family", hom_family, "family token");
    auto* hom_graph_opt =
        hom->add_option("--graph", hom_graph, "graph file")->excludes(hom_fam_opt);
    auto* hom_d_opt = hom->add_option("--d", hom_d, "degree cap: 0,1,... or inf");
    hom->add_option("--complex", hom_complex, "complex file (json)")
        ->excludes(hom_fam_opt)
        ->excludes(hom_graph_opt)
        ->excludes(hom_d_opt);
    hom->add_option("--dims", hom_dims, "dimension window lo..hi (default: full range)");
    hom->add_option("--format", hom_format, "json|table")
        ->check(CLI::IsMember({"json", "table"}));
    hom->add_option("--out", hom_out, "output path (default stdout)");
    hom->add_option("--budget-faces", hom_budget, "max faces per dimension");

    // boundary
    auto* bnd = app.add_subcommand("boundary", "export one boundary matrix as triplet text");
    std::string bnd_family, bnd_graph, bnd_d = "inf", bnd_out;
    int bnd_q = 1;
    bnd->add_option("--family", bnd_family, "family token");
    bnd->add_option("--graph", bnd_graph, "graph file");
    bnd->add_option("--d", bnd_d, "degree cap");
    bnd->add_option("--q", bnd_q, "boundary dimension (columns are q-faces)")->required();
    bnd->add_option("--out", bnd_out, "output path (default stdout)");

    // verify
    auto* ver = app.add_subcommand("verify", "run the verification suites");
    std::string ver_suite = "catalog", ver_filter, ver_report, ver_manifest;
    std::vector<std::string> ver_cases;
    std::uint64_t ver_seed = 0;
    bool ver_has_seed = false, ver_strict = false;
    int ver_jobs = 1, ver_maxr = 0, ver_random = 100;
    long long ver_budget = Budget{}.max_faces_per_dim;
    ver->add_option("--suite", ver_suite, "catalog|properties|all")
        ->check(CLI::IsMember({"catalog", "paper", "properties", "all"}));
    ver->add_option("--filter", ver_filter, "substring filter on case ids");
    ver->add_option("--case", ver_cases,
                    "case tokens, repeatable or ';'-separated (overrides --suite)");
    ver->add_option("--manifest", ver_manifest, "file with one case token per line");
    ver->add_option("--seed", ver_seed, "seed for randomized cases")
        ->each([&](const std::string&) { ver_has_seed = true; });
    ver->add_option("--jobs", ver_jobs, "worker pool size");
    ver->add_option("--max-r", ver_maxr, "cap on family size parameters");
    ver->add_option("--random-graphs", ver_random, "sample size for property suites");
    ver->add_option("--budget-faces", ver_budget, "max faces per dimension");
    ver->add_flag("--strict", ver_strict, "exit 3 if anything was skipped");
    ver->add_option("--report-out", ver_report, "write the json report here");

    // bench
    auto* ben = app.add_subcommand("bench", "time catalog cases");
    std::vector<std::string> ben_cases;
    std::string ben_out;
    int ben_reps = 3, ben_jobs = 1;
    std::uint64_t ben_seed = 1;
    ben->add_option("--case", ben_cases, "case tokens, repeatable or ';'-separated")
        ->required();
    ben->add_option("--reps", ben_reps, "repetitions per case");
    ben->add_option("--seed", ben_seed, "seed for seeded cases");
    ben->add_option("--jobs", ben_jobs, "worker pool size");
    ben->add_option("--out", ben_out, "write timing json here");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (gen->parsed()) {
            Graph g = build_family(gen_family, gen_has_seed, gen_seed);
            std::string meta = family_is_randomized(gen_family) ? kRngAlgorithm : "";
            write_output(gen_out, gen_format == "json" ? graph_to_json(g, meta, gen_seed)
                                                       : graph_to_edge_text(g));
            return kOk;
        }
        if (cpx->parsed()) {
            CommonOpts o{cpx_family, cpx_graph, 0, false};
            Graph g = load_graph(o);
            Budget budget;
            budget.max_facets = cpx_budget;
            SimplicialComplex k = forest_complex(g, DegreeBound::parse(cpx_d), budget);
            if (cpx_facets_only) {
                std::ostringstream os;
                for (const auto& f : k.facets()) {
                    auto vs = f.to_vector();
                    for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? " " : "") << vs[i];
                    os << "\n";
                }
                write_output(cpx_out, os.str());
            } else {
                write_output(cpx_out, complex_to_json(k));
            }
            return kOk;
        }
        if (hom->parsed()) {
            Budget budget;
            budget.max_faces_per_dim = hom_budget;
            HomologyProfile p;
            if (!hom_complex.empty()) {
                SimplicialComplex k = complex_from_json(read_file(hom_complex));
                if (hom_dims.empty()) {
                    p = full_reduced_homology_of_complex(k, budget);
                } else {
                    auto [lo, hi] = parse_dims(hom_dims);
                    p = reduced_homology_of_complex(k, lo, hi, budget);
                }
            } else {
                CommonOpts o{hom_family, hom_graph, 0, false};
                Graph g = load_graph(o);
                DegreeBound d = DegreeBound::parse(hom_d);
                if (hom_dims.empty()) {
                    p = full_reduced_homology(g, d, budget);
                } else {
                    auto [lo, hi] = parse_dims(hom_dims);
                    p = reduced_homology(g, d, lo, hi, budget);
                }
            }
            write_output(hom_out, hom_format == "json" ? profile_to_json(p) : profile_table(p));
            return kOk;
        }
        if (bnd->parsed()) {
            CommonOpts o{bnd_family, bnd_graph, 0, false};
            Graph g = load_graph(o);
            SparseIntMatrix m = boundary_matrix(g, DegreeBound::parse(bnd_d), bnd_q);
            write_output(bnd_out, m.to_triplet_text());
            return kOk;
        }
        if (ver->parsed()) {
            if (!ver_has_seed) {
                std::cerr << "verify requires an explicit --seed (no ambient entropy)\n";
                return kUsage;
            }
            SuiteOptions opts;
            opts.filter = ver_filter;
            opts.seed = ver_seed;
            opts.jobs = ver_jobs;
            opts.max_param = ver_maxr;
            opts.random_graphs = ver_random;
            opts.budget.max_faces_per_dim = ver_budget;
            std::vector<CaseReport> reports;
            if (!ver_cases.empty() || !ver_manifest.empty()) {
                std::vector<TheoremCase> cases;
                std::vector<std::string> tokens;
                for (const auto& entry : ver_cases) {
                    std::stringstream ss(entry);
                    std::string tok;
                    while (std::getline(ss, tok, ';'))
                        if (!tok.empty()) tokens.push_back(tok);
                }
                if (!ver_manifest.empty()) {
                    std::istringstream mf(read_file(ver_manifest));
                    std::string line;
                    while (std::getline(mf, line)) {
                        if (line.empty() || line[0] == '#') continue;
                        tokens.push_back(line);
                    }
                }
                for (const auto& t : tokens) cases.push_back(case_from_token(t, opts.seed));
                reports = run_reports(cases, opts.jobs, opts.budget);
            } else {
                if (ver_suite == "catalog" || ver_suite == "paper" || ver_suite == "all") {
                    auto r = run_catalog_suite(opts);
                    reports.insert(reports.end(), r.begin(), r.end());
                }
                if (ver_suite == "properties" || ver_suite == "all") {
                    auto r = run_property_suite(opts);
                    reports.insert(reports.end(), r.begin(), r.end());
                }
            }
            std::cout << reports_summary(reports);
            if (!ver_report.empty()) write_output(ver_report, reports_to_json(reports));
            if (!all_passed(reports)) return kFail;
            if (ver_strict && any_skipped(reports)) return kStrictSkip;
            return kOk;
        }
        if (ben->parsed()) {
            std::vector<std::string> tokens;
            for (const auto& entry : ben_cases) {
                std::stringstream ss(entry);
                std::string tok;
                while (std::getline(ss, tok, ';'))
                    if (!tok.empty()) tokens.push_back(tok);
            }
            std::ostringstream table;
            table << "case  reps  min_s  mean_s  max_s  verdict\n";
            nlohmann::json out = nlohmann::json::array();
            bool ok = true;
            for (const auto& t : tokens) {
                TheoremCase c = case_from_token(t, ben_seed);
                double mn = 0, mx = 0, total = 0;
                CaseReport last;
                for (int rep = 0; rep < ben_reps; ++rep) {
                    last = run_case(c, Budget{});
                    mn = rep == 0 ? last.seconds : std::min(mn, last.seconds);
                    mx = std::max(mx, last.seconds);
                    total += last.seconds;
                }
                ok = ok && last.verdict != Verdict::Fail;
                table << t << "  " << ben_reps << "  " << mn << "  " << total / ben_reps
                      << "  " << mx << "  "
                      << (last.verdict == Verdict::Pass
                              ? "pass"
                              : last.verdict == Verdict::Fail ? "fail" : "skipped")
                      << "\n";
                out.push_back({{"case", t},
                               {"reps", ben_reps},
                               {"min_s", mn},
                               {"mean_s", total / ben_reps},
                               {"max_s", mx}});
            }
            std::cout << table.str();
            if (!ben_out.empty()) write_output(ben_out, out.dump(2) + "\n");
            return ok ? kOk : kFail;
        }
    } catch (const CapacityError& e) {
        std::cerr << "resource budget exceeded: " << e.what() << "\n";
        return kFail;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
    return kUsage;
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args);
}

} // namespace fcx::cli
