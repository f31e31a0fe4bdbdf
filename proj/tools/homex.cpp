// homex: exact H-coloring counts, chromatic-type polynomials, bounds, and
// extremal searches over small graph families, with machine-readable output.
//
// Exit codes: 0 success/confirmed, 2 ran but the headline property was not
// observed, 64 usage error, 65 resource-cap refusal.

#include <homex/chrompoly.hpp>
#include <homex/enumerate.hpp>
#include <homex/errors.hpp>
#include <homex/extremal.hpp>
#include <homex/families.hpp>
#include <homex/graph_io.hpp>
#include <homex/homcount.hpp>
#include <homex/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using njson = nlohmann::ordered_json;
using namespace homex;

long long elapsed_millis(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
}

std::vector<int> family_args(const std::string & spec)
{
    std::vector<int> args;
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        return args;
    std::istringstream in(spec.substr(colon + 1));
    std::string item;
    while (std::getline(in, item, ','))
        args.push_back(std::stoi(item));
    return args;
}

int run_count(const std::string & g_spec, const std::string & h_spec, int threads, bool verbose)
{
    auto start = std::chrono::steady_clock::now();
    Graph g = parse_source_spec(g_spec);
    Graph h = parse_target_spec(h_spec);

    std::string method = "generic";
    BigInt hom;
    if (looks_like_family_spec(g_spec)) {
        std::string name = g_spec.substr(0, g_spec.find(':'));
        if (name == "P") {
            method = "path";
            hom = count_hom_path(g.vertex_count(), h);
        }
        else if (name == "C") {
            method = "cycle";
            hom = count_hom_cycle(g.vertex_count(), h);
        }
        else if (name == "Kab") {
            std::vector<int> ab = family_args(g_spec);
            if (std::min(ab[0], ab[1]) <= 6) {
                method = "complete-bipartite";
                hom = count_hom_complete_bipartite(ab[0], ab[1], h);
            }
        }
    }
    if (method == "generic")
        hom = count_hom(g, h, threads);

    njson record;
    record["command"] = "count";
    record["g"] = g_spec;
    record["h"] = h_spec;
    record["hom"] = hom.str();
    record["method"] = method;
    if (verbose && method != "generic") {
        BigInt generic = count_hom(g, h, threads);
        record["generic_hom"] = generic.str();
        if (generic != hom)
            throw std::runtime_error("specialized count disagrees with the generic counter");
    }
    record["millis"] = elapsed_millis(start);
    std::cout << hom.str() << "\n" << record.dump() << "\n";
    return 0;
}

int run_chrompoly(const std::string & g_spec)
{
    Graph g = parse_source_spec(g_spec);
    IntPolynomial poly = chromatic_polynomial(g);
    njson record;
    record["command"] = "chrompoly";
    record["g"] = g_spec;
    record["degree"] = poly.degree();
    record["coefficients"] = poly.decimal_coefficients();   // lowest degree first
    std::cout << record.dump() << "\n";
    return 0;
}

int run_bounds(const std::string & h_spec, const std::optional<std::string> & g_spec,
               std::optional<int> delta, std::optional<int> n, int threads)
{
    Graph h = parse_target_spec(h_spec);
    njson record;
    record["command"] = "bounds";
    bool holds = false;
    if (g_spec) {
        Graph g = parse_source_spec(*g_spec);
        BigInt hom = count_hom(g, h, threads);
        BigInt upper = structural_upper_bound(g, h);
        holds = hom <= upper;
        record["g"] = *g_spec;
        record["h"] = h_spec;
        record["hom"] = hom.str();
        record["structural_upper_bound"] = upper.str();
        record["delta_max"] = degree_profile(h).max_degree;
        if (is_connected(h)) {
            SpectralMargin margin = spectral_margin(h);
            record["spectral_rho"] = margin.rho;
        }
        else
            record["spectral_rho"] = nullptr;
    }
    else {
        if (! delta || ! n)
            throw usage_error("bounds requires either --g, or both --delta and --n");
        SdeltaResult s = s_delta(h, *delta);
        BigInt floor = lower_bound_eq1(*delta, *n, h);
        BigInt exact = count_hom(families::complete_bipartite(*delta, *n - *delta), h, threads);
        holds = floor <= exact;
        record["h"] = h_spec;
        record["delta"] = *delta;
        record["n"] = *n;
        record["delta_max"] = s.delta_max;
        record["s_delta"] = s.s.str();
        record["eq1_lower_bound"] = floor.str();
        record["hom_kab"] = exact.str();
    }
    record["holds"] = holds;
    std::cout << record.dump() << "\n";
    return holds ? 0 : 2;
}

int run_verify(const std::string & target, std::optional<int> delta, std::optional<int> n,
               int q_max, int k_max, const std::optional<std::string> & h_spec)
{
    auto targets_or_single = [&](int default_max_vertices) {
        if (h_spec)
            return std::vector<std::pair<std::string, Graph>>{{*h_spec, parse_target_spec(*h_spec)}};
        return verify::connected_nonregular_targets(default_max_vertices);
    };
    auto grid_or_single = [&](std::vector<std::pair<int, int>> defaults) {
        if (delta && n)
            return std::vector<std::pair<int, int>>{{*delta, *n}};
        if (delta || n)
            throw usage_error("verify grids need both --delta and --n, or neither");
        return defaults;
    };

    verify::Report report;
    if (target == "lemma-path")
        report = verify::verify_lemma_path(targets_or_single(4), delta.value_or(2), k_max);
    else if (target == "lemma-endpoint")
        report = verify::verify_lemma_endpoint(targets_or_single(4), 4, std::max(4, std::min(k_max, 12)));
    else if (target == "eq1")
        report = verify::verify_eq1(grid_or_single(verify::default_eq1_grid()), targets_or_single(4));
    else if (target == "thm1")
        report = verify::verify_thm1(n ? std::vector<int>{*n} : verify::default_thm1_ns());
    else if (target == "thm2")
        report = verify::verify_thm2(grid_or_single(verify::default_thm2_grid()), q_max);
    else if (target == "edge-add")
        report = verify::verify_edge_add(grid_or_single(verify::default_edge_add_grid()), targets_or_single(5));
    else if (target == "cn-k4")
        report = verify::verify_cn_k4(n.value_or(8));
    else
        throw usage_error("unknown verify target: " + target +
                          " (expected lemma-path, lemma-endpoint, eq1, thm1, thm2, edge-add, cn-k4)");

    std::cout << report.to_json().dump(2) << "\n";
    return report.pass ? 0 : 2;
}

int run_search(int n, int delta, const std::string & h_spec, bool disconnected,
               std::optional<int> k_connected, int threads, const std::optional<std::string> & csv_path)
{
    Graph h = parse_target_spec(h_spec);
    SearchReport report = find_maximizers(n, delta, h, ! disconnected, h_spec, threads, k_connected);

    bool unique = false;
    if (delta >= 1 && n - delta >= 1 && report.maximizers.size() == 1) {
        std::string kdn = to_graph6(canonicalize(families::complete_bipartite(delta, n - delta)).graph);
        unique = report.maximizers.front().first == kdn;
    }

    if (csv_path) {
        std::ofstream out(*csv_path);
        if (! out)
            throw usage_error("cannot open CSV output file: " + *csv_path);
        out << "graph6,hom\n";
        for (const auto & [g6, count] : report.rows)
            out << g6 << "," << count.str() << "\n";
    }

    njson record;
    record["command"] = "search";
    record["n"] = report.n;
    record["delta"] = report.delta;
    record["h"] = report.h_description;
    record["connected_only"] = ! disconnected;
    if (k_connected)
        record["k_connected"] = *k_connected;
    else
        record["k_connected"] = nullptr;
    record["family_size"] = report.family_size;
    record["max_hom"] = report.maximizers.empty() ? njson(nullptr) : njson(report.max_count().str());
    record["maximizers"] = njson::array();
    for (const auto & [g6, count] : report.maximizers)
        record["maximizers"].push_back({{"graph6", g6}, {"hom", count.str()}});
    record["kdn_is_unique_maximizer"] = unique;
    record["runtime_millis"] = report.runtime_millis;
    std::cout << record.dump(2) << "\n";
    return unique ? 0 : 2;
}

}

int main(int argc, char ** argv)
{
    CLI::App app{"exact H-coloring counts, bounds, and extremal searches on small graphs"};
    app.set_help_flag("--help", "print help and exit");   // frees up -h / --h for target graphs
    app.require_subcommand(1);
    int exit_code = 0;

    auto add_subcommand = [&](const std::string & name, const std::string & description) {
        CLI::App * sub = app.add_subcommand(name, description);
        sub->set_help_flag("--help", "print help and exit");
        return sub;
    };

    auto * count_cmd = add_subcommand("count", "count adjacency-preserving maps from G into H");
    std::string count_g, count_h;
    int count_threads = 1;
    bool count_verbose = false;
    count_cmd->add_option("--g", count_g, "source graph: family spec, graph6 literal, or file")->required();
    count_cmd->add_option("--h", count_h, "target graph: family spec or H-format file")->required();
    count_cmd->add_option("--threads", count_threads, "internal parallelism (output-invariant)");
    count_cmd->add_flag("--verbose", count_verbose, "cross-check specialized counts against the generic counter");
    count_cmd->callback([&] { exit_code = run_count(count_g, count_h, count_threads, count_verbose); });

    auto * chrompoly_cmd = add_subcommand("chrompoly", "exact chromatic polynomial of a source graph");
    std::string chrompoly_g;
    chrompoly_cmd->add_option("--g", chrompoly_g, "source graph: family spec, graph6 literal, or file")->required();
    chrompoly_cmd->callback([&] { exit_code = run_chrompoly(chrompoly_g); });

    auto * bounds_cmd = add_subcommand("bounds", "certified bounds for one source, or the tuple floor for K_{delta,n-delta}");
    std::string bounds_h;
    std::string bounds_g;
    int bounds_delta = 0, bounds_n = 0, bounds_threads = 1;
    bounds_cmd->add_option("--h", bounds_h, "target graph")->required();
    bounds_cmd->add_option("--g", bounds_g, "source graph for the structural upper bound");
    bounds_cmd->add_option("--delta", bounds_delta, "minimum degree for the floor mode");
    bounds_cmd->add_option("--n", bounds_n, "vertex count for the floor mode");
    bounds_cmd->add_option("--threads", bounds_threads, "internal parallelism (output-invariant)");
    bounds_cmd->callback([&] {
        exit_code = run_bounds(bounds_h,
                               bounds_cmd->count("--g") ? std::optional<std::string>(bounds_g) : std::nullopt,
                               bounds_cmd->count("--delta") ? std::optional<int>(bounds_delta) : std::nullopt,
                               bounds_cmd->count("--n") ? std::optional<int>(bounds_n) : std::nullopt,
                               bounds_threads);
    });

    auto * verify_cmd = add_subcommand("verify", "run a named verification experiment");
    std::string verify_target;
    int verify_delta = 0, verify_n = 0, verify_qmax = 50, verify_kmax = 200;
    std::string verify_h;
    verify_cmd->add_option("target", verify_target,
                           "one of: lemma-path, lemma-endpoint, eq1, thm1, thm2, edge-add, cn-k4")->required();
    verify_cmd->add_option("--delta", verify_delta, "grid override: minimum degree");
    verify_cmd->add_option("--n", verify_n, "grid override: vertex count");
    verify_cmd->add_option("--qmax", verify_qmax, "crossover sweep limit");
    verify_cmd->add_option("--kmax", verify_kmax, "path-length sweep limit");
    verify_cmd->add_option("--h", verify_h, "single-target override (family spec or H-format file)");
    verify_cmd->callback([&] {
        exit_code = run_verify(verify_target,
                               verify_cmd->count("--delta") ? std::optional<int>(verify_delta) : std::nullopt,
                               verify_cmd->count("--n") ? std::optional<int>(verify_n) : std::nullopt,
                               verify_qmax, verify_kmax,
                               verify_cmd->count("--h") ? std::optional<std::string>(verify_h) : std::nullopt);
    });

    auto * search_cmd = add_subcommand("search", "scan the (n, delta) family for hom(., H) maximizers");
    int search_n = 0, search_delta = 0, search_kconn = 0, search_threads = 1;
    std::string search_h, search_csv;
    bool search_disconnected = false;
    search_cmd->add_option("--n", search_n, "vertex count")->required();
    search_cmd->add_option("--delta", search_delta, "minimum degree")->required();
    search_cmd->add_option("--h", search_h, "target graph")->required();
    search_cmd->add_flag("--disconnected", search_disconnected, "drop the connectivity filter");
    search_cmd->add_option("--k-connected", search_kconn, "keep only k-connected graphs");
    search_cmd->add_option("--threads", search_threads, "internal parallelism (output-invariant)");
    search_cmd->add_option("--csv", search_csv, "write the full scan table (graph6, hom) to this file");
    search_cmd->callback([&] {
        exit_code = run_search(search_n, search_delta, search_h, search_disconnected,
                               search_cmd->count("--k-connected") ? std::optional<int>(search_kconn) : std::nullopt,
                               search_threads,
                               search_cmd->count("--csv") ? std::optional<std::string>(search_csv) : std::nullopt);
    });

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 64;
    }
    catch (const usage_error & e) {
        std::cerr << "error: " << e.what() << "\n";
        return 64;
    }
    catch (const cap_error & e) {
        std::cerr << "error: " << e.what() << "\n";
        return 65;
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << "\n";
        return 70;
    }
    return exit_code;
}
