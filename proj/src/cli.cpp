#include "dirac/cli.hpp"

#include <CLI11.hpp>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <thread>

#include "dirac/analysis.hpp"
#include "dirac/dynamics.hpp"
#include "dirac/errors.hpp"
#include "dirac/geometry.hpp"
#include "dirac/hodge.hpp"
#include "dirac/homotopy.hpp"
#include "dirac/spectral.hpp"

namespace dirac::cli {

namespace {

using nlohmann::json;

// An input is a file path or "gen:<name>[:<n>]".
Graph resolve_input(const std::string& input) {
    if (input.rfind("gen:", 0) == 0) {
        std::string rest = input.substr(4);
        auto colon = rest.find(':');
        if (colon == std::string::npos)
            return generate(rest);
        int n = 0;
        try {
            n = std::stoi(rest.substr(colon + 1));
        } catch (const std::exception&) {
            throw input_error("malformed generator spec '" + input + "'");
        }
        return generate(rest.substr(0, colon), n);
    }
    return read_graph_file(input);
}

std::vector<std::string> all_generator_inputs() {
    std::vector<std::string> inputs;
    for (const auto& name : generator_names())
        inputs.push_back("gen:" + name);
    return inputs;
}

int thread_cap() {
    if (const char* env = std::getenv("DIRAC_GRAPH_THREADS")) {
        int cap = std::atoi(env);
        if (cap > 0)
            return cap;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

struct CommonFlags {
    int max_dim = -1;
    double tolerance = 1e-8;
    std::string format = "json";
    std::string t_text = "1";
    int steps = 20;
    std::uint64_t seed = 0;
    int jobs = 0;
};

int cmd_gen(const std::string& name, std::optional<int> n,
            const std::string& out_path, std::ostream& out) {
    const Graph g = n ? generate(name, *n) : generate(name);
    const std::string text = serialize_graph(g);
    if (out_path.empty()) {
        out << text;
    } else {
        std::ofstream file(out_path);
        if (!file)
            throw input_error("cannot write '" + out_path + "'");
        file << text;
    }
    return 0;
}

int cmd_analyze(const std::vector<std::string>& inputs, const CommonFlags& flags,
                std::ostream& out) {
    AnalysisOptions options{flags.max_dim, flags.tolerance};
    if (inputs.size() == 1) {
        emit(out, analyze_graph(resolve_input(inputs[0]), options));
        return 0;
    }
    // batch mode: per-file isolation on a small worker pool
    int jobs = flags.jobs > 0 ? flags.jobs : thread_cap();
    jobs = std::min<int>(jobs, thread_cap());
    jobs = std::max(1, std::min<int>(jobs, static_cast<int>(inputs.size())));

    std::vector<json> reports(inputs.size());
    std::vector<std::exception_ptr> failures(inputs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t k = next.fetch_add(1);
            if (k >= inputs.size())
                return;
            try {
                reports[k] = analyze_graph(resolve_input(inputs[k]), options);
            } catch (...) {
                failures[k] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();
    for (std::size_t k = 0; k < inputs.size(); ++k)
        if (failures[k])
            std::rethrow_exception(failures[k]);

    json array = json::array();
    for (std::size_t k = 0; k < inputs.size(); ++k)
        array.push_back({{"input", inputs[k]}, {"report", reports[k]}});
    emit(out, array);
    return 0;
}

int cmd_spectrum(const std::string& input, bool dirac_level,
                 const CommonFlags& flags, std::ostream& out) {
    const SimplicialComplex c =
        build_complex(resolve_input(input), flags.max_dim);
    const Spectrum s = dirac_level ? dirac_spectrum(c) : laplacian_spectrum(c);
    if (flags.format == "csv")
        out << spectrum_csv(s);
    else
        emit(out, spectrum_json(s));
    return 0;
}

int cmd_betti(const std::string& input, const CommonFlags& flags,
              std::ostream& out) {
    const SimplicialComplex c =
        build_complex(resolve_input(input), flags.max_dim);
    emit(out, json{{"betti", betti(c)},
                   {"euler_characteristic", euler_characteristic(c)}});
    return 0;
}

json verify_mckean_singer(const SimplicialComplex& c, double tolerance) {
    const double tol = tolerance * std::max<double>(1.0, c.total());
    const long long chi = euler_characteristic(c);
    json rows = json::array();
    bool ok = true;
    struct Entry {
        const char* name;
        Complex t;
    };
    const Entry entries[] = {
        {"heat", {1, 0}},   {"heat", {1, 2}},  {"schrodinger", {1, 0}},
        {"schrodinger", {1, 2}}, {"sine", {0.5, 0}}, {"quartic", {0.05, 0}},
    };
    for (const auto& entry : entries) {
        for (const auto& f : mckean_singer_functions()) {
            if (f.name != entry.name)
                continue;
            const SuperTraceReport r = supertrace(c, f.f, entry.t, f.name);
            const Complex blocks = supertrace_blocks(c, f.f, entry.t);
            const double route_gap = std::abs(blocks - r.value);
            bool row_ok = r.deviation <= tol && route_gap <= tol;
            ok = ok && row_ok;
            rows.push_back({{"function", f.name},
                            {"t", format_complex(entry.t)},
                            {"deviation", round_significant(r.deviation)},
                            {"route_gap", round_significant(route_gap)},
                            {"ok", row_ok}});
        }
    }
    if (!multiplicity_pairing_ok(multiplicity_pairing(c), chi))
        ok = false;
    return {{"chi", chi}, {"rows", rows}, {"ok", ok}};
}

json verify_gauss_bonnet(const Graph& g) {
    const CurvatureReport k = curvature(g);  // throws identity_error on failure
    std::ostringstream total;
    total << k.total;
    return {{"curvature_total", total.str()},
            {"chi", euler_characteristic(build_complex(g))},
            {"ok", true}};
}

json verify_handshake(const SimplicialComplex& c) {
    const HandshakeReport report = handshake_check(c);
    json rows = json::array();
    for (const auto& row : report.rows)
        rows.push_back({{"p", row.p},
                        {"trace", row.trace},
                        {"degree_sum", row.degree_sum},
                        {"expected", row.expected},
                        {"holds", row.holds},
                        {"top", row.p == c.top_dimension()}});
    return {{"rows", rows},
            {"str_l_plus_one", report.str_l_plus_one},
            {"chi", report.chi},
            {"ok", report.ok}};
}

json verify_parity(const SimplicialComplex& c) {
    json rows = json::array();
    bool ok = true;
    for (int k = 1; k <= 3; ++k) {
        auto [even, odd] = closed_path_parity(c, k);
        ok = ok && even == odd;
        rows.push_back({{"k", k}, {"even", even}, {"odd", odd}});
    }
    return {{"rows", rows}, {"ok", ok}};
}

json verify_hodge(const SimplicialComplex& c, double tolerance,
                  std::uint64_t seed) {
    const BettiVector b = betti(c);
    bool ok = true;
    json degrees = json::array();
    for (int p = 0; p <= c.top_dimension(); ++p) {
        const auto basis = harmonic_basis(c, p);  // validates the count
        const Cochain g = random_cochain(c, seed + p, p);
        const HodgeSplit split = hodge_decompose(c, p, g);
        const double worst = std::max(
            {std::abs(split.exact.values.dot(split.coexact.values)),
             std::abs(split.exact.values.dot(split.harmonic.values)),
             std::abs(split.coexact.values.dot(split.harmonic.values))});
        bool row_ok = worst <= tolerance * std::max(1.0, g.norm() * g.norm());
        ok = ok && row_ok;
        degrees.push_back({{"p", p},
                           {"betti", b[p]},
                           {"harmonic_dim", basis.size()},
                           {"orthogonality", round_significant(worst)},
                           {"ok", row_ok}});
    }
    return {{"degrees", degrees}, {"betti", b}, {"ok", ok}};
}

int cmd_verify(const std::string& check, std::vector<std::string> inputs,
               const CommonFlags& flags, std::ostream& out) {
    if (inputs.empty())
        inputs = all_generator_inputs();
    json results = json::array();
    bool ok = true;
    for (const auto& input : inputs) {
        const Graph g = resolve_input(input);
        const SimplicialComplex c = build_complex(g, flags.max_dim);
        json result;
        if (check == "mckean-singer")
            result = verify_mckean_singer(c, flags.tolerance);
        else if (check == "gauss-bonnet")
            result = verify_gauss_bonnet(g);
        else if (check == "handshake")
            result = verify_handshake(c);
        else if (check == "parity")
            result = verify_parity(c);
        else if (check == "hodge")
            result = verify_hodge(c, flags.tolerance, flags.seed);
        else
            throw input_error("unknown verify check '" + check + "'");
        ok = ok && result.value("ok", false);
        results.push_back({{"input", input}, {"result", result}});
    }
    emit(out, json{{"check", check}, {"ok", ok}, {"results", results}});
    if (!ok)
        throw identity_error("verify " + check + " failed");
    return 0;
}

int cmd_evolve(const std::string& kind, const std::string& input,
               const CommonFlags& flags, std::ostream& out) {
    const SimplicialComplex c = build_complex(resolve_input(input), flags.max_dim);
    const Complex t = parse_complex(flags.t_text);
    if (t.imag() != 0.0 && kind != "heat")
        throw input_error("only the heat flow takes complex time");
    EvolutionTrace trace;
    if (kind == "heat") {
        trace = heat_trace(c, random_cochain(c, flags.seed), t, flags.steps);
    } else if (kind == "schrodinger") {
        trace = schrodinger_trace(c, random_cochain(c, flags.seed), t.real(),
                                  flags.steps);
    } else if (kind == "wave") {
        const Cochain u0 = random_cochain(c, flags.seed);
        const Cochain v0 = project_off_kernel(c, random_cochain(c, flags.seed + 1));
        trace = wave_trace(c, u0, v0, t.real(), flags.steps);
    } else if (kind == "map") {
        const double scale = default_map_scale(c);
        trace = map_trace(c, random_cochain(c, flags.seed),
                          random_cochain(c, flags.seed + 1), flags.steps, scale);
    } else {
        throw input_error("unknown evolution kind '" + kind + "'");
    }
    out << evolution_csv(trace);
    return 0;
}

int cmd_compare(const std::string& input_a, const std::string& input_b,
                const CommonFlags& flags, std::ostream& out) {
    const SimplicialComplex cg = build_complex(resolve_input(input_a), flags.max_dim);
    const SimplicialComplex ch = build_complex(resolve_input(input_b), flags.max_dim);
    const DistanceReport report = spectral_distance(cg, ch);
    std::ostringstream d;
    d << report.simplex_distance;
    json levels = json::array();
    for (auto level : {SpectralLevel::Adjacency, SpectralLevel::L0,
                       SpectralLevel::AllForms, SpectralLevel::Dirac}) {
        const IsospectralVerdict v = isospectral_check(cg, ch, level, flags.tolerance);
        levels.push_back({{"level", v.level},
                          {"isospectral", v.isospectral},
                          {"differing_level", v.differing_level},
                          {"max_difference", round_significant(v.max_difference)}});
    }
    emit(out, json{{"simplex_distance", d.str()},
                   {"spectral_distance", round_significant(report.spectral_distance)},
                   {"lidskii_bound", round_significant(report.lidskii_bound)},
                   {"max_degree_used", report.max_degree_used},
                   {"isospectral", levels}});
    return 0;
}

int cmd_curvature(const std::string& input, const CommonFlags& flags,
                  std::ostream& out) {
    const Graph g = resolve_input(input);
    const CurvatureReport report = curvature(g);
    if (flags.format == "json") {
        json vertices = json::array();
        for (std::size_t x = 0; x < report.curvature.size(); ++x) {
            std::ostringstream k;
            k << report.curvature[x];
            vertices.push_back({{"vertex", x},
                                {"curvature", k.str()},
                                {"sphere_counts", report.sphere_counts[x]}});
        }
        std::ostringstream total;
        total << report.total;
        emit(out, json{{"vertices", vertices}, {"total", total.str()}});
    } else {
        out << "vertex,curvature,curvature_float\n";
        for (std::size_t x = 0; x < report.curvature.size(); ++x) {
            char buffer[64];
            std::snprintf(buffer, sizeof(buffer), "%.12g",
                          report.curvature[x].convert_to<double>());
            out << x << ',' << report.curvature[x] << ',' << buffer << '\n';
        }
    }
    return 0;
}

int cmd_nerve(const std::string& graph_path, const std::string& cover_path,
              int order, std::ostream& out) {
    const Graph g = resolve_input(graph_path);
    std::ifstream file(cover_path);
    if (!file)
        throw input_error("cannot open cover file '" + cover_path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    const Cover cover = parse_cover(buffer.str());

    const Nerve n = nerve(g, cover);
    const CoverValidation validation = validate_cover(g, cover, order);
    json bad_patches = validation.bad_patches;
    const CechVerdict verdict = cech_betti_check(g, cover, order);
    emit(out, json{{"nerve_edge_list", serialize_graph(n.graph)},
                   {"validation",
                    {{"covers", validation.covers},
                     {"bad_patches", bad_patches},
                     {"bad_intersections", validation.bad_intersections},
                     {"checked_order", validation.checked_order},
                     {"valid", validation.valid()}}},
                   {"betti_check",
                    {{"valid_cover", verdict.valid_cover},
                     {"betti_graph", verdict.betti_graph},
                     {"betti_nerve", verdict.betti_nerve},
                     {"equal", verdict.equal},
                     {"reason", verdict.reason}}}});
    return 0;
}

int cmd_contract(const std::string& input, std::ostream& out) {
    const Graph g = resolve_input(input);
    const Contraction result = contract(g);
    const BettiVector before = betti(build_complex(g));
    const BettiVector after = betti(build_complex(result.reduced));
    auto padded = [](BettiVector b, std::size_t n) {
        b.resize(n, 0);
        return b;
    };
    const std::size_t n = std::max(before.size(), after.size());
    emit(out, json{{"removed", result.removed},
                   {"retained", result.retained_labels},
                   {"reduced_edge_list", serialize_graph(result.reduced)},
                   {"betti_before", before},
                   {"betti_after", after},
                   {"betti_preserved", padded(before, n) == padded(after, n)}});
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Dirac operators, Hodge Laplacians and spectral identities "
                 "of graph clique complexes"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string name, out_path, check, kind, input_a, input_b, cover_path;
    std::vector<std::string> inputs;
    std::optional<int> gen_n;
    bool dirac_level = false;
    int order = 2;

    auto add_common = [&flags](CLI::App* cmd, bool with_format = true) {
        cmd->add_option("--max-dim", flags.max_dim,
                        "cap the clique dimension (default unbounded)");
        cmd->add_option("--tolerance", flags.tolerance, "numeric tolerance");
        if (with_format)
            cmd->add_option("--format", flags.format)
                ->check(CLI::IsMember({"json", "csv"}));
    };

    auto* gen = app.add_subcommand("gen", "write a named graph as an edge list");
    gen->add_option("name", name)->required();
    int gen_n_value = -1;
    gen->add_option("--n", gen_n_value, "size for parametrized families");
    gen->add_option("-o,--output", out_path);

    auto* analyze = app.add_subcommand("analyze", "full spectral report (JSON)");
    analyze->add_option("inputs", inputs, "graph files or gen:<name>[:<n>]")
        ->required();
    analyze->add_option("--jobs", flags.jobs, "parallel workers for batches");
    add_common(analyze, false);

    auto* spectrum = app.add_subcommand("spectrum", "Laplacian or Dirac spectrum");
    spectrum->add_option("input", input_a)->required();
    spectrum->add_flag("--dirac", dirac_level, "Dirac instead of Laplacian");
    add_common(spectrum);

    auto* betti_cmd = app.add_subcommand("betti", "exact Betti numbers");
    betti_cmd->add_option("input", input_a)->required();
    add_common(betti_cmd, false);

    auto* verify = app.add_subcommand(
        "verify", "check one identity family on graphs (default: all generators)");
    verify->add_option("check", check)
        ->required()
        ->check(CLI::IsMember(
            {"mckean-singer", "gauss-bonnet", "handshake", "parity", "hodge"}));
    verify->add_option("inputs", inputs);
    verify->add_option("--seed", flags.seed);
    add_common(verify, false);

    auto* evolve = app.add_subcommand("evolve", "time evolution as CSV");
    evolve->add_option("kind", kind)
        ->required()
        ->check(CLI::IsMember({"heat", "wave", "schrodinger", "map"}));
    evolve->add_option("input", input_a)->required();
    evolve->add_option("--t", flags.t_text, "end time (\"a+bi\" accepted for heat)");
    evolve->add_option("--steps", flags.steps);
    evolve->add_option("--seed", flags.seed, "seed for the random initial cochain");
    add_common(evolve, false);

    auto* compare = app.add_subcommand("compare", "simplex and spectral distance");
    compare->add_option("first", input_a)->required();
    compare->add_option("second", input_b)->required();
    add_common(compare, false);

    auto* curvature_cmd =
        app.add_subcommand("curvature", "per-vertex curvature (CSV by default)");
    curvature_cmd->add_option("input", input_a)->required();
    std::string curvature_format = "csv";
    curvature_cmd->add_option("--format", curvature_format)
        ->check(CLI::IsMember({"json", "csv"}));

    auto* nerve_cmd = app.add_subcommand("nerve", "nerve of a cover plus validation");
    nerve_cmd->add_option("graph", input_a)->required();
    nerve_cmd->add_option("cover", cover_path)->required();
    nerve_cmd->add_option("--order", order, "validate intersections up to this order");

    auto* contract_cmd =
        app.add_subcommand("contract", "greedy homotopy contraction");
    contract_cmd->add_option("input", input_a)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (gen->parsed())
            return cmd_gen(name, gen_n_value >= 0 ? std::optional<int>(gen_n_value)
                                                  : std::nullopt,
                           out_path, out);
        if (analyze->parsed())
            return cmd_analyze(inputs, flags, out);
        if (spectrum->parsed())
            return cmd_spectrum(input_a, dirac_level, flags, out);
        if (betti_cmd->parsed())
            return cmd_betti(input_a, flags, out);
        if (verify->parsed())
            return cmd_verify(check, inputs, flags, out);
        if (evolve->parsed())
            return cmd_evolve(kind, input_a, flags, out);
        if (compare->parsed())
            return cmd_compare(input_a, input_b, flags, out);
        if (curvature_cmd->parsed()) {
            CommonFlags curvature_flags = flags;
            curvature_flags.format = curvature_format;
            return cmd_curvature(input_a, curvature_flags, out);
        }
        if (nerve_cmd->parsed())
            return cmd_nerve(input_a, cover_path, order, out);
        if (contract_cmd->parsed())
            return cmd_contract(input_a, out);
    } catch (const input_error& e) {
        err << "input error: " << e.what() << '\n';
        return 2;
    } catch (const identity_error& e) {
        err << "identity violation: " << e.what() << '\n';
        return 3;
    }
    err << "no subcommand\n";
    return 2;
}

int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace dirac::cli
