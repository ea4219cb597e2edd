// Command-line surface for deductive-source rate analysis: parsing,
// core extraction, assumption checks, zero-distortion and rate-distortion
// computation, depth sweeps, channel-facing reports, and generators.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "semrd/consequences.hpp"
#include "semrd/decomposition.hpp"
#include "semrd/distortion.hpp"
#include "semrd/error.hpp"
#include "semrd/generators.hpp"
#include "semrd/rates.hpp"
#include "semrd/report.hpp"
#include "semrd/source.hpp"

namespace {

using namespace semrd;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool is_example_name(const std::string& input) { return input.rfind("EX_", 0) == 0; }

DeductiveSource load_source(const std::string& input) {
    if (is_example_name(input)) return gen_example(input);
    return load_instance(input);
}

std::vector<std::string> fact_texts(const DeductiveSource& src,
                                    const std::vector<uint32_t>& indices) {
    std::vector<std::string> out;
    for (uint32_t i : indices) out.push_back(src.universe().text(i));
    return out;
}

void add_assumptions(Report& report, const std::vector<AssumptionVerdict>& verdicts) {
    auto& table = report.add_table("assumptions", {"name", "passed", "note"});
    for (const AssumptionVerdict& v : verdicts)
        table.rows.push_back({v.name, v.passed, v.note});
}

void add_rate_report(Report& report, const DeductiveSource& src, const RateReport& rate) {
    report.add("regime", std::string(regime_name(rate.regime)));
    report.add("value_bits", rate.value_bits);
    report.add("core", fact_texts(src, rate.core));
    add_assumptions(report, rate.assumptions);
    if (!rate.feasible_sets.empty()) {
        auto& table = report.add_table("feasible_sets", {"members", "witness"});
        for (const RateReport::Edge& e : rate.feasible_sets)
            table.rows.push_back(
                {fact_texts(src, e.members),
                 e.witness ? src.universe().text(*e.witness) : std::string("-")});
    }
}

struct CommonFlags {
    std::string format = "json";
    double tolerance = 1e-6;

    SolverOptions solver() const {
        SolverOptions opt;
        opt.d_tol = tolerance;
        return opt;
    }
};

int run_core(const std::string& input, const CommonFlags& flags) {
    DeductiveSource src = load_source(input);
    CoreDecomposition atom = extract_core(src);
    OrderRobustness rob = is_order_robust(src);

    Report report;
    report.add("command", std::string("core"));
    report.add("input", input);
    report.add("n_stored", static_cast<long>(src.n_stored()));
    report.add("core", fact_texts(src, atom.core));
    report.add("redundant", fact_texts(src, atom.redundant));
    report.add("core_mass", atom.mass);
    report.add("essential", fact_texts(src, essential_set(src)));
    report.add("order_robust", rob.robust);
    report.add("essential_generates_closure", rob.essential_generates);
    report.add("max_depth", static_cast<long>(max_intrinsic_depth(src)));
    if (atom.conditional) {
        auto& table = report.add_table("core_distribution", {"statement", "p"});
        for (size_t i = 0; i < atom.core.size(); ++i)
            table.rows.push_back({src.universe().text(atom.core[i]), (*atom.conditional)[i]});
    }
    std::cout << report.render(flags.format);
    return 0;
}

int run_check(const std::string& input, std::optional<int> delta,
              const std::string& matrix_kind, const CommonFlags& flags) {
    DeductiveSource src = load_source(input);

    if (!matrix_kind.empty()) {
        DistortionKind kind = DistortionKind::Closure;
        if (matrix_kind == "hamming") kind = DistortionKind::Hamming;
        else if (matrix_kind == "delta") kind = DistortionKind::Delta;
        else if (matrix_kind != "closure")
            throw ValidationError("unknown distortion kind", matrix_kind);
        DistortionMatrix m = distortion_matrix(src, kind, delta.value_or(0));
        std::cout << m.to_csv(src.universe());
        return 0;
    }

    Report report;
    report.add("command", std::string("check"));
    report.add("input", input);
    bool all_ok = true;

    DisjointCheck dis = check_core_disjoint(src);
    report.add("core_disjoint", dis.disjoint);
    if (dis.witness)
        report.add("core_disjoint_witness",
                   src.universe().text(dis.witness->a1) + "," +
                       src.universe().text(dis.witness->a2) + " share " +
                       src.universe().text(dis.witness->shared));
    all_ok &= dis.disjoint;

    CoverageCheck cov = check_core_coverage(src);
    report.add("core_coverage", cov.covered);
    if (cov.missing) report.add("core_coverage_witness", src.universe().text(*cov.missing));
    all_ok &= cov.covered;

    PairwiseRealisabilityCheck pr = check_pairwise_realisability(src);
    report.add("pairwise_realisability", pr.holds);
    if (!pr.holds) report.add("pairwise_realisability_witness", fact_texts(src, pr.violating));
    all_ok &= pr.holds;

    OrderRobustness rob = is_order_robust(src);
    report.add("order_robust", rob.robust);
    report.add("essential_generates_closure", rob.essential_generates);

    const FactSet& closure = src.stored_closure();
    bool recon_in_closure = true;
    for (uint32_t cand : src.recon())
        if (!closure.test(cand)) { recon_in_closure = false; break; }
    report.add("reconstruction_in_closure", recon_in_closure);

    if (delta) {
        DisjointCheck dd = check_delta_disjoint(src, *delta);
        report.add("delta", static_cast<long>(*delta));
        report.add("delta_disjoint", dd.disjoint);
        if (dd.witness)
            report.add("delta_disjoint_witness",
                       src.universe().text(dd.witness->a1) + "," +
                           src.universe().text(dd.witness->a2) + " share " +
                           src.universe().text(dd.witness->shared));
        all_ok &= dd.disjoint;
    }
    std::cout << report.render(flags.format);
    return all_ok ? 0 : 2;
}

int run_rates(const std::string& input, std::optional<double> d, std::optional<int> delta,
              const std::string& restrict_file, const std::string& regime,
              const CommonFlags& flags) {
    DeductiveSource src = load_source(input);
    Report report;
    report.add("command", std::string("rates"));
    report.add("input", input);
    report.add("unit", std::string("bits"));

    if (!restrict_file.empty()) {
        std::vector<uint32_t> v = parse_fact_list(src, slurp(restrict_file));
        RateReport rate = restricted_zero_rate(src, v, flags.solver());
        report.add("mode", std::string("restricted-zero"));
        report.add("alphabet", fact_texts(src, v));
        add_rate_report(report, src, rate);
        std::cout << report.render(flags.format);
        return 0;
    }
    if (delta && (!d || *d <= 0.0)) {
        RateReport rate = rate_depth_zero(src, *delta, flags.solver());
        report.add("mode", std::string("depth-zero"));
        report.add("delta", static_cast<long>(*delta));
        add_rate_report(report, src, rate);
        std::cout << report.render(flags.format);
        return 0;
    }
    if (delta) {
        double value = rate_depth_distortion(src, *d, *delta, flags.solver());
        report.add("mode", std::string("depth-distortion"));
        report.add("delta", static_cast<long>(*delta));
        report.add("distortion_level", *d);
        report.add("value_bits", value);
        std::cout << report.render(flags.format);
        return 0;
    }
    if (d && *d > 0.0) {
        double value = rd_function(src, *d, flags.solver());
        report.add("mode", std::string("rate-distortion"));
        report.add("distortion_level", *d);
        report.add("value_bits", value);
        std::cout << report.render(flags.format);
        return 0;
    }

    report.add("mode", std::string("zero"));
    RateReport rate;
    if (regime == "disjoint") {
        rate = zero_rate_disjoint(src);
    } else if (regime == "graph") {
        rate = zero_rate_graph(src, flags.solver());
    } else if (regime == "hypergraph") {
        rate = zero_rate_general(src, flags.solver());
    } else { // auto: closed form when licensed, general otherwise
        DisjointCheck dis = check_core_disjoint(src);
        rate = dis.disjoint ? zero_rate_disjoint(src) : zero_rate_general(src, flags.solver());
    }
    add_rate_report(report, src, rate);
    std::cout << report.render(flags.format);
    return 0;
}

int run_rd_curve(const std::string& input, int grid_n, const CommonFlags& flags) {
    DeductiveSource src = load_source(input);
    std::vector<double> grid;
    if (grid_n > 1) {
        auto [lo, hi] = rd_distortion_range(src);
        for (int i = 0; i < grid_n; ++i)
            grid.push_back(lo + (hi - lo) * static_cast<double>(i) /
                                    static_cast<double>(grid_n - 1));
    }
    RDCurve curve = rd_curve(src, grid, flags.solver());
    if (flags.format == "csv") {
        std::cout << curve.to_csv();
        return 0;
    }
    Report report;
    report.add("command", std::string("rd-curve"));
    report.add("input", input);
    report.add("unit", std::string("bits"));
    auto& table = report.add_table("points", {"D", "R", "slope", "iterations"});
    for (const RDPoint& pt : curve.points)
        table.rows.push_back({pt.target, pt.rate, pt.slope, static_cast<long>(pt.iterations)});
    std::cout << report.render(flags.format);
    return 0;
}

int run_depth_sweep(const std::string& input, const CommonFlags& flags) {
    DeductiveSource src = load_source(input);
    DepthSweep sweep = rate_depth_sweep(src);
    Report report;
    report.add("command", std::string("depth-sweep"));
    report.add("input", input);
    report.add("max_depth", static_cast<long>(sweep.max_depth));
    report.add("stabilization", static_cast<long>(sweep.stabilization));
    report.add("unit", std::string("bits"));
    auto& table =
        report.add_table("phi", {"delta", "core_size", "mass", "phi_bits", "delta_disjoint"});
    for (size_t i = 0; i < sweep.phi.size(); ++i)
        table.rows.push_back({static_cast<long>(i), static_cast<long>(sweep.core_sizes[i]),
                              sweep.masses[i], sweep.phi[i],
                              static_cast<bool>(sweep.disjoint_ok[i])});
    std::cout << report.render(flags.format);
    return 0;
}

int run_hypergraph(const std::string& input, const CommonFlags& flags) {
    DeductiveSource src = load_source(input);
    CoreHypergraph gamma = build_gamma0(src);
    IncompatibilityGraph graph = build_incompatibility_graph(src);
    PairwiseRealisabilityCheck pr = check_pairwise_realisability(src);

    Report report;
    report.add("command", std::string("hypergraph"));
    report.add("input", input);
    report.add("core", fact_texts(src, gamma.core));
    report.add("pairwise_realisability", pr.holds);
    auto& edges = report.add_table("maximal_hyperedges", {"members", "witness"});
    for (const CoreHypergraph::Edge& e : gamma.maximal) {
        std::vector<std::string> members;
        for (size_t pos : e.members) members.push_back(src.universe().text(gamma.core[pos]));
        edges.rows.push_back(
            {members, e.witness ? src.universe().text(*e.witness) : std::string("-")});
    }
    auto& inc = report.add_table("incompatibility_edges", {"a", "b"});
    for (auto [i, j] : graph.edges)
        inc.rows.push_back({src.universe().text(graph.core[i]),
                            src.universe().text(graph.core[j])});
    std::cout << report.render(flags.format);
    return 0;
}

int run_thresholds(const std::string& input, const std::string& channel_file, double kappa,
                   std::optional<double> d, std::optional<int> delta,
                   std::optional<double> epsilon, const CommonFlags& flags) {
    DeductiveSource src = load_source(input);
    ChannelModel channel = load_channel_csv(slurp(channel_file));
    SeparationReport sep =
        separation_check(src, channel, kappa, d.value_or(0.0), delta, flags.solver());
    DepthThresholds th = depth_thresholds(src, channel, kappa);

    Report report;
    report.add("command", std::string("thresholds"));
    report.add("input", input);
    report.add("capacity_bits", channel.capacity_bits);
    report.add("kappa", kappa);
    report.add("kappa_capacity_bits", sep.kappa_capacity);
    report.add("rate_bits", sep.rate_bits);
    report.add("rate_regime", std::string(regime_name(sep.regime)));
    report.add("separation", std::string(separation_verdict_name(sep.verdict)));
    report.add("depth_achievable",
               th.achievable ? std::to_string(*th.achievable) : std::string("inf"));
    report.add("depth_necessary",
               th.necessary ? std::to_string(*th.necessary) : std::string("inf"));
    report.add("classification", th.classification);
    report.add("order_robust", th.order_robust);
    report.add("max_depth", static_cast<long>(th.sweep.max_depth));

    CoreDecomposition atom = extract_core(src);
    BlocklengthBenchmarks bl =
        blocklength_benchmarks(src.n_stored(), std::max<size_t>(atom.core.size(), 1),
                               channel.capacity_bits);
    report.add("blocklength_symbolwise", bl.n_symbolwise);
    report.add("blocklength_closure", bl.n_closure);
    report.add("blocklength_ratio", bl.ratio);
    report.add("blocklength_note", std::string("heuristic, asymptotic"));

    if (epsilon) {
        ConverseBound cb = message_converse(
            static_cast<int>(bl.n_closure > 0 ? bl.n_closure : 1), channel.capacity_bits,
            *epsilon, static_cast<double>(std::max<size_t>(atom.core.size(), 1)));
        report.add("converse_epsilon", *epsilon);
        report.add("converse_bound_bits", cb.bound_bits);
        report.add("converse_log_core_bits", cb.log_count_bits);
        report.add("converse_consistent", cb.consistent);
    }

    auto& table = report.add_table("phi", {"delta", "phi_bits", "delta_disjoint"});
    for (size_t i = 0; i < th.sweep.phi.size(); ++i)
        table.rows.push_back({static_cast<long>(i), th.sweep.phi[i],
                              static_cast<bool>(th.sweep.disjoint_ok[i])});
    std::cout << report.render(flags.format);
    return 0;
}

int run_fano(const std::string& input, const std::string& kernel_file,
             const CommonFlags& flags) {
    DeductiveSource src = load_source(input);
    Kernel kernel = parse_kernel_csv(slurp(kernel_file));
    FanoReport fano = fano_bound(src, kernel);
    Report report;
    report.add("command", std::string("fano"));
    report.add("input", input);
    report.add("mutual_information_bits", fano.mutual_information_bits);
    report.add("closure_error_prob", fano.closure_error_prob);
    report.add("bound_bits", fano.bound_bits);
    report.add("core_size", static_cast<long>(fano.core_size));
    report.add("core_mass", fano.core_mass);
    report.add("satisfied", fano.mutual_information_bits >= fano.bound_bits - 1e-12);
    std::cout << report.render(flags.format);
    return 0;
}

int run_gen(GeneratorSpec spec, const std::string& config_file, const std::string& out_file,
            const std::string& sweep_levels, const CommonFlags& flags) {
    if (!config_file.empty()) spec = parse_generator_config(slurp(config_file));

    if (!sweep_levels.empty()) {
        std::vector<double> levels;
        std::stringstream ss(sweep_levels);
        std::string cell;
        while (std::getline(ss, cell, ','))
            levels.push_back(std::stod(cell));
        std::vector<SweepRow> rows = materialization_sweep(spec, levels);
        Report report;
        report.add("command", std::string("gen-sweep"));
        auto& table = report.add_table(
            "sweep", {"mu", "n_redundant", "n_stored", "n_core", "rate_ratio", "log_ratio"});
        for (const SweepRow& r : rows)
            table.rows.push_back({r.materialization, static_cast<long>(r.n_redundant),
                                  static_cast<long>(r.n_stored), static_cast<long>(r.n_core),
                                  r.rate_ratio, r.log_ratio});
        std::cout << report.render(flags.format);
        return 0;
    }

    DeductiveSource src = generate(spec);
    std::string text = write_instance(src);
    if (out_file.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_file);
        if (!out) throw Error("cannot write file: " + out_file);
        out << text;
    }
    return 0;
}

int run_oracle(const std::string& input, double grid_step, const CommonFlags& flags) {
    DeductiveSource src = load_source(input);
    ReconSets z = recon_sets(src, ReconVariant::unbounded());
    CoreDecomposition atom = extract_core(src);

    Report report;
    report.add("command", std::string("oracle"));
    report.add("input", input);
    report.add("grid_step", grid_step);

    for (size_t i = 0; i < src.n_stored(); ++i) {
        if (src.prob(i) > 0.0 && z.zero[i].empty()) {
            report.add("value_bits", std::numeric_limits<double>::infinity());
            report.add("witness", src.stored_text(i));
            std::cout << report.render(flags.format);
            return 0;
        }
    }
    if (atom.core.empty() || atom.mass <= 0.0) {
        report.add("value_bits", 0.0);
        std::cout << report.render(flags.format);
        return 0;
    }

    // Brute-force grid search directly over the zero-distortion supports.
    std::vector<uint32_t> alphabet = z.alphabet;
    std::vector<std::vector<uint32_t>> supports;
    for (uint32_t a : atom.core) {
        const auto& zs = z.zero[src.stored_position(a)];
        std::vector<uint32_t> sup;
        for (uint32_t cand : zs) {
            size_t pos = std::lower_bound(alphabet.begin(), alphabet.end(), cand) -
                         alphabet.begin();
            sup.push_back(static_cast<uint32_t>(pos));
        }
        supports.push_back(std::move(sup));
    }
    double value =
        brute_force_min_information(*atom.conditional, supports, alphabet.size(), grid_step);
    report.add("value_bits", atom.mass * value);
    report.add("core", fact_texts(src, atom.core));
    std::cout << report.render(flags.format);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rate analysis for deductive sources under closure fidelity"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string input, channel_file, restrict_file, regime = "auto", matrix_kind;
    std::string config_file, out_file, sweep_levels;
    std::optional<double> d_level, epsilon;
    std::optional<int> delta;
    int grid_n = 0;
    double grid_step = 0.02, kappa = 1.0;
    uint64_t seed = 0;
    GeneratorSpec spec;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", flags.format, "Output format: json, csv, or text")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        cmd->add_option("--tolerance", flags.tolerance,
                        "Distortion accuracy of the slope bisection");
    };

    CLI::App* core_cmd = app.add_subcommand("core", "Irredundant-core decomposition");
    core_cmd->add_option("input", input, "Instance file or example name")->required();
    add_common(core_cmd);

    CLI::App* check_cmd = app.add_subcommand("check", "Assumption validators");
    check_cmd->add_option("input", input)->required();
    check_cmd->add_option("--delta", delta, "Also check depth-bounded disjointness");
    check_cmd->add_option("--distortion", matrix_kind,
                          "Print this distortion matrix as CSV instead of verdicts");
    add_common(check_cmd);

    CLI::App* rates_cmd = app.add_subcommand("rates", "Rate quantities");
    rates_cmd->add_option("input", input)->required();
    rates_cmd->add_flag("--zero", "Zero-distortion rate (default)");
    rates_cmd->add_option("--d", d_level, "Distortion level");
    rates_cmd->add_option("--delta", delta, "Inference-depth budget");
    rates_cmd->add_option("--restrict", restrict_file, "Restricted alphabet (fact lines)");
    rates_cmd->add_option("--regime", regime, "auto, disjoint, hypergraph, or graph")
        ->check(CLI::IsMember({"auto", "disjoint", "hypergraph", "graph"}));
    add_common(rates_cmd);

    CLI::App* curve_cmd = app.add_subcommand("rd-curve", "Rate-distortion curve");
    curve_cmd->add_option("input", input)->required();
    curve_cmd->add_option("--grid", grid_n, "Number of distortion grid points");
    add_common(curve_cmd);

    CLI::App* sweep_cmd = app.add_subcommand("depth-sweep", "Rate-depth table");
    sweep_cmd->add_option("input", input)->required();
    add_common(sweep_cmd);

    CLI::App* hyper_cmd = app.add_subcommand("hypergraph", "Zero-distortion hypergraph");
    hyper_cmd->add_option("input", input)->required();
    add_common(hyper_cmd);

    CLI::App* thr_cmd = app.add_subcommand("thresholds", "Separation and depth thresholds");
    thr_cmd->add_option("input", input)->required();
    thr_cmd->add_option("--channel", channel_file, "Channel matrix CSV")->required();
    thr_cmd->add_option("--kappa", kappa, "Channel uses per source symbol");
    thr_cmd->add_option("--d", d_level, "Distortion level for the separation check");
    thr_cmd->add_option("--delta", delta, "Depth budget for the separation check");
    thr_cmd->add_option("--epsilon", epsilon, "Error probability for the converse bound");
    add_common(thr_cmd);

    CLI::App* fano_cmd = app.add_subcommand("fano", "Closure-adapted Fano bound");
    fano_cmd->add_option("input", input)->required();
    fano_cmd->add_option("--channel", channel_file, "Test kernel CSV")->required();
    add_common(fano_cmd);

    CLI::App* gen_cmd = app.add_subcommand("gen", "Instance generators");
    gen_cmd->add_option("--config", config_file, "Generator config (key=value lines)");
    std::string family;
    gen_cmd->add_option("--family", family, "example, tag_seeded, or supply_chain")
        ->check(CLI::IsMember({"example", "tag_seeded", "supply_chain"}));
    gen_cmd->add_option("--name", spec.example_name, "Example name (EX_*)");
    gen_cmd->add_option("--seed", seed, "Generator seed (default 0)");
    gen_cmd->add_option("--cores", spec.cores, "Core statement count");
    gen_cmd->add_option("--chain-depth", spec.chain_depth, "Derivation chain length");
    gen_cmd->add_option("--locations", spec.locations, "Location count");
    gen_cmd->add_option("--suppliers", spec.suppliers, "Supplier count");
    gen_cmd->add_option("--items", spec.items, "Item count");
    gen_cmd->add_option("--density", spec.density, "Edge density in (0,1]");
    gen_cmd->add_option("--mu", spec.materialization, "Materialization level in [0,1]");
    gen_cmd->add_option("--sweep", sweep_levels, "Comma-separated μ values: print sweep table");
    gen_cmd->add_option("-o,--output", out_file, "Write the instance here");
    add_common(gen_cmd);

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "Brute-force zero-rate certificate");
    oracle_cmd->add_option("input", input)->required();
    oracle_cmd->add_option("--grid-step", grid_step, "Grid resolution (≥ 0.01)");
    add_common(oracle_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (core_cmd->parsed()) return run_core(input, flags);
        if (check_cmd->parsed()) return run_check(input, delta, matrix_kind, flags);
        if (rates_cmd->parsed())
            return run_rates(input, d_level, delta, restrict_file, regime, flags);
        if (curve_cmd->parsed()) return run_rd_curve(input, grid_n, flags);
        if (sweep_cmd->parsed()) return run_depth_sweep(input, flags);
        if (hyper_cmd->parsed()) return run_hypergraph(input, flags);
        if (thr_cmd->parsed())
            return run_thresholds(input, channel_file, kappa, d_level, delta, epsilon, flags);
        if (fano_cmd->parsed()) return run_fano(input, channel_file, flags);
        if (gen_cmd->parsed()) {
            if (family == "example") spec.family = GeneratorSpec::Example;
            else if (family == "tag_seeded") spec.family = GeneratorSpec::TagSeeded;
            else if (family == "supply_chain") spec.family = GeneratorSpec::SupplyChain;
            else if (!family.empty())
                throw ValidationError("unknown generator family", family);
            spec.seed = seed;
            return run_gen(spec, config_file, out_file, sweep_levels, flags);
        }
        if (oracle_cmd->parsed()) return run_oracle(input, grid_step, flags);
        std::cerr << "no command given\n";
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const CapExceeded& e) {
        std::cerr << "limit exceeded: " << e.what() << "\n";
        return 2;
    } catch (const NumericError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
