#include "semrd/rates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "semrd/error.hpp"

namespace semrd {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

AssumptionVerdict verdict(std::string name, bool passed, std::string note = "") {
    return AssumptionVerdict{std::move(name), passed, std::move(note)};
}

// First positive-probability stored statement with an empty zero set.
std::optional<uint32_t> uncovered_symbol(const DeductiveSource& src, const ReconSets& z) {
    for (size_t i = 0; i < src.n_stored(); ++i)
        if (src.prob(i) > 0.0 && z.zero[i].empty()) return src.stored_index(i);
    return std::nullopt;
}

struct EdgeFamily {
    // Feasible sets as ascending core-position lists, lexicographically
    // sorted, plus an optional witness per set.
    std::vector<std::vector<size_t>> sets;
    std::vector<std::optional<uint32_t>> witnesses;
};

EdgeFamily maximal_witnessed_sets(const std::vector<uint32_t>& core,
                                  const DeductiveSource& src, const ReconSets& z) {
    // Invert the zero sets: each reconstruction symbol realises the set of
    // core symbols it serves.
    std::map<uint32_t, std::vector<size_t>> by_witness;
    for (size_t pos = 0; pos < core.size(); ++pos) {
        size_t stored_pos = src.stored_position(core[pos]);
        for (uint32_t cand : z.zero[stored_pos]) by_witness[cand].push_back(pos);
    }

    std::vector<std::pair<std::vector<size_t>, uint32_t>> edges;
    for (auto& [cand, members] : by_witness) {
        std::sort(members.begin(), members.end());
        edges.emplace_back(std::move(members), cand);
    }
    // Keep one witness per distinct set, then drop non-maximal sets.
    std::sort(edges.begin(), edges.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    edges.erase(std::unique(edges.begin(), edges.end(),
                            [](const auto& a, const auto& b) { return a.first == b.first; }),
                edges.end());

    std::stable_sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
        return a.first.size() > b.first.size();
    });
    EdgeFamily out;
    for (auto& [members, witness] : edges) {
        bool covered = false;
        for (const auto& kept : out.sets) {
            if (kept.size() < members.size()) break;
            covered = std::includes(kept.begin(), kept.end(), members.begin(), members.end());
            if (covered) break;
        }
        if (!covered) {
            out.sets.push_back(members);
            out.witnesses.emplace_back(witness);
        }
    }
    // Canonical order for reproducible solves.
    std::vector<size_t> order(out.sets.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return out.sets[a] < out.sets[b]; });
    EdgeFamily sorted;
    for (size_t i : order) {
        sorted.sets.push_back(std::move(out.sets[i]));
        sorted.witnesses.push_back(out.witnesses[i]);
    }
    return sorted;
}

// P_A · (min I over kernels mapping core symbols into feasible sets that
// contain them).
double scaled_set_entropy(const CoreDecomposition& atom, const EdgeFamily& family,
                          const SolverOptions& opt, int* iterations = nullptr) {
    std::vector<std::vector<uint32_t>> supports(atom.core.size());
    for (size_t e = 0; e < family.sets.size(); ++e)
        for (size_t pos : family.sets[e])
            supports[pos].push_back(static_cast<uint32_t>(e));
    ConstrainedResult res = min_information_constrained(*atom.conditional, supports,
                                                        family.sets.size(), opt);
    if (iterations) *iterations = res.iterations;
    return atom.mass * res.rate;
}

std::vector<RateReport::Edge> to_report_edges(const std::vector<uint32_t>& core,
                                              const EdgeFamily& family) {
    std::vector<RateReport::Edge> out;
    for (size_t e = 0; e < family.sets.size(); ++e) {
        RateReport::Edge edge;
        for (size_t pos : family.sets[e]) edge.members.push_back(core[pos]);
        edge.witness = family.witnesses[e];
        out.push_back(std::move(edge));
    }
    return out;
}

Mat core_distortion_matrix(const DeductiveSource& src, const std::vector<uint32_t>& members,
                           DistortionKind kind, int delta) {
    // Rows restricted to `members`; columns are the reconstruction alphabet.
    DistortionMatrix full = distortion_matrix(src, kind, delta);
    Mat m(members.size(), full.cols.size());
    for (size_t r = 0; r < members.size(); ++r) {
        size_t row = src.stored_position(members[r]);
        for (size_t c = 0; c < full.cols.size(); ++c) m.at(r, c) = full.at(row, c);
    }
    return m;
}

} // namespace

const char* regime_name(Regime r) {
    switch (r) {
    case Regime::Disjoint: return "disjoint";
    case Regime::Hypergraph: return "hypergraph";
    case Regime::Graph: return "graph";
    case Regime::Infeasible: return "infeasible";
    }
    return "?";
}

bool RateReport::infinite() const { return std::isinf(value_bits); }

CoreHypergraph build_gamma0(const DeductiveSource& source) {
    CoreDecomposition atom = extract_core(source);
    if (atom.core.empty()) throw ValidationError("core is empty");
    ReconSets z = recon_sets(source, ReconVariant::unbounded());
    EdgeFamily family = maximal_witnessed_sets(atom.core, source, z);
    CoreHypergraph out;
    out.core = atom.core;
    for (size_t e = 0; e < family.sets.size(); ++e)
        out.maximal.push_back({family.sets[e], family.witnesses[e]});
    return out;
}

IncompatibilityGraph build_incompatibility_graph(const DeductiveSource& source) {
    CoreDecomposition atom = extract_core(source);
    ReconSets z = recon_sets(source, ReconVariant::unbounded());
    IncompatibilityGraph g;
    g.core = atom.core;
    for (size_t i = 0; i < atom.core.size(); ++i) {
        const auto& zi = z.zero[source.stored_position(atom.core[i])];
        for (size_t j = i + 1; j < atom.core.size(); ++j) {
            const auto& zj = z.zero[source.stored_position(atom.core[j])];
            std::vector<uint32_t> shared;
            std::set_intersection(zi.begin(), zi.end(), zj.begin(), zj.end(),
                                  std::back_inserter(shared));
            if (shared.empty()) g.edges.emplace_back(i, j);
        }
    }
    return g;
}

RateReport zero_rate_disjoint(const DeductiveSource& source) {
    RateReport out;
    out.regime = Regime::Disjoint;
    CoreDecomposition atom = extract_core(source);
    out.core = atom.core;

    FactSet recon = source.recon_set();
    for (uint32_t a : atom.core)
        if (!recon.test(a))
            throw ValidationError("core statement missing from the reconstruction alphabet",
                                  source.universe().text(a));
    DisjointCheck dis = check_core_disjoint(source);
    out.assumptions.push_back(verdict(
        "core_disjoint", dis.disjoint,
        dis.disjoint ? "" : source.universe().text(dis.witness->shared)));
    if (!dis.disjoint)
        throw ValidationError(
            "core zero-distortion sets overlap; use the general (hypergraph) rate",
            source.universe().text(dis.witness->a1) + "," +
                source.universe().text(dis.witness->a2) + " share " +
                source.universe().text(dis.witness->shared));

    out.value_bits = atom.mass > 0.0 ? atom.mass * entropy(*atom.conditional) : 0.0;
    return out;
}

RateReport zero_rate_general(const DeductiveSource& source, SolverOptions opt) {
    RateReport out;
    out.regime = Regime::Hypergraph;

    ReconSets z = recon_sets(source, ReconVariant::unbounded());
    if (auto missing = uncovered_symbol(source, z)) {
        out.regime = Regime::Infeasible;
        out.value_bits = kInf;
        out.assumptions.push_back(verdict("zero_distortion_feasible", false,
                                          source.universe().text(*missing)));
        return out;
    }
    out.assumptions.push_back(verdict("zero_distortion_feasible", true));

    CoreDecomposition atom = extract_core(source);
    out.core = atom.core;
    CoverageCheck cov = check_core_coverage(source);
    out.assumptions.push_back(verdict("core_coverage", cov.covered,
                                      cov.missing ? source.universe().text(*cov.missing) : ""));

    if (atom.core.empty() || atom.mass <= 0.0) {
        // Massless or empty core: a constant reconstruction inside the
        // stored closure is free for every positive-probability statement.
        out.value_bits = 0.0;
        return out;
    }

    EdgeFamily family = maximal_witnessed_sets(atom.core, source, z);
    out.feasible_sets = to_report_edges(atom.core, family);
    out.value_bits = scaled_set_entropy(atom, family, opt);
    return out;
}

RateReport zero_rate_graph(const DeductiveSource& source, SolverOptions opt) {
    RateReport out;
    out.regime = Regime::Graph;

    PairwiseRealisabilityCheck pr = check_pairwise_realisability(source);
    out.assumptions.push_back(verdict("pairwise_realisability", pr.holds));
    if (!pr.holds) {
        std::string witness;
        for (uint32_t s : pr.violating) {
            if (!witness.empty()) witness += ',';
            witness += source.universe().text(s);
        }
        throw ValidationError("pairwise realisability fails", witness);
    }

    ReconSets z = recon_sets(source, ReconVariant::unbounded());
    if (auto missing = uncovered_symbol(source, z)) {
        out.regime = Regime::Infeasible;
        out.value_bits = kInf;
        out.assumptions.push_back(verdict("zero_distortion_feasible", false,
                                          source.universe().text(*missing)));
        return out;
    }

    CoreDecomposition atom = extract_core(source);
    out.core = atom.core;
    if (atom.core.empty() || atom.mass <= 0.0) {
        out.value_bits = 0.0;
        return out;
    }

    size_t n = atom.core.size();
    if (n > 63) throw CapExceeded("core too large for independent-set enumeration");
    std::vector<uint64_t> adj(n, 0);
    IncompatibilityGraph g = build_incompatibility_graph(source);
    for (auto [i, j] : g.edges) {
        adj[i] |= uint64_t{1} << j;
        adj[j] |= uint64_t{1} << i;
    }

    // Maximal independent sets; under pairwise realisability these are
    // exactly the maximal jointly realisable sets.
    EdgeFamily family;
    for (uint64_t mask = 1; mask < (uint64_t{1} << n); ++mask) {
        bool independent = true;
        for (size_t i = 0; i < n && independent; ++i)
            if (mask >> i & 1) independent = (adj[i] & mask) == 0;
        if (!independent) continue;
        bool maximal = true;
        for (size_t v = 0; v < n && maximal; ++v)
            if (!(mask >> v & 1)) maximal = (adj[v] & mask) != 0;
        if (!maximal) continue;
        std::vector<size_t> members;
        for (size_t i = 0; i < n; ++i)
            if (mask >> i & 1) members.push_back(i);
        family.sets.push_back(std::move(members));
        family.witnesses.emplace_back(std::nullopt);
    }
    std::vector<size_t> order(family.sets.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return family.sets[a] < family.sets[b]; });
    EdgeFamily sorted;
    for (size_t i : order) {
        sorted.sets.push_back(std::move(family.sets[i]));
        sorted.witnesses.push_back(family.witnesses[i]);
    }

    out.feasible_sets = to_report_edges(atom.core, sorted);
    out.value_bits = scaled_set_entropy(atom, sorted, opt);
    return out;
}

double rd_function(const DeductiveSource& source, double d, SolverOptions opt) {
    if (d < 0.0) throw ValidationError("distortion level must be nonnegative");
    const FactSet& closure = source.stored_closure();
    for (uint32_t cand : source.recon())
        if (!closure.test(cand))
            throw ValidationError("reconstruction alphabet leaves the stored closure",
                                  source.universe().text(cand));
    CoreDecomposition atom = extract_core(source);
    if (atom.mass <= 0.0) return 0.0;
    Mat m = core_distortion_matrix(source, atom.core, DistortionKind::Closure, 0);
    RDCurve c = ba_rate_distortion(*atom.conditional, m, {d / atom.mass}, opt);
    return atom.mass * c.points[0].rate;
}

std::pair<double, double> rd_distortion_range(const DeductiveSource& source) {
    CoreDecomposition atom = extract_core(source);
    if (atom.mass <= 0.0) return {0.0, 0.0};
    Mat m = core_distortion_matrix(source, atom.core, DistortionKind::Closure, 0);
    return {atom.mass * rd_min_distortion(*atom.conditional, m),
            atom.mass * rd_max_distortion(*atom.conditional, m)};
}

RDCurve rd_curve(const DeductiveSource& source, std::vector<double> grid, SolverOptions opt) {
    const FactSet& closure = source.stored_closure();
    for (uint32_t cand : source.recon())
        if (!closure.test(cand))
            throw ValidationError("reconstruction alphabet leaves the stored closure",
                                  source.universe().text(cand));
    CoreDecomposition atom = extract_core(source);
    if (atom.mass <= 0.0) {
        RDCurve flat;
        for (double d : grid.empty() ? std::vector<double>{0.0} : grid)
            flat.points.push_back(RDPoint{d, d, 0.0, 0.0, 0, 0.0});
        return flat;
    }
    Mat m = core_distortion_matrix(source, atom.core, DistortionKind::Closure, 0);
    if (grid.empty()) {
        double lo = atom.mass * rd_min_distortion(*atom.conditional, m);
        double hi = atom.mass * rd_max_distortion(*atom.conditional, m);
        const int n = 33;
        for (int i = 0; i < n; ++i)
            grid.push_back(lo + (hi - lo) * static_cast<double>(i) / (n - 1));
    }
    std::vector<double> scaled;
    for (double d : grid) scaled.push_back(d / atom.mass);
    RDCurve c = ba_rate_distortion(*atom.conditional, m, scaled, opt);
    for (size_t i = 0; i < c.points.size(); ++i) {
        c.points[i].target = grid[i];
        c.points[i].achieved *= atom.mass;
        c.points[i].rate *= atom.mass;
        c.points[i].residual *= atom.mass;
    }
    return c;
}

RateReport rate_depth_zero(const DeductiveSource& source, int delta, SolverOptions) {
    RateReport out;
    out.regime = Regime::Disjoint;
    std::vector<uint32_t> core = delta_core(source, delta);
    out.core = core;

    FactSet recon = source.recon_set();
    for (uint32_t a : core)
        if (!recon.test(a))
            throw ValidationError(
                "depth-irredundant statement missing from the reconstruction alphabet",
                source.universe().text(a));

    DisjointCheck dis = check_delta_disjoint(source, delta);
    out.assumptions.push_back(
        verdict("delta_disjoint", dis.disjoint,
                dis.disjoint ? "" : source.universe().text(dis.witness->shared)));
    if (!dis.disjoint)
        throw ValidationError("depth-bounded zero sets overlap",
                              source.universe().text(dis.witness->a1) + "," +
                                  source.universe().text(dis.witness->a2) + " share " +
                                  source.universe().text(dis.witness->shared));

    double mass = 0.0;
    for (uint32_t a : core) mass += source.prob_of_index(a);
    if (mass <= 0.0) {
        out.value_bits = 0.0;
        return out;
    }
    std::vector<double> cond;
    for (uint32_t a : core) cond.push_back(source.prob_of_index(a) / mass);
    out.value_bits = mass * entropy(cond);
    return out;
}

double rate_depth_distortion(const DeductiveSource& source, double d, int delta,
                             SolverOptions opt) {
    if (d < 0.0) throw ValidationError("distortion level must be nonnegative");
    std::vector<uint32_t> core = delta_core(source, delta);
    double mass = 0.0;
    for (uint32_t a : core) mass += source.prob_of_index(a);
    if (mass <= 0.0) return 0.0;
    std::vector<double> cond;
    for (uint32_t a : core) cond.push_back(source.prob_of_index(a) / mass);
    Mat m = core_distortion_matrix(source, core, DistortionKind::Delta, delta);
    RDCurve c = ba_rate_distortion(cond, m, {d / mass}, opt);
    return mass * c.points[0].rate;
}

double DepthSweep::phi_at(int delta) const {
    size_t i = std::min<size_t>(static_cast<size_t>(std::max(delta, 0)), phi.size() - 1);
    return phi[i];
}

DepthSweep rate_depth_sweep(const DeductiveSource& source) {
    DepthProfile profile = depth_profile(source);
    DepthSweep out;
    out.max_depth = profile.max_depth;
    out.stabilization = profile.stabilization();
    for (int delta = 0; delta <= profile.stabilization(); ++delta) {
        double mass = profile.masses[static_cast<size_t>(delta)];
        const auto& cond = profile.conditionals[static_cast<size_t>(delta)];
        out.phi.push_back(mass > 0.0 ? mass * entropy(*cond) : 0.0);
        out.masses.push_back(mass);
        out.core_sizes.push_back(profile.cores_by_depth[static_cast<size_t>(delta)].size());
        out.disjoint_ok.push_back(check_delta_disjoint(source, delta).disjoint);
    }
    return out;
}

RateReport restricted_zero_rate(const DeductiveSource& source,
                                const std::vector<uint32_t>& v, SolverOptions opt) {
    if (v.empty()) throw ValidationError("restricted alphabet is empty");
    RateReport out;

    ReconSets z = recon_sets(source, ReconVariant::restricted(v));
    if (auto missing = uncovered_symbol(source, z)) {
        out.regime = Regime::Infeasible;
        out.value_bits = kInf;
        out.assumptions.push_back(verdict("restricted_zero_sets_nonempty", false,
                                          source.universe().text(*missing)));
        return out;
    }
    out.assumptions.push_back(verdict("restricted_zero_sets_nonempty", true));

    CoreDecomposition atom = extract_core(source);
    out.core = atom.core;
    if (atom.core.empty() || atom.mass <= 0.0) {
        out.regime = Regime::Hypergraph;
        out.value_bits = 0.0;
        return out;
    }

    bool h1 = true;
    for (uint32_t a : atom.core)
        if (z.zero[source.stored_position(a)].empty()) {
            h1 = false;
            break;
        }
    std::vector<std::vector<uint32_t>> core_zero;
    for (uint32_t a : atom.core) core_zero.push_back(z.zero[source.stored_position(a)]);
    bool h2 = true;
    std::string overlap_note;
    for (size_t i = 0; i < core_zero.size() && h2; ++i)
        for (size_t j = i + 1; j < core_zero.size() && h2; ++j) {
            std::vector<uint32_t> shared;
            std::set_intersection(core_zero[i].begin(), core_zero[i].end(),
                                  core_zero[j].begin(), core_zero[j].end(),
                                  std::back_inserter(shared));
            if (!shared.empty()) {
                h2 = false;
                overlap_note = source.universe().text(shared.front());
            }
        }
    out.assumptions.push_back(verdict("restricted_core_representatives", h1));
    out.assumptions.push_back(verdict("restricted_core_disjoint", h2, overlap_note));

    if (h1 && h2) {
        out.regime = Regime::Disjoint;
        out.value_bits = atom.mass * entropy(*atom.conditional);
        return out;
    }
    // General hypergraph rate computed over V.
    out.regime = Regime::Hypergraph;
    EdgeFamily family = maximal_witnessed_sets(atom.core, source, z);
    out.feasible_sets = to_report_edges(atom.core, family);
    out.value_bits = scaled_set_entropy(atom, family, opt);
    return out;
}

} // namespace semrd
