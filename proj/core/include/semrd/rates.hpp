#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semrd/distortion.hpp"
#include "semrd/info.hpp"
#include "semrd/source.hpp"

namespace semrd {

enum class Regime { Disjoint, Hypergraph, Graph, Infeasible };
const char* regime_name(Regime r);

struct AssumptionVerdict {
    std::string name;
    bool passed = false;
    std::string note;
};

/// A scalar rate in bits together with the evidence that licensed the
/// formula used. +infinity is a value, never an error.
struct RateReport {
    double value_bits = 0.0;
    Regime regime = Regime::Disjoint;
    std::vector<AssumptionVerdict> assumptions;
    std::vector<uint32_t> core; // universe indices, scan order

    struct Edge {
        std::vector<uint32_t> members;       // universe indices
        std::optional<uint32_t> witness;     // a common zero-distortion symbol
    };
    std::vector<Edge> feasible_sets; // maximal hyperedges / independent sets used

    bool infinite() const;
};

/// Core subsets admitting a single common zero-distortion reconstruction,
/// represented by its maximal elements (witness inversion over the
/// reconstruction alphabet; the family is downward closed).
struct CoreHypergraph {
    std::vector<uint32_t> core;            // universe indices, scan order
    struct Edge {
        std::vector<size_t> members;       // core positions, ascending
        std::optional<uint32_t> witness;   // universe index of a witness
    };
    std::vector<Edge> maximal;             // lexicographically sorted
};
CoreHypergraph build_gamma0(const DeductiveSource& source);

/// Core symbols adjacent iff their zero-distortion sets are disjoint.
struct IncompatibilityGraph {
    std::vector<uint32_t> core;
    std::vector<std::pair<size_t, size_t>> edges; // core positions
};
IncompatibilityGraph build_incompatibility_graph(const DeductiveSource& source);

/// Exact zero-distortion rate under pairwise-disjoint core zero sets:
/// core mass times the entropy of the core conditional.
RateReport zero_rate_disjoint(const DeductiveSource& source);

/// Exact zero-distortion rate in every regime: infinite when a
/// positive-probability statement has no zero-distortion reconstruction,
/// zero for a massless core, else the core mass times the hypergraph
/// entropy of the jointly realisable core subsets.
RateReport zero_rate_general(const DeductiveSource& source, SolverOptions opt = {});

/// Graph-entropy form over independent sets of the incompatibility graph;
/// valid under pairwise realisability.
RateReport zero_rate_graph(const DeductiveSource& source, SolverOptions opt = {});

/// Full rate-distortion function by core decomposition (reconstruction
/// alphabet must lie inside the stored closure).
double rd_function(const DeductiveSource& source, double d, SolverOptions opt = {});
RDCurve rd_curve(const DeductiveSource& source, std::vector<double> grid = {},
                 SolverOptions opt = {});

/// [min achievable, smallest rate-zero] expected closure distortion.
std::pair<double, double> rd_distortion_range(const DeductiveSource& source);

/// Zero-distortion rate under a bounded inference-depth budget.
RateReport rate_depth_zero(const DeductiveSource& source, int delta, SolverOptions opt = {});

/// Rate-depth-distortion surface value at (D, δ).
double rate_depth_distortion(const DeductiveSource& source, double d, int delta,
                             SolverOptions opt = {});

/// φ(δ) = P_δ H(π_δ) per depth up to filtration stabilization.
struct DepthSweep {
    std::vector<double> phi;          // index = δ
    std::vector<bool> disjoint_ok;    // δ-zero-set disjointness verdict per δ
    std::vector<size_t> core_sizes;
    std::vector<double> masses;
    int max_depth = 0;                // D_d
    int stabilization = 0;

    double phi_at(int delta) const;
};
DepthSweep rate_depth_sweep(const DeductiveSource& source);

/// Zero-distortion rate with the reconstruction restricted to V.
RateReport restricted_zero_rate(const DeductiveSource& source,
                                const std::vector<uint32_t>& v, SolverOptions opt = {});

} // namespace semrd
