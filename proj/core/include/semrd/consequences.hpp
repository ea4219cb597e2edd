#pragma once

#include <optional>
#include <string>

#include "semrd/info.hpp"
#include "semrd/rates.hpp"
#include "semrd/source.hpp"

namespace semrd {

/// Discrete memoryless channel with its capacity precomputed.
struct ChannelModel {
    Kernel channel;
    double capacity_bits = 0.0;
};
ChannelModel make_channel(Kernel channel, SolverOptions opt = {});

/// CSV with a header row of output labels; each following row is an input
/// label and its transition probabilities.
Kernel parse_kernel_csv(const std::string& text);
ChannelModel load_channel_csv(const std::string& text, SolverOptions opt = {});

enum class SeparationVerdict { Achievable, NotAchievable, Boundary };
const char* separation_verdict_name(SeparationVerdict v);

struct SeparationReport {
    double rate_bits = 0.0;      // source-coding rate compared
    double kappa = 0.0;          // channel uses per source symbol
    double kappa_capacity = 0.0; // κ·C(W)
    SeparationVerdict verdict = SeparationVerdict::Boundary;
    Regime regime = Regime::Hypergraph; // regime of the rate used
};

/// Compares the source-coding rate at distortion D (optionally under a depth
/// budget) against κ·C(W). Equality within 1e-12 is reported as boundary.
SeparationReport separation_check(const DeductiveSource& source, const ChannelModel& channel,
                                  double kappa, double d,
                                  std::optional<int> delta = std::nullopt,
                                  SolverOptions opt = {});

/// Minimum depth budgets for zero-distortion transmissibility, from the
/// rate-depth sweep: strict comparison for sufficiency, weak for necessity.
/// Empty threshold sets are reported as absent (no finite budget).
struct DepthThresholds {
    std::optional<int> achievable;
    std::optional<int> necessary;
    std::string classification;
    bool order_robust = false;
    DepthSweep sweep;
    double kappa_capacity = 0.0;
};
DepthThresholds depth_thresholds(const DeductiveSource& source, const ChannelModel& channel,
                                 double kappa);

/// Fano-style message-set bound: log M ≤ (nC + 1)/(1 − ε).
struct ConverseBound {
    double bound_bits = 0.0;
    double log_count_bits = 0.0;
    bool consistent = true;
};
ConverseBound message_converse(int n, double capacity_bits, double epsilon, double count);

/// Heuristic blocklength benchmarks (asymptotic, not finite-blocklength).
struct BlocklengthBenchmarks {
    long n_symbolwise = 0; // ceil(log2 |S_O| / C)
    long n_closure = 0;    // ceil(log2 |A| / C)
    double ratio = 1.0;    // log2 |A| / log2 |S_O|
};
BlocklengthBenchmarks blocklength_benchmarks(size_t n_stored, size_t n_core,
                                             double capacity_bits);

/// Closure-adapted Fano bound for a given test kernel: the mutual
/// information is bounded below by the core entropy term minus the usual
/// binary-entropy and log-cardinality corrections at the closure error
/// probability.
struct FanoReport {
    double mutual_information_bits = 0.0;
    double closure_error_prob = 0.0; // ε_Cn
    double bound_bits = 0.0;
    size_t core_size = 0;
    double core_mass = 0.0;
};
FanoReport fano_bound(const DeductiveSource& source, const Kernel& test_kernel);

} // namespace semrd
