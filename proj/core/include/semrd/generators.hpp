#pragma once

#include <string>
#include <vector>

#include "semrd/source.hpp"

namespace semrd {

/// Deterministic instance construction: identical spec and seed yield a
/// byte-identical instance file.
struct GeneratorSpec {
    enum Family { Example, TagSeeded, SupplyChain } family = Example;
    std::string example_name = "EX_MIN";
    uint64_t seed = 0;

    // tag_seeded
    int cores = 2;
    int chain_depth = 1;

    // supply_chain
    int locations = 8;
    int suppliers = 3;
    int items = 4;
    double density = 0.3;
    double materialization = 0.5; // μ
};

/// Named instances: EX_ORDER (interchangeable pair), EX_MIN (one redundant
/// consequence), EX_DEPTH (two-step shortcuts), EX_CONF (shared
/// reconstruction witness), EX_RESTRICT (two independent statements).
DeductiveSource gen_example(const std::string& name);

/// k seed statements with per-seed derivation chains of the given depth
/// stored alongside them; no rule rederives a seed, so core zero sets are
/// singletons and pairwise disjoint. Probabilities drawn from the seed.
DeductiveSource gen_tag_seeded(int cores, int chain_depth, uint64_t seed);

/// Extensional facts (connected/supplies/produces) drawn from the seed plus
/// the fraction μ of the derivable intensional closure (reachable/available),
/// materialized in canonical order; uniform source; stored order is
/// extensional first.
DeductiveSource gen_supply_chain(int locations, int suppliers, int items, double density,
                                 double materialization, uint64_t seed);

DeductiveSource generate(const GeneratorSpec& spec);

/// Key=value lines: family, name, seed, cores, chain_depth, locations,
/// suppliers, items, density, materialization.
GeneratorSpec parse_generator_config(std::string_view text);

struct SweepRow {
    double materialization = 0.0;
    size_t n_redundant = 0;
    size_t n_stored = 0;
    size_t n_core = 0;
    double rate_ratio = 1.0; // zero-distortion rate over symbolwise baseline
    double log_ratio = 1.0;  // log2 |A| / log2 |S_O|
};

/// Uniform-source sweep over materialization levels for a fixed extensional
/// base (the supply-chain parameters and seed of `spec`).
std::vector<SweepRow> materialization_sweep(const GeneratorSpec& spec,
                                            const std::vector<double>& levels);

/// Ratio arithmetic used by the sweep, exposed for direct checks.
double zero_rate_ratio(size_t n_core, size_t n_stored);
double log_cardinality_ratio(size_t n_core, size_t n_stored);

/// Counter-based pseudorandomness keyed by seed (no global state).
double seeded_unit(uint64_t seed, uint64_t counter);

} // namespace semrd
