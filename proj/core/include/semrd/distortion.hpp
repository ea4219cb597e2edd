#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semrd/decomposition.hpp"
#include "semrd/source.hpp"

namespace semrd {

enum class DistortionKind { Closure, Hamming, Delta };

/// Jaccard similarity of the two closure sets, with 0/0 := 1.
double closure_fidelity(const DeductiveSource& source, const FactSet& s, const FactSet& t);

/// Jaccard distance between the closures obtained by keeping the stored
/// statement versus substituting the reconstruction for it; 0/0 := 0.
double closure_distortion(const DeductiveSource& source, uint32_t stored_idx,
                          uint32_t recon_idx);

/// Indicator of symbol inequality.
int hamming_distortion(uint32_t s, uint32_t t);

/// 0 iff the whole stored set is recoverable within `delta` inference steps
/// after the substitution, else 1.
int delta_distortion(const DeductiveSource& source, uint32_t stored_idx,
                     uint32_t recon_idx, int delta);

/// Which zero-distortion sets to compute.
struct ReconVariant {
    enum Kind { Unbounded, Delta, Restricted } kind = Unbounded;
    int delta = 0;                   // Delta
    std::vector<uint32_t> alphabet;  // Restricted: V as universe indices
    static ReconVariant unbounded() { return {}; }
    static ReconVariant bounded(int d) { return {Delta, d, {}}; }
    static ReconVariant restricted(std::vector<uint32_t> v) {
        return {Restricted, 0, std::move(v)};
    }
};

/// Exact zero-distortion reconstruction sets per stored statement.
struct ReconSets {
    ReconVariant variant;
    std::vector<uint32_t> alphabet;            // ascending universe indices
    std::vector<std::vector<uint32_t>> zero;   // per stored position, ascending

    const std::vector<uint32_t>& zero_set(size_t stored_pos) const { return zero[stored_pos]; }
};
ReconSets recon_sets(const DeductiveSource& source, ReconVariant variant);

/// Full distortion tabulation over stored × reconstruction alphabets.
struct DistortionMatrix {
    DistortionKind kind = DistortionKind::Closure;
    int delta = 0;
    std::vector<uint32_t> rows; // stored, scan order
    std::vector<uint32_t> cols; // reconstruction, ascending
    std::vector<double> values; // row-major

    double at(size_t r, size_t c) const { return values[r * cols.size() + c]; }
    std::string to_csv(const Universe& u) const;
};
DistortionMatrix distortion_matrix(const DeductiveSource& source, DistortionKind kind,
                                   int delta = 0);

/// Pairwise disjointness of core zero-distortion sets.
struct DisjointCheck {
    bool disjoint = true;
    struct Overlap {
        uint32_t a1, a2, shared;
    };
    std::optional<Overlap> witness;
};
DisjointCheck check_core_disjoint(const DeductiveSource& source);
DisjointCheck check_delta_disjoint(const DeductiveSource& source, int delta);

/// Zero-distortion coverage: either the core carries no mass and some
/// reconstruction lies in the stored closure, or every core statement has a
/// nonempty zero-distortion set.
struct CoverageCheck {
    bool covered = true;
    std::optional<uint32_t> missing; // core fact with empty zero set
};
CoverageCheck check_core_coverage(const DeductiveSource& source);

/// Every core subset whose pairs share zero-distortion reconstructions must
/// share one jointly. Exhaustive over core subsets, capped.
struct PairwiseRealisabilityCheck {
    bool holds = true;
    std::vector<uint32_t> violating; // pairwise-realisable subset w/o joint witness
};
PairwiseRealisabilityCheck check_pairwise_realisability(const DeductiveSource& source,
                                                        size_t core_cap = 16);

} // namespace semrd
