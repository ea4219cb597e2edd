#pragma once

#include <optional>
#include <vector>

#include "semrd/source.hpp"

namespace semrd {

/// Result of the canonical-order deletion procedure: the surviving core A,
/// the redundant part J, the core mass and the conditional distribution on
/// the core (absent when the mass is zero).
struct CoreDecomposition {
    std::vector<uint32_t> core;      // universe indices, scan order
    std::vector<uint32_t> redundant; // universe indices, scan order
    double mass = 0.0;               // P_A
    std::optional<std::vector<double>> conditional; // π_A, aligned with core

    FactSet core_set(const Universe& u) const;
};

/// Scans stored facts in list order, deleting s whenever s is derivable from
/// the remaining kept facts. The survivors generate the same closure and no
/// survivor is derivable from the others.
CoreDecomposition extract_core(const DeductiveSource& source);

/// {s ∈ S_O : s not derivable from S_O \ {s}} — independent of scan order.
std::vector<uint32_t> essential_set(const DeductiveSource& source);

struct OrderRobustness {
    bool robust = false;               // deletion core equals the essential set
    bool essential_generates = false;  // Cn(Ess) = Cn(S_O): order-invariance guaranteed
    std::optional<uint32_t> witness;   // a core member outside the essential set
};
OrderRobustness is_order_robust(const DeductiveSource& source);

/// {s ∈ S_O : s ∉ T^δ(S_O \ {s})}, in scan order.
std::vector<uint32_t> delta_core(const DeductiveSource& source, int delta);

/// The filtration A_0 ⊇ A_1 ⊇ ... computed until it reaches the essential
/// set at some δ ≥ the maximum intrinsic derivation depth; beyond the stored
/// range the profile is constant.
struct DepthProfile {
    std::vector<std::vector<uint32_t>> cores_by_depth; // δ = 0..stabilization
    std::vector<double> masses;                        // P_δ
    std::vector<std::optional<std::vector<double>>> conditionals; // π_δ
    int max_depth = 0; // D_d

    int stabilization() const { return static_cast<int>(cores_by_depth.size()) - 1; }
    const std::vector<uint32_t>& core_at(int delta) const;
    double mass_at(int delta) const;
    const std::optional<std::vector<double>>& conditional_at(int delta) const;
};
DepthProfile depth_profile(const DeductiveSource& source);

/// Max over stored q of the derivation depth of q from the deletion core;
/// 0 for an empty store.
int max_intrinsic_depth(const DeductiveSource& source);

} // namespace semrd
