#pragma once

#include <memory>
#include <optional>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "semrd/fact.hpp"
#include "semrd/program.hpp"

namespace semrd {

inline constexpr size_t kDefaultUniverseCap = 1'000'000;

/// Builds the ambient universe: all ground atoms over the active domain
/// (constants appearing in `seeds` or in the program) for every declared
/// predicate. Throws CapExceeded if the atom count would exceed `cap`.
Universe active_universe(const Program& program, const std::vector<GroundFact>& seeds,
                         size_t cap = kDefaultUniverseCap);

/// Fixpoint evaluation of a program over a fixed universe.
///
/// step() is the inflationary one-step operator B ∪ T_P(B); closure() is its
/// least fixpoint above the base, computed semi-naively with a cache keyed by
/// the base set. closure_naive() recomputes by plain iteration and exists as
/// an independent cross-check. All methods are const and safe for concurrent
/// use; the cache takes a writer lock on insertion.
class ClosureEngine {
  public:
    ClosureEngine(const Program& program, const Universe& universe);

    const Universe& universe() const { return uni_; }
    const Program& program() const { return prog_; }

    FactSet step(const FactSet& base) const;
    FactSet closure(const FactSet& base) const;
    FactSet closure_naive(const FactSet& base) const;
    FactSet bounded_closure(const FactSet& base, int depth) const;

    /// closure(closed ∪ {extra}) where `closed` is already a fixpoint.
    FactSet closure_with(const FactSet& closed, uint32_t extra) const;

    bool derives(const FactSet& base, uint32_t fact) const;

    /// Minimal n with fact ∈ T^n(base); nullopt when underivable.
    std::optional<int> derivation_depth(const FactSet& base, uint32_t fact) const;

    /// First n with T^n(base) = T^(n+1)(base).
    int stabilization_index(const FactSet& base) const;

    size_t cache_size() const;

  private:
    // One semi-naive round: facts newly derivable from total using at least
    // one fact of delta. Appends to `out`.
    void round(const FactSet& total, const FactSet& delta, std::vector<uint32_t>& out) const;
    void eval_rule(const Rule& rule, const FactSet& total, const FactSet& delta,
                   size_t delta_pos, std::vector<uint32_t>& out) const;
    FactSet axiom_set() const;

    const Program& prog_;
    const Universe& uni_;
    FactSet axioms_;

    mutable std::shared_mutex cache_mutex_;
    mutable std::unordered_map<FactSet, FactSet, FactSetHash> cache_;
};

} // namespace semrd
