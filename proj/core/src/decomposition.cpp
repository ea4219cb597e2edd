#include "semrd/decomposition.hpp"

#include <algorithm>

#include "semrd/error.hpp"

namespace semrd {

namespace {

// Helper answering "is s derivable from base" with two exact shortcuts:
// facts whose predicate heads no rule are derivable only from themselves,
// and anything inside the closure of the never-derivable stored part is
// derivable from any stored superset of that part.
class RedundancyTester {
  public:
    explicit RedundancyTester(const DeductiveSource& src) : src_(src) {
        const Program& prog = src.program();
        const Universe& uni = src.universe();
        underivable_ = FactSet(uni.size());
        for (uint32_t idx : src.stored())
            if (!prog.is_head_predicate(uni.fact(idx).pred)) underivable_.set(idx);
        floor_closure_ = src.engine().closure(underivable_);
    }

    bool never_derivable(uint32_t s) const { return underivable_.test(s); }

    // s ∈ Cn(base)? `base` must contain the never-derivable stored part
    // minus possibly s itself.
    bool derivable(uint32_t s, const FactSet& base) const {
        if (never_derivable(s)) return base.test(s);
        if (floor_closure_.test(s)) return true;
        return src_.engine().derives(base, s);
    }

  private:
    const DeductiveSource& src_;
    FactSet underivable_;
    FactSet floor_closure_;
};

std::optional<std::vector<double>> conditional_of(const DeductiveSource& src,
                                                  const std::vector<uint32_t>& members,
                                                  double mass) {
    if (mass <= 0.0) return std::nullopt;
    std::vector<double> cond;
    cond.reserve(members.size());
    for (uint32_t idx : members) cond.push_back(src.prob_of_index(idx) / mass);
    return cond;
}

double mass_of(const DeductiveSource& src, const std::vector<uint32_t>& members) {
    double m = 0.0;
    for (uint32_t idx : members) m += src.prob_of_index(idx);
    return m;
}

} // namespace

FactSet CoreDecomposition::core_set(const Universe& u) const {
    FactSet s(u.size());
    for (uint32_t i : core) s.set(i);
    return s;
}

CoreDecomposition extract_core(const DeductiveSource& source) {
    RedundancyTester tester(source);
    FactSet current = source.stored_set();
    CoreDecomposition out;
    for (size_t i = 0; i < source.n_stored(); ++i) {
        uint32_t s = source.stored_index(i);
        current.reset(s);
        if (tester.derivable(s, current)) {
            out.redundant.push_back(s);
        } else {
            current.set(s);
            out.core.push_back(s);
        }
    }
    out.mass = mass_of(source, out.core);
    out.conditional = conditional_of(source, out.core, out.mass);
    return out;
}

std::vector<uint32_t> essential_set(const DeductiveSource& source) {
    RedundancyTester tester(source);
    FactSet all = source.stored_set();
    std::vector<uint32_t> out;
    for (size_t i = 0; i < source.n_stored(); ++i) {
        uint32_t s = source.stored_index(i);
        FactSet rest = all;
        rest.reset(s);
        if (!tester.derivable(s, rest)) out.push_back(s);
    }
    return out;
}

OrderRobustness is_order_robust(const DeductiveSource& source) {
    OrderRobustness out;
    std::vector<uint32_t> ess = essential_set(source);
    CoreDecomposition atom = extract_core(source);

    std::vector<uint32_t> ess_sorted = ess, core_sorted = atom.core;
    std::sort(ess_sorted.begin(), ess_sorted.end());
    std::sort(core_sorted.begin(), core_sorted.end());
    out.robust = ess_sorted == core_sorted;
    if (!out.robust) {
        for (uint32_t c : core_sorted)
            if (!std::binary_search(ess_sorted.begin(), ess_sorted.end(), c)) {
                out.witness = c;
                break;
            }
    }

    FactSet ess_set(source.universe().size());
    for (uint32_t i : ess) ess_set.set(i);
    out.essential_generates =
        source.engine().closure(ess_set) == source.stored_closure();
    return out;
}

std::vector<uint32_t> delta_core(const DeductiveSource& source, int delta) {
    if (delta < 0) throw ValidationError("depth budget must be nonnegative");
    std::vector<uint32_t> out;
    if (delta == 0) { // T^0 is the identity, so nothing is recoverable
        out.assign(source.stored().begin(), source.stored().end());
        return out;
    }
    const Program& prog = source.program();
    const Universe& uni = source.universe();
    const ClosureEngine& eng = source.engine();

    FactSet underivable(uni.size());
    for (uint32_t idx : source.stored())
        if (!prog.is_head_predicate(uni.fact(idx).pred)) underivable.set(idx);
    FactSet floor_bounded = eng.bounded_closure(underivable, delta);

    FactSet all = source.stored_set();
    for (size_t i = 0; i < source.n_stored(); ++i) {
        uint32_t s = source.stored_index(i);
        if (underivable.test(s)) {
            out.push_back(s);
            continue;
        }
        if (floor_bounded.test(s)) continue;
        FactSet rest = all;
        rest.reset(s);
        if (!eng.bounded_closure(rest, delta).test(s)) out.push_back(s);
    }
    return out;
}

int max_intrinsic_depth(const DeductiveSource& source) {
    if (source.n_stored() == 0) return 0;
    CoreDecomposition atom = extract_core(source);
    FactSet core = atom.core_set(source.universe());
    const ClosureEngine& eng = source.engine();

    // D_d is the first n with S_O ⊆ T^n(A): the deepest stored fact governs.
    FactSet current = core;
    FactSet stored = source.stored_set();
    int n = 0;
    while (!stored.is_subset_of(current)) {
        FactSet next = eng.step(current);
        if (next == current)
            throw Error("stored fact not derivable from its own core"); // unreachable
        current = next;
        ++n;
    }
    return n;
}

const std::vector<uint32_t>& DepthProfile::core_at(int delta) const {
    size_t i = std::min<size_t>(static_cast<size_t>(std::max(delta, 0)),
                                cores_by_depth.size() - 1);
    return cores_by_depth[i];
}

double DepthProfile::mass_at(int delta) const {
    size_t i = std::min<size_t>(static_cast<size_t>(std::max(delta, 0)), masses.size() - 1);
    return masses[i];
}

const std::optional<std::vector<double>>& DepthProfile::conditional_at(int delta) const {
    size_t i = std::min<size_t>(static_cast<size_t>(std::max(delta, 0)),
                                conditionals.size() - 1);
    return conditionals[i];
}

DepthProfile depth_profile(const DeductiveSource& source) {
    DepthProfile out;
    out.max_depth = max_intrinsic_depth(source);

    std::vector<uint32_t> ess = essential_set(source);
    std::vector<uint32_t> ess_sorted = ess;
    std::sort(ess_sorted.begin(), ess_sorted.end());

    int delta = 0;
    while (true) {
        std::vector<uint32_t> core = delta_core(source, delta);
        out.masses.push_back(mass_of(source, core));
        out.conditionals.push_back(conditional_of(source, core, out.masses.back()));
        out.cores_by_depth.push_back(std::move(core));

        std::vector<uint32_t> sorted = out.cores_by_depth.back();
        std::sort(sorted.begin(), sorted.end());
        // The filtration's limit is the essential set; stop once it is
        // reached past the maximum intrinsic depth.
        if (sorted == ess_sorted && delta >= out.max_depth) break;
        ++delta;
    }
    return out;
}

} // namespace semrd
