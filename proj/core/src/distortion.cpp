#include "semrd/distortion.hpp"

#include <algorithm>
#include <cstdio>

#include "semrd/error.hpp"

namespace semrd {

namespace {

double jaccard_distance(const FactSet& x, const FactSet& y) {
    size_t uni = x.union_count(y);
    if (uni == 0) return 0.0; // both closures empty
    return 1.0 - static_cast<double>(x.intersect_count(y)) / static_cast<double>(uni);
}

// Shared machinery for zero-set computation with the exact shortcuts of the
// redundancy structure: substitution for a non-essential statement is free
// against anything in the stored closure, and statements of never-derived
// predicates accept only themselves.
struct ZeroSetBuilder {
    const DeductiveSource& src;
    FactSet stored;
    FactSet closure; //  Cn(S_O)

    explicit ZeroSetBuilder(const DeductiveSource& s)
        : src(s), stored(s.stored_set()), closure(s.stored_closure()) {}

    bool never_headed(uint32_t idx) const {
        return !src.program().is_head_predicate(src.universe().fact(idx).pred);
    }

    bool essential(uint32_t idx) const {
        FactSet rest = stored;
        rest.reset(idx);
        if (never_headed(idx)) return true;
        return !src.engine().derives(rest, idx);
    }

    std::vector<uint32_t> closure_zero_set(uint32_t s, const std::vector<uint32_t>& alphabet) {
        std::vector<uint32_t> out;
        if (!essential(s)) {
            for (uint32_t cand : alphabet)
                if (closure.test(cand)) out.push_back(cand);
            return out;
        }
        if (never_headed(s)) {
            for (uint32_t cand : alphabet)
                if (cand == s) out.push_back(cand);
            return out;
        }
        FactSet rest = stored;
        rest.reset(s);
        FactSet base_closed = src.engine().closure(rest);
        for (uint32_t cand : alphabet) {
            FactSet subst = src.engine().closure_with(base_closed, cand);
            if (subst == closure) out.push_back(cand);
        }
        return out;
    }

    std::vector<uint32_t> delta_zero_set(uint32_t s, int delta,
                                         const std::vector<uint32_t>& alphabet) {
        std::vector<uint32_t> out;
        FactSet rest = stored;
        rest.reset(s);
        if (src.engine().bounded_closure(rest, delta).test(s)) {
            // δ-redundant: every substitution recovers the store.
            return alphabet;
        }
        for (uint32_t cand : alphabet) {
            FactSet base = rest;
            base.set(cand);
            if (stored.is_subset_of(src.engine().bounded_closure(base, delta)))
                out.push_back(cand);
        }
        return out;
    }
};

DisjointCheck disjoint_over(const std::vector<uint32_t>& members,
                            const std::vector<std::vector<uint32_t>>& zero_sets) {
    DisjointCheck out;
    for (size_t i = 0; i < members.size() && out.disjoint; ++i) {
        for (size_t j = i + 1; j < members.size() && out.disjoint; ++j) {
            std::vector<uint32_t> shared;
            std::set_intersection(zero_sets[i].begin(), zero_sets[i].end(),
                                  zero_sets[j].begin(), zero_sets[j].end(),
                                  std::back_inserter(shared));
            if (!shared.empty()) {
                out.disjoint = false;
                out.witness = DisjointCheck::Overlap{members[i], members[j], shared.front()};
            }
        }
    }
    return out;
}

} // namespace

double closure_fidelity(const DeductiveSource& source, const FactSet& s, const FactSet& t) {
    FactSet cs = source.engine().closure(s);
    FactSet ct = source.engine().closure(t);
    size_t uni = cs.union_count(ct);
    if (uni == 0) return 1.0; // both closures empty
    return static_cast<double>(cs.intersect_count(ct)) / static_cast<double>(uni);
}

double closure_distortion(const DeductiveSource& source, uint32_t stored_idx,
                          uint32_t recon_idx) {
    if (source.stored_position(stored_idx) == static_cast<size_t>(-1))
        throw ValidationError("statement is not stored", source.universe().text(stored_idx));
    FactSet rest = source.stored_set();
    rest.reset(stored_idx);
    FactSet base_closed = source.engine().closure(rest);
    FactSet kept = source.engine().closure_with(base_closed, stored_idx);
    FactSet substituted = source.engine().closure_with(base_closed, recon_idx);
    return jaccard_distance(kept, substituted);
}

int hamming_distortion(uint32_t s, uint32_t t) { return s == t ? 0 : 1; }

int delta_distortion(const DeductiveSource& source, uint32_t stored_idx, uint32_t recon_idx,
                     int delta) {
    if (delta < 0) throw ValidationError("depth budget must be nonnegative");
    FactSet base = source.stored_set();
    base.reset(stored_idx);
    base.set(recon_idx);
    FactSet reached = source.engine().bounded_closure(base, delta);
    return source.stored_set().is_subset_of(reached) ? 0 : 1;
}

ReconSets recon_sets(const DeductiveSource& source, ReconVariant variant) {
    ReconSets out;
    out.variant = variant;
    switch (variant.kind) {
    case ReconVariant::Unbounded:
    case ReconVariant::Delta:
        out.alphabet = source.recon();
        break;
    case ReconVariant::Restricted:
        if (variant.alphabet.empty())
            throw ValidationError("restricted alphabet is empty");
        out.alphabet = variant.alphabet;
        std::sort(out.alphabet.begin(), out.alphabet.end());
        out.alphabet.erase(std::unique(out.alphabet.begin(), out.alphabet.end()),
                           out.alphabet.end());
        break;
    }

    ZeroSetBuilder builder(source);
    out.zero.reserve(source.n_stored());
    for (size_t i = 0; i < source.n_stored(); ++i) {
        uint32_t s = source.stored_index(i);
        if (variant.kind == ReconVariant::Delta)
            out.zero.push_back(builder.delta_zero_set(s, variant.delta, out.alphabet));
        else
            out.zero.push_back(builder.closure_zero_set(s, out.alphabet));
    }
    return out;
}

DistortionMatrix distortion_matrix(const DeductiveSource& source, DistortionKind kind,
                                   int delta) {
    DistortionMatrix m;
    m.kind = kind;
    m.delta = delta;
    m.rows = source.stored();
    m.cols = source.recon();
    m.values.resize(m.rows.size() * m.cols.size(), 0.0);

    if (kind == DistortionKind::Hamming) {
        for (size_t r = 0; r < m.rows.size(); ++r)
            for (size_t c = 0; c < m.cols.size(); ++c)
                m.values[r * m.cols.size() + c] = hamming_distortion(m.rows[r], m.cols[c]);
        return m;
    }

    if (kind == DistortionKind::Delta) {
        ReconSets z = recon_sets(source, ReconVariant::bounded(delta));
        for (size_t r = 0; r < m.rows.size(); ++r) {
            size_t zi = 0;
            for (size_t c = 0; c < m.cols.size(); ++c) {
                bool zero = false;
                while (zi < z.zero[r].size() && z.zero[r][zi] < m.cols[c]) ++zi;
                if (zi < z.zero[r].size() && z.zero[r][zi] == m.cols[c]) zero = true;
                m.values[r * m.cols.size() + c] = zero ? 0.0 : 1.0;
            }
        }
        return m;
    }

    const FactSet closure = source.stored_closure();
    FactSet stored = source.stored_set();
    for (size_t r = 0; r < m.rows.size(); ++r) {
        uint32_t s = m.rows[r];
        FactSet rest = stored;
        rest.reset(s);
        FactSet base_closed = source.engine().closure(rest);
        FactSet kept = source.engine().closure_with(base_closed, s);
        for (size_t c = 0; c < m.cols.size(); ++c) {
            uint32_t cand = m.cols[c];
            double d;
            if (cand == s) {
                d = 0.0;
            } else if (base_closed == closure && closure.test(cand)) {
                d = 0.0; // substitution for a non-essential statement is free
            } else {
                FactSet subst = source.engine().closure_with(base_closed, cand);
                d = jaccard_distance(kept, subst);
            }
            m.values[r * m.cols.size() + c] = d;
        }
    }
    return m;
}

std::string DistortionMatrix::to_csv(const Universe& u) const {
    std::string out = "statement";
    for (uint32_t c : cols) {
        out += ',';
        out += u.text(c);
    }
    out += '\n';
    char buf[64];
    for (size_t r = 0; r < rows.size(); ++r) {
        out += u.text(rows[r]);
        for (size_t c = 0; c < cols.size(); ++c) {
            std::snprintf(buf, sizeof buf, ",%.12g", at(r, c));
            out += buf;
        }
        out += '\n';
    }
    return out;
}

DisjointCheck check_core_disjoint(const DeductiveSource& source) {
    CoreDecomposition atom = extract_core(source);
    ReconSets z = recon_sets(source, ReconVariant::unbounded());
    std::vector<std::vector<uint32_t>> core_zero;
    for (uint32_t a : atom.core)
        core_zero.push_back(z.zero[source.stored_position(a)]);
    return disjoint_over(atom.core, core_zero);
}

DisjointCheck check_delta_disjoint(const DeductiveSource& source, int delta) {
    std::vector<uint32_t> core = delta_core(source, delta);
    ReconSets z = recon_sets(source, ReconVariant::bounded(delta));
    std::vector<std::vector<uint32_t>> core_zero;
    for (uint32_t a : core) core_zero.push_back(z.zero[source.stored_position(a)]);
    return disjoint_over(core, core_zero);
}

CoverageCheck check_core_coverage(const DeductiveSource& source) {
    CoverageCheck out;
    CoreDecomposition atom = extract_core(source);
    if (atom.mass == 0.0) {
        const FactSet& closure = source.stored_closure();
        for (uint32_t cand : source.recon())
            if (closure.test(cand)) return out;
        out.covered = false;
        return out;
    }
    ReconSets z = recon_sets(source, ReconVariant::unbounded());
    for (uint32_t a : atom.core) {
        if (z.zero[source.stored_position(a)].empty()) {
            out.covered = false;
            out.missing = a;
            return out;
        }
    }
    return out;
}

PairwiseRealisabilityCheck check_pairwise_realisability(const DeductiveSource& source,
                                                        size_t core_cap) {
    PairwiseRealisabilityCheck out;
    CoreDecomposition atom = extract_core(source);
    size_t n = atom.core.size();
    if (n > core_cap)
        throw CapExceeded("core too large for exhaustive realisability check (" +
                          std::to_string(n) + " > " + std::to_string(core_cap) + ")");
    if (n == 0) return out;

    ReconSets z = recon_sets(source, ReconVariant::unbounded());
    // Zero sets as compact bitsets over alphabet positions.
    size_t m = z.alphabet.size();
    size_t words = (m + 63) / 64;
    std::vector<std::vector<uint64_t>> zero_bits(n, std::vector<uint64_t>(words, 0));
    for (size_t i = 0; i < n; ++i) {
        const auto& zs = z.zero[source.stored_position(atom.core[i])];
        size_t pos = 0;
        for (uint32_t cand : zs) {
            while (z.alphabet[pos] != cand) ++pos;
            zero_bits[i][pos / 64] |= uint64_t{1} << (pos % 64);
        }
    }

    auto intersect_empty = [&](const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
        for (size_t w = 0; w < words; ++w)
            if (a[w] & b[w]) return false;
        return true;
    };

    std::vector<uint64_t> compatible(n, 0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i != j && !intersect_empty(zero_bits[i], zero_bits[j]))
                compatible[i] |= uint64_t{1} << j;

    std::vector<uint64_t> joint(words);
    for (uint64_t mask = 1; mask < (uint64_t{1} << n); ++mask) {
        bool pairwise = true;
        for (size_t i = 0; i < n && pairwise; ++i) {
            if (!(mask >> i & 1)) continue;
            uint64_t others = mask & ~(uint64_t{1} << i);
            pairwise = (others & ~compatible[i]) == 0;
        }
        if (!pairwise) continue;
        std::fill(joint.begin(), joint.end(), ~uint64_t{0});
        for (size_t i = 0; i < n; ++i)
            if (mask >> i & 1)
                for (size_t w = 0; w < words; ++w) joint[w] &= zero_bits[i][w];
        bool empty = true;
        for (size_t w = 0; w < words && empty; ++w) empty = joint[w] == 0;
        if (empty) {
            out.holds = false;
            for (size_t i = 0; i < n; ++i)
                if (mask >> i & 1) out.violating.push_back(atom.core[i]);
            return out;
        }
    }
    return out;
}

} // namespace semrd
