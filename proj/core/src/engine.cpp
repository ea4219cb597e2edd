#include "semrd/engine.hpp"

#include <algorithm>
#include <set>

#include "semrd/error.hpp"

namespace semrd {

Universe active_universe(const Program& program, const std::vector<GroundFact>& seeds,
                         size_t cap) {
    std::set<uint32_t> domain;
    for (uint32_t c : program.constants()) domain.insert(c);
    for (const GroundFact& f : seeds)
        for (uint32_t c : f.args) domain.insert(c);

    // Seeds may mention predicates the program never does.
    std::map<uint32_t, int> arities = program.arities();
    for (const GroundFact& f : seeds) {
        auto [it, inserted] = arities.try_emplace(f.pred, static_cast<int>(f.args.size()));
        if (!inserted && it->second != static_cast<int>(f.args.size()))
            throw ValidationError("arity conflict for predicate '" +
                                      program.symbols().name(f.pred) + "'",
                                  to_string(f, program.symbols()));
    }

    size_t total = 0;
    for (auto [pred, arity] : arities) {
        size_t n = 1;
        for (int i = 0; i < arity; ++i) {
            n *= domain.size();
            if (n > cap) break;
        }
        total += n;
        if (total > cap)
            throw CapExceeded("universe would exceed " + std::to_string(cap) + " ground atoms");
    }

    std::vector<uint32_t> consts(domain.begin(), domain.end());
    std::vector<GroundFact> facts;
    facts.reserve(total);
    for (auto [pred, arity] : arities) {
        if (arity == 0) {
            facts.push_back(GroundFact{pred, {}});
            continue;
        }
        if (consts.empty()) continue;
        std::vector<size_t> idx(static_cast<size_t>(arity), 0);
        while (true) {
            GroundFact f;
            f.pred = pred;
            for (size_t i : idx) f.args.push_back(consts[i]);
            facts.push_back(std::move(f));
            int pos = arity - 1;
            while (pos >= 0 && ++idx[static_cast<size_t>(pos)] == consts.size()) {
                idx[static_cast<size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
    }
    return Universe(program.symbols_ptr(), std::move(facts));
}

ClosureEngine::ClosureEngine(const Program& program, const Universe& universe)
    : prog_(program), uni_(universe), axioms_(universe.size()) {
    for (const GroundFact& f : prog_.axioms()) {
        auto idx = uni_.index_of(f);
        if (idx) axioms_.set(*idx);
    }
}

FactSet ClosureEngine::axiom_set() const { return axioms_; }

void ClosureEngine::eval_rule(const Rule& rule, const FactSet& total, const FactSet& delta,
                              size_t delta_pos, std::vector<uint32_t>& out) const {
    std::vector<uint32_t> binding(rule.n_vars, 0);
    std::vector<bool> bound(rule.n_vars, false);

    // Nested-loop join over body atoms in written order; atom `delta_pos`
    // draws candidates from delta, the rest from total.
    auto emit_head = [&]() {
        GroundFact f;
        f.pred = rule.head.pred;
        f.args.reserve(rule.head.terms.size());
        for (const Term& t : rule.head.terms)
            f.args.push_back(t.is_var ? binding[t.id] : t.id);
        auto idx = uni_.index_of(f);
        if (idx) out.push_back(*idx);
    };

    auto match = [&](auto&& self, size_t atom_i) -> void {
        if (atom_i == rule.body.size()) {
            emit_head();
            return;
        }
        const AtomPattern& atom = rule.body[atom_i];
        const FactSet& pool = atom_i == delta_pos ? delta : total;
        auto [lo, hi] = uni_.pred_range(atom.pred);
        for (uint32_t fi = lo; fi < hi; ++fi) {
            if (!pool.test(fi)) continue;
            const GroundFact& f = uni_.fact(fi);
            bool ok = true;
            std::vector<uint32_t> newly;
            for (size_t k = 0; k < atom.terms.size() && ok; ++k) {
                const Term& t = atom.terms[k];
                if (!t.is_var) {
                    ok = f.args[k] == t.id;
                } else if (bound[t.id]) {
                    ok = f.args[k] == binding[t.id];
                } else {
                    bound[t.id] = true;
                    binding[t.id] = f.args[k];
                    newly.push_back(t.id);
                }
            }
            if (ok) self(self, atom_i + 1);
            for (uint32_t v : newly) bound[v] = false;
        }
    };
    match(match, 0);
}

void ClosureEngine::round(const FactSet& total, const FactSet& delta,
                          std::vector<uint32_t>& out) const {
    for (const Rule& rule : prog_.rules())
        for (size_t dp = 0; dp < rule.body.size(); ++dp)
            eval_rule(rule, total, delta, dp, out);
}

FactSet ClosureEngine::step(const FactSet& base) const {
    FactSet total = base;
    total |= axioms_;
    std::vector<uint32_t> derived;
    round(base, base, derived);
    for (uint32_t i : derived) total.set(i);
    return total;
}

FactSet ClosureEngine::closure(const FactSet& base) const {
    {
        std::shared_lock lock(cache_mutex_);
        auto it = cache_.find(base);
        if (it != cache_.end()) return it->second;
    }
    FactSet total = base;
    total |= axioms_;
    FactSet delta = total;
    std::vector<uint32_t> derived;
    size_t rounds = 0;
    while (true) {
        if (++rounds > uni_.size() + 2)
            throw Error("closure iteration exceeded the universe size"); // unreachable
        derived.clear();
        round(total, delta, derived);
        delta = FactSet(uni_.size());
        bool grew = false;
        for (uint32_t i : derived) {
            if (!total.test(i)) {
                total.set(i);
                delta.set(i);
                grew = true;
            }
        }
        if (!grew) break;
    }
    {
        std::unique_lock lock(cache_mutex_);
        cache_.emplace(base, total);
    }
    return total;
}

FactSet ClosureEngine::closure_naive(const FactSet& base) const {
    FactSet total = base;
    while (true) {
        FactSet next = step(total);
        if (next == total) return total;
        total = next;
    }
}

FactSet ClosureEngine::bounded_closure(const FactSet& base, int depth) const {
    FactSet total = base;
    for (int n = 0; n < depth; ++n) {
        FactSet next = step(total);
        if (next == total) return total; // stabilized early
        total = next;
    }
    return total;
}

FactSet ClosureEngine::closure_with(const FactSet& closed, uint32_t extra) const {
    if (closed.test(extra)) return closed;
    FactSet total = closed;
    total.set(extra);
    FactSet delta(uni_.size());
    delta.set(extra);
    std::vector<uint32_t> derived;
    while (true) {
        derived.clear();
        round(total, delta, derived);
        delta = FactSet(uni_.size());
        bool grew = false;
        for (uint32_t i : derived) {
            if (!total.test(i)) {
                total.set(i);
                delta.set(i);
                grew = true;
            }
        }
        if (!grew) return total;
    }
}

bool ClosureEngine::derives(const FactSet& base, uint32_t fact) const {
    if (base.test(fact)) return true;
    {
        std::shared_lock lock(cache_mutex_);
        auto it = cache_.find(base);
        if (it != cache_.end()) return it->second.test(fact);
    }
    FactSet total = base;
    total |= axioms_;
    if (total.test(fact)) return true;
    FactSet delta = total;
    std::vector<uint32_t> derived;
    while (true) {
        derived.clear();
        round(total, delta, derived);
        delta = FactSet(uni_.size());
        bool grew = false;
        for (uint32_t i : derived) {
            if (!total.test(i)) {
                total.set(i);
                delta.set(i);
                grew = true;
            }
        }
        if (total.test(fact)) return true;
        if (!grew) return false;
    }
}

std::optional<int> ClosureEngine::derivation_depth(const FactSet& base, uint32_t fact) const {
    if (base.test(fact)) return 0;
    FactSet total = base;
    int n = 0;
    while (true) {
        FactSet next = step(total);
        ++n;
        if (next.test(fact)) return n;
        if (next == total) return std::nullopt;
        total = next;
    }
}

int ClosureEngine::stabilization_index(const FactSet& base) const {
    FactSet total = base;
    int n = 0;
    while (true) {
        FactSet next = step(total);
        if (next == total) return n;
        total = next;
        ++n;
    }
}

size_t ClosureEngine::cache_size() const {
    std::shared_lock lock(cache_mutex_);
    return cache_.size();
}

} // namespace semrd
