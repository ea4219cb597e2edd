#include "semrd/fact.hpp"

#include <algorithm>
#include <bit>

#include "semrd/error.hpp"

namespace semrd {

uint32_t SymbolTable::intern(std::string_view name) {
    auto it = ids_.find(std::string(name));
    if (it != ids_.end()) return it->second;
    uint32_t id = static_cast<uint32_t>(names_.size());
    names_.emplace_back(name);
    ids_.emplace(names_.back(), id);
    return id;
}

std::optional<uint32_t> SymbolTable::find(std::string_view name) const {
    auto it = ids_.find(std::string(name));
    if (it == ids_.end()) return std::nullopt;
    return it->second;
}

size_t GroundFactHash::operator()(const GroundFact& f) const {
    size_t h = 0x9e3779b97f4a7c15ull ^ f.pred;
    for (uint32_t a : f.args) h = (h * 0x100000001b3ull) ^ (a + 0x9e37u);
    return h;
}

std::string to_string(const GroundFact& f, const SymbolTable& symbols) {
    std::string s = symbols.name(f.pred);
    if (!f.args.empty()) {
        s += '(';
        for (size_t i = 0; i < f.args.size(); ++i) {
            if (i) s += ',';
            s += symbols.name(f.args[i]);
        }
        s += ')';
    }
    return s;
}

FactSet::FactSet(size_t n_facts) : n_(n_facts), words_((n_facts + 63) / 64, 0) {}

size_t FactSet::count() const {
    size_t c = 0;
    for (uint64_t w : words_) c += static_cast<size_t>(std::popcount(w));
    return c;
}

void FactSet::set(uint32_t i) { words_.at(i / 64) |= (uint64_t{1} << (i % 64)); }
void FactSet::reset(uint32_t i) { words_.at(i / 64) &= ~(uint64_t{1} << (i % 64)); }
bool FactSet::test(uint32_t i) const { return (words_.at(i / 64) >> (i % 64)) & 1; }

FactSet& FactSet::operator|=(const FactSet& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
}

FactSet& FactSet::operator&=(const FactSet& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
}

FactSet& FactSet::subtract(const FactSet& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
}

bool FactSet::is_subset_of(const FactSet& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~o.words_[i]) return false;
    return true;
}

bool FactSet::intersects(const FactSet& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & o.words_[i]) return true;
    return false;
}

size_t FactSet::intersect_count(const FactSet& o) const {
    size_t c = 0;
    for (size_t i = 0; i < words_.size(); ++i)
        c += static_cast<size_t>(std::popcount(words_[i] & o.words_[i]));
    return c;
}

size_t FactSet::union_count(const FactSet& o) const {
    size_t c = 0;
    for (size_t i = 0; i < words_.size(); ++i)
        c += static_cast<size_t>(std::popcount(words_[i] | o.words_[i]));
    return c;
}

size_t FactSet::hash() const {
    size_t h = 0xcbf29ce484222325ull ^ n_;
    for (uint64_t w : words_) {
        h ^= w;
        h *= 0x100000001b3ull;
        h ^= h >> 29;
    }
    return h;
}

std::vector<uint32_t> FactSet::indices() const {
    std::vector<uint32_t> out;
    out.reserve(count());
    for_each([&](uint32_t i) { out.push_back(i); });
    return out;
}

Universe::Universe(std::shared_ptr<const SymbolTable> symbols, std::vector<GroundFact> facts)
    : symbols_(std::move(symbols)), facts_(std::move(facts)) {
    std::sort(facts_.begin(), facts_.end(), [&](const GroundFact& a, const GroundFact& b) {
        return to_string(a, *symbols_) < to_string(b, *symbols_);
    });
    facts_.erase(std::unique(facts_.begin(), facts_.end()), facts_.end());
    texts_.reserve(facts_.size());
    for (uint32_t i = 0; i < facts_.size(); ++i) {
        texts_.push_back(to_string(facts_[i], *symbols_));
        index_.emplace(facts_[i], i);
        auto [it, inserted] = pred_ranges_.try_emplace(facts_[i].pred, i, i + 1);
        if (!inserted) it->second.second = i + 1;
    }
}

std::optional<uint32_t> Universe::index_of(const GroundFact& f) const {
    auto it = index_.find(f);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::pair<uint32_t, uint32_t> Universe::pred_range(uint32_t pred) const {
    auto it = pred_ranges_.find(pred);
    if (it == pred_ranges_.end()) return {0, 0};
    return it->second;
}

FactSet Universe::full_set() const {
    FactSet s(size());
    for (uint32_t i = 0; i < size(); ++i) s.set(i);
    return s;
}

} // namespace semrd
