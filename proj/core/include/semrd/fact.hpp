#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace semrd {

/// Append-only string interner shared by a program and its universe.
/// Ids are stable; interning the same name twice yields the same id.
class SymbolTable {
  public:
    uint32_t intern(std::string_view name);
    std::optional<uint32_t> find(std::string_view name) const;
    const std::string& name(uint32_t id) const { return names_.at(id); }
    size_t size() const { return names_.size(); }

  private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, uint32_t> ids_;
};

/// A ground atom: predicate symbol applied to constant symbols.
struct GroundFact {
    uint32_t pred = 0;
    std::vector<uint32_t> args;

    bool operator==(const GroundFact&) const = default;
};

struct GroundFactHash {
    size_t operator()(const GroundFact& f) const;
};

/// Renders "pred" or "pred(c1,...,cn)".
std::string to_string(const GroundFact& f, const SymbolTable& symbols);

/// Set of fact indices into a fixed universe, stored as a bitset.
class FactSet {
  public:
    FactSet() = default;
    explicit FactSet(size_t n_facts);

    size_t size() const { return n_; }
    size_t count() const;
    bool empty() const { return count() == 0; }

    void set(uint32_t i);
    void reset(uint32_t i);
    bool test(uint32_t i) const;

    FactSet& operator|=(const FactSet& o);
    FactSet& operator&=(const FactSet& o);
    FactSet& subtract(const FactSet& o);

    bool is_subset_of(const FactSet& o) const;
    bool intersects(const FactSet& o) const;
    size_t intersect_count(const FactSet& o) const;
    size_t union_count(const FactSet& o) const;
    bool operator==(const FactSet& o) const { return n_ == o.n_ && words_ == o.words_; }

    size_t hash() const;

    /// Ascending indices of the members.
    std::vector<uint32_t> indices() const;

    /// Calls fn(index) for each member in ascending order.
    template <typename Fn> void for_each(Fn&& fn) const {
        for (size_t w = 0; w < words_.size(); ++w) {
            uint64_t bits = words_[w];
            while (bits) {
                unsigned b = static_cast<unsigned>(__builtin_ctzll(bits));
                fn(static_cast<uint32_t>(w * 64 + b));
                bits &= bits - 1;
            }
        }
    }

  private:
    size_t n_ = 0;
    std::vector<uint64_t> words_;
};

struct FactSetHash {
    size_t operator()(const FactSet& s) const { return s.hash(); }
};

/// The finite ambient set of candidate statements: every ground atom over the
/// active domain for every declared predicate, in a fixed canonical order
/// (lexicographic on the rendered text). Indices into this order are the
/// fact handles used everywhere else.
class Universe {
  public:
    Universe(std::shared_ptr<const SymbolTable> symbols, std::vector<GroundFact> facts);

    size_t size() const { return facts_.size(); }
    const GroundFact& fact(uint32_t idx) const { return facts_.at(idx); }
    const std::string& text(uint32_t idx) const { return texts_.at(idx); }
    std::optional<uint32_t> index_of(const GroundFact& f) const;

    /// Contiguous [begin,end) index range of a predicate's atoms.
    std::pair<uint32_t, uint32_t> pred_range(uint32_t pred) const;

    const SymbolTable& symbols() const { return *symbols_; }
    std::shared_ptr<const SymbolTable> symbols_ptr() const { return symbols_; }

    FactSet empty_set() const { return FactSet(size()); }
    FactSet full_set() const;

  private:
    std::shared_ptr<const SymbolTable> symbols_;
    std::vector<GroundFact> facts_;           // sorted canonically
    std::vector<std::string> texts_;          // rendered forms, same order
    std::unordered_map<GroundFact, uint32_t, GroundFactHash> index_;
    std::unordered_map<uint32_t, std::pair<uint32_t, uint32_t>> pred_ranges_;
};

} // namespace semrd
