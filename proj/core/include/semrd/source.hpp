#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "semrd/engine.hpp"
#include "semrd/fact.hpp"
#include "semrd/program.hpp"

namespace semrd {

/// How the reconstruction alphabet of an instance is specified.
struct ReconSpec {
    enum Mode { Closure, Stored, Explicit } mode = Closure;
    std::vector<GroundFact> facts; // Explicit mode only
};

/// A finite knowledge base with a probability per stored statement, a
/// reconstruction alphabet, and the fixed program that induces closure.
/// The stored-list order is the canonical scan order. Copies share the
/// immutable program/universe/engine.
class DeductiveSource {
  public:
    DeductiveSource(std::shared_ptr<const Program> program,
                    std::shared_ptr<const Universe> universe,
                    std::vector<uint32_t> stored, std::vector<double> probs,
                    std::vector<uint32_t> recon, ReconSpec::Mode recon_mode);

    const Program& program() const { return *program_; }
    const Universe& universe() const { return *universe_; }
    const ClosureEngine& engine() const { return *engine_; }

    size_t n_stored() const { return stored_.size(); }
    uint32_t stored_index(size_t i) const { return stored_[i]; }
    const std::vector<uint32_t>& stored() const { return stored_; }
    double prob(size_t i) const { return probs_[i]; }
    const std::vector<double>& probs() const { return probs_; }
    const std::vector<uint32_t>& recon() const { return recon_; }
    ReconSpec::Mode recon_mode() const { return recon_mode_; }

    const std::string& stored_text(size_t i) const { return universe_->text(stored_[i]); }

    /// Position of a universe index in the stored list, or npos.
    size_t stored_position(uint32_t universe_index) const;
    double prob_of_index(uint32_t universe_index) const;

    FactSet stored_set() const;
    FactSet recon_set() const;
    const FactSet& stored_closure() const; // Cn(S_O), computed once

    /// Shannon entropy of the stored distribution, in bits.
    double stored_entropy() const;

    /// Same instance with the stored scan order permuted; perm[k] is the
    /// position in the current order of the k-th fact in the new order.
    DeductiveSource with_stored_order(const std::vector<size_t>& perm) const;

  private:
    std::shared_ptr<const Program> program_;
    std::shared_ptr<const Universe> universe_;
    std::shared_ptr<const ClosureEngine> engine_;
    std::vector<uint32_t> stored_;
    std::vector<double> probs_;
    std::vector<uint32_t> recon_; // ascending universe indices
    ReconSpec::Mode recon_mode_;
    mutable std::shared_ptr<const FactSet> stored_closure_;
};

/// Validates and assembles a source. The universe is built over constants in
/// the stored facts, explicit reconstruction facts, and the program.
DeductiveSource make_source(Program program,
                            std::vector<std::pair<GroundFact, double>> stored,
                            ReconSpec recon, size_t universe_cap = kDefaultUniverseCap);

/// Instance file format: sections [rules], [stored], [reconstruction].
/// Stored lines are `fact. p=<decimal>` in canonical order; the
/// reconstruction section is the keyword `closure`, the keyword `stored`,
/// or explicit fact lines.
DeductiveSource parse_instance(std::string_view text,
                               size_t universe_cap = kDefaultUniverseCap);
DeductiveSource load_instance(const std::string& path,
                              size_t universe_cap = kDefaultUniverseCap);
std::string write_instance(const DeductiveSource& source);

/// Resolves a fact string against an existing source's universe.
uint32_t resolve_fact(const DeductiveSource& source, std::string_view text);

/// Parses a file of fact lines (used for restricted alphabets).
std::vector<uint32_t> parse_fact_list(const DeductiveSource& source, std::string_view text);

} // namespace semrd
