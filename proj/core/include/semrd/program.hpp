#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "semrd/fact.hpp"

namespace semrd {

/// A term in a rule atom: either a constant symbol or a rule-local variable.
struct Term {
    bool is_var = false;
    uint32_t id = 0; // symbol id for constants, local slot for variables
    bool operator==(const Term&) const = default;
};

struct AtomPattern {
    uint32_t pred = 0;
    std::vector<Term> terms;
};

/// A function-free, range-restricted Horn rule with a nonempty body.
struct Rule {
    AtomPattern head;
    std::vector<AtomPattern> body;
    uint32_t n_vars = 0;
    std::string text; // original line, kept for reports
};

/// A function-free Datalog program: rules plus any ground facts stated
/// directly in the program text (axioms present in every closure).
class Program {
  public:
    Program() : symbols_(std::make_shared<SymbolTable>()) {}

    const std::vector<Rule>& rules() const { return rules_; }
    const std::vector<GroundFact>& axioms() const { return axioms_; }
    const std::map<uint32_t, int>& arities() const { return arities_; }

    SymbolTable& symbols() { return *symbols_; }
    const SymbolTable& symbols() const { return *symbols_; }
    std::shared_ptr<const SymbolTable> symbols_ptr() const { return symbols_; }

    /// Registers a predicate, enforcing arity consistency.
    void declare(uint32_t pred, int arity);
    void add_rule(Rule r) { rules_.push_back(std::move(r)); }
    void add_axiom(GroundFact f) { axioms_.push_back(std::move(f)); }

    /// True if no rule head uses this predicate; such facts are derivable
    /// only from themselves.
    bool is_head_predicate(uint32_t pred) const;

    /// Constants mentioned anywhere in rules or axioms.
    std::vector<uint32_t> constants() const;

  private:
    std::shared_ptr<SymbolTable> symbols_;
    std::vector<Rule> rules_;
    std::vector<GroundFact> axioms_;
    std::map<uint32_t, int> arities_;
};

/// Parses rule text: one rule or fact per line, `head :- b1, ..., bk.` or
/// `pred(c1,...,cn).`; `%` starts a comment. Constants are lowercase
/// identifiers, variables uppercase. Rejects unsafe rules, arity conflicts,
/// negation, and function symbols.
Program parse_program(std::string_view text);

/// Parses rule/fact lines into an existing program (shared symbol table).
void parse_program_into(Program& program, std::string_view text, int first_line = 1);

/// Parses a single ground fact "pred(c1,...,cn)" (terminating '.' optional).
GroundFact parse_fact(Program& program, std::string_view text, int line = 1);

} // namespace semrd
