#include "semrd/program.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "semrd/error.hpp"

namespace semrd {

void Program::declare(uint32_t pred, int arity) {
    auto [it, inserted] = arities_.try_emplace(pred, arity);
    if (!inserted && it->second != arity)
        throw ValidationError("arity conflict for predicate '" + symbols_->name(pred) + "'",
                              std::to_string(it->second) + " vs " + std::to_string(arity));
}

bool Program::is_head_predicate(uint32_t pred) const {
    return std::any_of(rules_.begin(), rules_.end(),
                       [&](const Rule& r) { return r.head.pred == pred; });
}

std::vector<uint32_t> Program::constants() const {
    std::set<uint32_t> out;
    for (const Rule& r : rules_) {
        for (const Term& t : r.head.terms)
            if (!t.is_var) out.insert(t.id);
        for (const AtomPattern& a : r.body)
            for (const Term& t : a.terms)
                if (!t.is_var) out.insert(t.id);
    }
    for (const GroundFact& f : axioms_)
        for (uint32_t c : f.args) out.insert(c);
    return {out.begin(), out.end()};
}

namespace {

struct Cursor {
    std::string_view s;
    size_t pos = 0;
    int line;

    int col() const { return static_cast<int>(pos) + 1; }
    bool done() const { return pos >= s.size(); }
    char peek() const { return pos < s.size() ? s[pos] : '\0'; }
    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\r')) ++pos;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, col()); }
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string_view read_ident(Cursor& c) {
    c.skip_ws();
    if (!ident_start(c.peek())) c.fail("expected identifier");
    size_t start = c.pos;
    while (!c.done() && ident_char(c.peek())) ++c.pos;
    return c.s.substr(start, c.pos - start);
}

bool is_variable(std::string_view name) {
    return std::isupper(static_cast<unsigned char>(name.front())) || name.front() == '_';
}

struct ParsedAtom {
    std::string_view pred;
    std::vector<std::string_view> terms;
    int col;
};

ParsedAtom read_atom(Cursor& c) {
    c.skip_ws();
    ParsedAtom atom;
    atom.col = c.col();
    atom.pred = read_ident(c);
    if (is_variable(atom.pred)) c.fail("predicate names must be lowercase");
    c.skip_ws();
    if (c.peek() == '(') {
        ++c.pos;
        while (true) {
            std::string_view t = read_ident(c);
            c.skip_ws();
            if (c.peek() == '(')
                c.fail("function symbols are not supported");
            atom.terms.push_back(t);
            if (c.peek() == ',') { ++c.pos; continue; }
            if (c.peek() == ')') { ++c.pos; break; }
            c.fail("expected ',' or ')' in atom");
        }
        if (atom.terms.empty()) c.fail("empty argument list");
    }
    return atom;
}

void parse_line(Program& program, std::string_view raw, int line_no) {
    std::string_view content = raw;
    if (size_t cmt = content.find('%'); cmt != std::string_view::npos)
        content = content.substr(0, cmt);

    Cursor c{content, 0, line_no};
    c.skip_ws();
    if (c.done()) return;

    if (c.peek() == '!' || content.find("\\+") != std::string_view::npos)
        c.fail("negation is not supported");

    ParsedAtom head = read_atom(c);
    c.skip_ws();

    std::vector<ParsedAtom> body;
    if (c.peek() == ':') {
        ++c.pos;
        if (c.peek() != '-') c.fail("expected ':-'");
        ++c.pos;
        while (true) {
            body.push_back(read_atom(c));
            c.skip_ws();
            if (c.peek() == ',') { ++c.pos; continue; }
            break;
        }
    }
    c.skip_ws();
    if (c.peek() != '.') c.fail("expected '.' at end of clause");
    ++c.pos;
    c.skip_ws();
    if (!c.done()) c.fail("trailing text after '.'");

    auto intern_atom = [&](const ParsedAtom& a, std::map<std::string_view, uint32_t>& vars,
                           bool& has_var) {
        AtomPattern out;
        out.pred = program.symbols().intern(a.pred);
        program.declare(out.pred, static_cast<int>(a.terms.size()));
        for (std::string_view t : a.terms) {
            if (is_variable(t)) {
                has_var = true;
                auto [it, ins] = vars.try_emplace(t, static_cast<uint32_t>(vars.size()));
                out.terms.push_back(Term{true, it->second});
            } else {
                out.terms.push_back(Term{false, program.symbols().intern(t)});
            }
        }
        return out;
    };

    if (body.empty()) {
        // Ground fact stated in the program text: an axiom.
        GroundFact f;
        f.pred = program.symbols().intern(head.pred);
        program.declare(f.pred, static_cast<int>(head.terms.size()));
        for (std::string_view t : head.terms) {
            if (is_variable(t))
                throw ParseError("fact must be ground", line_no, head.col);
            f.args.push_back(program.symbols().intern(t));
        }
        program.add_axiom(std::move(f));
        return;
    }

    Rule rule;
    std::map<std::string_view, uint32_t> vars;
    bool ignored = false;
    rule.head = intern_atom(head, vars, ignored);
    std::set<uint32_t> head_vars;
    for (const Term& t : rule.head.terms)
        if (t.is_var) head_vars.insert(t.id);

    std::set<uint32_t> body_vars;
    for (const ParsedAtom& a : body) {
        bool hv = false;
        rule.body.push_back(intern_atom(a, vars, hv));
        for (const Term& t : rule.body.back().terms)
            if (t.is_var) body_vars.insert(t.id);
    }
    for (uint32_t v : head_vars)
        if (!body_vars.count(v))
            throw ParseError("unsafe rule: head variable does not occur in the body",
                             line_no, head.col);
    rule.n_vars = static_cast<uint32_t>(vars.size());

    std::string text(content);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r'))
        text.pop_back();
    size_t lead = text.find_first_not_of(" \t");
    rule.text = lead == std::string::npos ? text : text.substr(lead);
    program.add_rule(std::move(rule));
}

} // namespace

void parse_program_into(Program& program, std::string_view text, int first_line) {
    int line_no = first_line;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        std::string_view line = end == std::string_view::npos
                                    ? text.substr(start)
                                    : text.substr(start, end - start);
        parse_line(program, line, line_no);
        if (end == std::string_view::npos) break;
        start = end + 1;
        ++line_no;
    }
}

Program parse_program(std::string_view text) {
    Program program;
    parse_program_into(program, text);
    return program;
}

GroundFact parse_fact(Program& program, std::string_view text, int line) {
    Cursor c{text, 0, line};
    ParsedAtom a = read_atom(c);
    c.skip_ws();
    if (c.peek() == '.') { ++c.pos; c.skip_ws(); }
    if (!c.done()) c.fail("trailing text after fact");
    GroundFact f;
    f.pred = program.symbols().intern(a.pred);
    program.declare(f.pred, static_cast<int>(a.terms.size()));
    for (std::string_view t : a.terms) {
        if (is_variable(t)) c.fail("fact must be ground");
        f.args.push_back(program.symbols().intern(t));
    }
    return f;
}

} // namespace semrd
