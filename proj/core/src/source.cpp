#include "semrd/source.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "semrd/error.hpp"

namespace semrd {

namespace {
constexpr double kProbSumTol = 1e-9;

std::string trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::string strip_comment(std::string_view line) {
    size_t cmt = line.find('%');
    return trim(cmt == std::string_view::npos ? line : line.substr(0, cmt));
}

std::string format_prob(double p) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", p);
    return buf;
}
} // namespace

DeductiveSource::DeductiveSource(std::shared_ptr<const Program> program,
                                 std::shared_ptr<const Universe> universe,
                                 std::vector<uint32_t> stored, std::vector<double> probs,
                                 std::vector<uint32_t> recon, ReconSpec::Mode recon_mode)
    : program_(std::move(program)), universe_(std::move(universe)),
      stored_(std::move(stored)), probs_(std::move(probs)), recon_(std::move(recon)),
      recon_mode_(recon_mode) {
    engine_ = std::make_shared<const ClosureEngine>(*program_, *universe_);

    std::set<uint32_t> seen;
    for (uint32_t i : stored_)
        if (!seen.insert(i).second)
            throw ValidationError("duplicate stored fact", universe_->text(i));
    if (stored_.size() != probs_.size())
        throw ValidationError("stored/probability length mismatch");
    double sum = 0.0;
    for (size_t i = 0; i < probs_.size(); ++i) {
        if (probs_[i] < 0.0)
            throw ValidationError("negative probability", stored_text(i));
        sum += probs_[i];
    }
    if (!stored_.empty() && std::fabs(sum - 1.0) > kProbSumTol)
        throw ValidationError("stored probabilities must sum to 1",
                              "sum=" + format_prob(sum));
    if (recon_.empty())
        throw ValidationError("reconstruction alphabet is empty");
    std::sort(recon_.begin(), recon_.end());
    recon_.erase(std::unique(recon_.begin(), recon_.end()), recon_.end());
}

size_t DeductiveSource::stored_position(uint32_t universe_index) const {
    for (size_t i = 0; i < stored_.size(); ++i)
        if (stored_[i] == universe_index) return i;
    return static_cast<size_t>(-1);
}

double DeductiveSource::prob_of_index(uint32_t universe_index) const {
    size_t pos = stored_position(universe_index);
    return pos == static_cast<size_t>(-1) ? 0.0 : probs_[pos];
}

FactSet DeductiveSource::stored_set() const {
    FactSet s(universe_->size());
    for (uint32_t i : stored_) s.set(i);
    return s;
}

FactSet DeductiveSource::recon_set() const {
    FactSet s(universe_->size());
    for (uint32_t i : recon_) s.set(i);
    return s;
}

const FactSet& DeductiveSource::stored_closure() const {
    if (!stored_closure_)
        stored_closure_ = std::make_shared<const FactSet>(engine_->closure(stored_set()));
    return *stored_closure_;
}

double DeductiveSource::stored_entropy() const {
    double h = 0.0;
    for (double p : probs_)
        if (p > 0.0) h -= p * std::log2(p);
    return h;
}

DeductiveSource DeductiveSource::with_stored_order(const std::vector<size_t>& perm) const {
    if (perm.size() != stored_.size())
        throw ValidationError("permutation length mismatch");
    std::vector<uint32_t> stored(perm.size());
    std::vector<double> probs(perm.size());
    std::vector<bool> used(perm.size(), false);
    for (size_t k = 0; k < perm.size(); ++k) {
        size_t p = perm[k];
        if (p >= stored_.size() || used[p]) throw ValidationError("invalid permutation");
        used[p] = true;
        stored[k] = stored_[p];
        probs[k] = probs_[p];
    }
    return DeductiveSource(program_, universe_, std::move(stored), std::move(probs),
                           recon_, recon_mode_);
}

DeductiveSource make_source(Program program,
                            std::vector<std::pair<GroundFact, double>> stored,
                            ReconSpec recon, size_t universe_cap) {
    std::vector<GroundFact> seeds;
    seeds.reserve(stored.size() + recon.facts.size());
    for (auto& [f, p] : stored) seeds.push_back(f);
    for (auto& f : recon.facts) seeds.push_back(f);

    auto uni = std::make_shared<const Universe>(active_universe(program, seeds, universe_cap));
    auto prog = std::make_shared<const Program>(std::move(program));

    std::vector<uint32_t> stored_idx;
    std::vector<double> probs;
    for (auto& [f, p] : stored) {
        auto idx = uni->index_of(f);
        if (!idx)
            throw ValidationError("stored fact outside the universe",
                                  to_string(f, prog->symbols()));
        stored_idx.push_back(*idx);
        probs.push_back(p);
    }

    std::vector<uint32_t> recon_idx;
    switch (recon.mode) {
    case ReconSpec::Stored:
        recon_idx = stored_idx;
        break;
    case ReconSpec::Explicit:
        for (const GroundFact& f : recon.facts) {
            auto idx = uni->index_of(f);
            if (!idx)
                throw ValidationError("reconstruction fact outside the universe",
                                      to_string(f, prog->symbols()));
            recon_idx.push_back(*idx);
        }
        break;
    case ReconSpec::Closure: {
        ClosureEngine engine(*prog, *uni);
        FactSet base(uni->size());
        for (uint32_t i : stored_idx) base.set(i);
        recon_idx = engine.closure(base).indices();
        break;
    }
    }
    return DeductiveSource(std::move(prog), std::move(uni), std::move(stored_idx),
                           std::move(probs), std::move(recon_idx), recon.mode);
}

DeductiveSource parse_instance(std::string_view text, size_t universe_cap) {
    enum Section { None, Rules, Stored, Recon } section = None;
    Program program;
    std::vector<std::pair<GroundFact, double>> stored;
    ReconSpec recon;
    bool recon_keyword_seen = false;
    bool recon_section_seen = false;

    int line_no = 0;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        std::string_view raw = end == std::string_view::npos ? text.substr(start)
                                                             : text.substr(start, end - start);
        ++line_no;
        std::string line = strip_comment(raw);
        if (!line.empty()) {
            if (line == "[rules]") {
                section = Rules;
            } else if (line == "[stored]") {
                section = Stored;
            } else if (line == "[reconstruction]") {
                section = Recon;
                recon_section_seen = true;
            } else switch (section) {
            case None:
                throw ParseError("content before any section header", line_no, 1);
            case Rules:
                parse_program_into(program, line, line_no);
                break;
            case Stored: {
                size_t dot = line.find('.');
                if (dot == std::string::npos)
                    throw ParseError("expected 'fact. p=<decimal>'", line_no, 1);
                GroundFact f = parse_fact(program, line.substr(0, dot + 1), line_no);
                std::string rest = trim(std::string_view(line).substr(dot + 1));
                if (rest.rfind("p=", 0) != 0)
                    throw ParseError("expected 'p=<decimal>' after fact", line_no,
                                     static_cast<int>(dot) + 2);
                double p = 0.0;
                const char* b = rest.data() + 2;
                const char* e = rest.data() + rest.size();
                auto [ptr, ec] = std::from_chars(b, e, p);
                if (ec != std::errc() || ptr != e)
                    throw ParseError("malformed probability", line_no,
                                     static_cast<int>(dot) + 4);
                stored.emplace_back(std::move(f), p);
                break;
            }
            case Recon:
                if (line == "closure") {
                    recon.mode = ReconSpec::Closure;
                    recon_keyword_seen = true;
                } else if (line == "stored") {
                    recon.mode = ReconSpec::Stored;
                    recon_keyword_seen = true;
                } else {
                    if (recon_keyword_seen)
                        throw ParseError("mixing keyword and explicit reconstruction",
                                         line_no, 1);
                    recon.mode = ReconSpec::Explicit;
                    recon.facts.push_back(parse_fact(program, line, line_no));
                }
                break;
            }
        }
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    if (!recon_section_seen)
        throw ParseError("missing [reconstruction] section", line_no, 1);
    return make_source(std::move(program), std::move(stored), std::move(recon), universe_cap);
}

DeductiveSource load_instance(const std::string& path, size_t universe_cap) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open instance file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str(), universe_cap);
}

std::string write_instance(const DeductiveSource& source) {
    std::string out;
    out += "[rules]\n";
    for (const Rule& r : source.program().rules()) {
        out += r.text;
        out += '\n';
    }
    for (const GroundFact& f : source.program().axioms()) {
        out += to_string(f, source.program().symbols());
        out += ".\n";
    }
    out += "[stored]\n";
    for (size_t i = 0; i < source.n_stored(); ++i) {
        out += source.stored_text(i);
        out += ". p=";
        out += format_prob(source.prob(i));
        out += '\n';
    }
    out += "[reconstruction]\n";
    switch (source.recon_mode()) {
    case ReconSpec::Closure: out += "closure\n"; break;
    case ReconSpec::Stored: out += "stored\n"; break;
    case ReconSpec::Explicit:
        for (uint32_t idx : source.recon()) {
            out += source.universe().text(idx);
            out += ".\n";
        }
        break;
    }
    return out;
}

uint32_t resolve_fact(const DeductiveSource& source, std::string_view text) {
    // Parse against a scratch program so the source's table is not mutated.
    Program scratch;
    GroundFact parsed = parse_fact(scratch, text);
    GroundFact resolved;
    const SymbolTable& table = source.program().symbols();
    auto pred = table.find(scratch.symbols().name(parsed.pred));
    if (!pred)
        throw ValidationError("fact outside the universe", std::string(text));
    resolved.pred = *pred;
    for (uint32_t a : parsed.args) {
        auto c = table.find(scratch.symbols().name(a));
        if (!c) throw ValidationError("fact outside the universe", std::string(text));
        resolved.args.push_back(*c);
    }
    auto idx = source.universe().index_of(resolved);
    if (!idx) throw ValidationError("fact outside the universe", std::string(text));
    return *idx;
}

std::vector<uint32_t> parse_fact_list(const DeductiveSource& source, std::string_view text) {
    std::vector<uint32_t> out;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        std::string_view raw = end == std::string_view::npos ? text.substr(start)
                                                             : text.substr(start, end - start);
        std::string line = strip_comment(raw);
        if (!line.empty()) out.push_back(resolve_fact(source, line));
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace semrd
