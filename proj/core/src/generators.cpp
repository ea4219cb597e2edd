#include "semrd/generators.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "semrd/decomposition.hpp"
#include "semrd/error.hpp"

namespace semrd {

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

DeductiveSource uniform_source(Program program, const std::vector<GroundFact>& stored,
                               ReconSpec recon) {
    std::vector<std::pair<GroundFact, double>> with_probs;
    double p = 1.0 / static_cast<double>(stored.size());
    for (const GroundFact& f : stored) with_probs.emplace_back(f, p);
    return make_source(std::move(program), std::move(with_probs), std::move(recon));
}

} // namespace

double seeded_unit(uint64_t seed, uint64_t counter) {
    uint64_t x = splitmix64(seed ^ splitmix64(counter));
    return static_cast<double>(x >> 11) * 0x1.0p-53;
}

DeductiveSource gen_example(const std::string& name) {
    if (name == "EX_ORDER") {
        Program prog = parse_program("p :- q.\nq :- p.");
        std::vector<GroundFact> stored = {parse_fact(prog, "p"), parse_fact(prog, "q"),
                                          parse_fact(prog, "r")};
        return uniform_source(std::move(prog), stored, ReconSpec{ReconSpec::Closure, {}});
    }
    if (name == "EX_MIN") {
        Program prog = parse_program("c :- a, b.");
        std::vector<GroundFact> stored = {parse_fact(prog, "a"), parse_fact(prog, "b"),
                                          parse_fact(prog, "c")};
        return uniform_source(std::move(prog), stored, ReconSpec{ReconSpec::Closure, {}});
    }
    if (name == "EX_DEPTH") {
        Program prog = parse_program("c :- a.\nd :- c.\nf :- b.\ne :- f.");
        std::vector<GroundFact> stored = {parse_fact(prog, "a"), parse_fact(prog, "b"),
                                          parse_fact(prog, "d"), parse_fact(prog, "e")};
        return uniform_source(std::move(prog), stored, ReconSpec{ReconSpec::Closure, {}});
    }
    if (name == "EX_CONF") {
        Program prog = parse_program("r :- a1, a2.\na1 :- b, r.\na2 :- b, r.");
        std::vector<GroundFact> stored = {parse_fact(prog, "a1"), parse_fact(prog, "a2"),
                                          parse_fact(prog, "b")};
        return uniform_source(std::move(prog), stored, ReconSpec{ReconSpec::Closure, {}});
    }
    if (name == "EX_RESTRICT") {
        Program prog; // no rules
        std::vector<GroundFact> stored = {parse_fact(prog, "a"), parse_fact(prog, "b")};
        return uniform_source(std::move(prog), stored, ReconSpec{ReconSpec::Closure, {}});
    }
    throw ValidationError("unknown example name", name);
}

DeductiveSource gen_tag_seeded(int cores, int chain_depth, uint64_t seed) {
    if (cores < 1) throw ValidationError("need at least one core statement");
    if (chain_depth < 1) throw ValidationError("chain depth must be at least 1");

    std::string rules;
    for (int j = 1; j <= chain_depth; ++j) {
        std::string head = "d" + std::to_string(j);
        std::string body = j == 1 ? "seed" : "d" + std::to_string(j - 1);
        rules += head + "(T) :- " + body + "(T).\n";
    }
    Program prog = parse_program(rules);

    std::vector<GroundFact> stored;
    for (int i = 1; i <= cores; ++i)
        stored.push_back(parse_fact(prog, "seed(t" + std::to_string(i) + ")"));
    for (int i = 1; i <= cores; ++i)
        for (int j = 1; j <= chain_depth; ++j)
            stored.push_back(
                parse_fact(prog, "d" + std::to_string(j) + "(t" + std::to_string(i) + ")"));

    // Seed 0 is the uniform source; other seeds draw the distribution.
    std::vector<std::pair<GroundFact, double>> with_probs;
    if (seed == 0) {
        double p = 1.0 / static_cast<double>(stored.size());
        for (const GroundFact& f : stored) with_probs.emplace_back(f, p);
    } else {
        double total = 0.0;
        std::vector<double> raw;
        for (size_t i = 0; i < stored.size(); ++i) {
            double w = 0.05 + seeded_unit(seed, i);
            raw.push_back(w);
            total += w;
        }
        for (size_t i = 0; i < stored.size(); ++i)
            with_probs.emplace_back(stored[i], raw[i] / total);
    }
    return make_source(std::move(prog), std::move(with_probs),
                       ReconSpec{ReconSpec::Closure, {}});
}

DeductiveSource gen_supply_chain(int locations, int suppliers, int items, double density,
                                 double materialization, uint64_t seed) {
    if (locations < 1 || suppliers < 1 || items < 1)
        throw ValidationError("supply-chain parameters must be positive");
    if (density <= 0.0 || density > 1.0) throw ValidationError("density must be in (0,1]");
    if (materialization < 0.0 || materialization > 1.0)
        throw ValidationError("materialization level must be in [0,1]");

    Program prog = parse_program(
        "reachable(X,Y) :- connected(X,Y).\n"
        "reachable(X,Z) :- reachable(X,Y), connected(Y,Z).\n"
        "available(I,L) :- produces(S,I), supplies(S,L).\n"
        "available(I,L) :- produces(S,I), supplies(S,L0), reachable(L0,L).");

    auto loc = [](int i) { return "l" + std::to_string(i); };
    auto sup = [](int i) { return "s" + std::to_string(i); };
    auto itm = [](int i) { return "i" + std::to_string(i); };

    std::vector<GroundFact> edb;
    uint64_t ctr = 0;
    for (int a = 1; a <= locations; ++a)
        for (int b = 1; b <= locations; ++b) {
            double u = seeded_unit(seed, ctr++);
            if (a != b && u < density)
                edb.push_back(parse_fact(prog, "connected(" + loc(a) + "," + loc(b) + ")"));
        }
    for (int s = 1; s <= suppliers; ++s) {
        bool any = false;
        for (int l = 1; l <= locations; ++l) {
            double u = seeded_unit(seed, ctr++);
            if (u < density) {
                edb.push_back(parse_fact(prog, "supplies(" + sup(s) + "," + loc(l) + ")"));
                any = true;
            }
        }
        if (!any) {
            int l = 1 + static_cast<int>(splitmix64(seed ^ ctr++) % locations);
            edb.push_back(parse_fact(prog, "supplies(" + sup(s) + "," + loc(l) + ")"));
        }
    }
    for (int i = 1; i <= items; ++i) {
        bool any = false;
        for (int s = 1; s <= suppliers; ++s) {
            double u = seeded_unit(seed, ctr++);
            if (u < density) {
                edb.push_back(parse_fact(prog, "produces(" + sup(s) + "," + itm(i) + ")"));
                any = true;
            }
        }
        if (!any) {
            int s = 1 + static_cast<int>(splitmix64(seed ^ ctr++) % suppliers);
            edb.push_back(parse_fact(prog, "produces(" + sup(s) + "," + itm(i) + ")"));
        }
    }

    // Materialize the first ⌈μ·|derivable|⌉ intensional facts in canonical
    // order; stored order is extensional first, then those.
    Universe uni = active_universe(prog, edb);
    ClosureEngine engine(prog, uni);
    FactSet base(uni.size());
    for (const GroundFact& f : edb) base.set(*uni.index_of(f));
    FactSet derived = engine.closure(base);
    derived.subtract(base);
    std::vector<uint32_t> idb = derived.indices(); // ascending = canonical order

    size_t take = static_cast<size_t>(
        std::ceil(materialization * static_cast<double>(idb.size()) - 1e-12));
    take = std::min(take, idb.size());

    std::vector<GroundFact> stored = edb;
    for (size_t i = 0; i < take; ++i) stored.push_back(uni.fact(idb[i]));
    return uniform_source(std::move(prog), stored, ReconSpec{ReconSpec::Closure, {}});
}

DeductiveSource generate(const GeneratorSpec& spec) {
    switch (spec.family) {
    case GeneratorSpec::Example: return gen_example(spec.example_name);
    case GeneratorSpec::TagSeeded:
        return gen_tag_seeded(spec.cores, spec.chain_depth, spec.seed);
    case GeneratorSpec::SupplyChain:
        return gen_supply_chain(spec.locations, spec.suppliers, spec.items, spec.density,
                                spec.materialization, spec.seed);
    }
    throw ValidationError("unknown generator family");
}

GeneratorSpec parse_generator_config(std::string_view text) {
    GeneratorSpec spec;
    bool family_seen = false;
    int line_no = 0;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        std::string_view raw = end == std::string_view::npos ? text.substr(start)
                                                             : text.substr(start, end - start);
        ++line_no;
        std::string line(raw);
        if (size_t cmt = line.find('%'); cmt != std::string::npos) line = line.substr(0, cmt);
        size_t b = line.find_first_not_of(" \t\r");
        if (b != std::string::npos) {
            size_t e = line.find_last_not_of(" \t\r");
            line = line.substr(b, e - b + 1);
            size_t eq = line.find('=');
            if (eq == std::string::npos)
                throw ParseError("expected key=value", line_no, 1);
            std::string key = line.substr(0, eq);
            std::string value = line.substr(eq + 1);
            auto as_int = [&](int& out) {
                auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
                if (ec != std::errc()) throw ParseError("malformed integer", line_no, 1);
            };
            auto as_double = [&](double& out) {
                auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
                if (ec != std::errc()) throw ParseError("malformed number", line_no, 1);
            };
            if (key == "family") {
                family_seen = true;
                if (value == "example") spec.family = GeneratorSpec::Example;
                else if (value == "tag_seeded") spec.family = GeneratorSpec::TagSeeded;
                else if (value == "supply_chain") spec.family = GeneratorSpec::SupplyChain;
                else throw ParseError("unknown family '" + value + "'", line_no, 1);
            } else if (key == "name") spec.example_name = value;
            else if (key == "seed") {
                uint64_t s = 0;
                auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), s);
                if (ec != std::errc()) throw ParseError("malformed seed", line_no, 1);
                spec.seed = s;
            }
            else if (key == "cores") as_int(spec.cores);
            else if (key == "chain_depth") as_int(spec.chain_depth);
            else if (key == "locations") as_int(spec.locations);
            else if (key == "suppliers") as_int(spec.suppliers);
            else if (key == "items") as_int(spec.items);
            else if (key == "density") as_double(spec.density);
            else if (key == "materialization") as_double(spec.materialization);
            else throw ParseError("unknown key '" + key + "'", line_no, 1);
        }
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    if (!family_seen) throw ValidationError("generator config missing 'family'");
    return spec;
}

double zero_rate_ratio(size_t n_core, size_t n_stored) {
    if (n_stored <= 1) return 1.0;
    double frac = static_cast<double>(n_core) / static_cast<double>(n_stored);
    return frac * std::log2(static_cast<double>(n_core)) /
           std::log2(static_cast<double>(n_stored));
}

double log_cardinality_ratio(size_t n_core, size_t n_stored) {
    if (n_stored <= 1) return 1.0;
    return std::log2(static_cast<double>(n_core)) / std::log2(static_cast<double>(n_stored));
}

std::vector<SweepRow> materialization_sweep(const GeneratorSpec& spec,
                                            const std::vector<double>& levels) {
    if (spec.family != GeneratorSpec::SupplyChain)
        throw ValidationError("sweep requires a supply-chain generator spec");
    std::vector<SweepRow> rows;
    for (double mu : levels) {
        DeductiveSource src = gen_supply_chain(spec.locations, spec.suppliers, spec.items,
                                               spec.density, mu, spec.seed);
        CoreDecomposition atom = extract_core(src);
        SweepRow row;
        row.materialization = mu;
        row.n_stored = src.n_stored();
        row.n_core = atom.core.size();
        row.n_redundant = atom.redundant.size();
        row.rate_ratio = zero_rate_ratio(row.n_core, row.n_stored);
        row.log_ratio = log_cardinality_ratio(row.n_core, row.n_stored);
        rows.push_back(row);
    }
    return rows;
}

} // namespace semrd
