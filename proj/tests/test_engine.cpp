#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "semrd/engine.hpp"
#include "semrd/error.hpp"
#include "semrd/program.hpp"

#include "helpers.hpp"

using namespace semrd;

namespace {

struct Fixture {
    Program prog;
    Universe uni;
    ClosureEngine engine;

    Fixture(const std::string& rules, const std::vector<std::string>& seeds)
        : prog(parse_program(rules)), uni(build(prog, seeds)), engine(prog, uni) {}

    static Universe build(Program& prog, const std::vector<std::string>& seeds) {
        std::vector<GroundFact> fs;
        for (const std::string& s : seeds) fs.push_back(parse_fact(prog, s));
        return active_universe(prog, fs);
    }

    FactSet set(const std::vector<std::string>& facts) {
        FactSet s(uni.size());
        for (const std::string& f : facts) s.set(*uni.index_of(parse_fact(prog, f)));
        return s;
    }
    uint32_t idx(const std::string& f) { return *uni.index_of(parse_fact(prog, f)); }
};

const char* kDepthRules = "c :- a.\nd :- c.\nf :- b.\ne :- f.";

} // namespace

TEST_CASE("parse: single rule with variables") {
    Program p = parse_program("reachable(X,Y) :- connected(X,Y).");
    REQUIRE(p.rules().size() == 1);
    CHECK(p.rules()[0].body.size() == 1);
    CHECK(p.arities().at(p.rules()[0].head.pred) == 2);
}

TEST_CASE("parse: empty program") {
    Program p = parse_program("");
    CHECK(p.rules().empty());
    CHECK(p.axioms().empty());
}

TEST_CASE("parse: unsafe rule rejected") {
    CHECK_THROWS_AS(parse_program("p(X) :- q(Y)."), ParseError);
}

TEST_CASE("parse: arity conflict rejected") {
    CHECK_THROWS_AS(parse_program("p(X) :- q(X).\np(X,Y) :- q(X), q(Y)."), ValidationError);
}

TEST_CASE("parse: negation and function symbols rejected") {
    CHECK_THROWS_AS(parse_program("p :- \\+ q."), ParseError);
    CHECK_THROWS_AS(parse_program("p(f(a)) :- q."), ParseError);
}

TEST_CASE("parse: comments and positions") {
    Program p = parse_program("% comment only\n  p :- q.  % trailing\n");
    CHECK(p.rules().size() == 1);
    try {
        parse_program("p :- q.\nbroken(");
        FAIL("expected throw");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("parse: ground fact lines become axioms present in every closure") {
    Fixture f("base.\np :- base.", {"q"});
    FactSet empty(f.uni.size());
    FactSet cl = f.engine.closure(empty);
    CHECK(cl.test(f.idx("base")));
    CHECK(cl.test(f.idx("p")));
    CHECK_FALSE(cl.test(f.idx("q")));
    CHECK_THROWS_AS(parse_program("p(X)."), ParseError); // non-ground fact
}

TEST_CASE("active_universe: binary predicate over two constants") {
    Program p = parse_program("r(X,Y) :- r(Y,X).");
    std::vector<GroundFact> seeds = {parse_fact(p, "r(l1,l2)")};
    Universe u = active_universe(p, seeds);
    CHECK(u.size() == 4);
}

TEST_CASE("active_universe: auxiliary statements enter the universe") {
    Fixture f(kDepthRules, {"a", "b", "d", "e"});
    CHECK(f.uni.size() == 6);
    CHECK(f.uni.index_of(parse_fact(f.prog, "c")).has_value());
    CHECK(f.uni.index_of(parse_fact(f.prog, "f")).has_value());
}

TEST_CASE("active_universe: empty inputs give an empty universe") {
    Program p;
    Universe u = active_universe(p, {});
    CHECK(u.size() == 0);
}

TEST_CASE("active_universe: cap guards blowup") {
    Program p = parse_program("t(X,Y,Z) :- t(X,Y,Z), t(Z,Y,X).");
    std::vector<GroundFact> seeds;
    for (int i = 0; i < 120; ++i)
        seeds.push_back(parse_fact(p, "t(c" + std::to_string(i) + ",c0,c1)"));
    CHECK_THROWS_AS(active_universe(p, seeds, 1000000), CapExceeded);
}

TEST_CASE("step: one inference round on the two-step shortcut store") {
    Fixture f(kDepthRules, {"a", "b", "d", "e"});
    FactSet got = f.engine.step(f.set({"a", "b"}));
    CHECK(got == f.set({"a", "b", "c", "f"}));
}

TEST_CASE("step: no rules means identity; full universe is a fixpoint") {
    Program p = parse_program("");
    GroundFact a = parse_fact(p, "a"), b = parse_fact(p, "b");
    Universe u = active_universe(p, {a, b});
    ClosureEngine eng(p, u);
    FactSet base(u.size());
    base.set(*u.index_of(a));
    CHECK(eng.step(base) == base);

    Fixture f(kDepthRules, {"a", "b", "d", "e"});
    FactSet full = f.uni.full_set();
    CHECK(f.engine.step(full) == full);
}

TEST_CASE("closure: shortcut store closes {a} to {a,c,d}") {
    Fixture f(kDepthRules, {"a", "b", "d", "e"});
    CHECK(f.engine.closure(f.set({"a"})) == f.set({"a", "c", "d"}));
}

TEST_CASE("closure: confusable store derives the dropped statement back") {
    Fixture f("r :- a1, a2.\na1 :- b, r.\na2 :- b, r.", {"a1", "a2", "b"});
    CHECK(f.engine.closure(f.set({"a2", "b", "r"})) == f.set({"a1", "a2", "b", "r"}));
}

TEST_CASE("bounded_closure: depth zero is the identity") {
    Fixture f(kDepthRules, {"a", "b", "d", "e"});
    FactSet base = f.set({"a", "b", "e"});
    CHECK(f.engine.bounded_closure(base, 0) == base);
}

TEST_CASE("bounded_closure: one round keeps the two-step statement out") {
    Fixture f(kDepthRules, {"a", "b", "d", "e"});
    FactSet got = f.engine.bounded_closure(f.set({"a", "b", "e"}), 1);
    CHECK(got == f.set({"a", "b", "e", "c", "f"}));
    CHECK_FALSE(got.test(f.idx("d")));
}

TEST_CASE("bounded_closure: universe-depth budget reaches the closure") {
    Fixture f(kDepthRules, {"a", "b", "d", "e"});
    FactSet base = f.set({"a"});
    CHECK(f.engine.bounded_closure(base, static_cast<int>(f.uni.size())) ==
          f.engine.closure(base));
}

TEST_CASE("derives: membership, reflexivity, underivability") {
    Fixture min("c :- a, b.", {"a", "b", "c"});
    CHECK(min.engine.derives(min.set({"a", "b"}), min.idx("c")));
    CHECK(min.engine.derives(min.set({"a"}), min.idx("a")));

    Fixture plain("", {"a", "b"});
    CHECK_FALSE(plain.engine.derives(plain.set({"a"}), plain.idx("b")));
}

TEST_CASE("derivation_depth: two-step shortcut has depth two") {
    Fixture f(kDepthRules, {"a", "b", "d", "e"});
    CHECK(f.engine.derivation_depth(f.set({"a", "b"}), f.idx("d")) == 2);
    CHECK(f.engine.derivation_depth(f.set({"a", "b"}), f.idx("a")) == 0);

    Fixture plain("", {"a", "b"});
    CHECK_FALSE(plain.engine.derivation_depth(plain.set({"a"}), plain.idx("b")).has_value());
}

TEST_CASE("joins bind repeated variables and constants correctly") {
    Fixture f("self(X) :- edge(X,X).\nhit(X) :- edge(X,c1).",
              {"edge(c1,c1)", "edge(c1,c2)", "edge(c2,c1)"});
    FactSet cl = f.engine.closure(f.set({"edge(c1,c1)", "edge(c1,c2)", "edge(c2,c1)"}));
    CHECK(cl.test(f.idx("self(c1)")));
    CHECK_FALSE(cl.test(f.idx("self(c2)")));
    CHECK(cl.test(f.idx("hit(c1)")));
    CHECK(cl.test(f.idx("hit(c2)")));
}

TEST_CASE("properties: closure laws, chain stabilization, naive cross-check, depth") {
    std::mt19937_64 rng(20250810);
    for (int trial = 0; trial < 60; ++trial) {
        DeductiveSource src = semrd::test::random_propositional(rng);
        const ClosureEngine& eng = src.engine();
        const Universe& uni = src.universe();

        FactSet base(uni.size());
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (uint32_t i = 0; i < uni.size(); ++i)
            if (unit(rng) < 0.4) base.set(i);

        FactSet cl = eng.closure(base);
        CHECK(base.is_subset_of(cl));         // reflexivity
        CHECK(eng.closure(cl) == cl);         // idempotence
        CHECK(eng.closure_naive(base) == cl); // evaluation cross-check

        // Monotonicity against a random superset.
        FactSet super = base;
        for (uint32_t i = 0; i < uni.size(); ++i)
            if (unit(rng) < 0.3) super.set(i);
        CHECK(cl.is_subset_of(eng.closure(super)));

        // One-step chain is non-decreasing and stabilizes within the
        // universe size at the closure.
        FactSet cur = base;
        size_t steps = 0;
        while (true) {
            FactSet next = eng.step(cur);
            CHECK(cur.is_subset_of(next));
            if (next == cur) break;
            cur = next;
            ++steps;
            REQUIRE(steps <= uni.size());
        }
        CHECK(cur == cl);

        for (uint32_t i = 0; i < uni.size(); ++i) {
            auto depth = eng.derivation_depth(base, i);
            if (!depth) {
                CHECK_FALSE(cl.test(i));
                continue;
            }
            CHECK(eng.bounded_closure(base, *depth).test(i));
            if (*depth > 0) CHECK_FALSE(eng.bounded_closure(base, *depth - 1).test(i));
        }
    }
}

TEST_CASE("closure results are cached and shared") {
    Fixture f(kDepthRules, {"a", "b", "d", "e"});
    size_t before = f.engine.cache_size();
    f.engine.closure(f.set({"a", "b"}));
    f.engine.closure(f.set({"a", "b"}));
    CHECK(f.engine.cache_size() == before + 1);
}
