#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "semrd/decomposition.hpp"
#include "semrd/error.hpp"
#include "semrd/generators.hpp"
#include "semrd/source.hpp"

#include "helpers.hpp"

using namespace semrd;
using semrd::test::make_uniform;
using semrd::test::texts;

TEST_CASE("extract_core: interchangeable pair depends on the scan order") {
    DeductiveSource pqr = make_uniform("p :- q.\nq :- p.", {"p", "q", "r"});
    CHECK(texts(pqr, extract_core(pqr).core) == std::vector<std::string>{"q", "r"});

    DeductiveSource qpr = make_uniform("p :- q.\nq :- p.", {"q", "p", "r"});
    CHECK(texts(qpr, extract_core(qpr).core) == std::vector<std::string>{"p", "r"});
}

TEST_CASE("extract_core: nothing derivable keeps everything") {
    DeductiveSource src = make_uniform("", {"a", "b"});
    CHECK(extract_core(src).core.size() == 2);
    CHECK(extract_core(src).redundant.empty());
}

TEST_CASE("extract_core: mass and conditional") {
    DeductiveSource src = semrd::test::make_simple("c :- a, b.", {"a", "b", "c"},
                                                   {0.5, 0.25, 0.25});
    CoreDecomposition atom = extract_core(src);
    CHECK(atom.mass == doctest::Approx(0.75).epsilon(1e-12));
    REQUIRE(atom.conditional.has_value());
    CHECK((*atom.conditional)[0] == doctest::Approx(2.0 / 3).epsilon(1e-12));
}

TEST_CASE("extract_core: zero-mass core stores no conditional") {
    DeductiveSource src = semrd::test::make_simple("c :- a.", {"a", "c"}, {0.0, 1.0});
    CoreDecomposition atom = extract_core(src);
    CHECK(texts(src, atom.core) == std::vector<std::string>{"a"});
    CHECK(atom.mass == 0.0);
    CHECK_FALSE(atom.conditional.has_value());
}

TEST_CASE("essential_set: order-free part of the interchangeable pair") {
    DeductiveSource src = make_uniform("p :- q.\nq :- p.", {"p", "q", "r"});
    CHECK(texts(src, essential_set(src)) == std::vector<std::string>{"r"});

    DeductiveSource plain = make_uniform("", {"a", "b"});
    CHECK(essential_set(plain).size() == 2);
}

TEST_CASE("essential_set: materialized store keeps exactly the base facts") {
    DeductiveSource src = gen_supply_chain(5, 2, 2, 0.4, 1.0, 11);
    std::vector<std::string> ess = texts(src, essential_set(src));
    for (const std::string& f : ess)
        CHECK((f.rfind("connected", 0) == 0 || f.rfind("supplies", 0) == 0 ||
               f.rfind("produces", 0) == 0));
    size_t n_edb = 0;
    for (size_t i = 0; i < src.n_stored(); ++i) {
        const std::string& t = src.stored_text(i);
        if (t.rfind("connected", 0) == 0 || t.rfind("supplies", 0) == 0 ||
            t.rfind("produces", 0) == 0)
            ++n_edb;
    }
    CHECK(ess.size() == n_edb);
}

TEST_CASE("is_order_robust: verdicts across the three regimes") {
    DeductiveSource pair = make_uniform("p :- q.\nq :- p.", {"p", "q", "r"});
    OrderRobustness r1 = is_order_robust(pair);
    CHECK_FALSE(r1.robust);
    CHECK_FALSE(r1.essential_generates);
    CHECK(r1.witness.has_value());

    DeductiveSource mat = gen_supply_chain(4, 2, 2, 0.5, 0.6, 5);
    OrderRobustness r2 = is_order_robust(mat);
    CHECK(r2.robust);
    CHECK(r2.essential_generates);

    DeductiveSource plain = make_uniform("", {"a", "b"});
    CHECK(is_order_robust(plain).robust);
}

TEST_CASE("delta_core: shortcut store shrinks only at depth two") {
    DeductiveSource src = gen_example("EX_DEPTH");
    CHECK(delta_core(src, 0).size() == 4);
    CHECK(delta_core(src, 1).size() == 4);
    CHECK(texts(src, delta_core(src, 2)) == std::vector<std::string>{"a", "b"});
    CHECK_THROWS_AS(delta_core(src, -1), ValidationError);
}

TEST_CASE("depth_profile: shortcut store") {
    DeductiveSource src = gen_example("EX_DEPTH");
    DepthProfile p = depth_profile(src);
    CHECK(p.max_depth == 2);
    REQUIRE(p.cores_by_depth.size() == 3);
    CHECK(p.cores_by_depth[0].size() == 4);
    CHECK(p.cores_by_depth[1].size() == 4);
    CHECK(texts(src, p.cores_by_depth[2]) == std::vector<std::string>{"a", "b"});
    CHECK(p.mass_at(2) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(p.core_at(99).size() == 2); // served from the stabilized core
}

TEST_CASE("depth_profile: no rules stabilizes immediately") {
    DeductiveSource src = make_uniform("", {"a", "b", "c"});
    DepthProfile p = depth_profile(src);
    CHECK(p.max_depth == 0);
    CHECK(p.cores_by_depth.size() == 1);
    CHECK(p.cores_by_depth[0].size() == 3);
}

TEST_CASE("depth_profile: one redundant consequence has depth one") {
    DeductiveSource src = gen_example("EX_MIN");
    DepthProfile p = depth_profile(src);
    CHECK(p.max_depth == 1);
    REQUIRE(p.cores_by_depth.size() == 2);
    CHECK(texts(src, p.cores_by_depth[1]) == std::vector<std::string>{"a", "b"});
}

TEST_CASE("properties: core correctness under random orders") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 30; ++trial) {
        DeductiveSource src = semrd::test::random_propositional(rng);
        std::vector<uint32_t> ess = essential_set(src);
        std::vector<std::string> ess_t = texts(src, ess);
        FactSet stored_closure = src.stored_closure();

        bool essential_generates = is_order_robust(src).essential_generates;
        for (int o = 0; o < 20; ++o) {
            DeductiveSource perm = src.with_stored_order(
                semrd::test::random_permutation(src.n_stored(), rng));
            CoreDecomposition atom = extract_core(perm);

            FactSet core_set = atom.core_set(perm.universe());
            CHECK(perm.engine().closure(core_set) == stored_closure); // same closure

            for (uint32_t a : atom.core) { // irredundancy
                FactSet rest = core_set;
                rest.reset(a);
                CHECK_FALSE(perm.engine().derives(rest, a));
            }

            std::vector<std::string> core_t = texts(perm, atom.core);
            CHECK(std::includes(core_t.begin(), core_t.end(), ess_t.begin(), ess_t.end()));
            if (essential_generates) CHECK(core_t == ess_t); // order-invariant core
        }
    }
}

TEST_CASE("properties: filtration is a shrinking chain from the full store") {
    std::mt19937_64 rng(78);
    for (int trial = 0; trial < 20; ++trial) {
        DeductiveSource src = semrd::test::random_propositional(rng);
        DepthProfile p = depth_profile(src);
        CHECK(p.cores_by_depth[0].size() == src.n_stored());
        for (size_t d = 1; d < p.cores_by_depth.size(); ++d) {
            std::vector<std::string> prev = texts(src, p.cores_by_depth[d - 1]);
            std::vector<std::string> cur = texts(src, p.cores_by_depth[d]);
            CHECK(std::includes(prev.begin(), prev.end(), cur.begin(), cur.end()));
        }
        if (is_order_robust(src).robust) {
            std::vector<std::string> atom_t = texts(src, extract_core(src).core);
            CHECK(texts(src, p.core_at(p.max_depth)) == atom_t);
            CHECK(texts(src, p.core_at(p.max_depth + 3)) == atom_t);
        }
    }
}

TEST_CASE("instance file: round-trip is byte-identical") {
    DeductiveSource src = gen_tag_seeded(3, 2, 42);
    std::string text = write_instance(src);
    DeductiveSource back = parse_instance(text);
    CHECK(write_instance(back) == text);
    CHECK(back.n_stored() == src.n_stored());
    CHECK(back.recon() == src.recon());
}

TEST_CASE("instance file: explicit reconstruction round-trips") {
    Program prog = parse_program("c :- a, b.");
    std::vector<std::pair<GroundFact, double>> stored = {
        {parse_fact(prog, "a"), 0.5}, {parse_fact(prog, "b"), 0.5}};
    ReconSpec recon{ReconSpec::Explicit, {parse_fact(prog, "a"), parse_fact(prog, "c")}};
    DeductiveSource src = make_source(std::move(prog), std::move(stored), std::move(recon));
    std::string text = write_instance(src);
    CHECK(text.find("[reconstruction]\na.\nc.\n") != std::string::npos);
    DeductiveSource back = parse_instance(text);
    CHECK(back.recon() == src.recon());
}

TEST_CASE("instance file: validation failures") {
    CHECK_THROWS_AS(parse_instance("[stored]\na. p=1.0\n"), ParseError); // no recon section
    CHECK_THROWS_AS(parse_instance("[rules]\n[stored]\na. p=0.4\nb. p=0.4\n"
                                   "[reconstruction]\nstored\n"),
                    ValidationError); // probabilities off
    CHECK_THROWS_AS(parse_instance("[rules]\n[stored]\na. p=0.5\na. p=0.5\n"
                                   "[reconstruction]\nstored\n"),
                    ValidationError); // duplicate stored fact
    CHECK_THROWS_AS(parse_instance("[rules]\n[stored]\na. p=-0.5\nb. p=1.5\n"
                                   "[reconstruction]\nstored\n"),
                    ValidationError); // negative probability
    CHECK_THROWS_AS(parse_instance("stray\n[reconstruction]\nclosure\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("[rules]\n[stored]\na. q=1\n[reconstruction]\nstored\n"),
                    ParseError);
}

TEST_CASE("with_stored_order permutes facts and probabilities together") {
    DeductiveSource src = semrd::test::make_simple("", {"a", "b", "c"}, {0.5, 0.3, 0.2});
    DeductiveSource perm = src.with_stored_order({2, 0, 1});
    CHECK(perm.stored_text(0) == "c");
    CHECK(perm.prob(0) == 0.2);
    CHECK(perm.stored_text(1) == "a");
    CHECK_THROWS_AS(src.with_stored_order({0, 0, 1}), ValidationError);
}

TEST_CASE("fact resolution against an existing source") {
    DeductiveSource src = gen_example("EX_MIN");
    CHECK(src.universe().text(resolve_fact(src, "a")) == "a");
    CHECK_THROWS_AS(resolve_fact(src, "zz"), ValidationError);
    std::vector<uint32_t> v = parse_fact_list(src, "a.\n% comment\nc.\n");
    CHECK(v.size() == 2);
}
