#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "semrd/distortion.hpp"
#include "semrd/error.hpp"
#include "semrd/generators.hpp"

#include "helpers.hpp"

using namespace semrd;
using semrd::test::make_uniform;

namespace {

uint32_t idx(const DeductiveSource& src, const std::string& f) {
    return resolve_fact(src, f);
}

std::vector<std::string> zero_texts(const DeductiveSource& src, const ReconSets& z,
                                    const std::string& fact) {
    size_t pos = src.stored_position(idx(src, fact));
    return semrd::test::texts(src, z.zero[pos]);
}

} // namespace

TEST_CASE("closure_fidelity: identical sets, empty sets, confusable substitution") {
    DeductiveSource conf = gen_example("EX_CONF");
    FactSet s = conf.stored_set();
    CHECK(closure_fidelity(conf, s, s) == 1.0);

    DeductiveSource plain = make_uniform("", {"a", "b"});
    FactSet empty(plain.universe().size());
    CHECK(closure_fidelity(plain, empty, empty) == 1.0); // 0/0 := 1

    // Swapping a1 for the derived witness preserves the closure.
    FactSet t(conf.universe().size());
    t.set(idx(conf, "a2"));
    t.set(idx(conf, "b"));
    t.set(idx(conf, "r"));
    CHECK(closure_fidelity(conf, s, t) == 1.0);
}

TEST_CASE("closure_distortion: self-substitution and redundant rows are free") {
    DeductiveSource min = gen_example("EX_MIN");
    CHECK(closure_distortion(min, idx(min, "a"), idx(min, "a")) == 0.0);
    // A redundant statement is free against anything in the closure.
    CHECK(closure_distortion(min, idx(min, "c"), idx(min, "a")) == 0.0);
    CHECK(closure_distortion(min, idx(min, "c"), idx(min, "b")) == 0.0);
    // Substituting a core statement by another loses content.
    CHECK(closure_distortion(min, idx(min, "a"), idx(min, "b")) > 0.0);

    DeductiveSource depth = gen_example("EX_DEPTH");
    CHECK_THROWS_AS(closure_distortion(depth, idx(depth, "c"), idx(depth, "a")),
                    ValidationError); // rows must be stored statements
}

TEST_CASE("closure_distortion: confusable witness is free, sibling is not") {
    DeductiveSource conf = gen_example("EX_CONF");
    CHECK(closure_distortion(conf, idx(conf, "a1"), idx(conf, "r")) == 0.0);
    CHECK(closure_distortion(conf, idx(conf, "a1"), idx(conf, "a2")) > 0.0);
}

TEST_CASE("hamming_distortion and the depth-zero identity") {
    CHECK(hamming_distortion(3, 3) == 0);
    CHECK(hamming_distortion(3, 4) == 1);

    DeductiveSource depth = gen_example("EX_DEPTH");
    for (size_t i = 0; i < depth.n_stored(); ++i)
        for (size_t j = 0; j < depth.n_stored(); ++j) {
            uint32_t s = depth.stored_index(i), t = depth.stored_index(j);
            CHECK(delta_distortion(depth, s, t, 0) == hamming_distortion(s, t));
        }
}

TEST_CASE("delta_distortion: the two-step shortcut needs two rounds") {
    DeductiveSource depth = gen_example("EX_DEPTH");
    CHECK(delta_distortion(depth, idx(depth, "d"), idx(depth, "a"), 1) == 1);
    CHECK(delta_distortion(depth, idx(depth, "d"), idx(depth, "a"), 2) == 0);

    // A depth-redundant statement is free against every reconstruction.
    ReconSets z2 = recon_sets(depth, ReconVariant::bounded(2));
    CHECK(zero_texts(depth, z2, "d").size() == depth.recon().size());
}

TEST_CASE("recon_sets: confusable example with the witness in the alphabet") {
    DeductiveSource conf = gen_example("EX_CONF");
    ReconSets z = recon_sets(conf, ReconVariant::unbounded());
    CHECK(zero_texts(conf, z, "a1") == std::vector<std::string>{"a1", "r"});
    CHECK(zero_texts(conf, z, "a2") == std::vector<std::string>{"a2", "r"});
    CHECK(zero_texts(conf, z, "b") == std::vector<std::string>{"b"});
}

TEST_CASE("recon_sets: restricted variant can be empty") {
    DeductiveSource plain = gen_example("EX_RESTRICT");
    ReconSets z = recon_sets(plain, ReconVariant::restricted({idx(plain, "a")}));
    CHECK(zero_texts(plain, z, "a") == std::vector<std::string>{"a"});
    CHECK(zero_texts(plain, z, "b").empty());
    CHECK_THROWS_AS(recon_sets(plain, ReconVariant::restricted({})), ValidationError);
}

TEST_CASE("recon_sets: redundant statements accept the whole closure alphabet") {
    DeductiveSource min = gen_example("EX_MIN"); // alphabet = closure
    ReconSets z = recon_sets(min, ReconVariant::unbounded());
    CHECK(zero_texts(min, z, "c") == std::vector<std::string>{"a", "b", "c"});
}

TEST_CASE("distortion_matrix: diagonal zeros, redundant row all-zero, binary depth matrix") {
    DeductiveSource min = gen_example("EX_MIN");
    DistortionMatrix m = distortion_matrix(min, DistortionKind::Closure);
    for (size_t r = 0; r < m.rows.size(); ++r)
        for (size_t c = 0; c < m.cols.size(); ++c) {
            if (m.rows[r] == m.cols[c]) CHECK(m.at(r, c) == 0.0);
            CHECK(m.at(r, c) >= 0.0);
            CHECK(m.at(r, c) <= 1.0);
        }
    size_t c_row = min.stored_position(idx(min, "c"));
    for (size_t c = 0; c < m.cols.size(); ++c) CHECK(m.at(c_row, c) == 0.0);

    DistortionMatrix d1 = distortion_matrix(gen_example("EX_DEPTH"), DistortionKind::Delta, 1);
    for (double v : d1.values) CHECK((v == 0.0 || v == 1.0));
}

TEST_CASE("distortion_matrix: csv export carries labels and 12-digit entries") {
    DeductiveSource min = gen_example("EX_MIN");
    std::string csv = distortion_matrix(min, DistortionKind::Hamming).to_csv(min.universe());
    CHECK(csv.rfind("statement,a,b,c\n", 0) == 0);
    CHECK(csv.find("\na,0,1,1\n") != std::string::npos);
}

TEST_CASE("check_core_disjoint: clean, confusable, and tag-seeded instances") {
    CHECK(check_core_disjoint(gen_example("EX_MIN")).disjoint);

    DisjointCheck conf = check_core_disjoint(gen_example("EX_CONF"));
    CHECK_FALSE(conf.disjoint);
    REQUIRE(conf.witness.has_value());
    DeductiveSource src = gen_example("EX_CONF");
    CHECK(src.universe().text(conf.witness->shared) == "r");

    CHECK(check_core_disjoint(gen_tag_seeded(3, 2, 9)).disjoint);
}

TEST_CASE("check_core_coverage: witness alphabet, missing representative, identity") {
    CHECK(check_core_coverage(gen_example("EX_CONF")).covered);

    Program prog = parse_program("");
    std::vector<std::pair<GroundFact, double>> stored = {{parse_fact(prog, "a"), 0.5},
                                                         {parse_fact(prog, "b"), 0.5}};
    ReconSpec recon{ReconSpec::Explicit, {parse_fact(prog, "a")}};
    DeductiveSource restricted =
        make_source(std::move(prog), std::move(stored), std::move(recon));
    CoverageCheck cov = check_core_coverage(restricted);
    CHECK_FALSE(cov.covered);
    REQUIRE(cov.missing.has_value());
    CHECK(restricted.universe().text(*cov.missing) == "b");

    CHECK(check_core_coverage(gen_example("EX_RESTRICT")).covered); // S_O ⊆ alphabet
}

TEST_CASE("check_pairwise_realisability: pair witness suffices, triple gap detected") {
    CHECK(check_pairwise_realisability(gen_example("EX_CONF")).holds);
    CHECK(check_pairwise_realisability(gen_example("EX_MIN")).holds); // disjoint cores

    // Three core statements, one witness per pair, no triple witness.
    DeductiveSource tri = make_uniform(
        "a1 :- w12.\na2 :- w12.\na1 :- w13.\na3 :- w13.\na2 :- w23.\na3 :- w23.\n"
        "w12 :- a1, a2.\nw13 :- a1, a3.\nw23 :- a2, a3.",
        {"a1", "a2", "a3"});
    PairwiseRealisabilityCheck pr = check_pairwise_realisability(tri);
    CHECK_FALSE(pr.holds);
    CHECK(pr.violating.size() == 3);

    CHECK_THROWS_AS(check_pairwise_realisability(gen_tag_seeded(17, 1, 0)), CapExceeded);
}

TEST_CASE("check_delta_disjoint: symbol identity at depth zero, witnesses at depth two") {
    DeductiveSource plain = make_uniform("", {"a", "b"}, {ReconSpec::Stored, {}});
    CHECK(check_delta_disjoint(plain, 0).disjoint);

    CHECK(check_delta_disjoint(gen_example("EX_DEPTH"), 2).disjoint);

    DisjointCheck conf = check_delta_disjoint(gen_example("EX_CONF"), 2);
    CHECK_FALSE(conf.disjoint);
    DeductiveSource src = gen_example("EX_CONF");
    CHECK(src.universe().text(conf.witness->shared) == "r");
}

TEST_CASE("invariants: zero entries live in the closure; depth relaxations nest") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 25; ++trial) {
        DeductiveSource src = semrd::test::random_propositional(rng);
        const FactSet& closure = src.stored_closure();

        DistortionMatrix m = distortion_matrix(src, DistortionKind::Closure);
        ReconSets z = recon_sets(src, ReconVariant::unbounded());
        for (size_t r = 0; r < m.rows.size(); ++r) {
            for (size_t c = 0; c < m.cols.size(); ++c) {
                if (m.at(r, c) == 0.0) CHECK(closure.test(m.cols[c]));
                // Matrix agrees with the definitional route.
                CHECK(m.at(r, c) ==
                      doctest::Approx(closure_distortion(src, m.rows[r], m.cols[c]))
                          .epsilon(1e-12));
            }
            // Zero sets are exactly the zero entries of the matrix.
            std::vector<uint32_t> from_matrix;
            for (size_t c = 0; c < m.cols.size(); ++c)
                if (m.at(r, c) == 0.0) from_matrix.push_back(m.cols[c]);
            CHECK(from_matrix == z.zero[r]);
        }

        // Redundant rows are free against the closure alphabet.
        CoreDecomposition atom = extract_core(src);
        for (uint32_t j : atom.redundant)
            for (uint32_t cand : src.recon())
                if (closure.test(cand))
                    CHECK(closure_distortion(src, j, cand) == 0.0);

        // More inference can only lower the depth-bounded distortion.
        DistortionMatrix d1 = distortion_matrix(src, DistortionKind::Delta, 1);
        DistortionMatrix d3 = distortion_matrix(src, DistortionKind::Delta, 3);
        for (size_t i = 0; i < d1.values.size(); ++i) CHECK(d3.values[i] <= d1.values[i]);
    }
}

TEST_CASE("invariants: distortion is one minus fidelity away from the conventions") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        DeductiveSource src = semrd::test::random_propositional(rng);
        FactSet stored = src.stored_set();
        for (size_t i = 0; i < src.n_stored(); ++i) {
            uint32_t s = src.stored_index(i);
            for (uint32_t cand : src.recon()) {
                FactSet kept = stored;
                FactSet substituted = stored;
                substituted.reset(s);
                substituted.set(cand);
                double f = closure_fidelity(src, kept, substituted);
                double d = closure_distortion(src, s, cand);
                CHECK(d == doctest::Approx(1.0 - f).epsilon(1e-12));
            }
        }
    }
}
