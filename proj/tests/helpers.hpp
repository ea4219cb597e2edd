#pragma once

#include <random>
#include <string>
#include <vector>

#include "semrd/generators.hpp"
#include "semrd/source.hpp"

namespace semrd::test {

inline DeductiveSource make_simple(const std::string& rules,
                                   const std::vector<std::string>& stored,
                                   const std::vector<double>& probs,
                                   ReconSpec recon = {ReconSpec::Closure, {}}) {
    Program prog = parse_program(rules);
    std::vector<std::pair<GroundFact, double>> with_probs;
    for (size_t i = 0; i < stored.size(); ++i)
        with_probs.emplace_back(parse_fact(prog, stored[i]), probs[i]);
    return make_source(std::move(prog), std::move(with_probs), std::move(recon));
}

inline DeductiveSource make_uniform(const std::string& rules,
                                    const std::vector<std::string>& stored,
                                    ReconSpec recon = {ReconSpec::Closure, {}}) {
    std::vector<double> probs(stored.size(), 1.0 / static_cast<double>(stored.size()));
    return make_simple(rules, stored, probs, std::move(recon));
}

/// Random source over a handful of propositional statements; reconstruction
/// alphabet is the stored closure.
inline DeductiveSource random_propositional(std::mt19937_64& rng, bool allow_zero_probs = true) {
    std::uniform_int_distribution<int> n_atoms_dist(2, 6);
    int n = n_atoms_dist(rng);
    std::vector<std::string> atoms;
    for (int i = 0; i < n; ++i) atoms.push_back("p" + std::to_string(i));

    std::uniform_int_distribution<int> n_rules_dist(0, 4);
    std::uniform_int_distribution<int> atom_dist(0, n - 1);
    std::uniform_int_distribution<int> body_dist(1, 2);
    std::string rules;
    int n_rules = n_rules_dist(rng);
    for (int r = 0; r < n_rules; ++r) {
        std::string head = atoms[static_cast<size_t>(atom_dist(rng))];
        int body_n = body_dist(rng);
        std::string body = atoms[static_cast<size_t>(atom_dist(rng))];
        if (body_n == 2) body += ", " + atoms[static_cast<size_t>(atom_dist(rng))];
        rules += head + " :- " + body + ".\n";
    }

    std::vector<std::string> stored;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < n; ++i)
        if (unit(rng) < 0.7) stored.push_back(atoms[static_cast<size_t>(i)]);
    if (stored.empty()) stored.push_back(atoms[0]);

    std::vector<double> probs;
    double total = 0.0;
    for (size_t i = 0; i < stored.size(); ++i) {
        double w = allow_zero_probs && unit(rng) < 0.15 ? 0.0 : 0.05 + unit(rng);
        probs.push_back(w);
        total += w;
    }
    if (total <= 0.0) {
        probs[0] = 1.0;
        total = 1.0;
    }
    for (double& p : probs) p /= total;
    return make_simple(rules, stored, probs);
}

inline std::vector<size_t> random_permutation(size_t n, std::mt19937_64& rng) {
    std::vector<size_t> perm(n);
    for (size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

inline std::vector<std::string> texts(const DeductiveSource& src,
                                      const std::vector<uint32_t>& idx) {
    std::vector<std::string> out;
    for (uint32_t i : idx) out.push_back(src.universe().text(i));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace semrd::test
