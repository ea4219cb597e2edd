#include "semrd/consequences.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>

#include "semrd/error.hpp"

namespace semrd {

namespace {
constexpr double kBoundaryTol = 1e-12;

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t comma = line.find(',', start);
        std::string cell = comma == std::string::npos ? line.substr(start)
                                                      : line.substr(start, comma - start);
        size_t b = cell.find_first_not_of(" \t\r");
        size_t e = cell.find_last_not_of(" \t\r");
        out.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}
} // namespace

ChannelModel make_channel(Kernel channel, SolverOptions opt) {
    validate_kernel(channel);
    ChannelModel m;
    m.capacity_bits = ba_capacity(channel, opt);
    m.channel = std::move(channel);
    return m;
}

Kernel parse_kernel_csv(const std::string& text) {
    Kernel k;
    int line_no = 0;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        std::string line = end == std::string::npos ? text.substr(start)
                                                    : text.substr(start, end - start);
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) {
            std::vector<std::string> cells = split_csv_line(line);
            if (k.out_labels.empty()) {
                if (cells.size() < 2) throw ParseError("matrix header needs output labels",
                                                       line_no, 1);
                k.out_labels.assign(cells.begin() + 1, cells.end());
            } else {
                if (cells.size() != k.out_labels.size() + 1)
                    throw ParseError("matrix row width mismatch", line_no, 1);
                k.in_labels.push_back(cells[0]);
                for (size_t j = 1; j < cells.size(); ++j) {
                    double v = 0.0;
                    auto [p, ec] = std::from_chars(cells[j].data(),
                                                   cells[j].data() + cells[j].size(), v);
                    if (ec != std::errc() || p != cells[j].data() + cells[j].size())
                        throw ParseError("malformed probability '" + cells[j] + "'", line_no, 1);
                    k.rows.push_back(v);
                }
            }
        }
        if (end == std::string::npos) break;
        start = end + 1;
    }
    if (k.in_labels.empty()) throw ValidationError("matrix has no rows");
    validate_kernel(k);
    return k;
}

ChannelModel load_channel_csv(const std::string& text, SolverOptions opt) {
    return make_channel(parse_kernel_csv(text), opt);
}

const char* separation_verdict_name(SeparationVerdict v) {
    switch (v) {
    case SeparationVerdict::Achievable: return "achievable";
    case SeparationVerdict::NotAchievable: return "not-achievable";
    case SeparationVerdict::Boundary: return "boundary";
    }
    return "?";
}

SeparationReport separation_check(const DeductiveSource& source, const ChannelModel& channel,
                                  double kappa, double d, std::optional<int> delta,
                                  SolverOptions opt) {
    if (kappa <= 0.0) throw ValidationError("kappa must be positive");
    SeparationReport out;
    out.kappa = kappa;
    out.kappa_capacity = kappa * channel.capacity_bits;

    if (delta) {
        if (d <= 0.0) {
            RateReport r = rate_depth_zero(source, *delta, opt);
            out.rate_bits = r.value_bits;
            out.regime = r.regime;
        } else {
            out.rate_bits = rate_depth_distortion(source, d, *delta, opt);
            out.regime = Regime::Disjoint;
        }
    } else if (d <= 0.0) {
        RateReport r = zero_rate_general(source, opt);
        out.rate_bits = r.value_bits;
        out.regime = r.regime;
    } else {
        out.rate_bits = rd_function(source, d, opt);
        out.regime = Regime::Hypergraph;
    }

    if (std::isinf(out.rate_bits)) {
        out.verdict = SeparationVerdict::NotAchievable;
    } else if (std::fabs(out.rate_bits - out.kappa_capacity) <= kBoundaryTol) {
        out.verdict = SeparationVerdict::Boundary;
    } else if (out.rate_bits < out.kappa_capacity) {
        out.verdict = SeparationVerdict::Achievable;
    } else {
        out.verdict = SeparationVerdict::NotAchievable;
    }
    return out;
}

DepthThresholds depth_thresholds(const DeductiveSource& source, const ChannelModel& channel,
                                 double kappa) {
    if (kappa <= 0.0) throw ValidationError("kappa must be positive");
    DepthThresholds out;
    out.kappa_capacity = kappa * channel.capacity_bits;
    out.sweep = rate_depth_sweep(source);
    out.order_robust = is_order_robust(source).robust;

    // φ is non-increasing and constant past stabilization, so searching the
    // stored range decides both thresholds.
    for (int delta = 0; delta <= out.sweep.stabilization; ++delta) {
        double phi = out.sweep.phi_at(delta);
        if (!out.achievable && phi < out.kappa_capacity) out.achievable = delta;
        if (!out.necessary && phi <= out.kappa_capacity) out.necessary = delta;
        if (out.achievable) break;
    }

    double head = out.sweep.phi_at(0);             // H(P_O)
    double tail = out.sweep.phi_at(out.sweep.stabilization); // core entropy term
    if (head < out.kappa_capacity) {
        out.classification = "zero depth suffices";
    } else if (tail > out.kappa_capacity) {
        out.classification = "no finite depth budget suffices";
    } else if (tail < out.kappa_capacity && out.kappa_capacity < head) {
        out.classification = "threshold within [1, max depth]";
    } else {
        out.classification = "boundary";
    }
    return out;
}

ConverseBound message_converse(int n, double capacity_bits, double epsilon, double count) {
    if (n < 1) throw ValidationError("blocklength must be at least 1");
    if (epsilon < 0.0 || epsilon >= 1.0)
        throw ValidationError("error probability must lie in [0,1)");
    if (count < 1.0) throw ValidationError("message count must be at least 1");
    ConverseBound out;
    out.bound_bits = (static_cast<double>(n) * capacity_bits + 1.0) / (1.0 - epsilon);
    out.log_count_bits = std::log2(count);
    out.consistent = out.log_count_bits <= out.bound_bits + kBoundaryTol;
    return out;
}

BlocklengthBenchmarks blocklength_benchmarks(size_t n_stored, size_t n_core,
                                             double capacity_bits) {
    if (n_core < 1 || n_stored < n_core)
        throw ValidationError("need |S_O| >= |A| >= 1");
    if (capacity_bits <= 0.0) throw ValidationError("capacity must be positive");
    BlocklengthBenchmarks out;
    double log_stored = std::log2(static_cast<double>(n_stored));
    double log_core = std::log2(static_cast<double>(n_core));
    out.n_symbolwise = static_cast<long>(std::ceil(log_stored / capacity_bits));
    out.n_closure = static_cast<long>(std::ceil(log_core / capacity_bits));
    out.ratio = n_stored == 1 ? 1.0 : log_core / log_stored;
    return out;
}

FanoReport fano_bound(const DeductiveSource& source, const Kernel& test_kernel) {
    validate_kernel(test_kernel);

    // Hypotheses: reconstruction inside the stored closure, full support.
    const FactSet& closure = source.stored_closure();
    for (uint32_t cand : source.recon())
        if (!closure.test(cand))
            throw ValidationError("reconstruction alphabet leaves the stored closure",
                                  source.universe().text(cand));
    for (size_t i = 0; i < source.n_stored(); ++i)
        if (source.prob(i) <= 0.0)
            throw ValidationError("source must have full support", source.stored_text(i));

    // Map kernel labels onto stored statements and reconstruction symbols.
    if (test_kernel.n_in() != source.n_stored())
        throw ValidationError("kernel must have one row per stored statement");
    std::map<std::string, size_t> row_of;
    for (size_t i = 0; i < source.n_stored(); ++i) row_of[source.stored_text(i)] = i;
    std::vector<size_t> row_perm(test_kernel.n_in());
    for (size_t r = 0; r < test_kernel.n_in(); ++r) {
        auto it = row_of.find(test_kernel.in_labels[r]);
        if (it == row_of.end())
            throw ValidationError("kernel row label is not a stored statement",
                                  test_kernel.in_labels[r]);
        row_perm[r] = it->second;
    }
    std::map<std::string, size_t> col_of;
    for (size_t c = 0; c < source.recon().size(); ++c)
        col_of[source.universe().text(source.recon()[c])] = c;
    std::vector<size_t> col_perm(test_kernel.n_out());
    for (size_t c = 0; c < test_kernel.n_out(); ++c) {
        auto it = col_of.find(test_kernel.out_labels[c]);
        if (it == col_of.end())
            throw ValidationError("kernel column label is not a reconstruction symbol",
                                  test_kernel.out_labels[c]);
        col_perm[c] = it->second;
    }

    Mat k(source.n_stored(), source.recon().size(), 0.0);
    for (size_t r = 0; r < test_kernel.n_in(); ++r)
        for (size_t c = 0; c < test_kernel.n_out(); ++c)
            k.at(row_perm[r], col_perm[c]) = test_kernel.at(r, c);

    CoreDecomposition atom = extract_core(source);
    FanoReport out;
    out.core_size = atom.core.size();
    out.core_mass = atom.mass;

    ReconSets z = recon_sets(source, ReconVariant::unbounded());
    if (out.core_size >= 2) {
        DisjointCheck dis = check_core_disjoint(source);
        if (!dis.disjoint)
            throw ValidationError("core zero-distortion sets overlap",
                                  source.universe().text(dis.witness->shared));
    }

    // ε_Cn: probability that the reconstruction misses the zero set of a
    // core input (redundant inputs are always closure-correct here).
    double eps = 0.0;
    for (uint32_t a : atom.core) {
        size_t i = source.stored_position(a);
        const auto& zero = z.zero[i];
        double hit = 0.0;
        size_t zi = 0;
        for (size_t c = 0; c < source.recon().size(); ++c) {
            while (zi < zero.size() && zero[zi] < source.recon()[c]) ++zi;
            if (zi < zero.size() && zero[zi] == source.recon()[c]) hit += k.at(i, c);
        }
        eps += source.prob(i) * (1.0 - std::min(hit, 1.0));
    }
    eps = std::clamp(eps, 0.0, 1.0);
    out.closure_error_prob = eps;
    out.mutual_information_bits = mutual_information(source.probs(), k);

    if (out.core_size <= 1) {
        out.bound_bits = 0.0;
        return out;
    }
    double core_term = atom.mass * entropy(*atom.conditional);
    out.bound_bits = core_term - binary_entropy(eps) -
                     eps * std::log2(static_cast<double>(out.core_size - 1));
    return out;
}

} // namespace semrd
