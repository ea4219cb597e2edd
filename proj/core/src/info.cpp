#include "semrd/info.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "semrd/error.hpp"

namespace semrd {

namespace {
constexpr double kDistTol = 1e-12;

} // namespace

void validate_distribution(const std::vector<double>& p, double tol) {
    double sum = 0.0;
    for (double x : p) {
        if (x < 0.0) throw ValidationError("negative probability");
        sum += x;
    }
    if (std::fabs(sum - 1.0) > tol)
        throw ValidationError("probabilities must sum to 1", "sum=" + std::to_string(sum));
}

void validate_kernel(const Kernel& k, double tol) {
    if (k.rows.size() != k.n_in() * k.n_out())
        throw ValidationError("kernel shape mismatch");
    for (size_t i = 0; i < k.n_in(); ++i) {
        double sum = 0.0;
        for (size_t j = 0; j < k.n_out(); ++j) {
            if (k.at(i, j) < 0.0) throw ValidationError("negative kernel entry");
            sum += k.at(i, j);
        }
        if (std::fabs(sum - 1.0) > tol)
            throw ValidationError("kernel row must sum to 1",
                                  "row " + std::to_string(i) + " sum=" + std::to_string(sum));
    }
}

double entropy(const std::vector<double>& p) {
    double h = 0.0;
    for (double x : p)
        if (x > 0.0) h -= x * std::log2(x);
    return h;
}

double entropy(const Distribution& p) {
    validate_distribution(p.p);
    return entropy(p.p);
}

double binary_entropy(double p) {
    if (p < 0.0 || p > 1.0) throw ValidationError("binary entropy argument outside [0,1]");
    double h = 0.0;
    if (p > 0.0) h -= p * std::log2(p);
    if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
    return h;
}

double mutual_information(const std::vector<double>& p, const Mat& k) {
    std::vector<double> out(k.n_cols, 0.0);
    for (size_t i = 0; i < k.n_rows; ++i)
        for (size_t j = 0; j < k.n_cols; ++j) out[j] += p[i] * k.at(i, j);
    double h_out = entropy(out);
    double h_cond = 0.0;
    for (size_t i = 0; i < k.n_rows; ++i) {
        if (p[i] <= 0.0) continue;
        double h_row = 0.0;
        for (size_t j = 0; j < k.n_cols; ++j) {
            double x = k.at(i, j);
            if (x > 0.0) h_row -= x * std::log2(x);
        }
        h_cond += p[i] * h_row;
    }
    return h_out - h_cond;
}

double mutual_information(const Distribution& p, const Kernel& k) {
    validate_distribution(p.p);
    validate_kernel(k);
    if (p.p.size() != k.n_in()) throw ValidationError("distribution/kernel size mismatch");
    Mat m(k.n_in(), k.n_out());
    m.v = k.rows;
    return mutual_information(p.p, m);
}

double rd_min_distortion(const std::vector<double>& p, const Mat& d) {
    double total = 0.0;
    for (size_t i = 0; i < d.n_rows; ++i) {
        double row_min = std::numeric_limits<double>::infinity();
        for (size_t j = 0; j < d.n_cols; ++j) row_min = std::min(row_min, d.at(i, j));
        if (!std::isfinite(row_min))
            throw ValidationError("distortion row has no finite minimum");
        total += p[i] * row_min;
    }
    return total;
}

double rd_max_distortion(const std::vector<double>& p, const Mat& d) {
    double best = std::numeric_limits<double>::infinity();
    for (size_t j = 0; j < d.n_cols; ++j) {
        double avg = 0.0;
        for (size_t i = 0; i < d.n_rows; ++i) avg += p[i] * d.at(i, j);
        best = std::min(best, avg);
    }
    return best;
}

namespace {

struct SlopeSolve {
    Mat kernel;       // over the positive-probability rows
    double distortion = 0.0;
    double rate = 0.0;
    int iterations = 0;
    double gap = 0.0; // certified distance of rate+beta·distortion from optimal
    std::vector<double> q; // final output marginal, reusable as a warm start
};

// Blahut-Arimoto inner loop at fixed slope beta ≥ 0 (bits per distortion).
// Stops on a certified duality gap: for the current output law q, the
// Lagrangian optimum is sandwiched between −Σ p log2(Σ q·2^(−βd)) and that
// value minus log2 of the worst multiplier violation.
SlopeSolve solve_fixed_slope(const std::vector<double>& p, const Mat& d, double beta,
                             const SolverOptions& opt, const std::vector<double>* warm_q) {
    size_t n = d.n_rows, m = d.n_cols;
    SlopeSolve s;
    s.kernel = Mat(n, m, 0.0);

    Mat e(n, m);
    const double ln2 = std::log(2.0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j) e.at(i, j) = std::exp(-beta * ln2 * d.at(i, j));

    std::vector<double> q =
        warm_q ? *warm_q : std::vector<double>(m, 1.0 / static_cast<double>(m));
    std::vector<double> c(n, 0.0), viol(m, 0.0);

    for (int it = 0; it < opt.max_iterations; ++it) {
        s.iterations = it + 1;
        // Row normalizers and dual bounds at the current q.
        double dual_up = 0.0;
        for (size_t i = 0; i < n; ++i) {
            double ci = 0.0;
            for (size_t j = 0; j < m; ++j) ci += q[j] * e.at(i, j);
            c[i] = ci;
            dual_up -= p[i] * std::log2(ci);
        }
        std::fill(viol.begin(), viol.end(), 0.0);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < m; ++j) viol[j] += p[i] * e.at(i, j) / c[i];
        double worst = 0.0;
        for (double v : viol) worst = std::max(worst, v);
        double dual_lo = dual_up - std::log2(worst);

        // Row update k(j|i) = q(j)·2^(−βd)/c(i), then the marginal.
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < m; ++j) s.kernel.at(i, j) = q[j] * e.at(i, j) / c[i];
        std::vector<double> qn(m, 0.0);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < m; ++j) qn[j] += p[i] * s.kernel.at(i, j);

        double rate = 0.0, distortion = 0.0;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < m; ++j) {
                double k = s.kernel.at(i, j);
                if (k > 0.0) rate += p[i] * k * (std::log2(k) - std::log2(qn[j]));
                distortion += p[i] * k * d.at(i, j);
            }
        s.rate = std::max(rate, 0.0);
        s.distortion = distortion;
        s.gap = std::min(rate + beta * distortion, dual_up) - dual_lo;
        q = std::move(qn);
        if (s.gap < opt.rate_tol) {
            s.q = q;
            return s;
        }
    }
    throw NumericError("rate-distortion solver failed to converge (gap " +
                       std::to_string(s.gap) + ")");
}

// Support-restricted exact solve used for targets at the distortion floor:
// rows may only use their minimum-distortion columns.
ConstrainedResult solve_at_floor(const std::vector<double>& p, const Mat& d,
                                 const SolverOptions& opt) {
    std::vector<std::vector<uint32_t>> supports(d.n_rows);
    for (size_t i = 0; i < d.n_rows; ++i) {
        double row_min = std::numeric_limits<double>::infinity();
        for (size_t j = 0; j < d.n_cols; ++j) row_min = std::min(row_min, d.at(i, j));
        for (size_t j = 0; j < d.n_cols; ++j)
            if (d.at(i, j) <= row_min + kDistTol)
                supports[i].push_back(static_cast<uint32_t>(j));
    }
    return min_information_constrained(p, supports, d.n_cols, opt);
}

} // namespace

std::string RDCurve::to_csv() const {
    std::string out = "D,R,slope,iterations\n";
    char buf[128];
    for (const RDPoint& pt : points) {
        std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g,%d\n", pt.target, pt.rate, pt.slope,
                      pt.iterations);
        out += buf;
    }
    return out;
}

RDCurve ba_rate_distortion(const std::vector<double>& p, const Mat& distortion,
                           const std::vector<double>& targets, SolverOptions opt) {
    validate_distribution(p);
    if (p.size() != distortion.n_rows)
        throw ValidationError("source/distortion size mismatch");
    if (distortion.n_cols == 0) throw ValidationError("empty reconstruction alphabet");

    // Zero-probability atoms cannot affect rate or distortion; drop them and
    // reinsert marginal rows afterwards.
    std::vector<size_t> live;
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] > 0.0) live.push_back(i);
    std::vector<double> lp;
    Mat ld(live.size(), distortion.n_cols);
    for (size_t a = 0; a < live.size(); ++a) {
        lp.push_back(p[live[a]]);
        for (size_t j = 0; j < distortion.n_cols; ++j)
            ld.at(a, j) = distortion.at(live[a], j);
    }

    double d_min = rd_min_distortion(lp, ld);
    double d_max = rd_max_distortion(lp, ld);

    RDCurve curve;
    for (double target : targets) {
        if (target < d_min - 1e-9)
            throw NumericError("distortion target below the achievable minimum (" +
                               std::to_string(target) + " < " + std::to_string(d_min) + ")");
        RDPoint pt;
        pt.target = target;
        Mat kernel;

        if (target >= d_max - kDistTol) {
            // Constant reconstruction on the best average column.
            size_t best = 0;
            double best_avg = std::numeric_limits<double>::infinity();
            for (size_t j = 0; j < ld.n_cols; ++j) {
                double avg = 0.0;
                for (size_t i = 0; i < ld.n_rows; ++i) avg += lp[i] * ld.at(i, j);
                if (avg < best_avg) { best_avg = avg; best = j; }
            }
            kernel = Mat(ld.n_rows, ld.n_cols, 0.0);
            for (size_t i = 0; i < ld.n_rows; ++i) kernel.at(i, best) = 1.0;
            pt.rate = 0.0;
            pt.achieved = best_avg;
            pt.slope = 0.0;
        } else if (target <= d_min + kDistTol) {
            ConstrainedResult res = solve_at_floor(lp, ld, opt);
            kernel = res.kernel;
            pt.rate = res.rate;
            pt.achieved = d_min;
            pt.slope = std::numeric_limits<double>::infinity();
            pt.iterations = res.iterations;
        } else {
            // Bracket the slope: distortion decreases as beta grows.
            double beta_lo = 0.0;
            SlopeSolve lo = solve_fixed_slope(lp, ld, beta_lo, opt, nullptr);
            double beta_hi = 1.0;
            SlopeSolve hi = solve_fixed_slope(lp, ld, beta_hi, opt, &lo.q);
            int spent = lo.iterations + hi.iterations;
            while (hi.distortion > target && beta_hi < 1e9) {
                beta_lo = beta_hi;
                lo = hi;
                beta_hi *= 2.0;
                hi = solve_fixed_slope(lp, ld, beta_hi, opt, &hi.q);
                spent += hi.iterations;
            }
            if (hi.distortion > target)
                throw NumericError("slope bracketing failed");

            SlopeSolve mid = hi;
            double beta_mid = beta_hi;
            for (int b = 0; b < opt.max_bisections; ++b) {
                if (std::fabs(mid.distortion - target) <= opt.d_tol * 1e-3) break;
                if (beta_hi - beta_lo < 1e-12 * (1.0 + beta_hi)) break;
                beta_mid = 0.5 * (beta_lo + beta_hi);
                mid = solve_fixed_slope(lp, ld, beta_mid, opt, &mid.q);
                spent += mid.iterations;
                if (mid.distortion > target) {
                    beta_lo = beta_mid;
                    lo = mid;
                } else {
                    beta_hi = beta_mid;
                    hi = mid;
                }
            }
            pt.iterations = spent;
            pt.slope = -beta_mid;
            if (std::fabs(mid.distortion - target) <= opt.d_tol * 1e-3) {
                pt.rate = mid.rate;
                pt.achieved = mid.distortion;
                pt.residual = std::fabs(mid.distortion - target);
                kernel = mid.kernel;
            } else {
                // The slope bracket collapsed with the target strictly
                // inside: a facet. Both endpoints are gap-certified for the
                // same slope, so the curve is their chord here.
                double span = lo.distortion - hi.distortion;
                double t = span > 0.0 ? (lo.distortion - target) / span : 0.0;
                pt.rate = lo.rate + t * (hi.rate - lo.rate);
                pt.achieved = target;
                pt.residual = std::max(lo.gap, hi.gap);
                kernel = Mat(ld.n_rows, ld.n_cols);
                for (size_t i = 0; i < kernel.v.size(); ++i)
                    kernel.v[i] = (1.0 - t) * lo.kernel.v[i] + t * hi.kernel.v[i];
            }
        }

        // Reinsert zero-probability rows with the output marginal.
        Mat full(p.size(), distortion.n_cols, 0.0);
        std::vector<double> q(distortion.n_cols, 0.0);
        for (size_t a = 0; a < live.size(); ++a)
            for (size_t j = 0; j < distortion.n_cols; ++j) q[j] += lp[a] * kernel.at(a, j);
        for (size_t a = 0; a < live.size(); ++a)
            for (size_t j = 0; j < distortion.n_cols; ++j)
                full.at(live[a], j) = kernel.at(a, j);
        for (size_t i = 0; i < p.size(); ++i) {
            if (p[i] > 0.0) continue;
            for (size_t j = 0; j < distortion.n_cols; ++j) full.at(i, j) = q[j];
        }
        curve.points.push_back(pt);
        curve.kernels.push_back(std::move(full));
    }
    return curve;
}

double ba_capacity(const Kernel& channel, SolverOptions opt) {
    validate_kernel(channel);
    size_t n = channel.n_in(), m = channel.n_out();
    std::vector<double> p(n, 1.0 / static_cast<double>(n));
    std::vector<double> q(m, 0.0);
    std::vector<double> t(n, 0.0);

    for (int it = 0; it < opt.max_iterations; ++it) {
        std::fill(q.begin(), q.end(), 0.0);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < m; ++j) q[j] += p[i] * channel.at(i, j);
        double c_low = 0.0, c_up = -std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < n; ++i) {
            double ti = 0.0;
            for (size_t j = 0; j < m; ++j) {
                double w = channel.at(i, j);
                if (w > 0.0) ti += w * (std::log2(w) - std::log2(q[j]));
            }
            t[i] = ti;
            c_low += p[i] * ti;
            c_up = std::max(c_up, ti);
        }
        if (c_up - c_low < 1e-12 || it + 1 == opt.max_iterations) return std::max(c_low, 0.0);
        // Multiplicative update toward the capacity-achieving input law.
        double norm = 0.0;
        const double ln2 = std::log(2.0);
        for (size_t i = 0; i < n; ++i) {
            p[i] *= std::exp(ln2 * t[i]);
            norm += p[i];
        }
        for (size_t i = 0; i < n; ++i) p[i] /= norm;
    }
    throw NumericError("capacity solver failed to converge");
}

ConstrainedResult min_information_constrained(const std::vector<double>& p,
                                              const std::vector<std::vector<uint32_t>>& supports,
                                              size_t n_outputs, SolverOptions opt) {
    validate_distribution(p);
    if (supports.size() != p.size()) throw ValidationError("support list size mismatch");

    std::vector<size_t> live;
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] > 0.0) live.push_back(i);

    std::vector<bool> used(n_outputs, false);
    for (size_t i : live) {
        if (supports[i].empty())
            throw ValidationError("empty allowed output set", "source atom " + std::to_string(i));
        for (uint32_t j : supports[i]) {
            if (j >= n_outputs) throw ValidationError("support index out of range");
            used[j] = true;
        }
    }

    ConstrainedResult res;
    res.kernel = Mat(p.size(), n_outputs, 0.0);
    if (live.empty()) return res;

    size_t n_used = 0;
    for (bool u : used) n_used += u;
    std::vector<double> q(n_outputs, 0.0);
    for (size_t j = 0; j < n_outputs; ++j)
        if (used[j]) q[j] = 1.0 / static_cast<double>(n_used);

    // Alternating minimization with a certified sandwich: for the current
    // marginal q, the optimum lies between −Σ p log2(q(allowed set)) and
    // that value minus log2 of the worst output-mass violation.
    std::vector<double> mass(p.size(), 0.0), viol(n_outputs, 0.0);
    double gap = std::numeric_limits<double>::infinity();
    for (int it = 0; it < opt.max_iterations; ++it) {
        double dual_up = 0.0;
        bool degenerate = false;
        for (size_t i : live) {
            double mi = 0.0;
            for (uint32_t j : supports[i]) mi += q[j];
            mass[i] = mi;
            if (mi <= 0.0) degenerate = true;
            else dual_up -= p[i] * std::log2(mi);
        }
        double dual_lo = -std::numeric_limits<double>::infinity();
        if (!degenerate) {
            std::fill(viol.begin(), viol.end(), 0.0);
            for (size_t i : live)
                for (uint32_t j : supports[i]) viol[j] += p[i] / mass[i];
            double worst = 0.0;
            for (double v : viol) worst = std::max(worst, v);
            dual_lo = dual_up - std::log2(worst);
        }

        // Row I-projection: restrict the marginal to the allowed set.
        for (size_t i : live) {
            if (mass[i] <= 0.0) {
                double u = 1.0 / static_cast<double>(supports[i].size());
                for (uint32_t j : supports[i]) res.kernel.at(i, j) = u;
            } else {
                for (uint32_t j : supports[i]) res.kernel.at(i, j) = q[j] / mass[i];
            }
        }
        // Marginal update.
        std::fill(q.begin(), q.end(), 0.0);
        for (size_t i : live)
            for (uint32_t j : supports[i]) q[j] += p[i] * res.kernel.at(i, j);
        // Rate of the current pair.
        double rate = 0.0;
        for (size_t i : live)
            for (uint32_t j : supports[i]) {
                double k = res.kernel.at(i, j);
                if (k > 0.0) rate += p[i] * k * (std::log2(k) - std::log2(q[j]));
            }
        res.iterations = it + 1;
        res.rate_trace.push_back(rate);
        gap = std::min(rate, dual_up) - dual_lo;
        if (gap < opt.rate_tol) {
            res.rate = std::max(rate, 0.0);
            // Rows of zero-probability atoms cannot affect the objective.
            for (size_t i = 0; i < p.size(); ++i) {
                if (p[i] > 0.0) continue;
                if (supports[i].empty()) continue;
                double u = 1.0 / static_cast<double>(supports[i].size());
                for (uint32_t j : supports[i]) res.kernel.at(i, j) = u;
            }
            return res;
        }
    }
    throw NumericError("constrained information minimizer failed to converge (gap " +
                       std::to_string(gap) + ")");
}

double brute_force_min_information(const std::vector<double>& p,
                                   const std::vector<std::vector<uint32_t>>& supports,
                                   size_t n_outputs, double grid_step) {
    validate_distribution(p);
    if (grid_step < 0.01) throw CapExceeded("grid step below 0.01");
    std::vector<size_t> live;
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] > 0.0) live.push_back(i);
    if (live.size() > 3) throw CapExceeded("brute-force oracle limited to 3 source atoms");
    for (size_t i : live) {
        if (supports[i].empty()) throw ValidationError("empty allowed output set");
        if (supports[i].size() > 4)
            throw CapExceeded("brute-force oracle limited to 4 outputs per support");
    }
    if (live.empty()) return 0.0;

    int steps = static_cast<int>(std::lround(1.0 / grid_step));
    std::vector<double> lp;
    for (size_t i : live) lp.push_back(p[i]);

    // Enumerate compositions of `steps` units over each row's support.
    Mat kernel(live.size(), n_outputs, 0.0);
    double best = std::numeric_limits<double>::infinity();

    auto enumerate_row = [&](auto&& self, size_t row) -> void {
        if (row == live.size()) {
            best = std::min(best, mutual_information(lp, kernel));
            return;
        }
        const auto& sup = supports[live[row]];
        std::vector<int> units(sup.size(), 0);
        auto fill = [&](auto&& fill_self, size_t pos, int remaining) -> void {
            if (pos + 1 == sup.size()) {
                units[pos] = remaining;
                for (size_t k = 0; k < sup.size(); ++k)
                    kernel.at(row, sup[k]) =
                        static_cast<double>(units[k]) / static_cast<double>(steps);
                self(self, row + 1);
                for (size_t k = 0; k < sup.size(); ++k) kernel.at(row, sup[k]) = 0.0;
                return;
            }
            for (int u = 0; u <= remaining; ++u) {
                units[pos] = u;
                fill_self(fill_self, pos + 1, remaining - u);
            }
        };
        fill(fill, 0, steps);
    };
    enumerate_row(enumerate_row, 0);
    return best;
}

} // namespace semrd
