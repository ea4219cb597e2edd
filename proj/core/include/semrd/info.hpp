#pragma once

#include <string>
#include <vector>

namespace semrd {

/// A finite distribution with atom labels.
struct Distribution {
    std::vector<std::string> labels;
    std::vector<double> p;
};

/// Row-stochastic conditional probability matrix.
struct Kernel {
    std::vector<std::string> in_labels;
    std::vector<std::string> out_labels;
    std::vector<double> rows; // row-major |in| × |out|

    size_t n_in() const { return in_labels.size(); }
    size_t n_out() const { return out_labels.size(); }
    double at(size_t i, size_t j) const { return rows[i * n_out() + j]; }
    double& at(size_t i, size_t j) { return rows[i * n_out() + j]; }
};

/// Plain dense matrix used as solver input (distortion values).
struct Mat {
    size_t n_rows = 0, n_cols = 0;
    std::vector<double> v;

    Mat() = default;
    Mat(size_t r, size_t c, double fill = 0.0) : n_rows(r), n_cols(c), v(r * c, fill) {}
    double at(size_t i, size_t j) const { return v[i * n_cols + j]; }
    double& at(size_t i, size_t j) { return v[i * n_cols + j]; }
};

void validate_distribution(const std::vector<double>& p, double tol = 1e-9);
void validate_kernel(const Kernel& k, double tol = 1e-9);

/// −Σ p log2 p with 0·log 0 := 0.
double entropy(const Distribution& p);
double entropy(const std::vector<double>& p);

/// Binary entropy in bits; endpoints give 0. Throws for p outside [0,1].
double binary_entropy(double p);

/// H(output marginal) − Σ_s p(s) H(row s), in bits.
double mutual_information(const Distribution& p, const Kernel& k);
double mutual_information(const std::vector<double>& p, const Mat& k);

struct SolverOptions {
    double rate_tol = 1e-9;     // stop on successive rate difference
    int max_iterations = 10000;
    double d_tol = 1e-6;        // slope bisection accuracy in distortion
    int max_bisections = 200;
};

struct RDPoint {
    double target = 0.0;    // requested distortion level
    double achieved = 0.0;  // distortion of the reported solution
    double rate = 0.0;      // bits
    double slope = 0.0;     // local Lagrange slope (bits per unit distortion)
    int iterations = 0;     // inner solver iterations spent
    double residual = 0.0;  // |achieved − target| certified by the bracket
};

struct RDCurve {
    std::vector<RDPoint> points;
    std::vector<Mat> kernels; // achieving test channel per point
    std::string to_csv() const;
};

/// Rate-distortion function of a finite source: for each target D, the
/// minimum mutual information subject to expected distortion ≤ D, via
/// Blahut-Arimoto at fixed slope with outer bisection on the slope. Exact
/// zero-slack targets (D at the row-minimum floor) are solved by support
/// restriction instead of a large penalty.
RDCurve ba_rate_distortion(const std::vector<double>& p, const Mat& distortion,
                           const std::vector<double>& targets, SolverOptions opt = {});

/// Largest distortion with positive rate: min over columns of E_p[d(s, col)].
double rd_max_distortion(const std::vector<double>& p, const Mat& distortion);
/// Smallest achievable expected distortion: Σ_s p(s) min_col d(s, col).
double rd_min_distortion(const std::vector<double>& p, const Mat& distortion);

/// Shannon capacity of a discrete memoryless channel, in bits.
double ba_capacity(const Kernel& channel, SolverOptions opt = {});

struct ConstrainedResult {
    double rate = 0.0; // bits
    Mat kernel;        // rows supported in the allowed sets
    int iterations = 0;
    std::vector<double> rate_trace; // per-iteration objective, non-increasing
};

/// Global minimum of I(S; Ŝ) over kernels whose row s is supported inside
/// supports[s], by alternating marginal updates and row I-projections.
ConstrainedResult min_information_constrained(const std::vector<double>& p,
                                              const std::vector<std::vector<uint32_t>>& supports,
                                              size_t n_outputs, SolverOptions opt = {});

/// Exhaustive grid search over the row simplices; an upper-bound certificate
/// within O(grid_step) of the optimum. Desk-scale instances only.
double brute_force_min_information(const std::vector<double>& p,
                                   const std::vector<std::vector<uint32_t>>& supports,
                                   size_t n_outputs, double grid_step);

} // namespace semrd
