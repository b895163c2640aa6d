#ifndef XRPERF_OLS_HPP
#define XRPERF_OLS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "xrperf/errors.hpp"
#include "xrperf/regression.hpp"

namespace xrperf {

/// One observation per row; column order matches `columns`.
struct ObservationTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

/// Rank-decision tolerance, relative to the largest pivot magnitude.
inline constexpr double kRankTolerance = 1e-10;

namespace detail {

// Dense column-pivoted Householder QR least squares on the design matrix.
// a is n x k in row-major order, consumed in place; rhs is transformed along.
// Throws RankDeficient when a trailing pivot falls under tolerance.
inline std::vector<double> solve_pivoted_qr(std::vector<std::vector<double>> a,
                                            std::vector<double> rhs, std::size_t k) {
    const std::size_t n = a.size();
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);

    for (std::size_t j = 0; j < k; ++j) {
        // Pivot: bring the remaining column with the largest norm to position j.
        std::size_t best = j;
        double best_norm = -1.0;
        for (std::size_t c = j; c < k; ++c) {
            double norm = 0.0;
            for (std::size_t r = j; r < n; ++r) norm += a[r][c] * a[r][c];
            if (norm > best_norm) {
                best_norm = norm;
                best = c;
            }
        }
        if (best != j) {
            for (std::size_t r = 0; r < n; ++r) std::swap(a[r][j], a[r][best]);
            std::swap(perm[j], perm[best]);
        }

        // Householder reflection zeroing a[j+1..n-1][j].
        double alpha = std::sqrt(best_norm);
        if (a[j][j] > 0.0) alpha = -alpha;
        std::vector<double> v(n - j, 0.0);
        v[0] = a[j][j] - alpha;
        for (std::size_t r = j + 1; r < n; ++r) v[r - j] = a[r][j];
        double vnorm2 = 0.0;
        for (double x : v) vnorm2 += x * x;
        a[j][j] = alpha;
        for (std::size_t r = j + 1; r < n; ++r) a[r][j] = 0.0;
        if (vnorm2 <= 0.0) continue;

        for (std::size_t c = j + 1; c < k; ++c) {
            double dot = 0.0;
            for (std::size_t r = j; r < n; ++r) dot += v[r - j] * a[r][c];
            const double f = 2.0 * dot / vnorm2;
            for (std::size_t r = j; r < n; ++r) a[r][c] -= f * v[r - j];
        }
        double dot = 0.0;
        for (std::size_t r = j; r < n; ++r) dot += v[r - j] * rhs[r];
        const double f = 2.0 * dot / vnorm2;
        for (std::size_t r = j; r < n; ++r) rhs[r] -= f * v[r - j];
    }

    double max_diag = 0.0;
    for (std::size_t j = 0; j < k; ++j) max_diag = std::max(max_diag, std::abs(a[j][j]));
    for (std::size_t j = 0; j < k; ++j) {
        if (std::abs(a[j][j]) <= kRankTolerance * max_diag) {
            throw RankDeficient("design matrix is rank deficient (pivot " + std::to_string(j) +
                                " below tolerance)");
        }
    }

    std::vector<double> beta_perm(k, 0.0);
    for (std::size_t j = k; j-- > 0;) {
        double s = rhs[j];
        for (std::size_t c = j + 1; c < k; ++c) s -= a[j][c] * beta_perm[c];
        beta_perm[j] = s / a[j][j];
    }
    std::vector<double> beta(k, 0.0);
    for (std::size_t j = 0; j < k; ++j) beta[perm[j]] = beta_perm[j];
    return beta;
}

// Normal-equations path: Cholesky on A^T A. Returns false when a pivot loses
// too much magnitude, signalling the caller to fall back to pivoted QR.
inline bool try_normal_equations(const std::vector<std::vector<double>>& a,
                                 const std::vector<double>& y, std::size_t k,
                                 std::vector<double>& beta) {
    const std::size_t n = a.size();
    std::vector<std::vector<double>> g(k, std::vector<double>(k, 0.0));
    std::vector<double> b(k, 0.0);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t i = 0; i < k; ++i) {
            b[i] += a[r][i] * y[r];
            for (std::size_t j = i; j < k; ++j) g[i][j] += a[r][i] * a[r][j];
        }
    }
    double max_diag = 0.0;
    for (std::size_t i = 0; i < k; ++i) max_diag = std::max(max_diag, g[i][i]);
    if (max_diag <= 0.0) return false;

    // In-place Cholesky, lower triangle into g.
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i; j < k; ++j) {
            double s = g[i][j];
            for (std::size_t m = 0; m < i; ++m) s -= g[i][m] * g[j][m];
            if (i == j) {
                if (s <= kRankTolerance * max_diag) return false;
                g[i][i] = std::sqrt(s);
            } else {
                g[j][i] = s / g[i][i];
            }
        }
    }
    // Solve L z = b, then L^T beta = z.
    std::vector<double> z(k, 0.0);
    for (std::size_t i = 0; i < k; ++i) {
        double s = b[i];
        for (std::size_t m = 0; m < i; ++m) s -= g[i][m] * z[m];
        z[i] = s / g[i][i];
    }
    beta.assign(k, 0.0);
    for (std::size_t i = k; i-- > 0;) {
        double s = z[i];
        for (std::size_t m = i + 1; m < k; ++m) s -= g[m][i] * beta[m];
        beta[i] = s / g[i][i];
    }
    return true;
}

} // namespace detail

/// Ordinary least squares with an intercept term. Deterministic: the normal
/// equations are solved by Cholesky, falling back to column-pivoted
/// Householder QR when conditioning degrades. R^2 for a zero-variance target
/// is defined as 1 (a constant is fit exactly).
inline LinearModel fit_linear_model(const std::vector<std::vector<double>>& feature_rows,
                                    const std::vector<double>& target,
                                    const std::vector<std::string>& feature_names) {
    const std::size_t n = feature_rows.size();
    const std::size_t p = feature_names.size();
    const std::size_t k = p + 1;
    if (n < k) {
        throw InsufficientData("need at least " + std::to_string(k) + " rows to fit " +
                               std::to_string(p) + " features, got " + std::to_string(n));
    }

    std::vector<std::vector<double>> a(n, std::vector<double>(k, 1.0));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t j = 0; j < p; ++j) a[r][j + 1] = feature_rows[r][j];
    }

    std::vector<double> beta;
    if (!detail::try_normal_equations(a, target, k, beta)) {
        beta = detail::solve_pivoted_qr(a, target, k);
    }

    LinearModel model;
    model.intercept = beta[0];
    model.coefficients.assign(beta.begin() + 1, beta.end());
    model.feature_names = feature_names;

    const double mean = std::accumulate(target.begin(), target.end(), 0.0) / double(n);
    double ss_res = 0.0;
    double ss_tot = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
        double pred = beta[0];
        for (std::size_t j = 0; j < p; ++j) pred += beta[j + 1] * feature_rows[r][j];
        ss_res += (target[r] - pred) * (target[r] - pred);
        ss_tot += (target[r] - mean) * (target[r] - mean);
    }
    model.r_squared = ss_tot == 0.0 ? 1.0 : std::clamp(1.0 - ss_res / ss_tot, 0.0, 1.0);
    return model;
}

/// Fits `target_column` against every other column of the table.
inline LinearModel fit_linear_model(const ObservationTable& table,
                                    const std::string& target_column) {
    const auto it = std::find(table.columns.begin(), table.columns.end(), target_column);
    if (it == table.columns.end()) {
        throw ParseError("target column '" + target_column + "' not found");
    }
    const std::size_t target_idx = static_cast<std::size_t>(it - table.columns.begin());

    std::vector<std::string> names;
    for (std::size_t j = 0; j < table.columns.size(); ++j) {
        if (j != target_idx) names.push_back(table.columns[j]);
    }
    std::vector<std::vector<double>> x;
    std::vector<double> y;
    x.reserve(table.rows.size());
    y.reserve(table.rows.size());
    for (const auto& row : table.rows) {
        std::vector<double> feats;
        feats.reserve(names.size());
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j != target_idx) feats.push_back(row[j]);
        }
        x.push_back(std::move(feats));
        y.push_back(row[target_idx]);
    }
    return fit_linear_model(x, y, names);
}

} // namespace xrperf

#endif // XRPERF_OLS_HPP
