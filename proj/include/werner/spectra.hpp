#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "werner/errors.hpp"
#include "werner/matrix.hpp"
#include "werner/partial_transpose.hpp"
#include "werner/shape.hpp"
#include "werner/states.hpp"

namespace werner {

/// Eigenvalues in ascending order with multiplicities. The numeric solver
/// reports every eigenvalue with multiplicity 1 and a residual
/// max_i ||A v_i - l_i v_i|| / max(1, ||A||_F); the analytic route groups
/// repeated eigenvalues and has residual 0.
struct SpectrumReport {
    std::vector<double> eigenvalues;
    std::vector<int> multiplicities;
    double residual = 0.0;

    std::size_t dim() const {
        return static_cast<std::size_t>(
            std::accumulate(multiplicities.begin(), multiplicities.end(), 0));
    }

    /// Ascending eigenvalue list with multiplicities expanded.
    std::vector<double> expanded() const {
        std::vector<double> flat;
        flat.reserve(dim());
        for (std::size_t k = 0; k < eigenvalues.size(); ++k)
            flat.insert(flat.end(), static_cast<std::size_t>(multiplicities[k]), eigenvalues[k]);
        return flat;
    }

    double min_eigenvalue() const {
        if (eigenvalues.empty()) throw std::logic_error("SpectrumReport: empty spectrum");
        return eigenvalues.front();
    }

    double trace() const {
        double sum = 0.0;
        for (std::size_t k = 0; k < eigenvalues.size(); ++k)
            sum += eigenvalues[k] * multiplicities[k];
        return sum;
    }
};

namespace detail {

// One cyclic-Jacobi rotation zeroing the (p, q) entry of the Hermitian
// matrix a, accumulating the rotation into the eigenvector carrier v.
// The complex pivot is reduced to a real 2x2 problem by factoring out its
// phase: with a_pq = r e^{i phi}, the rotation J has J_pp = J_qq = c,
// J_pq = s e^{i phi}, J_qp = -s e^{-i phi}, and A <- J^dagger A J.
inline void jacobi_rotate(DenseMatrix& a, DenseMatrix& v, std::size_t p, std::size_t q) {
    const Complex apq = a(p, q);
    const double r = std::abs(apq);
    const Complex phase = apq / r;
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();

    const double theta = (aqq - app) / (2.0 * r);
    const double t = theta >= 0.0 ? 1.0 / (theta + std::sqrt(theta * theta + 1.0))
                                  : 1.0 / (theta - std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;
    const Complex sp = s * phase;

    const std::size_t n = a.dim();
    for (std::size_t k = 0; k < n; ++k) {
        if (k == p || k == q) continue;
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = c * akp - std::conj(sp) * akq;
        a(k, q) = sp * akp + c * akq;
        a(p, k) = std::conj(a(k, p));
        a(q, k) = std::conj(a(k, q));
    }
    a(p, p) = app - t * r;
    a(q, q) = aqq + t * r;
    a(p, q) = 0.0;
    a(q, p) = 0.0;

    for (std::size_t k = 0; k < n; ++k) {
        const Complex vkp = v(k, p);
        const Complex vkq = v(k, q);
        v(k, p) = c * vkp - std::conj(sp) * vkq;
        v(k, q) = sp * vkp + c * vkq;
    }
}

inline double offdiag_norm(const DenseMatrix& a) {
    double sum = 0.0;
    for (std::size_t p = 0; p < a.dim(); ++p)
        for (std::size_t q = p + 1; q < a.dim(); ++q) sum += std::norm(a(p, q));
    return std::sqrt(2.0 * sum);
}

}  // namespace detail

/// Full spectrum of a Hermitian matrix by cyclic Jacobi rotations.
///
/// Convergence: off-diagonal Frobenius mass <= 1e-14 * ||A||_F, within a
/// budget of 50 sweeps. Pivots below target/(2 dim) are skipped; a sweep
/// that skips everything leaves at most target/2 of off-diagonal mass, so
/// skipping never blocks convergence. The residual is checked against the
/// original matrix, which also guards the eigenvector accumulation.
inline SpectrumReport hermitian_spectrum(const DenseMatrix& input) {
    if (!input.is_hermitian(1e-12)) {
        throw std::invalid_argument("hermitian_spectrum: input is not Hermitian within 1e-12");
    }
    const std::size_t n = input.dim();
    if (n == 0) {
        throw std::invalid_argument("hermitian_spectrum: empty matrix");
    }

    // Work on an exactly Hermitian copy; the input is only guaranteed
    // Hermitian to tolerance.
    DenseMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = input(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex avg = 0.5 * (input(i, j) + std::conj(input(j, i)));
            a(i, j) = avg;
            a(j, i) = std::conj(avg);
        }
    }
    const DenseMatrix symmetrized = a;

    DenseMatrix v = DenseMatrix::identity(n);
    const double norm = a.frobenius_norm();
    const double target = 1e-14 * norm;
    const double skip = target / (2.0 * static_cast<double>(n));

    if (norm > 0.0) {
        constexpr int kMaxSweeps = 50;
        bool converged = false;
        for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
            if (detail::offdiag_norm(a) <= target) {
                converged = true;
                break;
            }
            bool rotated = false;
            for (std::size_t p = 0; p < n; ++p) {
                for (std::size_t q = p + 1; q < n; ++q) {
                    if (std::abs(a(p, q)) <= skip) continue;
                    detail::jacobi_rotate(a, v, p, q);
                    rotated = true;
                }
            }
            if (!rotated) {
                converged = true;
                break;
            }
        }
        if (!converged && detail::offdiag_norm(a) > target) {
            throw SolverError("hermitian_spectrum: no convergence within 50 sweeps");
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&a](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    SpectrumReport report;
    report.eigenvalues.reserve(n);
    report.multiplicities.assign(n, 1);
    for (std::size_t i : order) report.eigenvalues.push_back(a(i, i).real());

    // Residual against the symmetrized input, using its sparsity.
    std::vector<std::vector<std::pair<std::size_t, Complex>>> rows(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (symmetrized(i, j) != Complex{0.0, 0.0}) rows[i].emplace_back(j, symmetrized(i, j));

    const double scale = std::max(1.0, norm);
    double residual = 0.0;
    std::vector<Complex> av(n);
    for (std::size_t idx = 0; idx < n; ++idx) {
        const std::size_t col = order[idx];
        const double lambda = report.eigenvalues[idx];
        double err2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            Complex sum = 0.0;
            for (const auto& [j, aij] : rows[i]) sum += aij * v(j, col);
            err2 += std::norm(sum - lambda * v(i, col));
        }
        residual = std::max(residual, std::sqrt(err2));
    }
    residual /= scale;
    if (residual > 1e-10) {
        throw SolverError("hermitian_spectrum: residual " + std::to_string(residual) +
                          " exceeds contract 1e-10");
    }
    report.residual = residual;
    return report;
}

/// Closed-form spectrum of the partially transposed noisy GHZ state.
///
/// The partial transpose maps the GHZ projector onto n diagonal singles at
/// 1/n, n(n-1)/2 two-dimensional swap blocks with eigenvalues +-1/n, and
/// zero on the remaining n^d - n^2 dimensions; mixing with noise shifts
/// every eigenvalue affinely to (1-eps)/n^d + eps * mu. The multiset is the
/// same for every bipartition. Cross-validated against the numeric solver
/// by the test suite.
inline SpectrumReport analytic_pt_spectrum(const SystemShape& shape, const BipartitionMask& mask,
                                           MixingParameter eps) {
    if (mask.subsystems() != shape.subsystems()) {
        throw std::invalid_argument("analytic_pt_spectrum: mask/shape subsystem mismatch");
    }
    const double n = static_cast<double>(shape.local_dim());
    const double dim = static_cast<double>(shape.total_dim());
    const double e = eps.value();
    const double noise_level = (1.0 - e) / dim;

    const int singles = shape.local_dim();
    const int swap_blocks = shape.local_dim() * (shape.local_dim() - 1) / 2;
    const std::size_t zeros = shape.total_dim() -
                              static_cast<std::size_t>(shape.local_dim()) *
                                  static_cast<std::size_t>(shape.local_dim());

    std::vector<std::pair<double, int>> groups;
    groups.emplace_back(noise_level - e / n, swap_blocks);
    if (zeros > 0) groups.emplace_back(noise_level, static_cast<int>(zeros));
    groups.emplace_back(noise_level + e / n, singles + swap_blocks);
    std::sort(groups.begin(), groups.end());

    SpectrumReport report;
    for (const auto& [value, mult] : groups) {
        if (!report.eigenvalues.empty() && report.eigenvalues.back() == value) {
            report.multiplicities.back() += mult;
        } else {
            report.eigenvalues.push_back(value);
            report.multiplicities.push_back(mult);
        }
    }
    return report;
}

enum class ThresholdMethod {
    analytic_block,  // closed-form extreme eigenvalue -1/n of the transposed GHZ projector
    numeric_affine,  // extreme eigenvalue obtained by the numeric eigensolver
};

inline const char* to_string(ThresholdMethod method) {
    return method == ThresholdMethod::analytic_block ? "analytic-block" : "numeric-affine";
}

struct ThresholdReport {
    double epsilon_critical;
    BipartitionMask mask_used;
    double mu_min;  // minimum eigenvalue of the transposed GHZ projector
    ThresholdMethod method;
};

/// Critical mixing weight where the minimum eigenvalue of the partial
/// transpose crosses zero. The noise part of the mixture is a multiple of
/// the identity and invariant under transposition, so every eigenvalue is
/// affine in eps: l(eps) = (1-eps)/n^d + eps*mu. The threshold follows in
/// closed form from the most negative mu; no root search is needed.
inline ThresholdReport ppt_threshold(const SystemShape& shape, const BipartitionMask& mask,
                                     ThresholdMethod method = ThresholdMethod::numeric_affine) {
    double mu_min = 0.0;
    if (method == ThresholdMethod::numeric_affine) {
        const DenseMatrix transposed = partial_transpose(build_ghz(shape), shape, mask);
        mu_min = hermitian_spectrum(transposed).min_eigenvalue();
    } else {
        mu_min = -1.0 / static_cast<double>(shape.local_dim());
    }
    const double noise_level = 1.0 / static_cast<double>(shape.total_dim());
    if (mu_min >= 0.0) {
        throw std::logic_error("ppt_threshold: transposed GHZ projector has no negative "
                               "eigenvalue; internal inconsistency");
    }
    return ThresholdReport{noise_level / (noise_level - mu_min), mask, mu_min, method};
}

/// Peres test: true iff the partial transpose over `mask` has no eigenvalue
/// below -tol. A negative eigenvalue certifies entanglement.
inline bool is_ppt(const SystemShape& shape, MixingParameter eps, const BipartitionMask& mask,
                   double tol) {
    const DenseMatrix transposed = partial_transpose(build_werner(shape, eps), shape, mask);
    return hermitian_spectrum(transposed).min_eigenvalue() >= -tol;
}

/// Bisection cross-check for ppt_threshold. Slower; kept for validation.
inline double ppt_threshold_bisection(const SystemShape& shape, const BipartitionMask& mask,
                                      double tol = 1e-10) {
    const DenseMatrix ghz = build_ghz(shape);
    const DenseMatrix noise = build_noise(shape);
    auto min_eig = [&](double e) {
        DenseMatrix mix = noise;
        mix *= Complex{1.0 - e, 0.0};
        DenseMatrix part = ghz;
        part *= Complex{e, 0.0};
        mix += part;
        return hermitian_spectrum(partial_transpose(mix, shape, mask)).min_eigenvalue();
    };
    double lo = 0.0;   // PPT here
    double hi = 1.0;   // negative eigenvalue here
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        (min_eig(mid) >= 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace werner
