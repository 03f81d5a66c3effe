#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "werner/bounds.hpp"
#include "werner/errors.hpp"
#include "werner/matrix.hpp"
#include "werner/rational.hpp"
#include "werner/shape.hpp"
#include "werner/states.hpp"

namespace werner {

/// Projector labels for one product term, one entry per qubit, each in
/// {+1, -1, +2, -2}. Pole terms use +-3 throughout.
using IndexTuple = std::vector<int>;

/// Enumeration is all-4^d scan; above this the tuple count is impractical.
inline constexpr int kMaxEnumerationQubits = 12;

/// Matrix assembly / verification is limited to modest qubit counts.
inline constexpr int kMaxAssemblyQubits = 7;

namespace detail {
inline void require_tuple_label(int label) {
    if (label != 1 && label != -1 && label != 2 && label != -2) {
        throw std::invalid_argument("index tuple label must be in {+1, -1, +2, -2}, got " +
                                    std::to_string(label));
    }
}
}  // namespace detail

/// Selection rule for the product terms of the separable expansion:
///   - the number of labels from {+2, -2} must be even (possibly zero);
///   - if that count is 0 mod 4, the number of negative labels must be even;
///   - if that count is 2 mod 4, the number of negative labels must be odd.
inline bool index_admissible(const IndexTuple& tuple) {
    int twos = 0;
    int negatives = 0;
    for (int label : tuple) {
        detail::require_tuple_label(label);
        if (label == 2 || label == -2) ++twos;
        if (label < 0) ++negatives;
    }
    if (twos % 2 != 0) return false;
    if (twos % 4 == 0) return negatives % 2 == 0;
    return negatives % 2 == 1;
}

/// All admissible tuples for d qubits, by scanning every 4^d candidate in
/// lexicographic order over the alphabet (+1, -1, +2, -2). The admissible
/// count is always 4^(d-1).
inline std::vector<IndexTuple> enumerate_terms(int d) {
    if (d < 2) {
        throw std::invalid_argument("enumerate_terms: requires d >= 2, got " + std::to_string(d));
    }
    if (d > kMaxEnumerationQubits) {
        throw CapacityError("enumerate_terms: d = " + std::to_string(d) +
                            " exceeds enumeration cap " + std::to_string(kMaxEnumerationQubits));
    }
    static constexpr int kAlphabet[4] = {1, -1, 2, -2};
    std::vector<IndexTuple> admissible;
    admissible.reserve(std::size_t{1} << (2 * (d - 1)));
    IndexTuple tuple(static_cast<std::size_t>(d));
    const std::size_t total = std::size_t{1} << (2 * d);
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t rest = code;
        for (int k = d - 1; k >= 0; --k) {
            tuple[static_cast<std::size_t>(k)] = kAlphabet[rest & 3];
            rest >>= 2;
        }
        if (index_admissible(tuple)) admissible.push_back(tuple);
    }
    return admissible;
}

/// One product-state term: weight * factor_1 (x) ... (x) factor_d.
struct DecompositionTerm {
    Rational weight;
    IndexTuple label;
    std::vector<DenseMatrix> factors;
};

/// Critical mixing weight for d qubits, as an exact rational.
inline Rational critical_epsilon(int d) { return bounds::qubit_exact_bound(d); }

/// The explicit separable ensemble for the qubit mixture at its critical
/// mixing weight: two "pole" terms built from the +-3 projectors at weight
/// eps_c/2, plus the 4^(d-1) admissible product terms at weight
/// eps_c/2^(d-1). Weights sum to 1 exactly.
inline std::vector<DecompositionTerm> build_decomposition(int d) {
    if (d < 2) {
        throw std::invalid_argument("build_decomposition: requires d >= 2, got " +
                                    std::to_string(d));
    }
    if (d > kMaxAssemblyQubits) {
        throw CapacityError("build_decomposition: d = " + std::to_string(d) +
                            " exceeds assembly cap " + std::to_string(kMaxAssemblyQubits));
    }
    const Rational eps_c = critical_epsilon(d);
    const Rational pole_weight = eps_c / 2;
    const Rational term_weight = eps_c / pow_int(2, d - 1);

    std::vector<DecompositionTerm> terms;
    terms.reserve((std::size_t{1} << (2 * (d - 1))) + 2);
    for (int axis : {3, -3}) {
        DecompositionTerm pole{pole_weight, IndexTuple(static_cast<std::size_t>(d), axis), {}};
        pole.factors.assign(static_cast<std::size_t>(d), projector(axis));
        terms.push_back(std::move(pole));
    }
    for (IndexTuple& tuple : enumerate_terms(d)) {
        DecompositionTerm term{term_weight, std::move(tuple), {}};
        term.factors.reserve(static_cast<std::size_t>(d));
        for (int label : term.label) term.factors.push_back(projector(label));
        terms.push_back(std::move(term));
    }
    return terms;
}

/// Weighted sum of the tensor-product terms.
inline DenseMatrix assemble(const std::vector<DecompositionTerm>& terms) {
    if (terms.empty()) {
        throw std::invalid_argument("assemble: no terms");
    }
    const std::size_t d = terms.front().factors.size();
    const std::size_t dim = std::size_t{1} << d;
    DenseMatrix sum(dim);
    for (const DecompositionTerm& term : terms) {
        if (term.factors.size() != d) {
            throw std::invalid_argument("assemble: inconsistent factor counts");
        }
        DenseMatrix product = term.factors.front();
        for (std::size_t k = 1; k < term.factors.size(); ++k)
            product = kron(product, term.factors[k]);
        product *= Complex{to_double(term.weight), 0.0};
        sum += product;
    }
    return sum;
}

/// The eight d-fold products of signed projector sums that generate the
/// sector sums of the expansion. Each base is a 2x2 combination
/// P_{+1} + c2 P_{+2} + c-1 P_{-1} + c-2 P_{-2} raised to the d-th
/// Kronecker power; expanding the power reproduces the sum over all 4^d
/// product terms with the matching sign per term.
struct GeneratingProducts {
    DenseMatrix t0, t1, t2, t3;  // signs keyed to the count of +-2 labels
    DenseMatrix s0, s1, s2, s3;  // same, with an extra sign per negative label
};

inline GeneratingProducts generating_products(int d) {
    if (d < 2) {
        throw std::invalid_argument("generating_products: requires d >= 2, got " +
                                    std::to_string(d));
    }
    if (d > kMaxAssemblyQubits) {
        throw CapacityError("generating_products: d = " + std::to_string(d) +
                            " exceeds assembly cap " + std::to_string(kMaxAssemblyQubits));
    }
    const Complex one{1.0, 0.0};
    const Complex i{0.0, 1.0};
    auto base = [](Complex c_plus2, Complex c_minus1, Complex c_minus2) {
        DenseMatrix m = projector(1);
        m += c_plus2 * projector(2);
        m += c_minus1 * projector(-1);
        m += c_minus2 * projector(-2);
        return m;
    };
    return GeneratingProducts{
        kron_power(base(one, one, one), d),    // t0
        kron_power(base(-one, one, -one), d),  // t1
        kron_power(base(i, one, i), d),        // t2
        kron_power(base(-i, one, -i), d),      // t3
        kron_power(base(one, -one, -one), d),  // s0
        kron_power(base(-one, -one, one), d),  // s1
        kron_power(base(i, -one, -i), d),      // s2
        kron_power(base(-i, -one, i), d),      // s3
    };
}

/// The same state assembled through the generating products instead of term
/// enumeration: eps_c/2 (P_{+3}^(x d) + P_{-3}^(x d))
///              + eps_c/2^(d+1) (T0 + T1 + S2 + S3).
/// Agreement with assemble(build_decomposition(d)) validates the sector
/// bookkeeping behind the selection rules.
inline DenseMatrix generating_expansion(int d) {
    const GeneratingProducts products = generating_products(d);
    const double eps_c = to_double(critical_epsilon(d));

    DenseMatrix poles = kron_power(projector(3), d);
    poles += kron_power(projector(-3), d);
    poles *= Complex{eps_c / 2.0, 0.0};

    DenseMatrix sectors = products.t0;
    sectors += products.t1;
    sectors += products.s2;
    sectors += products.s3;
    sectors *= Complex{eps_c / std::pow(2.0, d + 1), 0.0};

    return poles += sectors;
}

/// Machine-readable proof of separability: the term list plus the largest
/// entrywise deviation of the assembled sum from the target state.
struct CertificateReport {
    int d;
    Rational epsilon_c;
    std::vector<DecompositionTerm> terms;
    double max_deviation;
};

/// Validate a candidate ensemble: positive weights summing to 1, each
/// factor a genuine 2x2 density matrix (Hermitian, trace 1, idempotent),
/// assembled sum within 1e-12 of the critical-mixture state. Throws
/// CertificateError naming the first failing term.
inline CertificateReport check_certificate(int d, std::vector<DecompositionTerm> terms) {
    constexpr double kFactorTol = 1e-13;
    constexpr double kAssemblyTol = 1e-12;

    Rational weight_sum = 0;
    for (std::size_t idx = 0; idx < terms.size(); ++idx) {
        const DecompositionTerm& term = terms[idx];
        if (!(term.weight > 0)) {
            throw CertificateError("certificate term " + std::to_string(idx) +
                                       " has non-positive weight " + fraction_string(term.weight),
                                   static_cast<std::ptrdiff_t>(idx));
        }
        weight_sum += term.weight;
        if (term.factors.size() != static_cast<std::size_t>(d)) {
            throw CertificateError("certificate term " + std::to_string(idx) + " has " +
                                       std::to_string(term.factors.size()) + " factors, expected " +
                                       std::to_string(d),
                                   static_cast<std::ptrdiff_t>(idx));
        }
        for (const DenseMatrix& factor : term.factors) {
            const bool valid = factor.dim() == 2 && factor.is_hermitian(kFactorTol) &&
                               std::abs(factor.trace() - Complex{1.0, 0.0}) <= kFactorTol &&
                               max_abs_diff(factor * factor, factor) <= kFactorTol;
            if (!valid) {
                throw CertificateError("certificate term " + std::to_string(idx) +
                                           " has an invalid single-qubit factor",
                                       static_cast<std::ptrdiff_t>(idx));
            }
        }
    }
    if (weight_sum != 1) {
        throw CertificateError("certificate weights sum to " + fraction_string(weight_sum) +
                               ", expected 1");
    }

    const Rational eps_c = critical_epsilon(d);
    const SystemShape shape(2, d);
    const DenseMatrix target = build_werner(shape, to_double(eps_c));
    const double deviation = max_abs_diff(assemble(terms), target);
    if (deviation > kAssemblyTol) {
        throw CertificateError("certificate assembly deviates from the target state by " +
                               std::to_string(deviation));
    }
    return CertificateReport{d, eps_c, std::move(terms), deviation};
}

/// Build the ensemble and validate it in one step.
inline CertificateReport verify_separability_certificate(int d) {
    return check_certificate(d, build_decomposition(d));
}

}  // namespace werner
