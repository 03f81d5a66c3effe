#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "werner/matrix.hpp"
#include "werner/shape.hpp"

namespace werner {

/// Mixing weight of the entangled component, validated to [0, 1].
/// Out-of-range values are rejected rather than clamped; silent clamping
/// would corrupt threshold searches.
class MixingParameter {
public:
    MixingParameter(double value) : value_(value) {
        if (!(value >= 0.0 && value <= 1.0)) {
            throw std::invalid_argument("MixingParameter: epsilon must be in [0, 1], got " +
                                        std::to_string(value));
        }
    }

    double value() const noexcept { return value_; }

private:
    double value_;
};

inline DenseMatrix pauli_identity() { return DenseMatrix::identity(2); }

/// The Pauli matrices, indexed 1..3.
inline DenseMatrix pauli_sigma(int i) {
    DenseMatrix m(2);
    switch (i) {
        case 1:
            m(0, 1) = 1.0;
            m(1, 0) = 1.0;
            break;
        case 2:
            m(0, 1) = Complex{0.0, -1.0};
            m(1, 0) = Complex{0.0, 1.0};
            break;
        case 3:
            m(0, 0) = 1.0;
            m(1, 1) = -1.0;
            break;
        default:
            throw std::invalid_argument("pauli_sigma: index must be 1, 2 or 3, got " +
                                        std::to_string(i));
    }
    return m;
}

/// Rank-1 spin projector (I +/- sigma_i)/2, labelled by a signed axis in
/// {+-1, +-2, +-3}. The sign selects the eigenvector branch.
inline DenseMatrix projector(int axis) {
    if (axis == 0 || axis < -3 || axis > 3) {
        throw std::invalid_argument("projector: axis label must be in {+-1, +-2, +-3}, got " +
                                    std::to_string(axis));
    }
    const double sign = axis > 0 ? 1.0 : -1.0;
    DenseMatrix m = pauli_sigma(axis > 0 ? axis : -axis);
    m *= Complex{0.5 * sign, 0.0};
    return m += Complex{0.5, 0.0} * pauli_identity();
}

/// Maximally mixed state: identity normalized by the total dimension.
inline DenseMatrix build_noise(const SystemShape& shape) {
    DenseMatrix m = DenseMatrix::identity(shape.total_dim());
    m *= Complex{1.0 / static_cast<double>(shape.total_dim()), 0.0};
    return m;
}

/// GHZ-type projector: (1/n) sum_{a,b} |a...a><b...b|. Rank 1, trace 1.
inline DenseMatrix build_ghz(const SystemShape& shape) {
    const int n = shape.local_dim();
    DenseMatrix m(shape.total_dim());
    const Complex amp{1.0 / static_cast<double>(n), 0.0};
    for (int a = 0; a < n; ++a) {
        const std::size_t ra = flat_index(shape, MultiIndex(shape.subsystems(), a));
        for (int b = 0; b < n; ++b) {
            const std::size_t cb = flat_index(shape, MultiIndex(shape.subsystems(), b));
            m(ra, cb) = amp;
        }
    }
    return m;
}

/// The noisy GHZ mixture (1-eps) * noise + eps * ghz.
inline DenseMatrix build_werner(const SystemShape& shape, MixingParameter eps) {
    const double e = eps.value();
    DenseMatrix noise = build_noise(shape);
    noise *= Complex{1.0 - e, 0.0};
    DenseMatrix ghz = build_ghz(shape);
    ghz *= Complex{e, 0.0};
    return noise += ghz;
}

/// Same state built through its Pauli expansion (qubits only):
///   (1/2^d) { (1-eps) I^(x d) + (eps/2) [ (I+s3)^(x d) + (I-s3)^(x d)
///                                        + (s1+i s2)^(x d) + (s1-i s2)^(x d) ] }
/// Kept as an independent construction route for cross-checking build_werner.
inline DenseMatrix build_werner_pauli(const SystemShape& shape, MixingParameter eps) {
    if (shape.local_dim() != 2) {
        throw std::invalid_argument("build_werner_pauli: requires local dimension 2, got " +
                                    std::to_string(shape.local_dim()));
    }
    const int d = shape.subsystems();
    const double e = eps.value();

    const DenseMatrix id = pauli_identity();
    const DenseMatrix s1 = pauli_sigma(1);
    const DenseMatrix s2 = pauli_sigma(2);
    const DenseMatrix s3 = pauli_sigma(3);

    DenseMatrix raising = s1;
    raising += Complex{0.0, 1.0} * s2;
    DenseMatrix lowering = s1;
    lowering += Complex{0.0, -1.0} * s2;

    DenseMatrix entangled = kron_power(id + s3, d, shape.dim_cap());
    entangled += kron_power(id - s3, d, shape.dim_cap());
    entangled += kron_power(raising, d, shape.dim_cap());
    entangled += kron_power(lowering, d, shape.dim_cap());
    entangled *= Complex{e / 2.0, 0.0};

    DenseMatrix out = kron_power(id, d, shape.dim_cap());
    out *= Complex{1.0 - e, 0.0};
    out += entangled;
    out *= Complex{1.0 / static_cast<double>(shape.total_dim()), 0.0};
    return out;
}

}  // namespace werner
