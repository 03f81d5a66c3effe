#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "werner/rational.hpp"

namespace werner {
namespace bounds {

namespace detail {
inline void require_params(int n, int d, const char* where) {
    if (n < 2 || d < 2) {
        throw std::invalid_argument(std::string(where) + ": requires n >= 2 and d >= 2, got n=" +
                                    std::to_string(n) + " d=" + std::to_string(d));
    }
}
}  // namespace detail

/// Entanglement threshold from the partial-transposition criterion:
/// the mixture is entangled for eps > 1/(n^(d-1) + 1). Exact for qubits
/// and for two subsystems; an upper bound on the separable region otherwise.
inline Rational ppt_bound(int n, int d) {
    detail::require_params(n, d, "ppt_bound");
    return Rational(1, pow_int(n, d - 1) + 1);
}

/// Random-robustness bound 1/(1 + n/2)^(d-1), valid for arbitrary states.
inline Rational vidal_tarrach_bound(int n, int d) {
    detail::require_params(n, d, "vidal_tarrach_bound");
    return Rational(pow_int(2, d - 1), pow_int(n + 2, d - 1));
}

/// Separable-neighbourhood lower bound for d qubits. Known exact values for
/// d <= 3 and quoted values for d = 4, 5; the closed form applies from d = 6.
inline Rational schack_caves_bound(int d) {
    if (d < 2) {
        throw std::invalid_argument("schack_caves_bound: requires d >= 2, got " +
                                    std::to_string(d));
    }
    switch (d) {
        case 2: return Rational(1, 3);
        case 3: return Rational(1, 5);
        case 4: return Rational(1, 33);
        case 5: return Rational(1, 243);
        default: break;
    }
    const BigInt large = pow_int(2, 2 * d - 2);
    const BigInt mid = pow_int(2, d);
    return d % 2 == 0 ? Rational(1, 1 + mid + large) : Rational(1, 1 - mid + large);
}

/// Exact separability boundary for d qubits: 1/(1 + 2^(d-1)).
inline Rational qubit_exact_bound(int d) {
    if (d < 2) {
        throw std::invalid_argument("qubit_exact_bound: requires d >= 2, got " +
                                    std::to_string(d));
    }
    return Rational(1, pow_int(2, d - 1) + 1);
}

/// Exact separability boundary for two subsystems of local dimension n:
/// 1/(1 + n). Coincides with ppt_bound at d = 2.
inline Rational two_subsystem_exact(int n) {
    if (n < 2) {
        throw std::invalid_argument("two_subsystem_exact: requires n >= 2, got " +
                                    std::to_string(n));
    }
    return Rational(1, n + 1);
}

/// Bound on the random robustness of the GHZ-type state relative to noise:
/// R <= n^(d-1), equivalent to the ppt_bound via eps_c = 1/(1 + R).
inline Rational random_robustness_bound(int n, int d) {
    detail::require_params(n, d, "random_robustness_bound");
    return Rational(pow_int(n, d - 1), 1);
}

struct BoundsReport {
    Rational ppt_bound;
    Rational vidal_tarrach;
    std::optional<Rational> schack_caves;         // qubits only
    std::optional<Rational> qubit_exact;          // qubits only
    std::optional<Rational> two_subsystem_exact;  // d = 2 only
    Rational random_robustness;
};

/// Evaluate every applicable bound for one (n, d) and sanity-check the
/// orderings the catalog guarantees.
inline BoundsReport compare_bounds(int n, int d) {
    detail::require_params(n, d, "compare_bounds");
    BoundsReport report{
        ppt_bound(n, d),
        vidal_tarrach_bound(n, d),
        std::nullopt,
        std::nullopt,
        std::nullopt,
        random_robustness_bound(n, d),
    };
    if (n == 2) {
        report.schack_caves = schack_caves_bound(d);
        report.qubit_exact = qubit_exact_bound(d);
    }
    if (d == 2) {
        report.two_subsystem_exact = bounds::two_subsystem_exact(n);
    }

    if (!(report.ppt_bound < report.vidal_tarrach)) {
        throw std::logic_error("compare_bounds: expected ppt bound below the random-robustness "
                               "bound");
    }
    if (n == 2 && !(*report.schack_caves <= *report.qubit_exact &&
                    *report.qubit_exact == report.ppt_bound)) {
        throw std::logic_error("compare_bounds: qubit bound ordering violated");
    }
    return report;
}

}  // namespace bounds
}  // namespace werner
