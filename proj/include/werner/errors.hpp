#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace werner {

/// Requested dense dimension exceeds the configured capacity cap.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// The eigensolver failed to meet its convergence or residual contract.
class SolverError : public std::runtime_error {
public:
    explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

/// A separability certificate failed validation. Carries the index of the
/// offending term, or -1 when the failure is global (e.g. assembly mismatch).
class CertificateError : public std::runtime_error {
public:
    CertificateError(const std::string& what, std::ptrdiff_t term_index = -1)
        : std::runtime_error(what), term_index_(term_index) {}

    std::ptrdiff_t term_index() const noexcept { return term_index_; }

private:
    std::ptrdiff_t term_index_;
};

}  // namespace werner
