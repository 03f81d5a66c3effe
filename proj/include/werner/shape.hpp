#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "werner/errors.hpp"

namespace werner {

/// Default cap on the total dense dimension n^d. 4096 keeps a complex
/// double matrix at ~256 MiB worst case.
inline constexpr std::size_t kDefaultDimCap = 4096;

/// A tensor-product space: `subsystems` factors of dimension `local_dim` each.
class SystemShape {
public:
    SystemShape(int local_dim, int subsystems, std::size_t dim_cap = kDefaultDimCap)
        : local_dim_(local_dim), subsystems_(subsystems), dim_cap_(dim_cap) {
        if (local_dim < 2) {
            throw std::invalid_argument("SystemShape: local dimension must be >= 2, got " +
                                        std::to_string(local_dim));
        }
        if (subsystems < 2) {
            throw std::invalid_argument("SystemShape: subsystem count must be >= 2, got " +
                                        std::to_string(subsystems));
        }
        std::size_t total = 1;
        for (int k = 0; k < subsystems; ++k) {
            if (total > dim_cap / static_cast<std::size_t>(local_dim)) {
                throw CapacityError("SystemShape: total dimension " + std::to_string(local_dim) +
                                    "^" + std::to_string(subsystems) + " exceeds cap " +
                                    std::to_string(dim_cap));
            }
            total *= static_cast<std::size_t>(local_dim);
        }
        total_dim_ = total;
    }

    int local_dim() const noexcept { return local_dim_; }
    int subsystems() const noexcept { return subsystems_; }
    std::size_t total_dim() const noexcept { return total_dim_; }
    std::size_t dim_cap() const noexcept { return dim_cap_; }

private:
    int local_dim_;
    int subsystems_;
    std::size_t dim_cap_;
    std::size_t total_dim_;
};

/// Per-subsystem digits of a basis index, 0-based, one digit per subsystem.
using MultiIndex = std::vector<int>;

/// Big-endian positional encoding: the first digit is the most significant.
inline std::size_t flat_index(const SystemShape& shape, const MultiIndex& digits) {
    if (digits.size() != static_cast<std::size_t>(shape.subsystems())) {
        throw std::invalid_argument("flat_index: expected " + std::to_string(shape.subsystems()) +
                                    " digits, got " + std::to_string(digits.size()));
    }
    std::size_t flat = 0;
    for (int digit : digits) {
        if (digit < 0 || digit >= shape.local_dim()) {
            throw std::invalid_argument("flat_index: digit " + std::to_string(digit) +
                                        " out of range [0, " +
                                        std::to_string(shape.local_dim()) + ")");
        }
        flat = flat * static_cast<std::size_t>(shape.local_dim()) + static_cast<std::size_t>(digit);
    }
    return flat;
}

inline MultiIndex multi_index(const SystemShape& shape, std::size_t flat) {
    if (flat >= shape.total_dim()) {
        throw std::invalid_argument("multi_index: flat index " + std::to_string(flat) +
                                    " out of range [0, " + std::to_string(shape.total_dim()) + ")");
    }
    MultiIndex digits(static_cast<std::size_t>(shape.subsystems()));
    const auto n = static_cast<std::size_t>(shape.local_dim());
    for (int k = shape.subsystems() - 1; k >= 0; --k) {
        digits[static_cast<std::size_t>(k)] = static_cast<int>(flat % n);
        flat /= n;
    }
    return digits;
}

/// A nonempty proper subset of the subsystems, stored as sorted 0-based
/// positions. Designates the half-system whose indices get transposed.
class BipartitionMask {
public:
    BipartitionMask(std::vector<int> members, int subsystems) : subsystems_(subsystems) {
        if (subsystems < 2) {
            throw std::invalid_argument("BipartitionMask: subsystem count must be >= 2");
        }
        if (members.empty()) {
            throw std::invalid_argument("BipartitionMask: mask must be nonempty");
        }
        std::sort(members.begin(), members.end());
        if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
            throw std::invalid_argument("BipartitionMask: duplicate subsystem position");
        }
        if (members.front() < 0 || members.back() >= subsystems) {
            throw std::invalid_argument("BipartitionMask: position out of range [0, " +
                                        std::to_string(subsystems) + ")");
        }
        if (members.size() == static_cast<std::size_t>(subsystems)) {
            throw std::invalid_argument(
                "BipartitionMask: full mask is not a bipartition (use a full transpose instead)");
        }
        members_ = std::move(members);
    }

    /// The canonical mask {0, 1, ..., size-1}.
    static BipartitionMask leading(int size, int subsystems) {
        std::vector<int> members(static_cast<std::size_t>(size));
        for (int k = 0; k < size; ++k) members[static_cast<std::size_t>(k)] = k;
        return BipartitionMask(std::move(members), subsystems);
    }

    const std::vector<int>& members() const noexcept { return members_; }
    int subsystems() const noexcept { return subsystems_; }
    std::size_t size() const noexcept { return members_.size(); }

    bool contains(int position) const {
        return std::binary_search(members_.begin(), members_.end(), position);
    }

private:
    std::vector<int> members_;
    int subsystems_;
};

}  // namespace werner
