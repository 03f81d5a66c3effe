#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "werner/matrix.hpp"
#include "werner/shape.hpp"

namespace werner {

/// Transpose only the index positions named by `mask`: the output entry at
/// (row r, column c) is the input entry at (r', c'), where r' and c' swap the
/// digits of r and c on the masked positions and keep the rest. A pure entry
/// permutation, so trace and Hermiticity are preserved exactly.
inline DenseMatrix partial_transpose(const DenseMatrix& rho, const SystemShape& shape,
                                     const BipartitionMask& mask) {
    if (rho.dim() != shape.total_dim()) {
        throw std::invalid_argument("partial_transpose: matrix dimension " +
                                    std::to_string(rho.dim()) + " does not match shape dimension " +
                                    std::to_string(shape.total_dim()));
    }
    if (mask.subsystems() != shape.subsystems()) {
        throw std::invalid_argument("partial_transpose: mask is for " +
                                    std::to_string(mask.subsystems()) + " subsystems, shape has " +
                                    std::to_string(shape.subsystems()));
    }

    const std::size_t dim = shape.total_dim();
    const int d = shape.subsystems();

    // Split each flat index into its masked and unmasked positional parts, so
    // that r' = unmasked(r) + masked(c) needs no digit work in the main loop.
    std::vector<std::size_t> place(static_cast<std::size_t>(d));
    std::size_t p = 1;
    for (int k = d - 1; k >= 0; --k) {
        place[static_cast<std::size_t>(k)] = p;
        p *= static_cast<std::size_t>(shape.local_dim());
    }
    std::vector<std::size_t> masked_part(dim, 0);
    std::vector<std::size_t> unmasked_part(dim, 0);
    for (std::size_t f = 0; f < dim; ++f) {
        const MultiIndex digits = multi_index(shape, f);
        for (int k = 0; k < d; ++k) {
            const std::size_t contrib =
                static_cast<std::size_t>(digits[static_cast<std::size_t>(k)]) *
                place[static_cast<std::size_t>(k)];
            if (mask.contains(k)) {
                masked_part[f] += contrib;
            } else {
                unmasked_part[f] += contrib;
            }
        }
    }

    DenseMatrix out(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            const std::size_t src_row = unmasked_part[r] + masked_part[c];
            const std::size_t src_col = unmasked_part[c] + masked_part[r];
            out(r, c) = rho(src_row, src_col);
        }
    }
    return out;
}

}  // namespace werner
