#pragma once

#include <cstdint>
#include <vector>

#include "keller/core/multipoly.hpp"

namespace keller {

// Sparse integer row: (column, value) pairs with strictly increasing columns.
using SparseRow = std::vector<std::pair<int, Integer>>;

// Exact rank over Q by fraction-free elimination with content removal.
// Optionally reports pivot rows/columns of a nonsingular maximal submatrix.
int exact_rank(std::vector<SparseRow> rows, std::vector<int>* pivot_cols = nullptr);

// Rank modulo p with the row and column indices of a nonsingular maximal
// submatrix (entries already reduced mod p).
int rank_mod(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p, std::vector<int>* rows,
             std::vector<int>* cols);

std::uint64_t det_mod(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p);

// Primes just below 2^62, in decreasing order.
const std::vector<std::uint64_t>& large_primes(std::size_t count);

std::uint64_t mod_of(const Integer& a, std::uint64_t p);

// det(A + t B) as an exact integer polynomial in t (coefficients low to
// high), by evaluation/interpolation modulo large primes and CRT against a
// Hadamard-type coefficient bound.
std::vector<Integer> det_linear_pencil(const std::vector<std::vector<Integer>>& a,
                                       const std::vector<std::vector<Integer>>& b);

}  // namespace keller
