#pragma once

#include <string>
#include <utility>
#include <vector>

#include "symblock/block.hpp"
#include "symblock/matrix.hpp"
#include "symblock/partition.hpp"

namespace symblock {

/// Decomposition matrix of a block: rows Irr(B) and columns the p-regular
/// labels, both in descending lexicographic (dominance refining) order.
struct DecompositionMatrix {
    Block block;
    std::vector<Partition> row_labels;
    std::vector<Partition> col_labels;
    Matrix<int> entries;  // 0/1 in the supported regime

    /// Text rendering with '.' for zero, one row per line.
    std::string dot_format() const;
};

/// Signed coefficients of the Jantzen layer sum of the Specht module
/// labelled la, expressed against Specht classes strictly above la in
/// dominance order. Every term automatically lies in the block of la.
std::vector<std::pair<Partition, long>> schaper_coefficients(const Partition& la, int p);

/// The Jantzen-Schaper bound matrix for rows whose more dominant rows are
/// already resolved in `partial` (a prefix of the rows, in order).
/// J(la, mu) = sum over resolved nu of coeff(la, nu) * d(nu, mu);
/// d(la, mu) != 0 <=> J(la, mu) != 0, and d <= J.
RationalMatrix js_bound_matrix(const Block& block, const DecompositionMatrix& partial);

/// Resolves the decomposition matrix recursively in the 0/1 regime
/// (w <= 3, p odd, and p >= 5 when w = 3; w = 0 is trivial for every p).
/// Checks unitriangularity, the 0/1 property and the column count.
DecompositionMatrix decomposition_matrix_unverified(const Block& block);

/// Same, then verifies Q (Q^t Q)^-1 Q^t == M exactly against the
/// character-theoretic route. This is the binding correctness oracle;
/// a mismatch is a ConsistencyError naming the block.
DecompositionMatrix decomposition_matrix(const Block& block, const WeightContext& ctx);
DecompositionMatrix decomposition_matrix(const Block& block, const XOptions& options = {});

/// Canonical serialization of the sorted row-sum and column-sum multisets.
std::string row_col_sum_key(const Matrix<int>& q);

}  // namespace symblock
