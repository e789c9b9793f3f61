#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symblock/matrix.hpp"

namespace symblock {

enum class EquivMode {
    Rectangular,  // independent row and column permutations: P A Q = B
    Similarity,   // one permutation on both sides: T A = B T, A and B symmetric
};

/// Certificate: row i / column j of A lands on row_perm[i] / col_perm[j]
/// of B. In similarity mode the two permutations coincide.
struct EquivWitness {
    std::vector<std::size_t> row_perm;
    std::vector<std::size_t> col_perm;
};

/// Canonical string invariant of the mode's group action: dimensions,
/// sorted row content multisets, sorted column content multisets, and the
/// sorted diagonal in similarity mode. Equivalent matrices get equal keys.
std::string invariant_key(const RationalMatrix& a, EquivMode mode);

/// Complete search for (P, Q) with P A Q = B. No false negatives.
std::optional<EquivWitness> transforming_permutations(const RationalMatrix& a,
                                                      const RationalMatrix& b);

/// Complete search for one T with T A = B T (A, B symmetric).
std::optional<EquivWitness> permutation_similarity(const RationalMatrix& a,
                                                   const RationalMatrix& b);

/// Partition of the matrix list into equivalence classes under the mode.
/// Classes are listed by smallest member index; members ascending. Pair
/// checks within a key bucket run in parallel; the result does not depend
/// on the schedule.
std::vector<std::vector<std::size_t>> classify(const std::vector<RationalMatrix>& mats,
                                               EquivMode mode, int jobs = 1);

}  // namespace symblock
