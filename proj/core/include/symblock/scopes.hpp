#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "symblock/numeric.hpp"
#include "symblock/partition.hpp"

namespace symblock {

/// Bead counts per runner of a p-core on the abacus (t = sum of counts,
/// t ≡ 0 mod p). Scopes moves are swaps of cyclically adjacent counts.
struct AbacusCounts {
    int p = 0;
    std::vector<int> counts;

    int beads() const;
    long core_size() const;
};

AbacusCounts counts_from_core(const Partition& core, int p);
Partition core_from_counts(const AbacusCounts& counts);

/// True when no downward Scopes move of the given weight applies.
bool is_reduced_core(const Partition& core, int p, int w);

/// Applies downward Scopes moves (adjacent-runner swaps with bead surplus
/// >= w, including the wrap-around pair) until none applies.
Partition reduce_core(const Partition& core, int p, int w);

/// Same fixed point reached through randomly ordered moves; used to
/// validate confluence of the move system.
Partition reduce_core_randomized(const Partition& core, int p, int w, std::uint64_t seed);

struct ScopesClass {
    Partition representative;
    int p = 0;
    int w = 0;
    /// Index of the conjugate partner inside the representative list
    /// (equal to the own index for self-paired classes). Filled by
    /// conjugation_pairing.
    std::size_t partner = 0;
};

/// All Scopes class representatives for (p, w), ordered by size then
/// descending lexicographic. The result size is checked against
/// binom(wp, p-1)/p. Throws CapExceededError-style enumeration-incomplete
/// when a representative exceeds size_cap (default p^2 w^2).
std::vector<ScopesClass> enumerate_representatives(int p, int w, long size_cap = 0);

struct ConjugationPairing {
    /// Unordered pairs/singletons of representative indices (a <= b).
    std::vector<std::pair<std::size_t, std::size_t>> groups;
    long upper_bound = 0;  // = groups.size(), checked against the closed form
};

/// Pairs each representative with the reduction of its conjugate and
/// checks the resulting count against
/// binom(wp, p-1)/(2p) + binom(floor(wp/2), floor(p/2))/2.
ConjugationPairing conjugation_pairing(std::vector<ScopesClass>& reps, int p, int w);

/// Number of Scopes classes, binom(wp, p-1)/p (w >= 1).
Int scopes_class_count(int p, int w);

/// The closed-form upper bound on the number of Morita equivalence
/// classes of weight-w blocks.
Int morita_upper_bound(int p, int w);

}  // namespace symblock
