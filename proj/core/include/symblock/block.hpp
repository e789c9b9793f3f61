#pragma once

#include <string>
#include <vector>

#include "symblock/linalg.hpp"
#include "symblock/matrix.hpp"
#include "symblock/partition.hpp"
#include "symblock/wreath.hpp"

namespace symblock {

/// A p-block of a symmetric group, identified by prime, weight and core.
struct Block {
    int p = 0;
    int w = 0;
    Partition core;
    int n = 0;  // |core| + p*w

    std::string to_string() const;
};

/// Validates that core is a p-core and assembles the block.
Block make_block(int p, int w, Partition core);

/// One ordinary irreducible character of the block.
struct CharacterRecord {
    Partition la;
    MultiPartition quotient;
    int sign = 1;          // delta_p(la)
    long degree_val = 0;   // v_p(chi_la(1))
    int height = 0;
};

/// Irr(B) in the canonical quotient order (the row order of x_matrix):
/// record i has quotient enumerate_multipartitions(p, w)[i]. Heights and
/// the per-character degree identity against the wreath product are
/// verified during construction.
struct BlockCharacters {
    Block block;
    long a = 0;      // v_p(n!)
    int defect = 0;  // d
    std::vector<CharacterRecord> records;
};

BlockCharacters irr_block(const Block& block);

struct HeightData {
    long a = 0;
    int defect = 0;
    std::vector<int> heights;  // canonical record order
};

HeightData heights_defect(const Block& block);

/// Character columns and the block-independent projection for one (p, w);
/// built once and shared by every block of that weight.
struct WeightContext {
    XMatrix x;
    RationalMatrix projection;  // conj(X) diag(norms)^-1 X^t, checked idempotent
};

WeightContext make_weight_context(int p, int w, const XOptions& options = {});

struct MoritaInvariant {
    Block block;
    std::vector<CharacterRecord> records;
    RationalMatrix m;  // [chi, psi]^0 over Irr(B) x Irr(B)
};

/// M = D * projection * D with D = diag(delta_p(la)).
MoritaInvariant m_matrix(const Block& block, const WeightContext& ctx);
MoritaInvariant m_matrix(const Block& block, const XOptions& options = {});

/// Direct definition of the p-scalar products: sum over p-regular cycle
/// types of chi(g) psi(g) / |C(g)|. Rows/columns in the canonical record
/// order. Refuses n above the cap.
RationalMatrix p_scalar_oracle(const Block& block, int n_cap = 12);

/// Throws ConsistencyError unless the p-adic valuations of M encode the
/// character heights the way block theory dictates.
void verify_height_encoding(const MoritaInvariant& mi, int defect);

/// Height-zero half-set Delta and the restricted matrix M0 (p = 2 only).
struct DeltaM0 {
    Block block;
    std::vector<std::size_t> delta_rows;        // indices into the canonical order
    std::vector<CharacterRecord> delta_records;
    RationalMatrix m0;
};

DeltaM0 delta_m0(const Block& block, const XMatrix& x);
DeltaM0 delta_m0(const Block& block, const XOptions& options = {});

/// The hook-quotient characters of a 2-power-weight 2-block with staircase
/// core (k, k-1, ..., 1): the partition whose 2-quotient is
/// ((r, 1^(w-r)), ()) together with its 2-sign, built by closed formula
/// and cross-checked against core_quotient_sign.
struct HookLambda {
    Partition la;
    int sign = 1;
};

HookLambda hook_lambda_2power(int k, int w, int r);

/// Integer eigenvalues of the smallest 2-power multiple of M0 that is
/// integral.
struct EigenM0 {
    Block block;
    Int scale;
    std::vector<Int> roots;     // descending, with multiplicity
    std::vector<Int> residual;  // leftover char-poly factor, empty if split
};

EigenM0 eigen_m0(const Block& block, const XMatrix& x);
EigenM0 eigen_m0(const Block& block, const XOptions& options = {});

/// Enumerates the p-blocks of S_n (one per p-core of n - p*w).
std::vector<Block> blocks_of_symmetric_group(int n, int p);

}  // namespace symblock
