#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symblock/cyclotomic.hpp"
#include "symblock/matrix.hpp"
#include "symblock/partition.hpp"

namespace symblock {

/// All p-tuples of partitions with total w, in canonical order: slot-size
/// vector descending lexicographic, then slotwise descending lexicographic.
std::vector<MultiPartition> enumerate_multipartitions(int p, int w);

/// Conjugacy class label of C_p wr S_w with its Gamma flag
/// (Gamma <=> slot 0 empty).
struct WreathClass {
    MultiPartition label;
    bool in_gamma = false;
};

std::vector<WreathClass> wreath_classes(int p, int w);

/// |C_{G_w}(g_mu)| = prod_i p^(l(mu_i)) |C_{S_{|mu_i|}}(s_{mu_i})|.
Int wreath_centralizer_order(const MultiPartition& mu, int p);

/// Exact value of the induced character psi_la at the class g_mu.
Cyclotomic wreath_char_value(const MultiPartition& la, const MultiPartition& mu);

/// Character columns of C_p wr S_w at the Gamma classes (all classes when
/// built with all_columns). Row order is enumerate_multipartitions(p, w).
struct XMatrix {
    int p = 0;
    int w = 0;
    std::vector<MultiPartition> row_labels;
    std::vector<MultiPartition> col_labels;
    CycloMatrix values;
    std::vector<Int> col_norms;  // centralizer orders
    bool all_columns = false;

    std::optional<std::size_t> row_index(const MultiPartition& la) const;
};

struct XOptions {
    std::string cache_dir;    // empty: no disk cache
    int jobs = 1;             // used for the orthogonality verification
    bool all_columns = false; // widen to every class (row-orthogonality tests)
};

/// Builds (or loads) X for (p, w) and verifies the second orthogonality
/// relation X^t conj(X) = diag(centralizer orders) exactly before
/// returning. A corrupt cache file is discarded and recomputed.
XMatrix x_matrix(int p, int w, const XOptions& options = {});

/// Cache file name used under XOptions::cache_dir.
std::string x_cache_file_name(int p, int w, bool all_columns);

}  // namespace symblock
