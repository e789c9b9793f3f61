#include "symblock/decomp.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "symblock/linalg.hpp"

namespace symblock {

std::string DecompositionMatrix::dot_format() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < entries.rows(); ++i) {
        for (std::size_t j = 0; j < entries.cols(); ++j) {
            if (j) os << ' ';
            if (entries(i, j) == 0)
                os << '.';
            else
                os << entries(i, j);
        }
        os << '\n';
    }
    return os.str();
}

namespace {

struct LexAfter {
    bool operator()(const Partition& a, const Partition& b) const { return a.lex_after(b); }
};

long valuation_long(long m, int p) {
    long v = 0;
    while (m % p == 0) {
        m /= p;
        ++v;
    }
    return v;
}

}  // namespace

std::vector<std::pair<Partition, long>> schaper_coefficients(const Partition& la, int p) {
    // Work on the conjugate side: first-column positions beta_i = kappa_i + t-1-i
    // with a full complement of t = n beads, so every label of n appears.
    // An affine exchange replaces the pair (beta_a, beta_b) by
    // (beta_b + m, beta_a - m) with 0 < m < beta_a - beta_b and p | m,
    // weighted by v_p(m), signed by the sorting parity. Conjugating back
    // turns the resulting labels into partitions strictly dominating la.
    const Partition kappa = conjugate(la);
    const int t = la.size();
    std::vector<long> beta(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) beta[static_cast<std::size_t>(i)] = kappa.part(i) + t - 1 - i;

    std::vector<char> occupied;
    if (t > 0) occupied.assign(static_cast<std::size_t>(beta[0]) + 1, 0);
    for (long x : beta) occupied[static_cast<std::size_t>(x)] = 1;

    std::map<Partition, long, LexAfter> acc;
    for (int a = 0; a < t; ++a) {
        for (int b = a + 1; b < t; ++b) {
            const long g = beta[static_cast<std::size_t>(a)] - beta[static_cast<std::size_t>(b)];
            for (long m = p; m < g; m += p) {
                // Both new values land strictly between the old pair.
                const long va = beta[static_cast<std::size_t>(b)] + m;  // new value in slot a
                const long vb = beta[static_cast<std::size_t>(a)] - m;  // new value in slot b
                if (va == vb) continue;
                if (occupied[static_cast<std::size_t>(va)] || occupied[static_cast<std::size_t>(vb)])
                    continue;
                // Sorting parity: both new values lie strictly between the
                // old pair, so only indices in (a, b) and the pair itself
                // can invert.
                int inversions = (va < vb) ? 1 : 0;
                for (int c = a + 1; c < b; ++c) {
                    const long e = beta[static_cast<std::size_t>(c)];
                    if (e > va) ++inversions;  // slot a now carries va
                    if (e < vb) ++inversions;  // slot b now carries vb
                }
                std::vector<long> nb = beta;
                nb[static_cast<std::size_t>(a)] = va;
                nb[static_cast<std::size_t>(b)] = vb;
                std::sort(nb.begin(), nb.end(), std::greater<long>());
                std::vector<int> parts;
                for (int i = 0; i < t; ++i) {
                    const long part = nb[static_cast<std::size_t>(i)] - (t - 1 - i);
                    if (part > 0) parts.push_back(static_cast<int>(part));
                }
                const Partition nu = conjugate(Partition{std::move(parts)});
                const long term = (inversions % 2 == 0 ? 1 : -1) * valuation_long(m, p);
                acc[nu] += term;
            }
        }
    }

    std::vector<std::pair<Partition, long>> out;
    for (auto& [nu, coeff] : acc) {
        if (coeff == 0) continue;
        if (!dominates(nu, la) || nu == la)
            throw ConsistencyError("schaper_coefficients: term not strictly above " +
                                   la.to_string() + ": " + nu.to_string());
        out.emplace_back(nu, coeff);
    }
    return out;
}

namespace {

void check_regime(const Block& block) {
    if (block.w == 0) return;  // single character, trivial matrix
    if (block.p == 2 || block.w > 3 || (block.w == 3 && block.p < 5))
        throw UnsupportedRegimeError(
            "decomposition matrices are only computed in the 0/1 regime "
            "(w <= 2 with p odd, or w = 3 with p >= 5); got " + block.to_string());
}

struct Resolution {
    std::vector<Partition> rows;
    std::vector<Partition> cols;
    std::vector<std::size_t> col_of_row;  // row index -> column index or npos
    Matrix<int> d;
    RationalMatrix j;
};

Resolution resolve(const Block& block) {
    const BlockCharacters bc = irr_block(block);
    Resolution r;
    r.rows.reserve(bc.records.size());
    for (const auto& rec : bc.records) r.rows.push_back(rec.la);
    std::sort(r.rows.begin(), r.rows.end(), [](const Partition& x, const Partition& y) {
        return x.lex_after(y);
    });

    constexpr std::size_t npos = static_cast<std::size_t>(-1);
    r.col_of_row.assign(r.rows.size(), npos);
    for (std::size_t i = 0; i < r.rows.size(); ++i)
        if (is_p_regular(r.rows[i], block.p)) {
            r.col_of_row[i] = r.cols.size();
            r.cols.push_back(r.rows[i]);
        }

    std::map<Partition, std::size_t, LexAfter> row_index;
    for (std::size_t i = 0; i < r.rows.size(); ++i) row_index.emplace(r.rows[i], i);

    r.d = Matrix<int>(r.rows.size(), r.cols.size());
    r.j = RationalMatrix(r.rows.size(), r.cols.size());
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        const auto coeffs = schaper_coefficients(r.rows[i], block.p);
        for (std::size_t c = 0; c < r.cols.size(); ++c) {
            long jval = 0;
            for (const auto& [nu, coeff] : coeffs) {
                const auto it = row_index.find(nu);
                if (it == row_index.end())
                    throw ConsistencyError("decomposition: coefficient outside the block at " +
                                           nu.to_string());
                if (it->second >= i)
                    throw ConsistencyError("decomposition: unresolved dependency at " +
                                           nu.to_string());
                jval += coeff * r.d(it->second, c);
            }
            if (jval < 0)
                throw ConsistencyError("decomposition: negative bound at row " +
                                       r.rows[i].to_string() + ", column " +
                                       r.cols[c].to_string() + " in " + block.to_string());
            r.j(i, c) = Rat(jval);
            r.d(i, c) = jval > 0 ? 1 : 0;
        }
        if (r.col_of_row[i] != npos) {
            if (r.d(i, r.col_of_row[i]) != 0)
                throw ConsistencyError("decomposition: diagonal already set at " +
                                       r.rows[i].to_string());
            r.d(i, r.col_of_row[i]) = 1;
        }
    }

    // Unitriangularity against the dominance order.
    for (std::size_t i = 0; i < r.rows.size(); ++i)
        for (std::size_t c = 0; c < r.cols.size(); ++c) {
            if (r.d(i, c) == 0) continue;
            if (!dominates(r.cols[c], r.rows[i]))
                throw ConsistencyError("decomposition: entry below the dominance staircase at " +
                                       r.rows[i].to_string() + " / " + r.cols[c].to_string());
        }

    // Column count must be the number of Gamma classes of the weight.
    std::size_t gamma = 0;
    for (const auto& mp : enumerate_multipartitions(block.p, block.w))
        if (mp.slot(0).empty()) ++gamma;
    if (r.cols.size() != gamma)
        throw ConsistencyError("decomposition: column count != |Gamma| in " + block.to_string());

    return r;
}

}  // namespace

RationalMatrix js_bound_matrix(const Block& block, const DecompositionMatrix& partial) {
    check_regime(block);
    std::map<Partition, std::size_t, LexAfter> row_index;
    for (std::size_t i = 0; i < partial.row_labels.size(); ++i)
        row_index.emplace(partial.row_labels[i], i);

    RationalMatrix j(partial.row_labels.size(), partial.col_labels.size());
    for (std::size_t i = 0; i < partial.row_labels.size(); ++i) {
        const auto coeffs = schaper_coefficients(partial.row_labels[i], block.p);
        for (std::size_t c = 0; c < partial.col_labels.size(); ++c) {
            long jval = 0;
            for (const auto& [nu, coeff] : coeffs) {
                const auto it = row_index.find(nu);
                if (it == row_index.end())
                    throw ConsistencyError("js_bound_matrix: needs resolved row " + nu.to_string());
                jval += coeff * partial.entries(it->second, c);
            }
            j(i, c) = Rat(jval);
        }
    }
    return j;
}

DecompositionMatrix decomposition_matrix_unverified(const Block& block) {
    check_regime(block);
    Resolution r = resolve(block);
    DecompositionMatrix out;
    out.block = block;
    out.row_labels = std::move(r.rows);
    out.col_labels = std::move(r.cols);
    out.entries = std::move(r.d);
    return out;
}

DecompositionMatrix decomposition_matrix(const Block& block, const WeightContext& ctx) {
    DecompositionMatrix q = decomposition_matrix_unverified(block);

    // The two routes to M must agree exactly: Q (Q^t Q)^-1 Q^t computed from
    // the resolved matrix, and the character-theoretic projection.
    const MoritaInvariant mi = m_matrix(block, ctx);
    const std::size_t k = q.row_labels.size();
    RationalMatrix qr(k, q.col_labels.size());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < q.col_labels.size(); ++j) qr(i, j) = q.entries(i, j);
    const RationalMatrix cartan = qr.transposed() * qr;
    const RationalMatrix left = qr * inverse(cartan) * qr.transposed();

    std::vector<std::size_t> to_m(k);
    for (std::size_t i = 0; i < k; ++i) {
        bool found = false;
        for (std::size_t r = 0; r < mi.records.size(); ++r)
            if (mi.records[r].la == q.row_labels[i]) {
                to_m[i] = r;
                found = true;
                break;
            }
        if (!found)
            throw ConsistencyError("decomposition_matrix: row label missing from Irr(B)");
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (left(i, j) != mi.m(to_m[i], to_m[j]))
                throw ConsistencyError(
                    "decomposition_matrix: Cartan route disagrees with character route in " +
                    block.to_string());
    return q;
}

DecompositionMatrix decomposition_matrix(const Block& block, const XOptions& options) {
    return decomposition_matrix(block, make_weight_context(block.p, block.w, options));
}

std::string row_col_sum_key(const Matrix<int>& q) {
    std::vector<long> row_sums(q.rows(), 0), col_sums(q.cols(), 0);
    for (std::size_t i = 0; i < q.rows(); ++i)
        for (std::size_t j = 0; j < q.cols(); ++j) {
            row_sums[i] += q(i, j);
            col_sums[j] += q(i, j);
        }
    std::sort(row_sums.begin(), row_sums.end());
    std::sort(col_sums.begin(), col_sums.end());
    std::ostringstream os;
    os << "rows[";
    for (std::size_t i = 0; i < row_sums.size(); ++i) os << (i ? "," : "") << row_sums[i];
    os << "]cols[";
    for (std::size_t j = 0; j < col_sums.size(); ++j) os << (j ? "," : "") << col_sums[j];
    os << "]";
    return os.str();
}

}  // namespace symblock
