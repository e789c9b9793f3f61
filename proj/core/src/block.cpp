#include "symblock/block.hpp"

#include <algorithm>
#include <sstream>

#include "symblock/symchar.hpp"

namespace symblock {

std::string Block::to_string() const {
    std::ostringstream os;
    os << "B(p=" << p << ",w=" << w << ",core=" << core.to_string() << ",n=" << n << ")";
    return os.str();
}

Block make_block(int p, int w, Partition core) {
    if (p < 2 || w < 0) throw ShapeError("make_block: bad parameters");
    if (!is_p_core(core, p))
        throw InvalidCoreError("make_block: not a p-core: " + core.to_string());
    Block b;
    b.p = p;
    b.w = w;
    b.n = core.size() + p * w;
    b.core = std::move(core);
    return b;
}

namespace {

long multinomial_valuation(int w, const MultiPartition& la, int p) {
    long v = factorial_valuation(w, p);
    for (int i = 0; i < la.slot_count(); ++i)
        v -= factorial_valuation(la.slot(i).size(), p);
    return v;
}

}  // namespace

BlockCharacters irr_block(const Block& block) {
    BlockCharacters out;
    out.block = block;
    out.a = factorial_valuation(block.n, block.p);

    const auto quotients = enumerate_multipartitions(block.p, block.w);
    out.records.reserve(quotients.size());
    long min_val = -1;
    for (const auto& q : quotients) {
        CharacterRecord rec;
        rec.la = from_core_quotient(block.core, q, block.p);
        rec.quotient = q;
        const CoreData cd = core_quotient_sign(rec.la, block.p);
        if (!(cd.core == block.core) || !(cd.quotient == q) || cd.weight != block.w)
            throw ConsistencyError("irr_block: quotient bijection failed for " +
                                   rec.la.to_string());
        rec.sign = cd.sign;
        rec.degree_val = degree_valuation(rec.la, block.p);
        out.records.push_back(std::move(rec));
        if (min_val < 0 || out.records.back().degree_val < min_val)
            min_val = out.records.back().degree_val;
    }
    out.defect = static_cast<int>(out.a - min_val);

    // Heights, plus the degree identity
    // p^w (w!)_p chi(1)_p = (n!)_p psi(1)_p for every record.
    for (auto& rec : out.records) {
        rec.height = static_cast<int>(rec.degree_val - (out.a - out.defect));
        if (rec.height < 0)
            throw ConsistencyError("irr_block: negative height for " + rec.la.to_string());
        long psi_val = multinomial_valuation(block.w, rec.quotient, block.p);
        for (int i = 0; i < rec.quotient.slot_count(); ++i)
            psi_val += degree_valuation(rec.quotient.slot(i), block.p);
        const long lhs = block.w + factorial_valuation(block.w, block.p) + rec.degree_val;
        const long rhs = out.a + psi_val;
        if (lhs != rhs)
            throw ConsistencyError("irr_block: height bijection identity failed for " +
                                   rec.la.to_string());
    }
    return out;
}

HeightData heights_defect(const Block& block) {
    const BlockCharacters bc = irr_block(block);
    HeightData out;
    out.a = bc.a;
    out.defect = bc.defect;
    out.heights.reserve(bc.records.size());
    for (const auto& rec : bc.records) out.heights.push_back(rec.height);
    return out;
}

WeightContext make_weight_context(int p, int w, const XOptions& options) {
    WeightContext ctx;
    ctx.x = x_matrix(p, w, options);
    ctx.projection = gram_project(ctx.x.values, ctx.x.col_norms, options.jobs);
    return ctx;
}

MoritaInvariant m_matrix(const Block& block, const WeightContext& ctx) {
    if (ctx.x.p != block.p || ctx.x.w != block.w)
        throw ShapeError("m_matrix: context built for a different (p, w)");
    const BlockCharacters bc = irr_block(block);
    const std::size_t k = bc.records.size();
    if (ctx.projection.rows() != k)
        throw ShapeError("m_matrix: projection size mismatch");

    MoritaInvariant out;
    out.block = block;
    out.records = bc.records;
    out.m = RationalMatrix(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            out.m(i, j) = ctx.projection(i, j);
            if (bc.records[i].sign * bc.records[j].sign < 0) out.m(i, j) = -out.m(i, j);
        }
    return out;
}

MoritaInvariant m_matrix(const Block& block, const XOptions& options) {
    return m_matrix(block, make_weight_context(block.p, block.w, options));
}

RationalMatrix p_scalar_oracle(const Block& block, int n_cap) {
    if (block.n > n_cap)
        throw CapExceededError("p_scalar_oracle: n = " + std::to_string(block.n) +
                               " above cap " + std::to_string(n_cap));
    const BlockCharacters bc = irr_block(block);
    std::vector<Partition> regular_classes;
    for (auto& nu : enumerate_partitions(block.n)) {
        bool ok = true;
        for (int part : nu.parts())
            if (part % block.p == 0) {
                ok = false;
                break;
            }
        if (ok) regular_classes.push_back(std::move(nu));
    }
    std::vector<Rat> inv_orders;
    inv_orders.reserve(regular_classes.size());
    for (const auto& nu : regular_classes) inv_orders.emplace_back(Rat(1) / Rat(centralizer_order_sym(nu)));

    const std::size_t k = bc.records.size();
    std::vector<std::vector<Int>> values(k);
    for (std::size_t i = 0; i < k; ++i) {
        values[i].reserve(regular_classes.size());
        for (const auto& nu : regular_classes) values[i].push_back(mn_value(bc.records[i].la, nu));
    }

    RationalMatrix out(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
            Rat sum = 0;
            for (std::size_t c = 0; c < regular_classes.size(); ++c)
                sum += Rat(values[i][c] * values[j][c]) * inv_orders[c];
            out(i, j) = sum;
            out(j, i) = sum;
        }
    return out;
}

void verify_height_encoding(const MoritaInvariant& mi, int defect) {
    const long p = mi.block.p;
    for (std::size_t i = 0; i < mi.records.size(); ++i) {
        if (mi.records[i].height == 0) {
            for (std::size_t j = 0; j < mi.records.size(); ++j) {
                const Valuation v = p_valuation(mi.m(i, j), p);
                if (v.infinite || v.value != mi.records[j].height - defect)
                    throw ConsistencyError("height encoding violated at row " +
                                           mi.records[i].la.to_string() + ", column " +
                                           mi.records[j].la.to_string());
            }
        } else {
            const Valuation v = p_valuation(mi.m(i, i), p);
            if (!v.infinite && v.value <= -defect)
                throw ConsistencyError("positive-height diagonal valuation violated at " +
                                       mi.records[i].la.to_string());
        }
    }
}

namespace {

long irr0_digit_formula(int w) {
    long exponent = 0;
    for (int bit = 0; bit < 31; ++bit)
        if (w & (1 << bit)) exponent += bit + 1;
    return 1L << exponent;
}

}  // namespace

DeltaM0 delta_m0(const Block& block, const XMatrix& x) {
    if (block.p != 2) throw UnsupportedRegimeError("delta_m0: requires p = 2");
    if (block.w < 1) throw UnsupportedRegimeError("delta_m0: requires w >= 1");
    if (x.p != 2 || x.w != block.w) throw ShapeError("delta_m0: X built for a different (p, w)");

    const BlockCharacters bc = irr_block(block);

    std::vector<std::size_t> irr0;
    for (std::size_t i = 0; i < bc.records.size(); ++i)
        if (bc.records[i].height == 0) irr0.push_back(i);
    if (static_cast<long>(irr0.size()) != irr0_digit_formula(block.w))
        throw ConsistencyError("delta_m0: |Irr0| disagrees with the 2-adic digit formula for " +
                               block.to_string());

    DeltaM0 out;
    out.block = block;
    for (std::size_t i : irr0) {
        const auto& q = bc.records[i].quotient;
        if (q.slot(0).size() == q.slot(1).size())
            throw ConsistencyError("delta_m0: height-0 character with balanced quotient in " +
                                   block.to_string());
        if (q.slot(0).size() > q.slot(1).size()) {
            out.delta_rows.push_back(i);
            out.delta_records.push_back(bc.records[i]);
        }
    }
    if (out.delta_rows.size() * 2 != irr0.size())
        throw ConsistencyError("delta_m0: Delta is not half of Irr0 in " + block.to_string());

    // M0 entries from the Delta rows of X alone; the full M is never formed.
    const std::size_t d = out.delta_rows.size();
    const std::size_t c = x.values.cols();
    std::vector<Rat> inv_norms(c);
    for (std::size_t g = 0; g < c; ++g) inv_norms[g] = Rat(1) / Rat(x.col_norms[g]);
    out.m0 = RationalMatrix(d, d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a; b < d; ++b) {
            Cyclotomic dot = Cyclotomic::zero(2);
            for (std::size_t g = 0; g < c; ++g)
                dot += (x.values(out.delta_rows[a], g).conj() * x.values(out.delta_rows[b], g))
                           .scaled(inv_norms[g]);
            if (!dot.is_rational())
                throw ConsistencyError("delta_m0: non-rational entry in " + block.to_string());
            Rat v = dot.to_rational();
            if (out.delta_records[a].sign * out.delta_records[b].sign < 0) v = -v;
            out.m0(a, b) = v;
            out.m0(b, a) = v;
        }
    return out;
}

DeltaM0 delta_m0(const Block& block, const XOptions& options) {
    return delta_m0(block, x_matrix(block.p, block.w, options));
}

namespace {

Partition staircase(int k) {
    std::vector<int> parts;
    for (int i = k; i >= 1; --i) parts.push_back(i);
    return Partition{std::move(parts)};
}

Partition add_padded(const Partition& a, const std::vector<int>& b) {
    std::vector<int> out;
    const std::size_t n = std::max(a.parts().size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        int v = (i < a.parts().size() ? a.parts()[i] : 0) + (i < b.size() ? b[i] : 0);
        out.push_back(v);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return Partition{std::move(out)};
}

}  // namespace

HookLambda hook_lambda_2power(int k, int w, int r) {
    if (w < 1 || (w & (w - 1)) != 0)
        throw UnsupportedRegimeError("hook_lambda_2power: w must be a power of two");
    if (k < 0 || r < 1 || r > w) throw ShapeError("hook_lambda_2power: bad k or r");

    HookLambda out;
    if (k % 2 == 1) {
        std::vector<int> add = {2 * r};
        add.insert(add.end(), static_cast<std::size_t>(std::min(k, w - r)), 2);
        add.insert(add.end(), static_cast<std::size_t>(2 * std::max(0, w - r - k)), 1);
        out.la = add_padded(staircase(k), add);
        out.sign = (std::max(0, w - r - k) % 2 == 0) ? 1 : -1;
    } else {
        std::vector<int> add = {2 * (w - r + 1)};
        add.insert(add.end(), static_cast<std::size_t>(std::min(k, r - 1)), 2);
        add.insert(add.end(), static_cast<std::size_t>(2 * std::max(0, r - 1 - k)), 1);
        out.la = conjugate(add_padded(staircase(k), add));
        out.sign = ((w - r + 1 + std::min(k, r - 1)) % 2 == 0) ? 1 : -1;
    }

    const CoreData cd = core_quotient_sign(out.la, 2);
    std::vector<int> hook_parts = {r};
    hook_parts.insert(hook_parts.end(), static_cast<std::size_t>(w - r), 1);
    const MultiPartition expected_quotient{
        std::vector<Partition>{Partition{hook_parts}, Partition{}}};
    if (!(cd.core == staircase(k)) || cd.weight != w || !(cd.quotient == expected_quotient) ||
        cd.sign != out.sign)
        throw ConsistencyError("hook_lambda_2power: closed formula disagrees with the abacus at k=" +
                               std::to_string(k) + " w=" + std::to_string(w) +
                               " r=" + std::to_string(r));
    return out;
}

EigenM0 eigen_m0(const Block& block, const XMatrix& x) {
    const DeltaM0 dm = delta_m0(block, x);
    EigenM0 out;
    out.block = block;

    long max_val = 0;
    for (std::size_t i = 0; i < dm.m0.rows(); ++i)
        for (std::size_t j = 0; j < dm.m0.cols(); ++j) {
            const Int den = dm.m0(i, j).get_den();
            if (den == 1) continue;
            const long v = p_valuation_int(den, 2);
            Int two_v;
            mpz_ui_pow_ui(two_v.get_mpz_t(), 2, static_cast<unsigned long>(v));
            if (two_v != den)
                throw ConsistencyError("eigen_m0: denominator is not a 2-power in " +
                                       block.to_string());
            max_val = std::max(max_val, v);
        }
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(max_val));

    IntegerRoots roots = char_poly_integer_roots(dm.m0, scale);
    out.scale = scale;
    out.roots = std::move(roots.roots);
    out.residual = std::move(roots.residual);
    return out;
}

EigenM0 eigen_m0(const Block& block, const XOptions& options) {
    return eigen_m0(block, x_matrix(block.p, block.w, options));
}

std::vector<Block> blocks_of_symmetric_group(int n, int p) {
    std::vector<Block> out;
    for (int w = 0; p * w <= n; ++w) {
        const int core_size = n - p * w;
        for (const auto& core : enumerate_partitions(core_size))
            if (is_p_core(core, p)) out.push_back(make_block(p, w, core));
    }
    return out;
}

}  // namespace symblock
