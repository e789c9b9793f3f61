#include "symblock/scopes.hpp"

#include <algorithm>
#include <random>

namespace symblock {

int AbacusCounts::beads() const {
    int t = 0;
    for (int c : counts) t += c;
    return t;
}

long AbacusCounts::core_size() const {
    // |core| = sum_i [ p*C(a_i,2) + i*a_i ] - C(t,2)
    const long t = beads();
    long size = -t * (t - 1) / 2;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        const long a = counts[i];
        size += p * a * (a - 1) / 2 + static_cast<long>(i) * a;
    }
    return size;
}

AbacusCounts counts_from_core(const Partition& core, int p) {
    AbacusCounts out;
    out.p = p;
    out.counts.assign(static_cast<std::size_t>(p), 0);
    for (int x : beta_set(core, p).entries) ++out.counts[static_cast<std::size_t>(x % p)];
    return out;
}

Partition core_from_counts(const AbacusCounts& c) {
    BetaSet beta;
    for (int r = 0; r < c.p; ++r)
        for (int row = 0; row < c.counts[static_cast<std::size_t>(r)]; ++row)
            beta.entries.push_back(c.p * row + r);
    std::sort(beta.entries.begin(), beta.entries.end(), std::greater<int>());
    return partition_from_beta(beta);
}

namespace {

// Downward moves on the count vector. Move j in 1..p-1 swaps counts j-1, j
// when counts[j] - counts[j-1] >= w; move 0 is the wrap-around pair, which
// carries a bead-shift correction of one.
bool move_applies(const AbacusCounts& c, int j, int w) {
    if (j == 0) return c.counts[0] - c.counts[static_cast<std::size_t>(c.p - 1)] - 1 >= w;
    return c.counts[static_cast<std::size_t>(j)] - c.counts[static_cast<std::size_t>(j - 1)] >= w;
}

void apply_move(AbacusCounts& c, int j) {
    if (j == 0) {
        const int a0 = c.counts[0];
        c.counts[0] = c.counts[static_cast<std::size_t>(c.p - 1)] + 1;
        c.counts[static_cast<std::size_t>(c.p - 1)] = a0 - 1;
    } else {
        std::swap(c.counts[static_cast<std::size_t>(j)], c.counts[static_cast<std::size_t>(j - 1)]);
    }
}

}  // namespace

bool is_reduced_core(const Partition& core, int p, int w) {
    if (w < 1) throw ShapeError("is_reduced_core: w must be >= 1");
    const AbacusCounts c = counts_from_core(core, p);
    for (int j = 0; j < p; ++j)
        if (move_applies(c, j, w)) return false;
    return true;
}

Partition reduce_core(const Partition& core, int p, int w) {
    if (w < 1) throw ShapeError("reduce_core: w must be >= 1");
    AbacusCounts c = counts_from_core(core, p);
    bool moved = true;
    while (moved) {
        moved = false;
        for (int j = 1; j < p; ++j)
            if (move_applies(c, j, w)) {
                apply_move(c, j);
                moved = true;
            }
        if (!moved && move_applies(c, 0, w)) {
            apply_move(c, 0);
            moved = true;
        }
    }
    return core_from_counts(c);
}

Partition reduce_core_randomized(const Partition& core, int p, int w, std::uint64_t seed) {
    if (w < 1) throw ShapeError("reduce_core_randomized: w must be >= 1");
    std::mt19937_64 rng(seed);
    AbacusCounts c = counts_from_core(core, p);
    while (true) {
        std::vector<int> candidates;
        for (int j = 0; j < p; ++j)
            if (move_applies(c, j, w)) candidates.push_back(j);
        if (candidates.empty()) break;
        const std::size_t pick = std::uniform_int_distribution<std::size_t>(
            0, candidates.size() - 1)(rng);
        apply_move(c, candidates[pick]);
    }
    return core_from_counts(c);
}

Int scopes_class_count(int p, int w) {
    if (w < 1) throw ShapeError("scopes_class_count: w must be >= 1");
    Int b = binomial(static_cast<long>(w) * p, p - 1);
    if (b % p != 0) throw ConsistencyError("scopes_class_count: binomial not divisible by p");
    return b / p;
}

Int morita_upper_bound(int p, int w) {
    const Int first = scopes_class_count(p, w);
    const Int second = binomial(static_cast<long>(w) * p / 2, p / 2);
    Int sum = first + second;
    if (sum % 2 != 0) throw ConsistencyError("morita_upper_bound: bound is not an integer");
    return sum / 2;
}

namespace {

// Reduced cores correspond to integer vectors (n_0..n_{p-1}) with sum 0,
// n_i - n_{i-1} <= w-1 for i >= 1, and n_0 - n_{p-1} <= w. Enumerate the
// polytope depth first with partial-sum feasibility pruning.
void enumerate_reduced_vectors(int p, int w, std::vector<long>& n, int depth, long sum,
                               std::vector<std::vector<long>>& out) {
    if (depth == p) {
        if (sum == 0 && n[0] - n[static_cast<std::size_t>(p - 1)] <= w) out.push_back(n);
        return;
    }
    if (depth == 0) {
        // n_0 ranges over a window wide enough for every solution: from the
        // wrap bound, n_0 <= n_{p-1} + w and each later entry climbs by at
        // most w-1, so zero-sum forces |n_0| <= p*w.
        for (long v = -static_cast<long>(p) * w; v <= static_cast<long>(p) * w; ++v) {
            n[0] = v;
            enumerate_reduced_vectors(p, w, n, 1, v, out);
        }
        return;
    }
    // Remaining entries j >= depth satisfy n_j <= n_{depth-1} + (j-depth+1)(w-1)
    // and n_j >= n_0 - w - (p-1-j)(w-1) via the wrap constraint.
    const long prev = n[static_cast<std::size_t>(depth - 1)];
    const long hi = prev + (w - 1);
    const long lo = n[0] - w - static_cast<long>(p - 1 - depth) * (w - 1);
    for (long v = lo; v <= hi; ++v) {
        // Feasibility of reaching total zero with the remaining slots.
        long max_rest = 0, min_rest = 0;
        for (int j = depth + 1; j < p; ++j) {
            max_rest += v + static_cast<long>(j - depth) * (w - 1);
            min_rest += n[0] - w - static_cast<long>(p - 1 - j) * (w - 1);
        }
        const long s = sum + v;
        if (s + max_rest < 0 || s + min_rest > 0) continue;
        n[static_cast<std::size_t>(depth)] = v;
        enumerate_reduced_vectors(p, w, n, depth + 1, s, out);
    }
}

}  // namespace

std::vector<ScopesClass> enumerate_representatives(int p, int w, long size_cap) {
    if (p < 2 || w < 1) throw ShapeError("enumerate_representatives: need p >= 2, w >= 1");
    if (size_cap <= 0) size_cap = static_cast<long>(p) * p * w * w;

    std::vector<std::vector<long>> vectors;
    std::vector<long> n(static_cast<std::size_t>(p), 0);
    enumerate_reduced_vectors(p, w, n, 0, 0, vectors);

    std::vector<ScopesClass> out;
    out.reserve(vectors.size());
    for (const auto& vec : vectors) {
        long shift = 0;
        for (long v : vec) shift = std::min(shift, v);
        AbacusCounts counts;
        counts.p = p;
        for (long v : vec) counts.counts.push_back(static_cast<int>(v - shift));
        ScopesClass sc;
        sc.representative = core_from_counts(counts);
        sc.p = p;
        sc.w = w;
        if (sc.representative.size() > size_cap)
            throw CapExceededError(
                "enumerate_representatives: representative above size cap, enumeration "
                "incomplete at cap " + std::to_string(size_cap));
        out.push_back(std::move(sc));
    }

    std::sort(out.begin(), out.end(), [](const ScopesClass& a, const ScopesClass& b) {
        if (a.representative.size() != b.representative.size())
            return a.representative.size() < b.representative.size();
        return a.representative.lex_after(b.representative);
    });

    if (Int(static_cast<long>(out.size())) != scopes_class_count(p, w))
        throw ConsistencyError("enumerate_representatives: count disagrees with closed form");
    for (const auto& sc : out)
        if (!is_reduced_core(sc.representative, p, w))
            throw ConsistencyError("enumerate_representatives: non-reduced representative");
    return out;
}

ConjugationPairing conjugation_pairing(std::vector<ScopesClass>& reps, int p, int w) {
    ConjugationPairing out;
    std::vector<std::size_t> partner(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) {
        const Partition conj_rep = reduce_core(conjugate(reps[i].representative), p, w);
        bool found = false;
        for (std::size_t j = 0; j < reps.size(); ++j)
            if (reps[j].representative == conj_rep) {
                partner[i] = j;
                found = true;
                break;
            }
        if (!found)
            throw ConsistencyError("conjugation_pairing: partner of " +
                                   reps[i].representative.to_string() +
                                   " missing from representative list");
        reps[i].partner = partner[i];
    }
    for (std::size_t i = 0; i < reps.size(); ++i) {
        if (partner[partner[i]] != i)
            throw ConsistencyError("conjugation_pairing: pairing is not an involution");
        if (partner[i] >= i) out.groups.emplace_back(i, partner[i]);
    }
    out.upper_bound = static_cast<long>(out.groups.size());
    if (Int(out.upper_bound) != morita_upper_bound(p, w))
        throw ConsistencyError("conjugation_pairing: group count disagrees with closed form");
    return out;
}

}  // namespace symblock
