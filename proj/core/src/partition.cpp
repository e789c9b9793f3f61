#include "symblock/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "symblock/numeric.hpp"

namespace symblock {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw ShapeError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw ShapeError("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

bool Partition::lex_after(const Partition& other) const {
    const int n = std::max(length(), other.length());
    for (int i = 0; i < n; ++i) {
        if (part(i) != other.part(i)) return part(i) > other.part(i);
    }
    return false;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

MultiPartition::MultiPartition(std::vector<Partition> slots) : slots_(std::move(slots)) {
    for (const auto& s : slots_) total_ += s.size();
}

bool MultiPartition::canonical_before(const MultiPartition& other) const {
    if (slot_count() != other.slot_count())
        throw ShapeError("comparing multipartitions with different slot counts");
    for (int i = 0; i < slot_count(); ++i) {
        if (slot(i).size() != other.slot(i).size())
            return slot(i).size() > other.slot(i).size();
    }
    for (int i = 0; i < slot_count(); ++i) {
        if (!(slot(i) == other.slot(i))) return slot(i).lex_after(other.slot(i));
    }
    return false;
}

std::string MultiPartition::to_string() const {
    std::string out = "(";
    for (int i = 0; i < slot_count(); ++i) {
        if (i) out += ',';
        out += slot(i).to_string();
    }
    out += ')';
    return out;
}

namespace {

void enumerate_rec(int remaining, int max_part, std::vector<int>& stack,
                   std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(stack);
        return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
        stack.push_back(k);
        enumerate_rec(remaining - k, k, stack, out);
        stack.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw ShapeError("enumerate_partitions: n must be non-negative");
    std::vector<Partition> out;
    std::vector<int> stack;
    enumerate_rec(n, n == 0 ? 1 : n, stack, out);
    return out;
}

long partition_count(int n) {
    if (n < 0) return 0;
    static std::vector<long> cache = {1};
    // Euler's pentagonal number recurrence.
    for (int m = static_cast<int>(cache.size()); m <= n; ++m) {
        long total = 0;
        for (int k = 1;; ++k) {
            const long g1 = static_cast<long>(k) * (3L * k - 1) / 2;
            const long g2 = static_cast<long>(k) * (3L * k + 1) / 2;
            if (g1 > m) break;
            const long sgn = (k % 2 == 1) ? 1 : -1;
            total += sgn * cache[static_cast<std::size_t>(m - g1)];
            if (g2 <= m) total += sgn * cache[static_cast<std::size_t>(m - g2)];
        }
        cache.push_back(total);
    }
    return cache[static_cast<std::size_t>(n)];
}

Partition conjugate(const Partition& p) {
    if (p.empty()) return Partition{};
    std::vector<int> out(static_cast<std::size_t>(p.parts()[0]), 0);
    for (int part : p.parts()) {
        for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
    }
    return Partition{std::move(out)};
}

bool dominates(const Partition& mu, const Partition& la) {
    if (mu.size() != la.size()) return false;
    long a = 0, b = 0;
    const int n = std::max(mu.length(), la.length());
    for (int i = 0; i < n; ++i) {
        a += mu.part(i);
        b += la.part(i);
        if (a < b) return false;
    }
    return true;
}

bool is_p_regular(const Partition& la, int p) {
    int run = 1;
    for (int i = 1; i < la.length(); ++i) {
        if (la.parts()[i] == la.parts()[i - 1]) {
            if (++run >= p) return false;
        } else {
            run = 1;
        }
    }
    return true;
}

BetaSet beta_set_with_beads(const Partition& la, int t) {
    if (t < la.length()) throw ShapeError("beta_set_with_beads: too few beads");
    BetaSet beta;
    beta.entries.reserve(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) beta.entries.push_back(la.part(i) + t - 1 - i);
    return beta;
}

BetaSet beta_set(const Partition& la, int p) {
    if (p < 2) throw ShapeError("beta_set: p must be at least 2");
    const int l = la.length();
    const int s = (p - l % p) % p;
    return beta_set_with_beads(la, l + s);
}

Partition partition_from_beta(const BetaSet& beta) {
    std::vector<int> sorted = beta.entries;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    const int t = static_cast<int>(sorted.size());
    std::vector<int> parts;
    for (int i = 0; i < t; ++i) {
        const int part = sorted[static_cast<std::size_t>(i)] - (t - 1 - i);
        if (part < 0) throw ShapeError("beta set entries not distinct");
        if (part > 0) parts.push_back(part);
    }
    return Partition{std::move(parts)};
}

CoreData core_quotient_sign(const Partition& la, int p) {
    const BetaSet beta = beta_set(la, p);
    const int t = beta.bead_count();

    // Quotient: runner r holds the rows {x div p : x in beta, x ≡ r (mod p)}.
    std::vector<Partition> slots;
    slots.reserve(static_cast<std::size_t>(p));
    for (int r = 0; r < p; ++r) {
        std::vector<int> rows;
        for (int x : beta.entries)
            if (x % p == r) rows.push_back(x / p);
        std::sort(rows.begin(), rows.end(), std::greater<int>());
        slots.push_back(partition_from_beta(BetaSet{rows}));
    }

    // Core and sign: slide beads one row at a time; every slide removes one
    // p-hook whose leg length is the number of beads strictly in between.
    const int max_pos = t == 0 ? 0 : beta.entries.front() + 1;
    std::vector<char> occupied(static_cast<std::size_t>(max_pos) + 1, 0);
    for (int x : beta.entries) occupied[static_cast<std::size_t>(x)] = 1;

    long total_legs = 0;
    int weight = 0;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int x = p; x <= max_pos; ++x) {
            if (!occupied[static_cast<std::size_t>(x)]) continue;
            if (occupied[static_cast<std::size_t>(x - p)]) continue;
            int legs = 0;
            for (int y = x - p + 1; y < x; ++y)
                if (occupied[static_cast<std::size_t>(y)]) ++legs;
            occupied[static_cast<std::size_t>(x)] = 0;
            occupied[static_cast<std::size_t>(x - p)] = 1;
            total_legs += legs;
            ++weight;
            moved = true;
        }
    }

    BetaSet core_beta;
    for (int x = max_pos; x >= 0; --x)
        if (occupied[static_cast<std::size_t>(x)]) core_beta.entries.push_back(x);

    CoreData out;
    out.core = partition_from_beta(core_beta);
    out.quotient = MultiPartition{std::move(slots)};
    out.weight = weight;
    out.sign = (total_legs % 2 == 0) ? 1 : -1;
    return out;
}

bool is_p_core(const Partition& la, int p) {
    return core_quotient_sign(la, p).weight == 0;
}

Partition from_core_quotient(const Partition& core, const MultiPartition& quotient, int p) {
    if (quotient.slot_count() != p)
        throw ShapeError("from_core_quotient: quotient must have exactly p slots");
    if (!is_p_core(core, p))
        throw InvalidCoreError("from_core_quotient: core is not a p-core: " + core.to_string());

    // Runner bead counts of the core, then enough extra full rows of beads
    // so every runner can host its quotient slot.
    BetaSet beta = beta_set(core, p);
    std::vector<int> counts(static_cast<std::size_t>(p), 0);
    for (int x : beta.entries) ++counts[static_cast<std::size_t>(x % p)];
    int extra = 0;
    for (int r = 0; r < p; ++r)
        extra = std::max(extra, quotient.slot(r).length() - counts[static_cast<std::size_t>(r)]);
    if (extra > 0) {
        beta = beta_set_with_beads(core, beta.bead_count() + extra * p);
        for (auto& c : counts) c += extra;
    }

    BetaSet out;
    for (int r = 0; r < p; ++r) {
        const int k = counts[static_cast<std::size_t>(r)];
        const Partition& q = quotient.slot(r);
        // Core rows on this runner are 0..k-1; shift row j (from the top)
        // up by the j-th quotient part.
        for (int j = 0; j < k; ++j) {
            const int row = q.part(j) + (k - 1 - j);
            out.entries.push_back(p * row + r);
        }
    }
    return partition_from_beta(out);
}

std::vector<std::vector<int>> hook_lengths(const Partition& la) {
    const Partition conj = conjugate(la);
    std::vector<std::vector<int>> out;
    out.reserve(static_cast<std::size_t>(la.length()));
    for (int i = 0; i < la.length(); ++i) {
        std::vector<int> row;
        row.reserve(static_cast<std::size_t>(la.parts()[static_cast<std::size_t>(i)]));
        for (int j = 0; j < la.parts()[static_cast<std::size_t>(i)]; ++j)
            row.push_back(la.part(i) - j + conj.part(j) - i - 1);
        out.push_back(std::move(row));
    }
    return out;
}

long degree_valuation(const Partition& la, int p) {
    long v = factorial_valuation(la.size(), p);
    for (const auto& row : hook_lengths(la))
        for (int h : row) v -= p_valuation_int(Int(h), p);
    return v;
}

std::string to_string(const Partition& p) { return p.to_string(); }
std::string to_string(const MultiPartition& mp) { return mp.to_string(); }

Partition partition_from_string(const std::string& s) {
    std::string trimmed;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (trimmed.size() < 2 || trimmed.front() != '(' || trimmed.back() != ')')
        throw ShapeError("partition string must look like \"(3,2,1)\": " + s);
    std::vector<int> parts;
    std::string body = trimmed.substr(1, trimmed.size() - 2);
    if (!body.empty()) {
        std::istringstream is(body);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            if (tok.empty()) throw ShapeError("empty part in partition string: " + s);
            parts.push_back(std::stoi(tok));
        }
    }
    return Partition{std::move(parts)};
}

}  // namespace symblock
