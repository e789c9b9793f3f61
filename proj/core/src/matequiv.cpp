#include "symblock/matequiv.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "symblock/parallel.hpp"

namespace symblock {

namespace {

// Entries of both matrices replaced by small dense ids so the refinement
// loops compare ints only.
struct ValueIds {
    Matrix<int> a, b;
    bool compatible = true;
};

ValueIds build_value_ids(const RationalMatrix& a, const RationalMatrix& b) {
    ValueIds out;
    out.a = Matrix<int>(a.rows(), a.cols());
    out.b = Matrix<int>(b.rows(), b.cols());
    std::map<Rat, int> ids;
    std::vector<long> count_a, count_b;
    auto id_of = [&](const Rat& v) {
        auto [it, inserted] = ids.emplace(v, static_cast<int>(ids.size()));
        if (inserted) {
            count_a.push_back(0);
            count_b.push_back(0);
        }
        return it->second;
    };
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const int id = id_of(a(i, j));
            out.a(i, j) = id;
            ++count_a[static_cast<std::size_t>(id)];
        }
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            const int id = id_of(b(i, j));
            out.b(i, j) = id;
            ++count_b[static_cast<std::size_t>(id)];
        }
    out.compatible = count_a == count_b;
    return out;
}

using Signature = std::vector<int>;

// Joint color refinement and individualization search for P A Q = B.
class RectangularSearch {
  public:
    RectangularSearch(const Matrix<int>& a, const Matrix<int>& b) : a_(a), b_(b) {}

    std::optional<EquivWitness> run() {
        State s;
        s.row_a.assign(a_.rows(), 0);
        s.row_b.assign(b_.rows(), 0);
        s.col_a.assign(a_.cols(), 0);
        s.col_b.assign(b_.cols(), 0);
        s.next_color = 1;
        if (!refine(s)) return std::nullopt;
        return search(s);
    }

  private:
    struct State {
        std::vector<int> row_a, row_b, col_a, col_b;
        int next_color;
    };

    // Recolor rows (or columns) of both matrices by signature; returns false
    // when the color histograms of A and B diverge.
    bool recolor(State& s, bool rows) {
        auto& ca = rows ? s.row_a : s.col_a;
        auto& cb = rows ? s.row_b : s.col_b;
        const auto& other_a = rows ? s.col_a : s.row_a;
        const auto& other_b = rows ? s.col_b : s.row_b;

        auto signature = [&](const Matrix<int>& m, const std::vector<int>& own,
                             const std::vector<int>& other, std::size_t i) {
            Signature sig;
            const std::size_t len = rows ? m.cols() : m.rows();
            sig.reserve(2 * len + 1);
            std::vector<std::pair<int, int>> cells;
            cells.reserve(len);
            for (std::size_t j = 0; j < len; ++j)
                cells.emplace_back(other[j], rows ? m(i, j) : m(j, i));
            std::sort(cells.begin(), cells.end());
            sig.push_back(own[i]);
            for (const auto& [c, v] : cells) {
                sig.push_back(c);
                sig.push_back(v);
            }
            return sig;
        };

        std::map<Signature, int> fresh;
        std::vector<long> hist_a, hist_b;
        auto assign = [&](const Matrix<int>& m, std::vector<int>& own,
                          const std::vector<int>& other, std::vector<long>& hist) {
            std::vector<int> next(own.size());
            for (std::size_t i = 0; i < own.size(); ++i) {
                const Signature sig = signature(m, own, other, i);
                auto [it, inserted] = fresh.emplace(sig, s.next_color);
                if (inserted) {
                    ++s.next_color;
                    hist_a.push_back(0);
                    hist_b.push_back(0);
                }
                const std::size_t slot = static_cast<std::size_t>(it->second - base_);
                ++hist[slot];
                next[i] = it->second;
            }
            own = std::move(next);
        };

        base_ = s.next_color;
        assign(a_, ca, other_a, hist_a);
        assign(b_, cb, other_b, hist_b);
        return hist_a == hist_b;
    }

    bool refine(State& s) {
        int last = -1;
        while (true) {
            if (!recolor(s, true)) return false;
            if (!recolor(s, false)) return false;
            const int distinct = count_distinct(s);
            if (distinct == last) return true;
            last = distinct;
        }
    }

    static int count_distinct(const State& s) {
        std::vector<int> all;
        all.insert(all.end(), s.row_a.begin(), s.row_a.end());
        all.insert(all.end(), s.col_a.begin(), s.col_a.end());
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        return static_cast<int>(all.size());
    }

    std::optional<EquivWitness> search(State s) {
        // Find the smallest non-singleton class, rows preferred.
        auto pick = [&](const std::vector<int>& color_a) -> std::pair<int, std::size_t> {
            std::map<int, std::size_t> count;
            for (int c : color_a) ++count[c];
            int best = -1;
            std::size_t best_size = 0;
            for (const auto& [c, n] : count)
                if (n >= 2 && (best < 0 || n < best_size)) {
                    best = c;
                    best_size = n;
                }
            return {best, best_size};
        };

        const auto [row_color, row_size] = pick(s.row_a);
        const auto [col_color, col_size] = pick(s.col_a);

        if (row_color < 0 && col_color < 0) return extract(s);

        const bool branch_rows = col_color < 0 || (row_color >= 0 && row_size <= col_size);
        const int color = branch_rows ? row_color : col_color;
        auto& ca = branch_rows ? s.row_a : s.col_a;
        auto& cb = branch_rows ? s.row_b : s.col_b;

        std::size_t pivot = 0;
        while (ca[pivot] != color) ++pivot;

        for (std::size_t cand = 0; cand < cb.size(); ++cand) {
            if (cb[cand] != color) continue;
            State branch = s;
            auto& bca = branch_rows ? branch.row_a : branch.col_a;
            auto& bcb = branch_rows ? branch.row_b : branch.col_b;
            bca[pivot] = branch.next_color;
            bcb[cand] = branch.next_color;
            ++branch.next_color;
            if (!refine(branch)) continue;
            if (auto w = search(std::move(branch))) return w;
        }
        return std::nullopt;
    }

    std::optional<EquivWitness> extract(const State& s) {
        EquivWitness w;
        w.row_perm.assign(a_.rows(), 0);
        w.col_perm.assign(a_.cols(), 0);
        if (!match(s.row_a, s.row_b, w.row_perm)) return std::nullopt;
        if (!match(s.col_a, s.col_b, w.col_perm)) return std::nullopt;
        for (std::size_t i = 0; i < a_.rows(); ++i)
            for (std::size_t j = 0; j < a_.cols(); ++j)
                if (a_(i, j) != b_(w.row_perm[i], w.col_perm[j])) return std::nullopt;
        return w;
    }

    static bool match(const std::vector<int>& ca, const std::vector<int>& cb,
                      std::vector<std::size_t>& perm) {
        std::map<int, std::size_t> where;
        for (std::size_t i = 0; i < cb.size(); ++i) {
            if (where.contains(cb[i])) return false;  // non-singleton left
            where[cb[i]] = i;
        }
        for (std::size_t i = 0; i < ca.size(); ++i) {
            auto it = where.find(ca[i]);
            if (it == where.end()) return false;
            perm[i] = it->second;
        }
        return true;
    }

    const Matrix<int>& a_;
    const Matrix<int>& b_;
    int base_ = 0;
};

// Individualization-refinement for one permutation acting on both sides.
class SimilaritySearch {
  public:
    SimilaritySearch(const Matrix<int>& a, const Matrix<int>& b) : a_(a), b_(b) {}

    std::optional<EquivWitness> run() {
        State s;
        s.color_a.assign(a_.rows(), 0);
        s.color_b.assign(b_.rows(), 0);
        s.next_color = 1;
        if (!refine(s)) return std::nullopt;
        return search(std::move(s));
    }

  private:
    struct State {
        std::vector<int> color_a, color_b;
        int next_color;
    };

    bool refine(State& s) {
        int last = -1;
        while (true) {
            std::map<Signature, int> fresh;
            std::vector<long> hist_a, hist_b;
            const int base = s.next_color;
            auto assign = [&](const Matrix<int>& m, std::vector<int>& color,
                              std::vector<long>& hist) {
                std::vector<int> next(color.size());
                for (std::size_t i = 0; i < color.size(); ++i) {
                    Signature sig;
                    sig.push_back(color[i]);
                    sig.push_back(m(i, i));
                    std::vector<std::pair<int, int>> cells;
                    for (std::size_t j = 0; j < color.size(); ++j) {
                        if (j == i) continue;
                        cells.emplace_back(color[j], m(i, j));
                    }
                    std::sort(cells.begin(), cells.end());
                    for (const auto& [c, v] : cells) {
                        sig.push_back(c);
                        sig.push_back(v);
                    }
                    auto [it, inserted] = fresh.emplace(std::move(sig), s.next_color);
                    if (inserted) {
                        ++s.next_color;
                        hist_a.push_back(0);
                        hist_b.push_back(0);
                    }
                    ++hist[static_cast<std::size_t>(it->second - base)];
                    next[i] = it->second;
                }
                color = std::move(next);
            };
            assign(a_, s.color_a, hist_a);
            assign(b_, s.color_b, hist_b);
            if (hist_a != hist_b) return false;
            const int distinct = static_cast<int>(fresh.size());
            if (distinct == last) return true;
            last = distinct;
        }
    }

    std::optional<EquivWitness> search(State s) {
        int color = -1;
        std::size_t size = 0;
        std::map<int, std::size_t> count;
        for (int c : s.color_a) ++count[c];
        for (const auto& [c, n] : count)
            if (n >= 2 && (color < 0 || n < size)) {
                color = c;
                size = n;
            }
        if (color < 0) return extract(s);

        std::size_t pivot = 0;
        while (s.color_a[pivot] != color) ++pivot;
        for (std::size_t cand = 0; cand < s.color_b.size(); ++cand) {
            if (s.color_b[cand] != color) continue;
            State branch = s;
            branch.color_a[pivot] = branch.next_color;
            branch.color_b[cand] = branch.next_color;
            ++branch.next_color;
            if (!refine(branch)) continue;
            if (auto w = search(std::move(branch))) return w;
        }
        return std::nullopt;
    }

    std::optional<EquivWitness> extract(const State& s) {
        EquivWitness w;
        w.row_perm.assign(a_.rows(), 0);
        std::map<int, std::size_t> where;
        for (std::size_t i = 0; i < s.color_b.size(); ++i) {
            if (where.contains(s.color_b[i])) return std::nullopt;
            where[s.color_b[i]] = i;
        }
        for (std::size_t i = 0; i < s.color_a.size(); ++i) {
            auto it = where.find(s.color_a[i]);
            if (it == where.end()) return std::nullopt;
            w.row_perm[i] = it->second;
        }
        for (std::size_t i = 0; i < a_.rows(); ++i)
            for (std::size_t j = 0; j < a_.cols(); ++j)
                if (a_(i, j) != b_(w.row_perm[i], w.row_perm[j])) return std::nullopt;
        w.col_perm = w.row_perm;
        return w;
    }

    const Matrix<int>& a_;
    const Matrix<int>& b_;
};

}  // namespace

std::string invariant_key(const RationalMatrix& a, EquivMode mode) {
    if (mode == EquivMode::Similarity && (!a.is_square() || !a.is_symmetric()))
        throw ShapeError("invariant_key: similarity mode needs a square symmetric matrix");

    auto content = [&](bool rows) {
        std::vector<std::string> lines;
        const std::size_t outer = rows ? a.rows() : a.cols();
        const std::size_t inner = rows ? a.cols() : a.rows();
        for (std::size_t i = 0; i < outer; ++i) {
            std::vector<std::string> vals;
            vals.reserve(inner);
            for (std::size_t j = 0; j < inner; ++j)
                vals.push_back(to_string(rows ? a(i, j) : a(j, i)));
            std::sort(vals.begin(), vals.end());
            std::string line;
            for (const auto& v : vals) line += v + ",";
            lines.push_back(std::move(line));
        }
        std::sort(lines.begin(), lines.end());
        std::string out;
        for (const auto& l : lines) out += l + ";";
        return out;
    };

    std::ostringstream os;
    os << a.rows() << 'x' << a.cols() << "|R:" << content(true) << "|C:" << content(false);
    if (mode == EquivMode::Similarity) {
        std::vector<std::string> diag;
        for (std::size_t i = 0; i < a.rows(); ++i) diag.push_back(to_string(a(i, i)));
        std::sort(diag.begin(), diag.end());
        os << "|D:";
        for (const auto& d : diag) os << d << ",";
    }
    return os.str();
}

std::optional<EquivWitness> transforming_permutations(const RationalMatrix& a,
                                                      const RationalMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeError("transforming_permutations: dimension mismatch");
    if (a.rows() == 0 || a.cols() == 0) return EquivWitness{};
    const ValueIds ids = build_value_ids(a, b);
    if (!ids.compatible) return std::nullopt;
    return RectangularSearch(ids.a, ids.b).run();
}

std::optional<EquivWitness> permutation_similarity(const RationalMatrix& a,
                                                   const RationalMatrix& b) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
        throw ShapeError("permutation_similarity: need equal-size square matrices");
    if (!a.is_symmetric() || !b.is_symmetric())
        throw ShapeError("permutation_similarity: inputs must be symmetric");
    if (a.rows() == 0) return EquivWitness{};
    const ValueIds ids = build_value_ids(a, b);
    if (!ids.compatible) return std::nullopt;
    return SimilaritySearch(ids.a, ids.b).run();
}

std::vector<std::vector<std::size_t>> classify(const std::vector<RationalMatrix>& mats,
                                               EquivMode mode, int jobs) {
    const std::size_t n = mats.size();
    std::map<std::string, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < n; ++i) buckets[invariant_key(mats[i], mode)].push_back(i);

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& [key, members] : buckets)
        for (std::size_t x = 0; x < members.size(); ++x)
            for (std::size_t y = x + 1; y < members.size(); ++y)
                pairs.emplace_back(members[x], members[y]);

    std::vector<char> equivalent(pairs.size(), 0);
    parallel_for(pairs.size(), jobs, [&](std::size_t k) {
        const auto [i, j] = pairs[k];
        const auto witness = mode == EquivMode::Rectangular
                                 ? transforming_permutations(mats[i], mats[j])
                                 : permutation_similarity(mats[i], mats[j]);
        equivalent[k] = witness.has_value() ? 1 : 0;
    });

    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t k = 0; k < pairs.size(); ++k)
        if (equivalent[k]) {
            const auto [i, j] = pairs[k];
            const std::size_t ri = find(i), rj = find(j);
            if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
        }

    std::map<std::size_t, std::vector<std::size_t>> by_root;
    for (std::size_t i = 0; i < n; ++i) by_root[find(i)].push_back(i);
    std::vector<std::vector<std::size_t>> out;
    out.reserve(by_root.size());
    for (auto& [root, members] : by_root) out.push_back(std::move(members));
    return out;
}

}  // namespace symblock
