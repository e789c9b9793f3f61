#include "symblock/wreath.hpp"

#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "symblock/parallel.hpp"
#include "symblock/symchar.hpp"

namespace symblock {

namespace {

void compositions_desc(int w, int slots, std::vector<int>& prefix,
                       std::vector<std::vector<int>>& out) {
    if (slots == 1) {
        prefix.push_back(w);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int first = w; first >= 0; --first) {
        prefix.push_back(first);
        compositions_desc(w - first, slots - 1, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<MultiPartition> enumerate_multipartitions(int p, int w) {
    if (p < 2 || w < 0) throw ShapeError("enumerate_multipartitions: bad parameters");
    std::vector<std::vector<int>> comps;
    std::vector<int> prefix;
    compositions_desc(w, p, prefix, comps);

    std::vector<MultiPartition> out;
    for (const auto& comp : comps) {
        std::vector<std::vector<Partition>> per_slot;
        per_slot.reserve(comp.size());
        for (int size : comp) per_slot.push_back(enumerate_partitions(size));
        // Cartesian product, slot 0 outermost.
        std::vector<std::size_t> idx(comp.size(), 0);
        while (true) {
            std::vector<Partition> slots;
            slots.reserve(comp.size());
            for (std::size_t i = 0; i < comp.size(); ++i) slots.push_back(per_slot[i][idx[i]]);
            out.emplace_back(std::move(slots));
            std::size_t pos = comp.size();
            while (pos > 0) {
                --pos;
                if (++idx[pos] < per_slot[pos].size()) break;
                idx[pos] = 0;
                if (pos == 0) goto next_comp;
            }
            if (comp.empty()) break;
        }
    next_comp:;
    }
    return out;
}

std::vector<WreathClass> wreath_classes(int p, int w) {
    std::vector<WreathClass> out;
    for (auto& mp : enumerate_multipartitions(p, w)) {
        const bool gamma = mp.slot(0).empty();
        out.push_back(WreathClass{std::move(mp), gamma});
    }
    return out;
}

Int wreath_centralizer_order(const MultiPartition& mu, int p) {
    if (mu.slot_count() != p) throw ShapeError("wreath_centralizer_order: slot count != p");
    Int out = 1;
    for (int i = 0; i < p; ++i) {
        Int pl;
        mpz_ui_pow_ui(pl.get_mpz_t(), static_cast<unsigned long>(p),
                      static_cast<unsigned long>(mu.slot(i).length()));
        out *= pl * centralizer_order_sym(mu.slot(i));
    }
    return out;
}

namespace {

struct IntVecHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// (length, color) of the cycles of a class label, largest length first.
std::vector<std::pair<int, int>> class_cycles(const MultiPartition& mu) {
    std::vector<std::pair<int, int>> cycles;
    for (int j = 0; j < mu.slot_count(); ++j)
        for (int s : mu.slot(j).parts()) cycles.emplace_back(s, j);
    std::sort(cycles.begin(), cycles.end(),
              [](const auto& a, const auto& b) {
                  return a.first != b.first ? a.first > b.first : a.second < b.second;
              });
    return cycles;
}

class WreathCharEvaluator {
  public:
    explicit WreathCharEvaluator(int p) : p_(p) {}

    Cyclotomic value(const MultiPartition& la, const std::vector<std::pair<int, int>>& cycles) {
        std::vector<std::vector<int>> slots;
        slots.reserve(static_cast<std::size_t>(p_));
        for (int i = 0; i < p_; ++i) slots.push_back(la.slot(i).parts());
        return eval(slots, cycles, 0);
    }

  private:
    Cyclotomic eval(std::vector<std::vector<int>>& slots,
                    const std::vector<std::pair<int, int>>& cycles, std::size_t depth) {
        if (depth == cycles.size()) return Cyclotomic::one(p_);

        std::vector<int> key;
        for (const auto& s : slots) {
            key.insert(key.end(), s.begin(), s.end());
            key.push_back(-1);
        }
        for (std::size_t d = depth; d < cycles.size(); ++d) {
            key.push_back(cycles[d].first);
            key.push_back(cycles[d].second);
        }
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        const auto [s, color] = cycles[depth];
        Cyclotomic total = Cyclotomic::zero(p_);
        for (int i = 0; i < p_; ++i) {
            auto& parts = slots[static_cast<std::size_t>(i)];
            if (parts.empty()) continue;
            const Cyclotomic twist = Cyclotomic::root_power(p_, static_cast<long>(i) * color);
            const int t = static_cast<int>(parts.size());
            std::vector<int> beta(parts.size());
            for (int a = 0; a < t; ++a)
                beta[static_cast<std::size_t>(a)] = parts[static_cast<std::size_t>(a)] + t - 1 - a;
            for (int a = 0; a < t; ++a) {
                const int x = beta[static_cast<std::size_t>(a)];
                const int y = x - s;
                if (y < 0) continue;
                bool occupied = false;
                int legs = 0;
                for (int b = 0; b < t; ++b) {
                    const int e = beta[static_cast<std::size_t>(b)];
                    if (e == y) occupied = true;
                    if (e > y && e < x) ++legs;
                }
                if (occupied) continue;
                std::vector<int> nb = beta;
                nb[static_cast<std::size_t>(a)] = y;
                std::sort(nb.begin(), nb.end(), std::greater<int>());
                std::vector<int> next_parts;
                for (int b = 0; b < t; ++b) {
                    const int part = nb[static_cast<std::size_t>(b)] - (t - 1 - b);
                    if (part > 0) next_parts.push_back(part);
                }
                std::vector<int> saved = std::move(parts);
                slots[static_cast<std::size_t>(i)] = std::move(next_parts);
                Cyclotomic sub = eval(slots, cycles, depth + 1);
                slots[static_cast<std::size_t>(i)] = std::move(saved);
                if (legs % 2 != 0) sub = -sub;
                total += twist * sub;
            }
        }
        memo_.emplace(std::move(key), total);
        return total;
    }

    int p_;
    std::unordered_map<std::vector<int>, Cyclotomic, IntVecHash> memo_;
};

}  // namespace

Cyclotomic wreath_char_value(const MultiPartition& la, const MultiPartition& mu) {
    if (la.slot_count() != mu.slot_count())
        throw ShapeError("wreath_char_value: labels from different wreath products");
    if (la.total() != mu.total()) throw ShapeError("wreath_char_value: different weights");
    WreathCharEvaluator eval(la.slot_count());
    return eval.value(la, class_cycles(mu));
}

std::optional<std::size_t> XMatrix::row_index(const MultiPartition& la) const {
    for (std::size_t i = 0; i < row_labels.size(); ++i)
        if (row_labels[i] == la) return i;
    return std::nullopt;
}

std::string x_cache_file_name(int p, int w, bool all_columns) {
    std::ostringstream os;
    os << "x_p" << p << "_w" << w << (all_columns ? "_all" : "_gamma") << ".txt";
    return os.str();
}

namespace {

constexpr const char* kCacheMagic = "SYMBLOCK-XCACHE";
constexpr int kCacheVersion = 1;

void write_cache(const std::string& dir, const XMatrix& x) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    const fs::path final_path = fs::path(dir) / x_cache_file_name(x.p, x.w, x.all_columns);
    const fs::path tmp_path = final_path.string() + ".tmp." + std::to_string(::getpid());

    {
        std::ofstream out(tmp_path);
        if (!out) throw IoError("cannot write cache file " + tmp_path.string());
        out << kCacheMagic << ' ' << kCacheVersion << '\n';
        out << "p " << x.p << " w " << x.w << " rows " << x.values.rows() << " cols "
            << x.values.cols() << " all " << (x.all_columns ? 1 : 0) << '\n';
        for (std::size_t i = 0; i < x.values.rows(); ++i) {
            for (std::size_t j = 0; j < x.values.cols(); ++j) {
                const auto& coords = x.values(i, j).coordinates();
                for (std::size_t k = 0; k < coords.size(); ++k) {
                    if (j || k) out << ' ';
                    if (coords[k].get_den() != 1)
                        throw ConsistencyError("character value with non-integer coordinate");
                    out << coords[k].get_num().get_str();
                }
            }
            out << '\n';
        }
        if (!out) throw IoError("failed writing cache file " + tmp_path.string());
    }
    fs::rename(tmp_path, final_path, ec);
    if (ec) {
        fs::remove(tmp_path, ec);
        throw IoError("cannot rename cache file into place: " + final_path.string());
    }
}

CycloMatrix read_cache(const std::string& dir, int p, int w, bool all_columns,
                       std::size_t rows, std::size_t cols) {
    namespace fs = std::filesystem;
    const fs::path path = fs::path(dir) / x_cache_file_name(p, w, all_columns);
    std::ifstream in(path);
    if (!in) throw CacheInvalidError("no cache file " + path.string());

    std::string magic;
    int version = 0;
    if (!(in >> magic >> version) || magic != kCacheMagic || version != kCacheVersion)
        throw CacheInvalidError("bad cache header in " + path.string());
    std::string kp, kw, kr, kc, ka;
    int fp = 0, fw = 0, fall = 0;
    std::size_t frows = 0, fcols = 0;
    if (!(in >> kp >> fp >> kw >> fw >> kr >> frows >> kc >> fcols >> ka >> fall) ||
        kp != "p" || kw != "w" || kr != "rows" || kc != "cols" || ka != "all")
        throw CacheInvalidError("bad cache header fields in " + path.string());
    if (fp != p || fw != w || frows != rows || fcols != cols || (fall != 0) != all_columns)
        throw CacheInvalidError("cache header mismatch in " + path.string());

    CycloMatrix values(rows, cols, Cyclotomic::zero(p));
    std::string tok;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            std::vector<Rat> coords(static_cast<std::size_t>(p - 1));
            Cyclotomic acc = Cyclotomic::zero(p);
            for (int k = 0; k < p - 1; ++k) {
                if (!(in >> tok)) throw CacheInvalidError("truncated cache " + path.string());
                Int c;
                if (mpz_set_str(c.get_mpz_t(), tok.c_str(), 10) != 0)
                    throw CacheInvalidError("corrupt cache entry in " + path.string());
                if (c != 0)
                    acc += Cyclotomic::root_power(p, k).scaled(Rat(c));
            }
            values(i, j) = acc;
        }
    return values;
}

}  // namespace

XMatrix x_matrix(int p, int w, const XOptions& options) {
    if (p < 2 || w < 0) throw ShapeError("x_matrix: bad parameters");

    XMatrix x;
    x.p = p;
    x.w = w;
    x.all_columns = options.all_columns;
    x.row_labels = enumerate_multipartitions(p, w);
    for (const auto& mp : x.row_labels)
        if (options.all_columns || mp.slot(0).empty()) x.col_labels.push_back(mp);
    for (const auto& mu : x.col_labels) x.col_norms.push_back(wreath_centralizer_order(mu, p));

    const std::size_t m = x.row_labels.size(), c = x.col_labels.size();

    bool loaded = false;
    if (!options.cache_dir.empty()) {
        try {
            x.values = read_cache(options.cache_dir, p, w, options.all_columns, m, c);
            loaded = true;
        } catch (const CacheInvalidError&) {
            loaded = false;  // recompute below
        }
    }

    if (!loaded) {
        x.values = CycloMatrix(m, c, Cyclotomic::zero(p));
        WreathCharEvaluator eval(p);
        std::vector<std::vector<std::pair<int, int>>> cycles;
        cycles.reserve(c);
        for (const auto& mu : x.col_labels) cycles.push_back(class_cycles(mu));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < c; ++j)
                x.values(i, j) = eval.value(x.row_labels[i], cycles[j]);
        if (!options.cache_dir.empty()) write_cache(options.cache_dir, x);
    }

    if (p == 2) {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (x.values(i, j).coordinates()[0].get_den() != 1)
                    throw ConsistencyError("x_matrix: p=2 entry is not an integer");
    }

    // Second orthogonality: X^t conj(X) = diag(centralizer orders), exactly.
    parallel_for(c, options.jobs, [&](std::size_t a) {
        for (std::size_t b = a; b < c; ++b) {
            Cyclotomic dot = Cyclotomic::zero(p);
            for (std::size_t r = 0; r < m; ++r) dot += x.values(r, a) * x.values(r, b).conj();
            if (a == b) {
                if (!dot.is_rational() || dot.to_rational() != Rat(x.col_norms[a]))
                    throw ConsistencyError("x_matrix: column norm violated at " +
                                           x.col_labels[a].to_string());
            } else if (!dot.is_zero()) {
                throw ConsistencyError("x_matrix: columns not orthogonal: " +
                                       x.col_labels[a].to_string() + " vs " +
                                       x.col_labels[b].to_string());
            }
        }
    });

    return x;
}

}  // namespace symblock
