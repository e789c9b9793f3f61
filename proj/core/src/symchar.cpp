#include "symblock/symchar.hpp"

#include <algorithm>
#include <map>

namespace symblock {

Int centralizer_order_sym(const Partition& cycle_type) {
    std::map<int, int> mult;
    for (int k : cycle_type.parts()) ++mult[k];
    Int out = 1;
    for (const auto& [k, m] : mult) {
        Int kk;
        mpz_ui_pow_ui(kk.get_mpz_t(), static_cast<unsigned long>(k),
                      static_cast<unsigned long>(m));
        out *= kk * factorial(m);
    }
    return out;
}

void CharValueCache::set_capacity(std::size_t max_entries) {
    std::lock_guard<std::mutex> lock(mutex_);
    cap_ = max_entries;
    while (map_.size() > cap_ && !order_.empty()) {
        map_.erase(order_.back().first);
        order_.pop_back();
    }
}

std::size_t CharValueCache::size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return map_.size();
}

bool CharValueCache::lookup(const std::vector<int>& key, Int& out) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = map_.find(key);
    if (it == map_.end()) return false;
    order_.splice(order_.begin(), order_, it->second);
    out = it->second->second;
    return true;
}

void CharValueCache::insert(const std::vector<int>& key, const Int& value) {
    std::lock_guard<std::mutex> lock(mutex_);
    if (map_.contains(key)) return;
    order_.emplace_front(key, value);
    map_[key] = order_.begin();
    while (map_.size() > cap_ && !order_.empty()) {
        map_.erase(order_.back().first);
        order_.pop_back();
    }
}

CharValueCache& global_char_cache() {
    static CharValueCache cache;
    return cache;
}

namespace {

std::vector<int> make_key(const std::vector<int>& la_parts, const std::vector<int>& cycles) {
    std::vector<int> key;
    key.reserve(la_parts.size() + cycles.size() + 1);
    key.insert(key.end(), la_parts.begin(), la_parts.end());
    key.push_back(-1);
    key.insert(key.end(), cycles.begin(), cycles.end());
    return key;
}

// la as sorted-descending parts, cycles sorted descending. Peels cycles
// front to back.
Int mn_rec(const std::vector<int>& la_parts, std::vector<int>& cycles, std::size_t depth,
           CharValueCache& cache) {
    if (depth == cycles.size()) return 1;  // la is empty here

    const std::vector<int> key = make_key(
        la_parts, std::vector<int>(cycles.begin() + static_cast<long>(depth), cycles.end()));
    Int memo;
    if (cache.lookup(key, memo)) return memo;

    const int s = cycles[depth];
    const int t = static_cast<int>(la_parts.size());
    std::vector<int> beta(la_parts.size());
    for (int i = 0; i < t; ++i)
        beta[static_cast<std::size_t>(i)] = la_parts[static_cast<std::size_t>(i)] + t - 1 - i;

    Int total = 0;
    for (int i = 0; i < t; ++i) {
        const int x = beta[static_cast<std::size_t>(i)];
        const int y = x - s;
        if (y < 0) continue;
        bool occupied = false;
        int legs = 0;
        for (int j = 0; j < t; ++j) {
            const int b = beta[static_cast<std::size_t>(j)];
            if (b == y) occupied = true;
            if (b > y && b < x) ++legs;
        }
        if (occupied) continue;
        std::vector<int> nb = beta;
        nb[static_cast<std::size_t>(i)] = y;
        std::sort(nb.begin(), nb.end(), std::greater<int>());
        std::vector<int> next_parts;
        for (int j = 0; j < t; ++j) {
            const int part = nb[static_cast<std::size_t>(j)] - (t - 1 - j);
            if (part > 0) next_parts.push_back(part);
        }
        const Int sub = mn_rec(next_parts, cycles, depth + 1, cache);
        total += (legs % 2 == 0) ? sub : -sub;
    }

    cache.insert(key, total);
    return total;
}

}  // namespace

Int mn_value(const Partition& la, const Partition& mu, CharValueCache* cache) {
    if (la.size() != mu.size())
        throw ShapeError("mn_value: partition and cycle type of different sizes");
    std::vector<int> cycles = mu.parts();  // already sorted descending
    return mn_rec(la.parts(), cycles, 0, cache ? *cache : global_char_cache());
}

Int degree_hook(const Partition& la) {
    Int out = factorial(la.size());
    for (const auto& row : hook_lengths(la))
        for (int h : row) mpz_divexact_ui(out.get_mpz_t(), out.get_mpz_t(),
                                          static_cast<unsigned long>(h));
    return out;
}

}  // namespace symblock
