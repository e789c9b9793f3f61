#pragma once

#include <cstddef>
#include <list>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "symblock/numeric.hpp"
#include "symblock/partition.hpp"

namespace symblock {

/// |C_{S_n}(s_mu)| = prod k^(m_k) * m_k! over the part multiplicities.
Int centralizer_order_sym(const Partition& cycle_type);

/// Bounded memo for character values, LRU eviction, safe for concurrent
/// lookup/insert. Keys are flattened (lambda, remaining cycles) vectors.
class CharValueCache {
  public:
    explicit CharValueCache(std::size_t max_entries = 1 << 20) : cap_(max_entries) {}

    void set_capacity(std::size_t max_entries);
    std::size_t size() const;

    bool lookup(const std::vector<int>& key, Int& out);
    void insert(const std::vector<int>& key, const Int& value);

  private:
    struct VectorHash {
        std::size_t operator()(const std::vector<int>& v) const {
            std::size_t h = 1469598103934665603ull;
            for (int x : v) {
                h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
                h *= 1099511628211ull;
            }
            return h;
        }
    };
    using Entry = std::pair<std::vector<int>, Int>;

    mutable std::mutex mutex_;
    std::size_t cap_;
    std::list<Entry> order_;  // front = most recent
    std::unordered_map<std::vector<int>, std::list<Entry>::iterator, VectorHash> map_;
};

/// Process-wide cache used when mn_value is called without an explicit one.
CharValueCache& global_char_cache();

/// chi_lambda(s_mu) by the Murnaghan-Nakayama recursion (largest cycle
/// peeled first, rim hooks located on the beta set).
Int mn_value(const Partition& la, const Partition& mu, CharValueCache* cache = nullptr);

/// Degree chi_lambda(1) = n! / prod(hooks).
Int degree_hook(const Partition& la);

}  // namespace symblock
