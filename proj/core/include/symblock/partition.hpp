#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "symblock/error.hpp"

namespace symblock {

/// Integer partition: weakly decreasing positive parts. The empty
/// partition is the unique partition of 0.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return i < length() ? parts_[i] : 0; }

    bool operator==(const Partition&) const = default;

    /// Descending lexicographic order: larger partitions first. Refines
    /// dominance for partitions of equal size, so it is the canonical
    /// row order everywhere in this library.
    bool lex_after(const Partition& other) const;

    std::string to_string() const;  // "(3,2,1)", "()" for empty

  private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Strictly decreasing first-column hook residues (bead positions).
struct BetaSet {
    std::vector<int> entries;  // strictly decreasing, >= 0
    int bead_count() const { return static_cast<int>(entries.size()); }
};

/// Tuple of exactly p partitions; the p-quotient and the wreath class
/// labels both live here.
class MultiPartition {
  public:
    MultiPartition() = default;
    explicit MultiPartition(std::vector<Partition> slots);

    const std::vector<Partition>& slots() const { return slots_; }
    const Partition& slot(int i) const { return slots_[static_cast<std::size_t>(i)]; }
    int slot_count() const { return static_cast<int>(slots_.size()); }
    int total() const { return total_; }

    bool operator==(const MultiPartition&) const = default;

    /// Canonical order: slot-size vector descending lexicographic, then
    /// slotwise descending lexicographic.
    bool canonical_before(const MultiPartition& other) const;

    std::string to_string() const;  // "((2),(),(1))"

  private:
    std::vector<Partition> slots_;
    int total_ = 0;
};

/// Result of splitting a partition into p-core + p-quotient.
struct CoreData {
    Partition core;
    MultiPartition quotient;
    int weight = 0;
    int sign = 1;  // (-1)^(total leg length of removed p-hooks)
};

/// All partitions of n, descending lexicographic, deterministic.
std::vector<Partition> enumerate_partitions(int n);

/// Number of partitions of n (cached Euler recurrence).
long partition_count(int n);

Partition conjugate(const Partition& p);

/// True if mu dominates la (same size; prefix sums of mu >= prefix sums of la).
bool dominates(const Partition& mu, const Partition& la);

/// No part repeated p or more times.
bool is_p_regular(const Partition& la, int p);

/// Beta-set with the minimal bead count t = l + s, t ≡ 0 (mod p).
BetaSet beta_set(const Partition& la, int p);

/// Beta-set with exactly t beads (t >= length).
BetaSet beta_set_with_beads(const Partition& la, int t);

/// Partition recovered from any strictly decreasing bead set.
Partition partition_from_beta(const BetaSet& beta);

/// p-core, p-quotient, weight and sign via abacus bead slides.
CoreData core_quotient_sign(const Partition& la, int p);

bool is_p_core(const Partition& la, int p);

/// Inverse of core_quotient_sign: unique partition with the given core
/// and quotient. Throws InvalidCoreError if core is not a p-core.
Partition from_core_quotient(const Partition& core, const MultiPartition& quotient, int p);

/// Hook lengths indexed by [row][column].
std::vector<std::vector<int>> hook_lengths(const Partition& la);

/// v_p of the degree of the irreducible character labelled by la,
/// computed from hook length valuations (no big factorials).
long degree_valuation(const Partition& la, int p);

std::string to_string(const Partition& p);
std::string to_string(const MultiPartition& mp);
Partition partition_from_string(const std::string& s);

}  // namespace symblock
