#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "symblock/numeric.hpp"

namespace symblock {

enum class Method { M, M0, Decomp };

std::string method_name(Method m);
Method method_from_string(const std::string& s);

struct RunConfig {
    std::string cache_dir;        // empty: no disk cache
    int jobs = 1;
    std::size_t mem_cap = 1 << 20;  // character-cache entries
    long size_cap = 0;              // 0: default p^2 w^2
    int oracle_cap = 12;
    enum class Format { json, table } format = Format::table;
};

struct EquivalenceReport {
    int p = 0;
    int w = 0;
    Method method = Method::M;
    long scopes_count = 0;
    long upper_bound = 0;
    long lower_bound = 0;
    bool count_determined = false;
    std::vector<std::string> representatives;  // cores, enumeration order
    std::vector<std::vector<std::string>> pairing;  // conjugate core groups
    std::vector<std::vector<std::string>> classes;  // cores per equivalence class
    std::vector<std::string> notes;

    // Volatile diagnostics, excluded from the canonical serialization.
    double seconds = 0.0;
    std::size_t comparisons = 0;
};

/// Scopes representatives -> conjugation pairing (upper bound) -> one
/// invariant per pair representative -> classification (lower bound).
EquivalenceReport count_morita(int p, int w, Method method, const RunConfig& config);

struct ConjectureCell {
    int p = 0;
    int w = 0;
    Method method = Method::M;
    Int expected;
    long lower = 0;
    long upper = 0;
    bool pass = false;
    std::string note;
};

/// Conjectured class count for (p, w) in the regimes this library covers;
/// the weight-3 case of p = 2 carries the documented exception value.
Int conjectured_count(int p, int w);

/// Runs count_morita over the grid of supported (p, w) cells up to the
/// given limits and compares with the conjectured values. `extended`
/// additionally enables the multi-hour cells (weight 3 for p >= 5, p = 11).
std::vector<ConjectureCell> conjecture_suite(int p_max, int w_max, const RunConfig& config,
                                             bool extended = false);

/// Canonical JSON; stable key order, no volatile fields unless asked.
std::string render_report_json(const EquivalenceReport& report, bool include_volatile = false);
std::string render_report_table(const EquivalenceReport& report);
std::string render_suite_table(const std::vector<ConjectureCell>& cells);
std::string render_suite_json(const std::vector<ConjectureCell>& cells);

/// Canonical file name for a report inside an output/golden directory.
std::string report_file_name(const EquivalenceReport& report);

/// Writes the canonical JSON to dir/report_file_name(). Returns the path.
std::string write_report(const EquivalenceReport& report, const std::string& dir);

/// Byte-exact comparison against dir/report_file_name(). Returns an empty
/// string on match, a diagnostic otherwise.
std::string compare_with_golden(const EquivalenceReport& report, const std::string& dir);

}  // namespace symblock
