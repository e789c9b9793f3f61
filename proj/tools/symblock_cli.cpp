// Command line front end: Scopes class listings, exact block invariants
// (M, M0, decomposition matrices), Morita class counting and the
// conjecture comparison grid.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "symblock/block.hpp"
#include "symblock/decomp.hpp"
#include "symblock/error.hpp"
#include "symblock/parallel.hpp"
#include "symblock/report.hpp"
#include "symblock/scopes.hpp"
#include "symblock/wreath.hpp"

namespace {

using namespace symblock;

std::string resolve_cache_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("SYMBLOCK_CACHE_DIR")) return env;
    return ".symblock-cache";
}

void print_labeled_matrix_json(std::ostream& os, const std::vector<std::string>& labels,
                               const RationalMatrix& m) {
    os << "{\n  \"labels\": [";
    for (std::size_t i = 0; i < labels.size(); ++i)
        os << (i ? "," : "") << '"' << labels[i] << '"';
    os << "],\n  \"matrix\": [\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << "    [";
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? "," : "") << '"' << to_string(m(i, j)) << '"';
        os << (i + 1 < m.rows() ? "],\n" : "]\n");
    }
    os << "  ]\n}\n";
}

void print_labeled_matrix_table(std::ostream& os, const std::vector<std::string>& labels,
                                const RationalMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << labels[i] << ":";
        for (std::size_t j = 0; j < m.cols(); ++j) os << ' ' << to_string(m(i, j));
        os << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Morita-equivalence invariants of symmetric group blocks"};
    app.require_subcommand(1);

    std::string cache_dir_flag;
    std::string golden_dir;
    std::string out_dir;
    std::string format = "table";
    int jobs = default_jobs();
    std::size_t mem_cap = 1 << 20;
    long size_cap = 0;
    app.add_option("--cache-dir", cache_dir_flag,
                   "character-column cache directory (default: $SYMBLOCK_CACHE_DIR or "
                   ".symblock-cache)");
    app.add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--mem-cap", mem_cap, "character cache entry cap");
    app.add_option("--size-cap", size_cap, "core enumeration size cap (0: p^2 w^2)");
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
    app.add_option("--golden", golden_dir, "compare reports byte-exactly against this directory");
    app.add_option("--out", out_dir, "write canonical report files into this directory");

    int p = 0, w = 0;
    std::string core_str = "()";
    std::string method_str = "M";
    int p_max = 3, w_max = 4;
    bool extended = false;
    bool diagnostics = false;

    auto* scopes_cmd = app.add_subcommand("scopes-list", "Scopes class representatives");
    scopes_cmd->add_option("p", p, "prime")->required();
    scopes_cmd->add_option("w", w, "weight")->required();

    auto* m_cmd = app.add_subcommand("m-matrix", "p-scalar product matrix M of a block");
    m_cmd->add_option("p", p, "prime")->required();
    m_cmd->add_option("w", w, "weight")->required();
    m_cmd->add_option("core", core_str, "p-core, e.g. \"(2,1)\"");

    auto* d_cmd = app.add_subcommand("decomp", "decomposition matrix of a block (0/1 regime)");
    d_cmd->add_option("p", p, "prime")->required();
    d_cmd->add_option("w", w, "weight")->required();
    d_cmd->add_option("core", core_str, "p-core, e.g. \"(2,1)\"");

    auto* count_cmd = app.add_subcommand("count", "count Morita classes of weight-w blocks");
    count_cmd->add_option("p", p, "prime")->required();
    count_cmd->add_option("w", w, "weight")->required();
    count_cmd->add_option("--method", method_str, "M | M0 | decomp")->required();

    auto* conj_cmd = app.add_subcommand("conjectures", "run the conjecture comparison grid");
    conj_cmd->add_option("--p-max", p_max, "largest prime");
    conj_cmd->add_option("--w-max", w_max, "largest weight");
    conj_cmd->add_flag("--extended", extended, "include the multi-hour cells");

    auto* eigen_cmd = app.add_subcommand("eigencheck",
                                         "integer eigenvalues of scaled M0 for 2-blocks");
    eigen_cmd->add_option("w", w, "weight")->required();
    eigen_cmd->add_flag("--diagnostics", diagnostics,
                        "report the diagonal order observation for 2-power weights");

    CLI11_PARSE(app, argc, argv);

    RunConfig config;
    config.cache_dir = resolve_cache_dir(cache_dir_flag);
    config.jobs = jobs;
    config.mem_cap = mem_cap;
    config.size_cap = size_cap;
    config.format = format == "json" ? RunConfig::Format::json : RunConfig::Format::table;

    XOptions xopts;
    xopts.cache_dir = config.cache_dir;
    xopts.jobs = config.jobs;

    try {
        if (scopes_cmd->parsed()) {
            auto reps = enumerate_representatives(p, w, config.size_cap);
            const auto pairing = conjugation_pairing(reps, p, w);
            if (config.format == RunConfig::Format::json) {
                std::cout << "{\n  \"p\": " << p << ", \"w\": " << w
                          << ", \"count\": " << reps.size()
                          << ", \"upper_bound\": " << pairing.upper_bound
                          << ",\n  \"representatives\": [";
                for (std::size_t i = 0; i < reps.size(); ++i)
                    std::cout << (i ? "," : "") << '"' << reps[i].representative.to_string()
                              << '"';
                std::cout << "]\n}\n";
            } else {
                std::cout << reps.size() << " Scopes classes for p=" << p << ", w=" << w
                          << " (upper bound after conjugation pairing: " << pairing.upper_bound
                          << ")\n";
                for (const auto& sc : reps) {
                    std::cout << sc.representative.to_string();
                    if (sc.partner < reps.size() &&
                        !(reps[sc.partner].representative == sc.representative))
                        std::cout << "  ~ " << reps[sc.partner].representative.to_string();
                    std::cout << '\n';
                }
            }
        } else if (m_cmd->parsed()) {
            const Block block = make_block(p, w, partition_from_string(core_str));
            const MoritaInvariant mi = m_matrix(block, xopts);
            std::vector<std::string> labels;
            for (const auto& rec : mi.records) labels.push_back(rec.la.to_string());
            if (config.format == RunConfig::Format::json)
                print_labeled_matrix_json(std::cout, labels, mi.m);
            else
                print_labeled_matrix_table(std::cout, labels, mi.m);
        } else if (d_cmd->parsed()) {
            const Block block = make_block(p, w, partition_from_string(core_str));
            const DecompositionMatrix q = decomposition_matrix(block, xopts);
            if (config.format == RunConfig::Format::json) {
                std::cout << "{\n  \"rows\": [";
                for (std::size_t i = 0; i < q.row_labels.size(); ++i)
                    std::cout << (i ? "," : "") << '"' << q.row_labels[i].to_string() << '"';
                std::cout << "],\n  \"cols\": [";
                for (std::size_t i = 0; i < q.col_labels.size(); ++i)
                    std::cout << (i ? "," : "") << '"' << q.col_labels[i].to_string() << '"';
                std::cout << "],\n  \"entries\": [\n";
                for (std::size_t i = 0; i < q.entries.rows(); ++i) {
                    std::cout << "    [";
                    for (std::size_t j = 0; j < q.entries.cols(); ++j)
                        std::cout << (j ? "," : "") << q.entries(i, j);
                    std::cout << (i + 1 < q.entries.rows() ? "],\n" : "]\n");
                }
                std::cout << "  ]\n}\n";
            } else {
                for (std::size_t i = 0; i < q.row_labels.size(); ++i)
                    std::cout << q.row_labels[i].to_string() << '\n';
                std::cout << q.dot_format();
            }
        } else if (count_cmd->parsed()) {
            const Method method = method_from_string(method_str);
            const EquivalenceReport report = count_morita(p, w, method, config);
            if (!out_dir.empty()) std::cout << "wrote " << write_report(report, out_dir) << '\n';
            if (!golden_dir.empty()) {
                const std::string diff = compare_with_golden(report, golden_dir);
                if (!diff.empty()) {
                    std::cerr << diff << '\n';
                    return 2;
                }
                std::cout << "golden match: " << report_file_name(report) << '\n';
            }
            std::cout << (config.format == RunConfig::Format::json
                              ? render_report_json(report)
                              : render_report_table(report));
        } else if (conj_cmd->parsed()) {
            const auto cells = conjecture_suite(p_max, w_max, config, extended);
            std::cout << (config.format == RunConfig::Format::json ? render_suite_json(cells)
                                                                   : render_suite_table(cells));
            for (const auto& cell : cells)
                if (!cell.pass) return 2;
        } else if (eigen_cmd->parsed()) {
            auto reps = enumerate_representatives(2, w, config.size_cap);
            const XMatrix x = x_matrix(2, w, xopts);
            for (const auto& sc : reps) {
                const Block block = make_block(2, w, sc.representative);
                const EigenM0 e = eigen_m0(block, x);
                std::cout << "core " << sc.representative.to_string() << ": scale "
                          << e.scale.get_str() << ", eigenvalues";
                for (const auto& r : e.roots) std::cout << ' ' << r.get_str();
                if (!e.residual.empty()) {
                    std::cout << ", residual factor of degree " << e.residual.size() - 1;
                }
                std::cout << '\n';
                if (diagnostics) {
                    const DeltaM0 dm = delta_m0(block, x);
                    // Observation (not a theorem): diagonal entries strictly
                    // decrease along the lexicographic order of the slot-0
                    // hooks above the split point.
                    bool monotone = true;
                    for (std::size_t i = 0; i + 1 < dm.delta_rows.size(); ++i) {
                        const auto& q1 = dm.delta_records[i].quotient.slot(0);
                        const auto& q2 = dm.delta_records[i + 1].quotient.slot(0);
                        if (q1.lex_after(q2) && !(dm.m0(i, i) > dm.m0(i + 1, i + 1)))
                            monotone = false;
                    }
                    std::cout << "  diagonal lex-monotonicity observation: "
                              << (monotone ? "holds" : "fails") << '\n';
                }
            }
        }
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 1;
    } catch (const UnsupportedRegimeError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
