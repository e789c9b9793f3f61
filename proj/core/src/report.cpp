#include "symblock/report.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "symblock/block.hpp"
#include "symblock/decomp.hpp"
#include "symblock/matequiv.hpp"
#include "symblock/parallel.hpp"
#include "symblock/scopes.hpp"
#include "symblock/symchar.hpp"

namespace symblock {

std::string method_name(Method m) {
    switch (m) {
        case Method::M: return "M";
        case Method::M0: return "M0";
        case Method::Decomp: return "decomp";
    }
    return "?";
}

Method method_from_string(const std::string& s) {
    if (s == "M") return Method::M;
    if (s == "M0") return Method::M0;
    if (s == "decomp") return Method::Decomp;
    throw UsageError("unknown method: " + s + " (expected M, M0 or decomp)");
}

namespace {

// Weight-3 blocks of p = 2 with cores (1) and (2,1) are Morita equivalent
// over F_2 (known from a direct basic-algebra computation) even though no
// permutation relates their M0 matrices. Applied as a documented constant.
constexpr int kExceptionP = 2;
constexpr int kExceptionW = 3;
const char* kExceptionNote =
    "weight-3 exception at p=2: the blocks with cores (1) and (2,1) are Morita "
    "equivalent over F_2 (documented constant, not recomputed); their classes are merged";

void check_method(int p, int w, Method method) {
    if (w < 1) throw UsageError("count_morita: w must be >= 1");
    if (method == Method::M0 && p != 2) throw UsageError("method M0 requires p = 2");
    if (method == Method::Decomp) {
        if (p == 2 || w > 3 || (w == 3 && p < 5))
            throw UsageError("method decomp requires odd p with w <= 2, or p >= 5 with w = 3");
    }
}

}  // namespace

EquivalenceReport count_morita(int p, int w, Method method, const RunConfig& config) {
    check_method(p, w, method);
    const auto t0 = std::chrono::steady_clock::now();
    global_char_cache().set_capacity(config.mem_cap);

    EquivalenceReport report;
    report.p = p;
    report.w = w;
    report.method = method;

    std::vector<ScopesClass> reps = enumerate_representatives(p, w, config.size_cap);
    const ConjugationPairing pairing = conjugation_pairing(reps, p, w);
    report.scopes_count = static_cast<long>(reps.size());
    if (Int(report.scopes_count) != scopes_class_count(p, w))
        throw ConsistencyError("count_morita: representative count mismatch");
    report.upper_bound = pairing.upper_bound;
    for (const auto& sc : reps) report.representatives.push_back(sc.representative.to_string());
    for (const auto& [a, b] : pairing.groups) {
        std::vector<std::string> group = {reps[a].representative.to_string()};
        if (b != a) group.push_back(reps[b].representative.to_string());
        report.pairing.push_back(std::move(group));
    }

    // One invariant per conjugate pair; the paired blocks are isomorphic.
    const std::size_t leaders = pairing.groups.size();
    std::vector<RationalMatrix> invariants(leaders);
    XOptions xopts;
    xopts.cache_dir = config.cache_dir;
    xopts.jobs = config.jobs;

    if (method == Method::M) {
        const WeightContext ctx = make_weight_context(p, w, xopts);
        parallel_for(leaders, config.jobs, [&](std::size_t i) {
            const Block b = make_block(p, w, reps[pairing.groups[i].first].representative);
            invariants[i] = m_matrix(b, ctx).m;
        });
    } else if (method == Method::M0) {
        const XMatrix x = x_matrix(p, w, xopts);
        parallel_for(leaders, config.jobs, [&](std::size_t i) {
            const Block b = make_block(p, w, reps[pairing.groups[i].first].representative);
            invariants[i] = delta_m0(b, x).m0;
        });
    } else {
        const WeightContext ctx = make_weight_context(p, w, xopts);
        parallel_for(leaders, config.jobs, [&](std::size_t i) {
            const Block b = make_block(p, w, reps[pairing.groups[i].first].representative);
            const DecompositionMatrix q = decomposition_matrix(b, ctx);
            RationalMatrix qr(q.entries.rows(), q.entries.cols());
            for (std::size_t r = 0; r < q.entries.rows(); ++r)
                for (std::size_t c = 0; c < q.entries.cols(); ++c) qr(r, c) = q.entries(r, c);
            invariants[i] = std::move(qr);
        });
    }

    const EquivMode mode =
        method == Method::Decomp ? EquivMode::Rectangular : EquivMode::Similarity;
    auto classes = classify(invariants, mode, config.jobs);

    // The (2,3) exception: merge the two classes known to be equivalent.
    if (p == kExceptionP && w == kExceptionW) {
        const Partition c1 = partition_from_string("(1)");
        const Partition c2 = partition_from_string("(2,1)");
        std::size_t g1 = leaders, g2 = leaders;
        for (std::size_t i = 0; i < leaders; ++i) {
            const auto& core = reps[pairing.groups[i].first].representative;
            if (core == c1) g1 = i;
            if (core == c2) g2 = i;
        }
        if (g1 == leaders || g2 == leaders)
            throw ConsistencyError("count_morita: expected weight-3 cores missing");
        std::size_t k1 = classes.size(), k2 = classes.size();
        for (std::size_t k = 0; k < classes.size(); ++k)
            for (std::size_t member : classes[k]) {
                if (member == g1) k1 = k;
                if (member == g2) k2 = k;
            }
        if (k1 != k2) {
            classes[k1].insert(classes[k1].end(), classes[k2].begin(), classes[k2].end());
            std::sort(classes[k1].begin(), classes[k1].end());
            classes.erase(classes.begin() + static_cast<long>(k2));
        }
        report.notes.push_back(kExceptionNote);
    }

    for (const auto& cls : classes) {
        std::vector<std::string> cores;
        for (std::size_t leader : cls) {
            const auto& [a, b] = pairing.groups[leader];
            cores.push_back(reps[a].representative.to_string());
            if (b != a) cores.push_back(reps[b].representative.to_string());
        }
        report.classes.push_back(std::move(cores));
    }
    report.lower_bound = static_cast<long>(classes.size());
    report.count_determined = report.lower_bound == report.upper_bound;
    report.comparisons = leaders;
    report.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

Int conjectured_count(int p, int w) {
    if (w == 0) return 1;
    if (p == 2) {
        if (w == 3) return 2;
        if (w > 3) return w;
        return morita_upper_bound(2, w);  // 1, 2 for w = 1, 2
    }
    if (p == 3) return Int((3L * w * w + 2 * w) / 4);
    if (w == 1) return 1;
    if (w == 2) {
        // binom(2p, p-1)/(2p) + binom(p, floor(p/2))/2
        return morita_upper_bound(p, 2);
    }
    if (w == 3 && p == 5) return 147;
    if (w == 3 && p == 7) return 3936;
    throw UsageError("no conjectured value recorded for p=" + std::to_string(p) +
                     ", w=" + std::to_string(w));
}

std::vector<ConjectureCell> conjecture_suite(int p_max, int w_max, const RunConfig& config,
                                             bool extended) {
    std::vector<ConjectureCell> cells;
    auto run_cell = [&](int p, int w, Method method, const std::string& note) {
        ConjectureCell cell;
        cell.p = p;
        cell.w = w;
        cell.method = method;
        cell.expected = conjectured_count(p, w);
        cell.note = note;
        const EquivalenceReport r = count_morita(p, w, method, config);
        cell.lower = r.lower_bound;
        cell.upper = r.upper_bound;
        if (p == kExceptionP && w == kExceptionW)
            cell.pass = (cell.lower == 2 && cell.upper == 3);
        else
            cell.pass = (cell.lower == cell.upper && Int(cell.lower) == cell.expected);
        cells.push_back(std::move(cell));
    };

    if (p_max >= 2)
        for (int w = 1; w <= w_max; ++w)
            run_cell(2, w, Method::M0, w == kExceptionW ? "documented exception" : "");
    if (p_max >= 3)
        for (int w = 1; w <= w_max; ++w) run_cell(3, w, Method::M, "");
    for (int p : {5, 7, 11}) {
        if (p > p_max) break;
        if (p == 11 && !extended) continue;  // about a day of computation
        if (w_max >= 1) run_cell(p, 1, Method::Decomp, "");
        if (w_max >= 2) run_cell(p, 2, Method::Decomp, "");
        if (w_max >= 3 && extended && p <= 7) run_cell(p, 3, Method::Decomp, "extended");
    }
    return cells;
}

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

void json_string_list(std::ostringstream& os, const std::vector<std::string>& items) {
    os << '[';
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) os << ',';
        os << '"' << json_escape(items[i]) << '"';
    }
    os << ']';
}

void json_string_list_list(std::ostringstream& os,
                           const std::vector<std::vector<std::string>>& items) {
    os << '[';
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) os << ',';
        json_string_list(os, items[i]);
    }
    os << ']';
}

}  // namespace

std::string render_report_json(const EquivalenceReport& report, bool include_volatile) {
    std::ostringstream os;
    os << "{\n";
    os << "  \"p\": " << report.p << ",\n";
    os << "  \"w\": " << report.w << ",\n";
    os << "  \"method\": \"" << method_name(report.method) << "\",\n";
    os << "  \"scopes_count\": " << report.scopes_count << ",\n";
    os << "  \"upper_bound\": " << report.upper_bound << ",\n";
    os << "  \"lower_bound\": " << report.lower_bound << ",\n";
    os << "  \"count_determined\": " << (report.count_determined ? "true" : "false") << ",\n";
    os << "  \"representatives\": ";
    json_string_list(os, report.representatives);
    os << ",\n  \"pairing\": ";
    json_string_list_list(os, report.pairing);
    os << ",\n  \"classes\": ";
    json_string_list_list(os, report.classes);
    os << ",\n  \"notes\": ";
    json_string_list(os, report.notes);
    if (include_volatile) {
        os << ",\n  \"volatile\": { \"seconds\": " << report.seconds
           << ", \"comparisons\": " << report.comparisons << " }";
    }
    os << "\n}\n";
    return os.str();
}

std::string render_report_table(const EquivalenceReport& report) {
    std::ostringstream os;
    os << "p=" << report.p << " w=" << report.w << " method=" << method_name(report.method)
       << "\n";
    os << "scopes classes: " << report.scopes_count << "\n";
    os << "upper bound (conjugation pairing): " << report.upper_bound << "\n";
    os << "lower bound (distinct invariants): " << report.lower_bound << "\n";
    if (report.count_determined)
        os << "count determined: " << report.lower_bound << "\n";
    else
        os << "count in interval [" << report.lower_bound << ", " << report.upper_bound << "]\n";
    for (const auto& note : report.notes) os << "note: " << note << "\n";
    os << "classes:\n";
    for (const auto& cls : report.classes) {
        os << "  {";
        for (std::size_t i = 0; i < cls.size(); ++i) os << (i ? ", " : " ") << cls[i];
        os << " }\n";
    }
    return os.str();
}

std::string render_suite_table(const std::vector<ConjectureCell>& cells) {
    std::ostringstream os;
    os << "p\tw\tmethod\texpected\tlower\tupper\tresult\n";
    for (const auto& c : cells) {
        os << c.p << '\t' << c.w << '\t' << method_name(c.method) << '\t' << c.expected.get_str()
           << '\t' << c.lower << '\t' << c.upper << '\t' << (c.pass ? "PASS" : "FAIL");
        if (!c.note.empty()) os << "\t(" << c.note << ")";
        os << '\n';
    }
    return os.str();
}

std::string render_suite_json(const std::vector<ConjectureCell>& cells) {
    std::ostringstream os;
    os << "[\n";
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const auto& c = cells[i];
        os << "  {\"p\": " << c.p << ", \"w\": " << c.w << ", \"method\": \""
           << method_name(c.method) << "\", \"expected\": \"" << c.expected.get_str()
           << "\", \"lower\": " << c.lower << ", \"upper\": " << c.upper << ", \"pass\": "
           << (c.pass ? "true" : "false") << ", \"note\": \"" << json_escape(c.note) << "\"}";
        if (i + 1 < cells.size()) os << ',';
        os << '\n';
    }
    os << "]\n";
    return os.str();
}

std::string report_file_name(const EquivalenceReport& report) {
    std::ostringstream os;
    os << "count_p" << report.p << "_w" << report.w << "_" << method_name(report.method)
       << ".json";
    return os.str();
}

std::string write_report(const EquivalenceReport& report, const std::string& dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    const fs::path path = fs::path(dir) / report_file_name(report);
    std::ofstream out(path);
    if (!out) throw IoError("cannot write report to " + path.string());
    out << render_report_json(report);
    if (!out) throw IoError("failed writing report to " + path.string());
    return path.string();
}

std::string compare_with_golden(const EquivalenceReport& report, const std::string& dir) {
    namespace fs = std::filesystem;
    const fs::path path = fs::path(dir) / report_file_name(report);
    std::ifstream in(path, std::ios::binary);
    if (!in) return "golden file missing: " + path.string();
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string expected = buf.str();
    const std::string actual = render_report_json(report);
    if (expected != actual) return "golden mismatch against " + path.string();
    return "";
}

}  // namespace symblock
