// csadim: dimensions of semi-simple subalgebras of n x n matrix algebras.
//
// Exit codes: 0 success, 1 verification failures, 2 errors (resource, IO,
// invalid input).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <csadim/csadim.hpp>

namespace {

using json = nlohmann::ordered_json;
using namespace csadim;

enum class output_format { csv, json };

struct RunConfig {
    std::optional<unsigned> n_max;
    std::uint64_t memory_cap_bytes = default_memory_cap;
    unsigned oracle_cap = default_oracle_cap;
    std::string cache_path;
    output_format format = output_format::csv;
    unsigned n_min_theorem = default_theorem_n_min;
};

constexpr int exit_ok = 0;
constexpr int exit_failures = 1;
constexpr int exit_error = 2;

struct n_range {
    unsigned lo = 0;
    unsigned hi = 0;
};

n_range parse_range(const std::string& text) {
    n_range r;
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = static_cast<unsigned>(std::stoul(text));
        } else {
            r.lo = static_cast<unsigned>(std::stoul(text.substr(0, dots)));
            r.hi = static_cast<unsigned>(std::stoul(text.substr(dots + 2)));
        }
    } catch (const std::logic_error&) {
        throw std::invalid_argument("bad range '" + text + "', expected N or LO..HI");
    }
    if (r.lo > r.hi) throw std::invalid_argument("empty range '" + text + "'");
    return r;
}

std::string fixed6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

template <class Range>
std::string join(const Range& values, const char* sep = " ") {
    std::ostringstream os;
    bool first = true;
    for (const auto& v : values) {
        if (!first) os << sep;
        os << v;
        first = false;
    }
    return os.str();
}

/// Maximal runs of step-2 members written as "a..b"; singletons stay bare.
std::string run_length(const std::vector<std::uint64_t>& values) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < values.size();) {
        std::size_t k = i;
        while (k + 1 < values.size() && values[k + 1] == values[k] + 2) ++k;
        out.push_back(k == i ? std::to_string(values[i])
                             : std::to_string(values[i]) + ".." + std::to_string(values[k]));
        i = k + 1;
    }
    return join(out);
}

/// Loads the table from the cache when it is large enough, otherwise builds
/// it (and refreshes the cache, when one is configured).
DimTable acquire_table(const RunConfig& cfg, unsigned required) {
    const unsigned n_max = cfg.n_max.value_or(required);
    if (n_max < required)
        throw range_error("command needs n=" + std::to_string(required) + " but --n-max is " +
                          std::to_string(n_max));
    const bool have_cache = !cfg.cache_path.empty() && std::filesystem::exists(cfg.cache_path);
    if (have_cache) {
        DimTable t = load_table(cfg.cache_path, cfg.memory_cap_bytes);
        if (t.n_max() >= n_max) return t;
    }
    DimTable t = build_table(n_max, cfg.memory_cap_bytes);
    if (!cfg.cache_path.empty()) save_table(t, cfg.cache_path);
    return t;
}

void print_gap_header(std::ostream& out) { out << "n,gap,normalized,sign_13_4,sign_7_2\n"; }

void print_gap_row(std::ostream& out, const GapRecord& g) {
    out << g.n << ',' << g.gap << ',' << fixed6(g.normalized) << ',' << g.sign_13_4 << ','
        << g.sign_7_2 << '\n';
}

json gap_json(const GapRecord& g) {
    return {{"n", g.n},
            {"gap", g.gap},
            {"normalized", g.normalized},
            {"sign_13_4", g.sign_13_4},
            {"sign_7_2", g.sign_7_2}};
}

int cmd_dims(const RunConfig& cfg, unsigned n, bool intervals, bool oracle) {
    const auto values = oracle ? csa_dims_bruteforce(n, cfg.oracle_cap).values()
                               : acquire_table(cfg, n).csa(n).values();
    if (cfg.format == output_format::json) {
        std::cout << json{{"n", n}, {"dims", values}}.dump() << '\n';
    } else {
        std::cout << (intervals ? run_length(values) : join(values)) << '\n';
    }
    return exit_ok;
}

int cmd_check(const RunConfig& cfg, unsigned n, std::uint64_t dim) {
    const DimTable t = acquire_table(cfg, n);
    const bool member = is_csa_dim(t, n, dim);
    if (cfg.format == output_format::json)
        std::cout << json{{"n", n}, {"dim", dim}, {"member", member}}.dump() << '\n';
    else
        std::cout << (member ? "true" : "false") << '\n';
    return exit_ok;
}

int cmd_witness(const RunConfig& cfg, unsigned n, std::uint64_t dim) {
    const DimTable t = acquire_table(cfg, n);
    const auto w = witness_partition(t, n, dim);
    if (cfg.format == output_format::json) {
        json j{{"n", n}, {"dim", dim}, {"partition", nullptr}};
        if (w) j["partition"] = w->parts();
        std::cout << j.dump() << '\n';
    } else {
        std::cout << (w ? w->to_string() : "none") << '\n';
    }
    return exit_ok;
}

int cmd_greedy(const RunConfig& cfg, std::uint64_t two_m) {
    const GreedyDecomposition g = greedy_decomposition(two_m);
    if (cfg.format == output_format::json)
        std::cout << json{{"two_m", two_m}, {"terms", g.terms}, {"width", g.width}}.dump() << '\n';
    else
        std::cout << (g.terms.empty() ? "" : join(g.terms) + " ") << "| G=" << g.width << '\n';
    return exit_ok;
}

int cmd_width(const RunConfig& cfg, std::uint64_t two_m) {
    const std::uint64_t g = greedy_width(two_m);
    const DimTable t = acquire_table(cfg, static_cast<unsigned>(g));
    const unsigned exact = exact_width(two_m, t);
    if (cfg.format == output_format::json)
        std::cout << json{{"two_m", two_m}, {"exact", exact}, {"greedy", g}}.dump() << '\n';
    else
        std::cout << "exact=" << exact << " greedy=" << g << '\n';
    return exit_ok;
}

int cmd_verify_greedy(const RunConfig& cfg, std::uint64_t m_max) {
    const auto violations = verify_greedy_bound(m_max);
    std::vector<std::uint64_t> bound_failures;
    for (const auto& v : violations)
        if (!within_greedy_bound(v.greedy_width, v.two_m)) bound_failures.push_back(v.two_m);

    if (cfg.format == output_format::json) {
        json rows = json::array();
        for (const auto& v : violations)
            rows.push_back({{"two_m", v.two_m}, {"greedy_width", v.greedy_width}, {"bound", v.bound}});
        json summary{{"m_max", m_max},
                     {"violations", violations.size()},
                     {"last_violation", violations.empty() ? json(nullptr) : json(violations.back().two_m)},
                     {"max_bound_failures", bound_failures}};
        std::cout << json{{"kind", "greedy"}, {"violations", rows}, {"summary", summary}}.dump()
                  << '\n';
    } else {
        std::cout << "two_m,greedy_width,bound\n";
        for (const auto& v : violations)
            std::cout << v.two_m << ',' << v.greedy_width << ',' << fixed6(v.bound) << '\n';
    }
    std::cerr << "checked every even 2m <= " << 2 * m_max << ": " << violations.size()
              << " exceed (3/2)sqrt(2m)";
    if (!violations.empty()) std::cerr << ", last at 2m=" << violations.back().two_m;
    std::cerr << "; " << bound_failures.size() << " exceed max{(3/2)sqrt(2m), 38}\n";
    return bound_failures.empty() ? exit_ok : exit_failures;
}

template <class Verify>
int cmd_verify_range(const RunConfig& cfg, const char* kind, n_range range, unsigned n_min,
                     Verify verify) {
    const DimTable t = acquire_table(cfg, range.hi);
    json rows = json::array();
    if (cfg.format == output_format::csv) std::cout << "n,bound,checked,failures\n";
    std::uint64_t checked = 0;
    std::vector<unsigned> failing;
    for (unsigned n = range.lo; n <= range.hi; ++n) {
        const VerifyReport r = verify(n, t);
        checked += r.checked;
        if (!r.ok()) failing.push_back(n);
        if (cfg.format == output_format::json)
            rows.push_back({{"n", n}, {"bound", r.upper}, {"checked", r.checked}, {"failures", r.failures}});
        else
            std::cout << n << ',' << r.upper << ',' << r.checked << ',' << r.failures.size() << '\n';
    }
    const auto failing_from = [&](unsigned from) {
        std::size_t c = 0;
        for (unsigned n : failing) c += n >= from;
        return c;
    };
    if (cfg.format == output_format::json) {
        json summary{{"n_lo", range.lo},
                     {"n_hi", range.hi},
                     {"checked", checked},
                     {"failing_n", failing},
                     {"n_min", n_min}};
        std::cout << json{{"kind", kind}, {"rows", rows}, {"summary", summary}}.dump() << '\n';
    }
    std::cerr << kind << ": n in [" << range.lo << ", " << range.hi << "], " << checked
              << " values checked, " << failing.size() << " n with failures ("
              << failing_from(n_min) << " with n >= " << n_min;
    if (std::string_view(kind) == "theorem") std::cerr << ", " << failing_from(255) << " with n >= 255";
    std::cerr << ")\n";
    return failing_from(n_min) == 0 ? exit_ok : exit_failures;
}

int cmd_gap(const RunConfig& cfg, unsigned n) {
    const DimTable t = acquire_table(cfg, n);
    const GapRecord g = gap(n, t);
    if (cfg.format == output_format::json) {
        std::cout << gap_json(g).dump() << '\n';
    } else {
        print_gap_header(std::cout);
        print_gap_row(std::cout, g);
    }
    return exit_ok;
}

int cmd_sweep(const RunConfig& cfg, unsigned lo, unsigned hi) {
    if (lo > hi) throw std::invalid_argument("sweep needs LO <= HI");
    const DimTable t = acquire_table(cfg, hi);
    const GapSweep s = sweep_gap(lo, hi, t);
    if (cfg.format == output_format::json) {
        json rows = json::array();
        for (const auto& g : s.records) rows.push_back(gap_json(g));
        json summary{{"min_normalized", s.summary.min_normalized},
                     {"max_normalized", s.summary.max_normalized},
                     {"frac_13_4_positive", s.summary.frac_13_4_positive},
                     {"frac_7_2_negative", s.summary.frac_7_2_negative}};
        std::cout << json{{"rows", rows}, {"summary", summary}}.dump() << '\n';
    } else {
        print_gap_header(std::cout);
        for (const auto& g : s.records) print_gap_row(std::cout, g);
        // min_normalized,max_normalized,frac_13_4_positive,frac_7_2_negative
        std::cout << "summary," << fixed6(s.summary.min_normalized) << ','
                  << fixed6(s.summary.max_normalized) << ',' << fixed6(s.summary.frac_13_4_positive)
                  << ',' << fixed6(s.summary.frac_7_2_negative) << '\n';
    }
    return exit_ok;
}

int cmd_density(const RunConfig& cfg, unsigned n) {
    const DimTable t = acquire_table(cfg, n);
    const double d = density(n, t);
    const std::size_t members = t.cumulative(n).count();
    if (cfg.format == output_format::json) {
        std::cout << json{{"n", n}, {"members", members}, {"density", d}}.dump() << '\n';
    } else {
        std::cout << "n,members,density\n" << n << ',' << members << ',' << fixed6(d) << '\n';
    }
    return exit_ok;
}

int cmd_cache_save(const RunConfig& cfg, const std::string& path) {
    if (path.empty()) throw std::invalid_argument("cache save needs a path (argument or --cache)");
    if (!cfg.n_max) throw std::invalid_argument("cache save needs --n-max");
    const DimTable t = build_table(*cfg.n_max, cfg.memory_cap_bytes);
    save_table(t, path);
    std::cerr << "saved table n_max=" << t.n_max() << " to " << path << '\n';
    return exit_ok;
}

int cmd_cache_load(const RunConfig& cfg, const std::string& path) {
    if (path.empty()) throw std::invalid_argument("cache load needs a path (argument or --cache)");
    const DimTable t = load_table(path, cfg.memory_cap_bytes);
    if (cfg.format == output_format::json)
        std::cout << json{{"path", path}, {"n_max", t.n_max()}, {"valid", true}}.dump() << '\n';
    else
        std::cout << "n_max=" << t.n_max() << " valid\n";
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dimensions of semi-simple subalgebras of n x n matrix algebras"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string format = "csv";
    app.add_option("--n-max", cfg.n_max, "Table size (largest n)")->envname("CSADIM_N_MAX");
    app.add_option("--memory-cap", cfg.memory_cap_bytes, "Table memory cap in bytes")
        ->envname("CSADIM_MEMORY_CAP")
        ->check(CLI::PositiveNumber);
    app.add_option("--oracle-cap", cfg.oracle_cap, "Largest n for partition enumeration")
        ->envname("CSADIM_ORACLE_CAP")
        ->check(CLI::PositiveNumber);
    app.add_option("--cache", cfg.cache_path, "Table cache file")->envname("CSADIM_CACHE");
    app.add_option("--format", format, "Output format")
        ->envname("CSADIM_FORMAT")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--n-min-theorem", cfg.n_min_theorem,
                   "Smallest n at which theorem failures count as failures")
        ->envname("CSADIM_N_MIN_THEOREM");

    unsigned n = 0;
    std::uint64_t dim = 0;
    std::uint64_t two_m = 0;
    bool intervals = false;
    bool oracle = false;

    auto* dims = app.add_subcommand("dims", "Print C(n)");
    dims->add_option("n", n)->required();
    dims->add_flag("--intervals", intervals, "Compress step-2 runs as a..b");
    dims->add_flag("--oracle", oracle, "Enumerate partitions instead of using the table");

    auto* check = app.add_subcommand("check", "Is DIM in C(n)?");
    check->add_option("n", n)->required();
    check->add_option("dim", dim)->required();

    auto* witness = app.add_subcommand("witness", "Block sizes realising DIM in M_n");
    witness->add_option("n", n)->required();
    witness->add_option("dim", dim)->required();

    auto* greedy = app.add_subcommand("greedy", "Greedy decomposition of an even 2m");
    greedy->add_option("two_m", two_m)->required();

    auto* width = app.add_subcommand("width", "Exact and greedy width of an even 2m");
    width->add_option("two_m", two_m)->required();

    auto* verify = app.add_subcommand("verify", "Run a verification harness");
    verify->require_subcommand(1);
    std::uint64_t m_max = 3042;
    std::string theorem_range = "225..400";
    std::string corollary_range = "49..300";
    auto* v_greedy = verify->add_subcommand("greedy", "G(2m) <= max{(3/2)sqrt(2m), 38}");
    v_greedy->add_option("--m-max", m_max, "Check every even 2m <= 2*m_max")->capture_default_str();
    auto* v_theorem = verify->add_subcommand("theorem", "n + 2m in C(n) for 2m <= n^2 - (9/2)n^{3/2}");
    v_theorem->add_option("--n", theorem_range, "n range LO..HI")->capture_default_str();
    auto* v_corollary = verify->add_subcommand("corollary", "[0, n^2 - (9/2)n^{3/2} - 2n] within D(n)");
    v_corollary->add_option("--n", corollary_range, "n range LO..HI")->capture_default_str();

    auto* gap_cmd = app.add_subcommand("gap", "First integer not in D(n)");
    gap_cmd->add_option("n", n)->required();

    unsigned lo = 0;
    unsigned hi = 0;
    auto* sweep = app.add_subcommand("sweep", "gap(n) rows for LO <= n <= HI");
    sweep->add_option("lo", lo)->required();
    sweep->add_option("hi", hi)->required();

    auto* density_cmd = app.add_subcommand("density", "|D(n)| / (n^2 + 1)");
    density_cmd->add_option("n", n)->required();

    auto* cache = app.add_subcommand("cache", "Save or validate a table cache");
    cache->require_subcommand(1);
    std::string cache_file;
    auto* c_save = cache->add_subcommand("save", "Build a table to --n-max and save it");
    c_save->add_option("path", cache_file);
    auto* c_load = cache->add_subcommand("load", "Load and validate a cache file");
    c_load->add_option("path", cache_file);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_error;
    }
    cfg.format = format == "json" ? output_format::json : output_format::csv;
    if (cache_file.empty()) cache_file = cfg.cache_path;

    try {
        if (*dims) return cmd_dims(cfg, n, intervals, oracle);
        if (*check) return cmd_check(cfg, n, dim);
        if (*witness) return cmd_witness(cfg, n, dim);
        if (*greedy) return cmd_greedy(cfg, two_m);
        if (*width) return cmd_width(cfg, two_m);
        if (*v_greedy) return cmd_verify_greedy(cfg, m_max);
        if (*v_theorem)
            return cmd_verify_range(cfg, "theorem", parse_range(theorem_range), cfg.n_min_theorem,
                                    verify_theorem_main);
        if (*v_corollary)
            return cmd_verify_range(cfg, "corollary", parse_range(corollary_range),
                                    corollary_n_min, verify_corollary);
        if (*gap_cmd) return cmd_gap(cfg, n);
        if (*sweep) return cmd_sweep(cfg, lo, hi);
        if (*density_cmd) return cmd_density(cfg, n);
        if (*c_save) return cmd_cache_save(cfg, cache_file);
        if (*c_load) return cmd_cache_load(cfg, cache_file);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_error;
    }
    return exit_error;
}
