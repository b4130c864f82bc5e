// Command-line front end: pairing-matrix ranks, intersection constants,
// generated relations, Gorenstein verification and kernel statistics.
//
// Exit codes: 0 success, 1 invalid arguments, 2 computation failure,
// 3 result undetermined within the search budget.
#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tautring/gorenstein.hpp"
#include "tautring/kernel_stats.hpp"
#include "tautring/pairing_matrix.hpp"
#include "tautring/rank.hpp"
#include "tautring/relations.hpp"

using namespace tautring;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitComputation = 2;
constexpr int kExitUndetermined = 3;

struct Options {
    std::string format = "human";  // human | json | csv
    std::string cache;             // warm-start file for the constant tables
    unsigned budget = 4;
    unsigned threads = 1;
};

// "4" or "2..6" -> [lo, hi]; hi < lo encodes an empty range.
std::pair<unsigned, unsigned> parse_genus_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        unsigned g = static_cast<unsigned>(std::stoul(text));
        return {g, g};
    }
    unsigned lo = static_cast<unsigned>(std::stoul(text.substr(0, dots)));
    unsigned hi = static_cast<unsigned>(std::stoul(text.substr(dots + 2)));
    return {lo, hi};
}

void load_cache(LiuXuTable& table, const Options& opt) {
    if (opt.cache.empty()) return;
    if (std::filesystem::exists(opt.cache)) table.load(opt.cache);
}

void save_cache(const LiuXuTable& table, const Options& opt) {
    if (opt.cache.empty()) return;
    table.save(opt.cache);
}

int cmd_rank(const Options& opt, unsigned g, unsigned i) {
    if (g < 2 || i + 1 > g) {
        std::cerr << "rank: need genus >= 2 and 0 <= degree <= genus-1" << std::endl;
        return kExitUsage;
    }
    LiuXuTable table;
    load_cache(table, opt);
    auto q = build_q_matrix(table, g, i);
    auto report = rank_report(q);
    report.genus = g;
    report.degree = i;
    if (opt.format == "json") {
        std::cout << report.to_json() << std::endl;
    } else if (opt.format == "csv") {
        std::cout << "genus,degree,rows,cols,rank,backend\n"
                  << g << ',' << i << ',' << report.rows << ',' << report.cols << ','
                  << report.rank << ',' << report.backend << std::endl;
    } else {
        std::cout << report.rank << std::endl;
        std::cerr << "rank(Q_{" << g << ',' << i << "}) via " << report.backend << " on a "
                  << report.rows << 'x' << report.cols << " matrix" << std::endl;
    }
    save_cache(table, opt);
    return kExitOk;
}

int cmd_table(const Options& opt, const std::string& range) {
    auto [lo, hi] = parse_genus_range(range);
    if (hi >= lo && (lo < 2 || hi > 27)) {
        std::cerr << "table: genus range must lie within 2..27" << std::endl;
        return kExitUsage;
    }
    LiuXuTable table;
    load_cache(table, opt);

    struct Cell {
        unsigned g, i;
    };
    std::vector<Cell> cells;
    for (unsigned g = lo; g <= hi && hi >= lo; ++g)
        for (unsigned i = 0; i + 1 <= g; ++i) cells.push_back({g, i});

    std::vector<long> ranks(cells.size(), -1);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t c = next.fetch_add(1); c < cells.size(); c = next.fetch_add(1)) {
            try {
                auto q = build_q_matrix(table, cells[c].g, cells[c].i);
                ranks[c] = static_cast<long>(exact_rank(q.entries));
                std::cerr << "rank(Q_{" << cells[c].g << ',' << cells[c].i
                          << "}) = " << ranks[c] << std::endl;
            } catch (const std::exception& e) {
                std::cerr << "Q_{" << cells[c].g << ',' << cells[c].i << "} failed: " << e.what()
                          << std::endl;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < opt.threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    // regroup per genus
    std::vector<std::vector<long>> rows;
    std::size_t c = 0;
    for (unsigned g = lo; g <= hi && hi >= lo; ++g) {
        std::vector<long> row;
        for (unsigned i = 0; i + 1 <= g; ++i) row.push_back(ranks[c++]);
        rows.push_back(std::move(row));
    }

    if (opt.format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (std::size_t r = 0; r < rows.size(); ++r) {
            nlohmann::json row;
            row["genus"] = lo + r;
            row["ranks"] = rows[r];
            j.push_back(std::move(row));
        }
        std::cout << j.dump() << std::endl;
    } else if (opt.format == "csv") {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            std::cout << (lo + r);
            for (long v : rows[r]) std::cout << ',' << v;
            std::cout << '\n';
        }
    } else {
        for (const auto& row : rows) {
            for (std::size_t k = 0; k < row.size(); ++k) {
                if (k) std::cout << ' ';
                if (row[k] < 0)
                    std::cout << '?';
                else
                    std::cout << row[k];
            }
            std::cout << '\n';
        }
    }
    save_cache(table, opt);
    bool failed = std::any_of(ranks.begin(), ranks.end(), [](long v) { return v < 0; });
    return failed ? kExitComputation : kExitOk;
}

int cmd_rvalue(const Options& opt, unsigned g, const std::string& partition) {
    MultiIndex m = MultiIndex::decode(partition);
    if (g < 2 || m.degree() != g - 2) {
        std::cerr << "r-value: |m| = " << m.degree() << " but g-2 = "
                  << (g >= 2 ? static_cast<long>(g) - 2 : -1) << std::endl;
        return kExitUsage;
    }
    LiuXuTable table;
    load_cache(table, opt);
    Rational v = table.r_value(g, m);
    if (opt.format == "json") {
        nlohmann::json j{{"genus", g}, {"partition", m.encode()},
                         {"monomial", m.label()}, {"value", v.get_str()}};
        std::cout << j.dump() << std::endl;
    } else if (opt.format == "csv") {
        std::cout << "genus,partition,value\n" << g << ',' << m.encode() << ',' << v.get_str()
                  << std::endl;
    } else {
        std::cout << v.get_str() << std::endl;
    }
    save_cache(table, opt);
    return kExitOk;
}

// Reduced presentation: re-pivot the relation span preferring composite
// monomials (more class factors, kappa-heavy first), so products get solved
// in terms of the remaining classes.
std::vector<std::string> reduced_presentation(const RelationSpace& space) {
    auto factors = [](const CgMonomial& m) { return m.k_power + m.kappa.weight(); };
    std::vector<std::size_t> order(space.basis.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& ma = space.basis[a];
        const auto& mb = space.basis[b];
        if (factors(ma) != factors(mb)) return factors(ma) > factors(mb);
        return ma.kappa.weight() > mb.kappa.weight();
    });

    auto rows = space.rref;
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, column)
    std::size_t rank = 0;
    for (std::size_t col : order) {
        if (rank == rows.size()) break;
        std::size_t p = rank;
        while (p < rows.size() && rows[p][col] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[rank], rows[p]);
        Rational inv = Rational(1) / rows[rank][col];
        for (auto& e : rows[rank]) {
            e *= inv;
            e.canonicalize();
        }
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            Rational f = rows[r][col];
            for (std::size_t k = 0; k < rows[r].size(); ++k) {
                rows[r][k] -= f * rows[rank][k];
                rows[r][k].canonicalize();
            }
        }
        pivots.emplace_back(rank, col);
        ++rank;
    }

    std::vector<std::string> out;
    for (const auto& [r, col] : pivots) {
        std::ostringstream os;
        os << space.basis[col].label() << " = ";
        bool first = true;
        for (std::size_t k = 0; k < rows[r].size(); ++k) {
            if (k == col || rows[r][k] == 0) continue;
            Rational c = -rows[r][k];
            if (first) {
                if (c < 0) os << '-';
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            first = false;
            Rational a = abs(c);
            if (a != 1) os << a.get_str() << '*';
            os << space.basis[k].label();
        }
        if (first) os << '0';
        out.push_back(os.str());
    }
    return out;
}

int cmd_relations(const Options& opt, unsigned g, unsigned i) {
    if (g < 2 || i + 1 > g) {
        std::cerr << "relations: need genus >= 2 and 0 <= degree <= genus-1" << std::endl;
        return kExitUsage;
    }
    auto space = relation_space(g, i, opt.budget);
    auto reduced = reduced_presentation(space);
    if (opt.format == "json") {
        auto j = nlohmann::json::parse(space.to_json());
        j["reduced"] = reduced;
        j["budget_exhausted"] = space.budget_exhausted;
        std::cout << j.dump() << std::endl;
    } else if (opt.format == "csv") {
        for (const auto& r : space.rows) {
            std::cout << r.chern_index << ",\"" << r.monomial << '"';
            for (const auto& c : r.coeffs) std::cout << ',' << c.get_str();
            std::cout << '\n';
        }
    } else {
        for (const auto& r : space.rows)
            std::cout << "[j=" << r.chern_index << ", M=" << r.monomial << "] "
                      << r.pretty(space.basis) << '\n';
        std::cout << "rank " << space.rank() << '\n';
        if (!reduced.empty()) {
            std::cout << "reduced:" << '\n';
            for (const auto& line : reduced) std::cout << "  " << line << '\n';
        }
    }
    return space.budget_exhausted ? kExitUndetermined : kExitOk;
}

int cmd_gorenstein(const Options& opt, unsigned g) {
    if (g < 2) {
        std::cerr << "gorenstein: need genus >= 2" << std::endl;
        return kExitUsage;
    }
    LiuXuTable table;
    load_cache(table, opt);
    auto report = gorenstein_check(table, g, opt.budget);
    if (opt.format == "json") {
        std::cout << report.to_json() << std::endl;
    } else if (opt.format == "csv") {
        std::cout << "degree,monomials,lower,upper,matched\n";
        for (const auto& b : report.degrees)
            std::cout << b.degree << ',' << b.monomials << ',' << b.lower << ',' << b.upper << ','
                      << (b.matched ? 1 : 0) << '\n';
    } else {
        std::cout << "genus " << g << ": " << report.verdict_name() << '\n';
        std::cout << "degree  monomials  lower  upper\n";
        for (const auto& b : report.degrees)
            std::cout << "  " << b.degree << "\t" << b.monomials << "\t" << b.lower << "\t"
                      << b.upper << (b.matched ? "" : "  (gap)") << '\n';
        if (report.verdict == GorensteinReport::Verdict::Gorenstein) {
            std::cout << "dims";
            for (auto d : report.dimensions()) std::cout << ' ' << d;
            std::cout << '\n';
        }
    }
    save_cache(table, opt);
    return report.verdict == GorensteinReport::Verdict::Gorenstein ? kExitOk : kExitUndetermined;
}

int cmd_kernel(const Options& opt, int l_arg, int g_arg, int k_arg) {
    LiuXuTable table;
    load_cache(table, opt);
    nlohmann::json j;
    std::ostringstream human;
    if (l_arg >= 0) {
        unsigned l = static_cast<unsigned>(l_arg);
        if (l > 11) {
            std::cerr << "kernel: a-table only covers l <= 11" << std::endl;
            return kExitUsage;
        }
        unsigned k_a = l + 3, g_a = 2 * l + 8;   // smallest g with 2k <= g-2
        unsigned k_n = l + 2, g_n = 2 * l + 5;   // smallest g with 2k <= g-1
        std::size_t a = kernel_dimension_mg(table, g_a, k_a);
        auto stats = kernel_dimension_cg(table, g_n, k_n);
        std::size_t b = b_function(l);
        j = {{"l", l}, {"a", a}, {"b", b}, {"n", stats.n},
             {"a_at", {{"genus", g_a}, {"degree", k_a}}},
             {"n_at", {{"genus", g_n}, {"degree", k_n}}}};
        human << "a(" << l << ") = " << a << ", b(" << l << ") = " << b << ", n = " << stats.n
              << "  (a at g=" << g_a << " k=" << k_a << ", n at g=" << g_n << " k=" << k_n << ")";
        if (stats.n != b) human << "  ANOMALY";
    } else {
        if (g_arg < 2 || k_arg < 0 || k_arg + 1 > g_arg) {
            std::cerr << "kernel: need --l, or --genus and --degree" << std::endl;
            return kExitUsage;
        }
        auto stats = kernel_dimension_cg(table, static_cast<unsigned>(g_arg),
                                         static_cast<unsigned>(k_arg));
        j = {{"genus", stats.genus}, {"degree", stats.codegree}, {"l", stats.l},
             {"monomials", stats.monomial_count}, {"rank", stats.rank}, {"n", stats.n}};
        human << "n(" << stats.genus << ',' << stats.codegree << ") = " << stats.n;
        if (stats.l >= 0 && stats.l <= 11) {
            std::size_t b = b_function(static_cast<unsigned>(stats.l));
            j["b"] = b;
            human << "  (l = " << stats.l << ", b(" << stats.l << ") = " << b << ')';
            if (stats.n != b) {
                human << "  ANOMALY";
                j["anomaly"] = true;
            }
        }
    }
    if (opt.format == "json") {
        std::cout << j.dump() << std::endl;
    } else if (opt.format == "csv") {
        std::cout << j.dump() << std::endl;  // no natural grid; emit json
    } else {
        std::cout << human.str() << std::endl;
    }
    save_cache(table, opt);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact structure computations for tautological rings"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    Options opt;
    if (const char* env = std::getenv("TAUTRING_CACHE")) opt.cache = env;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"human", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--cache", opt.cache, "Constant-table cache file (default $TAUTRING_CACHE)");
    app.add_option("--budget", opt.budget, "Extra chern indices to try beyond the first")
        ->capture_default_str();
    app.add_option("--threads", opt.threads, "Worker threads for table sweeps")
        ->capture_default_str();

    unsigned genus = 0, degree = 0;
    std::string genus_range, partition;
    int l_arg = -1, g_arg = -1, k_arg = -1;

    auto* rank = app.add_subcommand("rank", "Rank of a single pairing matrix");
    rank->add_option("--genus", genus)->required();
    rank->add_option("--degree", degree)->required();

    auto* tab = app.add_subcommand("table", "Rank grid over a genus range (e.g. 2..6)");
    tab->add_option("--genus", genus_range)->required();

    auto* rv = app.add_subcommand("r-value", "Normalized top intersection number");
    rv->add_option("--genus", genus)->required();
    rv->add_option("--partition", partition, "Exponent vector, e.g. 2,0,1 for k1^2*k3")
        ->required();

    auto* rel = app.add_subcommand("relations", "Generated relations in a given degree");
    rel->add_option("--genus", genus)->required();
    rel->add_option("--degree", degree)->required();

    auto* gor = app.add_subcommand("gorenstein", "Match pairing-rank and relation bounds");
    gor->add_option("--genus", genus)->required();

    auto* ker = app.add_subcommand("kernel", "Kernel statistics a(l), b(l), n");
    ker->add_option("--l", l_arg);
    ker->add_option("--genus", g_arg);
    ker->add_option("--degree", k_arg);

    // let global flags (--format, --cache, ...) appear after the subcommand
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (rank->parsed()) return cmd_rank(opt, genus, degree);
        if (tab->parsed()) return cmd_table(opt, genus_range);
        if (rv->parsed()) return cmd_rvalue(opt, genus, partition);
        if (rel->parsed()) return cmd_relations(opt, genus, degree);
        if (gor->parsed()) return cmd_gorenstein(opt, genus);
        if (ker->parsed()) return cmd_kernel(opt, l_arg, g_arg, k_arg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return kExitComputation;
    }
    return kExitUsage;
}
