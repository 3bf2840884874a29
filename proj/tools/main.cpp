#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

#include "pairorbits/errors.hpp"
#include "pairorbits/io.hpp"
#include "pairorbits/oracle.hpp"
#include "pairorbits/quiver.hpp"
#include "pairorbits/refined.hpp"

using namespace pairorbits;

namespace {

enum class Format { text, json, csv, latex };

struct Common {
    bool json = false;
    bool csv = false;
    bool latex = false;
    std::optional<long> at;
    std::string cache_path;

    Format format() const {
        if (json + csv + latex > 1) throw InputError("choose at most one of --json, --csv, --latex");
        if (json) return Format::json;
        if (csv) return Format::csv;
        if (latex) return Format::latex;
        return Format::text;
    }
};

void add_common(CLI::App* cmd, Common& c, bool formats = true) {
    if (formats) {
        cmd->add_flag("--json", c.json, "JSON output");
        cmd->add_flag("--csv", c.csv, "CSV output");
        cmd->add_flag("--latex", c.latex, "LaTeX output");
    }
    cmd->add_option("--at", c.at, "also evaluate at q = Q");
    cmd->add_option("--cache", c.cache_path, "n_lambda cache file (JSON)");
}

// Owns the optional on-disk store for a command run.
class Store {
public:
    explicit Store(const std::string& path) {
        if (!path.empty()) store_.emplace(path);
    }
    NLambdaTable* table() { return store_ ? &store_->table() : &scratch_; }
    void flush() {
        if (store_) store_->save();
    }

private:
    std::optional<ResultStore> store_;
    NLambdaTable scratch_;
};

std::string show_ideal(const OrderIdeal& ideal) {
    const auto s = to_string(ideal);
    return s.empty() ? "{}" : "{" + s + "}";
}

std::string evaluated(const QPolynomial& p, const std::optional<long>& at) {
    return at ? to_string(p) + " = " + eval_int(p, *at).get_str() + " at q=" + std::to_string(*at) : to_string(p);
}

Json with_value(Json j, const QPolynomial& p, const std::optional<long>& at) {
    if (at) j["value"] = eval_int(p, *at).get_str();
    return j;
}

void run_nlambda(const std::string& text, const Common& c) {
    const auto fmt = c.format();
    const Partition lambda = parse_partition(text);
    Store store(c.cache_path);
    const QPolynomial n = n_lambda(lambda, store.table());
    store.flush();
    switch (fmt) {
        case Format::json: {
            Json j = to_json(lambda);
            j["n_lambda"] = with_value(to_json(n), n, c.at);
            std::cout << j.dump(2) << "\n";
            break;
        }
        case Format::csv:
            std::cout << "partition,n_lambda" << (c.at ? ",value" : "") << "\n"
                      << csv_escape(to_string(lambda)) << "," << csv_escape(to_string(n));
            if (c.at) std::cout << "," << eval_int(n, *c.at).get_str();
            std::cout << "\n";
            break;
        case Format::latex:
            std::cout << to_latex(n) << "\n";
            break;
        case Format::text:
            std::cout << to_string(n) << "\n";
            if (c.at) std::cout << eval_int(n, *c.at).get_str() << "\n";
            break;
    }
}

void run_table(long n, const Common& c) {
    const auto fmt = c.format();
    if (n < 1) throw InputError("table needs n >= 1");
    Store store(c.cache_path);
    const auto rows = n_lambda_rows(n, store.table());
    store.flush();
    switch (fmt) {
        case Format::json: {
            Json arr = Json::array();
            for (const auto& [lambda, p] : rows) {
                Json j = to_json(lambda);
                j["n_lambda"] = with_value(to_json(p), p, c.at);
                arr.push_back(j);
            }
            std::cout << arr.dump(2) << "\n";
            break;
        }
        case Format::csv:
            std::cout << "partition,n_lambda" << (c.at ? ",value" : "") << "\n";
            for (const auto& [lambda, p] : rows) {
                std::cout << csv_escape(to_string(lambda)) << "," << csv_escape(to_string(p));
                if (c.at) std::cout << "," << eval_int(p, *c.at).get_str();
                std::cout << "\n";
            }
            break;
        case Format::latex:
            std::cout << latex_table(rows);
            break;
        case Format::text: {
            std::size_t width = 0;
            for (const auto& row : rows) width = std::max(width, to_display_string(row.first).size());
            for (const auto& [lambda, p] : rows) {
                const auto label = to_display_string(lambda);
                std::cout << label << std::string(width - label.size() + 2, ' ') << evaluated(p, c.at) << "\n";
            }
            break;
        }
    }
}

void run_census(const std::string& text, const std::string& max_points, const Common& c) {
    const auto fmt = c.format();
    const Partition lambda = parse_partition(text);
    const OrderIdeal ideal = parse_ideal(max_points);
    lattice_for(lambda)->index_of(ideal);
    const Census census = orbit_census(lambda, ideal);
    QPolynomial total;
    for (const auto& [card, count] : census) total += count;

    switch (fmt) {
        case Format::json: {
            Json rows = Json::array();
            for (const auto& [card, count] : census) {
                rows.push_back({{"cardinality", to_json(card)}, {"count", with_value(to_json(count), count, c.at)}});
            }
            Json j = to_json(lambda);
            j["max_points"] = to_string(ideal);
            j["rows"] = rows;
            j["total"] = with_value(to_json(total), total, c.at);
            std::cout << j.dump(2) << "\n";
            break;
        }
        case Format::csv:
            std::cout << "cardinality,count\n";
            for (const auto& [card, count] : census) {
                std::cout << csv_escape(to_factored_string(card)) << "," << csv_escape(to_string(count)) << "\n";
            }
            std::cout << "total," << csv_escape(to_string(total)) << "\n";
            break;
        case Format::latex:
            std::cout << "\\begin{tabular}{ll}\nCardinality & Number of orbits \\\\\n\\hline\n";
            for (const auto& [card, count] : census) std::cout << "$" << to_latex(card) << "$ & $" << to_latex(count) << "$ \\\\\n";
            std::cout << "\\hline\nTotal & $" << to_latex(total) << "$ \\\\\n\\end{tabular}\n";
            break;
        case Format::text: {
            std::size_t width = 11;
            for (const auto& row : census) width = std::max(width, to_factored_string(row.first).size());
            auto line = [&](const std::string& a, const std::string& b) {
                std::cout << a << std::string(width - a.size() + 2, ' ') << b << "\n";
            };
            line("cardinality", "orbits");
            for (const auto& [card, count] : census) line(to_factored_string(card), evaluated(count, c.at));
            line("total", evaluated(total, c.at));
            break;
        }
    }
}

void run_refined(const std::string& text, bool force, const Common& c) {
    const auto fmt = c.format();
    const Partition lambda = parse_partition(text);
    if (lambda.weight() > 8 && !force) throw InputError("|lambda| > 8; pass --force to run anyway");
    const RefinedCounter counter(lambda);
    const auto matrix = counter.matrix();
    const auto& lat = counter.lattice();
    const std::size_t n = lat.size();

    std::vector<QPolynomial> row_sum(n), col_sum(n);
    QPolynomial grand;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < n; ++l) {
            row_sum[i] += matrix[i][l];
            col_sum[l] += matrix[i][l];
            grand += matrix[i][l];
        }
    }
    auto cell = [&](const QPolynomial& p) { return c.at ? eval_int(p, *c.at).get_str() : to_string(p); };

    switch (fmt) {
        case Format::json: {
            Json ideals = Json::array();
            for (const auto& ideal : lat.ideals()) ideals.push_back(to_string(ideal));
            Json rows = Json::array();
            for (const auto& r : matrix) {
                Json row = Json::array();
                for (const auto& p : r) row.push_back(with_value(to_json(p), p, c.at));
                rows.push_back(row);
            }
            Json j = to_json(lambda);
            j["ideals"] = ideals;
            j["matrix"] = rows;
            j["total"] = with_value(to_json(grand), grand, c.at);
            std::cout << j.dump(2) << "\n";
            break;
        }
        case Format::csv:
        case Format::latex:
        case Format::text: {
            const bool csv = fmt == Format::csv;
            const bool tex = fmt == Format::latex;
            const std::string sep = csv ? "," : tex ? " & " : " | ";
            const std::string end = tex ? " \\\\\n" : "\n";
            auto field = [&](const std::string& s) {
                return csv ? csv_escape(s) : tex ? "$" + s + "$" : s;
            };
            std::ostringstream os;
            os << field("I \\ L");
            for (std::size_t l = 0; l < n; ++l) os << sep << field(show_ideal(lat[l]));
            os << sep << field("sum") << end;
            for (std::size_t i = 0; i < n; ++i) {
                os << field(show_ideal(lat[i]));
                for (std::size_t l = 0; l < n; ++l) os << sep << field(tex ? to_latex(matrix[i][l]) : cell(matrix[i][l]));
                os << sep << field(tex ? to_latex(row_sum[i]) : cell(row_sum[i])) << end;
            }
            os << field("sum");
            for (std::size_t l = 0; l < n; ++l) os << sep << field(tex ? to_latex(col_sum[l]) : cell(col_sum[l]));
            os << sep << field(tex ? to_latex(grand) : cell(grand)) << end;
            if (tex) {
                std::cout << "\\begin{tabular}{" << std::string(n + 2, 'l') << "}\n" << os.str() << "\\end{tabular}\n";
            } else {
                std::cout << os.str();
            }
            if (fmt == Format::text) std::cout << "total: " << evaluated(grand, c.at) << "\n";
            break;
        }
    }
}

void run_quiver(long n, bool breakdown, const Common& c) {
    const auto fmt = c.format();
    if (n < 1) throw InputError("quiver needs n >= 1");
    Store store(c.cache_path);
    const auto parts = quiver_breakdown(n, store.table());
    const QPolynomial r = r_n1(n, store.table());
    store.flush();
    switch (fmt) {
        case Format::json: {
            Json j{{"n", n}, {"R", with_value(to_json(r), r, c.at)}};
            if (breakdown) {
                Json types = Json::array();
                for (const auto& t : parts) {
                    types.push_back({{"type", to_string(t.type)}, {"classes", to_json(t.classes)}, {"orbits", to_json(t.orbits)}});
                }
                j["types"] = types;
            }
            std::cout << j.dump(2) << "\n";
            break;
        }
        case Format::csv:
            std::cout << "type,classes,orbits\n";
            if (breakdown) {
                for (const auto& t : parts) {
                    std::cout << csv_escape(to_string(t.type)) << "," << csv_escape(to_string(t.classes)) << ","
                              << csv_escape(to_string(t.orbits)) << "\n";
                }
            }
            std::cout << "total,," << csv_escape(to_string(r)) << "\n";
            break;
        case Format::latex:
            std::cout << to_latex(r) << "\n";
            break;
        case Format::text:
            if (breakdown) {
                for (const auto& t : parts) {
                    std::cout << to_string(t.type) << "  c = " << to_string(t.classes) << "  n = " << to_string(t.orbits) << "\n";
                }
            }
            std::cout << evaluated(r, c.at) << "\n";
            break;
    }
}

int run_verify(const std::string& text, long p, bool full_endos, bool json) {
    oracle::VerifyOptions options;
    if (full_endos) options.mode = oracle::OrbitMode::full_endos;
    const auto report = oracle::verify(parse_partition(text), p, options);
    if (json) {
        std::cout << to_json(report).dump(2) << "\n";
    } else {
        for (const auto& check : report.checks) {
            std::cout << (check.pass ? "pass  " : "FAIL  ") << check.name << "\n";
            if (!check.pass || check.expected.size() < 60) {
                std::cout << "      expected " << check.expected << "\n      actual   " << check.actual << "\n";
            }
        }
    }
    return report.all_pass() ? 0 : 2;
}

void run_conjecture(long n_max, const std::string& cache_path) {
    if (n_max < 1) throw InputError("conjecture needs n_max >= 1");
    Store store(cache_path);
    long bad = 0;
    for (long n = 1; n <= n_max; ++n) {
        for (const auto& [lambda, p] : n_lambda_rows(n, store.table())) {
            if (!p.has_nonnegative_coefficients()) {
                ++bad;
                std::cout << "negative coefficient: (" << to_string(lambda) << ") " << to_string(p) << "\n";
            }
        }
    }
    store.flush();
    if (bad == 0) std::cout << "no negative coefficients\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Automorphism orbits on pairs in finite modules over a discrete valuation ring"};
    app.require_subcommand(1);

    Common common;
    std::string partition_text;
    std::string max_points;
    long number = 0;
    long prime = 0;
    bool force = false;
    bool breakdown = false;
    bool full_endos = false;

    auto* nl = app.add_subcommand("nlambda", "n_lambda(q) for one partition");
    nl->add_option("partition", partition_text, "e.g. \"5,4^2,2,1\"")->required();
    add_common(nl, common);

    auto* table = app.add_subcommand("table", "n_lambda(q) for every partition of n");
    table->add_option("n", number)->required();
    add_common(table, common);

    auto* census = app.add_subcommand("census", "orbit cardinalities and counts over M*_I");
    census->add_option("partition", partition_text)->required();
    census->add_option("--max", max_points, "max points of I, e.g. \"1:4,0:1\"")->required();
    add_common(census, common);

    auto* refined = app.add_subcommand("refined", "orbit counts in M*_I x M*_L");
    refined->add_option("partition", partition_text)->required();
    refined->add_flag("--force", force, "allow |lambda| > 8");
    add_common(refined, common);

    auto* quiver = app.add_subcommand("quiver", "R_{n,1}(q)");
    quiver->add_option("n", number)->required();
    quiver->add_flag("--breakdown", breakdown, "per-type contributions");
    add_common(quiver, common);

    auto* verify = app.add_subcommand("verify", "brute-force orbit check at q = p");
    verify->add_option("partition", partition_text)->required();
    verify->add_option("p", prime)->required();
    verify->add_flag("--full-endos", full_endos, "enumerate every automorphism");
    verify->add_flag("--json", common.json, "JSON report");

    auto* conj = app.add_subcommand("conjecture", "scan n_lambda for negative coefficients");
    conj->add_option("n_max", number)->required();
    conj->add_option("--cache", common.cache_path, "n_lambda cache file (JSON)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*nl) run_nlambda(partition_text, common);
        if (*table) run_table(number, common);
        if (*census) run_census(partition_text, max_points, common);
        if (*refined) run_refined(partition_text, force, common);
        if (*quiver) run_quiver(number, breakdown, common);
        if (*verify) return run_verify(partition_text, prime, full_endos, common.json);
        if (*conj) run_conjecture(number, common.cache_path);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ConsistencyError& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
