#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lyubeznik/module_ops.hpp"
#include "lyubeznik/parse.hpp"
#include "lyubeznik/pipeline.hpp"
#include "lyubeznik/problem.hpp"

namespace lyz {

namespace {

using json = nlohmann::ordered_json;

struct CliArgs {
    std::string mode;
    std::string file;
    std::size_t i = 0;
    std::size_t j = 0;
    std::uint64_t seed = 0;
    std::size_t max_candidates = 1000;
    unsigned t_max = 20;
    std::string format = "pretty";
    bool verbose = false;
};

// line:col (1-based) for a byte offset
std::string position(const std::string& text, std::size_t offset) {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k < offset && k < text.size(); ++k) {
        if (text[k] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return std::to_string(line) + ":" + std::to_string(col);
}

std::uint64_t whole_ms(double ms) {
    return std::uint64_t(std::llround(ms));
}

// Column steps are shared by all cells of a column, so count them once per j.
std::map<std::string, double> total_timings(const std::vector<LambdaTrace>& traces) {
    std::map<std::string, double> out;
    std::set<std::size_t> seen;
    for (const auto& t : traces) {
        for (const auto& [step, ms] : t.timings_ms) {
            const bool column_step = step != "local_setup" && step != "local_root" && step != "socle";
            if (column_step && seen.count(t.j)) {
                continue;
            }
            out[step] += ms;
        }
        seen.insert(t.j);
    }
    return out;
}

void print_trace(std::ostream& err, const LambdaTrace& t) {
    err << "lambda(" << t.i << "," << t.j << ") = " << t.value;
    if (t.ext_zero) {
        err << "  [Ext vanishes]\n";
        return;
    }
    err << "  root index " << t.root_index << ", local root index " << t.local_root_index << ", socle "
        << t.socle_check.first << "/" << t.socle_check.second << "\n";
    if (!t.g.empty()) {
        err << "  g =";
        for (std::size_t k = 0; k < t.g.size(); ++k) {
            err << (k ? ", " : " ") << t.g[k];
        }
        err << "\n";
    }
    for (const auto& [step, ms] : t.timings_ms) {
        err << "  " << step << ": " << std::fixed << std::setprecision(1) << ms << " ms\n";
    }
    err.unsetf(std::ios::floatfield);
}

void print_table(std::ostream& out, const LyubeznikTable& t) {
    std::size_t w = 1;
    for (const auto& row : t.entries) {
        for (auto v : row) {
            w = std::max(w, std::to_string(v).size());
        }
    }
    w = std::max(w, std::to_string(t.d).size() + 2) + 2;
    const std::size_t lw = std::to_string(t.d).size() + 2;
    out << "d = " << t.d << "\n";
    out << std::string(lw, ' ');
    for (std::size_t j = 0; j <= t.d; ++j) {
        out << std::setw(int(w)) << ("j=" + std::to_string(j));
    }
    out << "\n";
    for (std::size_t i = 0; i <= t.d; ++i) {
        out << std::left << std::setw(int(lw)) << ("i=" + std::to_string(i)) << std::right;
        std::string line;
        for (std::size_t j = 0; j <= t.d; ++j) {
            std::ostringstream cell;
            cell << std::setw(int(w));
            if (j < i) {
                cell << "";
            } else {
                cell << t.at(i, j);
            }
            line += cell.str();
        }
        while (!line.empty() && line.back() == ' ') {
            line.pop_back();
        }
        out << line << "\n";
    }
}

json timings_json(const std::map<std::string, double>& timings) {
    json j = json::object();
    for (const auto& [step, ms] : timings) {
        j[step] = whole_ms(ms);
    }
    return j;
}

int run(const CliArgs& args, std::ostream& out, std::ostream& err) {
    std::ifstream in(args.file, std::ios::binary);
    if (!in) {
        err << "error: cannot read " << args.file << "\n";
        return 2;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();

    Problem problem = [&] {
        try {
            return build_problem(parse_problem(text));
        } catch (const ParseError& e) {
            err << args.file << ":" << position(text, e.offset()) << ": error: " << e.message() << "\n";
            throw;
        }
    }();
    const RingPtr& ring = problem.ring;
    validate_ideal(problem.ideal);

    PipelineOptions opts;
    opts.seed = args.seed;
    opts.max_candidates = args.max_candidates;
    opts.t_max = args.t_max;

    const auto start = std::chrono::steady_clock::now();
    json doc;
    doc["p"] = ring->characteristic();
    doc["n"] = ring->nvars();
    if (args.mode == "table") {
        auto [table, traces] = lyubeznik_table(problem.ideal, opts);
        const double total = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        auto timings = total_timings(traces);
        timings["total"] = total;
        if (args.verbose) {
            for (const auto& t : traces) {
                print_trace(err, t);
            }
            for (const auto& [step, ms] : timings) {
                err << step << ": " << std::fixed << std::setprecision(1) << ms << " ms\n";
            }
        }
        if (args.format == "json") {
            doc["d"] = table.d;
            doc["table"] = table.entries;
            doc["timings_ms"] = args.verbose ? timings_json(timings) : json::object();
            doc["seed"] = args.seed;
            json lambda = json::object();
            for (std::size_t i = 0; i <= table.d; ++i) {
                for (std::size_t j = i; j <= table.d; ++j) {
                    lambda[std::to_string(i) + "," + std::to_string(j)] = table.at(i, j);
                }
            }
            doc["lambda"] = lambda;
            out << doc.dump(2) << "\n";
        } else {
            print_table(out, table);
        }
        return 0;
    }

    const std::size_t d = krull_dim(problem.ideal);
    auto [value, trace] = lyubeznik_number(args.i, args.j, problem.ideal, opts);
    const double total = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    auto timings = trace.timings_ms;
    timings["total"] = total;
    if (args.verbose) {
        print_trace(err, trace);
        err << "total: " << std::fixed << std::setprecision(1) << total << " ms\n";
    }
    if (args.format == "json") {
        doc["d"] = d;
        doc["i"] = args.i;
        doc["j"] = args.j;
        doc["value"] = value;
        doc["timings_ms"] = args.verbose ? timings_json(timings) : json::object();
        doc["seed"] = args.seed;
        doc["lambda"] = json{{std::to_string(args.i) + "," + std::to_string(args.j), value}};
        out << doc.dump(2) << "\n";
    } else {
        out << value << "\n";
    }
    return 0;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Lyubeznik numbers of R_m/cR_m over F_p[X_1..X_n]", "lyubeznik"};
    app.require_subcommand(1);
    CliArgs args;

    auto common = [&](CLI::App* sub) {
        sub->add_option("file", args.file, "problem file")->required();
        sub->add_option("--seed", args.seed, "seed for the filter-regular search");
        sub->add_option("--max-candidates", args.max_candidates, "candidate budget per sequence element");
        sub->add_option("--t-max", args.t_max, "bound on root stabilization index");
        sub->add_option("--format", args.format, "output format")->check(CLI::IsMember({"pretty", "json"}));
        sub->add_flag("--verbose", args.verbose, "per-step timings on standard error");
    };
    CLI::App* table = app.add_subcommand("table", "full table lambda_{i,j}, 0 <= i <= j <= d");
    common(table);
    CLI::App* number = app.add_subcommand("number", "a single lambda_{i,j}");
    common(number);
    number->add_option("--i", args.i, "row index")->required();
    number->add_option("--j", args.j, "column index")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    args.mode = table->parsed() ? "table" : "number";

    try {
        return run(args, out, err);
    } catch (const ParseError&) {
        return 2;
    } catch (const InvalidProblem& e) {
        err << "error: invalid problem: " << e.what() << "\n";
        return 4;
    } catch (const ResourceLimit& e) {
        err << "error: resource limit: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace lyz
