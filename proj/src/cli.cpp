#include "dynpal/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>

#include "dynpal/bench.hpp"
#include "dynpal/oracle.hpp"
#include "dynpal/palindrome_index.hpp"

namespace dynpal::cli {

namespace {

struct Command {
    char kind = 'Q';  // 'S', 'Q' or 'C'
    Pos pos = 0;
    unsigned char symbol = 0;
    std::size_t line = 0;
};

struct Failure {
    int code;
    std::string message;
};

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) return std::nullopt;
    return data;
}

std::vector<Command> parse_trace(const std::string& data) {
    std::vector<Command> out;
    std::istringstream in(data);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string op;
        if (!(ls >> op)) continue;
        Command c;
        c.line = lineno;
        std::string extra;
        if (op == "Q" || op == "C") {
            c.kind = op[0];
        } else if (op == "S") {
            c.kind = 'S';
            std::string pos, sym;
            if (!(ls >> pos >> sym) || sym.size() != 1 || pos.empty() ||
                !std::all_of(pos.begin(), pos.end(), [](char ch) { return ch >= '0' && ch <= '9'; }) ||
                pos.size() > 18) {
                throw Failure{kExitUsage, "trace line " + std::to_string(lineno) + ": expected 'S <pos> <symbol>'"};
            }
            c.pos = std::stoll(pos);
            c.symbol = static_cast<unsigned char>(sym[0]);
        } else {
            throw Failure{kExitUsage, "trace line " + std::to_string(lineno) + ": unknown command '" + op + "'"};
        }
        if (ls >> extra) {
            throw Failure{kExitUsage, "trace line " + std::to_string(lineno) + ": trailing input '" + extra + "'"};
        }
        out.push_back(c);
    }
    return out;
}

void check_range(const Command& c, Pos n) {
    if (c.pos < 1 || c.pos > n) {
        throw Failure{kExitRange, "trace line " + std::to_string(c.line) + ": position " + std::to_string(c.pos) +
                                      " outside [1.." + std::to_string(n) + "]"};
    }
}

void print_longest(std::ostream& out, Longest l) { out << l.start << ' ' << l.length << '\n'; }

// Empty string when the index agrees with the oracle.
std::string compare_with_oracle(const PalindromeIndex& idx, bool full) {
    const std::string_view s = idx.text().str();
    const Longest want = oracle::longest(s);
    const Longest got = idx.longest();
    if (!(want == got)) {
        return "longest mismatch: index " + std::to_string(got.start) + " " + std::to_string(got.length) +
               ", oracle " + std::to_string(want.start) + " " + std::to_string(want.length);
    }
    if (full) {
        try {
            idx.check_invariants();
        } catch (const InvariantError& e) {
            return std::string("invariant violated: ") + e.what();
        }
        if (idx.all_maximal_palindromes() != oracle::all_maximal_palindromes_fast(s).maximal) {
            return "maximal palindrome sets differ";
        }
    }
    return {};
}

int replay(const std::string& text, const std::vector<Command>& trace, std::uint64_t seed, bool verify,
           std::ostream& out, std::ostream& err) {
    PalindromeIndex idx = PalindromeIndex::build(text, {.seed = seed, .verify = verify});
    const Pos n = static_cast<Pos>(text.size());
    for (const Command& c : trace) {
        if (c.kind == 'S') {
            check_range(c, n);
            idx.substitute(c.pos, c.symbol);
        } else if (c.kind == 'Q') {
            print_longest(out, idx.longest());
        }
        if (verify || c.kind == 'C') {
            const std::string problem = compare_with_oracle(idx, c.kind == 'C');
            if (!problem.empty()) {
                out.flush();
                err << "trace line " << c.line << ": " << problem << '\n' << idx.dump();
                return kExitMismatch;
            }
        }
        if (c.kind == 'C') out << "ok\n";
    }
    return kExitOk;
}

int bench(const std::string& text, const std::vector<Command>& trace, std::uint64_t seed, BenchMode mode,
          const std::string& csv, std::ostream& out) {
    std::vector<Edit> edits;
    for (const Command& c : trace) {
        if (c.kind != 'S') continue;
        check_range(c, static_cast<Pos>(text.size()));
        edits.push_back({c.pos, c.symbol});
    }
    const BenchResult r = run_bench(text, edits, mode, seed);
    if (csv.empty()) {
        out << kBenchCsvHeader << '\n' << csv_row(r) << '\n';
        return kExitOk;
    }
    std::ifstream probe(csv);
    const bool fresh = !probe || probe.peek() == std::ifstream::traits_type::eof();
    probe.close();
    std::ofstream f(csv, std::ios::app);
    if (!f) throw Failure{kExitIo, "cannot write " + csv};
    if (fresh) f << kBenchCsvHeader << '\n';
    f << csv_row(r) << '\n';
    if (!f) throw Failure{kExitIo, "cannot write " + csv};
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Longest palindromic substring under substitutions", "dynpal"};
    app.require_subcommand(1);

    std::string input, trace_path, csv, mode_name = "dynamic";
    std::uint64_t seed = 0;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input", input, "initial text, raw bytes")->required();
        sub->add_option("--trace", trace_path, "trace: 'S <pos> <symbol>', 'Q', 'C' per line")->required();
        sub->add_option("--seed", seed, "hash seed");
    };
    CLI::App* apply = app.add_subcommand("apply", "replay a trace, printing each query");
    CLI::App* verify = app.add_subcommand("verify", "replay a trace, checking every step against the oracle");
    CLI::App* bench_cmd = app.add_subcommand("bench", "time a trace's substitutions");
    add_common(apply);
    add_common(verify);
    add_common(bench_cmd);
    bench_cmd->add_option("--csv", csv, "append the result row here instead of printing it");
    bench_cmd->add_option("--mode", mode_name, "dynamic or recompute")
        ->check(CLI::IsMember({"dynamic", "recompute"}));

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "dynpal: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        const auto text = read_file(input);
        if (!text) throw Failure{kExitIo, "cannot read " + input};
        const auto trace_data = read_file(trace_path);
        if (!trace_data) throw Failure{kExitIo, "cannot read " + trace_path};
        const std::vector<Command> trace = parse_trace(*trace_data);
        if (bench_cmd->parsed()) {
            return bench(*text, trace, seed, mode_name == "dynamic" ? BenchMode::dynamic : BenchMode::recompute, csv,
                         out);
        }
        return replay(*text, trace, seed, verify->parsed(), out, err);
    } catch (const Failure& f) {
        out.flush();
        err << "dynpal: " << f.message << '\n';
        return f.code;
    } catch (const InvariantError& e) {
        out.flush();
        err << "dynpal: internal error: " << e.what() << '\n';
        return kExitMismatch;
    } catch (const HashCollisionError& e) {
        out.flush();
        err << "dynpal: " << e.what() << '\n';
        return kExitMismatch;
    }
}

}  // namespace dynpal::cli
