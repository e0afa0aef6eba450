#include "radic/cli.hpp"

#include "radic/errors.hpp"
#include "radic/io.hpp"
#include "radic/parallel.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace radic::cli {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

BigInt parse_count(const std::string& text, const char* what)
{
    std::string digits = text;
    if (!digits.empty() && digits[0] == '+')
        digits.erase(0, 1);
    BigInt v;
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos ||
        v.set_str(digits, 10) != 0)
        throw ParseError(std::string(what) + ": '" + text + "' is not a non-negative integer", 0);
    return v;
}

std::string read_input(const std::string& path)
{
    if (path == "-")
        return read_stream(std::cin);
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::ios_base::failure("cannot open '" + path + "'");
    std::string text = read_stream(in);
    if (in.bad())
        throw std::ios_base::failure("error reading '" + path + "'");
    return text;
}

struct ComputeArgs {
    std::string input;
    std::string mode = "exact";
    unsigned workers = 0;
    std::string max_terms = "100000000";
    bool force = false;
    std::string format = "plain";
};

TermCap make_cap(const std::string& max_terms, bool force)
{
    TermCap cap;
    cap.max_terms = parse_count(max_terms, "--max-terms");
    if (sgn(cap.max_terms) < 1)
        throw ParseError("--max-terms must be at least 1", 0);
    cap.force = force;
    return cap;
}

template <typename T>
void print_result(const RadicResult<T>& r, double ms, const std::string& format, std::ostream& out)
{
    const char* mode = r.mode == ScalarKind::exact ? "exact" : "float";
    if (format == "json") {
        nlohmann::json doc = {
            {"value", format_value(r.value)},
            {"terms", to_decimal(r.term_count)},
            {"mode", mode},
            {"workers", r.workers},
            {"elapsed_ms", ms},
        };
        out << doc.dump() << '\n';
        return;
    }
    out << "value: " << format_value(r.value) << '\n'
        << "terms: " << to_decimal(r.term_count) << '\n'
        << "mode: " << mode << '\n'
        << "workers: " << r.workers << '\n'
        << "elapsed_ms: " << ms << '\n';
}

void cmd_compute(const ComputeArgs& args, std::ostream& out)
{
    const TermCap cap = make_cap(args.max_terms, args.force);
    const std::string text = read_input(args.input);
    if (args.mode == "exact") {
        const ExactMatrix a = parse_exact_matrix(text);
        const auto t0 = Clock::now();
        const auto r = radic_det_parallel(a, args.workers, cap);
        print_result(r, elapsed_ms(t0), args.format, out);
    } else {
        const FloatMatrix a = parse_float_matrix(text);
        const auto t0 = Clock::now();
        const auto r = radic_det_parallel(a, args.workers, cap);
        print_result(r, elapsed_ms(t0), args.format, out);
    }
}

// Accepts "1 2 4 5 7", "1,2,4,5,7" or separate arguments.
std::vector<int> parse_index_list(const std::vector<std::string>& parts)
{
    std::vector<int> out;
    for (const auto& part : parts) {
        std::string tok;
        std::istringstream in(part);
        while (std::getline(in, tok, ',')) {
            std::istringstream words(tok);
            std::string w;
            while (words >> w) {
                std::size_t used = 0;
                int v = 0;
                try {
                    v = std::stoi(w, &used);
                } catch (const std::exception&) {
                    used = 0;
                }
                if (used != w.size())
                    throw ParseError("'" + w + "' is not an index", 0);
                out.push_back(v);
            }
        }
    }
    return out;
}

struct BenchArgs {
    int n = 24;
    int m = 8;
    std::string mode = "float";
    std::vector<unsigned> workers{1, 4};
    std::uint64_t seed = 42;
    std::string max_terms = "100000000";
    bool force = false;
};

template <typename T>
void bench_rows(const Matrix<T>& a, const BenchArgs& args, const TermCap& cap, std::ostream& out)
{
    std::vector<double> times;
    std::vector<std::string> values;
    BigInt terms;
    for (unsigned w : args.workers) {
        const auto t0 = Clock::now();
        const auto r = radic_det_parallel(a, w, cap);
        times.push_back(elapsed_ms(t0));
        values.push_back(format_value(r.value));
        terms = r.term_count;
    }
    char line[128];
    out << "bench m=" << args.m << " n=" << args.n << " mode=" << args.mode
        << " terms=" << to_decimal(terms) << " seed=" << args.seed << '\n';
    out << "workers  elapsed_ms   speedup  value\n";
    for (std::size_t i = 0; i < times.size(); ++i) {
        const double speedup = times[i] > 0.0 ? times[0] / times[i] : 0.0;
        std::snprintf(line, sizeof(line), "%7u  %10.3f  %8.3f  ", resolve_workers(args.workers[i]),
                      times[i], speedup);
        out << line << values[i] << '\n';
    }
}

void cmd_bench(const BenchArgs& args, std::ostream& out)
{
    if (args.m < 0 || args.n < 0)
        throw UsageError("bench needs non-negative -m and -n");
    const TermCap cap = make_cap(args.max_terms, args.force);
    const ExactMatrix a =
        bench_matrix(static_cast<std::size_t>(args.m), static_cast<std::size_t>(args.n), args.seed);
    if (args.mode == "exact")
        bench_rows(a, args, cap, out);
    else
        bench_rows(to_float(a), args, cap, out);
}

} // namespace

ExactMatrix bench_matrix(std::size_t m, std::size_t n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(-9, 9);
    ExactMatrix a(m, n);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < n; ++c)
            a(r, c) = entry(rng);
    return a;
}

FloatMatrix to_float(const ExactMatrix& a)
{
    FloatMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            out(r, c) = a(r, c).get_d();
    return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Determinant of rectangular matrices by signed sums of column-selected minors",
                 "radic"};
    app.require_subcommand(1);

    ComputeArgs compute;
    auto* c = app.add_subcommand("compute", "Determinant of the matrix in a text file");
    c->add_option("-i,--input", compute.input, "Matrix file ('-' for stdin)")->required();
    c->add_option("--mode", compute.mode, "Scalar kind")
        ->check(CLI::IsMember({"exact", "float"}))
        ->capture_default_str();
    c->add_option("--workers", compute.workers, "Worker threads, 0 = auto")->capture_default_str();
    c->add_option("--max-terms", compute.max_terms, "Refuse more than this many minors")
        ->capture_default_str();
    c->add_flag("--force", compute.force, "Ignore --max-terms");
    c->add_option("--format", compute.format, "Output format")
        ->check(CLI::IsMember({"plain", "json"}))
        ->capture_default_str();

    int un_n = 0, un_m = 0;
    std::string un_q;
    auto* u = app.add_subcommand("unrank", "Print the q-th combination in dictionary order");
    u->add_option("-n", un_n, "Ambient set size")->required();
    u->add_option("-m", un_m, "Combination size")->required();
    u->add_option("-q,--rank", un_q, "Rank, 0-based")->required();

    int rk_n = 0;
    std::vector<std::string> rk_indices;
    auto* rk = app.add_subcommand("rank", "Print the rank of a combination");
    rk->add_option("-n", rk_n, "Ambient set size")->required();
    rk->add_option("indices", rk_indices, "1-based ascending indices")->required();

    int en_n = 0, en_m = 0;
    std::string en_start = "0", en_count;
    auto* en = app.add_subcommand("enumerate", "Print combinations of a rank range, one per line");
    en->add_option("-n", en_n, "Ambient set size")->required();
    en->add_option("-m", en_m, "Combination size")->required();
    en->add_option("--start", en_start, "First rank")->capture_default_str();
    en->add_option("--count", en_count, "Number of combinations (default: to the end)");

    BenchArgs bench;
    auto* b = app.add_subcommand("bench", "Time a fixed-seed random matrix over worker counts");
    b->add_option("-n", bench.n, "Columns")->capture_default_str();
    b->add_option("-m", bench.m, "Rows")->capture_default_str();
    b->add_option("--mode", bench.mode, "Scalar kind")
        ->check(CLI::IsMember({"exact", "float"}))
        ->capture_default_str();
    b->add_option("--workers", bench.workers, "Comma-separated worker counts")
        ->delimiter(',')
        ->capture_default_str();
    b->add_option("--seed", bench.seed, "PRNG seed")->capture_default_str();
    b->add_option("--max-terms", bench.max_terms, "Refuse more than this many minors")
        ->capture_default_str();
    b->add_flag("--force", bench.force, "Ignore --max-terms");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // help requests exit 0, everything else is a command-line parse error
        return app.exit(e, out, err) == 0 ? ok : parse_error;
    }

    try {
        if (c->parsed()) {
            cmd_compute(compute, out);
        } else if (u->parsed()) {
            const Combination comb = unrank(parse_count(un_q, "rank"), un_n, un_m);
            out << format_combination(comb.indices()) << '\n';
        } else if (rk->parsed()) {
            const Combination comb(parse_index_list(rk_indices), rk_n);
            out << to_decimal(rank(comb)) << '\n';
        } else if (en->parsed()) {
            const BigInt start = parse_count(en_start, "--start");
            const BigInt total = binomial(static_cast<unsigned long>(std::max(en_n, 0)),
                                          static_cast<unsigned long>(std::max(en_m, 0)));
            const BigInt count = en_count.empty()
                                     ? (start < total ? BigInt(total - start) : BigInt(0))
                                     : parse_count(en_count, "--count");
            for (Enumerator e(start, count, en_n, en_m); !e.done(); e.next())
                out << format_combination(e.current()) << '\n';
        } else if (b->parsed()) {
            cmd_bench(bench, out);
        }
    } catch (const ParseError& e) {
        err << "radic: parse error: " << e.what() << '\n';
        return parse_error;
    } catch (const ValidationError& e) {
        err << "radic: invalid input: " << e.what() << '\n';
        return parse_error;
    } catch (const UsageError& e) {
        err << "radic: invalid arguments: " << e.what() << '\n';
        return parse_error;
    } catch (const RangeError& e) {
        err << "radic: out of range: " << e.what() << '\n';
        return range_error;
    } catch (const CapacityError& e) {
        err << "radic: too many terms: " << e.what() << '\n';
        return range_error;
    } catch (const std::ios_base::failure& e) {
        err << "radic: I/O error: " << e.what() << '\n';
        return io_error;
    }
    return ok;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    std::vector<const char*> argv{"radic"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace radic::cli
