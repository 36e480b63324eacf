// morse: scan, plot and inspect the Morse-oscillator ladder-operator algebra.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.

#include "morse/diff_op.hpp"
#include "morse/invariants.hpp"
#include "morse/morse_model.hpp"
#include "morse/report_io.hpp"
#include "morse/scan.hpp"
#include "morse/spectral.hpp"
#include "morse/svg_plot.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using namespace morse;

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsage = 2;
constexpr int kIo = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string eigen_str(const EigenResult& e) { return e.value.str() + " (" + to_string(e.status) + ")"; }

template <class Build>
void print_operator(std::ostream& os, const std::string& label, Build&& build) {
    try {
        os << label << " = " << build().str() << '\n';
    } catch (const UndefinedOperator& e) {
        os << label << " = undefined (" << e.what() << ")\n";
    }
}

int run_scan(long n_max, long v_max, const std::string& format, const std::string& out, unsigned threads) {
    if (n_max < 0 || v_max < 0) throw UsageError("--n-max and --v-max must be non-negative");
    const ReportFormat fmt = parse_report_format(format);
    const ScanReport r = scan(n_max, v_max, threads);
    write_report(r, fmt, out);
    const auto& s = r.summary;
    std::cout << "cells: " << s.cells << '\n'
              << "s >= 0: " << s.s_nonnegative << ", s < 0: " << s.s_negative << '\n'
              << "derived operator proper: " << s.op_proper << ", zero: " << s.op_zero
              << ", undefined: " << s.op_undefined << '\n'
              << "all eigenvalues equal: " << s.all_equal << " (proper " << s.all_equal_proper << ", trivial "
              << s.all_equal_trivial << ")\n"
              << "not equal: " << s.not_all_equal << '\n';
    for (const auto& [n, v] : s.mismatches) std::cout << "  mismatch at n=" << n << " v=" << v << '\n';
    std::cout << "report written to " << out << '\n';
    return kOk;
}

int run_plot(const std::string& in, const std::string& mode, const std::string& out, int size) {
    const PlotMode m = parse_plot_mode(mode);
    if (size < 200) throw UsageError("--size must be at least 200");
    const ScanReport r = read_report(in);
    if (r.cells.empty()) throw UsageError("report has no cells");
    render_plot(r, m, out, size);
    std::cout << "plot written to " << out << '\n';
    return kOk;
}

int run_cell(long n, long v, bool verbose) {
    if (n < 0 || v < 0) throw UsageError("--n and --v must be non-negative");
    const CellRecord c = compute_cell(n, v);
    std::cout << "n = " << c.n << '\n'
              << "v = " << c.v << '\n'
              << "s = " << to_string(c.s) << '\n'
              << "s_sign = " << to_string(c.s_sign) << '\n'
              << "op_class = " << to_string(c.op_class) << '\n'
              << "ev1 = " << eigen_str(c.ev1) << '\n'
              << "ev2 = " << eigen_str(c.ev2) << '\n'
              << "k0 = " << c.k0.str() << '\n'
              << "ev3 = " << to_string(c.ev3) << '\n'
              << "equal_12 = " << std::boolalpha << c.equal_12 << '\n'
              << "equal_13 = " << c.equal_13 << '\n'
              << "all_equal = " << c.all_equal << '\n';
    if (c.all_equal && c.op_class != OperatorClass::Proper) std::cout << "equality = trivial (zero derived operator)\n";
    if (!verbose) return kOk;

    const MorseState st = make_state(n, v);
    const Rational& s = st.qn.s;
    const Rational rv(v);
    std::cout << "psi = " << st.wavefunction.str() << '\n'
              << "N = " << (st.normalization ? st.normalization->str() : std::string("undefined")) << '\n';
    print_operator(std::cout, "K-", [&] { return k_minus(s, rv); });
    print_operator(std::cout, "K+", [&] { return k_plus(s, rv); });
    print_operator(std::cout, "K0", [&] { return k0_diff(s, Rational(n)); });
    print_operator(std::cout, "K0' (simplified)", [&] { return k0_prime_simplified(s, rv); });
    print_operator(std::cout, "K0' (composed)", [&] { return k0_prime_composed(s, rv); });
    print_operator(std::cout, "[K+, K-] (no shift)", [&] { return naive_commutator(s, rv); });
    std::cout << "K0' psi = " << apply(k0_prime_simplified(s, rv), st.wavefunction).str() << '\n'
              << "K0 psi = " << apply(k0_diff(s, Rational(n)), st.wavefunction).str() << '\n'
              << "Schrodinger operator psi = " << apply(schrodinger_diff(s, rv), st.wavefunction).str() << '\n';
    return kOk;
}

void print_checks(const std::vector<CheckResult>& checks) {
    std::cout << std::left << std::setw(72) << "check" << std::right << std::setw(8) << "cells" << std::setw(10)
              << "failures" << "  result\n";
    for (const auto& c : checks) {
        std::cout << std::left << std::setw(72) << c.name << std::right << std::setw(8) << c.checked << std::setw(10)
                  << c.failures << "  " << (c.gated ? (c.failures == 0 ? "PASS" : "FAIL") : "INFO") << '\n';
        for (const auto& [n, v] : c.sample) std::cout << "    e.g. n=" << n << " v=" << v << '\n';
    }
}

int run_ladder(std::optional<long> n, std::optional<long> v, long v_max) {
    if (n.has_value() != v.has_value()) throw UsageError("ladder: give both --n and --v, or neither");
    if (n) {
        if (*n < 0 || *v < 0) throw UsageError("--n and --v must be non-negative");
        const LadderCheck lo = verify_lowering(*n, *v);
        const LadderCheck hi = verify_raising(*n, *v);
        std::cout << "lowering: " << to_string(lo.outcome);
        if (lo.outcome != LadderOutcome::OutOfDomain) std::cout << " (k- = " << lo.factor.str() << ")";
        std::cout << "\nraising: " << to_string(hi.outcome);
        if (hi.outcome != LadderOutcome::OutOfDomain) std::cout << " (k+ = " << hi.factor.str() << ")";
        std::cout << '\n';
        return lo.outcome == LadderOutcome::Fails || hi.outcome == LadderOutcome::Fails ? kVerificationFailed : kOk;
    }
    if (v_max < 0) throw UsageError("--v-max must be non-negative");
    const auto checks = run_ladder_suite(v_max);
    print_checks(checks);
    for (const auto& c : checks)
        if (!c.passed()) return kVerificationFailed;
    return kOk;
}

int run_verify(long n_max, long v_max) {
    if (n_max < 0 || v_max < 0) throw UsageError("--n-max and --v-max must be non-negative");
    const auto checks = run_invariant_suite(n_max, v_max);
    print_checks(checks);
    for (const auto& c : checks)
        if (!c.passed()) return kVerificationFailed;
    return kOk;
}

int run_physical(const PhysicalParams& p, long n) {
    const PhysicalLevel lvl = physical_map(p, n);
    std::cout << std::setprecision(12) << "v = " << lvl.v << '\n' << "s = " << lvl.s << '\n' << "E = " << lvl.E << '\n';
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact ladder-operator algebra and parameter-space scans for the Morse oscillator"};
    app.require_subcommand(1);

    long n_max = 100, v_max = 100;
    std::string format = "json", out = "report.json";
    unsigned threads = 0;
    auto* scan_cmd = app.add_subcommand("scan", "Scan the (n, v) grid and write a report");
    scan_cmd->add_option("--n-max", n_max, "Largest n")->capture_default_str();
    scan_cmd->add_option("--v-max", v_max, "Largest v")->capture_default_str();
    scan_cmd->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    scan_cmd->add_option("--out", out, "Output path")->capture_default_str();
    scan_cmd->add_option("--threads", threads, "Worker threads (0 = all available)");

    std::string plot_in, plot_mode, plot_out;
    int size = 900;
    auto* plot_cmd = app.add_subcommand("plot", "Render a report as an SVG scatter plot");
    plot_cmd->add_option("--in", plot_in, "Report file (JSON or CSV)")->required();
    plot_cmd->add_option("--mode", plot_mode, "Colouring")->check(CLI::IsMember({"equality", "sign"}))->required();
    plot_cmd->add_option("--out", plot_out, "SVG output path")->required();
    plot_cmd->add_option("--size", size, "Canvas size in pixels")->capture_default_str();

    long cell_n = 0, cell_v = 0;
    bool verbose = false;
    auto* cell_cmd = app.add_subcommand("cell", "Inspect one (n, v) cell");
    cell_cmd->add_option("--n", cell_n, "Level index")->required();
    cell_cmd->add_option("--v", cell_v, "Depth parameter")->required();
    cell_cmd->add_flag("--verbose", verbose, "Print the state, operators and applied results");

    std::optional<long> ladder_n, ladder_v;
    long ladder_v_max = 40;
    auto* ladder_cmd = app.add_subcommand("ladder", "Check the raising and lowering relations");
    ladder_cmd->add_option("--n", ladder_n, "Level index (single-cell mode)");
    ladder_cmd->add_option("--v", ladder_v, "Depth parameter (single-cell mode)");
    ladder_cmd->add_option("--v-max", ladder_v_max, "Largest v in region mode")->capture_default_str();

    long verify_n_max = 100, verify_v_max = 100;
    auto* verify_cmd = app.add_subcommand("verify", "Run the grid invariant suite");
    verify_cmd->add_option("--n-max", verify_n_max, "Largest n")->capture_default_str();
    verify_cmd->add_option("--v-max", verify_v_max, "Largest v")->capture_default_str();

    PhysicalParams params;
    long phys_n = 0;
    auto* physical_cmd = app.add_subcommand("physical", "Map physical constants to v, s and E");
    physical_cmd->add_option("--v0", params.V0, "Well depth")->required();
    physical_cmd->add_option("--beta", params.beta, "Inverse width")->required();
    physical_cmd->add_option("--mass", params.mass, "Mass")->required();
    physical_cmd->add_option("--hbar", params.hbar, "Reduced Planck constant")->required();
    physical_cmd->add_option("--n", phys_n, "Level index")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*scan_cmd) return run_scan(n_max, v_max, format, out, threads);
        if (*plot_cmd) return run_plot(plot_in, plot_mode, plot_out, size);
        if (*cell_cmd) return run_cell(cell_n, cell_v, verbose);
        if (*ladder_cmd) return run_ladder(ladder_n, ladder_v, ladder_v_max);
        if (*verify_cmd) return run_verify(verify_n_max, verify_v_max);
        if (*physical_cmd) return run_physical(params, phys_n);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIo;
    } catch (const NonBound& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kVerificationFailed;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
