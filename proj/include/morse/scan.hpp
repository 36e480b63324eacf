#pragma once

// Grid scan over (n, v): three routes to k0', equality flags, summary counts.

#include "morse/diff_op.hpp"
#include "morse/exact_scalar.hpp"
#include "morse/morse_model.hpp"
#include "morse/spectral.hpp"

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace morse {

enum class SignClass { NonNegative, Negative };

inline const char* to_string(SignClass s) { return s == SignClass::NonNegative ? "NonNegative" : "Negative"; }

struct CellRecord {
    long n = 0;
    long v = 0;
    Rational s;
    SignClass s_sign = SignClass::NonNegative;
    OperatorClass op_class = OperatorClass::Proper;  // of the simplified derived operator
    EigenResult ev1;                                 // derived operator
    EigenResult ev2;                                 // 2 * K0 (differential form)
    RadicalScalar k0;                                // raw K0 eigenvalue, ev2 before doubling
    Rational ev3;                                    // 2n - v + 1
    bool equal_12 = false;
    bool equal_13 = false;
    bool all_equal = false;

    friend bool operator==(const CellRecord&, const CellRecord&) = default;
};

struct ScanSummary {
    long cells = 0;
    long s_nonnegative = 0;
    long s_negative = 0;
    long op_proper = 0;
    long op_zero = 0;
    long op_undefined = 0;
    long equal_12 = 0;
    long equal_13 = 0;
    long all_equal = 0;
    long all_equal_proper = 0;   // equality with a non-zero derived operator
    long all_equal_trivial = 0;  // 0 = 0 at s = 0
    long not_all_equal = 0;
    std::vector<std::pair<long, long>> mismatches;  // (n, v) of every not-all-equal cell

    friend bool operator==(const ScanSummary&, const ScanSummary&) = default;
};

struct ScanReport {
    long n_max = 0;
    long v_max = 0;
    Rational beta = 1;
    std::vector<CellRecord> cells;  // sorted by (n, v)
    ScanSummary summary;

    friend bool operator==(const ScanReport&, const ScanReport&) = default;
};

inline CellRecord compute_cell(long n, long v) {
    const MorseState state = make_state(n, v);
    CellRecord c;
    c.n = n;
    c.v = v;
    c.s = state.qn.s;
    c.s_sign = state.qn.physical() ? SignClass::NonNegative : SignClass::Negative;
    c.op_class = is_zero_or_undefined([&] { return k0_prime_simplified(c.s, Rational(v)); });
    c.ev1 = eigenvalue_one(state);
    const EigenResult k0 = k0_eigenvalue(state);
    c.k0 = k0.value;
    c.ev2 = k0;
    c.ev2.value = k0.value * RadicalScalar(2);
    c.ev3 = eigenvalue_three(n, v);

    const RadicalScalar ev3(c.ev3);
    c.equal_12 = c.ev1.holds() && c.ev2.holds() && c.ev1.value == c.ev2.value;
    c.equal_13 = c.ev1.holds() && c.ev1.value == ev3;
    c.all_equal = c.equal_12 && c.equal_13 && c.ev2.value == ev3;
    return c;
}

inline ScanSummary summarize(const std::vector<CellRecord>& cells) {
    ScanSummary s;
    for (const auto& c : cells) {
        ++s.cells;
        (c.s_sign == SignClass::NonNegative ? s.s_nonnegative : s.s_negative)++;
        switch (c.op_class) {
            case OperatorClass::Proper: ++s.op_proper; break;
            case OperatorClass::Zero: ++s.op_zero; break;
            case OperatorClass::Undefined: ++s.op_undefined; break;
        }
        if (c.equal_12) ++s.equal_12;
        if (c.equal_13) ++s.equal_13;
        if (c.all_equal) {
            ++s.all_equal;
            (c.op_class == OperatorClass::Proper ? s.all_equal_proper : s.all_equal_trivial)++;
        } else {
            ++s.not_all_equal;
            s.mismatches.emplace_back(c.n, c.v);
        }
    }
    return s;
}

/// Sorts cells by (n, v) and attaches the summary; the input order is irrelevant.
inline ScanReport assemble_report(long n_max, long v_max, std::vector<CellRecord> cells, Rational beta = 1) {
    std::sort(cells.begin(), cells.end(),
              [](const CellRecord& a, const CellRecord& b) { return std::pair(a.n, a.v) < std::pair(b.n, b.v); });
    ScanReport r;
    r.n_max = n_max;
    r.v_max = v_max;
    r.beta = std::move(beta);
    r.summary = summarize(cells);
    r.cells = std::move(cells);
    return r;
}

/// Scans n in [0, n_max], v in [0, v_max]. threads == 0 uses every hardware thread.
inline ScanReport scan(long n_max, long v_max, unsigned threads = 0) {
    if (n_max < 0 || v_max < 0) throw std::invalid_argument("scan: negative grid bound");
    const std::size_t width = static_cast<std::size_t>(v_max + 1);
    const std::size_t total = static_cast<std::size_t>(n_max + 1) * width;
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, total));

    std::vector<CellRecord> cells(total);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        try {
            for (std::size_t i = next++; i < total; i = next++)
                cells[i] = compute_cell(static_cast<long>(i / width), static_cast<long>(i % width));
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = total;
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
    return assemble_report(n_max, v_max, std::move(cells));
}

}  // namespace morse
