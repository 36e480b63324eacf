#include "morse/report_io.hpp"
#include "morse/scan.hpp"
#include "morse/svg_plot.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <random>
#include <regex>

using namespace morse;

namespace {

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("morse_test_" + name)).string();
}

const CellRecord& cell_at(const ScanReport& r, long n, long v) {
    return r.cells.at(static_cast<std::size_t>(n * (r.v_max + 1) + v));
}

std::string golden(const std::string& name) { return std::string(MORSE_GOLDEN_DIR) + "/" + name; }

}  // namespace

TEST(Scan, SingleCell) {
    const auto r = scan(0, 0, 1);
    ASSERT_EQ(r.cells.size(), 1u);
    const auto& c = r.cells[0];
    EXPECT_EQ(c.s, make_rational(-1, 2));
    EXPECT_EQ(c.s_sign, SignClass::Negative);
    EXPECT_EQ(c.ev3, 1);
    EXPECT_TRUE(c.all_equal);
}

TEST(Scan, ZeroOperatorCell) {
    const auto r = scan(0, 1, 1);
    ASSERT_EQ(r.cells.size(), 2u);
    const auto& c = r.cells[1];
    EXPECT_EQ(c.v, 1);
    EXPECT_EQ(c.op_class, OperatorClass::Zero);
    EXPECT_EQ(c.ev1.status, EigenStatus::TrivialZero);
    EXPECT_TRUE(c.ev1.value.is_zero());
    EXPECT_EQ(c.ev3, 0);
    EXPECT_TRUE(c.all_equal);
    EXPECT_EQ(r.summary.all_equal_trivial, 1);
}

TEST(Scan, InvariantsOnModerateGrid) {
    const auto r = scan(20, 45);
    EXPECT_EQ(r.cells.size(), 21u * 46u);
    EXPECT_EQ(r.summary, summarize(r.cells));
    for (const auto& c : r.cells) {
        EXPECT_EQ(c.s_sign == SignClass::NonNegative, c.v >= 2 * c.n + 1);
        if (c.all_equal) {
            EXPECT_TRUE(c.equal_12);
            EXPECT_TRUE(c.equal_13);
        }
        EXPECT_TRUE(c.all_equal) << c.n << "," << c.v;
        EXPECT_EQ(c.ev2.value, c.k0 * RadicalScalar(2));
    }
    EXPECT_TRUE(r.summary.mismatches.empty());
    EXPECT_EQ(r.summary.all_equal_trivial + r.summary.all_equal_proper, r.summary.all_equal);
}

TEST(Scan, OrderIndependent) {
    std::vector<CellRecord> cells;
    for (long n = 0; n <= 6; ++n)
        for (long v = 0; v <= 9; ++v) cells.push_back(compute_cell(n, v));
    std::mt19937 rng(5);
    std::shuffle(cells.begin(), cells.end(), rng);
    const auto shuffled = assemble_report(6, 9, cells);
    EXPECT_EQ(shuffled, scan(6, 9, 1));
    EXPECT_EQ(scan(6, 9, 3), scan(6, 9, 1));
}

TEST(Scan, RejectsNegativeBounds) { EXPECT_THROW(scan(-1, 3), std::invalid_argument); }

TEST(ReportCsv, Rows) {
    const auto r = scan(0, 2, 1);
    EXPECT_EQ(csv_row(cell_at(r, 0, 2)), "0,2,1/2,NonNegative,Proper,-1,Proper,-1,Proper,-1,true,true,true");
    EXPECT_EQ(csv_row(cell_at(r, 0, 1)), "0,1,0,NonNegative,Zero,0,TrivialZero,0,Proper,0,true,true,true");
    const std::string text = report_to_csv(r);
    EXPECT_EQ(text.substr(0, text.find('\n')), csv_header());
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 4);
    EXPECT_EQ(text.find('\r'), std::string::npos);
}

TEST(ReportJson, RoundTrip) {
    const auto r = scan(4, 9);
    EXPECT_EQ(report_from_json(report_to_json(r)), r);
    const auto path = temp_path("roundtrip.json");
    write_report(r, ReportFormat::Json, path);
    EXPECT_EQ(read_report(path), r);
    std::filesystem::remove(path);
}

TEST(ReportJson, Layout) {
    const auto j = nlohmann::ordered_json::parse(report_to_json(scan(0, 2, 1)));
    std::vector<std::string> keys;
    for (const auto& [k, _] : j.items()) keys.push_back(k);
    EXPECT_EQ(keys, (std::vector<std::string>{"n_max", "v_max", "beta", "summary", "cells"}));
    EXPECT_EQ(j["beta"], "1");
    EXPECT_EQ(j["cells"][2]["s"], "1/2");
    EXPECT_EQ(j["cells"][2]["ev1"]["value"], "-1");
    EXPECT_EQ(j["cells"][2]["k0"], "-1/2");
    EXPECT_EQ(j["summary"]["cells"], 3);
}

TEST(ReportCsv, ReadBack) {
    const auto r = scan(3, 8);
    const auto path = temp_path("roundtrip.csv");
    write_report(r, ReportFormat::Csv, path);
    EXPECT_EQ(read_report(path), r);
    std::filesystem::remove(path);
}

TEST(ReportIo, Errors) {
    const auto r = scan(0, 0, 1);
    EXPECT_THROW(write_report(r, ReportFormat::Csv, ""), IoError);
    EXPECT_THROW(write_report(r, ReportFormat::Json, "/nonexistent-dir/x.json"), IoError);
    EXPECT_THROW(read_report("/nonexistent-dir/x.json"), IoError);
    EXPECT_THROW(report_from_json("{\"n_max\": 1}"), std::invalid_argument);
    EXPECT_THROW(report_from_csv("bogus\n"), std::invalid_argument);
}

TEST(Svg, SignPartitionIsHalfPlane) {
    const auto r = scan(10, 25);
    const std::string svg = render_svg(r, PlotMode::Sign, 600);
    const std::regex dot(R"re(<circle cx="([0-9.]+)" cy="([0-9.]+)" r="[0-9.]+" fill="(#[0-9A-F]+)"/>)re");
    PlotColors colors;
    long green = 0, yellow = 0;
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), dot); it != std::sregex_iterator(); ++it) {
        const std::string fill = (*it)[3];
        if (fill == colors.nonnegative) ++green;
        if (fill == colors.negative) ++yellow;
    }
    long expect_green = 0;
    for (const auto& c : r.cells) expect_green += c.v >= 2 * c.n + 1;
    // one legend swatch of each colour
    EXPECT_EQ(green, expect_green + 1);
    EXPECT_EQ(yellow, static_cast<long>(r.cells.size()) - expect_green + 1);
}

TEST(Svg, EqualityColours) {
    const auto r = scan(3, 5, 1);
    const std::string svg = render_svg(r, PlotMode::Equality, 300);
    PlotColors colors;
    auto count = [&](const std::string& colour) {
        long k = 0;
        for (auto pos = svg.find("fill=\"" + colour + "\""); pos != std::string::npos;
             pos = svg.find("fill=\"" + colour + "\"", pos + 1))
            ++k;
        return k;
    };
    // zero-operator cells (0,1), (1,3), (2,5) are gray; every other cell is blue; legend adds one each
    EXPECT_EQ(count(colors.degenerate), 3 + 1);
    EXPECT_EQ(count(colors.equal), static_cast<long>(r.cells.size()) - 3 + 1);
    EXPECT_EQ(count(colors.unequal), 1);
}

TEST(Svg, SingleDotDocument) {
    const auto svg = render_svg(scan(0, 0, 1), PlotMode::Equality);
    EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
    EXPECT_NE(svg.find("</svg>\n"), std::string::npos);
    EXPECT_NE(svg.find(">n</text>"), std::string::npos);
    EXPECT_NE(svg.find(">v</text>"), std::string::npos);
    EXPECT_THROW(render_svg(ScanReport{}, PlotMode::Sign), std::invalid_argument);
}

TEST(Svg, GoldenFiles) {
    const auto r = scan(3, 5, 1);
    for (auto [mode, name] : {std::pair{PlotMode::Equality, "scan_3x5_equality.svg"},
                              std::pair{PlotMode::Sign, "scan_3x5_sign.svg"}}) {
        const std::string svg = render_svg(r, mode, 300);
        if (std::getenv("MORSE_UPDATE_GOLDEN") != nullptr) write_text_file(golden(name), svg);
        EXPECT_EQ(svg, read_text_file(golden(name))) << name;
        EXPECT_EQ(svg, render_svg(r, mode, 300));
    }
}
