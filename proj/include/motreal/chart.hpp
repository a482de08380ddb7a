#pragma once

#include "motreal/errors.hpp"
#include "motreal/range_classifier.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace motreal {

inline constexpr std::uint64_t kChartCellBudget = 1'000'000;

struct IntInterval {
    std::int64_t lo = 0;
    std::int64_t hi = 0;  // inclusive
    std::uint64_t size() const { return hi < lo ? 0 : static_cast<std::uint64_t>(hi - lo) + 1; }
};

/// A line a*d + b*e = c in the (d, e)-plane.
struct BoundaryLine {
    std::string name;
    std::string equation;
    std::int64_t a = 0, b = 0, c = 0;
};

/// The six lines delimiting the regions of the unstable sphere chart.
inline std::vector<BoundaryLine> chart_boundaries(std::int64_t x, std::int64_t y) {
    const std::int64_t freudenthal = std::min(2 * x - 2, x + y - 2);
    return {
        {"coweight 0", "d=" + std::to_string(x), 1, 0, x},
        {"Freudenthal edge", "d=" + std::to_string(freudenthal), 1, 0, freudenthal},
        {"weight -1", "e=" + std::to_string(y - 1), 0, 1, y - 1},
        {"stable comparison edge", "e=d" + std::string(y - x + 2 >= 0 ? "+" : "") + std::to_string(y - x + 2), -1, 1,
         y - x + 2},
        {"0-stem", "d+e=" + std::to_string(x + y), 1, 1, x + y},
        {"-1-stem", "d+e=" + std::to_string(x + y - 1), 1, 1, x + y - 1},
    };
}

/// Short region code for a sphere-chart verdict:
/// Z (zero source), ISO, BS (split surjective short of isomorphism, i.e. the
/// Beilinson-Soule triangle), DIV (target zero, kernel identified), S0,
/// S-1 (target zero, kernel not identified) and NC.
inline std::string_view region_code(const Verdict& v) {
    switch (v.kind) {
        case VerdictKind::ZeroSource: return "Z";
        case VerdictKind::Isomorphism: return "ISO";
        case VerdictKind::SplitSurjective:
        case VerdictKind::Injective: return "BS";
        case VerdictKind::TargetZeroDivisibleKernel:
            return v.kernel && v.kernel->kind == KernelLabel::Kind::MotCoh ? "DIV" : "S-1";
        case VerdictKind::ExcludedZeroStem: return "S0";
        case VerdictKind::NotCovered: return "NC";
    }
    return "NC";
}

class Chart {
public:
    Chart(std::int64_t x, std::int64_t y, IntInterval d_range, IntInterval e_range, Assumptions asm_ = {})
        : x_(x), y_(y), d_(d_range), e_(e_range), assumptions_(asm_) {
        if (d_.size() == 0 || e_.size() == 0) throw InvalidParameters("chart: ranges must be nonempty");
        if (d_.size() > kChartCellBudget || e_.size() > kChartCellBudget ||
            d_.size() * e_.size() > kChartCellBudget)
            throw BudgetExceeded("chart: " + std::to_string(d_.size()) + "x" + std::to_string(e_.size()) +
                                 " cells exceeds budget " + std::to_string(kChartCellBudget));
        cells_.reserve(d_.size() * e_.size());
        for (std::int64_t e = e_.lo; e <= e_.hi; ++e)
            for (std::int64_t d = d_.lo; d <= d_.hi; ++d) cells_.push_back(classify_sphere_unstable(x_, y_, d, e, asm_));
    }

    std::int64_t x() const { return x_; }
    std::int64_t y() const { return y_; }
    const IntInterval& d_range() const { return d_; }
    const IntInterval& e_range() const { return e_; }
    const Assumptions& assumptions() const { return assumptions_; }

    const Verdict& at(std::int64_t d, std::int64_t e) const {
        return cells_[static_cast<std::size_t>(e - e_.lo) * d_.size() + static_cast<std::size_t>(d - d_.lo)];
    }

    std::vector<BoundaryLine> boundaries() const { return chart_boundaries(x_, y_); }

    /// Header row of d values, then one row per e in descending order; tab separated, LF.
    std::string to_tsv() const {
        std::string out = "e\\d";
        for (std::int64_t d = d_.lo; d <= d_.hi; ++d) out += "\t" + std::to_string(d);
        out += "\n";
        for (std::int64_t e = e_.hi; e >= e_.lo; --e) {
            out += std::to_string(e);
            for (std::int64_t d = d_.lo; d <= d_.hi; ++d) {
                out += "\t";
                out += region_code(at(d, e));
            }
            out += "\n";
        }
        return out;
    }

    std::string to_svg() const;

private:
    std::int64_t x_, y_;
    IntInterval d_, e_;
    Assumptions assumptions_;
    std::vector<Verdict> cells_;  // row-major, e ascending then d ascending
};

namespace detail {

inline std::string fmt2(double v) {
    std::array<char, 32> buf{};
    std::snprintf(buf.data(), buf.size(), "%.2f", v);
    return buf.data();
}

inline std::string_view region_fill(std::string_view code) {
    if (code == "Z") return "#e8e8e8";
    if (code == "ISO") return "#8fd19e";
    if (code == "BS") return "#f7d774";
    if (code == "DIV") return "#9ec5f0";
    if (code == "S0") return "#f08080";
    if (code == "S-1") return "#c39bd3";
    return "#ffffff";
}

}  // namespace detail

/// Self-contained SVG: one colored square per cell, the six boundary lines
/// clipped to the grid with labels, and a legend.
inline std::string Chart::to_svg() const {
    constexpr double cell = 24.0, margin = 48.0, legend_width = 200.0;
    const double width = margin * 2 + cell * static_cast<double>(d_.size()) + legend_width;
    const double height = margin * 2 + cell * static_cast<double>(e_.size());
    // Cell (d, e) is centered at (px(d), py(e)).
    auto px = [&](double d) { return margin + (d - static_cast<double>(d_.lo) + 0.5) * cell; };
    auto py = [&](double e) { return margin + (static_cast<double>(e_.hi) - e + 0.5) * cell; };
    using detail::fmt2;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt2(width) << "\" height=\"" << fmt2(height)
       << "\" viewBox=\"0 0 " << fmt2(width) << " " << fmt2(height) << "\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << fmt2(width) << "\" height=\"" << fmt2(height)
       << "\" style=\"fill:#ffffff\"/>\n";
    os << "<text x=\"" << fmt2(margin) << "\" y=\"" << fmt2(margin / 2) << "\" style=\"font-family:sans-serif;"
       << "font-size:14px\">x=" << x_ << " y=" << y_ << (assumptions_.beilinson_soule ? " (Beilinson-Soule)" : "")
       << "</text>\n";

    for (std::int64_t e = e_.hi; e >= e_.lo; --e)
        for (std::int64_t d = d_.lo; d <= d_.hi; ++d) {
            const auto code = region_code(at(d, e));
            os << "<rect x=\"" << fmt2(px(static_cast<double>(d)) - cell / 2) << "\" y=\""
               << fmt2(py(static_cast<double>(e)) - cell / 2) << "\" width=\"" << fmt2(cell) << "\" height=\""
               << fmt2(cell) << "\" style=\"fill:" << detail::region_fill(code)
               << ";stroke:#ffffff;stroke-width:1\"><title>d=" << d << " e=" << e << " " << code
               << "</title></rect>\n";
        }

    // Axis tick labels.
    for (std::int64_t d = d_.lo; d <= d_.hi; ++d)
        os << "<text x=\"" << fmt2(px(static_cast<double>(d))) << "\" y=\"" << fmt2(height - margin + 16)
           << "\" style=\"font-family:sans-serif;font-size:9px;text-anchor:middle\">" << d << "</text>\n";
    for (std::int64_t e = e_.lo; e <= e_.hi; ++e)
        os << "<text x=\"" << fmt2(margin - 6) << "\" y=\"" << fmt2(py(static_cast<double>(e)) + 3)
           << "\" style=\"font-family:sans-serif;font-size:9px;text-anchor:end\">" << e << "</text>\n";

    // Boundary lines, clipped to the grid box by parametrizing along the box edges.
    const double d0 = static_cast<double>(d_.lo) - 0.5, d1 = static_cast<double>(d_.hi) + 0.5;
    const double e0 = static_cast<double>(e_.lo) - 0.5, e1 = static_cast<double>(e_.hi) + 0.5;
    for (const auto& line : boundaries()) {
        const double a = static_cast<double>(line.a), b = static_cast<double>(line.b), c = static_cast<double>(line.c);
        std::vector<std::pair<double, double>> pts;
        auto add = [&](double d, double e) {
            if (d < d0 - 1e-9 || d > d1 + 1e-9 || e < e0 - 1e-9 || e > e1 + 1e-9) return;
            for (const auto& [pd, pe] : pts)
                if (std::abs(pd - d) < 1e-9 && std::abs(pe - e) < 1e-9) return;
            pts.emplace_back(d, e);
        };
        if (b != 0) {
            add(d0, (c - a * d0) / b);
            add(d1, (c - a * d1) / b);
        }
        if (a != 0) {
            add((c - b * e0) / a, e0);
            add((c - b * e1) / a, e1);
        }
        if (pts.size() < 2) continue;
        std::sort(pts.begin(), pts.end());
        const auto [sd, se] = pts.front();
        const auto [ed, ee] = pts.back();
        const bool dashed = line.name == "-1-stem";
        os << "<line x1=\"" << fmt2(px(sd)) << "\" y1=\"" << fmt2(py(se)) << "\" x2=\"" << fmt2(px(ed))
           << "\" y2=\"" << fmt2(py(ee)) << "\" style=\"stroke:#202020;stroke-width:2"
           << (dashed ? ";stroke-dasharray:6,4" : "") << "\"/>\n";
        os << "<text x=\"" << fmt2(px(ed) + 4) << "\" y=\"" << fmt2(py(ee) - 4)
           << "\" style=\"font-family:sans-serif;font-size:10px;fill:#202020\">" << line.name << ": "
           << line.equation << "</text>\n";
    }

    // Legend.
    const double lx = margin * 1.5 + cell * static_cast<double>(d_.size());
    double ly = margin;
    for (std::string_view code : {"Z", "ISO", "BS", "DIV", "S0", "S-1", "NC"}) {
        os << "<rect x=\"" << fmt2(lx) << "\" y=\"" << fmt2(ly) << "\" width=\"14.00\" height=\"14.00\" style=\"fill:"
           << detail::region_fill(code) << ";stroke:#202020;stroke-width:1\"/>\n";
        os << "<text x=\"" << fmt2(lx + 20) << "\" y=\"" << fmt2(ly + 11)
           << "\" style=\"font-family:sans-serif;font-size:12px\">" << code << "</text>\n";
        ly += 20;
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace motreal
