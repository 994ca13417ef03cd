// Copyright 2026 The aqsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "render.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "aqs/errors.hpp"
#include "artifacts.hpp"

namespace aqsim {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 600.0;
constexpr double kMargin = 50.0;

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

Table parse_csv(const std::string &csv) {
    Table t;
    std::istringstream in(csv);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            cells.push_back(cell);
        }
        if (first) {
            t.header = cells;
            first = false;
            continue;
        }
        std::vector<double> row;
        row.reserve(cells.size());
        for (const auto &c : cells) {
            try {
                row.push_back(std::stod(c));
            } catch (const std::exception &) {
                throw aqs::InvalidSpec("non-numeric CSV cell: " + c);
            }
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

void require_header(const Table &t, const std::vector<std::string> &expected) {
    if (t.header != expected) {
        throw aqs::InvalidSpec("CSV header does not match the requested plot kind");
    }
    for (const auto &row : t.rows) {
        if (row.size() != expected.size()) {
            throw aqs::InvalidSpec("CSV row width does not match its header");
        }
    }
}

struct Range {
    double lo = 0.0;
    double hi = 1.0;

    double map(double v, double out_lo, double out_hi) const {
        double span = hi - lo;
        if (span <= 0.0) {
            span = 1.0;
        }
        return out_lo + (v - lo) / span * (out_hi - out_lo);
    }
};

Range column_range(const Table &t, std::size_t col) {
    Range r{1e300, -1e300};
    for (const auto &row : t.rows) {
        r.lo = std::min(r.lo, row[col]);
        r.hi = std::max(r.hi, row[col]);
    }
    if (t.rows.empty()) {
        r = {0.0, 1.0};
    }
    return r;
}

std::string svg_open() {
    std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"";
    s += fmt(kWidth) + "\" height=\"" + fmt(kHeight) + "\">\n";
    s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    s += "<rect x=\"" + fmt(kMargin) + "\" y=\"" + fmt(kMargin) + "\" width=\"" +
         fmt(kWidth - 2 * kMargin) + "\" height=\"" + fmt(kHeight - 2 * kMargin) +
         "\" fill=\"none\" stroke=\"black\"/>\n";
    return s;
}

std::string render_butterfly(const Table &t) {
    require_header(t, {"flux_num", "flux_den", "eigenvalue_index", "energy"});
    std::string s = svg_open();
    Range ex = column_range(t, 3);
    for (const auto &row : t.rows) {
        double flux = row[1] != 0.0 ? row[0] / row[1] : 0.0;
        double x = kMargin + flux * (kWidth - 2 * kMargin);
        double y = ex.map(row[3], kHeight - kMargin, kMargin);
        s += "<circle cx=\"" + fmt(x) + "\" cy=\"" + fmt(y) +
             "\" r=\"1\" fill=\"black\"/>\n";
    }
    s += "</svg>\n";
    return s;
}

std::string render_density(const Table &t) {
    require_header(t, {"m", "n", "density"});
    Range mx = column_range(t, 0);
    Range nx = column_range(t, 1);
    double max_density = 0.0;
    for (const auto &row : t.rows) {
        max_density = std::max(max_density, row[2]);
    }
    double cols = mx.hi - mx.lo + 1.0;
    double rows = nx.hi - nx.lo + 1.0;
    double cell = std::min((kWidth - 2 * kMargin) / cols, (kHeight - 2 * kMargin) / rows);
    std::string s = svg_open();
    for (const auto &row : t.rows) {
        double x = kMargin + (row[0] - mx.lo + 0.5) * cell;
        double y = kHeight - kMargin - (row[1] - nx.lo + 0.5) * cell;
        // Disk area proportional to the density.
        double r = max_density > 0.0
                       ? 0.45 * cell * std::sqrt(row[2] / max_density)
                       : 0.0;
        if (r > 0.0) {
            s += "<circle cx=\"" + fmt(x) + "\" cy=\"" + fmt(y) + "\" r=\"" +
                 fmt(r) + "\" fill=\"steelblue\"/>\n";
        }
    }
    s += "</svg>\n";
    return s;
}

std::string render_probability(const Table &t) {
    require_header(t, {"t", "gamma", "P0", "P1", "P2", "P3", "norm_drift"});
    Range tx = column_range(t, 0);
    std::string s = svg_open();
    const char *colors[4] = {"black", "crimson", "seagreen", "royalblue"};
    for (std::size_t level = 0; level < 4; ++level) {
        std::string pts;
        for (const auto &row : t.rows) {
            double x = tx.map(row[0], kMargin, kWidth - kMargin);
            double y = kHeight - kMargin -
                       row[2 + level] * (kHeight - 2 * kMargin);
            pts += fmt(x) + "," + fmt(y) + " ";
        }
        s += "<polyline points=\"" + pts + "\" fill=\"none\" stroke=\"" +
             std::string(colors[level]) + "\"/>\n";
    }
    s += "</svg>\n";
    return s;
}

}  // namespace

std::string render_svg(const std::string &csv, PlotKind kind) {
    Table t = parse_csv(csv);
    switch (kind) {
        case PlotKind::butterfly:
            return render_butterfly(t);
        case PlotKind::density:
            return render_density(t);
        case PlotKind::probability:
            return render_probability(t);
    }
    throw aqs::InvalidSpec("unknown plot kind");
}

}  // namespace aqsim
