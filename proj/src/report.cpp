#include "dynamo/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace dynamo {

std::string fmt_sci(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.11e", v);
    return buf;
}

namespace {

std::string fmt_g(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace

std::string sweep_csv(const std::vector<SweepCell>& cells) {
    std::string out = "l,x0,lambda,epsilon,branch,localized,residual\n";
    for (const SweepCell& c : cells) {
        out += std::to_string(c.l);
        out += ',';
        out += fmt_sci(c.x0);
        out += ',';
        if (c.solution) {
            const PencilSolution& s = *c.solution;
            out += fmt_sci(s.lambda);
            out += ',';
            out += fmt_sci(s.epsilon);
            out += ',';
            out += to_string(s.branch);
            out += ',';
            out += s.localized ? "true" : "false";
            out += ',';
            out += fmt_sci(s.residual);
        } else {
            out += ",,,false,";
        }
        out += '\n';
    }
    return out;
}

std::string reduced_csv(const std::vector<ReducedRow>& rows) {
    std::string out = "l,x0,lambda\n";
    for (const ReducedRow& r : rows) {
        out += std::to_string(r.l);
        out += ',';
        out += fmt_sci(r.x0);
        out += ',';
        if (r.lambda) out += fmt_sci(*r.lambda);
        out += '\n';
    }
    return out;
}

std::string perturb_csv(const std::vector<SlopeRow>& rows) {
    std::string out = "delta,epsilon_pencil,epsilon_linear,deviation\n";
    for (const SlopeRow& r : rows) {
        out += fmt_sci(r.delta);
        out += ',';
        if (r.epsilon_pencil) out += fmt_sci(*r.epsilon_pencil);
        out += ',';
        out += fmt_sci(r.epsilon_linear);
        out += ',';
        if (r.deviation) out += fmt_sci(*r.deviation);
        out += '\n';
    }
    return out;
}

std::string dirac_csv(int l, const std::vector<RegularityRow>& rows) {
    std::string out = "l,x0,nodes,regular,dirac_residual\n";
    for (const RegularityRow& r : rows) {
        out += std::to_string(l);
        out += ',';
        out += fmt_sci(r.x0);
        out += ',';
        out += std::to_string(r.nodes);
        out += ',';
        out += r.regular ? "true" : "false";
        out += ',';
        if (r.dirac_residual) out += fmt_sci(*r.dirac_residual);
        out += '\n';
    }
    return out;
}

namespace {

constexpr double kW = 800, kH = 560;
constexpr double kML = 75, kMR = 150, kMT = 45, kMB = 55;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

double nice_step(double span) {
    if (!(span > 0.0)) return 1.0;
    const double raw = span / 6.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double r = raw / mag;
    if (r < 1.5) return mag;
    if (r < 3.5) return 2.0 * mag;
    if (r < 7.5) return 5.0 * mag;
    return 10.0 * mag;
}

}  // namespace

std::string svg_plot(const std::string& title, const std::string& xlabel,
                     const std::string& ylabel, const std::vector<Series>& series) {
    double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
    bool first = true;
    for (const Series& s : series)
        for (auto [x, y] : s.points) {
            if (first) {
                xmin = xmax = x;
                ymin = ymax = y;
                first = false;
            }
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    if (xmax - xmin < 1e-12) xmax = xmin + 1.0;
    if (ymax - ymin < 1e-12) ymax = ymin + 1.0;
    const double ypad = 0.05 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;

    const double pw = kW - kML - kMR, ph = kH - kMT - kMB;
    auto px = [&](double x) { return kML + (x - xmin) / (xmax - xmin) * pw; };
    auto py = [&](double y) { return kMT + (1.0 - (y - ymin) / (ymax - ymin)) * ph; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\""
        << kH << "\" viewBox=\"0 0 " << kW << " " << kH << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<text x=\"" << kW / 2 << "\" y=\"24\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"16\">" << title << "</text>\n";

    // Axes box and ticks.
    svg << "<rect x=\"" << kML << "\" y=\"" << kMT << "\" width=\"" << pw
        << "\" height=\"" << ph << "\" fill=\"none\" stroke=\"black\"/>\n";
    const double xs = nice_step(xmax - xmin), ys = nice_step(ymax - ymin);
    svg << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"black\">\n";
    for (double t = std::ceil(xmin / xs) * xs; t <= xmax + 1e-9 * xs; t += xs) {
        const double X = px(t);
        svg << "<line x1=\"" << fmt_g(X) << "\" y1=\"" << kMT + ph << "\" x2=\""
            << fmt_g(X) << "\" y2=\"" << kMT + ph + 5 << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << fmt_g(X) << "\" y=\"" << kMT + ph + 18
            << "\" text-anchor=\"middle\">" << fmt_g(t) << "</text>\n";
    }
    for (double t = std::ceil(ymin / ys) * ys; t <= ymax + 1e-9 * ys; t += ys) {
        const double Y = py(t);
        svg << "<line x1=\"" << kML - 5 << "\" y1=\"" << fmt_g(Y) << "\" x2=\"" << kML
            << "\" y2=\"" << fmt_g(Y) << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << kML - 8 << "\" y=\"" << fmt_g(Y + 4)
            << "\" text-anchor=\"end\">" << fmt_g(t) << "</text>\n";
    }
    svg << "<text x=\"" << kML + pw / 2 << "\" y=\"" << kH - 12
        << "\" text-anchor=\"middle\" font-size=\"13\">" << xlabel << "</text>\n"
        << "<text x=\"18\" y=\"" << kMT + ph / 2
        << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 18 "
        << kMT + ph / 2 << ")\">" << ylabel << "</text>\n</g>\n";

    // Zero line if it is inside the frame.
    if (ymin < 0.0 && ymax > 0.0)
        svg << "<line x1=\"" << kML << "\" y1=\"" << fmt_g(py(0.0)) << "\" x2=\""
            << kML + pw << "\" y2=\"" << fmt_g(py(0.0))
            << "\" stroke=\"#bbbbbb\" stroke-dasharray=\"4,3\"/>\n";

    // Legend entries keyed by label (series may be split into segments).
    std::map<std::string, const char*> color_of;
    int ci = 0;
    for (const Series& s : series)
        if (!color_of.count(s.label)) color_of[s.label] = kPalette[ci++ % 8];

    for (const Series& s : series) {
        if (s.points.empty()) continue;
        svg << "<polyline fill=\"none\" stroke=\"" << color_of[s.label]
            << "\" stroke-width=\"1.5\" points=\"";
        for (auto [x, y] : s.points) svg << fmt_g(px(x)) << ',' << fmt_g(py(y)) << ' ';
        svg << "\"/>\n";
    }

    double ly = kMT + 10;
    svg << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
    for (const auto& [label, color] : color_of) {
        svg << "<line x1=\"" << kW - kMR + 12 << "\" y1=\"" << fmt_g(ly) << "\" x2=\""
            << kW - kMR + 38 << "\" y2=\"" << fmt_g(ly) << "\" stroke=\"" << color
            << "\" stroke-width=\"2\"/>\n"
            << "<text x=\"" << kW - kMR + 44 << "\" y=\"" << fmt_g(ly + 4) << "\">"
            << label << "</text>\n";
        ly += 18;
    }
    svg << "</g>\n</svg>\n";
    return svg.str();
}

namespace {

std::vector<Series> split_series(
    const std::map<int, std::vector<std::optional<std::pair<double, double>>>>& by_l,
    const std::string& stem) {
    std::vector<Series> out;
    for (const auto& [l, pts] : by_l) {
        Series cur;
        cur.label = stem + std::to_string(l);
        for (const auto& p : pts) {
            if (p) {
                cur.points.push_back(*p);
            } else if (!cur.points.empty()) {
                out.push_back(cur);
                cur.points.clear();
            }
        }
        if (!cur.points.empty()) out.push_back(std::move(cur));
    }
    return out;
}

}  // namespace

std::vector<Series> lambda_series(const std::vector<SweepCell>& cells) {
    std::map<int, std::vector<std::optional<std::pair<double, double>>>> by_l;
    for (const SweepCell& c : cells)
        by_l[c.l].push_back(c.solution
                                ? std::optional(std::pair{c.x0, c.solution->lambda})
                                : std::nullopt);
    return split_series(by_l, "l = ");
}

std::vector<Series> epsilon_series(const std::vector<SweepCell>& cells) {
    std::map<int, std::vector<std::optional<std::pair<double, double>>>> by_l;
    for (const SweepCell& c : cells)
        by_l[c.l].push_back(c.solution
                                ? std::optional(std::pair{c.x0, c.solution->epsilon})
                                : std::nullopt);
    return split_series(by_l, "l = ");
}

std::vector<Series> reduced_series(const std::vector<ReducedRow>& rows) {
    std::map<int, std::vector<std::optional<std::pair<double, double>>>> by_l;
    for (const ReducedRow& r : rows)
        by_l[r.l].push_back(r.lambda ? std::optional(std::pair{r.x0, *r.lambda})
                                     : std::nullopt);
    return split_series(by_l, "l = ");
}

}  // namespace dynamo
