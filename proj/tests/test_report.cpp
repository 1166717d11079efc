#include <doctest.h>

#include "dynamo/report.hpp"

using namespace dynamo;

TEST_SUITE_BEGIN("report");

TEST_CASE("scientific formatting carries 12 significant digits") {
    CHECK(fmt_sci(0.5) == "5.00000000000e-01");
    CHECK(fmt_sci(-1.0) == "-1.00000000000e+00");
    CHECK(fmt_sci(0.881373587019543) == "8.81373587020e-01");
}

TEST_CASE("sweep CSV schema") {
    std::vector<SweepCell> cells(2);
    cells[0].l = 0;
    cells[0].x0 = 0.5;
    PencilSolution s;
    s.lambda = 0.25;
    s.epsilon = 0.5;
    s.branch = Branch::FPlus;
    s.localized = true;
    s.residual = 1e-12;
    cells[0].solution = s;
    cells[1].l = 1;
    cells[1].x0 = 0.1;  // none row

    const std::string csv = sweep_csv(cells);
    CHECK(csv.find("l,x0,lambda,epsilon,branch,localized,residual\n") == 0);
    CHECK(csv.find("0,5.00000000000e-01,2.50000000000e-01,5.00000000000e-01,F+,true,"
                   "1.00000000000e-12\n") != std::string::npos);
    CHECK(csv.find("1,1.00000000000e-01,,,,false,\n") != std::string::npos);
    CHECK(csv.find('\r') == std::string::npos);
}

TEST_CASE("reduced and perturb CSV schemas") {
    const std::string rcsv =
        reduced_csv({{0, 1.0, 0.58}, {1, 0.1, std::nullopt}});
    CHECK(rcsv.find("l,x0,lambda\n") == 0);
    CHECK(rcsv.find("1,1.00000000000e-01,\n") != std::string::npos);

    SlopeRow row;
    row.delta = -0.05;
    row.epsilon_pencil = 0.0254;
    row.epsilon_linear = 0.025;
    row.deviation = 4e-4;
    const std::string pcsv = perturb_csv({row});
    CHECK(pcsv.find("delta,epsilon_pencil,epsilon_linear,deviation\n") == 0);
    CHECK(pcsv.find("-5.00000000000e-02,") != std::string::npos);
}

TEST_CASE("dirac CSV schema") {
    RegularityRow r;
    r.x0 = 0.5;
    r.nodes = 0;
    r.regular = true;
    r.dirac_residual = 3e-7;
    const std::string csv = dirac_csv(0, {r});
    CHECK(csv.find("l,x0,nodes,regular,dirac_residual\n") == 0);
    CHECK(csv.find("0,5.00000000000e-01,0,true,3.00000000000e-07\n") !=
          std::string::npos);
}

TEST_CASE("SVG output is a well-formed static plot") {
    std::vector<Series> series(2);
    series[0].label = "l = 0";
    series[0].points = {{0.0, 0.1}, {1.0, 0.4}, {2.0, 0.2}};
    series[1].label = "l = 1";
    series[1].points = {{0.5, -0.1}, {1.5, 0.3}};
    const std::string svg = svg_plot("title", "x0", "lambda", series);
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.rfind("</svg>\n") == svg.size() - 7);
    size_t polylines = 0, pos = 0;
    while ((pos = svg.find("<polyline", pos)) != std::string::npos) {
        ++polylines;
        pos += 9;
    }
    CHECK(polylines == 2);
    CHECK(svg.find("l = 1") != std::string::npos);
    // deterministic
    CHECK(svg == svg_plot("title", "x0", "lambda", series));
}

TEST_CASE("series builders split gaps") {
    std::vector<SweepCell> cells(3);
    for (int i = 0; i < 3; ++i) {
        cells[i].l = 0;
        cells[i].x0 = 0.5 * i;
    }
    PencilSolution s;
    s.lambda = 0.3;
    s.epsilon = 0.1;
    cells[0].solution = s;
    cells[2].solution = s;  // gap at index 1
    const auto lam = lambda_series(cells);
    CHECK(lam.size() == 2);
    CHECK(lam[0].points.size() == 1);
    CHECK(lam[1].points.size() == 1);
}

TEST_SUITE_END();
