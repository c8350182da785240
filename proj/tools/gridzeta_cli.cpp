// gridzeta: command-line front end for the zeta function of the square grid.
//
// Exit codes: 0 success, 2 domain error, 3 precision error, 4 invariant failure.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <gridzeta.hpp>

namespace
{

using namespace gridzeta;
using io::json;
using mp_real = boost::multiprecision::cpp_bin_float_100;

enum class out_format { json, csv };

struct global_options
{
    out_format format = out_format::json;
    double tol = 1e-10;
    unsigned order = 20;
};

// --order is a u-exponent; the even-only series are computed through the
// next even power.
unsigned half_order(unsigned order)
{
    return std::max(1u, (order + 1u) / 2u);
}

void print_json(const json &j)
{
    std::cout << io::dump(j) << '\n';
}

void print_csv(const std::vector<std::string> &header, const std::vector<io::csv_row> &rows)
{
    io::csv_row h;
    for (const auto &c : header) {
        h << c;
    }
    std::cout << h.str() << '\n';
    for (const auto &r : rows) {
        std::cout << r.str() << '\n';
    }
}

// eval

complex eval_series_route(complex u, unsigned order, double tol)
{
    if (!(std::abs(u) < 1.0 / 3.0)) {
        throw domain_error("eval: the series route needs |u| < 1/3 (radius of convergence)");
    }
    const exact::exact_series z = exact::zeta_series(half_order(order));
    complex acc = 0.0, last = 0.0;
    for (std::size_t i = z.order() + 1u; i-- > 0;) {
        acc = acc * u + z[i].convert_to<double>();
    }
    for (std::size_t i = z.order() + 1u; i-- > 0;) {
        if (z[i] != 0) {
            last = z[i].convert_to<double>() * std::pow(u, static_cast<int>(i));
            break;
        }
    }
    if (std::abs(last) > tol * std::abs(acc)) {
        throw precision_error("eval: last series term " + io::format_number(std::abs(last)) +
                              " exceeds the tolerance; raise --order");
    }
    return acc;
}

int cmd_eval(const global_options &g, const std::string &u_text, const std::string &route)
{
    const complex u = io::parse_complex(u_text);
    const region_tag region = classify_u(u);
    complex k = 0.0, t = 0.0, z;
    if (u != complex(0.0)) {
        if (region == region_tag::excluded_point) {
            throw pole_error("eval: u is one of the excluded points +-1/3, +-1/sqrt(3), +-i/sqrt(3), +-1");
        }
        if (!in_omega(u)) {
            throw domain_error("eval: u lies outside Omega; use `sheets` for values on other sheets");
        }
        k = sf::modulus_from_u(u);
        t = sf::nome_t_from_u(u);
    }
    if (route == "theta") {
        z = surface::zeta_tilde(surface::lift_principal(u));
    } else if (route == "quadrature") {
        z = u == complex(0.0) ? complex(1.0) : oracles::zeta_via_quadrature(u, {g.tol, g.tol, 4000});
    } else {
        z = eval_series_route(u, g.order, g.tol);
    }
    if (g.format == out_format::json) {
        print_json(json{{"command", "eval"},
                        {"route", route},
                        {"u", io::complex_json(u)},
                        {"region", to_string(region)},
                        {"k", io::complex_json(k)},
                        {"t", io::complex_json(t)},
                        {"Z", io::complex_json(z)}});
    } else {
        io::csv_row r;
        r << u << route << std::string(to_string(region)) << k << t << z;
        print_csv({"u_re", "u_im", "route", "region", "k_re", "k_im", "t_re", "t_im", "Z_re", "Z_im"}, {r});
    }
    return 0;
}

// series

int cmd_series(const global_options &g)
{
    const unsigned m = half_order(g.order);
    const exact::exact_series trlog = exact::trlog_series(m);
    const exact::exact_series det = exp(trlog);
    const exact::exact_series zeta = exact::zeta_series(m);
    if (g.format == out_format::json) {
        print_json(json{{"command", "series"},
                        {"order", trlog.order()},
                        {"trlog", io::series_json(trlog)},
                        {"det", io::series_json(det)},
                        {"zeta", io::series_json(zeta)}});
    } else {
        std::vector<io::csv_row> rows;
        for (std::size_t i = 0; i <= trlog.order(); ++i) {
            io::csv_row r;
            r << i << exact::to_fraction_string(trlog[i]) << exact::to_fraction_string(det[i])
              << exact::to_fraction_string(zeta[i]);
            rows.push_back(r);
        }
        print_csv({"power", "trlog", "det", "zeta"}, rows);
    }
    return 0;
}

// plot

struct plot_options
{
    std::string kind = "real_zeta";
    double lo = -0.3, hi = 0.3;
    unsigned samples = 61;
    double t_radius = 0.9;
    double extent = 0.6;
};

std::vector<double> linspace(double lo, double hi, unsigned n)
{
    std::vector<double> v;
    for (unsigned i = 0; i < n; ++i) {
        v.push_back(n == 1u ? lo : lo + (hi - lo) * i / (n - 1u));
    }
    return v;
}

int cmd_plot(const global_options &g, const plot_options &p)
{
    std::vector<std::string> header;
    std::vector<std::vector<json>> rows;
    if (p.samples < 1u) {
        throw domain_error("plot: --samples must be positive");
    }
    if (p.kind == "real_zeta") {
        if (!(p.lo > -1.0 / 3.0 && p.hi < 1.0 / 3.0 && p.lo <= p.hi)) {
            throw domain_error("plot real_zeta: range must lie inside (-1/3, 1/3)");
        }
        header = {"u", "Z"};
        for (double u : linspace(p.lo, p.hi, p.samples)) {
            rows.push_back({u, surface::zeta_tilde(surface::lift_principal(u)).real()});
        }
    } else if (p.kind == "sheets_abs") {
        if (!(p.t_radius > 0.0 && p.t_radius <= surface::max_abs_t)) {
            throw domain_error("plot sheets_abs: --t-radius must lie in (0, 0.95]");
        }
        header = {"t_re", "t_im", "u_re", "u_im", "absZ"};
        for (double y : linspace(-p.t_radius, p.t_radius, p.samples)) {
            for (double x : linspace(-p.t_radius, p.t_radius, p.samples)) {
                const complex t(x, y);
                if (t == complex(0.0) || std::abs(t) > p.t_radius) {
                    continue;
                }
                try {
                    const auto pair = sf::u_pair_from_t(t);
                    for (complex u : {pair.plus, pair.minus}) {
                        const double a = std::abs(surface::zeta_tilde(surface::surface_point(u, t)));
                        rows.push_back({x, y, u.real(), u.imag(), a});
                    }
                } catch (const domain_error &) {
                    // branch points and poles over this t
                }
            }
        }
    } else if (p.kind == "imag_branchcut") {
        if (!(p.extent > 0.0)) {
            throw domain_error("plot imag_branchcut: --extent must be positive");
        }
        header = {"u_re", "u_im", "imZ"};
        for (double y : linspace(-p.extent, p.extent, p.samples)) {
            for (double x : linspace(-p.extent, p.extent, p.samples)) {
                const complex u(x, y);
                if (u == complex(0.0)) {
                    rows.push_back({x, y, 0.0});
                    continue;
                }
                try {
                    const complex t = sf::nome_t_principal_formula(sf::modulus_from_u(u));
                    if (std::abs(t) >= surface::max_abs_t) {
                        continue;
                    }
                    const complex z = t * std::exp(-surface::F_eval(t)) / (u * (1.0 - u * u));
                    rows.push_back({x, y, z.imag()});
                } catch (const error &) {
                    // on a pole or a cut of the formula
                }
            }
        }
    } else {
        throw domain_error("plot: unknown kind " + p.kind);
    }
    if (g.format == out_format::json) {
        json r = json::array();
        for (auto &row : rows) {
            r.push_back(json(row));
        }
        print_json(json{{"command", "plot"}, {"kind", p.kind}, {"columns", header}, {"rows", std::move(r)}});
    } else {
        std::vector<io::csv_row> out;
        for (const auto &row : rows) {
            io::csv_row r;
            for (const auto &v : row) {
                r << v.get<double>();
            }
            out.push_back(r);
        }
        print_csv(header, out);
    }
    return 0;
}

// sheets

std::string word_text(const surface::deck_word &w)
{
    if (w.empty()) {
        return "e";
    }
    std::string s;
    for (const auto &l : w) {
        if (!s.empty()) {
            s += ' ';
        }
        s += "g" + std::to_string(l.generator);
        if (l.exponent != 1) {
            s += "^" + std::to_string(l.exponent);
        }
    }
    return s;
}

int cmd_sheets(const global_options &g, const std::string &u_text, unsigned depth)
{
    const complex u = io::parse_complex(u_text);
    if (depth > 8u) {
        throw domain_error("sheets: --depth must be <= 8");
    }
    const auto sheets = surface::enumerate_sheets(u, depth);
    std::vector<complex> values;
    bool relations_ok = true;
    json points = json::array();
    std::vector<io::csv_row> rows;
    for (const auto &s : sheets) {
        values.push_back(s.zeta);
        const double rel = surface::relation_residual(s.point);
        const double fe = s.point.is_origin() ? 0.0 : surface::functional_equation_residual(s.point);
        relations_ok = relations_ok && rel <= surface::relation_tolerance;
        points.push_back(json{{"word", word_text(s.word)},
                              {"u", io::complex_json(s.point.u())},
                              {"t", io::complex_json(s.point.t())},
                              {"Z", io::complex_json(s.zeta)},
                              {"relation_residual", rel},
                              {"functional_equation_residual", fe}});
        io::csv_row r;
        r << word_text(s.word) << s.point.u() << s.point.t() << s.zeta << rel << fe;
        rows.push_back(r);
    }
    const std::size_t distinct = surface::count_distinct(values);
    if (g.format == out_format::json) {
        print_json(json{{"command", "sheets"},
                        {"u", io::complex_json(u)},
                        {"depth", depth},
                        {"points", std::move(points)},
                        {"distinct_Z", distinct}});
    } else {
        print_csv({"word", "u_re", "u_im", "t_re", "t_im", "Z_re", "Z_im", "relation_residual",
                   "functional_equation_residual"},
                  rows);
    }
    if (!relations_ok) {
        throw invariant_error("sheets: a point is off the surface relation");
    }
    return 0;
}

// converge

int cmd_converge(const global_options &g, const std::string &family_text, const std::string &u_text,
                 const std::vector<std::size_t> &sizes, const std::string &precision)
{
    graphs::graph_family family;
    if (family_text == "torus") {
        family = graphs::graph_family::torus;
    } else if (family_text == "grid") {
        family = graphs::graph_family::grid;
    } else {
        throw domain_error("converge: family must be torus or grid");
    }
    const complex u = io::parse_complex(u_text);
    if (u.imag() != 0.0) {
        throw domain_error("converge: u must be real");
    }
    if (family == graphs::graph_family::torus && !(std::abs(u.real()) < 1.0 / 3.0)) {
        throw domain_error("converge: torus family needs -1/3 < u < 1/3");
    }
    const auto table = precision == "double" ? graphs::convergence_table<double>(family, u.real(), sizes)
                                             : graphs::convergence_table<mp_real>(family, mp_real(u.real()), sizes);
    if (g.format == out_format::json) {
        json rows = json::array();
        for (const auto &r : table) {
            rows.push_back(json{{"size", r.size}, {"error", r.error}});
        }
        print_json(json{{"command", "converge"},
                        {"family", family_text},
                        {"u", u.real()},
                        {"precision", precision},
                        {"rows", std::move(rows)}});
    } else {
        std::vector<io::csv_row> rows;
        for (const auto &r : table) {
            io::csv_row row;
            row << r.size << r.error;
            rows.push_back(row);
        }
        print_csv({"size", "error"}, rows);
    }
    return 0;
}

// walks

int cmd_walks(const global_options &g, unsigned max_length)
{
    if (max_length < 1u || max_length > 16u) {
        throw domain_error("walks: --max-length must lie in [1, 16]");
    }
    const auto series_counts = exact::geodesic_counts_from_series(max_length);
    json rows = json::array();
    std::vector<io::csv_row> csv;
    bool consistent = true;
    for (unsigned m = 1; m <= max_length; ++m) {
        const exact::big_int closed = m % 2u ? exact::big_int(0) : oracles::closed_walk_count_dp(m / 2u);
        const exact::big_int dp = oracles::geodesic_count_dp(m);
        const exact::big_int &ser = series_counts[m - 1u].second;
        consistent = consistent && dp == ser;
        json row{{"length", m}, {"closed_walks", closed.str()}, {"geodesics_dp", dp.str()},
                 {"geodesics_series", ser.str()}};
        io::csv_row r;
        r << m << closed.str() << dp.str() << ser.str();
        if (m <= 12u) {
            const auto po = oracles::primitive_class_count(m, true), pu = oracles::primitive_class_count(m, false);
            row["primitive_oriented"] = po;
            row["primitive_unoriented"] = pu;
            r << po << pu;
        } else {
            row["primitive_oriented"] = nullptr;
            row["primitive_unoriented"] = nullptr;
            r << "" << "";
        }
        rows.push_back(std::move(row));
        csv.push_back(r);
    }
    if (g.format == out_format::json) {
        print_json(json{{"command", "walks"}, {"max_length", max_length}, {"rows", std::move(rows)}});
    } else {
        print_csv({"length", "closed_walks", "geodesics_dp", "geodesics_series", "primitive_oriented",
                   "primitive_unoriented"},
                  csv);
    }
    if (!consistent) {
        throw invariant_error("walks: lattice count disagrees with the series");
    }
    return 0;
}

// check

struct check_result
{
    std::string name;
    bool pass;
    std::string detail;
};

std::string sci(double x)
{
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << x;
    return os.str();
}

int cmd_check(const global_options &g, int corrupt)
{
    const unsigned m = half_order(g.order);
    std::vector<std::pair<std::string, std::function<check_result()>>> battery;

    battery.emplace_back("series_vs_theta", [&] {
        exact::exact_series z = exact::zeta_series(m);
        if (corrupt >= 0) {
            if (static_cast<std::size_t>(corrupt) > z.order()) {
                throw domain_error("check: --corrupt-coefficient beyond the series order");
            }
            z[static_cast<std::size_t>(corrupt)] += 1;
        }
        const bool ok = z == exact::zeta_series_via_theta(m);
        return check_result{"", ok, "through u^" + std::to_string(2u * m)};
    });
    battery.emplace_back("geodesics_dp_vs_series", [] {
        const auto ser = exact::geodesic_counts_from_series(14);
        bool ok = true;
        for (unsigned k = 2; k <= 14u; k += 2) {
            ok = ok && oracles::geodesic_count_dp(k) == ser[k - 1u].second;
        }
        return check_result{"", ok, "even m <= 14"};
    });
    battery.emplace_back("closed_walks", [] {
        bool ok = true;
        for (unsigned k = 0; k <= 12u; ++k) {
            ok = ok && oracles::closed_walk_count_dp(k) == exact::closed_walk_moment(k);
        }
        return check_result{"", ok, "k <= 12"};
    });
    battery.emplace_back("primitive_classes", [] {
        const auto ser = exact::geodesic_counts_from_series(12);
        bool ok = true;
        for (unsigned n = 1; n <= 12u; ++n) {
            exact::big_int sum = 0;
            for (unsigned l = 1; l <= n; ++l) {
                if (n % l == 0u) {
                    sum += exact::big_int(l) * oracles::primitive_class_count(l, true);
                }
            }
            ok = ok && sum == ser[n - 1u].second;
        }
        return check_result{"", ok, "m <= 12"};
    });
    battery.emplace_back("theta_vs_quadrature", [&] {
        double worst = 0.0;
        for (complex u : {complex(0.1), complex(-0.25), complex(0.0, 0.3), complex(0.2, -0.15), complex(0.5, 0.01)}) {
            const complex a = surface::zeta_tilde(surface::lift_principal(u));
            const complex b = oracles::zeta_via_quadrature(u, {g.tol, g.tol, 4000});
            worst = std::max(worst, std::abs(a - b) / std::abs(a));
        }
        return check_result{"", worst < 1e-8, "max rel diff " + sci(worst)};
    });
    battery.emplace_back("sheets_functional_equation", [] {
        const auto sheets = surface::enumerate_sheets(0.15, 2);
        double fe = 0.0, rel = 0.0;
        std::vector<complex> values;
        for (const auto &s : sheets) {
            fe = std::max(fe, surface::functional_equation_residual(s.point));
            rel = std::max(rel, surface::relation_residual(s.point));
            values.push_back(s.zeta);
        }
        const std::size_t distinct = surface::count_distinct(values);
        return check_result{"", fe < 1e-10 && rel < surface::relation_tolerance && distinct >= 5u,
                            std::to_string(distinct) + " distinct values, fe " + sci(fe) + ", relation " + sci(rel)};
    });
    battery.emplace_back("finite_functional_equation", [] {
        double worst = 0.0;
        for (auto [n, k] : {std::pair{3u, 3u}, {4u, 4u}, {3u, 5u}, {6u, 6u}}) {
            const auto gr = graphs::torus_graph(n, k);
            for (complex u : {complex(0.1), complex(0.05, 0.02), complex(-0.2, 0.1), complex(0.4, 0.3)}) {
                worst = std::max(worst, graphs::finite_functional_equation_residual(gr, u));
            }
        }
        return check_result{"", worst < 1e-8, "max residual " + sci(worst)};
    });
    battery.emplace_back("torus_determinant_routes", [] {
        const auto gr = graphs::torus_graph(4, 4);
        double worst = 0.0;
        for (complex u : {complex(0.1), complex(0.13, 0.07), complex(-0.3, 0.2)}) {
            const complex a = graphs::bass_determinant(gr, u), b = graphs::torus_determinant_eigen(4, 4, u);
            worst = std::max(worst, std::abs(a - b) / std::abs(b));
        }
        return check_result{"", worst < 1e-10, "max rel diff " + sci(worst)};
    });
    battery.emplace_back("theta_identities", [] {
        double jac = 0.0, kt = 0.0;
        for (double k : {0.1, 0.35, 0.6, 0.85, 0.95}) {
            const double t = sf::nome_t_from_modulus(k), q = t * t;
            const double th3 = sf::theta3(q), th4 = sf::theta4(q), th2sq = sf::theta2_sq(t);
            jac = std::max(jac, std::abs(th2sq * th2sq + std::pow(th4, 4) - std::pow(th3, 4)));
            kt = std::max(kt, std::abs(sf::elliptic_k(k) - M_PI / 2.0 * th3 * th3));
        }
        return check_result{"", jac < 1e-12 && kt < 1e-10, "jacobi " + sci(jac) + ", K " + sci(kt)};
    });
    battery.emplace_back("zint_identity", [] {
        double worst = 0.0;
        for (int i = -9; i <= 9; ++i) {
            worst = std::max(worst, oracles::zint_identity_residual(i / 10.0));
        }
        return check_result{"", worst < 1e-10, "max residual " + sci(worst)};
    });
    battery.emplace_back("torus_limit", [] {
        const std::vector<std::size_t> sizes{8, 16, 32};
        const auto t = graphs::convergence_table<mp_real>(graphs::graph_family::torus, mp_real("0.1"), sizes);
        bool ok = true;
        for (std::size_t i = 1; i < t.size(); ++i) {
            ok = ok && t[i].error < t[i - 1u].error / 2.0;
        }
        return check_result{"", ok, "errors " + sci(t[0].error) + " " + sci(t[1].error) + " " + sci(t[2].error)};
    });

    std::vector<check_result> results;
    bool all = true;
    for (auto &[name, fn] : battery) {
        check_result r;
        try {
            r = fn();
        } catch (const domain_error &) {
            throw;
        } catch (const std::exception &e) {
            r = {"", false, e.what()};
        }
        r.name = name;
        all = all && r.pass;
        results.push_back(r);
    }
    if (g.format == out_format::json) {
        json checks = json::array();
        for (const auto &r : results) {
            checks.push_back(json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        }
        print_json(json{{"command", "check"}, {"checks", std::move(checks)}, {"passed", all}});
    } else {
        std::vector<io::csv_row> rows;
        for (const auto &r : results) {
            io::csv_row row;
            row << r.name << (r.pass ? "pass" : "fail") << r.detail;
            rows.push_back(row);
        }
        print_csv({"name", "result", "detail"}, rows);
    }
    return all ? 0 : 4;
}

int report(const char *kind, int code, const std::exception &e)
{
    std::cerr << io::dump(json{{"error", {{"kind", kind}, {"exit_code", code}, {"message", e.what()}}}}, -1) << '\n';
    return code;
}

}

int main(int argc, char **argv)
{
    CLI::App app{"Zeta function of the square grid Z x Z"};
    app.fallthrough();
    app.require_subcommand(1);

    global_options g;
    std::string format = "json";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--tol", g.tol, "Quadrature / truncation tolerance")->check(CLI::PositiveNumber);
    app.add_option("--order", g.order, "Series order (u-exponent, rounded up to even)")->check(CLI::Range(1u, 400u));

    std::string u_text = "0", route = "theta";
    auto *eval = app.add_subcommand("eval", "Evaluate Z(u) on the principal sheet");
    eval->add_option("--u", u_text, "Complex literal a+bi")->required();
    eval->add_option("--route", route)->check(CLI::IsMember({"theta", "quadrature", "series"}));

    auto *series = app.add_subcommand("series", "Exact trlog, det and Z series");

    plot_options p;
    auto *plot = app.add_subcommand("plot", "Plot data as a table");
    plot->add_option("--kind", p.kind)->check(CLI::IsMember({"real_zeta", "sheets_abs", "imag_branchcut"}));
    plot->add_option("--lo", p.lo, "real_zeta: lower end of the u range");
    plot->add_option("--hi", p.hi, "real_zeta: upper end of the u range");
    plot->add_option("--samples", p.samples, "Samples per axis");
    plot->add_option("--t-radius", p.t_radius, "sheets_abs: radius of the t disk");
    plot->add_option("--extent", p.extent, "imag_branchcut: half-width of the u square");

    std::string sheets_u = "0.15";
    unsigned depth = 2;
    auto *sheets = app.add_subcommand("sheets", "Values of Z over u on the sheets reached by deck words");
    sheets->add_option("--u", sheets_u, "Complex literal a+bi in Omega");
    sheets->add_option("--depth", depth, "Maximum word length");

    std::string family = "torus", conv_u = "0.1", precision = "high";
    std::vector<std::size_t> sizes{8, 16, 32, 64};
    auto *converge = app.add_subcommand("converge", "Finite-graph convergence table");
    converge->add_option("--family", family)->check(CLI::IsMember({"torus", "grid"}));
    converge->add_option("--u", conv_u, "Real u");
    converge->add_option("--sizes", sizes, "Increasing side lengths")->delimiter(',');
    converge->add_option("--precision", precision, "double or high (100 digits)")
        ->check(CLI::IsMember({"double", "high"}));

    unsigned max_length = 12;
    auto *walks = app.add_subcommand("walks", "Lattice walk and geodesic counts");
    walks->add_option("--max-length", max_length);

    int corrupt = -1;
    auto *check = app.add_subcommand("check", "Run the invariant battery");
    check->add_option("--corrupt-coefficient", corrupt, "Add 1 to this Z coefficient before comparing (fault injection)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return report("usage", 2, e);
    }
    g.format = format == "csv" ? out_format::csv : out_format::json;

    try {
        if (*eval) {
            return cmd_eval(g, u_text, route);
        }
        if (*series) {
            return cmd_series(g);
        }
        if (*plot) {
            return cmd_plot(g, p);
        }
        if (*sheets) {
            return cmd_sheets(g, sheets_u, depth);
        }
        if (*converge) {
            return cmd_converge(g, family, conv_u, sizes, precision);
        }
        if (*walks) {
            return cmd_walks(g, max_length);
        }
        if (*check) {
            return cmd_check(g, corrupt);
        }
    } catch (const domain_error &e) {
        return report("domain", 2, e);
    } catch (const precision_error &e) {
        return report("precision", 3, e);
    } catch (const invariant_error &e) {
        return report("invariant", 4, e);
    } catch (const std::exception &e) {
        return report("internal", 4, e);
    }
    return 0;
}
