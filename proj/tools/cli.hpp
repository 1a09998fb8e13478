#pragma once

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hilbwc/hilbwc.hpp"
#include "hilbwc/verify.hpp"

namespace hilbwc::cli {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr const char* kSchema = "hilbwc.result/1";

using Json = nlohmann::ordered_json;

enum class Format { table, json };

/// Exit codes: 0 success, 1 a requested check failed, 2 usage or range error.
enum ExitCode : int { ok = 0, check_failed = 1, usage_error = 2 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Json terms_json(const LaurentPoly& p)
{
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back(Json{{"coeff", c.to_string()}, {"exp", e}});
    return terms;
}

inline Json poly_json(const LaurentPoly& p)
{
    return Json{{"variable", std::string(variable_name(p.variable()))}, {"terms", terms_json(p)}};
}

inline Json series_json(const LaurentSeries& s)
{
    Json coeffs = Json::array();
    for (const auto& c : s.coefficients())
        coeffs.push_back(terms_json(c));
    return Json{{"variable", "t"}, {"series_variable", "q"}, {"order", s.order()}, {"coefficients", coeffs}};
}

inline Json rational_series_json(const RationalSeries& s)
{
    Json coeffs = Json::array();
    for (const auto& c : s.coefficients())
        coeffs.push_back(c.to_string());
    return Json{{"series_variable", "q"}, {"order", s.order()}, {"coefficients", coeffs}};
}

/// {"result": ..., "query": ..., "schema": ..., "version": ...}, in that order.
inline std::string emit_json(const Json& result, const Json& query)
{
    Json doc;
    doc["result"] = result;
    doc["query"] = query;
    doc["schema"] = kSchema;
    doc["version"] = kVersion;
    return doc.dump() + "\n";
}

inline std::string bracket_label(int n, const InsertionList& ks)
{
    return "<" + ks.to_string() + ">_" + std::to_string(n);
}

inline void require(bool ok, const std::string& message)
{
    if (!ok)
        throw UsageError(message);
}

/// Parses argv and dispatches one subcommand. Output goes to `out` (or the
/// --out file), diagnostics to `err`.
inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact equivariant integrals on Hilbert schemes of points of C^2 and their wall-crossing", "hilbwc"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    int n = 0, order = 0, d = 0, c = 0, psi1 = 0, psiinf = 0, k = 0;
    std::vector<int> chs;
    bool check = false;
    std::string format_name = "table";
    std::string out_path;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"table", "json"}));
        sub->add_option("--out", out_path, "Write the result to FILE instead of standard output");
    };

    auto* partitions = app.add_subcommand("partitions", "Fixed points of Hilb_n(C^2) with their weights");
    partitions->add_option("--n", n, "Number of points")->required();

    auto* integral = app.add_subcommand("hilb-integral", "Localization integral of ch_k insertions over Hilb_n(C^2)");
    integral->add_option("--n", n, "Number of points")->required();
    integral->add_option("--k,--ch", chs, "Insert ch_K (repeatable)")->take_all()->allow_extra_args(false);

    auto* ifunction = app.add_subcommand("ifunction", "Nonpolar part of the I-function in u = t + z");
    ifunction->add_option("--n", n, "Number of points")->required();
    ifunction->add_option("--k,--ch", chs, "Insert ch_K (repeatable)")->take_all()->allow_extra_args(false);

    auto* tn = app.add_subcommand("tn", "Integral of psi1^A psiinf^B over T_N");
    tn->add_option("--n", n, "N")->required();
    tn->add_option("--psi1", psi1, "Power of psi1")->required();
    tn->add_option("--psiinf", psiinf, "Power of psiinf")->required();

    auto* series = app.add_subcommand("ch-series", "Generating series of <ch_k>_n via wall-crossing");
    series->add_option("--k,--ch", k, "k")->required();
    series->add_option("--order", order, "Highest power of q")->required();

    auto* euler = app.add_subcommand("euler", "Euler characteristic series of Hilb_n of a curve (d=1) or surface (d=2)");
    euler->add_option("--d", d, "Dimension, 1 or 2")->required();
    euler->add_option("--c", c, "c_1 (d=1) or c_2 (d=2)")->required();
    euler->add_option("--order", order, "Highest power of q")->required();
    euler->add_flag("--check", check, "Also print the closed form and compare");

    auto* dt = app.add_subcommand("dt-check", "Threefold identity exp(c q')|q'=log M(-q) = M(-q)^c");
    dt->add_option("--c", c, "c_3(T_X (x) K_X)")->required();
    dt->add_option("--order", order, "Highest power of q")->required();

    auto* verify_cmd = app.add_subcommand("verify", "Run every acceptance check and print a pass/fail table");

    for (auto* sub : {partitions, integral, ifunction, tn, series, euler, dt, verify_cmd})
        add_common(sub);

    std::vector<std::string> args(argv.rbegin(), argv.rend());
    if (!args.empty())
        args.pop_back(); // program name
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "hilbwc: " << e.what() << "\n";
        return usage_error;
    }

    const Format format = format_name == "json" ? Format::json : Format::table;
    std::ostringstream text;
    int status = ok;
    try {
        if (partitions->parsed()) {
            require(n >= 0, "--n must be >= 0");
            Json list = Json::array();
            for (const Partition& lambda : enumerate_partitions(n)) {
                const auto data = fixed_point_data(lambda);
                if (format == Format::table) {
                    text << lambda.to_string() << "  tangent:";
                    for (const Weight& w : data->tangent)
                        text << " (" << w.a << "," << w.b << ")";
                    text << "  taut:";
                    for (const Weight& w : data->taut)
                        text << " (" << w.a << "," << w.b << ")";
                    text << "\n";
                }
                Json tangent = Json::array(), taut = Json::array();
                for (const Weight& w : data->tangent)
                    tangent.push_back({w.a, w.b});
                for (const Weight& w : data->taut)
                    taut.push_back({w.a, w.b});
                list.push_back(Json{{"parts", lambda.parts()}, {"tangent", tangent}, {"taut", taut}});
            }
            if (format == Format::json)
                text << emit_json(list, Json{{"subcommand", "partitions"}, {"n", n}});
        } else if (integral->parsed() || ifunction->parsed()) {
            require(n >= 1, "--n must be >= 1");
            for (int kk : chs)
                require(kk >= 0, "--ch must be >= 0");
            const InsertionList ks(chs);
            Json query{{"subcommand", integral->parsed() ? "hilb-integral" : "ifunction"}, {"n", n}, {"ch", ks.ks()}};
            if (integral->parsed()) {
                const LaurentPoly value = hilb_integral(n, ks);
                if (format == Format::json)
                    text << emit_json(poly_json(value), query);
                else
                    text << bracket_label(n, ks) << " = " << value << "\n";
            } else {
                const UMonomial m = nonpolar_ifunction(n, ks);
                const LaurentPoly value = LaurentPoly::monomial(m.coeff, m.exp, Variable::u);
                if (format == Format::json)
                    text << emit_json(poly_json(value), query);
                else
                    text << "I_" << n << "(z, " << ks.to_string() << ")_+ = " << m.to_string() << "   (u = t + z)\n";
            }
        } else if (tn->parsed()) {
            require(n >= 2, "--n must be >= 2 for T_N");
            require(psi1 >= 0 && psiinf >= 0, "psi powers must be >= 0");
            const Rational value = tn_integral(n, psi1, psiinf);
            if (format == Format::json)
                text << emit_json(Json{{"value", value.to_string()}},
                                  Json{{"subcommand", "tn"}, {"n", n}, {"psi1", psi1}, {"psiinf", psiinf}});
            else
                text << value << "\n";
        } else if (series->parsed()) {
            require(k >= 0, "--k must be >= 0");
            require(order >= 1, "--order must be >= 1");
            const LaurentSeries s = ch_series(k, order);
            if (format == Format::json) {
                text << emit_json(series_json(s), Json{{"subcommand", "ch-series"}, {"k", k}, {"order", order}});
            } else {
                for (int i = 1; i <= order; ++i)
                    text << "q^" << i << ": " << s[i] << "\n";
            }
        } else if (euler->parsed()) {
            require(d == 1 || d == 2, "--d must be 1 or 2");
            require(order >= 0, "--order must be >= 0");
            const RationalSeries wc = euler_series_wc(d, c, order);
            Json query{{"subcommand", "euler"}, {"d", d}, {"c", c}, {"order", order}, {"check", check}};
            Json result{{"wall_crossing", rational_series_json(wc)}};
            if (check) {
                const RationalSeries closed = euler_series_closed(d, c, order);
                const bool match = wc == closed;
                status = match ? ok : check_failed;
                result["closed"] = rational_series_json(closed);
                result["match"] = match;
                if (format == Format::table)
                    text << "wall-crossing: " << wc.to_string() << "\nclosed form:   " << closed.to_string() << "\n"
                         << (match ? "MATCH" : "MISMATCH") << "\n";
            } else if (format == Format::table) {
                text << wc.to_string() << "\n";
            }
            if (format == Format::json)
                text << emit_json(result, query);
        } else if (dt->parsed()) {
            require(order >= 1, "--order must be >= 1");
            const DtSides sides = dt_identity_sides(c, order);
            const bool match = sides.substituted == sides.closed;
            status = match ? ok : check_failed;
            if (format == Format::json) {
                text << emit_json(Json{{"substituted", rational_series_json(sides.substituted)},
                                       {"closed", rational_series_json(sides.closed)},
                                       {"match", match}},
                                  Json{{"subcommand", "dt-check"}, {"c", c}, {"order", order}});
            } else {
                text << "exp(c q')|q'=log M(-q): " << sides.substituted.to_string() << "\n"
                     << "M(-q)^c:                " << sides.closed.to_string() << "\n"
                     << (match ? "MATCH" : "MISMATCH") << "\n";
            }
        } else if (verify_cmd->parsed()) {
            const auto results = verify::run_all();
            Json rows = Json::array();
            bool all = true;
            for (const auto& r : results) {
                all = all && r.passed;
                if (format == Format::table) {
                    text << (r.passed ? "PASS" : "FAIL") << "  " << std::setw(2) << r.id << "  " << std::left
                         << std::setw(28) << r.name << std::right << "  " << r.anchor;
                    if (!r.passed)
                        text << "  [" << r.detail << "]";
                    text << "\n";
                }
                rows.push_back(Json{{"id", r.id}, {"name", r.name}, {"anchor", r.anchor}, {"passed", r.passed},
                                    {"detail", r.detail}});
            }
            if (format == Format::table)
                text << (all ? "all checks passed" : "some checks FAILED") << "\n";
            else
                text << emit_json(Json{{"passed", all}, {"checks", rows}}, Json{{"subcommand", "verify"}});
            status = all ? ok : check_failed;
        }
    } catch (const UsageError& e) {
        err << "hilbwc: " << e.what() << "\n";
        return usage_error;
    } catch (const hilbwc::error& e) {
        err << "hilbwc: " << e.what() << "\n";
        return usage_error;
    }

    if (!out_path.empty()) {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
            err << "hilbwc: cannot open " << out_path << " for writing\n";
            return usage_error;
        }
        file << text.str();
    } else {
        out << text.str();
    }
    return status;
}

} // namespace hilbwc::cli
