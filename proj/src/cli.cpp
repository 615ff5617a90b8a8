#include "vfrac/cli.hpp"

#include "vfrac/errors.hpp"
#include "vfrac/fn_spec.hpp"
#include "vfrac/theorem_verifier.hpp"
#include "vfrac/v_integral.hpp"
#include "vfrac/v_operator.hpp"

#include "CLI11.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <ostream>
#include <string>
#include <vector>

namespace vfrac::cli {

namespace sf = vfrac::special_functions;
namespace op = vfrac::v_operator;
namespace vi = vfrac::v_integral;
namespace tv = vfrac::theorem_verifier;

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;
using vfrac::expr::FnSpec;

void GridSpec::validate() const {
    if (!std::isfinite(start) || !std::isfinite(stop))
        throw DomainError("grid endpoints must be finite");
    if (count < 1) throw DomainError("grid count must be >= 1");
}

std::vector<double> GridSpec::points() const {
    validate();
    std::vector<double> pts;
    pts.reserve(static_cast<std::size_t>(count));
    if (count == 1) {
        pts.push_back(start);
        return pts;
    }
    double step = (stop - start) / (count - 1);
    for (int i = 0; i < count; ++i) pts.push_back(start + step * i);
    pts.back() = stop; // land exactly on the endpoint
    return pts;
}

GridSpec parse_grid(const std::string& text) {
    GridSpec g;
    auto first = text.find(':');
    auto second = text.find(':', first + 1);
    if (first == std::string::npos || second == std::string::npos)
        throw DomainError("--grid expects start:stop:count, got \"" + text +
                          "\"");
    try {
        g.start = std::stod(text.substr(0, first));
        g.stop = std::stod(text.substr(first + 1, second - first - 1));
        g.count = std::stoi(text.substr(second + 1));
    } catch (const std::exception&) {
        throw DomainError("--grid expects start:stop:count, got \"" + text +
                          "\"");
    }
    g.validate();
    return g;
}

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

namespace {

std::string format_cell(const json& cell) {
    if (cell.is_boolean()) return cell.get<bool>() ? "true" : "false";
    if (cell.is_number()) return format_value(cell.get<double>());
    return cell.get<std::string>();
}

} // namespace

std::string emit_table(const std::vector<std::string>& header,
                       const std::vector<json>& rows, Format format) {
    if (format == Format::csv) {
        std::string out;
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (i) out += ',';
            out += header[i];
        }
        out += '\n';
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) out += ',';
                out += format_cell(row[i]);
            }
            out += '\n';
        }
        return out;
    }
    ordered_json arr = ordered_json::array();
    for (const auto& row : rows) {
        ordered_json obj;
        for (std::size_t i = 0; i < header.size() && i < row.size(); ++i)
            obj[header[i]] = row[i];
        arr.push_back(std::move(obj));
    }
    return arr.dump() + "\n";
}

namespace {

FnSpec parse_fn(const std::string& text) {
    if (text.empty()) throw DomainError("--fn is required");
    try {
        return FnSpec::from_expression(text);
    } catch (const Error& e) {
        throw DomainError("--fn \"" + text + "\": " + e.what());
    }
}

op::Order make_order(const RunConfig& cfg) {
    if (cfg.n < 0) return op::Order(cfg.alpha);
    op::Order ord;
    ord.alpha = cfg.alpha;
    ord.n = cfg.n;
    ord.validate();
    return ord;
}

int exec_ml(const RunConfig& cfg, std::ostream& out) {
    cfg.params.validate();
    auto trunc = cfg.tol_set
                     ? sf::TruncationSpec::adaptive(cfg.tol)
                     : sf::TruncationSpec::fixed(cfg.trunc_i);
    double value;
    try {
        value = sf::ml_eval(cfg.params, cfg.z, trunc);
    } catch (const Error& e) {
        throw DomainError("ml at z=" + format_value(cfg.z) + ": " + e.what());
    }
    out << format_value(value) << "\n";
    return 0;
}

int exec_deriv(const RunConfig& cfg, std::ostream& out) {
    FnSpec f = parse_fn(cfg.fn_text);
    op::OperatorConfig ocfg;
    ocfg.params = cfg.params;
    ocfg.order = make_order(cfg);
    ocfg.trunc_i = cfg.trunc_i;
    ocfg.schedule.eps0 = cfg.eps0;
    ocfg.schedule.levels = cfg.eps_levels;
    if (cfg.tol_set) ocfg.tol = cfg.tol;
    ocfg.validate();

    std::vector<double> ts;
    if (cfg.grid_set) {
        if (cfg.grid.start <= 0.0)
            throw DomainError("deriv grid must start above 0");
        ts = cfg.grid.points();
    } else {
        ts = {cfg.t};
    }

    std::vector<std::string> header;
    if (cfg.method == "closed")
        header = {"t", "closed"};
    else if (cfg.method == "limit")
        header = {"t", "limit"};
    else
        header = {"t", "closed", "limit", "agree"};

    std::vector<json> rows;
    for (double t : ts) {
        try {
            if (cfg.method == "closed") {
                rows.push_back(json::array({t, op::deriv_closed(f, t, ocfg)}));
            } else if (cfg.method == "limit") {
                rows.push_back(json::array({t, op::deriv_limit(f, t, ocfg)}));
            } else {
                double closed = op::deriv_closed(f, t, ocfg);
                double limit = op::deriv_limit(f, t, ocfg);
                bool agree =
                    std::fabs(closed - limit) <=
                    ocfg.tol *
                        (1.0 + std::max(std::fabs(closed), std::fabs(limit)));
                rows.push_back(json::array({t, closed, limit, agree}));
            }
        } catch (const Error& e) {
            throw DomainError("deriv of \"" + cfg.fn_text + "\" at t=" +
                              format_value(t) + ": " + e.what());
        }
    }
    out << emit_table(header, rows, cfg.format);
    return 0;
}

int exec_integral(const RunConfig& cfg, std::ostream& out) {
    FnSpec f = parse_fn(cfg.fn_text);
    vi::IntervalSpec iv{cfg.a, cfg.t};
    double value;
    try {
        value = vi::integrate(f, iv, make_order(cfg), cfg.params,
                              cfg.tol_set ? cfg.tol : 1e-10)
                    .value;
    } catch (const Error& e) {
        throw DomainError("integral of \"" + cfg.fn_text + "\" over [" +
                          format_value(cfg.a) + "," + format_value(cfg.t) +
                          "]: " + e.what());
    }
    out << format_value(value) << "\n";
    return 0;
}

ordered_json report_to_json(const tv::VerificationReport& rep) {
    ordered_json cases = ordered_json::array();
    for (const auto& c : rep.cases) {
        ordered_json obj;
        obj["inputs"] = c.inputs;
        obj["residual"] = c.residual;
        if (c.witness) obj["witness"] = *c.witness;
        cases.push_back(std::move(obj));
    }
    ordered_json obj;
    obj["rule"] = rep.rule_label;
    obj["statement"] = tv::rule_statement(rep.rule);
    obj["tolerance"] = rep.tolerance;
    obj["max_residual"] = rep.max_residual;
    obj["passed"] = rep.passed;
    obj["cases"] = std::move(cases);
    return obj;
}

int exec_verify(const RunConfig& cfg, std::ostream& out) {
    std::vector<tv::RuleId> rules;
    if (cfg.all_rules) {
        rules = tv::all_rules();
    } else {
        if (cfg.rule.empty())
            throw DomainError("verify needs --rule NAME or --all");
        auto id = tv::rule_from_name(cfg.rule);
        if (!id) throw DomainError("unknown rule \"" + cfg.rule + "\"");
        rules = {*id};
    }

    std::vector<tv::VerificationReport> reports;
    reports.reserve(rules.size());
    for (auto r : rules)
        reports.push_back(cfg.tol_set
                              ? tv::verify(r, tv::default_suite(r), cfg.tol)
                              : tv::verify(r));

    bool all_passed = true;
    for (const auto& rep : reports) all_passed = all_passed && rep.passed;

    if (cfg.format == Format::csv) {
        std::vector<json> rows;
        for (const auto& rep : reports)
            rows.push_back(json::array({rep.rule_label, rep.passed,
                                        rep.max_residual, rep.tolerance}));
        out << emit_table({"rule", "passed", "max_residual", "tolerance"},
                          rows, Format::csv);
    } else if (reports.size() == 1 && !cfg.all_rules) {
        out << report_to_json(reports.front()).dump() << "\n";
    } else {
        ordered_json arr = ordered_json::array();
        for (const auto& rep : reports) arr.push_back(report_to_json(rep));
        out << arr.dump() << "\n";
    }
    return all_passed ? 0 : 2;
}

int exec_table(const RunConfig& cfg, std::ostream& out) {
    FnSpec f = parse_fn(cfg.fn_text);
    if (!cfg.grid_set) throw DomainError("table needs --grid start:stop:count");
    std::vector<json> rows;
    for (double t : cfg.grid.points()) {
        try {
            rows.push_back(json::array({t, f(t)}));
        } catch (const Error& e) {
            throw DomainError("table of \"" + cfg.fn_text + "\" at t=" +
                              format_value(t) + ": " + e.what());
        }
    }
    out << emit_table({"t", "value"}, rows, cfg.format);
    return 0;
}

} // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        switch (cfg.subcommand) {
        case Subcommand::ml: return exec_ml(cfg, out);
        case Subcommand::deriv: return exec_deriv(cfg, out);
        case Subcommand::integral: return exec_integral(cfg, out);
        case Subcommand::verify: return exec_verify(cfg, out);
        case Subcommand::table: return exec_table(cfg, out);
        }
        err << "error: unknown subcommand\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
    RunConfig cfg;
    std::string grid_text;
    std::string format_text = "csv";

    CLI::App app{"truncated V-fractional calculus toolkit"};
    app.require_subcommand(1);

    auto add_params = [&cfg](CLI::App* c) {
        c->add_option("--gamma", cfg.params.gamma, "ML parameter gamma");
        c->add_option("--beta", cfg.params.beta, "ML parameter beta");
        c->add_option("--rho", cfg.params.rho, "ML parameter rho");
        c->add_option("--delta", cfg.params.delta, "ML parameter delta");
        c->add_option("--p", cfg.params.p, "ML parameter p");
        c->add_option("--q", cfg.params.q, "ML parameter q");
    };
    auto add_format = [&format_text](CLI::App* c) {
        c->add_option("--format", format_text, "output format")
            ->check(CLI::IsMember({"csv", "json"}));
    };

    CLI::App* ml = app.add_subcommand(
        "ml", "evaluate the six-parameter Mittag-Leffler function");
    add_params(ml);
    ml->add_option("--z", cfg.z, "evaluation point");
    ml->add_option("--trunc-i", cfg.trunc_i,
                   "partial-sum index (fixed truncation)");
    ml->add_option("--tol", cfg.tol,
                   "adaptive series tolerance (overrides --trunc-i)");

    CLI::App* deriv = app.add_subcommand(
        "deriv", "truncated V-fractional derivative of --fn");
    add_params(deriv);
    add_format(deriv);
    deriv->add_option("--fn", cfg.fn_text, "expression in t")->required();
    deriv->add_option("--t", cfg.t, "evaluation point");
    deriv->add_option("--grid", grid_text, "start:stop:count of t values");
    deriv->add_option("--alpha", cfg.alpha, "fractional order");
    deriv->add_option("--n", cfg.n, "integer part of the extended order");
    deriv->add_option("--trunc-i", cfg.trunc_i, "H truncation index");
    deriv->add_option("--eps0", cfg.eps0, "first epsilon of the limit ladder");
    deriv->add_option("--eps-levels", cfg.eps_levels, "epsilon ladder length");
    deriv->add_option("--method", cfg.method, "closed, limit, or both")
        ->check(CLI::IsMember({"closed", "limit", "both"}));
    deriv->add_option("--tol", cfg.tol, "closed/limit agreement tolerance");

    CLI::App* integral = app.add_subcommand(
        "integral", "V-fractional integral of --fn over [a, t]");
    add_params(integral);
    integral->add_option("--fn", cfg.fn_text, "expression in t")->required();
    integral->add_option("--a", cfg.a, "lower endpoint");
    integral->add_option("--t,--b", cfg.t, "upper endpoint");
    integral->add_option("--alpha", cfg.alpha, "fractional order");
    integral->add_option("--tol", cfg.tol, "quadrature tolerance");

    CLI::App* verify =
        app.add_subcommand("verify", "run theorem verification rules");
    add_format(verify);
    verify->add_option("--rule", cfg.rule, "rule name");
    verify->add_flag("--all", cfg.all_rules, "run every rule");
    verify->add_option("--tol", cfg.tol, "tolerance override");

    CLI::App* table =
        app.add_subcommand("table", "tabulate --fn over a grid");
    add_format(table);
    table->add_option("--fn", cfg.fn_text, "expression in t")->required();
    table->add_option("--grid", grid_text, "start:stop:count")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    CLI::App* sub = app.get_subcommands().front();
    if (sub == ml) cfg.subcommand = Subcommand::ml;
    else if (sub == deriv) cfg.subcommand = Subcommand::deriv;
    else if (sub == integral) cfg.subcommand = Subcommand::integral;
    else if (sub == verify) cfg.subcommand = Subcommand::verify;
    else cfg.subcommand = Subcommand::table;

    cfg.tol_set = sub != table && sub->count("--tol") > 0;
    cfg.format = format_text == "json" ? Format::json : Format::csv;
    if ((sub == deriv || sub == table) && sub->count("--grid") > 0) {
        try {
            cfg.grid = parse_grid(grid_text);
        } catch (const Error& e) {
            err << "error: " << e.what() << "\n";
            return 1;
        }
        cfg.grid_set = true;
    }
    return run(cfg, out, err);
}

int run(int argc, const char* const* argv) {
    return run(argc, argv, std::cout, std::cerr);
}

} // namespace vfrac::cli
