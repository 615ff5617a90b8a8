#ifndef VFRAC_CLI_HPP
#define VFRAC_CLI_HPP

#include "vfrac/special_functions.hpp"

#include "json.hpp"

#include <iosfwd>
#include <string>
#include <vector>

// Command-line front end. Subcommands:
//   ml        evaluate the six-parameter Mittag-Leffler function
//   deriv     V-fractional derivative of --fn, closed form and/or limit
//   integral  V-fractional integral of --fn over [a, t]
//   verify    run theorem verification rules, CSV or JSON reports
//   table     tabulate --fn over a grid

namespace vfrac::cli {

enum class Subcommand { ml, deriv, integral, verify, table };
enum class Format { csv, json };

struct GridSpec {
    double start = 1.0;
    double stop = 1.0;
    int count = 1;

    void validate() const; // finite endpoints, count >= 1
    std::vector<double> points() const;
};

// Parse "start:stop:count".
GridSpec parse_grid(const std::string& text);

struct RunConfig {
    Subcommand subcommand = Subcommand::ml;
    special_functions::MLParams params;
    double alpha = 0.5;
    int n = -1; // -1 means derive n from alpha
    int trunc_i = 3;
    double z = 1.0;
    std::string fn_text;
    double a = 0.0;
    double t = 1.0;
    double eps0 = 0.0; // 0 means auto-scale
    int eps_levels = 6;
    std::string method = "closed"; // deriv: closed | limit | both
    std::string rule;
    bool all_rules = false;
    GridSpec grid;
    bool grid_set = false;
    Format format = Format::csv;
    double tol = 0.0;
    bool tol_set = false;
};

// %.15g with '.' as the decimal separator.
std::string format_value(double v);

// Render homogeneous rows. Each row is a JSON array aligned with
// header; cells may be numbers, strings, or booleans. CSV output is
// the header line followed by one line per row; JSON output is an
// array of objects keyed by the header names.
std::string emit_table(const std::vector<std::string>& header,
                       const std::vector<nlohmann::json>& rows,
                       Format format);

// Execute a parsed configuration. Returns the process exit code:
// 0 success, 2 verification failure, 1 usage or numeric error.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Parse argv (argv[0] is the program name) and execute.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);
int run(int argc, const char* const* argv); // std::cout / std::cerr

} // namespace vfrac::cli

#endif
