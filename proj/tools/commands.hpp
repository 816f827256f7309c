/**
 * @file commands.hpp
 * @brief Subcommand bodies of the command-line tool, callable from tests.
 */
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mdspline::cli {

enum ExitCode : int { ok = 0, validation_error = 1, runtime_error = 2 };

/// Either a space file or a preset name.
struct SpaceSource {
    std::string file;
    std::string preset;
};

struct MatrixOptions {
    SpaceSource source;
    std::string method = "rki";
    std::string out;
    std::string format = "csv";
    bool exact = false;  ///< rational replay, fractions in JSON
};

struct EvalOptions {
    SpaceSource source;
    std::string method = "rki";
    std::string points;
    int grid = 0;
    std::string coeffs_file;
    bool greville = false;
    bool full = false;
};

struct ExperimentOptions {
    std::string preset;
    std::string methods = "greville,derivative";
    bool oracle = false;
    std::string format = "csv";
};

int cmd_validate(const SpaceSource& src, bool json, std::ostream& out, std::ostream& err);
int cmd_matrix(const MatrixOptions& opt, std::ostream& out, std::ostream& err);
int cmd_eval(const EvalOptions& opt, std::ostream& out, std::ostream& err);
int cmd_experiment(const ExperimentOptions& opt, std::ostream& out, std::ostream& err);

/// 17 significant digits, scientific.
[[nodiscard]] std::string format_real(double v);

}  // namespace mdspline::cli
