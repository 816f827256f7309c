#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

void add_source(CLI::App* sub, mdspline::cli::SpaceSource& src) {
    sub->add_option("--space", src.file, "space JSON file");
    sub->add_option("--preset", src.preset, "named test space");
}

}  // namespace

int main(int argc, char** argv) {
    using namespace mdspline::cli;
    CLI::App app{"Multi-degree B-spline matrix representation tool"};
    app.require_subcommand(1);

    SpaceSource validate_src;
    bool validate_json = false;
    auto* validate = app.add_subcommand("validate", "check a space and print its dimensions and partitions");
    add_source(validate, validate_src);
    validate->add_flag("--json", validate_json, "print a JSON report");

    MatrixOptions mopt;
    auto* matrix = app.add_subcommand("matrix", "write the representation matrix");
    add_source(matrix, mopt.source);
    matrix->add_option("--method", mopt.method, "rki|rde|mixed|derivative")->capture_default_str();
    matrix->add_option("--out", mopt.out, "output file (default stdout)");
    matrix->add_option("--format", mopt.format, "csv|json")->capture_default_str();
    matrix->add_flag("--exact", mopt.exact, "rational arithmetic, fractions as JSON");

    EvalOptions eopt;
    auto* eval = app.add_subcommand("eval", "evaluate the basis, a spline, or the Greville abscissae");
    add_source(eval, eopt.source);
    eval->add_option("--method", eopt.method, "rki|rde|mixed|derivative")->capture_default_str();
    eval->add_option("--points", eopt.points, "comma-separated evaluation points");
    eval->add_option("--grid", eopt.grid, "N uniform points over [a,b]");
    eval->add_option("--coeffs", eopt.coeffs_file, "spline coefficient file");
    eval->add_flag("--greville", eopt.greville, "print the Greville abscissae");
    eval->add_flag("--full", eopt.full, "print all K basis values per point");

    ExperimentOptions xopt;
    auto* experiment = app.add_subcommand("experiment", "matrix and value error report for a preset");
    experiment->add_option("--preset", xopt.preset, "cox|test1..test6|table7")->required();
    experiment->add_option("--methods", xopt.methods, "comma-separated: greville,derivative,rki,rde,mixed")
        ->capture_default_str();
    experiment->add_flag("--oracle", xopt.oracle, "compare against exact rational arithmetic");
    experiment->add_option("--format", xopt.format, "csv|json")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? ok : validation_error;
    }

    if (validate->parsed()) return cmd_validate(validate_src, validate_json, std::cout, std::cerr);
    if (matrix->parsed()) return cmd_matrix(mopt, std::cout, std::cerr);
    if (eval->parsed()) return cmd_eval(eopt, std::cout, std::cerr);
    return cmd_experiment(xopt, std::cout, std::cerr);
}
