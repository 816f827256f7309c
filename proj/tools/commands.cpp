#include "commands.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "mdspline/eval_api.hpp"
#include "mdspline/exact_oracle.hpp"
#include "mdspline/presets.hpp"
#include "mdspline/space_io.hpp"

namespace mdspline::cli {

namespace {

using nlohmann::json;

/// Validation-class failure raised by argument handling.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

MDSpace resolve_space(const SpaceSource& src) {
    if (!src.file.empty() && !src.preset.empty())
        throw UsageError("give either --space or --preset, not both");
    if (!src.file.empty()) return load_space(src.file);
    if (!src.preset.empty()) {
        const auto ps = presets(src.preset);
        if (ps.size() != 1)
            throw UsageError("preset '" + src.preset + "' holds several spaces; pick one, e.g. " +
                             ps.front().name);
        return ps.front().space;
    }
    throw UsageError("no space given (use --space FILE or --preset NAME)");
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            throw UsageError("not a number: '" + item + "'");
        }
        if (item.find_first_not_of(" \t", used) != std::string::npos)
            throw UsageError("not a number: '" + item + "'");
        out.push_back(v);
    }
    return out;
}

std::vector<double> read_coefficients(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open coefficient file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const auto start = text.find_first_not_of(" \t\r\n");
    if (start != std::string::npos && text[start] == '[') {
        try {
            return json::parse(text).get<std::vector<double>>();
        } catch (const json::exception& e) {
            throw UsageError("malformed coefficient file '" + path + "': " + e.what());
        }
    }
    std::string normalized = text;
    for (char& c : normalized)
        if (c == ' ' || c == '\n' || c == '\r' || c == '\t') c = ',';
    return parse_list(normalized);
}

std::string strategy_label(const std::string& method) {
    return method == "greville" ? "rki" : method;
}

template <class F>
int guarded(std::ostream& err, F&& body) {
    try {
        return body();
    } catch (const SpaceError& e) {
        err << "error: " << e.what() << "\n";
        return validation_error;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return validation_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return validation_error;
    } catch (const std::exception& e) {
        err << "runtime error: " << e.what() << "\n";
        return runtime_error;
    }
}

void write_matrix_csv(std::ostream& out, const Matrix<double>& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ",";
            out << format_real(m(i, j));
        }
        out << "\n";
    }
}

json matrix_json(const Matrix<double>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

int cmd_validate(const SpaceSource& src, bool as_json, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const MDSpace s = resolve_space(src);
        const MDSpace c0 = associated_c0(s);
        const ExtendedPartition p = extended_partitions(s);
        const SectionDecomposition sd = section_decomposition(s);
        if (as_json) {
            json joins = json::array();
            for (const JoinStep& js : sd.join_order)
                joins.push_back({{"breakpoint", js.breakpoint}, {"continuity", js.continuity}});
            json report = {{"valid", true},
                           {"space", space_to_json(s)},
                           {"dimension", dimension(s)},
                           {"c0_dimension", dimension(c0)},
                           {"c0_continuities", c0.continuities},
                           {"s", p.s},
                           {"t", p.t},
                           {"sections", sd.sections.size()},
                           {"join_order", joins}};
            out << report.dump(2) << "\n";
        } else {
            out << "valid " << describe(s) << "\n";
            out << "K=" << dimension(s) << ", K0=" << dimension(c0) << "\n";
            out << "s:";
            for (double v : p.s) out << " " << v;
            out << "\nt:";
            for (double v : p.t) out << " " << v;
            out << "\nsections=" << sd.sections.size() << " joins:";
            for (const JoinStep& js : sd.join_order)
                out << " (x_" << js.breakpoint << ", C^" << js.continuity << ")";
            out << "\n";
        }
        return static_cast<int>(ok);
    });
}

int cmd_matrix(const MatrixOptions& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (opt.format != "csv" && opt.format != "json")
            throw UsageError("unknown format '" + opt.format + "' (csv|json)");
        const MDSpace s = resolve_space(opt.source);
        const Strategy strategy = parse_strategy(strategy_label(opt.method));
        std::ofstream file;
        std::ostream* os = &out;
        if (!opt.out.empty()) {
            file.open(opt.out);
            if (!file) throw std::runtime_error("cannot write '" + opt.out + "'");
            os = &file;
        }
        if (opt.exact) {
            const RepMatrixBundle<Rational> rep = build_matrix<Rational>(s, strategy);
            json doc = {{"strategy", to_string(strategy)},
                        {"rows", rep.matrix().rows()},
                        {"cols", rep.matrix().cols()},
                        {"space", space_to_json(s)},
                        {"reference", space_to_json(rep.reference())},
                        {"matrix", fractions_to_json(rep.matrix())}};
            *os << doc.dump(2) << "\n";
            return static_cast<int>(ok);
        }
        const RepMatrixBundle<double> rep = build_matrix<double>(s, strategy);
        const Matrix<double>& m = rep.matrix();
        const MDSpace& ref = rep.reference();
        if (opt.format == "csv") {
            *os << "# strategy=" << to_string(strategy) << " rows=" << m.rows() << " cols=" << m.cols()
                << "\n# space=" << space_to_json(s).dump() << "\n# reference=" << space_to_json(ref).dump()
                << "\n";
            write_matrix_csv(*os, m);
        } else {
            json doc = {{"strategy", to_string(strategy)},
                        {"rows", m.rows()},
                        {"cols", m.cols()},
                        {"space", space_to_json(s)},
                        {"reference", space_to_json(ref)},
                        {"matrix", matrix_json(m)}};
            *os << doc.dump(2) << "\n";
        }
        if (!os->good()) throw std::runtime_error("write failed");
        return static_cast<int>(ok);
    });
}

int cmd_eval(const EvalOptions& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const MDSpace s = resolve_space(opt.source);
        std::vector<double> xs;
        if (!opt.points.empty()) xs = parse_list(opt.points);
        if (opt.grid > 0) {
            if (opt.grid < 2) throw UsageError("--grid needs at least 2 points");
            for (int i = 0; i < opt.grid; ++i) {
                const double t = static_cast<double>(i) / (opt.grid - 1);
                xs.push_back(i == opt.grid - 1 ? s.b : s.a + t * (s.b - s.a));
            }
        }
        if (xs.empty() && !opt.greville) throw UsageError("nothing to evaluate (--points, --grid or --greville)");
        for (double x : xs)
            if (!(x >= s.a && x <= s.b))
                throw UsageError("point " + format_real(x) + " outside [a,b]");
        const RepMatrixBundle<double> rep = build_matrix<double>(s, parse_strategy(strategy_label(opt.method)));
        const std::size_t k = rep.matrix().rows();
        std::vector<double> coeffs;
        if (!opt.coeffs_file.empty()) {
            coeffs = read_coefficients(opt.coeffs_file);
            if (coeffs.size() != k)
                throw UsageError("expected " + std::to_string(k) + " coefficients, got " +
                                 std::to_string(coeffs.size()));
        }
        if (!xs.empty()) {
            out << "x";
            if (opt.full) {
                for (std::size_t i = 0; i < k; ++i) out << ",N" << i;
            } else {
                out << ",first_index,values";
            }
            if (!coeffs.empty()) out << ",spline";
            out << "\n";
        }
        for (double x : xs) {
            const BasisValues<double> bv = eval_basis(rep, x);
            out << format_real(x);
            if (opt.full) {
                for (double v : scatter(bv, k)) out << "," << format_real(v);
            } else {
                out << "," << bv.first_index;
                for (double v : bv.values) out << "," << format_real(v);
            }
            if (!coeffs.empty()) out << "," << format_real(eval_spline(rep, coeffs, x));
            out << "\n";
        }
        if (opt.greville) {
            out << "greville";
            for (double v : greville(rep)) out << "," << format_real(v);
            out << "\n";
        }
        return static_cast<int>(ok);
    });
}

int cmd_experiment(const ExperimentOptions& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (opt.format != "csv" && opt.format != "json")
            throw UsageError("unknown format '" + opt.format + "' (csv|json)");
        const std::vector<Preset> ps = presets(opt.preset);
        std::vector<std::string> methods;
        {
            std::stringstream ss(opt.methods);
            std::string m;
            while (std::getline(ss, m, ','))
                if (!m.empty()) {
                    (void)parse_strategy(strategy_label(m));
                    methods.push_back(m);
                }
        }
        if (methods.empty()) throw UsageError("no methods given");

        json doc = {{"preset", opt.preset}, {"oracle", opt.oracle}, {"spaces", json::array()}};
        std::ostringstream matrix_csv, value_csv;
        matrix_csv << "space,method,K,K0,matrix_error\n";
        value_csv << "space,x,function_index,value,exact,absolute_error,relative_error\n";
        for (const Preset& p : ps) {
            json entry = {{"name", p.name}, {"space", space_to_json(p.space)}};
            json merrs = json::array();
            std::optional<RepMatrixBundle<Rational>> exact_rki;
            for (const std::string& method : methods) {
                const Strategy st = parse_strategy(strategy_label(method));
                const RepMatrixBundle<double> rep = build_matrix<double>(p.space, st);
                std::optional<double> e;
                if (opt.oracle) {
                    if (st == Strategy::rki || st == Strategy::derivative) {
                        if (!exact_rki) exact_rki = build_matrix<Rational>(p.space, Strategy::rki);
                        e = matrix_error(rep.matrix(), exact_rki->matrix());
                    } else {
                        e = matrix_error(rep.matrix(), build_matrix<Rational>(p.space, st).matrix());
                    }
                }
                matrix_csv << p.name << "," << method << "," << rep.matrix().rows() << ","
                           << rep.matrix().cols() << "," << (e ? format_real(*e) : std::string("")) << "\n";
                json row = {{"method", method},
                            {"K", rep.matrix().rows()},
                            {"K0", rep.matrix().cols()}};
                row["matrix_error"] = e ? json(*e) : json(nullptr);
                merrs.push_back(row);
            }
            entry["matrix_errors"] = merrs;
            json values = json::array();
            if (!p.points.empty()) {
                const RepMatrixBundle<double> rep = build_matrix<double>(p.space, Strategy::rki);
                if (opt.oracle && !exact_rki) exact_rki = build_matrix<Rational>(p.space, Strategy::rki);
                for (double x : p.points) {
                    const double v = scatter(eval_basis(rep, x), rep.matrix().rows())[p.function];
                    json row = {{"x", x}, {"function_index", p.function}, {"value", v}};
                    value_csv << p.name << "," << format_real(x) << "," << p.function << "," << format_real(v);
                    if (opt.oracle) {
                        const Rational ex =
                            scatter(eval_basis(*exact_rki, x), exact_rki->matrix().rows())[p.function];
                        const ValueError ve = value_error(v, ex);
                        row["exact"] = to_fraction_string(ex);
                        row["absolute_error"] = ve.absolute;
                        row["relative_error"] = ve.relative;
                        value_csv << "," << format_real(ex.get_d()) << "," << format_real(ve.absolute) << ","
                                  << format_real(ve.relative);
                    } else {
                        value_csv << ",,,";
                    }
                    value_csv << "\n";
                    values.push_back(row);
                }
            }
            entry["values"] = values;
            doc["spaces"].push_back(entry);
        }
        if (opt.format == "json") {
            out << doc.dump(2) << "\n";
        } else {
            out << matrix_csv.str() << "\n" << value_csv.str();
        }
        return static_cast<int>(ok);
    });
}

}  // namespace mdspline::cli
