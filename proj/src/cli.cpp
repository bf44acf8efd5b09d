#include "squeeze/cli.hpp"

#include <CLI11.hpp>

#include <array>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "squeeze/conjugacy.hpp"
#include "squeeze/error.hpp"
#include "squeeze/lorentz.hpp"

namespace squeeze::cli {

namespace {

struct UsageError {
    std::string message;
};

double require_double(const std::string& text, std::string_view flag) {
    double value = 0.0;
    if (!parse_double(text, value)) {
        throw UsageError{"invalid number for " + std::string(flag) + ": '" + text + "'"};
    }
    return value;
}

template <class Int>
Int require_integer(const std::string& text, std::string_view flag) {
    Int value{};
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || text.empty()) {
        throw UsageError{"invalid integer for " + std::string(flag) + ": '" + text + "'"};
    }
    return value;
}

RealMatrix2 require_matrix(const std::string& text) {
    RealMatrix2 m;
    if (!parse_matrix(text, m)) {
        throw UsageError{"--matrix expects four comma-separated numbers a,b,c,d, got '" + text + "'"};
    }
    return m;
}

void write_entries(std::ostream& out, const RealMatrix2& m) {
    out << format_double(m.a) << ' ' << format_double(m.b) << ' ' << format_double(m.c) << ' '
        << format_double(m.d);
}

} // namespace

std::string format_double(double x) {
    if (x == 0.0) {
        return "0";
    }
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), ptr);
}

bool parse_double(std::string_view text, double& out) {
    if (text.empty()) return false;
    // from_chars rejects a leading '+', which shells and users commonly write.
    if (text.front() == '+') text.remove_prefix(1);
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last && std::isfinite(out);
}

bool parse_matrix(std::string_view text, RealMatrix2& out) {
    std::array<double, 4> v{};
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto comma = text.find(',');
        const bool last = i + 1 == v.size();
        if (last != (comma == std::string_view::npos)) return false;
        if (!parse_double(text.substr(0, comma), v[i])) return false;
        text = last ? std::string_view{} : text.substr(comma + 1);
    }
    out = {v[0], v[1], v[2], v[3]};
    return true;
}

std::vector<double> uniform_grid(double lo, double hi, unsigned steps) {
    std::vector<double> grid;
    grid.reserve(steps + 1);
    for (unsigned i = 0; i < steps; ++i) {
        grid.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps));
    }
    grid.push_back(hi);
    return grid;
}

std::vector<SweepRow> to_rows(std::span<const twolevel::SweepEntry> entries) {
    std::vector<SweepRow> rows;
    rows.reserve(entries.size());
    for (const auto& e : entries) {
        rows.push_back({e.g, std::string(to_string(e.regime.tag)), std::string(to_string(e.cls.tag)), e.matrix.a,
                        e.matrix.b, e.matrix.c, e.matrix.d, e.regime.eta});
    }
    return rows;
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows) {
    out << kSweepHeader << '\n';
    for (const auto& r : rows) {
        out << format_double(r.g) << ',' << r.regime_tag << ',' << r.class_tag << ',' << format_double(r.m11) << ','
            << format_double(r.m12) << ',' << format_double(r.m21) << ',' << format_double(r.m22) << ','
            << format_double(r.eta) << '\n';
    }
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Squeeze-transformation calculus for unimodular 2x2 matrices and two-level systems", "squeeze"};
    app.require_subcommand(1);
    // -h would shadow the --h coupling flag.
    app.set_help_flag("--help", "Print this help message and exit");

    std::string matrix_text, n_text, h_text, g_text, t_text, g_min_text, g_max_text, steps_text, z_text, eta_text;
    std::string out_path;

    auto* classify_cmd = app.add_subcommand("classify", "Conjugacy class of a unimodular matrix");
    classify_cmd->add_option("--matrix", matrix_text, "a,b,c,d")->required();

    auto* decompose_cmd = app.add_subcommand("decompose", "Rotation + squeeze + core decomposition");
    decompose_cmd->add_option("--matrix", matrix_text, "a,b,c,d")->required();

    auto* power_cmd = app.add_subcommand("power", "N-th power through the decomposition");
    power_cmd->add_option("--matrix", matrix_text, "a,b,c,d")->required();
    power_cmd->add_option("--n", n_text, "non-negative exponent")->required();

    auto* evolve_cmd = app.add_subcommand("evolve", "Two-level transition matrix");
    evolve_cmd->add_option("--h", h_text, "magnetic coupling")->required();
    evolve_cmd->add_option("--g", g_text, "dissipative coupling")->required();
    evolve_cmd->add_option("--t", t_text, "elapsed time")->required();

    auto* sweep_cmd = app.add_subcommand("sweep", "Sweep g across the light-cone boundary, CSV output");
    sweep_cmd->add_option("--h", h_text, "magnetic coupling (> 0)")->required();
    sweep_cmd->add_option("--g-min", g_min_text, "first g")->required();
    sweep_cmd->add_option("--g-max", g_max_text, "last g")->required();
    sweep_cmd->add_option("--steps", steps_text, "number of intervals; steps + 1 rows")->required();
    sweep_cmd->add_option("--t", t_text, "elapsed time")->required();
    sweep_cmd->add_option("--out", out_path, "write CSV here instead of stdout");

    auto* boost_cmd = app.add_subcommand("boost", "Boost (z, t) by rapidity eta");
    boost_cmd->add_option("--z", z_text, "z coordinate")->required();
    boost_cmd->add_option("--t", t_text, "t coordinate")->required();
    boost_cmd->add_option("--eta", eta_text, "rapidity")->required();

    std::vector<const char*> argv{"squeeze"};
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return kExitUsage;
    }

    try {
        if (*classify_cmd) {
            const ConjugacyClass cls = classify(require_matrix(matrix_text));
            out << "class=" << to_string(cls.tag) << " param=" << format_double(cls.parameter)
                << " sign=" << cls.sign << '\n';
        } else if (*decompose_cmd) {
            const RealMatrix2 m = require_matrix(matrix_text);
            const Decomposition dec = decompose(m);
            out << "theta=" << format_double(dec.theta) << " eta=" << format_double(dec.eta)
                << " class=" << to_string(dec.core.tag) << " param=" << format_double(dec.core.parameter)
                << " residual=" << format_double(normalized_diff(dec.reconstruct(), m)) << '\n';
        } else if (*power_cmd) {
            const RealMatrix2 m = require_matrix(matrix_text);
            const auto n = require_integer<unsigned long long>(n_text, "--n");
            write_entries(out, power(m, n));
            out << '\n';
        } else if (*evolve_cmd) {
            const twolevel::TwoLevelParams p{require_double(h_text, "--h"), require_double(g_text, "--g"),
                                            require_double(t_text, "--t")};
            const RealMatrix2 m = twolevel::transition_matrix(p);
            write_entries(out, m);
            out << " regime=" << twolevel::to_string(twolevel::regime(p.h, p.g).tag) << '\n';
        } else if (*sweep_cmd) {
            const double h = require_double(h_text, "--h");
            const double g_min = require_double(g_min_text, "--g-min");
            const double g_max = require_double(g_max_text, "--g-max");
            const auto steps = require_integer<unsigned>(steps_text, "--steps");
            const double t = require_double(t_text, "--t");
            if (steps == 0 || !(g_max > g_min)) {
                throw Error(ErrorCode::InvalidArgument, "sweep needs --steps >= 1 and --g-max > --g-min");
            }
            const std::vector<double> grid = uniform_grid(g_min, g_max, steps);
            const std::vector<SweepRow> rows = to_rows(twolevel::crossing_sweep(h, grid, t));
            if (out_path.empty()) {
                write_sweep_csv(out, rows);
            } else {
                std::ofstream file(out_path, std::ios::binary);
                if (!file) {
                    err << "error: IoError: cannot open '" << out_path << "' for writing\n";
                    return kExitDomainError;
                }
                write_sweep_csv(file, rows);
            }
        } else if (*boost_cmd) {
            const double z = require_double(z_text, "--z");
            const double t = require_double(t_text, "--t");
            const double eta = require_double(eta_text, "--eta");
            const lorentz::ZT b = lorentz::boost_zt(z, t, eta);
            out << "z'=" << format_double(b.z) << " t'=" << format_double(b.t)
                << " invariant=" << format_double(b.z * b.z - b.t * b.t) << '\n';
        }
    } catch (const UsageError& e) {
        err << "error: " << e.message << '\n' << app.help();
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomainError;
    }
    return kExitOk;
}

} // namespace squeeze::cli
