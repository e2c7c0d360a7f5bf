// Copyright (c) 2026 the depthlab authors
// SPDX-License-Identifier: Apache-2.0

#include "depthlab/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include "depthlab/contours.hpp"
#include "depthlab/csv.hpp"
#include "depthlab/diagnostics.hpp"
#include "depthlab/infdim.hpp"
#include "depthlab/lp_models.hpp"
#include "depthlab/median.hpp"
#include "depthlab/parallel.hpp"
#include "depthlab/symmetry_test.hpp"

namespace depthlab::cli {

namespace {

struct Options {
    std::string input, out, svg, config;
    std::string point_csv, method, levels_csv = "0.05,0.1,0.2,0.3,0.4";
    std::string qgrid = "0.05:0.95:0.05";
    std::string profile = "invsq";
    double p = 2.0;
    std::string p_raw = "2";
    double alpha = 0.05;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::size_t dirs = 1000, bootstrap = 1000, n = 500, d = 2, grid = 60;
    std::size_t replications = 200, dmax = 500, draws = 100;
    std::size_t refine_rounds = 200;
    double refine_shrink = 0.9;
    unsigned threads = 0;
};

std::vector<double> parse_double_list(const std::string& s, const char* what) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        std::string tok = s.substr(start, (comma == std::string::npos ? s.size() : comma) - start);
        try {
            std::size_t pos = 0;
            double v = std::stod(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (...) {
            throw ConfigError(std::string(what) + ": bad number '" + tok + "'");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (out.empty()) throw ConfigError(std::string(what) + ": empty list");
    return out;
}

std::vector<double> parse_qgrid(const std::string& s) {
    std::vector<double> parts;
    std::size_t start = 0;
    for (int k = 0; k < 3; ++k) {
        std::size_t colon = s.find(':', start);
        bool last = (k == 2);
        if (last != (colon == std::string::npos)) throw ConfigError("qgrid: want START:STOP:STEP");
        std::string tok = s.substr(start, (colon == std::string::npos ? s.size() : colon) - start);
        try {
            std::size_t pos = 0;
            parts.push_back(std::stod(tok, &pos));
            if (pos != tok.size()) throw std::invalid_argument(tok);
        } catch (...) {
            throw ConfigError("qgrid: bad number '" + tok + "'");
        }
        start = colon + 1;
    }
    double lo = parts[0], hi = parts[1], step = parts[2];
    if (!(step > 0.0) || !(hi >= lo)) throw ConfigError("qgrid: need START <= STOP and STEP > 0");
    std::vector<double> grid;
    for (int i = 0;; ++i) {
        double q = lo + step * i;
        if (q > hi + 1e-12) break;
        grid.push_back(q);
    }
    return grid;
}

double parse_p(const std::string& s) {
    if (s == "inf") return std::numeric_limits<double>::infinity();
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size() || !(v > 0.0)) throw std::invalid_argument(s);
        return v;
    } catch (...) {
        throw ConfigError("--p: expected positive real or 'inf', got '" + s + "'");
    }
}

std::string canonical_p(double p) {
    return std::isinf(p) ? "inf" : format_double(p);
}

// Canonical echo of the semantic flags, in a fixed order with effective
// values; --threads is intentionally excluded so runs that differ only in
// parallelism produce byte-identical files.
class Canonical {
  public:
    explicit Canonical(std::string subcommand) : s_(std::move(subcommand)) {}
    Canonical& flag(const std::string& name, const std::string& value) {
        s_ += " --" + name + " " + value;
        return *this;
    }
    const std::string& str() const { return s_; }

  private:
    std::string s_;
};

void require_seed(const Options& o, const char* why) {
    if (!o.seed_set)
        throw ConfigError(std::string("--seed is required: ") + why);
}

std::optional<std::uint64_t> seed_opt(const Options& o) {
    if (o.seed_set) return o.seed;
    return std::nullopt;
}

MedianOptions median_options(const Options& o) {
    MedianOptions m;
    m.refine_rounds = o.refine_rounds;
    m.shrink = o.refine_shrink;
    m.approx_dirs = o.dirs;
    return m;
}

std::string polyline_path(const std::string& out) {
    std::size_t dot = out.find_last_of('.');
    std::size_t slash = out.find_last_of("/\\");
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return out + "_polylines";
    return out.substr(0, dot) + "_polylines" + out.substr(dot);
}

// ---------------------------------------------------------------- depth ---

int cmd_depth(const Options& o, std::ostream& out) {
    Dataset data = read_dataset(o.input);
    std::vector<double> x = parse_double_list(o.point_csv, "--point");
    DepthResult res;
    if (o.method == "exact1d") {
        if (x.size() != 1) throw DimensionMismatchError("--point must be univariate for exact1d");
        res = depth_1d(data, x[0]);
    } else if (o.method == "exact2d") {
        res = depth_2d_exact(data, x);
    } else if (o.method == "combinatorial") {
        res = depth_exact_combinatorial(data, x);
    } else if (o.method == "approx") {
        require_seed(o, "approx depth draws random directions");
        res = depth_approx(data, x, o.dirs, o.seed);
    } else {
        throw ConfigError("--method must be exact1d|exact2d|combinatorial|approx");
    }
    out << format_double(res.value) << "\n";

    if (!o.out.empty()) {
        Canonical cmd("depth");
        cmd.flag("input", o.input).flag("point", o.point_csv).flag("method", o.method);
        if (o.method == "approx")
            cmd.flag("dirs", std::to_string(o.dirs)).flag("seed", std::to_string(o.seed));
        cmd.flag("out", o.out);
        CsvWriter w(o.out, cmd.str(), o.method == "approx" ? seed_opt(o) : std::nullopt);
        std::vector<std::string> hdr;
        for (std::size_t j = 0; j < data.dim(); ++j) hdr.push_back("x" + std::to_string(j + 1));
        hdr.push_back("depth");
        hdr.push_back("method");
        for (std::size_t j = 0; j < data.dim(); ++j) hdr.push_back("w" + std::to_string(j + 1));
        w.header(hdr);
        std::vector<std::string> row;
        for (std::size_t j = 0; j < x.size(); ++j) row.push_back(format_double(x[j]));
        for (std::size_t j = x.size(); j < data.dim(); ++j) row.push_back(format_double(0.0));
        row.push_back(format_double(res.value));
        row.push_back(to_string(res.method));
        for (std::size_t j = 0; j < data.dim(); ++j)
            row.push_back(res.witness ? format_double((*res.witness)[j]) : "");
        w.row(row);
        w.close();
    }
    return 0;
}

// --------------------------------------------------------------- median ---

int cmd_median(const Options& o, std::ostream& out) {
    Dataset data = read_dataset(o.input);
    require_seed(o, "the median search perturbs candidates randomly");
    MedianResult res = tukey_median(data, o.seed, median_options(o));
    out << "median:";
    for (double v : res.point) out << ' ' << format_double(v);
    out << "\ndepth: " << format_double(res.depth.value) << " (" << res.depth.count << "/"
        << res.depth.n << ") method: " << to_string(res.depth.method)
        << " candidates: " << res.candidates_evaluated << "\n";

    if (!o.out.empty()) {
        Canonical cmd("median");
        cmd.flag("input", o.input)
            .flag("dirs", std::to_string(o.dirs))
            .flag("seed", std::to_string(o.seed))
            .flag("out", o.out);
        CsvWriter w(o.out, cmd.str(), o.seed);
        std::vector<std::string> hdr;
        for (std::size_t j = 0; j < data.dim(); ++j) hdr.push_back("m" + std::to_string(j + 1));
        hdr.push_back("depth");
        hdr.push_back("method");
        hdr.push_back("candidates");
        w.header(hdr);
        std::vector<std::string> row;
        for (double v : res.point) row.push_back(format_double(v));
        row.push_back(format_double(res.depth.value));
        row.push_back(to_string(res.depth.method));
        row.push_back(std::to_string(res.candidates_evaluated));
        w.row(row);
        w.close();
    }
    return 0;
}

// -------------------------------------------------------------- symtest ---

int cmd_symtest(const Options& o, std::ostream& out) {
    Dataset data = read_dataset(o.input);
    require_seed(o, "the bootstrap draws random signs");
    SymmetryTestResult res =
        angular_symmetry_test(data, o.bootstrap, o.alpha, o.seed, median_options(o));
    out << "delta_n: " << format_double(res.delta_n.value) << " p_value: "
        << format_double(res.p_value) << " alpha: " << format_double(res.alpha)
        << " reject: " << (res.reject ? 1 : 0) << "\n";

    if (!o.out.empty()) {
        Canonical cmd("symtest");
        cmd.flag("input", o.input)
            .flag("bootstrap", std::to_string(o.bootstrap))
            .flag("alpha", format_double(o.alpha))
            .flag("seed", std::to_string(o.seed))
            .flag("out", o.out);
        CsvWriter w(o.out, cmd.str(), o.seed);
        std::vector<std::string> hdr{"delta_n", "p_value", "alpha", "reject"};
        for (std::size_t j = 0; j < data.dim(); ++j) hdr.push_back("m" + std::to_string(j + 1));
        w.header(hdr);
        std::vector<std::string> row{format_double(res.delta_n.value), format_double(res.p_value),
                                     format_double(res.alpha), res.reject ? "1" : "0"};
        for (double v : res.median) row.push_back(format_double(v));
        w.row(row);
        w.close();
    }
    return 0;
}

// ------------------------------------------------------------- diagnose ---

int cmd_diagnose(const Options& o, bool p_given, std::ostream& out) {
    std::optional<Dataset> data;
    Canonical cmd("diagnose");
    if (p_given) {
        require_seed(o, "sampling from the l_p model");
        LpSymmetricModel model = std::isinf(o.p) ? LpSymmetricModel::hypercube(o.d)
                                                 : LpSymmetricModel::generalized_gaussian(o.p, o.d);
        data.emplace(sample(model, o.n, o.seed));
        cmd.flag("p", canonical_p(o.p))
            .flag("d", std::to_string(o.d))
            .flag("n", std::to_string(o.n));
    } else {
        if (o.input.empty()) throw ConfigError("diagnose: need --input or --p");
        data.emplace(read_dataset(o.input));
        cmd.flag("input", o.input);
    }
    const bool needs_approx =
        data->dim() > 2 && (data->dim() > kCombinatorialMaxDim || data->size() > kCombinatorialMaxN);
    if (needs_approx) require_seed(o, "approximate depth ordering draws random directions");

    std::vector<double> grid = parse_qgrid(o.qgrid);
    DepthPolicy policy{o.dirs, o.seed};
    SphericityCurve curve = sphericity_curve(*data, grid, policy);
    out << "area_deviation: " << format_double(curve.area_deviation) << "\n";

    if (!o.out.empty()) {
        cmd.flag("qgrid", o.qgrid);
        if (o.seed_set) cmd.flag("seed", std::to_string(o.seed));
        cmd.flag("out", o.out);
        CsvWriter w(o.out, cmd.str(), seed_opt(o));
        w.header({"q", "r", "area_cumulative"});
        double cum = 0.0;
        for (std::size_t i = 0; i < curve.q_grid.size(); ++i) {
            if (i > 0) {
                double f0 = std::fabs(curve.r_values[i - 1] - curve.q_grid[i - 1]);
                double f1 = std::fabs(curve.r_values[i] - curve.q_grid[i]);
                cum += 0.5 * (f0 + f1) * (curve.q_grid[i] - curve.q_grid[i - 1]);
            }
            w.row({format_double(curve.q_grid[i]), format_double(curve.r_values[i]),
                   format_double(cum)});
        }
        w.close();
    }
    return 0;
}

// ------------------------------------------------------------- contours ---

int cmd_contours(const Options& o, std::ostream& out) {
    require_seed(o, "sampling from the l_p model");
    if (o.out.empty()) throw ConfigError("contours: --out is required");
    LpSymmetricModel model = std::isinf(o.p) ? LpSymmetricModel::hypercube(2)
                                             : LpSymmetricModel::generalized_gaussian(o.p, 2);
    Dataset data = sample(model, o.n, o.seed);
    std::vector<double> levels = parse_double_list(o.levels_csv, "--levels");
    for (double l : levels)
        if (!(l > 0.0 && l <= 0.5)) throw ConfigError("--levels: depth levels must be in (0, 0.5]");

    double xmin = data.col(0)[0], xmax = xmin, ymin = data.col(1)[0], ymax = ymin;
    for (std::size_t i = 0; i < data.size(); ++i) {
        xmin = std::min(xmin, data.at(i, 0));
        xmax = std::max(xmax, data.at(i, 0));
        ymin = std::min(ymin, data.at(i, 1));
        ymax = std::max(ymax, data.at(i, 1));
    }
    double padx = 0.02 * (xmax - xmin), pady = 0.02 * (ymax - ymin);
    GridSpec grid{xmin - padx, xmax + padx, ymin - pady, ymax + pady, o.grid, o.grid};
    grid.validate();

    std::vector<double> depth_values = depth_grid(data, grid);
    std::vector<double> density_values(grid.nx * grid.ny);
    for (std::size_t iy = 0; iy < grid.ny; ++iy)
        for (std::size_t ix = 0; ix < grid.nx; ++ix)
            density_values[iy * grid.nx + ix] =
                density(model, Point{grid.x_at(ix), grid.y_at(iy)});

    Canonical cmd("contours");
    cmd.flag("p", canonical_p(o.p))
        .flag("n", std::to_string(o.n))
        .flag("grid", std::to_string(o.grid))
        .flag("levels", o.levels_csv)
        .flag("seed", std::to_string(o.seed))
        .flag("out", o.out);
    if (!o.svg.empty()) cmd.flag("svg", o.svg);

    CsvWriter w(o.out, cmd.str(), o.seed);
    w.header({"gx", "gy", "depth", "density"});
    for (std::size_t iy = 0; iy < grid.ny; ++iy)
        for (std::size_t ix = 0; ix < grid.nx; ++ix)
            w.row({format_double(grid.x_at(ix)), format_double(grid.y_at(iy)),
                   format_double(depth_values[iy * grid.nx + ix]),
                   format_double(density_values[iy * grid.nx + ix])});
    w.close();

    // Iso-depth polylines, plus the analytic density contour matched to each
    // depth level through the axis point with that depth (the two families
    // coincide exactly when p = 2).
    CsvWriter pw(polyline_path(o.out), cmd.str(), o.seed);
    pw.header({"level", "polyline", "vertex", "x", "y"});
    std::vector<SvgLayer> depth_layers, density_layers;
    const char* palette[] = {"#1b6ca8", "#c23b22", "#2e8540", "#7b4fa6", "#b8860b", "#008080"};
    for (std::size_t li = 0; li < levels.size(); ++li) {
        std::vector<Polyline> lines = marching_squares(grid, depth_values, levels[li]);
        for (std::size_t pi = 0; pi < lines.size(); ++pi)
            for (std::size_t vi = 0; vi < lines[pi].size(); ++vi)
                pw.row({format_double(levels[li]), std::to_string(pi), std::to_string(vi),
                        format_double(lines[pi][vi].first), format_double(lines[pi][vi].second)});
        std::string color = palette[li % 6];
        depth_layers.push_back({std::move(lines), color, false,
                                li == 0 ? "depth " + format_double(levels[li])
                                        : format_double(levels[li])});
        double axis_x = axis_point_at_depth(model, levels[li]);
        double dens_level = density(model, Point{axis_x, 0.0});
        density_layers.push_back(
            {marching_squares(grid, density_values, dens_level), color, true,
             li == 0 ? "density (matched)" : ""});
    }
    pw.close();

    if (!o.svg.empty()) {
        std::vector<SvgLayer> layers = depth_layers;
        layers.insert(layers.end(), density_layers.begin(), density_layers.end());
        std::string svg =
            render_svg(grid, layers, "half-space depth vs density contours, p = " + canonical_p(o.p));
        std::ofstream f(o.svg, std::ios::binary);
        if (!f) throw ParseError("cannot open '" + o.svg + "' for writing");
        f << svg;
    }
    out << "grid " << grid.nx << "x" << grid.ny << ", " << levels.size() << " levels -> " << o.out
        << "\n";
    return 0;
}

// --------------------------------------------------------------- infdim ---

int cmd_infdim(const Options& o, std::ostream& out) {
    require_seed(o, "the decay experiment draws random sequences");
    if (o.out.empty()) throw ConfigError("infdim: --out is required");
    SequenceModel model;
    if (o.profile == "invsq")
        model = SequenceModel::inverse_square();
    else if (o.profile == "geom")
        model = SequenceModel::geometric();
    else
        throw ConfigError("--profile must be invsq or geom");

    std::vector<std::size_t> d_grid;
    for (std::size_t d = 10; d < o.dmax; d *= 10) d_grid.push_back(d);
    if (d_grid.empty() || d_grid.back() != o.dmax) d_grid.push_back(o.dmax);

    DecayTable table = decay_experiment(model, o.draws, d_grid, o.seed);

    Canonical cmd("infdim");
    cmd.flag("profile", o.profile)
        .flag("dmax", std::to_string(o.dmax))
        .flag("draws", std::to_string(o.draws))
        .flag("seed", std::to_string(o.seed))
        .flag("out", o.out);
    CsvWriter w(o.out, cmd.str(), o.seed);
    w.header({"draw", "d", "bound"});
    for (std::size_t k = 0; k < o.draws; ++k)
        for (std::size_t gi = 0; gi < d_grid.size(); ++gi)
            w.row({std::to_string(k), std::to_string(d_grid[gi]),
                   format_double(table.bounds[k][gi])});
    w.close();
    out << "median bound at d=" << d_grid.back() << ": "
        << format_double(table.median_bound.back()) << " (max "
        << format_double(table.max_bound.back()) << ")\n";
    return 0;
}

// ---------------------------------------------------------------- study ---

StudyConfig read_study_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config '" + path + "'");
    StudyConfig cfg;
    cfg.replications = 0;
    cfg.bootstrap_m = 0;
    bool have_seed = false;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto trim = [](std::string s) {
            std::size_t b = s.find_first_not_of(" \t\r");
            std::size_t e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        line = trim(line);
        if (line.empty()) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        auto to_sizes = [&](const char* what) {
            std::vector<std::size_t> out;
            for (double v : parse_double_list(value, what)) {
                if (v < 1 || v != std::floor(v))
                    throw ConfigError(std::string(what) + ": expected positive integers");
                out.push_back(static_cast<std::size_t>(v));
            }
            return out;
        };
        if (key == "dist") {
            std::size_t start = 0;
            while (start <= value.size()) {
                std::size_t comma = value.find(',', start);
                std::string id =
                    value.substr(start, (comma == std::string::npos ? value.size() : comma) - start);
                cfg.distributions.push_back(id);
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
        } else if (key == "d") {
            cfg.dims = to_sizes("d");
        } else if (key == "n") {
            cfg.sizes = to_sizes("n");
        } else if (key == "alpha") {
            cfg.alphas = parse_double_list(value, "alpha");
        } else if (key == "M") {
            cfg.bootstrap_m = to_sizes("M").at(0);
        } else if (key == "replications") {
            cfg.replications = to_sizes("replications").at(0);
        } else if (key == "seed") {
            try {
                cfg.seed = std::stoull(value);
                have_seed = true;
            } catch (...) {
                throw ConfigError("seed: bad integer '" + value + "'");
            }
        } else if (key == "refine_rounds") {
            cfg.median.refine_rounds = to_sizes("refine_rounds").at(0);
        } else if (key == "refine_shrink") {
            cfg.median.shrink = parse_double_list(value, "refine_shrink").at(0);
        } else if (key == "dirs") {
            cfg.median.approx_dirs = to_sizes("dirs").at(0);
        } else {
            throw ConfigError("config line " + std::to_string(line_no) + ": unknown key '" + key +
                              "'");
        }
    }
    if (cfg.bootstrap_m == 0) throw ConfigError("config: missing M");
    if (cfg.replications == 0) throw ConfigError("config: missing replications");
    if (!have_seed) throw ConfigError("config: missing seed (stochastic runs must be seeded)");
    return cfg;
}

int cmd_study(const Options& o, std::ostream& out) {
    if (o.config.empty()) throw ConfigError("study: --config is required");
    if (o.out.empty()) throw ConfigError("study: --out is required");
    StudyConfig cfg = read_study_config(o.config);
    std::vector<StudyRow> rows = run_study(cfg);

    Canonical cmd("study");
    cmd.flag("config", o.config).flag("out", o.out);
    CsvWriter w(o.out, cmd.str(), cfg.seed);
    w.header({"dist", "d", "n", "alpha", "rate", "R", "M", "seed"});
    for (const StudyRow& r : rows) {
        w.row({r.dist, std::to_string(r.d), std::to_string(r.n), format_double(r.alpha),
               format_double(r.rate), std::to_string(cfg.replications),
               std::to_string(cfg.bootstrap_m), std::to_string(cfg.seed)});
        out << r.dist << " d=" << r.d << " n=" << r.n << " alpha=" << format_double(r.alpha)
            << " rate=" << format_double(r.rate) << "\n";
    }
    w.close();
    return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"depthlab: half-space depth, the Tukey median, and depth-based diagnostics"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", o.seed, "master seed (required for stochastic runs)")
            ->each([&](const std::string&) { o.seed_set = true; });
        sub->add_option("--threads", o.threads, "worker threads (0 = auto); output-invariant");
        sub->add_option("--out", o.out, "output CSV path");
    };

    CLI::App* c_depth = app.add_subcommand("depth", "depth of a point in a dataset");
    c_depth->add_option("--input", o.input, "dataset CSV")->required();
    c_depth->add_option("--point", o.point_csv, "query point, comma-separated")->required();
    c_depth->add_option("--method", o.method, "exact1d|exact2d|combinatorial|approx")->required();
    c_depth->add_option("--dirs", o.dirs, "directions for approx");
    add_common(c_depth);

    CLI::App* c_median = app.add_subcommand("median", "half-space median and maximal depth");
    c_median->add_option("--input", o.input, "dataset CSV")->required();
    c_median->add_option("--dirs", o.dirs, "directions when exact depth is unavailable");
    c_median->add_option("--refine-rounds", o.refine_rounds, "refinement rounds");
    c_median->add_option("--refine-shrink", o.refine_shrink, "refinement radius decay");
    add_common(c_median);

    CLI::App* c_symtest = app.add_subcommand("symtest", "bootstrap test for angular symmetry");
    c_symtest->add_option("--input", o.input, "dataset CSV")->required();
    c_symtest->add_option("--bootstrap", o.bootstrap, "bootstrap samples M");
    c_symtest->add_option("--alpha", o.alpha, "test level");
    c_symtest->add_option("--dirs", o.dirs, "directions when exact depth is unavailable");
    c_symtest->add_option("--refine-rounds", o.refine_rounds, "refinement rounds");
    c_symtest->add_option("--refine-shrink", o.refine_shrink, "refinement radius decay");
    add_common(c_symtest);

    CLI::App* c_diag = app.add_subcommand("diagnose", "r(q) sphericity diagnostic");
    c_diag->add_option("--input", o.input, "dataset CSV");
    CLI::Option* diag_p = c_diag->add_option(
        "--p", o.p_raw, "sample from the l_p model instead of reading --input");
    c_diag->add_option("--d", o.d, "model dimension");
    c_diag->add_option("--n", o.n, "model sample size");
    c_diag->add_option("--dirs", o.dirs, "directions when exact depth is unavailable");
    c_diag->add_option("--qgrid", o.qgrid, "q grid START:STOP:STEP");
    add_common(c_diag);

    CLI::App* c_cont = app.add_subcommand("contours", "depth and density contour grids");
    c_cont->add_option("--p", o.p_raw, "l_p exponent or 'inf'")->required();
    c_cont->add_option("--n", o.n, "sample size");
    c_cont->add_option("--grid", o.grid, "grid nodes per axis");
    c_cont->add_option("--levels", o.levels_csv, "depth levels, comma-separated");
    c_cont->add_option("--svg", o.svg, "also render an SVG overlay");
    add_common(c_cont);

    CLI::App* c_inf = app.add_subcommand("infdim", "sequence-space depth bound decay");
    c_inf->add_option("--dmax", o.dmax, "largest truncation dimension");
    c_inf->add_option("--draws", o.draws, "number of sequence draws");
    c_inf->add_option("--profile", o.profile, "variance profile: invsq|geom");
    add_common(c_inf);

    CLI::App* c_study = app.add_subcommand("study", "Monte Carlo rejection-rate study");
    c_study->add_option("--config", o.config, "study config file")->required();
    add_common(c_study);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    set_max_threads(o.threads);

    try {
        if (c_depth->parsed()) return cmd_depth(o, out);
        if (c_median->parsed()) return cmd_median(o, out);
        if (c_symtest->parsed()) return cmd_symtest(o, out);
        if (c_diag->parsed()) {
            if (*diag_p) o.p = parse_p(o.p_raw);
            return cmd_diagnose(o, static_cast<bool>(*diag_p), out);
        }
        if (c_cont->parsed()) {
            o.p = parse_p(o.p_raw);
            return cmd_contours(o, out);
        }
        if (c_inf->parsed()) return cmd_infdim(o, out);
        if (c_study->parsed()) return cmd_study(o, out);
    } catch (const ConfigError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const GridSpecError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "data error: " << e.what() << "\n";
        return 3;
    }
    err << "usage error: no subcommand\n";
    return 2;
}

}  // namespace depthlab::cli
