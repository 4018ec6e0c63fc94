#include "bcjulia/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include <algorithm>
#include <cmath>
#include <ostream>

#include "bcjulia/config.hpp"
#include "bcjulia/parallel.hpp"
#include "bcjulia/parse.hpp"
#include "bcjulia/verify.hpp"

namespace bcjulia::cli {
namespace {

struct CommonFlags {
    std::string config;
    std::optional<int> max_iter;
    std::optional<double> de_threshold;
    std::optional<double> escape_safety;
    std::optional<int> threads;
    std::optional<int> resolution;
    std::optional<std::string> window;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--config", f.config, "key=value config file");
    cmd->add_option("--max-iter", f.max_iter, "iteration cap");
    cmd->add_option("--de-threshold", f.de_threshold, "boundary thickness (distance estimate)");
    cmd->add_option("--escape-safety", f.escape_safety, "bailout radius multiplier");
    cmd->add_option("--threads", f.threads, "worker threads (0 = all cores)");
}

/// defaults < config file < flags
Settings resolve(const CommonFlags& f) {
    Settings s;
    if (!f.config.empty()) apply_config_file(s, f.config);
    if (f.max_iter) apply_setting(s, "max_iter", std::to_string(*f.max_iter));
    if (f.de_threshold) apply_setting(s, "de_threshold", fmt::format("{}", *f.de_threshold));
    if (f.escape_safety) apply_setting(s, "escape_safety", fmt::format("{}", *f.escape_safety));
    if (f.threads) apply_setting(s, "threads", std::to_string(*f.threads));
    if (f.resolution) apply_setting(s, "resolution", std::to_string(*f.resolution));
    if (f.window) apply_setting(s, "window", *f.window);
    return s;
}

/// Splits positionals into polynomial tokens and the point literal.
std::pair<BicomplexPoly, Bicomplex> poly_and_point(const std::vector<std::string>& tokens) {
    std::vector<std::string> poly_tokens;
    std::optional<Bicomplex> point;
    for (const auto& t : tokens) {
        if (t.starts_with("point="))
            point = parse_bicomplex(std::string_view(t).substr(6));
        else
            poly_tokens.push_back(t);
    }
    if (!point) throw ParseError("missing point=<bicomplex>");
    return {parse_poly(poly_tokens), *point};
}

std::string fmt_de(double de) { return std::isinf(de) ? "inf" : fmt::format("{:.6g}", de); }

int axis_index(std::string_view name) {
    if (name == "w0" || name == "re" || name == "1") return 0;
    if (name == "w1" || name == "i1") return 1;
    if (name == "w2" || name == "i2") return 2;
    if (name == "w3" || name == "j") return 3;
    throw ParseError(fmt::format("unknown slice axis '{}'", name));
}

SliceSpec parse_slice(const std::string& text, const Settings& s) {
    Coords4 fixed{};
    std::array<bool, 4> is_fixed{};
    for (const auto& part : split(text, ',')) {
        const auto eq = part.find('=');
        if (eq == std::string::npos) throw ParseError(fmt::format("slice entry needs axis=value: '{}'", part));
        const int a = axis_index(trim(std::string_view(part).substr(0, eq)));
        if (is_fixed[static_cast<std::size_t>(a)]) throw ParseError(fmt::format("axis fixed twice in '{}'", text));
        is_fixed[static_cast<std::size_t>(a)] = true;
        fixed[static_cast<std::size_t>(a)] = parse_real(std::string_view(part).substr(eq + 1));
    }
    std::vector<int> free;
    for (int a = 0; a < 4; ++a)
        if (!is_fixed[static_cast<std::size_t>(a)]) free.push_back(a);
    if (free.size() < 2 || free.size() > 3) throw ParseError("slice must fix one or two axes");
    return SliceSpec::axis_aligned(free, fixed, s.window_lo, s.window_hi, s.resolution);
}

Vec3 parse_vec3(const std::string& text) {
    const auto parts = split(text, ',');
    if (parts.size() != 3) throw ParseError(fmt::format("vector needs x,y,z: '{}'", text));
    return {parse_real(parts[0]), parse_real(parts[1]), parse_real(parts[2])};
}

void print_counts(std::ostream& out, const std::array<std::size_t, kBicomplexClassCount>& counts) {
    for (int c = 0; c < kBicomplexClassCount; ++c)
        fmt::print(out, "{}={}\n", to_string(static_cast<BicomplexClass>(c)), counts[static_cast<std::size_t>(c)]);
}

// Negative numbers after --window would otherwise be read as flags.
std::vector<std::string> glue_negative_values(const std::vector<std::string>& args) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const bool takes_value = args[i] == "--window" || args[i] == "--camera" || args[i] == "--up";
        if (takes_value && i + 1 < args.size() && args[i + 1].starts_with("-")) {
            out.push_back(args[i] + "=" + args[i + 1]);
            ++i;
        } else {
            out.push_back(args[i]);
        }
    }
    return out;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bicomplex Julia, filled-in Julia and Fatou set classifier and renderer", "bcjulia"};
    app.require_subcommand(1);

    CommonFlags common;
    std::vector<std::string> positionals;

    auto* classify = app.add_subcommand("classify", "classify one point");
    classify->add_option("spec", positionals, "polynomial tokens and point=<bicomplex>")->required();
    add_common(classify, common);

    int orbit_steps = 10;
    auto* orbit = app.add_subcommand("orbit", "print the bicomplex orbit of a point");
    orbit->add_option("spec", positionals, "polynomial tokens and point=<bicomplex>")->required();
    orbit->add_option("-n,--steps", orbit_steps, "rows to print")->check(CLI::PositiveNumber);
    add_common(orbit, common);

    std::string slice = "j=0";
    std::string mode;
    std::string output;
    std::string camera = "0,0,-1";
    std::string up = "0,1,0";
    int width = 0, height = 0;
    auto* render = app.add_subcommand("render", "classify a 2D/3D slice and write an image or voxel file");
    render->add_option("spec", positionals, "polynomial tokens")->required();
    render->add_option("--slice", slice, "fixed axes, e.g. j=0 or w2=0,w3=0");
    render->add_option("--window", common.window, "sample window lo:hi for every free axis");
    render->add_option("--res", common.resolution, "samples per free axis");
    render->add_option("--mode", mode, "voxel | ppm | raymarch")->check(CLI::IsMember({"voxel", "ppm", "raymarch"}));
    render->add_option("-o,--output", output, "output path")->required();
    render->add_option("--camera", camera, "ray-march view direction x,y,z in slice axes");
    render->add_option("--up", up, "ray-march up vector x,y,z");
    render->add_option("--width", width, "ray-march image width");
    render->add_option("--height", height, "ray-march image height");
    add_common(render, common);

    std::string suite;
    std::uint64_t seed = 42;
    int verify_threads = 0;
    auto* verify = app.add_subcommand("verify", "run the algebraic and dynamical invariant suites");
    verify->add_option("--suite", suite, "run one suite only");
    verify->add_option("--seed", seed, "seed for randomized suites");
    verify->add_option("--threads", verify_threads, "worker threads (0 = all cores)");

    std::vector<std::string> args = glue_negative_values(raw_args);
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    }

    try {
        if (classify->parsed()) {
            const Settings s = resolve(common);
            const auto [poly, point] = poly_and_point(positionals);
            const IterParams params = s.iter_params();
            const SplitSystem sys(poly, params);
            const BicomplexVerdict v = classify_point(sys, point, params);
            fmt::print(out, "p1={} p2={}\n", to_string(sys.component(1)), to_string(sys.component(2)));
            fmt::print(out, "class={} c1={} c2={} iters={},{} de={},{}\n", to_string(v.cls), to_string(v.c1),
                       to_string(v.c2), v.orbit1.iters, v.orbit2.iters, fmt_de(v.orbit1.de), fmt_de(v.orbit2.de));
            return kOk;
        }
        if (orbit->parsed()) {
            const Settings s = resolve(common);
            const auto [poly, point] = poly_and_point(positionals);
            const IterParams params = s.iter_params();
            const SplitSystem sys(poly, params);
            fmt::print(out, "step w0 w1 w2 w3 norm\n");
            Bicomplex w = point;
            for (int k = 0; k < orbit_steps; ++k) {
                const auto c = w.coords();
                fmt::print(out, "{} {:.17g} {:.17g} {:.17g} {:.17g} {:.17g}\n", k, c[0], c[1], c[2], c[3], norm(w));
                w = eval_direct(poly, w);
            }
            const BicomplexOrbit o = orbit_bicomplex(sys, point, params);
            fmt::print(out, "verdict={} iters={}\n", o.escaped ? "escaped" : "bounded", o.iters);
            return kOk;
        }
        if (render->parsed()) {
            const Settings s = resolve(common);
            const BicomplexPoly poly = parse_poly(positionals);
            const SliceSpec spec = parse_slice(slice, s);
            if (mode.empty()) mode = spec.axes.size() == 3 ? "voxel" : "ppm";
            if ((mode == "ppm") != (spec.axes.size() == 2))
                throw ParseError(fmt::format("mode '{}' does not fit a {}D slice", mode, spec.axes.size()));
            IterParams params = s.iter_params();
            if (mode == "raymarch") {
                RenderOptions opts;
                opts.camera_dir = parse_vec3(camera);
                opts.camera_up = parse_vec3(up);
                opts.palette = s.palette;
                opts.background = s.background;
                opts.width = width;
                opts.height = height;
                opts.threads = s.thread_count();
                const RayMarchResult r = render_raymarch(poly, spec, opts, params);
                write_ppm(r.image, output);
                print_counts(out, r.hit_counts);
                fmt::print(out, "background={}\n", r.misses);
            } else {
                ClassifyOptions opts;
                opts.threads = s.thread_count();
                opts.auto_de_threshold = !s.de_threshold.has_value();
                const ClassGrid grid = classify_slice(poly, spec, params, opts);
                if (mode == "voxel")
                    export_voxels(grid, output);
                else
                    write_ppm(grid_to_image(grid, s.palette), output);
                print_counts(out, grid.counts());
            }
            fmt::print(out, "wrote {}\n", output);
            return kOk;
        }
        if (verify->parsed()) {
            const int threads = verify_threads > 0 ? verify_threads : default_thread_count();
            std::vector<SuiteResult> results;
            if (suite.empty())
                results = run_all_suites(seed, threads);
            else
                results.push_back(run_suite(suite, seed, threads));
            bool all = true;
            for (const auto& r : results) {
                fmt::print(out, "[{}] {} {}\n", r.passed ? "PASS" : "FAIL", r.name, r.detail);
                all = all && r.passed;
            }
            return all ? kOk : kVerifyFailed;
        }
    } catch (const DegenerateError& e) {
        err << "error: degenerate polynomial: " << e.what() << "\n";
        return kDegenerate;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kIoError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    }
    return kParseError;
}

}  // namespace bcjulia::cli
