#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>
#include <string>
#include <vector>

#include "bcjulia/cli.hpp"
#include "bcjulia/core.hpp"
#include "bcjulia/dynamics.hpp"
#include "bcjulia/errors.hpp"
#include "bcjulia/parse.hpp"
#include "bcjulia/poly.hpp"
#include "bcjulia/render.hpp"
#include "bcjulia/verify.hpp"

namespace py = pybind11;
using namespace bcjulia;

namespace {

BicomplexPoly to_poly(const py::object& obj) {
    if (py::isinstance<BicomplexPoly>(obj)) return obj.cast<BicomplexPoly>();
    if (py::isinstance<py::str>(obj)) return parse_poly(obj.cast<std::string>());
    return BicomplexPoly(obj.cast<std::vector<Bicomplex>>());
}

IterParams make_params(int max_iter, double de_threshold, double escape_radius, double escape_safety) {
    IterParams p;
    p.max_iter = max_iter;
    p.de_threshold = de_threshold;
    p.escape_radius = escape_radius;
    p.escape_safety = escape_safety;
    validate(p);
    return p;
}

py::array_t<std::uint8_t> class_array(const ClassGrid& g) {
    // numpy axis order is reversed so that arr[k, j, i] == grid.at(i, j, k)
    std::vector<py::ssize_t> shape(g.dims.rbegin(), g.dims.rend());
    py::array_t<std::uint8_t> out(shape);
    auto* dst = out.mutable_data();
    for (std::size_t n = 0; n < g.size(); ++n) dst[n] = static_cast<std::uint8_t>(g.cells[n]);
    return out;
}

ClassGrid grid_from_array(const py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>& arr) {
    ClassGrid g;
    for (py::ssize_t d = arr.ndim() - 1; d >= 0; --d) g.dims.push_back(static_cast<int>(arr.shape(d)));
    g.cells.resize(static_cast<std::size_t>(arr.size()));
    const auto* src = arr.data();
    for (std::size_t n = 0; n < g.cells.size(); ++n) {
        if (src[n] >= kBicomplexClassCount) throw py::value_error("class ordinal out of range");
        g.cells[n] = static_cast<BicomplexClass>(src[n]);
    }
    return g;
}

py::array_t<std::uint8_t> image_array(const Image& img) {
    py::array_t<std::uint8_t> out({img.height, img.width, 3});
    std::copy(img.rgb.begin(), img.rgb.end(), out.mutable_data());
    return out;
}

SliceSpec make_slice(const std::string& kind, double lo, double hi, int res) {
    if (kind == "j0") return SliceSpec::j_zero(lo, hi, res);
    if (kind == "w2w3") {
        constexpr int axes[2] = {0, 1};
        return SliceSpec::axis_aligned(axes, Coords4{}, lo, hi, res);
    }
    throw py::value_error("slice must be 'j0' or 'w2w3'");
}

}  // namespace

PYBIND11_MODULE(_bcjulia, m) {
    m.doc() = "Bicomplex numbers, polynomials and filled Julia set classification";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<NullConeError>(m, "NullConeError", base.ptr());
    py::register_exception<DegreeError>(m, "DegreeError", base.ptr());
    py::register_exception<DegenerateError>(m, "DegenerateError", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<IoError>(m, "IoError", base.ptr());

    py::enum_<ConjKind>(m, "ConjKind")
        .value("none", ConjKind::none)
        .value("bar", ConjKind::bar)
        .value("swap", ConjKind::swap)
        .value("swap_bar", ConjKind::swap_bar);

    py::class_<Bicomplex>(m, "Bicomplex")
        .def(py::init<>())
        .def(py::init([](Complex z1, Complex z2) { return Bicomplex{z1, z2}; }), py::arg("z1"), py::arg("z2") = Complex{})
        .def_static("from_coords", &Bicomplex::from_coords, py::arg("w0"), py::arg("w1"), py::arg("w2"), py::arg("w3"))
        .def_static("parse", &parse_bicomplex)
        .def_readwrite("z1", &Bicomplex::z1)
        .def_readwrite("z2", &Bicomplex::z2)
        .def("coords", &Bicomplex::coords)
        .def("conj", [](const Bicomplex& w, ConjKind k) { return conj(k, w); })
        .def("norm", [](const Bicomplex& w) { return norm(w); })
        .def("idempotent", [](const Bicomplex& w) {
            const IdempotentPair p = to_idempotent(w);
            return std::pair{p.w1, p.w2};
        })
        .def_static("from_idempotent", [](Complex w1, Complex w2) { return from_idempotent({w1, w2}); })
        .def("inverse", [](const Bicomplex& w) { return inverse(w); })
        .def("is_null_cone", [](const Bicomplex& w, double tol) { return is_null_cone(w, tol); },
             py::arg("tol") = kDefaultNullConeTol)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__truediv__", [](const Bicomplex& a, const Bicomplex& b) { return divide(a, b); })
        .def("__repr__", [](const Bicomplex& w) {
            const auto c = w.coords();
            return "Bicomplex(" + py::repr(py::make_tuple(c[0], c[1], c[2], c[3])).cast<std::string>() + ")";
        });

    auto u = m.def_submodule("units");
    u.attr("one") = units::one;
    u.attr("i1") = units::i1;
    u.attr("i2") = units::i2;
    u.attr("j") = units::j;
    u.attr("e1") = units::e1;
    u.attr("e2") = units::e2;

    m.def("compose", &compose);

    py::class_<BicomplexPoly>(m, "BicomplexPoly")
        .def(py::init<std::vector<Bicomplex>>(), py::arg("coeffs"))
        .def_static("quadratic", &BicomplexPoly::quadratic, py::arg("c"))
        .def_static("parse", [](const std::string& s) { return parse_poly(s); })
        .def_property_readonly("degree", &BicomplexPoly::degree)
        .def_property_readonly("coeffs", &BicomplexPoly::coeffs)
        .def("__call__", [](const BicomplexPoly& p, const Bicomplex& w) { return eval_direct(p, w); })
        .def("eval_idempotent", [](const BicomplexPoly& p, const Bicomplex& w) { return eval_idempotent(p, w); })
        .def("is_degenerate", [](const BicomplexPoly& p) { return is_degenerate(p); })
        .def("projection", [](const BicomplexPoly& p, int which) { return project(p, which).coeffs(); })
        .def("projection_str", [](const BicomplexPoly& p, int which) { return to_string(project(p, which)); })
        .def("escape_radius", [](const BicomplexPoly& p, int which) { return escape_radius(project(p, which)); });

    m.attr("CLASS_NAMES") = [] {
        py::list names;
        for (int k = 0; k < kBicomplexClassCount; ++k)
            names.append(std::string(to_string(static_cast<BicomplexClass>(k))));
        return names;
    }();

    m.def(
        "classify",
        [](const py::object& poly, const Bicomplex& w, int max_iter, double de_threshold) {
            const IterParams params = make_params(max_iter, de_threshold, 0.0, 1.0);
            const SplitSystem sys(to_poly(poly), params);
            const BicomplexVerdict v = classify_point(sys, w, params);
            py::dict d;
            d["class"] = std::string(to_string(v.cls));
            d["c1"] = std::string(to_string(v.c1));
            d["c2"] = std::string(to_string(v.c2));
            d["iters"] = py::make_tuple(v.orbit1.iters, v.orbit2.iters);
            d["de"] = py::make_tuple(v.orbit1.de, v.orbit2.de);
            return d;
        },
        py::arg("poly"), py::arg("w"), py::arg("max_iter") = 500, py::arg("de_threshold") = 1e-3);

    m.def(
        "orbit_escapes",
        [](const py::object& poly, const Bicomplex& w, int max_iter) {
            const IterParams params = make_params(max_iter, 1e-3, 0.0, 1.0);
            const BicomplexOrbit o = orbit_bicomplex(to_poly(poly), w, params);
            return py::make_tuple(o.escaped, o.iters);
        },
        py::arg("poly"), py::arg("w"), py::arg("max_iter") = 500);

    m.def(
        "classify_slice",
        [](const py::object& poly, const std::string& slice, double lo, double hi, int res, int max_iter,
           py::object de_threshold, int threads) {
            IterParams params = make_params(max_iter, 1e-3, 0.0, 1.0);
            ClassifyOptions opts{.threads = threads, .auto_de_threshold = de_threshold.is_none()};
            if (!de_threshold.is_none()) params.de_threshold = de_threshold.cast<double>();
            const BicomplexPoly p = to_poly(poly);
            const SliceSpec spec = make_slice(slice, lo, hi, res);
            ClassGrid g;
            {
                py::gil_scoped_release release;
                g = classify_slice(p, spec, params, opts);
            }
            return class_array(g);
        },
        py::arg("poly"), py::arg("slice") = "j0", py::arg("lo") = -1.5, py::arg("hi") = 1.5, py::arg("res") = 65,
        py::arg("max_iter") = 500, py::arg("de_threshold") = py::none(), py::arg("threads") = 1,
        "Class ordinals indexed [k, j, i] (3D) or [j, i] (2D), i along the first slice axis.");

    m.def(
        "raymarch",
        [](const py::object& poly, double lo, double hi, int res, int width, int height, Vec3 camera, Vec3 up,
           int max_iter, int threads) {
            const IterParams params = make_params(max_iter, 1e-3, 0.0, 1.0);
            RenderOptions o;
            o.width = width;
            o.height = height;
            o.camera_dir = camera;
            o.camera_up = up;
            o.threads = threads;
            const BicomplexPoly p = to_poly(poly);
            const SliceSpec spec = SliceSpec::j_zero(lo, hi, res);
            RayMarchResult r;
            {
                py::gil_scoped_release release;
                r = render_raymarch(p, spec, o, params);
            }
            return image_array(r.image);
        },
        py::arg("poly"), py::arg("lo") = -1.5, py::arg("hi") = 1.5, py::arg("res") = 65, py::arg("width") = 0,
        py::arg("height") = 0, py::arg("camera") = Vec3{0, 0, -1}, py::arg("up") = Vec3{0, 1, 0},
        py::arg("max_iter") = 500, py::arg("threads") = 1, "RGB image of shape (height, width, 3) on the j = 0 slice.");

    m.def(
        "slice_image",
        [](const py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>& classes) {
            if (classes.ndim() != 2) throw py::value_error("expected a 2D class array");
            return image_array(grid_to_image(grid_from_array(classes), default_palette()));
        },
        py::arg("classes"));

    m.def(
        "write_ppm",
        [](const std::filesystem::path& path, const py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>& rgb) {
            if (rgb.ndim() != 3 || rgb.shape(2) != 3) throw py::value_error("expected shape (height, width, 3)");
            Image img(static_cast<int>(rgb.shape(1)), static_cast<int>(rgb.shape(0)));
            std::copy(rgb.data(), rgb.data() + rgb.size(), img.rgb.begin());
            write_ppm(img, path);
        },
        py::arg("path"), py::arg("rgb"));
    m.def("read_ppm", [](const std::filesystem::path& path) { return image_array(read_ppm(path)); });

    m.def(
        "write_voxels",
        [](const std::filesystem::path& path, const py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>& classes) {
            if (classes.ndim() != 3) throw py::value_error("expected a 3D class array");
            export_voxels(grid_from_array(classes), path);
        },
        py::arg("path"), py::arg("classes"));
    m.def("read_voxels", [](const std::filesystem::path& path) { return class_array(read_voxels(path)); });

    m.def(
        "verify",
        [](std::uint64_t seed, int threads) {
            py::dict d;
            for (const SuiteResult& r : run_all_suites(seed, threads)) d[py::str(r.name)] = py::make_tuple(r.passed, r.detail);
            return d;
        },
        py::arg("seed") = 42, py::arg("threads") = 1);

    m.def(
        "cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command-line interface in-process; returns (exit code, stdout, stderr).");
}
