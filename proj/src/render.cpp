#include "bcjulia/render.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "bcjulia/parallel.hpp"

namespace bcjulia {
namespace {

double length(const Coords4& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3]); }

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double length(const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

Vec3 normalized(const Vec3& v) {
    const double n = length(v);
    if (!(n > 0.0)) throw std::invalid_argument("zero-length camera vector");
    return {v[0] / n, v[1] / n, v[2] / n};
}

/// Upper bound on how far a unit step in slice parameters moves the point in
/// R^4: sqrt of the infinity norm of the Gram matrix.
double stretch_factor(const SliceSpec& spec) {
    double worst = 0.0;
    for (const SliceAxis& a : spec.axes) {
        double row = 0.0;
        for (const SliceAxis& b : spec.axes) {
            double dot = 0.0;
            for (int k = 0; k < 4; ++k) dot += a.direction[k] * b.direction[k];
            row += std::abs(dot);
        }
        worst = std::max(worst, row);
    }
    return std::sqrt(worst);
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError(fmt::format("cannot open '{}' for writing", path.string()));
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError(fmt::format("write to '{}' failed", path.string()));
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(fmt::format("cannot open '{}' for reading", path.string()));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void put_u32le(std::string& out, std::uint32_t v) {
    for (int k = 0; k < 4; ++k) out.push_back(static_cast<char>((v >> (8 * k)) & 0xFFu));
}

std::uint32_t get_u32le(std::string_view s, std::size_t at) {
    std::uint32_t v = 0;
    for (int k = 0; k < 4; ++k) v |= std::uint32_t(static_cast<unsigned char>(s[at + k])) << (8 * k);
    return v;
}

double combined_de(const BicomplexVerdict& v) {
    const double d1 = v.orbit1.escaped ? v.orbit1.de : 0.0;
    const double d2 = v.orbit2.escaped ? v.orbit2.de : 0.0;
    return std::max(d1, d2);
}

}  // namespace

double SliceAxis::coordinate(int i) const {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    return center + half * (double(2 * i - (count - 1)) / double(count - 1));
}

double SliceAxis::pitch() const { return (hi - lo) / double(count - 1) * length(direction); }

SliceSpec SliceSpec::axis_aligned(std::span<const int> free_axes, const Coords4& fixed, double lo, double hi,
                                  int res) {
    SliceSpec s;
    s.origin = fixed;
    for (int a : free_axes) {
        if (a < 0 || a > 3) throw std::invalid_argument("slice axis must be in 0..3");
        s.origin[static_cast<std::size_t>(a)] = 0.0;
        SliceAxis ax;
        ax.direction[static_cast<std::size_t>(a)] = 1.0;
        ax.lo = lo;
        ax.hi = hi;
        ax.count = res;
        s.axes.push_back(ax);
    }
    s.validate();
    return s;
}

SliceSpec SliceSpec::j_zero(double lo, double hi, int res) {
    constexpr std::array<int, 3> free{0, 1, 2};
    return axis_aligned(free, Coords4{}, lo, hi, res);
}

void SliceSpec::validate() const {
    if (axes.size() < 2 || axes.size() > 3) throw std::invalid_argument("slice must have 2 or 3 axes");
    for (const SliceAxis& a : axes) {
        if (a.count < 2) throw std::invalid_argument("slice resolution must be >= 2 per axis");
        if (!(a.hi > a.lo)) throw std::invalid_argument("slice window must be nondegenerate");
        if (!(length(a.direction) > 0.0)) throw std::invalid_argument("slice direction must be nonzero");
    }
}

std::vector<int> SliceSpec::dims() const {
    std::vector<int> d;
    for (const SliceAxis& a : axes) d.push_back(a.count);
    return d;
}

std::size_t SliceSpec::cell_count() const {
    std::size_t n = 1;
    for (const SliceAxis& a : axes) n *= static_cast<std::size_t>(a.count);
    return n;
}

double SliceSpec::max_pitch() const {
    double p = 0.0;
    for (const SliceAxis& a : axes) p = std::max(p, a.pitch());
    return p;
}

Bicomplex SliceSpec::at_params(std::span<const double> t) const {
    Coords4 c = origin;
    for (std::size_t k = 0; k < axes.size(); ++k)
        for (std::size_t m = 0; m < 4; ++m) c[m] += t[k] * axes[k].direction[m];
    return Bicomplex::from_coords(c[0], c[1], c[2], c[3]);
}

Bicomplex SliceSpec::at_cell(std::size_t linear) const {
    std::array<double, 3> t{};
    for (std::size_t k = 0; k < axes.size(); ++k) {
        const auto n = static_cast<std::size_t>(axes[k].count);
        t[k] = axes[k].coordinate(static_cast<int>(linear % n));
        linear /= n;
    }
    return at_params(std::span<const double>(t.data(), axes.size()));
}

std::size_t ClassGrid::index(int i, int j, int k) const {
    std::size_t idx = static_cast<std::size_t>(i);
    std::size_t stride = 1;
    const std::array<int, 3> at{i, j, k};
    for (std::size_t a = 1; a < dims.size(); ++a) {
        stride *= static_cast<std::size_t>(dims[a - 1]);
        idx += stride * static_cast<std::size_t>(at[a]);
    }
    return idx;
}

std::array<std::size_t, kBicomplexClassCount> ClassGrid::counts() const {
    std::array<std::size_t, kBicomplexClassCount> out{};
    for (BicomplexClass c : cells) ++out[static_cast<std::size_t>(c)];
    return out;
}

ClassGrid classify_slice(const BicomplexPoly& p, const SliceSpec& spec, const IterParams& params,
                         const ClassifyOptions& opts) {
    spec.validate();
    IterParams local = params;
    if (opts.auto_de_threshold) local.de_threshold = 0.5 * spec.max_pitch();
    const SplitSystem sys(p, local);

    ClassGrid grid;
    grid.dims = spec.dims();
    grid.cells.resize(spec.cell_count());
    grid.de.resize(spec.cell_count());
    parallel_for(grid.cells.size(), opts.threads, [&](std::size_t i) {
        const BicomplexVerdict v = classify_point(sys, spec.at_cell(i), local);
        grid.cells[i] = v.cls;
        grid.de[i] = combined_de(v);
    });
    return grid;
}

Palette default_palette() {
    return {Rgb{255, 200, 40},  // J2
            Rgb{40, 90, 200},   // K2_INTERIOR
            Rgb{60, 160, 90},   // F2_BOUNDED
            Rgb{200, 80, 60},   // F2_UNBOUNDED_MIXED
            Rgb{0, 0, 0}};      // F2_UNBOUNDED
}

Image::Image(int w, int h, Rgb fill) : width(w), height(h) {
    if (w < 1 || h < 1) throw std::invalid_argument("image must be nonempty");
    rgb.resize(static_cast<std::size_t>(w) * static_cast<std::size_t>(h) * 3);
    for (std::size_t i = 0; i < rgb.size(); i += 3) {
        rgb[i] = fill.r;
        rgb[i + 1] = fill.g;
        rgb[i + 2] = fill.b;
    }
}

Rgb Image::pixel(int x, int y) const {
    const std::size_t i = (static_cast<std::size_t>(y) * static_cast<std::size_t>(width) + static_cast<std::size_t>(x)) * 3;
    return {rgb[i], rgb[i + 1], rgb[i + 2]};
}

void Image::set(int x, int y, Rgb c) {
    const std::size_t i = (static_cast<std::size_t>(y) * static_cast<std::size_t>(width) + static_cast<std::size_t>(x)) * 3;
    rgb[i] = c.r;
    rgb[i + 1] = c.g;
    rgb[i + 2] = c.b;
}

Image grid_to_image(const ClassGrid& grid, const Palette& palette) {
    if (grid.dims.size() != 2) throw std::invalid_argument("image export needs a 2D grid");
    Image img(grid.dims[0], grid.dims[1]);
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x)
            img.set(x, y, palette[static_cast<std::size_t>(grid.at(x, img.height - 1 - y))]);
    return img;
}

std::string encode_ppm(const Image& img) {
    if (img.width < 1 || img.height < 1 || img.rgb.size() != std::size_t(img.width) * std::size_t(img.height) * 3)
        throw std::invalid_argument("PPM export needs a nonempty, consistent image");
    std::string out = fmt::format("P6\n{} {}\n255\n", img.width, img.height);
    out.append(reinterpret_cast<const char*>(img.rgb.data()), img.rgb.size());
    return out;
}

Image decode_ppm(std::string_view bytes) {
    std::size_t pos = 0;
    auto token = [&]() {
        while (pos < bytes.size()) {
            if (bytes[pos] == '#') {
                while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
            } else if (std::isspace(static_cast<unsigned char>(bytes[pos]))) {
                ++pos;
            } else {
                break;
            }
        }
        const std::size_t start = pos;
        while (pos < bytes.size() && !std::isspace(static_cast<unsigned char>(bytes[pos]))) ++pos;
        return std::string(bytes.substr(start, pos - start));
    };
    if (token() != "P6") throw ParseError("not a binary PPM (P6)");
    int w = 0, h = 0, maxval = 0;
    try {
        w = std::stoi(token());
        h = std::stoi(token());
        maxval = std::stoi(token());
    } catch (const std::exception&) {
        throw ParseError("malformed PPM header");
    }
    if (maxval != 255 || w < 1 || h < 1) throw ParseError("unsupported PPM header");
    ++pos;  // single whitespace after maxval
    const std::size_t need = std::size_t(w) * std::size_t(h) * 3;
    if (bytes.size() < pos + need) throw ParseError("truncated PPM payload");
    Image img(w, h);
    std::copy_n(bytes.begin() + static_cast<std::ptrdiff_t>(pos), need, img.rgb.begin());
    return img;
}

void write_ppm(const Image& img, const std::filesystem::path& path) { write_file(path, encode_ppm(img)); }
Image read_ppm(const std::filesystem::path& path) { return decode_ppm(read_file(path)); }

std::string encode_voxels(const ClassGrid& grid) {
    if (grid.dims.size() != 3) throw std::invalid_argument("voxel export needs a 3D grid");
    std::string out = "BCJ1";
    for (int d : grid.dims) put_u32le(out, static_cast<std::uint32_t>(d));
    out.reserve(out.size() + grid.cells.size());
    for (BicomplexClass c : grid.cells) out.push_back(static_cast<char>(c));
    return out;
}

ClassGrid decode_voxels(std::string_view bytes) {
    if (bytes.size() < 16 || bytes.substr(0, 4) != "BCJ1") throw ParseError("not a BCJ1 voxel file");
    ClassGrid grid;
    std::size_t n = 1;
    for (int k = 0; k < 3; ++k) {
        const std::uint32_t d = get_u32le(bytes, 4 + 4 * static_cast<std::size_t>(k));
        grid.dims.push_back(static_cast<int>(d));
        n *= d;
    }
    if (bytes.size() != 16 + n) throw ParseError("BCJ1 payload size does not match dims");
    grid.cells.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto v = static_cast<unsigned char>(bytes[16 + i]);
        if (v >= kBicomplexClassCount) throw ParseError(fmt::format("invalid class ordinal {}", v));
        grid.cells.push_back(static_cast<BicomplexClass>(v));
    }
    return grid;
}

void export_voxels(const ClassGrid& grid, const std::filesystem::path& path) { write_file(path, encode_voxels(grid)); }
ClassGrid read_voxels(const std::filesystem::path& path) { return decode_voxels(read_file(path)); }

RayMarchResult render_raymarch(const BicomplexPoly& p, const SliceSpec& spec, const RenderOptions& opts,
                               const IterParams& params) {
    spec.validate();
    if (spec.axes.size() != 3) throw std::invalid_argument("ray marching needs a 3D slice");
    if (!(opts.safety > 0.0) || !(opts.min_step_fraction > 0.0))
        throw std::invalid_argument("ray-march safety and minimum step must be positive");
    const SplitSystem sys(p, params);

    Vec3 lo{}, hi{}, center{};
    for (std::size_t k = 0; k < 3; ++k) {
        lo[k] = spec.axes[k].lo;
        hi[k] = spec.axes[k].hi;
        center[k] = 0.5 * (lo[k] + hi[k]);
    }
    const double diagonal = length(Vec3{hi[0] - lo[0], hi[1] - lo[1], hi[2] - lo[2]});
    const double radius = 0.5 * diagonal;

    const Vec3 dir = normalized(opts.camera_dir);
    const Vec3 right = normalized(cross(dir, opts.camera_up));
    const Vec3 up = cross(right, dir);

    int width = opts.width;
    if (width <= 0) {
        for (const SliceAxis& a : spec.axes) width = std::max(width, a.count);
    }
    const int height = opts.height > 0 ? opts.height : width;
    const double pixel = 2.0 * radius / double(std::min(width, height));
    const double hit_eps = opts.hit_epsilon > 0.0 ? opts.hit_epsilon : pixel;
    const double min_step = opts.min_step_fraction * diagonal;
    // planar component distance -> slice parameter distance
    const double to_slice = 1.0 / (std::sqrt(2.0) * stretch_factor(spec));

    IterParams hit_params = params;
    hit_params.de_threshold = hit_eps / to_slice;

    RayMarchResult result;
    result.image = Image(width, height, opts.background);
    std::vector<int> hit_class(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), -1);

    parallel_for(hit_class.size(), opts.threads, [&](std::size_t idx) {
        const int px = static_cast<int>(idx % static_cast<std::size_t>(width));
        const int py = static_cast<int>(idx / static_cast<std::size_t>(width));
        const double sx = 0.5 * pixel * double(2 * px + 1 - width);
        const double sy = 0.5 * pixel * double(height - 1 - 2 * py);
        Vec3 origin{};
        for (std::size_t k = 0; k < 3; ++k) origin[k] = center[k] + sx * right[k] + sy * up[k] - radius * dir[k];

        // clip to the window box
        double t0 = 0.0, t1 = 2.0 * radius;
        for (std::size_t k = 0; k < 3; ++k) {
            if (dir[k] == 0.0) {
                if (origin[k] < lo[k] || origin[k] > hi[k]) return;
                continue;
            }
            double a = (lo[k] - origin[k]) / dir[k];
            double b = (hi[k] - origin[k]) / dir[k];
            if (a > b) std::swap(a, b);
            t0 = std::max(t0, a);
            t1 = std::min(t1, b);
        }
        if (t0 > t1) return;

        for (double t = t0; t <= t1;) {
            const std::array<double, 3> pos{origin[0] + t * dir[0], origin[1] + t * dir[1], origin[2] + t * dir[2]};
            const BicomplexVerdict v = classify_point(sys, spec.at_params(pos), hit_params);
            const double de = combined_de(v) * to_slice;
            if (de < hit_eps) {
                const double depth = (t - t0) / diagonal;
                const double shade = 1.0 - 0.75 * std::clamp(depth, 0.0, 1.0);
                const Rgb base = opts.palette[static_cast<std::size_t>(v.cls)];
                hit_class[idx] = static_cast<int>(v.cls);
                result.image.set(px, py,
                                 Rgb{static_cast<std::uint8_t>(std::lround(base.r * shade)),
                                     static_cast<std::uint8_t>(std::lround(base.g * shade)),
                                     static_cast<std::uint8_t>(std::lround(base.b * shade))});
                return;
            }
            t += std::max(min_step, opts.safety * de);
        }
    });

    for (int c : hit_class) {
        if (c < 0)
            ++result.misses;
        else
            ++result.hit_counts[static_cast<std::size_t>(c)];
    }
    return result;
}

}  // namespace bcjulia
