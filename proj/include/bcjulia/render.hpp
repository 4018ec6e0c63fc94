#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "bcjulia/dynamics.hpp"

namespace bcjulia {

using Coords4 = std::array<double, 4>;

/// One sampled direction of a slice: count samples of
/// origin + t*direction for t evenly spaced on [lo, hi].
struct SliceAxis {
    Coords4 direction{};
    double lo = -1.5;
    double hi = 1.5;
    int count = 2;

    /// Sample i. Computed as center + half*(2i-(n-1))/(n-1) so windows
    /// symmetric about 0 give exactly antisymmetric samples.
    double coordinate(int i) const;
    double pitch() const;
};

/// A 2D or 3D affine slice of the four real coordinates (w0, w1, w2, w3).
struct SliceSpec {
    Coords4 origin{};
    std::vector<SliceAxis> axes;

    /// Free coordinates `free_axes` (indices into w0..w3) sampled on
    /// [lo, hi] with `res` points each; the rest fixed to `fixed`.
    static SliceSpec axis_aligned(std::span<const int> free_axes, const Coords4& fixed, double lo, double hi,
                                  int res);
    /// The j = 0 slice: w3 fixed at 0, (w0, w1, w2) free.
    static SliceSpec j_zero(double lo, double hi, int res);

    void validate() const;
    std::vector<int> dims() const;
    std::size_t cell_count() const;
    double max_pitch() const;

    /// Bicomplex value at slice parameters t (one per axis).
    Bicomplex at_params(std::span<const double> t) const;
    /// Cell in row-major order, first axis fastest.
    Bicomplex at_cell(std::size_t linear) const;
};

struct ClassGrid {
    std::vector<int> dims;
    std::vector<BicomplexClass> cells;
    /// max of the component distance estimates, bounded components counted
    /// as 0. Empty when read back from a voxel file.
    std::vector<double> de;

    std::size_t size() const { return cells.size(); }
    std::size_t index(int i, int j, int k = 0) const;
    BicomplexClass at(int i, int j, int k = 0) const { return cells[index(i, j, k)]; }
    std::array<std::size_t, kBicomplexClassCount> counts() const;
};

struct ClassifyOptions {
    int threads = 1;
    /// Replace params.de_threshold with half the largest cell pitch.
    bool auto_de_threshold = true;
};

ClassGrid classify_slice(const BicomplexPoly& p, const SliceSpec& spec, const IterParams& params,
                         const ClassifyOptions& opts = {});

struct Rgb {
    std::uint8_t r = 0, g = 0, b = 0;
    friend constexpr bool operator==(const Rgb&, const Rgb&) = default;
};

using Palette = std::array<Rgb, kBicomplexClassCount>;
Palette default_palette();

struct Image {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> rgb;

    Image() = default;
    Image(int w, int h, Rgb fill = {});
    Rgb pixel(int x, int y) const;
    void set(int x, int y, Rgb c);
    friend bool operator==(const Image&, const Image&) = default;
};

/// 2D grid to image: first axis left to right, second axis bottom to top
/// (the top image row is the largest sample of the second axis).
Image grid_to_image(const ClassGrid& grid, const Palette& palette);

std::string encode_ppm(const Image& img);
Image decode_ppm(std::string_view bytes);
void write_ppm(const Image& img, const std::filesystem::path& path);
Image read_ppm(const std::filesystem::path& path);

/// BCJ1: magic "BCJ1", three little-endian uint32 dims, then one class
/// ordinal byte per cell, first axis fastest.
std::string encode_voxels(const ClassGrid& grid);
ClassGrid decode_voxels(std::string_view bytes);
void export_voxels(const ClassGrid& grid, const std::filesystem::path& path);
ClassGrid read_voxels(const std::filesystem::path& path);

enum class RenderMode { voxel_scan, ray_march };

using Vec3 = std::array<double, 3>;

struct RenderOptions {
    RenderMode mode = RenderMode::ray_march;
    /// Viewing direction and up vector in slice parameter space.
    Vec3 camera_dir{0.0, 0.0, -1.0};
    Vec3 camera_up{0.0, 1.0, 0.0};
    Palette palette = default_palette();
    Rgb background{16, 16, 24};
    int width = 0;   // 0: largest slice resolution
    int height = 0;  // 0: same as width
    double safety = 0.5;
    double min_step_fraction = 1e-4;  // of the window diagonal
    double hit_epsilon = 0.0;         // 0: one pixel pitch
    int threads = 1;
};

struct RayMarchResult {
    Image image;
    std::array<std::size_t, kBicomplexClassCount> hit_counts{};
    std::size_t misses = 0;
};

/// Orthographic sphere tracing of K2 inside a 3D slice window. The step is
/// the larger of the two component distance estimates divided by sqrt(2)
/// and by the slice's stretch factor, never less than the minimum step.
RayMarchResult render_raymarch(const BicomplexPoly& p, const SliceSpec& spec, const RenderOptions& opts,
                               const IterParams& params);

}  // namespace bcjulia
