#pragma once

// Discs and T-cartesian sets. A T-cartesian set X1 xe X2 is the set of
// bicomplex numbers whose idempotent components lie in X1 and X2.

#include <functional>
#include <variant>
#include <vector>

#include "bcjulia/core.hpp"

namespace bcjulia {

struct Ball1 {
    Complex center{};
    double radius = 1.0;
};

/// Axis-aligned rectangle in the complex plane.
struct Rect1 {
    double re_min = -1.0;
    double re_max = 1.0;
    double im_min = -1.0;
    double im_max = 1.0;
};

using PlanarRegion = std::variant<Ball1, Rect1>;

bool contains(const PlanarRegion& r, const Complex& z);         // open
bool contains_closed(const PlanarRegion& r, const Complex& z);  // closed
Complex region_center(const PlanarRegion& r);

/// Discus D(a; r1, r2): the T-cartesian product of the balls
/// B(P1(a), r1) and B(P2(a), r2).
struct Discus {
    Bicomplex center{};
    double r1 = 1.0;
    double r2 = 1.0;

    Discus() = default;
    Discus(const Bicomplex& c, double r1_, double r2_);
};

struct TCartesian {
    PlanarRegion region1;
    PlanarRegion region2;

    static TCartesian from_discus(const Discus& d);
};

/// Strict membership, both idempotent components of w - center inside.
bool discus_contains(const Discus& d, const Bicomplex& w);
bool discus_contains_closed(const Discus& d, const Bicomplex& w);

bool tcartesian_contains(const TCartesian& t, const Bicomplex& w);
bool tcartesian_contains_closed(const TCartesian& t, const Bicomplex& w);

/// The factor region `which` (1 or 2).
PlanarRegion project_region(const TCartesian& t, int which);
Ball1 project_region(const Discus& d, int which);

/// n deterministic points of the region. Balls use a golden-angle spiral
/// starting at the center and staying strictly inside; rectangles a golden-ratio lattice whose
/// first point is the center when n == 1.
std::vector<Complex> region_samples(const PlanarRegion& r, int n);

/// n1 x n2 tensor grid: for each of the n1 samples of region1 (outer loop),
/// each of the n2 samples of region2, recombined with from_idempotent.
std::vector<Bicomplex> sample_grid(const TCartesian& t, int n1, int n2);
void for_each_grid_point(const TCartesian& t, int n1, int n2,
                         const std::function<void(const Bicomplex&)>& visit);

}  // namespace bcjulia
