#pragma once

// Escape-time dynamics of bicomplex polynomials.
//
// A non-degenerate P of degree >= 2 splits into two complex polynomials
// P1, P2 acting on the idempotent components. Bounded orbits factor
// (K2 = K1(P1) xe K1(P2)) and the Julia set is
// J2 = [J1(P1) xe K1(P2)] u [K1(P1) xe J1(P2)].

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "bcjulia/poly.hpp"

namespace bcjulia {

struct IterParams {
    int max_iter = 500;
    /// Fixed bailout radius; 0 selects escape_radius() of each projected
    /// polynomial, multiplied by escape_safety.
    double escape_radius = 0.0;
    double escape_safety = 1.0;
    /// Escaping points with distance estimate <= de_threshold count as boundary.
    double de_threshold = 1e-3;
    /// Null-cone tolerance for the degeneracy check.
    double tol = kDefaultNullConeTol;
};

void validate(const IterParams& params);

struct OrbitRecord {
    bool escaped = false;
    int iters = 0;
    Complex final_z{};
    Complex final_dz{};
    /// |z| ln|z| / |dz| when escaped, +inf otherwise.
    double de = std::numeric_limits<double>::infinity();
};

enum class ComponentClass : std::uint8_t { interior = 0, boundary = 1, exterior = 2 };

/// Ordinals are part of the voxel file format.
enum class BicomplexClass : std::uint8_t {
    j2 = 0,
    k2_interior = 1,
    f2_bounded = 2,
    f2_unbounded_mixed = 3,
    f2_unbounded = 4,
};

inline constexpr int kBicomplexClassCount = 5;

std::string_view to_string(ComponentClass c);
std::string_view to_string(BicomplexClass c);
std::optional<BicomplexClass> parse_bicomplex_class(std::string_view name);

/// Member of K2, the filled-in Julia set.
constexpr bool in_filled_julia(BicomplexClass c) {
    return c == BicomplexClass::j2 || c == BicomplexClass::k2_interior;
}

/// The 3x3 table from component labels to the bicomplex label.
BicomplexClass combine(ComponentClass c1, ComponentClass c2);

OrbitRecord iterate_complex(const ComplexPoly& p, const Complex& z0, const IterParams& params);
ComponentClass classify_orbit(const OrbitRecord& orbit, double de_threshold);
ComponentClass classify_component(const ComplexPoly& p, const Complex& z0, const IterParams& params);

/// Projections and bailout radii of a non-degenerate polynomial, prepared
/// once for repeated classification.
class SplitSystem {
public:
    /// Throws DegenerateError when deg P < 2 or the leading coefficient is a
    /// zero divisor.
    SplitSystem(const BicomplexPoly& p, const IterParams& params);

    const BicomplexPoly& poly() const { return poly_; }
    const ComplexPoly& component(int which) const { return which == 1 ? p1_ : p2_; }
    double radius(int which) const { return which == 1 ? r1_ : r2_; }

    OrbitRecord iterate(int which, const Complex& z0, const IterParams& params) const;

private:
    BicomplexPoly poly_;
    ComplexPoly p1_;
    ComplexPoly p2_;
    double r1_ = 0.0;
    double r2_ = 0.0;
};

struct BicomplexVerdict {
    BicomplexClass cls = BicomplexClass::f2_unbounded;
    ComponentClass c1 = ComponentClass::exterior;
    ComponentClass c2 = ComponentClass::exterior;
    OrbitRecord orbit1;
    OrbitRecord orbit2;
};

BicomplexVerdict classify_point(const SplitSystem& sys, const Bicomplex& w, const IterParams& params);
BicomplexClass classify_bicomplex(const BicomplexPoly& p, const Bicomplex& w, const IterParams& params);

struct BicomplexOrbit {
    bool escaped = false;
    int iters = 0;
};

/// Iterates w <- P(w) in full bicomplex arithmetic and stops once
/// max(|w1|, |w2|) exceeds max(R1, R2). Independent of the split path.
BicomplexOrbit orbit_bicomplex(const SplitSystem& sys, const Bicomplex& w, const IterParams& params);
BicomplexOrbit orbit_bicomplex(const BicomplexPoly& p, const Bicomplex& w, const IterParams& params);

struct InvarianceReport {
    std::size_t sampled = 0;
    std::size_t julia = 0;
    std::size_t violations = 0;
    std::vector<Bicomplex> violators;

    double violation_fraction() const { return julia == 0 ? 0.0 : double(violations) / double(julia); }
};

/// For every sample labelled J2, checks that P(w) is labelled J2 under a
/// doubled de_threshold.
InvarianceReport julia_invariance_check(const BicomplexPoly& p, std::span<const Bicomplex> sample,
                                        const IterParams& params, int threads = 1);

}  // namespace bcjulia
