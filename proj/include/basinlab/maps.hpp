#pragma once

#include <array>
#include <optional>
#include <vector>

#include "basinlab/errors.hpp"
#include "basinlab/frac.hpp"

namespace basinlab {

enum class MapKind { Annulus, ThickenedTorus };

// Optional trig-polynomial perturbation.  The fiber term carries a structural
// z(1-z) factor, so both boundary components stay pointwise invariant no
// matter what the coefficients are.  Harmonic k of coefficient index k-1.
struct PerturbationSpec {
    double epsilon = 0.0;
    std::vector<double> base_cos, base_sin;    // added to the leading base coordinate
    std::vector<double> fiber_cos, fiber_sin;  // multiplied by epsilon * z(1-z)

    bool base_active() const;
    bool fiber_active() const;
    bool active() const { return base_active() || fiber_active(); }
};

// One concrete skew-product system: expanding base (tripling map on the
// circle, or the hyperbolic automorphism [[3,1],[2,1]] on the 2-torus)
// driving a fiber coordinate z in [0,1] through
//     z -> z + cos(2 pi x) (z/a) (1-z)  (+ perturbation).
// a > 1 is the contraction-strength divisor; both boundary components
// (z = 0 and z = 1) are invariant by construction.
struct SkewSystem {
    MapKind kind = MapKind::Annulus;
    double a = 32.0;
    std::optional<PerturbationSpec> perturbation;
    bool lebesgue_base = true;  // base provably preserves Lebesgue measure

    bool base_perturbed() const;
    bool fiber_perturbed() const;
    bool exact_base() const { return !base_perturbed(); }
};

SkewSystem make_annulus(double a);
SkewSystem make_torus(double a);
SkewSystem make_perturbed(MapKind kind, double a, PerturbationSpec spec);

struct PointA {
    Frac x;
    double z = 0.0;
};

struct PointT {
    Frac x, y;
    double z = 0.0;
};

struct Jacobian2 {
    // row 0: base, row 1: fiber; m[r][c] = D_{col c} f_{row r}
    double m[2][2];
    double dxfx() const { return m[0][0]; }
    double dzfx() const { return m[0][1]; }
    double dxfz() const { return m[1][0]; }
    double dzfz() const { return m[1][1]; }
};

struct Jacobian3 {
    double m[3][3];
    double dzfz() const { return m[2][2]; }
};

PointA apply(const SkewSystem& sys, const PointA& p);
PointT apply(const SkewSystem& sys, const PointT& p);

Jacobian2 jacobian(const SkewSystem& sys, const PointA& p);
Jacobian3 jacobian(const SkewSystem& sys, const PointT& p);

// d/dz of the fiber map at (x, z) for the boundary circle observables;
// works for any system, x given as exact bits.
double fiber_dz(const SkewSystem& sys, double x, double z);
// d/dx of the fiber map at (x, z).
double fiber_dx(const SkewSystem& sys, double x, double z);

// Preimage under the branch of f^-1 whose base image is [b/3, (b+1)/3).
// Exact base arithmetic; the fiber preimage is found by safeguarded Newton
// on the monotone fiber map (tolerance 1e-14).  Annulus, unperturbed only.
PointA inverse_branch(const SkewSystem& sys, int branch, const PointA& p);

std::vector<PointA> fixed_points_annulus(const SkewSystem& sys);
std::vector<PointT> fixed_points_torus(const SkewSystem& sys);

PointA iterate(const SkewSystem& sys, PointA p, std::uint64_t n);
PointT iterate(const SkewSystem& sys, PointT p, std::uint64_t n);
std::vector<PointA> orbit(const SkewSystem& sys, PointA p, std::uint64_t n);

// The involution S(x, z) = (x + 1/2, 1 - z) conjugating the two boundary
// components (S(x, y, z) = (x + 1/2, y, 1 - z) on the torus).
PointA conjugacy(const PointA& p);
PointT conjugacy(const PointT& p);

// sup |D_x f_z| over the domain: the sharp value uses z(1-z) <= 1/4, the
// coarse one drops that factor.  Both are reported by the segment tooling.
double max_abs_dxfz_sharp(const SkewSystem& sys);
double max_abs_dxfz_coarse(const SkewSystem& sys);

}  // namespace basinlab
