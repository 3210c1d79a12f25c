#pragma once

#include <array>
#include <complex>
#include <string>

#include <Eigen/Dense>

namespace ccw {

// Orientation-preserving isometry of the upper half-plane, stored as a real
// 2x2 matrix with determinant normalized to +1 and identified with its
// negative.  The boundary circle is parametrized two ways: as the extended
// real line of the half-plane model (infinity encoded as
// std::numeric_limits<double>::infinity()) and as disk-model angles in
// [0, 2*pi), related by the Cayley transform w = (x - i)/(x + i).
class MobiusMap {
  public:
    MobiusMap() : m_(Eigen::Matrix2d::Identity()) {}
    explicit MobiusMap(const Eigen::Matrix2d& m);  // normalizes; det must be > 0
    static MobiusMap from_entries(double a, double b, double c, double d);

    const Eigen::Matrix2d& matrix() const { return m_; }

    MobiusMap operator*(const MobiusMap& o) const;
    MobiusMap inverse() const;

    // Action on the boundary of the half-plane (extended real line).
    double boundary_point(double x) const;
    // Action on interior points (positive imaginary part).
    std::complex<double> interior_point(std::complex<double> z) const;

    bool is_hyperbolic() const;  // |trace| > 2 for the det-1 representative

    struct FixedPoints {
        double attracting;  // half-plane boundary coordinates
        double repelling;
    };
    // Boundary fixed points; throws ConstructionFailure unless hyperbolic.
    FixedPoints boundary_fixed_points() const;

  private:
    Eigen::Matrix2d m_;
};

// Projective distance: entrywise max-norm distance between det-normalized
// representatives, minimized over the sign ambiguity.
double projective_gap(const MobiusMap& a, const MobiusMap& b);

// Operator-norm (largest singular value) distance of `m` from plus-or-minus
// identity.
double identity_residual(const MobiusMap& m);

// Half-plane boundary coordinate -> disk angle in [0, 2*pi).
double halfplane_to_angle(double x);

// Induced circle homeomorphism in disk-angle coordinates.
double mobius_boundary(const MobiusMap& m, double angle);

// Circular orientation of three angles: 0 on a coincidence (within `tol`),
// +1 if walking counterclockwise from t1 meets t2 before t3, else -1.
int angle_orientation(double t1, double t2, double t3, double tol = 1e-9);

// A marked genus-2 surface group: four boundary-hyperbolic generators with
// [a1,b1][a2,b2] projectively trivial, plus a base point on the boundary
// circle fixed by a1.
struct SurfaceGroupData {
    MobiusMap a1, b1, a2, b2;
    double relator_residual = 0.0;  // identity_residual of [a1,b1][a2,b2]
    double base_point = 0.0;        // disk angle, a1-fixed

    std::array<const MobiusMap*, 4> generators() const { return {&a1, &b1, &a2, &b2}; }
};

// Builds the standard marked genus-2 group from the regular hyperbolic
// octagon (all vertex angles 2*pi/8) with its commutator side-pairing; the
// base point is the attracting fixed point of a1.  Throws
// ConstructionFailure if the relator residual exceeds 1e-9 or a generator
// fails to be hyperbolic.
SurfaceGroupData octagon_group();

// Wraps externally supplied generators (validating the relator residual and
// hyperbolicity of a1, choosing the attracting fixed point of a1).
SurfaceGroupData group_from_generators(const std::array<MobiusMap, 4>& gens);

// Same group with the base point moved to another a1-fixed boundary angle.
SurfaceGroupData with_base_point(SurfaceGroupData g, double angle);

// Parses a four-line text block, one generator per line as four reals
// (row-major a b c d).  Throws ParseError on malformed input.
std::array<MobiusMap, 4> parse_generator_lines(const std::string& text);

}  // namespace ccw
