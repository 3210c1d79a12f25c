#include "ccw/halfplane.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <sstream>
#include <vector>

#include <Eigen/SVD>

#include "ccw/errors.hpp"

namespace ccw {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
const double kInf = std::numeric_limits<double>::infinity();

double wrap_angle(double t) {
    t = std::fmod(t, 2 * kPi);
    if (t < 0) t += 2 * kPi;
    return t;
}

double circle_distance(double s, double t) {
    const double d = wrap_angle(s - t);
    return std::min(d, 2 * kPi - d);
}

}  // namespace

MobiusMap::MobiusMap(const Eigen::Matrix2d& m) : m_(m) {
    const double det = m_.determinant();
    if (!(det > 1e-14) || !std::isfinite(det))
        throw ConstructionFailure("MobiusMap: determinant must be positive and finite");
    m_ /= std::sqrt(det);
}

MobiusMap MobiusMap::from_entries(double a, double b, double c, double d) {
    Eigen::Matrix2d m;
    m << a, b, c, d;
    return MobiusMap(m);
}

MobiusMap MobiusMap::operator*(const MobiusMap& o) const { return MobiusMap(m_ * o.m_); }

MobiusMap MobiusMap::inverse() const { return MobiusMap(m_.inverse().eval()); }

double MobiusMap::boundary_point(double x) const {
    const double a = m_(0, 0), b = m_(0, 1), c = m_(1, 0), d = m_(1, 1);
    if (std::isinf(x)) return std::abs(c) < 1e-14 ? kInf : a / c;
    const double den = c * x + d;
    if (std::abs(den) < 1e-12) return kInf;
    return (a * x + b) / den;
}

std::complex<double> MobiusMap::interior_point(std::complex<double> z) const {
    const double a = m_(0, 0), b = m_(0, 1), c = m_(1, 0), d = m_(1, 1);
    return (a * z + b) / (c * z + d);
}

bool MobiusMap::is_hyperbolic() const { return std::abs(m_.trace()) > 2 + 1e-9; }

MobiusMap::FixedPoints MobiusMap::boundary_fixed_points() const {
    if (!is_hyperbolic())
        throw ConstructionFailure("boundary_fixed_points: map is not hyperbolic");
    const double a = m_(0, 0), b = m_(0, 1), c = m_(1, 0), d = m_(1, 1);
    // Fixed points solve c x^2 + (d - a) x - b = 0; the attracting one has
    // derivative (c x + d)^{-2} < 1.
    if (std::abs(c) < 1e-14) {
        const double finite = b / (d - a);
        const bool inf_attracting = std::abs(a) > 1;
        return inf_attracting ? FixedPoints{kInf, finite} : FixedPoints{finite, kInf};
    }
    const double disc = (d - a) * (d - a) + 4 * b * c;
    if (!(disc > 0))
        throw ConstructionFailure("boundary_fixed_points: no real boundary fixed points");
    const double s = std::sqrt(disc);
    const double x1 = (-(d - a) + s) / (2 * c);
    const double x2 = (-(d - a) - s) / (2 * c);
    const bool x1_attracting = std::abs(c * x1 + d) > 1;
    return x1_attracting ? FixedPoints{x1, x2} : FixedPoints{x2, x1};
}

double projective_gap(const MobiusMap& a, const MobiusMap& b) {
    const double d1 = (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
    const double d2 = (a.matrix() + b.matrix()).cwiseAbs().maxCoeff();
    return std::min(d1, d2);
}

double identity_residual(const MobiusMap& m) {
    const Eigen::Matrix2d id = Eigen::Matrix2d::Identity();
    const double plus = Eigen::JacobiSVD<Eigen::Matrix2d>(m.matrix() - id).singularValues()(0);
    const double minus = Eigen::JacobiSVD<Eigen::Matrix2d>(m.matrix() + id).singularValues()(0);
    return std::min(plus, minus);
}

double halfplane_to_angle(double x) {
    std::complex<double> w;
    if (std::isinf(x)) {
        w = {1.0, 0.0};
    } else {
        const std::complex<double> i(0.0, 1.0);
        w = (x - i) / (x + i);
    }
    return wrap_angle(std::atan2(w.imag(), w.real()));
}

double mobius_boundary(const MobiusMap& m, double angle) {
    const std::complex<double> w = std::polar(1.0, angle);
    double x;
    if (std::abs(w - std::complex<double>(1.0, 0.0)) < 1e-13) {
        x = kInf;
    } else {
        const std::complex<double> i(0.0, 1.0);
        x = (i * (1.0 + w) / (1.0 - w)).real();
    }
    return halfplane_to_angle(m.boundary_point(x));
}

int angle_orientation(double t1, double t2, double t3, double tol) {
    const double u = wrap_angle(t2 - t1);
    const double v = wrap_angle(t3 - t1);
    const double sep =
        std::min({u, v, std::abs(u - v), 2 * kPi - u, 2 * kPi - v});
    if (sep < tol) return 0;
    return u < v ? 1 : -1;
}

namespace {

MobiusMap commutator(const MobiusMap& a, const MobiusMap& b) {
    return a * b * a.inverse() * b.inverse();
}

MobiusMap relator(const std::array<MobiusMap, 4>& g) {
    return commutator(g[0], g[1]) * commutator(g[2], g[3]);
}

// Isometry sending the interior point p to i and q to a point i*t with t > 1
// on the imaginary axis.
MobiusMap octagon_normalizer(std::complex<double> p, std::complex<double> q) {
    const double u = p.real(), v = p.imag();
    const double sv = std::sqrt(v);
    const MobiusMap T = MobiusMap::from_entries(1 / sv, -u / sv, 0.0, sv);
    const std::complex<double> w = T.interior_point(q);
    const double x = w.real();
    double base;
    if (std::abs(std::norm(w) - 1) < 1e-15 && std::abs(x) < 1e-15) {
        base = 0.0;
    } else {
        base = 0.5 * std::atan2(2 * x, std::norm(w) - 1);
    }
    for (int k = 0; k < 4; ++k) {
        const double f = base + k * kPi / 2;
        const MobiusMap K =
            MobiusMap::from_entries(std::cos(f), std::sin(f), -std::sin(f), std::cos(f));
        const std::complex<double> img = K.interior_point(w);
        if (std::abs(img.real()) < 1e-9 && img.imag() > 1) return K * T;
    }
    throw ConstructionFailure("octagon_normalizer: no rotation branch aligns the segment");
}

}  // namespace

SurfaceGroupData octagon_group() {
    // Regular hyperbolic octagon: vertex angle 2*pi/8 forces the
    // circumradius R with cosh R = cot^2(pi/8); in the disk model the
    // vertices sit at radius tanh(R/2) and angles k*pi/4.
    const double cosh_r = std::pow(1.0 / std::tan(kPi / 8), 2);
    const double r = std::sqrt((cosh_r - 1) / (cosh_r + 1));
    std::vector<std::complex<double>> verts(8);
    const std::complex<double> i(0.0, 1.0);
    for (int k = 0; k < 8; ++k) {
        const std::complex<double> w = std::polar(r, k * kPi / 4);
        verts[static_cast<std::size_t>(k)] = i * (1.0 + w) / (1.0 - w);
    }

    auto edge_map = [&](int s0, int s1, int t0, int t1) {
        const MobiusMap n_src = octagon_normalizer(verts[static_cast<std::size_t>(s0)],
                                                   verts[static_cast<std::size_t>(s1)]);
        const MobiusMap n_dst = octagon_normalizer(verts[static_cast<std::size_t>(t0)],
                                                   verts[static_cast<std::size_t>(t1)]);
        return n_dst.inverse() * n_src;
    };

    // Side k runs from vertex k to vertex k+1; the commutator word pairs
    // sides 0<->2, 1<->3, 4<->6, 5<->7.  The source-side and endpoint-order
    // choices below are the unique ones (up to relabeling) making all four
    // maps hyperbolic translations with a projectively trivial relator.
    std::array<MobiusMap, 4> raw = {
        edge_map(2, 3, 1, 0),  // pairs sides 0 and 2
        edge_map(1, 2, 4, 3),  // pairs sides 1 and 3
        edge_map(6, 7, 5, 4),  // pairs sides 4 and 6
        edge_map(5, 6, 0, 7),  // pairs sides 5 and 7
    };

    // Conjugate by x -> -x so the base point lands where the four
    // orientation checks of the pairing module come out positive.
    Eigen::Matrix2d j;
    j << -1, 0, 0, 1;
    std::array<MobiusMap, 4> gens;
    for (int k = 0; k < 4; ++k)
        gens[static_cast<std::size_t>(k)] =
            MobiusMap((j * raw[static_cast<std::size_t>(k)].matrix() * j).eval());

    return group_from_generators(gens);
}

SurfaceGroupData group_from_generators(const std::array<MobiusMap, 4>& gens) {
    SurfaceGroupData data;
    data.a1 = gens[0];
    data.b1 = gens[1];
    data.a2 = gens[2];
    data.b2 = gens[3];
    data.relator_residual = identity_residual(relator(gens));
    if (!(data.relator_residual <= 1e-9))
        throw ConstructionFailure("surface group: relator residual " +
                                  std::to_string(data.relator_residual) + " exceeds 1e-9");
    if (!data.a1.is_hyperbolic())
        throw ConstructionFailure("surface group: a1 is not hyperbolic");
    data.base_point = halfplane_to_angle(data.a1.boundary_fixed_points().attracting);
    return data;
}

SurfaceGroupData with_base_point(SurfaceGroupData g, double angle) {
    if (circle_distance(mobius_boundary(g.a1, angle), angle) > 1e-9)
        throw ConstructionFailure("with_base_point: angle is not fixed by a1");
    g.base_point = wrap_angle(angle);
    return g;
}

std::array<MobiusMap, 4> parse_generator_lines(const std::string& text) {
    std::vector<double> values;
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        try {
            std::size_t used = 0;
            const double v = std::stod(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            values.push_back(v);
        } catch (const std::exception&) {
            const auto pos = in.tellg();
            throw ParseError("generator file: bad number '" + token + "'",
                             pos < 0 ? text.size() : static_cast<std::size_t>(pos));
        }
    }
    if (values.size() != 16)
        throw ParseError("generator file: expected 16 reals (four rows of four), got " +
                             std::to_string(values.size()),
                         text.size());
    std::array<MobiusMap, 4> gens;
    for (int k = 0; k < 4; ++k)
        gens[static_cast<std::size_t>(k)] =
            MobiusMap::from_entries(values[static_cast<std::size_t>(4 * k)],
                                    values[static_cast<std::size_t>(4 * k + 1)],
                                    values[static_cast<std::size_t>(4 * k + 2)],
                                    values[static_cast<std::size_t>(4 * k + 3)]);
    return gens;
}

}  // namespace ccw
