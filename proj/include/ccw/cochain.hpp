#pragma once

// Invariant cochains on configuration types, stored as coefficient vectors
// over symmetry-orbit bases, with the simplicial coboundary acting on them
// both pointwise and as an exact rational matrix.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ccw/config.hpp"
#include "ccw/orbits.hpp"
#include "ccw/rational.hpp"

namespace ccw {

// Any function of a configuration type.  Degree-q cochains take length-(q+1)
// configurations.
using TypeFunction = std::function<Rational(const Configuration&)>;

// Pointwise simplicial coboundary: (delta f)(c) = sum_i (-1)^i f(face(c, i)).
// `f` must accept configurations one point shorter than `c`.
Rational delta_at(const TypeFunction& f, const Configuration& c);

// A symmetry-invariant cochain of fixed degree, represented by one rational
// coefficient per non-forced orbit of the acting group.
class CochainVector {
  public:
    CochainVector(int degree, Mode mode);

    int degree() const { return degree_; }
    Mode mode() const { return mode_; }
    int length() const { return degree_ + 1; }

    // Coefficient at orbit-basis position i (value on that orbit's
    // representative configuration).
    const Rational& coeff(std::size_t i) const { return coeffs_[i]; }
    Rational& coeff(std::size_t i) { return coeffs_[i]; }
    std::size_t basis_size() const { return coeffs_.size(); }

    // Value at an arbitrary configuration of matching length: zero on
    // forced-zero orbits, otherwise the representative's coefficient times
    // the member's symmetry sign.
    Rational evaluate(const Configuration& c) const;
    Rational evaluate_index(std::int64_t config_index) const;

    // Largest absolute value attained over all configurations.
    Rational sup_norm() const;

    bool is_zero() const;

    CochainVector& operator+=(const CochainVector& other);
    CochainVector& operator-=(const CochainVector& other);
    CochainVector& operator*=(const Rational& scale);
    friend CochainVector operator+(CochainVector a, const CochainVector& b) { return a += b; }
    friend CochainVector operator-(CochainVector a, const CochainVector& b) { return a -= b; }
    friend CochainVector operator*(const Rational& s, CochainVector v) { return v *= s; }

    TypeFunction as_function() const;

  private:
    int degree_;
    Mode mode_;
    std::vector<Rational> coeffs_;
};

// Samples `fn` on each orbit representative.  With `verify_invariance` set,
// additionally evaluates `fn` on every configuration of the degree and
// throws WellDefinednessViolation if any value disagrees with the stored
// orbit data (including nonzero values on forced-zero orbits).
CochainVector project_function(int degree, Mode mode, const TypeFunction& fn,
                               bool verify_invariance = false);

// Coboundary as a map of invariant vectors.
CochainVector apply_delta(const CochainVector& v);

// Dense exact-rational matrices (row major).
using Matrix = std::vector<std::vector<Rational>>;

// Matrix of the coboundary from degree-q to degree-(q+1) invariant cochains,
// rows indexed by the degree-(q+1) orbit basis, columns by the degree-q one.
Matrix delta_matrix(int q, Mode mode);

// Reduced row echelon form in place; returns the pivot column indices.
std::vector<int> rref(Matrix& m);

// Basis of the right kernel of `m` acting on column vectors.
std::vector<std::vector<Rational>> kernel_basis(Matrix m);

// Deterministic pseudo-random cochain with small rational coefficients.
CochainVector random_cochain(int degree, Mode mode, std::uint64_t seed);

// JSON round-trip.  Serialized form records the degree, the mode ("H" or
// "G"), and the nonzero values keyed by representative configuration
// strings; parsing accepts values on arbitrary member configurations and
// checks them for consistency.
std::string cochain_to_json(const CochainVector& v);
CochainVector cochain_from_json(const std::string& text);

}  // namespace ccw
