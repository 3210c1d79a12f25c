#include "ccw/cochain.hpp"

#include <random>
#include <utility>

#include "json.hpp"

#include "ccw/enumerate.hpp"
#include "ccw/errors.hpp"
#include "ccw/textio.hpp"

namespace ccw {

Rational delta_at(const TypeFunction& f, const Configuration& c) {
    Rational sum = 0;
    const int len = static_cast<int>(c.length());
    for (int i = 0; i < len; ++i) {
        const Rational term = f(face(c, i));
        if (i % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

CochainVector::CochainVector(int degree, Mode mode) : degree_(degree), mode_(mode) {
    const auto& table = orbit_table(degree + 1, mode);
    coeffs_.assign(table.basis.size(), Rational(0));
}

Rational CochainVector::evaluate(const Configuration& c) const {
    if (static_cast<int>(c.length()) != length())
        throw Error("cochain evaluation: configuration has length " +
                    std::to_string(c.length()) + ", expected " + std::to_string(length()));
    return evaluate_index(configuration_index(canonical(c)));
}

Rational CochainVector::evaluate_index(std::int64_t config_index) const {
    const auto& table = orbit_table(length(), mode_);
    const std::int32_t orbit = table.orbit_of[static_cast<std::size_t>(config_index)];
    const std::int32_t pos = table.basis_position[static_cast<std::size_t>(orbit)];
    if (pos < 0) return Rational(0);
    Rational value = coeffs_[static_cast<std::size_t>(pos)];
    if (table.sign_of[static_cast<std::size_t>(config_index)] < 0) value = -value;
    return value;
}

Rational CochainVector::sup_norm() const {
    Rational best = 0;
    for (const auto& c : coeffs_) {
        Rational a = rational_abs(c);
        if (a > best) best = a;
    }
    return best;
}

bool CochainVector::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

namespace {
void require_compatible(const CochainVector& a, const CochainVector& b) {
    if (a.degree() != b.degree() || a.mode() != b.mode())
        throw Error("cochain arithmetic requires matching degree and mode");
}
}  // namespace

CochainVector& CochainVector::operator+=(const CochainVector& other) {
    require_compatible(*this, other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

CochainVector& CochainVector::operator-=(const CochainVector& other) {
    require_compatible(*this, other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
}

CochainVector& CochainVector::operator*=(const Rational& scale) {
    for (auto& c : coeffs_) c *= scale;
    return *this;
}

TypeFunction CochainVector::as_function() const {
    return [copy = *this](const Configuration& c) { return copy.evaluate(c); };
}

CochainVector project_function(int degree, Mode mode, const TypeFunction& fn,
                               bool verify_invariance) {
    const auto& table = orbit_table(degree + 1, mode);
    CochainVector out(degree, mode);
    for (std::size_t i = 0; i < table.basis.size(); ++i) {
        const auto& orbit = table.orbits[static_cast<std::size_t>(table.basis[i])];
        out.coeff(i) = fn(configuration_at(degree + 1, orbit.representative));
    }
    if (verify_invariance) {
        for_each_configuration(degree + 1, [&](std::int64_t index, const Configuration& c) {
            if (fn(c) != out.evaluate_index(index))
                throw WellDefinednessViolation(
                    "function is not invariant under the requested symmetry mode at " +
                    to_string(c));
        });
    }
    return out;
}

CochainVector apply_delta(const CochainVector& v) {
    return project_function(v.degree() + 1, v.mode(),
                            [&](const Configuration& c) { return delta_at(v.as_function(), c); });
}

Matrix delta_matrix(int q, Mode mode) {
    const auto& rows = orbit_table(q + 2, mode);
    const auto& cols = orbit_table(q + 1, mode);
    Matrix m(rows.basis.size(), std::vector<Rational>(cols.basis.size(), Rational(0)));
    for (std::size_t r = 0; r < rows.basis.size(); ++r) {
        const auto& orbit = rows.orbits[static_cast<std::size_t>(rows.basis[r])];
        const Configuration rep = configuration_at(q + 2, orbit.representative);
        for (int i = 0; i < q + 2; ++i) {
            const std::int64_t fi = configuration_index(canonical(face(rep, i)));
            const std::int32_t face_orbit = cols.orbit_of[static_cast<std::size_t>(fi)];
            const std::int32_t pos = cols.basis_position[static_cast<std::size_t>(face_orbit)];
            if (pos < 0) continue;
            int sign = cols.sign_of[static_cast<std::size_t>(fi)];
            if (i % 2 == 1) sign = -sign;
            m[r][static_cast<std::size_t>(pos)] += sign;
        }
    }
    return m;
}

std::vector<int> rref(Matrix& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const std::size_t nrows = m.size();
    const std::size_t ncols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
        std::size_t sel = nrows;
        for (std::size_t r = row; r < nrows; ++r)
            if (m[r][col] != 0) {
                sel = r;
                break;
            }
        if (sel == nrows) continue;
        std::swap(m[row], m[sel]);
        const Rational inv = m[row][col];
        for (std::size_t c = col; c < ncols; ++c) m[row][c] /= inv;
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Rational factor = m[r][col];
            for (std::size_t c = col; c < ncols; ++c) m[r][c] -= factor * m[row][c];
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    return pivots;
}

std::vector<std::vector<Rational>> kernel_basis(Matrix m) {
    if (m.empty()) return {};
    const std::size_t ncols = m[0].size();
    const std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(ncols, false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<std::vector<Rational>> out;
    for (std::size_t free_col = 0; free_col < ncols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> x(ncols, Rational(0));
        x[free_col] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            x[static_cast<std::size_t>(pivots[r])] = -m[r][free_col];
        out.push_back(std::move(x));
    }
    return out;
}

CochainVector random_cochain(int degree, Mode mode, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    CochainVector out(degree, mode);
    for (std::size_t i = 0; i < out.basis_size(); ++i) {
        const auto num = static_cast<std::int64_t>(rng() % 19) - 9;
        const auto den = static_cast<std::int64_t>(rng() % 9) + 1;
        out.coeff(i) = Rational(num, den);
    }
    return out;
}

namespace {
const char* mode_name(Mode mode) { return mode == Mode::HTwisted ? "H" : "G"; }
}  // namespace

std::string cochain_to_json(const CochainVector& v) {
    nlohmann::ordered_json j;
    j["degree"] = v.degree();
    j["mode"] = mode_name(v.mode());
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::object();
    const auto& table = orbit_table(v.length(), v.mode());
    for (std::size_t i = 0; i < table.basis.size(); ++i) {
        if (v.coeff(i) == 0) continue;
        const auto& orbit = table.orbits[static_cast<std::size_t>(table.basis[i])];
        coeffs[to_string(configuration_at(v.length(), orbit.representative))] =
            rational_to_string(v.coeff(i));
    }
    j["coeffs"] = coeffs;
    return j.dump(2);
}

CochainVector cochain_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid cochain JSON: ") + e.what(), 0);
    }
    if (!j.contains("degree") || !j["degree"].is_number_integer())
        throw ParseError("cochain JSON: missing integer field \"degree\"", 0);
    if (!j.contains("mode") || !j["mode"].is_string())
        throw ParseError("cochain JSON: missing string field \"mode\"", 0);
    const int degree = j["degree"].get<int>();
    const std::string mode_str = j["mode"].get<std::string>();
    Mode mode;
    if (mode_str == "H")
        mode = Mode::HTwisted;
    else if (mode_str == "G")
        mode = Mode::GUntwisted;
    else
        throw ParseError("cochain JSON: mode must be \"H\" or \"G\", got \"" + mode_str + "\"", 0);
    if (degree + 1 < 1 || degree + 1 > kMaxTupleLength)
        throw SizeLimit("cochain JSON: unsupported degree " + std::to_string(degree));

    CochainVector out(degree, mode);
    const auto& table = orbit_table(degree + 1, mode);
    std::vector<bool> assigned(out.basis_size(), false);
    if (j.contains("coeffs")) {
        if (!j["coeffs"].is_object())
            throw ParseError("cochain JSON: \"coeffs\" must be an object", 0);
        for (const auto& [key, raw] : j["coeffs"].items()) {
            if (!raw.is_string())
                throw ParseError("cochain JSON: coefficient values must be strings", 0);
            const Configuration c = parse_config(key);
            if (static_cast<int>(c.length()) != degree + 1)
                throw ParseError("cochain JSON: configuration \"" + key + "\" has length " +
                                     std::to_string(c.length()) + ", expected " +
                                     std::to_string(degree + 1),
                                 0);
            const Rational value = rational_from_string(raw.get<std::string>());
            const std::int64_t index = configuration_index(c);
            const std::int32_t orbit = table.orbit_of[static_cast<std::size_t>(index)];
            const std::int32_t pos = table.basis_position[static_cast<std::size_t>(orbit)];
            if (pos < 0) {
                if (value != 0)
                    throw WellDefinednessViolation(
                        "cochain JSON: nonzero value on a symmetry-forced-zero type " + key);
                continue;
            }
            Rational coeff = value;
            if (table.sign_of[static_cast<std::size_t>(index)] < 0) coeff = -coeff;
            if (assigned[static_cast<std::size_t>(pos)]) {
                if (out.coeff(static_cast<std::size_t>(pos)) != coeff)
                    throw WellDefinednessViolation(
                        "cochain JSON: conflicting values within one symmetry orbit at " + key);
            } else {
                out.coeff(static_cast<std::size_t>(pos)) = coeff;
                assigned[static_cast<std::size_t>(pos)] = true;
            }
        }
    }
    return out;
}

}  // namespace ccw
