// algebra.cpp — dense 3x3 complex kernel

#include "esst/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

namespace esst {

// ------------------------------ ComplexVector3 -------------------------------

double ComplexVector3::norm2() const {
    return std::norm(a_[0]) + std::norm(a_[1]) + std::norm(a_[2]);
}

double ComplexVector3::max_abs() const {
    return std::max({std::abs(a_[0]), std::abs(a_[1]), std::abs(a_[2])});
}

ComplexVector3 ComplexVector3::conj() const {
    return {std::conj(a_[0]), std::conj(a_[1]), std::conj(a_[2])};
}

ComplexVector3& ComplexVector3::operator+=(const ComplexVector3& o) {
    for (std::size_t i = 0; i < 3; ++i) a_[i] += o.a_[i];
    return *this;
}

ComplexVector3& ComplexVector3::operator-=(const ComplexVector3& o) {
    for (std::size_t i = 0; i < 3; ++i) a_[i] -= o.a_[i];
    return *this;
}

ComplexVector3& ComplexVector3::operator*=(Complex s) {
    for (auto& x : a_) x *= s;
    return *this;
}

Complex inner(const ComplexVector3& a, const ComplexVector3& b) {
    return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1] + std::conj(a[2]) * b[2];
}

namespace {

// plain (bilinear) cross product: sum_j a_j (a x b)_j = 0
ComplexVector3 cross(const ComplexVector3& a, const ComplexVector3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

ComplexVector3 normalized(ComplexVector3 v) {
    return v *= 1.0 / std::sqrt(v.norm2());
}

} // namespace

ComplexVector3 conj_cross(const ComplexVector3& a, const ComplexVector3& b) {
    return cross(a, b).conj();
}

// ------------------------------ ComplexMatrix3 -------------------------------

ComplexMatrix3 ComplexMatrix3::diagonal(const std::array<double, 3>& d) {
    ComplexMatrix3 m;
    for (std::size_t i = 0; i < 3; ++i) m(i, i) = d[i];
    return m;
}

ComplexMatrix3 ComplexMatrix3::from_columns(const ComplexVector3& c0, const ComplexVector3& c1,
                                            const ComplexVector3& c2) {
    ComplexMatrix3 m;
    for (std::size_t r = 0; r < 3; ++r) {
        m(r, 0) = c0[r];
        m(r, 1) = c1[r];
        m(r, 2) = c2[r];
    }
    return m;
}

ComplexVector3 ComplexMatrix3::column(std::size_t c) const {
    return {(*this)(0, c), (*this)(1, c), (*this)(2, c)};
}

ComplexVector3 ComplexMatrix3::row(std::size_t r) const {
    return {(*this)(r, 0), (*this)(r, 1), (*this)(r, 2)};
}

ComplexMatrix3 ComplexMatrix3::adjoint() const {
    ComplexMatrix3 out;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) out(r, c) = std::conj((*this)(c, r));
    return out;
}

Complex ComplexMatrix3::trace() const {
    return m_[0] + m_[4] + m_[8];
}

double ComplexMatrix3::max_abs() const {
    double best = 0.0;
    for (const auto& x : m_) best = std::max(best, std::abs(x));
    return best;
}

double ComplexMatrix3::hermiticity_error() const {
    double worst = 0.0;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = r; c < 3; ++c)
            worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return worst;
}

ComplexMatrix3& ComplexMatrix3::operator+=(const ComplexMatrix3& o) {
    for (std::size_t i = 0; i < 9; ++i) m_[i] += o.m_[i];
    return *this;
}

ComplexMatrix3& ComplexMatrix3::operator-=(const ComplexMatrix3& o) {
    for (std::size_t i = 0; i < 9; ++i) m_[i] -= o.m_[i];
    return *this;
}

ComplexMatrix3& ComplexMatrix3::operator*=(Complex s) {
    for (auto& x : m_) x *= s;
    return *this;
}

ComplexMatrix3 operator*(const ComplexMatrix3& a, const ComplexMatrix3& b) {
    ComplexMatrix3 out;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
            out(r, c) = a(r, 0) * b(0, c) + a(r, 1) * b(1, c) + a(r, 2) * b(2, c);
    return out;
}

ComplexVector3 operator*(const ComplexMatrix3& m, const ComplexVector3& v) {
    return {m(0, 0) * v[0] + m(0, 1) * v[1] + m(0, 2) * v[2],
            m(1, 0) * v[0] + m(1, 1) * v[1] + m(1, 2) * v[2],
            m(2, 0) * v[0] + m(2, 1) * v[1] + m(2, 2) * v[2]};
}

ComplexMatrix3 commutator(const ComplexMatrix3& a, const ComplexMatrix3& b) {
    return a * b - b * a;
}

Su2Generators su2_generators() {
    const Complex o{0.0, 0.0};
    const Complex l{1.0, 0.0};
    return {
        ComplexMatrix3({o, l, o, l, o, o, o, o, o}),
        ComplexMatrix3({o, o, o, o, o, l, o, l, o}),
        ComplexMatrix3({o, o, -kI, o, o, o, kI, o, o}),
    };
}

// ------------------------------ eigensolver ----------------------------------

NonHermitianError::NonHermitianError(const std::string& where, double asymmetry)
    : std::invalid_argument([&] {
          std::ostringstream os;
          os << where << ": matrix is not Hermitian (max |M_ij - conj(M_ji)| = " << asymmetry
             << ")";
          return os.str();
      }()),
      asymmetry_(asymmetry) {}

ComplexMatrix3 HermitianEigen::reconstruct() const {
    return vectors * ComplexMatrix3::diagonal(values) * vectors.adjoint();
}

namespace {

void require_hermitian(const ComplexMatrix3& m, const char* where) {
    const double err = m.hermiticity_error();
    if (!(err <= kHermitianTolerance * m.max_abs())) throw NonHermitianError(where, err);
}

ComplexMatrix3 hermitian_part(const ComplexMatrix3& m) {
    return 0.5 * (m + m.adjoint());
}

// Null vector of a (numerically) rank-2 matrix: the cross product of the two
// rows spanning the largest area.
ComplexVector3 null_vector(const ComplexMatrix3& a) {
    const ComplexVector3 r0 = a.row(0), r1 = a.row(1), r2 = a.row(2);
    std::array<ComplexVector3, 3> cand{cross(r0, r1), cross(r0, r2), cross(r1, r2)};
    std::size_t best = 0;
    for (std::size_t k = 1; k < 3; ++k)
        if (cand[k].norm2() > cand[best].norm2()) best = k;
    return normalized(cand[best]);
}

// Unit vector orthogonal to v.
ComplexVector3 orthogonal_to(const ComplexVector3& v) {
    std::size_t k = 0;
    for (std::size_t i = 1; i < 3; ++i)
        if (std::abs(v[i]) < std::abs(v[k])) k = i;
    ComplexVector3 e = ComplexVector3::basis(k);
    e -= inner(v, e) * v;
    return normalized(e);
}

HermitianEigen sorted(std::array<double, 3> vals, std::array<ComplexVector3, 3> vecs) {
    std::array<std::size_t, 3> idx{0, 1, 2};
    std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return vals[a] < vals[b]; });
    HermitianEigen out;
    for (std::size_t k = 0; k < 3; ++k) out.values[k] = vals[idx[k]];
    out.vectors = ComplexMatrix3::from_columns(vecs[idx[0]], vecs[idx[1]], vecs[idx[2]]);
    return out;
}

} // namespace

HermitianEigen hermitian_eigen_jacobi(const ComplexMatrix3& input) {
    require_hermitian(input, "hermitian_eigen_jacobi");
    ComplexMatrix3 a = hermitian_part(input);
    ComplexMatrix3 v = ComplexMatrix3::identity();
    const double scale = a.max_abs();

    for (int sweep = 0; sweep < 64; ++sweep) {
        const double off = std::max({std::abs(a(0, 1)), std::abs(a(0, 2)), std::abs(a(1, 2))});
        if (off <= 1e-17 * scale) break;
        for (std::size_t p = 0; p < 2; ++p) {
            for (std::size_t q = p + 1; q < 3; ++q) {
                const Complex apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag <= 1e-300) continue;
                // Phase-rotate apq onto the real axis, then a real Jacobi rotation.
                const Complex phase = std::conj(apq) / mag;
                const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double cs = 1.0 / std::sqrt(t * t + 1.0);
                const double sn = t * cs;
                ComplexMatrix3 g = ComplexMatrix3::identity();
                g(p, p) = cs;
                g(p, q) = sn;
                g(q, p) = -sn * phase;
                g(q, q) = cs * phase;
                a = g.adjoint() * a * g;
                a(p, q) = a(q, p) = 0.0;
                v = v * g;
            }
        }
    }
    std::array<double, 3> vals{a(0, 0).real(), a(1, 1).real(), a(2, 2).real()};
    HermitianEigen out = sorted(vals, {v.column(0), v.column(1), v.column(2)});
    out.used_jacobi = true;
    return out;
}

HermitianEigen hermitian_eigen(const ComplexMatrix3& input) {
    require_hermitian(input, "hermitian_eigen");
    const ComplexMatrix3 m = hermitian_part(input);
    const double scale = m.max_abs();
    if (scale == 0.0) return {{0.0, 0.0, 0.0}, ComplexMatrix3::identity(), false};

    // Shifted, scaled cubic: B = (M - qI)/p has eigenvalues 2cos(phi + 2pi k/3).
    const double q = m.trace().real() / 3.0;
    ComplexMatrix3 b = m - q * ComplexMatrix3::identity();
    double frob = 0.0;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) frob += std::norm(b(r, c));
    const double p = std::sqrt(frob / 6.0);
    if (p <= 1e-8 * scale) return hermitian_eigen_jacobi(m);

    b *= 1.0 / p;
    const Complex det = b(0, 0) * (b(1, 1) * b(2, 2) - b(1, 2) * b(2, 1)) -
                        b(0, 1) * (b(1, 0) * b(2, 2) - b(1, 2) * b(2, 0)) +
                        b(0, 2) * (b(1, 0) * b(2, 1) - b(1, 1) * b(2, 0));
    const double r = std::clamp(det.real() / 2.0, -1.0, 1.0);
    const double phi = std::acos(r) / 3.0;
    const double hi = q + 2.0 * p * std::cos(phi);
    const double lo = q + 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
    const double mid = 3.0 * q - hi - lo;

    if (std::min(hi - mid, mid - lo) < 1e-8 * scale) return hermitian_eigen_jacobi(m);

    // The better-isolated extreme eigenvalue gets its vector from the cubic;
    // the complementary plane is diagonalized as an exact 2x2 problem.
    const double isolated = (hi - mid >= mid - lo) ? hi : lo;
    const ComplexVector3 v0 = null_vector(m - isolated * ComplexMatrix3::identity());
    const ComplexVector3 u1 = orthogonal_to(v0);
    const ComplexVector3 u2 = normalized(conj_cross(v0, u1));

    const double c11 = inner(u1, m * u1).real();
    const double c22 = inner(u2, m * u2).real();
    const Complex c12 = inner(u1, m * u2);
    const double mean = 0.5 * (c11 + c22);
    const double delta = 0.5 * (c11 - c22);
    const double rad = std::hypot(delta, std::abs(c12));
    Complex x, y;  // eigenvector of [[c11,c12],[conj(c12),c22]] for mean + rad
    if (delta >= 0.0) {
        x = delta + rad;
        y = std::conj(c12);
    } else {
        x = c12;
        y = rad - delta;
    }
    const double len = std::sqrt(std::norm(x) + std::norm(y));
    x /= len;
    y /= len;
    const ComplexVector3 w_plus = x * u1 + y * u2;
    const ComplexVector3 w_minus = -std::conj(y) * u1 + std::conj(x) * u2;

    return sorted({isolated, mean + rad, mean - rad}, {v0, w_plus, w_minus});
}

ComplexMatrix3 hermitian_expm(const ComplexMatrix3& m, double s) {
    require_hermitian(m, "hermitian_expm");
    const HermitianEigen e = hermitian_eigen(m);
    ComplexMatrix3 scaled = e.vectors;
    for (std::size_t c = 0; c < 3; ++c) {
        const Complex f = std::polar(1.0, -s * e.values[c]);
        for (std::size_t r = 0; r < 3; ++r) scaled(r, c) *= f;
    }
    return scaled * e.vectors.adjoint();
}

} // namespace esst
