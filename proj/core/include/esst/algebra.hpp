// algebra.hpp — complex 3-vectors, 3x3 matrices, SU(2) generators, Hermitian eigensolver and exponential

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace esst {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

class ComplexVector3 {
public:
    constexpr ComplexVector3() = default;
    constexpr ComplexVector3(Complex a0, Complex a1, Complex a2) : a_{a0, a1, a2} {}

    static constexpr ComplexVector3 basis(std::size_t k) {
        ComplexVector3 v;
        v.a_[k] = 1.0;
        return v;
    }

    constexpr Complex& operator[](std::size_t i) { return a_[i]; }
    constexpr const Complex& operator[](std::size_t i) const { return a_[i]; }

    double norm2() const;
    double max_abs() const;
    ComplexVector3 conj() const;

    ComplexVector3& operator+=(const ComplexVector3& o);
    ComplexVector3& operator-=(const ComplexVector3& o);
    ComplexVector3& operator*=(Complex s);

    friend ComplexVector3 operator+(ComplexVector3 a, const ComplexVector3& b) { return a += b; }
    friend ComplexVector3 operator-(ComplexVector3 a, const ComplexVector3& b) { return a -= b; }
    friend ComplexVector3 operator*(Complex s, ComplexVector3 v) { return v *= s; }
    friend ComplexVector3 operator*(ComplexVector3 v, Complex s) { return v *= s; }
    friend bool operator==(const ComplexVector3&, const ComplexVector3&) = default;

private:
    std::array<Complex, 3> a_{};
};

// <a|b>, antilinear in the first argument
Complex inner(const ComplexVector3& a, const ComplexVector3& b);

// conj(a x b): orthogonal to both a and b under the Hermitian inner product
ComplexVector3 conj_cross(const ComplexVector3& a, const ComplexVector3& b);

class ComplexMatrix3 {
public:
    constexpr ComplexMatrix3() = default;
    constexpr explicit ComplexMatrix3(const std::array<Complex, 9>& row_major) : m_(row_major) {}

    static constexpr ComplexMatrix3 identity() {
        ComplexMatrix3 m;
        m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
        return m;
    }
    static ComplexMatrix3 diagonal(const std::array<double, 3>& d);
    static ComplexMatrix3 from_columns(const ComplexVector3& c0, const ComplexVector3& c1,
                                       const ComplexVector3& c2);

    constexpr Complex& operator()(std::size_t r, std::size_t c) { return m_[3 * r + c]; }
    constexpr const Complex& operator()(std::size_t r, std::size_t c) const { return m_[3 * r + c]; }

    ComplexVector3 column(std::size_t c) const;
    ComplexVector3 row(std::size_t r) const;

    ComplexMatrix3 adjoint() const;
    Complex trace() const;
    // max_ij |M_ij|
    double max_abs() const;
    // max_ij |M_ij - conj(M_ji)|
    double hermiticity_error() const;

    ComplexMatrix3& operator+=(const ComplexMatrix3& o);
    ComplexMatrix3& operator-=(const ComplexMatrix3& o);
    ComplexMatrix3& operator*=(Complex s);

    friend ComplexMatrix3 operator+(ComplexMatrix3 a, const ComplexMatrix3& b) { return a += b; }
    friend ComplexMatrix3 operator-(ComplexMatrix3 a, const ComplexMatrix3& b) { return a -= b; }
    friend ComplexMatrix3 operator*(Complex s, ComplexMatrix3 m) { return m *= s; }
    friend ComplexMatrix3 operator*(ComplexMatrix3 m, Complex s) { return m *= s; }
    friend ComplexMatrix3 operator*(const ComplexMatrix3& a, const ComplexMatrix3& b);
    friend ComplexVector3 operator*(const ComplexMatrix3& m, const ComplexVector3& v);
    friend bool operator==(const ComplexMatrix3&, const ComplexMatrix3&) = default;

private:
    std::array<Complex, 9> m_{};
};

// [A, B] = AB - BA
ComplexMatrix3 commutator(const ComplexMatrix3& a, const ComplexMatrix3& b);

struct Su2Generators {
    ComplexMatrix3 kx;
    ComplexMatrix3 ky;
    ComplexMatrix3 kz;
};

// Angular-momentum-like generators of the cyclic three-level system.
// [Kx,Ky] = iKz, [Ky,Kz] = iKx, [Kz,Kx] = iKy hold with exact entries.
Su2Generators su2_generators();

class NonHermitianError : public std::invalid_argument {
public:
    NonHermitianError(const std::string& where, double asymmetry);
    double asymmetry() const noexcept { return asymmetry_; }

private:
    double asymmetry_;
};

// Relative hermiticity tolerance accepted by the eigensolver and exponential.
inline constexpr double kHermitianTolerance = 1e-10;

struct HermitianEigen {
    std::array<double, 3> values{};  // ascending
    ComplexMatrix3 vectors;          // orthonormal eigenvectors as columns
    bool used_jacobi = false;

    ComplexMatrix3 reconstruct() const;
};

// Eigendecomposition of a 3x3 Hermitian matrix. Uses the trigonometric
// solution of the characteristic cubic; near-degenerate spectra
// (gap < 1e-8 * max|M|) are handled by cyclic complex Jacobi sweeps.
HermitianEigen hermitian_eigen(const ComplexMatrix3& m);

// Jacobi route only; exposed for cross-checking the closed form.
HermitianEigen hermitian_eigen_jacobi(const ComplexMatrix3& m);

// exp(-i s M) for Hermitian M.
ComplexMatrix3 hermitian_expm(const ComplexMatrix3& m, double s);

} // namespace esst
