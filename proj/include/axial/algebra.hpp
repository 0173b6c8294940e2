#ifndef AXIAL_ALGEBRA_HPP
#define AXIAL_ALGEBRA_HPP

#include <array>
#include <complex>
#include <cstddef>

// Fixed-size complex linear algebra for the spinor computations.
// Everything in this project is 2x2 or 4x4; no dynamic matrices.

namespace axial {

using Complex = std::complex<double>;

struct SpinorPair {
    Complex c1{0.0, 0.0};
    Complex c2{0.0, 0.0};

    double norm_sq() const { return std::norm(c1) + std::norm(c2); }
    double norm() const;
};

SpinorPair operator+(const SpinorPair& a, const SpinorPair& b);
SpinorPair operator-(const SpinorPair& a, const SpinorPair& b);
SpinorPair operator*(const Complex& s, const SpinorPair& p);

// Row-major 2x2 complex matrix.
struct Mat2 {
    std::array<Complex, 4> e{};

    Complex& operator()(std::size_t i, std::size_t j) { return e[2 * i + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return e[2 * i + j]; }

    static Mat2 zero() { return Mat2{}; }
    static Mat2 identity();

    SpinorPair apply(const SpinorPair& p) const;
    double frobenius_norm() const;
};

Mat2 operator*(const Mat2& a, const Mat2& b);
Mat2 operator+(const Mat2& a, const Mat2& b);
Mat2 operator-(const Mat2& a, const Mat2& b);
Mat2 operator*(const Complex& s, const Mat2& m);

// Row-major 4x4 complex matrix.
struct Mat4 {
    std::array<Complex, 16> e{};

    Complex& operator()(std::size_t i, std::size_t j) { return e[4 * i + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return e[4 * i + j]; }

    static Mat4 zero() { return Mat4{}; }
    static Mat4 identity();

    std::array<Complex, 4> apply(const std::array<Complex, 4>& x) const;
    double frobenius_norm() const;

    // 2x2 block at block-row bi, block-column bj.
    Mat2 block(std::size_t bi, std::size_t bj) const;
};

Mat4 operator*(const Mat4& a, const Mat4& b);
Mat4 operator+(const Mat4& a, const Mat4& b);
Mat4 operator-(const Mat4& a, const Mat4& b);
Mat4 operator*(const Complex& s, const Mat4& m);

enum class Axis { x, y, z };
enum class GammaIndex { zero, x, y, z };

// Standard-representation Pauli matrix; Hermitian, traceless, det = -1.
Mat2 pauli(Axis axis);

// Dirac matrices in the standard representation: gamma^0 = diag(1,1,-1,-1),
// spatial gamma with Pauli blocks off-diagonal (upper-right +sigma, lower-left -sigma).
Mat4 gamma(GammaIndex index);

// True iff ||m w|| <= tol * (||m|| ||w|| + floor).  The absolute floor keeps
// the all-zero matrix in-range.
bool nullspace_test(const Mat2& m, const SpinorPair& w, double tol);

}  // namespace axial

#endif
