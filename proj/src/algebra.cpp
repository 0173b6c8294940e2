#include "axial/algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace axial {

double SpinorPair::norm() const { return std::sqrt(norm_sq()); }

SpinorPair operator+(const SpinorPair& a, const SpinorPair& b) {
    return {a.c1 + b.c1, a.c2 + b.c2};
}

SpinorPair operator-(const SpinorPair& a, const SpinorPair& b) {
    return {a.c1 - b.c1, a.c2 - b.c2};
}

SpinorPair operator*(const Complex& s, const SpinorPair& p) {
    return {s * p.c1, s * p.c2};
}

Mat2 Mat2::identity() {
    Mat2 m;
    m(0, 0) = 1.0;
    m(1, 1) = 1.0;
    return m;
}

SpinorPair Mat2::apply(const SpinorPair& p) const {
    return {(*this)(0, 0) * p.c1 + (*this)(0, 1) * p.c2,
            (*this)(1, 0) * p.c1 + (*this)(1, 1) * p.c2};
}

double Mat2::frobenius_norm() const {
    double s = 0.0;
    for (const auto& c : e) s += std::norm(c);
    return std::sqrt(s);
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k) r(i, j) += a(i, k) * b(k, j);
    return r;
}

Mat2 operator+(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (std::size_t i = 0; i < 4; ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
}

Mat2 operator-(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (std::size_t i = 0; i < 4; ++i) r.e[i] = a.e[i] - b.e[i];
    return r;
}

Mat2 operator*(const Complex& s, const Mat2& m) {
    Mat2 r;
    for (std::size_t i = 0; i < 4; ++i) r.e[i] = s * m.e[i];
    return r;
}

Mat4 Mat4::identity() {
    Mat4 m;
    for (std::size_t i = 0; i < 4; ++i) m(i, i) = 1.0;
    return m;
}

std::array<Complex, 4> Mat4::apply(const std::array<Complex, 4>& x) const {
    std::array<Complex, 4> r{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) r[i] += (*this)(i, j) * x[j];
    return r;
}

double Mat4::frobenius_norm() const {
    double s = 0.0;
    for (const auto& c : e) s += std::norm(c);
    return std::sqrt(s);
}

Mat2 Mat4::block(std::size_t bi, std::size_t bj) const {
    Mat2 m;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) m(i, j) = (*this)(2 * bi + i, 2 * bj + j);
    return m;
}

Mat4 operator*(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t k = 0; k < 4; ++k) r(i, j) += a(i, k) * b(k, j);
    return r;
}

Mat4 operator+(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (std::size_t i = 0; i < 16; ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
}

Mat4 operator-(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (std::size_t i = 0; i < 16; ++i) r.e[i] = a.e[i] - b.e[i];
    return r;
}

Mat4 operator*(const Complex& s, const Mat4& m) {
    Mat4 r;
    for (std::size_t i = 0; i < 16; ++i) r.e[i] = s * m.e[i];
    return r;
}

Mat2 pauli(Axis axis) {
    const Complex i{0.0, 1.0};
    Mat2 m;
    switch (axis) {
        case Axis::x:
            m(0, 1) = 1.0;
            m(1, 0) = 1.0;
            break;
        case Axis::y:
            m(0, 1) = -i;
            m(1, 0) = i;
            break;
        case Axis::z:
            m(0, 0) = 1.0;
            m(1, 1) = -1.0;
            break;
    }
    return m;
}

Mat4 gamma(GammaIndex index) {
    Mat4 m;
    if (index == GammaIndex::zero) {
        m(0, 0) = 1.0;
        m(1, 1) = 1.0;
        m(2, 2) = -1.0;
        m(3, 3) = -1.0;
        return m;
    }
    Axis axis = Axis::x;
    if (index == GammaIndex::y) axis = Axis::y;
    if (index == GammaIndex::z) axis = Axis::z;
    const Mat2 s = pauli(axis);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            m(i, 2 + j) = s(i, j);
            m(2 + i, j) = -s(i, j);
        }
    return m;
}

bool nullspace_test(const Mat2& m, const SpinorPair& w, double tol) {
    if (tol <= 0.0) throw std::domain_error("nullspace_test: tol must be positive");
    constexpr double floor = 1e-30;
    const double lhs = m.apply(w).norm();
    return lhs <= tol * (m.frobenius_norm() * w.norm() + floor);
}

}  // namespace axial
