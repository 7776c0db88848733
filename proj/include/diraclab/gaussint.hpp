#pragma once

#include <cstdint>
#include <complex>
#include <vector>

#include "diraclab/errors.hpp"

namespace diraclab {

// Gaussian integer a + bi with exact 64-bit arithmetic. std::complex<T> over
// integer T is formally unspecified, hence this 20-line substitute. Entries of
// the Dirac algebra matrices live in {0, +-1, +-i}, so overflow is not a
// concern for the handful of products the validators take.
struct GaussInt {
    std::int64_t re = 0;
    std::int64_t im = 0;

    friend GaussInt operator+(GaussInt a, GaussInt b) { return {a.re + b.re, a.im + b.im}; }
    friend GaussInt operator-(GaussInt a, GaussInt b) { return {a.re - b.re, a.im - b.im}; }
    friend GaussInt operator*(GaussInt a, GaussInt b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(GaussInt a, GaussInt b) { return a.re == b.re && a.im == b.im; }

    [[nodiscard]] GaussInt conj() const { return {re, -im}; }
    [[nodiscard]] std::complex<double> to_complex() const {
        return {static_cast<double>(re), static_cast<double>(im)};
    }
};

// Dense square matrix over GaussInt, just enough API for the exact Clifford
// algebra checks: multiply, add, conjugate-transpose, scalar comparison.
class GaussMat {
public:
    GaussMat() = default;
    explicit GaussMat(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

    static GaussMat identity(int n) {
        GaussMat m(n);
        for (int i = 0; i < n; ++i) m(i, i) = {1, 0};
        return m;
    }

    static GaussMat zero(int n) { return GaussMat(n); }

    [[nodiscard]] int dim() const { return n_; }

    GaussInt& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const GaussInt& operator()(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * n_ + j];
    }

    friend GaussMat operator+(const GaussMat& x, const GaussMat& y) {
        check_dims(x, y);
        GaussMat r(x.n_);
        for (std::size_t k = 0; k < x.a_.size(); ++k) r.a_[k] = x.a_[k] + y.a_[k];
        return r;
    }

    friend GaussMat operator-(const GaussMat& x, const GaussMat& y) {
        check_dims(x, y);
        GaussMat r(x.n_);
        for (std::size_t k = 0; k < x.a_.size(); ++k) r.a_[k] = x.a_[k] - y.a_[k];
        return r;
    }

    friend GaussMat operator*(const GaussMat& x, const GaussMat& y) {
        check_dims(x, y);
        GaussMat r(x.n_);
        for (int i = 0; i < x.n_; ++i)
            for (int k = 0; k < x.n_; ++k) {
                const GaussInt xik = x(i, k);
                if (xik.re == 0 && xik.im == 0) continue;
                for (int j = 0; j < x.n_; ++j) r(i, j) = r(i, j) + xik * y(k, j);
            }
        return r;
    }

    friend GaussMat operator*(GaussInt s, const GaussMat& x) {
        GaussMat r(x.n_);
        for (std::size_t k = 0; k < x.a_.size(); ++k) r.a_[k] = s * x.a_[k];
        return r;
    }

    friend bool operator==(const GaussMat& x, const GaussMat& y) {
        return x.n_ == y.n_ && x.a_ == y.a_;
    }

    [[nodiscard]] GaussMat adjoint() const {
        GaussMat r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r(j, i) = (*this)(i, j).conj();
        return r;
    }

    // Kronecker product, the workhorse of the doubling construction.
    [[nodiscard]] GaussMat kron(const GaussMat& y) const {
        GaussMat r(n_ * y.n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                const GaussInt s = (*this)(i, j);
                if (s.re == 0 && s.im == 0) continue;
                for (int k = 0; k < y.n_; ++k)
                    for (int l = 0; l < y.n_; ++l)
                        r(i * y.n_ + k, j * y.n_ + l) = s * y(k, l);
            }
        return r;
    }

    [[nodiscard]] bool is_zero() const {
        for (const auto& v : a_)
            if (!(v == GaussInt{})) return false;
        return true;
    }

private:
    static void check_dims(const GaussMat& x, const GaussMat& y) {
        if (x.n_ != y.n_)
            throw invalid_argument_error("GaussMat: dimension mismatch");
    }

    int n_ = 0;
    std::vector<GaussInt> a_;
};

} // namespace diraclab
