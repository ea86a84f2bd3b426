// Copyright Contributors to the cfalab project.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace cfalab {

/// Dense row-major double matrix, just big enough for the 3- and 4-channel
/// basis algebra used throughout. Not a general linear algebra library.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    double operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    Mat transposed() const {
        Mat t(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("Mat: size mismatch in multiply");
        Mat out(rows_, o.cols_);
        for (int r = 0; r < rows_; ++r)
            for (int k = 0; k < cols_; ++k) {
                const double a = (*this)(r, k);
                if (a == 0.0) continue;
                for (int c = 0; c < o.cols_; ++c) out(r, c) += a * o(k, c);
            }
        return out;
    }

    std::vector<double> apply(const std::vector<double>& v) const {
        if (static_cast<int>(v.size()) != cols_)
            throw std::invalid_argument("Mat: vector size mismatch");
        std::vector<double> out(rows_, 0.0);
        for (int r = 0; r < rows_; ++r) {
            double acc = 0.0;
            for (int c = 0; c < cols_; ++c) acc += (*this)(r, c) * v[c];
            out[r] = acc;
        }
        return out;
    }

    /// Gauss-Jordan inverse with partial pivoting. Throws on singular input.
    Mat inverse() const;

    /// Least-squares pseudoinverse via normal equations; requires full
    /// column rank.
    Mat pinv() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

inline Mat Mat::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("Mat: inverse needs a square matrix");
    const int n = rows_;
    Mat a(*this);
    Mat inv = Mat::identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
        if (std::abs(a(pivot, col)) < 1e-12)
            throw std::runtime_error("Mat: singular matrix, cannot invert");
        if (pivot != col) {
            for (int c = 0; c < n; ++c) {
                std::swap(a(pivot, c), a(col, c));
                std::swap(inv(pivot, c), inv(col, c));
            }
        }
        const double d = a(col, col);
        for (int c = 0; c < n; ++c) {
            a(col, c) /= d;
            inv(col, c) /= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const double f = a(r, col);
            if (f == 0.0) continue;
            for (int c = 0; c < n; ++c) {
                a(r, c) -= f * a(col, c);
                inv(r, c) -= f * inv(col, c);
            }
        }
    }
    return inv;
}

inline Mat Mat::pinv() const {
    const Mat t = transposed();
    return (t * (*this)).inverse() * t;
}

}  // namespace cfalab
