#pragma once

#include <cmath>
#include <stdexcept>

namespace curvedyn {

/// Dense 2x2 matrix, row-major. Small enough that everything stays by value.
struct Mat2 {
    double m[2][2] = {{0.0, 0.0}, {0.0, 0.0}};

    double& operator()(int i, int j) { return m[i][j]; }
    double operator()(int i, int j) const { return m[i][j]; }

    static Mat2 zero() { return {}; }
    static Mat2 identity() { return diag(1.0, 1.0); }
    static Mat2 diag(double a, double b) {
        Mat2 out;
        out.m[0][0] = a;
        out.m[1][1] = b;
        return out;
    }

    double det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

    Mat2 inverse() const {
        const double d = det();
        if (d == 0.0) throw std::domain_error("singular 2x2 matrix");
        Mat2 out;
        out.m[0][0] = m[1][1] / d;
        out.m[0][1] = -m[0][1] / d;
        out.m[1][0] = -m[1][0] / d;
        out.m[1][1] = m[0][0] / d;
        return out;
    }

    friend Mat2 operator+(const Mat2& a, const Mat2& b) {
        Mat2 out;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) out.m[i][j] = a.m[i][j] + b.m[i][j];
        return out;
    }
    friend Mat2 operator-(const Mat2& a, const Mat2& b) {
        Mat2 out;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) out.m[i][j] = a.m[i][j] - b.m[i][j];
        return out;
    }
    friend Mat2 operator*(double s, const Mat2& a) {
        Mat2 out;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) out.m[i][j] = s * a.m[i][j];
        return out;
    }

    double max_abs() const {
        double v = 0.0;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) v = std::max(v, std::abs(m[i][j]));
        return v;
    }
};

}  // namespace curvedyn
