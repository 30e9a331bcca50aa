#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace setgame {

using Vec = std::vector<double>;

// Dense d x N matrix, column-major; column i is player i's z-block.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<double> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0.0) {}

    double& operator()(int r, int c) { return a[static_cast<std::size_t>(c) * rows + r]; }
    double operator()(int r, int c) const { return a[static_cast<std::size_t>(c) * rows + r]; }

    std::span<const double> col(int c) const {
        return {a.data() + static_cast<std::size_t>(c) * rows, static_cast<std::size_t>(rows)};
    }
    std::span<double> col(int c) {
        return {a.data() + static_cast<std::size_t>(c) * rows, static_cast<std::size_t>(rows)};
    }
};

inline double l2_norm(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

inline double l2_dist(std::span<const double> u, std::span<const double> v) {
    double s = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double d = u[i] - v[i];
        s += d * d;
    }
    return std::sqrt(s);
}

inline double dot(std::span<const double> u, std::span<const double> v) {
    double s = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

inline double frobenius_norm(const Mat& m) { return l2_norm(m.a); }

inline double frobenius_dist(const Mat& m1, const Mat& m2) { return l2_dist(m1.a, m2.a); }

inline bool all_finite(std::span<const double> v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

// Lexicographic comparison used for canonical point ordering.
inline bool lex_less(std::span<const double> u, std::span<const double> v) {
    for (std::size_t i = 0; i < u.size() && i < v.size(); ++i) {
        if (u[i] < v[i]) return true;
        if (u[i] > v[i]) return false;
    }
    return u.size() < v.size();
}

inline double max_abs_diff(std::span<const double> u, std::span<const double> v) {
    double m = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) m = std::max(m, std::abs(u[i] - v[i]));
    return m;
}

}  // namespace setgame
