#pragma once

#include <vector>

#include "qmds/gf.hpp"

namespace qmds {

/// Dense vector over a field.
struct Vec {
    FieldPtr field;
    std::vector<felem> e;

    Vec() = default;
    Vec(FieldPtr f, int n) : field(std::move(f)), e(n, 0) {}
    Vec(FieldPtr f, std::vector<felem> entries) : field(std::move(f)), e(std::move(entries)) {}

    int n() const { return static_cast<int>(e.size()); }
    felem operator[](int i) const { return e[i]; }
    felem& operator[](int i) { return e[i]; }
    bool is_zero() const;
    int hamming_weight() const;
    bool operator==(const Vec& o) const { return field == o.field && e == o.e; }
};

/// Dense row-major matrix over a field.
struct Mat {
    FieldPtr field;
    int rows = 0, cols = 0;
    std::vector<felem> a;

    Mat() = default;
    Mat(FieldPtr f, int r, int c) : field(std::move(f)), rows(r), cols(c), a(std::size_t(r) * c, 0) {}

    felem operator()(int r, int c) const { return a[std::size_t(r) * cols + c]; }
    felem& operator()(int r, int c) { return a[std::size_t(r) * cols + c]; }

    Vec row(int r) const;
    void set_row(int r, const Vec& v);
    static Mat identity(FieldPtr f, int n);
    static Mat from_rows(const std::vector<Vec>& rows);
    bool operator==(const Mat& o) const {
        return field == o.field && rows == o.rows && cols == o.cols && a == o.a;
    }
};

struct RrefResult {
    Mat mat;
    int rank = 0;
    std::vector<int> pivots;  // pivot column per nonzero row
};

/// Reduced row-echelon form with deterministic pivoting (leftmost nonzero
/// column, topmost row).
RrefResult rref(Mat m);

/// Generators of the right null space {v : M v^T = 0}, RREF-canonical.
/// cols - rank(M) rows.
Mat kernel(const Mat& m);

Mat transpose(const Mat& m);
Mat mat_mul(const Mat& a, const Mat& b);
Vec mat_vec(const Mat& m, const Vec& v);
/// v * M for a row vector v.
Vec vec_mat(const Vec& v, const Mat& m);
felem dot(const Vec& a, const Vec& b);

/// a + c*b into a.
void add_scaled_row(Vec& a, felem c, const Vec& b);

}  // namespace qmds
