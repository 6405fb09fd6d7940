#include "qmds/linalg.hpp"

#include <algorithm>

namespace qmds {

bool Vec::is_zero() const {
    return std::all_of(e.begin(), e.end(), [](felem x) { return x == 0; });
}

int Vec::hamming_weight() const {
    int w = 0;
    for (felem x : e) w += (x != 0);
    return w;
}

Vec Mat::row(int r) const {
    Vec v(field, cols);
    std::copy(a.begin() + std::size_t(r) * cols, a.begin() + std::size_t(r + 1) * cols, v.e.begin());
    return v;
}

void Mat::set_row(int r, const Vec& v) {
    std::copy(v.e.begin(), v.e.end(), a.begin() + std::size_t(r) * cols);
}

Mat Mat::identity(FieldPtr f, int n) {
    Mat m(std::move(f), n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) throw error("from_rows needs at least one row (use Mat(f, 0, n) for none)");
    Mat m(rows[0].field, static_cast<int>(rows.size()), rows[0].n());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].field != m.field || rows[r].n() != m.cols) throw error("ragged or mixed-field rows");
        m.set_row(static_cast<int>(r), rows[r]);
    }
    return m;
}

RrefResult rref(Mat m) {
    const Field& F = *m.field;
    RrefResult res;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i) {
            if (m(i, c) != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = c; j < m.cols; ++j) std::swap(m(piv, j), m(r, j));
        felem s = F.inv(m(r, c));
        if (s != 1)
            for (int j = c; j < m.cols; ++j) m(r, j) = F.mul(m(r, j), s);
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || m(i, c) == 0) continue;
            felem f = m(i, c);
            for (int j = c; j < m.cols; ++j) m(i, j) = F.sub(m(i, j), F.mul(f, m(r, j)));
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    res.mat = std::move(m);
    return res;
}

Mat kernel(const Mat& m) {
    const Field& F = *m.field;
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : r.pivots) is_pivot[c] = true;

    Mat k(m.field, m.cols - r.rank, m.cols);
    int row = 0;
    for (int f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        k(row, f) = 1;
        for (int i = 0; i < r.rank; ++i) k(row, r.pivots[i]) = F.neg(r.mat(i, f));
        ++row;
    }
    return rref(std::move(k)).mat;
}

Mat transpose(const Mat& m) {
    Mat t(m.field, m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) t(j, i) = m(i, j);
    return t;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.field != b.field || a.cols != b.rows) throw error("matrix product shape/field mismatch");
    const Field& F = *a.field;
    Mat c(a.field, a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i) {
        for (int k = 0; k < a.cols; ++k) {
            felem v = a(i, k);
            if (v == 0) continue;
            for (int j = 0; j < b.cols; ++j) c(i, j) = F.add(c(i, j), F.mul(v, b(k, j)));
        }
    }
    return c;
}

Vec mat_vec(const Mat& m, const Vec& v) {
    if (m.field != v.field || m.cols != v.n()) throw error("matrix-vector shape/field mismatch");
    const Field& F = *m.field;
    Vec r(m.field, m.rows);
    for (int i = 0; i < m.rows; ++i) {
        felem acc = 0;
        for (int j = 0; j < m.cols; ++j) acc = F.add(acc, F.mul(m(i, j), v[j]));
        r[i] = acc;
    }
    return r;
}

Vec vec_mat(const Vec& v, const Mat& m) {
    if (m.field != v.field || m.rows != v.n()) throw error("vector-matrix shape/field mismatch");
    const Field& F = *m.field;
    Vec r(m.field, m.cols);
    for (int i = 0; i < m.rows; ++i) {
        felem c = v[i];
        if (c == 0) continue;
        for (int j = 0; j < m.cols; ++j) r[j] = F.add(r[j], F.mul(c, m(i, j)));
    }
    return r;
}

felem dot(const Vec& a, const Vec& b) {
    if (a.field != b.field || a.n() != b.n()) throw error("dot product shape/field mismatch");
    const Field& F = *a.field;
    felem acc = 0;
    for (int i = 0; i < a.n(); ++i) acc = F.add(acc, F.mul(a[i], b[i]));
    return acc;
}

void add_scaled_row(Vec& a, felem c, const Vec& b) {
    const Field& F = *a.field;
    for (int i = 0; i < a.n(); ++i) a[i] = F.add(a[i], F.mul(c, b[i]));
}

}  // namespace qmds
