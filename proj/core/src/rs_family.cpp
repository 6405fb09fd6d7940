#include "qmds/rs_family.hpp"

namespace qmds {

Vec rs_power_row(const FieldPtr& f, int e) {
    const int q = f->q();
    if (e < 0 || e > q - 2) throw error("row exponent out of range [0, q-2]");
    Vec row(f, q);
    for (int j = 0; j <= q - 2; ++j) row[j] = f->alpha_pow(static_cast<long long>(e) * j);
    row[q - 1] = (e == 0) ? 1 : 0;
    return row;
}

Mat rs_generator_matrix(const FieldPtr& f, int mu) {
    const int q = f->q();
    if (mu < 0 || mu > q - 2) throw error("mu out of range [0, q-2]");
    Mat g(f, mu + 1, q);
    for (int i = 0; i <= mu; ++i) g.set_row(i, rs_power_row(f, i));
    return g;
}

LinearCode rs_mds_code(const FieldPtr& f, int mu) { return LinearCode(rs_generator_matrix(f, mu)); }

LinearCode rs_mds_code_shortened(const FieldPtr& f, int mu) {
    const int last = f->q() - 1;
    return shorten(rs_mds_code(f, mu), std::span<const int>(&last, 1));
}

bool rs_family_euclidean_self_orthogonal(const FieldPtr& f, int mu) {
    Mat g = rs_generator_matrix(f, mu);
    Mat prod = mat_mul(g, transpose(g));
    for (felem x : prod.a)
        if (x != 0) return false;
    return true;
}

bool rs_family_hermitian_self_orthogonal(const Extension& ext, int mu) {
    const FieldPtr& E = ext.ext();
    Mat g = rs_generator_matrix(E, mu);
    Mat frob = g;
    for (felem& x : frob.a) x = ext.frobenius(x);
    Mat prod = mat_mul(g, transpose(frob));
    for (felem x : prod.a)
        if (x != 0) return false;
    return true;
}

}  // namespace qmds
