#include "qmds/puncture.hpp"

namespace qmds {

Vec pair_bracket(const Vec& a, const Vec& b) {
    if (a.field != b.field || a.n() != b.n() || a.n() % 2 != 0)
        throw error("bracket needs two pair rows of equal even length");
    const Field& F = *a.field;
    const int n = a.n() / 2;
    Vec r(a.field, n);
    for (int i = 0; i < n; ++i)
        r[i] = F.sub(F.mul(a[i], b[n + i]), F.mul(b[i], a[n + i]));
    return r;
}

LinearCode puncture_code(const PairCode& c) {
    const int n = c.n(), r = c.dim();
    std::vector<Vec> brackets;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            brackets.push_back(pair_bracket(c.generator().row(i), c.generator().row(j)));
    if (brackets.empty()) return LinearCode::full(c.field(), n);
    return dual_euclidean(LinearCode(Mat::from_rows(brackets)));
}

LinearCode puncture_code_css(const LinearCode& c1, const LinearCode& c2) {
    if (c1.field() != c2.field() || c1.n() != c2.n()) throw error("CSS pair must share length and field");
    const Field& F = *c1.field();
    const int n = c1.n();
    LinearCode d1 = dual_euclidean(c1);
    LinearCode d2 = dual_euclidean(c2);
    std::vector<Vec> products;
    for (int i = 0; i < d1.k(); ++i) {
        for (int j = 0; j < d2.k(); ++j) {
            Vec prod(c1.field(), n);
            for (int l = 0; l < n; ++l) prod[l] = F.mul(d1.generator()(i, l), d2.generator()(j, l));
            products.push_back(std::move(prod));
        }
    }
    if (products.empty()) return LinearCode::full(c1.field(), n);
    return dual_euclidean(LinearCode(Mat::from_rows(products)));
}

LinearCode puncture_code_hermitian(const LinearCode& c, const Extension& ext) {
    if (c.field() != ext.ext()) throw error("Hermitian puncture code needs a code over the extension field");
    const Field& E = *ext.ext();
    const int n = c.n();

    // GF(q)-basis of C: {g, gamma*g} per generator row; tr(c d^q) is symmetric
    // in (c, d), so pairs i <= j suffice.
    std::vector<Vec> basis;
    for (int i = 0; i < c.k(); ++i) {
        Vec g = c.generator().row(i);
        basis.push_back(g);
        Vec gg(c.field(), n);
        for (int l = 0; l < n; ++l) gg[l] = E.mul(ext.gamma(), g[l]);
        basis.push_back(std::move(gg));
    }

    std::vector<Vec> traces;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i; j < basis.size(); ++j) {
            Vec t(ext.base(), n);
            for (int l = 0; l < n; ++l)
                t[l] = ext.trace(E.mul(basis[i][l], ext.frobenius(basis[j][l])));
            traces.push_back(std::move(t));
        }
    }
    if (traces.empty()) return LinearCode::full(ext.base(), n);
    return dual_euclidean(LinearCode(Mat::from_rows(traces)));
}

LinearCode puncture_code_rs_hermitian(const Extension& ext, int mu) {
    const int q = ext.q();
    if (mu < 0 || mu > q - 2) throw error("mu out of range [0, q-2]");
    const int n = q * q;

    // A base-field word x lies in the dual of <G_(i+qj)> over GF(q^2) iff
    // sum_l G_e[l] embed(x_l) = 0 for every exponent e; each extension-field
    // equation splits into two GF(q) rows via the {1, gamma} coordinates.
    std::vector<Vec> constraints;
    for (int i = 0; i <= mu; ++i) {
        for (int j = 0; j <= mu; ++j) {
            Vec row = rs_power_row(ext.ext(), i + q * j);
            Vec cv(ext.base(), n), cw(ext.base(), n);
            for (int l = 0; l < n; ++l) {
                auto [v, w] = ext.split(row[l]);
                cv[l] = v;
                cw[l] = w;
            }
            constraints.push_back(std::move(cv));
            constraints.push_back(std::move(cw));
        }
    }
    return LinearCode(kernel(Mat::from_rows(constraints)));
}

bool in_puncture_code(const PairCode& c, const Vec& x) {
    if (x.field != c.field() || x.n() != c.n()) throw error("witness shape/field mismatch");
    for (int i = 0; i < c.dim(); ++i)
        for (int j = i + 1; j < c.dim(); ++j)
            if (dot(pair_bracket(c.generator().row(i), c.generator().row(j)), x) != 0) return false;
    return true;
}

ShortenedCode shorten_quantum(const PairCode& c, const Vec& x, std::optional<int> designed_d,
                              const EnumOptions& opt) {
    if (!in_puncture_code(c, x)) throw error("witness is not in the puncture code");
    const Field& F = *c.field();
    const int n = c.n();

    std::vector<int> support;
    for (int i = 0; i < n; ++i)
        if (x[i] != 0) support.push_back(i);
    const int r = static_cast<int>(support.size());
    if (r == 0) throw error("weight-0 witness rejected: nothing to shorten to");

    // scale second components by x and keep only supp(x)
    Mat gen(c.field(), c.dim(), 2 * r);
    for (int row = 0; row < c.dim(); ++row) {
        for (int t = 0; t < r; ++t) {
            int i = support[t];
            gen(row, t) = c.generator()(row, i);
            gen(row, r + t) = F.mul(x[i], c.generator()(row, n + i));
        }
    }
    PairCode d(c.field(), r, gen);
    if (!symplectic_self_orthogonal(d))
        throw error("internal invariant violated: shortened stabilizer is not self-orthogonal");

    QuantumCode code = qecc_from_symplectic(
        d, designed_d, opt, "shorten(r=" + std::to_string(r) + ",n=" + std::to_string(n) + ")");
    return {std::move(support), x, std::move(code)};
}

}  // namespace qmds
