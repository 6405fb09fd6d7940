#include "qmds/codes.hpp"

#include <algorithm>
#include <set>

namespace qmds {

namespace {

// Membership by reduction against an RREF generator.
bool reduces_to_zero(const Mat& gen, const std::vector<int>& pivots, Vec w) {
    const Field& F = *gen.field;
    for (int i = 0; i < gen.rows; ++i) {
        felem c = w[pivots[i]];
        if (c == 0) continue;
        for (int j = 0; j < gen.cols; ++j) w[j] = F.sub(w[j], F.mul(c, gen(i, j)));
    }
    return w.is_zero();
}

std::vector<int> pivot_columns(const Mat& rref_gen) {
    std::vector<int> pivots;
    for (int i = 0; i < rref_gen.rows; ++i) {
        int c = 0;
        while (c < rref_gen.cols && rref_gen(i, c) == 0) ++c;
        pivots.push_back(c);
    }
    return pivots;
}

}  // namespace

LinearCode::LinearCode(const Mat& gen) {
    RrefResult r = rref(gen);
    Mat g(gen.field, r.rank, gen.cols);
    std::copy(r.mat.a.begin(), r.mat.a.begin() + std::size_t(r.rank) * gen.cols, g.a.begin());
    gen_ = std::move(g);
}

LinearCode LinearCode::zero(FieldPtr f, int n) { return LinearCode(Mat(std::move(f), 0, n)); }

LinearCode LinearCode::full(FieldPtr f, int n) { return LinearCode(Mat::identity(std::move(f), n)); }

bool LinearCode::contains(const Vec& word) const {
    if (word.field != field() || word.n() != n()) throw error("word does not match code length/field");
    return reduces_to_zero(gen_, pivot_columns(gen_), word);
}

bool LinearCode::contains(const LinearCode& sub) const {
    if (sub.field() != field() || sub.n() != n()) throw error("code comparison shape/field mismatch");
    auto pivots = pivot_columns(gen_);
    for (int i = 0; i < sub.k(); ++i)
        if (!reduces_to_zero(gen_, pivots, sub.generator().row(i))) return false;
    return true;
}

Vec LinearCode::encode(const Vec& message) const {
    if (message.n() != k()) throw error("message length must equal code dimension");
    return vec_mat(message, gen_);
}

PairCode::PairCode(FieldPtr base_field, int n, const Mat& gen) : n_(n) {
    if (gen.cols != 2 * n) throw error("pair code generator must have 2n columns");
    if (gen.field != base_field) throw error("pair code generator field mismatch");
    RrefResult r = rref(gen);
    Mat g(base_field, r.rank, gen.cols);
    std::copy(r.mat.a.begin(), r.mat.a.begin() + std::size_t(r.rank) * gen.cols, g.a.begin());
    gen_ = std::move(g);
}

PairCode PairCode::zero(FieldPtr f, int n) {
    Mat empty(f, 0, 2 * n);
    return PairCode(std::move(f), n, empty);
}

bool PairCode::contains(const Vec& word2n) const {
    if (word2n.field != field() || word2n.n() != 2 * n_) throw error("pair word shape/field mismatch");
    return reduces_to_zero(gen_, pivot_columns(gen_), word2n);
}

bool PairCode::contains(const PairCode& sub) const {
    if (sub.field() != field() || sub.n() != n_) throw error("pair code comparison mismatch");
    auto pivots = pivot_columns(gen_);
    for (int i = 0; i < sub.dim(); ++i)
        if (!reduces_to_zero(gen_, pivots, sub.generator().row(i))) return false;
    return true;
}

int symplectic_weight(const Vec& word2n) {
    int n = word2n.n() / 2, w = 0;
    for (int i = 0; i < n; ++i) w += (word2n[i] != 0 || word2n[n + i] != 0);
    return w;
}

LinearCode dual_euclidean(const LinearCode& c) { return LinearCode(kernel(c.generator())); }

LinearCode dual_hermitian(const LinearCode& c, const Extension& ext) {
    if (c.field() != ext.ext()) throw error("Hermitian dual needs a code over the extension field");
    // {v : sum v_i c_i^q = 0} = Euclidean kernel of the entrywise-Frobenius image.
    Mat frob = c.generator();
    for (felem& x : frob.a) x = ext.frobenius(x);
    return LinearCode(kernel(frob));
}

PairCode dual_symplectic(const PairCode& c) {
    // (v', w') is orthogonal to generator (v, w) iff (-w | v) . (v' | w') = 0.
    const Field& F = *c.field();
    int n = c.n();
    Mat swapped(c.field(), c.dim(), 2 * n);
    for (int i = 0; i < c.dim(); ++i) {
        for (int j = 0; j < n; ++j) {
            swapped(i, j) = F.neg(c.generator()(i, n + j));
            swapped(i, n + j) = c.generator()(i, j);
        }
    }
    return PairCode(c.field(), n, kernel(swapped));
}

bool euclidean_self_orthogonal(const LinearCode& c) {
    const Mat& g = c.generator();
    Mat prod = mat_mul(g, transpose(g));
    return std::all_of(prod.a.begin(), prod.a.end(), [](felem x) { return x == 0; });
}

bool hermitian_self_orthogonal(const LinearCode& c, const Extension& ext) {
    if (c.field() != ext.ext()) throw error("Hermitian check needs a code over the extension field");
    Mat frob = c.generator();
    for (felem& x : frob.a) x = ext.frobenius(x);
    Mat prod = mat_mul(c.generator(), transpose(frob));
    return std::all_of(prod.a.begin(), prod.a.end(), [](felem x) { return x == 0; });
}

bool symplectic_self_orthogonal(const PairCode& c) {
    const Field& F = *c.field();
    int n = c.n();
    const Mat& g = c.generator();
    for (int i = 0; i < c.dim(); ++i) {
        for (int j = i + 1; j < c.dim(); ++j) {
            felem acc = 0;
            for (int l = 0; l < n; ++l) {
                acc = F.add(acc, F.mul(g(i, l), g(j, n + l)));
                acc = F.sub(acc, F.mul(g(j, l), g(i, n + l)));
            }
            if (acc != 0) return false;
        }
    }
    return true;
}

PairCode expand_to_paircode(const LinearCode& c, const Extension& ext) {
    if (c.field() != ext.ext()) throw error("expansion needs a code over the extension field");
    const Field& E = *ext.ext();
    int n = c.n();
    // GF(q)-basis of C: {g, gamma*g} for each generator row g.
    Mat gen(ext.base(), 2 * c.k(), 2 * n);
    for (int i = 0; i < c.k(); ++i) {
        for (int j = 0; j < n; ++j) {
            felem x = c.generator()(i, j);
            auto [v, w] = ext.split(x);
            gen(2 * i, j) = v;
            gen(2 * i, n + j) = w;
            auto [gv, gw] = ext.split(E.mul(ext.gamma(), x));
            gen(2 * i + 1, j) = gv;
            gen(2 * i + 1, n + j) = gw;
        }
    }
    return PairCode(ext.base(), n, gen);
}

LinearCode shorten(const LinearCode& c, std::span<const int> positions) {
    std::set<int> pos(positions.begin(), positions.end());
    for (int p : pos)
        if (p < 0 || p >= c.n()) throw error("shortening position out of range");
    if (pos.empty()) return c;

    // RREF with the shortened columns moved first: rows whose pivot falls
    // outside that block vanish on all of it.
    std::vector<int> order(pos.begin(), pos.end());
    for (int j = 0; j < c.n(); ++j)
        if (!pos.count(j)) order.push_back(j);

    Mat perm(c.field(), c.k(), c.n());
    for (int i = 0; i < c.k(); ++i)
        for (int j = 0; j < c.n(); ++j) perm(i, j) = c.generator()(i, order[j]);

    RrefResult r = rref(perm);
    int s = static_cast<int>(pos.size());
    int keep_from = 0;
    while (keep_from < r.rank && r.pivots[keep_from] < s) ++keep_from;

    Mat out(c.field(), r.rank - keep_from, c.n() - s);
    for (int i = keep_from; i < r.rank; ++i)
        for (int j = s; j < c.n(); ++j) out(i - keep_from, j - s) = r.mat(i, j);
    return LinearCode(out);
}

}  // namespace qmds
