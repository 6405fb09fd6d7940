#include "qmds/qecc.hpp"

namespace qmds {

int singleton_defect(const QeccParams& p) {
    int defect = p.n + 2 - p.k - 2 * p.d;
    if (defect < 0)
        throw error("parameters violate the quantum Singleton bound: k + 2d > n + 2 for [[" +
                    std::to_string(p.n) + "," + std::to_string(p.k) + "," + std::to_string(p.d) + "]]_" +
                    std::to_string(p.q));
    return defect;
}

QuantumCode::QuantumCode(QeccParams params, PairCode stabilizer, std::string provenance,
                         DistanceStatus status)
    : params_(params), stab_(std::move(stabilizer)), provenance_(std::move(provenance)), status_(status) {
    if (!symplectic_self_orthogonal(stab_)) throw error("stabilizer is not symplectically self-orthogonal");
    if (params_.n != stab_.n() || params_.k != stab_.n() - stab_.dim())
        throw error("parameters do not match the stabilizer dimensions");
    if (params_.q != stab_.field()->q()) throw error("qudit dimension does not match the stabilizer field");
    singleton_defect(params_);  // throws when the claim is impossible
    if (singleton_defect(params_) == 0 && params_.purity == Purity::impure)
        throw error("Singleton-tight codes are pure");
}

ExcludedMinWeight qecc_min_distance(const PairCode& stab, const EnumOptions& opt) {
    PairCode dual = dual_symplectic(stab);
    if (!dual.contains(stab)) throw error("stabilizer is not symplectically self-orthogonal");
    if (dual.dim() == stab.dim()) {
        // C = C*: the set difference is empty; report the pure distance of C.
        return {min_distance(stab, opt), true};
    }
    return min_weight_outside(dual, stab, opt);
}

QuantumCode qecc_from_symplectic(const PairCode& c, std::optional<int> designed_d,
                                 const EnumOptions& opt, std::string provenance) {
    if (!symplectic_self_orthogonal(c)) throw error("code is not symplectically self-orthogonal");
    QeccParams p;
    p.n = c.n();
    p.k = c.n() - c.dim();
    p.q = c.field()->q();

    DistanceStatus status;
    if (c.dim() == 0) {
        // empty stabilizer: C* is everything, weight-1 pairs exist
        p.d = 1;
        p.purity = Purity::pure;
        status = DistanceStatus::enumerated;
    } else if (saturating_pow(p.q, p.n + p.k) <= opt.budget) {
        ExcludedMinWeight m = qecc_min_distance(c, opt);
        p.d = m.d;
        p.purity = m.pure ? Purity::pure : Purity::impure;
        status = DistanceStatus::enumerated;
    } else if (designed_d && p.n + 2 - p.k - 2 * *designed_d == 0) {
        // the designed lower bound meets the Singleton bound: d is pinned
        p.d = *designed_d;
        p.purity = Purity::pure;  // equality in the Singleton bound implies purity
        status = DistanceStatus::singleton_pinned;
    } else {
        p.d = designed_d.value_or(1);
        p.purity = Purity::unknown;
        status = DistanceStatus::lower_bound;
    }
    return QuantumCode(p, c, std::move(provenance), status);
}

QuantumCode qecc_from_hermitian(const LinearCode& c, const Extension& ext,
                                std::optional<int> designed_d, const EnumOptions& opt) {
    if (!hermitian_self_orthogonal(c, ext)) throw error("code is not Hermitian-self-orthogonal");
    PairCode d = expand_to_paircode(c, ext);
    return qecc_from_symplectic(d, designed_d, opt,
                                "hermitian(q=" + std::to_string(ext.q()) + ",n=" + std::to_string(c.n()) +
                                    ",k=" + std::to_string(c.k()) + ")");
}

QuantumCode qecc_from_css(const LinearCode& c1, const LinearCode& c2, std::optional<int> designed_d,
                          const EnumOptions& opt) {
    if (c1.field() != c2.field() || c1.n() != c2.n()) throw error("CSS pair must share length and field");
    LinearCode d1 = dual_euclidean(c1);
    LinearCode d2 = dual_euclidean(c2);
    if (!c1.contains(d2)) throw error("CSS containment violated: dual(C2) is not a subcode of C1");

    const int n = c1.n();
    Mat gen(c1.field(), d1.k() + d2.k(), 2 * n);
    for (int i = 0; i < d1.k(); ++i)
        for (int j = 0; j < n; ++j) gen(i, j) = d1.generator()(i, j);
    for (int i = 0; i < d2.k(); ++i)
        for (int j = 0; j < n; ++j) gen(d1.k() + i, n + j) = d2.generator()(i, j);

    return qecc_from_symplectic(PairCode(c1.field(), n, gen), designed_d, opt,
                                "css(n=" + std::to_string(n) + ",k1=" + std::to_string(c1.k()) +
                                    ",k2=" + std::to_string(c2.k()) + ")");
}

QuantumCode qecc_from_weakly_self_dual(const LinearCode& c, std::optional<int> designed_d,
                                       const EnumOptions& opt) {
    LinearCode dual = dual_euclidean(c);
    if (!dual.contains(c)) throw error("code is not weakly self-dual");
    return qecc_from_css(dual, dual, designed_d, opt);
}

FamilyPair css_mds_family(const FieldPtr& f, int mu, const EnumOptions& opt) {
    const int q = f->q();
    if (mu < 0 || 2 * mu >= q - 1)
        throw error("mu out of range: the CSS family needs 0 <= mu < (q-1)/2");
    QuantumCode full = qecc_from_weakly_self_dual(rs_mds_code(f, mu), mu + 2, opt);
    QuantumCode shortened = qecc_from_weakly_self_dual(rs_mds_code_shortened(f, mu), mu + 1, opt);
    return {std::move(full), std::move(shortened)};
}

FamilyPair hermitian_mds_family(const Extension& ext, int mu, const EnumOptions& opt) {
    const int q = ext.q();
    if (mu < 0 || mu >= q - 1)
        throw error("mu out of range: the Hermitian family needs 0 <= mu < q-1");
    QuantumCode full = qecc_from_hermitian(rs_mds_code(ext.ext(), mu), ext, mu + 2, opt);
    QuantumCode shortened =
        qecc_from_hermitian(rs_mds_code_shortened(ext.ext(), mu), ext, mu + 1, opt);
    return {std::move(full), std::move(shortened)};
}

}  // namespace qmds
