#pragma once

#include <optional>

#include "qmds/rs_family.hpp"
#include "qmds/weights.hpp"

namespace qmds {

enum class Purity { pure, impure, unknown };

/// How the reported minimum distance was settled:
///   enumerated       -- exact, by brute force over C* \ C
///   singleton_pinned -- exact, designed lower bound meets the quantum
///                       Singleton bound with equality (so it cannot exceed it)
///   lower_bound      -- construction-designed bound only, not verified
enum class DistanceStatus { enumerated, singleton_pinned, lower_bound };

/// Parameters of a QECC(n, k, d, q): n qudits carrying k logical qudits at
/// minimum distance d, qudit dimension q.
struct QeccParams {
    int n = 0, k = 0, d = 1, q = 0;
    Purity purity = Purity::unknown;
    bool operator==(const QeccParams& o) const { return n == o.n && k == o.k && d == o.d && q == o.q; }
};

/// n + 2 - k - 2d; zero means quantum MDS.  Throws when negative (the
/// parameter claim violates the quantum Singleton bound).
int singleton_defect(const QeccParams& p);

/// A quantum code: parameters plus the self-orthogonal stabilizer pair code
/// that witnesses them.
class QuantumCode {
  public:
    QuantumCode(QeccParams params, PairCode stabilizer, std::string provenance, DistanceStatus status);

    const QeccParams& params() const { return params_; }
    const PairCode& stabilizer() const { return stab_; }
    const std::string& provenance() const { return provenance_; }
    DistanceStatus distance_status() const { return status_; }
    /// True unless the distance is only a designed lower bound.
    bool distance_verified() const { return status_ != DistanceStatus::lower_bound; }

  private:
    QeccParams params_;
    PairCode stab_;
    std::string provenance_;
    DistanceStatus status_;
};

/// Exact minimum distance of the quantum code with stabilizer `stab`:
/// min symplectic weight over C* \ C, with purity (does the minimum already
/// occur over C* \ {0}).  When C = C* (k = 0) the set difference is empty;
/// by convention the minimum nonzero weight of C itself is reported, pure.
/// Throws budget_error when q^(n+k) exceeds the budget.
ExcludedMinWeight qecc_min_distance(const PairCode& stab, const EnumOptions& opt = {});

/// QECC from a symplectically self-orthogonal pair code (n, q^r) over GF(q):
/// parameters (n, n-r, d, q).  designed_d, when given, must be a proven lower
/// bound on d; it is used verbatim (flagged) when enumeration exceeds the
/// budget, and upgraded to exact when it meets the Singleton bound.
QuantumCode qecc_from_symplectic(const PairCode& c, std::optional<int> designed_d = {},
                                 const EnumOptions& opt = {}, std::string provenance = "symplectic");

/// QECC(n, n-2k, d, q) from a Hermitian-self-orthogonal [n, k] code over
/// GF(q^2), via basis expansion to a pair code.
QuantumCode qecc_from_hermitian(const LinearCode& c, const Extension& ext,
                                std::optional<int> designed_d = {}, const EnumOptions& opt = {});

/// CSS construction: C1, C2 over GF(q) with dual(C2) contained in C1 give a
/// QECC(n, k1+k2-n, d, q) with stabilizer dual(C1) x dual(C2).
QuantumCode qecc_from_css(const LinearCode& c1, const LinearCode& c2,
                          std::optional<int> designed_d = {}, const EnumOptions& opt = {});

/// CSS special case for a weakly self-dual code (C contained in its Euclidean
/// dual): QECC(n, n-2k, d, q).
QuantumCode qecc_from_weakly_self_dual(const LinearCode& c, std::optional<int> designed_d = {},
                                       const EnumOptions& opt = {});

struct FamilyPair {
    QuantumCode code;       // length q (CSS) or q^2 (Hermitian)
    QuantumCode shortened;  // length q-1 / q^2-1 sibling
};

/// Quantum MDS family from the weakly self-dual codes C^(q,mu), C_s^(q,mu):
/// QECC(q, q-2mu-2, mu+2, q) and QECC(q-1, q-2mu-1, mu+1, q).
/// Requires 0 <= mu < (q-1)/2.
FamilyPair css_mds_family(const FieldPtr& f, int mu, const EnumOptions& opt = {});

/// Quantum MDS family from the Hermitian-self-orthogonal codes C^(q^2,mu):
/// QECC(q^2, q^2-2mu-2, mu+2, q) and QECC(q^2-1, q^2-2mu-1, mu+1, q).
/// Requires 0 <= mu < q-1.
FamilyPair hermitian_mds_family(const Extension& ext, int mu, const EnumOptions& opt = {});

}  // namespace qmds
