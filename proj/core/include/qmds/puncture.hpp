#pragma once

#include "qmds/qecc.hpp"

namespace qmds {

/// The coordinatewise bilinear form {(v,w), (v',w')} = (v_i w'_i - v'_i w_i)_i
/// on 2n-column pair rows; its coordinate sum is the symplectic inner product.
Vec pair_bracket(const Vec& a, const Vec& b);

/// Puncture code of a pair code C, straight from the definition: the
/// Euclidean dual of the span of {c, c'} over all generator pairs (generator
/// pairs suffice by bilinearity).
LinearCode puncture_code(const PairCode& c);

/// Puncture code of the CSS stabilizer dual(C1) x dual(C2): the dual of the
/// span of coordinatewise products c*d, c in dual(C1), d in dual(C2).
/// Neither code needs to be self-orthogonal.
LinearCode puncture_code_css(const LinearCode& c1, const LinearCode& c2);

/// Puncture code of a GF(q^2)-linear code C: the GF(q)-dual of the span of
/// the coordinatewise traces tr(c_i d_i^q) over generator pairs.
LinearCode puncture_code_hermitian(const LinearCode& c, const Extension& ext);

/// Closed form for C^(q^2,mu): the Euclidean dual over GF(q^2) of the row
/// span of G_(i+q*j), 0 <= i,j <= mu, restricted to base-field-valued words.
/// Equals puncture_code_hermitian(rs_mds_code(ext.ext(), mu), ext).
LinearCode puncture_code_rs_hermitian(const Extension& ext, int mu);

/// Is x in the puncture code of c (checked against generator-pair brackets)?
bool in_puncture_code(const PairCode& c, const Vec& x);

/// Result of shortening a quantum code along a weight-r puncture codeword.
struct ShortenedCode {
    std::vector<int> support;  // positions kept (support of the witness)
    Vec witness;
    QuantumCode code;  // length r = |support|
};

/// Shorten the quantum code with stabilizer c along x in P(C): scale the
/// second components by x, keep only supp(x), and rebuild.  The resulting
/// stabilizer is self-orthogonal by construction; k' = r - rank >= k - (n-r)
/// and d' >= d (designed_d names that certified lower bound d).
/// Throws when x is not in P(C) or has weight 0.
ShortenedCode shorten_quantum(const PairCode& c, const Vec& x, std::optional<int> designed_d = {},
                              const EnumOptions& opt = {});

}  // namespace qmds
