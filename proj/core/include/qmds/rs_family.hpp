#pragma once

#include "qmds/codes.hpp"

namespace qmds {

/// Row G_e of the extended power-generator family over GF(q): entries
/// alpha^(e*j) for j = 0..q-2, then an extended column that is 1 for e = 0
/// and 0 otherwise.  0 <= e <= q-2.
Vec rs_power_row(const FieldPtr& f, int e);

/// The (mu+1) x q matrix with rows G_0..G_mu, exactly in display order
/// (columns alpha^0, ..., alpha^(q-2), extended column last).  0 <= mu <= q-2.
Mat rs_generator_matrix(const FieldPtr& f, int mu);

/// C^(q,mu): the row span of rs_generator_matrix, an MDS code
/// [q, mu+1, q-mu]_q (dual of an extended Reed-Solomon code).
LinearCode rs_mds_code(const FieldPtr& f, int mu);

/// C_s^(q,mu): C^(q,mu) shortened at the last coordinate,
/// an MDS code [q-1, mu, q-mu]_q.
LinearCode rs_mds_code_shortened(const FieldPtr& f, int mu);

/// G * G^T == 0 over GF(q): the generator family is Euclidean
/// self-orthogonal.  Holds exactly when mu < (q-1)/2.
bool rs_family_euclidean_self_orthogonal(const FieldPtr& f, int mu);

/// sum_l G_i[l] * (G_j[l])^q == 0 over GF(q^2) for all row pairs: Hermitian
/// self-orthogonality of the length-q^2 family.  Holds for all mu <= q-2.
bool rs_family_hermitian_self_orthogonal(const Extension& ext, int mu);

}  // namespace qmds
