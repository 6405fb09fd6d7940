#pragma once

#include <span>

#include "qmds/linalg.hpp"

namespace qmds {

/// A k-dimensional linear code of length n over GF(q), held as a generator
/// matrix in reduced row-echelon form.  The canonical form makes code
/// equality plain matrix equality.  Immutable value type.
class LinearCode {
  public:
    /// Row span of gen (rows need not be independent; zero rows are dropped).
    explicit LinearCode(const Mat& gen);
    static LinearCode zero(FieldPtr f, int n);
    static LinearCode full(FieldPtr f, int n);

    const FieldPtr& field() const { return gen_.field; }
    int n() const { return gen_.cols; }
    int k() const { return gen_.rows; }
    const Mat& generator() const { return gen_; }

    bool contains(const Vec& word) const;
    bool contains(const LinearCode& sub) const;
    /// message (length k) -> codeword (length n).
    Vec encode(const Vec& message) const;
    bool operator==(const LinearCode& o) const { return gen_ == o.gen_; }

  private:
    Mat gen_;  // RREF, full rank
};

/// A GF(q)-linear subspace of GF(q)^n x GF(q)^n (an additive/stabilizer
/// code).  Generator rows have 2n columns grouped as (v | w); canonical RREF.
class PairCode {
  public:
    PairCode(FieldPtr base_field, int n, const Mat& gen);
    static PairCode zero(FieldPtr f, int n);

    const FieldPtr& field() const { return gen_.field; }
    /// Pair length (number of coordinate positions); generator has 2n columns.
    int n() const { return n_; }
    /// GF(q)-dimension r; the code has q^r elements.
    int dim() const { return gen_.rows; }
    const Mat& generator() const { return gen_; }

    bool contains(const Vec& word2n) const;
    bool contains(const PairCode& sub) const;
    bool operator==(const PairCode& o) const { return n_ == o.n_ && gen_ == o.gen_; }

  private:
    int n_;
    Mat gen_;
};

/// Number of positions i with (v_i, w_i) != (0, 0) for a 2n-column pair row.
int symplectic_weight(const Vec& word2n);

/// Euclidean dual C-perp = {v : v.c = 0 for all c in C}; dimension n - k.
LinearCode dual_euclidean(const LinearCode& c);

/// Hermitian dual over GF(q^2): {v : sum v_i c_i^q = 0 for all c in C}.
/// c must live over ext.ext().
LinearCode dual_hermitian(const LinearCode& c, const Extension& ext);

/// Symplectic dual C* w.r.t. (v,w)*(v',w') = sum v_i w'_i - v'_i w_i;
/// dimension 2n - dim(C).
PairCode dual_symplectic(const PairCode& c);

bool euclidean_self_orthogonal(const LinearCode& c);
bool hermitian_self_orthogonal(const LinearCode& c, const Extension& ext);
bool symplectic_self_orthogonal(const PairCode& c);

/// Writes each codeword c = v + gamma*w with v, w over GF(q) and returns the
/// pair code {(v, w)}; GF(q)-dimension 2k.  c must live over ext.ext().
PairCode expand_to_paircode(const LinearCode& c, const Extension& ext);

/// Subcode of words vanishing on the given positions, with those coordinates
/// deleted.  MDS inputs yield MDS outputs.
LinearCode shorten(const LinearCode& c, std::span<const int> positions);

}  // namespace qmds
