#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qmds {

/// Base class for all errors raised by the library.
class error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// An exhaustive enumeration would exceed the configured codeword budget.
class budget_error : public error {
  public:
    using error::error;
};

/// Element of a finite field, stored as an index in [0, q).  The index packs
/// the polynomial-basis coordinates over GF(p) in base p; 0 and 1 are the
/// additive and multiplicative identities.
using felem = std::uint16_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// A concrete finite field GF(p^m), q = p^m <= 2^16, with fixed modulus and
/// full log/antilog tables.  Instances are canonical per (p, m) -- get()
/// always returns the same object, so pointer identity decides whether two
/// elements live in the same field.  Immutable after construction and safe to
/// share across threads.
///
/// The modulus is the Conway polynomial for (p, m): for m = 1 this is
/// x - g with g the smallest primitive root of p (computed on the fly); for
/// m >= 2 it comes from a bundled table.  Conway moduli make the residue of x
/// primitive and keep subfield embeddings compatible, so element indices are
/// reproducible across runs.
class Field {
  public:
    /// Canonical field instance.  Throws qmds::error if p is not prime,
    /// p^m > 2^16, or (p, m) with m >= 2 is outside the bundled table.
    static FieldPtr get(int p, int m);

    int p() const { return p_; }
    int m() const { return m_; }
    int q() const { return q_; }
    /// Modulus coefficients c0..cm, monic.
    const std::vector<int>& modulus() const { return modulus_; }
    /// The designated primitive element (residue class of x).
    felem alpha() const { return alpha_; }

    felem add(felem a, felem b) const {
        return addtab_.empty() ? add_generic(a, b) : addtab_[std::size_t(a) * q_ + b];
    }
    felem neg(felem a) const { return negtab_[a]; }
    felem sub(felem a, felem b) const { return add(a, negtab_[b]); }
    felem mul(felem a, felem b) const {
        if (a == 0 || b == 0) return 0;
        return antilog_[log_[a] + log_[b]];
    }
    /// Multiplicative inverse; throws on 0.
    felem inv(felem a) const;
    /// a / b; throws on b == 0.
    felem div(felem a, felem b) const;
    /// a^e for any integer e (negative e inverts; 0^0 = 1, 0^e = 0 for e > 0,
    /// throws for e < 0 on a = 0).
    felem pow(felem a, long long e) const;
    /// alpha^e for any integer e.
    felem alpha_pow(long long e) const;
    /// Discrete log base alpha; throws on 0.
    int log(felem a) const;
    /// The prime-subfield element v mod p.
    felem from_int(long long v) const;
    /// Bounds-checked element from an index.
    felem element(long long index) const;

    bool is_prime_field() const { return m_ == 1; }
    std::string name() const;  // "GF(q)"

    /// Direct view of the q*q addition table (empty for q > 1024); hot
    /// enumeration loops index it as [a*q + b].
    const std::vector<felem>& add_table() const { return addtab_; }

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

  private:
    Field(int p, int m, std::vector<int> modulus);
    felem add_generic(felem a, felem b) const;
    felem scale_digits(int factor, felem a) const;

    int p_, m_, q_;
    std::vector<int> modulus_;
    felem alpha_ = 0;
    std::vector<felem> antilog_;  // size 2(q-1): antilog_[e] = alpha^e, doubled to skip a mod
    std::vector<int> log_;        // size q, log_[0] = -1
    std::vector<felem> negtab_;
    std::vector<felem> addtab_;  // q*q when q <= 1024, else empty
    std::vector<int> ppow_;      // p^0..p^m
};

/// Checked element-level handle: an index bound to its field.  Mixing
/// elements of distinct fields throws.  Intended for element-granular call
/// sites; bulk code works on raw felem arrays with the Field at the edge.
struct Element {
    FieldPtr field;
    felem v = 0;

    Element() = default;
    Element(FieldPtr f, felem value) : field(std::move(f)), v(value) {}

    Element operator+(const Element& o) const { return {same(o), field->add(v, o.v)}; }
    Element operator-(const Element& o) const { return {same(o), field->sub(v, o.v)}; }
    Element operator*(const Element& o) const { return {same(o), field->mul(v, o.v)}; }
    Element operator/(const Element& o) const { return {same(o), field->div(v, o.v)}; }
    Element operator-() const { return {field, field->neg(v)}; }
    Element pow(long long e) const { return {field, field->pow(v, e)}; }
    Element inverse() const { return {field, field->inv(v)}; }
    bool operator==(const Element& o) const { return field == o.field && v == o.v; }

  private:
    const FieldPtr& same(const Element& o) const {
        if (field != o.field) throw error("elements of distinct fields never mix");
        return field;
    }
};

class Extension;
using ExtensionPtr = std::shared_ptr<const Extension>;

/// The extension pair GF(q) in GF(q^2) used by the Hermitian machinery:
/// the embedding, Frobenius x -> x^q, the trace to the base field, and the
/// basis {1, gamma} with gamma the extension field's primitive element.
/// gamma satisfies gamma^q = -gamma + gamma0 with gamma0 = tr(gamma) in GF(q).
class Extension {
  public:
    /// Canonical instance for GF(p^m) in GF(p^2m); requires p^2m <= 2^16.
    static ExtensionPtr get(int p, int m);

    const FieldPtr& base() const { return base_; }
    const FieldPtr& ext() const { return ext_; }
    int q() const { return base_->q(); }

    /// Field embedding GF(q) -> GF(q^2); sends alpha_q to alpha_{q^2}^(q+1).
    felem embed(felem a) const { return embed_[a]; }
    /// Is x (an element of GF(q^2)) in the embedded base field?
    bool in_base(felem x) const { return restrict_[x] >= 0; }
    /// Preimage under embed; throws if x is outside the base field.
    felem to_base(felem x) const;
    /// x^q in GF(q^2).  Involution; fixes exactly the embedded base field.
    felem frobenius(felem x) const { return frob_[x]; }
    /// tr(x) = x + x^q as a base-field element.
    felem trace(felem x) const;
    /// gamma = alpha_{q^2} (always outside the base field).
    felem gamma() const { return gamma_; }
    /// gamma0 = tr(gamma), as a base-field element.
    felem gamma0() const { return gamma0_; }
    /// Coordinates of x in the basis {1, gamma}: x = embed(v) + gamma*embed(w).
    std::pair<felem, felem> split(felem x) const { return {split_v_[x], split_w_[x]}; }
    /// Inverse of split.
    felem combine(felem v, felem w) const;

    Extension(const Extension&) = delete;
    Extension& operator=(const Extension&) = delete;

  private:
    Extension(FieldPtr base, FieldPtr ext);

    FieldPtr base_, ext_;
    felem gamma_ = 0, gamma0_ = 0;
    std::vector<felem> embed_;    // size q
    std::vector<int> restrict_;   // size q^2, -1 if not in base
    std::vector<felem> frob_;     // size q^2
    std::vector<felem> split_v_;  // size q^2
    std::vector<felem> split_w_;  // size q^2
};

/// Writes q = p^m; throws qmds::error if q is not a prime power.
std::pair<int, int> factor_prime_power(int q);

/// Canonical field of order q (q a prime power).
FieldPtr field_of_order(int q);

}  // namespace qmds
