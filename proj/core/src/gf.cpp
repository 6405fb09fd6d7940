#include "qmds/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace qmds {

namespace {

struct ConwayEntry {
    int p, m;
    std::vector<int> coeffs;
};

#include "conway_table.inc"

constexpr int kAddTableMaxQ = 1024;

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::vector<int> prime_factors_int(int n) {
    std::vector<int> fs;
    for (int d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

int smallest_primitive_root(int p) {
    if (p == 2) return 1;
    auto fs = prime_factors_int(p - 1);
    for (int g = 2; g < p; ++g) {
        bool primitive = true;
        for (int r : fs) {
            long long e = (p - 1) / r, base = g, acc = 1;
            while (e > 0) {
                if (e & 1) acc = acc * base % p;
                base = base * base % p;
                e >>= 1;
            }
            if (acc == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) return g;
    }
    throw error("no primitive root mod " + std::to_string(p));
}

const std::vector<int>* lookup_conway(int p, int m) {
    for (const auto& e : kConwayTable)
        if (e.p == p && e.m == m) return &e.coeffs;
    return nullptr;
}

}  // namespace

Field::Field(int p, int m, std::vector<int> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
    ppow_.resize(m_ + 1);
    ppow_[0] = 1;
    for (int i = 1; i <= m_; ++i) ppow_[i] = ppow_[i - 1] * p_;
    q_ = ppow_[m_];

    negtab_.resize(q_);
    for (int a = 0; a < q_; ++a) {
        int r = 0, x = a;
        for (int i = 0; i < m_; ++i) {
            int d = x % p_;
            x /= p_;
            r += ((p_ - d) % p_) * ppow_[i];
        }
        negtab_[a] = static_cast<felem>(r);
    }

    // antilog by repeated multiplication with x; the reduction vector is the
    // packed representation of x^m mod modulus = -(c0 + c1 x + ...).
    felem redvec = 0;
    for (int i = 0; i < m_; ++i) redvec += static_cast<felem>(((p_ - modulus_[i] % p_) % p_) * ppow_[i]);

    antilog_.assign(2 * (q_ - 1), 0);
    log_.assign(q_, -1);
    felem cur = 1;
    for (int e = 0; e < q_ - 1; ++e) {
        if (log_[cur] != -1) throw error("modulus is not primitive for GF(" + std::to_string(q_) + ")");
        antilog_[e] = cur;
        log_[cur] = e;
        if (m_ == 1) {
            int g = (p_ - modulus_[0]) % p_;
            cur = static_cast<felem>(int(cur) * g % p_);
        } else {
            int top = cur / ppow_[m_ - 1];
            felem shifted = static_cast<felem>((cur % ppow_[m_ - 1]) * p_);
            cur = top == 0 ? shifted : add_generic(shifted, scale_digits(top, redvec));
        }
    }
    if (cur != 1) throw error("modulus is not primitive for GF(" + std::to_string(q_) + ")");
    for (int e = 0; e < q_ - 1; ++e) antilog_[q_ - 1 + e] = antilog_[e];
    alpha_ = antilog_[1 % (q_ - 1)];  // q = 2: alpha is 1

    if (q_ <= kAddTableMaxQ) {
        addtab_.resize(std::size_t(q_) * q_);
        for (int a = 0; a < q_; ++a)
            for (int b = 0; b < q_; ++b) addtab_[std::size_t(a) * q_ + b] = add_generic(felem(a), felem(b));
    }
}

felem Field::add_generic(felem a, felem b) const {
    int r = 0, x = a, y = b;
    for (int i = 0; i < m_; ++i) {
        int s = x % p_ + y % p_;
        if (s >= p_) s -= p_;
        r += s * ppow_[i];
        x /= p_;
        y /= p_;
    }
    return static_cast<felem>(r);
}

felem Field::scale_digits(int factor, felem a) const {
    int r = 0, x = a;
    for (int i = 0; i < m_; ++i) {
        r += (x % p_) * factor % p_ * ppow_[i];
        x /= p_;
    }
    return static_cast<felem>(r);
}

felem Field::inv(felem a) const {
    if (a == 0) throw error("inversion of zero in " + name());
    return antilog_[q_ - 1 - log_[a]];
}

felem Field::div(felem a, felem b) const {
    if (b == 0) throw error("division by zero in " + name());
    if (a == 0) return 0;
    return antilog_[log_[a] + q_ - 1 - log_[b]];
}

felem Field::pow(felem a, long long e) const {
    if (a == 0) {
        if (e > 0) return 0;
        if (e == 0) return 1;
        throw error("negative power of zero in " + name());
    }
    long long r = (static_cast<long long>(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
    if (r < 0) r += q_ - 1;
    return antilog_[r];
}

felem Field::alpha_pow(long long e) const {
    long long r = e % (q_ - 1);
    if (r < 0) r += q_ - 1;
    return antilog_[r];
}

int Field::log(felem a) const {
    if (a == 0) throw error("log of zero in " + name());
    return log_[a];
}

felem Field::from_int(long long v) const {
    long long r = v % p_;
    if (r < 0) r += p_;
    return static_cast<felem>(r);
}

felem Field::element(long long index) const {
    if (index < 0 || index >= q_) throw error("element index out of range for " + name());
    return static_cast<felem>(index);
}

std::string Field::name() const { return "GF(" + std::to_string(q_) + ")"; }

FieldPtr Field::get(int p, int m) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, FieldPtr> cache;

    if (!is_prime(p)) throw error(std::to_string(p) + " is not prime");
    if (m < 1) throw error("extension degree must be >= 1");
    long long q = 1;
    for (int i = 0; i < m; ++i) {
        q *= p;
        if (q > 65536) throw error("field order exceeds 2^16");
    }

    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, m);
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    std::vector<int> modulus;
    if (m == 1) {
        int g = smallest_primitive_root(p);
        modulus = {(p - g) % p, 1};
    } else {
        const auto* entry = lookup_conway(p, m);
        if (!entry)
            throw error("no bundled modulus for GF(" + std::to_string(p) + "^" + std::to_string(m) + ")");
        modulus = *entry;
    }
    FieldPtr f(new Field(p, m, std::move(modulus)));
    cache[key] = f;
    return f;
}

Extension::Extension(FieldPtr base, FieldPtr ext) : base_(std::move(base)), ext_(std::move(ext)) {
    const Field& B = *base_;
    const Field& E = *ext_;
    const int q = B.q(), qq = E.q();

    // alpha_q -> alpha_{q^2}^(q+1); additivity of this map is the Conway
    // compatibility property of the bundled moduli, checked exhaustively below.
    embed_.assign(q, 0);
    for (int e = 0; e < q - 1; ++e) embed_[B.alpha_pow(e)] = E.alpha_pow(static_cast<long long>(e) * (q + 1));
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            if (embed_[B.add(felem(a), felem(b))] != E.add(embed_[a], embed_[b]))
                throw error("incompatible moduli: embedding " + B.name() + " -> " + E.name() +
                            " is not additive");

    restrict_.assign(qq, -1);
    for (int a = 0; a < q; ++a) restrict_[embed_[a]] = a;

    frob_.assign(qq, 0);
    for (int x = 1; x < qq; ++x) frob_[x] = E.pow(felem(x), q);

    gamma_ = E.alpha();
    if (in_base(gamma_)) throw error("gamma unexpectedly lies in the base field");
    felem t = E.add(gamma_, frob_[gamma_]);
    if (!in_base(t)) throw error("trace of gamma left the base field");
    gamma0_ = static_cast<felem>(restrict_[t]);

    split_v_.assign(qq, 0);
    split_w_.assign(qq, 0);
    for (int v = 0; v < q; ++v) {
        for (int w = 0; w < q; ++w) {
            felem x = E.add(embed_[v], E.mul(gamma_, embed_[w]));
            split_v_[x] = static_cast<felem>(v);
            split_w_[x] = static_cast<felem>(w);
        }
    }
}

felem Extension::to_base(felem x) const {
    if (restrict_[x] < 0) throw error("element is not in the embedded base field");
    return static_cast<felem>(restrict_[x]);
}

felem Extension::trace(felem x) const {
    felem t = ext_->add(x, frob_[x]);
    return to_base(t);
}

felem Extension::combine(felem v, felem w) const {
    return ext_->add(embed_[v], ext_->mul(gamma_, embed_[w]));
}

ExtensionPtr Extension::get(int p, int m) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, ExtensionPtr> cache;

    FieldPtr base = Field::get(p, m);
    FieldPtr ext = Field::get(p, 2 * m);

    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, m);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    ExtensionPtr e(new Extension(std::move(base), std::move(ext)));
    cache[key] = e;
    return e;
}

std::pair<int, int> factor_prime_power(int q) {
    if (q < 2) throw error(std::to_string(q) + " is not a prime power");
    int p = q;
    for (int d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    int m = 0, x = q;
    while (x % p == 0) {
        x /= p;
        ++m;
    }
    if (x != 1) throw error(std::to_string(q) + " is not a prime power");
    return {p, m};
}

FieldPtr field_of_order(int q) {
    auto [p, m] = factor_prime_power(q);
    return Field::get(p, m);
}

}  // namespace qmds
