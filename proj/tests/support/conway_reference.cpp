#include "conway_reference.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>

namespace qmds_test {
namespace {

using Poly = std::vector<int>;  // coefficient c[i] of x^i, values in [0,p)

std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> fs;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

// a*b mod f over GF(p), f monic of degree m, deg a, deg b < m
Poly mulmod(const Poly& a, const Poly& b, const Poly& f, int p) {
    int m = static_cast<int>(f.size()) - 1;
    std::vector<int> prod(2 * m - 1, 0);
    for (int i = 0; i < m; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    for (int d = 2 * m - 2; d >= m; --d) {
        int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < m; ++i) {
            // x^d = x^(d-m) * (x^m) = x^(d-m) * (-f_0 - f_1 x - ...)
            prod[d - m + i] = ((prod[d - m + i] - c * f[i]) % p + p * p) % p;
        }
    }
    prod.resize(m);
    return prod;
}

Poly powmod(Poly base, std::int64_t e, const Poly& f, int p) {
    int m = static_cast<int>(f.size()) - 1;
    Poly result(m, 0);
    result[0] = 1;
    while (e > 0) {
        if (e & 1) result = mulmod(result, base, f, p);
        base = mulmod(base, base, f, p);
        e >>= 1;
    }
    return result;
}

bool is_one(const Poly& a) {
    if (a.empty() || a[0] != 1) return false;
    for (std::size_t i = 1; i < a.size(); ++i)
        if (a[i] != 0) return false;
    return true;
}

bool is_zero(const Poly& a) {
    for (int c : a)
        if (c != 0) return false;
    return true;
}

// x generates the full multiplicative group of F_p[x]/(f).  This implies f is
// irreducible: a reducible quotient ring has strictly fewer than p^m - 1 units.
bool x_is_primitive(const Poly& f, int p, std::int64_t q) {
    int m = static_cast<int>(f.size()) - 1;
    Poly x(m, 0);
    if (m == 1) {
        x[0] = ((-f[0]) % p + p) % p;  // residue of x is -f0
    } else {
        x[1] = 1;
    }
    if (!is_one(powmod(x, q - 1, f, p))) return false;
    for (std::int64_t r : prime_factors(q - 1))
        if (is_one(powmod(x, (q - 1) / r, f, p))) return false;
    return true;
}

// g(y) mod f where y is given as a residue mod f (Horner).
Poly eval_poly_at(const Poly& g, const Poly& y, const Poly& f, int p) {
    int m = static_cast<int>(f.size()) - 1;
    Poly acc(m, 0);
    for (int i = static_cast<int>(g.size()) - 1; i >= 0; --i) {
        acc = mulmod(acc, y, f, p);
        acc[0] = (acc[0] + g[i]) % p;
    }
    return acc;
}

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

int smallest_primitive_root(int p) {
    if (p == 2) return 1;
    auto fs = prime_factors(p - 1);
    for (int g = 2; g < p; ++g) {
        bool ok = true;
        for (std::int64_t r : fs) {
            // g^((p-1)/r) mod p
            std::int64_t e = (p - 1) / r, base = g, acc = 1;
            while (e > 0) {
                if (e & 1) acc = acc * base % p;
                base = base * base % p;
                e >>= 1;
            }
            if (acc == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root found; p not prime?");
}

std::vector<int> conway_polynomial(int p, int m) {
    static std::map<std::pair<int, int>, Poly> cache;
    auto key = std::make_pair(p, m);
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    if (m == 1) {
        int g = smallest_primitive_root(p);
        Poly f = {((-g) % p + p) % p, 1};  // x - g
        cache[key] = f;
        return f;
    }

    std::int64_t q = ipow(p, m);
    std::vector<int> divisors;
    for (int d = 1; d < m; ++d)
        if (m % d == 0) divisors.push_back(d);
    std::vector<Poly> sub;
    sub.reserve(divisors.size());
    for (int d : divisors) sub.push_back(conway_polynomial(p, d));

    // word w = (w_{m-1}, ..., w_0), candidate f_i = (-1)^(m-i) w_i mod p
    std::vector<int> w(m, 0);
    for (;;) {
        Poly f(m + 1, 0);
        f[m] = 1;
        for (int i = 0; i < m; ++i) {
            int sign = ((m - i) % 2 == 0) ? 1 : -1;
            f[i] = ((sign * w[m - 1 - i]) % p + p) % p;
        }
        if (x_is_primitive(f, p, q)) {
            bool compatible = true;
            for (std::size_t s = 0; s < divisors.size(); ++s) {
                int d = divisors[s];
                std::int64_t e = (q - 1) / (ipow(p, d) - 1);
                Poly xm(m, 0);
                xm[1] = 1;
                Poly y = powmod(xm, e, f, p);
                if (!is_zero(eval_poly_at(sub[s], y, f, p))) {
                    compatible = false;
                    break;
                }
            }
            if (compatible) {
                cache[key] = f;
                return f;
            }
        }
        // next word, lexicographic with w[0] most significant
        int i = m - 1;
        while (i >= 0 && w[i] == p - 1) w[i--] = 0;
        if (i < 0) throw std::logic_error("conway search exhausted");
        ++w[i];
    }
}

}  // namespace qmds_test
