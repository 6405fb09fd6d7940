#include "qmds/weights.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>

namespace qmds {

mpz_class WeightDistribution::total() const {
    mpz_class t = 0;
    for (const auto& c : counts) t += c;
    return t;
}

std::vector<int> WeightDistribution::support() const {
    std::vector<int> s;
    for (int w = 0; w < static_cast<int>(counts.size()); ++w)
        if (counts[w] != 0) s.push_back(w);
    return s;
}

int WeightDistribution::min_nonzero() const {
    for (int w = 1; w < static_cast<int>(counts.size()); ++w)
        if (counts[w] != 0) return w;
    return -1;
}

std::uint64_t saturating_pow(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > UINT64_MAX / base) return UINT64_MAX;
        r *= base;
    }
    return r;
}

namespace {

// ---------------------------------------------------------------------------
// Exhaustive enumeration.
//
// Messages (s, u) split into the scalar s of generator row 0 and the
// remaining digits u, visited in reflected base-q Gray order so each step
// adds or subtracts one row.  For each u the whole coset {base + s*row0} is
// histogrammed in one pass over supp(row0): the coordinate c kills its
// contribution at exactly one scalar s, so a small per-scalar zero count
// recovers all q weights at once.
// ---------------------------------------------------------------------------

struct GrayStep {
    int digit;  // -1 when exhausted
    int dir;
    int value;  // digit value after the step
};

struct GrayCounter {
    int nd, radix;
    std::vector<int> a, f, o;

    GrayCounter(int ndigits, int r) : nd(ndigits), radix(r), a(nd, 0), f(nd + 1), o(nd, 1) {
        std::iota(f.begin(), f.end(), 0);
    }
    GrayStep next() {
        int j = f[0];
        f[0] = 0;
        if (j == nd) return {-1, 0, 0};
        int dir = o[j];
        a[j] += dir;
        if (a[j] == 0 || a[j] == radix - 1) {
            o[j] = -o[j];
            f[j] = f[j + 1];
            f[j + 1] = j + 1;
        }
        return {j, dir, a[j]};
    }
};

// Digit values are element indices; stepping a digit from t to t+1 adds
// (elem(t+1) - elem(t)) * row, a delta that varies with t in extension
// fields.  up[t] holds that delta row, down[t] its negation (for t+1 -> t).
struct SparseRow {
    int nnz = 0;
    std::vector<int> cols;
    std::vector<felem> up, down;  // (q-1) * nnz each, transition-major

    const felem* delta(const GrayStep& s) const {
        return s.dir > 0 ? up.data() + std::size_t(s.value - 1) * nnz
                         : down.data() + std::size_t(s.value) * nnz;
    }
};

struct EnumPlan {
    const Field* F = nullptr;
    int q = 0, ncols = 0, pair_n = 0;  // pair_n == 0: Hamming over ncols
    int max_weight = 0;
    std::vector<Vec> rows;          // all generator rows, dense
    std::vector<SparseRow> rest;    // rows 1.. as Gray digits
    // row 0 sweep data
    std::vector<int> s0_cols;       // Hamming: support columns
    std::vector<felem> s0_val;
    std::vector<felem> s0_zero_s;   // [t*q + cv] -> scalar s with cv + s*val = 0
    std::vector<int> s0_pos;        // pair: support positions
    std::vector<felem> s0_a, s0_b;  // pair row halves on support
    std::vector<felem> s0_sel_inv;  // inv(a) if a != 0 else inv(b)
    std::vector<std::uint8_t> s0_use_a;
};

EnumPlan build_plan(const Field& F, int ncols, int pair_n, const std::vector<Vec>& rows) {
    EnumPlan P;
    P.F = &F;
    P.q = F.q();
    P.ncols = ncols;
    P.pair_n = pair_n;
    P.max_weight = pair_n > 0 ? pair_n : ncols;
    P.rows = rows;

    for (std::size_t j = 1; j < rows.size(); ++j) {
        SparseRow r;
        for (int c = 0; c < ncols; ++c)
            if (rows[j][c] != 0) r.cols.push_back(c);
        r.nnz = static_cast<int>(r.cols.size());
        r.up.resize(std::size_t(P.q - 1) * r.nnz);
        r.down.resize(std::size_t(P.q - 1) * r.nnz);
        for (int t = 0; t + 1 < P.q; ++t) {
            felem delta = F.sub(felem(t + 1), felem(t));
            for (int i = 0; i < r.nnz; ++i) {
                felem v = F.mul(delta, rows[j][r.cols[i]]);
                r.up[std::size_t(t) * r.nnz + i] = v;
                r.down[std::size_t(t) * r.nnz + i] = F.neg(v);
            }
        }
        P.rest.push_back(std::move(r));
    }

    if (!rows.empty()) {
        const Vec& g0 = rows[0];
        if (pair_n == 0) {
            for (int c = 0; c < ncols; ++c) {
                if (g0[c] == 0) continue;
                P.s0_cols.push_back(c);
                P.s0_val.push_back(g0[c]);
            }
            P.s0_zero_s.resize(P.s0_cols.size() * P.q);
            for (std::size_t t = 0; t < P.s0_cols.size(); ++t) {
                felem iv = F.inv(P.s0_val[t]);
                for (int cv = 0; cv < P.q; ++cv)
                    P.s0_zero_s[t * P.q + cv] = F.mul(F.neg(felem(cv)), iv);
            }
        } else {
            for (int i = 0; i < pair_n; ++i) {
                felem a = g0[i], b = g0[pair_n + i];
                if (a == 0 && b == 0) continue;
                P.s0_pos.push_back(i);
                P.s0_a.push_back(a);
                P.s0_b.push_back(b);
                P.s0_use_a.push_back(a != 0);
                P.s0_sel_inv.push_back(a != 0 ? F.inv(a) : F.inv(b));
            }
        }
    }
    return P;
}

// Membership filter for min-weight-outside enumeration.
struct MemberFilter {
    const Mat* gen = nullptr;          // RREF generator of the excluded subcode
    std::vector<int> pivots;
    std::atomic<int>* best = nullptr;  // shared upper bound on the answer
};

bool reduces_to_zero_buf(const Mat& gen, const std::vector<int>& pivots, std::vector<felem>& w) {
    const Field& F = *gen.field;
    for (int i = 0; i < gen.rows; ++i) {
        felem c = w[pivots[i]];
        if (c == 0) continue;
        for (int j = 0; j < gen.cols; ++j) w[j] = F.sub(w[j], F.mul(c, gen(i, j)));
    }
    return std::all_of(w.begin(), w.end(), [](felem x) { return x == 0; });
}

template <bool kPair, bool kTable>
struct ChunkRunner {
    const EnumPlan& P;
    const Field& F;
    const felem* tab;
    int q, n;
    std::vector<felem> cur;
    std::vector<std::uint8_t> nz;  // pair mode: per position count in {0,1,2}
    int W = 0;
    std::vector<std::uint32_t> zs;
    std::vector<felem> scratch;

    ChunkRunner(const EnumPlan& plan, std::vector<felem> base)
        : P(plan),
          F(*plan.F),
          tab(plan.F->add_table().empty() ? nullptr : plan.F->add_table().data()),
          q(plan.q),
          n(plan.pair_n),
          cur(std::move(base)),
          zs(plan.q),
          scratch(plan.ncols) {
        if constexpr (kPair) {
            nz.assign(n, 0);
            for (int i = 0; i < n; ++i) {
                nz[i] = std::uint8_t((cur[i] != 0) + (cur[n + i] != 0));
                W += nz[i] > 0;
            }
        } else {
            for (felem x : cur) W += x != 0;
        }
    }

    felem addf(felem a, felem b) const {
        if constexpr (kTable)
            return tab[std::size_t(a) * q + b];
        else
            return F.add(a, b);
    }

    void apply_row(const SparseRow& r, const GrayStep& step) {
        const felem* vals = r.delta(step);
        for (std::size_t t = 0; t < r.cols.size(); ++t) {
            int c = r.cols[t];
            felem old = cur[c], nw = addf(old, vals[t]);
            if constexpr (kPair) {
                int i = c < n ? c : c - n;
                int before = nz[i] > 0;
                nz[i] = std::uint8_t(nz[i] + (nw != 0) - (old != 0));
                W += (nz[i] > 0) - before;
            } else {
                W += (nw != 0) - (old != 0);
            }
            cur[c] = nw;
        }
    }

    // weights of cur + s*row0 for every scalar s, in one pass over supp(row0)
    void sweep(std::uint64_t* hist, const MemberFilter* member) {
        std::fill(zs.begin(), zs.end(), 0);
        int cnt_in = 0, s0;
        if constexpr (kPair) {
            s0 = static_cast<int>(P.s0_pos.size());
            for (int t = 0; t < s0; ++t) {
                int i = P.s0_pos[t];
                felem v = cur[i], w = cur[n + i];
                cnt_in += nz[i] > 0;
                if (P.s0_use_a[t]) {
                    felem s = F.mul(F.neg(v), P.s0_sel_inv[t]);
                    if (addf(w, F.mul(s, P.s0_b[t])) == 0) ++zs[s];
                } else {
                    if (v == 0) ++zs[F.mul(F.neg(w), P.s0_sel_inv[t])];
                }
            }
        } else {
            s0 = static_cast<int>(P.s0_cols.size());
            for (int t = 0; t < s0; ++t) {
                felem cv = cur[P.s0_cols[t]];
                cnt_in += cv != 0;
                ++zs[P.s0_zero_s[std::size_t(t) * q + cv]];
            }
        }
        int base_w = W - cnt_in + s0;
        if (member) {
            for (int s = 0; s < q; ++s) {
                int w = base_w - static_cast<int>(zs[s]);
                ++hist[w];
                if (w != 0 && w < member->best->load(std::memory_order_relaxed)) {
                    materialize(felem(s));
                    if (!reduces_to_zero_buf(*member->gen, member->pivots, scratch)) {
                        int prev = member->best->load(std::memory_order_relaxed);
                        while (w < prev &&
                               !member->best->compare_exchange_weak(prev, w, std::memory_order_relaxed)) {
                        }
                    }
                }
            }
        } else {
            for (int s = 0; s < q; ++s) ++hist[base_w - static_cast<int>(zs[s])];
        }
    }

    void materialize(felem s) {
        scratch = cur;
        if constexpr (kPair) {
            for (std::size_t t = 0; t < P.s0_pos.size(); ++t) {
                int i = P.s0_pos[t];
                scratch[i] = addf(scratch[i], F.mul(s, P.s0_a[t]));
                scratch[n + i] = addf(scratch[n + i], F.mul(s, P.s0_b[t]));
            }
        } else {
            for (std::size_t t = 0; t < P.s0_cols.size(); ++t) {
                int c = P.s0_cols[t];
                scratch[c] = addf(scratch[c], F.mul(s, P.s0_val[t]));
            }
        }
    }

    // Gray-enumerate the given number of low rest digits; hist has max_weight+1 slots.
    void run(int gray_digits, std::uint64_t* hist, const MemberFilter* member) {
        sweep(hist, member);
        GrayCounter g(gray_digits, q);
        for (;;) {
            GrayStep step = g.next();
            if (step.digit < 0) break;
            apply_row(P.rest[step.digit], step);
            sweep(hist, member);
        }
    }
};

template <bool kPair, bool kTable>
void run_enumeration_t(const EnumPlan& P, int workers, std::vector<std::uint64_t>& hist,
                       const MemberFilter* member) {
    const int r = static_cast<int>(P.rows.size());
    const int gray_count = r - 1;

    // fix the highest Gray digits to carve disjoint chunks
    int t = 0;
    std::uint64_t nchunks = 1;
    if (workers > 1) {
        while (t < gray_count && nchunks < std::uint64_t(4) * workers) {
            ++t;
            nchunks *= P.q;
        }
    }

    auto chunk_base = [&](std::uint64_t chunk) {
        std::vector<felem> base(P.ncols, 0);
        for (int d = 0; d < t; ++d) {
            felem scalar = felem(chunk % P.q);
            chunk /= P.q;
            int row = 1 + (gray_count - t) + d;  // highest rest rows
            if (scalar != 0)
                for (int c = 0; c < P.ncols; ++c)
                    base[c] = P.F->add(base[c], P.F->mul(scalar, P.rows[row][c]));
        }
        return base;
    };

    if (nchunks == 1) {
        ChunkRunner<kPair, kTable> runner(P, std::vector<felem>(P.ncols, 0));
        runner.run(gray_count, hist.data(), member);
        return;
    }

    std::atomic<std::uint64_t> next_chunk{0};
    std::mutex merge_mu;
    auto work = [&] {
        std::vector<std::uint64_t> local(hist.size(), 0);
        for (;;) {
            std::uint64_t c = next_chunk.fetch_add(1);
            if (c >= nchunks) break;
            ChunkRunner<kPair, kTable> runner(P, chunk_base(c));
            runner.run(gray_count - t, local.data(), member);
        }
        std::lock_guard<std::mutex> lock(merge_mu);
        for (std::size_t i = 0; i < hist.size(); ++i) hist[i] += local[i];
    };

    std::vector<std::thread> pool;
    int nthreads = static_cast<int>(std::min<std::uint64_t>(workers, nchunks));
    pool.reserve(nthreads - 1);
    for (int i = 1; i < nthreads; ++i) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
}

int resolve_workers(int w) {
    if (w > 0) return w;
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

std::vector<std::uint64_t> weight_histogram(const Field& F, int ncols, int pair_n,
                                            const std::vector<Vec>& rows, const EnumOptions& opt,
                                            const MemberFilter* member = nullptr) {
    const int r = static_cast<int>(rows.size());
    std::uint64_t total = saturating_pow(F.q(), r);
    if (total > opt.budget)
        throw budget_error("enumeration of " + std::to_string(F.q()) + "^" + std::to_string(r) +
                           " codewords exceeds the budget of " + std::to_string(opt.budget));

    std::vector<std::uint64_t> hist((pair_n > 0 ? pair_n : ncols) + 1, 0);
    if (r == 0) {
        hist[0] = 1;
        return hist;
    }
    EnumPlan P = build_plan(F, ncols, pair_n, rows);
    int workers = resolve_workers(opt.workers);
    bool table = !F.add_table().empty();
    if (pair_n > 0) {
        if (table)
            run_enumeration_t<true, true>(P, workers, hist, member);
        else
            run_enumeration_t<true, false>(P, workers, hist, member);
    } else {
        if (table)
            run_enumeration_t<false, true>(P, workers, hist, member);
        else
            run_enumeration_t<false, false>(P, workers, hist, member);
    }
    return hist;
}

std::vector<Vec> generator_rows(const Mat& gen) {
    std::vector<Vec> rows;
    rows.reserve(gen.rows);
    for (int i = 0; i < gen.rows; ++i) rows.push_back(gen.row(i));
    return rows;
}

mpz_class mpz_from_u64(std::uint64_t v) {
    mpz_class r;
    mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return r;
}

WeightDistribution to_distribution(const std::vector<std::uint64_t>& hist, WeightKind kind) {
    WeightDistribution d;
    d.kind = kind;
    d.counts.reserve(hist.size());
    for (std::uint64_t c : hist) d.counts.push_back(mpz_from_u64(c));
    return d;
}

}  // namespace

WeightDistribution weight_distribution(const LinearCode& c, const EnumOptions& opt) {
    auto hist = weight_histogram(*c.field(), c.n(), 0, generator_rows(c.generator()), opt);
    return to_distribution(hist, WeightKind::hamming);
}

WeightDistribution weight_distribution(const PairCode& c, const EnumOptions& opt) {
    auto hist = weight_histogram(*c.field(), 2 * c.n(), c.n(), generator_rows(c.generator()), opt);
    return to_distribution(hist, WeightKind::symplectic);
}

namespace {

int min_nonzero_hist(const std::vector<std::uint64_t>& hist) {
    for (std::size_t w = 1; w < hist.size(); ++w)
        if (hist[w] > 0) return static_cast<int>(w);
    return -1;
}

}  // namespace

int min_distance(const LinearCode& c, const EnumOptions& opt) {
    if (c.k() == 0) throw error("the zero code has no minimum distance");
    auto hist = weight_histogram(*c.field(), c.n(), 0, generator_rows(c.generator()), opt);
    return min_nonzero_hist(hist);
}

int min_distance(const PairCode& c, const EnumOptions& opt) {
    if (c.dim() == 0) throw error("the zero code has no minimum distance");
    auto hist = weight_histogram(*c.field(), 2 * c.n(), c.n(), generator_rows(c.generator()), opt);
    return min_nonzero_hist(hist);
}

WeightDistribution macwilliams_transform(const WeightDistribution& w, int n, int k, int q) {
    if (w.kind != WeightKind::hamming) throw error("MacWilliams transform needs a Hamming distribution");
    if (static_cast<int>(w.counts.size()) != n + 1)
        throw error("distribution length does not match n");

    mpz_class qk;
    mpz_ui_pow_ui(qk.get_mpz_t(), q, k);
    if (w.total() != qk) throw error("inconsistent distribution: counts do not sum to q^k");

    std::vector<std::vector<mpz_class>> binom(n + 1, std::vector<mpz_class>(n + 1, 0));
    for (int i = 0; i <= n; ++i) {
        binom[i][0] = 1;
        for (int j = 1; j <= i; ++j)
            binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : mpz_class(0));
    }
    std::vector<mpz_class> pw(n + 1);
    pw[0] = 1;
    for (int j = 1; j <= n; ++j) pw[j] = pw[j - 1] * (q - 1);

    WeightDistribution out;
    out.kind = WeightKind::hamming;
    out.counts.assign(n + 1, mpz_class(0));
    for (int j = 0; j <= n; ++j) {
        mpz_class acc = 0;
        for (int i = 0; i <= n; ++i) {
            if (w.counts[i] == 0) continue;
            mpz_class kraw = 0;
            for (int h = 0; h <= j; ++h) {
                if (h > i || j - h > n - i) continue;
                mpz_class term = binom[i][h] * binom[n - i][j - h] * pw[j - h];
                if (h & 1)
                    kraw -= term;
                else
                    kraw += term;
            }
            acc += w.counts[i] * kraw;
        }
        if (acc < 0 || !mpz_divisible_p(acc.get_mpz_t(), qk.get_mpz_t()))
            throw error("inconsistent distribution: transform output is not a nonnegative integer");
        out.counts[j] = acc / qk;
    }

    mpz_class qnk;
    mpz_ui_pow_ui(qnk.get_mpz_t(), q, n - k);
    if (out.total() != qnk) throw error("inconsistent distribution: dual counts do not sum to q^(n-k)");
    return out;
}

ExcludedMinWeight min_weight_outside(const PairCode& space, const PairCode& excluded,
                                     const EnumOptions& opt) {
    if (space.field() != excluded.field() || space.n() != excluded.n())
        throw error("space and excluded subcode do not match");
    if (!space.contains(excluded)) throw error("excluded code is not a subcode of the space");
    if (excluded.dim() >= space.dim()) throw error("no words outside the excluded subcode");

    std::atomic<int> best{space.n() + 1};
    MemberFilter filter;
    filter.gen = &excluded.generator();
    for (int i = 0; i < excluded.dim(); ++i) {
        int c = 0;
        while (c < 2 * excluded.n() && excluded.generator()(i, c) == 0) ++c;
        filter.pivots.push_back(c);
    }
    filter.best = &best;

    auto hist = weight_histogram(*space.field(), 2 * space.n(), space.n(),
                                 generator_rows(space.generator()), opt, &filter);
    ExcludedMinWeight r;
    r.d = best.load();
    r.pure = (r.d == min_nonzero_hist(hist));
    return r;
}

// ---------------------------------------------------------------------------
// Lexicographic witness scan and sampled support.
// ---------------------------------------------------------------------------

namespace {

struct LexScan {
    const Field& F;
    int q, k, n;
    std::vector<std::vector<int>> cols;                 // per row: support columns
    std::vector<std::vector<std::vector<felem>>> vals;  // per row, per delta scalar: values
    std::vector<felem> inc_delta;                       // digit value t -> t+1
    felem wrap_delta;                                   // digit value q-1 -> 0
    std::vector<int> digits;
    std::vector<felem> cur;
    int W = 0;

    explicit LexScan(const LinearCode& c)
        : F(*c.field()), q(F.q()), k(c.k()), n(c.n()), digits(k, 0), cur(n, 0) {
        cols.resize(k);
        vals.resize(k);
        for (int j = 0; j < k; ++j) {
            for (int col = 0; col < n; ++col)
                if (c.generator()(j, col) != 0) cols[j].push_back(col);
            vals[j].assign(q, {});
            for (int s = 1; s < q; ++s) {
                vals[j][s].reserve(cols[j].size());
                for (int col : cols[j]) vals[j][s].push_back(F.mul(felem(s), c.generator()(j, col)));
            }
        }
        inc_delta.resize(q);
        for (int t = 0; t + 1 < q; ++t) inc_delta[t] = F.sub(felem(t + 1), felem(t));
        wrap_delta = F.neg(felem(q - 1));
    }

    void apply(int row, felem delta) {
        const auto& v = vals[row][delta];
        for (std::size_t t = 0; t < cols[row].size(); ++t) {
            int c = cols[row][t];
            felem old = cur[c], nw = F.add(old, v[t]);
            W += (nw != 0) - (old != 0);
            cur[c] = nw;
        }
    }

    // advance to the next message in lexicographic order; false when done
    bool next() {
        int j = k - 1;
        while (j >= 0 && digits[j] == q - 1) {
            apply(j, wrap_delta);
            digits[j] = 0;
            --j;
        }
        if (j < 0) return false;
        apply(j, inc_delta[digits[j]]);
        ++digits[j];
        return true;
    }
};

std::uint64_t message_count(const LinearCode& c) {
    return saturating_pow(c.field()->q(), c.k());
}

std::vector<int> sampled_weights(const LinearCode& c, const EnumOptions& opt, int want_r, Vec* witness) {
    const Field& F = *c.field();
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> pick(0, F.q() - 1);
    std::vector<bool> seen(c.n() + 1, false);
    seen[0] = true;  // the zero word is always a codeword
    Vec msg(c.field(), c.k());
    for (std::uint64_t s = 0; s < opt.samples; ++s) {
        for (int j = 0; j < c.k(); ++j) msg[j] = felem(pick(rng));
        Vec word = c.encode(msg);
        int w = word.hamming_weight();
        if (want_r >= 0 && w == want_r) {
            *witness = word;
            return {};
        }
        seen[w] = true;
    }
    if (want_r >= 0) return {};
    std::vector<int> out;
    for (int w = 0; w <= c.n(); ++w)
        if (seen[w]) out.push_back(w);
    return out;
}

}  // namespace

WeightSupport weight_support(const LinearCode& c, const EnumOptions& opt) {
    WeightSupport r;
    const int q = c.field()->q();
    if (saturating_pow(q, c.k()) <= opt.budget) {
        r.weights = weight_distribution(c, opt).support();
        r.exact = true;
        r.method = "enumeration";
    } else if (saturating_pow(q, c.n() - c.k()) <= opt.budget) {
        WeightDistribution dual = weight_distribution(dual_euclidean(c), opt);
        r.weights = macwilliams_transform(dual, c.n(), c.n() - c.k(), q).support();
        r.exact = true;
        r.method = "dual-macwilliams";
    } else {
        r.weights = sampled_weights(c, opt, -1, nullptr);
        r.exact = false;
        r.method = "sampled";
    }
    return r;
}

Vec weight_witness(const LinearCode& c, int r, const EnumOptions& opt) {
    if (r < 1 || r > c.n())
        throw error("witness weight must be in [1, n]; weight-0 words do not shorten anything");
    if (message_count(c) <= opt.budget) {
        if (c.k() == 0) throw error("the zero code has no weight-" + std::to_string(r) + " codeword");
        LexScan scan(c);
        do {
            if (scan.W == r) return Vec(c.field(), scan.cur);
        } while (scan.next());
        throw error("no codeword of weight " + std::to_string(r));
    }
    Vec witness;
    sampled_weights(c, opt, r, &witness);
    if (witness.field == nullptr)
        throw budget_error("no weight-" + std::to_string(r) +
                           " codeword found within the sampling budget");
    return witness;
}

}  // namespace qmds
