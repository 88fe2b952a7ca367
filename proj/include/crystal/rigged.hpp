#pragma once
// Type A rigged configurations and the columnwise bijection with LR tableaux and paths.

#include <limits>

#include "rmatrix.hpp"

namespace crystal {

struct RString {
    int len = 0;
    int rig = 0;
    auto operator<=>(const RString&) const = default;
};

struct RC {
    std::vector<std::vector<RString>> lv;  // lv[k-1] holds the strings of level k

    auto operator<=>(const RC&) const = default;

    int levels() const { return static_cast<int>(lv.size()); }
    std::vector<RString>& level(int k) {
        if (static_cast<int>(lv.size()) < k) lv.resize(k);
        return lv[k - 1];
    }
    const std::vector<RString>& level(int k) const {
        static const std::vector<RString> none;
        return k >= 1 && k <= levels() ? lv[k - 1] : none;
    }
    Partition part(int k) const {
        Partition p;
        for (auto& s : level(k)) p.push_back(s.len);
        std::sort(p.rbegin(), p.rend());
        return p;
    }
    std::vector<Partition> parts() const {
        std::vector<Partition> v;
        for (int k = 1; k <= levels(); ++k) v.push_back(part(k));
        return v;
    }
    RC& canon() {
        for (auto& l : lv) std::sort(l.begin(), l.end(), [](auto& a, auto& b) { return b < a; });
        while (!lv.empty() && lv.back().empty()) lv.pop_back();
        return *this;
    }
    bool empty() const {
        for (auto& l : lv)
            if (!l.empty()) return false;
        return true;
    }
};

inline Partition xi(const Rects& R, int k) {
    Partition p;
    for (auto& x : R)
        if (x.r == k && x.s > 0) p.push_back(x.s);
    std::sort(p.rbegin(), p.rend());
    return p;
}

inline int vacancy(const std::vector<Partition>& nu, const Rects& R, int k, int i) {
    auto Q = [&](int lev) { return lev >= 1 && lev <= static_cast<int>(nu.size()) ? Qi(nu[lev - 1], i) : 0; };
    return Q(k - 1) - 2 * Q(k) + Q(k + 1) + Qi(xi(R, k), i);
}

inline int vacancy(const RC& rc, const Rects& R, int k, int i) { return vacancy(rc.parts(), R, k, i); }

// cc(nu) = sum over levels and columns of alpha (alpha - alpha')
inline int cocharge_nu(const std::vector<Partition>& nu) {
    int c = 0;
    for (size_t k = 0; k < nu.size(); ++k) {
        Partition a = transpose(nu[k]);
        Partition b = k + 1 < nu.size() ? transpose(nu[k + 1]) : Partition{};
        for (size_t i = 0; i < a.size(); ++i) c += a[i] * (a[i] - (i < b.size() ? b[i] : 0));
    }
    return c;
}

inline int cocharge(const RC& rc) {
    int c = cocharge_nu(rc.parts());
    for (auto& l : rc.lv)
        for (auto& s : l) c += s.rig;
    return c;
}

inline RC comp(const RC& rc, const Rects& R) {
    RC out = rc;
    auto nu = rc.parts();
    for (int k = 1; k <= rc.levels(); ++k)
        for (auto& s : out.level(k)) s.rig = vacancy(nu, R, k, s.len) - s.rig;
    return out.canon();
}

inline int max_relevant_len(const std::vector<Partition>& nu, const Rects& R) {
    int m = 1;
    for (auto& p : nu)
        for (int x : p) m = std::max(m, x);
    for (auto& x : R) m = std::max(m, x.s);
    return m + 1;
}

// Vacancies nonnegative for all i and riggings within [0, P].
inline bool is_admissible(const RC& rc, const Rects& R) {
    auto nu = rc.parts();
    int top = max_relevant_len(nu, R);
    int K = static_cast<int>(nu.size());
    for (int k = 1; k <= K; ++k) {
        for (int i = 1; i <= top; ++i)
            if (vacancy(nu, R, k, i) < 0) return false;
        for (auto& s : rc.level(k)) {
            int P = vacancy(nu, R, k, s.len);
            if (s.rig < 0 || s.rig > P) return false;
        }
    }
    return true;
}

inline std::vector<int> config_sizes(const Partition& lambda, const Rects& R, int K) {
    std::vector<int> d;
    for (int k = 1; k <= K; ++k) {
        int v = 0;
        for (int j = 0; j < k && j < static_cast<int>(lambda.size()); ++j) v -= lambda[j];
        for (auto& x : R) v += x.s * std::min(x.r, k);
        d.push_back(v);
    }
    return d;
}

// ---------------- LR tableaux ----------------

struct Blocks {
    Rects R;
    std::vector<int> letter0;  // letters of block j are letter0[j]+1 .. letter0[j]+r_j
    std::vector<int> label0;   // relabelled letters of block j are label0[j]+1 .. label0[j]+r_j s_j
    explicit Blocks(const Rects& rs) : R(rs) {
        int a = 0, b = 0;
        for (auto& x : rs) {
            letter0.push_back(a);
            label0.push_back(b);
            a += x.r;
            b += x.r * x.s;
        }
        letter_count = a;
        label_count = b;
    }
    int letter_count = 0;
    int label_count = 0;
    int block_of_letter(int x) const {
        for (size_t j = 0; j < R.size(); ++j)
            if (x > letter0[j] && x <= letter0[j] + R[j].r) return static_cast<int>(j);
        throw std::out_of_range("letter outside content");
    }
    int block_of_label(int x) const {
        for (size_t j = 0; j < R.size(); ++j)
            if (x > label0[j] && x <= label0[j] + R[j].size()) return static_cast<int>(j);
        throw std::out_of_range("label outside range");
    }
    // (column c', row a) of label x in Z_j
    std::pair<int, int> z_pos(int x) const {
        int j = block_of_label(x);
        int q = x - label0[j] - 1;
        return {q / R[j].r + 1, q % R[j].r + 1};
    }
};

inline bool is_lr_tableau(const Tableau& t, const Rects& R) {
    if (!t.is_semistandard()) return false;
    Blocks B(R);
    Word w = t.reading_word();
    std::vector<int> cnt(B.letter_count + 1, 0);
    for (int x : w) {
        if (x < 1 || x > B.letter_count) return false;
        ++cnt[x];
    }
    for (size_t j = 0; j < R.size(); ++j)
        for (int a = 1; a <= R[j].r; ++a)
            if (cnt[B.letter0[j] + a] != R[j].s) return false;
    for (size_t j = 0; j < R.size(); ++j)
        for (int a = 1; a < R[j].r; ++a)
            if (eps_word(B.letter0[j] + a, w) != 0) return false;
    return true;
}

// Brute force: semistandard fillings of lambda with content gamma(R) that are balanced in each block.
inline std::vector<Tableau> enumerate_lr(const Partition& lambda, const Rects& R) {
    Blocks B(R);
    std::vector<int> target(B.letter_count + 1, 0);
    for (size_t j = 0; j < R.size(); ++j)
        for (int a = 1; a <= R[j].r; ++a) target[B.letter0[j] + a] = R[j].s;
    std::vector<Tableau> out;
    if (psize(lambda) != psize(Partition(target.begin() + 1, target.end()))) return out;
    Tableau t;
    for (int len : lambda) t.rows.emplace_back(len, 0);
    std::vector<std::pair<int, int>> cells;
    for (size_t r = 0; r < lambda.size(); ++r)
        for (int c = 0; c < lambda[r]; ++c) cells.emplace_back(static_cast<int>(r), c);
    std::vector<int> cnt(B.letter_count + 1, 0);
    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == cells.size()) {
            if (is_lr_tableau(t, R)) out.push_back(t);
            return;
        }
        auto [r, c] = cells[k];
        int lo = 1;
        if (c > 0) lo = std::max(lo, t.rows[r][c - 1]);
        if (r > 0) lo = std::max(lo, t.rows[r - 1][c] + 1);
        for (int x = lo; x <= B.letter_count; ++x) {
            if (cnt[x] >= target[x]) continue;
            t.rows[r][c] = x;
            ++cnt[x];
            rec(k + 1);
            --cnt[x];
        }
    };
    rec(0);
    return out;
}

// ---------------- the columnwise bijection ----------------

constexpr int kInfinity = std::numeric_limits<int>::max();

struct TraceStep {
    int x = 0;
    int block = 0;
    int c = 0;           // column of x in T
    int cprime = 0;      // column of x in Z_j
    std::vector<int> ell;  // ell[k - c'] for c' <= k < c
    RC rc;               // (nu, J)_(x)
    Rects Rt;            // rectangles used for the vacancies of (nu, J)_(x), already transposed
};

// R_(x) transposed, where x sits at (c', a) of Z_j.
inline Rects partial_rects_t(const Rects& R, int j, int cprime, int a) {
    Rects out;
    for (int k = 0; k < j; ++k) out.push_back(R[k].transposed());
    const Rect& z = R[j];
    if (a > 0) out.push_back({cprime, a});
    if (cprime - 1 > 0 && z.r - a > 0) out.push_back({cprime - 1, z.r - a});
    return out;
}

inline Tableau relabel_lr(const Tableau& t, const Rects& R) {
    Blocks B(R);
    Tableau T = t;
    std::vector<int> occ(B.letter_count + 1, 0);
    int ncol = t.num_cols();
    for (int c = 0; c < ncol; ++c)
        for (size_t r = 0; r < t.rows.size(); ++r) {
            if (static_cast<int>(t.rows[r].size()) <= c) continue;
            int x = t.rows[r][c];
            int j = B.block_of_letter(x);
            int a = x - B.letter0[j];
            int i = ++occ[x];
            T.rows[r][c] = B.label0[j] + (i - 1) * R[j].r + a;
        }
    return T;
}

inline RC phi_bar_lr(const Tableau& t, const Rects& R, std::vector<TraceStep>* trace = nullptr) {
    if (!is_lr_tableau(t, R)) throw std::invalid_argument("not an LR tableau for the given rectangles");
    Blocks B(R);
    Tableau T = relabel_lr(t, R);
    int M = T.size();
    std::vector<int> colof(M + 1, 0);
    for (size_t r = 0; r < T.rows.size(); ++r)
        for (size_t c = 0; c < T.rows[r].size(); ++c) colof[T.rows[r][c]] = static_cast<int>(c) + 1;
    RC rc;
    Rects prev;
    for (int x = 1; x <= M; ++x) {
        int j = B.block_of_label(x);
        auto [cp, a] = B.z_pos(x);
        int c = colof[x];
        if (c < cp) throw std::invalid_argument("letter placed left of its rectangle column");
        Rects cur = partial_rects_t(R, j, cp, a);
        auto nu_prev = rc.parts();
        std::vector<int> ell(c - cp, 0);
        std::vector<int> chosen(c - cp, -1);  // index in level, -1 means a new string
        int bound = kInfinity;
        for (int k = c - 1; k >= cp; --k) {
            int best = 0, bi = -1;
            auto& L = rc.level(k);
            for (size_t s = 0; s < L.size(); ++s) {
                int P = vacancy(nu_prev, prev, k, L[s].len);
                if (L[s].rig == P && L[s].len <= bound && L[s].len > best) {
                    best = L[s].len;
                    bi = static_cast<int>(s);
                }
            }
            ell[k - cp] = best;
            chosen[k - cp] = bi;
            bound = best;
        }
        for (int k = cp; k < c; ++k) {
            auto& L = rc.level(k);
            int bi = chosen[k - cp];
            if (bi < 0) {
                L.push_back({1, 0});
                chosen[k - cp] = static_cast<int>(L.size()) - 1;
            } else {
                ++L[bi].len;
            }
        }
        auto nu_new = rc.parts();
        for (int k = cp; k < c; ++k) {
            auto& s = rc.level(k)[chosen[k - cp]];
            s.rig = vacancy(nu_new, cur, k, s.len);
        }
        rc.canon();
        if (!is_admissible(rc, cur)) throw std::logic_error("intermediate configuration lost admissibility");
        prev = cur;
        if (trace) trace->push_back({x, j, c, cp, ell, rc, cur});
    }
    return rc;
}

// Inverse: rebuild the LR tableau of shape lambda from an element of RC(lambda^t, R^t).
inline Tableau phi_bar_lr_inverse(const RC& rc0, const Rects& R, const Partition& lambda) {
    Blocks B(R);
    int M = B.label_count;
    if (psize(lambda) != M) throw std::invalid_argument("shape size does not match rectangles");
    RC rc = rc0;
    rc.canon();
    std::vector<std::vector<int>> cols;
    for (int x = M; x >= 1; --x) {
        int j = B.block_of_label(x);
        auto [cp, a] = B.z_pos(x);
        Rects cur = partial_rects_t(R, j, cp, a);
        Rects prev;
        if (x > 1) {
            int jp = B.block_of_label(x - 1);
            auto [cpp, ap] = B.z_pos(x - 1);
            prev = partial_rects_t(R, jp, cpp, ap);
        }
        auto nu = rc.parts();
        // strings at level c' shorter than a are not moved by the vacancy shift of this letter
        int k = cp, lower = a;
        std::vector<std::pair<int, int>> sel;  // (level, index)
        while (true) {
            auto& L = rc.level(k);
            int best = kInfinity, bi = -1;
            for (size_t s = 0; s < L.size(); ++s) {
                int P = vacancy(nu, cur, k, L[s].len);
                if (L[s].rig == P && L[s].len >= lower && L[s].len < best) {
                    best = L[s].len;
                    bi = static_cast<int>(s);
                }
            }
            if (bi < 0) break;
            sel.emplace_back(k, bi);
            lower = best;
            ++k;
        }
        int c = k;
        for (auto& [lev, idx] : sel) --rc.level(lev)[idx].len;
        auto nu_new = rc.parts();
        for (auto& [lev, idx] : sel) {
            auto& s = rc.level(lev)[idx];
            if (s.len > 0) s.rig = vacancy(nu_new, prev, lev, s.len);
        }
        for (auto& l : rc.lv) l.erase(std::remove_if(l.begin(), l.end(), [](auto& s) { return s.len == 0; }), l.end());
        rc.canon();
        if (static_cast<int>(cols.size()) < c) cols.resize(c);
        cols[c - 1].push_back(B.letter0[j] + a);
    }
    if (!rc.empty()) throw std::invalid_argument("rigged configuration not exhausted by the inverse");
    std::vector<Column> tc;
    for (auto& col : cols) {
        if (col.empty()) break;
        std::sort(col.begin(), col.end());
        tc.push_back(col);
    }
    Tableau t = Tableau::from_columns(tc);
    if (t.shape() != trim(lambda) || !is_lr_tableau(t, R))
        throw std::invalid_argument("inverse did not produce an LR tableau of the requested shape");
    return t;
}

// ---------------- paths <-> LR tableaux ----------------

// b in P(B_R, lambda) -> t in LR(lambda^t, R^t)
inline Tableau path_to_lr(const Path& p) {
    std::vector<Column> cols;
    int offset = 0;
    for (int i = 0; i < p.length(); ++i) {
        auto bc = p.b[i].columns();
        int s = p.R[i].s;
        for (int j = 1; j <= s; ++j) {
            const Column& u = bc[s - j];
            for (int c : u) {
                if (static_cast<int>(cols.size()) < c) cols.resize(c);
                cols[c - 1].push_back(offset + j);
            }
        }
        offset += s;
    }
    for (auto& c : cols) std::sort(c.begin(), c.end());
    return Tableau::from_columns(cols);
}

// t in LR(mu, Rlr) -> path in B_{Rlr^t} over [n]
inline Path lr_to_path(const Tableau& t, const Rects& Rlr, int n) {
    Blocks B(Rlr);
    Path p{n, transpose(Rlr), {}};
    auto tcols = t.columns();
    for (size_t i = 0; i < Rlr.size(); ++i) {
        int s = Rlr[i].r;  // columns of the path factor
        std::vector<Column> fc(s);
        for (int j = 1; j <= s; ++j) {
            int letter = B.letter0[i] + j;
            Column u;
            for (size_t c = 0; c < tcols.size(); ++c)
                if (std::find(tcols[c].begin(), tcols[c].end(), letter) != tcols[c].end())
                    u.push_back(static_cast<int>(c) + 1);
            fc[s - j] = u;
        }
        p.b.push_back(Tableau::from_columns(fc));
    }
    return p;
}

inline RC phi_bar_path(const Path& p, std::vector<TraceStep>* trace = nullptr) {
    return phi_bar_lr(path_to_lr(p), transpose(p.R), trace);
}

inline Path phi_bar_path_inverse(const RC& rc, int n, const Rects& R, const Partition& lambda) {
    Tableau t = phi_bar_lr_inverse(rc, transpose(R), transpose(trim(lambda)));
    return lr_to_path(t, transpose(R), n);
}

inline RC phi_tilde_lr(const Tableau& t, const Rects& R) { return comp(phi_bar_lr(t, R), transpose(R)); }
inline RC phi_tilde_path(const Path& p) { return comp(phi_bar_path(p), p.R); }

// ---------------- enumeration of RC(lambda, R) ----------------

inline std::vector<RC> enumerate_rc(const Partition& lambda0, const Rects& R) {
    Partition lambda = trim(lambda0);
    int K = static_cast<int>(lambda.size());
    for (auto& x : R) K = std::max(K, x.r);
    K = std::max(0, K - 1);
    auto d = config_sizes(lambda, R, K + 1);
    std::vector<RC> out;
    for (int v : d)
        if (v < 0) return out;
    if (d[K] != 0) return out;
    std::vector<Partition> nu(K);
    auto vac_ok = [&](int k) {
        // level k checked once levels k-1..k+1 are fixed
        std::vector<Partition> part(nu.begin(), nu.begin() + std::min(K, k + 1));
        int top = max_relevant_len(part, R);
        for (int i = 1; i <= top; ++i)
            if (vacancy(part, R, k, i) < 0) return false;
        return true;
    };
    std::vector<std::vector<Partition>> choices(K);
    for (int k = 0; k < K; ++k) choices[k] = partitions_of(d[k]);
    std::vector<std::vector<Partition>> configs;
    std::function<void(int)> rec = [&](int k) {
        if (k == K) {
            if (K >= 1 && !vac_ok(K)) return;
            configs.push_back(nu);
            return;
        }
        for (auto& p : choices[k]) {
            nu[k] = p;
            if (k >= 1 && !vac_ok(k)) continue;
            rec(k + 1);
        }
    };
    rec(0);
    for (auto& cfg : configs) {
        // groups of equal lengths per level
        struct Group {
            int k, len, mult, P;
        };
        std::vector<Group> gs;
        for (int k = 1; k <= K; ++k) {
            const Partition& p = cfg[k - 1];
            for (size_t s = 0; s < p.size();) {
                size_t e = s;
                while (e < p.size() && p[e] == p[s]) ++e;
                gs.push_back({k, p[s], static_cast<int>(e - s), vacancy(cfg, R, k, p[s])});
                s = e;
            }
        }
        RC rc;
        rc.lv.resize(K);
        std::function<void(size_t)> rg = [&](size_t g) {
            if (g == gs.size()) {
                RC c = rc;
                out.push_back(c.canon());
                return;
            }
            auto& G = gs[g];
            std::vector<int> vals(G.mult, 0);
            std::function<void(int, int)> pick = [&](int idx, int cap) {
                if (idx == G.mult) {
                    auto& L = rc.lv[G.k - 1];
                    size_t before = L.size();
                    for (int v : vals) L.push_back({G.len, v});
                    rg(g + 1);
                    L.resize(before);
                    return;
                }
                for (int v = cap; v >= 0; --v) {
                    vals[idx] = v;
                    pick(idx + 1, v);
                }
            };
            pick(0, G.P);
        };
        rg(0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------- duality ----------------

inline RC wedge_rc(const RC& rc, int n) {
    RC out;
    for (int k = n; k <= rc.levels(); ++k)
        if (!rc.level(k).empty()) throw std::invalid_argument("configuration has levels beyond n-1");
    out.lv.resize(std::max(0, n - 1));
    for (int k = 1; k <= n - 1; ++k) out.lv[k - 1] = rc.level(n - k);
    return out.canon();
}

inline std::pair<Tableau, Rects> wedge_lr(const Tableau& t, const Rects& R, int n) {
    Blocks B(R);
    int N = B.letter_count;
    if (t.num_cols() > n) throw std::invalid_argument("tableau has more than n columns");
    ColumnWords cw = tableau_column_words(t, n);
    Tableau out = insert(concat(dual_columns(cw, N)));
    Rects Rw;
    for (auto& x : R) Rw.push_back({x.r, n - x.s});
    return {out, Rw};
}

// ---------------- charge ----------------

inline int charge_energy(const Tableau& t, const Rects& R) {
    if (R.size() <= 1) return 0;
    int n = std::max(2, t.num_cols());
    for (auto& x : R) n = std::max(n, x.s);
    return -energy_E(lr_to_path(t, R, n));
}

inline int charge_direct(const Tableau& t, const Rects& R) {
    int L = static_cast<int>(R.size());
    if (L <= 1) return 0;
    if (L > 6) throw std::invalid_argument("direct charge limited to six rectangles");
    int n = std::max(2, t.num_cols());
    for (auto& x : R) n = std::max(n, x.s);
    std::vector<int> id(L);
    std::iota(id.begin(), id.end(), 0);
    std::map<std::vector<int>, Path> seen;
    std::vector<std::vector<int>> frontier{id};
    seen.emplace(id, lr_to_path(t, R, n));
    while (!frontier.empty()) {
        std::vector<std::vector<int>> nxt;
        for (auto& perm : frontier) {
            for (int p = 1; p < L; ++p) {
                auto q = perm;
                std::swap(q[p - 1], q[p]);
                if (seen.count(q)) continue;
                seen.emplace(q, sigma_k(seen.at(perm), p));
                nxt.push_back(q);
            }
        }
        frontier = std::move(nxt);
    }
    long long total = 0;
    for (auto& [perm, path] : seen) {
        Tableau tt = path_to_lr(path);
        Rects Rp = transpose(path.R);
        Blocks B(Rp);
        Word w = tt.reading_word();
        for (int j = 1; j < L; ++j) {
            int lo = B.letter0[j - 1] + 1;
            int hi = B.letter0[j] + Rp[j].r;
            Partition sh = insert(restrict_word(w, lo, hi)).shape();
            total += static_cast<long long>(L - j) * d_cells(sh, std::max(Rp[j - 1].s, Rp[j].s));
        }
    }
    long long fact = 1;
    for (int k = 2; k <= L; ++k) fact *= k;
    if (total % fact != 0) throw std::logic_error("charge average is not integral");
    return static_cast<int>(total / fact);
}

// tau_p on LR tableaux through a preimage path.
inline std::pair<Tableau, Rects> tau(int p, const Tableau& t, const Rects& R) {
    int n = std::max(2, t.num_cols());
    for (auto& x : R) n = std::max(n, x.s);
    Path b = sigma_k(lr_to_path(t, R, n), p);
    return {path_to_lr(b), transpose(b.R)};
}

// ---------------- the embeddings i_{r,s} and j_{r,s} ----------------

// The two leftmost factors B^{2n-r,s} (x) B^{r,s} become B^{2n-r-1,s} (x) B^{r+1,s}.
inline Path i_emb(const Path& p, int r, int s) {
    int L = p.length();
    int N = p.n;  // ambient alphabet size 2n
    if (L < 2 || p.R[L - 1] != Rect{N - r, s} || p.R[L - 2] != Rect{r, s})
        throw std::invalid_argument("leftmost pair is not B^{2n-r,s} (x) B^{r,s}");
    Path pair{N, {p.R[L - 2], p.R[L - 1]}, {p.b[L - 2], p.b[L - 1]}};
    Path img = crystal_iso(pair, Rects{{r + 1, s}, {N - r - 1, s}});
    Path q = p;
    q.R[L - 2] = img.R[0];
    q.R[L - 1] = img.R[1];
    q.b[L - 2] = img.b[0];
    q.b[L - 1] = img.b[1];
    return q;
}

// Adds a singular string of length s at levels r+1 .. 2n-r-1; Rnew is the rectangle list after i_{r,s}.
inline RC j_emb(const RC& rc, const Rects& Rnew, int r, int s, int n) {
    RC out = rc;
    auto nu = out.parts();
    nu.resize(std::max<int>(static_cast<int>(nu.size()), 2 * n - r - 1));
    for (int k = r + 1; k <= 2 * n - r - 1; ++k) {
        nu[k - 1].push_back(s);
        std::sort(nu[k - 1].rbegin(), nu[k - 1].rend());
    }
    for (int k = r + 1; k <= 2 * n - r - 1; ++k) out.level(k).push_back({s, vacancy(nu, Rnew, k, s)});
    return out.canon();
}

}  // namespace crystal
