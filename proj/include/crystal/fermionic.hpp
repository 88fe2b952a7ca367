#pragma once
// Rigged configurations and fermionic formulas of types C_n^{(1)}, A_{2n}^{(2)}, D_{n+1}^{(2)}, A_{2n}^{(2)dagger},
// and the three-way X = M verifier.

#include <atomic>
#include <chrono>
#include <numeric>
#include <thread>

#include "rigged.hpp"
#include "virtual.hpp"

namespace crystal {

// ---- weights ----

// lambda_j doubled, from fundamental coordinates Lambda; D2 reads Lambda_n as a column of width 1/2.
inline std::vector<int> lambda_x2(const VTag& t, const std::vector<int>& Lam) {
    int n = t.n;
    if (static_cast<int>(Lam.size()) != n) throw std::invalid_argument("weight must have n coordinates");
    std::vector<int> lam(n, 0);
    for (int j = n; j >= 1; --j) {
        int c = Lam[j - 1];
        if (c < 0) throw std::invalid_argument("weight is not dominant");
        int w = (j == n && t.type == VType::D2) ? c : 2 * c;
        for (int k = 0; k < j; ++k) lam[k] += w;
    }
    return lam;
}

inline int total_width(const VRects& R) {
    int s = 0;
    for (auto& x : R) s += x.s;
    return s;
}

// |nu^(a)| for a = 1..n; empty optional if some size is negative or not an integer.
inline std::optional<std::vector<int>> g_config_sizes(const VTag& t, const std::vector<int>& Lam, const VRects& R) {
    auto lam = lambda_x2(t, Lam);
    std::vector<int> out;
    for (int a = 1; a <= t.n; ++a) {
        int v2 = 0;
        for (int j = 0; j < a; ++j) v2 -= lam[j];
        for (auto& x : R) {
            if (t.type == VType::D2 && x.r == t.n) v2 += x.s * a;
            else v2 += 2 * x.s * std::min(x.r, a);
        }
        if (v2 < 0 || v2 % 2) return std::nullopt;
        out.push_back(v2 / 2);
    }
    return out;
}

inline Partition g_xi(const VRects& R, int a) {
    Partition p;
    for (auto& x : R)
        if (x.r == a) p.push_back(x.s);
    std::sort(p.rbegin(), p.rend());
    return p;
}

// 2 P_i^{(a)}(nu)
inline int g_vacancy_x2(const VTag& t, const std::vector<Partition>& nu, const VRects& R, int a, int i) {
    auto Q = [&](int lev) { return lev >= 1 && lev <= t.n ? Qi(nu[lev - 1], i) : 0; };
    Partition x = g_xi(R, a);
    if (a < t.n) return 2 * (Q(a - 1) - 2 * Q(a) + Q(a + 1) + Qi(x, i));
    switch (t.type) {
        case VType::C1: {
            Partition x2 = x;
            for (int& y : x2) y *= 2;
            return 2 * (Q(a - 1) - Q(a)) + Qi(x2, i);
        }
        case VType::A2: return 2 * (Q(a - 1) - Q(a) + Qi(x, i));
        case VType::D2: return 2 * (2 * Q(a - 1) - 2 * Q(a) + Qi(x, i));
        default: throw std::invalid_argument("no type-specific rigged configurations for A2D");
    }
}

// 2 cc_g(nu)
inline int g_cocharge_nu_x2(const VTag& t, const std::vector<Partition>& nu) {
    int n = t.n, c = 0;
    std::vector<Partition> al;
    for (auto& p : nu) al.push_back(transpose(p));
    int top = 0;
    for (auto& p : nu) top = std::max(top, p.empty() ? 0 : p[0]);
    auto A = [&](int a, int i) { return i <= static_cast<int>(al[a - 1].size()) ? al[a - 1][i - 1] : 0; };
    int w = t.type == VType::C1 ? 1 : 2;
    for (int i = 1; i <= top; ++i) {
        for (int a = 1; a < n; ++a) c += 2 * w * A(a, i) * (A(a, i) - A(a + 1, i));
        c += w * A(n, i) * A(n, i);
    }
    return c;
}

inline int g_qdual(const VTag& t, int a) {
    switch (t.type) {
        case VType::C1: return 1;
        case VType::A2: return 2;
        case VType::D2: return a < t.n ? 2 : 1;
        default: return 1;
    }
}

inline int g_tvec(const VTag& t, int a) { return t.type == VType::C1 && a < t.n ? 2 : 1; }

struct GConfig {
    std::vector<Partition> nu;
    auto operator<=>(const GConfig&) const = default;
};

inline int g_max_len(const std::vector<Partition>& nu, const VRects& R) {
    int m = 1;
    for (auto& p : nu)
        if (!p.empty()) m = std::max(m, p[0]);
    for (auto& x : R) m = std::max(m, 2 * x.s);
    return m + 1;
}

// All nu in C_g(lambda, R).
inline std::vector<GConfig> enumerate_configs(const VTag& t, const std::vector<int>& Lam, const VRects& R) {
    if (t.type == VType::A2D) throw std::invalid_argument("no type-specific rigged configurations for A2D");
    std::vector<GConfig> out;
    auto sz = g_config_sizes(t, Lam, R);
    if (!sz) return out;
    int n = t.n;
    std::vector<std::vector<Partition>> choices(n);
    for (int a = 1; a <= n; ++a) {
        if (t.type == VType::C1 && a == n) {
            if ((*sz)[a - 1] % 2) return out;
            for (auto p : partitions_of((*sz)[a - 1] / 2)) {
                for (int& x : p) x *= 2;
                choices[a - 1].push_back(p);
            }
        } else {
            choices[a - 1] = partitions_of((*sz)[a - 1]);
        }
    }
    std::vector<Partition> nu(n);
    auto ok = [&](int a) {
        int top = g_max_len(nu, R);
        for (int i = 1; i <= top; ++i)
            if (g_vacancy_x2(t, nu, R, a, i) < 0) return false;
        return true;
    };
    std::function<void(int)> rec = [&](int a) {
        if (a == n) {
            if (ok(n)) out.push_back({nu});
            return;
        }
        for (auto& p : choices[a]) {
            nu[a] = p;
            // level a (1-based) is final once level a+1 is chosen
            if (a >= 1 && !ok(a)) continue;
            rec(a + 1);
        }
    };
    rec(0);
    return out;
}

inline std::map<int, int> multiplicities(const Partition& p) {
    std::map<int, int> m;
    for (int x : p) ++m[x];
    return m;
}

// fermi1
inline QLaurent M_sum(const VTag& t, const std::vector<int>& Lam, const VRects& R) {
    QLaurent total;
    for (auto& c : enumerate_configs(t, Lam, R)) {
        QLaurent term = QLaurent::monomial_x2(g_cocharge_nu_x2(t, c.nu));
        for (int a = 1; a <= t.n; ++a)
            for (auto [i, m] : multiplicities(c.nu[a - 1])) {
                int P2 = g_vacancy_x2(t, c.nu, R, a, i);
                if (P2 % 2) throw std::logic_error("half-integral vacancy number on an occupied length");
                term *= qbinom(m, P2 / 2, g_qdual(t, a));
            }
        total += term;
    }
    return total;
}

struct GRiggedConfig {
    std::vector<Partition> nu;
    std::vector<std::vector<RString>> strings;  // per level, canonical order
    auto operator<=>(const GRiggedConfig&) const = default;
};

inline int g_rig_weight(const VTag& t, int a) { return g_qdual(t, a); }

inline int g_cocharge_x2(const VTag& t, const GRiggedConfig& rc) {
    int c = g_cocharge_nu_x2(t, rc.nu);
    for (int a = 1; a <= t.n; ++a)
        for (auto& s : rc.strings[a - 1]) c += 2 * g_rig_weight(t, a) * s.rig;
    return c;
}

inline std::vector<GRiggedConfig> enumerate_rc_g(const VTag& t, const std::vector<int>& Lam, const VRects& R) {
    std::vector<GRiggedConfig> out;
    for (auto& c : enumerate_configs(t, Lam, R)) {
        struct Group {
            int a, len, mult, P;
        };
        std::vector<Group> gs;
        for (int a = 1; a <= t.n; ++a)
            for (auto [i, m] : multiplicities(c.nu[a - 1])) gs.push_back({a, i, m, g_vacancy_x2(t, c.nu, R, a, i) / 2});
        GRiggedConfig cur{c.nu, std::vector<std::vector<RString>>(t.n)};
        std::function<void(size_t)> rec = [&](size_t g) {
            if (g == gs.size()) {
                GRiggedConfig x = cur;
                for (auto& l : x.strings) std::sort(l.rbegin(), l.rend());
                out.push_back(x);
                return;
            }
            auto& G = gs[g];
            std::vector<int> vals(G.mult);
            std::function<void(int, int)> pick = [&](int k, int cap) {
                if (k == G.mult) {
                    auto& L = cur.strings[G.a - 1];
                    size_t before = L.size();
                    for (int v : vals) L.push_back({G.len, v});
                    rec(g + 1);
                    L.resize(before);
                    return;
                }
                for (int v = 0; v <= cap; ++v) {
                    vals[k] = v;
                    pick(k + 1, v);
                }
            };
            pick(0, G.P);
        };
        rec(0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline QLaurent M_sum_rc(const VTag& t, const std::vector<int>& Lam, const VRects& R) {
    QLaurent total;
    for (auto& rc : enumerate_rc_g(t, Lam, R)) total.add_x2(g_cocharge_x2(t, rc), 1);
    return total;
}

// ---- the {m} form ----

struct Fraction {
    long long p = 0, q = 1;
    Fraction(long long a = 0, long long b = 1) : p(a), q(b) { norm(); }
    void norm() {
        if (q < 0) p = -p, q = -q;
        long long g = std::gcd(p < 0 ? -p : p, q);
        if (g > 1) p /= g, q /= g;
    }
    friend Fraction operator+(Fraction a, Fraction b) { return {a.p * b.q + b.p * a.q, a.q * b.q}; }
    friend Fraction operator-(Fraction a, Fraction b) { return {a.p * b.q - b.p * a.q, a.q * b.q}; }
    friend Fraction operator*(Fraction a, Fraction b) { return {a.p * b.p, a.q * b.q}; }
    friend Fraction operator/(Fraction a, Fraction b) {
        if (b.p == 0) throw std::domain_error("division by zero");
        return {a.p * b.q, a.q * b.p};
    }
    bool is_integer() const { return q == 1; }
};

inline std::vector<std::vector<Fraction>> invert(std::vector<std::vector<Fraction>> A) {
    int N = static_cast<int>(A.size());
    std::vector<std::vector<Fraction>> I(N, std::vector<Fraction>(N));
    for (int k = 0; k < N; ++k) I[k][k] = 1;
    for (int c = 0; c < N; ++c) {
        int piv = c;
        while (piv < N && A[piv][c].p == 0) ++piv;
        if (piv == N) throw std::domain_error("singular matrix");
        std::swap(A[piv], A[c]);
        std::swap(I[piv], I[c]);
        Fraction d = A[c][c];
        for (int k = 0; k < N; ++k) {
            A[c][k] = A[c][k] / d;
            I[c][k] = I[c][k] / d;
        }
        for (int r = 0; r < N; ++r) {
            if (r == c || A[r][c].p == 0) continue;
            Fraction f = A[r][c];
            for (int k = 0; k < N; ++k) {
                A[r][k] = A[r][k] - f * A[c][k];
                I[r][k] = I[r][k] - f * I[c][k];
            }
        }
    }
    return I;
}

// 2 (alpha_a | alpha_b) of the algebra attached to the tag, indices 1..n.
inline std::vector<std::vector<int>> gram_x2(const VTag& t) {
    int n = t.n;
    std::vector<std::vector<int>> G(n, std::vector<int>(n, 0));
    int diag, adj, last_adj, last;
    switch (t.type) {
        case VType::C1: diag = 2, adj = -1, last_adj = -2, last = 4; break;
        case VType::A2D: diag = 4, adj = -2, last_adj = -2, last = 2; break;
        default: diag = 8, adj = -4, last_adj = -4, last = 4; break;
    }
    for (int a = 0; a < n; ++a) G[a][a] = a == n - 1 ? last : diag;
    for (int a = 0; a + 1 < n; ++a) G[a][a + 1] = G[a + 1][a] = a + 1 == n - 1 ? last_adj : adj;
    return G;
}

inline int g_eps(const VTag& t, int a) {
    return a == t.n && (t.type == VType::A2 || t.type == VType::A2D) ? 2 : 1;
}

inline int L_count(const VRects& R, int a, int i) {
    int c = 0;
    for (auto& x : R) c += x.r == a && x.s == i;
    return c;
}

// Sizes sum_i i m_i^{(a)} forced by the constraint; empty optional if not natural numbers.
inline std::optional<std::vector<int>> mform_sizes(const VTag& t, const std::vector<int>& Lam, const VRects& R) {
    int n = t.n;
    auto G = gram_x2(t);
    std::vector<std::vector<Fraction>> CT(n, std::vector<Fraction>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) CT[b][a] = Fraction(2 * G[a][b], G[a][a]);
    auto M = invert(CT);
    std::vector<Fraction> ex(n);
    for (int b = 1; b <= n; ++b) {
        long long top = 0;
        for (auto& x : R)
            if (x.r == b) top += x.s;
        if (t.type == VType::A2D && b == n) ex[b - 1] = Fraction(2 * top - Lam[b - 1]);
        else ex[b - 1] = Fraction(g_eps(t, b) * (top - Lam[b - 1]));
    }
    std::vector<int> out;
    for (int a = 0; a < n; ++a) {
        Fraction s;
        for (int b = 0; b < n; ++b) s = s + ex[b] * M[b][a];
        if (!s.is_integer() || s.p < 0) return std::nullopt;
        out.push_back(static_cast<int>(s.p));
    }
    return out;
}

namespace detail {

// 2 t_a^vee p_i^{(a)}
inline int mform_vac_scaled(const VTag& t, const std::vector<std::map<int, int>>& m, const VRects& R, int a, int i) {
    auto G = gram_x2(t);
    int tv = t.type == VType::A2D ? 1 : g_qdual(t, a);
    int ta = t.type == VType::A2D ? 1 : g_tvec(t, a);
    int lin = 0;
    for (auto& x : R)
        if (x.r == a) lin += std::min(i, x.s);
    int v = 2 * tv * lin;
    for (int b = 1; b <= t.n; ++b) {
        int tb = t.type == VType::A2D ? 1 : g_tvec(t, b);
        for (auto [k, mk] : m[b - 1]) v -= G[a - 1][b - 1] * std::min(tb * i, ta * k) * mk;
    }
    return v;
}

}  // namespace detail

inline int mform_cc_x2(const VTag& t, const std::vector<std::map<int, int>>& m) {
    auto G = gram_x2(t);
    long long c = 0;
    for (int a = 1; a <= t.n; ++a)
        for (int b = 1; b <= t.n; ++b) {
            int ta = t.type == VType::A2D ? 1 : g_tvec(t, a), tb = t.type == VType::A2D ? 1 : g_tvec(t, b);
            for (auto [j, mj] : m[a - 1])
                for (auto [k, mk] : m[b - 1]) c += static_cast<long long>(G[a - 1][b - 1]) * std::min(tb * j, ta * k) * mj * mk;
        }
    // cc = (1/2) sum (G2/2) ..., doubled: (1/2) sum G2 ...
    if (c % 2) throw std::logic_error("cocharge of {m} is not in (1/2)Z");
    return static_cast<int>(c / 2);
}

// fermi2, and the conjectured formula for A2D.
inline QLaurent M_mform(const VTag& t, const std::vector<int>& Lam, const VRects& R) {
    QLaurent total;
    auto sz = mform_sizes(t, Lam, R);
    if (!sz) return total;
    int n = t.n;
    std::vector<std::vector<Partition>> choices(n);
    for (int a = 0; a < n; ++a) choices[a] = partitions_of((*sz)[a]);
    std::vector<std::map<int, int>> m(n);
    std::function<void(int)> rec = [&](int a) {
        if (a < n) {
            for (auto& p : choices[a]) {
                m[a] = multiplicities(p);
                rec(a + 1);
            }
            return;
        }
        int top = 1;
        for (auto& x : R) top = std::max(top, x.s);
        for (auto& mm : m)
            if (!mm.empty()) top = std::max(top, mm.rbegin()->first);
        QLaurent term = QLaurent::monomial_x2(mform_cc_x2(t, m));
        for (int b = 1; b <= n; ++b) {
            int tv = t.type == VType::A2D ? 1 : g_qdual(t, b);
            for (int i = 1; i <= top + 1; ++i) {
                int v = detail::mform_vac_scaled(t, m, R, b, i);
                if (v < 0) return;
                auto it = m[b - 1].find(i);
                if (it == m[b - 1].end()) continue;
                if (v % (2 * tv)) throw std::logic_error("non-integral vacancy on an occupied length");
                int p = v / (2 * tv), mi = it->second;
                if (t.type == VType::A2D && b == n && i % 2) {
                    if (p < 1) return;
                    term *= QLaurent::monomial_x2(mi) * qbinom(mi, p - 1, 1);
                } else {
                    term *= qbinom(mi, p, tv);
                }
            }
        }
        total += term;
    };
    rec(0);
    return total;
}

inline QLaurent M_Atd(int n, const std::vector<int>& Lam, const VRects& R) { return M_mform({VType::A2D, n}, Lam, R); }

// ---- the X side ----

inline Rects ambient_rects(const VTag& t, const VRects& R) {
    Rects out;
    for (auto& x : R) {
        auto a = ambient_rects(t, x.r, x.s);
        out.insert(out.end(), a.begin(), a.end());
    }
    return out;
}

// X(B_R, Lambda; q^{-1}) per weight from virtual highest weight paths: sum of q^{-E/gamma'}.
inline std::map<std::vector<int>, QLaurent> X_paths_all(const VTag& t, const VRects& R) {
    std::map<std::vector<int>, QLaurent> out;
    for (auto& fac : virtual_highest_paths(t, R)) {
        Path flat = flatten(fac);
        int e = energy_E(flat);
        if ((2 * e) % t.gammap()) throw std::logic_error("virtual energy not in (1/2)Z");
        out[virtual_weight(t, flat)].add_x2(-2 * e / t.gammap(), 1);
    }
    return out;
}

inline QLaurent X_paths(const VTag& t, const std::vector<int>& Lam, const VRects& R) {
    auto all = X_paths_all(t, R);
    auto it = all.find(Lam);
    return it == all.end() ? QLaurent{} : it->second;
}

// Conditions on an ambient rigged configuration for lying in the image of the virtual paths.
inline bool rc_symmetric_conditions(const VTag& t, const RC& rc) {
    int n = t.n;
    for (int k = 1; k < n; ++k)
        if (rc.level(k) != rc.level(2 * n - k)) return false;
    for (auto& s : rc.level(n)) {
        switch (t.type) {
            case VType::C1:
                if (s.len % 2 || s.rig % 2) return false;
                break;
            case VType::A2:
                if (s.rig % 2) return false;
                break;
            case VType::A2D:
                if ((s.rig - s.len) % 2) return false;
                break;
            case VType::D2: break;
        }
    }
    return true;
}

inline std::optional<Partition> ambient_lambda(const VTag& t, const std::vector<int>& Lam, const VRects& R) {
    int boxes = 0;
    for (auto& x : ambient_rects(t, R)) boxes += x.size();
    return ambient_partition(psi_weight(t, Lam), t.N(), boxes);
}

inline std::vector<RC> filtered_rc(const VTag& t, const std::vector<int>& Lam, const VRects& R) {
    std::vector<RC> out;
    auto lam = ambient_lambda(t, Lam, R);
    if (!lam) return out;
    for (auto& rc : enumerate_rc(*lam, ambient_rects(t, R)))
        if (rc_symmetric_conditions(t, rc)) out.push_back(rc);
    return out;
}

inline QLaurent X_rc_filtered(const VTag& t, const std::vector<int>& Lam, const VRects& R) {
    QLaurent x;
    Rects Rt = ambient_rects(t, R);
    for (auto& rc : filtered_rc(t, Lam, R)) {
        int c = cocharge(comp(rc, Rt));
        if ((2 * c) % t.gammap()) throw std::logic_error("scaled cocharge not in (1/2)Z");
        x.add_x2(2 * c / t.gammap(), 1);
    }
    return x;
}

inline QLaurent M_for(const VTag& t, const std::vector<int>& Lam, const VRects& R) {
    return t.type == VType::A2D ? M_Atd(t.n, Lam, R) : M_sum(t, Lam, R);
}

// Dominant weights with every coordinate in [0, 2 * total width].
inline std::vector<std::vector<int>> candidate_weights(const VTag& t, const VRects& R) {
    int top = 2 * total_width(R);
    std::vector<std::vector<int>> out;
    std::vector<int> w(t.n, 0);
    std::function<void(int)> rec = [&](int a) {
        if (a == t.n) {
            out.push_back(w);
            return;
        }
        for (int x = 0; x <= top; ++x) {
            w[a] = x;
            rec(a + 1);
        }
    };
    rec(0);
    return out;
}

struct XMRow {
    std::vector<int> weight;
    QLaurent x_paths, x_rc, m;
    bool ok() const { return x_paths == x_rc && x_rc == m; }
};

struct XMReport {
    VTag tag;
    VRects R;
    std::vector<XMRow> rows;
    bool experimental = false;
    long long runtime_ms = 0;
    bool ok() const {
        for (auto& r : rows)
            if (!r.ok()) return false;
        return true;
    }
    const XMRow* first_mismatch() const {
        for (auto& r : rows)
            if (!r.ok()) return &r;
        return nullptr;
    }
};

// Rows for the weights where any of the three sides is nonzero, or only the given weight if one is passed.
inline XMReport verify_XM(const VTag& t, const VRects& R, const std::optional<std::vector<int>>& only = std::nullopt,
                          int jobs = 1) {
    auto start = std::chrono::steady_clock::now();
    XMReport rep{t, R, {}, t.type == VType::A2D, 0};
    auto xp = X_paths_all(t, R);
    std::vector<std::vector<int>> ws = only ? std::vector<std::vector<int>>{*only} : candidate_weights(t, R);
    std::vector<XMRow> rows(ws.size());
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (size_t k; (k = next++) < ws.size();) {
            XMRow r{ws[k], {}, {}, {}};
            auto it = xp.find(ws[k]);
            if (it != xp.end()) r.x_paths = it->second;
            r.x_rc = X_rc_filtered(t, ws[k], R);
            r.m = M_for(t, ws[k], R);
            rows[k] = std::move(r);
        }
    };
    jobs = std::max(1, jobs);
    if (jobs == 1) {
        work();
    } else {
        std::vector<std::thread> th;
        for (int j = 0; j < jobs; ++j) th.emplace_back(work);
        for (auto& x : th) x.join();
    }
    for (auto& r : rows)
        if (only || !r.x_paths.is_zero() || !r.x_rc.is_zero() || !r.m.is_zero()) rep.rows.push_back(std::move(r));
    rep.runtime_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

}  // namespace crystal
