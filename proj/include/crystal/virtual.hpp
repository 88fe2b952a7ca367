#pragma once
// Virtual crystals of types D_{n+1}^{(2)}, A_{2n}^{(2)}, A_{2n}^{(2)dagger}, C_n^{(1)} inside type A_{2n-1}^{(1)}.

#include <cstdlib>
#include <string>

#include "rmatrix.hpp"

namespace crystal {

enum class VType { D2, A2, A2D, C1 };

struct VTag {
    VType type = VType::D2;
    int n = 2;

    int gamma() const { return type == VType::A2 || type == VType::C1 ? 2 : 1; }
    int gammap() const { return type == VType::A2D || type == VType::C1 ? 2 : 1; }
    int N() const { return 2 * n; }
    int mu(int i) const { return type == VType::A2D && i == n ? 2 : 1; }
    std::string name() const {
        switch (type) {
            case VType::D2: return "D2";
            case VType::A2: return "A2";
            case VType::A2D: return "A2D";
            case VType::C1: return "C1";
        }
        return "?";
    }
    auto operator<=>(const VTag&) const = default;
};

inline VTag parse_vtag(const std::string& s, int n) {
    if (n < 1) throw std::invalid_argument("rank must be positive");
    if (s == "D2") return {VType::D2, n};
    if (s == "A2") return {VType::A2, n};
    if (s == "A2D") return {VType::A2D, n};
    if (s == "C1") return {VType::C1, n};
    throw std::invalid_argument("unknown type tag '" + s + "' (expected D2, A2, A2D or C1)");
}

inline size_t max_nodes() {
    if (const char* v = std::getenv("CRYSTAL_MAX_NODES")) {
        long long x = std::atoll(v);
        if (x > 0) return static_cast<size_t>(x);
    }
    return 200000;
}

// Ambient rectangles of Vhat^{r,s} in Path storage order (rightmost first).
inline Rects ambient_rects(const VTag& t, int r, int s) {
    if (r < 1 || r > t.n || s < 1) throw std::invalid_argument("need 1 <= r <= n and s >= 1");
    if (r < t.n) return {{r, s}, {t.N() - r, s}};
    switch (t.type) {
        case VType::D2: return {{t.n, s}};
        case VType::C1: return {{t.n, 2 * s}};
        default: return {{t.n, s}, {t.n, s}};
    }
}

inline Path ambient_u(const VTag& t, int r, int s) { return u_path(t.N(), ambient_rects(t, r, s)); }

// ---- virtual operators ----

namespace detail {

inline std::optional<Path> f_times(int i, Path p, int k) {
    for (int c = 0; c < k; ++c) {
        auto y = f_path(i, p);
        if (!y) return std::nullopt;
        p = std::move(*y);
    }
    return p;
}

inline std::optional<Path> e_times(int i, Path p, int k) {
    for (int c = 0; c < k; ++c) {
        auto y = e_path(i, p);
        if (!y) return std::nullopt;
        p = std::move(*y);
    }
    return p;
}

}  // namespace detail

inline void check_ambient(const VTag& t, const Path& p) {
    if (p.n != t.N()) throw std::invalid_argument("ambient rank mismatch: element lives over [" + std::to_string(p.n) +
                                                  "], expected [" + std::to_string(t.N()) + "]");
}

inline std::optional<Path> virtual_f(const VTag& t, int i, const Path& p) {
    check_ambient(t, p);
    if (i < 0 || i > t.n) throw std::out_of_range("virtual index out of range");
    if (i == 0) return detail::f_times(0, p, t.gammap());
    if (i == t.n) return detail::f_times(t.n, p, t.gamma());
    auto y = f_path(t.N() - i, p);
    if (!y) return std::nullopt;
    return f_path(i, *y);
}

inline std::optional<Path> virtual_e(const VTag& t, int i, const Path& p) {
    check_ambient(t, p);
    if (i < 0 || i > t.n) throw std::out_of_range("virtual index out of range");
    if (i == 0) return detail::e_times(0, p, t.gammap());
    if (i == t.n) return detail::e_times(t.n, p, t.gamma());
    auto y = e_path(t.N() - i, p);
    if (!y) return std::nullopt;
    return e_path(i, *y);
}

inline std::pair<int, int> virtual_eps_phi(const VTag& t, int i, const Path& p) {
    if (i == 0 || i == t.n) {
        auto [e, f] = eps_phi(i, p);
        int g = i == 0 ? t.gammap() : t.gamma();
        return {e / g, f / g};
    }
    auto [e1, f1] = eps_phi(i, p);
    auto [e2, f2] = eps_phi(t.N() - i, p);
    return {std::min(e1, e2), std::min(f1, f2)};
}

// Word versions for the classical operators 1 <= i <= n.
inline std::optional<Word> virtual_f_word(const VTag& t, int i, const Word& w) {
    if (i == t.n) {
        Word x = w;
        for (int c = 0; c < t.gamma(); ++c) {
            auto y = f_word(i, x);
            if (!y) return std::nullopt;
            x = *y;
        }
        return x;
    }
    auto y = f_word(t.N() - i, w);
    if (!y) return std::nullopt;
    return f_word(i, *y);
}

inline std::optional<Word> virtual_e_word(const VTag& t, int i, const Word& w) {
    if (i == t.n) {
        Word x = w;
        for (int c = 0; c < t.gamma(); ++c) {
            auto y = e_word(i, x);
            if (!y) return std::nullopt;
            x = *y;
        }
        return x;
    }
    auto y = e_word(t.N() - i, w);
    if (!y) return std::nullopt;
    return e_word(i, *y);
}

// ---- weights ----

// <h_j, wt> for j = 1..N-1 from the content over [N].
inline std::vector<int> ambient_pairings(const std::vector<int>& c) {
    std::vector<int> h;
    for (size_t j = 0; j + 1 < c.size(); ++j) h.push_back(c[j] - c[j + 1]);
    return h;
}

inline std::vector<int> psi_weight(const VTag& t, const std::vector<int>& lam) {
    std::vector<int> h(t.N() - 1, 0);
    for (int i = 1; i < t.n; ++i) {
        h[i - 1] += lam[i - 1];
        h[t.N() - i - 1] += lam[i - 1];
    }
    h[t.n - 1] += t.gamma() * lam[t.n - 1];
    return h;
}

inline bool in_psi_image(const VTag& t, const std::vector<int>& h) {
    for (int i = 1; i < t.n; ++i)
        if (h[i - 1] != h[t.N() - i - 1]) return false;
    return h[t.n - 1] % t.gamma() == 0;
}

inline std::vector<int> psi_inverse(const VTag& t, const std::vector<int>& h) {
    if (!in_psi_image(t, h)) {
        std::string s;
        for (int x : h) s += std::to_string(x) + " ";
        throw std::logic_error("ambient weight (" + s + ") is not in the image of Psi");
    }
    std::vector<int> lam(t.n);
    for (int i = 1; i < t.n; ++i) lam[i - 1] = h[i - 1];
    lam[t.n - 1] = h[t.n - 1] / t.gamma();
    return lam;
}

inline std::vector<int> virtual_weight(const VTag& t, const Path& p) {
    return psi_inverse(t, ambient_pairings(weight(p)));
}

// Partition of a gl_N weight with the given pairings and total size; empty optional if impossible.
inline std::optional<Partition> ambient_partition(const std::vector<int>& h, int N, int boxes) {
    Partition p(N, 0);
    for (int k = N - 2; k >= 0; --k) p[k] = p[k + 1] + h[k];
    int sz = psize(p);
    if (boxes < sz || (boxes - sz) % N != 0) return std::nullopt;
    for (int& x : p) x += (boxes - sz) / N;
    for (int x : p)
        if (x < 0) return std::nullopt;
    return trim(p);
}

// ---- alignment ----

inline bool is_aligned(const VTag& t, const Path& p) {
    check_ambient(t, p);
    for (int i = 1; i < t.n; ++i)
        if (eps_phi(i, p) != eps_phi(t.N() - i, p)) return false;
    auto [e0, f0] = eps_phi(0, p);
    if (e0 % t.gammap() || f0 % t.gammap()) return false;
    auto [en, fn] = eps_phi(t.n, p);
    return en % t.gamma() == 0 && fn % t.gamma() == 0;
}

inline bool is_virtual_highest(const VTag& t, const Path& p) {
    for (int i = 1; i <= t.n; ++i)
        if (virtual_eps_phi(t, i, p).first != 0) return false;
    return true;
}

// ---- generation ----

inline std::vector<Path> virtual_closure(const VTag& t, const Path& seed, size_t cap = max_nodes()) {
    auto nodes = bfs_closure(
        seed,
        [&](const Path& p) {
            std::vector<Path> out;
            for (int i = 0; i <= t.n; ++i) {
                if (auto y = virtual_f(t, i, p)) out.push_back(*y);
                if (auto y = virtual_e(t, i, p)) out.push_back(*y);
            }
            return out;
        },
        cap);
    std::sort(nodes.begin(), nodes.end());
    return nodes;
}

inline std::vector<Path> generate_V(const VTag& t, int r, int s, size_t cap = max_nodes()) {
    return virtual_closure(t, ambient_u(t, r, s), cap);
}

// Partition of Psi(lambda) with lambda in fundamental coordinates.
inline Partition psi_partition(const VTag& t, const std::vector<int>& lam) {
    auto h = psi_weight(t, lam);
    Partition p(t.N(), 0);
    for (int k = t.N() - 2; k >= 0; --k) p[k] = p[k + 1] + h[k];
    return trim(p);
}

// Classical V(lambda): closure of the Yamanouchi word of Psi(lambda) under virtual e_i, f_i, 1 <= i <= n.
inline std::vector<Word> generate_classical(const VTag& t, const std::vector<int>& lam, size_t cap = max_nodes()) {
    Word seed = yamanouchi(psi_partition(t, lam)).reading_word();
    auto nodes = bfs_closure(
        seed,
        [&](const Word& w) {
            std::vector<Word> out;
            for (int i = 1; i <= t.n; ++i) {
                if (auto y = virtual_f_word(t, i, w)) out.push_back(*y);
                if (auto y = virtual_e_word(t, i, w)) out.push_back(*y);
            }
            return out;
        },
        cap);
    std::sort(nodes.begin(), nodes.end());
    return nodes;
}

// ---- membership ----

// b^{vee*} = sigma(b), sigma the identity for one factor and the R-matrix for two.
inline bool self_dual(const Path& b) {
    Path d = dual_star(b);
    if (b.length() == 1) return d == b;
    if (b.length() != 2) throw std::invalid_argument("self duality is defined for one or two factors");
    return d == rmatrix(b);
}

namespace detail {

inline Column restrict_col(const Column& c, int lo, int hi) {
    Column out;
    for (int x : c)
        if (x >= lo && x <= hi) out.push_back(x);
    return out;
}

inline bool two_col_tableau(const Column& a, const Column& b) {
    if (a.size() < b.size()) return false;
    for (size_t k = 0; k < b.size(); ++k)
        if (a[k] > b[k]) return false;
    return true;
}

// (u, v) = (left column, right column) of a column pair element.
inline std::pair<Column, Column> column_pair(const Path& b) {
    if (b.length() == 2 && b.R[0].s == 1 && b.R[1].s == 1) return {b.b[1].columns()[0], b.b[0].columns()[0]};
    if (b.length() == 1 && b.R[0].s == 2) {
        auto c = b.b[0].columns();
        return {c[0], c[1]};
    }
    throw std::invalid_argument("element is not a pair of columns");
}

}  // namespace detail

inline bool member_V(const VTag& t, int r, int s, const Path& b) {
    check_ambient(t, b);
    if (b.R != ambient_rects(t, r, s)) return false;
    if (t.type == VType::D2) return self_dual(b);
    if (s != 1) throw std::invalid_argument("no closed-form membership test for " + t.name() + " with s > 1");
    int n = t.n;
    auto [u, v] = detail::column_pair(b);
    if (t.type == VType::A2) {
        Column u2 = detail::restrict_col(u, n + 1, 2 * n), v2 = detail::restrict_col(v, n + 1, 2 * n);
        return self_dual(b) && detail::two_col_tableau(u2, v2) &&
               static_cast<int>(u2.size()) - static_cast<int>(v2.size()) >= n - r;
    }
    bool tab = detail::two_col_tableau(u, v);
    if (t.type == VType::A2D) return tab && self_dual(b);
    // C1: P(b^{vee*}) = b, u1 v1 a tableau and |u1| - |v1| = n - r
    if (!tab) return false;
    Path d = dual_star(b);
    if (insert(path_word(d)) != insert(path_word(b))) return false;
    Column u1 = detail::restrict_col(u, 1, n), v1 = detail::restrict_col(v, 1, n);
    return detail::two_col_tableau(u1, v1) && static_cast<int>(u1.size()) - static_cast<int>(v1.size()) == n - r;
}

// ---- C_n columns ----

// A C_n column: unbarred letters P_+ and the indices of barred letters P_-, both increasing.
struct CColumn {
    Column plus, minus;
    int size() const { return static_cast<int>(plus.size() + minus.size()); }
    auto operator<=>(const CColumn&) const = default;
};

// Signed letters: i for i, -i for the barred letter.
inline CColumn ccolumn_from_signed(const std::vector<int>& xs, int n) {
    CColumn c;
    for (int x : xs) {
        if (x == 0 || std::abs(x) > n) throw std::invalid_argument("letter out of range for C_n column");
        (x > 0 ? c.plus : c.minus).push_back(std::abs(x));
    }
    std::sort(c.plus.begin(), c.plus.end());
    std::sort(c.minus.begin(), c.minus.end());
    if (std::adjacent_find(c.plus.begin(), c.plus.end()) != c.plus.end() ||
        std::adjacent_find(c.minus.begin(), c.minus.end()) != c.minus.end())
        throw std::invalid_argument("repeated letter in a column");
    return c;
}

inline Column set_complement(const Column& a, int n) {
    Column c;
    for (int x = 1; x <= n; ++x)
        if (!std::binary_search(a.begin(), a.end(), x)) c.push_back(x);
    return c;
}

inline bool one_column_condition(const CColumn& P) {
    for (int i : P.plus) {
        if (!std::binary_search(P.minus.begin(), P.minus.end(), i)) continue;
        int cnt = 0;
        for (int x : P.plus) cnt += x <= i;
        for (int x : P.minus) cnt += x <= i;
        if (cnt > i) return false;
    }
    return true;
}

struct SplitColumn {
    Column K, J, Qplus, Qminus;
};

inline SplitColumn split_column(const CColumn& P, int n) {
    if (!one_column_condition(P)) throw std::invalid_argument("column violates the one-column condition");
    SplitColumn out;
    std::set_intersection(P.plus.begin(), P.plus.end(), P.minus.begin(), P.minus.end(), std::back_inserter(out.K));
    Column both;
    std::set_union(P.plus.begin(), P.plus.end(), P.minus.begin(), P.minus.end(), std::back_inserter(both));
    Column avail = set_complement(both, n);
    std::vector<bool> used(avail.size(), false);
    for (auto it = out.K.rbegin(); it != out.K.rend(); ++it) {
        int pick = -1;
        for (int k = static_cast<int>(avail.size()) - 1; k >= 0; --k)
            if (!used[k] && avail[k] < *it) {
                pick = k;
                break;
            }
        if (pick < 0) throw std::logic_error("no free letter below a paired letter");
        used[pick] = true;
        out.J.push_back(avail[pick]);
    }
    std::sort(out.J.begin(), out.J.end());
    auto build = [&](const Column& side) {
        Column q;
        std::set_difference(side.begin(), side.end(), out.K.begin(), out.K.end(), std::back_inserter(q));
        q.insert(q.end(), out.J.begin(), out.J.end());
        std::sort(q.begin(), q.end());
        return q;
    };
    out.Qplus = build(P.plus);
    out.Qminus = build(P.minus);
    return out;
}

inline int bar_letter(int i, int n) { return 2 * n + 1 - i; }

// P -> bar(Q_+^c) P_-^c (x) bar(Q_-) P_+ inside Vhat^{r,1} of type C1.
inline Path embed_col(const CColumn& P, int n) {
    auto sp = split_column(P, n);
    Column u = set_complement(P.minus, n), v = P.plus;
    for (int x : set_complement(sp.Qplus, n)) u.push_back(bar_letter(x, n));
    for (int x : sp.Qminus) v.push_back(bar_letter(x, n));
    std::sort(u.begin(), u.end());
    std::sort(v.begin(), v.end());
    int r = P.size();
    if (r < 1 || r > n) throw std::invalid_argument("column height must be between 1 and n");
    VTag t{VType::C1, n};
    Rects R = ambient_rects(t, r, 1);
    if (r < n) return make_path(2 * n, R, {Tableau::from_columns({v}), Tableau::from_columns({u})});
    return make_path(2 * n, R, {Tableau::from_columns({u, v})});
}

// All C_n columns of height r satisfying the one-column condition.
inline std::vector<CColumn> all_ccolumns(int n, int r) {
    std::vector<CColumn> out;
    for (int m = 0; m < (1 << (2 * n)); ++m) {
        if (__builtin_popcount(m) != r) continue;
        CColumn c;
        for (int x = 1; x <= n; ++x) {
            if (m >> (x - 1) & 1) c.plus.push_back(x);
            if (m >> (n + x - 1) & 1) c.minus.push_back(x);
        }
        if (one_column_condition(c)) out.push_back(c);
    }
    return out;
}

// ---- decomposition and energies ----

// 2 D_V(b) = 2 D_ambient(b) / gamma'
inline int virtual_D2x(const VTag& t, const Path& p) {
    int d = intrinsic_D(p);
    if ((2 * d) % t.gammap()) throw std::logic_error("virtual energy is not in (1/2)Z");
    return 2 * d / t.gammap();
}

struct VComponent {
    std::vector<int> weight;  // coefficients of the fundamental weights
    int D2x = 0;
    auto operator<=>(const VComponent&) const = default;
};

inline std::vector<VComponent> decompose(const VTag& t, const std::vector<Path>& V) {
    std::vector<VComponent> out;
    for (auto& p : V)
        if (is_virtual_highest(t, p)) out.push_back({virtual_weight(t, p), virtual_D2x(t, p)});
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<VComponent> decompose(const VTag& t, int r, int s) { return decompose(t, generate_V(t, r, s)); }

// The prescribed decomposition with the energy (1/gamma')(-rs + sum_j j m_j) (0 for one ambient factor).
inline std::vector<VComponent> expected_decomposition(const VTag& t, int r, int s) {
    std::vector<VComponent> out;
    int n = t.n, g = t.gammap();
    if (r == n && (t.type == VType::D2 || t.type == VType::C1)) {
        std::vector<int> w(n, 0);
        w[n - 1] = s;
        out.push_back({w, 0});
        return out;
    }
    std::vector<int> m(r, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == r) {
            if ((s - m[r - 1]) % g) return;
            std::vector<int> w(n, 0);
            int e = -r * s;
            for (int j = 1; j <= r; ++j) {
                w[j - 1] = m[j - 1] * t.mu(j);
                e += j * m[j - 1];
            }
            if ((2 * e) % g) throw std::logic_error("prescribed energy not in (1/2)Z");
            out.push_back({w, 2 * e / g});
            return;
        }
        for (int x = 0; x <= left; ++x) {
            if (i < r - 1 && x % g) continue;
            m[i] = x;
            rec(i + 1, left - x);
        }
    };
    rec(0, s);
    std::sort(out.begin(), out.end());
    return out;
}

// psi^n on every ambient factor.
inline Path psi_C(const Path& p) {
    if (p.n % 2) throw std::invalid_argument("psi_C needs an ambient alphabet of even size");
    Path q = p;
    for (int k = 0; k < p.n / 2; ++k) q = promotion(q);
    return q;
}

// ---- tensor products of aligned virtual crystals ----

struct NotAligned : std::domain_error {
    size_t factor;
    NotAligned(size_t k, const std::string& why) : std::domain_error(why), factor(k) {}
};

inline Path flatten(const std::vector<Path>& factors) {
    if (factors.empty()) throw std::invalid_argument("empty tensor product");
    Path out{factors[0].n, {}, {}};
    for (auto& f : factors) {
        if (f.n != out.n) throw std::invalid_argument("rank mismatch between tensor factors");
        out.R.insert(out.R.end(), f.R.begin(), f.R.end());
        out.b.insert(out.b.end(), f.b.begin(), f.b.end());
    }
    return out;
}

inline void require_aligned(const VTag& t, const std::vector<Path>& factors) {
    for (size_t k = 0; k < factors.size(); ++k)
        if (!is_aligned(t, factors[k]))
            throw NotAligned(k, "tensor factor " + std::to_string(k + 1) +
                                    " (counted from the right) is not aligned; virtual tensor product refused");
}

// Index of the factor acted on by f_i (or e_i) under the tensor rule on virtual string lengths; -1 if none.
inline int tensor_target(const VTag& t, int i, const std::vector<Path>& factors, bool lower) {
    // signature -^{phi} +^{eps} per factor, read left to right
    std::vector<std::pair<int, int>> minus;  // (factor, count) surviving
    std::vector<int> plus_owner;
    std::vector<int> minus_owner;
    for (int k = static_cast<int>(factors.size()) - 1; k >= 0; --k) {
        auto [e, f] = virtual_eps_phi(t, i, factors[k]);
        for (int c = 0; c < f; ++c) {
            if (!plus_owner.empty()) plus_owner.pop_back();
            else minus_owner.push_back(k);
        }
        for (int c = 0; c < e; ++c) plus_owner.push_back(k);
    }
    if (lower) return minus_owner.empty() ? -1 : minus_owner.back();
    return plus_owner.empty() ? -1 : plus_owner.front();
}

inline std::optional<std::vector<Path>> tensor_f(const VTag& t, int i, const std::vector<Path>& factors) {
    require_aligned(t, factors);
    int k = tensor_target(t, i, factors, true);
    if (k < 0) return std::nullopt;
    auto y = virtual_f(t, i, factors[k]);
    if (!y) throw std::logic_error("aligned factor refused the operator chosen by the tensor rule");
    auto out = factors;
    out[k] = *y;
    return out;
}

inline std::optional<std::vector<Path>> tensor_e(const VTag& t, int i, const std::vector<Path>& factors) {
    require_aligned(t, factors);
    int k = tensor_target(t, i, factors, false);
    if (k < 0) return std::nullopt;
    auto y = virtual_e(t, i, factors[k]);
    if (!y) throw std::logic_error("aligned factor refused the operator chosen by the tensor rule");
    auto out = factors;
    out[k] = *y;
    return out;
}

// ---- paths in V_R ----

struct VRect {
    int r = 1, s = 1;
    auto operator<=>(const VRect&) const = default;
};
using VRects = std::vector<VRect>;  // rightmost first

// Highest weight elements of V_{R_L} (x) ... (x) V_{R_1}, as lists of factors (rightmost first).
inline std::vector<std::vector<Path>> virtual_highest_paths(const VTag& t, const VRects& R) {
    std::vector<std::vector<Path>> sets;
    for (auto& x : R) sets.push_back(generate_V(t, x.r, x.s));
    std::vector<std::vector<Path>> out;
    std::vector<Path> cur(R.size());
    // eps_i of b_k (x) ... (x) b_1 is at most eps_i of the whole product, so prefixes prune
    std::function<void(int)> rec = [&](int k) {
        if (k == static_cast<int>(R.size())) {
            if (is_virtual_highest(t, flatten(cur))) out.push_back(cur);
            return;
        }
        for (auto& p : sets[k]) {
            cur[k] = p;
            std::vector<Path> pre(cur.begin(), cur.begin() + k + 1);
            if (!is_virtual_highest(t, flatten(pre))) continue;
            rec(k + 1);
        }
    };
    rec(0);
    return out;
}

}  // namespace crystal
