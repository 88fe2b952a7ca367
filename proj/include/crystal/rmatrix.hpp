#pragma once
// Combinatorial R-matrix, local and tensor energies, one-dimensional sums.

#include <mutex>
#include <tuple>

#include "qpoly.hpp"
#include "typeA.hpp"

namespace crystal {

enum class EnergyNorm {
    standard,  // H(u (x) u) = 0, values <= 0
    d_only     // only the d_{max s} term
};

namespace detail {

struct IsoKey {
    Rects target;
    int n;
    Partition lambda;
    auto operator<=>(const IsoKey&) const = default;
};

inline std::map<IsoKey, Word>& iso_cache() {
    static std::map<IsoKey, Word> c;
    return c;
}
inline std::mutex& iso_mutex() {
    static std::mutex m;
    return m;
}

inline Word highest_word_for(const Rects& target, int n, const Partition& lambda) {
    IsoKey key{target, n, lambda};
    {
        std::lock_guard<std::mutex> g(iso_mutex());
        auto it = iso_cache().find(key);
        if (it != iso_cache().end()) return it->second;
    }
    auto hws = highest_weight_paths(n, target, lambda);
    if (hws.size() != 1)
        throw std::logic_error("target tensor product has " + std::to_string(hws.size()) +
                               " highest weight elements of the requested weight");
    Word w = path_word(hws[0]);
    std::lock_guard<std::mutex> g(iso_mutex());
    iso_cache().emplace(key, w);
    return w;
}

}  // namespace detail

// Map p to the element of B_target in the same position of the isomorphic (or embedded) classical component.
inline Path crystal_iso(const Path& p, const Rects& target) {
    std::vector<int> ops;
    Word hw = raise_to_highest(path_word(p), p.n, ops);
    Partition lam = trim(content(hw, p.n));
    Word w = detail::highest_word_for(target, p.n, lam);
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) w = *f_word(*it, w);
    Path q{p.n, target, std::vector<Tableau>(target.size())};
    return path_with_word(q, w);
}

// sigma on b2 (x) b1, returned as b1' (x) b2' (same Path layout: b[0] is the right factor).
inline Path rmatrix(const Path& pair) {
    if (pair.length() != 2) throw std::invalid_argument("rmatrix expects two factors");
    return crystal_iso(pair, Rects{pair.R[1], pair.R[0]});
}

inline Path make_pair(int n, const Tableau& left, Rect rl, const Tableau& right, Rect rr) {
    return make_path(n, Rects{rr, rl}, {right, left});
}

// Dot pairing for columns: b2 of height >= b1. Columns given as sets of letters.
inline std::pair<Column, Column> rmatrix_single_column(const Column& b2, const Column& b1) {
    if (b2.size() < b1.size()) throw std::invalid_argument("left column must be at least as tall");
    std::vector<int> xs(b1.begin(), b1.end());
    std::sort(xs.rbegin(), xs.rend());
    std::vector<int> ys(b2.begin(), b2.end());
    std::sort(ys.begin(), ys.end());
    std::vector<bool> used(ys.size(), false);
    for (int x : xs) {
        int pick = -1;
        for (int k = static_cast<int>(ys.size()) - 1; k >= 0; --k)
            if (!used[k] && ys[k] <= x) {
                pick = k;
                break;
            }
        if (pick < 0)
            for (int k = static_cast<int>(ys.size()) - 1; k >= 0; --k)
                if (!used[k]) {
                    pick = k;
                    break;
                }
        used[pick] = true;
    }
    Column new_left, new_right(b1.begin(), b1.end());
    for (size_t k = 0; k < ys.size(); ++k) {
        if (used[k]) new_left.push_back(ys[k]);
        else new_right.push_back(ys[k]);
    }
    std::sort(new_left.begin(), new_left.end());
    std::sort(new_right.begin(), new_right.end());
    return {new_left, new_right};
}

// sigma_k exchanges factors k and k+1 counted from the right (1-based).
inline Path sigma_k(const Path& p, int k) {
    if (k < 1 || k >= p.length()) throw std::out_of_range("sigma index out of range");
    Path pair{p.n, {p.R[k - 1], p.R[k]}, {p.b[k - 1], p.b[k]}};
    Path sw = rmatrix(pair);
    Path q = p;
    q.R[k - 1] = sw.R[0];
    q.R[k] = sw.R[1];
    q.b[k - 1] = sw.b[0];
    q.b[k] = sw.b[1];
    return q;
}

// sigma_{a_1} ... sigma_{a_p}, rightmost applied first.
inline Path sigma_word(const std::vector<int>& a, const Path& p) {
    Path q = p;
    for (auto it = a.rbegin(); it != a.rend(); ++it) q = sigma_k(q, *it);
    return q;
}

inline int d_cells(const Partition& sh, int col) {
    int d = 0;
    for (int x : sh) d += std::max(0, x - col);
    return d;
}

inline int local_energy(const Path& pair, EnergyNorm norm = EnergyNorm::standard) {
    if (pair.length() != 2) throw std::invalid_argument("local energy expects two factors");
    Rect a = pair.R[0], b = pair.R[1];
    Partition sh = insert(path_word(pair)).shape();
    int d = d_cells(sh, std::max(a.s, b.s));
    if (norm == EnergyNorm::d_only) return d;
    return -std::min(a.r, b.r) * std::min(a.s, b.s) + d;
}

// H_k: local energy of factors k+1 (x) k.
inline int H_k(const Path& p, int k, EnergyNorm norm = EnergyNorm::standard) {
    Path pair{p.n, {p.R[k - 1], p.R[k]}, {p.b[k - 1], p.b[k]}};
    return local_energy(pair, norm);
}

inline int energy_word(const std::vector<int>& a, const Path& p, EnergyNorm norm = EnergyNorm::standard) {
    int e = 0;
    Path cur = p;
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
        e += H_k(cur, *it, norm);
        cur = sigma_k(cur, *it);
    }
    return e;
}

// E_B = sum_{i<j} H_i sigma_{i+1} ... sigma_{j-1}
inline int energy_E(const Path& p, EnergyNorm norm = EnergyNorm::standard) {
    int L = p.length();
    int e = 0;
    for (int j = 2; j <= L; ++j) {
        Path cur = p;
        for (int i = j - 1; i >= 1; --i) {
            if (i < j - 1) cur = sigma_k(cur, i + 1);
            e += H_k(cur, i, norm);
        }
    }
    return e;
}

// In type A the intrinsic energy coincides with E_B.
inline int intrinsic_D(const Path& p) { return energy_E(p); }

inline int rect_norm(const Rects& R) {
    int s = 0;
    for (size_t i = 0; i < R.size(); ++i)
        for (size_t j = i + 1; j < R.size(); ++j)
            s += std::min(R[i].r, R[j].r) * std::min(R[i].s, R[j].s);
    return s;
}

inline QLaurent onedim_sum(int n, const Rects& R, const Partition& lambda) {
    QLaurent x;
    for_each_highest_path(n, R, &lambda, [&](const Path& p) { x.add(intrinsic_D(p), 1); });
    return x;
}

inline QLaurent kostka(int n, const Partition& lambda, const Rects& R) {
    return onedim_sum(n, R, lambda).shifted_x2(2 * rect_norm(R));
}

inline QLaurent kostka_tilde(int n, const Partition& lambda, const Rects& R) {
    return onedim_sum(n, R, lambda).inverted();
}

// R^{vee*} acts columnwise in place: column -> flip(complement(column)).
inline Tableau dual_star_rect(const Tableau& t, int n) {
    std::vector<Column> cols;
    for (auto& col : t.columns()) {
        Column c;
        for (int x = 1; x <= n; ++x)
            if (std::find(col.begin(), col.end(), x) == col.end()) c.push_back(n + 1 - x);
        std::sort(c.begin(), c.end());
        cols.push_back(c);
    }
    Tableau out = Tableau::from_columns(cols);
    return out;
}

inline Path dual_star(const Path& p) {
    Path q = p;
    for (size_t k = 0; k < p.b.size(); ++k) {
        q.R[k] = {p.n - p.R[k].r, p.R[k].s};
        q.b[k] = dual_star_rect(p.b[k], p.n);
    }
    return q;
}

}  // namespace crystal
