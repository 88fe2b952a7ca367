#pragma once
// Type A crystal operators, promotion, rectangles B^{r,s} and tensor products of them.

#include <map>
#include <optional>
#include <queue>
#include <set>
#include <utility>

#include "tableau.hpp"

namespace crystal {

struct Rect {
    int r = 1;  // rows
    int s = 1;  // columns
    auto operator<=>(const Rect&) const = default;
    Rect transposed() const { return {s, r}; }
    int size() const { return r * s; }
};

using Rects = std::vector<Rect>;

inline Rects transpose(const Rects& R) {
    Rects out;
    for (auto& x : R) out.push_back(x.transposed());
    return out;
}

// b_L (x) ... (x) b_1; b[0] is the rightmost factor b_1 and R[0] its shape.
struct Path {
    int n = 0;
    Rects R;
    std::vector<Tableau> b;
    auto operator<=>(const Path&) const = default;
    int length() const { return static_cast<int>(b.size()); }
};

inline Word path_word(const Path& p) {
    Word w;
    for (int k = p.length() - 1; k >= 0; --k) {
        Word f = p.b[k].reading_word();
        w.insert(w.end(), f.begin(), f.end());
    }
    return w;
}

inline Path path_with_word(const Path& p, const Word& w) {
    Path q = p;
    size_t pos = 0;
    for (int k = p.length() - 1; k >= 0; --k) {
        int sz = p.R[k].size();
        Word f(w.begin() + pos, w.begin() + pos + sz);
        q.b[k] = Tableau::from_reading_word(f, rect_shape(p.R[k].r, p.R[k].s));
        pos += sz;
    }
    return q;
}

inline Path make_path(int n, const Rects& R, const std::vector<Tableau>& b) {
    if (R.size() != b.size()) throw std::invalid_argument("factor count mismatch");
    for (size_t k = 0; k < R.size(); ++k) {
        if (b[k].shape() != rect_shape(R[k].r, R[k].s) || !b[k].is_semistandard() || b[k].max_letter() > n)
            throw std::invalid_argument("factor " + std::to_string(k + 1) + " is not in B^{r,s}");
    }
    return {n, R, b};
}

// ---- signature rule on words ----

struct Signature {
    std::vector<size_t> minus;  // surviving '-' positions (letter i), left to right
    std::vector<size_t> plus;   // surviving '+' positions (letter i+1), left to right
};

inline Signature reduced_signature(const Word& w, int i) {
    Signature sg;
    for (size_t p = 0; p < w.size(); ++p) {
        if (w[p] == i + 1) {
            sg.plus.push_back(p);
        } else if (w[p] == i) {
            if (!sg.plus.empty()) sg.plus.pop_back();
            else sg.minus.push_back(p);
        }
    }
    return sg;
}

inline int eps_word(int i, const Word& w) { return static_cast<int>(reduced_signature(w, i).plus.size()); }
inline int phi_word(int i, const Word& w) { return static_cast<int>(reduced_signature(w, i).minus.size()); }

inline std::optional<Word> f_word(int i, Word w) {
    auto sg = reduced_signature(w, i);
    if (sg.minus.empty()) return std::nullopt;
    w[sg.minus.back()] = i + 1;
    return w;
}

inline std::optional<Word> e_word(int i, Word w) {
    auto sg = reduced_signature(w, i);
    if (sg.plus.empty()) return std::nullopt;
    w[sg.plus.front()] = i;
    return w;
}

inline bool is_highest_word(const Word& w, int n) {
    for (int i = 1; i < n; ++i)
        if (eps_word(i, w) != 0) return false;
    return true;
}

// ---- promotion ----

inline Tableau star_tableau(const Tableau& t, int n) { return insert(star(t.reading_word(), n)); }

inline Tableau promotion_inv(const Tableau& t, int n) {
    Partition sh = t.shape();
    Tableau p = shift_tableau(insert(restrict_word(t.reading_word(), 2, n)), -1);
    Tableau out;
    for (size_t i = 0; i < sh.size(); ++i) {
        std::vector<int> row = i < p.rows.size() ? p.rows[i] : std::vector<int>{};
        while (static_cast<int>(row.size()) < sh[i]) row.push_back(n);
        out.rows.push_back(row);
    }
    return out;
}

inline Tableau promotion(const Tableau& t, int n) { return star_tableau(promotion_inv(star_tableau(t, n), n), n); }

inline Path promotion(const Path& p) {
    Path q = p;
    for (auto& x : q.b) x = promotion(x, p.n);
    return q;
}

inline Path promotion_inv(const Path& p) {
    Path q = p;
    for (auto& x : q.b) x = promotion_inv(x, p.n);
    return q;
}

// ---- affine operators on paths, 0 <= i <= n-1 ----

inline std::optional<Path> f_path(int i, const Path& p) {
    if (i == 0) {
        auto r = f_path(1, promotion(p));
        if (!r) return std::nullopt;
        return promotion_inv(*r);
    }
    auto w = f_word(i, path_word(p));
    if (!w) return std::nullopt;
    return path_with_word(p, *w);
}

inline std::optional<Path> e_path(int i, const Path& p) {
    if (i == 0) {
        auto r = e_path(1, promotion(p));
        if (!r) return std::nullopt;
        return promotion_inv(*r);
    }
    auto w = e_word(i, path_word(p));
    if (!w) return std::nullopt;
    return path_with_word(p, *w);
}

inline std::pair<int, int> eps_phi(int i, const Path& p) {
    if (i == 0) return eps_phi(1, promotion(p));
    Word w = path_word(p);
    auto sg = reduced_signature(w, i);
    return {static_cast<int>(sg.plus.size()), static_cast<int>(sg.minus.size())};
}

inline std::vector<int> weight(const Path& p) { return content(path_word(p), p.n); }

inline bool is_highest(const Path& p) { return is_highest_word(path_word(p), p.n); }

// ---- distinguished elements ----

inline Tableau u_rect(int r, int s) { return yamanouchi(rect_shape(r, s)); }

inline Path u_path(int n, const Rects& R) {
    Path p{n, R, {}};
    for (auto& x : R) p.b.push_back(u_rect(x.r, x.s));
    return p;
}

inline Tableau b_natural(int r, int s, int n) {
    Tableau t;
    for (int k = 1; k <= r; ++k) t.rows.emplace_back(s, n - r + k);
    return t;
}

// ---- enumeration ----

inline std::vector<Tableau> all_rect(int r, int s, int n) { return all_ssyt(rect_shape(r, s), n); }

inline void for_each_path(int n, const Rects& R, const std::function<void(const Path&)>& fn) {
    std::vector<std::vector<Tableau>> sets;
    for (auto& x : R) sets.push_back(all_rect(x.r, x.s, n));
    Path p{n, R, std::vector<Tableau>(R.size())};
    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == R.size()) {
            fn(p);
            return;
        }
        for (auto& t : sets[k]) {
            p.b[k] = t;
            rec(k + 1);
        }
    };
    rec(0);
}

// Classically highest weight paths in B_R over [n], optionally of fixed content lambda.
// Cells are filled in reverse reading order so every partial suffix can be checked for the lattice property.
inline void for_each_highest_path(int n, const Rects& R, const Partition* lambda,
                                  const std::function<void(const Path&)>& fn) {
    Path p{n, R, {}};
    for (auto& x : R) {
        Tableau t;
        for (int i = 0; i < x.r; ++i) t.rows.emplace_back(x.s, 0);
        p.b.push_back(t);
    }
    struct Cell {
        int f, r, c;
    };
    std::vector<Cell> cells;
    for (int f = 0; f < static_cast<int>(R.size()); ++f)
        for (int c = R[f].s - 1; c >= 0; --c)
            for (int r = 0; r < R[f].r; ++r) cells.push_back({f, r, c});
    std::vector<int> cnt(n + 2, 0);
    Partition lt = lambda ? trim(*lambda) : Partition{};
    int maxletter = lambda ? std::min<int>(n, static_cast<int>(lt.size())) : n;
    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == cells.size()) {
            if (lambda) {
                for (int x = 1; x <= n; ++x)
                    if (cnt[x] != (x <= static_cast<int>(lt.size()) ? lt[x - 1] : 0)) return;
            }
            fn(p);
            return;
        }
        auto [f, r, c] = cells[k];
        Tableau& t = p.b[f];
        int lo = r > 0 ? t.rows[r - 1][c] + 1 : 1;
        int hi = c + 1 < R[f].s ? t.rows[r][c + 1] : maxletter;
        hi = std::min(hi, maxletter - (R[f].r - 1 - r));
        for (int x = lo; x <= hi; ++x) {
            if (x > 1 && cnt[x] + 1 > cnt[x - 1]) continue;
            if (lambda && cnt[x] + 1 > lt[x - 1]) continue;
            t.rows[r][c] = x;
            ++cnt[x];
            rec(k + 1);
            --cnt[x];
        }
        t.rows[r][c] = 0;
    };
    rec(0);
}

inline std::vector<Path> highest_weight_paths(int n, const Rects& R, const Partition& lambda) {
    std::vector<Path> out;
    for_each_highest_path(n, R, &lambda, [&](const Path& p) { out.push_back(p); });
    return out;
}

inline std::vector<Path> all_highest_paths(int n, const Rects& R) {
    std::vector<Path> out;
    for_each_highest_path(n, R, nullptr, [&](const Path& p) { out.push_back(p); });
    return out;
}

// Raise to the classical highest weight element, recording the indices used.
inline Word raise_to_highest(Word w, int n, std::vector<int>& ops) {
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 1; i < n; ++i) {
            if (auto r = e_word(i, w)) {
                w = *r;
                ops.push_back(i);
                moved = true;
                break;
            }
        }
    }
    return w;
}

// ---- graphs ----

template <class T, class Next>
std::vector<T> bfs_closure(const T& seed, Next next, size_t cap) {
    std::set<T> seen{seed};
    std::vector<T> order{seed};
    std::queue<T> q;
    q.push(seed);
    while (!q.empty()) {
        T x = q.front();
        q.pop();
        for (auto& y : next(x)) {
            if (seen.insert(y).second) {
                if (seen.size() > cap) throw std::runtime_error("node cap exceeded during generation");
                order.push_back(y);
                q.push(y);
            }
        }
    }
    return order;
}

struct CrystalEdge {
    size_t from, to;
    int label;
};

struct CrystalGraph {
    std::vector<Path> nodes;
    std::vector<CrystalEdge> edges;
};

inline CrystalGraph affine_graph(int n, const Rects& R, size_t cap) {
    auto nodes = bfs_closure(
        u_path(n, R),
        [&](const Path& p) {
            std::vector<Path> out;
            for (int i = 0; i < n; ++i) {
                if (auto y = f_path(i, p)) out.push_back(*y);
                if (auto y = e_path(i, p)) out.push_back(*y);
            }
            return out;
        },
        cap);
    std::sort(nodes.begin(), nodes.end());
    std::map<Path, size_t> idx;
    for (size_t k = 0; k < nodes.size(); ++k) idx[nodes[k]] = k;
    CrystalGraph g{nodes, {}};
    for (size_t k = 0; k < nodes.size(); ++k)
        for (int i = 0; i < n; ++i)
            if (auto y = f_path(i, nodes[k])) g.edges.push_back({k, idx.at(*y), i});
    return g;
}

}  // namespace crystal
