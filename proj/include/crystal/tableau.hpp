#pragma once
// Words, partitions, semistandard tableaux, Schensted insertion and the dualities.

#include <algorithm>
#include <compare>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace crystal {

using Word = std::vector<int>;
using Partition = std::vector<int>;
// strictly increasing list of letters, read top to bottom
using Column = std::vector<int>;

inline Partition trim(Partition p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

inline int psize(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

inline Partition transpose(const Partition& p) {
    Partition t;
    if (p.empty()) return t;
    t.assign(p[0], 0);
    for (int row : p)
        for (int c = 0; c < row; ++c) ++t[c];
    return t;
}

// size of the first i columns
inline int Qi(const Partition& p, int i) {
    int s = 0;
    for (int x : p) s += std::min(x, i);
    return s;
}

inline bool is_partition(const Partition& p) {
    for (size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i] < p[i + 1]) return false;
    return p.empty() || p.back() >= 0;
}

// All partitions of n with parts <= max_part and at most max_len parts.
inline void for_each_partition(int n, int max_part, int max_len, const std::function<void(const Partition&)>& fn) {
    Partition cur;
    std::function<void(int, int)> rec = [&](int rem, int cap) {
        if (rem == 0) {
            fn(cur);
            return;
        }
        if (static_cast<int>(cur.size()) >= max_len) return;
        for (int x = std::min(rem, cap); x >= 1; --x) {
            cur.push_back(x);
            rec(rem - x, x);
            cur.pop_back();
        }
    };
    if (n < 0) return;
    rec(n, max_part < 0 ? n : max_part);
}

inline std::vector<Partition> partitions_of(int n, int max_part = -1, int max_len = 1 << 20) {
    std::vector<Partition> out;
    for_each_partition(n, max_part, max_len, [&](const Partition& p) { out.push_back(p); });
    return out;
}

struct Tableau {
    std::vector<std::vector<int>> rows;

    Tableau() = default;
    explicit Tableau(std::vector<std::vector<int>> r) : rows(std::move(r)) {}

    auto operator<=>(const Tableau&) const = default;

    bool empty() const { return rows.empty(); }
    int size() const {
        int s = 0;
        for (auto& r : rows) s += static_cast<int>(r.size());
        return s;
    }
    Partition shape() const {
        Partition p;
        for (auto& r : rows) p.push_back(static_cast<int>(r.size()));
        return p;
    }
    int num_cols() const { return rows.empty() ? 0 : static_cast<int>(rows[0].size()); }

    std::vector<Column> columns() const {
        std::vector<Column> cols(num_cols());
        for (auto& r : rows)
            for (size_t c = 0; c < r.size(); ++c) cols[c].push_back(r[c]);
        return cols;
    }

    static Tableau from_columns(const std::vector<Column>& cols) {
        Tableau t;
        for (auto& col : cols) {
            for (size_t i = 0; i < col.size(); ++i) {
                if (t.rows.size() <= i) t.rows.emplace_back();
                t.rows[i].push_back(col[i]);
            }
        }
        return t;
    }

    // column reading word: columns left to right, each bottom to top
    Word reading_word() const {
        Word w;
        for (auto& col : columns())
            for (auto it = col.rbegin(); it != col.rend(); ++it) w.push_back(*it);
        return w;
    }

    static Tableau from_reading_word(const Word& w, const Partition& shape) {
        Partition cs = transpose(shape);
        std::vector<Column> cols;
        size_t pos = 0;
        for (int h : cs) {
            if (pos + h > w.size()) throw std::invalid_argument("word too short for shape");
            Column col(w.begin() + pos, w.begin() + pos + h);
            std::reverse(col.begin(), col.end());
            cols.push_back(col);
            pos += h;
        }
        if (pos != w.size()) throw std::invalid_argument("word length does not match shape");
        return from_columns(cols);
    }

    bool is_semistandard() const {
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].empty()) return false;
            if (i > 0 && rows[i].size() > rows[i - 1].size()) return false;
            for (size_t c = 0; c < rows[i].size(); ++c) {
                if (c > 0 && rows[i][c] < rows[i][c - 1]) return false;
                if (i > 0 && rows[i][c] <= rows[i - 1][c]) return false;
            }
        }
        return true;
    }

    int max_letter() const {
        int m = 0;
        for (auto& r : rows)
            for (int x : r) m = std::max(m, x);
        return m;
    }
};

inline std::vector<int> content(const Word& w, int n) {
    std::vector<int> c(n, 0);
    for (int x : w) {
        if (x < 1 || x > n) throw std::out_of_range("letter outside alphabet");
        ++c[x - 1];
    }
    return c;
}

// Column insertion of a single letter.
inline void column_insert(std::vector<Column>& cols, int x) {
    for (auto& col : cols) {
        auto it = std::lower_bound(col.begin(), col.end(), x);
        if (it == col.end()) {
            col.push_back(x);
            return;
        }
        std::swap(*it, x);
    }
    cols.push_back({x});
}

// P(u): column insertion of the letters of u from right to left.
inline Tableau insert(const Word& u) {
    std::vector<Column> cols;
    for (auto it = u.rbegin(); it != u.rend(); ++it) column_insert(cols, *it);
    return Tableau::from_columns(cols);
}

inline Tableau insert(const Tableau& t) { return insert(t.reading_word()); }

// A column factorization, left to right; each entry is a strictly decreasing word.
using ColumnWords = std::vector<Word>;

inline Word concat(const ColumnWords& cw) {
    Word w;
    for (auto& c : cw) w.insert(w.end(), c.begin(), c.end());
    return w;
}

inline void check_columns(const ColumnWords& cw) {
    for (auto& c : cw)
        for (size_t i = 0; i + 1 < c.size(); ++i)
            if (c[i] <= c[i + 1]) throw std::invalid_argument("factor is not strictly decreasing");
}

// Q(c_N ... c_1)^t where cw lists the columns left to right (cw.back() is c_1).
inline Tableau record(const ColumnWords& cw) {
    check_columns(cw);
    std::vector<Column> cols;
    std::vector<std::vector<int>> qrows;
    int N = static_cast<int>(cw.size());
    for (int j = 1; j <= N; ++j) {
        const Word& c = cw[N - j];
        for (auto it = c.rbegin(); it != c.rend(); ++it) column_insert(cols, *it);
        Tableau cur = Tableau::from_columns(cols);
        Partition sh = cur.shape();
        for (size_t r = 0; r < sh.size(); ++r) {
            if (qrows.size() <= r) qrows.emplace_back();
            while (static_cast<int>(qrows[r].size()) < sh[r]) qrows[r].push_back(j);
        }
    }
    Tableau q(qrows);
    // transpose
    std::vector<Column> qc = q.columns();
    Tableau qt;
    for (auto& col : qc) qt.rows.push_back(col);
    return qt;
}

inline Word complement_column(const Word& c, int n) {
    Word out;
    for (int x = n; x >= 1; --x)
        if (std::find(c.begin(), c.end(), x) == c.end()) out.push_back(x);
    return out;
}

// u^vee: complement every column in [n], reverse the column order.
inline ColumnWords dual_columns(const ColumnWords& cw, int n) {
    check_columns(cw);
    ColumnWords out;
    for (auto it = cw.rbegin(); it != cw.rend(); ++it) out.push_back(complement_column(*it, n));
    return out;
}

// Split a word into maximal strictly decreasing runs, padded with empty columns up to N.
inline ColumnWords factor_columns(const Word& u, int N) {
    ColumnWords cw;
    for (int x : u) {
        if (cw.empty() || cw.back().empty() || cw.back().back() <= x) cw.push_back({});
        cw.back().push_back(x);
    }
    if (static_cast<int>(cw.size()) > N) throw std::invalid_argument("word needs more than N columns");
    while (static_cast<int>(cw.size()) < N) cw.push_back({});
    return cw;
}

inline Word dual_word(const Word& u, int N, int n) { return concat(dual_columns(factor_columns(u, N), n)); }

// Columns of a tableau as decreasing words, padded to N.
inline ColumnWords tableau_column_words(const Tableau& t, int N) {
    ColumnWords cw;
    for (auto& col : t.columns()) cw.emplace_back(col.rbegin(), col.rend());
    if (static_cast<int>(cw.size()) > N) throw std::invalid_argument("tableau wider than N");
    while (static_cast<int>(cw.size()) < N) cw.push_back({});
    return cw;
}

inline Tableau dual_tableau(const Tableau& t, int N, int n) {
    return insert(concat(dual_columns(tableau_column_words(t, N), n)));
}

inline Word star(const Word& u, int n) {
    Word out(u.rbegin(), u.rend());
    for (int& x : out) x = n + 1 - x;
    return out;
}

inline Tableau evacuate(const Tableau& t, int n) { return insert(star(t.reading_word(), n)); }

inline Word restrict_word(const Word& u, int a, int b) {
    Word out;
    for (int x : u)
        if (x >= a && x <= b) out.push_back(x);
    return out;
}

inline Word shift_word(Word u, int d) {
    for (int& x : u) x += d;
    return u;
}

inline Tableau shift_tableau(Tableau t, int d) {
    for (auto& r : t.rows)
        for (int& x : r) x += d;
    return t;
}

// Enumerate all semistandard tableaux of the given shape over [n].
inline void for_each_ssyt(const Partition& shape, int n, const std::function<void(const Tableau&)>& fn) {
    Tableau t;
    for (int len : shape) t.rows.emplace_back(len, 0);
    std::vector<std::pair<int, int>> cells;
    for (size_t r = 0; r < shape.size(); ++r)
        for (int c = 0; c < shape[r]; ++c) cells.emplace_back(static_cast<int>(r), c);
    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == cells.size()) {
            fn(t);
            return;
        }
        auto [r, c] = cells[k];
        int lo = 1;
        if (c > 0) lo = std::max(lo, t.rows[r][c - 1]);
        if (r > 0) lo = std::max(lo, t.rows[r - 1][c] + 1);
        // leave room below in the column
        int below = 0;
        for (size_t rr = r + 1; rr < shape.size() && shape[rr] > c; ++rr) ++below;
        for (int x = lo; x <= n - below; ++x) {
            t.rows[r][c] = x;
            rec(k + 1);
        }
    };
    rec(0);
}

inline std::vector<Tableau> all_ssyt(const Partition& shape, int n) {
    std::vector<Tableau> out;
    for_each_ssyt(shape, n, [&](const Tableau& t) { out.push_back(t); });
    return out;
}

inline Tableau yamanouchi(const Partition& lambda) {
    Tableau t;
    for (size_t i = 0; i < lambda.size(); ++i)
        if (lambda[i] > 0) t.rows.emplace_back(lambda[i], static_cast<int>(i) + 1);
    return t;
}

inline Partition rect_shape(int r, int s) { return Partition(r, s); }

inline std::string to_string(const Word& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s;
}

inline std::string to_string(const Tableau& t) {
    std::string s;
    for (size_t i = 0; i < t.rows.size(); ++i) {
        if (i) s += "/";
        for (size_t c = 0; c < t.rows[i].size(); ++c) s += (c ? "," : "") + std::to_string(t.rows[i][c]);
    }
    return s;
}

}  // namespace crystal
