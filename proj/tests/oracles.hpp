#pragma once
// Brute-force reference implementations used only by the tests.

#include <crystal/tableau.hpp>
#include <crystal/typeA.hpp>

#include <queue>
#include <random>
#include <set>

namespace oracle {

using crystal::Tableau;
using crystal::Word;

// Closure of a word under the elementary Knuth relations.
inline std::set<Word> knuth_class(const Word& w) {
    std::set<Word> seen{w};
    std::queue<Word> q;
    q.push(w);
    while (!q.empty()) {
        Word u = q.front();
        q.pop();
        for (size_t i = 0; i + 2 < u.size(); ++i) {
            int a = u[i], b = u[i + 1], c = u[i + 2];
            std::vector<Word> nb;
            // y z x ~ y x z  when x < y <= z
            if (c < a && a <= b) {
                Word v = u;
                std::swap(v[i + 1], v[i + 2]);
                nb.push_back(v);
            }
            if (b < a && a <= c) {
                Word v = u;
                std::swap(v[i + 1], v[i + 2]);
                nb.push_back(v);
            }
            // x z y ~ z x y  when x <= y < z
            if (a <= c && c < b) {
                Word v = u;
                std::swap(v[i], v[i + 1]);
                nb.push_back(v);
            }
            if (b <= c && c < a) {
                Word v = u;
                std::swap(v[i], v[i + 1]);
                nb.push_back(v);
            }
            for (auto& v : nb)
                if (seen.insert(v).second) q.push(v);
        }
    }
    return seen;
}

// Column factorization by maximal strictly decreasing runs; tableau iff the columns assemble into one.
inline bool is_tableau_word(const Word& w, Tableau* out = nullptr) {
    std::vector<crystal::Column> cols;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i == 0 || w[i] >= w[i - 1]) cols.emplace_back();
        cols.back().insert(cols.back().begin(), w[i]);
    }
    for (size_t j = 0; j + 1 < cols.size(); ++j)
        if (cols[j].size() < cols[j + 1].size()) return false;
    Tableau t = Tableau::from_columns(cols);
    if (!t.is_semistandard()) return false;
    if (out) *out = t;
    return true;
}

inline Tableau knuth_tableau(const Word& w) {
    Tableau found;
    int hits = 0;
    for (auto& v : knuth_class(w)) {
        Tableau t;
        if (is_tableau_word(v, &t)) {
            found = t;
            ++hits;
        }
    }
    if (hits != 1) throw std::logic_error("Knuth class does not contain exactly one tableau word");
    return found;
}

inline void for_each_word(int len, int n, const std::function<void(const Word&)>& fn) {
    Word w(len, 1);
    while (true) {
        fn(w);
        int k = len - 1;
        while (k >= 0 && w[k] == n) w[k--] = 1;
        if (k < 0) return;
        ++w[k];
    }
}

// Tensor rule on two factors: f acts on the left factor iff eps(left) >= phi(right).
inline std::optional<Word> f_two_factor(int i, const Word& left, const Word& right) {
    int el = crystal::eps_word(i, left);
    int pr = crystal::phi_word(i, right);
    Word out;
    if (el >= pr) {
        auto l = crystal::f_word(i, left);
        if (!l) return std::nullopt;
        out = *l;
        out.insert(out.end(), right.begin(), right.end());
    } else {
        auto r = crystal::f_word(i, right);
        out = left;
        out.insert(out.end(), r->begin(), r->end());
    }
    return out;
}

}  // namespace oracle
