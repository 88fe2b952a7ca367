#pragma once
// Laurent polynomials in q with exponents in (1/2)Z, stored with doubled exponents.

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace crystal {

class QLaurent {
public:
    using Coef = std::int64_t;

    QLaurent() = default;
    static QLaurent one() { return monomial_x2(0); }
    static QLaurent monomial_x2(int e2, Coef c = 1) {
        QLaurent p;
        p.add_x2(e2, c);
        return p;
    }
    static QLaurent monomial(int e, Coef c = 1) { return monomial_x2(2 * e, c); }

    void add_x2(int e2, Coef c) {
        if (c == 0) return;
        auto it = terms_.find(e2);
        if (it == terms_.end()) {
            terms_.emplace(e2, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    void add(int e, Coef c) { add_x2(2 * e, c); }

    const std::map<int, Coef>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Coef coef_x2(int e2) const {
        auto it = terms_.find(e2);
        return it == terms_.end() ? 0 : it->second;
    }
    Coef at_one() const {
        Coef s = 0;
        for (auto& [e, c] : terms_) s += c;
        return s;
    }

    QLaurent& operator+=(const QLaurent& o) {
        for (auto& [e, c] : o.terms_) add_x2(e, c);
        return *this;
    }
    friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
    friend QLaurent operator*(const QLaurent& a, const QLaurent& b) {
        QLaurent r;
        for (auto& [ea, ca] : a.terms_)
            for (auto& [eb, cb] : b.terms_) r.add_x2(ea + eb, ca * cb);
        return r;
    }
    QLaurent& operator*=(const QLaurent& o) { return *this = *this * o; }

    // q -> q^{-1}
    QLaurent inverted() const {
        QLaurent r;
        for (auto& [e, c] : terms_) r.add_x2(-e, c);
        return r;
    }
    // q -> q^t
    QLaurent substitute_power(int t) const {
        QLaurent r;
        for (auto& [e, c] : terms_) r.add_x2(e * t, c);
        return r;
    }
    QLaurent shifted_x2(int e2) const {
        QLaurent r;
        for (auto& [e, c] : terms_) r.add_x2(e + e2, c);
        return r;
    }

    bool operator==(const QLaurent&) const = default;

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [e, c] : terms_) {
            if (!first) os << (c < 0 ? " - " : " + ");
            else if (c < 0) os << "-";
            first = false;
            Coef a = c < 0 ? -c : c;
            if (e == 0) {
                os << a;
                continue;
            }
            if (a != 1) os << a << "*";
            os << "q";
            if (e != 2) {
                os << "^";
                if (e % 2 == 0) os << e / 2;
                else os << "(" << e << "/2)";
            }
        }
        return os.str();
    }

private:
    std::map<int, Coef> terms_;
};

// Gaussian binomial [m+p choose m] in q^t; zero unless m,p >= 0.
inline QLaurent qbinom(int m, int p, int t = 1) {
    if (m < 0 || p < 0) return {};
    int maxsz = m * p;
    // cur[k][s]: partitions with exactly k parts, each <= p, of size s
    std::vector<std::vector<QLaurent::Coef>> cur(m + 1, std::vector<QLaurent::Coef>(maxsz + 1, 0));
    cur[0][0] = 1;
    for (int part = 1; part <= p; ++part) {
        for (int k = 1; k <= m; ++k)
            for (int s = part; s <= maxsz; ++s) cur[k][s] += cur[k - 1][s - part];
    }
    QLaurent r;
    for (int k = 0; k <= m; ++k)
        for (int s = 0; s <= maxsz; ++s)
            if (cur[k][s]) r.add(s * t, cur[k][s]);
    return r;
}

}  // namespace crystal
