#include <doctest.h>

#include <crystal/tableau.hpp>

#include "oracles.hpp"

using namespace crystal;

TEST_CASE("insert merges two columns") {
    Tableau p = insert(Word{4, 2, 6, 5, 2, 1});
    auto cols = p.columns();
    REQUIRE(cols.size() == 2);
    CHECK(cols[0] == Column{1, 2, 4, 6});
    CHECK(cols[1] == Column{2, 5});
}

TEST_CASE("insert of a single column is that column") {
    Tableau p = insert(Word{5, 3, 2});
    CHECK(p.rows == std::vector<std::vector<int>>{{2}, {3}, {5}});
}

TEST_CASE("insert equals the unique tableau word of the Knuth class") {
    for (int len = 0; len <= 6; ++len)
        oracle::for_each_word(len, 4, [&](const Word& w) {
            CHECK(insert(w) == oracle::knuth_tableau(w));
        });
}

TEST_CASE("insert is constant on Knuth classes") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        Word w(6);
        for (int& x : w) x = std::uniform_int_distribution<int>(1, 4)(rng);
        Tableau p = insert(w);
        for (auto& v : oracle::knuth_class(w)) CHECK(insert(v) == p);
    }
}

TEST_CASE("P(P(u)P(v)) = P(uv)") {
    Word u{3, 1, 2, 2}, v{4, 1, 3};
    Word uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    Word pp = insert(u).reading_word();
    Word pv = insert(v).reading_word();
    pp.insert(pp.end(), pv.begin(), pv.end());
    CHECK(insert(pp) == insert(uv));
}

TEST_CASE("record of one column is a row of ones") {
    Tableau q = record({{3, 2, 1}});
    CHECK(q.rows == std::vector<std::vector<int>>{{1, 1, 1}});
}

TEST_CASE("record shape is the transpose of the P shape") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        ColumnWords cw;
        int N = std::uniform_int_distribution<int>(1, 4)(rng);
        for (int j = 0; j < N; ++j) {
            Word c;
            for (int x = 4; x >= 1; --x)
                if (rng() % 2) c.push_back(x);
            cw.push_back(c);
        }
        Tableau q = record(cw);
        CHECK(q.shape() == transpose(insert(concat(cw)).shape()));
        CHECK(q.is_semistandard());
    }
}

TEST_CASE("dual word of the two-column example") {
    ColumnWords cw{{4, 2}, {6, 5, 2, 1}};
    ColumnWords d = dual_columns(cw, 6);
    CHECK(d == ColumnWords{{4, 3}, {6, 5, 3, 1}});
    Tableau p = insert(concat(d));
    auto cols = p.columns();
    CHECK(cols[0] == Column{1, 3, 4, 6});
    CHECK(cols[1] == Column{3, 5});
    // P(u^vee) = P(u)^vee
    CHECK(dual_tableau(insert(concat(cw)), 2, 6) == p);
}

TEST_CASE("full column and empty column are dual") {
    CHECK(dual_columns({{3, 2, 1}}, 3) == ColumnWords{{}});
    CHECK(dual_columns({{}}, 3) == ColumnWords{{3, 2, 1}});
}

TEST_CASE("dual word rejects a non-decreasing factor") {
    CHECK_THROWS_AS(dual_columns({{1, 2}}, 3), std::invalid_argument);
}

TEST_CASE("shape of the dual tableau inside a 3x3 box") {
    const int n = 3, N = 3;
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= a; ++b)
            for (int c = 0; c <= b; ++c) {
                Partition sh = trim({a, b, c});
                for (auto& t : all_ssyt(sh, n)) {
                    Tableau d = dual_tableau(t, N, n);
                    Partition ds = d.shape();
                    ds.resize(n, 0);
                    Partition s3 = sh;
                    s3.resize(n, 0);
                    for (int i = 0; i < n; ++i) CHECK(ds[i] == N - s3[n - 1 - i]);
                    CHECK(dual_tableau(d, N, n) == t);
                }
            }
}

TEST_CASE("star and evacuation") {
    CHECK(star(Word{1, 2}, 2) == Word{1, 2});
    Tableau sq({{1, 1}, {2, 2}});
    CHECK(evacuate(sq, 2) == sq);
    for (auto& t : all_ssyt({2, 1}, 3)) {
        Tableau e = evacuate(t, 3);
        CHECK(e.shape() == t.shape());
        CHECK(evacuate(e, 3) == t);
    }
}

TEST_CASE("evacuation of a rectangle is the rotated complement") {
    for (auto& t : all_ssyt({2, 2}, 3)) {
        Tableau rot = t;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) rot.rows[i][j] = 4 - t.rows[1 - i][1 - j];
        CHECK(evacuate(t, 3) == rot);
    }
}

static ColumnWords star_cols(const ColumnWords& c, int n) {
    ColumnWords out;
    for (auto it = c.rbegin(); it != c.rend(); ++it) out.push_back(star(*it, n));
    return out;
}

static std::vector<Word> all_columns(int n) {
    std::vector<Word> out;
    for (int m = 0; m < (1 << n); ++m) {
        Word c;
        for (int x = n; x >= 1; --x)
            if (m >> (x - 1) & 1) c.push_back(x);
        out.push_back(c);
    }
    return out;
}

TEST_CASE("dual and star commute on column factorizations") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        ColumnWords cw;
        for (int j = 0; j < 3; ++j) cw.push_back(all_columns(4)[rng() % 16]);
        CHECK(star_cols(dual_columns(cw, 4), 4) == dual_columns(star_cols(cw, 4), 4));
        CHECK(dual_columns(dual_columns(cw, 4), 4) == cw);
    }
}

TEST_CASE("recording tableau of the dual star factorization") {
    for (int n = 1; n <= 3; ++n)
        for (int N = 1; N <= 3; ++N) {
            auto cols = all_columns(n);
            ColumnWords cw(N);
            std::function<void(int)> rec = [&](int j) {
                if (j == N) {
                    Tableau lhs = record(star_cols(dual_columns(cw, n), n));
                    Tableau rhs = insert(concat(dual_columns(tableau_column_words(record(cw), n), N)));
                    CHECK(lhs == rhs);
                    return;
                }
                for (auto& c : cols) {
                    cw[j] = c;
                    rec(j + 1);
                }
            };
            rec(0);
        }
}

TEST_CASE("restrict") {
    CHECK(restrict_word({3, 1, 4, 2}, 1, 2) == Word{1, 2});
    CHECK(restrict_word({3, 1, 4, 2}, 1, 4) == Word{3, 1, 4, 2});
    for (int len = 0; len <= 5; ++len)
        oracle::for_each_word(len, 4, [&](const Word& w) {
            Tableau p = insert(w);
            // restriction of the tableau word is Knuth equivalent to the restriction of w
            CHECK(insert(restrict_word(w, 2, 3)) == insert(restrict_word(p.reading_word(), 2, 3)));
            CHECK(insert(restrict_word(w, 1, 2)) == insert(restrict_word(p.reading_word(), 1, 2)));
        });
}

TEST_CASE("partition helpers") {
    CHECK(transpose(Partition{3, 1}) == Partition{2, 1, 1});
    CHECK(transpose(transpose(Partition{4, 2, 2, 1})) == Partition{4, 2, 2, 1});
    CHECK(Qi({3, 2, 1}, 2) == 5);
    Partition p{5, 3, 3, 1};
    for (int i = 1; i < 6; ++i) CHECK(Qi(p, i) <= Qi(p, i + 1));
    CHECK(partitions_of(5).size() == 7);
}
