#include <hlb/partition.hpp>

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace hlb;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }
}

TEST_CASE("enumeration counts and order") {
    CHECK(enumerate_partitions(0).size() == 1);
    CHECK(enumerate_partitions(0)[0] == P({}));
    CHECK(enumerate_partitions(4).size() == 5);
    CHECK(enumerate_partitions(6).size() == 11);
    auto l = enumerate_partitions(5);
    CHECK(l.front() == P({5}));
    CHECK(l.back() == P({1, 1, 1, 1, 1}));
    std::set<Partition> uniq(l.begin(), l.end());
    CHECK(uniq.size() == l.size());
}

TEST_CASE("basic statistics") {
    CHECK(P({}).n_stat() == 0);
    CHECK(P({2, 1}).n_stat() == 1);
    CHECK(P({1, 1, 1}).n_stat() == 3);
    CHECK(P({3, 3, 1}).mult(3) == 2);
    CHECK(P({3, 3, 1}).mult(2) == 0);
    CHECK(P({3, 3, 1}).mult(1) == 1);
    CHECK(P({3, 1}).transpose() == P({2, 1, 1}));
    CHECK_THROWS(P({1, 2}));
    CHECK_THROWS(P({1, -1}));
    CHECK(Partition(std::vector<int>{2, 1, 0, 0}) == P({2, 1})); // trailing zeros trimmed
}

TEST_CASE("transpose involution and n_stat via columns") {
    for (int n = 0; n <= 12; ++n)
        for (const auto& lam : enumerate_partitions(n)) {
            Partition tr = lam.transpose();
            CHECK(tr.transpose() == lam);
            long s = 0;
            for (int c : tr.parts()) s += (long)c * (c - 1) / 2;
            CHECK(lam.n_stat() == s);
        }
}

TEST_CASE("single covers") {
    auto c0 = single_covers(P({}));
    REQUIRE(c0.size() == 1);
    CHECK(c0[0] == std::pair{P({1}), 1});

    auto c1 = single_covers(P({1}));
    REQUIRE(c1.size() == 2);
    CHECK(c1[0] == std::pair{P({2}), 2});
    CHECK(c1[1] == std::pair{P({1, 1}), 1});

    auto c21 = single_covers(P({2, 1}));
    REQUIRE(c21.size() == 3);
    CHECK(c21[0] == std::pair{P({3, 1}), 3});
    CHECK(c21[1] == std::pair{P({2, 2}), 2});
    CHECK(c21[2] == std::pair{P({2, 1, 1}), 1});

    for (int n = 0; n <= 8; ++n)
        for (const auto& mu : enumerate_partitions(n)) {
            auto covers = single_covers(mu);
            std::set<int> distinct(mu.parts().begin(), mu.parts().end());
            CHECK(covers.size() == distinct.size() + 1);
            for (const auto& [lam, k] : covers) {
                (void)k;
                CHECK(lam.size() == n + 1);
                CHECK(lam.contains(mu));
            }
        }
}

TEST_CASE("double covers and case tags") {
    using K = DoubleCoverCase;
    auto c0 = double_covers(P({}));
    REQUIRE(c0.size() == 2);
    CHECK(c0[0] == std::pair{P({2}), K{K::ConsecutiveColumns, 1}});
    CHECK(c0[1] == std::pair{P({1, 1}), K{K::VerticalDomino, 1}});

    auto c1 = double_covers(P({1}));
    REQUIRE(c1.size() == 3);
    CHECK(c1[0] == std::pair{P({3}), K{K::ConsecutiveColumns, 2}});
    CHECK(c1[1] == std::pair{P({2, 1}), K{K::ConsecutiveColumns, 1}});
    CHECK(c1[2] == std::pair{P({1, 1, 1}), K{K::VerticalDomino, 1}});

    // a horizontal domino in row 2 occupies columns 1,2 -> consecutive-columns
    auto c2 = double_covers(P({2}));
    bool saw22 = false, saw211 = false;
    for (const auto& [lam, dc] : c2) {
        if (lam == P({2, 2})) { saw22 = true; CHECK(dc == K{K::ConsecutiveColumns, 1}); }
        if (lam == P({2, 1, 1})) { saw211 = true; CHECK(dc == K{K::VerticalDomino, 1}); }
        CHECK(lam != P({3, 1})); // columns 1 and 3: not a double cover
    }
    CHECK(saw22);
    CHECK(saw211);

    for (int n = 0; n <= 8; ++n)
        for (const auto& mu : enumerate_partitions(n))
            for (const auto& [lam, dc] : double_covers(mu)) {
                CHECK(lam.size() == n + 2);
                CHECK(lam.contains(mu));
                std::vector<int> cols;
                for (int i = 0; i < lam.length(); ++i)
                    for (int c = mu.part(i) + 1; c <= lam.part(i); ++c) cols.push_back(c);
                REQUIRE(cols.size() == 2);
                std::sort(cols.begin(), cols.end());
                if (dc.kind == K::VerticalDomino) {
                    CHECK(cols[0] == cols[1]);
                    CHECK(cols[0] == dc.column);
                } else {
                    CHECK(cols[1] == cols[0] + 1);
                    CHECK(cols[0] == dc.column);
                }
            }
}

TEST_CASE("two-core") {
    CHECK(two_core(P({1})) == P({1}));
    CHECK(two_core(P({2, 1})) == P({2, 1}));
    CHECK(two_core(P({2, 2})) == P({}));
    for (int n = 0; n <= 10; ++n)
        for (const auto& lam : enumerate_partitions(n)) {
            Partition core = two_core(lam);
            CHECK(core.size() % 2 == n % 2);
            int m = core.length();
            std::vector<int> stair;
            for (int i = m; i >= 1; --i) stair.push_back(i);
            CHECK(core == Partition(stair));
        }
}
