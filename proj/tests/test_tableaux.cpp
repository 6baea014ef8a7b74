#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "schurtwirl/tableaux.hpp"

using namespace schurtwirl;

namespace {

// Independent oracle: count standard fillings by brute force over all
// permutations of 1..t placed row-major.
long count_standard_brute(const Partition& p) {
    int t = p.box_count();
    std::vector<int> fill(t);
    std::iota(fill.begin(), fill.end(), 1);
    long count = 0;
    do {
        StandardTableau tab;
        tab.shape = p;
        size_t pos = 0;
        for (int len : p.rows) {
            tab.entries.emplace_back(fill.begin() + pos, fill.begin() + pos + len);
            pos += len;
        }
        if (tab.is_standard()) ++count;
    } while (std::next_permutation(fill.begin(), fill.end()));
    return count;
}

}  // namespace

TEST_CASE("partition enumeration, fixed block order") {
    auto p32 = enumerate_partitions(3, 2);
    REQUIRE(p32.size() == 2);
    CHECK(p32[0].rows == std::vector<int>{3});
    CHECK(p32[1].rows == std::vector<int>{2, 1});

    auto p42 = enumerate_partitions(4, 2);
    REQUIRE(p42.size() == 3);
    CHECK(p42[0].rows == std::vector<int>{4});
    CHECK(p42[1].rows == std::vector<int>{3, 1});
    CHECK(p42[2].rows == std::vector<int>{2, 2});

    auto p15 = enumerate_partitions(1, 5);
    REQUIRE(p15.size() == 1);
    CHECK(p15[0].rows == std::vector<int>{1});
}

TEST_CASE("enumeration is deterministic and lexicographically decreasing") {
    auto a = enumerate_partitions(6, 4);
    auto b = enumerate_partitions(6, 4);
    CHECK(a == b);
    for (size_t i = 0; i + 1 < a.size(); ++i) CHECK(a[i].rows > a[i + 1].rows);
}

TEST_CASE("Weyl dimension") {
    CHECK(weyl_dimension(Partition{{3}}, 2) == 4);
    CHECK(weyl_dimension(Partition{{2, 1}}, 2) == 2);
    for (int d = 1; d <= 6; ++d) CHECK(weyl_dimension(Partition{{1}}, d) == d);
    CHECK_THROWS_AS(weyl_dimension(Partition{{1, 1, 1}}, 2), std::invalid_argument);
}

TEST_CASE("hook dimension") {
    CHECK(hook_dimension(Partition{{2, 1}}) == 2);
    for (int t = 1; t <= 8; ++t) CHECK(hook_dimension(Partition{{t}}) == 1);
    CHECK(hook_dimension(Partition{{3, 1}}) == 3);
    CHECK(hook_dimension(Partition{{3, 1}}) == count_standard_brute(Partition{{3, 1}}));
    CHECK(hook_dimension(Partition{{2, 2}}) == count_standard_brute(Partition{{2, 2}}));
    CHECK(hook_dimension(Partition{{3, 2, 1}}) == count_standard_brute(Partition{{3, 2, 1}}));
}

TEST_CASE("standard tableaux enumeration and ordering") {
    auto tabs21 = standard_tableaux(Partition{{2, 1}});
    REQUIRE(tabs21.size() == 2);
    CHECK(tabs21[0].entries == std::vector<std::vector<int>>{{1, 2}, {3}});
    CHECK(tabs21[1].entries == std::vector<std::vector<int>>{{1, 3}, {2}});

    auto tabs22 = standard_tableaux(Partition{{2, 2}});
    CHECK(tabs22.size() == 2);

    for (int t = 1; t <= 5; ++t) {
        auto single = standard_tableaux(Partition{{t}});
        REQUIRE(single.size() == 1);
        std::vector<int> expect(t);
        std::iota(expect.begin(), expect.end(), 1);
        CHECK(single[0].entries[0] == expect);
    }
}

TEST_CASE("tableau count equals hook dimension for t <= 6") {
    for (int t = 1; t <= 6; ++t)
        for (const auto& p : enumerate_partitions(t, t)) {
            auto tabs = standard_tableaux(p);
            CHECK((long)tabs.size() == hook_dimension(p));
            for (const auto& tab : tabs) CHECK(tab.is_standard());
            // normal tableau comes first
            std::vector<int> normal(t);
            std::iota(normal.begin(), normal.end(), 1);
            CHECK(tabs[0].reading_word() == normal);
        }
}

TEST_CASE("decomposition completeness: sum D_L * D_V = d^t") {
    for (int d = 2; d <= 10; ++d) {
        long pow = d;
        for (int t = 1; pow <= 1024; ++t, pow *= d) {
            long total = 0;
            for (const auto& p : enumerate_partitions(t, d))
                total += weyl_dimension(p, d) * hook_dimension(p);
            CHECK(total == pow);
        }
    }
}
