#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "pichar/partition.hpp"

using namespace pichar;

namespace {

Partition P(const char* text) { return Partition::parse(text); }

}  // namespace

TEST_CASE("partition construction and validation") {
    CHECK(Partition{}.size() == 0);
    CHECK(Partition{}.empty());
    CHECK(P("3,1").parts() == std::vector<int>{3, 1});
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
}

TEST_CASE("partition text round trip") {
    CHECK(P("5,1^4").parts() == std::vector<int>{5, 1, 1, 1, 1});
    CHECK(P("[]").empty());
    CHECK(P("2^2,1^6").to_string() == "2^2,1^6");
    CHECK(P("9").to_string() == "9");
    CHECK(Partition{}.to_string() == "[]");
    CHECK_THROWS_AS(P("3,x"), std::invalid_argument);
    CHECK_THROWS_AS(P("3,4"), std::invalid_argument);
    CHECK_THROWS_AS(P("2^0"), std::invalid_argument);

    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = std::uniform_int_distribution<int>(0, 18)(rng);
        for (const auto& p : enumerate_partitions(n))
            CHECK(Partition::parse(p.to_string()) == p);
    }
}

TEST_CASE("enumerate_partitions order and counts") {
    CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition{}});

    const auto four = enumerate_partitions(4);
    REQUIRE(four.size() == 5);
    CHECK(four[0] == P("4"));
    CHECK(four[1] == P("3,1"));
    CHECK(four[2] == P("2,2"));
    CHECK(four[3] == P("2,1,1"));
    CHECK(four[4] == P("1,1,1,1"));

    CHECK(enumerate_partitions(30).size() == 5604);

    // counts match the pentagonal recurrence; order is strictly decreasing
    const auto counts = oracles::partition_counts(22);
    for (int n = 0; n <= 22; ++n) {
        const auto all = enumerate_partitions(n);
        CHECK(static_cast<long long>(all.size()) == counts[static_cast<size_t>(n)]);
        for (size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] > all[i]);
    }
}

TEST_CASE("conjugate") {
    CHECK(P("3,1").conjugate() == P("2,1,1"));
    CHECK(P("2,1").conjugate() == P("2,1"));
    CHECK(P("5,1^4").conjugate() == P("5,1^4"));
    CHECK(Partition{}.conjugate() == Partition{});

    for (int n = 0; n <= 16; ++n)
        for (const auto& p : enumerate_partitions(n)) {
            CHECK(p.conjugate() == oracles::transpose_diagram(p));
            CHECK(p.conjugate().conjugate() == p);
            auto hooks = hook_multiset(p);
            auto conj_hooks = hook_multiset(p.conjugate());
            std::sort(hooks.begin(), hooks.end());
            std::sort(conj_hooks.begin(), conj_hooks.end());
            CHECK(hooks == conj_hooks);
        }
}

TEST_CASE("hook lengths") {
    CHECK(hook_length(P("3,2"), {1, 1}) == 4);
    CHECK(hook_length(P("7"), {1, 1}) == 7);
    CHECK(hook_length(P("2,2,1^6"), {1, 1}) == 9);
    CHECK_THROWS_AS(hook_length(P("3,2"), {2, 3}), std::domain_error);
    CHECK_THROWS_AS(hook_length(P("3,2"), {3, 1}), std::domain_error);

    for (int n = 1; n <= 14; ++n)
        for (const auto& p : enumerate_partitions(n)) {
            size_t index = 0;
            const auto hooks = hook_multiset(p);
            REQUIRE(hooks.size() == static_cast<size_t>(n));
            for (int row = 1; row <= p.length(); ++row)
                for (int col = 1; col <= p.part(row); ++col) {
                    const int h = oracles::naive_hook_length(p, {row, col});
                    CHECK(hook_length(p, {row, col}) == h);
                    CHECK(hooks[index++] == h);
                }
        }
}

TEST_CASE("hook cells") {
    const auto cells = hook_cells(P("3,2"), {1, 1});
    CHECK(cells == std::vector<Cell>{{1, 1}, {1, 2}, {1, 3}, {2, 1}});
    CHECK(hook_cells(P("3,2"), {2, 2}) == std::vector<Cell>{{2, 2}});
    CHECK_THROWS_AS(hook_cells(P("3,2"), {1, 4}), std::domain_error);
}

TEST_CASE("e_hooks") {
    CHECK(e_hooks(P("2,1"), 2).empty());
    CHECK(e_hooks(P("4"), 2) == std::vector<Cell>{{1, 1}, {1, 3}});
    CHECK(e_hooks(P("5,1^4"), 8).empty());
    CHECK(e_hooks(P("5,1^4"), 4).size() == 2);

    // reported cells really carry divisible hook lengths, and no cell is missed
    for (int n = 1; n <= 14; ++n)
        for (const auto& p : enumerate_partitions(n))
            for (int e = 2; e <= n + 1; ++e) {
                const auto cells = e_hooks(p, e);
                const std::set<Cell> cell_set(cells.begin(), cells.end());
                CHECK(cell_set.size() == cells.size());
                int divisible = 0;
                for (int row = 1; row <= p.length(); ++row)
                    for (int col = 1; col <= p.part(row); ++col)
                        if (hook_length(p, {row, col}) % e == 0) {
                            ++divisible;
                            CHECK(cell_set.count({row, col}) == 1);
                        }
                CHECK(divisible == static_cast<int>(cells.size()));
            }
}

TEST_CASE("remove_hook") {
    CHECK(remove_hook(P("4"), {1, 3}) == P("2"));
    CHECK(remove_hook(P("2,1"), {1, 1}) == Partition{});
    CHECK(remove_hook(P("3,2"), {1, 1}) == P("1"));
    CHECK_THROWS_AS(remove_hook(P("3,2"), {1, 4}), std::domain_error);

    for (int n = 1; n <= 12; ++n)
        for (const auto& p : enumerate_partitions(n))
            for (int row = 1; row <= p.length(); ++row)
                for (int col = 1; col <= p.part(row); ++col) {
                    const Partition smaller = remove_hook(p, {row, col});
                    CHECK(smaller.size() == n - hook_length(p, {row, col}));
                }
}

TEST_CASE("e_core, e_weight, e_quotient") {
    CHECK(e_core(P("2,1"), 2) == P("2,1"));
    CHECK(e_core(P("4"), 2) == Partition{});
    CHECK(e_core(P("2,1"), 3) == Partition{});
    CHECK(e_weight(P("4"), 2) == 2);
    CHECK(e_weight(P("2,1"), 2) == 0);
    CHECK(e_weight(P("2,2,1^6"), 8) == 1);

    CHECK(e_quotient(P("2,1"), 2) == std::vector<Partition>{Partition{}, Partition{}});
    const auto q42 = e_quotient(P("4"), 2);
    REQUIRE(q42.size() == 2);
    CHECK(q42[0].size() + q42[1].size() == 2);
    const auto q325 = e_quotient(P("3,2"), 5);
    REQUIRE(q325.size() == 5);
    for (const auto& component : q325) CHECK(component.empty());

    for (int n = 1; n <= 13; ++n)
        for (const auto& p : enumerate_partitions(n))
            for (int e = 2; e <= n + 1; ++e) {
                const Partition core = e_core(p, e);
                CHECK(core == oracles::naive_e_core(p, e));
                CHECK(e_hooks(core, e).empty());
                const int w = e_weight(p, e);
                CHECK(n == e * w + core.size());
                CHECK(w == static_cast<int>(e_hooks(p, e).size()));
                int quotient_total = 0;
                for (const auto& component : e_quotient(p, e)) quotient_total += component.size();
                CHECK(quotient_total == w);
            }
}

TEST_CASE("e_quotient is independent of the beta-set padding") {
    // recompute with a beta-set two runners longer via a leading zero-row trick:
    // the convention fixes the quotient, so deleting one hook and checking sizes
    // suffices as a cross-check at small scale
    const auto q = e_quotient(P("6,4,2,1"), 3);
    int total = 0;
    for (const auto& component : q) total += component.size();
    CHECK(total == e_weight(P("6,4,2,1"), 3));
}

TEST_CASE("core_tower layers") {
    const auto t213 = core_tower(P("2,1"), 3);
    CHECK(t213.layer_sizes() == std::vector<int>{0, 1});

    const auto t1 = core_tower(P("1"), 5);
    CHECK(t1.layer_sizes() == std::vector<int>{1});

    const auto t514 = core_tower(P("5,1^4"), 2);
    CHECK(t514.layer_sizes() == std::vector<int>{1, 0, 2, 0});

    for (int n = 0; n <= 14; ++n)
        for (const auto& p : enumerate_partitions(n))
            for (int e : {2, 3, 5}) {
                const auto tower = core_tower(p, e);
                CHECK(tower.base == e);
                long long power = 1;
                long long weighted = 0;
                for (size_t j = 0; j < tower.layers.size(); ++j) {
                    CHECK(tower.layers[j].size() == static_cast<size_t>(power));
                    for (const auto& entry : tower.layers[j])
                        CHECK(e_hooks(entry, e).empty());  // every entry is an e-core
                    int layer = 0;
                    for (const auto& entry : tower.layers[j]) layer += entry.size();
                    weighted += layer * power;
                    power *= e;
                }
                CHECK(weighted == n);
                CHECK(power <= static_cast<long long>(std::max(n, 1)) * e);  // truncation bound
            }
}

TEST_CASE("quotient tower matches direct hook counts") {
    for (int n = 1; n <= 14; ++n)
        for (const auto& p : enumerate_partitions(n))
            for (int e : {2, 3}) {
                const auto towers = quotient_tower(p, e);
                long long pk = 1;
                for (size_t k = 0; k < towers.layers.size(); ++k) {
                    int total = 0;
                    for (const auto& entry : towers.layers[k]) total += entry.size();
                    if (k == 0) {
                        CHECK(total == n);
                    } else {
                        CHECK(total == static_cast<int>(e_hooks(p, static_cast<int>(pk)).size()));
                    }
                    pk *= e;
                }
            }
}

TEST_CASE("hook_partitions") {
    CHECK(hook_partitions(1) == std::vector<Partition>{P("1")});
    const auto hooks4 = hook_partitions(4);
    REQUIRE(hooks4.size() == 4);
    CHECK(hooks4[0] == P("4"));
    CHECK(hooks4[1] == P("3,1"));
    CHECK(hooks4[2] == P("2,1,1"));
    CHECK(hooks4[3] == P("1,1,1,1"));
    for (const auto& p : hook_partitions(8)) CHECK(p.part(2) <= 1);
    CHECK(hook_partitions(8).size() == 8);
}
