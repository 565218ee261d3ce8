#include <doctest.h>

#include <algorithm>
#include <set>
#include <thread>

#include "pichar/symdeg.hpp"

using namespace pichar;

namespace {

Partition P(const char* text) { return Partition::parse(text); }

std::multiset<BigInt> degree_multiset(const std::vector<SymRecord>& records) {
    std::multiset<BigInt> out;
    for (const auto& r : records) out.insert(r.degree);
    return out;
}

std::multiset<BigInt> degree_multiset(const std::vector<AltRecord>& records) {
    std::multiset<BigInt> out;
    for (const auto& r : records) out.insert(r.degree);
    return out;
}

std::multiset<BigInt> big_multiset(std::initializer_list<long long> values) {
    std::multiset<BigInt> out;
    for (long long v : values) out.insert(BigInt(v));
    return out;
}

}  // namespace

TEST_CASE("nu") {
    CHECK(nu(BigInt(70), 2) == 1);
    CHECK(nu(BigInt(70), 3) == 0);
    CHECK(nu(BigInt(103680), 2) == 8);
    CHECK(nu(70LL, 2) == 1);
    CHECK_THROWS_AS(nu(BigInt(0), 2), std::domain_error);
    CHECK_THROWS_AS(nu(0LL, 5), std::domain_error);
}

TEST_CASE("factorial cache is usable concurrently") {
    std::vector<std::thread> pool;
    for (int t = 0; t < 8; ++t)
        pool.emplace_back([] {
            for (int n = 0; n <= 60; ++n) factorial(n);
        });
    for (auto& th : pool) th.join();
    CHECK(factorial(5) == 120);
    CHECK(factorial(0) == 1);
    CHECK(nu(factorial(40), 2) == nu_factorial(40, 2));
}

TEST_CASE("p-adic digits") {
    const auto d = PAdicDigits::of(9, 2);
    CHECK(d.digits == std::vector<int>{1, 0, 0, 1});
    CHECK(d.sum() == 2);
    CHECK(d.reconstruct() == 9);
    CHECK(PAdicDigits::of(0, 3).digits.empty());
    for (int n = 0; n <= 200; ++n)
        for (int p : {2, 3, 5, 7}) CHECK(PAdicDigits::of(n, p).reconstruct() == n);
}

TEST_CASE("degree_hook_formula") {
    CHECK(degree_hook_formula(P("1^5")) == 1);
    CHECK(degree_hook_formula(P("5,1^4")) == 70);
    CHECK(degree_hook_formula(P("2,2,1^6")) == 35);
    CHECK(degree_hook_formula(P("4,2,1,1")) == 90);
    CHECK(degree_hook_formula(P("10,1^9")) == 48620);
}

TEST_CASE("valuation routes agree") {
    CHECK(nu_p_from_tower(P("5,1^4"), 2) == 1);
    CHECK(nu_p_from_tower(P("12"), 5) == 0);
    CHECK(nu_p_from_tower(P("2,1"), 3) == 0);

    for (int n = 1; n <= 16; ++n)
        for (const auto& lambda : enumerate_partitions(n)) {
            const BigInt degree = degree_hook_formula(lambda);
            for (int p : primes_up_to(n)) {
                const int direct = nu(degree, p);
                CHECK(nu_p_from_tower(lambda, p) == direct);
                CHECK(nu_p_from_hooks(lambda, p) == direct);
            }
        }
}

TEST_CASE("is_p_prime_degree and the top-hook recursion route") {
    for (const auto& lambda : hook_partitions(8)) CHECK(is_p_prime_degree(lambda, 2));
    CHECK(is_p_prime_degree(P("5,1,1,1"), 2));
    CHECK_FALSE(is_p_prime_degree(P("2,2"), 2));
    CHECK(is_p_prime_degree(P("2,2,1^6"), 3));

    for (int n = 1; n <= 16; ++n)
        for (const auto& lambda : enumerate_partitions(n))
            for (int p : primes_up_to(n))
                CHECK(is_p_prime_degree(lambda, p) == is_p_prime_degree_top_hooks(lambda, p));
}

TEST_CASE("is_pi_prime_degree") {
    const int pi23[] = {2, 3};
    const int pi2[] = {2};
    CHECK(is_pi_prime_degree(P("2,2,1^6"), pi23));
    CHECK(is_pi_prime_degree(P("12"), pi23));
    CHECK(is_pi_prime_degree(P("2,1,1"), pi2));  // degree 3
    const int pi3[] = {3};
    CHECK_FALSE(is_pi_prime_degree(P("2,1,1"), pi3));
    CHECK_THROWS_AS(is_pi_prime_degree(P("3,1"), std::span<const int>{}), std::invalid_argument);
}

TEST_CASE("sym_degrees") {
    CHECK(degree_multiset(sym_degrees(3)) == big_multiset({1, 1, 2}));
    CHECK(degree_multiset(sym_degrees(5)) == big_multiset({1, 1, 4, 4, 5, 5, 6}));
    const auto seven = sym_degrees(7);
    CHECK(seven.size() == 15);
    BigInt sum = 0;
    for (const auto& r : seven) {
        CHECK(r.mult == 1);
        sum += r.degree * r.degree;
    }
    CHECK(sum == factorial(7));
}

TEST_CASE("alt_degrees") {
    CHECK(degree_multiset(alt_degrees(5)) == big_multiset({1, 3, 3, 4, 5}));
    CHECK(degree_multiset(alt_degrees(7)) ==
          big_multiset({1, 6, 10, 10, 14, 14, 15, 21, 35}));
    CHECK(degree_multiset(alt_degrees(8)) ==
          big_multiset({1, 7, 14, 20, 21, 21, 21, 28, 35, 45, 45, 56, 64, 70}));

    int split_35 = 0;
    for (const auto& r : alt_degrees(9))
        if (r.label.lambda == P("5,1^4") && r.degree == 35 && r.label.split) ++split_35;
    CHECK(split_35 == 2);

    CHECK_THROWS_AS(alt_degrees(2), std::invalid_argument);

    // canonical representatives are the lex-largest of each conjugate pair,
    // split labels carry indices 0 and 1
    for (int n = 3; n <= 12; ++n) {
        BigInt sum = 0;
        for (const auto& r : alt_degrees(n)) {
            CHECK(r.label.lambda >= r.label.lambda.conjugate());
            CHECK(r.label.split == (r.label.lambda == r.label.lambda.conjugate()));
            if (r.label.split) CHECK((r.label.split_index == 0 || r.label.split_index == 1));
            sum += r.degree * r.degree;
        }
        CHECK(sum * 2 == factorial(n));
    }
}

TEST_CASE("record serialization") {
    CHECK(record_json_line(SymRecord{P("5,1^4"), BigInt(70), 1}) ==
          R"({"label":"5,1^4","degree":"70","mult":1,"split":false})");
    CHECK(record_json_line(AltRecord{AltLabel{P("5,1^4"), true, 1}, BigInt(35), 1}) ==
          R"({"label":"5,1^4#1","degree":"35","mult":1,"split":true})");
}

TEST_CASE("prime helpers") {
    CHECK(primes_up_to(10) == std::vector<int>{2, 3, 5, 7});
    CHECK(primes_up_to(1).empty());
    CHECK(is_prime(2));
    CHECK(is_prime(31));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(57));
}
