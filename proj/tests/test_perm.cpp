#include <doctest.h>

#include <vector>

#include "cycperm/errors.hpp"
#include "cycperm/perm.hpp"
#include "test_util.hpp"

using namespace cycperm;

namespace {
Permutation P(std::vector<int> v) { return Permutation(std::move(v)); }
CyclicPerm cp(std::vector<int> v) { return CyclicPerm(P(std::move(v))); }
}  // namespace

TEST_CASE("permutation construction and validation") {
    CHECK(P({}).empty());
    CHECK(P({4, 2, 3, 5, 1}).size() == 5);
    CHECK(P({4, 2, 3, 5, 1}).at(0) == 4);
    CHECK(P({4, 2, 3, 5, 1}).at(4) == 1);
    CHECK_THROWS_AS(P({1, 1}), InvalidInput);
    CHECK_THROWS_AS(P({0, 1}), InvalidInput);
    CHECK_THROWS_AS(P({2, 3}), InvalidInput);
    CHECK(Permutation::identity(4).str() == "1234");
    CHECK(Permutation::decreasing(4).str() == "4321");
    CHECK(Permutation::identity(0).empty());
}

TEST_CASE("str uses digits up to length 9 and commas beyond") {
    CHECK(P({4, 2, 3, 5, 1}).str() == "42351");
    std::vector<int> big(10);
    for (int i = 0; i < 10; ++i) big[static_cast<std::size_t>(i)] = 10 - i;
    CHECK(P(big).str() == "10,9,8,7,6,5,4,3,2,1");
}

TEST_CASE("standardize") {
    const std::vector<int> seq{4, 2, 5, 1};
    CHECK(standardize(seq) == P({3, 2, 4, 1}));
    const std::vector<int> empty;
    CHECK(standardize(empty).empty());
}

TEST_CASE("rotations and canonical form") {
    const auto rots = rotations(P({4, 2, 3, 5, 1}));
    REQUIRE(rots.size() == 5);
    CHECK(rots[0].str() == "42351");
    CHECK(rots[1].str() == "23514");
    CHECK(rots[2].str() == "35142");
    CHECK(rots[3].str() == "51423");
    CHECK(rots[4].str() == "14235");

    CHECK(P({4, 2, 3, 5, 1}).rotated(2).str() == "35142");
    CHECK(canonical(P({3, 2, 1, 4})).str() == "[1432]");
    CHECK(cp({4, 2, 3, 5, 1}) == cp({2, 3, 5, 1, 4}));
    CHECK(cp({4, 2, 3, 5, 1}).str() == "[14235]");
    CHECK(CyclicPerm::from_canonical_unchecked({1, 4, 2, 3, 5}) == cp({4, 2, 3, 5, 1}));
    CHECK_THROWS_AS(CyclicPerm(P({})), InvalidInput);
}

TEST_CASE("reversal and complement") {
    CHECK(reversal(P({4, 2, 3, 5, 1})) == P({1, 5, 3, 2, 4}));
    CHECK(complement(P({4, 2, 3, 5, 1})) == P({2, 4, 3, 1, 5}));
    CHECK(reverse_complement(P({4, 2, 3, 5, 1})) == P({5, 1, 3, 4, 2}));
    CHECK(reverse_complement(P({4, 2, 3, 5, 1})) == complement(reversal(P({4, 2, 3, 5, 1}))));
}

TEST_CASE("symmetries act on the six length-4 classes as the expected involution pairs") {
    const CyclicPerm A = cp({1, 2, 3, 4});
    const CyclicPerm B = cp({1, 2, 4, 3});
    const CyclicPerm C = cp({1, 3, 2, 4});
    const CyclicPerm D = cp({1, 3, 4, 2});
    const CyclicPerm E = cp({1, 4, 2, 3});
    const CyclicPerm F = cp({1, 4, 3, 2});

    // reversal swaps (A F)(B D)(C E)
    CHECK(reversal(A) == F);
    CHECK(reversal(B) == D);
    CHECK(reversal(C) == E);
    CHECK(reversal(D) == B);
    CHECK(reversal(E) == C);
    CHECK(reversal(F) == A);
    // complement swaps (A F)(C E), fixing B and D
    CHECK(complement(A) == F);
    CHECK(complement(B) == B);
    CHECK(complement(C) == E);
    CHECK(complement(D) == D);
    CHECK(complement(E) == C);
    CHECK(complement(F) == A);
    // reverse-complement swaps (B D), fixing A, C, E, F
    CHECK(reverse_complement(A) == A);
    CHECK(reverse_complement(B) == D);
    CHECK(reverse_complement(C) == C);
    CHECK(reverse_complement(D) == B);
    CHECK(reverse_complement(E) == E);
    CHECK(reverse_complement(F) == F);
}

TEST_CASE("inflation") {
    CHECK(inflate(P({1, 3, 2}), {P({2, 1}), P({1}), P({2, 1, 3})}) == P({2, 1, 6, 4, 3, 5}));
    CHECK(inflate(P({2, 1}), {P({2, 1}), P({1, 2})}) == P({4, 3, 1, 2}));
    CHECK(inflate(P({}), {}) == P({}));
    CHECK_THROWS_AS(inflate(P({2, 1}), {P({1})}), InvalidInput);
}

TEST_CASE("shuffle sets") {
    const std::vector<int> rho{1, 2}, tau{3, 4};
    const auto shuffles = shuffle_set(rho, tau);
    const std::vector<std::vector<int>> expected{{1, 2, 3, 4}, {1, 3, 2, 4}, {1, 3, 4, 2},
                                                 {3, 1, 2, 4}, {3, 1, 4, 2}, {3, 4, 1, 2}};
    CHECK(shuffles == expected);

    const std::vector<int> clash{2, 3};
    CHECK_THROWS_AS(shuffle_set(rho, clash), InvalidInput);
}

TEST_CASE("arithmetic decreasing blocks") {
    CHECK(arithmetic_decreasing({5, 2, 3}) == std::vector<int>{11, 9, 7, 5, 3});
    CHECK(arithmetic_decreasing({1, 7, 4}) == std::vector<int>{4});
}

TEST_CASE("properties: rotation invariance and involutions") {
    auto rng = seeded_rng();
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const Permutation p(random_word(rng, n));
        const int k = static_cast<int>(rng() % static_cast<unsigned long long>(n));
        CHECK(canonical(p.rotated(k)) == canonical(p));
        CHECK(reversal(reversal(p)) == p);
        CHECK(complement(complement(p)) == p);
        CHECK(standardize(p.values()) == p);
        CHECK(reverse_complement(reverse_complement(canonical(p))) == canonical(p));
    }
}
