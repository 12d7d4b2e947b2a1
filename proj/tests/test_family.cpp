#include <doctest.h>

#include <algorithm>
#include <set>

#include "icm/family.hpp"
#include "oracles.hpp"

using icm::IdealFamily;
using icm::KunzVector;
using icm::NormalizedIdeal;
using icm::NumericalSemigroup;

TEST_CASE("ordinary families are the 0/1 box") {
    for (long long m = 1; m <= 8; ++m) {
        auto fam = icm::enumerate_normalized_ideals(NumericalSemigroup::ordinary(m));
        CHECK(fam.size() == (std::size_t{1} << (m - 1)));
        for (const auto& I : fam)
            for (auto c : I.kunz()) CHECK((c == 0 || c == 1));
    }
}

TEST_CASE("family of N is the empty vector alone") {
    auto fam = icm::enumerate_normalized_ideals(NumericalSemigroup::naturals());
    CHECK(fam.size() == 1);
    CHECK(fam[0].kunz().empty());
    CHECK(fam[0].is_full());
}

TEST_CASE("canonical order is strict lex") {
    for (auto gens : std::vector<std::vector<long long>>{{4, 9}, {3, 19, 23}, {5, 6, 9}}) {
        auto fam = icm::enumerate_normalized_ideals(NumericalSemigroup::from_generators(gens));
        for (std::size_t i = 0; i + 1 < fam.size(); ++i) CHECK(fam[i].kunz() < fam[i + 1].kunz());
    }
}

TEST_CASE("family against the gap-subset oracle") {
    for (const auto& S : icm::enumerate_by_genus(6)) {
        long long B = S.conductor() + 2 * S.multiplicity() + 2;
        auto mem = oracle::semigroup_members(S.minimal_generators(), B);
        auto want = oracle::all_normalized_ideals(mem, S.gaps(), S.frobenius(), B);
        auto fam = icm::enumerate_normalized_ideals(S);
        REQUIRE(fam.size() == want.size());
        std::vector<KunzVector> got, expect;
        for (const auto& I : fam) got.push_back(I.kunz());
        for (const auto& w : want) expect.push_back(oracle::kunz_of_set(w, S.multiplicity()));
        std::sort(got.begin(), got.end());
        std::sort(expect.begin(), expect.end());
        CHECK(got == expect);
    }
}

TEST_CASE("serial and parallel enumerations coincide") {
    for (auto gens : std::vector<std::vector<long long>>{{4, 9}, {3, 19, 23}, {5, 7, 9}, {2, 3}, {1}}) {
        auto S = NumericalSemigroup::from_generators(gens);
        auto a = icm::enumerate_normalized_ideals(S);
        auto b = icm::enumerate_normalized_ideals_serial(S);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
    }
    for (const auto& S : icm::enumerate_by_genus(5)) {
        auto a = icm::enumerate_normalized_ideals(S);
        auto b = icm::enumerate_normalized_ideals_serial(S);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
    }
}

TEST_CASE("family matches antichain count") {
    for (const auto& S : icm::enumerate_by_genus(7))
        CHECK(icm::enumerate_normalized_ideals(S).size() == static_cast<std::size_t>(icm::antichain_count(S)));
    auto deep = NumericalSemigroup::from_generators({3, 19, 23});
    CHECK(icm::enumerate_normalized_ideals(deep).size() == static_cast<std::size_t>(icm::antichain_count(deep)));
}

TEST_CASE("antichain count against the naive oracle") {
    for (const auto& S : icm::enumerate_by_genus(8)) {
        const auto& gaps = S.gaps();
        std::vector<std::vector<bool>> comp(gaps.size(), std::vector<bool>(gaps.size(), false));
        for (std::size_t i = 0; i < gaps.size(); ++i)
            for (std::size_t j = 0; j < gaps.size(); ++j)
                if (i != j && (S.leq_S(gaps[i], gaps[j]) || S.leq_S(gaps[j], gaps[i]))) comp[i][j] = true;
        CHECK(icm::antichain_count(S) == oracle::antichain_count_naive(comp));
    }
    CHECK(icm::antichain_count(NumericalSemigroup::naturals()) == 1);
    CHECK(icm::antichain_count(NumericalSemigroup::ordinary(4)) == 8);
}

TEST_CASE("antichain count beyond the subset-scan cutoff") {
    // 21 incomparable gaps vs a 21-chain: both go through the memoized path
    CHECK(icm::antichain_count(NumericalSemigroup::ordinary(22)) == (1LL << 21));
    CHECK(icm::antichain_count(NumericalSemigroup::from_generators({2, 43})) == 22);
    // boundary of the subset scan
    CHECK(icm::antichain_count(NumericalSemigroup::ordinary(21)) == (1LL << 20));
    CHECK(icm::antichain_count(NumericalSemigroup::from_generators({2, 41})) == 21);
    CHECK_THROWS_AS(icm::antichain_count(NumericalSemigroup::from_generators({2, 129})), icm::Error);
}

TEST_CASE("deep three-generator family") {
    auto S = NumericalSemigroup::from_generators({3, 19, 23});
    auto fam = icm::enumerate_normalized_ideals(S);
    CHECK(fam.size() == 55);
    CHECK(icm::antichain_count(S) == 55);
    CHECK(fam.contains(NormalizedIdeal::whole(S)));
    CHECK(fam.contains(NormalizedIdeal::full(S)));
    CHECK(fam[0].is_full());
    CHECK(fam[fam.size() - 1].kunz() == S.kunz());
}

TEST_CASE("family closure under the three operations") {
    for (auto gens : std::vector<std::vector<long long>>{{4, 9}, {3, 7}, {5, 6, 7, 8, 9}}) {
        auto S = NumericalSemigroup::from_generators(gens);
        auto fam = icm::enumerate_normalized_ideals(S);
        for (const auto& I : fam)
            for (const auto& J : fam) {
                CHECK(fam.contains(I + J));
                CHECK(fam.contains(I.unite(J)));
                CHECK(fam.contains(I.intersect(J)));
            }
    }
}

TEST_CASE("coordinate sum equals gap count of the ideal") {
    auto S = NumericalSemigroup::from_generators({4, 9});
    long long B = 2 * S.conductor() + 8;
    for (const auto& I : icm::enumerate_normalized_ideals(S)) {
        long long holes = 0;
        for (long long n = 0; n <= B; ++n)
            if (!I.contains(n)) ++holes;
        CHECK(I.genus() == holes);
    }
}

TEST_CASE("index lookup") {
    auto S = NumericalSemigroup::from_generators({4, 9});
    auto fam = icm::enumerate_normalized_ideals(S);
    for (std::size_t i = 0; i < fam.size(); ++i) {
        CHECK(fam.index_of(fam[i]) == i);
        CHECK(fam.index_of(fam[i].kunz()) == i);
    }
    CHECK_THROWS_AS(fam.index_of(KunzVector{9, 9, 9}), icm::Error);
    auto T = NumericalSemigroup::from_generators({3, 7});
    CHECK_THROWS_AS(fam.index_of(NormalizedIdeal::whole(T)), icm::AmbientMismatch);
    CHECK(!fam.contains(NormalizedIdeal::whole(T)));
}

TEST_CASE("principal family") {
    auto S37 = NumericalSemigroup::from_generators({3, 7});
    auto p = icm::principal_family(S37);
    CHECK(p.size() == 6);

    auto H4 = NumericalSemigroup::ordinary(4);
    auto p4 = icm::principal_family(H4);
    CHECK(p4.size() == 3);
    std::vector<KunzVector> got;
    for (const auto& I : p4) got.push_back(I.kunz());
    CHECK(got == std::vector<KunzVector>{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});

    CHECK(icm::principal_family(NumericalSemigroup::naturals()).empty());

    for (const auto& S : icm::enumerate_by_genus(6)) {
        auto fam = icm::enumerate_normalized_ideals(S);
        auto ps = icm::principal_family(S);
        CHECK(ps.size() == static_cast<std::size_t>(S.genus()));
        for (const auto& I : ps) {
            CHECK(fam.contains(I));
            auto mg = I.minimal_generators();
            REQUIRE(mg.size() == 2);
            CHECK(mg[0] == 0);
            CHECK(!S.contains(mg[1]));
        }
    }
}
