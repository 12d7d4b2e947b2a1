#include <doctest.h>

#include <algorithm>
#include <vector>

#include "icm/ideal.hpp"
#include "oracles.hpp"

using icm::KunzVector;
using icm::NormalizedIdeal;
using icm::NumericalSemigroup;

namespace {

// every ideal generated by a nonempty subset of pool, deduplicated
std::vector<NormalizedIdeal> ideals_from_subsets(const NumericalSemigroup& S, const std::vector<long long>& pool) {
    std::vector<NormalizedIdeal> out;
    for (std::size_t pick = 1; pick < (std::size_t{1} << pool.size()); ++pick) {
        std::vector<long long> X;
        for (std::size_t t = 0; t < pool.size(); ++t)
            if (pick & (std::size_t{1} << t)) X.push_back(pool[t]);
        auto I = NormalizedIdeal::from_generators(S, X);
        if (std::find(out.begin(), out.end(), I) == out.end()) out.push_back(I);
    }
    return out;
}

oracle::Set member_set(const NormalizedIdeal& I, long long bound) {
    oracle::Set out;
    for (long long v : I.members_upto(bound)) out.insert(v);
    return out;
}

} // namespace

TEST_CASE("from_kunz validation") {
    auto S = NumericalSemigroup::from_generators({4, 9}); // k = (2,4,6)
    CHECK(NormalizedIdeal::from_kunz(S, {0, 2, 4}).genus() == 6);
    CHECK_THROWS_AS(NormalizedIdeal::from_kunz(S, {0, 4}), icm::KunzViolation);
    try {
        NormalizedIdeal::from_kunz(S, {3, 0, 0});
        CHECK(false);
    } catch (const icm::KunzViolation& e) {
        CHECK(e.i == 1);
        CHECK(e.j == -1);
    }
    try {
        NormalizedIdeal::from_kunz(S, {0, 4, 0});
        CHECK(false);
    } catch (const icm::KunzViolation& e) {
        CHECK(e.i == 1);
        CHECK(e.j == 1);
    }
    CHECK_THROWS_AS(NormalizedIdeal::from_kunz(S, {0, 0, -1}), icm::KunzViolation);
}

TEST_CASE("whole and full") {
    auto S = NumericalSemigroup::from_generators({3, 7, 8});
    auto W = NormalizedIdeal::whole(S);
    auto F = NormalizedIdeal::full(S);
    CHECK(W.kunz() == S.kunz());
    CHECK(W.genus() == S.genus());
    CHECK(F.is_full());
    CHECK(F.genus() == 0);
    CHECK(F.frobenius() == -1);
    CHECK(W.frobenius() == S.frobenius());
    CHECK(W.subset_of(F));
    CHECK(!F.subset_of(W));
    for (long long n = 0; n < 12; ++n) {
        CHECK(F.contains(n));
        CHECK(W.contains(n) == S.contains(n));
    }
    CHECK(!F.contains(-1));
}

TEST_CASE("from_generators frozen coordinates") {
    auto S49 = NumericalSemigroup::from_generators({4, 9});
    CHECK(NormalizedIdeal::from_generators(S49, {0, 1}).kunz() == KunzVector{0, 2, 4});
    CHECK(NormalizedIdeal::from_generators(S49, {0, 1, 2, 7}).kunz() == KunzVector{0, 0, 1});

    auto H5 = NumericalSemigroup::ordinary(5);
    CHECK(NormalizedIdeal::from_generators(H5, {0, 1}).kunz() == KunzVector{0, 1, 1, 1});
    CHECK(NormalizedIdeal::from_generators(H5, {0, 1, 3}).kunz() == KunzVector{0, 1, 0, 1});

    auto S37 = NumericalSemigroup::from_generators({3, 7});
    CHECK(NormalizedIdeal::from_generators(S37, {0, 4, 8}).kunz() == KunzVector{1, 2});

    auto S479 = NumericalSemigroup::from_generators({4, 7, 9});
    CHECK(NormalizedIdeal::from_generators(S479, {0, 1}).kunz() == KunzVector{0, 2, 1});
    CHECK(NormalizedIdeal::from_generators(S479, {0, 1, 2}).kunz() == KunzVector{0, 0, 1});

    // shift invariance
    CHECK(NormalizedIdeal::from_generators(S49, {6, 7}) == NormalizedIdeal::from_generators(S49, {0, 1}));
    CHECK(NormalizedIdeal::from_generators(S49, {-3, -2}) == NormalizedIdeal::from_generators(S49, {0, 1}));
}

TEST_CASE("from_generators against the set oracle") {
    for (auto gens : std::vector<std::vector<long long>>{{4, 9}, {3, 7, 8}, {5, 6, 9}, {2, 5}}) {
        auto S = NumericalSemigroup::from_generators(gens);
        long long B = 2 * S.conductor() + S.multiplicity() + 8;
        auto Smem = oracle::semigroup_members(gens, B);
        std::vector<long long> pool{0, 1, 2, 3, 5, 7};
        for (const auto& I : ideals_from_subsets(S, pool)) {
            oracle::Set xs;
            // recover a generator witness from the ideal itself
            for (long long g : I.minimal_generators()) xs.insert(g);
            auto want = oracle::set_add(xs, Smem, B);
            CHECK(member_set(I, B) == want);
            CHECK(I.kunz() == oracle::kunz_of_set(want, S.multiplicity()));
        }
    }
}

TEST_CASE("sum matches the set oracle on subset-generated ideals") {
    for (auto gens : std::vector<std::vector<long long>>{{4, 9}, {3, 7, 8}, {5, 6, 9}}) {
        auto S = NumericalSemigroup::from_generators(gens);
        long long B = 2 * S.conductor() + S.multiplicity() + 8;
        auto ideals = ideals_from_subsets(S, {0, 1, 2, 3, 6});
        for (const auto& I : ideals)
            for (const auto& J : ideals) {
                auto K = I + J;
                CHECK(member_set(K, B) == oracle::set_add(member_set(I, B), member_set(J, B), B));
            }
    }
}

TEST_CASE("sum algebra") {
    auto S = NumericalSemigroup::from_generators({4, 7, 9});
    auto ideals = ideals_from_subsets(S, {0, 1, 2, 3, 5});
    auto W = NormalizedIdeal::whole(S);
    auto F = NormalizedIdeal::full(S);
    for (const auto& I : ideals) {
        CHECK(I + W == I);
        CHECK(I + F == F);
        for (const auto& J : ideals) CHECK(I + J == J + I);
    }
    CHECK((ideals[1] + ideals[2]) + ideals[3] == ideals[1] + (ideals[2] + ideals[3]));

    auto I = NormalizedIdeal::from_generators(S, {0, 1});
    CHECK(I.kunz() == KunzVector{0, 2, 1});
    CHECK((I + I).kunz() == KunzVector{0, 0, 1});
    CHECK(I + I == NormalizedIdeal::from_generators(S, {0, 1, 2}));
}

TEST_CASE("ordinary shortcut agrees with the general sum") {
    for (long long m : {2, 3, 5, 6}) {
        auto H = NumericalSemigroup::ordinary(m);
        // every 0/1 vector is an ideal here
        std::vector<NormalizedIdeal> all;
        for (std::size_t pick = 0; pick < (std::size_t{1} << (m - 1)); ++pick) {
            KunzVector x(static_cast<std::size_t>(m - 1), 0);
            for (long long t = 0; t < m - 1; ++t)
                if (pick & (std::size_t{1} << t)) x[static_cast<std::size_t>(t)] = 1;
            all.push_back(NormalizedIdeal::from_kunz(H, x));
        }
        CHECK(all.size() == (std::size_t{1} << (m - 1)));
        for (const auto& I : all)
            for (const auto& J : all) CHECK(add_ordinary(I, J) == I + J);
    }
    auto S = NumericalSemigroup::from_generators({4, 9});
    CHECK_THROWS_AS(add_ordinary(NormalizedIdeal::whole(S), NormalizedIdeal::full(S)), icm::PreconditionViolated);
}

TEST_CASE("union and intersection are coordinatewise min and max") {
    auto S = NumericalSemigroup::from_generators({3, 7, 8});
    long long B = 2 * S.conductor() + S.multiplicity() + 8;
    auto ideals = ideals_from_subsets(S, {0, 1, 2, 4, 5});
    for (const auto& I : ideals)
        for (const auto& J : ideals) {
            auto U = I.unite(J);
            auto V = I.intersect(J);
            oracle::Set u, v;
            auto a = member_set(I, B), b = member_set(J, B);
            std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::inserter(u, u.end()));
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(v, v.end()));
            CHECK(member_set(U, B) == u);
            CHECK(member_set(V, B) == v);
            CHECK(I.subset_of(U));
            CHECK(V.subset_of(I));
            CHECK((I.subset_of(J)) == std::includes(b.begin(), b.end(), a.begin(), a.end()));
        }
}

TEST_CASE("frobenius and adjoin_frobenius") {
    auto S = NumericalSemigroup::from_generators({3, 7});
    auto I = NormalizedIdeal::from_generators(S, {0, 4, 8});
    CHECK(I.kunz() == KunzVector{1, 2});
    CHECK(I.frobenius() == 5);
    auto J = I.adjoin_frobenius();
    CHECK(J.kunz() == KunzVector{1, 1});
    CHECK(J.contains(5));
    CHECK(!I.contains(5));
    CHECK(J.genus() == I.genus() - 1);
    CHECK(J.frobenius() == 2);
    CHECK_THROWS_AS(NormalizedIdeal::full(S).adjoin_frobenius(), icm::IsFullIdeal);

    // walking the frobenius chain ends at N
    auto cur = NormalizedIdeal::whole(S);
    int steps = 0;
    while (!cur.is_full()) {
        cur = cur.adjoin_frobenius();
        ++steps;
    }
    CHECK(steps == S.genus());
}

TEST_CASE("ideal minimal generators") {
    auto S = NumericalSemigroup::from_generators({3, 7});
    auto I = NormalizedIdeal::from_generators(S, {0, 4, 8});
    CHECK(I.minimal_generators() == std::vector<long long>{0, 4, 8});
    CHECK(NormalizedIdeal::whole(S).minimal_generators() == std::vector<long long>{0});
    CHECK(NormalizedIdeal::full(S).minimal_generators() == std::vector<long long>{0, 1, 2});

    // regenerating from the minimal generators is the identity
    auto H5 = NumericalSemigroup::ordinary(5);
    for (auto x : std::vector<KunzVector>{{0, 1, 0, 1}, {1, 1, 1, 1}, {0, 0, 0, 1}}) {
        auto I2 = NormalizedIdeal::from_kunz(H5, x);
        CHECK(NormalizedIdeal::from_generators(H5, I2.minimal_generators()) == I2);
    }
}

TEST_CASE("residual and preceq") {
    auto H5 = NumericalSemigroup::ordinary(5);
    auto I = NormalizedIdeal::from_generators(H5, {0, 1});
    auto J = NormalizedIdeal::from_generators(H5, {0, 1, 3});
    CHECK(I.subset_of(J));
    auto R = residual(J, I);
    CHECK(R.offset == 0);
    CHECK(R.ideal == NormalizedIdeal::whole(H5));
    CHECK(!preceq(I, J)); // subset but not below in the sum order
    CHECK(preceq(I, I));
    CHECK(preceq(NormalizedIdeal::whole(H5), I));
    CHECK(preceq(NormalizedIdeal::whole(H5), NormalizedIdeal::full(H5)));

    auto S23 = NumericalSemigroup::from_generators({2, 3});
    auto R2 = residual(NormalizedIdeal::whole(S23), NormalizedIdeal::full(S23));
    CHECK(R2.offset == S23.conductor());
    CHECK(R2.ideal.is_full());
    CHECK(R2.contains(S23.conductor()));
    CHECK(!R2.contains(S23.conductor() - 1));
    CHECK(!preceq(NormalizedIdeal::full(S23), NormalizedIdeal::whole(S23)));
}

TEST_CASE("residual times the ideal stays inside") {
    auto S = NumericalSemigroup::from_generators({4, 9});
    long long B = 2 * S.conductor() + S.multiplicity() + 8;
    auto ideals = ideals_from_subsets(S, {0, 1, 3, 6});
    for (const auto& I : ideals)
        for (const auto& J : ideals) {
            auto R = residual(J, I);
            // shifted check: (offset + ideal members) + I subseteq J, and offset is tight
            auto jm = member_set(J, B);
            for (long long z = 0; z <= S.conductor() + 1; ++z) {
                bool fits = true;
                for (long long v : I.members_upto(B - z > 0 ? B - z : 0))
                    if (z + v <= B && !jm.count(z + v)) {
                        fits = false;
                        break;
                    }
                CHECK(R.contains(z) == fits);
            }
        }
}

TEST_CASE("preceq brute-force cross-check") {
    auto S = NumericalSemigroup::from_generators({3, 7, 8});
    // pool = {0} plus all gaps, so this is the whole family
    auto ideals = ideals_from_subsets(S, {0, 1, 2, 4, 5});
    CHECK(ideals.size() == 9);
    for (const auto& I : ideals)
        for (const auto& J : ideals) {
            bool brute = false;
            for (const auto& K : ideals)
                if (I + K == J) {
                    brute = true;
                    break;
                }
            CHECK(preceq(I, J) == brute);
        }
}

TEST_CASE("ambient mismatch") {
    auto A = NumericalSemigroup::from_generators({3, 7});
    auto B = NumericalSemigroup::from_generators({4, 9});
    auto I = NormalizedIdeal::whole(A);
    auto J = NormalizedIdeal::whole(B);
    CHECK_THROWS_AS(add(I, J), icm::AmbientMismatch);
    CHECK_THROWS_AS(I.unite(J), icm::AmbientMismatch);
    CHECK_THROWS_AS(I.intersect(J), icm::AmbientMismatch);
    CHECK_THROWS_AS(I.subset_of(J), icm::AmbientMismatch);
    CHECK_THROWS_AS(preceq(I, J), icm::AmbientMismatch);
}
