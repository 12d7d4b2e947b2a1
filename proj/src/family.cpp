#include "icm/family.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace icm {

IdealFamily::IdealFamily(NumericalSemigroup amb, std::vector<NormalizedIdeal> ideals)
    : amb_(std::move(amb)), ideals_(std::move(ideals)) {
    for (std::size_t i = 0; i < ideals_.size(); ++i) index_.emplace(ideals_[i].kunz(), i);
}

bool IdealFamily::contains(const NormalizedIdeal& I) const {
    return I.ambient() == amb_ && index_.count(I.kunz()) == 1;
}

std::size_t IdealFamily::index_of(const KunzVector& x) const {
    auto it = index_.find(x);
    if (it == index_.end()) throw Error("Kunz vector not in the family");
    return it->second;
}

std::size_t IdealFamily::index_of(const NormalizedIdeal& I) const {
    if (I.ambient() != amb_) throw AmbientMismatch("ideal lives over a different semigroup");
    return index_of(I.kunz());
}

namespace {

// Eq. (1) as a difference system: x_t <= x_i + slack[i][t] for i != t,
// slack[i][t] = k_j + carry with j = (t - i) mod m.  Each partial
// assignment x_1..x_{p-1} bounds x_p from both sides.
struct Stepper {
    long long m;
    KunzVector k;
    std::vector<std::vector<long long>> slack;

    explicit Stepper(const NumericalSemigroup& S) : m(S.multiplicity()), k(S.kunz()) {
        slack.assign(static_cast<std::size_t>(m), std::vector<long long>(static_cast<std::size_t>(m), 0));
        for (long long i = 1; i < m; ++i)
            for (long long t = 1; t < m; ++t) {
                if (t == i) continue;
                long long j = (t - i + m) % m;
                slack[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] =
                    k[static_cast<std::size_t>(j - 1)] + (i + j >= m ? 1 : 0);
            }
    }

    long long lower(const KunzVector& x, long long p) const {
        long long lo = 0;
        for (long long t = 1; t < p; ++t)
            lo = std::max(lo, x[static_cast<std::size_t>(t - 1)] -
                                  slack[static_cast<std::size_t>(p)][static_cast<std::size_t>(t)]);
        return lo;
    }

    long long upper(const KunzVector& x, long long p) const {
        long long hi = k[static_cast<std::size_t>(p - 1)];
        for (long long i = 1; i < p; ++i)
            hi = std::min(hi, x[static_cast<std::size_t>(i - 1)] +
                                  slack[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)]);
        return hi;
    }

    void dfs(KunzVector& x, long long p, std::vector<KunzVector>& out) const {
        if (p == m) {
            out.push_back(x);
            return;
        }
        long long lo = lower(x, p), hi = upper(x, p);
        for (long long v = lo; v <= hi; ++v) {
            x[static_cast<std::size_t>(p - 1)] = v;
            dfs(x, p + 1, out);
        }
    }
};

std::vector<KunzVector> enumerate_vectors_serial(const NumericalSemigroup& S) {
    Stepper st(S);
    std::vector<KunzVector> out;
    KunzVector x(static_cast<std::size_t>(st.m - 1), 0);
    st.dfs(x, 1, out);
    return out;
}

std::vector<KunzVector> enumerate_vectors_parallel(const NumericalSemigroup& S) {
    Stepper st(S);
    if (st.m < 2) return {KunzVector{}};
    long long k1 = st.k[0];
    std::vector<std::vector<KunzVector>> buckets(static_cast<std::size_t>(k1 + 1));
#pragma omp parallel for schedule(dynamic)
    for (long long v = 0; v <= k1; ++v) {
        KunzVector x(static_cast<std::size_t>(st.m - 1), 0);
        x[0] = v;
        st.dfs(x, 2, buckets[static_cast<std::size_t>(v)]);
    }
    std::vector<KunzVector> out;
    for (auto& b : buckets) out.insert(out.end(), b.begin(), b.end());
    return out;
}

IdealFamily materialize(const NumericalSemigroup& S, const std::vector<KunzVector>& vecs) {
    std::vector<NormalizedIdeal> ideals;
    ideals.reserve(vecs.size());
    for (const auto& x : vecs) ideals.push_back(NormalizedIdeal::from_kunz(S, x));
    return IdealFamily(S, std::move(ideals));
}

} // namespace

IdealFamily enumerate_normalized_ideals(const NumericalSemigroup& S) {
    return materialize(S, enumerate_vectors_parallel(S));
}

IdealFamily enumerate_normalized_ideals_serial(const NumericalSemigroup& S) {
    return materialize(S, enumerate_vectors_serial(S));
}

long long antichain_count(const NumericalSemigroup& S) {
    const auto& gaps = S.gaps();
    std::size_t n = gaps.size();
    if (n > 63) throw Error("gap poset has " + std::to_string(n) + " elements, limit is 63");
    std::vector<std::uint64_t> comp(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && (S.leq_S(gaps[i], gaps[j]) || S.leq_S(gaps[j], gaps[i])))
                comp[i] |= (std::uint64_t{1} << j);

    if (n <= 20) {
        long long count = 0;
        for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << n); ++sub) {
            bool anti = true;
            for (std::uint64_t rest = sub; rest;) {
                std::size_t i = static_cast<std::size_t>(__builtin_ctzll(rest));
                if (comp[i] & sub) {
                    anti = false;
                    break;
                }
                rest &= rest - 1;
            }
            if (anti) ++count;
        }
        return count;
    }

    // lowest-element recursion: drop it, or take it and drop everything comparable
    std::unordered_map<std::uint64_t, long long> memo;
    std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    auto rec = [&](auto&& self, std::uint64_t mask) -> long long {
        if (!mask) return 1;
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        std::size_t e = static_cast<std::size_t>(__builtin_ctzll(mask));
        std::uint64_t without = mask & (mask - 1);
        long long r = self(self, without) + self(self, without & ~comp[e]);
        memo.emplace(mask, r);
        return r;
    };
    return rec(rec, all);
}

std::vector<NormalizedIdeal> principal_family(const NumericalSemigroup& S) {
    std::vector<NormalizedIdeal> out;
    for (long long g : S.gaps()) {
        auto I = NormalizedIdeal::from_generators(S, {0, g});
        if (std::find(out.begin(), out.end(), I) == out.end()) out.push_back(I);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace icm
