#include "icm/semigroup.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <string>

namespace icm {

NumericalSemigroup NumericalSemigroup::from_gaps(std::vector<long long> gaps) {
    auto d = std::make_shared<Data>();
    std::sort(gaps.begin(), gaps.end());
    gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());
    d->frob = gaps.empty() ? -1 : gaps.back();
    long long cond = d->frob + 1;

    std::vector<char> is_gap(static_cast<std::size_t>(cond), 0);
    for (long long g : gaps) is_gap[static_cast<std::size_t>(g)] = 1;

    d->m = 1;
    while (d->m < cond && is_gap[static_cast<std::size_t>(d->m)]) ++d->m;

    long long bound = 2 * cond + d->m + 2;
    d->small = Bitset(static_cast<std::size_t>(bound));
    for (long long n = 0; n < bound; ++n)
        if (n >= cond || !is_gap[static_cast<std::size_t>(n)]) d->small.set(static_cast<std::size_t>(n));

    d->gaps = std::move(gaps);

    d->kunz.resize(static_cast<std::size_t>(d->m - 1));
    for (long long i = 1; i < d->m; ++i) {
        long long w = i;
        while (!d->small.test(static_cast<std::size_t>(w))) w += d->m;
        d->kunz[static_cast<std::size_t>(i - 1)] = (w - i) / d->m;
    }

    NumericalSemigroup s;
    s.d_ = d;

    // minimal generators live in {m} union Ap(S)\{0}
    std::vector<long long> cand;
    cand.push_back(d->m);
    for (long long i = 1; i < d->m; ++i) cand.push_back(d->m * d->kunz[static_cast<std::size_t>(i - 1)] + i);
    std::sort(cand.begin(), cand.end());
    for (long long c : cand) {
        bool decomposable = false;
        for (long long t = d->m; t <= c - d->m && !decomposable; ++t)
            if (s.contains(t) && s.contains(c - t)) decomposable = true;
        if (!decomposable) d->min_gens.push_back(c);
    }

#ifndef NDEBUG
    // complement of the gap set must be closed under addition
    for (long long a = 0; a <= cond; ++a)
        for (long long b = a; b <= cond; ++b)
            if (s.contains(a) && s.contains(b)) assert(s.contains(a + b));
#endif
    return s;
}

NumericalSemigroup NumericalSemigroup::from_generators(const std::vector<long long>& gens_in) {
    if (gens_in.empty()) throw Error("generator list is empty");
    std::vector<long long> gens(gens_in);
    for (long long g : gens)
        if (g <= 0) throw Error("generators must be positive, got " + std::to_string(g));
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    long long g = 0;
    for (long long x : gens) g = std::gcd(g, x);
    if (g != 1) throw NotCoFinite("gcd of generators is " + std::to_string(g) + ", not 1");

    long long m = gens.front();
    // sieve until a run of m consecutive members appears; from there on
    // everything is a member (m itself is)
    long long bound = 2 * gens.back() + m + 2;
    std::vector<char> member;
    long long run_start = -1;
    while (run_start < 0) {
        member.assign(static_cast<std::size_t>(bound + 1), 0);
        member[0] = 1;
        for (long long n = 1; n <= bound; ++n)
            for (long long x : gens) {
                if (x > n) break;
                if (member[static_cast<std::size_t>(n - x)]) {
                    member[static_cast<std::size_t>(n)] = 1;
                    break;
                }
            }
        long long run = 0;
        for (long long n = 0; n <= bound; ++n) {
            run = member[static_cast<std::size_t>(n)] ? run + 1 : 0;
            if (run == m) {
                run_start = n - m + 1;
                break;
            }
        }
        if (run_start < 0) bound *= 2;
    }

    std::vector<long long> gaps;
    for (long long n = 1; n < run_start; ++n)
        if (!member[static_cast<std::size_t>(n)]) gaps.push_back(n);
    return from_gaps(std::move(gaps));
}

NumericalSemigroup NumericalSemigroup::ordinary(long long m) {
    if (m < 1) throw Error("multiplicity must be >= 1");
    std::vector<long long> gaps;
    for (long long i = 1; i < m; ++i) gaps.push_back(i);
    return from_gaps(std::move(gaps));
}

bool NumericalSemigroup::is_minimal_generator(long long a) const {
    return std::binary_search(d_->min_gens.begin(), d_->min_gens.end(), a);
}

NumericalSemigroup NumericalSemigroup::remove_generator(long long a) const {
    if (!is_minimal_generator(a))
        throw NotMinimalGenerator(std::to_string(a) + " is not a minimal generator");
    std::vector<long long> gaps(d_->gaps);
    gaps.push_back(a);
    NumericalSemigroup t = from_gaps(std::move(gaps));
#ifndef NDEBUG
    if (a != d_->m) {
        // removing a = k_i m + i with i != 0 only bumps the i-th coordinate
        long long i = a % d_->m;
        assert(i != 0);
        KunzVector expect(d_->kunz);
        expect[static_cast<std::size_t>(i - 1)] += 1;
        assert(t.kunz() == expect);
    }
#endif
    return t;
}

namespace {

void expand(const NumericalSemigroup& s, long long g_max, std::vector<NumericalSemigroup>& out) {
    out.push_back(s);
    if (s.genus() >= g_max) return;
    for (long long a : s.minimal_generators())
        if (a > s.frobenius()) expand(s.remove_generator(a), g_max, out);
}

} // namespace

std::vector<NumericalSemigroup> enumerate_by_genus(long long g_max) {
    std::vector<NumericalSemigroup> out;
    if (g_max < 0) return out;
    expand(NumericalSemigroup::naturals(), g_max, out);
    return out;
}

} // namespace icm
