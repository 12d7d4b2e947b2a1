#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

Set semigroup_members(const std::vector<long long>& gens, long long bound) {
    std::vector<char> mem(static_cast<std::size_t>(bound + 1), 0);
    mem[0] = 1;
    for (long long n = 1; n <= bound; ++n)
        for (long long g : gens)
            if (g <= n && mem[static_cast<std::size_t>(n - g)]) {
                mem[static_cast<std::size_t>(n)] = 1;
                break;
            }
    Set out;
    for (long long n = 0; n <= bound; ++n)
        if (mem[static_cast<std::size_t>(n)]) out.insert(n);
    return out;
}

Set normalize(const Set& X) {
    long long lo = *X.begin();
    Set out;
    for (long long x : X) out.insert(x - lo);
    return out;
}

Set set_add(const Set& A, const Set& B, long long bound) {
    Set out;
    for (long long a : A) {
        if (a > bound) break;
        for (long long b : B) {
            if (a + b > bound) break;
            out.insert(a + b);
        }
    }
    return out;
}

std::vector<long long> kunz_of_set(const Set& X, long long m) {
    std::vector<long long> x(static_cast<std::size_t>(m - 1), -1);
    for (long long v : X) {
        long long r = v % m;
        if (r != 0 && x[static_cast<std::size_t>(r - 1)] < 0) x[static_cast<std::size_t>(r - 1)] = (v - r) / m;
    }
    return x;
}

std::vector<Set> all_normalized_ideals(const Set& members, const std::vector<long long>& gaps,
                                       long long frobenius, long long bound) {
    // I = S with some gaps glued on; valid iff gap + member stays inside
    std::vector<Set> out;
    std::size_t g = gaps.size();
    for (std::size_t pick = 0; pick < (std::size_t{1} << g); ++pick) {
        Set I = members;
        for (std::size_t t = 0; t < g; ++t)
            if (pick & (std::size_t{1} << t)) I.insert(gaps[t]);
        bool ok = true;
        for (std::size_t t = 0; t < g && ok; ++t) {
            if (!(pick & (std::size_t{1} << t))) continue;
            for (long long s : members) {
                if (s == 0) continue;
                long long n = gaps[t] + s;
                if (n > frobenius) break;
                if (!I.count(n)) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            while (!I.empty() && *I.rbegin() > bound) I.erase(std::prev(I.end()));
            out.push_back(std::move(I));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

long long count_semigroups_of_genus(int g) {
    if (g == 0) return 1;
    // gaps form a g-subset of [1, 2g-1]; complement must be closed under +
    int top = 2 * g - 1;
    std::vector<int> pick(static_cast<std::size_t>(top), 0);
    std::fill(pick.begin(), pick.begin() + g, 1);
    std::sort(pick.begin(), pick.end()); // lowest combination for next_permutation
    long long count = 0;
    do {
        std::vector<char> mem(static_cast<std::size_t>(2 * top + 2), 1);
        for (int v = 1; v <= top; ++v) mem[static_cast<std::size_t>(v)] = !pick[static_cast<std::size_t>(v - 1)];
        bool closed = true;
        for (int a = 1; a <= top && closed; ++a) {
            if (!mem[static_cast<std::size_t>(a)]) continue;
            for (int b = a; a + b <= top; ++b)
                if (mem[static_cast<std::size_t>(b)] && !mem[static_cast<std::size_t>(a + b)]) {
                    closed = false;
                    break;
                }
        }
        if (closed) ++count;
    } while (std::next_permutation(pick.begin(), pick.end()));
    return count;
}

long long antichain_count_naive(const std::vector<std::vector<bool>>& comparable) {
    std::size_t n = comparable.size();
    long long count = 0;
    for (std::size_t sub = 0; sub < (std::size_t{1} << n); ++sub) {
        bool anti = true;
        for (std::size_t i = 0; i < n && anti; ++i) {
            if (!(sub & (std::size_t{1} << i))) continue;
            for (std::size_t j = i + 1; j < n; ++j)
                if ((sub & (std::size_t{1} << j)) && comparable[i][j]) {
                    anti = false;
                    break;
                }
        }
        if (anti) ++count;
    }
    return count;
}

} // namespace oracle
