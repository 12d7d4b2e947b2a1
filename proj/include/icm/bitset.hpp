#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

namespace icm {

// Fixed-size dynamic bitset, enough for membership masks and order rows.
class Bitset {
  public:
    Bitset() = default;
    explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }

    void set(std::size_t i) { w_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : w_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }

    bool any_and(const Bitset& o) const { // intersects?
        std::size_t k = w_.size() < o.w_.size() ? w_.size() : o.w_.size();
        for (std::size_t t = 0; t < k; ++t)
            if (w_[t] & o.w_[t]) return true;
        return false;
    }

    Bitset operator&(const Bitset& o) const {
        Bitset r(n_ < o.n_ ? n_ : o.n_);
        for (std::size_t t = 0; t < r.w_.size(); ++t) r.w_[t] = w_[t] & o.w_[t];
        return r;
    }

    bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const Bitset& o) const { return !(*this == o); }

    // first set index >= from, or size() if none
    std::size_t next(std::size_t from) const {
        if (from >= n_) return n_;
        std::size_t t = from >> 6;
        std::uint64_t w = w_[t] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w) return (t << 6) + static_cast<std::size_t>(__builtin_ctzll(w));
            if (++t == w_.size()) return n_;
            w = w_[t];
        }
    }

  private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace icm
