#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "qchrom/kernels.hpp"

namespace qchrom {

// Dynamic bitset over 64-bit words, sized at construction. The solvers copy
// these per search node; bulk ops route through the kernel layer.
class Bitset {
  public:
    Bitset() : nbits_(0) {}
    explicit Bitset(std::size_t nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }
    std::size_t words() const { return w_.size(); }
    const std::uint64_t* data() const { return w_.data(); }

    void set(std::size_t i) {
        assert(i < nbits_);
        w_[i >> 6] |= (std::uint64_t{1} << (i & 63));
    }
    void reset(std::size_t i) {
        assert(i < nbits_);
        w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
    bool test(std::size_t i) const {
        assert(i < nbits_);
        return (w_[i >> 6] >> (i & 63)) & 1;
    }
    void clear() { std::fill(w_.begin(), w_.end(), 0); }

    std::size_t count() const { return kern::popcount_words(w_.data(), w_.size()); }

    bool any() const {
        for (auto x : w_)
            if (x) return true;
        return false;
    }
    bool none() const { return !any(); }

    std::size_t and_count(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        return kern::and_popcount(w_.data(), o.w_.data(), w_.size());
    }
    void and_with(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        kern::and_into(w_.data(), w_.data(), o.w_.data(), w_.size());
    }
    void or_with(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        kern::or_into(w_.data(), w_.data(), o.w_.data(), w_.size());
    }
    // this &= ~o
    void andnot_with(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        kern::andnot_into(w_.data(), w_.data(), o.w_.data(), w_.size());
    }

    static Bitset intersection(const Bitset& a, const Bitset& b) {
        assert(a.nbits_ == b.nbits_);
        Bitset r(a.nbits_);
        kern::and_into(r.w_.data(), a.w_.data(), b.w_.data(), r.w_.size());
        return r;
    }

    // index of lowest set bit, or npos
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t first() const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi)
            if (w_[wi]) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w_[wi]));
        return npos;
    }
    // lowest set bit with index > i, or npos
    std::size_t next(std::size_t i) const {
        std::size_t wi = (i + 1) >> 6;
        if (wi >= w_.size()) return npos;
        std::uint64_t cur = w_[wi] & (~std::uint64_t{0} << ((i + 1) & 63));
        while (true) {
            if (cur) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(cur));
            if (++wi >= w_.size()) return npos;
            cur = w_[wi];
        }
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t cur = w_[wi];
            while (cur) {
                f((wi << 6) + static_cast<std::size_t>(std::countr_zero(cur)));
                cur &= cur - 1;
            }
        }
    }

    bool operator==(const Bitset& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }

  private:
    std::size_t nbits_;
    std::vector<std::uint64_t> w_;
};

}  // namespace qchrom
