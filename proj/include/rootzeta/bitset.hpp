#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace rootzeta {

class DynBitset {
public:
    DynBitset() = default;
    explicit DynBitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    void set(std::size_t i) { w_[i / 64] |= std::uint64_t(1) << (i % 64); }
    bool test(std::size_t i) const { return (w_[i / 64] >> (i % 64)) & 1u; }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto x : w_) c += static_cast<std::size_t>(std::popcount(x));
        return c;
    }

    bool none() const {
        for (auto x : w_)
            if (x) return false;
        return true;
    }

    // first set bit, or size() if empty
    std::size_t first() const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(w_[k]));
        return n_;
    }

    bool subset_of(const DynBitset& o) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }

    DynBitset operator&(const DynBitset& o) const {
        DynBitset r(n_);
        for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] & o.w_[k];
        return r;
    }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < n_; ++i)
            if (test(i)) out.push_back(i);
        return out;
    }

    bool operator==(const DynBitset& o) const = default;
    bool operator<(const DynBitset& o) const { return w_ < o.w_; }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace rootzeta
