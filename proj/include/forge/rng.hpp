#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace forge {

// splitmix64 step; the generator state advances by a Weyl constant.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic PRNG used everywhere randomness is needed. All stream
// derivation is counter-based so sub-stages reproduce independently of
// how much randomness earlier stages consumed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {
        // warm up so nearby seeds decorrelate
        splitmix64(state_);
        splitmix64(state_);
    }

    std::uint64_t next() { return splitmix64(state_); }

    // Unbiased integer in [0, n) by rejection.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("Rng::below: n must be positive");
        std::uint64_t threshold = -n % n;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Derive an independent stream; `stream` acts as a counter label.
    Rng fork(std::uint64_t stream) const {
        std::uint64_t s = state_ ^ (0x6a09e667f3bcc909ULL + stream * 0x3c6ef372fe94f82bULL);
        return Rng(splitmix64(s));
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // Sorted t-subset of [0, n) without replacement.
    std::vector<int> subset(int n, int t) {
        if (t > n) throw std::invalid_argument("Rng::subset: t > n");
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(t));
        // Floyd's algorithm
        std::vector<bool> in(static_cast<std::size_t>(n), false);
        for (int j = n - t; j < n; ++j) {
            int r = static_cast<int>(below(static_cast<std::uint64_t>(j) + 1));
            if (in[static_cast<std::size_t>(r)]) r = j;
            in[static_cast<std::size_t>(r)] = true;
            out.push_back(r);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    std::uint64_t state_;
};

}  // namespace forge
