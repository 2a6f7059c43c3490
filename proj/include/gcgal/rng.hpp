#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace gcgal {

// splitmix64; used for seeding and for hashing tags into sub-seeds.
inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline uint64_t fnv1a64(const void* data, size_t n) {
    uint64_t h = 0xcbf29ce484222325ULL;
    const auto* p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline uint64_t fnv1a64(std::string_view s) { return fnv1a64(s.data(), s.size()); }

// Deterministic across platforms, unlike std::uniform_int_distribution.
// xoshiro256** seeded via splitmix64.
class Rng {
public:
    explicit Rng(uint64_t seed = 0) {
        uint64_t sm = seed;
        for (auto& word : s_) word = splitmix64(sm);
    }

    uint64_t next() {
        const uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Unbiased integer in [0, n) by rejection.
    uint64_t below(uint64_t n) {
        if (n <= 1) return 0;
        const uint64_t threshold = (0 - n) % n;  // 2^64 mod n
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

    // 53-bit mantissa double in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Standard normal via Box-Muller (no cached spare, keeps state replayable).
    double normal() {
        double u1 = 0.0;
        do { u1 = uniform(); } while (u1 <= 0.0);
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // k distinct indices out of [0, n), sorted ascending.
    std::vector<uint64_t> sample_indices(uint64_t n, uint64_t k) {
        std::vector<uint64_t> out;
        if (k >= n) {
            out.resize(n);
            for (uint64_t i = 0; i < n; ++i) out[i] = i;
            return out;
        }
        out.reserve(static_cast<size_t>(k));
        if (k * 3 >= n) {
            std::vector<uint64_t> idx(n);
            for (uint64_t i = 0; i < n; ++i) idx[i] = i;
            for (uint64_t i = 0; i < k; ++i) {
                uint64_t j = i + below(n - i);
                std::swap(idx[i], idx[j]);
            }
            out.assign(idx.begin(), idx.begin() + static_cast<ptrdiff_t>(k));
        } else {
            std::unordered_set<uint64_t> seen;
            seen.reserve(static_cast<size_t>(k) * 2);
            while (out.size() < k) {
                uint64_t v = below(n);
                if (seen.insert(v).second) out.push_back(v);
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    uint64_t s_[4];
};

// Sub-seed derivation: mixes a master seed with a string tag. Stable across
// runs and platforms, so every (language, arch, regime, seed-index) tuple maps
// to a reproducible stream.
inline uint64_t derive_seed(uint64_t master, std::string_view tag) {
    uint64_t st = master ^ (fnv1a64(tag) + 0x9e3779b97f4a7c15ULL);
    return splitmix64(st);
}

inline uint64_t derive_seed(uint64_t master, std::string_view tag, uint64_t index) {
    uint64_t st = derive_seed(master, tag) ^ (index * 0xd1342543de82ef95ULL + 1);
    return splitmix64(st);
}

}  // namespace gcgal
