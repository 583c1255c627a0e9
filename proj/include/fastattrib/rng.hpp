#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>
#include <vector>

namespace fastattrib {

/// Counter-based deterministic generator. Every draw is a pure function of
/// (key, counter), so child streams derived from (key, label) are independent
/// of how many values were drawn elsewhere. Not cryptographic.
class Rng {
  public:
    explicit Rng(uint64_t seed) : key_(scramble(seed, 0x1905f79cd1b8a7e3ull)), ctr_(0) {}

    /// Child stream for a labeled sub-task. Same (seed, label) -> same stream.
    Rng child(uint64_t label) const { return Rng(key_, scramble(key_, label)); }
    Rng child(std::string_view label) const { return child(fnv1a64(label)); }

    uint64_t next_u64() { return scramble(key_, ctr_++); }

    /// Uniform in [0, 1) with 53-bit resolution.
    double next_uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller. Consumes exactly two uniforms.
    double next_normal() {
        double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
        double u2 = next_uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    /// Uniform integer in [0, n). n must be > 0.
    uint64_t next_below(uint64_t n) {
        // Rejection-free modulo is fine here: n is tiny relative to 2^64.
        return next_u64() % n;
    }

    void fill_normal(std::vector<double>& v) {
        for (auto& x : v) x = next_normal();
    }

    std::vector<double> normal_vector(size_t n) {
        std::vector<double> v(n);
        fill_normal(v);
        return v;
    }

    /// Deterministic Fisher-Yates permutation of 0..n-1.
    std::vector<size_t> permutation(size_t n) {
        std::vector<size_t> p(n);
        for (size_t i = 0; i < n; ++i) p[i] = i;
        for (size_t i = n; i > 1; --i) {
            size_t j = static_cast<size_t>(next_below(i));
            std::swap(p[i - 1], p[j]);
        }
        return p;
    }

    static uint64_t fnv1a64(std::string_view s) {
        uint64_t h = 0xcbf29ce484222325ull;
        for (unsigned char c : s) {
            h ^= c;
            h *= 0x100000001b3ull;
        }
        return h;
    }

  private:
    Rng(uint64_t key, uint64_t derived) : key_(derived ^ (key << 1 | key >> 63)), ctr_(0) {}

    static uint64_t scramble(uint64_t key, uint64_t ctr) {
        uint64_t z = key + 0x9e3779b97f4a7c15ull * (ctr + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        z ^= z >> 31;
        z += key ^ (ctr << 32 | ctr >> 32);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    uint64_t key_;
    uint64_t ctr_;
};

}  // namespace fastattrib
