#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace rainbow {

// Vertices are packed into one 64-bit mask throughout the library.
inline constexpr int kMaxVertices = 64;

/// C(n,k) from a precomputed Pascal table; n must stay within kMaxVertices.
inline std::uint64_t choose(int n, int k) {
    struct Table {
        std::array<std::array<std::uint64_t, kMaxVertices + 1>, kMaxVertices + 1> c{};
        Table() {
            for (int i = 0; i <= kMaxVertices; ++i) {
                c[i][0] = 1;
                for (int j = 1; j <= i; ++j)
                    c[i][j] = c[i - 1][j - 1] + (j < i ? c[i - 1][j] : 0);
            }
        }
    };
    static const Table t;
    if (k < 0 || n < 0 || k > n) return 0;
    if (n > kMaxVertices) throw std::out_of_range("choose: n exceeds " + std::to_string(kMaxVertices));
    return t.c[n][k];
}

// Seeded generator with explicit reduction so that outputs do not depend on
// the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    /// Draw from [0, bound) by modulo reduction; bound > 0.
    std::uint64_t below(std::uint64_t bound) { return gen_() % bound; }

    int below_int(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }

    /// Uniform double in [0,1).
    double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    bool chance(double prob) { return unit() < prob; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace rainbow
