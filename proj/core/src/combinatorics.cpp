#include <rmg/combinatorics.hpp>
#include <rmg/errors.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace rmg {

__extension__ using u128 = unsigned __int128;
inline constexpr u128 u128_max = ~u128{0};

auto checked_mul(std::uint64_t a, std::uint64_t b) -> std::optional<std::uint64_t>
{
    std::uint64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        return std::nullopt;
    return out;
}

auto checked_add(std::uint64_t a, std::uint64_t b) -> std::optional<std::uint64_t>
{
    std::uint64_t out;
    if (__builtin_add_overflow(a, b, &out))
        return std::nullopt;
    return out;
}

auto binomial(std::uint64_t n, std::uint64_t k) -> std::optional<std::uint64_t>
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    u128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // acc * (n - k + i) / i stays integral at every step
        acc = acc * (n - k + i) / i;
        if (acc > std::numeric_limits<std::uint64_t>::max())
            return std::nullopt;
    }
    return static_cast<std::uint64_t>(acc);
}

namespace {

    // base^exp, or nullopt once it leaves 128 bits
    auto power(std::uint64_t base, std::uint64_t exp) -> std::optional<u128>
    {
        u128 acc = 1;
        for (std::uint64_t i = 0; i < exp; ++i) {
            if (base != 0 && acc > u128_max / base)
                return std::nullopt;
            acc *= base;
        }
        return acc;
    }

}

auto ceil_pow_one_plus_inverse(std::uint64_t n, std::uint64_t g) -> std::uint64_t
{
    if (g == 0)
        throw InvalidArgument("exponent denominator must be positive");
    if (n <= 1)
        return n;

    // smallest t with t^g >= n^(g+1): long double guess, then exact correction
    auto target = power(n, g + 1);
    auto reaches = [&](std::uint64_t t) {
        auto lhs = power(t, g);
        if (lhs && target)
            return *lhs >= *target;
        if (! lhs && target)
            return true;
        if (lhs && ! target)
            return false;
        return static_cast<long double>(g) * std::log(static_cast<long double>(t))
            >= static_cast<long double>(g + 1) * std::log(static_cast<long double>(n));
    };

    long double guess = std::pow(static_cast<long double>(n), 1.0L + 1.0L / static_cast<long double>(g));
    auto t = static_cast<std::uint64_t>(guess);
    while (t > 0 && reaches(t - 1))
        --t;
    while (! reaches(t))
        ++t;
    return t;
}

auto unrank_combination(std::uint64_t n, std::uint64_t k, std::uint64_t rank) -> std::vector<std::uint32_t>
{
    std::vector<std::uint32_t> out;
    out.reserve(k);
    std::uint64_t next = 0;
    for (std::uint64_t slot = 0; slot < k; ++slot) {
        for (;; ++next) {
            auto rest = binomial(n - next - 1, k - slot - 1).value();
            if (rank < rest)
                break;
            rank -= rest;
        }
        out.push_back(static_cast<std::uint32_t>(next));
        ++next;
    }
    return out;
}

auto bell_number(unsigned n) -> std::uint64_t
{
    if (n > 25)
        throw InvalidArgument("bell_number supports n <= 25, got " + std::to_string(n));
    // Bell triangle
    std::vector<std::uint64_t> row{1};
    for (unsigned i = 0; i < n; ++i) {
        std::vector<std::uint64_t> next{row.back()};
        for (auto x : row)
            next.push_back(next.back() + x);
        row = std::move(next);
    }
    return row.front();
}

auto derive_seed(std::uint64_t master, std::uint64_t stream) -> std::uint64_t
{
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

auto uniform_below(Rng & rng, std::uint64_t bound) -> std::uint64_t
{
    if (bound == 0)
        throw InvalidArgument("uniform_below needs a positive bound");
    // rejection sampling on the top of the 64-bit range
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    while (true) {
        auto x = rng();
        if (x < limit)
            return x % bound;
    }
}

}
