#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace rmg {

/// binomial(n, k), or nullopt if it does not fit in 64 bits.
auto binomial(std::uint64_t n, std::uint64_t k) -> std::optional<std::uint64_t>;

/// Multiplication and addition that report overflow instead of wrapping.
auto checked_mul(std::uint64_t a, std::uint64_t b) -> std::optional<std::uint64_t>;
auto checked_add(std::uint64_t a, std::uint64_t b) -> std::optional<std::uint64_t>;

/// ceil(n^{(g+1)/g}) computed exactly in integers.
auto ceil_pow_one_plus_inverse(std::uint64_t n, std::uint64_t g) -> std::uint64_t;

/// The k-subset of {0..n-1} with lexicographic rank `rank`.
auto unrank_combination(std::uint64_t n, std::uint64_t k, std::uint64_t rank) -> std::vector<std::uint32_t>;

/// Bell number B(n) for n <= 25.
auto bell_number(unsigned n) -> std::uint64_t;

/// Mixes a master seed with a stream index (splitmix64 finaliser).
auto derive_seed(std::uint64_t master, std::uint64_t stream) -> std::uint64_t;

using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) without relying on the standard library's
/// implementation-defined distributions, so seeded output is portable.
auto uniform_below(Rng & rng, std::uint64_t bound) -> std::uint64_t;

}
