#pragma once

// Scalar arithmetic in Z_p for p < 2^32, plus the few integer helpers
// (primality, overflow-checked powers, Lucas binomials) the rest of the
// library leans on.

#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <vector>

#include "error.hpp"

namespace rdickson {

using u64 = std::uint64_t;
using u32 = std::uint32_t;

inline constexpr u64 kMaxPrime = u64{1} << 32;

constexpr u64 add_mod(u64 a, u64 b, u64 p) noexcept
{
    const u64 s = a + b;
    return s >= p ? s - p : s;
}

constexpr u64 sub_mod(u64 a, u64 b, u64 p) noexcept
{
    return a >= b ? a - b : a + p - b;
}

constexpr u64 mul_mod(u64 a, u64 b, u64 p) noexcept
{
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p);
}

constexpr u64 pow_mod(u64 base, u64 exp, u64 p) noexcept
{
    u64 result = 1 % p;
    base %= p;
    while (exp != 0) {
        if (exp & 1U) result = mul_mod(result, base, p);
        base = mul_mod(base, base, p);
        exp >>= 1U;
    }
    return result;
}

/// Inverse of a nonzero residue modulo a prime (Fermat).
inline u64 inv_mod(u64 a, u64 p)
{
    a %= p;
    if (a == 0) fail(Errc::DivisionByZero, "inverse of 0 mod " + std::to_string(p));
    return pow_mod(a, p - 2, p);
}

/// Reduce a signed integer into [0, p).
constexpr u64 reduce_signed(std::int64_t v, u64 p) noexcept
{
    const auto pp = static_cast<std::int64_t>(p);
    std::int64_t r = v % pp;
    if (r < 0) r += pp;
    return static_cast<u64>(r);
}

constexpr bool is_prime(u64 n) noexcept
{
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (u64 d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

/// Distinct prime divisors in increasing order.
inline std::vector<u64> prime_divisors(u64 n)
{
    std::vector<u64> out;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

/// base^exp, or nullopt when the result does not fit in `limit`.
constexpr std::optional<u64> checked_pow(u64 base, u64 exp, u64 limit = std::numeric_limits<u64>::max()) noexcept
{
    u64 result = 1;
    for (u64 i = 0; i < exp; ++i) {
        if (base != 0 && result > limit / base) return std::nullopt;
        result *= base;
    }
    if (result > limit) return std::nullopt;
    return result;
}

/// Legendre symbol (a | p) for odd prime p, as -1, 0 or +1.
constexpr int legendre(std::int64_t a, u64 p) noexcept
{
    const u64 r = reduce_signed(a, p);
    if (r == 0) return 0;
    return pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

/// Binomial coefficients modulo a prime via Lucas' theorem; the small
/// C(a, b), a, b < p, come from a Pascal table built once.
class LucasBinomial {
  public:
    explicit LucasBinomial(u64 p) : p_(p)
    {
        // Tables beyond a few thousand rows are never needed at desk scale;
        // fall back to multiplicative formula above that.
        if (p_ <= kTableLimit) {
            table_.assign(p_ * p_, 0);
            for (u64 a = 0; a < p_; ++a) {
                at(a, 0) = 1 % p_;
                for (u64 b = 1; b <= a; ++b)
                    at(a, b) = add_mod(at(a - 1, b - 1), b <= a - 1 ? at(a - 1, b) : 0, p_);
            }
        }
    }

    u64 prime() const noexcept { return p_; }

    /// C(n, r) mod p, zero when r > n.
    u64 operator()(u64 n, u64 r) const
    {
        if (r > n) return 0;
        u64 result = 1 % p_;
        while (n != 0 || r != 0) {
            const u64 nd = n % p_;
            const u64 rd = r % p_;
            if (rd > nd) return 0;
            result = mul_mod(result, small(nd, rd), p_);
            n /= p_;
            r /= p_;
        }
        return result;
    }

  private:
    static constexpr u64 kTableLimit = 2048;

    u64& at(u64 a, u64 b) { return table_[a * p_ + b]; }

    u64 small(u64 a, u64 b) const
    {
        if (!table_.empty()) return table_[a * p_ + b];
        u64 num = 1;
        u64 den = 1;
        for (u64 i = 0; i < b; ++i) {
            num = mul_mod(num, a - i, p_);
            den = mul_mod(den, i + 1, p_);
        }
        return mul_mod(num, inv_mod(den, p_), p_);
    }

    u64 p_;
    std::vector<u64> table_;
};

} // namespace rdickson
