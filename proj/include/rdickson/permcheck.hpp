#pragma once

// Permutation-polynomial oracles over F_q.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "error.hpp"
#include "ff.hpp"

namespace rdickson {

inline constexpr u64 kExhaustiveOrderCap = u64{1} << 20;

struct PPReport {
    bool is_pp = false;
    /// First collision in enumeration order: x1 < x2 (as indices) and f(x1) = f(x2).
    std::optional<std::pair<FieldElement, FieldElement>> witness;
    u64 p = 0;
    unsigned e = 0;
    u64 evaluations = 0;
};

/// Decides bijectivity of f on ctx by evaluating it everywhere. Values may be
/// computed on several threads; the collision scan is sequential, so the
/// witness does not depend on the thread count.
template <class F>
PPReport is_pp_exhaustive(const FieldCtx& ctx, F&& f, unsigned threads = 1, u64 order_cap = kExhaustiveOrderCap)
{
    const u64 q = ctx.q();
    if (q > order_cap) fail(Errc::FieldTooLarge, "exhaustive check over q = " + std::to_string(q));

    std::vector<u64> values(q);
    auto work = [&](u64 begin, u64 end) {
        for (u64 i = begin; i < end; ++i) values[i] = ctx.index_of(f(ctx.element_at(i)));
    };
    threads = std::max(1U, threads);
    if (threads == 1 || q < 4096) {
        work(0, q);
    } else {
        std::vector<std::thread> pool;
        const u64 chunk = (q + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const u64 b = std::min(q, t * chunk);
            const u64 e = std::min(q, b + chunk);
            if (b < e) pool.emplace_back(work, b, e);
        }
        for (auto& th : pool) th.join();
    }

    PPReport report;
    report.p = ctx.p();
    report.e = ctx.e();
    report.evaluations = q;
    constexpr u64 kUnseen = ~u64{0};
    std::vector<u64> first_preimage(q, kUnseen);
    for (u64 i = 0; i < q; ++i) {
        u64& slot = first_preimage[values[i]];
        if (slot != kUnseen) {
            report.is_pp = false;
            report.witness.emplace(ctx.element_at(slot), ctx.element_at(i));
            return report;
        }
        slot = i;
    }
    report.is_pp = true;
    return report;
}

/// x^n permutes F_q iff gcd(n, q - 1) = 1.
constexpr bool is_pp_monomial(u64 n, u64 q) noexcept
{
    return std::gcd(n, q - 1) == 1;
}

struct PPEquivalence {
    bool f_pp = false;
    bool g_pp = false;
    bool equivalent = false;
};

template <class F, class G>
PPEquivalence pp_equivalent(const FieldCtx& ctx, F&& f, G&& g, unsigned threads = 1)
{
    PPEquivalence r;
    r.f_pp = is_pp_exhaustive(ctx, f, threads).is_pp;
    r.g_pp = is_pp_exhaustive(ctx, g, threads).is_pp;
    r.equivalent = r.f_pp == r.g_pp;
    return r;
}

} // namespace rdickson
