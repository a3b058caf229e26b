#pragma once

// Registry of permutation claims about D_{n,k}(1, x) for structured indices
// n = p^{l_1} + ... + p^{l_i}. Each claim is data: a family of exponent
// multisets, a hypothesis filter and a prediction. Predictions are either a
// verdict (possibly depending on a side condition) or "same verdict as the
// named reduced polynomial g". Every prediction is compared against the
// exhaustive oracle applied to the matrix evaluator.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <ostream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "dickson.hpp"
#include "error.hpp"
#include "ff.hpp"
#include "modarith.hpp"
#include "permcheck.hpp"
#include "sparse_poly.hpp"

namespace rdickson {

/// Which exponent multisets a claim ranges over.
enum class Family {
    PlusThree,        // {l, 0, 0, 0}: n = p^l + 3
    FieldDegreePlusTwo, // {e, 0, 0}: n = p^e + 2, tied to the field degree
    TwoPowers,
    ThreePowers,
    FourPowers,
    UpToFourPowers,   // every multiset with 1..4 exponents
};

struct GridConfig {
    std::vector<u64> primes{3, 5, 7, 11};
    unsigned e_min = 1;
    unsigned e_max = 5;
    u64 q_cap = 243;
    unsigned l_max = 4;
    /// Empty means every k in [0, p - 1].
    std::vector<u64> ks;
    u64 n_cap = 20000;
    unsigned threads = 1;
};

/// One parameter point. ls is kept in descending order, so zeros come last.
struct Tuple {
    u64 p = 0;
    unsigned e = 0;
    u64 q = 0;
    u64 k = 0;
    std::vector<unsigned> ls;
    u64 n = 0;

    PrimePowerSum structure() const { return PrimePowerSum(p, ls); }
};

struct Claim {
    enum class Kind { Never, Always, Iff, Equivalent };

    std::string id;
    std::string description;
    Family family;
    Kind kind;
    std::function<bool(const Tuple&)> hypothesis;
    /// Side condition for Kind::Iff.
    std::function<bool(const Tuple&)> condition;
    /// Reduced polynomial for Kind::Equivalent.
    std::function<SparsePoly(const Tuple&)> reduced;
};

struct TupleOutcome {
    Tuple tuple;
    bool expected_pp = false;
    bool observed_pp = false;

    bool passed() const noexcept { return expected_pp == observed_pp; }
};

struct ClaimResult {
    std::string id;
    u64 tuples_checked = 0;
    u64 expected_pp = 0;
    u64 expected_not_pp = 0;
    std::vector<TupleOutcome> outcomes;
    std::vector<TupleOutcome> failures;
    bool passed = true;
};

namespace claims_detail {

inline u64 pw(u64 p, unsigned l) { return *checked_pow(p, l); }

inline unsigned zeros(const Tuple& t)
{
    return static_cast<unsigned>(std::count(t.ls.begin(), t.ls.end(), 0U));
}

inline unsigned odd_count(const Tuple& t)
{
    return static_cast<unsigned>(std::count_if(t.ls.begin(), t.ls.end(), [](unsigned l) { return l % 2 == 1; }));
}

/// Nonzero exponents (descending).
inline std::vector<unsigned> nonzero(const Tuple& t)
{
    std::vector<unsigned> out;
    for (unsigned l : t.ls)
        if (l != 0) out.push_back(l);
    return out;
}

/// Legendre symbol of num/den mod p; 0 when num = 0.
inline int legendre_ratio(std::int64_t num, std::int64_t den, u64 p)
{
    const u64 d = reduce_signed(den, p);
    if (d == 0) return 0;
    return legendre(static_cast<std::int64_t>(mul_mod(reduce_signed(num, p), inv_mod(d, p), p)), p);
}

inline u64 signed_res(std::int64_t v, u64 p) { return reduce_signed(v, p); }

/// Builds sum c_j x^{e_j} with signed integer coefficients.
inline SparsePoly poly_of(u64 p, std::initializer_list<std::pair<u64, std::int64_t>> terms)
{
    SparsePoly s(p);
    for (auto [e, c] : terms) s.add_term(e, signed_res(c, p));
    return s;
}

/// The general reduced polynomial written term by term: sub-multisets of odd
/// size contribute k/2^i x^{(sum - 1)/2}, nonempty ones of even size
/// contribute (2 - k)/2^i x^{sum/2}.
inline SparsePoly general_h(const Tuple& t)
{
    const u64 p = t.p;
    const std::size_t i = t.ls.size();
    const u64 inv = inv_mod(pow_mod(2, i, p), p);
    SparsePoly h(p);
    for (u64 mask = 1; mask < (u64{1} << i); ++mask) {
        u64 sum = 0;
        unsigned size = 0;
        for (std::size_t j = 0; j < i; ++j)
            if (mask >> j & 1U) {
                sum += pw(p, t.ls[j]);
                ++size;
            }
        if (size % 2 == 1) h.add_term((sum - 1) / 2, mul_mod(t.k, inv, p));
        else h.add_term(sum / 2, mul_mod(sub_mod(2, t.k, p), inv, p));
    }
    return h;
}

/// Seven-term polynomial for three exponents.
inline SparsePoly seven_term(const Tuple& t, std::int64_t top, std::int64_t pair, std::int64_t single)
{
    const u64 p = t.p;
    const u64 a = pw(p, t.ls[0]), b = pw(p, t.ls[1]), c = pw(p, t.ls[2]);
    return poly_of(p, {{(a + b + c - 1) / 2, top},
                       {(a + b) / 2, pair},
                       {(a + c) / 2, pair},
                       {(b + c) / 2, pair},
                       {(a - 1) / 2, single},
                       {(b - 1) / 2, single},
                       {(c - 1) / 2, single}});
}

/// h for four exponents with coefficients for sizes 4, 3, 2, 1.
inline SparsePoly four_term_h(const Tuple& t, std::int64_t c4, std::int64_t c3, std::int64_t c2, std::int64_t c1)
{
    const u64 p = t.p;
    const u64 a = pw(p, t.ls[0]), b = pw(p, t.ls[1]), c = pw(p, t.ls[2]), d = pw(p, t.ls[3]);
    return poly_of(p, {{(a + b + c + d) / 2, c4},
                       {(a + b + c - 1) / 2, c3},
                       {(a + b + d - 1) / 2, c3},
                       {(a + c + d - 1) / 2, c3},
                       {(b + c + d - 1) / 2, c3},
                       {(a + b) / 2, c2},
                       {(a + c) / 2, c2},
                       {(b + c) / 2, c2},
                       {(a + d) / 2, c2},
                       {(b + d) / 2, c2},
                       {(c + d) / 2, c2},
                       {(a - 1) / 2, c1},
                       {(b - 1) / 2, c1},
                       {(c - 1) / 2, c1},
                       {(d - 1) / 2, c1}});
}

inline bool eq(const Tuple& t, u64 p, u64 k) { return t.p == p && t.k == k; }

} // namespace claims_detail

/// All registered claims, in a fixed order.
inline const std::vector<Claim>& claim_registry()
{
    using namespace claims_detail;
    using K = Claim::Kind;
    static const std::vector<Claim> registry = [] {
        std::vector<Claim> r;
        auto any = [](const Tuple&) { return true; };

        // n = p^l + 3
        auto l_of = [](const Tuple& t) { return t.ls[0]; };
        r.push_back({"T3.1", "p = 3, k = 0: PP iff gcd((3^l + 3)/2, 3^e - 1) = 1", Family::PlusThree, K::Iff,
                     [](const Tuple& t) { return eq(t, 3, 0); },
                     [l_of](const Tuple& t) { return std::gcd((pw(3, l_of(t)) + 3) / 2, t.q - 1) == 1; }, {}});
        r.push_back({"T3.2", "p = 3, k = 1: never PP", Family::PlusThree, K::Never,
                     [](const Tuple& t) { return eq(t, 3, 1); }, {}, {}});
        r.push_back({"T3.3", "p = 3, k = 2: PP iff l = 0 or l = m e + 1 with m even", Family::PlusThree, K::Iff,
                     [](const Tuple& t) { return eq(t, 3, 2); },
                     [l_of](const Tuple& t) {
                         const unsigned l = l_of(t);
                         return l == 0 || ((l - 1) % t.e == 0 && ((l - 1) / t.e) % 2 == 0);
                     },
                     {}});
        auto minus_quarter = [](const Tuple& t) { return legendre_ratio(-1, 4, t.p); };
        r.push_back({"T3.4", "p > 5, k = 2, -1/4 a square mod p: PP iff l = 0", Family::PlusThree, K::Iff,
                     [minus_quarter](const Tuple& t) { return t.p > 5 && t.k == 2 && minus_quarter(t) == 1; },
                     [l_of](const Tuple& t) { return l_of(t) == 0; }, {}});
        r.push_back({"T3.R5", "p = 5, k = 2, l > 0: never PP", Family::PlusThree, K::Never,
                     [l_of](const Tuple& t) { return eq(t, 5, 2) && l_of(t) > 0; }, {}, {}});
        r.push_back({"T3.5", "p > 5, k = 2, l > 0, -1/4 a non-square: PP iff 3x^((p^l+1)/2) + x^((p^l-1)/2) + x is",
                     Family::PlusThree, K::Equivalent,
                     [minus_quarter, l_of](const Tuple& t) {
                         return t.p > 5 && t.k == 2 && l_of(t) > 0 && minus_quarter(t) == -1;
                     },
                     {},
                     [l_of](const Tuple& t) {
                         const u64 a = pw(t.p, l_of(t));
                         return poly_of(t.p, {{(a + 1) / 2, 3}, {(a - 1) / 2, 1}, {1, 1}});
                     }});
        r.push_back({"T3.R7", "p > 7, k = 7: never PP", Family::PlusThree, K::Never,
                     [](const Tuple& t) { return t.p > 7 && t.k == 7; }, {}, {}});
        r.push_back({"T3.R6", "p > 5, k = 0, -6 a square mod p: never PP", Family::PlusThree, K::Never,
                     [](const Tuple& t) { return t.p > 5 && t.k == 0 && legendre(-6, t.p) == 1; }, {}, {}});
        r.push_back({"T3.6", "p > 5, k = 0, -6 a non-square: PP iff x^((p^l+3)/2) + 3x^((p^l+1)/2) + 3x is",
                     Family::PlusThree, K::Equivalent,
                     [](const Tuple& t) { return t.p > 5 && t.k == 0 && legendre(-6, t.p) == -1; }, {},
                     [l_of](const Tuple& t) {
                         const u64 a = pw(t.p, l_of(t));
                         return poly_of(t.p, {{(a + 3) / 2, 1}, {(a + 1) / 2, 3}, {1, 3}});
                     }});
        r.push_back({"T3.7", "p = 5, k != 2 / p > 5, k != 0, 2 / p > 7, k != 7: PP iff f of the n = p^l + 3 reduction is",
                     Family::PlusThree, K::Equivalent,
                     [](const Tuple& t) {
                         return (t.p == 5 && t.k != 2) || (t.p > 5 && t.k != 0 && t.k != 2) || (t.p > 7 && t.k != 7);
                     },
                     {},
                     [l_of](const Tuple& t) {
                         const u64 a = pw(t.p, l_of(t));
                         const auto k = static_cast<std::int64_t>(t.k);
                         return poly_of(t.p, {{(a + 3) / 2, 2 - k}, {(a + 1) / 2, 6}, {(a - 1) / 2, k}, {1, 2 * (3 - k)}});
                     }});

        // n = p^{l1} + p^{l2} + p^{l3}
        r.push_back({"P4.1", "PP iff the seven-term polynomial is", Family::ThreePowers, K::Equivalent, any, {},
                     [](const Tuple& t) {
                         const auto k = static_cast<std::int64_t>(t.k);
                         return seven_term(t, k, 2 - k, k);
                     }});
        r.push_back({"T4.1", "p = 3, k = 0: never PP", Family::ThreePowers, K::Never,
                     [](const Tuple& t) { return eq(t, 3, 0); }, {}, {}});
        r.push_back({"R4.HMS", "k = 0, n = p^e + 2: PP of F_{p^e} iff p^e = 1 mod 3", Family::FieldDegreePlusTwo, K::Iff,
                     [](const Tuple& t) { return t.k == 0; }, [](const Tuple& t) { return t.q % 3 == 1; }, {}});
        r.push_back({"T4.2", "p = 3, k = 1, exactly one l zero: never PP", Family::ThreePowers, K::Never,
                     [](const Tuple& t) { return eq(t, 3, 1) && zeros(t) == 1; }, {}, {}});
        r.push_back({"T4.3", "p = 3, k = 1, all l nonzero: PP iff the all-ones seven-term polynomial is",
                     Family::ThreePowers, K::Equivalent, [](const Tuple& t) { return eq(t, 3, 1) && zeros(t) == 0; },
                     {}, [](const Tuple& t) { return seven_term(t, 1, 1, 1); }});
        r.push_back({"T4.4", "p = 3, k = 2, exactly one l zero: never PP", Family::ThreePowers, K::Never,
                     [](const Tuple& t) { return eq(t, 3, 2) && zeros(t) == 1; }, {}, {}});
        r.push_back({"T4.5", "p = 3, k = 2, all l nonzero: PP iff x^((a+b+c-1)/2) + sum x^((a-1)/2) is",
                     Family::ThreePowers, K::Equivalent, [](const Tuple& t) { return eq(t, 3, 2) && zeros(t) == 0; },
                     {}, [](const Tuple& t) { return seven_term(t, 1, 0, 1); }});
        auto ratio4 = [](const Tuple& t) {
            const auto k = static_cast<std::int64_t>(t.k);
            return legendre_ratio(3 * k, 2 * (k - 3), t.p);
        };
        r.push_back({"T4.QR", "p > 3, k != 3, 3k/(2(k-3)) a square: PP iff l1 = l2 = l3 = 0", Family::ThreePowers, K::Iff,
                     [ratio4](const Tuple& t) { return t.p > 3 && t.k != 3 && ratio4(t) == 1; },
                     [](const Tuple& t) { return zeros(t) == 3; }, {}});
        r.push_back({"T4.R3", "p > 3, k = 3: never PP", Family::ThreePowers, K::Never,
                     [](const Tuple& t) { return t.p > 3 && t.k == 3; }, {}, {}});
        r.push_back({"T4.NQR", "p > 3, k != 3, 3k/(2(k-3)) a non-square: PP iff the seven-term polynomial is",
                     Family::ThreePowers, K::Equivalent,
                     [ratio4](const Tuple& t) { return t.p > 3 && t.k != 3 && ratio4(t) == -1; }, {},
                     [](const Tuple& t) {
                         const auto k = static_cast<std::int64_t>(t.k);
                         return seven_term(t, k, 2 - k, k);
                     }});

        // n = p^{l1} + p^{l2} + p^{l3} + p^{l4}
        r.push_back({"P5.1", "PP iff h is", Family::FourPowers, K::Equivalent, any, {},
                     [](const Tuple& t) {
                         const auto k = static_cast<std::int64_t>(t.k);
                         return four_term_h(t, 2 - k, k, 2 - k, k);
                     }});
        auto same_parity2 = [](const Tuple& t) {
            const auto nz = nonzero(t);
            return nz[0] % 2 == nz[1] % 2;
        };
        auto two_zero_g_k0 = [](const Tuple& t) {
            const u64 a = pw(t.p, t.ls[0]), b = pw(t.p, t.ls[1]);
            return poly_of(t.p, {{(a + b) / 2 + 1, 1}, {(a + b) / 2, 1}, {(a + 1) / 2, 2}, {(b + 1) / 2, 2}, {1, 1}});
        };
        r.push_back({"T5.1", "p = 3, k = 0, exactly two l zero, nonzero pair of equal parity: never PP",
                     Family::FourPowers, K::Never,
                     [same_parity2](const Tuple& t) { return eq(t, 3, 0) && zeros(t) == 2 && same_parity2(t); }, {},
                     {}});
        r.push_back({"T5.2", "p = 3, k = 0, exactly two l zero, different parity: PP iff g is", Family::FourPowers,
                     K::Equivalent,
                     [same_parity2](const Tuple& t) { return eq(t, 3, 0) && zeros(t) == 2 && !same_parity2(t); }, {},
                     two_zero_g_k0});
        r.push_back({"T5.3", "p = 3, k = 1, exactly two l zero, both odd or different parity: never PP",
                     Family::FourPowers, K::Never,
                     [](const Tuple& t) { return eq(t, 3, 1) && zeros(t) == 2 && odd_count(t) >= 1; }, {}, {}});
        r.push_back({"T5.4", "p = 3, k = 1, exactly two l zero, both even: PP iff g is", Family::FourPowers,
                     K::Equivalent, [](const Tuple& t) { return eq(t, 3, 1) && zeros(t) == 2 && odd_count(t) == 0; },
                     {},
                     [](const Tuple& t) {
                         const u64 a = pw(t.p, t.ls[0]), b = pw(t.p, t.ls[1]);
                         return poly_of(t.p, {{(a + b) / 2 + 1, 1}, {(a - 1) / 2, 1}, {(b - 1) / 2, 1}, {1, 1}});
                     }});
        r.push_back({"T5.5", "p = 3, k = 0, exactly one l zero, nonzero all even or exactly two odd: never PP",
                     Family::FourPowers, K::Never,
                     [](const Tuple& t) {
                         return eq(t, 3, 0) && zeros(t) == 1 && (odd_count(t) == 0 || odd_count(t) == 2);
                     },
                     {}, {}});
        r.push_back({"T5.6", "p = 3, k = 0, exactly one l zero, all odd or exactly one odd: PP iff g is",
                     Family::FourPowers, K::Equivalent,
                     [](const Tuple& t) {
                         return eq(t, 3, 0) && zeros(t) == 1 && (odd_count(t) == 3 || odd_count(t) == 1);
                     },
                     {},
                     [](const Tuple& t) {
                         const u64 a = pw(t.p, t.ls[0]), b = pw(t.p, t.ls[1]), c = pw(t.p, t.ls[2]);
                         return poly_of(t.p, {{(a + b + c + 1) / 2, 1},
                                              {(a + b) / 2, 1},
                                              {(a + c) / 2, 1},
                                              {(b + c) / 2, 1},
                                              {(a + 1) / 2, 1},
                                              {(b + 1) / 2, 1},
                                              {(c + 1) / 2, 1}});
                     }});
        r.push_back({"T5.7", "p = 3, k = 1, exactly one l zero: never PP", Family::FourPowers, K::Never,
                     [](const Tuple& t) { return eq(t, 3, 1) && zeros(t) == 1; }, {}, {}});
        r.push_back({"T5.8", "p = 3, k = 0, all l nonzero, all odd, all even or exactly two odd: never PP",
                     Family::FourPowers, K::Never,
                     [](const Tuple& t) {
                         const unsigned o = odd_count(t);
                         return eq(t, 3, 0) && zeros(t) == 0 && (o == 4 || o == 0 || o == 2);
                     },
                     {}, {}});
        r.push_back({"T5.9", "p = 3, k = 0, all l nonzero, exactly one or three odd: PP iff g is", Family::FourPowers,
                     K::Equivalent,
                     [](const Tuple& t) {
                         const unsigned o = odd_count(t);
                         return eq(t, 3, 0) && zeros(t) == 0 && (o == 1 || o == 3);
                     },
                     {}, [](const Tuple& t) { return four_term_h(t, 1, 0, 1, 0); }});
        r.push_back({"T5.10", "p = 3, k = 1, all l nonzero: never PP", Family::FourPowers, K::Never,
                     [](const Tuple& t) { return eq(t, 3, 1) && zeros(t) == 0; }, {}, {}});
        auto ratio5 = [](const Tuple& t) {
            const auto k = static_cast<std::int64_t>(t.k);
            return legendre_ratio(2 * (k - 6), 2 - k, t.p);
        };
        r.push_back({"T5.QR", "p >= 5, k != 2, 2(k-6)/(2-k) a square, at least two l nonzero: never PP",
                     Family::FourPowers, K::Never,
                     [ratio5](const Tuple& t) { return t.p >= 5 && t.k != 2 && ratio5(t) == 1 && zeros(t) <= 2; }, {},
                     {}});
        r.push_back({"T5.QNR", "p >= 5, k != 2, 2(k-6)/(2-k) a non-square, at least two l nonzero: PP iff h is",
                     Family::FourPowers, K::Equivalent,
                     [ratio5](const Tuple& t) { return t.p >= 5 && t.k != 2 && ratio5(t) == -1 && zeros(t) <= 2; }, {},
                     [](const Tuple& t) {
                         const auto k = static_cast<std::int64_t>(t.k);
                         return four_term_h(t, 2 - k, k, 2 - k, k);
                     }});
        // The collision h(0) = 0 = h(-1) needs h free of constants, so mixed
        // zero/nonzero exponents are excluded (p = 5, ls = 1,1,1,0 is a PP of F_5).
        r.push_back({"T5.k2", "p = 1 mod 4, k = 2, all l zero or none zero: PP iff all l = 0", Family::FourPowers,
                     K::Iff, [](const Tuple& t) { return t.p % 4 == 1 && t.k == 2 && (zeros(t) == 0 || zeros(t) == 4); },
                     [](const Tuple& t) { return zeros(t) == 4; }, {}});
        r.push_back({"T5.k2c", "p = 3 mod 4, k = 2: PP iff the k = 2 form of h is", Family::FourPowers, K::Equivalent,
                     [](const Tuple& t) { return t.p % 4 == 3 && t.k == 2; }, {},
                     [](const Tuple& t) { return four_term_h(t, 0, 1, 0, 1); }});
        r.push_back({"T5.k2R", "p = 3 mod 4, k = 2, all l = 0: PP", Family::FourPowers, K::Always,
                     [](const Tuple& t) { return t.p % 4 == 3 && t.k == 2 && zeros(t) == 4; }, {}, {}});

        // general i and n = p^{l1} + p^{l2}
        r.push_back({"G6", "any i: PP iff the general reduced polynomial h is", Family::UpToFourPowers, K::Equivalent,
                     any, {}, general_h});
        r.push_back({"C6.1", "k = 0: PP iff gcd((p^l1 + p^l2)/2, p^e - 1) = 1", Family::TwoPowers, K::Iff,
                     [](const Tuple& t) { return t.k == 0; },
                     [](const Tuple& t) { return std::gcd((pw(t.p, t.ls[0]) + pw(t.p, t.ls[1])) / 2, t.q - 1) == 1; },
                     {}});
        r.push_back({"C6.2", "p = 3, k = 2, l1 and l2 odd: PP iff x^((p^l1-1)/2) + x^((p^l2-1)/2) is", Family::TwoPowers,
                     K::Equivalent, [](const Tuple& t) { return eq(t, 3, 2) && odd_count(t) == 2; }, {},
                     [](const Tuple& t) {
                         return poly_of(t.p, {{(pw(t.p, t.ls[0]) - 1) / 2, 1}, {(pw(t.p, t.ls[1]) - 1) / 2, 1}});
                     }});
        r.push_back({"C6.2R", "p = 3, k = 2, l1 and l2 both even, or of different parity and both nonzero: never PP",
                     Family::TwoPowers, K::Never,
                     [](const Tuple& t) {
                         return eq(t, 3, 2) && (odd_count(t) == 0 || (odd_count(t) == 1 && zeros(t) == 0));
                     },
                     {}, {}});
        r.push_back({"T6.3", "p > 3, k = 2: never PP", Family::TwoPowers, K::Never,
                     [](const Tuple& t) { return t.p > 3 && t.k == 2; }, {}, {}});
        auto ratio6 = [](const Tuple& t) {
            const auto k = static_cast<std::int64_t>(t.k);
            return legendre_ratio(2 * k, k - 2, t.p);
        };
        r.push_back({"C6.4", "k != 0, 2, p > 3, 2k/(k-2) a square: PP iff l1 = l2 = 0", Family::TwoPowers, K::Iff,
                     [ratio6](const Tuple& t) { return t.p > 3 && t.k != 0 && t.k != 2 && ratio6(t) == 1; },
                     [](const Tuple& t) { return zeros(t) == 2; }, {}});
        auto trinomial = [](const Tuple& t) {
            const u64 a = pw(t.p, t.ls[0]), b = pw(t.p, t.ls[1]);
            const auto k = static_cast<std::int64_t>(t.k);
            return poly_of(t.p, {{(a + b) / 2, 2 - k}, {(a - 1) / 2, k}, {(b - 1) / 2, k}});
        };
        r.push_back({"C6.5", "k != 0, 2, p > 3, 2k/(k-2) a non-square: PP iff the trinomial is", Family::TwoPowers,
                     K::Equivalent,
                     [ratio6](const Tuple& t) { return t.p > 3 && t.k != 0 && t.k != 2 && ratio6(t) == -1; }, {},
                     trinomial});
        r.push_back({"C6.5R", "p = 3, k = 1, not both l zero: never PP", Family::TwoPowers, K::Never,
                     [](const Tuple& t) { return eq(t, 3, 1) && zeros(t) < 2; }, {}, {}});
        return r;
    }();
    return registry;
}

inline const Claim& find_claim(const std::string& id)
{
    for (const auto& c : claim_registry())
        if (c.id == id) return c;
    fail(Errc::UnknownClaim, "no claim named " + id);
}

namespace claims_detail {

inline void multisets(unsigned size, unsigned max_value, std::vector<unsigned>& cur,
                      std::vector<std::vector<unsigned>>& out)
{
    if (cur.size() == size) {
        out.push_back(cur);
        return;
    }
    const unsigned upper = cur.empty() ? max_value : cur.back();
    for (unsigned v = upper + 1; v-- > 0;) {
        cur.push_back(v);
        multisets(size, max_value, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<unsigned>> family_members(Family family, unsigned l_max, unsigned e)
{
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur;
    switch (family) {
    case Family::PlusThree:
        for (unsigned l = 0; l <= l_max; ++l) out.push_back({l, 0, 0, 0});
        break;
    case Family::FieldDegreePlusTwo:
        out.push_back({e, 0, 0});
        break;
    case Family::TwoPowers: multisets(2, l_max, cur, out); break;
    case Family::ThreePowers: multisets(3, l_max, cur, out); break;
    case Family::FourPowers: multisets(4, l_max, cur, out); break;
    case Family::UpToFourPowers:
        for (unsigned i = 1; i <= 4; ++i) multisets(i, l_max, cur, out);
        break;
    }
    return out;
}

inline void validate_grid(const GridConfig& grid)
{
    if (grid.q_cap > kExhaustiveOrderCap)
        fail(Errc::FieldTooLarge, "q cap " + std::to_string(grid.q_cap) + " exceeds 2^20");
}

} // namespace claims_detail

/// Hypothesis-satisfying tuples of a claim, in deterministic order
/// (p, e, k, then exponent multisets in descending lexicographic order).
inline std::vector<Tuple> claim_tuples(const Claim& claim, const GridConfig& grid)
{
    claims_detail::validate_grid(grid);
    std::vector<Tuple> out;
    for (u64 p : grid.primes) {
        if (p == 2) fail(Errc::EvenCharacteristic, "characteristic 2 in grid");
        if (!is_prime(p)) fail(Errc::NotPrime, std::to_string(p) + " in grid is not prime");
        for (unsigned e = grid.e_min; e <= grid.e_max; ++e) {
            const auto q = checked_pow(p, e, grid.q_cap);
            if (!q) break;
            for (u64 k = 0; k < p; ++k) {
                if (!grid.ks.empty() && std::find(grid.ks.begin(), grid.ks.end(), k) == grid.ks.end()) continue;
                for (auto& ls : claims_detail::family_members(claim.family, grid.l_max, e)) {
                    Tuple t{p, e, *q, k, ls, 0};
                    const auto n = [&]() -> std::optional<u64> {
                        u64 total = 0;
                        for (unsigned l : ls) {
                            const auto term = checked_pow(p, l, grid.n_cap);
                            if (!term || *term > grid.n_cap - total) return std::nullopt;
                            total += *term;
                        }
                        return total;
                    }();
                    if (!n) continue;
                    t.n = *n;
                    if (claim.hypothesis(t)) out.push_back(std::move(t));
                }
            }
        }
    }
    return out;
}

/// Runs f(i) for i in [0, count) on up to `threads` workers.
template <class F>
void parallel_for(std::size_t count, unsigned threads, F&& f)
{
    threads = std::max(1U, threads);
    if (threads == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(threads, count); ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) f(i);
        });
    }
    for (auto& th : pool) th.join();
}

inline ClaimResult verify_claim(const Claim& claim, const GridConfig& grid)
{
    const std::vector<Tuple> tuples = claim_tuples(claim, grid);

    std::map<std::pair<u64, unsigned>, FieldCtx> fields;
    for (const auto& t : tuples)
        if (!fields.count({t.p, t.e})) fields.emplace(std::make_pair(t.p, t.e), make_field(t.p, t.e));

    std::vector<TupleOutcome> outcomes(tuples.size());
    parallel_for(tuples.size(), grid.threads, [&](std::size_t i) {
        const Tuple& t = tuples[i];
        const FieldCtx& ctx = fields.at({t.p, t.e});
        const DicksonParams params{t.n, t.k, t.p};
        TupleOutcome& out = outcomes[i];
        out.tuple = t;
        out.observed_pp =
            is_pp_exhaustive(ctx, [&](const FieldElement& x) { return rdk_eval_matrix(ctx, params, x); }).is_pp;
        switch (claim.kind) {
        case Claim::Kind::Never: out.expected_pp = false; break;
        case Claim::Kind::Always: out.expected_pp = true; break;
        case Claim::Kind::Iff: out.expected_pp = claim.condition(t); break;
        case Claim::Kind::Equivalent: {
            const SparsePoly g = claim.reduced(t);
            out.expected_pp = is_pp_exhaustive(ctx, [&](const FieldElement& x) { return g.evaluate(ctx, x); }).is_pp;
            break;
        }
        }
    });

    ClaimResult result;
    result.id = claim.id;
    result.tuples_checked = outcomes.size();
    for (const auto& o : outcomes) {
        (o.expected_pp ? result.expected_pp : result.expected_not_pp) += 1;
        if (!o.passed()) result.failures.push_back(o);
    }
    result.passed = result.failures.empty();
    result.outcomes = std::move(outcomes);
    return result;
}

inline ClaimResult verify_claim(const std::string& id, const GridConfig& grid)
{
    return verify_claim(find_claim(id), grid);
}

inline std::vector<ClaimResult> verify_all(const GridConfig& grid)
{
    claims_detail::validate_grid(grid);
    std::vector<ClaimResult> out;
    for (const auto& claim : claim_registry()) out.push_back(verify_claim(claim, grid));
    return out;
}

// Serialization.

inline std::string format_ls(const std::vector<unsigned>& ls)
{
    std::string s;
    for (unsigned l : ls) {
        if (!s.empty()) s += ',';
        s += std::to_string(l);
    }
    return s;
}

inline const char* verdict(bool pp) { return pp ? "PP" : "notPP"; }

inline void write_csv(std::ostream& os, const std::vector<ClaimResult>& results)
{
    os << "claim_id,p,e,k,ls,expected,observed,passed\n";
    for (const auto& r : results)
        for (const auto& o : r.outcomes)
            os << r.id << ',' << o.tuple.p << ',' << o.tuple.e << ',' << o.tuple.k << ",\"" << format_ls(o.tuple.ls)
               << "\"," << verdict(o.expected_pp) << ',' << verdict(o.observed_pp) << ','
               << (o.passed() ? "true" : "false") << '\n';
}

inline void write_summary_line(std::ostream& os, const ClaimResult& r)
{
    os << "summary claim=" << r.id << " tuples=" << r.tuples_checked << " expected_pp=" << r.expected_pp
       << " expected_not_pp=" << r.expected_not_pp << " failures=" << r.failures.size()
       << " passed=" << (r.passed ? "true" : "false") << '\n';
}

inline void write_lines(std::ostream& os, const std::vector<ClaimResult>& results)
{
    for (const auto& r : results) {
        for (const auto& o : r.outcomes)
            os << "claim=" << r.id << " p=" << o.tuple.p << " e=" << o.tuple.e << " k=" << o.tuple.k
               << " ls=" << format_ls(o.tuple.ls) << " n=" << o.tuple.n << " expected=" << verdict(o.expected_pp)
               << " observed=" << verdict(o.observed_pp) << " passed=" << (o.passed() ? "true" : "false") << '\n';
        write_summary_line(os, r);
    }
}

} // namespace rdickson
