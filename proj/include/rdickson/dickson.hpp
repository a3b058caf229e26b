#pragma once

// Reversed Dickson polynomials of the (k+1)-th kind at a = 1,
//
//   D_{n,k}(1, x) = sum_{i <= n/2} (n - k i)/(n - i) C(n - i, i) (-x)^i,
//   D_{0,k} = 2 - k,
//
// evaluated five independent ways (recurrence, 2x2 matrix power, dense
// polynomial from the recurrence, coefficient formula, and the
// y(1 - y) parametrisation over F_{q^2}), together with the prime-power-sum
// closed forms in u = 1 - 4x and the reduced polynomials whose permutation
// behaviour matches D_{n,k}.

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "ff.hpp"
#include "modarith.hpp"
#include "poly.hpp"
#include "sparse_poly.hpp"

namespace rdickson {

struct DicksonParams {
    u64 n = 0;
    u64 k = 0;
    u64 p = 3;

    void validate() const
    {
        if (k >= p)
            fail(Errc::KindOutOfRange, "k = " + std::to_string(k) + " outside [0, " + std::to_string(p - 1) + "]");
    }
};

inline constexpr u64 kMaxStructuredIndex = (u64{1} << 63) - 1;

/// n = p^{l_1} + ... + p^{l_i}, i >= 1. Exponents are kept in the order given.
class PrimePowerSum {
  public:
    PrimePowerSum(u64 p, std::vector<unsigned> ls) : p_(p), ls_(std::move(ls))
    {
        if (ls_.empty()) fail(Errc::InvalidArgument, "prime-power sum needs at least one exponent");
        if (ls_.size() > kMaxTerms) fail(Errc::InvalidArgument, "too many exponents in prime-power sum");
        n_ = 0;
        for (unsigned l : ls_) {
            const auto term = checked_pow(p_, l, kMaxStructuredIndex);
            if (!term || *term > kMaxStructuredIndex - n_)
                fail(Errc::StructureOverflow, "sum of prime powers exceeds 2^63 - 1");
            powers_.push_back(*term);
            n_ += *term;
        }
    }

    static constexpr std::size_t kMaxTerms = 20;

    u64 p() const noexcept { return p_; }
    u64 n() const noexcept { return n_; }
    std::size_t size() const noexcept { return ls_.size(); }
    const std::vector<unsigned>& ls() const noexcept { return ls_; }
    /// p^{l_j}, parallel to ls().
    const std::vector<u64>& powers() const noexcept { return powers_; }

    /// Same multiset, exponents in descending order.
    PrimePowerSum canonical() const
    {
        auto sorted = ls_;
        std::sort(sorted.begin(), sorted.end(), std::greater<>());
        return PrimePowerSum(p_, std::move(sorted));
    }

    std::string to_string() const
    {
        std::string out;
        for (unsigned l : ls_) {
            if (!out.empty()) out += " + ";
            out += std::to_string(p_) + "^" + std::to_string(l);
        }
        return out;
    }

  private:
    u64 p_;
    std::vector<unsigned> ls_;
    std::vector<u64> powers_;
    u64 n_ = 0;
};

namespace detail {

inline void check_params(const FieldCtx& ctx, const DicksonParams& params)
{
    if (params.p != ctx.p())
        fail(Errc::CharacteristicMismatch, "parameters for p = " + std::to_string(params.p) + " used in F_" +
                                               std::to_string(ctx.q()));
    params.validate();
}

inline u64 seed_d0(const DicksonParams& params) { return sub_mod(2 % params.p, params.k, params.p); }

} // namespace detail

/// D_{n,k}(1, x) by D_n = D_{n-1} - x D_{n-2}, D_0 = 2 - k, D_1 = 1.
inline FieldElement rdk_eval_rec(const FieldCtx& ctx, const DicksonParams& params, const FieldElement& x)
{
    detail::check_params(ctx, params);
    FieldElement prev = ctx.from_residue(detail::seed_d0(params));
    if (params.n == 0) return prev;
    FieldElement cur = ctx.one();
    for (u64 i = 2; i <= params.n; ++i) {
        FieldElement next = ctx.sub(cur, ctx.mul(x, prev));
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// D_{n,k}(1, x) = (2 - k, 1) M^n (1, 0)^T with M = [[0, -x], [1, 1]].
inline FieldElement rdk_eval_matrix(const FieldCtx& ctx, const DicksonParams& params, const FieldElement& x)
{
    detail::check_params(ctx, params);
    using Mat = std::array<FieldElement, 4>; // row-major 2x2
    auto mul = [&ctx](const Mat& a, const Mat& b) {
        return Mat{ctx.add(ctx.mul(a[0], b[0]), ctx.mul(a[1], b[2])), ctx.add(ctx.mul(a[0], b[1]), ctx.mul(a[1], b[3])),
                   ctx.add(ctx.mul(a[2], b[0]), ctx.mul(a[3], b[2])), ctx.add(ctx.mul(a[2], b[1]), ctx.mul(a[3], b[3]))};
    };
    Mat result{ctx.one(), ctx.zero(), ctx.zero(), ctx.one()};
    Mat base{ctx.zero(), ctx.neg(x), ctx.one(), ctx.one()};
    for (u64 n = params.n; n != 0; n >>= 1U) {
        if (n & 1U) result = mul(result, base);
        if (n > 1) base = mul(base, base);
    }
    const FieldElement d0 = ctx.from_residue(detail::seed_d0(params));
    return ctx.add(ctx.mul(d0, result[0]), result[2]);
}

inline constexpr u64 kDefaultDegreeBound = u64{1} << 14;

/// D_{n,k}(1, x) in Z_p[x], built by running the recurrence on polynomials.
inline Poly rdk_poly(u64 p, const DicksonParams& params, u64 degree_bound = kDefaultDegreeBound)
{
    params.validate();
    if (params.p != p) fail(Errc::CharacteristicMismatch, "parameters and ring disagree on p");
    if (params.n / 2 > degree_bound)
        fail(Errc::DegreeBoundExceeded, "degree " + std::to_string(params.n / 2) + " above bound");
    Poly prev = Poly::constant(p, detail::seed_d0(params));
    if (params.n == 0) return prev;
    Poly cur = Poly::constant(p, 1);
    const Poly x = Poly::x(p);
    for (u64 i = 2; i <= params.n; ++i) {
        Poly next = cur - x * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// D_{n,k}(1, x) from the coefficient formula. The fraction
/// (n - k i)/(n - i) C(n - i, i) is taken in its integral form
/// C(n - i, i) - (k - 1) C(n - i - 1, i - 1), which stays defined when
/// p | n - i.
inline SparsePoly rdk_poly_direct(u64 p, const DicksonParams& params, u64 degree_bound = kDefaultDegreeBound)
{
    params.validate();
    if (params.p != p) fail(Errc::CharacteristicMismatch, "parameters and ring disagree on p");
    SparsePoly out(p);
    const u64 n = params.n;
    if (n == 0) return out.add_term(0, detail::seed_d0(params));
    if (n / 2 > degree_bound) fail(Errc::DegreeBoundExceeded, "degree " + std::to_string(n / 2) + " above bound");
    const LucasBinomial binom(p);
    const u64 k_minus_one = sub_mod(params.k, 1, p);
    for (u64 i = 0; i <= n / 2; ++i) {
        u64 c = binom(n - i, i);
        if (i >= 1) c = sub_mod(c, mul_mod(k_minus_one, binom(n - i - 1, i - 1), p), p);
        if (i % 2 == 1) c = sub_mod(0, c, p);
        out.add_term(i, c);
    }
    return out;
}

/// D_{n,k}(1, 1/4) = (k (n - 1) + 2) / 2^n in Z_p.
inline u64 rdk_value_quarter(u64 p, const DicksonParams& params)
{
    params.validate();
    const u64 n = params.n;
    // k (n - 1) + 2 with n - 1 taken mod p; n = 0 gives 2 - k.
    const u64 n_minus_one = n == 0 ? p - 1 : (n - 1) % p;
    const u64 numerator = add_mod(mul_mod(params.k, n_minus_one, p), 2 % p, p);
    const u64 two_pow = pow_mod(2, n % (p - 1), p);
    return mul_mod(numerator, inv_mod(two_pow, p), p);
}

/// Evaluates D_{n,k}(1, x) through x = y (1 - y) with y in F_{q^2}:
///
///   D_{n,k}(1, y(1-y)) = k (y^n (1-y) - y (1-y)^n) / (2y - 1) + y^n + (1-y)^n,
///
/// and (k (n-1) + 2) / 2^n at x = 1/4. The quadratic extension, its
/// embedding and a square-root table are built once per field.
class FunctionalEvaluator {
  public:
    explicit FunctionalEvaluator(const FieldCtx& ctx)
        : ctx_(ctx),
          ext_(make_field(ctx.p(), 2 * ctx.e())),
          embed_(embed_subfield(ctx_, ext_)),
          roots_(ext_),
          quarter_(ctx.inv(ctx.from_residue(4))),
          half_ext_(ext_.inv(ext_.from_residue(2)))
    {
    }

    const FieldCtx& field() const noexcept { return ctx_; }
    const FieldCtx& extension() const noexcept { return ext_; }

    FieldElement operator()(const DicksonParams& params, const FieldElement& x) const
    {
        detail::check_params(ctx_, params);
        if (x == quarter_) return ctx_.from_residue(rdk_value_quarter(ctx_.p(), params));

        const FieldElement xe = embed_(x);
        const FieldElement disc = ext_.sub(ext_.one(), ext_.scale(xe, 4));
        const auto s = roots_(disc);
        if (!s) fail(Errc::InternalError, "1 - 4x has no square root in F_{q^2}");
        const FieldElement y = ext_.mul(ext_.add(ext_.one(), *s), half_ext_);
        const FieldElement y_bar = ext_.sub(ext_.one(), y);
        const FieldElement yn = ext_.pow(y, params.n);
        const FieldElement ybn = ext_.pow(y_bar, params.n);

        FieldElement value = ext_.add(yn, ybn);
        if (params.k != 0) {
            const FieldElement num = ext_.sub(ext_.mul(yn, y_bar), ext_.mul(y, ybn));
            const FieldElement den = ext_.sub(ext_.scale(y, 2), ext_.one());
            value = ext_.add(value, ext_.scale(ext_.div(num, den), params.k));
        }
        auto back = embed_.preimage(value);
        if (!back) fail(Errc::InternalError, "functional value left the base field");
        return *back;
    }

  private:
    FieldCtx ctx_;
    FieldCtx ext_;
    Embedding embed_;
    SquareRootTable roots_;
    FieldElement quarter_;
    FieldElement half_ext_;
};

/// One-shot form; builds the quadratic extension on every call.
inline FieldElement rdk_eval_functional(const FieldCtx& ctx, const DicksonParams& params, const FieldElement& x)
{
    return FunctionalEvaluator(ctx)(params, x);
}

/// A polynomial in u, where u stands for 1 - 4x.
class ClosedForm {
  public:
    explicit ClosedForm(SparsePoly in_u) : in_u_(std::move(in_u)) {}

    const SparsePoly& in_u() const noexcept { return in_u_; }

    FieldElement evaluate_at_x(const FieldCtx& ctx, const FieldElement& x) const
    {
        const FieldElement u = ctx.sub(ctx.one(), ctx.scale(x, 4));
        return in_u_.evaluate(ctx, u);
    }

    /// Dense x-polynomial, only when the u-degree is within the bound.
    Poly to_x_poly(u64 degree_bound = kDefaultDegreeBound) const
    {
        const u64 p = in_u_.characteristic();
        const Poly u_of_x = Poly::from_signed(p, {1, -4});
        return compose(in_u_.to_dense(degree_bound), u_of_x);
    }

  private:
    SparsePoly in_u_;
};

/// Sum over all sub-multisets S of the exponents of c_S u^{e_S}:
/// |S| even gives (2 - k)/2^i u^{(sum_S p^l)/2}, |S| odd gives
/// k/2^i u^{(sum_S p^l - 1)/2}. Like terms are combined.
inline ClosedForm closed_form_sum(const PrimePowerSum& pps, u64 k)
{
    const u64 p = pps.p();
    DicksonParams{pps.n(), k, p}.validate();
    const std::size_t i = pps.size();
    const u64 inv_two_i = inv_mod(pow_mod(2, i, p), p);
    const u64 even_coeff = mul_mod(sub_mod(2 % p, k, p), inv_two_i, p);
    const u64 odd_coeff = mul_mod(k % p, inv_two_i, p);
    const auto& powers = pps.powers();

    SparsePoly out(p);
    for (u64 mask = 0; mask < (u64{1} << i); ++mask) {
        u64 sum = 0;
        unsigned count = 0;
        for (std::size_t j = 0; j < i; ++j) {
            if (mask >> j & 1U) {
                sum += powers[j];
                ++count;
            }
        }
        if (count % 2 == 0) out.add_term(sum / 2, even_coeff);
        else out.add_term((sum - 1) / 2, odd_coeff);
    }
    return ClosedForm(std::move(out));
}

/// The closed form without its constant, scaled by 2^i, read as a
/// polynomial in x. It permutes F_{p^e} exactly when D_{n,k}(1, x) does.
inline SparsePoly reduced_pp_poly(const PrimePowerSum& pps, u64 k)
{
    const u64 p = pps.p();
    return closed_form_sum(pps, k).in_u().without_constant().scaled(pow_mod(2, pps.size(), p));
}

/// Two-variable Dickson polynomial of the first kind at a = 1:
/// D_0 = 2, D_1 = x, D_n = x D_{n-1} - D_{n-2}.
inline Poly dickson_first_poly(u64 p, u64 n)
{
    Poly prev = Poly::constant(p, 2);
    if (n == 0) return prev;
    Poly cur = Poly::x(p);
    const Poly x = Poly::x(p);
    for (u64 i = 2; i <= n; ++i) {
        Poly next = x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

inline FieldElement dickson_first_eval(const FieldCtx& ctx, u64 n, const FieldElement& x)
{
    FieldElement prev = ctx.from_residue(2);
    if (n == 0) return prev;
    FieldElement cur = x;
    for (u64 i = 2; i <= n; ++i) {
        FieldElement next = ctx.sub(ctx.mul(x, cur), prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// D_{n,k}(1,x) = k x D_{n-2,1}(1,x) + D_{n,0}(1,x) at every x (n >= 2).
inline bool identity_holds_via_second_kind(const FieldCtx& ctx, u64 n, u64 k)
{
    if (n < 2) fail(Errc::IndexTooSmall, "identity through D_{n-2,1} needs n >= 2");
    const u64 p = ctx.p();
    for (u64 idx = 0; idx < ctx.q(); ++idx) {
        const FieldElement x = ctx.element_at(idx);
        const FieldElement lhs = rdk_eval_rec(ctx, {n, k, p}, x);
        const FieldElement inner = rdk_eval_rec(ctx, {n - 2, 1, p}, x);
        const FieldElement rhs = ctx.add(ctx.scale(ctx.mul(x, inner), k), rdk_eval_rec(ctx, {n, 0, p}, x));
        if (lhs != rhs) return false;
    }
    return true;
}

/// D_{n,k}(1,x) = k x D_{n-1,2}(1,x) + D_{n,0}(1,x) at every x (n >= 1).
inline bool identity_holds_via_third_kind(const FieldCtx& ctx, u64 n, u64 k)
{
    if (n < 1) fail(Errc::IndexTooSmall, "identity through D_{n-1,2} needs n >= 1");
    const u64 p = ctx.p();
    for (u64 idx = 0; idx < ctx.q(); ++idx) {
        const FieldElement x = ctx.element_at(idx);
        const FieldElement lhs = rdk_eval_rec(ctx, {n, k, p}, x);
        const FieldElement inner = rdk_eval_rec(ctx, {n - 1, 2, p}, x);
        const FieldElement rhs = ctx.add(ctx.scale(ctx.mul(x, inner), k), rdk_eval_rec(ctx, {n, 0, p}, x));
        if (lhs != rhs) return false;
    }
    return true;
}

/// Both identities at once; requires n >= 2.
inline std::pair<bool, bool> check_kind_reduction_identities(const FieldCtx& ctx, u64 n, u64 k)
{
    if (n < 2) fail(Errc::IndexTooSmall, "combined identity check needs n >= 2");
    return {identity_holds_via_second_kind(ctx, n, k), identity_holds_via_third_kind(ctx, n, k)};
}

struct SubstitutionIdentityResult {
    u64 n = 0;
    bool identity_holds = false;
    bool x_divides_previous = false;

    bool passed() const noexcept { return identity_holds && x_divides_previous; }
};

/// Over Z_3 with n = (3^l + 1)/2, l odd:
///   x D_{n,k}(1, 1 - x^2) = (k/2 - 1) x D_n(x,1) + (k/2) D_{n-1}(x,1),
/// the x-multiplied form of the identity, plus x | D_{n-1}(x,1).
inline SubstitutionIdentityResult f3_substitution_details(unsigned l, u64 k, u64 p = 3)
{
    if (p != 3) fail(Errc::WrongCharacteristic, "identity is stated over F_3");
    if (l == 0 || l % 2 == 0) fail(Errc::BadParity, "l must be a positive odd integer");
    if (k > 2) fail(Errc::KindOutOfRange, "k must lie in {0, 1, 2}");
    const auto three_l = checked_pow(3, l, kMaxStructuredIndex);
    if (!three_l) fail(Errc::StructureOverflow, "3^l too large");
    const u64 n = (*three_l + 1) / 2;

    const Poly x = Poly::x(p);
    const Poly inner = Poly::from_signed(p, {1, 0, -1});
    const Poly lhs = x * compose(rdk_poly(p, {n, k, p}), inner);

    const u64 half_k = mul_mod(k, inv_mod(2, p), p);
    const Poly dn = dickson_first_poly(p, n);
    const Poly dn1 = dickson_first_poly(p, n - 1);
    const Poly rhs = (x * dn).scaled(sub_mod(half_k, 1, p)) + dn1.scaled(half_k);

    SubstitutionIdentityResult r;
    r.n = n;
    r.identity_holds = lhs == rhs;
    r.x_divides_previous = (dn1 % x).is_zero();
    return r;
}

inline bool check_f3_substitution_identity(unsigned l, u64 k, u64 p = 3) { return f3_substitution_details(l, k, p).passed(); }

} // namespace rdickson
