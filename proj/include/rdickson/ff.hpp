#pragma once

// Finite fields F_{p^e} for odd p, in polynomial basis over Z_p.
//
// Elements are coefficient vectors (c_0, ..., c_{e-1}). Enumeration index
// and element are related by index = sum c_i p^i, so 0, 1, ..., p-1 come
// first and every "first root / first witness" rule in the library refers
// to increasing index.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "modarith.hpp"
#include "poly.hpp"

namespace rdickson {

class FieldElement {
  public:
    FieldElement() = default;
    explicit FieldElement(std::vector<u64> coeffs) : c_(std::move(coeffs)) {}

    const std::vector<u64>& coeffs() const noexcept { return c_; }
    u64 operator[](std::size_t i) const noexcept { return c_[i]; }
    std::size_t size() const noexcept { return c_.size(); }

    bool is_zero() const noexcept
    {
        for (auto v : c_)
            if (v != 0) return false;
        return true;
    }

    bool operator==(const FieldElement&) const = default;

  private:
    friend class FieldCtx;
    std::vector<u64> c_;
};

class FieldCtx {
  public:
    /// Prefer make_field(); this constructor trusts its arguments apart
    /// from basic shape checks.
    FieldCtx(u64 p, unsigned e, Poly modulus, u64 q)
        : p_(p), e_(e), modulus_(std::move(modulus)), q_(q)
    {
        if (modulus_.degree() != static_cast<std::int64_t>(e_) || modulus_.lead() != 1)
            fail(Errc::InvalidArgument, "modulus must be monic of degree e");
    }

    u64 p() const noexcept { return p_; }
    unsigned e() const noexcept { return e_; }
    u64 q() const noexcept { return q_; }
    const Poly& modulus() const noexcept { return modulus_; }

    bool operator==(const FieldCtx& o) const { return p_ == o.p_ && e_ == o.e_ && modulus_ == o.modulus_; }

    FieldElement zero() const { return FieldElement(std::vector<u64>(e_, 0)); }
    FieldElement one() const { return from_residue(1); }

    FieldElement from_residue(u64 c) const
    {
        std::vector<u64> v(e_, 0);
        v[0] = c % p_;
        return FieldElement(std::move(v));
    }

    FieldElement from_signed(std::int64_t c) const { return from_residue(reduce_signed(c, p_)); }

    /// Residue class of x modulo the defining polynomial.
    FieldElement generator() const
    {
        if (e_ == 1) return from_residue((p_ - modulus_.coeff(0)) % p_);
        std::vector<u64> v(e_, 0);
        v[1] = 1;
        return FieldElement(std::move(v));
    }

    FieldElement element_at(u64 index) const
    {
        if (index >= q_) fail(Errc::InvalidArgument, "element index out of range");
        std::vector<u64> v(e_, 0);
        for (unsigned i = 0; i < e_; ++i) {
            v[i] = index % p_;
            index /= p_;
        }
        return FieldElement(std::move(v));
    }

    u64 index_of(const FieldElement& a) const noexcept
    {
        u64 idx = 0;
        for (std::size_t i = a.c_.size(); i-- > 0;) idx = idx * p_ + a.c_[i];
        return idx;
    }

    /// Accepts exactly e coefficients, each already in [0, p).
    FieldElement element(std::vector<u64> coeffs) const
    {
        if (coeffs.size() != e_) fail(Errc::InvalidArgument, "element needs exactly e coefficients");
        for (auto c : coeffs)
            if (c >= p_) fail(Errc::InvalidArgument, "coefficient not reduced mod p");
        return FieldElement(std::move(coeffs));
    }

    bool contains(const FieldElement& a) const noexcept
    {
        if (a.c_.size() != e_) return false;
        for (auto c : a.c_)
            if (c >= p_) return false;
        return true;
    }

    FieldElement add(const FieldElement& a, const FieldElement& b) const
    {
        FieldElement r(a);
        for (unsigned i = 0; i < e_; ++i) r.c_[i] = add_mod(a.c_[i], b.c_[i], p_);
        return r;
    }

    FieldElement sub(const FieldElement& a, const FieldElement& b) const
    {
        FieldElement r(a);
        for (unsigned i = 0; i < e_; ++i) r.c_[i] = sub_mod(a.c_[i], b.c_[i], p_);
        return r;
    }

    FieldElement neg(const FieldElement& a) const { return sub(zero(), a); }

    FieldElement scale(const FieldElement& a, u64 s) const
    {
        FieldElement r(a);
        s %= p_;
        for (auto& v : r.c_) v = mul_mod(v, s, p_);
        return r;
    }

    FieldElement mul(const FieldElement& a, const FieldElement& b) const
    {
        if (e_ == 1) return FieldElement({mul_mod(a.c_[0], b.c_[0], p_)});
        std::vector<u64> prod(2 * e_ - 1, 0);
        for (unsigned i = 0; i < e_; ++i) {
            if (a.c_[i] == 0) continue;
            for (unsigned j = 0; j < e_; ++j)
                prod[i + j] = add_mod(prod[i + j], mul_mod(a.c_[i], b.c_[j], p_), p_);
        }
        const auto& m = modulus_.coeffs();
        for (std::size_t i = prod.size(); i-- > e_;) {
            const u64 c = prod[i];
            if (c == 0) continue;
            prod[i] = 0;
            for (unsigned j = 0; j < e_; ++j)
                prod[i - e_ + j] = sub_mod(prod[i - e_ + j], mul_mod(c, m[j], p_), p_);
        }
        prod.resize(e_);
        return FieldElement(std::move(prod));
    }

    FieldElement square(const FieldElement& a) const { return mul(a, a); }

    FieldElement pow(FieldElement base, u64 exp) const
    {
        FieldElement result = one();
        while (exp != 0) {
            if (exp & 1U) result = mul(result, base);
            exp >>= 1U;
            if (exp != 0) base = mul(base, base);
        }
        return result;
    }

    FieldElement inv(const FieldElement& a) const
    {
        if (a.is_zero()) fail(Errc::DivisionByZero, "inverse of zero in F_" + std::to_string(q_));
        return pow(a, q_ - 2);
    }

    FieldElement div(const FieldElement& a, const FieldElement& b) const { return mul(a, inv(b)); }

    /// Horner evaluation of a Z_p polynomial; coefficients enter through
    /// the canonical copy of Z_p.
    FieldElement evaluate(const Poly& f, const FieldElement& x) const
    {
        if (f.characteristic() != p_)
            fail(Errc::CharacteristicMismatch, "polynomial over Z_" + std::to_string(f.characteristic()) +
                                                   " evaluated in characteristic " + std::to_string(p_));
        FieldElement acc = zero();
        const auto& c = f.coeffs();
        for (std::size_t i = c.size(); i-- > 0;) {
            acc = mul(acc, x);
            acc.c_[0] = add_mod(acc.c_[0], c[i], p_);
        }
        return acc;
    }

    FieldElement random(std::mt19937_64& rng) const
    {
        std::uniform_int_distribution<u64> dist(0, p_ - 1);
        std::vector<u64> v(e_);
        for (auto& c : v) c = dist(rng);
        return FieldElement(std::move(v));
    }

    /// "c0 + c1*g + ..." in terms of the generator g; plain residue when e = 1.
    std::string format(const FieldElement& a) const
    {
        if (e_ == 1) return std::to_string(a.c_[0]);
        std::string out;
        for (unsigned i = 0; i < e_; ++i) {
            if (a.c_[i] == 0) continue;
            if (!out.empty()) out += " + ";
            out += std::to_string(a.c_[i]);
            if (i == 1) out += "*g";
            else if (i > 1) out += "*g^" + std::to_string(i);
        }
        return out.empty() ? "0" : out;
    }

  private:
    u64 p_;
    unsigned e_;
    Poly modulus_;
    u64 q_;
};

inline constexpr u64 kMaxFieldOrder = u64{1} << 32;

/// F_{p^e} with the smallest monic irreducible modulus, ordering candidates
/// by the index of their lower coefficients (same order as elements).
inline FieldCtx make_field(u64 p, unsigned e)
{
    if (p == 2) fail(Errc::EvenCharacteristic, "characteristic 2 is not supported");
    if (!is_prime(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (e == 0) fail(Errc::InvalidArgument, "extension degree must be >= 1");
    const auto q = checked_pow(p, e, kMaxFieldOrder);
    if (!q) fail(Errc::OrderOverflow, std::to_string(p) + "^" + std::to_string(e) + " exceeds 2^32");

    std::vector<u64> c(e + 1, 0);
    c[e] = 1;
    for (u64 t = 0; t < *q; ++t) {
        u64 rest = t;
        for (unsigned i = 0; i < e; ++i) {
            c[i] = rest % p;
            rest /= p;
        }
        Poly candidate(p, c);
        if (is_irreducible(candidate)) return FieldCtx(p, e, std::move(candidate), *q);
    }
    fail(Errc::InternalError, "no irreducible polynomial found");
}

/// All q elements in index order.
inline std::vector<FieldElement> enumerate(const FieldCtx& ctx)
{
    std::vector<FieldElement> out;
    out.reserve(ctx.q());
    for (u64 i = 0; i < ctx.q(); ++i) out.push_back(ctx.element_at(i));
    return out;
}

/// First s in enumeration order with s^2 = a, by exhaustive scan.
inline std::optional<FieldElement> sqrt_in_field(const FieldCtx& ctx, const FieldElement& a)
{
    for (u64 i = 0; i < ctx.q(); ++i) {
        FieldElement s = ctx.element_at(i);
        if (ctx.square(s) == a) return s;
    }
    return std::nullopt;
}

/// Precomputed form of sqrt_in_field for repeated queries: one pass over
/// the field records the first root of every square.
class SquareRootTable {
  public:
    explicit SquareRootTable(const FieldCtx& ctx, u64 max_order = u64{1} << 24) : ctx_(ctx)
    {
        if (ctx.q() > max_order)
            fail(Errc::FieldTooLarge, "square-root table for q = " + std::to_string(ctx.q()));
        root_.assign(ctx.q(), kNone);
        for (u64 i = 0; i < ctx.q(); ++i) {
            const u64 sq = ctx.index_of(ctx.square(ctx.element_at(i)));
            if (root_[sq] == kNone) root_[sq] = static_cast<u32>(i);
        }
    }

    std::optional<FieldElement> operator()(const FieldElement& a) const
    {
        const u32 r = root_[ctx_.index_of(a)];
        if (r == kNone) return std::nullopt;
        return ctx_.element_at(r);
    }

  private:
    static constexpr u32 kNone = ~u32{0};
    FieldCtx ctx_;
    std::vector<u32> root_;
};

/// A field homomorphism F_{p^d} -> F_{p^e} fixing Z_p, determined by where
/// the source generator goes.
class Embedding {
  public:
    Embedding(FieldCtx source, FieldCtx target, FieldElement image_of_generator)
        : source_(std::move(source)), target_(std::move(target)), image_(std::move(image_of_generator))
    {
        FieldElement power = target_.one();
        for (unsigned i = 0; i < source_.e(); ++i) {
            basis_.push_back(power);
            power = target_.mul(power, image_);
        }
    }

    const FieldCtx& source() const noexcept { return source_; }
    const FieldCtx& target() const noexcept { return target_; }
    const FieldElement& image_of_generator() const noexcept { return image_; }

    FieldElement operator()(const FieldElement& a) const
    {
        FieldElement acc = target_.zero();
        for (unsigned i = 0; i < source_.e(); ++i)
            acc = target_.add(acc, target_.scale(basis_[i], a[i]));
        return acc;
    }

    /// Inverse image, or nullopt when b is outside the embedded subfield.
    /// Solves sum c_i basis_i = b by Gaussian elimination over Z_p.
    std::optional<FieldElement> preimage(const FieldElement& b) const
    {
        const u64 p = target_.p();
        const unsigned rows = target_.e();
        const unsigned cols = source_.e();
        // augmented matrix rows x (cols + 1)
        std::vector<std::vector<u64>> m(rows, std::vector<u64>(cols + 1, 0));
        for (unsigned r = 0; r < rows; ++r) {
            for (unsigned c = 0; c < cols; ++c) m[r][c] = basis_[c][r];
            m[r][cols] = b[r];
        }
        std::vector<int> pivot_row(cols, -1);
        unsigned row = 0;
        for (unsigned c = 0; c < cols && row < rows; ++c) {
            unsigned sel = row;
            while (sel < rows && m[sel][c] == 0) ++sel;
            if (sel == rows) continue;
            std::swap(m[sel], m[row]);
            const u64 inv = inv_mod(m[row][c], p);
            for (auto& v : m[row]) v = mul_mod(v, inv, p);
            for (unsigned r = 0; r < rows; ++r) {
                if (r == row || m[r][c] == 0) continue;
                const u64 f = m[r][c];
                for (unsigned k = 0; k <= cols; ++k) m[r][k] = sub_mod(m[r][k], mul_mod(f, m[row][k], p), p);
            }
            pivot_row[c] = static_cast<int>(row);
            ++row;
        }
        for (unsigned r = row; r < rows; ++r)
            if (m[r][cols] != 0) return std::nullopt;
        std::vector<u64> coeffs(cols, 0);
        for (unsigned c = 0; c < cols; ++c)
            if (pivot_row[c] >= 0) coeffs[c] = m[static_cast<unsigned>(pivot_row[c])][cols];
        return source_.element(std::move(coeffs));
    }

  private:
    FieldCtx source_;
    FieldCtx target_;
    FieldElement image_;
    std::vector<FieldElement> basis_;
};

/// Maps sub's generator to the first root (enumeration order) of sub's
/// modulus inside sup.
inline Embedding embed_subfield(const FieldCtx& sub, const FieldCtx& sup)
{
    if (sub.p() != sup.p()) fail(Errc::CharacteristicMismatch, "subfield embedding across characteristics");
    if (sup.e() % sub.e() != 0) fail(Errc::InvalidArgument, "degree of subfield must divide degree of field");
    for (u64 i = 0; i < sup.q(); ++i) {
        FieldElement r = sup.element_at(i);
        if (sup.evaluate(sub.modulus(), r).is_zero()) return Embedding(sub, sup, std::move(r));
    }
    fail(Errc::NoRoot, "modulus of subfield has no root in the larger field");
}

} // namespace rdickson
