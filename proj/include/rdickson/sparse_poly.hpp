#pragma once

// Sparse polynomials over Z_p keyed by exponent. Closed forms have a handful
// of terms but exponents such as (p^l + 3)/2, so evaluation reduces exponents
// modulo q - 1 instead of expanding.

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "error.hpp"
#include "ff.hpp"
#include "modarith.hpp"
#include "poly.hpp"

namespace rdickson {

class SparsePoly {
  public:
    using Terms = std::map<u64, u64>;

    explicit SparsePoly(u64 p) : p_(p) {}

    static SparsePoly from_dense(const Poly& f)
    {
        SparsePoly s(f.characteristic());
        const auto& c = f.coeffs();
        for (std::size_t i = 0; i < c.size(); ++i) s.add_term(i, c[i]);
        return s;
    }

    u64 characteristic() const noexcept { return p_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    u64 coeff(u64 exponent) const
    {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? 0 : it->second;
    }

    /// Largest exponent with a nonzero coefficient; 0 for the zero polynomial.
    u64 degree() const noexcept { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    /// Adds c * x^exponent, combining like terms and dropping zeros.
    SparsePoly& add_term(u64 exponent, u64 c)
    {
        c %= p_;
        if (c == 0) return *this;
        auto [it, inserted] = terms_.try_emplace(exponent, c);
        if (!inserted) {
            it->second = add_mod(it->second, c, p_);
            if (it->second == 0) terms_.erase(it);
        }
        return *this;
    }

    SparsePoly& operator+=(const SparsePoly& o)
    {
        check(o);
        for (auto [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    SparsePoly& operator-=(const SparsePoly& o)
    {
        check(o);
        for (auto [e, c] : o.terms_) add_term(e, p_ - c);
        return *this;
    }

    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }

    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b)
    {
        a.check(b);
        SparsePoly r(a.p_);
        for (auto [ea, ca] : a.terms_)
            for (auto [eb, cb] : b.terms_) r.add_term(ea + eb, mul_mod(ca, cb, a.p_));
        return r;
    }

    SparsePoly scaled(u64 s) const
    {
        SparsePoly r(p_);
        for (auto [e, c] : terms_) r.add_term(e, mul_mod(c, s % p_, p_));
        return r;
    }

    SparsePoly without_constant() const
    {
        SparsePoly r(*this);
        r.terms_.erase(0);
        return r;
    }

    bool operator==(const SparsePoly&) const = default;

    /// Value at x in ctx. For x != 0, x^m = x^(m mod (q-1)); 0^0 = 1.
    FieldElement evaluate(const FieldCtx& ctx, const FieldElement& x) const
    {
        if (ctx.p() != p_) fail(Errc::CharacteristicMismatch, "sparse polynomial evaluated in wrong characteristic");
        FieldElement acc = ctx.zero();
        const bool x_zero = x.is_zero();
        const u64 group = ctx.q() - 1;
        for (auto [e, c] : terms_) {
            FieldElement term;
            if (x_zero) {
                if (e != 0) continue;
                term = ctx.one();
            } else {
                term = ctx.pow(x, e % group);
            }
            acc = ctx.add(acc, ctx.scale(term, c));
        }
        return acc;
    }

    Poly to_dense(u64 degree_bound) const
    {
        if (degree() > degree_bound)
            fail(Errc::DegreeBoundExceeded, "degree " + std::to_string(degree()) + " above bound " +
                                                std::to_string(degree_bound));
        std::vector<u64> c(terms_.empty() ? 0 : degree() + 1, 0);
        for (auto [e, v] : terms_) c[e] = v;
        return Poly(p_, std::move(c));
    }

    /// "c*var^e" terms in increasing exponent; "0" when empty.
    std::string to_string(const std::string& var = "x") const
    {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto [e, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += std::to_string(c);
            if (e == 1) out += "*" + var;
            else if (e > 1) out += "*" + var + "^" + std::to_string(e);
        }
        return out;
    }

  private:
    void check(const SparsePoly& o) const
    {
        if (o.p_ != p_) fail(Errc::CharacteristicMismatch, "sparse polynomials over different characteristics");
    }

    u64 p_;
    Terms terms_;
};

} // namespace rdickson
