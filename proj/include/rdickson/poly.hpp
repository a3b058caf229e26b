#pragma once

// Dense univariate polynomials over a prime field Z_p.

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "modarith.hpp"

namespace rdickson {

class Poly {
  public:
    /// Degree reported for the zero polynomial.
    static constexpr std::int64_t kMinusInfinity = std::numeric_limits<std::int64_t>::min();

    explicit Poly(u64 p) : p_(p) {}

    /// Coefficients are indexed by degree; they are reduced mod p and
    /// trailing zeros stripped.
    Poly(u64 p, std::vector<u64> coeffs) : p_(p), c_(std::move(coeffs))
    {
        for (auto& v : c_) v %= p_;
        trim();
    }

    static Poly from_signed(u64 p, const std::vector<std::int64_t>& coeffs)
    {
        std::vector<u64> c;
        c.reserve(coeffs.size());
        for (auto v : coeffs) c.push_back(reduce_signed(v, p));
        return Poly(p, std::move(c));
    }

    static Poly constant(u64 p, u64 c) { return Poly(p, {c}); }

    static Poly monomial(u64 p, u64 c, std::size_t degree)
    {
        std::vector<u64> v(degree + 1, 0);
        v[degree] = c;
        return Poly(p, std::move(v));
    }

    static Poly x(u64 p) { return monomial(p, 1, 1); }

    u64 characteristic() const noexcept { return p_; }
    const std::vector<u64>& coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }

    std::int64_t degree() const noexcept
    {
        return c_.empty() ? kMinusInfinity : static_cast<std::int64_t>(c_.size()) - 1;
    }

    u64 coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    u64 lead() const noexcept { return c_.empty() ? 0 : c_.back(); }

    bool operator==(const Poly&) const = default;

    Poly operator-() const
    {
        Poly r(*this);
        for (auto& v : r.c_) v = v == 0 ? 0 : p_ - v;
        return r;
    }

    Poly& operator+=(const Poly& o)
    {
        check(o);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = add_mod(c_[i], o.c_[i], p_);
        trim();
        return *this;
    }

    Poly& operator-=(const Poly& o)
    {
        check(o);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = sub_mod(c_[i], o.c_[i], p_);
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b)
    {
        a.check(b);
        if (a.is_zero() || b.is_zero()) return Poly(a.p_);
        std::vector<u64> r(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = add_mod(r[i + j], mul_mod(a.c_[i], b.c_[j], a.p_), a.p_);
        }
        return Poly(a.p_, std::move(r));
    }

    Poly scaled(u64 s) const
    {
        Poly r(*this);
        s %= p_;
        for (auto& v : r.c_) v = mul_mod(v, s, p_);
        r.trim();
        return r;
    }

    /// Quotient and remainder; throws DivisionByZero for a zero divisor.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b)
    {
        a.check(b);
        if (b.is_zero()) fail(Errc::DivisionByZero, "polynomial division by zero");
        const u64 p = a.p_;
        if (a.c_.size() < b.c_.size()) return {Poly(p), a};
        std::vector<u64> rem = a.c_;
        std::vector<u64> quo(a.c_.size() - b.c_.size() + 1, 0);
        const u64 inv_lead = inv_mod(b.lead(), p);
        const std::size_t db = b.c_.size() - 1;
        for (std::size_t i = rem.size(); i-- > db;) {
            const u64 c = mul_mod(rem[i], inv_lead, p);
            if (c == 0) continue;
            quo[i - db] = c;
            for (std::size_t j = 0; j <= db; ++j)
                rem[i - db + j] = sub_mod(rem[i - db + j], mul_mod(c, b.c_[j], p), p);
        }
        return {Poly(p, std::move(quo)), Poly(p, std::move(rem))};
    }

    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

    Poly monic() const
    {
        if (is_zero()) return *this;
        return scaled(inv_mod(lead(), p_));
    }

    /// Monic gcd; gcd(0, 0) = 0.
    friend Poly gcd(Poly a, Poly b)
    {
        a.check(b);
        while (!b.is_zero()) {
            Poly r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    /// outer(inner(x)) by Horner in the polynomial ring.
    friend Poly compose(const Poly& outer, const Poly& inner)
    {
        outer.check(inner);
        Poly acc(outer.p_);
        for (std::size_t i = outer.c_.size(); i-- > 0;)
            acc = acc * inner + Poly::constant(outer.p_, outer.c_[i]);
        return acc;
    }

    /// this^exp mod modulus, by square-and-multiply.
    Poly pow_mod(u64 exp, const Poly& modulus) const
    {
        Poly result = Poly::constant(p_, 1) % modulus;
        Poly base = *this % modulus;
        while (exp != 0) {
            if (exp & 1U) result = (result * base) % modulus;
            base = (base * base) % modulus;
            exp >>= 1U;
        }
        return result;
    }

    /// Value at a residue of Z_p.
    u64 operator()(u64 x) const noexcept
    {
        u64 acc = 0;
        x %= p_;
        for (std::size_t i = c_.size(); i-- > 0;) acc = add_mod(mul_mod(acc, x, p_), c_[i], p_);
        return acc;
    }

    /// "c0 + c1*x + c2*x^2 + ..." with zero terms omitted; "0" for zero.
    std::string to_string() const
    {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            if (!out.empty()) out += " + ";
            out += std::to_string(c_[i]);
            if (i == 1) out += "*x";
            else if (i > 1) out += "*x^" + std::to_string(i);
        }
        return out;
    }

  private:
    void trim() noexcept
    {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    void check(const Poly& o) const
    {
        if (o.p_ != p_)
            fail(Errc::CharacteristicMismatch,
                 "characteristics " + std::to_string(p_) + " and " + std::to_string(o.p_));
    }

    u64 p_;
    std::vector<u64> c_;
};

/// Rabin's test: deg-e monic f is irreducible iff x^(p^e) = x mod f and
/// gcd(x^(p^(e/r)) - x, f) = 1 for every prime r | e.
inline bool is_irreducible(const Poly& f)
{
    const std::int64_t deg = f.degree();
    if (deg < 1) return false;
    if (deg == 1) return true;
    const u64 p = f.characteristic();
    const auto e = static_cast<u64>(deg);
    const Poly x = Poly::x(p);

    // frob[j] = x^(p^j) mod f
    std::vector<Poly> frob{x % f};
    for (u64 j = 1; j <= e; ++j) frob.push_back(frob.back().pow_mod(p, f));
    if (frob[e] != x % f) return false;
    for (u64 r : prime_divisors(e)) {
        if (gcd(frob[e / r] - x, f).degree() != 0) return false;
    }
    return true;
}

} // namespace rdickson
