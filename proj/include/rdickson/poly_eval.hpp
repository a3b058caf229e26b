#pragma once

#include "ff.hpp"
#include "poly.hpp"

namespace rdickson {

inline FieldElement eval_poly(const Poly& f, const FieldCtx& ctx, const FieldElement& x)
{
    return ctx.evaluate(f, x);
}

/// True iff f and g agree at every element of ctx. This is weaker than
/// coefficient equality (x^q and x agree as functions on F_q); it
/// certifies a polynomial identity only when q exceeds both degrees.
inline bool polys_equal_as_functions(const Poly& f, const Poly& g, const FieldCtx& ctx)
{
    if (f.characteristic() != ctx.p() || g.characteristic() != ctx.p())
        fail(Errc::CharacteristicMismatch, "polynomial and field characteristics differ");
    for (u64 i = 0; i < ctx.q(); ++i) {
        const FieldElement x = ctx.element_at(i);
        if (ctx.evaluate(f, x) != ctx.evaluate(g, x)) return false;
    }
    return true;
}

} // namespace rdickson
