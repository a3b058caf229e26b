// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "rdickson/dickson.hpp"
#include "rdickson/permcheck.hpp"
#include "rdickson/theorems.hpp"

using namespace rdickson;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

u64 frac(std::int64_t num, std::int64_t den, u64 p)
{
    return mul_mod(reduce_signed(num, p), inv_mod(reduce_signed(den, p), p), p);
}

std::string tag(u64 p, unsigned e, u64 k, u64 n)
{
    return "p=" + std::to_string(p) + " e=" + std::to_string(e) + " k=" + std::to_string(k) + " n=" + std::to_string(n);
}

const std::vector<std::pair<u64, unsigned>> kAgreementFields{{3, 1}, {3, 2}, {5, 1}, {5, 2}, {7, 1}, {7, 2}, {11, 1}, {11, 2}};
const std::vector<std::pair<u64, unsigned>> kClosedFormFields{{3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}, {7, 1}, {7, 2}};

Outcome five_way_agreement()
{
    Outcome o;
    for (auto [p, e] : kAgreementFields) {
        const FieldCtx f = make_field(p, e);
        const FunctionalEvaluator functional(f);
        const auto xs = enumerate(f);
        for (u64 k = 0; k < p; ++k)
            for (u64 n = 0; n <= 100; ++n) {
                const DicksonParams params{n, k, p};
                const Poly dense = rdk_poly(p, params);
                const SparsePoly direct = rdk_poly_direct(p, params);
                for (const auto& x : xs) {
                    const FieldElement ref = rdk_eval_rec(f, params, x);
                    o.require(rdk_eval_matrix(f, params, x) == ref, "matrix " + tag(p, e, k, n));
                    o.require(f.evaluate(dense, x) == ref, "poly " + tag(p, e, k, n));
                    o.require(direct.evaluate(f, x) == ref, "direct " + tag(p, e, k, n));
                    o.require(functional(params, x) == ref, "functional " + tag(p, e, k, n));
                }
            }
    }
    return o;
}

Outcome value_at_quarter()
{
    Outcome o;
    for (auto [p, e] : kAgreementFields) {
        const FieldCtx f = make_field(p, e);
        const FieldElement quarter = f.inv(f.from_residue(4));
        for (u64 k = 0; k < p; ++k)
            for (u64 n = 0; n <= 200; ++n)
                o.require(f.from_residue(rdk_value_quarter(p, {n, k, p})) == rdk_eval_rec(f, {n, k, p}, quarter),
                          tag(p, e, k, n));
    }
    return o;
}

/// Displayed closed forms in u = 1 - 4x for n = p^l + j, j = 0..3.
SparsePoly displayed_closed_form(u64 p, unsigned l, u64 k, unsigned j)
{
    const u64 a = *checked_pow(p, l);
    const auto kk = static_cast<std::int64_t>(k);
    SparsePoly s(p);
    auto add = [&](u64 exp, std::int64_t num, std::int64_t den) { s.add_term(exp, frac(num, den, p)); };
    switch (j) {
    case 0:
        add((a - 1) / 2, kk, 2);
        add(0, 2 - kk, 2);
        break;
    case 1:
        add((a + 1) / 2, 2 - kk, 4);
        add((a - 1) / 2, kk, 4);
        add(0, 1, 2);
        break;
    case 2:
        add((a + 1) / 2, 4 - kk, 8);
        add((a - 1) / 2, kk, 8);
        add(1, 2 - kk, 8);
        add(0, 2 + kk, 8);
        break;
    default:
        add((a + 3) / 2, 2 - kk, 16);
        add((a + 1) / 2, 3, 8);
        add((a - 1) / 2, kk, 16);
        add(1, 3 - kk, 8);
        add(0, kk + 1, 8);
        break;
    }
    return s;
}

Outcome closed_form_fidelity()
{
    Outcome o;
    for (u64 p : {3u, 5u, 7u, 11u})
        for (unsigned l = 1; l <= 3; ++l)
            for (u64 k = 0; k < p; ++k)
                for (unsigned j = 0; j <= 3; ++j) {
                    std::vector<unsigned> ls{l};
                    ls.resize(j + 1, 0);
                    o.require(closed_form_sum(PrimePowerSum(p, ls), k).in_u() == displayed_closed_form(p, l, k, j),
                              "coefficients p=" + std::to_string(p) + " l=" + std::to_string(l) + " k=" +
                                  std::to_string(k) + " j=" + std::to_string(j));
                }
    for (auto [p, e] : kClosedFormFields) {
        const FieldCtx f = make_field(p, e);
        const auto xs = enumerate(f);
        for (unsigned l = 0; l <= 3; ++l)
            for (u64 k = 0; k < p; ++k)
                for (unsigned j = 0; j <= 3; ++j) {
                    std::vector<unsigned> ls{l};
                    ls.resize(j + 1, 0);
                    const PrimePowerSum s(p, ls);
                    const ClosedForm c = closed_form_sum(s, k);
                    for (const auto& x : xs)
                        o.require(c.evaluate_at_x(f, x) == rdk_eval_rec(f, {s.n(), k, p}, x), "value " + tag(p, e, k, s.n()));
                }
    }
    return o;
}

void multisets(unsigned size, unsigned max_value, std::vector<unsigned>& cur, std::vector<std::vector<unsigned>>& out)
{
    if (cur.size() == size) {
        out.push_back(cur);
        return;
    }
    for (unsigned v = 0; v <= (cur.empty() ? max_value : cur.back()); ++v) {
        cur.push_back(v);
        multisets(size, max_value, cur, out);
        cur.pop_back();
    }
}

Outcome reduced_equivalence()
{
    Outcome o;
    std::vector<std::vector<unsigned>> all;
    std::vector<unsigned> cur;
    for (unsigned i = 1; i <= 4; ++i) multisets(i, 3, cur, all);
    for (auto [p, e] : kClosedFormFields) {
        const FieldCtx f = make_field(p, e);
        for (u64 k = 0; k < p; ++k)
            for (const auto& ls : all) {
                const PrimePowerSum s(p, ls);
                const SparsePoly g = reduced_pp_poly(s, k);
                const auto r = pp_equivalent(
                    f, [&](const FieldElement& x) { return rdk_eval_matrix(f, {s.n(), k, p}, x); },
                    [&](const FieldElement& x) { return g.evaluate(f, x); });
                o.require(r.equivalent, "equivalence " + tag(p, e, k, s.n()));
            }
    }
    for (u64 p : {3u, 5u, 7u, 11u})
        for (unsigned l = 1; l <= 3; ++l)
            for (u64 k = 0; k < p; ++k) {
                const u64 a = *checked_pow(p, l);
                const auto kk = static_cast<std::int64_t>(k);
                SparsePoly expect(p);
                expect.add_term((a + 3) / 2, reduce_signed(2 - kk, p));
                expect.add_term((a + 1) / 2, 6 % p);
                expect.add_term((a - 1) / 2, k);
                expect.add_term(1, reduce_signed(2 * (3 - kk), p));
                o.require(reduced_pp_poly(PrimePowerSum(p, {l, 0, 0, 0}), k) == expect,
                          "reduced coefficients p=" + std::to_string(p) + " l=" + std::to_string(l));
            }
    return o;
}

Outcome theorem_suite()
{
    Outcome o;
    const auto results = verify_all(GridConfig{});
    for (const auto& r : results) {
        o.require(r.passed, "claim " + r.id + " failed on " + std::to_string(r.failures.size()) + " tuples");
        if (r.id == "T3.1") o.require(r.tuples_checked >= 20, "T3.1 has fewer than 20 tuples");
        if (r.id == "T3.3") o.require(r.expected_pp > 0 && r.expected_not_pp > 0, "T3.3 lacks one side");
        if (r.id == "T6.3" || r.id == "C6.1" || r.id == "R4.HMS") o.require(r.tuples_checked > 0, r.id + " is empty");
    }
    std::size_t claims = results.size(), tuples = 0;
    for (const auto& r : results) tuples += r.tuples_checked;
    if (o.ok) o.detail = std::to_string(claims) + " claims, " + std::to_string(tuples) + " tuples";
    return o;
}

Outcome identity_suite()
{
    Outcome o;
    for (auto [p, e] : kClosedFormFields) {
        const FieldCtx f = make_field(p, e);
        for (u64 k = 0; k < p; ++k) {
            o.require(identity_holds_via_third_kind(f, 1, k), "n=1 identity " + tag(p, e, k, 1));
            for (u64 n = 2; n <= 50; ++n)
                o.require(check_kind_reduction_identities(f, n, k) == std::make_pair(true, true), tag(p, e, k, n));
        }
    }
    for (unsigned l : {1u, 3u})
        for (u64 k = 0; k < 3; ++k) {
            const auto r = f3_substitution_details(l, k);
            o.require(r.identity_holds, "substitution identity l=" + std::to_string(l) + " k=" + std::to_string(k));
            o.require(r.x_divides_previous, "divisibility l=" + std::to_string(l));
            o.require(r.n == (l == 1 ? 2u : 14u), "index for l=" + std::to_string(l));
        }
    return o;
}

Outcome monomial_oracle()
{
    Outcome o;
    for (auto [p, e] : {std::pair{3u, 1u}, {5u, 1u}, {7u, 1u}, {3u, 2u}, {5u, 2u}, {3u, 3u}, {7u, 2u}}) {
        const FieldCtx f = make_field(p, e);
        for (u64 n = 1; n <= 100; ++n)
            o.require(is_pp_monomial(n, f.q()) ==
                          is_pp_exhaustive(f, [&](const FieldElement& x) { return f.pow(x, n); }).is_pp,
                      "q=" + std::to_string(f.q()) + " n=" + std::to_string(n));
    }
    return o;
}

struct Captured {
    int status;
    std::string out;
};

Captured capture(const std::string& args)
{
    const std::string cmd = std::string(RDICKSON_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    char buf[1 << 16];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

Outcome determinism()
{
    Outcome o;
    const std::string scan = "scan --p 3,5,7 --e 1..2 --n 1..80";
    const Captured s1 = capture(scan + " --threads 1");
    const Captured s2 = capture(scan + " --threads 1");
    const Captured s4 = capture(scan + " --threads 4");
    o.require(s1.status == 0 && !s1.out.empty(), "scan did not run");
    o.require(s1.out == s2.out, "scan differs between identical runs");
    o.require(s1.out == s4.out, "scan differs between 1 and 4 threads");

    const std::string verify = "verify all --format csv";
    const Captured v1 = capture(verify + " --threads 1");
    const Captured v4 = capture(verify + " --threads 4");
    o.require(v1.status == 0 && !v1.out.empty(), "verify did not run cleanly");
    o.require(v1.out == v4.out, "verify differs between 1 and 4 threads");
    const Captured l1 = capture("verify all --format lines --threads 2");
    const Captured l2 = capture("verify all --format lines --threads 3");
    o.require(l1.out == l2.out && !l1.out.empty(), "line output differs between thread counts");
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"five-way evaluator agreement (p<=11, e<=2, n<=100)", five_way_agreement},
        {"value at x = 1/4 equals (k(n-1)+2)/2^n (n<=200)", value_at_quarter},
        {"closed forms for p^l + j, j = 0..3: coefficients and values", closed_form_fidelity},
        {"reduced polynomial PP-equivalence (i<=4, l<=3)", reduced_equivalence},
        {"theorem suite on the default grid", theorem_suite},
        {"kind-reduction identities and the F_3 substitution identity", identity_suite},
        {"monomial criterion against exhaustive test (n<=100)", monomial_oracle},
        {"scan and verify output independent of run and thread count", determinism},
    };
    int failed = 0;
    int index = 0;
    for (const auto& [name, check] : criteria) {
        ++index;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << (o.ok ? "PASS" : "FAIL") << " [" << index << "] " << name << " (" << secs << " s)";
        if (!o.detail.empty()) line << ": " << o.detail;
        std::cout << line.str() << std::endl;
        failed += o.ok ? 0 : 1;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
