// Command-line front end: field info, evaluation, PP tests, scans and claim verification.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rdickson/dickson.hpp"
#include "rdickson/ff.hpp"
#include "rdickson/permcheck.hpp"
#include "rdickson/theorems.hpp"

namespace {

using namespace rdickson;

constexpr int kExitClaimFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string p, e, k, n, ls, x;
    std::string method = "matrix";
    bool all_methods = false;
    bool reduced = false;
    bool closed = false;
    std::string format = "lines";
    std::string out;
    std::string resume;
    unsigned threads = 1;
    std::optional<u64> q_cap;

    u64 cap() const { return q_cap.value_or(kExhaustiveOrderCap); }
    u64 n_cap = 20000;
    unsigned l_max = 4;
    u64 seed = 1;
    u64 n_max = 100;
    std::vector<std::string> claims;
};

u64 parse_u64(const std::string& s)
{
    std::size_t used = 0;
    u64 v = 0;
    try {
        v = std::stoull(s, &used);
    } catch (const std::exception&) {
        fail(Errc::InvalidArgument, "not a non-negative integer: '" + s + "'");
    }
    if (used != s.size() || s.empty() || s[0] == '-') fail(Errc::InvalidArgument, "not a non-negative integer: '" + s + "'");
    return v;
}

/// "3", "1..30" or "3,5,7" (items may themselves be ranges).
std::vector<u64> parse_range(const std::string& text, const char* what)
{
    if (text.empty()) fail(Errc::InvalidArgument, std::string("missing --") + what);
    std::vector<u64> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(parse_u64(item));
            continue;
        }
        const u64 lo = parse_u64(item.substr(0, dots));
        const u64 hi = parse_u64(item.substr(dots + 2));
        if (lo > hi) fail(Errc::InvalidArgument, std::string("empty range for --") + what + ": " + item);
        if (hi - lo > 10'000'000) fail(Errc::InvalidArgument, std::string("range too long for --") + what);
        for (u64 v = lo; v <= hi; ++v) out.push_back(v);
    }
    if (out.empty()) fail(Errc::InvalidArgument, std::string("empty list for --") + what);
    return out;
}

u64 single(const std::string& text, const char* what)
{
    const auto v = parse_range(text, what);
    if (v.size() != 1) fail(Errc::InvalidArgument, std::string("--") + what + " must be a single value here");
    return v[0];
}

unsigned to_degree(u64 e)
{
    if (e == 0 || e > 64) fail(Errc::InvalidArgument, "field degree must lie in [1, 64]");
    return static_cast<unsigned>(e);
}

std::vector<unsigned> parse_ls(const std::string& text)
{
    std::vector<unsigned> ls;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const u64 l = parse_u64(item);
        if (l > 64) fail(Errc::StructureOverflow, "exponent " + item + " is too large");
        ls.push_back(static_cast<unsigned>(l));
    }
    if (ls.empty()) fail(Errc::InvalidArgument, "--ls needs at least one exponent");
    return ls;
}

/// n either given directly or as a sum of prime powers.
struct IndexArg {
    u64 n = 0;
    std::optional<PrimePowerSum> structure;
};

IndexArg parse_index(const Options& o, u64 p)
{
    if (!o.ls.empty() && !o.n.empty()) fail(Errc::InvalidArgument, "give either --n or --ls, not both");
    if (!o.ls.empty()) {
        PrimePowerSum pps(p, parse_ls(o.ls));
        return {pps.n(), pps};
    }
    return {single(o.n, "n"), std::nullopt};
}

/// Base-p digits of n as a multiset of exponents.
PrimePowerSum digits_as_structure(u64 p, u64 n)
{
    std::vector<unsigned> ls;
    unsigned pos = 0;
    for (u64 m = n; m > 0; m /= p, ++pos)
        for (u64 d = 0; d < m % p; ++d) ls.push_back(pos);
    if (ls.empty()) fail(Errc::InvalidArgument, "n = 0 has no prime-power expansion");
    return PrimePowerSum(p, ls);
}

PrimePowerSum structure_of(const IndexArg& idx, u64 p)
{
    return idx.structure ? *idx.structure : digits_as_structure(p, idx.n);
}

FieldCtx field_from(const Options& o)
{
    const u64 p = single(o.p, "p");
    const unsigned e = o.e.empty() ? 1 : to_degree(single(o.e, "e"));
    return make_field(p, e);
}

/// Element given as an index in [0, q) or as a coefficient list "c0,c1,...".
FieldElement parse_element(const FieldCtx& ctx, const std::string& text)
{
    if (text.empty()) fail(Errc::InvalidArgument, "missing --x");
    if (text.find(',') != std::string::npos) {
        std::vector<u64> coeffs;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) coeffs.push_back(parse_u64(item));
        return ctx.element(coeffs);
    }
    const u64 idx = parse_u64(text);
    if (idx >= ctx.q()) fail(Errc::InvalidArgument, "element index " + text + " is outside the field");
    return ctx.element_at(idx);
}

std::string compact(const FieldCtx& ctx, const FieldElement& a)
{
    std::string s = ctx.format(a);
    std::erase(s, ' ');
    return s;
}

void describe_structure(const IndexArg& idx)
{
    if (idx.structure) std::cerr << "n = " << idx.n << " = " << idx.structure->to_string() << '\n';
}

/// Output sink: --out file or stdout.
class Sink {
  public:
    explicit Sink(const std::string& path, bool append = false)
    {
        if (path.empty()) return;
        file_ = std::make_unique<std::ofstream>(path, append ? std::ios::app : std::ios::trunc);
        if (!*file_) fail(Errc::InvalidArgument, "cannot open output file " + path);
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

  private:
    std::unique_ptr<std::ofstream> file_;
};

int cmd_field_info(const Options& o)
{
    const FieldCtx ctx = field_from(o);
    Sink sink(o.out);
    auto& os = sink.stream();
    os << "p=" << ctx.p() << " e=" << ctx.e() << " q=" << ctx.q() << '\n';
    os << "modulus: " << ctx.modulus().to_string() << '\n';
    os << "generator: " << ctx.format(ctx.generator()) << '\n';
    return 0;
}

FieldElement eval_by(const std::string& method, const FieldCtx& ctx, const DicksonParams& params, const IndexArg& idx,
                     const FieldElement& x)
{
    if (method == "rec") return rdk_eval_rec(ctx, params, x);
    if (method == "matrix") return rdk_eval_matrix(ctx, params, x);
    if (method == "functional") return rdk_eval_functional(ctx, params, x);
    if (method == "poly") return ctx.evaluate(rdk_poly(ctx.p(), params), x);
    if (method == "direct") return rdk_poly_direct(ctx.p(), params).evaluate(ctx, x);
    if (method == "closed") return closed_form_sum(structure_of(idx, ctx.p()), params.k).evaluate_at_x(ctx, x);
    fail(Errc::InvalidArgument, "unknown method " + method);
}

int cmd_eval(const Options& o)
{
    const FieldCtx ctx = field_from(o);
    const IndexArg idx = parse_index(o, ctx.p());
    const DicksonParams params{idx.n, single(o.k, "k"), ctx.p()};
    params.validate();
    const FieldElement x = parse_element(ctx, o.x);
    describe_structure(idx);
    Sink sink(o.out);
    auto& os = sink.stream();
    if (!o.all_methods) {
        os << ctx.format(eval_by(o.method, ctx, params, idx, x)) << '\n';
        return 0;
    }
    const FieldElement reference = rdk_eval_rec(ctx, params, x);
    bool agree = true;
    for (const char* m : {"rec", "matrix", "functional", "poly", "direct", "closed"}) {
        const FieldElement v = eval_by(m, ctx, params, idx, x);
        agree = agree && v == reference;
        os << m << ' ' << ctx.format(v) << '\n';
    }
    os << "agree=" << (agree ? "true" : "false") << '\n';
    return agree ? 0 : kExitClaimFailure;
}

int cmd_poly(const Options& o)
{
    const u64 p = single(o.p, "p");
    const IndexArg idx = parse_index(o, p);
    const DicksonParams params{idx.n, single(o.k, "k"), p};
    params.validate();
    describe_structure(idx);
    Sink sink(o.out);
    auto& os = sink.stream();
    if (o.closed) os << closed_form_sum(structure_of(idx, p), params.k).in_u().to_string("u") << '\n';
    else if (o.reduced) os << reduced_pp_poly(structure_of(idx, p), params.k).to_string() << '\n';
    else os << rdk_poly(p, params).to_string() << '\n';
    return 0;
}

int cmd_is_pp(const Options& o)
{
    const FieldCtx ctx = field_from(o);
    if (ctx.q() > o.cap()) fail(Errc::FieldTooLarge, "q exceeds --q-cap");
    const IndexArg idx = parse_index(o, ctx.p());
    const DicksonParams params{idx.n, single(o.k, "k"), ctx.p()};
    params.validate();
    describe_structure(idx);
    const PPReport r =
        is_pp_exhaustive(ctx, [&](const FieldElement& x) { return rdk_eval_matrix(ctx, params, x); }, o.threads);
    Sink sink(o.out);
    auto& os = sink.stream();
    if (r.is_pp) os << "PP\n";
    else
        os << "not PP; witness x1=" << compact(ctx, r.witness->first) << " x2=" << compact(ctx, r.witness->second)
           << '\n';
    return 0;
}

struct ScanRow {
    u64 p;
    unsigned e;
    u64 k, n;
};

int cmd_scan(const Options& o)
{
    const auto primes = parse_range(o.p, "p");
    const auto degrees = o.e.empty() ? std::vector<u64>{1} : parse_range(o.e, "e");
    const auto ns = parse_range(o.n, "n");
    if (o.cap() > kExhaustiveOrderCap) fail(Errc::FieldTooLarge, "--q-cap may not exceed 2^20");

    std::vector<ScanRow> rows;
    std::map<std::pair<u64, unsigned>, FieldCtx> fields;
    for (u64 p : primes) {
        const auto ks = o.k.empty() ? std::vector<u64>{} : parse_range(o.k, "k");
        for (u64 e64 : degrees) {
            const unsigned e = to_degree(e64);
            FieldCtx ctx = make_field(p, e);
            if (ctx.q() > o.cap()) fail(Errc::FieldTooLarge, "q = " + std::to_string(ctx.q()) + " exceeds --q-cap");
            fields.emplace(std::make_pair(p, e), std::move(ctx));
            std::vector<u64> kinds = ks;
            if (kinds.empty())
                for (u64 k = 0; k < p; ++k) kinds.push_back(k);
            for (u64 k : kinds) {
                DicksonParams{1, k, p}.validate();
                for (u64 n : ns) rows.push_back({p, e, k, n});
            }
        }
    }

    std::size_t done = 0;
    if (!o.resume.empty()) {
        if (o.out.empty()) fail(Errc::InvalidArgument, "--resume needs --out");
        std::ifstream marker(o.resume);
        if (marker && !(marker >> done)) fail(Errc::InvalidArgument, "unreadable resume marker " + o.resume);
        if (done > rows.size()) fail(Errc::InvalidArgument, "resume marker is past the end of the scan");
    }
    Sink sink(o.out, done > 0);
    auto& os = sink.stream();
    if (done == 0) os << "p,e,k,n,is_pp\n";

    constexpr std::size_t kBatch = 512;
    std::vector<char> verdicts;
    while (done < rows.size()) {
        const std::size_t count = std::min(kBatch, rows.size() - done);
        verdicts.assign(count, 0);
        parallel_for(count, o.threads, [&](std::size_t i) {
            const ScanRow& r = rows[done + i];
            const FieldCtx& ctx = fields.at({r.p, r.e});
            const DicksonParams params{r.n, r.k, r.p};
            verdicts[i] =
                is_pp_exhaustive(ctx, [&](const FieldElement& x) { return rdk_eval_matrix(ctx, params, x); }).is_pp;
        });
        for (std::size_t i = 0; i < count; ++i) {
            const ScanRow& r = rows[done + i];
            os << r.p << ',' << r.e << ',' << r.k << ',' << r.n << ',' << (verdicts[i] ? "true" : "false") << '\n';
        }
        os.flush();
        done += count;
        if (!o.resume.empty()) std::ofstream(o.resume, std::ios::trunc) << done << '\n';
    }
    return 0;
}

int cmd_verify(const Options& o)
{
    GridConfig grid;
    if (!o.p.empty()) grid.primes = parse_range(o.p, "p");
    if (!o.e.empty()) {
        const auto es = parse_range(o.e, "e");
        grid.e_min = to_degree(*std::min_element(es.begin(), es.end()));
        grid.e_max = to_degree(*std::max_element(es.begin(), es.end()));
    }
    if (!o.k.empty()) grid.ks = parse_range(o.k, "k");
    if (o.q_cap) grid.q_cap = *o.q_cap;
    grid.n_cap = o.n_cap;
    grid.l_max = o.l_max;
    grid.threads = o.threads;

    std::vector<ClaimResult> results;
    const bool all = o.claims.empty() || (o.claims.size() == 1 && o.claims[0] == "all");
    if (all) results = verify_all(grid);
    else {
        for (const auto& id : o.claims) find_claim(id);
        for (const auto& id : o.claims) results.push_back(verify_claim(id, grid));
    }

    Sink sink(o.out);
    if (o.format == "csv") write_csv(sink.stream(), results);
    else write_lines(sink.stream(), results);

    bool ok = true;
    for (const auto& r : results) {
        if (o.format == "csv") write_summary_line(std::cerr, r);
        ok = ok && r.passed;
    }
    std::cerr << (ok ? "all claims passed" : "some claims FAILED") << '\n';
    return ok ? 0 : kExitClaimFailure;
}

/// Five-way evaluator agreement and the monomial oracle for one field.
int cmd_cross_check(const Options& o)
{
    const FieldCtx ctx = field_from(o);
    if (ctx.q() > o.cap()) fail(Errc::FieldTooLarge, "q exceeds --q-cap");
    const FunctionalEvaluator functional(ctx);
    std::mt19937_64 rng(o.seed);
    constexpr u64 kExhaustiveLimit = 4096;
    std::vector<FieldElement> points;
    if (ctx.q() <= kExhaustiveLimit) points = enumerate(ctx);
    else
        for (int i = 0; i < 256; ++i) points.push_back(ctx.random(rng));

    Sink sink(o.out);
    auto& os = sink.stream();
    u64 mismatches = 0;
    for (u64 k = 0; k < ctx.p(); ++k) {
        for (u64 n = 0; n <= o.n_max; ++n) {
            const DicksonParams params{n, k, ctx.p()};
            const Poly dense = rdk_poly(ctx.p(), params);
            const SparsePoly direct = rdk_poly_direct(ctx.p(), params);
            for (const auto& x : points) {
                const FieldElement ref = rdk_eval_rec(ctx, params, x);
                const bool ok = rdk_eval_matrix(ctx, params, x) == ref && functional(params, x) == ref &&
                                ctx.evaluate(dense, x) == ref && direct.evaluate(ctx, x) == ref;
                if (!ok) {
                    ++mismatches;
                    os << "mismatch k=" << k << " n=" << n << " x=" << compact(ctx, x) << '\n';
                }
            }
        }
    }
    u64 monomial_mismatches = 0;
    for (u64 n = 1; n <= o.n_max; ++n) {
        const bool fast = is_pp_monomial(n, ctx.q());
        const bool slow = is_pp_exhaustive(ctx, [&](const FieldElement& x) { return ctx.pow(x, n); }).is_pp;
        if (fast != slow) {
            ++monomial_mismatches;
            os << "monomial mismatch n=" << n << '\n';
        }
    }
    os << "p=" << ctx.p() << " e=" << ctx.e() << " points=" << points.size() << " evaluator_mismatches=" << mismatches
       << " monomial_mismatches=" << monomial_mismatches << '\n';
    return mismatches == 0 && monomial_mismatches == 0 ? 0 : kExitClaimFailure;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Reversed Dickson polynomials of the (k+1)-th kind: evaluation, PP tests and claim checks"};
    app.fallthrough();
    app.require_subcommand(1);
    app.set_config("--config", "", "flat key=value file; flags override it");

    Options o;
    app.add_option("--p", o.p, "prime, or list/range for scan and verify (3,5 or 3..7)");
    app.add_option("--e", o.e, "field degree, or range for scan and verify");
    app.add_option("--k", o.k, "kind parameter, or range for scan and verify");
    app.add_option("--n", o.n, "index n, or range for scan");
    app.add_option("--ls", o.ls, "exponents l_1,...,l_i with n = sum p^l_j");
    app.add_option("--x", o.x, "element index in [0, q) or coefficient list c0,c1,...");
    app.add_option("--method", o.method, "evaluator")
        ->check(CLI::IsMember({"rec", "matrix", "functional", "poly", "direct", "closed"}));
    app.add_flag("--all-methods", o.all_methods, "evaluate with every method and compare");
    app.add_flag("--reduced", o.reduced, "poly: print the reduced PP polynomial");
    app.add_flag("--closed", o.closed, "poly: print the closed form in u = 1 - 4x");
    app.add_option("--format", o.format, "verify output format")->check(CLI::IsMember({"csv", "lines"}));
    app.add_option("--out", o.out, "output file (default stdout)");
    app.add_option("--resume", o.resume, "scan: progress marker file for resuming");
    app.add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1U, 256U));
    app.add_option("--q-cap", o.q_cap, "largest field order to test exhaustively (verify default 243, otherwise 2^20)")
        ->check(CLI::Range(u64{2}, kExhaustiveOrderCap));
    app.add_option("--n-cap", o.n_cap, "verify: largest structured n");
    app.add_option("--l-max", o.l_max, "verify: largest exponent l");
    app.add_option("--n-max", o.n_max, "cross-check: largest n");
    app.add_option("--seed", o.seed, "cross-check: seed for sampled points in large fields");

    auto* field_info = app.add_subcommand("field-info", "print the field modulus and generator");
    auto* eval = app.add_subcommand("eval", "evaluate D_{n,k}(1,x) at one element");
    auto* poly = app.add_subcommand("poly", "print D_{n,k}(1,x), its closed form or its reduced polynomial");
    auto* is_pp = app.add_subcommand("is-pp", "decide whether D_{n,k}(1,x) permutes F_{p^e}");
    auto* scan = app.add_subcommand("scan", "CSV of PP verdicts over a parameter grid");
    auto* verify = app.add_subcommand("verify", "check registered claims over a grid");
    verify->add_option("claims", o.claims, "claim ids or 'all'");
    auto* cross = app.add_subcommand("cross-check", "evaluator agreement and monomial oracle on one field");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*field_info) return cmd_field_info(o);
        if (*eval) return cmd_eval(o);
        if (*poly) return cmd_poly(o);
        if (*is_pp) return cmd_is_pp(o);
        if (*scan) return cmd_scan(o);
        if (*verify) return cmd_verify(o);
        if (*cross) return cmd_cross_check(o);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
