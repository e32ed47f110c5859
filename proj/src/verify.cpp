#include "scottpersist/verify.hpp"

#include "scottpersist/errors.hpp"
#include "scottpersist/functors.hpp"
#include "scottpersist/random.hpp"

#include <functional>
#include <map>
#include <set>

namespace scottpersist {

std::size_t VerificationReport::failures() const
{
    std::size_t n = 0;
    for (const auto& r : results)
        n += r.pass ? 0 : 1;
    return n;
}

Json VerificationReport::to_json() const
{
    Json cases_json = Json::array();
    for (const auto& r : results) {
        Json c{{"case", r.index}, {"input", r.input}, {"property", r.property}, {"pass", r.pass}};
        if (!r.pass)
            c["witness"] = r.witness;
        cases_json.push_back(std::move(c));
    }
    return {{"suite", suite},
            {"seed", seed},
            {"cases", cases},
            {"failed", failures()},
            {"passed", cases - failures()},
            {"results", std::move(cases_json)}};
}

std::uint64_t case_seed(std::uint64_t seed, std::size_t index)
{
    // splitmix64 of the pair
    std::uint64_t z = seed * 0x9E3779B97F4A7C15ull + index + 1;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

namespace {

struct Checker {
    std::vector<std::string> properties;
    std::string witness;

    void expect(bool ok, const std::string& property, const std::string& detail = "")
    {
        properties.push_back(property);
        if (!ok && witness.empty())
            witness = detail.empty() ? property : property + ": " + detail;
    }

    std::string property() const
    {
        std::string out;
        for (const auto& p : properties)
            out += (out.empty() ? "" : "; ") + p;
        return out;
    }
};

bool iso(const CellModule& a, const CellModule& b)
{
    return isomorphic(a, b) == IsoVerdict::isomorphic;
}

std::string verdict(const CellModule& a, const CellModule& b)
{
    return to_string(isomorphic(a, b));
}

using CaseFn = std::function<Json(Rng&, Checker&)>;

std::size_t random_dim(Rng& rng)
{
    // Mostly planes; lines and 3-space now and then.
    const auto r = rng.integer(0, 5);
    return r == 0 ? 1 : r == 5 ? 3 : 2;
}

Json line_composition(Rng& rng, Checker& ck)
{
    const CellModule m = gen::module(rng, random_dim(rng));
    const auto over = overline(m);
    const auto under = underline(m);
    const auto over2 = overline(over.output);
    const auto under2 = underline(under.output);
    ck.expect(iso(under2.output, under.output) && under2.canonical->is_isomorphism(),
              "underline(underline M) = underline M", verdict(under2.output, under.output));
    ck.expect(iso(over2.output, over.output) && over2.canonical->is_isomorphism(),
              "overline(overline M) = overline M", verdict(over2.output, over.output));
    ck.expect(iso(underline(over.output).output, under.output), "underline(overline M) = underline M");
    ck.expect(iso(overline(under.output).output, over.output), "overline(underline M) = overline M");
    return to_json(m);
}

// The region-level answers for an indicator of a staircase region.
struct ClosedForms {
    CellModule over, under, soc, rad, top, r1soc, l1top;
};

ClosedForms closed_forms(const StaircaseRegion& r)
{
    auto k = [](const auto& region) { return indicator(region); };
    const std::size_t n = r.dim();
    const CellModule zero = CellModule::zero(CellComplex::trivial(n));
    if (r.kind() == SetKind::up) {
        const StaircaseRegion in = interior(r);
        const StaircaseRegion cl = closure(r);
        return {k(in), k(cl), zero, k(in), k(ConvexRegion(r, in)), k(ConvexRegion(cl, r)), zero};
    }
    const StaircaseRegion in = interior_down(r);
    const StaircaseRegion cl = closure(r);
    return {k(cl), k(in), k(ConvexRegion(r, in)), k(r), zero, zero, k(ConvexRegion(cl, r))};
}

Json interval_closure(Rng& rng, Checker& ck)
{
    const StaircaseRegion r = gen::staircase(rng, random_dim(rng));
    const CellModule m = indicator(r);
    const ClosedForms want = closed_forms(r);
    auto check = [&](const char* name, const CellModule& got, const CellModule& expected) {
        ck.expect(iso(got, expected), std::string(name) + " of the indicator matches the region",
                  verdict(got, expected));
    };
    check("overline", overline(m).output, want.over);
    check("underline", underline(m).output, want.under);
    check("soc", scott_socle(m).output, want.soc);
    check("rad", scott_radical(m).output, want.rad);
    check("top", scott_top(m).output, want.top);
    check("R1soc", r1_socle(m).output, want.r1soc);
    check("L1top", l1_top(m).output, want.l1top);
    return to_json(r);
}

bool same_set(const StaircaseRegion& a, const StaircaseRegion& b)
{
    return region_subset(a, b) && region_subset(b, a);
}

Json semicont_classify(Rng& rng, Checker& ck)
{
    const std::size_t n = random_dim(rng);
    const StaircaseRegion r = gen::staircase(rng, n);
    const CellModule k = indicator(r);
    const bool up = r.kind() == SetKind::up;
    // Lower: Scott-open up-set / closed down-set. Upper: closed up-set / open down-set.
    const bool want_lower = up ? same_set(r, interior(r)) : same_set(r, closure(r));
    const bool want_upper = up ? same_set(r, closure(r)) : same_set(r, interior_down(r));
    ck.expect(is_lower_semicontinuous(k) == want_lower, "indicator lower semi-continuous iff region test");
    ck.expect(is_upper_semicontinuous(k) == want_upper, "indicator upper semi-continuous iff region test");

    const CellModule m = gen::module(rng, n);
    const bool upper = is_upper_semicontinuous(m);
    const bool lower = is_lower_semicontinuous(m);
    ck.expect(upper == (scott_socle(m).is_zero && r1_socle(m).is_zero), "upper iff soc = R1soc = 0");
    ck.expect(lower == (scott_top(m).is_zero && l1_top(m).is_zero), "lower iff top = L1top = 0");
    return {{"region", to_json(r)}, {"module", to_json(m)}};
}

Json soc_top(Rng& rng, Checker& ck)
{
    const CellModule m = gen::module(rng, random_dim(rng));
    const SocTopCheck c = soc_top_connection(m);
    ck.expect(c.r1soc_top, "R1soc(overline M) = top(underline M)", c.detail);
    ck.expect(c.l1top_soc, "L1top(underline M) = soc(overline M)", c.detail);
    return to_json(m);
}

Json exactness(Rng& rng, Checker& ck)
{
    const CellModule m = gen::module(rng, random_dim(rng));
    const auto defect = exactness_defect(m);
    ck.expect(!defect, "both four-term sequences have vanishing alternating dimension sums", defect.value_or(""));
    return to_json(m);
}

bool same_dims(const CellModule& a, const CellModule& b)
{
    auto [x, y] = align(a, b);
    return x.dims() == y.dims();
}

Json ephemeral_equiv(Rng& rng, Checker& ck)
{
    const std::size_t n = random_dim(rng);
    std::optional<ConvexRegion> region;
    CellModule m;
    switch (rng.integer(0, 3)) {
    case 0:
        region = boundary(gen::staircase(rng, n, 2));
        m = indicator(*region);
        break;
    case 1:
        region = gen::convex(rng, n);
        m = indicator(*region);
        break;
    case 2:
        m = gen::ephemeral(rng, n);
        break;
    default:
        m = gen::module(rng, n);
    }
    const bool eph = is_ephemeral(m);
    ck.expect(eph == overline(m).is_zero, "ephemeral iff overline M = 0");
    ck.expect(eph == underline(m).is_zero, "ephemeral iff underline M = 0");
    ck.expect(eph == same_dims(scott_socle(m).output, m), "ephemeral iff soc M = M");
    ck.expect(eph == same_dims(scott_top(m).output, m), "ephemeral iff top M = M");
    ck.expect(eph == scott_radical(m).is_zero, "ephemeral iff rad M = 0");
    if (region) {
        const MeagerVerdict v = is_meager(*region, rng.engine()());
        ck.expect(v.status != MeagerStatus::unknown, "meagerness decided", "unknown");
        ck.expect(eph == (v.status == MeagerStatus::meager), "ephemeral iff the support is meager");
        return to_json(*region);
    }
    return to_json(m);
}

Json nakayama(Rng& rng, Checker& ck)
{
    const std::size_t n = random_dim(rng);
    const CellModule fg = gen::finitely_generated(rng, n);
    const CellModule fc = gen::finitely_cogenerated(rng, n);
    ck.expect(!fg.is_zero() && !scott_top(fg).is_zero, "finitely generated and nonzero gives top != 0");
    ck.expect(!fc.is_zero() && !scott_socle(fc).is_zero, "finitely co-generated and nonzero gives soc != 0");
    return {{"generated", to_json(fg)}, {"cogenerated", to_json(fc)}};
}

Json stability(Rng& rng, Checker& ck)
{
    const CellModule m = gen::module(rng, random_dim(rng));
    const SuperlinearFamily f = SuperlinearFamily::standard(m.ambient_dim());
    for (const Rational eps : {Rational(1, 4), Rational(1), Rational(3)})
        for (LineSide side : {LineSide::overline, LineSide::underline}) {
            const auto ci = canonical_interleaving(m, side, eps, f);
            ck.expect(check_interleaving(m, ci.partner, ci.cert),
                      std::string("canonical ") + (side == LineSide::overline ? "overline" : "underline")
                          + " interleaving at eps " + format_rational(eps));
        }
    return to_json(m);
}

// Smallest eps among the candidates (or just after one) at which the
// identity-on-overlap maps interleave two indicators.
std::optional<Rational> searched_distance(const CellModule& m, const CellModule& n, const Point& v)
{
    auto works = [&](const Rational& eps) {
        std::vector<Rational> off(v.dim());
        for (std::size_t i = 0; i < v.dim(); ++i)
            off[i] = -eps * v[i];
        auto scalar = [&](const CellModule& a, const CellModule& b) {
            const CellComplex k = a.complex().merged(b.complex().translated(off));
            CellModule src = a.refine(k), tgt = b.shift_onto(k, v, eps);
            std::vector<Matrix> maps;
            for (std::size_t c = 0; c < k.cell_count(); ++c)
                maps.push_back(src.dim(c) == 1 && tgt.dim(c) == 1 ? Matrix::identity(1) : Matrix(tgt.dim(c), src.dim(c)));
            return CellMorphism(std::move(src), std::move(tgt), std::move(maps));
        };
        InterleavingCertificate c{eps, v, scalar(m, n), scalar(n, m)};
        return c.f.is_natural() && c.g.is_natural() && check_interleaving(m, n, c);
    };
    const auto cands = candidate_epsilons(m.complex().merged(n.complex()), v);
    for (std::size_t i = 0; i < cands.size(); ++i) {
        const Rational next = i + 1 < cands.size() ? cands[i + 1] : cands[i] + 1;
        if (works(cands[i]) || works((cands[i] + next) / 2))
            return cands[i];
    }
    return std::nullopt;
}

Json isometry(Rng& rng, Checker& ck)
{
    const std::size_t n = rng.coin() ? 2 : static_cast<std::size_t>(rng.integer(1, 3));
    const SetKind kind = rng.coin() ? SetKind::up : SetKind::down;
    auto flavor = [&] { return rng.coin() ? Flavor::closed : Flavor::open; };
    const StaircaseRegion r1 = gen::staircase(rng, n, kind, flavor(), 3);
    const StaircaseRegion r2 = gen::staircase(rng, n, kind, flavor(), 3);
    const SuperlinearFamily f = SuperlinearFamily::standard(n);
    auto over = [&](const StaircaseRegion& r) { return kind == SetKind::up ? interior(r) : closure(r); };
    const Distance d = distance_indicator(r1, r2, f);
    const Distance d_over = distance_indicator(over(r1), over(r2), f);
    const ScottDistance ds = distance_scott(indicator(r1), indicator(r2), f);
    const auto searched = searched_distance(indicator(r1), indicator(r2), f.v);
    ck.expect(d == d_over, "d(R1, R2) = d(overline regions)", d.to_string() + " vs " + d_over.to_string());
    ck.expect(ds.computable && ds.d == d, "d(R1, R2) = d on j_* representatives",
              ds.computable ? ds.d.to_string() : ds.reason);
    ck.expect(searched && Distance::finite(*searched) == d, "d(R1, R2) = certificate search",
              searched ? format_rational(*searched) : "no certificate found");
    return {{"r1", to_json(r1)}, {"r2", to_json(r2)}, {"d", to_json(d)}};
}

Json meager_boundary(Rng& rng, Checker& ck)
{
    const StaircaseRegion r = gen::staircase(rng, random_dim(rng));
    const ConvexRegion b = boundary(r);
    const auto vb = is_meager(b, rng.engine()());
    ck.expect(vb.status == MeagerStatus::meager, "the boundary of a staircase is meager");
    ck.expect(is_ephemeral(indicator(b)), "the boundary indicator is ephemeral");
    const auto vr = is_meager(ConvexRegion(r), rng.engine()());
    ck.expect(vr.status == MeagerStatus::not_meager && vr.witness
                  && r.poset().way_below(vr.witness->first, vr.witness->second) && r.contains(vr.witness->first)
                  && r.contains(vr.witness->second),
              "a nonempty staircase is not meager, with a checked witness");
    return to_json(r);
}

Json finite_poset(Rng& rng, Checker& ck)
{
    const FiniteModule m = gen::finite_module(rng, static_cast<std::size_t>(rng.integer(1, 7)));
    ck.expect(is_lower_semicontinuous(m), "every module over a finite poset is lower semi-continuous");
    ck.expect(is_upper_semicontinuous(m), "every module over a finite poset is upper semi-continuous");
    bool agree = true;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) {
            const Point x{Rational(static_cast<long>(i))}, y{Rational(static_cast<long>(j))};
            agree = agree && m.poset().way_below(x, y) == m.poset().le(x, y);
        }
    ck.expect(agree, "way below equals below on a finite poset");
    Json dims = Json::array();
    for (auto d : m.dims())
        dims.push_back(d);
    return {{"poset", to_json(m.poset())}, {"dims", std::move(dims)}};
}

const std::map<std::string, CaseFn>& suites()
{
    static const std::map<std::string, CaseFn> s{
        {"line-composition", line_composition},
        {"interval-closure", interval_closure},
        {"semicont-classify", semicont_classify},
        {"soc-top-connection", soc_top},
        {"exactness", exactness},
        {"ephemeral-equiv", ephemeral_equiv},
        {"nakayama", nakayama},
        {"stability", stability},
        {"isometry", isometry},
        {"meager-boundary", meager_boundary},
        {"finite-poset", finite_poset},
    };
    return s;
}

} // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : suites())
            out.push_back(name);
        return out;
    }();
    return names;
}

VerificationReport run_suite(const std::string& name, std::uint64_t seed, std::size_t cases)
{
    auto it = suites().find(name);
    if (it == suites().end())
        throw DomainError("unknown suite \"" + name + "\"");
    VerificationReport report{name, seed, cases, {}};
    for (std::size_t i = 0; i < cases; ++i) {
        Rng rng(case_seed(seed, i));
        Checker ck;
        CaseResult r;
        r.index = i;
        try {
            r.input = it->second(rng, ck);
            r.pass = ck.witness.empty();
            r.witness = ck.witness;
        } catch (const Error& e) {
            r.pass = false;
            r.witness = std::string("exception: ") + e.what();
        }
        r.property = ck.property();
        report.results.push_back(std::move(r));
    }
    return report;
}

} // namespace scottpersist
