// Command-line front end. Reads JSON documents, prints JSON.
//
// Exit codes: 0 ok, 1 domain error, 2 usage or malformed input,
// 3 verification failure.

#include "scottpersist/errors.hpp"
#include "scottpersist/functors.hpp"
#include "scottpersist/json_io.hpp"
#include "scottpersist/metrics.hpp"
#include "scottpersist/verify.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace sp = scottpersist;
using sp::Json;

namespace {

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string op;
    std::string in, a, b, v, eps, p, q, out, side = "overline";
    std::uint64_t seed = 1;
    std::size_t cases = 20;
};

Json read_doc(const std::string& path, const char* flag)
{
    if (path.empty())
        throw Usage(std::string("missing ") + flag);
    std::stringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream f(path);
        if (!f)
            throw sp::ParseError("cannot read " + path);
        buf << f.rdbuf();
    }
    return sp::parse_json(buf.str());
}

sp::Point point_arg(const std::string& text, const char* flag)
{
    if (text.empty())
        throw Usage(std::string("missing ") + flag);
    std::vector<sp::Rational> c;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        c.push_back(sp::parse_rational(item));
    return sp::Point(std::move(c));
}

sp::Rational rational_arg(const std::string& text, const char* flag)
{
    if (text.empty())
        throw Usage(std::string("missing ") + flag);
    return sp::parse_rational(text);
}

sp::SuperlinearFamily family(const Options& o, std::size_t n)
{
    return o.v.empty() ? sp::SuperlinearFamily::standard(n) : sp::SuperlinearFamily{point_arg(o.v, "--v")};
}

Json region_cmd(const Options& o)
{
    const Json doc = read_doc(o.in, "--in");
    if (o.op == "meager") {
        const sp::ConvexRegion s = sp::is_convex_json(doc) ? sp::convex_from_json(doc)
                                                           : sp::ConvexRegion(sp::region_from_json(doc));
        return sp::to_json(sp::is_meager(s, o.seed));
    }
    const sp::StaircaseRegion r = sp::region_from_json(doc);
    if (o.op == "interior")
        return sp::to_json(r.kind() == sp::SetKind::up ? sp::interior(r) : sp::interior_down(r));
    if (o.op == "closure")
        return sp::to_json(sp::closure(r));
    if (o.op == "boundary")
        return sp::to_json(sp::boundary(r));
    return {{"result", sp::is_injective_indicator_region(r)}};
}

Json module_cmd(const Options& o)
{
    if (o.op == "sum")
        return sp::to_json(sp::direct_sum(sp::module_or_indicator_from_json(read_doc(o.a, "--a")),
                                          sp::module_or_indicator_from_json(read_doc(o.b, "--b"))));
    const sp::CellModule m = sp::module_or_indicator_from_json(read_doc(o.in, "--in"));
    if (o.op == "eval")
        return sp::to_json(m.eval_map(point_arg(o.p, "--p"), point_arg(o.q, "--q")));
    if (o.op == "shift")
        return sp::to_json(m.shift(point_arg(o.v, "--v"), rational_arg(o.eps, "--eps")));
    if (o.op == "validate") {
        auto err = m.validation_error();
        return err ? Json{{"valid", false}, {"error", *err}} : Json{{"valid", true}};
    }
    const sp::StaircaseRegion r = sp::region_from_json(read_doc(o.b, "--b"));
    if (o.op == "sections") {
        const sp::Sections s = sp::sections(m, r);
        Json probes = Json::array();
        for (const auto& x : s.probes)
            probes.push_back(sp::to_json(x));
        return {{"dim", s.dim}, {"basis", sp::to_json(s.basis)}, {"probes", std::move(probes)}};
    }
    return {{"dim", sp::cosections(m, r)}};
}

Json functor_cmd(const Options& o)
{
    const sp::CellModule m = sp::module_or_indicator_from_json(read_doc(o.in, "--in"));
    if (o.op == "ephemeral")
        return {{"result", sp::is_ephemeral(m)}};
    if (o.op == "semicont")
        return {{"lower", sp::is_lower_semicontinuous(m)}, {"upper", sp::is_upper_semicontinuous(m)}};
    if (o.op == "jstar")
        return sp::to_json(sp::jstar_representative(m));
    sp::FunctorReport r;
    if (o.op == "overline")
        r = sp::overline(m);
    else if (o.op == "underline")
        r = sp::underline(m);
    else if (o.op == "soc")
        r = sp::scott_socle(m);
    else if (o.op == "rad")
        r = sp::scott_radical(m);
    else if (o.op == "top")
        r = sp::scott_top(m);
    else if (o.op == "r1soc")
        r = sp::r1_socle(m);
    else
        r = sp::l1_top(m);
    return sp::to_json(r.output);
}

bool is_region(const Json& j)
{
    return j.is_object() && j.contains("gens");
}

Json distance_cmd(const Options& o)
{
    if (o.op == "tr") {
        const sp::Point v = point_arg(o.v, "--v");
        const sp::Poset poset = o.in.empty() ? sp::Poset::standard(v.dim()) : sp::poset_from_json(read_doc(o.in, "--in"));
        const sp::TrFlags t = sp::tr_flags({v}, poset);
        Json out{{"tr1", t.tr1}, {"tr2", t.tr2}, {"tr3", t.tr3}};
        if (!t.tr2)
            out["tr2_witness"] = t.tr2_witness;
        if (!t.tr3)
            out["tr3_witness"] = t.tr3_witness;
        return out;
    }
    if (o.op == "distance0") {
        const sp::CellModule m = sp::module_or_indicator_from_json(read_doc(o.in, "--in"));
        return {{"d", sp::to_json(sp::distance_to_zero(m, family(o, m.ambient_dim())))}};
    }
    if (o.op == "canonical") {
        const sp::CellModule m = sp::module_or_indicator_from_json(read_doc(o.in, "--in"));
        if (o.side != "overline" && o.side != "underline")
            throw Usage("--side must be overline or underline");
        const auto ci = sp::canonical_interleaving(
            m, o.side == "overline" ? sp::LineSide::overline : sp::LineSide::underline, rational_arg(o.eps, "--eps"),
            family(o, m.ambient_dim()));
        return {{"partner", sp::to_json(ci.partner)}, {"certificate", sp::to_json(ci.cert)}};
    }
    const Json a = read_doc(o.a, "--a");
    const Json b = read_doc(o.b, "--b");
    if (o.op == "certify") {
        const auto cert = sp::certificate_from_json(read_doc(o.in, "--in"));
        return {{"result", sp::check_interleaving(sp::module_or_indicator_from_json(a),
                                                   sp::module_or_indicator_from_json(b), cert)}};
    }
    if (is_region(a) && is_region(b)) {
        const sp::StaircaseRegion r1 = sp::region_from_json(a), r2 = sp::region_from_json(b);
        return {{"d", sp::to_json(sp::distance_indicator(r1, r2, family(o, r1.dim())))}};
    }
    const sp::CellModule m = sp::module_or_indicator_from_json(a), n = sp::module_or_indicator_from_json(b);
    const sp::ScottDistance d = sp::distance_scott(m, n, family(o, m.ambient_dim()));
    if (!d.computable)
        return {{"computable", false}, {"reason", d.reason}};
    return {{"computable", true}, {"d", sp::to_json(d.d)}};
}

void emit(const Options& o, const std::string& text)
{
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f)
        throw sp::ParseError("cannot write " + o.out);
    f << text;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Scott-topology constructions on persistence modules over R^n and finite posets"};
    app.require_subcommand(1);
    Options o;

    auto io = [&](CLI::App* c) {
        c->add_option("--in", o.in, "input JSON file, - for stdin");
        c->add_option("--out", o.out, "write the result here instead of stdout");
    };

    auto* region = app.add_subcommand("region", "interior, closure, boundary, meager, injective");
    region->add_option("op", o.op)->required()->check(CLI::IsMember({"interior", "closure", "boundary", "meager", "injective"}));
    region->add_option("--seed", o.seed, "seed for the meagerness witness search");
    io(region);

    auto* module = app.add_subcommand("module", "eval, sections, cosections, sum, shift, validate");
    module->add_option("op", o.op)->required()->check(CLI::IsMember({"eval", "sections", "cosections", "sum", "shift", "validate"}));
    module->add_option("--a", o.a, "first module for sum");
    module->add_option("--b", o.b, "second module for sum, or the region for sections");
    module->add_option("--p", o.p, "point p, comma separated");
    module->add_option("--q", o.q, "point q >= p");
    module->add_option("--v", o.v, "shift direction");
    module->add_option("--eps", o.eps, "shift amount");
    io(module);

    auto* functor = app.add_subcommand("functor", "apply a functor to a module or region indicator");
    functor->add_option("op", o.op)
        ->required()
        ->check(CLI::IsMember({"overline", "underline", "soc", "rad", "top", "r1soc", "l1top", "ephemeral", "semicont", "jstar"}));
    io(functor);

    auto* distance = app.add_subcommand("distance", "tr, certify, canonical, distance, distance0");
    o.op = "distance";
    distance->add_option("op", o.op)->check(CLI::IsMember({"tr", "certify", "canonical", "distance", "distance0"}));
    distance->add_option("--a", o.a, "first region or module");
    distance->add_option("--b", o.b, "second region or module");
    distance->add_option("--v", o.v, "translation direction, default (1, ..., 1)");
    distance->add_option("--eps", o.eps, "eps for canonical");
    distance->add_option("--side", o.side, "overline or underline, for canonical");
    io(distance);

    auto* verify = app.add_subcommand("verify", "run a property suite");
    verify->add_option("suite", o.op)->required()->check(CLI::IsMember(sp::suite_names()));
    verify->add_option("--seed", o.seed, "RNG seed");
    verify->add_option("--cases", o.cases, "number of cases");
    verify->add_option("--out", o.out, "write the report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) {
            const sp::VerificationReport r = sp::run_suite(o.op, o.seed, o.cases);
            emit(o, sp::dump(r.to_json()));
            std::cerr << r.suite << ": " << r.cases - r.failures() << "/" << r.cases << " passed\n";
            return r.all_pass() ? 0 : 3;
        }
        Json out;
        if (region->parsed())
            out = region_cmd(o);
        else if (module->parsed())
            out = module_cmd(o);
        else if (functor->parsed())
            out = functor_cmd(o);
        else
            out = distance_cmd(o);
        emit(o, sp::dump(out));
        return 0;
    } catch (const Usage& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return 2;
    } catch (const sp::ParseError& e) {
        std::cerr << "malformed input: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "malformed input: " << e.what() << "\n";
        return 2;
    } catch (const sp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
