#include "scottpersist/json_io.hpp"

#include "scottpersist/errors.hpp"

namespace scottpersist {

namespace {

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object())
        throw ParseError(std::string("expected an object with key \"") + key + "\"");
    auto it = j.find(key);
    if (it == j.end())
        throw ParseError(std::string("missing key \"") + key + "\"");
    return *it;
}

std::string text(const Json& j)
{
    if (!j.is_string())
        throw ParseError("expected a string, got " + j.dump());
    return j.get<std::string>();
}

std::size_t index_from_json(const Json& j)
{
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long>() >= 0))
        throw ParseError("expected a non-negative integer, got " + j.dump());
    return j.get<std::size_t>();
}

const Json& array(const Json& j, const char* what)
{
    if (!j.is_array())
        throw ParseError(std::string(what) + " must be an array, got " + j.dump());
    return j;
}

std::vector<std::size_t> indices(const Json& j)
{
    std::vector<std::size_t> out;
    for (const auto& x : array(j, "index"))
        out.push_back(index_from_json(x));
    return out;
}

Json multi_index(const CellComplex& k, std::size_t cell)
{
    Json out = Json::array();
    for (std::size_t x : k.multi(cell))
        out.push_back(x);
    return out;
}

std::size_t cell_from_json(const CellComplex& k, const Json& j)
{
    auto idx = indices(j);
    if (idx.size() != k.dim())
        throw ParseError("cell index " + j.dump() + " has the wrong length");
    for (std::size_t a = 0; a < idx.size(); ++a)
        if (idx[a] >= k.strata(a))
            throw ParseError("cell index " + j.dump() + " out of range");
    return k.linear(idx);
}

} // namespace

Json to_json(const Rational& q)
{
    return format_rational(q);
}

Json to_json(const Point& p)
{
    Json out = Json::array();
    for (std::size_t i = 0; i < p.dim(); ++i)
        out.push_back(to_json(p[i]));
    return out;
}

Json to_json(const Matrix& m)
{
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(to_json(m(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

Json to_json(const Poset& p)
{
    Json out;
    switch (p.kind()) {
    case PosetKind::standard:
        out["kind"] = "rn";
        out["dim"] = p.dim();
        break;
    case PosetKind::orthant:
        out["kind"] = "orthant";
        out["dim"] = p.dim();
        break;
    case PosetKind::cone:
        out["kind"] = "cone";
        out["dim"] = p.dim();
        out["facets"] = to_json(p.as_cone()->facets);
        break;
    case PosetKind::finite: {
        out["kind"] = "finite";
        out["dim"] = p.as_finite()->count;
        Json h = Json::array();
        for (auto [i, j] : p.as_finite()->hasse)
            h.push_back({i, j});
        out["hasse"] = std::move(h);
        break;
    }
    case PosetKind::product: {
        out["kind"] = "product";
        out["dim"] = p.dim();
        Json f = Json::array();
        for (const auto& x : p.as_product()->factors)
            f.push_back(to_json(x));
        out["factors"] = std::move(f);
        break;
    }
    }
    return out;
}

Json to_json(const StaircaseRegion& r)
{
    Json gens = Json::array();
    for (const auto& g : r.gens())
        gens.push_back(to_json(g));
    Json out{{"kind", to_string(r.kind())}, {"flavor", to_string(r.flavor())}, {"gens", std::move(gens)},
             {"dim", r.dim()}};
    if (!r.poset().is_standard())
        out["poset"] = to_json(r.poset());
    return out;
}

Json to_json(const ConvexRegion& r)
{
    return {{"outer", to_json(r.outer())}, {"inner", to_json(r.inner())}};
}

Json to_json(const CellModule& m)
{
    const auto& k = m.complex();
    Json bps = Json::array();
    for (std::size_t a = 0; a < k.dim(); ++a) {
        Json axis = Json::array();
        for (const auto& b : k.breakpoints(a))
            axis.push_back(to_json(b));
        bps.push_back(std::move(axis));
    }
    Json cells = Json::array();
    Json steps = Json::array();
    for (std::size_t c = 0; c < k.cell_count(); ++c) {
        if (m.dim(c) != 0)
            cells.push_back({{"index", multi_index(k, c)}, {"space", m.dim(c)}});
        for (std::size_t a = 0; a < k.dim(); ++a) {
            if (!k.successor(c, a) || m.step(a, c).is_zero())
                continue;
            steps.push_back({{"cell", multi_index(k, c)}, {"axis", a}, {"matrix", to_json(m.step(a, c))}});
        }
    }
    Json out{{"dim", m.ambient_dim()}, {"breakpoints", std::move(bps)}, {"cells", std::move(cells)},
             {"steps", std::move(steps)}};
    if (!m.field().is_rational())
        out["field"] = m.field().name();
    return out;
}

Json to_json(const CellMorphism& f)
{
    const auto& k = f.complex();
    Json maps = Json::array();
    for (std::size_t c = 0; c < k.cell_count(); ++c)
        if (!f.map(c).is_zero())
            maps.push_back({{"cell", multi_index(k, c)}, {"matrix", to_json(f.map(c))}});
    return {{"source", to_json(f.source())}, {"target", to_json(f.target())}, {"maps", std::move(maps)}};
}

Json to_json(const SuperlinearFamily& f)
{
    return {{"v", to_json(f.v)}};
}

Json to_json(const Distance& d)
{
    return d.to_string();
}

Json to_json(const InterleavingCertificate& c)
{
    return {{"eps", to_json(c.eps)}, {"v", to_json(c.v)}, {"f", to_json(c.f)}, {"g", to_json(c.g)}};
}

Json to_json(const MeagerVerdict& v)
{
    Json out;
    switch (v.status) {
    case MeagerStatus::meager:
        out["meager"] = true;
        out["certificate"] = v.certificate;
        break;
    case MeagerStatus::not_meager:
        out["meager"] = false;
        break;
    case MeagerStatus::unknown:
        out["meager"] = "unknown";
        break;
    }
    if (v.witness)
        out["witness"] = {to_json(v.witness->first), to_json(v.witness->second)};
    return out;
}

Rational rational_from_json(const Json& j)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<long>());
    throw ParseError("expected a rational as a string \"p/q\" or an integer, got " + j.dump());
}

Point point_from_json(const Json& j)
{
    std::vector<Rational> c;
    for (const auto& x : array(j, "point"))
        c.push_back(rational_from_json(x));
    return Point(std::move(c));
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols)
{
    array(j, "matrix");
    if (j.size() != rows)
        throw ParseError("matrix " + j.dump() + " should have " + std::to_string(rows) + " rows");
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw ParseError("matrix row " + j[i].dump() + " should have " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c)
            m(i, c) = rational_from_json(j[i][c]);
    }
    return m;
}

namespace {

Matrix free_matrix(const Json& j)
{
    array(j, "matrix");
    const std::size_t rows = j.size();
    const std::size_t cols = rows == 0 ? 0 : array(j[0], "matrix row").size();
    return matrix_from_json(j, rows, cols);
}

} // namespace

Poset poset_from_json(const Json& j)
{
    const std::string kind = text(field(j, "kind"));
    if (kind == "rn")
        return Poset::standard(index_from_json(field(j, "dim")));
    if (kind == "orthant")
        return Poset::orthant(index_from_json(field(j, "dim")));
    if (kind == "cone")
        return Poset::cone(free_matrix(field(j, "facets")));
    if (kind == "finite") {
        std::vector<std::pair<std::size_t, std::size_t>> hasse;
        if (j.contains("hasse"))
            for (const auto& e : array(j["hasse"], "hasse")) {
                if (!e.is_array() || e.size() != 2)
                    throw ParseError("hasse pair " + e.dump() + " must be [i, j]");
                hasse.emplace_back(index_from_json(e[0]), index_from_json(e[1]));
            }
        return Poset::finite(index_from_json(field(j, "dim")), std::move(hasse));
    }
    if (kind == "product") {
        std::vector<Poset> f;
        for (const auto& x : array(field(j, "factors"), "factors"))
            f.push_back(poset_from_json(x));
        return Poset::product(std::move(f));
    }
    throw ParseError("unknown poset kind \"" + kind + "\"");
}

StaircaseRegion region_from_json(const Json& j)
{
    const std::string kind = text(field(j, "kind"));
    const std::string flavor = text(field(j, "flavor"));
    if (kind != "up" && kind != "down")
        throw ParseError("region kind must be \"up\" or \"down\", got \"" + kind + "\"");
    if (flavor != "closed" && flavor != "open")
        throw ParseError("region flavor must be \"closed\" or \"open\", got \"" + flavor + "\"");
    std::vector<Point> gens;
    for (const auto& g : array(field(j, "gens"), "gens"))
        gens.push_back(point_from_json(g));
    std::optional<Poset> poset;
    if (j.contains("poset"))
        poset = poset_from_json(j["poset"]);
    else if (j.contains("dim"))
        poset = Poset::standard(index_from_json(j["dim"]));
    else if (!gens.empty())
        poset = Poset::standard(gens.front().dim());
    else
        throw ParseError("a region without generators needs \"dim\" or \"poset\"");
    return StaircaseRegion(*poset, kind == "up" ? SetKind::up : SetKind::down,
                           flavor == "closed" ? Flavor::closed : Flavor::open, std::move(gens));
}

bool is_convex_json(const Json& j)
{
    return j.is_object() && j.contains("outer");
}

ConvexRegion convex_from_json(const Json& j)
{
    StaircaseRegion outer = region_from_json(field(j, "outer"));
    if (!j.contains("inner"))
        return ConvexRegion(std::move(outer));
    return ConvexRegion(std::move(outer), region_from_json(j["inner"]));
}

CellModule module_from_json(const Json& j)
{
    const Field f = j.contains("field") ? Field::parse(text(j["field"])) : default_field();
    if (j.contains("constant_regions")) {
        const std::size_t n = index_from_json(field(j, "dim"));
        CellModule out = CellModule::zero(CellComplex::trivial(n), f);
        for (const auto& r : array(j["constant_regions"], "constant_regions")) {
            CellModule part = is_convex_json(r) ? indicator(convex_from_json(r), f) : indicator(region_from_json(r), f);
            if (part.ambient_dim() != n)
                throw DimensionError("constant region of dimension " + std::to_string(part.ambient_dim())
                                     + " in a module of dimension " + std::to_string(n));
            out = direct_sum(out, part);
        }
        return out;
    }
    const std::size_t n = index_from_json(field(j, "dim"));
    std::vector<std::vector<Rational>> bps(n);
    if (j.contains("breakpoints")) {
        const Json& b = array(j["breakpoints"], "breakpoints");
        if (b.size() != n)
            throw ParseError("breakpoints need one list per axis");
        for (std::size_t a = 0; a < n; ++a)
            for (const auto& x : array(b[a], "breakpoints"))
                bps[a].push_back(rational_from_json(x));
    }
    CellComplex k(std::move(bps));
    std::vector<std::size_t> dims(k.cell_count(), 0);
    if (j.contains("cells"))
        for (const auto& c : array(j["cells"], "cells"))
            dims[cell_from_json(k, field(c, "index"))] = index_from_json(field(c, "space"));
    std::vector<std::vector<Matrix>> steps(n, std::vector<Matrix>(k.cell_count()));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = 0; c < k.cell_count(); ++c)
            if (auto s = k.successor(c, a))
                steps[a][c] = Matrix(dims[*s], dims[c]);
    if (j.contains("steps"))
        for (const auto& s : array(j["steps"], "steps")) {
            const std::size_t c = cell_from_json(k, field(s, "cell"));
            const std::size_t a = index_from_json(field(s, "axis"));
            if (a >= n)
                throw ParseError("step axis " + std::to_string(a) + " out of range");
            auto next = k.successor(c, a);
            if (!next)
                throw ParseError("step from the last stratum along axis " + std::to_string(a));
            steps[a][c] = matrix_from_json(field(s, "matrix"), dims[*next], dims[c]);
        }
    return CellModule(std::move(k), std::move(dims), std::move(steps), f);
}

CellModule module_or_indicator_from_json(const Json& j)
{
    if (is_convex_json(j))
        return indicator(convex_from_json(j));
    if (j.is_object() && j.contains("gens"))
        return indicator(region_from_json(j));
    return module_from_json(j);
}

CellMorphism morphism_from_json(const Json& j)
{
    CellModule src = module_from_json(field(j, "source"));
    CellModule tgt = module_from_json(field(j, "target"));
    const auto& k = src.complex();
    std::vector<Matrix> maps;
    for (std::size_t c = 0; c < k.cell_count(); ++c)
        maps.emplace_back(tgt.dim(c), src.dim(c));
    if (!(k == tgt.complex()))
        throw DomainError("morphism source and target live on different complexes");
    if (j.contains("maps"))
        for (const auto& m : array(j["maps"], "maps")) {
            const std::size_t c = cell_from_json(k, field(m, "cell"));
            maps[c] = matrix_from_json(field(m, "matrix"), tgt.dim(c), src.dim(c));
        }
    return CellMorphism(std::move(src), std::move(tgt), std::move(maps));
}

SuperlinearFamily family_from_json(const Json& j)
{
    return {point_from_json(field(j, "v"))};
}

InterleavingCertificate certificate_from_json(const Json& j)
{
    return {rational_from_json(field(j, "eps")), point_from_json(field(j, "v")), morphism_from_json(field(j, "f")),
            morphism_from_json(field(j, "g"))};
}

Json parse_json(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

std::string dump(const Json& j)
{
    return j.dump(2) + "\n";
}

} // namespace scottpersist
