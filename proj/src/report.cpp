#include "tamegamma/report.hpp"

#include <cstdio>
#include <sstream>

#include "tamegamma/parser.hpp"

namespace tamegamma {

using nlohmann::json;

namespace {

json members_json(const SubspaceIndex& s) {
    json out = json::array();
    for (std::size_t i : s.members()) out.push_back(i + 1);
    return out;
}

json points_json(const std::vector<ExponentVector>& pts) {
    json out = json::array();
    for (const auto& p : pts) out.push_back(p);
    return out;
}

json ideal_json(const Ideal& ideal) {
    json gens = json::array();
    for (const auto& g : ideal.generators) gens.push_back(to_string(display_normalized(g), ideal.ring));
    return {{"ring", ideal.ring}, {"generators", gens}};
}

json exhaustion_json(const Exhaustion& e) { return {{"limit", e.limit}, {"value", e.value}}; }

std::string fixed4(long double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3Le", x);
    return buf;
}

std::string complex4(const Complex& c) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.4Lg%+.4Lg*i", c.real(), c.imag());
    return buf;
}

json check_json(Check c) {
    if (c == Check::Pass) return true;
    if (c == Check::Fail) return false;
    return to_string(c);
}

std::string coordinate_name(std::size_t c) { return c == 0 ? "t" : "z" + std::to_string(c); }

json budget_json(const Budget& b) {
    return {{"max_reductions", b.max_reductions},
            {"max_degree", b.max_degree},
            {"max_basis_size", b.max_basis_size},
            {"max_time_ms", b.max_time ? json(b.max_time->count()) : json(nullptr)},
            {"order", b.inner_order == MonomialOrder::Kind::Lex ? "lex" : "grevlex"}};
}

std::optional<json> first_exhaustion(const json& section, const char* list, const char* alt = nullptr) {
    for (const char* key : {list, alt}) {
        if (key == nullptr || !section.contains(key)) continue;
        for (const auto& item : section.at(key))
            if (item.contains("exhausted")) return item.at("exhausted");
    }
    return std::nullopt;
}

Report analyze(const SparsePolynomial& p, const Budget& budget, Report r) {
    const auto poly = newton_polyhedron(p);
    const auto cls = classify_subspaces(p);
    const auto essential = essential_noncompact_faces(poly, cls);
    r.polyhedron = polyhedron_json(poly, cls, essential);
    const auto nd = check_nondegenerate(p, budget);
    const auto tm = tameness_report(p, budget);
    r.nondegeneracy = nondegeneracy_json(nd);
    r.tameness = tameness_json(tm);
    if (nd.verdict == NondegeneracyReport::Verdict::Degenerate) {
        r.verdict = "degenerate";
    } else if (tm.verdict == TamenessVerdict::Verdict::NotLocallyTame) {
        r.verdict = "not_locally_tame";
    } else if (nd.verdict == NondegeneracyReport::Verdict::Unknown || tm.verdict == TamenessVerdict::Verdict::Unknown) {
        r.verdict = "unknown";
    } else {
        r.verdict = "nondegenerate_locally_tame";
    }
    if (auto e = first_exhaustion(*r.nondegeneracy, "faces")) r.exhausted = e;
    if (!r.exhausted) r.exhausted = first_exhaustion(*r.tameness, "faces");
    return r;
}

Report check_family(const FamilyPolynomial& f, const Budget& budget, Report r) {
    const NewtonPolyhedron poly(f.generic_support());
    const auto cls = family_classification(f);
    r.polyhedron = polyhedron_json(poly, cls, essential_noncompact_faces(poly, cls));
    const auto adm = check_admissible(f, budget);
    r.admissibility = admissibility_json(adm);
    switch (adm.admissible) {
        case Check::Pass: r.verdict = "admissible"; break;
        case Check::Fail: r.verdict = "not_admissible"; break;
        default: r.verdict = "unknown"; break;
    }
    r.exhausted = first_exhaustion(r.admissibility->at("nondegeneracy"), "faces");
    if (!r.exhausted) r.exhausted = first_exhaustion(r.admissibility->at("uniform_tameness"), "certificates");
    return r;
}

}  // namespace

json polyhedron_json(const NewtonPolyhedron& poly, const CoordinateClassification& cls,
                     const std::vector<Face>& essential) {
    json facets = json::array();
    for (const auto& f : poly.facets()) facets.push_back({{"weight", f.weight}, {"value", f.value}});
    json faces = json::array();
    for (const auto& f : poly.faces())
        faces.push_back({{"id", f.id()},
                         {"dimension", f.dimension},
                         {"compact", f.compact},
                         {"direction", members_json(f.direction)}});
    json vanishing = json::array();
    for (const auto& s : cls.vanishing) vanishing.push_back(members_json(s));
    json nonvanishing = json::array();
    for (const auto& s : cls.nonvanishing) nonvanishing.push_back(members_json(s));
    json ess = json::array();
    for (const auto& f : essential) ess.push_back(f.id());
    return {{"n", poly.dimension()},
            {"vertices", points_json(poly.vertices())},
            {"facets", facets},
            {"faces", faces},
            {"vanishing_subspaces", vanishing},
            {"nonvanishing_subspaces", nonvanishing},
            {"essential_faces", ess}};
}

json radius_json(const std::optional<Radius>& r) {
    if (!r) return nullptr;
    json out = {{"kind", Radius::kind_name(r->kind())}, {"value", r->to_string()}};
    if (r->kind() == Radius::Kind::CertifiedInterval) {
        out["lower"] = r->lower().get_str();
        out["upper"] = r->upper().get_str();
    }
    return out;
}

json nondegeneracy_json(const NondegeneracyReport& r) {
    json faces = json::array();
    for (const auto& f : r.faces) {
        json item = {{"face", f.face.id()},
                     {"dimension", f.face.dimension},
                     {"face_function", to_string(f.face_function)},
                     {"status", to_string(f.status)}};
        if (!f.evidence.empty()) {
            json ev = json::array();
            for (const auto& g : f.evidence) ev.push_back(to_string(display_normalized(g)));
            item["evidence"] = ev;
        }
        if (f.exhausted) item["exhausted"] = exhaustion_json(*f.exhausted);
        faces.push_back(item);
    }
    return {{"verdict", to_string(r.verdict)}, {"faces", faces}};
}

json tameness_json(const TamenessSummary& s) {
    json faces = json::array();
    for (const auto& v : s.faces) {
        json item = {{"face", v.face.id()},
                     {"direction", members_json(v.face.direction)},
                     {"ring", v.names},
                     {"face_function", to_string(v.face_function, v.names)},
                     {"verdict", to_string(v.verdict)},
                     {"radius", radius_json(v.radius)},
                     {"obstruction", ideal_json(v.obstruction)}};
        if (v.exhausted) item["exhausted"] = exhaustion_json(*v.exhausted);
        faces.push_back(item);
    }
    json subspaces = json::array();
    for (const auto& st : s.subspaces)
        subspaces.push_back(
            {{"subspace", members_json(st.subspace)}, {"verdict", to_string(st.verdict)}, {"radius", radius_json(st.radius)}});
    return {{"verdict", to_string(s.verdict)}, {"r_nc", radius_json(s.r_nc)}, {"subspaces", subspaces}, {"faces", faces}};
}

json admissibility_json(const AdmissibilityReport& r) {
    json boundary = {{"independent", r.boundary.independent},
                     {"generic_vertices", points_json(r.boundary.generic_vertices)},
                     {"zero_vertices", points_json(r.boundary.zero_vertices)},
                     {"counterexample", r.boundary.counterexample ? json(*r.boundary.counterexample) : json(nullptr)}};
    json nd_faces = json::array();
    for (const auto& c : r.nondegeneracy.faces) {
        json item = {{"face", c.face.id()}, {"status", to_string(c.status)}, {"parameter_ideal", ideal_json(c.parameter_ideal)}};
        if (c.exhausted) item["exhausted"] = exhaustion_json(*c.exhausted);
        nd_faces.push_back(item);
    }
    json certs = json::array();
    for (const auto& c : r.tameness.certificates) {
        json item = {{"face", c.face.id()},
                     {"direction", members_json(c.face.direction)},
                     {"status", to_string(c.status)},
                     {"elimination", ideal_json(c.elimination)},
                     {"witness", c.witness ? json(to_string(display_normalized(*c.witness), c.elimination.ring))
                                           : json(nullptr)}};
        if (c.exhausted) item["exhausted"] = exhaustion_json(*c.exhausted);
        certs.push_back(item);
    }
    return {{"admissible", check_json(r.admissible)},
            {"boundary_independence", boundary},
            {"nondegeneracy", {{"verdict", to_string(r.nondegeneracy.verdict)}, {"faces", nd_faces}}},
            {"uniform_tameness", {{"verdict", to_string(r.tameness.verdict)}, {"certificates", certs}}},
            {"smoothness_radius", r.smoothness_radius}};
}

json stratification_json(const StratificationReport& r) {
    json strata = json::array();
    for (const auto& s : r.strata)
        strata.push_back({{"name", s.name()},
                          {"kind", std::string(1, s.kind)},
                          {"index", members_json(s.index)},
                          {"conditions", s.conditions},
                          {"dimension", s.dimension},
                          {"t_axis", s.t_axis}});
    return {{"strata", strata},
            {"counts", {{"A", r.count_a}, {"B", r.count_b}, {"C", r.count_c}}},
            {"hypersurface_is_union_of_strata", r.hypersurface_is_union_of_strata}};
}

json probe_json(const ProbeReport& r) {
    json pairs = json::array();
    for (const auto& p : r.pairs) {
        json coeffs = json::array();
        for (const auto& c : p.coefficients) coeffs.push_back(complex4(c));
        json item = {{"lower", members_json(p.lower)},
                     {"upper", members_json(p.upper)},
                     {"exponents", p.exponents},
                     {"coefficients", coeffs},
                     {"corrected", coordinate_name(p.corrected)},
                     {"trend", to_string(p.trend)},
                     {"last", p.last ? json(fixed4(*p.last)) : json(nullptr)},
                     {"slope", p.slope ? json(fixed4(*p.slope)) : json(nullptr)}};
        if (p.trend != CurvePair::Trend::Undefined) {
            json samples = json::array();
            for (const auto& s : p.samples)
                samples.push_back({{"k", s.k},
                                   {"ratio", s.ratio ? json(fixed4(*s.ratio)) : json(nullptr)},
                                   {"residual", fixed4(s.residual)}});
            item["samples"] = samples;
        }
        pairs.push_back(item);
    }
    return {{"evidence_only", true},
            {"verdict", r.verdict},
            {"seed", r.options.seed},
            {"grid", r.options.grid},
            {"tolerance", fixed4(r.options.tolerance)},
            {"pairs_per_target", r.options.pairs_per_target},
            {"defined_pairs", r.defined_pairs},
            {"pairs", pairs}};
}

Report run_request(const Request& request) {
    const auto parsed = parse_polynomial(request.text, request.n);
    const bool is_family = std::holds_alternative<FamilyPolynomial>(parsed);
    Report r;
    r.command = request.command;
    r.input = {{"source", request.source},
               {"polynomial", is_family ? to_string(std::get<FamilyPolynomial>(parsed))
                                        : to_string(std::get<SparsePolynomial>(parsed))},
               {"n", is_family ? std::get<FamilyPolynomial>(parsed).nvars() : std::get<SparsePolynomial>(parsed).nvars()},
               {"family", is_family}};
    r.meta = {{"tool", "tamegamma"}, {"version", kToolVersion}, {"budget", budget_json(request.budget)}};
    const auto as_family = [&]() {
        return is_family ? std::get<FamilyPolynomial>(parsed)
                         : FamilyPolynomial::constant_family(std::get<SparsePolynomial>(parsed));
    };
    try {
        if (request.command == "analyze") {
            if (is_family) throw PreconditionError("analyze expects a polynomial without t; use check-family");
            return analyze(std::get<SparsePolynomial>(parsed), request.budget, std::move(r));
        }
        if (request.command == "check-family") {
            if (!is_family) throw PreconditionError("check-family expects a family in t");
            return check_family(std::get<FamilyPolynomial>(parsed), request.budget, std::move(r));
        }
        if (request.command == "stratify") {
            r.stratification = stratification_json(build_stratification(as_family()));
            r.verdict = "stratified";
            return r;
        }
        if (request.command == "probe") {
            const auto probe = probe_whitney(as_family(), request.probe);
            r.probe = probe_json(probe);
            r.verdict = probe.verdict;
            return r;
        }
        if (request.command == "transform") {
            if (!request.power && request.convenient.empty())
                throw PreconditionError("transform needs --power or --convenient");
            json t = json::object();
            if (request.power) t["power"] = *request.power;
            if (!request.convenient.empty()) t["convenient"] = request.convenient;
            if (is_family) {
                auto f = std::get<FamilyPolynomial>(parsed);
                if (request.power) f = substitute_power(f, *request.power);
                if (!request.convenient.empty()) f = make_convenient(f, request.convenient);
                r.input["transform"] = t;
                r.input["transformed"] = to_string(f);
                return check_family(f, request.budget, std::move(r));
            }
            auto p = std::get<SparsePolynomial>(parsed);
            if (request.power) p = substitute_power(p, *request.power);
            if (!request.convenient.empty()) p = make_convenient(p, request.convenient);
            r.input["transform"] = t;
            r.input["transformed"] = to_string(p);
            return analyze(p, request.budget, std::move(r));
        }
    } catch (const std::invalid_argument& e) {
        throw PreconditionError(e.what());
    }
    throw PreconditionError("unknown command: " + request.command);
}

json to_json(const Report& r) {
    auto opt = [](const std::optional<json>& j) { return j ? *j : json(nullptr); };
    json out = {{"input", r.input},
                {"command", r.command},
                {"polyhedron", opt(r.polyhedron)},
                {"nondegeneracy", opt(r.nondegeneracy)},
                {"tameness", opt(r.tameness)},
                {"admissibility", opt(r.admissibility)},
                {"stratification", opt(r.stratification)},
                {"probe", opt(r.probe)},
                {"verdict", r.verdict},
                {"meta", r.meta}};
    if (r.exhausted) out["exhausted"] = *r.exhausted;
    return out;
}

Report report_from_json(const json& j) {
    auto opt = [&j](const char* key) -> std::optional<json> {
        if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
        return j.at(key);
    };
    Report r;
    r.command = j.at("command").get<std::string>();
    r.input = j.at("input");
    r.polyhedron = opt("polyhedron");
    r.nondegeneracy = opt("nondegeneracy");
    r.tameness = opt("tameness");
    r.admissibility = opt("admissibility");
    r.stratification = opt("stratification");
    r.probe = opt("probe");
    r.verdict = j.at("verdict").get<std::string>();
    r.exhausted = opt("exhausted");
    r.meta = j.at("meta");
    return r;
}

std::string emit_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

Report parse_report(const std::string& text) { return report_from_json(json::parse(text)); }

std::string emit_text(const Report& r) {
    std::ostringstream out;
    auto list = [](const json& arr) {
        std::string s;
        for (const auto& x : arr) {
            if (!s.empty()) s += ", ";
            s += x.get<std::string>();
        }
        return s;
    };
    auto subspace = [](const json& arr) {
        std::string s = "{";
        for (std::size_t k = 0; k < arr.size(); ++k) s += (k ? "," : "") + std::to_string(arr[k].get<int>());
        return s + "}";
    };
    auto radius = [](const json& j) { return j.is_null() ? std::string("none") : j.at("value").get<std::string>(); };

    out << "verdict: " << r.verdict << "\n";
    out << "command: " << r.command << "\n";
    out << "input: " << r.input.at("polynomial").get<std::string>() << "\n";
    if (r.input.contains("transformed")) out << "transformed: " << r.input.at("transformed").get<std::string>() << "\n";
    if (r.polyhedron) {
        const auto& p = *r.polyhedron;
        out << "polyhedron: " << p.at("vertices").size() << " vertices, " << p.at("faces").size() << " faces\n";
        std::string v;
        for (const auto& s : p.at("vanishing_subspaces")) v += (v.empty() ? "" : " ") + subspace(s);
        out << "  vanishing subspaces: " << v << "\n";
        for (const auto& f : p.at("essential_faces")) out << "  essential face " << f.get<std::string>() << "\n";
    }
    if (r.nondegeneracy) {
        out << "nondegeneracy: " << r.nondegeneracy->at("verdict").get<std::string>() << "\n";
        for (const auto& f : r.nondegeneracy->at("faces")) {
            out << "  " << f.at("face").get<std::string>() << ": " << f.at("status").get<std::string>();
            if (f.contains("evidence")) out << ", critical ideal <" << list(f.at("evidence")) << ">";
            out << "\n";
        }
    }
    if (r.tameness) {
        out << "tameness: " << r.tameness->at("verdict").get<std::string>() << ", r_nc = " << radius(r.tameness->at("r_nc"))
            << "\n";
        for (const auto& f : r.tameness->at("faces")) {
            out << "  " << f.at("face").get<std::string>() << ": " << f.at("verdict").get<std::string>();
            if (!f.at("radius").is_null()) out << ", radius " << radius(f.at("radius"));
            out << ", E = <" << list(f.at("obstruction").at("generators")) << ">\n";
        }
    }
    if (r.admissibility) {
        const auto& a = *r.admissibility;
        out << "admissible: " << a.at("admissible").dump() << "\n";
        const auto& b = a.at("boundary_independence");
        out << "  boundary independence: " << (b.at("independent").get<bool>() ? "pass" : "fail");
        if (!b.at("counterexample").is_null()) out << ", vertex " << b.at("counterexample").dump();
        out << "\n";
        out << "  nondegenerate for small t: " << a.at("nondegeneracy").at("verdict").get<std::string>() << "\n";
        for (const auto& f : a.at("nondegeneracy").at("faces"))
            out << "    " << f.at("face").get<std::string>() << ": " << f.at("status").get<std::string>() << ", E(t) = <"
                << list(f.at("parameter_ideal").at("generators")) << ">\n";
        out << "  uniformly tame: " << a.at("uniform_tameness").at("verdict").get<std::string>() << "\n";
        for (const auto& c : a.at("uniform_tameness").at("certificates")) {
            out << "    " << c.at("face").get<std::string>() << ": " << c.at("status").get<std::string>() << ", E = <"
                << list(c.at("elimination").at("generators")) << ">";
            if (!c.at("witness").is_null()) out << ", witness " << c.at("witness").get<std::string>();
            out << "\n";
        }
        out << "  smoothness radius: " << a.at("smoothness_radius").get<std::string>() << "\n";
    }
    if (r.stratification) {
        out << "strata:\n";
        for (const auto& s : r.stratification->at("strata")) {
            out << "  " << s.at("name").get<std::string>() << " (dim " << s.at("dimension").get<int>() << "): "
                << s.at("conditions").get<std::string>();
            if (s.at("t_axis").get<bool>()) out << " [t-axis]";
            out << "\n";
        }
    }
    if (r.probe) {
        const auto& p = *r.probe;
        out << "probe (numerical evidence only): " << p.at("verdict").get<std::string>() << ", "
            << p.at("defined_pairs").get<int>() << " of " << p.at("pairs").size() << " arcs defined\n";
        for (const auto& c : p.at("pairs")) {
            if (c.at("trend") == "undefined") continue;
            out << "  " << subspace(c.at("upper")) << " over " << subspace(c.at("lower")) << ": "
                << c.at("trend").get<std::string>() << ", last ratio " << c.at("last").get<std::string>() << "\n";
        }
    }
    if (r.exhausted)
        out << "exhausted: " << r.exhausted->at("limit").get<std::string>() << " = " << r.exhausted->at("value").dump()
            << "\n";
    return out.str();
}

}  // namespace tamegamma
