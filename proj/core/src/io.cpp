#include "ho/io.hpp"

#include "ho/errors.hpp"
#include "ho/grid.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

namespace ho::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what)
{
    throw ParseError(path + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& path)
{
    if (!j.is_object()) fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(path + "." + key, "missing field");
    return *it;
}

double number(const json& j, const std::string& path)
{
    if (!j.is_number()) fail(path, "expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) fail(path, "expected a finite number");
    return v;
}

double number_field(const json& j, const char* key, const std::string& path)
{
    return number(field(j, key, path), path + "." + key);
}

double number_or(const json& j, const char* key, double fallback, const std::string& path)
{
    auto it = j.find(key);
    return it == j.end() ? fallback : number(*it, path + "." + key);
}

int integer(const json& j, const std::string& path)
{
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<int>();
}

const json& array(const json& j, const std::string& path)
{
    if (!j.is_array()) fail(path, "expected an array");
    return j;
}

cplx complex_value(const json& j, const std::string& path)
{
    if (j.is_number()) return {number(j, path), 0.0};
    if (!j.is_array() || j.size() != 2) fail(path, "expected [re, im]");
    return {number(j[0], path + "[0]"), number(j[1], path + "[1]")};
}

std::string kind_of(const json& j, const std::string& path)
{
    const json& k = field(j, "kind", path);
    if (!k.is_string()) fail(path + ".kind", "expected a string");
    return k.get<std::string>();
}

// Runs a constructor, turning its invariant violations into parse errors at `path`.
template <class F>
auto guarded(const std::string& path, F&& make) -> decltype(make())
{
    try {
        return make();
    } catch (const DomainError& e) {
        fail(path, e.what());
    }
}

std::string idx(const std::string& path, size_t i) { return path + "[" + std::to_string(i) + "]"; }

}  // namespace

json load_json(std::string_view text_or_path)
{
    std::string text(text_or_path);
    const size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw ParseError("empty JSON input");
    if (text[first] != '{' && text[first] != '[') {
        std::ifstream in(text);
        if (!in) throw ParseError("cannot open spec file '" + text + "'");
        std::ostringstream os;
        os << in.rdbuf();
        text = os.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

GrowthFunction parse_growth(const json& j, const std::string& path)
{
    const std::string kind = kind_of(j, path);
    if (kind == "power") {
        const double p = number_field(j, "p", path);
        if (!(p > 0.0)) fail(path + ".p", "exponent must be positive");
        return GrowthFunction::power(p);
    }
    if (kind == "power_log") {
        const double p = number_field(j, "p", path);
        const double a = number_field(j, "a", path);
        return guarded(path, [&] { return GrowthFunction::power_log(p, a); });
    }
    if (kind == "exp_minus_one") return GrowthFunction::exp_minus_one();
    if (kind == "table") {
        const json& knots = array(field(j, "knots", path), path + ".knots");
        std::vector<GrowthFunction::Knot> k;
        for (size_t i = 0; i < knots.size(); ++i) {
            const std::string p = idx(path + ".knots", i);
            if (!knots[i].is_array() || knots[i].size() != 2) fail(p, "expected [t, y]");
            k.push_back({number(knots[i][0], p + "[0]"), number(knots[i][1], p + "[1]")});
        }
        bool extrapolate = false;
        if (auto it = j.find("extrapolate"); it != j.end()) {
            if (!it->is_boolean()) fail(path + ".extrapolate", "expected a boolean");
            extrapolate = it->get<bool>();
        }
        return guarded(path + ".knots", [&] { return GrowthFunction::table(k, extrapolate); });
    }
    if (kind == "complementary") return complementary(parse_growth(field(j, "of", path), path + ".of"));
    if (kind == "convexified") {
        const GrowthFunction of = parse_growth(field(j, "of", path), path + ".of");
        const double p = number_field(j, "p", path);
        return guarded(path, [&] { return convexify_power(of, p); });
    }
    if (kind == "product_inverse" || kind == "ratio_inverse") {
        const GrowthFunction f1 = parse_growth(field(j, "f1", path), path + ".f1");
        const GrowthFunction f2 = parse_growth(field(j, "f2", path), path + ".f2");
        return kind == "product_inverse" ? product_inverse_compose(f1, f2) : ratio_inverse_compose(f1, f2);
    }
    fail(path + ".kind", "unknown growth-function kind '" + kind + "'");
}

BoundaryFunction parse_boundary(const json& j, int n, const std::string& path)
{
    const std::string kind = kind_of(j, path);
    if (kind == "samples") {
        const json& data = array(field(j, "data", path), path + ".data");
        std::vector<cplx> s;
        for (size_t i = 0; i < data.size(); ++i) s.push_back(complex_value(data[i], idx(path + ".data", i)));
        if (s.size() < 16 || !is_power_of_two(static_cast<long>(s.size()))) {
            fail(path + ".data", "sample count must be a power of two >= 16, got " + std::to_string(s.size()));
        }
        return BoundaryFunction::from_samples(std::move(s));
    }
    if (kind == "coeffs") {
        const json& data = array(field(j, "data", path), path + ".data");
        std::vector<std::pair<int, cplx>> modes;
        for (size_t i = 0; i < data.size(); ++i) {
            const std::string p = idx(path + ".data", i);
            if (!data[i].is_array() || data[i].size() != 3) fail(p, "expected [n, re, im]");
            modes.emplace_back(integer(data[i][0], p + "[0]"),
                               cplx{number(data[i][1], p + "[1]"), number(data[i][2], p + "[2]")});
        }
        return guarded(path + ".data", [&] { return BoundaryFunction::from_modes(modes, n); });
    }
    if (kind == "builtin") {
        const json& name_j = field(j, "name", path);
        if (!name_j.is_string()) fail(path + ".name", "expected a string");
        const std::string name = name_j.get<std::string>();
        const json params = j.contains("params") ? j.at("params") : json::object();
        const std::string pp = path + ".params";
        if (!params.is_object()) fail(pp, "expected an object");
        const std::vector<double> theta = circle_angles(n);
        std::vector<cplx> s(static_cast<size_t>(n));
        if (name == "cos") {
            const int k = params.contains("k") ? integer(params.at("k"), pp + ".k") : 1;
            const double amp = number_or(params, "amplitude", 1.0, pp);
            for (size_t i = 0; i < s.size(); ++i) s[i] = amp * std::cos(k * theta[i]);
        } else if (name == "indicator") {
            const double a = number_or(params, "start", 0.0, pp);
            const double b = number_or(params, "end", M_PI, pp);
            if (!(a < b)) fail(pp, "indicator requires start < end");
            for (size_t i = 0; i < s.size(); ++i) {
                // Compare on the circle: shift theta into [a, a + 2pi).
                const double t = a + std::fmod(std::fmod(theta[i] - a, 2.0 * M_PI) + 2.0 * M_PI, 2.0 * M_PI);
                s[i] = (t < b) ? 1.0 : 0.0;
            }
        } else if (name == "poly") {
            const json& coeffs = array(field(params, "coeffs", pp), pp + ".coeffs");
            std::vector<std::pair<int, cplx>> modes;
            for (size_t k = 0; k < coeffs.size(); ++k) {
                modes.emplace_back(static_cast<int>(k), complex_value(coeffs[k], idx(pp + ".coeffs", k)));
            }
            return guarded(pp + ".coeffs", [&] { return BoundaryFunction::from_modes(modes, n); });
        } else {
            fail(path + ".name", "unknown builtin '" + name + "' (expected poly, cos or indicator)");
        }
        return BoundaryFunction::from_samples(std::move(s));
    }
    fail(path + ".kind", "unknown boundary-function kind '" + kind + "'");
}

AnalyticFunction parse_analytic(const json& j, int n, const std::string& path)
{
    const std::string kind = kind_of(j, path);
    if (kind == "taylor") {
        const json& coeffs = array(field(j, "coeffs", path), path + ".coeffs");
        if (coeffs.empty()) fail(path + ".coeffs", "at least one coefficient is required");
        std::vector<cplx> a;
        for (size_t k = 0; k < coeffs.size(); ++k) a.push_back(complex_value(coeffs[k], idx(path + ".coeffs", k)));
        if (static_cast<int>(a.size()) > n / 2) {
            fail(path + ".coeffs", std::to_string(a.size()) + " coefficients exceed N/2 = " + std::to_string(n / 2));
        }
        return AnalyticFunction(std::move(a));
    }
    if (kind == "from_boundary") return szego_project(parse_boundary(field(j, "fn", path), n, path + ".fn"));
    fail(path + ".kind", "unknown analytic-function kind '" + kind + "'");
}

ZeroList parse_zeros(const json& j, const std::string& path)
{
    const json& list = j.is_object() ? field(j, "zeros", path) : j;
    const std::string lp = j.is_object() ? path + ".zeros" : path;
    array(list, lp);
    ZeroList z;
    for (size_t i = 0; i < list.size(); ++i) {
        const cplx v = complex_value(list[i], idx(lp, i));
        if (!(std::abs(v) <= 1.0 - 1e-6)) fail(idx(lp, i), "zero lies outside the disk |z| <= 1 - 1e-6");
        z.zeros.push_back(v);
    }
    return z;
}

AtomicMeasure parse_atoms(const json& j, const std::string& path)
{
    const json& list = j.is_object() ? field(j, "atoms", path) : j;
    const std::string lp = j.is_object() ? path + ".atoms" : path;
    array(list, lp);
    AtomicMeasure m;
    for (size_t i = 0; i < list.size(); ++i) {
        const std::string p = idx(lp, i);
        if (!list[i].is_array() || list[i].size() != 2) fail(p, "expected [angle, mass]");
        const double angle = number(list[i][0], p + "[0]");
        const double mass = number(list[i][1], p + "[1]");
        if (!(angle >= 0.0 && angle < 2.0 * M_PI)) fail(p + "[0]", "angle must lie in [0, 2pi)");
        if (!(mass > 0.0)) fail(p + "[1]", "mass must be positive");
        m.atoms.push_back({angle, mass});
    }
    return m;
}

ExperimentSpec parse_experiment(const json& j, int n, const std::string& path)
{
    if (!j.is_object()) fail(path, "expected an object");
    ExperimentSpec spec;
    spec.phi1 = parse_growth(field(j, "phi1", path), path + ".phi1");
    spec.phi2 = parse_growth(field(j, "phi2", path), path + ".phi2");
    const json& family = array(field(j, "family", path), path + ".family");
    for (size_t i = 0; i < family.size(); ++i) {
        const std::string p = idx(path + ".family", i);
        std::string tag = "b[" + std::to_string(i) + "]";
        if (family[i].is_object() && family[i].contains("tag")) {
            if (!family[i]["tag"].is_string()) fail(p + ".tag", "expected a string");
            tag = family[i]["tag"].get<std::string>();
        }
        spec.family.push_back({tag, parse_analytic(family[i], n, p)});
    }
    if (auto it = j.find("dictionary"); it != j.end()) {
        const std::string p = path + ".dictionary";
        if (!it->is_object()) fail(p, "expected an object");
        if (it->contains("monomials")) spec.dictionary.monomials = integer(it->at("monomials"), p + ".monomials");
        if (it->contains("random")) spec.dictionary.random = integer(it->at("random"), p + ".random");
        if (it->contains("degree")) spec.dictionary.degree = integer(it->at("degree"), p + ".degree");
        if (it->contains("kernels")) {
            if (!it->at("kernels").is_boolean()) fail(p + ".kernels", "expected a boolean");
            spec.dictionary.kernels = it->at("kernels").get<bool>();
        }
        if (spec.dictionary.monomials < 0 || spec.dictionary.random < 0 || spec.dictionary.degree < 0) {
            fail(p, "dictionary sizes must be nonnegative");
        }
    }
    if (auto it = j.find("seed"); it != j.end()) {
        if (!it->is_number_unsigned() && !(it->is_number_integer() && it->get<long long>() >= 0)) {
            fail(path + ".seed", "expected a nonnegative integer");
        }
        spec.seed = it->get<std::uint64_t>();
    }
    return spec;
}

Spec parse_spec(const json& j, int n)
{
    if (j.is_object() && j.contains("phi1")) return parse_experiment(j, n);
    const std::string kind = kind_of(j, "spec");
    static const char* growth[] = {"power", "power_log", "exp_minus_one", "table", "complementary",
                                   "convexified", "product_inverse", "ratio_inverse"};
    for (const char* k : growth) {
        if (kind == k) return parse_growth(j, "spec");
    }
    if (kind == "samples" || kind == "coeffs" || kind == "builtin") return parse_boundary(j, n, "spec");
    if (kind == "taylor" || kind == "from_boundary") return parse_analytic(j, n, "spec");
    fail("spec.kind", "unknown kind '" + kind + "'");
}

// ---------------------------------------------------------------------------

namespace {

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

json to_json(const GrowthFunction& f)
{
    using Kind = GrowthFunction::Kind;
    json j;
    j["kind"] = to_string(f.kind());
    switch (f.kind()) {
    case Kind::power: j["p"] = f.exponent(); break;
    case Kind::power_log:
        j["p"] = f.exponent();
        j["a"] = f.log_exponent();
        break;
    case Kind::exp_minus_one: break;
    case Kind::table: {
        json knots = json::array();
        for (const auto& k : f.knots()) knots.push_back(json::array({k.t, k.y}));
        j["knots"] = std::move(knots);
        j["extrapolate"] = f.extrapolates();
        break;
    }
    case Kind::complementary: j["of"] = to_json(f.operands()[0]); break;
    case Kind::convexified:
        j["of"] = to_json(f.operands()[0]);
        j["p"] = f.exponent();
        break;
    case Kind::product_inverse:
    case Kind::ratio_inverse:
        j["f1"] = to_json(f.operands()[0]);
        j["f2"] = to_json(f.operands()[1]);
        break;
    }
    return j;
}

json to_json(const AnalyticFunction& g)
{
    json coeffs = json::array();
    for (const cplx& c : g.coefficients()) coeffs.push_back(complex_json(c));
    return {{"kind", "taylor"}, {"coeffs", std::move(coeffs)}};
}

json to_json(const BoundaryFunction& g)
{
    json data = json::array();
    for (const cplx& c : g.samples()) data.push_back(complex_json(c));
    return {{"kind", "samples"}, {"data", std::move(data)}};
}

json to_json(const NormReport& r)
{
    return {{"value", r.value}, {"bracket", {r.lo, r.hi}}, {"iterations", r.iterations}, {"warnings", r.warnings}};
}

json to_json(const RadialReport& r)
{
    return {{"radii", r.radii},
            {"norms", r.norms},
            {"boundary_norm", r.boundary_norm},
            {"converged", r.converged},
            {"warnings", r.warnings}};
}

json to_json(const TypeEstimate& t)
{
    return {{"lower_exponent", optional_json(t.lower_exponent)},
            {"upper_exponent", optional_json(t.upper_exponent)},
            {"constant_C", t.constant_C},
            {"residual", t.residual},
            {"fitted_lower", t.fitted_lower},
            {"fitted_upper", t.fitted_upper},
            {"pairs_used", t.pairs_used},
            {"warnings", t.warnings}};
}

json to_json(const IndexEstimate& t)
{
    return {{"a_lower", t.a_lower}, {"b_upper", t.b_upper}, {"grid_used", t.grid_used}};
}

json to_json(const DoublingResult& d)
{
    return {{"delta2", d.delta2},
            {"K", std::isfinite(d.K) ? json(d.K) : json("inf")},
            {"nabla2", d.nabla2},
            {"C", d.C}};
}

json to_json(const FactorizationReport& r)
{
    json factors = json::object();
    for (const auto& [name, g] : r.factors) factors[name] = to_json(g);
    json ids = json::array();
    for (const auto& id : r.norm_identities) {
        ids.push_back({{"name", id.name}, {"lhs", id.lhs}, {"rhs", id.rhs}, {"ratio", id.ratio}});
    }
    json diag = json::object();
    for (const auto& [name, v] : r.diagnostics) diag[name] = v;
    return {{"factors", std::move(factors)},
            {"norm_identities", std::move(ids)},
            {"diagnostics", std::move(diag)},
            {"reconstruction_residual", r.reconstruction_residual},
            {"warnings", r.warnings}};
}

json to_json(const HankelReport& r)
{
    return {{"family_tag", r.family_tag},
            {"symbol_norm", r.symbol_norm},
            {"operator_estimate", r.operator_estimate},
            {"ratio", r.ratio},
            {"svd_reference", r.svd_reference},
            {"best_element", r.best_element}};
}

json to_json(const ExperimentResult& r)
{
    json rows = json::array();
    for (const auto& row : r.rows) rows.push_back(to_json(row));
    return {{"rows", std::move(rows)},
            {"band", {{"lo", r.band_lo}, {"hi", r.band_hi}, {"ratio", r.band_ratio}, {"rows", r.band_rows}}},
            {"criterion", r.criterion},
            {"notes", r.notes}};
}

json to_json(const HankelMatrix& m)
{
    json rows = json::array();
    for (int j = 0; j < m.size(); ++j) {
        json row = json::array();
        for (int k = 0; k < m.size(); ++k) row.push_back(complex_json(m.at(j, k)));
        rows.push_back(std::move(row));
    }
    return {{"size", m.size()}, {"entries", std::move(rows)}};
}

std::string experiment_csv(const ExperimentResult& r)
{
    std::ostringstream os;
    os << std::setprecision(17);
    os << "family_tag,symbol_norm,operator_estimate,ratio,schema_version\n";
    for (const auto& row : r.rows) {
        std::string tag = row.family_tag;
        const bool quote = tag.find_first_of(",\"\n") != std::string::npos;
        if (quote) {
            std::string escaped;
            for (char c : tag) {
                if (c == '"') escaped += '"';
                escaped += c;
            }
            tag = "\"" + escaped + "\"";
        }
        os << tag << ',' << row.symbol_norm << ',' << row.operator_estimate << ',' << row.ratio << ','
           << kSchemaVersion << '\n';
    }
    return os.str();
}

}  // namespace ho::io
