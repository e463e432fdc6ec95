#include "qappell/serialize.hpp"

#include "qappell/error.hpp"

#include <sstream>
#include <utility>

namespace qappell {

Format format_from_string(const std::string& name) {
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    if (name == "latex") return Format::Latex;
    throw ParseError("unknown output format '" + name + "'");
}

Json poly_to_json(const QPoly& f) {
    Json out = Json::array();
    for (const auto& c : f.coeffs()) out.push_back(to_string(c));
    return out;
}

QPoly poly_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("a polynomial must be a JSON array of strings");
    std::vector<Rational> coeffs;
    coeffs.reserve(j.size());
    for (const auto& c : j) {
        if (!c.is_string()) throw ParseError("polynomial coefficients must be strings");
        coeffs.push_back(parse_rational(c.get<std::string>()));
    }
    return QPoly(std::move(coeffs));
}

namespace {

void put(Json& j, const char* key, const std::optional<Rational>& value) {
    if (value) j[key] = to_string(*value);
}

std::optional<Rational> get(const Json& j, const char* key) {
    if (!j.contains(key)) return std::nullopt;
    const auto& v = j.at(key);
    if (!v.is_string()) throw ParseError(std::string("parameter '") + key + "' must be a string");
    return parse_rational(v.get<std::string>());
}

}  // namespace

Json provenance_to_json(const Provenance& provenance) {
    Json j;
    j["family"] = to_string(provenance.kind);
    put(j, "a", provenance.a);
    put(j, "alpha", provenance.alpha);
    put(j, "beta", provenance.beta);
    put(j, "lambda", provenance.lambda);
    put(j, "q", provenance.q);
    return j;
}

Provenance provenance_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("family params must be a JSON object");
    Provenance p;
    if (j.contains("family")) {
        if (!j.at("family").is_string()) throw ParseError("'family' must be a string");
        p.kind = family_kind_from_string(j.at("family").get<std::string>());
    }
    p.a = get(j, "a");
    p.alpha = get(j, "alpha");
    p.beta = get(j, "beta");
    p.lambda = get(j, "lambda");
    p.q = get(j, "q");
    return p;
}

Json family_to_json(const PolyFamily& family) {
    Json params = provenance_to_json(family.provenance());
    params["max_degree"] = family.max_index();
    Json members = Json::array();
    for (const auto& m : family.members()) members.push_back(poly_to_json(m));
    Json out;
    out["params"] = std::move(params);
    out["members"] = std::move(members);
    return out;
}

PolyFamily family_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("members")) {
        throw ParseError("a family document needs a 'members' array");
    }
    const auto& members = j.at("members");
    if (!members.is_array()) throw ParseError("'members' must be an array");
    std::vector<QPoly> polys;
    polys.reserve(members.size());
    for (const auto& m : members) polys.push_back(poly_from_json(m));
    Provenance prov = j.contains("params") ? provenance_from_json(j.at("params")) : Provenance{};
    return PolyFamily(std::move(polys), std::move(prov));
}

PolyFamily family_from_json_text(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return family_from_json(j);
}

namespace {

std::string monomial_label(long i) {
    if (i == 0) return "1";
    if (i == 1) return "x";
    return "x^" + std::to_string(i);
}

}  // namespace

std::string family_to_csv(const PolyFamily& family) {
    std::ostringstream os;
    os << "n,terms\n";
    for (std::size_t n = 0; n < family.size(); ++n) {
        os << n << ",";
        const QPoly& p = family[n];
        for (long i = p.degree(); i >= 0; --i) {
            os << monomial_label(i) << ": " << to_string(p.coeff(static_cast<std::size_t>(i)));
            if (i > 0) os << ", ";
        }
        os << "\n";
    }
    return os.str();
}

std::string family_to_latex(const PolyFamily& family) {
    std::ostringstream os;
    os << "\\begin{tabular}{rl}\n";
    os << "$n$ & $P_n(x)$ \\\\\n\\hline\n";
    for (std::size_t n = 0; n < family.size(); ++n) {
        os << n << " & $" << family[n].latex() << "$ \\\\\n";
    }
    os << "\\end{tabular}\n";
    return os.str();
}

std::string render_family(const PolyFamily& family, Format format) {
    switch (format) {
        case Format::Json: return family_to_json(family).dump(2) + "\n";
        case Format::Csv: return family_to_csv(family);
        case Format::Latex: return family_to_latex(family);
    }
    return {};
}

std::string render_moments(const MomentFunctional& functional, const Provenance& provenance,
                           Format format) {
    const auto mu = functional.moments();
    std::ostringstream os;
    switch (format) {
        case Format::Json: {
            Json params = provenance_to_json(provenance);
            params["count"] = mu.size();
            Json values = Json::array();
            for (const auto& m : mu) values.push_back(to_string(m));
            Json out;
            out["params"] = std::move(params);
            out["moments"] = std::move(values);
            os << out.dump(2) << "\n";
            break;
        }
        case Format::Csv:
            os << "k,mu_k\n";
            for (std::size_t k = 0; k < mu.size(); ++k) os << k << "," << to_string(mu[k]) << "\n";
            break;
        case Format::Latex:
            os << "\\begin{tabular}{rl}\n$k$ & $\\mu_k$ \\\\\n\\hline\n";
            for (std::size_t k = 0; k < mu.size(); ++k) {
                os << k << " & $" << QPoly::constant(mu[k]).latex() << "$ \\\\\n";
            }
            os << "\\end{tabular}\n";
            break;
    }
    return os.str();
}

}  // namespace qappell
