#include "qcreg/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qcreg {

json scalar_to_json(const Cyclotomic& c) {
    json coeffs = json::array();
    for (const auto& r : c.coeffs()) coeffs.push_back(format_rational(r));
    return json{{"N", c.order()}, {"coeffs", coeffs}};
}

Cyclotomic scalar_from_json(const json& j) {
    long n = j.at("N").get<long>();
    std::vector<Rational> coeffs;
    for (const auto& s : j.at("coeffs")) coeffs.push_back(parse_rational(s.get<std::string>()));
    if (static_cast<long>(coeffs.size()) != euler_phi(n))
        throw std::invalid_argument("scalar: coefficient count must be phi(N)");
    return Cyclotomic(n, std::move(coeffs));
}

json element_to_json(const Element& e) {
    json coords = json::array();
    for (const auto& c : e.coords) coords.push_back(scalar_to_json(c));
    return json{{"coords", coords}};
}

Element element_from_json(const json& j) {
    Element e;
    for (const auto& c : j.at("coords")) e.coords.push_back(scalar_from_json(c));
    return e;
}

json algebra_to_json(const Algebra& a) {
    json unit = json::array();
    for (const auto& c : a.unit().coords) unit.push_back(scalar_to_json(c));
    json structure = json::array();
    for (const auto& [ij, terms] : a.structure())
        for (const auto& [k, c] : terms)
            structure.push_back(json::array({ij.first, ij.second, k, scalar_to_json(c)}));
    json components;
    if (a.components()) {
        components = json::array();
        for (const auto& [off, size] : *a.components()) components.push_back(json::array({off, size}));
    } else {
        components = nullptr;
    }
    return json{{"dim", a.dim()},
                {"N", a.conductor()},
                {"unit", unit},
                {"structure", structure},
                {"components", components}};
}

AlgebraPtr algebra_from_json(const json& j) {
    long dim = j.at("dim").get<long>();
    Element unit;
    for (const auto& c : j.at("unit")) unit.coords.push_back(scalar_from_json(c));
    Algebra::StructureMap s;
    for (const auto& row : j.at("structure")) {
        if (!row.is_array() || row.size() != 4)
            throw std::invalid_argument("algebra: structure rows must be [i,j,k,scalar]");
        long i = row[0].get<long>(), jj = row[1].get<long>(), k = row[2].get<long>();
        if (i < 0 || i >= dim || jj < 0 || jj >= dim || k < 0 || k >= dim)
            throw std::invalid_argument("algebra: structure index out of range");
        s[{i, jj}].emplace_back(k, scalar_from_json(row[3]));
    }
    std::optional<std::vector<std::pair<long, long>>> comps;
    if (j.contains("components") && !j.at("components").is_null()) {
        comps.emplace();
        for (const auto& c : j.at("components"))
            comps->emplace_back(c[0].get<long>(), c[1].get<long>());
    }
    return std::make_shared<Algebra>(dim, std::move(s), std::move(unit), std::move(comps));
}

json decomposition_to_json(const Decomposition& d) {
    json comps = json::array();
    for (const auto& comp : d.components) {
        json vecs = json::array();
        for (const auto& v : comp) {
            json coords = json::array();
            for (const auto& c : v.coords) coords.push_back(scalar_to_json(c));
            vecs.push_back(coords);
        }
        comps.push_back(vecs);
    }
    return json{{"algebra", algebra_to_json(*d.algebra)}, {"components", comps}};
}

Decomposition decomposition_from_json(const json& j, const std::string& dir) {
    Decomposition d;
    const json& alg = j.at("algebra");
    if (alg.is_string()) {
        std::ifstream in(dir + "/" + alg.get<std::string>());
        if (!in) throw std::invalid_argument("decomposition: cannot open algebra file " + alg.get<std::string>());
        json aj;
        in >> aj;
        d.algebra = algebra_from_json(aj);
    } else {
        d.algebra = algebra_from_json(alg);
    }
    for (const auto& comp : j.at("components")) {
        std::vector<Element> vecs;
        for (const auto& coords : comp) {
            Element v;
            for (const auto& c : coords) v.coords.push_back(scalar_from_json(c));
            if (static_cast<long>(v.coords.size()) != d.algebra->dim())
                throw std::invalid_argument("decomposition: component vector length mismatch");
            vecs.push_back(std::move(v));
        }
        d.components.push_back(std::move(vecs));
    }
    return d;
}

json cayley_to_json(const CayleyTable& t) {
    return json{{"m", t.m}, {"identity", t.identity}, {"table", t.table}};
}

CayleyTable cayley_from_json(const json& j) {
    CayleyTable t;
    t.m = j.at("m").get<long>();
    t.identity = j.at("identity").get<long>();
    t.table = j.at("table").get<std::vector<std::vector<long>>>();
    return t;
}

json cocycle_to_json(const Cocycle& a) {
    json values = json::array();
    for (const auto& row : a.values) {
        json r = json::array();
        for (const auto& c : row) r.push_back(scalar_to_json(c));
        values.push_back(r);
    }
    return json{{"group", cayley_to_json(a.group)}, {"values", values}};
}

Cocycle cocycle_from_json(const json& j) {
    Cocycle a;
    a.group = cayley_from_json(j.at("group"));
    for (const auto& row : j.at("values")) {
        std::vector<Cyclotomic> r;
        for (const auto& c : row) r.push_back(scalar_from_json(c));
        a.values.push_back(std::move(r));
    }
    return a;
}

json theta_to_json(const ThetaTable& t) {
    json entries = json::array();
    json constrained = json::array();
    for (long i = 0; i < t.m; ++i) {
        json er = json::array(), cr = json::array();
        for (long j = 0; j < t.m; ++j) {
            er.push_back(scalar_to_json(t.entries[static_cast<size_t>(i)][static_cast<size_t>(j)]));
            cr.push_back(static_cast<bool>(t.constrained[static_cast<size_t>(i)][static_cast<size_t>(j)]));
        }
        entries.push_back(er);
        constrained.push_back(cr);
    }
    return json{{"m", t.m}, {"entries", entries}, {"constrained", constrained}};
}

ThetaTable theta_from_json(const json& j) {
    ThetaTable t;
    t.m = j.at("m").get<long>();
    for (const auto& row : j.at("entries")) {
        std::vector<Cyclotomic> r;
        for (const auto& c : row) r.push_back(scalar_from_json(c));
        t.entries.push_back(std::move(r));
    }
    if (j.contains("constrained"))
        t.constrained = j.at("constrained").get<std::vector<std::vector<bool>>>();
    else
        t.constrained.assign(static_cast<size_t>(t.m),
                             std::vector<bool>(static_cast<size_t>(t.m), true));
    if (static_cast<long>(t.entries.size()) != t.m)
        throw std::invalid_argument("theta: row count mismatch");
    for (const auto& r : t.entries)
        if (static_cast<long>(r.size()) != t.m) throw std::invalid_argument("theta: column count mismatch");
    return t;
}

json poly_to_json(const MultilinearPoly& p) {
    json terms = json::array();
    for (const auto& [perm, coeff] : p.terms)
        terms.push_back(json{{"perm", perm}, {"coeff", scalar_to_json(coeff)}});
    return json{{"n", p.degree}, {"terms", terms}};
}

MultilinearPoly poly_from_json(const json& j) {
    MultilinearPoly p;
    p.degree = j.at("n").get<long>();
    for (const auto& t : j.at("terms"))
        p.terms[t.at("perm").get<std::vector<long>>()] = scalar_from_json(t.at("coeff"));
    return p;
}

json make_report(const std::string& check, bool pass, json certificate) {
    return json{{"check", check}, {"pass", pass}, {"certificate", std::move(certificate)}};
}

std::string scalar_to_csv(const Cyclotomic& c) {
    auto ord = c.order_of_unity();
    if (ord) {
        for (long k = 0; k < *ord; ++k)
            if (c == Cyclotomic::root(*ord, k)) {
                std::ostringstream out;
                out << "zeta(" << *ord << ")^" << k;
                return out.str();
            }
    }
    return c.to_string();
}

std::string theta_to_csv(const ThetaTable& t) {
    std::ostringstream out;
    for (long i = 0; i < t.m; ++i) {
        for (long j = 0; j < t.m; ++j) {
            if (j) out << ",";
            out << scalar_to_csv(t.entries[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace qcreg
