#include "fpindex/json_io.hpp"

#include <stdexcept>

namespace fpindex {

json sequence_to_json(const PeriodicSequence& seq) {
    return json{{"period", seq.period()}, {"values", seq.values()}};
}

PeriodicSequence sequence_from_json(const json& j) {
    if (!j.is_object() || !j.contains("period") || !j.contains("values"))
        throw std::invalid_argument("sequence JSON needs \"period\" and \"values\"");
    long long period = j.at("period").get<long long>();
    std::vector<long long> values = j.at("values").get<std::vector<long long>>();
    return PeriodicSequence(period, std::move(values));
}

json decomposition_to_json(const DoldDecomposition& d) {
    json coeffs = json::object();
    for (const auto& [k, a] : d.coefficients)
        coeffs[std::to_string(k)] = rat_to_string(a);
    return json{{"coefficients", coeffs}, {"is_integral", d.is_integral}};
}

DoldDecomposition decomposition_from_json(const json& j) {
    if (!j.is_object() || !j.contains("coefficients"))
        throw std::invalid_argument("decomposition JSON needs \"coefficients\"");
    DoldDecomposition d;
    for (const auto& [key, value] : j.at("coefficients").items()) {
        long long k = std::stoll(key);
        if (k < 1)
            throw std::invalid_argument("decomposition key must be a positive integer");
        Rat a = value.is_string() ? rat_from_string(value.get<std::string>())
                                  : to_rat(value.get<long long>());
        if (a != 0) {
            if (!is_integer(a))
                d.is_integral = false;
            d.coefficients.emplace(k, a);
        }
    }
    return d;
}

json witness_to_json(const DoldWitness& w) {
    return json{{"k", w.k}, {"value", rat_to_string(w.value)}, {"reason", w.reason}};
}

json root_form_to_json(const RootOfUnityForm& f) {
    auto side = [](const std::vector<RootOfUnity>& roots) {
        json arr = json::array();
        for (const RootOfUnity& r : roots)
            arr.push_back(json{{"order", r.order}, {"exponent", r.exponent}});
        return arr;
    };
    return json{{"lambda", side(f.lambda_orders)}, {"mu", side(f.mu_orders)}};
}

SimplicialComplex complex_from_json(const json& j, std::string* warnings) {
    const json& node = j.is_object() && j.contains("simplices") ? j.at("simplices") : j;
    if (!node.is_array())
        throw std::invalid_argument("complex JSON needs a \"simplices\" array");
    std::vector<Simplex> simplices;
    for (const auto& s : node)
        simplices.push_back(s.get<Simplex>());
    size_t added = 0;
    SimplicialComplex c = SimplicialComplex::from_simplices(simplices, true, &added);
    if (added > 0 && warnings)
        *warnings += "auto-closed " + std::to_string(added) + " missing face(s)\n";
    return c;
}

SimplicialPair pair_from_json(const json& j, std::string* warnings) {
    SimplicialPair pair;
    if (j.is_object() && j.contains("total")) {
        pair.total = complex_from_json(j.at("total"), warnings);
        if (j.contains("sub"))
            pair.sub = complex_from_json(j.at("sub"), warnings);
    } else {
        pair.total = complex_from_json(j, warnings);
    }
    pair.validate();
    return pair;
}

json homology_to_json(const std::array<HomologyGroup, kMaxDim + 1>& groups) {
    json arr = json::array();
    for (const HomologyGroup& g : groups) {
        json torsion = json::array();
        for (const Int& t : g.torsion)
            torsion.push_back(t.get_str());
        arr.push_back(json{{"betti", g.betti}, {"torsion", torsion}});
    }
    return arr;
}

IntMatrix matrix_from_json(const json& j) {
    if (!j.is_array())
        throw std::invalid_argument("matrix JSON must be an array of rows");
    std::vector<std::vector<long long>> rows;
    for (const auto& r : j)
        rows.push_back(r.get<std::vector<long long>>());
    return IntMatrix::from_rows(rows);
}

ChainMap chain_map_from_json(const json& j) {
    const json& node = j.is_object() && j.contains("matrices") ? j.at("matrices") : j;
    ChainMap m;
    if (node.is_array()) {
        if (node.size() > static_cast<size_t>(kMaxDim) + 1)
            throw std::invalid_argument("chain map JSON has more than 4 matrices");
        for (size_t d = 0; d < node.size(); ++d)
            m.matrices[d] = matrix_from_json(node[d]);
    } else if (node.is_object()) {
        for (const auto& [key, value] : node.items()) {
            int d = std::stoi(key);
            if (d < 0 || d > kMaxDim)
                throw std::invalid_argument("chain map dimension out of range");
            m.matrices[static_cast<size_t>(d)] = matrix_from_json(value);
        }
    } else {
        throw std::invalid_argument("chain map JSON must be an array or object of matrices");
    }
    return m;
}

namespace {

json vec3_to_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

Vec3 vec3_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3)
        throw std::invalid_argument("vector JSON must be [x, y, z]");
    return Vec3{j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

json families_to_json(const std::vector<FamilySpec>& families) {
    json arr = json::array();
    for (const FamilySpec& f : families)
        arr.push_back(json{{"k", f.k}, {"count", f.count}});
    return arr;
}

std::vector<FamilySpec> families_from_json(const json& j) {
    std::vector<FamilySpec> out;
    for (const auto& f : j)
        out.push_back(FamilySpec{f.at("k").get<long long>(), f.at("count").get<long long>()});
    return out;
}

}  // namespace

json plan_to_json(const RealizationPlan& plan) {
    json coeffs = json::object();
    for (const auto& [k, a] : plan.shifted_coefficients)
        coeffs[std::to_string(k)] = a;
    json geometry = json::array();
    for (const FamilyPlacement& p : plan.geometry) {
        geometry.push_back(json{{"k", p.k},
                                {"kind", p.annulus ? "annulus" : "disk"},
                                {"center", vec3_to_json(p.center)},
                                {"angular_radius", p.cap_radius},
                                {"phases", p.spot_phases}});
    }
    return json{{"coefficients", coeffs},
                {"disk_families", families_to_json(plan.disk_families)},
                {"annulus_families", families_to_json(plan.annulus_families)},
                {"geometry", geometry}};
}

RealizationPlan plan_from_json(const json& j) {
    RealizationPlan plan;
    for (const auto& [key, value] : j.at("coefficients").items())
        plan.shifted_coefficients[std::stoll(key)] = value.get<long long>();
    plan.disk_families = families_from_json(j.at("disk_families"));
    plan.annulus_families = families_from_json(j.at("annulus_families"));
    for (const auto& g : j.at("geometry")) {
        FamilyPlacement p;
        p.k = g.at("k").get<long long>();
        p.annulus = g.at("kind").get<std::string>() == "annulus";
        p.center = vec3_from_json(g.at("center"));
        p.cap_radius = g.at("angular_radius").get<double>();
        p.spot_phases = g.at("phases").get<std::vector<double>>();
        plan.geometry.push_back(std::move(p));
    }
    return plan;
}

}  // namespace fpindex
