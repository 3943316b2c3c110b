#include "qmk/json_io.hpp"

#include <stdexcept>

namespace qmk {

using nlohmann::json;

namespace {
json atoms_to_json(const std::vector<std::pair<Rat, Rat>>& atoms) {
    json arr = json::array();
    for (const auto& [loc, w] : atoms) arr.push_back({rat_to_string(loc), rat_to_string(w)});
    return json{{"atoms", arr}};
}

std::vector<std::pair<Rat, Rat>> atoms_from_json(const json& j) {
    std::vector<std::pair<Rat, Rat>> atoms;
    for (const auto& entry : j.at("atoms"))
        atoms.emplace_back(rat_from_string(entry.at(0).get<std::string>()),
                           rat_from_string(entry.at(1).get<std::string>()));
    return atoms;
}

json support_to_json(const std::vector<std::pair<Signature, Rat>>& support) {
    json arr = json::array();
    for (const auto& [sig, p] : support) arr.push_back({sig.parts, rat_to_string(p)});
    return arr;
}

std::vector<std::pair<Signature, Rat>> support_from_json(const json& arr) {
    std::vector<std::pair<Signature, Rat>> support;
    for (const auto& entry : arr)
        support.emplace_back(Signature(entry.at(0).get<std::vector<long long>>()),
                             rat_from_string(entry.at(1).get<std::string>()));
    return support;
}
}  // namespace

json to_json(const AtomicMeasure& m) { return atoms_to_json(m.atoms); }
json to_json(const SignedAtomicMeasure& m) { return atoms_to_json(m.atoms); }

json to_json(const GridDensity& g) {
    return json{{"a", g.a}, {"b", g.b}, {"grid", g.t}, {"values", g.v},
                {"class", to_string(g.cls)}};
}

json to_json(const GridDiagram& g) {
    return json{{"a", g.a}, {"b", g.b}, {"x0", g.x0}, {"grid", g.t}, {"values", g.v},
                {"class", to_string(g.cls)}};
}

json to_json(const SignatureLaw& law) {
    return json{{"n", law.n}, {"support", support_to_json(law.support)}};
}

json to_json(const BranchingLaw& law) {
    return json{{"parent", law.parent.parts}, {"support", support_to_json(law.support)}};
}

AtomicMeasure atomic_measure_from_json(const json& j) {
    return AtomicMeasure(atoms_from_json(j));
}

SignedAtomicMeasure signed_measure_from_json(const json& j) {
    return SignedAtomicMeasure(atoms_from_json(j));
}

GridDensity grid_density_from_json(const json& j) {
    GridDensity g;
    g.a = j.at("a").get<double>();
    g.b = j.at("b").get<double>();
    g.t = j.at("grid").get<std::vector<double>>();
    g.v = j.at("values").get<std::vector<double>>();
    const std::string cls = j.value("class", "M");
    if (cls == "M")
        g.cls = DensityClass::M;
    else if (cls == "Mt")
        g.cls = DensityClass::MTilde;
    else
        throw std::invalid_argument("grid_density_from_json: unknown class '" + cls + "'");
    g.validate(1e-2);
    return g;
}

GridDiagram grid_diagram_from_json(const json& j) {
    GridDiagram g;
    g.a = j.at("a").get<double>();
    g.b = j.at("b").get<double>();
    g.x0 = j.at("x0").get<double>();
    g.t = j.at("grid").get<std::vector<double>>();
    g.v = j.at("values").get<std::vector<double>>();
    const std::string cls = j.value("class", "D");
    if (cls == "D")
        g.cls = DiagramClass::D;
    else if (cls == "Dt")
        g.cls = DiagramClass::DTilde;
    else
        throw std::invalid_argument("grid_diagram_from_json: unknown class '" + cls + "'");
    g.validate(1e-2);
    return g;
}

SignatureLaw signature_law_from_json(const json& j) {
    SignatureLaw law;
    law.n = j.at("n").get<int>();
    law.support = support_from_json(j.at("support"));
    law.validate();
    return law;
}

RationalProfile rational_profile_from_json(const json& j) {
    RationalProfile p;
    for (const auto& entry : j.at("c")) {
        if (entry.is_string())
            p.c.push_back(rat_from_string(entry.get<std::string>()));
        else if (entry.is_number_integer())
            p.c.push_back(Rat(entry.get<long long>()));
        else
            throw std::invalid_argument("rational profile requires integer or \"p/q\" entries");
    }
    return p;
}

NumericProfile numeric_profile_from_json(const json& j) {
    NumericProfile p;
    for (const auto& entry : j.at("c")) {
        if (entry.is_string())
            p.c.push_back(rat_to_double(rat_from_string(entry.get<std::string>())));
        else
            p.c.push_back(entry.get<double>());
    }
    return p;
}

}  // namespace qmk
