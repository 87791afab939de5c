#include "orblab/io.hpp"

#include <sstream>

#include "json.hpp"

namespace orblab {

using nlohmann::json;

std::string series_to_json(const TruncatedSeries& s) {
    json j;
    j["order"] = s.order();
    json arr = json::array();
    for (int n = 0; n <= s.order(); ++n) arr.push_back(rat_to_string(s.coeff(n)));
    j["coeffs"] = arr;
    return j.dump();
}

TruncatedSeries series_from_json(const std::string& text) {
    try {
        json j = json::parse(text);
        int order = j.at("order").get<int>();
        std::vector<Rat> coeffs;
        for (const auto& c : j.at("coeffs"))
            coeffs.push_back(rat_from_string(c.get<std::string>()));
        if (static_cast<int>(coeffs.size()) != order + 1)
            throw ValidationError("series coeffs length does not match order");
        return TruncatedSeries(order, std::move(coeffs));
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed series JSON: ") + e.what());
    }
}

std::string cycle_index_to_json(const CycleIndex& zi) {
    json arr = json::array();
    for (const auto& [ct, w] : zi.terms()) {
        json term;
        json cyc = json::object();
        for (const auto& [k, m] : ct) cyc[std::to_string(k)] = m;
        term["cycles"] = cyc;
        term["weight"] = rat_to_string(w);
        arr.push_back(term);
    }
    return arr.dump();
}

namespace {

json scalar_to_json_obj(const Scalar& v) {
    if (v.is_rational()) return json(rat_to_string(v.rational_value()));
    if (v.terms().size() == 1) {
        const auto& [rad, coef] = *v.terms().begin();
        json j;
        j["rad"] = rad.get_str();
        j["coef"] = rat_to_string(coef);
        return j;
    }
    return json(v.to_double());
}

Scalar scalar_from_json_obj(const json& j) {
    if (j.is_string()) return Scalar(rat_from_string(j.get<std::string>()));
    if (j.is_object()) {
        Rat rad = rat_from_string(j.at("rad").get<std::string>());
        Rat coef = rat_from_string(j.at("coef").get<std::string>());
        return Scalar(coef) * Scalar::sqrt_of(rad);
    }
    if (j.is_number()) {
        // float fallback: accept only exactly-representable rationals
        double d = j.get<double>();
        Rat r(d);
        r.canonicalize();
        return Scalar(r);
    }
    throw ValidationError("bad scalar value in seed document");
}

} // namespace

std::string scalar_to_json_value(const Scalar& v) { return scalar_to_json_obj(v).dump(); }

Scalar scalar_from_json_value(const std::string& text) {
    return scalar_from_json_obj(json::parse(text));
}

SeedTable load_seed(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("seed document is not valid JSON: ") + e.what());
    }
    std::string name;
    int cutoff = 0;
    std::vector<SeedLabel> labels;
    std::map<std::array<int, 3>, Scalar> consts;
    try {
        name = j.value("name", "unnamed");
        cutoff = j.at("cutoff").get<int>();
        for (const auto& l : j.at("labels"))
            labels.push_back({l.at("id").get<std::string>(), l.at("wt").get<int>()});
        SeedTable stub(name, cutoff, labels, {});
        for (const auto& c : j.at("constants")) {
            int a = stub.label_index(c.at("a").get<std::string>());
            int b = stub.label_index(c.at("b").get<std::string>());
            int cc = stub.label_index(c.at("c").get<std::string>());
            consts[{a, b, cc}] = scalar_from_json_obj(c.at("value"));
        }
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed seed document: ") + e.what());
    }
    SeedTable table(name, cutoff, std::move(labels), std::move(consts));
    table.validate_structure();
    JacobiReport rep = jacobi_check(table, cutoff);
    if (!rep.ok) {
        const JacobiWitness& w = *rep.witness;
        std::ostringstream os;
        os << "Jacobi violation at (e,a,b,c)=(" << table.labels()[static_cast<size_t>(w.labels[0])].id
           << "," << table.labels()[static_cast<size_t>(w.labels[1])].id << ","
           << table.labels()[static_cast<size_t>(w.labels[2])].id << ","
           << table.labels()[static_cast<size_t>(w.labels[3])].id << "), (m,n,k)=(" << w.m << ","
           << w.n << "," << w.k << "): lhs=" << w.lhs.to_string() << " rhs=" << w.rhs.to_string();
        throw ValidationError(os.str());
    }
    return table;
}

std::string seed_to_json(const SeedTable& seed, const std::string& group_spec, int N) {
    json j;
    j["name"] = seed.name();
    j["cutoff"] = seed.cutoff();
    json labels = json::array();
    for (const auto& l : seed.labels()) labels.push_back({{"id", l.id}, {"wt", l.wt}});
    j["labels"] = labels;
    json consts = json::array();
    for (const auto& [key, val] : seed.constants()) {
        json c;
        c["a"] = seed.labels()[static_cast<size_t>(key[0])].id;
        c["b"] = seed.labels()[static_cast<size_t>(key[1])].id;
        c["c"] = seed.labels()[static_cast<size_t>(key[2])].id;
        c["value"] = scalar_to_json_obj(val);
        consts.push_back(c);
    }
    j["constants"] = consts;
    if (!group_spec.empty()) {
        j["group"] = group_spec;
        j["N"] = N;
    }
    return j.dump(2);
}

std::string cycle_type_to_string(const CycleTypeKey& ct) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, m] : ct) {
        if (!first) os << " ";
        first = false;
        os << k << "^" << m;
    }
    return first ? "1^0" : os.str();
}

std::string orbit_table_to_csv(const OrbitTable& t) {
    std::ostringstream os;
    os << "family,seed,kind,n,N,count\n";
    for (const auto& r : t.rows)
        os << t.family << "," << t.seed << "," << t.kind << "," << r.n << "," << r.N << ","
           << r.count.get_str() << "\n";
    return os.str();
}

std::string twisted_report_to_csv(const OrbifoldLimitReport& rep, int q) {
    std::ostringstream os;
    os << "group,N,q,c,min_rho_num,min_rho_den,bound_num,bound_den,attained_by_cycle_type\n";
    for (const auto& r : rep.rows)
        os << rep.family << "," << r.N << "," << q << "," << rat_to_string(rep.c) << ","
           << r.min_rho.get_num().get_str() << "," << r.min_rho.get_den().get_str() << ","
           << r.gl_bound.get_num().get_str() << "," << r.gl_bound.get_den().get_str() << ","
           << cycle_type_to_string(r.attained_by) << "\n";
    return os.str();
}

} // namespace orblab
