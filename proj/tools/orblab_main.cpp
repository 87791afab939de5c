#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "orblab/io.hpp"
#include "orblab/orbits.hpp"
#include "orblab/structure.hpp"
#include "orblab/twisted.hpp"

namespace {

using namespace orblab;
using nlohmann::json;

struct RunConfig {
    std::string group;
    std::string seed = "unit1";
    int nmax = 4;
    int Nmax = 0;
    std::string c = "24";
    long budget = 0; // 0 = default / env
    int precision = 113;
    std::string out;
    std::string format = "csv";
};

long effective_budget(const RunConfig& cfg) {
    if (cfg.budget > 0) return cfg.budget;
    if (const char* env = std::getenv("ORBLAB_BUDGET")) {
        long v = std::atol(env);
        if (v > 0) return v;
    }
    return default_element_budget;
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream f(cfg.out);
        if (!f) throw ValidationError("cannot open output file " + cfg.out);
        f << text;
    }
}

// seed character: builtin table, "e8cubed" (character-only), or a JSON file
TruncatedSeries seed_character(const std::string& name, int order) {
    if (name == "e8cubed") return e8cubed_character(order);
    if (name.size() > 5 && name.substr(name.size() - 5) == ".json") {
        std::ifstream f(name);
        if (!f) throw ValidationError("cannot open seed file " + name);
        std::stringstream ss;
        ss << f.rdbuf();
        return load_seed(ss.str()).character(order);
    }
    return builtin_seed(name).character(order);
}

SeedTable seed_table(const std::string& name) {
    if (name == "e8cubed")
        throw ValidationError("e8cubed is character-only; its constant table is not bundled");
    if (name.size() > 5 && name.substr(name.size() - 5) == ".json") {
        std::ifstream f(name);
        if (!f) throw ValidationError("cannot open seed file " + name);
        std::stringstream ss;
        ss << f.rdbuf();
        return load_seed(ss.str());
    }
    return builtin_seed(name);
}

// family spec for limit-type commands: "S" or "GL:<q>" (a full group spec
// like "S:8" or "GL:3:2" is also accepted; its N is ignored)
std::pair<GroupKind, int> parse_family(const std::string& spec) {
    std::string head = spec.substr(0, spec.find(':'));
    if (head == "S") return {GroupKind::symmetric, 0};
    if (head == "Z") return {GroupKind::cyclic, 0};
    if (head == "GL") {
        auto first = spec.find(':');
        if (first == std::string::npos)
            throw ValidationError("GL family needs a field size: GL:<q> or GL:<N>:<q>");
        auto rest = spec.substr(first + 1);
        auto colon = rest.find(':');
        try {
            int q = std::stoi(colon == std::string::npos ? rest : rest.substr(colon + 1));
            return {GroupKind::general_linear, q};
        } catch (const std::exception&) {
            throw ValidationError("bad GL family spec '" + spec + "'");
        }
    }
    throw ValidationError("bad family spec '" + spec +
                          "' (expected S, Z, GL:<q>, or a full group spec)");
}

int run_character(const RunConfig& cfg) {
    TruncatedSeries a = seed_character(cfg.seed, cfg.nmax);
    TruncatedSeries out = a;
    if (!cfg.group.empty()) {
        PermGroupHandle G = parse_group_spec(cfg.group);
        out = cycle_index_character(G.cycle_index(effective_budget(cfg)), a, cfg.nmax);
    }
    if (cfg.format == "json") {
        emit(cfg, series_to_json(out));
    } else {
        std::ostringstream os;
        os << "n,coeff\n";
        for (int n = 0; n <= out.order(); ++n) os << n << "," << rat_to_string(out.coeff(n)) << "\n";
        emit(cfg, os.str());
    }
    return 0;
}

int run_bn(const RunConfig& cfg) {
    PermGroupHandle G = parse_group_spec(cfg.group);
    TruncatedSeries a = seed_character(cfg.seed, cfg.nmax);
    OrbitTable t = bn_table(G, a, cfg.nmax, effective_budget(cfg));
    t.seed = cfg.seed;
    emit(cfg, orbit_table_to_csv(t));
    return 0;
}

int run_fn(const RunConfig& cfg) {
    PermGroupHandle G = parse_group_spec(cfg.group);
    OrbitTable t = fn_table(G, cfg.nmax, effective_budget(cfg));
    emit(cfg, orbit_table_to_csv(t));
    return 0;
}

int run_oligo(const RunConfig& cfg) {
    auto [kind, q] = parse_family(cfg.group);
    TruncatedSeries a = seed_character(cfg.seed, cfg.nmax);
    int Nmax = cfg.Nmax > 0 ? cfg.Nmax : 6;
    OligoReport rep = oligomorphic_check(kind, q, a, cfg.nmax, Nmax, effective_budget(cfg));
    json j;
    j["family"] = rep.family;
    switch (rep.verdict) {
    case OligoVerdict::consistent: j["verdict"] = "consistent"; break;
    case OligoVerdict::not_oligomorphic: j["verdict"] = "not_oligomorphic"; break;
    case OligoVerdict::inconclusive: j["verdict"] = "inconclusive"; break;
    }
    j["bound_ok"] = rep.bound_ok;
    for (const auto& [n, N] : rep.stabilization_N) j["stabilization_N"][std::to_string(n)] = N;
    for (const auto& [n, vals] : rep.bn_by_N) {
        json arr = json::array();
        for (const auto& v : vals) arr.push_back(v.get_str());
        j["bn_by_N"][std::to_string(n)] = arr;
    }
    j["notes"] = rep.notes;
    emit(cfg, j.dump(2));
    return 0;
}

int run_constants(const RunConfig& cfg) {
    PermGroupHandle G = parse_group_spec(cfg.group);
    SeedTable seed = seed_table(cfg.seed);
    SeedTable table = fixed_point_table(G, seed, cfg.nmax,
                                        std::min(effective_budget(cfg), 200L));
    emit(cfg, seed_to_json(table, G.spec_string(), G.param_n()));
    return 0;
}

int run_limit(const RunConfig& cfg) {
    auto [kind, q] = parse_family(cfg.group);
    SeedTable seed = seed_table(cfg.seed);
    FreenessReport rep = freeness_report(kind, q, seed, cfg.nmax, effective_budget(cfg));
    json j;
    j["free"] = rep.free;
    j["scaling_exponent"] = rep.scaling_exponent;
    j["notes"] = rep.notes;
    json entries = json::array();
    for (const auto& e : rep.entries) {
        json je;
        json sup = json::array();
        for (const auto& s : e.states) {
            json m = json::object();
            for (const auto& [x, l] : s.support)
                m[std::to_string(x)] = seed.labels()[static_cast<size_t>(l + 1)].id;
            sup.push_back(m);
        }
        je["states"] = sup;
        je["limit_value"] = e.limit_value.to_string();
        je["decay"] = e.decay;
        entries.push_back(je);
    }
    j["single_trace_triples"] = entries;
    emit(cfg, j.dump(2));
    return 0;
}

int run_jacobi(const RunConfig& cfg) {
    SeedTable seed = seed_table(cfg.seed); // load_seed already enforces closure
    int cap = cfg.nmax > 0 ? std::min(cfg.nmax, seed.cutoff()) : seed.cutoff();
    JacobiReport rep = jacobi_check(seed, cap);
    json j;
    j["ok"] = rep.ok;
    j["checked"] = rep.checked;
    if (rep.witness) {
        const auto& w = *rep.witness;
        j["witness"] = {{"e", seed.labels()[static_cast<size_t>(w.labels[0])].id},
                        {"a", seed.labels()[static_cast<size_t>(w.labels[1])].id},
                        {"b", seed.labels()[static_cast<size_t>(w.labels[2])].id},
                        {"c", seed.labels()[static_cast<size_t>(w.labels[3])].id},
                        {"m", w.m},
                        {"n", w.n},
                        {"k", w.k},
                        {"lhs", w.lhs.to_string()},
                        {"rhs", w.rhs.to_string()}};
    }
    emit(cfg, j.dump(2));
    return rep.ok ? 0 : 2;
}

int run_twisted(const RunConfig& cfg) {
    Rat c = rat_from_string(cfg.c);
    if (cfg.Nmax > 0) {
        auto [kind, q] = parse_family(cfg.group);
        OrbifoldLimitReport rep =
            orbifold_limit_report(kind, q, c, 2, cfg.Nmax, effective_budget(cfg));
        emit(cfg, twisted_report_to_csv(rep, q));
        return 0;
    }
    PermGroupHandle G = parse_group_spec(cfg.group);
    TwistedWeightReport rep = min_twisted_weight(G, c, effective_budget(cfg));
    json j;
    j["group"] = rep.group;
    j["c"] = rat_to_string(rep.c);
    j["min_rho"] = rat_to_string(rep.min_rho);
    j["attained_by"] = cycle_type_to_string(rep.attained_by);
    j["per_element_bound_ok"] = rep.per_element_bound_ok;
    if (rep.gl_bound_applicable) {
        j["gl_bound"] = rat_to_string(rep.gl_bound);
        j["gl_bound_ok"] = rep.gl_bound_ok;
        j["gl_bound_equality"] = rep.gl_bound_equality;
    }
    json classes = json::array();
    for (const auto& row : rep.classes)
        classes.push_back({{"cycle_type", cycle_type_to_string(row.cycle_type)},
                           {"rho", rat_to_string(row.rho)},
                           {"moved", row.moved_points},
                           {"attains_moved_bound", row.attains_moved_bound}});
    j["classes"] = classes;
    emit(cfg, j.dump(2));
    return 0;
}

int run_figure1(const RunConfig& cfg) {
    int gl_N = cfg.Nmax > 0 ? cfg.Nmax : 4;
    if (gl_N > 5) throw BudgetExceeded("figure1: gl_N > 5 exceeds the enumeration budget");
    TruncatedSeries a = e8cubed_character(cfg.nmax);
    TruncatedSeries sym = sym_limit_character(a, cfg.nmax);
    PermGroupHandle G = build_group(GroupKind::general_linear, gl_N, 2);
    TruncatedSeries gl =
        cycle_index_character(G.cycle_index(effective_budget(cfg)), a, cfg.nmax);
    std::ostringstream os;
    os << "# b_n columns for the large-N fixed-point limits with the e8cubed seed\n";
    os << "# sym column: symmetric-family fixed-point limit only; twisted-sector\n";
    os << "# contributions for the symmetric family are not included here\n";
    os << "# gl column: GL(" << gl_N << ",2); entries with provisional=1 (n > " << gl_N
       << ") are not yet N-converged\n";
    os << "n,b_sym,b_gl,log_b_sym,log_b_gl,provisional\n";
    bool ordering_ok = true;
    for (int n = 0; n <= cfg.nmax; ++n) {
        Int bs(sym.coeff(n).get_num());
        Int bg(gl.coeff(n).get_num());
        if (n >= 1 && bg < bs) ordering_ok = false;
        os << n << "," << bs.get_str() << "," << bg.get_str() << "," << log_of_int(bs) << ","
           << log_of_int(bg) << "," << (n > gl_N ? 1 : 0) << "\n";
    }
    if (!ordering_ok) os << "# WARNING: ordering property b_gl >= b_sym violated\n";
    emit(cfg, os.str());
    return ordering_ok ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"orblab: permutation-orbifold orbit counting and structure constants"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&cfg](CLI::App* sub) {
        sub->add_option("--group", cfg.group, "group or family spec (S:<N>, Z:<N>, GL:<N>:<q>)");
        sub->add_option("--seed", cfg.seed, "builtin seed name or JSON file path");
        sub->add_option("--nmax", cfg.nmax, "max weight / order")->check(CLI::Range(0, 64));
        sub->add_option("--Nmax", cfg.Nmax, "max family parameter N");
        sub->add_option("--c", cfg.c, "central charge (rational)");
        sub->add_option("--budget", cfg.budget, "element budget");
        sub->add_option("--precision", cfg.precision, "float fallback precision (bits)");
        sub->add_option("--out", cfg.out, "output file (default stdout)");
        sub->add_option("--format", cfg.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
    };
    const std::vector<std::pair<const char*, const char*>> subs{
        {"character", "fixed-point character of a seed under a group or family limit"},
        {"bn", "orbit counts b_n of weight-n functions"},
        {"fn", "orbit counts f_n of n-element subsets"},
        {"oligo", "stabilization and growth diagnostics across a family"},
        {"constants", "structure constants of the fixed-point table"},
        {"limit", "large-N limits of single-trace constants (freeness report)"},
        {"jacobi", "exhaustive Borcherds-identity check of a constant table"},
        {"twisted", "minimal twisted-sector conformal weights and bounds"},
        {"figure1", "orbit-growth data columns for the symmetric and GL limits"}};
    for (const auto& [name, desc] : subs) add_common(app.add_subcommand(name, desc));

    try {
        app.parse(argc, argv);
        const std::string cmd = app.get_subcommands().front()->get_name();
        if (cmd == "character") return run_character(cfg);
        if (cmd == "bn") return run_bn(cfg);
        if (cmd == "fn") return run_fn(cfg);
        if (cmd == "oligo") return run_oligo(cfg);
        if (cmd == "constants") return run_constants(cfg);
        if (cmd == "limit") return run_limit(cfg);
        if (cmd == "jacobi") return run_jacobi(cfg);
        if (cmd == "twisted") return run_twisted(cfg);
        if (cmd == "figure1") return run_figure1(cfg);
        std::cerr << "unknown command " << cmd << "\n";
        return 2;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const orblab::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const orblab::ValidationError& e) {
        std::cerr << "validation failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
