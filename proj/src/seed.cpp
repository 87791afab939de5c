#include "orblab/seed.hpp"

#include <algorithm>

namespace orblab {

SeedTable::SeedTable(std::string name, int cutoff, std::vector<SeedLabel> labels,
                     std::map<std::array<int, 3>, Scalar> constants)
    : name_(std::move(name)), cutoff_(cutoff), labels_(std::move(labels)),
      constants_(std::move(constants)) {
    for (auto it = constants_.begin(); it != constants_.end();) {
        if (it->second.is_zero())
            it = constants_.erase(it);
        else
            ++it;
    }
}

int SeedTable::label_index(const std::string& id) const {
    for (int i = 0; i < label_count(); ++i)
        if (labels_[static_cast<size_t>(i)].id == id) return i;
    throw ValidationError("unknown label id '" + id + "'");
}

const Scalar& SeedTable::f(int a, int b, int c) const {
    static const Scalar zero;
    auto it = constants_.find({a, b, c});
    return it == constants_.end() ? zero : it->second;
}

TruncatedSeries SeedTable::character(int order) const {
    TruncatedSeries a(order);
    for (const auto& l : labels_)
        if (l.wt <= order) a.set_coeff(l.wt, a.coeff(l.wt) + 1);
    return a;
}

void SeedTable::validate_structure() const {
    if (labels_.empty() || labels_[0].id != "vac" || labels_[0].wt != 0)
        throw ValidationError("label 0 must be the vacuum 'vac' of weight 0");
    for (size_t i = 1; i < labels_.size(); ++i) {
        if (labels_[i].wt < 1 || labels_[i].wt > cutoff_)
            throw ValidationError("non-vacuum label '" + labels_[i].id +
                                  "' must have weight in [1, cutoff]");
        for (size_t j = 0; j < i; ++j)
            if (labels_[i].id == labels_[j].id)
                throw ValidationError("duplicate label id '" + labels_[i].id + "'");
    }
    if (f(0, 0, 0) != Scalar(Rat(1))) throw ValidationError("f_{vac,vac,vac} must be 1");
    int L = label_count();
    for (const auto& [key, val] : constants_) {
        int vac_count = (key[0] == 0) + (key[1] == 0) + (key[2] == 0);
        if (vac_count == 2 && !val.is_zero())
            throw ValidationError("two-vacuum constant must vanish (1-point functions)");
    }
    // vacuum in the middle slot: f_{a,vac,c} = delta_{ac}
    for (int a = 0; a < L; ++a)
        for (int c = 0; c < L; ++c) {
            Scalar expected((a == c) ? Rat(1) : Rat(0));
            if (f(a, 0, c) != expected)
                throw ValidationError("vacuum property violated at f_{" +
                                      labels_[static_cast<size_t>(a)].id + ",vac," +
                                      labels_[static_cast<size_t>(c)].id + "}");
        }
    // vacuum in the third slot at equal weight: f_{a,b,vac} = delta_{ab}
    for (int a = 0; a < L; ++a)
        for (int b = 0; b < L; ++b) {
            if (weight(a) != weight(b)) continue;
            Scalar expected((a == b) ? Rat(1) : Rat(0));
            if (f(a, b, 0) != expected)
                throw ValidationError("creation property violated at f_{" +
                                      labels_[static_cast<size_t>(a)].id + "," +
                                      labels_[static_cast<size_t>(b)].id + ",vac}");
        }
}

SeedTable vacuum_seed() {
    std::map<std::array<int, 3>, Scalar> consts;
    consts[{0, 0, 0}] = Scalar(Rat(1));
    return SeedTable("vac", 0, {{"vac", 0}}, std::move(consts));
}

SeedTable unit1_seed() {
    std::map<std::array<int, 3>, Scalar> consts;
    Scalar one(Rat(1));
    consts[{0, 0, 0}] = one;
    consts[{0, 1, 1}] = one;
    consts[{1, 0, 1}] = one;
    consts[{1, 1, 0}] = one;
    return SeedTable("unit1", 1, {{"vac", 0}, {"a", 1}}, std::move(consts));
}

SeedTable builtin_seed(const std::string& name) {
    if (name == "vac") return vacuum_seed();
    if (name == "unit1") return unit1_seed();
    if (name.rfind("heis:", 0) == 0) {
        int cutoff = 0;
        try {
            cutoff = std::stoi(name.substr(5));
        } catch (...) {
            throw ValidationError("bad heis cutoff in '" + name + "'");
        }
        return heisenberg_seed(cutoff);
    }
    throw ValidationError("unknown builtin seed '" + name +
                          "' (expected vac, unit1, or heis:<cutoff>)");
}

} // namespace orblab
