#include "lsemid/vartable.hpp"

#include <sstream>

namespace lsemid {

namespace {

std::string pair_name(const char* prefix, int u, int v) {
    std::ostringstream os;
    os << prefix << "_{" << u << "," << v << "}";
    return os.str();
}

}  // namespace

std::shared_ptr<const VariableTable> VariableTable::for_graph(const MixedGraph& g,
                                                              const TrekWeights& w) {
    auto t = std::make_shared<VariableTable>();
    t->graph_ = g;
    t->trek_ = w;
    for (const auto& [u, v] : g.directed) {
        t->lambda_.push_back(t->size());
        t->vars_.push_back({VarKind::Lambda, u, v, 1, pair_name("l", u, v)});
    }
    for (int v = 1; v <= g.p; ++v) {
        t->omega_.push_back(t->size());
        t->vars_.push_back({VarKind::Omega, v, v, 1, pair_name("w", v, v)});
    }
    for (const auto& [u, v] : g.bidirected) {
        t->omega_.push_back(t->size());
        t->vars_.push_back({VarKind::Omega, u, v, 1, pair_name("w", u, v)});
    }
    for (int u = 1; u <= g.p; ++u)
        for (int v = u; v <= g.p; ++v) {
            t->sigma_.push_back(t->size());
            t->vars_.push_back({VarKind::Sigma, u, v, w.weight(u, v), pair_name("s", u, v)});
        }
    t->h_id_ = t->size();
    t->vars_.push_back({VarKind::Hom, 0, 0, 1, "h"});
    t->theta_ = t->lambda_;
    t->theta_.insert(t->theta_.end(), t->omega_.begin(), t->omega_.end());
    return t;
}

std::shared_ptr<const VariableTable> VariableTable::custom(std::vector<VarInfo> vars) {
    auto t = std::make_shared<VariableTable>();
    t->vars_ = std::move(vars);
    for (int i = 0; i < t->size(); ++i) {
        switch (t->vars_[i].kind) {
            case VarKind::Lambda: t->lambda_.push_back(i); break;
            case VarKind::Omega: t->omega_.push_back(i); break;
            case VarKind::Sigma: t->sigma_.push_back(i); break;
            case VarKind::Hom: t->h_id_ = i; break;
            case VarKind::Generic: break;
        }
    }
    t->theta_ = t->lambda_;
    t->theta_.insert(t->theta_.end(), t->omega_.begin(), t->omega_.end());
    return t;
}

int VariableTable::lambda_id(int u, int v) const {
    for (int id : lambda_)
        if (vars_[id].u == u && vars_[id].v == v) return id;
    return -1;
}

int VariableTable::omega_id(int u, int v) const {
    if (u > v) std::swap(u, v);
    for (int id : omega_)
        if (vars_[id].u == u && vars_[id].v == v) return id;
    return -1;
}

int VariableTable::sigma_id(int u, int v) const {
    if (u > v) std::swap(u, v);
    for (int id : sigma_)
        if (vars_[id].u == u && vars_[id].v == v) return id;
    return -1;
}

int VariableTable::find(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (vars_[i].name == name) return i;
    return -1;
}

}  // namespace lsemid
