#ifndef LSEMID_VARTABLE_HPP
#define LSEMID_VARTABLE_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "lsemid/graph.hpp"

namespace lsemid {

enum class VarKind : std::uint8_t { Lambda, Omega, Sigma, Hom, Generic };

struct VarInfo {
    VarKind kind;
    int u = 0, v = 0;          // node pair; unused for Hom/Generic
    std::uint64_t weight = 1;  // w(q)=1 on theta and h, w(sigma_uv) from trek weights
    std::string name;
};

/// The variable table of the ring R[lambda, omega, sigma, h] for one graph.
/// Order: lambda_uv by (u,v), omega_vv by v, omega_uv (u<v) by (u,v),
/// sigma_uv (u<=v) by (u,v), then h. Indices into this listing are the
/// variable ids used by monomials and orders; the theta prefix defines the
/// canonical parameter order.
class VariableTable {
  public:
    static std::shared_ptr<const VariableTable> for_graph(const MixedGraph& g,
                                                          const TrekWeights& w);
    // Free-form table for generic rings (tests, small examples).
    static std::shared_ptr<const VariableTable> custom(std::vector<VarInfo> vars);

    int size() const { return static_cast<int>(vars_.size()); }
    const VarInfo& info(int id) const { return vars_[id]; }
    std::uint64_t weight(int id) const { return vars_[id].weight; }
    const std::string& name(int id) const { return vars_[id].name; }

    int lambda_id(int u, int v) const;  // -1 when absent
    int omega_id(int u, int v) const;   // symmetric lookup
    int sigma_id(int u, int v) const;
    int h_id() const { return h_id_; }
    int find(const std::string& name) const;  // -1 when absent

    const std::vector<int>& theta_ids() const { return theta_; }
    const std::vector<int>& lambda_ids() const { return lambda_; }
    const std::vector<int>& omega_ids() const { return omega_; }
    const std::vector<int>& sigma_ids() const { return sigma_; }

    const MixedGraph& graph() const { return graph_; }
    const TrekWeights& trek() const { return trek_; }

  private:
    std::vector<VarInfo> vars_;
    std::vector<int> theta_, lambda_, omega_, sigma_;
    int h_id_ = -1;
    MixedGraph graph_;
    TrekWeights trek_;
};

using TablePtr = std::shared_ptr<const VariableTable>;

}  // namespace lsemid

#endif
