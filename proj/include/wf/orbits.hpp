#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wf/partitions.hpp"
#include "wf/rootdata.hpp"

namespace wf {

/// One nilpotent orbit of an exceptional group: Bala-Carter style name,
/// weighted Dynkin diagram and dimension.
struct ExcOrbitInfo {
    std::string name;
    WeightedDynkinDiagram wdd;
    long long dim = 0;
};

/// Stable nilpotent orbit label of one irreducible ambient group.
struct OrbitLabel {
    CartanType ambient{Series::A, 1};
    std::optional<TypedPartition> classical;
    std::optional<ExcOrbitInfo> exceptional;

    static OrbitLabel of(TypedPartition tp) {
        OrbitLabel o;
        o.ambient = {tp.ambient, tp.rank};
        o.classical = std::move(tp);
        return o;
    }
    static OrbitLabel of(CartanType t, ExcOrbitInfo e) {
        OrbitLabel o;
        o.ambient = t;
        o.exceptional = std::move(e);
        return o;
    }
    friend bool operator==(const OrbitLabel& a, const OrbitLabel& b);
    std::string str() const;
};

// Jordan type of ad(e) on the ambient Lie algebra, computed from the
// weighted Dynkin diagram (labels in coweight coordinates).
Partition ad_jordan(const RootSystem& rs, const std::vector<int>& labels);

// dim of the orbit with the given weighted Dynkin diagram
long long orbit_dim_from_wdd(const RootSystem& rs, const std::vector<int>& labels);

// Closure order: dominance for classical ambients; for exceptional ambients
// the dominance order of ad-Jordan types (a refinement-safe extension of the
// Zariski closure order, see README).
bool closure_leq(const OrbitLabel& a, const OrbitLabel& b, const RootSystem& rs);

// Antichain of closure-maximal elements.
std::vector<OrbitLabel> max_orbits(std::vector<OrbitLabel> candidates, const RootSystem& rs);

// Solves <delta_j, h> = labels_j over Delta_v, normalizes to the dominant
// chamber and returns the ambient weighted Dynkin labels (must be in
// {0,1,2}).
std::vector<int> saturate_wdd(const RootSystem& ambient, const std::vector<Root>& delta,
                              const std::vector<int>& labels);

/// Bundled data for one exceptional type: orbit list with names, weighted
/// Dynkin diagrams and dimensions, validated at load.
class ExceptionalOrbits {
  public:
    static const ExceptionalOrbits& get(CartanType t);  // loads data/<type>/wdd

    const std::vector<ExcOrbitInfo>& orbits() const { return orbits_; }
    const ExcOrbitInfo& by_wdd(const std::vector<int>& labels) const;
    const ExcOrbitInfo& by_name(const std::string& name) const;
    const ExcOrbitInfo& zero() const;
    const ExcOrbitInfo& regular() const;

  private:
    explicit ExceptionalOrbits(CartanType t);
    CartanType type_;
    std::vector<ExcOrbitInfo> orbits_;
};

// Data directory resolution: $WF_DATA_DIR overrides the bundled default.
std::string data_dir();

}  // namespace wf
