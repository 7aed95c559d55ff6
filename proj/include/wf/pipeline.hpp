#pragma once

#include <string>
#include <vector>

#include "wf/alcove.hpp"
#include "wf/cover.hpp"
#include "wf/orbits.hpp"

namespace wf {

/// Per-vertex-class summary emitted by the wave front computation.
struct VertexReport {
    QVec vertex;
    std::string phi_v_type;
    long long num_points = 0;
    OrbitLabel best;
    // extended-diagram nodes of Delta'_v with the affine node(s); true =
    // discarded at the best point
    std::vector<std::string> node_names;
    std::vector<bool> best_discarded;
};

struct ComponentReport {
    CartanType type{Series::A, 1};
    long long n = 1;
    OrbitLabel lhs;  // vertex maximization
    OrbitLabel rhs;  // closed form / j-route through Phi_nu
    bool equal = false;
    std::vector<VertexReport> vertices;
};

struct Report {
    std::vector<ComponentReport> components;
    bool all_equal = true;
};

// max over vertices of Sat(O_Spr(j sgn)) for one reduced irreducible cover
OrbitLabel wavefront_component(const CoverDatum& cd,
                               std::vector<VertexReport>* details = nullptr);

// independent right-hand side for one reduced irreducible cover
OrbitLabel rhs_component(const CoverDatum& cd);

// per-component results for an arbitrary cover (reduction applied inside)
std::vector<OrbitLabel> wavefront(const CoverDatum& cd);
std::vector<OrbitLabel> rhs_closed_form(const CoverDatum& cd);
Report verify_identity(const CoverDatum& cd);

// the saturated orbit of j_{W(sub)}^{W(Phi_v)} sgn inside the ambient group
// of the cover; exposed for tests
OrbitLabel saturated_orbit(const CoverDatum& cd, const Subsystem& phi_v,
                           const std::vector<Root>& sub_positive);

}  // namespace wf
