#pragma once

#include <vector>

#include "wf/cover.hpp"
#include "wf/rootdata.hpp"

namespace wf {

// Vertices of the closed fundamental alcove of an irreducible system:
// 0 and omega_s^vee / c_s for each simple s, c_s the mark of the highest
// root (fundamental-coweight coordinates).
std::vector<QVec> alcove_vertices(const RootSystem& rs);

// v ~ v' iff wv - v' lies in the coweight lattice for some w in W.
bool vertices_equivalent(const RootSystem& rs, const QVec& v1, const QVec& v2);

// One representative per ~-class, as indices into `vertices`; the
// hyperspecial class is represented by 0 (which must be vertices[0]).
std::vector<int> vertex_class_reps(const RootSystem& rs, const std::vector<QVec>& vertices);

// Phi_y = {alpha : alpha(y) integral}
Subsystem phi_at(const QVec& y, const RootSystem& rs);

// Phi_y^{Q,n} = {alpha in Phi_y : Q(alpha^vee) alpha(y) in nZ}
Subsystem phi_qn_at(const QVec& y, const CoverDatum& cd);

/// Data of one vertex needed for region enumeration: the simple system
/// Delta_v of Phi_v (inside Delta u {-highest}), the factor structure of the
/// modified system Phi'_v and the highest root of each modified factor.
struct VertexFrame {
    QVec v;
    std::vector<Root> delta;            // simple system of Phi_v
    std::vector<long long> n_delta;     // n_alpha for each delta
    std::vector<int> factor_of;         // factor index per delta node
    int num_factors = 0;
    std::vector<Root> factor_highest;   // beta with beta/n_beta highest in its modified factor
    std::vector<long long> n_highest;
    std::vector<IVec> highest_coeffs;   // expansion of beta~ over the modified simples
};

VertexFrame make_vertex_frame(const QVec& v, const CoverDatum& cd);

// All points of (v + P) intersected with the closed region
// {alpha(y) >= 0 for alpha in Delta_v, beta~(y) <= 1 for each factor-highest
// beta~}.  Finite, duplicate-free.
std::vector<QVec> region_points(const VertexFrame& frame, const CoverDatum& cd);

}  // namespace wf
