#pragma once

#include <vector>

#include "wf/partitions.hpp"
#include "wf/rootdata.hpp"

namespace wf {

/// Pair of partitions labelling an irreducible character of a hyperoctahedral
/// Weyl group: ordered for ambient B/C, unordered for D (stored with the
/// lexicographically larger slot first).
struct PairPartition {
    Partition xi;   // first slot (D-factor side of j-induction)
    Partition eta;  // second slot (B/C-factor side)
    bool ordered = true;

    friend bool operator==(const PairPartition& a, const PairPartition& b) {
        return a.xi == b.xi && a.eta == b.eta && a.ordered == b.ordered;
    }
    std::string str() const;
};

// b-invariant (fake degree) of the character labelled by the pair.
long long pair_b_invariant(const PairPartition& p, Series ambient);

// Springer parametrization maps for classical orbits (after Carter 13.3):
// orbit partition -> character pair, and its inverse.
PairPartition phi_map(const TypedPartition& tp);
TypedPartition phi_inverse(const PairPartition& pair, Series ambient, int rank);

// O_Spr of the character labelled by an arbitrary pair: equals phi_inverse on
// pairs in the image of phi_map, and the collapse of the naive interleaving
// otherwise (characters attached to a nontrivial local system).
TypedPartition springer_orbit_of_pair(const PairPartition& pair, Series ambient, int rank);

// O_Spr(j^{S_{r+1}}_{levi} sgn) for a composition of r+1: the dual partition.
Partition type_a_orbit(const std::vector<long long>& composition);

// ---------------------------------------------------------------------------
// Natural-representation block analysis.

enum class BlockKind { GL, SO_ODD, SP, SO_EVEN };

struct NaturalBlock {
    BlockKind kind;
    std::vector<int> slots;       // natural-rep slot indices used by the block
    std::vector<IVec> roots_e;    // subsystem roots in block-local e-coordinates
};

// e-coordinates of the Bourbaki simple roots; a root-coefficient vector maps
// to sum c_i simple_e[i].
std::vector<IVec> simple_roots_e(Series s, int rank);
IVec root_to_e(Series s, int rank, const Root& r);

// Decomposes a (+-closed) set of roots of the classical ambient, given in
// e-coordinates, into joint weight-orbit blocks on the natural representation.
std::vector<NaturalBlock> natural_blocks(Series ambient, int rank,
                                         const std::vector<IVec>& roots_e);

// The ordered pair of j_{W(sub)}^{W(ambient)} sgn for a classical ambient of
// series B/C/D.
PairPartition j_pair(Series ambient, int rank, const std::vector<IVec>& sub_roots_e);

// O_Spr(j_{W(sub)}^{W(ambient)} sgn) as a typed partition; `sub_roots_e` are
// the subsystem's roots in the ambient's e-coordinates (A ambient: r+1
// coordinates).
TypedPartition orbit_of_j_sign(Series ambient, int rank,
                               const std::vector<IVec>& sub_roots_e);

// Closed form for the wave front orbit of the reduced degree-n cover of the
// given classical type.
TypedPartition closed_form(Series ambient, int rank, long long n);

}  // namespace wf
