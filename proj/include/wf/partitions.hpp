#pragma once

#include <string>
#include <vector>

#include "wf/rootdata.hpp"

namespace wf {

/// Weakly decreasing list of positive integers.  Zero parts are never stored.
struct Partition {
    std::vector<long long> parts;

    Partition() = default;
    Partition(std::initializer_list<long long> p) : parts(p) { normalize(); }
    explicit Partition(std::vector<long long> p) : parts(std::move(p)) { normalize(); }

    void normalize();
    long long size() const;
    long long largest() const { return parts.empty() ? 0 : parts.front(); }  // L(-)
    int length() const { return static_cast<int>(parts.size()); }
    long long part(int i) const {  // 0-based, 0 beyond the end
        return i < length() ? parts[i] : 0;
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts < b.parts; }

    std::string str() const;
};

Partition parse_partition(const std::string& text);  // "[3,2,2,1]"

/// Partition labelling a nilpotent orbit of a classical group.
/// Ambient A_r: any partition of r+1.  B_r: partition of 2r+1, even parts
/// with even multiplicity.  C_r: partition of 2r, odd parts with even
/// multiplicity.  D_r: partition of 2r, even parts with even multiplicity.
struct TypedPartition {
    Partition partition;
    Series ambient;
    int rank;

    friend bool operator==(const TypedPartition& a, const TypedPartition& b) {
        return a.partition == b.partition && a.ambient == b.ambient && a.rank == b.rank;
    }
    std::string str() const;
};

long long natural_size(Series s, int rank);      // r+1, 2r+1, 2r, 2r
bool valid_for(const Partition& p, Series s, int rank);
TypedPartition make_typed(const Partition& p, Series s, int rank);  // throws if invalid

// conjugate partition
Partition dual(const Partition& p);

// largest partition of m1 with all parts <= m2
Partition lambda_cap(long long m1, long long m2);

// dominance order; both partitions must have the same size
bool dominance_leq(const Partition& p, const Partition& q);

// B/C/D collapse: the dominance-largest valid partition <= p
TypedPartition collapse(const Partition& p, Series s, int rank);

/// Multiset of sl2-weight markers {lambda_i - 1, lambda_i - 3, ..., 1 - lambda_i},
/// weakly decreasing.
struct XiSequence {
    std::vector<long long> markers;
    std::string str() const;
};

XiSequence xi_sequence(const Partition& p);
// Inverse; throws if the multiset is not realizable.
Partition xi_to_partition(const XiSequence& xi);

/// Weighted Dynkin diagram: one label per simple root, each in {0, 1, 2}.
struct WeightedDynkinDiagram {
    std::vector<int> labels;
    friend bool operator==(const WeightedDynkinDiagram& a, const WeightedDynkinDiagram& b) {
        return a.labels == b.labels;
    }
    friend bool operator<(const WeightedDynkinDiagram& a, const WeightedDynkinDiagram& b) {
        return a.labels < b.labels;
    }
    std::string str() const;
};

// Weighted Dynkin diagram of a classical orbit in Bourbaki labelling.
WeightedDynkinDiagram wdd_classical(const TypedPartition& tp);

// Nonnegative dominant marker vector (e-coordinates of the sl2 element h),
// one entry per natural slot pair: r entries for B/C/D, r+1 for A.
std::vector<long long> dominant_markers(const TypedPartition& tp);

// All valid typed partitions for the ambient, used by orbit dumps and tests.
std::vector<TypedPartition> all_orbits(Series s, int rank);

}  // namespace wf
