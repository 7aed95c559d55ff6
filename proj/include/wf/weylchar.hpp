#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "wf/rootdata.hpp"

namespace wf {

// Element of W as its matrix on the root lattice, row-major over the simple
// roots: column i holds the coefficients of w(alpha_i).
using WMat = std::vector<int8_t>;

WMat wmat_identity(int rank);
WMat wmat_mul(int rank, const WMat& a, const WMat& b);
WMat wmat_inverse(int rank, const WMat& m);
int wmat_det(int rank, const WMat& m);

/// Conjugacy classes, exact character table, b-invariants and sign-j-induction
/// for one finite Weyl group.  Groups of order up to a few million are built
/// by enumeration; W(E8) requires bundled data files.
class CharSystem {
  public:
    static const CharSystem& get(CartanType t);

    CartanType type() const { return type_; }
    const RootSystem& rs() const { return *rs_; }
    long long order() const { return order_; }
    int num_classes() const { return static_cast<int>(class_size_.size()); }
    long long class_size(int c) const { return class_size_[c]; }
    const std::vector<int>& class_word(int c) const { return class_word_[c]; }
    int num_irreps() const { return static_cast<int>(table_.size()); }
    long long chi(int s, int c) const { return table_[s][c]; }
    long long degree(int s) const { return table_[s][id_class_]; }
    long long b_invariant(int s) const { return b_[s]; }
    int identity_class() const { return id_class_; }
    int sign_irrep() const;
    int trivial_irrep() const;

    // class of an element; only for enumerated groups
    int class_of(const WMat& m) const;
    bool enumerated() const { return !element_class_.empty(); }

    // j_{W'}^W(sgn) for the reflection subgroup W' generated by the roots;
    // returns the irreducible index; asserts the b-matching constituent is
    // unique with multiplicity one.
    int j_induce_sign(const std::vector<Root>& sub_positive_roots) const;

    // O_Spr as an orbit name, from the bundled springer table.
    const std::string& springer_orbit_name(int irrep) const;

    // characters of S^m(V) as class functions (exact); m <= |Phi^+|
    std::vector<std::string> validate() const;  // returns list of failures (empty = ok)

  private:
    explicit CharSystem(CartanType t);
    void build_by_enumeration();
    void load_from_files();
    void compute_b_invariants();
    void load_springer();

    CartanType type_;
    std::shared_ptr<const RootSystem> rs_;
    long long order_ = 0;
    int id_class_ = -1;
    std::vector<long long> class_size_;
    std::vector<std::vector<int>> class_word_;
    std::vector<WMat> class_rep_;
    std::vector<std::vector<long long>> table_;  // table_[irrep][class]
    std::vector<long long> b_;
    std::map<std::string, int> springer_;        // irrep index -> orbit name
    std::vector<std::string> springer_by_irrep_;

    // enumeration data
    std::vector<WMat> elements_;
    std::map<WMat, int> element_index_;
    std::vector<int> element_class_;
};

}  // namespace wf
