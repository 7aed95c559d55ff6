#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wf/rat.hpp"

namespace wf {

enum class Series : int { A, B, C, D, E, F, G };

struct CartanType {
    Series series;
    int rank;

    friend bool operator==(const CartanType& a, const CartanType& b) {
        return a.series == b.series && a.rank == b.rank;
    }
    std::string str() const;
};

// Parses "A5", "C3xD4" (case-insensitive, 'x' separates components).
std::vector<CartanType> parse_type_spec(const std::string& spec);

using IVec = std::vector<long long>;   // integer vector
using QVec = std::vector<Rat>;         // rational vector

// A root, stored as its integer coefficients over the simple roots.
using Root = IVec;

/// Exact root system for a product of irreducible types in Bourbaki
/// numbering.  Roots live in the simple-root basis; points of Y (x) Q live
/// in the fundamental-coweight basis, so alpha(y) is an integer dot product
/// of the coefficient vectors.
class RootSystem {
  public:
    explicit RootSystem(std::vector<CartanType> components);

    int rank() const { return rank_; }
    const std::vector<CartanType>& components() const { return components_; }
    int component_of(int simple_index) const { return comp_of_simple_[simple_index]; }
    const std::vector<int>& simples_of_component(int c) const { return comp_simples_[c]; }

    // cartan(i, j) = <alpha_i, alpha_j^vee>
    long long cartan(int i, int j) const { return cartan_[i][j]; }

    // half squared length of alpha_i, normalized to 1 on short roots of its
    // component
    long long d(int i) const { return d_[i]; }
    long long d_of_root(const Root& r) const;
    long long d_max(int comp) const { return d_max_[comp]; }

    const std::vector<Root>& positive_roots() const { return positive_roots_; }
    std::vector<Root> all_roots() const;
    const Root& highest_root(int comp) const { return highest_roots_[comp]; }
    // marks: coefficients of the highest root on the simple roots of comp
    IVec marks(int comp) const;

    bool is_root(const Root& r) const;

    // <beta, alpha_j^vee> for a root-coefficient vector beta
    long long pair_with_simple_coroot(const Root& beta, int j) const;
    // <beta, gamma^vee> for roots beta, gamma
    long long pair_with_coroot(const Root& beta, const Root& gamma) const;

    // alpha(y) with y in fundamental-coweight coordinates
    Rat eval(const Root& alpha, const QVec& y) const;

    // simple reflection on a root
    Root reflect_root(int i, const Root& beta) const;
    // reflection s_gamma on a root (gamma a root)
    Root reflect_root_by(const Root& gamma, const Root& beta) const;
    // simple reflection on a coweight-coordinate point
    QVec reflect_point(int i, const QVec& y) const;

    // gamma^vee in the simple-coroot basis (integer)
    IVec coroot_coeffs(const Root& gamma) const;

    // Makes y dominant; returns the dominant point and the word applied
    // (leftmost letter acts last).
    std::pair<QVec, std::vector<int>> weyl_dominant(const QVec& y) const;

    std::string root_str(const Root& r) const;

  private:
    void build_component(const CartanType& t, int offset);
    void enumerate_roots();

    std::vector<CartanType> components_;
    int rank_ = 0;
    std::vector<int> comp_of_simple_;
    std::vector<std::vector<int>> comp_simples_;
    std::vector<IVec> cartan_;
    IVec d_;
    IVec d_max_;
    std::vector<Root> positive_roots_;
    std::vector<Root> highest_roots_;
};

/// A subsystem of a parent root system: a subset of roots closed under
/// negation and under its own reflections, with an extracted simple system
/// and factor classification.  (Subsystems arising from covers, such as
/// Phi_y^{Q,n}, are generally not closed under ambient root addition.)
struct SubsystemFactor {
    CartanType type;
    std::vector<int> simple_indices;  // indices into Subsystem::simple_system,
                                      // in Bourbaki order for `type`
    bool long_roots;                  // factor lies in the long roots of the parent
};

class Subsystem {
  public:
    // roots: subset of parent roots (pass positives only or the full +-
    // closed set; negatives are filled in).  Checks closure under internal
    // addition and negation.
    Subsystem(const RootSystem& parent, std::vector<Root> roots);

    const RootSystem& parent() const { return *parent_; }
    // positive roots of the subsystem w.r.t. the parent's positivity
    const std::vector<Root>& positive_roots() const { return positive_roots_; }
    const std::vector<Root>& simple_system() const { return simple_system_; }
    const std::vector<SubsystemFactor>& factors() const { return factors_; }
    int rank() const { return static_cast<int>(simple_system_.size()); }
    bool empty() const { return simple_system_.empty(); }
    size_t size() const { return 2 * positive_roots_.size(); }

    // factor containing the given root (any root of the subsystem)
    int factor_of(const Root& r) const;
    // expansion of a subsystem root over the simple roots of its factor, in
    // the factor's Bourbaki order (a root of the factor's abstract system)
    Root factor_coords(int factor, const Root& r) const;

    std::string factors_str() const;

  private:
    const RootSystem* parent_;
    std::vector<Root> positive_roots_;
    std::vector<Root> simple_system_;
    std::vector<SubsystemFactor> factors_;
};

// Classifies a simple system given by pairwise Cartan integers; returns the
// factors with Bourbaki-ordered index lists.  `pair(i,j)` must return
// <delta_i, delta_j^vee>, `dval(i)` the relative half square length and
// `dmax(i)` the maximal half square length in the ambient component of node i.
std::vector<SubsystemFactor> classify_simple_system(
    int n, const std::function<long long(int, int)>& pair,
    const std::function<long long(int)>& dval,
    const std::function<long long(int)>& dmax);

}  // namespace wf
