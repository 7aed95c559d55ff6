#pragma once

#include <memory>
#include <string>
#include <vector>

#include "wf/rootdata.hpp"

namespace wf {

class Subsystem;

/// Degree-n cover datum: a root system together with n and a W-invariant
/// integral quadratic form Q on the coroot lattice.  Q is determined per
/// irreducible component by its value on the short coroots (the coroots of
/// the long roots); values on the other length classes follow from
/// W-invariance and the quadratic-form condition.
class CoverDatum {
  public:
    CoverDatum(std::shared_ptr<const RootSystem> rs, long long n,
               std::vector<long long> q_short_per_component);
    // Q = 1 on short coroots everywhere.
    CoverDatum(std::shared_ptr<const RootSystem> rs, long long n);

    const RootSystem& rs() const { return *rs_; }
    std::shared_ptr<const RootSystem> rs_ptr() const { return rs_; }
    long long n() const { return n_; }
    long long q_short(int c) const { return q_short_[c]; }

    // Q(alpha^vee) for a root alpha
    long long q_coroot(const Root& alpha) const;
    // n_alpha = n / gcd(n, Q(alpha^vee))
    long long n_alpha(const Root& alpha) const;

    bool reduced() const;  // irreducible with q_short == 1

    std::string str() const;

  private:
    std::shared_ptr<const RootSystem> rs_;
    long long n_;
    std::vector<long long> q_short_;
};

// Parses "type=C3 n=4 q=long:1,short:1" (q optional; values per coroot
// length class, validated against the quadratic-form constraint).
CoverDatum parse_cover(const std::string& text);

// B_Q(y, z) for y, z in simple-coroot coordinates (elements of Y^sc).
long long bq_form(const IVec& y, const IVec& z, const CoverDatum& cd);

// Membership in Y_{Q,n} = {y : B_Q(y, y') in nZ for all y'}.
bool yqn_membership(const IVec& y, const CoverDatum& cd);

// Splits into irreducible components and normalizes Q to 1 on short coroots,
// replacing n by n' = n / gcd(l, n).  The modified coroots are unchanged.
std::vector<CoverDatum> reduce_cover(const CoverDatum& cd);

/// Exceptional character nu: nu(alpha^vee_{Q,n}) = 1 for all simple alpha.
/// Stored as the rational vector of values nu(alpha_i^vee) = 1/n_{alpha_i}.
struct ExceptionalCharacter {
    QVec coroot_values;
};
ExceptionalCharacter exceptional_character(const CoverDatum& cd);

// The point y = sum a_alpha omega_{alpha^vee} with
// a_alpha Q(alpha^vee)/gcd(n, Q(alpha^vee)) = 1 mod n_alpha (least positive
// representatives), in fundamental-coweight coordinates.
QVec phi_nu_point(const CoverDatum& cd);

// W_nu's root system Phi_nu = Phi_y^{Q,n} at the point above.  Requires a
// reduced datum.
Subsystem phi_nu(const CoverDatum& cd);

}  // namespace wf
