#include "wf/cover.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "wf/alcove.hpp"

namespace wf {

CoverDatum::CoverDatum(std::shared_ptr<const RootSystem> rs, long long n,
                       std::vector<long long> q_short_per_component)
    : rs_(std::move(rs)), n_(n), q_short_(std::move(q_short_per_component)) {
    if (n_ < 1) throw std::invalid_argument("cover degree n must be >= 1");
    if (q_short_.size() != rs_->components().size())
        throw std::invalid_argument("one Q value per component required");
    for (long long q : q_short_)
        if (q < 1) throw std::invalid_argument("Q values must be positive");
}

CoverDatum::CoverDatum(std::shared_ptr<const RootSystem> rs, long long n)
    : CoverDatum(rs, n, std::vector<long long>(rs->components().size(), 1)) {}

long long CoverDatum::q_coroot(const Root& alpha) const {
    // Q(alpha^vee) = l * d_max / d_alpha: coroots of long roots are the short
    // coroots and carry the value l.
    int comp = 0;
    for (int k = 0; k < rs_->rank(); ++k)
        if (alpha[k] != 0) { comp = rs_->component_of(k); break; }
    return q_short_[comp] * rs_->d_max(comp) / rs_->d_of_root(alpha);
}

long long CoverDatum::n_alpha(const Root& alpha) const {
    return n_ / std::gcd(n_, q_coroot(alpha));
}

bool CoverDatum::reduced() const {
    return rs_->components().size() == 1 && q_short_[0] == 1;
}

std::string CoverDatum::str() const {
    std::ostringstream os;
    os << "type=";
    for (size_t c = 0; c < rs_->components().size(); ++c)
        os << (c ? "x" : "") << rs_->components()[c].str();
    os << " n=" << n_ << " q=";
    for (size_t c = 0; c < q_short_.size(); ++c) os << (c ? ";" : "") << q_short_[c];
    return os.str();
}

CoverDatum parse_cover(const std::string& text) {
    std::istringstream is(text);
    std::string tok, type_spec;
    long long n = -1;
    std::string qspec;
    while (is >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("cover datum tokens must be key=value");
        std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
        if (key == "type") type_spec = val;
        else if (key == "n") n = std::stoll(val);
        else if (key == "q") qspec = val;
        else throw std::invalid_argument("unknown cover datum key '" + key + "'");
    }
    if (type_spec.empty() || n < 1)
        throw std::invalid_argument("cover datum needs type=... and n=...");
    auto rs = std::make_shared<RootSystem>(parse_type_spec(type_spec));
    if (rs->components().size() != 1 && !qspec.empty())
        throw std::invalid_argument("per-class q only supported for irreducible types");
    if (qspec.empty()) return CoverDatum(rs, n);
    // "long:1,short:2" - names refer to coroot length classes
    long long q_long = -1, q_short = -1;
    std::istringstream qs(qspec);
    while (std::getline(qs, tok, ',')) {
        auto colon = tok.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("q entries must be class:value");
        std::string cls = tok.substr(0, colon);
        long long v = std::stoll(tok.substr(colon + 1));
        if (cls == "long") q_long = v;
        else if (cls == "short") q_short = v;
        else throw std::invalid_argument("unknown coroot length class '" + cls + "'");
    }
    long long dmax = rs->d_max(0);
    if (q_short < 0 && q_long < 0) return CoverDatum(rs, n);
    if (q_short < 0) {
        if (dmax == 1) q_short = q_long;  // single length class
        else throw std::invalid_argument("q needs the short coroot class value");
    }
    if (q_long >= 0) {
        // long coroots are the coroots of the short roots: Q = l * dmax there
        long long expected = (dmax == 1) ? q_short : q_short * dmax;
        if (q_long != expected)
            throw std::invalid_argument(
                "q values violate the W-invariant quadratic form constraint (expect long=" +
                std::to_string(expected) + ")");
    }
    return CoverDatum(rs, n, {q_short});
}

long long bq_form(const IVec& y, const IVec& z, const CoverDatum& cd) {
    // B_Q(alpha_i^vee, alpha_j^vee) = Q(alpha_j^vee) <alpha_j, alpha_i^vee>
    const RootSystem& rs = cd.rs();
    long long acc = 0;
    for (int i = 0; i < rs.rank(); ++i) {
        if (y[i] == 0) continue;
        for (int j = 0; j < rs.rank(); ++j) {
            if (z[j] == 0) continue;
            Root aj(rs.rank(), 0);
            aj[j] = 1;
            acc += y[i] * z[j] * cd.q_coroot(aj) * rs.cartan(j, i);
        }
    }
    return acc;
}

bool yqn_membership(const IVec& y, const CoverDatum& cd) {
    const RootSystem& rs = cd.rs();
    for (int j = 0; j < rs.rank(); ++j) {
        IVec basis(rs.rank(), 0);
        basis[j] = 1;
        if (bq_form(y, basis, cd) % cd.n() != 0) return false;
    }
    return true;
}

std::vector<CoverDatum> reduce_cover(const CoverDatum& cd) {
    std::vector<CoverDatum> out;
    const RootSystem& rs = cd.rs();
    for (size_t c = 0; c < rs.components().size(); ++c) {
        auto comp_rs = std::make_shared<RootSystem>(
            std::vector<CartanType>{rs.components()[c]});
        long long l = cd.q_short(static_cast<int>(c));
        long long n2 = cd.n() / std::gcd(l, cd.n());
        CoverDatum reduced(comp_rs, n2, {1});
        // modified coroots are unchanged: n_alpha agrees on every length class
        for (const auto& alpha : comp_rs->positive_roots()) {
            Root amb(rs.rank(), 0);
            int off = rs.simples_of_component(static_cast<int>(c)).front();
            for (int k = 0; k < comp_rs->rank(); ++k) amb[off + k] = alpha[k];
            if (cd.n_alpha(amb) != reduced.n_alpha(alpha))
                throw std::logic_error("cover reduction changed a modified coroot");
        }
        out.push_back(std::move(reduced));
    }
    return out;
}

ExceptionalCharacter exceptional_character(const CoverDatum& cd) {
    ExceptionalCharacter nu;
    const RootSystem& rs = cd.rs();
    for (int i = 0; i < rs.rank(); ++i) {
        Root ai(rs.rank(), 0);
        ai[i] = 1;
        // nu(alpha^vee_{Q,n}) = n_alpha nu(alpha^vee) = 1
        nu.coroot_values.push_back(Rat(1, cd.n_alpha(ai)));
    }
    return nu;
}

QVec phi_nu_point(const CoverDatum& cd) {
    const RootSystem& rs = cd.rs();
    QVec y;
    for (int i = 0; i < rs.rank(); ++i) {
        Root ai(rs.rank(), 0);
        ai[i] = 1;
        long long q = cd.q_coroot(ai);
        long long g = std::gcd(cd.n(), q);
        long long na = cd.n() / g;
        long long qg = (q / g) % na;
        // least positive a with a * (q/g) = 1 mod n_alpha
        long long a = 1;
        if (na > 1) {
            for (a = 1; a <= na; ++a)
                if ((a * qg) % na == 1) break;
            if (a > na) throw std::logic_error("no inverse mod n_alpha; gcd violated");
        }
        y.push_back(Rat(a));
    }
    return y;
}

Subsystem phi_nu(const CoverDatum& cd) {
    if (!cd.reduced()) throw std::invalid_argument("phi_nu requires a reduced cover datum");
    return phi_qn_at(phi_nu_point(cd), cd);
}

}  // namespace wf
