#include <doctest.h>

#include "wf/alcove.hpp"
#include "wf/cover.hpp"

using namespace wf;

namespace {
std::shared_ptr<const RootSystem> mk(const std::string& spec) {
    return std::make_shared<RootSystem>(parse_type_spec(spec));
}
}  // namespace

TEST_CASE("q values per coroot length class") {
    CoverDatum cd(mk("B3"), 2);
    Root short_root(3, 0);  // alpha_3 = e_3 is short; its coroot is long
    short_root[2] = 1;
    Root long_root(3, 0);
    long_root[0] = 1;
    CHECK(cd.q_coroot(long_root) == 1);   // coroots of long roots are short
    CHECK(cd.q_coroot(short_root) == 2);
    CHECK(cd.n_alpha(long_root) == 2);
    CHECK(cd.n_alpha(short_root) == 1);
}

TEST_CASE("bq form") {
    CoverDatum cd(mk("C2"), 2);
    const RootSystem& rs = cd.rs();
    // B_Q(alpha^vee, alpha^vee) = 2 Q(alpha^vee)
    for (int i = 0; i < rs.rank(); ++i) {
        IVec av(rs.rank(), 0);
        av[i] = 1;
        Root ai(rs.rank(), 0);
        ai[i] = 1;
        CHECK(bq_form(av, av, cd) == 2 * cd.q_coroot(ai));
    }
    // bilinearity: B_Q(y, 0) = 0
    IVec y{3, -2}, zero{0, 0};
    CHECK(bq_form(y, zero, cd) == 0);
    // B_Q(y, alpha^vee) = Q(alpha^vee) <alpha, y> for all roots, small ranks
    for (const std::string& spec : {"A2", "B2", "C3", "G2"}) {
        CoverDatum c2(mk(spec), 3);
        const RootSystem& rs2 = c2.rs();
        std::vector<IVec> ys;
        ys.push_back(IVec(rs2.rank(), 1));
        ys.push_back(IVec(rs2.rank(), 0));
        ys.back()[0] = 2;
        for (const auto& yy : ys)
            for (const auto& alpha : rs2.positive_roots()) {
                IVec av = rs2.coroot_coeffs(alpha);
                long long lhs = bq_form(yy, av, c2);
                // <alpha, y> for y = sum y_i alpha_i^vee
                long long rhs = 0;
                for (int i = 0; i < rs2.rank(); ++i) {
                    Root ai(rs2.rank(), 0);
                    ai[i] = 1;
                    rhs += yy[i] * rs2.pair_with_coroot(alpha, ai);
                }
                CHECK(lhs == c2.q_coroot(alpha) * rhs);
            }
    }
}

TEST_CASE("yqn membership") {
    SUBCASE("n y always lies in Y_{Q,n}") {
        CoverDatum cd(mk("B2"), 3);
        IVec y{1, 2};
        IVec ny{3, 6};
        CHECK(yqn_membership(ny, cd));
    }
    SUBCASE("A1 coroot") {
        CoverDatum cd2(mk("A1"), 2);
        CHECK(yqn_membership({1}, cd2));  // B_Q(a^vee,a^vee) = 2 in 2Z
        CoverDatum cd4(mk("A1"), 4);
        CHECK_FALSE(yqn_membership({1}, cd4));
    }
}

TEST_CASE("reduce_cover") {
    SUBCASE("already reduced") {
        CoverDatum cd(mk("B2"), 4);
        auto comps = reduce_cover(cd);
        REQUIRE(comps.size() == 1);
        CHECK(comps[0].n() == 4);
        CHECK(comps[0].reduced());
    }
    SUBCASE("C2 with short value 3 and n = 6") {
        CoverDatum cd(mk("C2"), 6, {3});
        auto comps = reduce_cover(cd);
        REQUIRE(comps.size() == 1);
        CHECK(comps[0].n() == 2);  // n' = n / gcd(l, n)
    }
    SUBCASE("products split") {
        CoverDatum cd(mk("A2xB2"), 3);
        auto comps = reduce_cover(cd);
        REQUIRE(comps.size() == 2);
        CHECK(comps[0].rs().components()[0].str() == "A2");
        CHECK(comps[1].rs().components()[0].str() == "B2");
    }
}

TEST_CASE("cover text form") {
    CoverDatum cd = parse_cover("type=C3 n=4 q=long:2,short:1");
    CHECK(cd.n() == 4);
    CHECK(cd.q_short(0) == 1);
    CHECK_THROWS_AS(parse_cover("type=C3 n=4 q=long:1,short:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_cover("type=C3"), std::invalid_argument);
}

TEST_CASE("exceptional character pairs to one on modified coroots") {
    for (const std::string& spec : {"A2", "B2", "G2"}) {
        for (long long n = 1; n <= 4; ++n) {
            CoverDatum cd(mk(spec), n);
            auto nu = exceptional_character(cd);
            const RootSystem& rs = cd.rs();
            for (int i = 0; i < rs.rank(); ++i) {
                Root ai(rs.rank(), 0);
                ai[i] = 1;
                CHECK(nu.coroot_values[i] * Rat(cd.n_alpha(ai)) == Rat(1));
            }
        }
    }
}

TEST_CASE("phi_nu") {
    SUBCASE("n = 1 gives the full system") {
        CoverDatum cd(mk("B3"), 1);
        Subsystem nu = phi_nu(cd);
        CHECK(nu.size() == cd.rs().positive_roots().size() * 2);
    }
    SUBCASE("A1, n = 2: the congruence forces a = 1 and Phi_nu empty") {
        // W_nu is trivial here; the theta representation is the even Weil
        // representation and the wave front is the regular orbit (2)
        CoverDatum cd(mk("A1"), 2);
        QVec y = phi_nu_point(cd);
        CHECK(y[0] == Rat(1));
        Subsystem nu = phi_nu(cd);
        CHECK(nu.empty());
    }
    SUBCASE("C2, n = 2 yields the short A1 x A1") {
        CoverDatum cd(mk("C2"), 2);
        Subsystem nu = phi_nu(cd);
        REQUIRE(nu.factors().size() == 2);
        CHECK(nu.factors()[0].type.str() == "A1");
        CHECK(nu.factors()[1].type.str() == "A1");
        for (const auto& b : nu.positive_roots()) CHECK(cd.rs().d_of_root(b) == 1);
    }
    SUBCASE("choice independence over small residues") {
        // phi_qn_at at y + n_alpha-shifted choices gives the same subsystem
        for (const std::string& spec : {"A2", "B2", "C2", "G2"}) {
            for (long long n = 1; n <= 6; ++n) {
                CoverDatum cd(mk(spec), n);
                Subsystem base = phi_nu(cd);
                const RootSystem& rs = cd.rs();
                // shift each coordinate by its n_alpha and recompute
                QVec y = phi_nu_point(cd);
                for (int i = 0; i < rs.rank(); ++i) {
                    Root ai(rs.rank(), 0);
                    ai[i] = 1;
                    QVec y2 = y;
                    y2[i] += Rat(cd.n_alpha(ai));
                    Subsystem other = phi_qn_at(y2, cd);
                    CHECK(other.positive_roots() == base.positive_roots());
                }
            }
        }
    }
}
