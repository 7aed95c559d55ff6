#include <doctest.h>

#include "wf/pipeline.hpp"

using namespace wf;

namespace {
CoverDatum cover(const std::string& spec, long long n) {
    return CoverDatum(std::make_shared<RootSystem>(parse_type_spec(spec)), n);
}
std::string wf1(const std::string& spec, long long n) {
    auto labels = wavefront(cover(spec, n));
    REQUIRE(labels.size() == 1);
    return labels[0].str();
}
}  // namespace

TEST_CASE("named wave front values") {
    CHECK(wf1("A1", 2) == "A1:[2]");
    CHECK(wf1("A2", 2) == "A2:[2,1]");
    CHECK(wf1("B2", 2) == "B2:[2,2,1]");
    CHECK(wf1("C2", 2) == "C2:[2,1,1]");
    CHECK(wf1("C2", 3) == "C2:[2,2]");
    CHECK(wf1("D4", 2) == "D4:[3,2,2,1]");
    CHECK(wf1("A3", 3) == "A3:[3,1]");
}

TEST_CASE("n = 1 gives the zero orbit") {
    for (const std::string& spec : {"A1", "A4", "B3", "C3", "D4"}) {
        CoverDatum cd = cover(spec, 1);
        auto labels = wavefront(cd);
        REQUIRE(labels.size() == 1);
        const auto& tp = labels[0].classical;
        REQUIRE(tp.has_value());
        CHECK(tp->partition.largest() == 1);
    }
}

TEST_CASE("identity on a small classical grid") {
    for (const std::string& spec : {"A1", "A2", "A3", "B2", "B3", "C2", "C3", "D4"}) {
        for (long long n = 1; n <= 6; ++n) {
            CoverDatum cd = cover(spec, n);
            Report rep = verify_identity(cd);
            CAPTURE(spec);
            CAPTURE(n);
            REQUIRE(rep.components.size() == 1);
            CHECK(rep.components[0].equal);
        }
    }
}

TEST_CASE("type A wave fronts are monotone in n") {
    for (int r = 1; r <= 6; ++r) {
        Partition prev;
        for (long long n = 1; n <= 8; ++n) {
            CoverDatum cd = cover("A" + std::to_string(r), n);
            auto labels = wavefront(cd);
            const auto& p = labels[0].classical->partition;
            if (n > 1) CHECK(dominance_leq(prev, p));
            prev = p;
        }
    }
}

TEST_CASE("products verify componentwise") {
    CoverDatum cd = cover("A2xC2", 2);
    auto labels = wavefront(cd);
    REQUIRE(labels.size() == 2);
    CHECK(labels[0].str() == "A2:[2,1]");
    CHECK(labels[1].str() == "C2:[2,1,1]");
    Report rep = verify_identity(cd);
    CHECK(rep.all_equal);
}

TEST_CASE("nontrivial Q normalizes through the reduction") {
    // C2 with Q = 3 on the short coroots and n = 6 behaves like n = 2
    CoverDatum cd(std::make_shared<RootSystem>(parse_type_spec("C2")), 6, {3});
    auto labels = wavefront(cd);
    REQUIRE(labels.size() == 1);
    CHECK(labels[0].str() == "C2:[2,1,1]");
}

TEST_CASE("equivariance under coweight translation and Weyl action") {
    // the saturated orbit at w(y + y0), y0 in Y^{sc}_{Q,n}, matches the orbit at y
    for (const std::string& spec : {"A2", "B2", "C2"}) {
        for (long long n = 1; n <= 4; ++n) {
            CoverDatum cd = cover(spec, n);
            const RootSystem& rs = cd.rs();
            Subsystem full(rs, rs.positive_roots());
            // y in the coweight lattice: Phi_y = Phi
            QVec y(rs.rank(), Rat(0));
            y[0] = Rat(1);
            auto orbit_at = [&](const QVec& pt) {
                Subsystem sub = phi_qn_at(pt, cd);
                return saturated_orbit(cd, full, sub.positive_roots());
            };
            OrbitLabel base = orbit_at(y);
            // translate by n * coroot lattice elements (always in Y^{sc}_{Q,n})
            for (int i = 0; i < rs.rank(); ++i) {
                QVec y2 = y;
                for (int j = 0; j < rs.rank(); ++j)
                    y2[j] += Rat(cd.n() * rs.cartan(j, i));
                CHECK(orbit_at(y2) == base);
            }
            // Weyl images
            for (int i = 0; i < rs.rank(); ++i) CHECK(orbit_at(rs.reflect_point(i, y)) == base);
        }
    }
}
