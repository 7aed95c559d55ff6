#include <doctest.h>

#include "wf/pipeline.hpp"

using namespace wf;

// The CLI binary itself is exercised by the acceptance suite and shell tests;
// here we pin the stable text forms the formats are built from.
TEST_CASE("orbit label text forms") {
    auto tp = make_typed(Partition{4, 2}, Series::C, 3);
    CHECK(OrbitLabel::of(tp).str() == "C3:[4,2]");
}

TEST_CASE("cover datum text form") {
    CoverDatum cd = parse_cover("type=B3 n=2");
    CHECK(cd.str() == "type=B3 n=2 q=1");
}
