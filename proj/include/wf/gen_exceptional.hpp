#pragma once

#include "wf/rootdata.hpp"

namespace wf {

// Computes and writes data/<type>/{wdd,classes,chartable,springer,closure}
// for one exceptional type.  See tools/gen_weyl_data.cpp.
void generate_exceptional_data(CartanType t);

}  // namespace wf
