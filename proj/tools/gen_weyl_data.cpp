// Generator for the bundled static data under data/<type>/: orbit lists with
// weighted Dynkin diagrams, conjugacy classes, character tables and Springer
// rows for the exceptional Weyl groups.  Run from the repository root:
//
//   gen-weyl-data g2 f4 e6            # the default set
//   gen-weyl-data e7 e8               # the opt-in heavyweights
//
// The emitted files are validated on every load, so regeneration is safe.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "wf/gen_exceptional.hpp"

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: gen-weyl-data <type> [<type> ...]   (e.g. g2 f4 e6)\n";
        return 2;
    }
    try {
        for (int i = 1; i < argc; ++i) {
            std::string t = argv[i];
            for (auto& c : t) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
            wf::generate_exceptional_data(wf::parse_type_spec(t)[0]);
        }
    } catch (const std::exception& e) {
        std::cerr << "generation failed: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
