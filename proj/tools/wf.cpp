#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "wf/partitions.hpp"
#include "wf/pipeline.hpp"
#include "wf/weylchar.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInequality = 1;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;

constexpr const char* kMachineHeader = "wf-machine\t1";

wf::CoverDatum make_cover(const std::string& type_spec, long long n, const std::string& q) {
    std::ostringstream os;
    os << "type=" << type_spec << " n=" << n;
    if (!q.empty()) os << " q=" << q;
    return wf::parse_cover(os.str());
}

std::string orbit_text(const std::vector<wf::OrbitLabel>& labels) {
    std::string out;
    for (size_t i = 0; i < labels.size(); ++i) out += (i ? " x " : "") + labels[i].str();
    return out;
}

int run_compute(const std::string& type_spec, long long n, const std::string& q,
                bool per_vertex, const std::string& format) {
    wf::CoverDatum cd = make_cover(type_spec, n, q);
    if (!per_vertex) {
        auto labels = wf::wavefront(cd);
        if (format == "machine") {
            std::cout << kMachineHeader << "\n";
            for (const auto& l : labels) std::cout << "orbit\t" << l.str() << "\n";
        } else {
            std::cout << orbit_text(labels) << "\n";
        }
        return kExitOk;
    }
    wf::Report rep = wf::verify_identity(cd);
    for (const auto& comp : rep.components) {
        if (format == "machine") {
            std::cout << kMachineHeader << "\n";
            for (const auto& v : comp.vertices) {
                std::cout << "vertex\t" << comp.type.str() << "\t";
                for (size_t i = 0; i < v.vertex.size(); ++i)
                    std::cout << (i ? "," : "") << v.vertex[i].str();
                std::cout << "\t" << v.num_points << "\t" << v.best.str() << "\t";
                for (size_t i = 0; i < v.best_discarded.size(); ++i)
                    std::cout << (v.best_discarded[i] ? '1' : '0');
                std::cout << "\n";
            }
            std::cout << "orbit\t" << comp.lhs.str() << "\n";
        } else {
            std::cout << comp.type.str() << " n=" << comp.n
                      << "  wavefront: " << comp.lhs.str() << "\n";
            for (const auto& v : comp.vertices) {
                std::cout << "  vertex (";
                for (size_t i = 0; i < v.vertex.size(); ++i)
                    std::cout << (i ? "," : "") << v.vertex[i].str();
                std::cout << ")  Phi_v=" << v.phi_v_type << "  points=" << v.num_points
                          << "  best=" << v.best.str() << "  discarded:";
                for (size_t i = 0; i < v.best_discarded.size(); ++i)
                    if (v.best_discarded[i]) std::cout << " " << v.node_names[i];
                std::cout << "\n";
            }
        }
    }
    return kExitOk;
}

int run_verify(const std::string& types, int max_rank, long long max_n, bool include_e7e8,
               const std::string& format) {
    std::vector<wf::CartanType> grid;
    std::istringstream is(types);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) continue;
        if (tok.size() == 1 || (tok.size() > 1 && !std::isdigit(static_cast<unsigned char>(
                                                      tok[1])))) {
            // a bare series letter: expand ranks 1/2/3..max_rank
            char c = static_cast<char>(std::toupper(static_cast<unsigned char>(tok[0])));
            int lo = (c == 'A') ? 1 : (c == 'D') ? 3 : 2;
            if (max_rank < lo) throw CLI::ValidationError("--max-rank too small for " + tok);
            for (int r = lo; r <= max_rank; ++r)
                grid.push_back({wf::parse_type_spec(std::string(1, c) + std::to_string(r))[0]});
        } else {
            grid.push_back(wf::parse_type_spec(tok)[0]);
        }
    }
    if (grid.empty()) throw CLI::ValidationError("empty verification grid");
    for (const auto& t : grid)
        if (t.series == wf::Series::E && t.rank >= 7 && !include_e7e8)
            throw CLI::ValidationError(t.str() + " requires --include-e7e8");
    bool all = true;
    bool machine = (format == "machine");
    if (machine) std::cout << kMachineHeader << "\n";
    for (const auto& t : grid) {
        for (long long n = 1; n <= max_n; ++n) {
            auto rs = std::make_shared<wf::RootSystem>(std::vector<wf::CartanType>{t});
            wf::CoverDatum cd(rs, n);
            wf::Report rep = wf::verify_identity(cd);
            const auto& comp = rep.components.front();
            all = all && rep.all_equal;
            if (machine)
                std::cout << "verify\t" << t.str() << "\t" << n << "\t"
                          << (rep.all_equal ? "pass" : "FAIL") << "\t" << comp.lhs.str()
                          << "\t" << comp.rhs.str() << "\n";
            else
                std::cout << t.str() << " n=" << n << "  " << comp.lhs.str() << "  "
                          << (rep.all_equal ? "pass" : ("FAIL (rhs " + comp.rhs.str() + ")"))
                          << "\n";
        }
    }
    return all ? kExitOk : kExitInequality;
}

int run_orbits(const std::string& type_spec, const std::string& format) {
    auto types = wf::parse_type_spec(type_spec);
    bool machine = (format == "machine");
    if (machine) std::cout << kMachineHeader << "\n";
    for (const auto& t : types) {
        wf::RootSystem rs({t});
        if (t.series == wf::Series::E || t.series == wf::Series::F ||
            t.series == wf::Series::G) {
            const auto& tab = wf::ExceptionalOrbits::get(t);
            for (const auto& o : tab.orbits()) {
                if (machine)
                    std::cout << "orbit\t" << t.str() << ":" << o.name << "\t" << o.dim << "\t"
                              << o.wdd.str() << "\n";
                else
                    std::cout << t.str() << ":" << o.name << "  dim=" << o.dim
                              << "  wdd=" << o.wdd.str() << "\n";
            }
            // closure edges (Hasse of the bundled order)
            const auto& os = tab.orbits();
            for (size_t i = 0; i < os.size(); ++i)
                for (size_t j = 0; j < os.size(); ++j) {
                    if (i == j) continue;
                    auto a = wf::OrbitLabel::of(t, os[i]);
                    auto b = wf::OrbitLabel::of(t, os[j]);
                    if (!wf::closure_leq(a, b, rs)) continue;
                    bool covered = false;
                    for (size_t m = 0; m < os.size() && !covered; ++m) {
                        if (m == i || m == j) continue;
                        auto c = wf::OrbitLabel::of(t, os[m]);
                        if (wf::closure_leq(a, c, rs) && wf::closure_leq(c, b, rs))
                            covered = true;
                    }
                    if (!covered)
                        std::cout << (machine ? "edge\t" : "  closure: ") << os[i].name
                                  << (machine ? "\t" : " < ") << os[j].name << "\n";
                }
        } else {
            for (const auto& tp : wf::all_orbits(t.series, t.rank)) {
                auto w = wf::wdd_classical(tp);
                if (machine)
                    std::cout << "orbit\t" << tp.str() << "\t"
                              << (tp.partition.size() - dual(tp.partition).length()) << "\t"
                              << w.str() << "\n";
                else
                    std::cout << tp.str() << "  wdd=" << w.str() << "\n";
            }
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stable wave front sets of theta representations of tame covers"};
    app.require_subcommand(1);

    std::string type_spec, q, format = "table", types;
    long long n = 1, max_n = 8;
    int max_rank = 6;
    bool per_vertex = false, include_e7e8 = false;

    auto* compute = app.add_subcommand("compute", "compute the stable wave front orbit");
    compute->add_option("--type", type_spec, "Cartan type, e.g. C3 or C3xD4")->required();
    compute->add_option("--n", n, "cover degree")->required()->check(CLI::PositiveNumber);
    compute->add_option("--q", q, "Q values per coroot length class, e.g. short:1,long:2");
    compute->add_flag("--per-vertex", per_vertex, "print the per-vertex breakdown");
    compute->add_option("--format", format)->check(CLI::IsMember({"table", "csv", "machine"}));

    auto* verify = app.add_subcommand("verify", "verify the main identity over a grid");
    verify->add_option("--types", types, "comma list: series letters or explicit types")
        ->required();
    verify->add_option("--max-rank", max_rank)->check(CLI::PositiveNumber);
    verify->add_option("--max-n", max_n)->check(CLI::PositiveNumber);
    verify->add_flag("--include-e7e8", include_e7e8, "allow the expensive E7/E8 paths");
    verify->add_option("--format", format)->check(CLI::IsMember({"table", "csv", "machine"}));

    auto* orbits = app.add_subcommand("orbits", "dump orbit labels and diagrams");
    orbits->add_option("--type", type_spec)->required();
    orbits->add_option("--format", format)->check(CLI::IsMember({"table", "csv", "machine"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(compute)) return run_compute(type_spec, n, q, per_vertex, format);
        if (app.got_subcommand(verify))
            return run_verify(types, max_rank, max_n, include_e7e8, format);
        if (app.got_subcommand(orbits)) return run_orbits(type_spec, format);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}
