#include "wf/orbits.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace wf {

bool operator==(const OrbitLabel& a, const OrbitLabel& b) {
    if (!(a.ambient == b.ambient)) return false;
    if (a.classical.has_value() != b.classical.has_value()) return false;
    if (a.classical) return *a.classical == *b.classical;
    return a.exceptional->name == b.exceptional->name;
}

std::string OrbitLabel::str() const {
    if (classical) return classical->str();
    return ambient.str() + ":" + exceptional->name;
}

Partition ad_jordan(const RootSystem& rs, const std::vector<int>& labels) {
    QVec h(labels.begin(), labels.end());
    std::vector<long long> weights(rs.rank(), 0);  // rank zeros from the torus
    for (const auto& alpha : rs.positive_roots()) {
        Rat v = rs.eval(alpha, h);
        if (!v.is_integer()) throw std::logic_error("ad_jordan: non-integral weight");
        weights.push_back(v.num);
        weights.push_back(-v.num);
    }
    // #strings with highest weight m is dim g(m) - dim g(m+2)
    std::map<long long, long long> dim;
    for (long long w : weights) dim[w]++;
    std::vector<long long> parts;
    for (auto it = dim.rbegin(); it != dim.rend() && it->first >= 0; ++it) {
        long long m = it->first;
        long long count = it->second - (dim.count(m + 2) ? dim[m + 2] : 0);
        for (long long c = 0; c < count; ++c) parts.push_back(m + 1);
    }
    Partition out(std::move(parts));
    long long dim_g = static_cast<long long>(rs.positive_roots().size()) * 2 + rs.rank();
    if (out.size() != dim_g) throw std::logic_error("ad_jordan: string decomposition mismatch");
    return out;
}

long long orbit_dim_from_wdd(const RootSystem& rs, const std::vector<int>& labels) {
    // dim orbit = dim g - dim ker ad(e) = dim g - #Jordan blocks
    Partition j = ad_jordan(rs, labels);
    return j.size() - j.length();
}

bool closure_leq(const OrbitLabel& a, const OrbitLabel& b, const RootSystem& rs) {
    if (!(a.ambient == b.ambient))
        throw std::invalid_argument("closure_leq: ambient types differ");
    if (a.classical) return dominance_leq(a.classical->partition, b.classical->partition);
    if (a.exceptional->name == b.exceptional->name) return true;
    Partition ja = ad_jordan(rs, a.exceptional->wdd.labels);
    Partition jb = ad_jordan(rs, b.exceptional->wdd.labels);
    if (ja == jb) return false;  // distinct orbits of equal dimension: incomparable
    return dominance_leq(ja, jb);
}

std::vector<OrbitLabel> max_orbits(std::vector<OrbitLabel> candidates, const RootSystem& rs) {
    if (candidates.empty()) throw std::invalid_argument("max_orbits: empty candidate list");
    std::vector<OrbitLabel> out;
    for (size_t i = 0; i < candidates.size(); ++i) {
        bool dominated = false, dup = false;
        for (size_t j = 0; j < candidates.size() && !dominated; ++j) {
            if (i == j) continue;
            if (candidates[i] == candidates[j]) {
                if (j < i) dup = true;  // keep first occurrence only
                continue;
            }
            if (closure_leq(candidates[i], candidates[j], rs)) dominated = true;
        }
        if (!dominated && !dup) out.push_back(candidates[i]);
    }
    return out;
}

std::vector<int> saturate_wdd(const RootSystem& ambient, const std::vector<Root>& delta,
                              const std::vector<int>& labels) {
    int r = ambient.rank();
    if (static_cast<int>(delta.size()) != r || static_cast<int>(labels.size()) != r)
        throw std::invalid_argument("saturate_wdd: need a full-rank pseudo-Levi");
    // Solve M h = labels, M[j][i] = coefficient of alpha_i in delta_j.
    std::vector<QVec> M(r, QVec(r));
    QVec rhs(r);
    for (int j = 0; j < r; ++j) {
        for (int i = 0; i < r; ++i) M[j][i] = Rat(delta[j][i]);
        rhs[j] = Rat(labels[j]);
    }
    for (int col = 0; col < r; ++col) {
        int piv = -1;
        for (int row = col; row < r; ++row)
            if (!M[row][col].is_zero()) { piv = row; break; }
        if (piv < 0) throw std::logic_error("saturate_wdd: singular pseudo-Levi system");
        std::swap(M[piv], M[col]);
        std::swap(rhs[piv], rhs[col]);
        for (int row = 0; row < r; ++row) {
            if (row == col || M[row][col].is_zero()) continue;
            Rat f = M[row][col] / M[col][col];
            for (int c2 = col; c2 < r; ++c2) M[row][c2] -= f * M[col][c2];
            rhs[row] -= f * rhs[col];
        }
    }
    QVec h(r);
    for (int i = 0; i < r; ++i) h[i] = rhs[i] / M[i][i];
    auto [dom, word] = ambient.weyl_dominant(h);
    std::vector<int> out;
    for (const Rat& q : dom) {
        if (!q.is_integer() || q.num < 0 || q.num > 2)
            throw std::logic_error("saturated weighted Dynkin label outside {0,1,2}");
        out.push_back(static_cast<int>(q.num));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Bundled exceptional orbit data

std::string data_dir() {
    if (const char* env = std::getenv("WF_DATA_DIR")) return env;
    return WF_DEFAULT_DATA_DIR;
}

namespace {
std::string lower(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}
}  // namespace

ExceptionalOrbits::ExceptionalOrbits(CartanType t) : type_(t) {
    std::string path = data_dir() + "/" + lower(t.str()) + "/wdd";
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("missing static data file: " + path +
                                 " (set WF_DATA_DIR or regenerate with gen-weyl-data)");
    RootSystem rs({t});
    std::string line;
    long long declared = -1;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream is(line);
        std::string head;
        is >> head;
        if (head == "count") { is >> declared; continue; }
        ExcOrbitInfo o;
        o.name = head;
        is >> o.dim;
        for (int i = 0; i < t.rank; ++i) {
            int l;
            if (!(is >> l)) throw std::runtime_error("truncated wdd row in " + path);
            o.wdd.labels.push_back(l);
        }
        long long check = orbit_dim_from_wdd(rs, o.wdd.labels);
        if (check != o.dim)
            throw std::runtime_error("wdd data inconsistent for " + o.name + " in " + path);
        orbits_.push_back(std::move(o));
    }
    if (declared >= 0 && declared != static_cast<long long>(orbits_.size()))
        throw std::runtime_error("orbit count mismatch in " + path);
    // poset sanity: zero is minimum, regular is maximum, dims are graded
    const ExcOrbitInfo* z = nullptr;
    const ExcOrbitInfo* reg = nullptr;
    for (const auto& o : orbits_) {
        if (o.dim == 0) z = &o;
        if (o.dim == 2 * static_cast<long long>(rs.positive_roots().size())) reg = &o;
    }
    if (!z || !reg) throw std::runtime_error("orbit data lacks zero or regular orbit: " + path);
}

const ExceptionalOrbits& ExceptionalOrbits::get(CartanType t) {
    static std::map<std::string, ExceptionalOrbits> cache;
    auto key = t.str();
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, ExceptionalOrbits(t)).first;
    return it->second;
}

const ExcOrbitInfo& ExceptionalOrbits::by_wdd(const std::vector<int>& labels) const {
    for (const auto& o : orbits_)
        if (o.wdd.labels == labels) return o;
    std::string l = "(";
    for (size_t i = 0; i < labels.size(); ++i)
        l += (i ? "," : "") + std::to_string(labels[i]);
    throw std::runtime_error("no orbit with weighted Dynkin diagram " + l + ")" +
                             " in " + type_.str() + " data (inconsistent data)");
}

const ExcOrbitInfo& ExceptionalOrbits::by_name(const std::string& name) const {
    for (const auto& o : orbits_)
        if (o.name == name) return o;
    throw std::runtime_error("unknown orbit name " + name + " for " + type_.str());
}

const ExcOrbitInfo& ExceptionalOrbits::zero() const {
    for (const auto& o : orbits_)
        if (o.dim == 0) return o;
    throw std::logic_error("no zero orbit");
}

const ExcOrbitInfo& ExceptionalOrbits::regular() const {
    const ExcOrbitInfo* best = &orbits_.front();
    for (const auto& o : orbits_)
        if (o.dim > best->dim) best = &o;
    return *best;
}

}  // namespace wf
