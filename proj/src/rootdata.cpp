#include "wf/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wf {

std::string CartanType::str() const {
    static const char* names = "ABCDEFG";
    return std::string(1, names[static_cast<int>(series)]) + std::to_string(rank);
}

std::vector<CartanType> parse_type_spec(const std::string& spec) {
    std::vector<CartanType> out;
    size_t i = 0;
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("bad type spec '" + spec + "': " + why);
    };
    while (i < spec.size()) {
        char c = static_cast<char>(std::toupper(static_cast<unsigned char>(spec[i])));
        Series s;
        switch (c) {
            case 'A': s = Series::A; break;
            case 'B': s = Series::B; break;
            case 'C': s = Series::C; break;
            case 'D': s = Series::D; break;
            case 'E': s = Series::E; break;
            case 'F': s = Series::F; break;
            case 'G': s = Series::G; break;
            default: fail("unknown series letter"); s = Series::A;
        }
        ++i;
        size_t start = i;
        while (i < spec.size() && std::isdigit(static_cast<unsigned char>(spec[i]))) ++i;
        if (start == i) fail("missing rank");
        int r = std::stoi(spec.substr(start, i - start));
        switch (s) {
            case Series::A: if (r < 1) fail("A rank must be >= 1"); break;
            case Series::B: if (r < 2) fail("B rank must be >= 2"); break;
            case Series::C: if (r < 2) fail("C rank must be >= 2"); break;
            case Series::D:
                if (r < 3) fail("D rank must be >= 3");
                if (r == 3) s = Series::A;  // D3 = A3
                break;
            case Series::E: if (r < 6 || r > 8) fail("E rank must be 6, 7 or 8"); break;
            case Series::F: if (r != 4) fail("F rank must be 4"); break;
            case Series::G: if (r != 2) fail("G rank must be 2"); break;
        }
        out.push_back({s, r});
        if (i < spec.size()) {
            char sep = static_cast<char>(std::tolower(static_cast<unsigned char>(spec[i])));
            if (sep != 'x') fail("expected 'x' separator");
            ++i;
            if (i == spec.size()) fail("trailing separator");
        }
    }
    if (out.empty()) fail("empty spec");
    return out;
}

RootSystem::RootSystem(std::vector<CartanType> components)
    : components_(std::move(components)) {
    for (auto& t : components_) {
        if (t.series == Series::D && t.rank == 3) t = {Series::A, 3};
    }
    rank_ = 0;
    for (const auto& t : components_) rank_ += t.rank;
    cartan_.assign(rank_, IVec(rank_, 0));
    d_.assign(rank_, 1);
    comp_of_simple_.assign(rank_, 0);
    comp_simples_.resize(components_.size());
    int off = 0;
    for (size_t c = 0; c < components_.size(); ++c) {
        for (int k = 0; k < components_[c].rank; ++k) {
            comp_of_simple_[off + k] = static_cast<int>(c);
            comp_simples_[c].push_back(off + k);
        }
        build_component(components_[c], off);
        off += components_[c].rank;
    }
    d_max_.assign(components_.size(), 1);
    for (int i = 0; i < rank_; ++i)
        d_max_[comp_of_simple_[i]] = std::max(d_max_[comp_of_simple_[i]], d_[i]);
    enumerate_roots();
}

// Fills the Cartan block and d-values for one component in Bourbaki
// numbering.  cartan(i, j) = <alpha_i, alpha_j^vee> = 2(a_i, a_j)/(a_j, a_j).
void RootSystem::build_component(const CartanType& t, int off) {
    int r = t.rank;
    auto C = [&](int i, int j) -> long long& { return cartan_[off + i][off + j]; };
    auto link = [&](int i, int j) { C(i, j) = -1; C(j, i) = -1; };
    for (int i = 0; i < r; ++i) C(i, i) = 2;
    switch (t.series) {
        case Series::A:
            for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
            break;
        case Series::B:
            for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
            C(r - 2, r - 1) = -2;  // alpha_{r-1} long, alpha_r short
            for (int i = 0; i + 1 < r; ++i) d_[off + i] = 2;
            break;
        case Series::C:
            for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
            C(r - 1, r - 2) = -2;  // alpha_r long, others short
            d_[off + r - 1] = 2;
            break;
        case Series::D:
            for (int i = 0; i + 1 < r - 1; ++i) link(i, i + 1);
            link(r - 3, r - 1);
            break;
        case Series::E:
            // Bourbaki: chain 1-3-4-5-6(-7-8), node 2 attached to 4.
            link(0, 2);
            for (int i = 2; i + 1 < r; ++i) link(i, i + 1);
            link(1, 3);
            break;
        case Series::F:
            link(0, 1); link(1, 2); link(2, 3);
            C(1, 2) = -2;  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
            d_[off + 0] = d_[off + 1] = 2;
            break;
        case Series::G:
            link(0, 1);
            C(1, 0) = -3;  // alpha_1 short, alpha_2 long
            d_[off + 1] = 3;
            break;
    }
}

void RootSystem::enumerate_roots() {
    std::set<Root> pos;
    std::vector<Root> frontier;
    for (int i = 0; i < rank_; ++i) {
        Root e(rank_, 0);
        e[i] = 1;
        pos.insert(e);
        frontier.push_back(e);
    }
    while (!frontier.empty()) {
        std::vector<Root> next;
        for (const auto& b : frontier) {
            for (int i = 0; i < rank_; ++i) {
                Root rb = reflect_root(i, b);
                bool neg = std::any_of(rb.begin(), rb.end(), [](long long v) { return v < 0; });
                if (!neg && pos.insert(rb).second) next.push_back(rb);
            }
        }
        frontier = std::move(next);
    }
    positive_roots_.assign(pos.begin(), pos.end());
    highest_roots_.clear();
    for (size_t c = 0; c < components_.size(); ++c) {
        const Root* best = nullptr;
        long long best_ht = -1;
        for (const auto& b : positive_roots_) {
            if (b[comp_simples_[c][0]] == 0 &&
                std::none_of(comp_simples_[c].begin(), comp_simples_[c].end(),
                             [&](int i) { return b[i] != 0; }))
                continue;
            long long ht = 0;
            for (long long v : b) ht += v;
            if (ht > best_ht) { best_ht = ht; best = &b; }
        }
        highest_roots_.push_back(*best);
    }
}

std::vector<Root> RootSystem::all_roots() const {
    std::vector<Root> out = positive_roots_;
    for (const auto& b : positive_roots_) {
        Root n = b;
        for (auto& v : n) v = -v;
        out.push_back(n);
    }
    return out;
}

IVec RootSystem::marks(int comp) const {
    IVec m;
    for (int i : comp_simples_[comp]) m.push_back(highest_roots_[comp][i]);
    return m;
}

bool RootSystem::is_root(const Root& r) const {
    Root p = r;
    bool neg = std::any_of(p.begin(), p.end(), [](long long v) { return v < 0; });
    if (neg)
        for (auto& v : p) v = -v;
    return std::binary_search(positive_roots_.begin(), positive_roots_.end(), p);
}

long long RootSystem::d_of_root(const Root& r) const {
    // (beta,beta)/2 relative to short = 1, via d_j <alpha_j-coefficients>
    // (beta, beta) = sum_j c_j d_j <beta, alpha_j^vee> in the normalization
    // (alpha_short, alpha_short) = 2.
    long long acc = 0;
    for (int j = 0; j < rank_; ++j)
        if (r[j] != 0) acc += r[j] * d_[j] * pair_with_simple_coroot(r, j);
    return acc / 2;
}

long long RootSystem::pair_with_simple_coroot(const Root& beta, int j) const {
    long long acc = 0;
    for (int k = 0; k < rank_; ++k)
        if (beta[k] != 0) acc += beta[k] * cartan_[k][j];
    return acc;
}

long long RootSystem::pair_with_coroot(const Root& beta, const Root& gamma) const {
    long long dg = d_of_root(gamma);
    long long acc = 0;
    for (int k = 0; k < rank_; ++k)
        if (gamma[k] != 0) acc += gamma[k] * d_[k] * pair_with_simple_coroot(beta, k);
    return acc / dg;
}

Rat RootSystem::eval(const Root& alpha, const QVec& y) const {
    Rat acc(0);
    for (int i = 0; i < rank_; ++i)
        if (alpha[i] != 0) acc += Rat(alpha[i]) * y[i];
    return acc;
}

Root RootSystem::reflect_root(int i, const Root& beta) const {
    Root out = beta;
    out[i] -= pair_with_simple_coroot(beta, i);
    return out;
}

Root RootSystem::reflect_root_by(const Root& gamma, const Root& beta) const {
    long long c = pair_with_coroot(beta, gamma);
    Root out = beta;
    for (int k = 0; k < rank_; ++k) out[k] -= c * gamma[k];
    return out;
}

QVec RootSystem::reflect_point(int i, const QVec& y) const {
    // s_i(y) = y - alpha_i(y) alpha_i^vee; (alpha_i^vee)_j = cartan(j, i).
    QVec out = y;
    Rat a = y[i];
    if (a.is_zero()) return out;
    for (int j = 0; j < rank_; ++j)
        if (cartan_[j][i] != 0) out[j] -= a * Rat(cartan_[j][i]);
    return out;
}

IVec RootSystem::coroot_coeffs(const Root& gamma) const {
    long long dg = d_of_root(gamma);
    IVec out(rank_, 0);
    for (int k = 0; k < rank_; ++k) {
        long long num = gamma[k] * d_[k];
        if (num % dg != 0) throw std::logic_error("coroot coefficients not integral");
        out[k] = num / dg;
    }
    return out;
}

std::pair<QVec, std::vector<int>> RootSystem::weyl_dominant(const QVec& y) const {
    QVec cur = y;
    std::vector<int> word;
    for (;;) {
        int neg = -1;
        for (int i = 0; i < rank_; ++i)
            if (cur[i] < Rat(0)) { neg = i; break; }
        if (neg < 0) break;
        cur = reflect_point(neg, cur);
        word.push_back(neg);
    }
    std::reverse(word.begin(), word.end());
    return {cur, word};
}

std::string RootSystem::root_str(const Root& r) const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rank_; ++i) os << (i ? "," : "") << r[i];
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------------------
// Subsystem extraction

namespace {

Root negate(const Root& r) {
    Root n = r;
    for (auto& v : n) v = -v;
    return n;
}

bool is_positive_vec(const Root& r) {
    for (long long v : r)
        if (v != 0) return v > 0;
    return false;  // zero treated as not positive
}

}  // namespace

Subsystem::Subsystem(const RootSystem& parent, std::vector<Root> roots)
    : parent_(&parent) {
    std::set<Root> all;
    for (const auto& r : roots) {
        if (!parent.is_root(r))
            throw std::invalid_argument("subsystem element is not a root of the parent: " +
                                        parent.root_str(r));
        all.insert(r);
        all.insert(negate(r));
    }
    // closedness under the subsystem's own reflections (note: subsystems such
    // as Phi_y^{Q,n} need not be closed under ambient root addition)
    for (const auto& a : all)
        for (const auto& b : all) {
            Root s = parent.reflect_root_by(a, b);
            if (!all.count(s))
                throw std::invalid_argument("subsystem not reflection-closed: s_" +
                                            parent.root_str(a) + " maps " + parent.root_str(b) +
                                            " outside");
        }
    for (const auto& r : all)
        if (is_positive_vec(r)) positive_roots_.push_back(r);

    // simple system: indecomposable positives
    std::set<Root> posset(positive_roots_.begin(), positive_roots_.end());
    for (const auto& a : positive_roots_) {
        bool decomposable = false;
        for (const auto& b : positive_roots_) {
            if (decomposable) break;
            Root diff = a;
            for (int i = 0; i < parent.rank(); ++i) diff[i] -= b[i];
            if (diff != a && posset.count(diff)) decomposable = true;
        }
        if (!decomposable) simple_system_.push_back(a);
    }

    int n = static_cast<int>(simple_system_.size());
    auto comp_dmax = [&](int i) {
        const Root& r = simple_system_[i];
        for (int k = 0; k < parent.rank(); ++k)
            if (r[k] != 0) return parent.d_max(parent.component_of(k));
        return 1LL;
    };
    factors_ = classify_simple_system(
        n,
        [&](int i, int j) {
            return parent.pair_with_coroot(simple_system_[i], simple_system_[j]);
        },
        [&](int i) { return parent.d_of_root(simple_system_[i]); }, comp_dmax);
}

namespace {

// expansion coefficients of r over the (independent) vectors in basis;
// throws if inconsistent or non-integral
IVec expand_over(const std::vector<Root>& basis, const Root& r, int ambient_rank) {
    int k = static_cast<int>(basis.size());
    std::vector<std::vector<Rat>> A(ambient_rank, std::vector<Rat>(k + 1, Rat(0)));
    for (int i = 0; i < ambient_rank; ++i) {
        for (int j = 0; j < k; ++j) A[i][j] = Rat(basis[j][i]);
        A[i][k] = Rat(r[i]);
    }
    int row = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < k && row < ambient_rank; ++col) {
        int piv = -1;
        for (int rr = row; rr < ambient_rank; ++rr)
            if (!A[rr][col].is_zero()) { piv = rr; break; }
        if (piv < 0) continue;
        std::swap(A[piv], A[row]);
        for (int rr = 0; rr < ambient_rank; ++rr) {
            if (rr == row || A[rr][col].is_zero()) continue;
            Rat f = A[rr][col] / A[row][col];
            for (int c = col; c <= k; ++c) A[rr][c] -= f * A[row][c];
        }
        pivot_col.push_back(col);
        ++row;
    }
    IVec out(k, 0);
    for (int rr = 0; rr < row; ++rr) {
        Rat v = A[rr][k] / A[rr][pivot_col[rr]];
        if (!v.is_integer()) throw std::logic_error("non-integral subsystem expansion");
        out[pivot_col[rr]] = v.num;
    }
    for (int rr = row; rr < ambient_rank; ++rr)
        if (!A[rr][k].is_zero())
            throw std::logic_error("root is not in the span of the subsystem simples");
    return out;
}

}  // namespace

int Subsystem::factor_of(const Root& r) const {
    IVec coeffs = expand_over(simple_system_, r, parent_->rank());
    int fac = -1;
    for (size_t fi = 0; fi < factors_.size(); ++fi)
        for (int idx : factors_[fi].simple_indices)
            if (coeffs[idx] != 0) {
                if (fac >= 0 && fac != static_cast<int>(fi))
                    throw std::logic_error("root spans multiple factors");
                fac = static_cast<int>(fi);
            }
    if (fac < 0) throw std::invalid_argument("factor_of: zero root");
    return fac;
}

Root Subsystem::factor_coords(int factor, const Root& r) const {
    IVec coeffs = expand_over(simple_system_, r, parent_->rank());
    Root out;
    for (int idx : factors_[factor].simple_indices) out.push_back(coeffs[idx]);
    return out;
}

std::string Subsystem::factors_str() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < factors_.size(); ++i) {
        if (i) out += "x";
        out += factors_[i].type.str();
        if (!factors_[i].long_roots) out += "~";
    }
    return out;
}

std::vector<SubsystemFactor> classify_simple_system(
    int n, const std::function<long long(int, int)>& pair,
    const std::function<long long(int)>& dval,
    const std::function<long long(int)>& dmax) {
    std::vector<SubsystemFactor> out;
    if (n == 0) return out;
    // adjacency with bond multiplicity m_ij = <i,j><j,i>
    std::vector<std::vector<int>> adj(n);
    std::vector<std::vector<long long>> bond(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) {
                bond[i][j] = pair(i, j) * pair(j, i);
                if (bond[i][j] != 0) adj[i].push_back(j);
            }
    std::vector<int> comp(n, -1);
    int nc = 0;
    for (int i = 0; i < n; ++i) {
        if (comp[i] != -1) continue;
        std::vector<int> stack{i};
        comp[i] = nc;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (comp[w] == -1) { comp[w] = nc; stack.push_back(w); }
        }
        ++nc;
    }
    for (int c = 0; c < nc; ++c) {
        std::vector<int> nodes;
        for (int i = 0; i < n; ++i)
            if (comp[i] == c) nodes.push_back(i);
        int k = static_cast<int>(nodes.size());
        auto deg = [&](int v) {
            int d0 = 0;
            for (int w : adj[v])
                if (comp[w] == c) ++d0;
            return d0;
        };
        long long maxbond = 1;
        for (int v : nodes)
            for (int w : adj[v]) maxbond = std::max(maxbond, bond[v][w]);
        SubsystemFactor f;
        f.long_roots = true;
        for (int v : nodes)
            if (dval(v) < dmax(v)) f.long_roots = false;

        auto chain_from = [&](int start) {
            std::vector<int> order{start};
            int prev = -1, cur = start;
            for (;;) {
                int nxt = -1;
                for (int w : adj[cur])
                    if (w != prev && comp[w] == c) { nxt = w; break; }
                if (nxt < 0) break;
                order.push_back(nxt);
                prev = cur;
                cur = nxt;
            }
            return order;
        };

        if (k == 1) {
            f.type = {Series::A, 1};
            f.simple_indices = nodes;
            out.push_back(f);
            continue;
        }
        if (maxbond == 3) {
            // G2: order [short, long]
            int a = nodes[0], b = nodes[1];
            if (dval(a) > dval(b)) std::swap(a, b);
            f.type = {Series::G, 2};
            f.simple_indices = {a, b};
            out.push_back(f);
            continue;
        }
        if (maxbond == 2) {
            // B, C or F4. Find the double bond.
            int u = -1, v = -1;
            for (int x : nodes)
                for (int w : adj[x])
                    if (comp[w] == c && bond[x][w] == 2 && u < 0) { u = x; v = w; }
            if (dval(u) < dval(v)) std::swap(u, v);  // u long side, v short side
            // walk outward from u (long chain) and from v (short chain)
            auto walk = [&](int from, int avoid) {
                std::vector<int> order;
                int prev = avoid, cur = from;
                for (;;) {
                    order.push_back(cur);
                    int nxt = -1;
                    for (int w : adj[cur])
                        if (w != prev && comp[w] == c) { nxt = w; break; }
                    if (nxt < 0) break;
                    prev = cur;
                    cur = nxt;
                }
                return order;
            };
            std::vector<int> longs = walk(u, v), shorts = walk(v, u);
            if (longs.size() >= 2 && shorts.size() >= 2) {
                if (longs.size() != 2 || shorts.size() != 2)
                    throw std::logic_error("unrecognized double-bond diagram");
                f.type = {Series::F, 4};
                f.simple_indices = {longs[1], longs[0], shorts[0], shorts[1]};
            } else if (shorts.size() == 1) {
                // B_k: long chain ending in one short root
                f.type = {Series::B, k};
                f.simple_indices.assign(longs.rbegin(), longs.rend());
                f.simple_indices.push_back(shorts[0]);
            } else {
                // C_k: short chain ending in one long root
                f.type = {Series::C, k};
                f.simple_indices.assign(shorts.rbegin(), shorts.rend());
                f.simple_indices.push_back(longs[0]);
            }
            out.push_back(f);
            continue;
        }
        // simply-laced component
        int forknode = -1;
        for (int x : nodes)
            if (deg(x) >= 3) forknode = x;
        if (forknode < 0) {
            // chain: A_k; orient deterministically by endpoint index
            int e1 = -1;
            for (int x : nodes)
                if (deg(x) <= 1) { e1 = std::min(e1 < 0 ? x : e1, x); }
            f.type = {Series::A, k};
            f.simple_indices = chain_from(e1);
            out.push_back(f);
            continue;
        }
        if (deg(forknode) > 3) throw std::logic_error("diagram vertex of degree > 3");
        // arms from the fork
        std::vector<std::vector<int>> arms;
        for (int w : adj[forknode])
            if (comp[w] == c) {
                std::vector<int> arm;
                int prev = forknode, cur = w;
                for (;;) {
                    arm.push_back(cur);
                    int nxt = -1;
                    for (int z : adj[cur])
                        if (z != prev && comp[z] == c) { nxt = z; break; }
                    if (nxt < 0) break;
                    prev = cur;
                    cur = nxt;
                }
                arms.push_back(arm);
            }
        std::sort(arms.begin(), arms.end(),
                  [](const auto& a, const auto& b) { return a.size() < b.size(); });
        if (arms.size() != 3) throw std::logic_error("unrecognized fork diagram");
        size_t a1 = arms[0].size(), a2 = arms[1].size(), a3 = arms[2].size();
        if (a1 == 1 && a2 == 1) {
            // D_k (k >= 4 here; D_3 = A_3 comes out of the chain branch)
            f.type = {Series::D, k};
            f.simple_indices.assign(arms[2].rbegin(), arms[2].rend());
            f.simple_indices.push_back(forknode);
            // deterministic order of the two short arms
            int x = arms[0][0], y = arms[1][0];
            f.simple_indices.push_back(std::min(x, y));
            f.simple_indices.push_back(std::max(x, y));
        } else if (a1 == 1 && a2 == 2 && a3 <= 4) {
            // E_6, E_7, E_8; Bourbaki: long arm 1-3, branch 2, tail 5-6(,7,8)
            f.type = {Series::E, k};
            f.simple_indices.resize(k);
            f.simple_indices[0] = arms[1][1];
            f.simple_indices[2] = arms[1][0];
            f.simple_indices[1] = arms[0][0];
            f.simple_indices[3] = forknode;
            for (size_t t = 0; t < a3; ++t) f.simple_indices[4 + t] = arms[2][t];
        } else {
            throw std::logic_error("unrecognized simply-laced diagram");
        }
        out.push_back(f);
    }
    std::sort(out.begin(), out.end(), [](const SubsystemFactor& a, const SubsystemFactor& b) {
        return a.simple_indices < b.simple_indices;
    });
    return out;
}

}  // namespace wf
