#include "wf/springer_classical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wf {

std::string PairPartition::str() const {
    return "(" + xi.str() + "," + eta.str() + (ordered ? ")" : ")u");
}

namespace {

long long n_stat(const Partition& p) {  // n(p) = sum (i-1) p_i
    long long acc = 0;
    for (int i = 0; i < p.length(); ++i) acc += static_cast<long long>(i) * p.parts[i];
    return acc;
}

}  // namespace

long long pair_b_invariant(const PairPartition& p, Series ambient) {
    long long straight = 2 * n_stat(p.xi) + 2 * n_stat(p.eta) + p.eta.size();
    if (ambient != Series::D) return straight;
    long long flipped = 2 * n_stat(p.xi) + 2 * n_stat(p.eta) + p.xi.size();
    return std::min(straight, flipped);
}

PairPartition phi_map(const TypedPartition& tp) {
    if (tp.ambient == Series::A)
        throw std::invalid_argument("phi_map: ambient must be B, C or D");
    if (!valid_for(tp.partition, tp.ambient, tp.rank))
        throw std::invalid_argument("phi_map: invalid typed partition " + tp.str());
    // pad to parity length, ascending, add the staircase (0,1,2,...)
    std::vector<long long> asc(tp.partition.parts.rbegin(), tp.partition.parts.rend());
    bool odd_length = (tp.ambient == Series::B);
    while (asc.size() % 2 != (odd_length ? 1u : 0u)) asc.insert(asc.begin(), 0);
    int l = static_cast<int>(asc.size());
    std::vector<long long> star(l);
    for (int i = 0; i < l; ++i) star[i] = asc[i] + i;
    std::vector<long long> odds, evens;
    for (long long v : star) (v % 2 ? odds : evens).push_back(v);
    size_t expect_odds = odd_length ? (l + 1) / 2 : l / 2;
    if (odds.size() != expect_odds)
        throw std::logic_error("phi_map: unexpected parity split for " + tp.str());
    auto unstaircase = [](std::vector<long long> vals, long long shift_div) {
        for (auto& v : vals) v = (v - shift_div) / 2;
        for (size_t i = 0; i < vals.size(); ++i) vals[i] -= static_cast<long long>(i);
        return Partition(std::move(vals));
    };
    PairPartition pair;
    pair.xi = unstaircase(odds, 1);
    pair.eta = unstaircase(evens, 0);
    pair.ordered = (tp.ambient != Series::D);
    if (!pair.ordered && pair.xi.parts < pair.eta.parts) std::swap(pair.xi, pair.eta);
    return pair;
}

namespace {

// Rebuild the orbit partition from a pair with a prescribed padded length.
std::optional<Partition> rebuild(const Partition& xi, const Partition& eta, int l,
                                 bool odd_length) {
    size_t nodds = odd_length ? (l + 1) / 2 : l / 2;
    size_t nevens = l - nodds;
    if (xi.parts.size() > nodds || eta.parts.size() > nevens) return std::nullopt;
    std::vector<long long> xs(xi.parts.rbegin(), xi.parts.rend());
    xs.insert(xs.begin(), nodds - xs.size(), 0);
    std::vector<long long> es(eta.parts.rbegin(), eta.parts.rend());
    es.insert(es.begin(), nevens - es.size(), 0);
    std::vector<long long> star;
    for (size_t i = 0; i < xs.size(); ++i) star.push_back(2 * (xs[i] + i) + 1);
    for (size_t i = 0; i < es.size(); ++i) star.push_back(2 * (es[i] + i));
    std::sort(star.begin(), star.end());
    for (size_t i = 0; i + 1 < star.size(); ++i)
        if (star[i] == star[i + 1]) return std::nullopt;
    std::vector<long long> asc(star.size());
    for (size_t i = 0; i < star.size(); ++i) asc[i] = star[i] - static_cast<long long>(i);
    for (size_t i = 0; i < asc.size(); ++i) {
        if (asc[i] < 0) return std::nullopt;
        if (i && asc[i] < asc[i - 1]) return std::nullopt;
    }
    return Partition(std::move(asc));
}

}  // namespace

TypedPartition phi_inverse(const PairPartition& pair, Series ambient, int rank) {
    bool odd_length = (ambient == Series::B);
    int l = 2 * static_cast<int>(std::max(pair.xi.parts.size(), pair.eta.parts.size())) + 4;
    if (odd_length) ++l;
    std::vector<std::pair<const Partition*, const Partition*>> orders;
    orders.push_back({&pair.xi, &pair.eta});
    if (ambient == Series::D) orders.push_back({&pair.eta, &pair.xi});
    for (auto [x, e] : orders) {
        auto lam = rebuild(*x, *e, l, odd_length);
        if (!lam) continue;
        if (lam->size() != natural_size(ambient, rank)) continue;
        if (!valid_for(*lam, ambient, rank)) continue;
        // round-trip guard
        PairPartition back = phi_map({*lam, ambient, rank});
        bool match = (back.xi == pair.xi && back.eta == pair.eta);
        if (ambient == Series::D && !match)
            match = (back.xi == pair.eta && back.eta == pair.xi);
        if (!match) continue;
        return {*lam, ambient, rank};
    }
    throw std::invalid_argument("pair " + pair.str() + " is not in the image of phi for " +
                                CartanType{ambient, rank}.str());
}

TypedPartition springer_orbit_of_pair(const PairPartition& pair, Series ambient, int rank) {
    if (pair.xi.size() + pair.eta.size() != rank)
        throw std::invalid_argument("pair " + pair.str() + " has total size != rank");
    // pairs in the image of phi (trivial local system) are inverted strictly
    try {
        return phi_inverse(pair, ambient, rank);
    } catch (const std::invalid_argument&) {
    }
    bool odd_length = (ambient == Series::B);
    int l = 2 * static_cast<int>(std::max(pair.xi.parts.size(), pair.eta.parts.size())) + 4;
    if (odd_length) ++l;
    auto build = [&](const Partition& x, const Partition& e) {
        auto lam = rebuild(x, e, l, odd_length);
        if (!lam || lam->size() != natural_size(ambient, rank))
            throw std::logic_error("pair interleaving failed for " + pair.str());
        return collapse(*lam, ambient, rank);
    };
    TypedPartition out = build(pair.xi, pair.eta);
    if (ambient == Series::D) {
        // unordered: both interleavings must name the same stable orbit
        TypedPartition other = build(pair.eta, pair.xi);
        if (!(other == out))
            throw std::logic_error("D-pair interleavings disagree for " + pair.str());
    }
    return out;
}

Partition type_a_orbit(const std::vector<long long>& composition) {
    for (long long c : composition)
        if (c < 1) throw std::invalid_argument("composition parts must be >= 1");
    return dual(Partition(std::vector<long long>(composition)));
}

// ---------------------------------------------------------------------------

std::vector<IVec> simple_roots_e(Series s, int rank) {
    int dim = (s == Series::A) ? rank + 1 : rank;
    std::vector<IVec> out(rank, IVec(dim, 0));
    switch (s) {
        case Series::A:
            for (int i = 0; i < rank; ++i) { out[i][i] = 1; out[i][i + 1] = -1; }
            break;
        case Series::B:
            for (int i = 0; i + 1 < rank; ++i) { out[i][i] = 1; out[i][i + 1] = -1; }
            out[rank - 1][rank - 1] = 1;
            break;
        case Series::C:
            for (int i = 0; i + 1 < rank; ++i) { out[i][i] = 1; out[i][i + 1] = -1; }
            out[rank - 1][rank - 1] = 2;
            break;
        case Series::D:
            for (int i = 0; i + 1 < rank; ++i) { out[i][i] = 1; out[i][i + 1] = -1; }
            out[rank - 1][rank - 2] = 1;
            out[rank - 1][rank - 1] = 1;
            break;
        default:
            throw std::invalid_argument("simple_roots_e: classical types only");
    }
    return out;
}

IVec root_to_e(Series s, int rank, const Root& r) {
    auto simples = simple_roots_e(s, rank);
    IVec out(simples[0].size(), 0);
    for (int i = 0; i < rank; ++i)
        if (r[i] != 0)
            for (size_t k = 0; k < out.size(); ++k) out[k] += r[i] * simples[i][k];
    return out;
}

namespace {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

long long dot(const IVec& a, const IVec& b) {
    long long acc = 0;
    for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

// s_beta(w) = w - 2(w,beta)/(beta,beta) beta, in e-coordinates
IVec reflect_weight(const IVec& w, const IVec& beta) {
    long long bb = dot(beta, beta);
    long long c = 2 * dot(w, beta);
    if (c % bb != 0) throw std::logic_error("non-integral weight reflection");
    IVec out = w;
    for (size_t i = 0; i < w.size(); ++i) out[i] -= (c / bb) * beta[i];
    return out;
}

}  // namespace

std::vector<NaturalBlock> natural_blocks(Series ambient, int rank,
                                         const std::vector<IVec>& roots_e) {
    if (ambient == Series::A) throw std::invalid_argument("natural_blocks: use B/C/D");
    // weights +-e_i indexed 0..r-1 (plus) and r..2r-1 (minus)
    int nw = 2 * rank;
    auto weight = [&](int id) {
        IVec w(rank, 0);
        w[id % rank] = id < rank ? 1 : -1;
        return w;
    };
    auto weight_id = [&](const IVec& w) {
        for (int i = 0; i < rank; ++i) {
            if (w[i] == 1) return i;
            if (w[i] == -1) return rank + i;
        }
        throw std::logic_error("not a unit weight");
    };
    UnionFind uf(nw);
    for (const auto& beta : roots_e)
        for (int id = 0; id < nw; ++id) {
            IVec w = weight(id);
            IVec rw = reflect_weight(w, beta);
            if (rw != w) uf.unite(id, weight_id(rw));
        }
    std::map<int, std::vector<int>> orbits;
    for (int id = 0; id < nw; ++id) orbits[uf.find(id)].push_back(id);

    std::vector<NaturalBlock> out;
    std::set<int> done;
    for (auto& [rep, ids] : orbits) {
        if (done.count(rep)) continue;
        done.insert(rep);
        // slots touched by this orbit
        std::set<int> slots;
        for (int id : ids) slots.insert(id % rank);
        int negrep = uf.find(weight_id([&] {
            IVec w = weight(ids[0]);
            for (auto& x : w) x = -x;
            return w;
        }()));
        bool self_negative = (negrep == rep);
        // roots supported on these slots
        std::vector<IVec> block_roots;
        for (const auto& beta : roots_e) {
            bool in = false, outside = false;
            for (int i = 0; i < rank; ++i)
                if (beta[i] != 0) (slots.count(i) ? in : outside) = true;
            if (in && outside)
                throw std::logic_error("root straddles natural blocks");
            if (in) block_roots.push_back(beta);
        }
        if (block_roots.empty()) continue;  // untouched slots handled by caller
        NaturalBlock blk;
        blk.slots.assign(slots.begin(), slots.end());
        if (!self_negative) {
            done.insert(negrep);
            blk.kind = BlockKind::GL;
        } else {
            blk.kind = BlockKind::SO_EVEN;
            for (const auto& beta : block_roots) {
                int support = 0;
                for (int i = 0; i < rank; ++i)
                    if (beta[i] != 0) ++support;
                if (support == 1) {
                    // +-e_i (B ambient) or +-2e_i (C ambient)
                    blk.kind = (ambient == Series::B) ? BlockKind::SO_ODD : BlockKind::SP;
                    break;
                }
            }
        }
        // block-local coordinates
        for (const auto& beta : block_roots) {
            IVec loc;
            for (int s : blk.slots) loc.push_back(beta[s]);
            blk.roots_e.push_back(std::move(loc));
        }
        out.push_back(std::move(blk));
    }
    return out;
}

namespace {

// Orbit sizes of the reflection subgroup generated by `roots_e` acting on the
// "plus side" weights {e_1..e_k} of a GL block given in local coordinates.
std::vector<long long> gl_composition(int k, const std::vector<IVec>& roots_e) {
    UnionFind uf(k);
    for (const auto& beta : roots_e) {
        // beta = e_i - e_j or -(e_i - e_j) possibly after slot sign flips; on
        // a GL block every root pairs exactly two slots
        int a = -1, b = -1;
        for (int i = 0; i < k; ++i)
            if (beta[i] != 0) (a < 0 ? a : b) = i;
        if (a >= 0 && b >= 0) uf.unite(a, b);
    }
    std::map<int, long long> count;
    for (int i = 0; i < k; ++i) count[uf.find(i)]++;
    std::vector<long long> comp;
    for (auto& [rep, c] : count) comp.push_back(c);
    return comp;
}

}  // namespace

PairPartition j_pair(Series ambient, int rank, const std::vector<IVec>& sub_roots_e) {
    if (ambient == Series::A) throw std::invalid_argument("j_pair: ambient must be B, C or D");
    auto blocks = natural_blocks(ambient, rank, sub_roots_e);
    std::vector<long long> a_list, b_list;
    int used_slots = 0;
    for (const auto& blk : blocks) {
        int k = static_cast<int>(blk.slots.size());
        used_slots += k;
        switch (blk.kind) {
            case BlockKind::SO_EVEN:
                a_list.push_back(k);
                break;
            case BlockKind::SO_ODD:
            case BlockKind::SP:
                b_list.push_back(k);
                break;
            case BlockKind::GL:
                // j^{T_k}_{A_{k-1}} sgn = j^{T_k}_{D_{ceil(k/2)} x T_{floor(k/2)}} sgn
                a_list.push_back((k + 1) / 2);
                if (k / 2 > 0) b_list.push_back(k / 2);
                break;
        }
    }
    for (int i = 0; i < rank - used_slots; ++i) a_list.push_back(1);  // untouched slots
    PairPartition pair;
    pair.xi = dual(Partition(std::move(a_list)));
    pair.eta = dual(Partition(std::move(b_list)));
    pair.ordered = (ambient != Series::D);
    if (!pair.ordered && pair.xi.parts < pair.eta.parts) std::swap(pair.xi, pair.eta);
    return pair;
}

TypedPartition orbit_of_j_sign(Series ambient, int rank,
                               const std::vector<IVec>& sub_roots_e) {
    if (ambient == Series::A) {
        // orbits of the generated subgroup on {e_1..e_{r+1}}
        int k = rank + 1;
        UnionFind uf(k);
        for (const auto& beta : sub_roots_e) {
            int a = -1, b = -1;
            for (int i = 0; i < k; ++i)
                if (beta[i] != 0) (a < 0 ? a : b) = i;
            if (a >= 0 && b >= 0) uf.unite(a, b);
        }
        std::map<int, long long> count;
        for (int i = 0; i < k; ++i) count[uf.find(i)]++;
        std::vector<long long> comp;
        for (auto& [rep, c] : count) comp.push_back(c);
        return {type_a_orbit(comp), Series::A, rank};
    }
    PairPartition pair = j_pair(ambient, rank, sub_roots_e);
    return springer_orbit_of_pair(pair, ambient, rank);
}

TypedPartition closed_form(Series ambient, int rank, long long n) {
    if (n < 1) throw std::invalid_argument("closed_form: n >= 1 required");
    long long N = natural_size(ambient, rank);
    switch (ambient) {
        case Series::A:
            return {lambda_cap(N, n), Series::A, rank};
        case Series::B:
            return collapse(lambda_cap(N, n), Series::B, rank);
        case Series::C: {
            if (n % 2 == 1) return collapse(lambda_cap(N, n), Series::C, rank);
            long long h = n / 2;
            if (h % 2 == 0) return collapse(lambda_cap(N, h), Series::C, rank);
            // n = 2 mod 4: (h+1, lambda(N-h-1; h))_C, truncated at the regular orbit
            if (h + 1 >= N) return collapse(Partition({N}), Series::C, rank);
            std::vector<long long> parts{h + 1};
            for (long long q : lambda_cap(N - h - 1, h).parts) parts.push_back(q);
            return collapse(Partition(std::move(parts)), Series::C, rank);
        }
        case Series::D: {
            if (n % 2 == 1) return collapse(lambda_cap(N, n), Series::D, rank);
            if (n + 1 >= N) return collapse(Partition({N}), Series::D, rank);
            std::vector<long long> parts{n + 1};
            for (long long q : lambda_cap(N - n - 1, n).parts) parts.push_back(q);
            return collapse(Partition(std::move(parts)), Series::D, rank);
        }
        default:
            throw std::invalid_argument("closed_form: classical types only");
    }
}

}  // namespace wf
