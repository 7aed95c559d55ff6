#include "wf/alcove.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace wf {

namespace {

// scaled-integer representation of a rational vector with common denominator
std::pair<IVec, long long> scale_common(const QVec& y) {
    long long den = 1;
    for (const Rat& q : y) den = std::lcm(den, q.den);
    IVec out;
    for (const Rat& q : y) out.push_back(q.num * (den / q.den));
    return {out, den};
}

}  // namespace

std::vector<QVec> alcove_vertices(const RootSystem& rs) {
    if (rs.components().size() != 1)
        throw std::invalid_argument("alcove_vertices: irreducible system required");
    std::vector<QVec> out;
    out.emplace_back(rs.rank(), Rat(0));
    IVec marks = rs.marks(0);
    for (int s = 0; s < rs.rank(); ++s) {
        QVec v(rs.rank(), Rat(0));
        v[s] = Rat(1, marks[s]);
        out.push_back(std::move(v));
    }
    return out;
}

bool vertices_equivalent(const RootSystem& rs, const QVec& v1, const QVec& v2) {
    // BFS over the W-orbit of v1 in scaled-integer coordinates.
    auto [s1, d1] = scale_common(v1);
    auto [s2, d2] = scale_common(v2);
    long long d = std::lcm(d1, d2);
    for (auto& x : s1) x *= d / d1;
    for (auto& x : s2) x *= d / d2;
    auto congruent = [&](const IVec& a) {
        for (int i = 0; i < rs.rank(); ++i)
            if ((a[i] - s2[i]) % d != 0) return false;
        return true;
    };
    std::set<IVec> seen{s1};
    std::vector<IVec> frontier{s1};
    if (congruent(s1)) return true;
    while (!frontier.empty()) {
        std::vector<IVec> next;
        for (const auto& y : frontier) {
            for (int i = 0; i < rs.rank(); ++i) {
                if (y[i] == 0) continue;
                IVec z = y;
                for (int j = 0; j < rs.rank(); ++j)
                    if (rs.cartan(j, i) != 0) z[j] -= y[i] * rs.cartan(j, i);
                if (seen.insert(z).second) {
                    if (congruent(z)) return true;
                    next.push_back(z);
                }
            }
        }
        frontier = std::move(next);
    }
    return false;
}

std::vector<int> vertex_class_reps(const RootSystem& rs, const std::vector<QVec>& vertices) {
    std::vector<int> reps;
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
        bool matched = false;
        for (int r : reps)
            if (vertices_equivalent(rs, vertices[i], vertices[r])) { matched = true; break; }
        if (!matched) reps.push_back(i);
    }
    return reps;
}

Subsystem phi_at(const QVec& y, const RootSystem& rs) {
    std::vector<Root> roots;
    for (const auto& alpha : rs.positive_roots())
        if (rs.eval(alpha, y).is_integer()) roots.push_back(alpha);
    return Subsystem(rs, std::move(roots));
}

Subsystem phi_qn_at(const QVec& y, const CoverDatum& cd) {
    const RootSystem& rs = cd.rs();
    std::vector<Root> roots;
    for (const auto& alpha : rs.positive_roots()) {
        Rat val = rs.eval(alpha, y);
        if (!val.is_integer()) continue;  // alpha must lie in Phi_y
        if (divides(cd.n(), val * Rat(cd.q_coroot(alpha)))) roots.push_back(alpha);
    }
    return Subsystem(rs, std::move(roots));
}

namespace {

// Solves M x = b over the rationals, M square nonsingular.
QVec solve_linear(std::vector<QVec> M, QVec b) {
    int n = static_cast<int>(b.size());
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!M[r][col].is_zero()) { piv = r; break; }
        if (piv < 0) throw std::logic_error("singular system in solve_linear");
        std::swap(M[piv], M[col]);
        std::swap(b[piv], b[col]);
        for (int r = 0; r < n; ++r) {
            if (r == col || M[r][col].is_zero()) continue;
            Rat f = M[r][col] / M[col][col];
            for (int c = col; c < n; ++c) M[r][c] -= f * M[col][c];
            b[r] -= f * b[col];
        }
    }
    QVec x(n);
    for (int i = 0; i < n; ++i) x[i] = b[i] / M[i][i];
    return x;
}

}  // namespace

VertexFrame make_vertex_frame(const QVec& v, const CoverDatum& cd) {
    const RootSystem& rs = cd.rs();
    if (rs.components().size() != 1)
        throw std::invalid_argument("vertex frames assume an irreducible system");
    VertexFrame f;
    f.v = v;
    for (int i = 0; i < rs.rank(); ++i) {
        Root ai(rs.rank(), 0);
        ai[i] = 1;
        if (rs.eval(ai, v).is_zero()) f.delta.push_back(ai);
    }
    const Root& theta = rs.highest_root(0);
    if (rs.eval(theta, v) == Rat(1)) {
        Root neg = theta;
        for (auto& x : neg) x = -x;
        f.delta.push_back(neg);
    }
    if (static_cast<int>(f.delta.size()) != rs.rank())
        throw std::invalid_argument("point is not a vertex: Phi_v has deficient rank");
    for (const auto& droot : f.delta) f.n_delta.push_back(cd.n_alpha(droot));

    // factor structure of the modified simple system
    auto factors = classify_simple_system(
        rs.rank(),
        [&](int i, int j) {
            // <delta_i / n_i, (delta_j / n_j)^vee> = (n_j / n_i) <delta_i, delta_j^vee>
            long long raw = rs.pair_with_coroot(f.delta[i], f.delta[j]);
            long long num = raw * f.n_delta[j];
            if (num % f.n_delta[i] != 0)
                throw std::logic_error("non-integral modified Cartan pairing");
            return num / f.n_delta[i];
        },
        [&](int i) {
            long long L = 1;
            for (long long nn : f.n_delta) L = std::lcm(L, nn);
            long long s = L / f.n_delta[i];
            return rs.d_of_root(f.delta[i]) * s * s;
        },
        [&](int) { return 1LL; });
    f.num_factors = static_cast<int>(factors.size());
    f.factor_of.assign(rs.rank(), -1);
    for (int fi = 0; fi < f.num_factors; ++fi)
        for (int node : factors[fi].simple_indices) f.factor_of[node] = fi;

    // expansion of each Phi_v-root's modified form over the modified simples:
    // alpha / n_alpha = sum_j (k_j / n_j) delta_j
    std::vector<QVec> M(rs.rank(), QVec(rs.rank()));
    for (int j = 0; j < rs.rank(); ++j)
        for (int i = 0; i < rs.rank(); ++i)
            M[i][j] = Rat(f.delta[j][i], f.n_delta[j]);
    std::vector<Root> phiv_roots;
    for (const auto& alpha : rs.positive_roots())
        if (rs.eval(alpha, v).is_integer()) {
            phiv_roots.push_back(alpha);
            Root neg = alpha;
            for (auto& x : neg) x = -x;
            phiv_roots.push_back(neg);
        }
    f.factor_highest.assign(f.num_factors, Root());
    f.n_highest.assign(f.num_factors, 0);
    f.highest_coeffs.assign(f.num_factors, IVec());
    std::vector<long long> best_height(f.num_factors, -1);
    size_t positive_count = 0;
    for (const auto& alpha : phiv_roots) {
        long long na = cd.n_alpha(alpha);
        QVec rhs(rs.rank());
        for (int i = 0; i < rs.rank(); ++i) rhs[i] = Rat(alpha[i], na);
        QVec k = solve_linear(M, rhs);
        bool has_pos = false, has_neg = false;
        for (const Rat& q : k) {
            if (!q.is_integer())
                throw std::logic_error("modified root has non-integral simple expansion");
            if (q.num > 0) has_pos = true;
            if (q.num < 0) has_neg = true;
        }
        if (has_pos && has_neg)
            throw std::logic_error("Delta_v is not a simple system of Phi_v");
        if (has_neg || (!has_pos && !has_neg)) continue;
        ++positive_count;
        int fi = -1;
        long long height = 0;
        for (int j = 0; j < rs.rank(); ++j)
            if (k[j].num != 0) {
                fi = f.factor_of[j];
                height += k[j].num;
            }
        if (height > best_height[fi]) {
            best_height[fi] = height;
            f.factor_highest[fi] = alpha;
            f.n_highest[fi] = na;
            IVec kk;
            for (const Rat& q : k) kk.push_back(q.num);
            f.highest_coeffs[fi] = kk;
        }
    }
    if (2 * positive_count != phiv_roots.size())
        throw std::logic_error("Phi_v does not split into +- halves over Delta_v");
    for (int fi = 0; fi < f.num_factors; ++fi)
        if (best_height[fi] < 0) throw std::logic_error("modified factor without highest root");
    return f;
}

std::vector<QVec> region_points(const VertexFrame& f, const CoverDatum& cd) {
    const RootSystem& rs = cd.rs();
    int r = rs.rank();
    // cap per factor: sum_j k_j t_j / n_j <= 1, cleared to integers
    std::vector<IVec> cap_coeff(f.num_factors, IVec(r, 0));
    IVec cap_bound(f.num_factors, 0);
    for (int fi = 0; fi < f.num_factors; ++fi) {
        long long L = 1;
        for (int j = 0; j < r; ++j)
            if (f.highest_coeffs[fi][j] != 0) L = std::lcm(L, f.n_delta[j]);
        for (int j = 0; j < r; ++j)
            cap_coeff[fi][j] = f.highest_coeffs[fi][j] * (L / f.n_delta[j]);
        cap_bound[fi] = L;
    }
    // t_0 = delta_j(v); integer offsets of the t-lattice
    IVec t0(r);
    for (int j = 0; j < r; ++j) {
        Rat val = rs.eval(f.delta[j], f.v);
        if (!val.is_integer()) throw std::logic_error("delta_j(v) not integral");
        t0[j] = val.num;
    }
    // y-recovery: delta_j(p) = t_j - t0_j, p integer in coweight coordinates
    std::vector<QVec> M(r, QVec(r));
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < r; ++i) M[j][i] = Rat(f.delta[j][i]);

    std::vector<QVec> out;
    IVec t(r, 0), used(f.num_factors, 0);
    std::function<void(int)> rec = [&](int j) {
        if (j == r) {
            QVec rhs(r);
            for (int i = 0; i < r; ++i) rhs[i] = Rat(t[i] - t0[i]);
            QVec p = solve_linear(M, rhs);
            for (const Rat& q : p)
                if (!q.is_integer()) return;
            QVec y(r);
            for (int i = 0; i < r; ++i) y[i] = f.v[i] + p[i];
            out.push_back(std::move(y));
            return;
        }
        int fi = f.factor_of[j];
        long long hi = INT64_MAX;
        for (int g = 0; g < f.num_factors; ++g)
            if (cap_coeff[g][j] > 0)
                hi = std::min(hi, (cap_bound[g] - used[g]) / cap_coeff[g][j]);
        if (hi == INT64_MAX)
            throw std::logic_error("unbounded region coordinate");
        (void)fi;
        for (long long val = 0; val <= hi; ++val) {
            t[j] = val;
            for (int g = 0; g < f.num_factors; ++g) used[g] += cap_coeff[g][j] * val;
            bool ok = true;
            for (int g = 0; g < f.num_factors; ++g)
                if (used[g] > cap_bound[g]) ok = false;
            if (ok) rec(j + 1);
            for (int g = 0; g < f.num_factors; ++g) used[g] -= cap_coeff[g][j] * val;
        }
        t[j] = 0;
    };
    rec(0);
    return out;
}

}  // namespace wf
