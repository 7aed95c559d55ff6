#include "wf/partitions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wf {

void Partition::normalize() {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (long long p : parts)
        if (p < 0) throw std::invalid_argument("negative partition part");
}

long long Partition::size() const {
    return std::accumulate(parts.begin(), parts.end(), 0LL);
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
    os << "]";
    return os.str();
}

Partition parse_partition(const std::string& text) {
    std::string t = text;
    if (t.size() < 2 || t.front() != '[' || t.back() != ']')
        throw std::invalid_argument("partition text must look like [3,2,1]");
    t = t.substr(1, t.size() - 2);
    std::vector<long long> parts;
    std::istringstream is(t);
    std::string tok;
    while (std::getline(is, tok, ','))
        if (!tok.empty()) parts.push_back(std::stoll(tok));
    return Partition(std::move(parts));
}

std::string TypedPartition::str() const {
    return CartanType{ambient, rank}.str() + ":" + partition.str();
}

long long natural_size(Series s, int rank) {
    switch (s) {
        case Series::A: return rank + 1;
        case Series::B: return 2LL * rank + 1;
        case Series::C: return 2LL * rank;
        case Series::D: return 2LL * rank;
        default: throw std::invalid_argument("natural_size: classical types only");
    }
}

bool valid_for(const Partition& p, Series s, int rank) {
    if (p.size() != natural_size(s, rank)) return false;
    if (s == Series::A) return true;
    // parity constraint: parts of the given parity need even multiplicity
    int bad_parity = (s == Series::C) ? 1 : 0;
    std::map<long long, int> mult;
    for (long long q : p.parts) mult[q]++;
    for (auto [q, m] : mult)
        if (q % 2 == bad_parity && m % 2 != 0) return false;
    return true;
}

TypedPartition make_typed(const Partition& p, Series s, int rank) {
    if (!valid_for(p, s, rank))
        throw std::invalid_argument("partition " + p.str() + " invalid for " +
                                    CartanType{s, rank}.str());
    return {p, s, rank};
}

Partition dual(const Partition& p) {
    std::vector<long long> out;
    long long h = p.largest();
    for (long long i = 1; i <= h; ++i) {
        long long c = 0;
        for (long long q : p.parts)
            if (q >= i) ++c;
        out.push_back(c);
    }
    return Partition(std::move(out));
}

Partition lambda_cap(long long m1, long long m2) {
    if (m1 < 0 || m2 < 1) throw std::invalid_argument("lambda_cap: need m1 >= 0, m2 >= 1");
    std::vector<long long> parts(m1 / m2, m2);
    if (m1 % m2 != 0) parts.push_back(m1 % m2);
    return Partition(std::move(parts));
}

bool dominance_leq(const Partition& p, const Partition& q) {
    if (p.size() != q.size())
        throw std::invalid_argument("dominance_leq: sizes differ (" + p.str() + " vs " + q.str() +
                                    ")");
    long long sp = 0, sq = 0;
    int n = std::max(p.length(), q.length());
    for (int i = 0; i < n; ++i) {
        sp += p.part(i);
        sq += q.part(i);
        if (sp > sq) return false;
    }
    return true;
}

TypedPartition collapse(const Partition& p, Series s, int rank) {
    if (p.size() != natural_size(s, rank))
        throw std::invalid_argument("collapse: |" + p.str() + "| != natural size of " +
                                    CartanType{s, rank}.str());
    if (s == Series::A) return {p, s, rank};
    int bad_parity = (s == Series::C) ? 1 : 0;
    std::vector<long long> v = p.parts;
    for (;;) {
        std::sort(v.begin(), v.end(), std::greater<>());
        // first index (largest part) where the parity count is odd so far
        int n = static_cast<int>(v.size());
        int bad = -1;
        for (int i = 0; i < n; ++i) {
            if (v[i] % 2 != bad_parity) continue;
            int j = i;
            while (j < n && v[j] == v[i]) ++j;
            if ((j - i) % 2 != 0) { bad = j - 1; break; }  // last of the odd run
            i = j - 1;
        }
        if (bad < 0) break;
        // decrement the last part of the bad run; the compensating +1 goes to
        // the first later slot of value <= q-2 so the bad value is not
        // recreated (append a fresh 1 if there is none)
        long long q = v[bad];
        v[bad] -= 1;
        int target = -1;
        for (int j = bad + 1; j < n; ++j)
            if (v[j] <= q - 2) { target = j; break; }
        if (target >= 0)
            v[target] += 1;
        else
            v.push_back(1);
    }
    Partition q(std::move(v));
    return make_typed(q, s, rank);
}

XiSequence xi_sequence(const Partition& p) {
    XiSequence xi;
    for (long long q : p.parts)
        for (long long m = q - 1; m >= 1 - q; m -= 2) xi.markers.push_back(m);
    std::sort(xi.markers.begin(), xi.markers.end(), std::greater<>());
    return xi;
}

std::string XiSequence::str() const {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < markers.size(); ++i) os << (i ? "," : "") << markers[i];
    os << "}";
    return os.str();
}

Partition xi_to_partition(const XiSequence& xi) {
    // Greedy: the largest remaining marker m must come from a part m+1.
    std::multiset<long long> pool(xi.markers.begin(), xi.markers.end());
    std::vector<long long> parts;
    while (!pool.empty()) {
        long long top = *pool.rbegin();
        long long part = top + 1;
        for (long long m = part - 1; m >= 1 - part; m -= 2) {
            auto it = pool.find(m);
            if (it == pool.end())
                throw std::invalid_argument("marker multiset is not realizable");
            pool.erase(it);
        }
        parts.push_back(part);
    }
    return Partition(std::move(parts));
}

std::string WeightedDynkinDiagram::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < labels.size(); ++i) os << (i ? "," : "") << labels[i];
    os << ")";
    return os.str();
}

std::vector<long long> dominant_markers(const TypedPartition& tp) {
    XiSequence xi = xi_sequence(tp.partition);
    int n = (tp.ambient == Series::A) ? tp.rank + 1 : tp.rank;
    std::vector<long long> h(xi.markers.begin(), xi.markers.begin() + n);
    return h;  // already sorted decreasing; nonnegative for B/C/D by symmetry
}

WeightedDynkinDiagram wdd_classical(const TypedPartition& tp) {
    if (!valid_for(tp.partition, tp.ambient, tp.rank))
        throw std::invalid_argument("wdd_classical: invalid typed partition");
    auto h = dominant_markers(tp);
    int r = tp.rank;
    WeightedDynkinDiagram w;
    switch (tp.ambient) {
        case Series::A:
            for (int i = 0; i + 1 <= r; ++i) w.labels.push_back(static_cast<int>(h[i] - h[i + 1]));
            break;
        case Series::B:
            for (int i = 0; i + 1 < r; ++i) w.labels.push_back(static_cast<int>(h[i] - h[i + 1]));
            w.labels.push_back(static_cast<int>(h[r - 1]));
            break;
        case Series::C:
            for (int i = 0; i + 1 < r; ++i) w.labels.push_back(static_cast<int>(h[i] - h[i + 1]));
            w.labels.push_back(static_cast<int>(2 * h[r - 1]));
            break;
        case Series::D:
            for (int i = 0; i + 2 < r; ++i) w.labels.push_back(static_cast<int>(h[i] - h[i + 1]));
            w.labels.push_back(static_cast<int>(h[r - 2] - h[r - 1]));
            w.labels.push_back(static_cast<int>(h[r - 2] + h[r - 1]));
            break;
        default:
            throw std::invalid_argument("wdd_classical: classical types only");
    }
    for (int l : w.labels)
        if (l < 0 || l > 2) throw std::logic_error("weighted Dynkin label outside {0,1,2}");
    return w;
}

namespace {
void enumerate_partitions(long long n, long long maxpart, std::vector<long long>& cur,
                          const std::function<void(const std::vector<long long>&)>& emit) {
    if (n == 0) {
        emit(cur);
        return;
    }
    for (long long p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        enumerate_partitions(n - p, p, cur, emit);
        cur.pop_back();
    }
}
}  // namespace

std::vector<TypedPartition> all_orbits(Series s, int rank) {
    std::vector<TypedPartition> out;
    long long n = natural_size(s, rank);
    std::vector<long long> cur;
    enumerate_partitions(n, n, cur, [&](const std::vector<long long>& v) {
        Partition p{std::vector<long long>(v)};
        if (valid_for(p, s, rank)) out.push_back({p, s, rank});
    });
    return out;
}

}  // namespace wf
