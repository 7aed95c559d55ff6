#include "wf/weylchar.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "wf/orbits.hpp"  // data_dir()

namespace wf {

WMat wmat_identity(int rank) {
    WMat m(rank * rank, 0);
    for (int i = 0; i < rank; ++i) m[i * rank + i] = 1;
    return m;
}

WMat wmat_mul(int rank, const WMat& a, const WMat& b) {
    WMat out(rank * rank, 0);
    for (int i = 0; i < rank; ++i)
        for (int k = 0; k < rank; ++k) {
            int8_t aik = a[i * rank + k];
            if (!aik) continue;
            for (int j = 0; j < rank; ++j) out[i * rank + j] += aik * b[k * rank + j];
        }
    return out;
}

WMat wmat_inverse(int rank, const WMat& m) {
    // integer matrix with det +-1; invert by rational elimination
    std::vector<std::vector<Rat>> a(rank, std::vector<Rat>(2 * rank, Rat(0)));
    for (int i = 0; i < rank; ++i) {
        for (int j = 0; j < rank; ++j) a[i][j] = Rat(m[i * rank + j]);
        a[i][rank + i] = Rat(1);
    }
    for (int col = 0; col < rank; ++col) {
        int piv = -1;
        for (int r = col; r < rank; ++r)
            if (!a[r][col].is_zero()) { piv = r; break; }
        if (piv < 0) throw std::logic_error("singular Weyl matrix");
        std::swap(a[piv], a[col]);
        for (int r = 0; r < rank; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            Rat f = a[r][col] / a[col][col];
            for (int c = col; c < 2 * rank; ++c) a[r][c] -= f * a[col][c];
        }
    }
    WMat out(rank * rank, 0);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) {
            Rat v = a[i][rank + j] / a[i][i];
            if (!v.is_integer()) throw std::logic_error("non-integral Weyl inverse");
            out[i * rank + j] = static_cast<int8_t>(v.num);
        }
    return out;
}

int wmat_det(int rank, const WMat& m) {
    std::vector<std::vector<Rat>> a(rank, std::vector<Rat>(rank));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) a[i][j] = Rat(m[i * rank + j]);
    Rat det(1);
    for (int col = 0; col < rank; ++col) {
        int piv = -1;
        for (int r = col; r < rank; ++r)
            if (!a[r][col].is_zero()) { piv = r; break; }
        if (piv < 0) return 0;
        if (piv != col) { std::swap(a[piv], a[col]); det = -det; }
        det *= a[col][col];
        for (int r = col + 1; r < rank; ++r) {
            if (a[r][col].is_zero()) continue;
            Rat f = a[r][col] / a[col][col];
            for (int c = col; c < rank; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det.num > 0 ? 1 : -1;
}

namespace {

constexpr long long kEnumerationLimit = 3'000'000;

// simple reflection matrices in the root basis
std::vector<WMat> simple_reflection_mats(const RootSystem& rs) {
    int r = rs.rank();
    std::vector<WMat> gens;
    for (int i = 0; i < r; ++i) {
        WMat m(r * r, 0);
        for (int j = 0; j < r; ++j) {
            Root aj(r, 0);
            aj[j] = 1;
            Root im = rs.reflect_root(i, aj);
            for (int k = 0; k < r; ++k) m[k * r + j] = static_cast<int8_t>(im[k]);
        }
        gens.push_back(std::move(m));
    }
    return gens;
}

WMat reflection_mat(const RootSystem& rs, const Root& gamma) {
    int r = rs.rank();
    WMat m(r * r, 0);
    for (int j = 0; j < r; ++j) {
        Root aj(r, 0);
        aj[j] = 1;
        Root im = rs.reflect_root_by(gamma, aj);
        for (int k = 0; k < r; ++k) m[k * r + j] = static_cast<int8_t>(im[k]);
    }
    return m;
}

using Frac = mpq_class;
using FVec = std::vector<Frac>;

inline Frac fr(long long v) { return Frac(static_cast<long>(v)); }

FVec apply_mat(const std::vector<std::vector<long long>>& M, const FVec& v) {
    int k = static_cast<int>(M.size());
    FVec out(k, 0);
    for (int r = 0; r < k; ++r) {
        Frac acc = 0;
        for (int c = 0; c < k; ++c)
            if (v[c] != 0) acc += fr(M[r][c]) * v[c];
        out[r] = acc;
    }
    return out;
}

// kernel basis of (M - lambda I) restricted to the span of `basis`
std::vector<FVec> eigen_kernel(const std::vector<std::vector<long long>>& M, long long lambda,
                               const std::vector<FVec>& basis) {
    int k = static_cast<int>(M.size());
    int d = static_cast<int>(basis.size());
    std::vector<FVec> aug(d, FVec(k, 0));
    for (int i = 0; i < d; ++i) {
        aug[i] = apply_mat(M, basis[i]);
        for (int c = 0; c < k; ++c) aug[i][c] -= fr(lambda) * basis[i][c];
    }
    std::vector<FVec> coef(d, FVec(d, 0));
    for (int i = 0; i < d; ++i) coef[i][i] = 1;
    int row = 0;
    for (int col = 0; col < k && row < d; ++col) {
        int piv = -1;
        for (int r = row; r < d; ++r)
            if (aug[r][col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(aug[piv], aug[row]);
        std::swap(coef[piv], coef[row]);
        for (int r = 0; r < d; ++r) {
            if (r == row || aug[r][col] == 0) continue;
            Frac f = aug[r][col] / aug[row][col];
            for (int c = col; c < k; ++c) aug[r][c] -= f * aug[row][c];
            for (int c = 0; c < d; ++c) coef[r][c] -= f * coef[row][c];
        }
        ++row;
    }
    std::vector<FVec> out;
    for (int r = row; r < d; ++r) {
        FVec v(k, 0);
        for (int i = 0; i < d; ++i)
            if (coef[r][i] != 0)
                for (int c = 0; c < k; ++c) v[c] += coef[r][i] * basis[i][c];
        out.push_back(std::move(v));
    }
    return out;
}

// integer eigenvalues of M on the span of `basis` (M is diagonalizable with
// integral spectrum): union of integer roots of the minimal polynomials of
// the basis vectors, found by Krylov dependence
std::set<long long> integer_spectrum(const std::vector<std::vector<long long>>& M,
                                     const std::vector<FVec>& basis, long long bound) {
    std::set<long long> out;
    for (const auto& b0 : basis) {
        // Krylov sequence until dependence
        std::vector<FVec> krylov{b0};
        std::vector<FVec> echelon;        // reduced rows
        std::vector<FVec> combo;          // combination giving each echelon row
        int k = static_cast<int>(b0.size());
        for (;;) {
            const FVec& v = krylov.back();
            // reduce v against echelon, tracking the combination
            FVec red = v, cmb(krylov.size(), 0);
            cmb[krylov.size() - 1] = 1;
            for (size_t e = 0; e < echelon.size(); ++e) {
                int lead = -1;
                for (int c = 0; c < k; ++c)
                    if (echelon[e][c] != 0) { lead = c; break; }
                if (lead < 0 || red[lead] == 0) continue;
                Frac f = red[lead] / echelon[e][lead];
                for (int c = 0; c < k; ++c) red[c] -= f * echelon[e][c];
                for (size_t c = 0; c < combo[e].size(); ++c) cmb[c] -= f * combo[e][c];
            }
            bool zero = std::all_of(red.begin(), red.end(), [](const Frac& f) { return f == 0; });
            if (zero) {
                // cmb gives the minimal polynomial coefficients of b0
                for (long long lam = -bound; lam <= bound; ++lam) {
                    // evaluate sum cmb[i] lam^i
                    Frac acc = 0, p = 1;
                    for (size_t i = 0; i < cmb.size(); ++i) {
                        acc += cmb[i] * p;
                        p *= fr(lam);
                    }
                    if (acc == 0) out.insert(lam);
                }
                break;
            }
            echelon.push_back(std::move(red));
            combo.push_back(std::move(cmb));
            for (auto& c : combo) c.resize(krylov.size() + 1, 0);
            krylov.push_back(apply_mat(M, krylov.back()));
        }
    }
    return out;
}

}  // namespace

CharSystem::CharSystem(CartanType t) : type_(t), rs_(std::make_shared<RootSystem>(
                                                      std::vector<CartanType>{t})) {
    long long expected = 1;
    {
        // |W| per component type
        int r = t.rank;
        auto fact = [](long long n) {
            long long f = 1;
            for (long long i = 2; i <= n; ++i) f *= i;
            return f;
        };
        switch (t.series) {
            case Series::A: expected = fact(r + 1); break;
            case Series::B:
            case Series::C: expected = fact(r) << r; break;
            case Series::D: expected = fact(r) << (r - 1); break;
            case Series::G: expected = 12; break;
            case Series::F: expected = 1152; break;
            case Series::E:
                expected = (r == 6) ? 51840LL : (r == 7) ? 2903040LL : 696729600LL;
                break;
        }
    }
    order_ = expected;
    if (order_ <= kEnumerationLimit) {
        build_by_enumeration();
        compute_b_invariants();
    } else {
        load_from_files();
    }
    load_springer();
}

const CharSystem& CharSystem::get(CartanType t) {
    static std::map<std::string, std::unique_ptr<CharSystem>> cache;
    auto key = t.str();
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::unique_ptr<CharSystem>(new CharSystem(t))).first;
    return *it->second;
}

void CharSystem::build_by_enumeration() {
    int r = rs_->rank();
    auto gens = simple_reflection_mats(*rs_);
    elements_.clear();
    element_index_.clear();
    WMat id = wmat_identity(r);
    elements_.push_back(id);
    element_index_[id] = 0;
    std::vector<int> word_gen{-1}, word_prev{-1};
    for (size_t head = 0; head < elements_.size(); ++head) {
        WMat cur = elements_[head];  // copy: elements_ may reallocate
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            WMat nxt = wmat_mul(r, cur, gens[gi]);
            if (element_index_.emplace(nxt, static_cast<int>(elements_.size())).second) {
                elements_.push_back(std::move(nxt));
                word_gen.push_back(static_cast<int>(gi));
                word_prev.push_back(static_cast<int>(head));
            }
        }
    }
    if (static_cast<long long>(elements_.size()) != order_)
        throw std::logic_error("Weyl group enumeration produced wrong order for " + type_.str());

    // conjugacy classes by orbit sweep
    element_class_.assign(elements_.size(), -1);
    std::vector<WMat> geninv;
    for (const auto& g : gens) geninv.push_back(wmat_inverse(r, g));
    auto word_of = [&](int idx) {
        std::vector<int> w;
        while (idx != 0) {
            w.push_back(word_gen[idx]);
            idx = word_prev[idx];
        }
        std::reverse(w.begin(), w.end());
        return w;
    };
    int nclass = 0;
    for (size_t i = 0; i < elements_.size(); ++i) {
        if (element_class_[i] != -1) continue;
        int cls = nclass++;
        class_rep_.push_back(elements_[i]);
        class_word_.push_back(word_of(static_cast<int>(i)));
        long long size = 0;
        std::vector<int> stack{static_cast<int>(i)};
        element_class_[i] = cls;
        while (!stack.empty()) {
            int e = stack.back();
            stack.pop_back();
            ++size;
            for (size_t gi = 0; gi < gens.size(); ++gi) {
                WMat conj = wmat_mul(r, geninv[gi], wmat_mul(r, elements_[e], gens[gi]));
                int idx = element_index_.at(conj);
                if (element_class_[idx] == -1) {
                    element_class_[idx] = cls;
                    stack.push_back(idx);
                }
            }
        }
        class_size_.push_back(size);
        if (elements_[i] == wmat_identity(r)) id_class_ = cls;
    }
    if (std::accumulate(class_size_.begin(), class_size_.end(), 0LL) != order_)
        throw std::logic_error("class sizes do not sum to |W|");

    // character table by splitting the class algebra with small classes
    int k = nclass;
    std::vector<int> order_by_size(k);
    std::iota(order_by_size.begin(), order_by_size.end(), 0);
    std::sort(order_by_size.begin(), order_by_size.end(),
              [&](int a, int b) { return class_size_[a] < class_size_[b]; });
    std::vector<std::vector<std::vector<Frac>>> spaces;
    {
        std::vector<std::vector<Frac>> full;
        for (int i = 0; i < k; ++i) {
            std::vector<Frac> e(k, 0);
            e[i] = 1;
            full.push_back(std::move(e));
        }
        spaces.push_back(std::move(full));
    }
    std::vector<WMat> inv_of_class;
    for (const auto& repm : class_rep_) inv_of_class.push_back(wmat_inverse(r, repm));
    for (int pick : order_by_size) {
        bool all_one = std::all_of(spaces.begin(), spaces.end(),
                                   [](const auto& s) { return s.size() == 1; });
        if (all_one) break;
        if (pick == id_class_) continue;
        // enumerate the class
        std::vector<int> members;
        {
            std::set<int> seen;
            std::vector<int> stack{element_index_.at(class_rep_[pick])};
            seen.insert(stack[0]);
            while (!stack.empty()) {
                int e = stack.back();
                stack.pop_back();
                members.push_back(e);
                for (size_t gi = 0; gi < gens.size(); ++gi) {
                    WMat conj = wmat_mul(r, geninv[gi], wmat_mul(r, elements_[e], gens[gi]));
                    int idx = element_index_.at(conj);
                    if (seen.insert(idx).second) stack.push_back(idx);
                }
            }
        }
        // M[j][l] = #{(x,y) in C_pick x C_l : xy = z_j}; eigenvectors of these
        // commuting matrices are the character rows up to scale
        std::vector<std::vector<long long>> M(k, std::vector<long long>(k, 0));
        for (int x : members) {
            WMat xinv = wmat_inverse(r, elements_[x]);
            for (int j = 0; j < k; ++j) {
                WMat prod = wmat_mul(r, xinv, class_rep_[j]);
                M[j][element_class_[element_index_.at(prod)]]++;
            }
        }
        std::vector<std::vector<FVec>> next;
        for (auto& space : spaces) {
            if (space.size() == 1) { next.push_back(std::move(space)); continue; }
            auto lams = integer_spectrum(M, space, class_size_[pick]);
            size_t found = 0;
            for (long long lam : lams) {
                auto ker = eigen_kernel(M, lam, space);
                if (!ker.empty()) {
                    found += ker.size();
                    next.push_back(std::move(ker));
                }
            }
            if (found != space.size())
                throw std::logic_error("class algebra eigen-splitting lost dimensions");
        }
        spaces = std::move(next);
    }
    for (const auto& s : spaces)
        if (s.size() != 1)
            throw std::logic_error("class multiplication failed to split the class algebra of " +
                                   type_.str());

    // each 1-dim space is spanned by (chi_s(g_j))_j up to scale
    table_.clear();
    for (const auto& s : spaces) {
        const auto& v = s[0];
        if (v[id_class_] == 0) throw std::logic_error("eigenvector vanishes at identity");
        Frac norm = 0;
        for (int j = 0; j < k; ++j) norm += fr(class_size_[j]) * v[j] * v[j];
        // deg^2 = |W| v(id)^2 / sum_j |C_j| v(j)^2
        Frac deg2 = fr(order_) * v[id_class_] * v[id_class_] / norm;
        if (deg2.get_den() != 1) throw std::logic_error("non-integral squared degree");
        mpz_class dg = sqrt(deg2.get_num());
        if (dg * dg != deg2.get_num())
            throw std::logic_error("squared degree is not a perfect square");
        std::vector<long long> row(k);
        for (int j = 0; j < k; ++j) {
            Frac chi = Frac(dg) * v[j] / v[id_class_];
            if (chi.get_den() != 1) throw std::logic_error("non-integral character value");
            row[j] = static_cast<long long>(chi.get_num().get_si());
        }
        table_.push_back(std::move(row));
    }
    std::sort(table_.begin(), table_.end(),
              [&](const auto& a, const auto& b) { return a[id_class_] < b[id_class_] ||
                     (a[id_class_] == b[id_class_] && a < b); });
    if (static_cast<int>(table_.size()) != k)
        throw std::logic_error("wrong number of irreducibles");
}

void CharSystem::compute_b_invariants() {
    int k = num_classes();
    int r = rs_->rank();
    long long N = static_cast<long long>(rs_->positive_roots().size());
    // traces of powers per class
    std::vector<std::vector<long long>> ptr(k, std::vector<long long>(N + 1, 0));
    for (int c = 0; c < k; ++c) {
        WMat pw = wmat_identity(r);
        for (long long m = 1; m <= N; ++m) {
            pw = wmat_mul(r, pw, class_rep_[c]);
            long long tr = 0;
            for (int i = 0; i < r; ++i) tr += pw[i * r + i];
            ptr[c][m] = tr;
        }
    }
    // Newton recursion for characters of S^m(V)
    std::vector<std::vector<Frac>> sym(N + 1, std::vector<Frac>(k, 0));
    for (int c = 0; c < k; ++c) sym[0][c] = 1;
    for (long long m = 1; m <= N; ++m)
        for (int c = 0; c < k; ++c) {
            Frac acc = 0;
            for (long long t = 1; t <= m; ++t) acc += fr(ptr[c][t]) * sym[m - t][c];
            sym[m][c] = acc / fr(m);
        }
    b_.assign(num_irreps(), -1);
    for (int s = 0; s < num_irreps(); ++s) {
        for (long long m = 0; m <= N && b_[s] < 0; ++m) {
            Frac acc = 0;
            for (int c = 0; c < k; ++c)
                acc += fr(class_size_[c]) * sym[m][c] * fr(chi(s, c));
            acc /= fr(order_);
            if (acc != 0) {
                if (acc < 0) throw std::logic_error("negative multiplicity in S^m");
                b_[s] = m;
            }
        }
        if (b_[s] < 0)
            throw std::logic_error("b-invariant not found within |Phi^+| degrees");
    }
}

int CharSystem::sign_irrep() const {
    long long N = static_cast<long long>(rs_->positive_roots().size());
    for (int s = 0; s < num_irreps(); ++s)
        if (degree(s) == 1 && b_[s] == N) return s;
    throw std::logic_error("sign character not found");
}

int CharSystem::trivial_irrep() const {
    for (int s = 0; s < num_irreps(); ++s)
        if (degree(s) == 1 && b_[s] == 0) return s;
    throw std::logic_error("trivial character not found");
}

int CharSystem::class_of(const WMat& m) const {
    if (!enumerated()) throw std::logic_error("class_of requires an enumerated group");
    return element_class_[element_index_.at(m)];
}

int CharSystem::j_induce_sign(const std::vector<Root>& sub_positive_roots) const {
    if (!enumerated())
        throw std::logic_error("j_induce_sign requires an enumerated group (use bundled "
                               "tables for E8 pipelines)");
    int r = rs_->rank();
    // subgroup generated by the reflections of the subsystem
    std::vector<WMat> gens;
    for (const auto& beta : sub_positive_roots) gens.push_back(reflection_mat(*rs_, beta));
    std::map<WMat, int> sign_of;  // element -> det
    std::vector<WMat> frontier{wmat_identity(r)};
    sign_of[frontier[0]] = 1;
    while (!frontier.empty()) {
        std::vector<WMat> next;
        for (const auto& e : frontier) {
            int se = sign_of.at(e);
            for (const auto& g : gens) {
                WMat x = wmat_mul(r, e, g);
                auto it = sign_of.find(x);
                if (it == sign_of.end()) {
                    sign_of[x] = -se;
                    next.push_back(std::move(x));
                }
            }
        }
        frontier = std::move(next);
    }
    // signed class counts
    std::vector<long long> signed_count(num_classes(), 0);
    for (const auto& [e, s] : sign_of) signed_count[class_of(e)] += s;
    long long sub_order = static_cast<long long>(sign_of.size());
    long long target_b = sub_positive_roots.size();
    int found = -1;
    for (int s = 0; s < num_irreps(); ++s) {
        if (b_[s] != target_b) continue;
        long long num = 0;
        for (int c = 0; c < num_classes(); ++c) num += signed_count[c] * chi(s, c);
        if (num == 0) continue;
        if (num % sub_order != 0) throw std::logic_error("non-integral induction multiplicity");
        long long mult = num / sub_order;
        if (mult < 0) throw std::logic_error("negative induction multiplicity");
        if (mult != 1)
            throw std::logic_error("j-induction constituent has multiplicity != 1 in " +
                                   type_.str());
        if (found >= 0)
            throw std::logic_error("j-induction constituent is not unique in " + type_.str());
        found = s;
    }
    if (found < 0) throw std::logic_error("no constituent with b = |Phi'^+| in " + type_.str());
    return found;
}

const std::string& CharSystem::springer_orbit_name(int irrep) const {
    if (springer_by_irrep_.empty() || springer_by_irrep_[irrep].empty())
        throw std::runtime_error("no springer data for irreducible #" + std::to_string(irrep) +
                                 " of " + type_.str() + " (data file missing or incomplete)");
    return springer_by_irrep_[irrep];
}

namespace {
std::string lower_copy(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}
}  // namespace

void CharSystem::load_springer() {
    std::string path = data_dir() + "/" + lower_copy(type_.str()) + "/springer";
    std::ifstream in(path);
    springer_by_irrep_.assign(num_irreps(), "");
    if (!in) return;  // optional for classical; exceptional lookups will error
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream is(line);
        // "orbit_name degree b chi_0 chi_1 ..." keyed by the character row
        std::string name;
        long long deg, bval;
        is >> name >> deg >> bval;
        std::vector<long long> row;
        long long v;
        while (is >> v) row.push_back(v);
        int match = -1;
        for (int s = 0; s < num_irreps(); ++s) {
            if (degree(s) != deg || b_[s] != bval) continue;
            if (!row.empty()) {
                bool eq = true;
                for (int c = 0; c < num_classes() && eq; ++c)
                    if (chi(s, c) != row[c]) eq = false;
                if (!eq) continue;
            }
            if (match >= 0)
                throw std::runtime_error("ambiguous springer row in " + path);
            match = s;
        }
        if (match < 0) throw std::runtime_error("springer row matches no character in " + path);
        springer_by_irrep_[match] = name;
    }
}

void CharSystem::load_from_files() {
    std::string base = data_dir() + "/" + lower_copy(type_.str());
    std::string cpath = base + "/classes";
    std::ifstream cin_(cpath);
    if (!cin_)
        throw std::runtime_error("missing static data file: " + cpath +
                                 " (required for " + type_.str() +
                                 "; generate with gen-weyl-data)");
    std::string line;
    long long declared_order = -1;
    while (std::getline(cin_, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream is(line);
        std::string head;
        is >> head;
        if (head == "order") { is >> declared_order; continue; }
        // "class <size> <word letters...>"
        if (head != "class") throw std::runtime_error("bad classes file: " + cpath);
        long long size;
        is >> size;
        std::vector<int> word;
        int letter;
        while (is >> letter) word.push_back(letter);
        class_size_.push_back(size);
        class_word_.push_back(word);
        int r = rs_->rank();
        WMat m = wmat_identity(r);
        auto gens = simple_reflection_mats(*rs_);
        for (int l : word) m = wmat_mul(r, m, gens[l]);
        class_rep_.push_back(std::move(m));
        if (word.empty()) id_class_ = static_cast<int>(class_size_.size()) - 1;
    }
    if (declared_order != order_)
        throw std::runtime_error("declared |W| mismatch in " + cpath);
    if (std::accumulate(class_size_.begin(), class_size_.end(), 0LL) != order_)
        throw std::runtime_error("class sizes do not sum to |W| in " + cpath);
    std::string tpath = base + "/chartable";
    std::ifstream tin(tpath);
    if (!tin) throw std::runtime_error("missing static data file: " + tpath);
    while (std::getline(tin, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream is(line);
        std::vector<long long> row;
        long long v;
        while (is >> v) row.push_back(v);
        if (row.size() != class_size_.size())
            throw std::runtime_error("chartable row length mismatch in " + tpath);
        table_.push_back(std::move(row));
    }
    if (table_.size() != class_size_.size())
        throw std::runtime_error("chartable is not square in " + tpath);
    compute_b_invariants();
    auto failures = validate();
    if (!failures.empty())
        throw std::runtime_error("bundled data validation failed: " + failures.front());
}

std::vector<std::string> CharSystem::validate() const {
    std::vector<std::string> fail;
    int k = num_classes();
    for (int s = 0; s < num_irreps(); ++s)
        for (int t = s; t < num_irreps(); ++t) {
            __int128 acc = 0;
            for (int c = 0; c < k; ++c)
                acc += static_cast<__int128>(class_size_[c]) * chi(s, c) * chi(t, c);
            __int128 want = (s == t) ? static_cast<__int128>(order_) : 0;
            if (acc != want) {
                fail.push_back("row orthogonality fails for irreps " + std::to_string(s) + "," +
                               std::to_string(t) + " of " + type_.str());
                return fail;
            }
        }
    long long N = static_cast<long long>(rs_->positive_roots().size());
    bool sign_ok = false;
    for (int s = 0; s < num_irreps(); ++s)
        if (degree(s) == 1 && b_[s] == N) sign_ok = true;
    if (!sign_ok) fail.push_back("b(sgn) != |Phi^+| for " + type_.str());
    return fail;
}

}  // namespace wf
