#include "zimt/repdim.hpp"

#include "zimt/exactlin.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace zimt::repdim {

using rootkit::RootSystem;
using rootkit::TypeLabel;
using catalogue::Family;
using catalogue::GroupSpec;

namespace {

// Per-(type, rank) data for weight computations, all in fundamental-weight
// coordinates scaled to integers.
struct WeightFrame {
    rootkit::RootSystemPtr rs;
    int rank = 0;
    std::vector<Int> sq;                       // squared lengths of the simple roots
    std::vector<std::vector<Int>> pos_coeffs;  // simple-basis coefficients per positive root
    std::vector<Int> pos_den;                  // sum_j c_j sq_j per positive root
    std::vector<std::vector<Int>> pos_wt;      // c_j * sq_j per positive root
    // Freudenthal machinery:
    std::vector<std::vector<Int>> cartan_cols;  // alpha_j in fundamental-weight coords
    std::vector<Int> pos_height;
    std::vector<std::vector<Int>> pos_fw;  // positive roots in fundamental-weight coords
    std::vector<std::vector<Int>> metric;  // M[i][j] = 2 det(C) <w_i, w_j>, integer
};

const WeightFrame& frame_for(TypeLabel type, int rank) {
    static std::map<std::pair<TypeLabel, int>, std::unique_ptr<WeightFrame>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(type, rank);
    if (auto it = cache.find(key); it != cache.end()) return *it->second;
    if (type == TypeLabel::BC)
        throw DomainError("weight computations need a reduced (complex semisimple) type");

    auto fr = std::make_unique<WeightFrame>();
    fr->rs = rootkit::build_root_system(type, rank);
    const RootSystem& rs = *fr->rs;
    fr->rank = rank;
    fr->sq.resize(static_cast<std::size_t>(rank));
    for (int i = 0; i < rank; ++i)
        fr->sq[static_cast<std::size_t>(i)] = rs.sqnorm(rs.simple[static_cast<std::size_t>(i)]);

    Mat cartan(rank, rank);  // C(i,j) = 2<a_i,a_j>/<a_i,a_i>
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) {
            Int num = 2 * rs.dot(rs.simple[static_cast<std::size_t>(i)],
                                 rs.simple[static_cast<std::size_t>(j)]);
            if (num % fr->sq[static_cast<std::size_t>(i)] != 0)
                throw DomainError("non-integral Cartan entry");
            cartan(i, j) = num / fr->sq[static_cast<std::size_t>(i)];
        }
    fr->cartan_cols.assign(static_cast<std::size_t>(rank), std::vector<Int>());
    for (int j = 0; j < rank; ++j) {
        auto& col = fr->cartan_cols[static_cast<std::size_t>(j)];
        col.resize(static_cast<std::size_t>(rank));
        for (int i = 0; i < rank; ++i) col[static_cast<std::size_t>(i)] = cartan(i, j);
    }

    for (int p : rs.positive) {
        const Vec& c = rs.coords[static_cast<std::size_t>(p)];
        std::vector<Int> cv(static_cast<std::size_t>(rank)), wv(static_cast<std::size_t>(rank));
        Int den = 0;
        for (int j = 0; j < rank; ++j) {
            cv[static_cast<std::size_t>(j)] = c[j];
            wv[static_cast<std::size_t>(j)] = c[j] * fr->sq[static_cast<std::size_t>(j)];
            den += wv[static_cast<std::size_t>(j)];
        }
        fr->pos_coeffs.push_back(cv);
        fr->pos_wt.push_back(wv);
        fr->pos_den.push_back(den);
        fr->pos_height.push_back(rs.heights[static_cast<std::size_t>(p)]);
        std::vector<Int> fw(static_cast<std::size_t>(rank), 0);
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j)
                fw[static_cast<std::size_t>(i)] += cartan(i, j) * c[j];
        fr->pos_fw.push_back(std::move(fw));
    }

    // metric[i][j] = adj(C)_{ij} * sq_i  (= 2 det(C) <w_i, w_j>).
    MatQ cq = exactlin::to_rational(cartan);
    MatQ cinv = exactlin::inverse(cq);
    MatQ cech = cq;
    exactlin::echelonize(cech);
    Rational det(1);
    for (int i = 0; i < rank; ++i) det *= cech(i, i);
    fr->metric.assign(static_cast<std::size_t>(rank), std::vector<Int>(static_cast<std::size_t>(rank)));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) {
            Rational v = cinv(i, j) * det * Rational(fr->sq[static_cast<std::size_t>(i)]);
            if (boost::multiprecision::denominator(v) != 1)
                throw DomainError("weight metric not integral after scaling");
            fr->metric[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                static_cast<Int>(boost::multiprecision::numerator(v));
        }

    auto& slot = cache[key];
    slot = std::move(fr);
    return *slot;
}

void check_dominant(const WeightFrame& fr, const DominantWeight& lambda) {
    if (static_cast<int>(lambda.coeffs.size()) != fr.rank)
        throw DomainError("weight coefficient count must equal the rank");
    for (Int k : lambda.coeffs)
        if (k < 0) throw DomainError("dominant weight needs nonnegative coefficients");
}

}  // namespace

BigInt weyl_dim(TypeLabel type, int rank, const DominantWeight& lambda) {
    const WeightFrame& fr = frame_for(type, rank);
    check_dominant(fr, lambda);
    BigInt num = 1, den = 1;
    for (std::size_t r = 0; r < fr.pos_den.size(); ++r) {
        Int shift = 0;
        const auto& wv = fr.pos_wt[r];
        for (int j = 0; j < fr.rank; ++j)
            shift += wv[static_cast<std::size_t>(j)] * lambda.coeffs[static_cast<std::size_t>(j)];
        if (shift == 0) continue;  // factor equals 1
        num *= BigInt(fr.pos_den[r] + shift);
        den *= BigInt(fr.pos_den[r]);
    }
    BigInt q, rem;
    boost::multiprecision::divide_qr(num, den, q, rem);
    if (rem != 0) throw DomainError("Weyl dimension product failed exactness check");
    return q;
}

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<Int>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (Int x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

Int scaled_inner(const WeightFrame& fr, const std::vector<Int>& a, const std::vector<Int>& b) {
    Int total = 0;
    for (int i = 0; i < fr.rank; ++i) {
        if (a[static_cast<std::size_t>(i)] == 0) continue;
        const auto& row = fr.metric[static_cast<std::size_t>(i)];
        Int s = 0;
        for (int j = 0; j < fr.rank; ++j) s += row[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(j)];
        total += a[static_cast<std::size_t>(i)] * s;
    }
    return total;
}

}  // namespace

BigInt freudenthal_dim(TypeLabel type, int rank, const DominantWeight& lambda, Int dim_cap) {
    if (rank > 6) throw DomainError("freudenthal_dim: rank limited to 6 (oracle scale)");
    const WeightFrame& fr = frame_for(type, rank);
    check_dominant(fr, lambda);

    std::vector<Int> lam(lambda.coeffs.begin(), lambda.coeffs.end());
    std::vector<Int> rho(static_cast<std::size_t>(rank), 1);
    auto plus = [&](const std::vector<Int>& a, const std::vector<Int>& b) {
        std::vector<Int> r(a);
        for (int i = 0; i < rank; ++i) r[static_cast<std::size_t>(i)] += b[static_cast<std::size_t>(i)];
        return r;
    };
    const Int lam_norm = scaled_inner(fr, plus(lam, rho), plus(lam, rho));

    std::unordered_map<std::vector<Int>, Int, VecHash> mult;
    mult.emplace(lam, 1);
    std::vector<std::vector<Int>> level = {lam};
    Int total = 1;

    while (!level.empty()) {
        std::unordered_map<std::vector<Int>, char, VecHash> cand;
        for (const auto& nu : level)
            for (int i = 0; i < rank; ++i) {
                std::vector<Int> mu(nu);
                for (int j = 0; j < rank; ++j)
                    mu[static_cast<std::size_t>(j)] -=
                        fr.cartan_cols[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                cand.emplace(std::move(mu), 0);
            }
        std::vector<std::vector<Int>> next;
        for (auto& [mu, ignored] : cand) {
            (void)ignored;
            const Int denom = lam_norm - scaled_inner(fr, plus(mu, rho), plus(mu, rho));
            if (denom <= 0) continue;
            Int rhs = 0;
            for (std::size_t r = 0; r < fr.pos_fw.size(); ++r) {
                const auto& alpha = fr.pos_fw[r];
                std::vector<Int> up(mu);
                for (Int k = 1;; ++k) {
                    for (int j = 0; j < rank; ++j)
                        up[static_cast<std::size_t>(j)] += alpha[static_cast<std::size_t>(j)];
                    auto it = mult.find(up);
                    if (it == mult.end()) break;
                    rhs += it->second * scaled_inner(fr, up, alpha);
                }
            }
            rhs *= 2;
            if (rhs <= 0) continue;
            if (rhs % denom != 0)
                throw DomainError("Freudenthal recursion failed exactness check");
            Int m = rhs / denom;
            if (m <= 0) continue;
            mult.emplace(mu, m);
            total += m;
            if (total > dim_cap) throw DomainError("freudenthal_dim: oracle scale limit exceeded");
            next.push_back(mu);
        }
        level = std::move(next);
    }
    return BigInt(total);
}

namespace {

std::vector<DominantWeight> search_box(int rank) {
    std::vector<DominantWeight> box;
    for (int i = 0; i < rank; ++i) {
        DominantWeight w;
        w.coeffs.assign(static_cast<std::size_t>(rank), 0);
        w.coeffs[static_cast<std::size_t>(i)] = 1;
        box.push_back(w);
        DominantWeight w2 = w;
        w2.coeffs[static_cast<std::size_t>(i)] = 2;
        box.push_back(w2);
        for (int j = i + 1; j < rank; ++j) {
            DominantWeight wij = w;
            wij.coeffs[static_cast<std::size_t>(j)] = 1;
            box.push_back(wij);
        }
    }
    return box;
}

}  // namespace

MinComplexDim min_nontrivial_complex_dim(TypeLabel type, int rank) {
    if (rank < 2) throw DomainError("min_nontrivial_complex_dim needs rank >= 2");
    static std::map<std::pair<TypeLabel, int>, MinComplexDim> memo;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(type, rank);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    MinComplexDim out;
    for (const DominantWeight& w : search_box(rank)) {
        BigInt d = weyl_dim(type, rank, w);
        if (out.minimizers.empty() || d < out.dimension) {
            out.dimension = d;
            out.minimizers = {w};
        } else if (d == out.dimension) {
            out.minimizers.push_back(w);
        }
    }
    memo.emplace(key, out);
    return out;
}

bool RealRepClassifier::s0_fixes(const DominantWeight& lambda) const {
    for (int i = 0; i < rank; ++i)
        if (lambda.coeffs[static_cast<std::size_t>(i)] !=
            lambda.coeffs[static_cast<std::size_t>(s0[static_cast<std::size_t>(i)] - 1)])
            return false;
    return true;
}

int RealRepClassifier::eps(const DominantWeight& lambda) const {
    if (!eps_indices) throw DomainError("Cartan index not available for this real form");
    if (!s0_fixes(lambda)) throw DomainError("Cartan index defined on s0-fixed weights only");
    Int sum = 0;
    for (int i : *eps_indices) sum += lambda.coeffs[static_cast<std::size_t>(i - 1)];
    return sum % 2 == 0 ? 1 : -1;
}

RealRepClassifier classifier_for(const GroupSpec& real_form) {
    RealRepClassifier cl;
    auto odds_upto = [](int limit) {
        std::vector<int> s;
        for (int i = 1; i <= limit; i += 2) s.push_back(i);
        return s;
    };
    switch (real_form.family) {
        case Family::SU: {
            const Int m = real_form.params[0], n = real_form.params[1];
            if (!(m >= n && n >= 2) || (m == 2 && n == 2))
                throw DomainError("classifier covers su(m,n) with m>=n>=2, (m,n) != (2,2)");
            cl.complex_type = TypeLabel::A;
            cl.rank = static_cast<int>(m + n - 1);
            cl.s0.resize(static_cast<std::size_t>(cl.rank));
            for (int i = 1; i <= cl.rank; ++i)
                cl.s0[static_cast<std::size_t>(i - 1)] = cl.rank + 1 - i;
            // The Cartan index for type A is not part of the classification data
            // here; minima over ker(eps) are bounded through Lambda^{s0} instead.
            break;
        }
        case Family::Sp_pq: {
            const Int m = real_form.params[0], n = real_form.params[1];
            if (!(m >= n && n >= 2)) throw DomainError("classifier covers sp(m,n) with m>=n>=2");
            cl.complex_type = TypeLabel::C;
            cl.rank = static_cast<int>(m + n);
            cl.s0.resize(static_cast<std::size_t>(cl.rank));
            for (int i = 1; i <= cl.rank; ++i) cl.s0[static_cast<std::size_t>(i - 1)] = i;
            cl.eps_indices = odds_upto(cl.rank);
            break;
        }
        case Family::SOstar: {
            const Int n = real_form.params[0];  // the group is SO*(2n)
            if (n < 5) throw DomainError("classifier covers so*(2n) with n >= 5");
            cl.complex_type = TypeLabel::D;
            cl.rank = static_cast<int>(n);
            cl.s0.resize(static_cast<std::size_t>(cl.rank));
            for (int i = 1; i <= cl.rank; ++i) cl.s0[static_cast<std::size_t>(i - 1)] = i;
            if (n % 2 == 1) std::swap(cl.s0[static_cast<std::size_t>(cl.rank - 2)],
                                      cl.s0[static_cast<std::size_t>(cl.rank - 1)]);
            cl.eps_indices = odds_upto(2 * (cl.rank / 2) - 1);
            break;
        }
        default:
            throw DomainError("no s0 / Cartan-index classifier for " +
                              catalogue::family_name(real_form.family));
    }
    return cl;
}

namespace {

DominantWeight apply_s0(const RealRepClassifier& cl, const DominantWeight& w) {
    DominantWeight out;
    out.coeffs.assign(static_cast<std::size_t>(cl.rank), 0);
    for (int i = 0; i < cl.rank; ++i)
        out.coeffs[static_cast<std::size_t>(cl.s0[static_cast<std::size_t>(i)] - 1)] =
            w.coeffs[static_cast<std::size_t>(i)];
    return out;
}

bool classifier_applies(const GroupSpec& s) {
    switch (s.family) {
        case Family::SU: return !(s.params[0] == 2 && s.params[1] == 2);
        case Family::Sp_pq: return true;
        case Family::SOstar: return s.params[0] >= 5;
        default: return false;
    }
}

}  // namespace

MinRealRep min_real_rep(const GroupSpec& real_form, const catalogue::Store& store) {
    static std::map<GroupSpec, MinRealRep> memo;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    if (auto it = memo.find(real_form); it != memo.end()) return it->second;

    MinRealRep out;
    if (classifier_applies(real_form)) {
        const RealRepClassifier cl = classifier_for(real_form);
        // Doubled-dimension candidates: every nonzero dominant weight competes.
        BigInt best;
        std::vector<DominantWeight> argmin;
        for (const DominantWeight& w : search_box(cl.rank)) {
            BigInt d = weyl_dim(cl.complex_type, cl.rank, w);
            if (argmin.empty() || d < best) {
                best = d;
                argmin = {w};
            } else if (d == best) {
                argmin.push_back(w);
            }
        }
        // Each minimizer must land outside ker(eps), so its real form doubles.
        for (const DominantWeight& w : argmin) {
            bool outside_kernel =
                cl.eps_indices ? !(cl.s0_fixes(w) && cl.eps(w) == 1) : !cl.s0_fixes(w);
            if (!outside_kernel)
                throw DomainError(catalogue::to_string(real_form) +
                                  ": complex minimizer unexpectedly self-conjugate");
        }
        // Same-dimension candidates from ker(eps) (or its s0-fixed superset when
        // the Cartan index is not available) must lie strictly above.
        const BigInt doubled = 2 * best;
        for (const DominantWeight& w : search_box(cl.rank)) {
            const bool in_kernel_bound =
                cl.eps_indices ? (cl.s0_fixes(w) && cl.eps(w) == 1) : cl.s0_fixes(w);
            if (!in_kernel_bound) continue;
            if (weyl_dim(cl.complex_type, cl.rank, w) <= doubled)
                throw DomainError(catalogue::to_string(real_form) +
                                  ": self-conjugate weight violates the doubling bound");
        }
        out.value = static_cast<Int>(doubled);
        out.from_classifier = true;
        out.minimizers = argmin;
        // Unique up to s0: the minimizer set is one s0-orbit.
        bool unique = true;
        for (const DominantWeight& w : argmin) {
            DominantWeight img = apply_s0(cl, w);
            bool in_set = false;
            for (const DominantWeight& v : argmin)
                if (v.coeffs == img.coeffs) in_set = true;
            if (!in_set) unique = false;
        }
        if (unique) {
            // All minimizers must be s0-equivalent to the first.
            const DominantWeight& w0 = argmin.front();
            DominantWeight w0s = apply_s0(cl, w0);
            for (const DominantWeight& w : argmin)
                if (w.coeffs != w0.coeffs && w.coeffs != w0s.coeffs) unique = false;
        }
        out.unique_up_to_s0 = unique;
    } else {
        if (!catalogue::has_tabulated(real_form, catalogue::Invariant::n_G, store))
            throw DomainError(catalogue::to_string(real_form) +
                              ": no classifier and no catalogue n(G) entry");
        out.value = catalogue::tabulated_invariant(real_form, catalogue::Invariant::n_G, store);
        out.from_classifier = false;
    }
    memo.emplace(real_form, out);
    return out;
}

// ---------------------------------------------------------------------------
// Subalgebra identification.

namespace {

struct SubSignature {
    int rank = 0;
    // (sqnorm, root count, multiplicity) per length class, norm-ascending.
    std::vector<std::tuple<Int, Int, Int>> classes;
    bool nonreduced = false;

    std::string to_string() const {
        std::ostringstream os;
        os << "rank " << rank << (nonreduced ? " nonreduced" : "") << " [";
        for (std::size_t i = 0; i < classes.size(); ++i) {
            if (i) os << ", ";
            os << "count " << std::get<1>(classes[i]) << " x mult " << std::get<2>(classes[i]);
        }
        os << "]";
        return os.str();
    }
};

SubSignature sub_signature(const catalogue::GroupDescriptor& d, std::uint64_t mask, int size) {
    const RootSystem& rs = *d.restricted;
    SubSignature sig;
    sig.rank = size;
    std::map<Int, Int> counts;
    std::vector<const Vec*> members;
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
        if ((rs.supports[i] & ~mask) != 0) continue;
        counts[rs.sqnorm(rs.roots[i])] += 1;
        members.push_back(&rs.roots[i]);
    }
    for (const Vec* v : members) {
        Vec twice = 2 * (*v);
        if (rs.contains(twice) && (rs.supports[static_cast<std::size_t>(rs.index(twice))] & ~mask) == 0) {
            sig.nonreduced = true;
            break;
        }
    }
    for (const auto& [norm, count] : counts)
        sig.classes.emplace_back(norm, count, d.mult_by_sqnorm.at(norm));
    return sig;
}

SubalgebraId from_spec(const GroupSpec& spec, const std::string& desc,
                       const catalogue::Store& store) {
    SubalgebraId id;
    id.description = desc;
    id.n = min_real_rep(spec, store).value;
    return id;
}

SubalgebraId complex_id(TypeLabel t, int rank, const std::string& desc) {
    SubalgebraId id;
    id.description = desc;
    BigInt min_c = min_nontrivial_complex_dim(t, rank).dimension;
    id.n = 2 * static_cast<Int>(min_c);
    return id;
}

}  // namespace

SubalgebraId n_of_subalgebra(const catalogue::GroupDescriptor& d, const std::vector<int>& delta,
                             const catalogue::Store& store) {
    const RootSystem& rs = *d.restricted;
    const int r = static_cast<int>(delta.size());
    if (r < 2) throw DomainError("n_of_subalgebra needs |Delta| >= 2");
    std::uint64_t mask = 0;
    for (int i : delta) {
        if (i < 1 || i > rs.rank) throw DomainError("simple-root index out of range");
        mask |= std::uint64_t{1} << (i - 1);
    }
    // Connectivity of Delta inside the Dynkin graph.
    {
        std::vector<int> nodes(delta.begin(), delta.end());
        std::vector<char> seen(nodes.size(), 0);
        std::vector<std::size_t> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t u = 0; u < nodes.size(); ++u)
                if (!seen[u] && rootkit::simple_adjacent(rs, nodes[v] - 1, nodes[u] - 1)) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
        for (char c : seen)
            if (!c) throw DomainError("n_of_subalgebra: Delta must be connected");
    }

    const SubSignature sig = sub_signature(d, mask, r);
    auto bad = [&]() -> SubalgebraId { throw IdentificationError(sig.to_string()); };
    auto all_mult_2 = [&]() {
        for (const auto& c : sig.classes)
            if (std::get<2>(c) != 2) return false;
        return true;
    };
    auto name2 = [](const char* fam, Int a, Int b) {
        std::ostringstream os;
        os << fam << "(" << a << "," << b << ")";
        return os.str();
    };

    if (sig.nonreduced) {
        if (sig.classes.size() != 3) return bad();
        const auto [q1, c1, m1] = sig.classes[0];  // e_i
        const auto [q2, c2, m2] = sig.classes[1];  // e_i +- e_j
        const auto [q4, c4, m4] = sig.classes[2];  // 2 e_i
        if (q2 != 2 * q1 || q4 != 4 * q1) return bad();
        if (c1 != 2 * r || c2 != 2 * r * (r - 1) || c4 != 2 * r) return bad();
        if (m2 == 2 && m4 == 1 && m1 % 2 == 0)
            return from_spec({Family::SU, {r + m1 / 2, r}}, name2("su", r + m1 / 2, r), store);
        if (m2 == 4 && m4 == 3 && m1 % 4 == 0)
            return from_spec({Family::Sp_pq, {r + m1 / 4, r}}, name2("sp", r + m1 / 4, r), store);
        if (m2 == 4 && m4 == 1 && m1 == 4)
            return from_spec({Family::SOstar, {2 * Int{r} + 1}},
                             "so*(" + std::to_string(4 * r + 2) + ")", store);
        return bad();
    }

    if (sig.classes.size() == 1) {
        const auto [q, count, m] = sig.classes[0];
        (void)q;
        if (count == Int{r} * (r + 1)) {  // type A_r
            if (m == 2) return complex_id(TypeLabel::A, r, "sl(" + std::to_string(r + 1) + ",C)");
            if (m == 4)
                return from_spec({Family::SL_H, {r + 1}}, "sl(" + std::to_string(r + 1) + ",H)",
                                 store);
            if (m == 1) {
                // Split sl(r+1,R); its minimal real representation is the standard one.
                SubalgebraId id;
                id.description = "sl(" + std::to_string(r + 1) + ",R)";
                id.n = r + 1;
                return id;
            }
            return bad();
        }
        if (r >= 4 && count == 2 * Int{r} * (r - 1)) {  // type D_r
            if (m == 2) return complex_id(TypeLabel::D, r, "so(" + std::to_string(2 * r) + ",C)");
            if (m == 1) return from_spec({Family::SOplus, {r, r}}, name2("so", r, r), store);
            return bad();
        }
        if (m == 2) {
            if (r == 6 && count == 72) return complex_id(TypeLabel::E6, 6, "e6(C)");
            if (r == 7 && count == 126) return complex_id(TypeLabel::E7, 7, "e7(C)");
            if (r == 8 && count == 240) return complex_id(TypeLabel::E8, 8, "e8(C)");
        }
        return bad();
    }

    if (sig.classes.size() == 2) {
        const auto [q_lo, c_lo, m_lo] = sig.classes[0];
        const auto [q_hi, c_hi, m_hi] = sig.classes[1];
        if (q_hi == 3 * q_lo) {
            if (r == 2 && c_lo == 6 && c_hi == 6 && all_mult_2())
                return complex_id(TypeLabel::G2, 2, "g2(C)");
            return bad();
        }
        if (q_hi != 2 * q_lo) return bad();
        if (r == 4 && c_lo == 24 && c_hi == 24) {
            if (all_mult_2()) return complex_id(TypeLabel::F4, 4, "f4(C)");
            return bad();
        }
        // B reading: short class = e_i (2r of them), long = e_i +- e_j.
        if (c_lo == 2 * Int{r} && c_hi == 2 * Int{r} * (r - 1)) {
            if (all_mult_2())
                return complex_id(TypeLabel::B, r, "so(" + std::to_string(2 * r + 1) + ",C)");
            if (m_hi == 1)
                return from_spec({Family::SOplus, {r + m_lo, r}}, name2("so", r + m_lo, r), store);
        }
        // C reading: short class = e_i +- e_j, long = 2 e_i.
        if (c_lo == 2 * Int{r} * (r - 1) && c_hi == 2 * Int{r}) {
            if (all_mult_2())
                return complex_id(TypeLabel::C, r, "sp(" + std::to_string(2 * r) + ",C)");
            if (m_lo == 2 && m_hi == 1)
                return from_spec({Family::SU, {r, r}}, name2("su", r, r), store);
            if (m_lo == 4 && m_hi == 3)
                return from_spec({Family::Sp_pq, {r, r}}, name2("sp", r, r), store);
            if (m_lo == 4 && m_hi == 1)
                return from_spec({Family::SOstar, {2 * Int{r}}},
                                 "so*(" + std::to_string(4 * r) + ")", store);
        }
        return bad();
    }
    return bad();
}

}  // namespace zimt::repdim
