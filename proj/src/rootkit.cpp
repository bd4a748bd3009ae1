#include "zimt/rootkit.hpp"

#include "zimt/exactlin.hpp"

#include <algorithm>
#include <mutex>

namespace zimt::rootkit {

std::string to_string(TypeLabel t) {
    switch (t) {
        case TypeLabel::A: return "A";
        case TypeLabel::B: return "B";
        case TypeLabel::C: return "C";
        case TypeLabel::D: return "D";
        case TypeLabel::E6: return "E6";
        case TypeLabel::E7: return "E7";
        case TypeLabel::E8: return "E8";
        case TypeLabel::F4: return "F4";
        case TypeLabel::G2: return "G2";
        case TypeLabel::BC: return "BC";
    }
    return "?";
}

int RootSystem::index(const Vec& v) const {
    auto it = index_of.find(v);
    if (it == index_of.end()) throw DomainError("not a root of this system");
    return it->second;
}

Vec RootSystem::reflect(const Vec& alpha, const Vec& beta) const {
    const Int num = 2 * dot(beta, alpha);
    const Int den = sqnorm(alpha);
    if (num % den != 0) throw DomainError("reflection coefficient not integral");
    return beta - (num / den) * alpha;
}

namespace {

Vec unit(int dim, int i, Int scale = 1) {
    Vec v = Vec::Zero(dim);
    v[i] = scale;
    return v;
}

struct RawSystem {
    int ambient = 0;
    std::vector<Vec> roots;
    std::vector<Vec> simple;
};

RawSystem generate(TypeLabel type, int rank) {
    RawSystem out;
    auto require = [&](bool ok, const std::string& what) {
        if (!ok)
            throw ConstructionError("build_root_system(" + to_string(type) + ", " +
                                    std::to_string(rank) + "): " + what);
    };
    switch (type) {
        case TypeLabel::A: {
            require(rank >= 1, "type A needs rank >= 1");
            out.ambient = rank + 1;
            for (int i = 0; i <= rank; ++i)
                for (int j = 0; j <= rank; ++j)
                    if (i != j) out.roots.push_back(unit(out.ambient, i) - unit(out.ambient, j));
            for (int i = 0; i < rank; ++i)
                out.simple.push_back(unit(out.ambient, i) - unit(out.ambient, i + 1));
            break;
        }
        case TypeLabel::B:
        case TypeLabel::C:
        case TypeLabel::BC: {
            require(type == TypeLabel::BC ? rank >= 1 : rank >= 2,
                    type == TypeLabel::BC ? "type BC needs rank >= 1" : "types B/C need rank >= 2");
            out.ambient = rank;
            for (int i = 0; i < rank; ++i)
                for (int j = i + 1; j < rank; ++j)
                    for (Int si : {1, -1})
                        for (Int sj : {1, -1})
                            out.roots.push_back(si * unit(rank, i) + sj * unit(rank, j));
            if (type != TypeLabel::C)
                for (int i = 0; i < rank; ++i)
                    for (Int s : {1, -1}) out.roots.push_back(unit(rank, i, s));
            if (type != TypeLabel::B)
                for (int i = 0; i < rank; ++i)
                    for (Int s : {1, -1}) out.roots.push_back(unit(rank, i, 2 * s));
            for (int i = 0; i + 1 < rank; ++i)
                out.simple.push_back(unit(rank, i) - unit(rank, i + 1));
            out.simple.push_back(type == TypeLabel::C ? unit(rank, rank - 1, 2)
                                                      : unit(rank, rank - 1));
            break;
        }
        case TypeLabel::D: {
            require(rank >= 3, "type D needs rank >= 3");
            out.ambient = rank;
            for (int i = 0; i < rank; ++i)
                for (int j = i + 1; j < rank; ++j)
                    for (Int si : {1, -1})
                        for (Int sj : {1, -1})
                            out.roots.push_back(si * unit(rank, i) + sj * unit(rank, j));
            for (int i = 0; i + 1 < rank; ++i)
                out.simple.push_back(unit(rank, i) - unit(rank, i + 1));
            out.simple.push_back(unit(rank, rank - 2) + unit(rank, rank - 1));
            break;
        }
        case TypeLabel::G2: {
            require(rank == 2, "type G2 has rank 2");
            out.ambient = 3;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    if (i != j) out.roots.push_back(unit(3, i) - unit(3, j));
            for (int i = 0; i < 3; ++i) {
                Vec v = Vec::Constant(3, -1);
                v[i] = 2;
                out.roots.push_back(v);
                out.roots.push_back(Vec(-v));
            }
            out.simple.push_back(unit(3, 0) - unit(3, 1));
            {
                Vec a2(3);
                a2 << -2, 1, 1;
                out.simple.push_back(a2);
            }
            break;
        }
        case TypeLabel::F4: {
            // Standard model scaled by 2: long +-2e_i+-2e_j, short +-2e_i and
            // +-e1+-e2+-e3+-e4.
            require(rank == 4, "type F4 has rank 4");
            out.ambient = 4;
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j)
                    for (Int si : {1, -1})
                        for (Int sj : {1, -1})
                            out.roots.push_back(2 * si * unit(4, i) + 2 * sj * unit(4, j));
            for (int i = 0; i < 4; ++i)
                for (Int s : {1, -1}) out.roots.push_back(unit(4, i, 2 * s));
            for (Int s0 : {1, -1})
                for (Int s1 : {1, -1})
                    for (Int s2 : {1, -1})
                        for (Int s3 : {1, -1}) {
                            Vec v(4);
                            v << s0, s1, s2, s3;
                            out.roots.push_back(v);
                        }
            {
                Vec a1(4), a2(4), a3(4), a4(4);
                a1 << 0, 2, -2, 0;
                a2 << 0, 0, 2, -2;
                a3 << 0, 0, 0, 2;
                a4 << 1, -1, -1, -1;
                out.simple = {a1, a2, a3, a4};
            }
            break;
        }
        case TypeLabel::E8: {
            require(rank == 8, "type E8 has rank 8");
            out.ambient = 8;
            for (int i = 0; i < 8; ++i)
                for (int j = i + 1; j < 8; ++j)
                    for (Int si : {1, -1})
                        for (Int sj : {1, -1})
                            out.roots.push_back(2 * si * unit(8, i) + 2 * sj * unit(8, j));
            for (int bits = 0; bits < 256; ++bits) {
                if (__builtin_popcount(bits) % 2 != 0) continue;  // even number of minus signs
                Vec v(8);
                for (int i = 0; i < 8; ++i) v[i] = (bits >> i) & 1 ? -1 : 1;
                out.roots.push_back(v);
            }
            {
                std::vector<Vec> s;
                Vec a1(8);
                a1 << 1, -1, -1, -1, -1, -1, -1, 1;
                s.push_back(a1);
                Vec a2 = 2 * unit(8, 0) + 2 * unit(8, 1);
                s.push_back(a2);
                s.push_back(2 * unit(8, 1) - 2 * unit(8, 0));
                for (int i = 2; i <= 6; ++i) s.push_back(2 * unit(8, i) - 2 * unit(8, i - 1));
                out.simple = s;
            }
            break;
        }
        case TypeLabel::E6:
        case TypeLabel::E7:
            // Handled by filtering E8; not reached here.
            require(false, "internal");
            break;
    }
    return out;
}

std::shared_ptr<RootSystem> finalize(TypeLabel type, int rank, RawSystem raw) {
    auto rs = std::make_shared<RootSystem>();
    rs->type = type;
    rs->rank = rank;
    rs->ambient_dim = raw.ambient;
    rs->gram = Mat::Identity(raw.ambient, raw.ambient);
    rs->simple = std::move(raw.simple);
    if (static_cast<int>(rs->simple.size()) != rank)
        throw ConstructionError("simple root count mismatch");
    if (rank > 62) throw ConstructionError("rank exceeds supported limit (62)");

    std::sort(raw.roots.begin(), raw.roots.end(), LexLess{});
    raw.roots.erase(std::unique(raw.roots.begin(), raw.roots.end()), raw.roots.end());
    rs->roots = std::move(raw.roots);

    // Integer expansion operator: coords(beta) = adj * S^T * beta / det where
    // S has the simple roots as columns and det = det(S^T S).
    Mat s_cols(rs->ambient_dim, rank);
    for (int j = 0; j < rank; ++j) s_cols.col(j) = rs->simple[static_cast<std::size_t>(j)];
    MatQ g = exactlin::to_rational(Mat(s_cols.transpose() * s_cols));
    MatQ g_inv = exactlin::inverse(g);
    // det via pivots of a fresh echelon run.
    MatQ g_copy = g;
    exactlin::echelonize(g_copy);
    Rational det(1);
    for (Eigen::Index i = 0; i < g_copy.rows(); ++i) det *= g_copy(i, i);
    MatQ s_t = exactlin::to_rational(Mat(s_cols.transpose()));
    MatQ t_q(rank, rs->ambient_dim);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rs->ambient_dim; ++j) {
            Rational acc(0);
            for (int k = 0; k < rank; ++k) acc += g_inv(i, k) * s_t(k, j);
            t_q(i, j) = acc;
        }
    Mat t_int(rank, rs->ambient_dim);
    Int det_i = 0;
    {
        if (boost::multiprecision::denominator(det) != 1)
            throw ConstructionError("gram determinant not integral");
        det_i = static_cast<Int>(boost::multiprecision::numerator(det));
        for (Eigen::Index i = 0; i < t_q.rows(); ++i)
            for (Eigen::Index j = 0; j < t_q.cols(); ++j) {
                Rational scaled = t_q(i, j) * det;
                if (boost::multiprecision::denominator(scaled) != 1)
                    throw ConstructionError("expansion operator not integral after scaling");
                t_int(i, j) = static_cast<Int>(boost::multiprecision::numerator(scaled));
            }
    }

    const auto n_roots = rs->roots.size();
    rs->coords.resize(n_roots);
    rs->heights.resize(n_roots);
    rs->supports.resize(n_roots);
    for (std::size_t i = 0; i < n_roots; ++i) {
        Vec scaled = t_int * rs->roots[i];
        Vec c(rank);
        for (int j = 0; j < rank; ++j) {
            if (scaled[j] % det_i != 0)
                throw ConstructionError("root is not an integer combination of simple roots");
            c[j] = scaled[j] / det_i;
        }
        if (s_cols * c != rs->roots[i])
            throw ConstructionError("expansion check failed");
        bool nonneg = true, nonpos = true;
        Int ht = 0;
        std::uint64_t sup = 0;
        for (int j = 0; j < rank; ++j) {
            if (c[j] > 0) nonpos = false;
            if (c[j] < 0) nonneg = false;
            if (c[j] != 0) sup |= (std::uint64_t{1} << j);
            ht += c[j];
        }
        if (!nonneg && !nonpos)
            throw ConstructionError("root has mixed-sign simple coefficients");
        rs->coords[i] = std::move(c);
        rs->heights[i] = ht;
        rs->supports[i] = sup;
        rs->index_of.emplace(rs->roots[i], static_cast<int>(i));
    }

    for (std::size_t i = 0; i < n_roots; ++i)
        if (rs->heights[i] > 0) rs->positive.push_back(static_cast<int>(i));
    std::sort(rs->positive.begin(), rs->positive.end(), [&](int a, int b) {
        if (rs->heights[a] != rs->heights[b]) return rs->heights[a] > rs->heights[b];
        return lex_less(rs->roots[b], rs->roots[a]);
    });

    rs->gram_is_identity = rs->gram.isIdentity();
    for (std::size_t i = 0; i < n_roots; ++i) {
        const Vec& r = rs->roots[i];
        bool halvable = true;
        for (Eigen::Index j = 0; j < r.size(); ++j)
            if (r[j] % 2 != 0) {
                halvable = false;
                break;
            }
        if (halvable && rs->contains(Vec(r / 2))) continue;  // divisible
        rs->class_reps.push_back(static_cast<int>(i));
        auto it = rs->index_of.find(Vec(2 * r));
        rs->class_doubles.push_back(it == rs->index_of.end() ? -1 : it->second);
    }
    return rs;
}

std::shared_ptr<RootSystem> restrict_to_leading(const RootSystem& big, TypeLabel type, int rank) {
    RawSystem raw;
    raw.ambient = big.ambient_dim;
    const std::uint64_t mask = (std::uint64_t{1} << rank) - 1;
    for (std::size_t i = 0; i < big.roots.size(); ++i)
        if ((big.supports[i] & ~mask) == 0) raw.roots.push_back(big.roots[i]);
    raw.simple.assign(big.simple.begin(), big.simple.begin() + rank);
    return finalize(type, rank, std::move(raw));
}

}  // namespace

RootSystemPtr build_root_system(TypeLabel type, int rank) {
    static std::map<std::pair<TypeLabel, int>, RootSystemPtr> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(type, rank);
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    RootSystemPtr built;
    if (type == TypeLabel::E6 || type == TypeLabel::E7) {
        const int want = type == TypeLabel::E6 ? 6 : 7;
        if (rank != want)
            throw ConstructionError("build_root_system(" + to_string(type) + ", " +
                                    std::to_string(rank) + "): fixed rank " + std::to_string(want));
        RootSystemPtr e8;
        auto e8key = std::make_pair(TypeLabel::E8, 8);
        if (auto it = cache.find(e8key); it != cache.end()) {
            e8 = it->second;
        } else {
            e8 = finalize(TypeLabel::E8, 8, generate(TypeLabel::E8, 8));
            cache.emplace(e8key, e8);
        }
        built = restrict_to_leading(*e8, type, rank);
    } else {
        built = finalize(type, rank, generate(type, rank));
    }
    cache.emplace(key, built);
    return built;
}

Int height(const RootSystem& rs, const Vec& beta) {
    return rs.heights[static_cast<std::size_t>(rs.index(beta))];
}

std::vector<Vec> positive_roots_by_height(const RootSystem& rs) {
    std::vector<Vec> out;
    out.reserve(rs.positive.size());
    for (int i : rs.positive) out.push_back(rs.roots[static_cast<std::size_t>(i)]);
    return out;
}

bool filtration_is_ideal(const RootSystem& rs, int k) {
    const int m = static_cast<int>(rs.positive.size());
    if (k < 0 || k > m) throw DomainError("filtration index out of range");
    // Position of every positive root in the height order.
    std::vector<int> pos_rank(rs.roots.size(), -1);
    for (int p = 0; p < m; ++p) pos_rank[static_cast<std::size_t>(rs.positive[p])] = p;
    for (int i = 0; i < k; ++i) {
        const Vec& bi = rs.roots[static_cast<std::size_t>(rs.positive[i])];
        for (int j = 0; j < m; ++j) {
            Vec sum = bi + rs.roots[static_cast<std::size_t>(rs.positive[j])];
            auto it = rs.index_of.find(sum);
            if (it == rs.index_of.end()) continue;
            if (pos_rank[static_cast<std::size_t>(it->second)] >= k) return false;
        }
    }
    return true;
}

std::vector<CoarseClass> coarse_classes(const RootSystem& rs) {
    std::vector<CoarseClass> out;
    out.reserve(rs.class_reps.size());
    for (std::size_t i = 0; i < rs.class_reps.size(); ++i) {
        CoarseClass c;
        c.representative = rs.roots[static_cast<std::size_t>(rs.class_reps[i])];
        c.members.push_back(c.representative);
        if (rs.class_doubles[i] >= 0)
            c.members.push_back(rs.roots[static_cast<std::size_t>(rs.class_doubles[i])]);
        out.push_back(std::move(c));
    }
    // Roots are lex-sorted, so representatives come out sorted.
    return out;
}

RootSubspace make_subspace(std::vector<Vec> basis) {
    RootSubspace w;
    w.dimension = exactlin::rank_of_rows(basis);
    if (w.dimension != static_cast<int>(basis.size()))
        throw ConstructionError("subspace basis is linearly dependent");
    w.basis = std::move(basis);
    return w;
}

bool simple_adjacent(const RootSystem& rs, int i, int j) {
    return rs.dot(rs.simple[static_cast<std::size_t>(i)], rs.simple[static_cast<std::size_t>(j)]) < 0;
}

namespace {
bool is_irreducible(const RootSystem& rs) {
    if (rs.rank <= 1) return true;
    std::vector<int> seen(static_cast<std::size_t>(rs.rank), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < rs.rank; ++u)
            if (!seen[static_cast<std::size_t>(u)] && simple_adjacent(rs, v, u)) {
                seen[static_cast<std::size_t>(u)] = 1;
                stack.push_back(u);
            }
    }
    for (int v : seen)
        if (!v) return false;
    return true;
}
}  // namespace

int span_complement_rank(const RootSystem& rs, const RootSubspace& w) {
    if (!is_irreducible(rs)) throw DomainError("span_complement_rank: system must be irreducible");
    if (w.dimension < 1 || w.basis.empty())
        throw DomainError("span_complement_rank: subspace must be nontrivial");
    if (exactlin::rank_of_rows(w.basis) != static_cast<int>(w.basis.size()))
        throw DomainError("span_complement_rank: basis not independent");
    std::vector<Vec> outside;
    for (const Vec& r : rs.roots) {
        bool in_perp = true;
        for (const Vec& b : w.basis)
            if (rs.dot(r, b) != 0) {
                in_perp = false;
                break;
            }
        if (in_perp) continue;
        if (exactlin::in_row_span(w.basis, r)) continue;
        outside.push_back(r);
    }
    return exactlin::rank_of_rows(outside);
}

}  // namespace zimt::rootkit
