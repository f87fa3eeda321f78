#ifndef DEDUCTIO_TENSOR_HPP
#define DEDUCTIO_TENSOR_HPP

#include "module.hpp"

namespace deductio {

/// Tensor product of a right Q-module and a left Q-module over finite
/// carriers. Elements are bi-ideals: subsets D of M1 x M2 that are
/// down-closed in each coordinate, contain the bottom rows and columns,
/// are closed under binary joins in each coordinate, and satisfy the shift
/// condition (x.a, y) in D iff (x, a.y) in D. The pure tensor x (x) y is the
/// least bi-ideal containing (x, y); the carrier is the join-closure of the
/// pure tensors, ordered by inclusion.
struct TensorModule {
    FiniteModule m1; // right Q-module
    FiniteModule m2; // left Q-module
    FiniteSupLattice lat;
    std::vector<std::vector<char>> elements; // bi-ideal masks over m1.n * m2.n
    std::vector<int> pure;                   // (x * m2.n + y) -> element index

    int pure_of(int x, int y) const {
        return pure[static_cast<size_t>(x) * m2.lat.n + y];
    }
    int index_of_mask(const std::vector<char>& mask) const {
        for (size_t i = 0; i < elements.size(); ++i)
            if (elements[i] == mask) return static_cast<int>(i);
        throw error("mask is not a tensor element");
    }
};

namespace detail {

struct TensorOps {
    const FiniteModule& m1;
    const FiniteModule& m2;
    int n1, n2;

    TensorOps(const FiniteModule& a, const FiniteModule& b)
        : m1(a), m2(b), n1(a.lat.n), n2(b.lat.n) {}

    size_t at(int x, int y) const { return static_cast<size_t>(x) * n2 + y; }

    /// Least bi-ideal containing the given pairs.
    std::vector<char> saturate(std::vector<char> D) const {
        D.resize(static_cast<size_t>(n1) * n2, 0);
        int bot1 = m1.lat.bottom(), bot2 = m2.lat.bottom();
        for (int y = 0; y < n2; ++y) D[at(bot1, y)] = 1;
        for (int x = 0; x < n1; ++x) D[at(x, bot2)] = 1;
        bool grew = true;
        while (grew) {
            grew = false;
            auto add = [&](int x, int y) {
                if (!D[at(x, y)]) {
                    D[at(x, y)] = 1;
                    grew = true;
                }
            };
            for (int x = 0; x < n1; ++x)
                for (int y = 0; y < n2; ++y) {
                    if (!D[at(x, y)]) continue;
                    for (int x2 = 0; x2 < n1; ++x2)
                        if (m1.lat.leq(x2, x) && !D[at(x2, y)]) add(x2, y);
                    for (int y2 = 0; y2 < n2; ++y2)
                        if (m2.lat.leq(y2, y) && !D[at(x, y2)]) add(x, y2);
                    for (int a = 0; a < m1.q.size(); ++a) {
                        // (x, y) = (x2.a, y): add (x2, a.y)
                        for (int x2 = 0; x2 < n1; ++x2)
                            if (m1.act(a, x2) == x) add(x2, m2.act(a, y));
                        // (x, y) = (x, a.y2): add (x.a, y2)
                        for (int y2 = 0; y2 < n2; ++y2)
                            if (m2.act(a, y2) == y) add(m1.act(a, x), y2);
                    }
                }
            // binary joins per column and per row
            for (int y = 0; y < n2; ++y)
                for (int x = 0; x < n1; ++x)
                    if (D[at(x, y)])
                        for (int x2 = x + 1; x2 < n1; ++x2)
                            if (D[at(x2, y)] && !D[at(m1.lat.join2(x, x2), y)])
                                add(m1.lat.join2(x, x2), y);
            for (int x = 0; x < n1; ++x)
                for (int y = 0; y < n2; ++y)
                    if (D[at(x, y)])
                        for (int y2 = y + 1; y2 < n2; ++y2)
                            if (D[at(x, y2)] && !D[at(x, m2.lat.join2(y, y2))])
                                add(x, m2.lat.join2(y, y2));
        }
        return D;
    }
};

} // namespace detail

inline TensorModule tensor(const FiniteModule& m1, const FiniteModule& m2) {
    if (m1.side != Side::right || m2.side != Side::left)
        throw precondition_error("tensor expects a right module and a left module");
    if (!(m1.q == m2.q)) throw precondition_error("tensor factors over different quantales");
    detail::TensorOps ops(m1, m2);
    size_t pairs = static_cast<size_t>(ops.n1) * ops.n2;

    std::vector<std::vector<char>> elems;
    auto add_elem = [&](const std::vector<char>& mask) -> int {
        for (size_t i = 0; i < elems.size(); ++i)
            if (elems[i] == mask) return static_cast<int>(i);
        elems.push_back(mask);
        if (static_cast<int>(elems.size()) > caps().tensor)
            throw cap_exceeded("tensor carrier");
        return static_cast<int>(elems.size()) - 1;
    };

    add_elem(ops.saturate(std::vector<char>(pairs, 0))); // bottom
    std::vector<int> pure(pairs);
    for (int x = 0; x < ops.n1; ++x)
        for (int y = 0; y < ops.n2; ++y) {
            std::vector<char> seed(pairs, 0);
            seed[ops.at(x, y)] = 1;
            pure[ops.at(x, y)] = add_elem(ops.saturate(std::move(seed)));
        }
    // close under binary joins (= saturation of unions)
    for (size_t i = 0; i < elems.size(); ++i)
        for (size_t j = 0; j < i; ++j) {
            std::vector<char> u(pairs, 0);
            for (size_t p = 0; p < pairs; ++p) u[p] = elems[i][p] | elems[j][p];
            add_elem(ops.saturate(std::move(u)));
        }

    // order by inclusion; canonicalize the element order by (popcount, mask)
    std::vector<int> order(elems.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int ca = static_cast<int>(std::count(elems[static_cast<size_t>(a)].begin(),
                                             elems[static_cast<size_t>(a)].end(), 1));
        int cb = static_cast<int>(std::count(elems[static_cast<size_t>(b)].begin(),
                                             elems[static_cast<size_t>(b)].end(), 1));
        if (ca != cb) return ca < cb;
        return elems[static_cast<size_t>(a)] < elems[static_cast<size_t>(b)];
    });
    std::vector<int> rank(elems.size());
    for (size_t i = 0; i < order.size(); ++i) rank[static_cast<size_t>(order[i])] = static_cast<int>(i);

    TensorModule t;
    t.m1 = m1;
    t.m2 = m2;
    t.elements.resize(elems.size());
    for (size_t i = 0; i < elems.size(); ++i)
        t.elements[static_cast<size_t>(rank[i])] = elems[i];
    t.pure.resize(pairs);
    for (size_t p = 0; p < pairs; ++p)
        t.pure[p] = rank[static_cast<size_t>(pure[p])];
    int n = static_cast<int>(t.elements.size());
    std::vector<char> leq(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            bool sub = true;
            for (size_t p = 0; p < pairs && sub; ++p)
                if (t.elements[static_cast<size_t>(i)][p] &&
                    !t.elements[static_cast<size_t>(j)][p])
                    sub = false;
            leq[static_cast<size_t>(i) * n + j] = sub ? 1 : 0;
        }
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("t" + std::to_string(i));
    t.lat = FiniteSupLattice::trusted(n, std::move(leq), std::move(labels));
    return t;
}

/// A Q-bimorphism M1 x M2 -> L: join-preserving in each coordinate
/// separately and balanced over the scalar action.
inline bool is_bimorphism(const FiniteModule& m1, const FiniteModule& m2,
                          const FiniteSupLattice& L, const std::vector<int>& f) {
    int n1 = m1.lat.n, n2 = m2.lat.n;
    auto at = [&](int x, int y) { return f[static_cast<size_t>(x) * n2 + y]; };
    int bot1 = m1.lat.bottom(), bot2 = m2.lat.bottom(), botL = L.bottom();
    for (int y = 0; y < n2; ++y)
        if (at(bot1, y) != botL) return false;
    for (int x = 0; x < n1; ++x)
        if (at(x, bot2) != botL) return false;
    for (int x = 0; x < n1; ++x)
        for (int x2 = 0; x2 < n1; ++x2)
            for (int y = 0; y < n2; ++y)
                if (at(m1.lat.join2(x, x2), y) != L.join2(at(x, y), at(x2, y)))
                    return false;
    for (int y = 0; y < n2; ++y)
        for (int y2 = 0; y2 < n2; ++y2)
            for (int x = 0; x < n1; ++x)
                if (at(x, m2.lat.join2(y, y2)) != L.join2(at(x, y), at(x, y2)))
                    return false;
    for (int a = 0; a < m1.q.size(); ++a)
        for (int x = 0; x < n1; ++x)
            for (int y = 0; y < n2; ++y)
                if (at(m1.act(a, x), y) != at(x, m2.act(a, y))) return false;
    return true;
}

/// The unique sup-lattice map k_f with k_f(x (x) y) = f(x, y), evaluated as
/// k_f(D) = join{ f(x,y) : (x,y) in D }.
inline Map induced_hom_from_bimorphism(const TensorModule& t, const FiniteSupLattice& L,
                                       const std::vector<int>& f) {
    if (!is_bimorphism(t.m1, t.m2, L, f))
        throw precondition_error("not a Q-bimorphism");
    int n2 = t.m2.lat.n;
    Map out(t.elements.size());
    for (size_t i = 0; i < t.elements.size(); ++i) {
        std::vector<int> vals;
        for (int x = 0; x < t.m1.lat.n; ++x)
            for (int y = 0; y < n2; ++y)
                if (t.elements[i][static_cast<size_t>(x) * n2 + y])
                    vals.push_back(f[static_cast<size_t>(x) * n2 + y]);
        out[i] = L.join(vals);
    }
    return out;
}

/// Restriction of scalars along h: Q -> R turns an R-module into a Q-module
/// with a .h x = h(a) . x; the underlying map of any hom is unchanged.
inline FiniteModule restrict_scalars(const FiniteQuantale& Q, const FiniteQuantale& R,
                                     const Map& h, const FiniteModule& N) {
    if (!(N.q == R)) throw precondition_error("module is not over the hom's target");
    if (!is_quantale_hom(Q, R, h)) throw precondition_error("not a quantale homomorphism");
    std::vector<int> act(static_cast<size_t>(Q.size()) * N.lat.n);
    for (int a = 0; a < Q.size(); ++a)
        for (int x = 0; x < N.lat.n; ++x)
            act[static_cast<size_t>(a) * N.lat.n + x] = N.act(apply_map(h, a), x);
    return FiniteModule(Q, N.lat, std::move(act), N.side);
}

/// When the first factor is an R-Q-bimodule, the tensor inherits a left
/// R-module structure: b * (x (x) y) = (b.x) (x) y, extended by joins.
struct TensorWithAction {
    TensorModule tensor;
    FiniteModule rmodule; // left R-module on the tensor carrier
};

inline TensorWithAction tensor_with_left_action(const Bimodule& m1,
                                                const FiniteModule& m2) {
    TensorModule t = tensor(m1.as_right(), m2);
    const FiniteQuantale& R = m1.left_q;
    detail::TensorOps ops(t.m1, t.m2);
    int n = t.lat.n, n2 = t.m2.lat.n;
    std::vector<int> act(static_cast<size_t>(R.size()) * n);
    for (int b = 0; b < R.size(); ++b)
        for (int i = 0; i < n; ++i) {
            std::vector<char> seed(static_cast<size_t>(t.m1.lat.n) * n2, 0);
            for (int x = 0; x < t.m1.lat.n; ++x)
                for (int y = 0; y < n2; ++y)
                    if (t.elements[static_cast<size_t>(i)][ops.at(x, y)])
                        seed[ops.at(m1.left(b, x), y)] = 1;
            act[static_cast<size_t>(b) * n + i] = t.index_of_mask(ops.saturate(seed));
        }
    TensorWithAction out;
    out.rmodule = FiniteModule(R, t.lat, std::move(act), Side::left);
    out.tensor = std::move(t);
    return out;
}

/// Extension of scalars: R (x)_Q M as a left R-module, together with the
/// unit map x -> 1 (x) x into the restricted tensor.
struct ExtendedModule {
    TensorModule tensor;     // carrier and pure-tensor table
    FiniteModule rmodule;    // left R-module structure on the tensor carrier
    Map unit_map;            // M -> tensor element indices, x -> 1 (x) x
};

inline ExtendedModule extend_scalars(const FiniteQuantale& Q, const FiniteQuantale& R,
                                     const Map& h, const FiniteModule& M) {
    if (!(M.q == Q) || M.side != Side::left)
        throw precondition_error("extension needs a left Q-module");
    if (!is_quantale_hom(Q, R, h)) throw precondition_error("not a quantale homomorphism");
    TensorWithAction ta = tensor_with_left_action(scalar_bimodule(Q, R, h), M);
    ExtendedModule out;
    out.rmodule = std::move(ta.rmodule);
    out.unit_map.resize(static_cast<size_t>(M.lat.n));
    for (int x = 0; x < M.lat.n; ++x)
        out.unit_map[static_cast<size_t>(x)] = ta.tensor.pure_of(R.unit, x);
    out.tensor = std::move(ta.tensor);
    return out;
}

/// hom_Q(M1, M2) as a left R-module for a Q-R-bimodule M1 and left Q-module
/// M2: carrier = the hom tables with pointwise order, action
/// (b . h)(x) = h(x . b).
struct HomModule {
    std::vector<Map> homs;   // carrier elements, in enumeration order
    FiniteModule mod;        // left R-module on the carrier
};

inline HomModule hom_module(const Bimodule& m1, const FiniteModule& m2) {
    FiniteModule left = m1.as_left();
    std::vector<Map> homs = enumerate_module_homs(left, m2);
    int n = static_cast<int>(homs.size());
    std::vector<char> leq(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            bool below = true;
            for (int x = 0; x < m1.lat.n && below; ++x)
                if (!m2.lat.leq(homs[static_cast<size_t>(i)][static_cast<size_t>(x)],
                                homs[static_cast<size_t>(j)][static_cast<size_t>(x)]))
                    below = false;
            leq[static_cast<size_t>(i) * n + j] = below ? 1 : 0;
        }
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("h" + std::to_string(i));
    FiniteSupLattice lat = FiniteSupLattice::trusted(n, std::move(leq), std::move(labels));

    auto index_of = [&](const Map& f) {
        auto it = std::find(homs.begin(), homs.end(), f);
        if (it == homs.end()) throw error("action left the hom carrier");
        return static_cast<int>(it - homs.begin());
    };
    const FiniteQuantale& R = m1.right_q;
    std::vector<int> act(static_cast<size_t>(R.size()) * n);
    for (int b = 0; b < R.size(); ++b)
        for (int i = 0; i < n; ++i) {
            Map moved(static_cast<size_t>(m1.lat.n));
            for (int x = 0; x < m1.lat.n; ++x)
                moved[static_cast<size_t>(x)] =
                    homs[static_cast<size_t>(i)][static_cast<size_t>(m1.right(b, x))];
            act[static_cast<size_t>(b) * n + i] = index_of(moved);
        }
    HomModule out;
    out.mod = FiniteModule(R, std::move(lat), std::move(act), Side::left);
    out.homs = std::move(homs);
    return out;
}

struct AdjunctionReport {
    std::vector<std::string> lines;      // one record per checked pair
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Adjunction of extension and restriction along h: the canonical maps
///   F |-> F o (1 (x) -)   between hom_R(R (x) M, N) and hom_Q(M, N_h)
///   g |-> (y |-> (r |-> g(r . y)))  between hom_Q(N_h, M) and
///                                   hom_R(N, hom_Q(R_h, M))
/// are verified to be bijections, pair by pair.
inline AdjunctionReport check_adjunction(const FiniteQuantale& Q, const FiniteQuantale& R,
                                         const Map& h,
                                         const std::vector<FiniteModule>& q_modules,
                                         const std::vector<FiniteModule>& r_modules) {
    AdjunctionReport rep;
    for (const FiniteModule& M : q_modules) {
        ExtendedModule ext = extend_scalars(Q, R, h, M);
        for (const FiniteModule& N : r_modules) {
            FiniteModule Nh = restrict_scalars(Q, R, h, N);
            std::vector<Map> lhs = enumerate_module_homs(ext.rmodule, N);
            std::vector<Map> rhs = enumerate_module_homs(M, Nh);
            if (lhs.size() != rhs.size())
                rep.violations.push_back("left adjoint hom-set sizes differ: " +
                                         std::to_string(lhs.size()) + " vs " +
                                         std::to_string(rhs.size()));
            std::vector<Map> mapped;
            for (const Map& F : lhs) {
                Map g(static_cast<size_t>(M.lat.n));
                for (int x = 0; x < M.lat.n; ++x)
                    g[static_cast<size_t>(x)] =
                        F[static_cast<size_t>(ext.unit_map[static_cast<size_t>(x)])];
                if (std::find(rhs.begin(), rhs.end(), g) == rhs.end())
                    rep.violations.push_back("transposed hom is not a Q-hom");
                mapped.push_back(g);
            }
            std::sort(mapped.begin(), mapped.end());
            if (std::unique(mapped.begin(), mapped.end()) != mapped.end())
                rep.violations.push_back("left transposition is not injective");
            else if (mapped != rhs)
                rep.violations.push_back("left transposition is not onto");
            rep.lines.push_back("left-adjoint |hom_R(RxM,N)|=" + std::to_string(lhs.size()) +
                                " |hom_Q(M,N_h)|=" + std::to_string(rhs.size()));
        }
    }
    // right adjoint: hom_R(N, hom_Q(R_h, M)) vs hom_Q(N_h, M), where R_h is
    // the Q-R-bimodule with left Q-action via h and right action by mult
    std::vector<int> lact(static_cast<size_t>(Q.size()) * R.size());
    std::vector<int> ract(static_cast<size_t>(R.size()) * R.size());
    for (int a = 0; a < Q.size(); ++a)
        for (int x = 0; x < R.size(); ++x)
            lact[static_cast<size_t>(a) * R.size() + x] = R.times(apply_map(h, a), x);
    for (int b = 0; b < R.size(); ++b)
        for (int x = 0; x < R.size(); ++x)
            ract[static_cast<size_t>(b) * R.size() + x] = R.times(x, b);
    Bimodule rqh(Q, R, R.lat, std::move(lact), std::move(ract));
    for (const FiniteModule& M : q_modules) {
        HomModule hm = hom_module(rqh, M);
        for (const FiniteModule& N : r_modules) {
            FiniteModule Nh = restrict_scalars(Q, R, h, N);
            std::vector<Map> lhs = enumerate_module_homs(N, hm.mod);
            std::vector<Map> rhs = enumerate_module_homs(Nh, M);
            if (lhs.size() != rhs.size())
                rep.violations.push_back("right adjoint hom-set sizes differ: " +
                                         std::to_string(lhs.size()) + " vs " +
                                         std::to_string(rhs.size()));
            std::vector<Map> mapped;
            for (const Map& g : rhs) {
                // transpose: y |-> (r |-> g(r . y))
                Map G(static_cast<size_t>(N.lat.n));
                bool good = true;
                for (int y = 0; y < N.lat.n && good; ++y) {
                    Map slice(static_cast<size_t>(R.size()));
                    for (int r = 0; r < R.size(); ++r)
                        slice[static_cast<size_t>(r)] =
                            g[static_cast<size_t>(N.act(r, y))];
                    auto it = std::find(hm.homs.begin(), hm.homs.end(), slice);
                    if (it == hm.homs.end()) {
                        rep.violations.push_back("right transpose slice is not a Q-hom");
                        good = false;
                    } else {
                        G[static_cast<size_t>(y)] = static_cast<int>(it - hm.homs.begin());
                    }
                }
                if (good) {
                    if (std::find(lhs.begin(), lhs.end(), G) == lhs.end())
                        rep.violations.push_back("right transpose is not an R-hom");
                    mapped.push_back(G);
                }
            }
            std::sort(mapped.begin(), mapped.end());
            if (std::unique(mapped.begin(), mapped.end()) != mapped.end())
                rep.violations.push_back("right transposition is not injective");
            else if (mapped != lhs)
                rep.violations.push_back("right transposition is not onto");
            rep.lines.push_back("right-adjoint |hom_R(N,hom_Q(R_h,M))|=" +
                                std::to_string(lhs.size()) + " |hom_Q(N_h,M)|=" +
                                std::to_string(rhs.size()));
        }
    }
    return rep;
}

struct EmbeddingReport {
    std::vector<std::string> lines;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// For onto h: restriction along h is injective on objects and full, and the
/// unit y -> 1 (x) y is an isomorphism N_h -> R (x)_Q N_h. When a section k
/// (h o k = id) is supplied, restriction along k agrees with extension along
/// h up to the canonical isomorphism x -> 1 (x) x.
inline EmbeddingReport check_full_embedding(const FiniteQuantale& Q,
                                            const FiniteQuantale& R, const Map& h,
                                            const std::vector<FiniteModule>& r_modules,
                                            const Map* section = nullptr,
                                            const std::vector<FiniteModule>* q_modules = nullptr) {
    EmbeddingReport rep;
    std::vector<char> hit(static_cast<size_t>(R.size()), 0);
    for (int a = 0; a < Q.size(); ++a) hit[static_cast<size_t>(apply_map(h, a))] = 1;
    if (std::find(hit.begin(), hit.end(), 0) != hit.end())
        throw precondition_error("quantale homomorphism is not surjective");

    for (size_t i = 0; i < r_modules.size(); ++i)
        for (size_t j = 0; j < r_modules.size(); ++j) {
            const FiniteModule& N = r_modules[i];
            const FiniteModule& N2 = r_modules[j];
            if (i != j && N.lat == N2.lat && !(N.action == N2.action)) {
                // injectivity on objects: restricted structures stay distinct
                FiniteModule a = restrict_scalars(Q, R, h, N);
                FiniteModule b = restrict_scalars(Q, R, h, N2);
                if (a.action == b.action)
                    rep.violations.push_back("distinct R-modules restrict to equal Q-modules");
            }
            if (N.side != Side::left || N2.side != Side::left) continue;
            std::vector<Map> qhoms = enumerate_module_homs(
                restrict_scalars(Q, R, h, N), restrict_scalars(Q, R, h, N2));
            std::vector<Map> rhoms = enumerate_module_homs(N, N2);
            if (qhoms != rhoms) // fullness (and faithfulness: same underlying tables)
                rep.violations.push_back("hom-sets differ after restriction (fullness)");
            rep.lines.push_back("fullness |hom|=" + std::to_string(rhoms.size()));
        }

    for (const FiniteModule& N : r_modules) {
        if (N.side != Side::left) continue;
        FiniteModule Nh = restrict_scalars(Q, R, h, N);
        ExtendedModule ext = extend_scalars(Q, R, h, Nh);
        // unit as a Q-module map N_h -> (R (x) N_h)_h
        FiniteModule tensor_q = restrict_scalars(Q, R, h, ext.rmodule);
        if (!is_module_hom(Nh, tensor_q, ext.unit_map)) {
            rep.violations.push_back("unit map is not a Q-module hom");
            continue;
        }
        std::vector<char> seen(static_cast<size_t>(tensor_q.lat.n), 0);
        bool inj = true;
        for (int x = 0; x < Nh.lat.n; ++x) {
            int v = ext.unit_map[static_cast<size_t>(x)];
            if (seen[static_cast<size_t>(v)]) inj = false;
            seen[static_cast<size_t>(v)] = 1;
        }
        bool onto = std::find(seen.begin(), seen.end(), 0) == seen.end();
        if (!inj || !onto)
            rep.violations.push_back("unit map 1 (x) - is not an isomorphism");
        else
            rep.lines.push_back("unit iso |N|=" + std::to_string(N.lat.n) +
                                " |RxN_h|=" + std::to_string(ext.rmodule.lat.n));
    }

    if (section && q_modules) {
        const Map& k = *section;
        if (!is_quantale_hom(R, Q, k))
            throw precondition_error("section is not a quantale homomorphism");
        if (compose_maps(h, k) != identity_map(R.size()))
            throw precondition_error("section does not split h");
        for (const FiniteModule& M : *q_modules) {
            if (M.side != Side::left) continue;
            FiniteModule Mk = restrict_scalars(R, Q, k, M);
            ExtendedModule ext = extend_scalars(Q, R, h, M);
            // canonical comparison x -> 1 (x) x, R-linear by h o k = id
            if (!is_module_hom(Mk, ext.rmodule, ext.unit_map)) {
                rep.violations.push_back("restrict-along-section map is not R-linear");
                continue;
            }
            std::vector<char> seen(static_cast<size_t>(ext.rmodule.lat.n), 0);
            bool inj = true;
            for (int x = 0; x < Mk.lat.n; ++x) {
                int v = ext.unit_map[static_cast<size_t>(x)];
                if (seen[static_cast<size_t>(v)]) inj = false;
                seen[static_cast<size_t>(v)] = 1;
            }
            bool onto = std::find(seen.begin(), seen.end(), 0) == seen.end();
            if (!inj || !onto)
                rep.violations.push_back("restrict-along-section and extension disagree");
            else
                rep.lines.push_back("section iso |M|=" + std::to_string(M.lat.n));
        }
    }
    return rep;
}

} // namespace deductio

#endif
