#ifndef DEDUCTIO_MODULE_HPP
#define DEDUCTIO_MODULE_HPP

#include "quantale.hpp"

namespace deductio {

enum class Side { left, right };

struct ModuleReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// A finite module over a finite quantale: a sup-lattice with a scalar
/// multiplication table. For a left module act(a,x) is a.x; for a right
/// module it is x.a (the table is always indexed scalar-first).
struct FiniteModule {
    FiniteQuantale q;
    FiniteSupLattice lat;
    std::vector<int> action; // q.size() * lat.n
    Side side = Side::left;

    FiniteModule() = default;
    FiniteModule(FiniteQuantale quantale, FiniteSupLattice lattice,
                 std::vector<int> act, Side s = Side::left)
        : q(std::move(quantale)), lat(std::move(lattice)), action(std::move(act)),
          side(s) {
        ModuleReport rep = validate();
        if (!rep.ok()) throw precondition_error("invalid module: " + rep.violations.front());
    }
    static FiniteModule unchecked(FiniteQuantale quantale, FiniteSupLattice lattice,
                                  std::vector<int> act, Side s = Side::left) {
        FiniteModule m;
        m.q = std::move(quantale);
        m.lat = std::move(lattice);
        m.action = std::move(act);
        m.side = s;
        return m;
    }

    int act(int a, int x) const { return action[static_cast<size_t>(a) * lat.n + x]; }
    int size() const { return lat.n; }

    /// (M1) external associativity (with sides), (M2) distribution over binary
    /// and empty joins in both arguments, (M3) unit action.
    ModuleReport validate() const {
        ModuleReport rep;
        if (static_cast<int>(action.size()) != q.size() * lat.n) {
            rep.violations.push_back("action table size mismatch");
            return rep;
        }
        for (int x = 0; x < lat.n; ++x)
            if (act(q.unit, x) != x)
                rep.violations.push_back("(M3) unit action fails at " + lat.label(x));
        for (int a = 0; a < q.size(); ++a)
            for (int b = 0; b < q.size(); ++b) {
                int ab = side == Side::left ? q.times(a, b) : q.times(b, a);
                for (int x = 0; x < lat.n; ++x)
                    if (act(ab, x) != act(a, act(b, x)))
                        rep.violations.push_back(
                            "(M1) associativity fails at (" + q.lat.label(a) + "," +
                            q.lat.label(b) + "," + lat.label(x) + ")");
            }
        int qbot = q.lat.bottom(), mbot = lat.bottom();
        for (int a = 0; a < q.size(); ++a) {
            if (act(a, mbot) != mbot)
                rep.violations.push_back("(M2) a.bottom != bottom at " + q.lat.label(a));
            for (int x = 0; x < lat.n; ++x)
                for (int y = 0; y < lat.n; ++y)
                    if (act(a, lat.join2(x, y)) != lat.join2(act(a, x), act(a, y)))
                        rep.violations.push_back("(M2) join distribution in M fails at (" +
                                                 q.lat.label(a) + "," + lat.label(x) + "," +
                                                 lat.label(y) + ")");
        }
        for (int x = 0; x < lat.n; ++x) {
            if (act(qbot, x) != mbot)
                rep.violations.push_back("(M2) bottom.x != bottom at " + lat.label(x));
            for (int a = 0; a < q.size(); ++a)
                for (int b = 0; b < q.size(); ++b)
                    if (act(q.lat.join2(a, b), x) != lat.join2(act(a, x), act(b, x)))
                        rep.violations.push_back("(M2) join distribution in Q fails at (" +
                                                 q.lat.label(a) + "," + q.lat.label(b) +
                                                 "," + lat.label(x) + ")");
        }
        return rep;
    }

    /// (M2'): the action is residuated in each argument separately.
    bool residuated_both_arguments() const {
        for (int a = 0; a < q.size(); ++a) {
            Map f(static_cast<size_t>(lat.n));
            for (int x = 0; x < lat.n; ++x) f[static_cast<size_t>(x)] = act(a, x);
            if (!preserves_joins(lat, lat, f)) return false;
        }
        for (int x = 0; x < lat.n; ++x) {
            Map g(static_cast<size_t>(q.size()));
            for (int a = 0; a < q.size(); ++a) g[static_cast<size_t>(a)] = act(a, x);
            if (!preserves_joins(q.lat, lat, g)) return false;
        }
        return true;
    }

    friend bool operator==(const FiniteModule& a, const FiniteModule& b) {
        return a.q == b.q && a.lat == b.lat && a.action == b.action && a.side == b.side;
    }
};

inline ModuleReport validate_module(const FiniteModule& m) { return m.validate(); }

/// Any quantale is a (left or right) module over itself.
inline FiniteModule self_module(const FiniteQuantale& q, Side side = Side::left) {
    std::vector<int> act(static_cast<size_t>(q.size()) * q.size());
    for (int a = 0; a < q.size(); ++a)
        for (int x = 0; x < q.size(); ++x)
            act[static_cast<size_t>(a) * q.size() + x] =
                side == Side::left ? q.times(a, x) : q.times(x, a);
    return FiniteModule(q, q.lat, std::move(act), side);
}

/// Powerset module of an A-set over the powerset quantale of A:
/// B.X = { b.x : b in B, x in X }.
inline FiniteModule powerset_module(const PowersetQuantale& pq, const ASet& s) {
    if (!(pq.monoid.mult == s.monoid.mult) || pq.monoid.unit != s.monoid.unit ||
        pq.monoid.n != s.monoid.n)
        throw precondition_error("A-set monoid differs from the quantale's monoid");
    FreeSupLattice free = free_suplattice(s.n, s.labels);
    int n = free.lattice.n;
    std::vector<int> act(static_cast<size_t>(pq.q.size()) * n);
    for (int B = 0; B < pq.q.size(); ++B)
        for (int X = 0; X < n; ++X) {
            unsigned long img = 0;
            for (int b = 0; b < s.monoid.n; ++b)
                if (B & (1 << b))
                    for (int x = 0; x < s.n; ++x)
                        if (X & (1 << x)) img |= 1ul << s.at(b, x);
            act[static_cast<size_t>(B) * n + X] = static_cast<int>(img);
        }
    return FiniteModule(pq.q, std::move(free.lattice), std::move(act), Side::left);
}

/// Residual of the action in the module argument: a\x = join{ z : a.z <= x }.
inline int residual_under(const FiniteModule& m, int a, int x) {
    std::vector<char> mask(static_cast<size_t>(m.lat.n), 0);
    for (int z = 0; z < m.lat.n; ++z)
        if (m.lat.leq(m.act(a, z), x)) mask[static_cast<size_t>(z)] = 1;
    return m.lat.join_mask(mask);
}

/// Residual in the scalar argument: x/y = join{ b : b.x <= y } (an element of Q).
inline int residual_over(const FiniteModule& m, int x, int y) {
    std::vector<char> mask(static_cast<size_t>(m.q.size()), 0);
    for (int b = 0; b < m.q.size(); ++b)
        if (m.lat.leq(m.act(b, x), y)) mask[static_cast<size_t>(b)] = 1;
    return m.q.lat.join_mask(mask);
}

/// A structure-preserving closure operator on a module: a.gamma(x) <= gamma(a.x).
struct Nucleus {
    FiniteModule mod;
    Map table;

    Nucleus(FiniteModule m, Map values) : mod(std::move(m)), table(std::move(values)) {
        ClosureOp check(mod.lat, table); // closure-operator laws
        for (int a = 0; a < mod.q.size(); ++a)
            for (int x = 0; x < mod.lat.n; ++x)
                if (!mod.lat.leq(mod.act(a, at(x)), at(mod.act(a, x))))
                    throw precondition_error("nucleus law fails at (" + mod.q.lat.label(a) +
                                             "," + mod.lat.label(x) + ")");
    }

    int at(int x) const { return table[static_cast<size_t>(x)]; }
    int operator()(int x) const { return at(x); }
};

inline bool is_nucleus_table(const FiniteModule& m, const Map& table) {
    for (int x = 0; x < m.lat.n; ++x) {
        int cx = apply_map(table, x);
        if (!m.lat.leq(x, cx) || apply_map(table, cx) != cx) return false;
        for (int y = 0; y < m.lat.n; ++y)
            if (m.lat.leq(x, y) && !m.lat.leq(cx, apply_map(table, y))) return false;
    }
    for (int a = 0; a < m.q.size(); ++a)
        for (int x = 0; x < m.lat.n; ++x)
            if (!m.lat.leq(m.act(a, apply_map(table, x)),
                           apply_map(table, m.act(a, x))))
                return false;
    return true;
}

/// A module homomorphism is a join-preserving, action-preserving table.
inline bool is_module_hom(const FiniteModule& m, const FiniteModule& n, const Map& f) {
    if (!(m.q == n.q) || m.side != n.side) return false;
    if (!preserves_joins(m.lat, n.lat, f)) return false;
    for (int a = 0; a < m.q.size(); ++a)
        for (int x = 0; x < m.lat.n; ++x)
            if (apply_map(f, m.act(a, x)) != n.act(a, apply_map(f, x))) return false;
    return true;
}

/// Residual map of a join-preserving table (without re-validating).
inline Map residual_table(const FiniteSupLattice& src, const FiniteSupLattice& tgt,
                          const Map& f) {
    Map out(static_cast<size_t>(tgt.n));
    for (int y = 0; y < tgt.n; ++y) {
        std::vector<char> mask(static_cast<size_t>(src.n), 0);
        for (int x = 0; x < src.n; ++x)
            if (tgt.leq(apply_map(f, x), y)) mask[static_cast<size_t>(x)] = 1;
        out[static_cast<size_t>(y)] = src.join_mask(mask);
    }
    return out;
}

/// f_* o f is a nucleus on the source of a module homomorphism.
inline Nucleus nucleus_from_hom(const FiniteModule& m, const FiniteModule& n,
                                const Map& f) {
    if (!is_module_hom(m, n, f)) throw precondition_error("not a module homomorphism");
    Map table = compose_maps(residual_table(m.lat, n.lat, f), f);
    return Nucleus(m, std::move(table));
}

/// The quotient module M_gamma: carrier = gamma-closed elements, join =
/// gamma o join, action = gamma o action, plus the canonical projection
/// hom given on M by x -> gamma(x) (as an index into the quotient carrier).
struct QuotientModule {
    FiniteModule mod;       // the quotient module
    std::vector<int> closed; // original indices of the closed elements
    Map projection;          // source index -> quotient index
};

inline QuotientModule quotient_module(const Nucleus& gamma) {
    const FiniteModule& m = gamma.mod;
    std::vector<int> closed;
    for (int x = 0; x < m.lat.n; ++x)
        if (gamma(x) == x) closed.push_back(x);
    int qn = static_cast<int>(closed.size());
    std::vector<char> leq(static_cast<size_t>(qn) * qn, 0);
    std::vector<std::string> labels;
    for (int i = 0; i < qn; ++i) {
        labels.push_back(m.lat.label(closed[static_cast<size_t>(i)]));
        for (int j = 0; j < qn; ++j)
            leq[static_cast<size_t>(i) * qn + j] =
                m.lat.leq(closed[static_cast<size_t>(i)], closed[static_cast<size_t>(j)])
                    ? 1 : 0;
    }
    auto qindex = [&](int original) {
        return static_cast<int>(std::lower_bound(closed.begin(), closed.end(), original) -
                                closed.begin());
    };
    std::vector<int> act(static_cast<size_t>(m.q.size()) * qn);
    for (int a = 0; a < m.q.size(); ++a)
        for (int i = 0; i < qn; ++i)
            act[static_cast<size_t>(a) * qn + i] =
                qindex(gamma(m.act(a, closed[static_cast<size_t>(i)])));
    QuotientModule out;
    out.mod = FiniteModule(m.q,
                           FiniteSupLattice::trusted(qn, std::move(leq), std::move(labels)),
                           std::move(act), m.side);
    out.closed = closed;
    out.projection.resize(static_cast<size_t>(m.lat.n));
    for (int x = 0; x < m.lat.n; ++x)
        out.projection[static_cast<size_t>(x)] = qindex(gamma(x));
    return out;
}

/// The projection M -> M_gamma is a module hom whose induced nucleus is gamma.
inline Map quotient_projection_as_hom(const QuotientModule& qm) { return qm.projection; }

enum class HomFlavor { all, injective, iso };

/// All module homomorphisms M -> N, seeded by images of the join-irreducibles
/// of M and extended by joins, then filtered by the hom laws. A bijective hom
/// between finite sup-lattices is automatically an isomorphism.
inline std::vector<Map> enumerate_module_homs(const FiniteModule& m, const FiniteModule& n,
                                              HomFlavor flavor = HomFlavor::all) {
    if (!(m.q == n.q) || m.side != n.side)
        throw precondition_error("modules are not over the same quantale and side");
    std::vector<int> ji = m.lat.join_irreducibles();
    long total = 1;
    for (size_t i = 0; i < ji.size(); ++i) {
        total *= n.lat.n;
        if (total > caps().hom_candidates) throw cap_exceeded("module hom enumeration");
    }
    std::vector<Map> out;
    std::vector<int> assign(ji.size(), 0);
    // precompute, for every x, which irreducibles sit below it
    std::vector<std::vector<size_t>> below(static_cast<size_t>(m.lat.n));
    for (int x = 0; x < m.lat.n; ++x)
        for (size_t i = 0; i < ji.size(); ++i)
            if (m.lat.leq(ji[i], x)) below[static_cast<size_t>(x)].push_back(i);
    while (true) {
        Map f(static_cast<size_t>(m.lat.n));
        for (int x = 0; x < m.lat.n; ++x) {
            std::vector<int> imgs;
            for (size_t i : below[static_cast<size_t>(x)]) imgs.push_back(assign[i]);
            f[static_cast<size_t>(x)] = n.lat.join(imgs);
        }
        bool keep = is_module_hom(m, n, f);
        if (keep && flavor != HomFlavor::all) {
            std::vector<char> hit(static_cast<size_t>(n.lat.n), 0);
            bool inj = true;
            for (int x = 0; x < m.lat.n && inj; ++x) {
                if (hit[static_cast<size_t>(f[static_cast<size_t>(x)])]) inj = false;
                hit[static_cast<size_t>(f[static_cast<size_t>(x)])] = 1;
            }
            keep = inj && (flavor == HomFlavor::injective || m.lat.n == n.lat.n);
        }
        if (keep && std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
        size_t k = assign.size();
        while (k > 0 && ++assign[k - 1] == n.lat.n) assign[--k] = 0;
        if (k == 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Slow oracle: scan every one of |N|^|M| tables. Cross-validates the
/// irreducible-seeded enumeration on small instances.
inline std::vector<Map> enumerate_module_homs_bruteforce(const FiniteModule& m,
                                                         const FiniteModule& n,
                                                         HomFlavor flavor = HomFlavor::all) {
    long total = 1;
    for (int i = 0; i < m.lat.n; ++i) {
        total *= n.lat.n;
        if (total > caps().hom_candidates) throw cap_exceeded("brute-force hom enumeration");
    }
    std::vector<Map> out;
    Map f(static_cast<size_t>(m.lat.n), 0);
    while (true) {
        bool keep = is_module_hom(m, n, f);
        if (keep && flavor != HomFlavor::all) {
            std::vector<char> hit(static_cast<size_t>(n.lat.n), 0);
            bool inj = true;
            for (int x = 0; x < m.lat.n && inj; ++x) {
                if (hit[static_cast<size_t>(f[static_cast<size_t>(x)])]) inj = false;
                hit[static_cast<size_t>(f[static_cast<size_t>(x)])] = 1;
            }
            keep = inj && (flavor == HomFlavor::injective || m.lat.n == n.lat.n);
        }
        if (keep) out.push_back(f);
        size_t k = f.size();
        while (k > 0 && ++f[k - 1] == n.lat.n) f[--k] = 0;
        if (k == 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// The submodule Q.u of Q (as a module over itself): the closure of
/// { a.u : a in Q } under all joins, with the induced action.
inline FiniteModule cyclic_submodule(const FiniteQuantale& q, int u) {
    std::vector<char> in(static_cast<size_t>(q.size()), 0);
    for (int a = 0; a < q.size(); ++a) in[static_cast<size_t>(q.times(a, u))] = 1;
    // close under binary joins (finite: reaches all joins)
    bool grew = true;
    while (grew) {
        grew = false;
        for (int x = 0; x < q.size(); ++x)
            if (in[static_cast<size_t>(x)])
                for (int y = 0; y < q.size(); ++y)
                    if (in[static_cast<size_t>(y)]) {
                        int j = q.lat.join2(x, y);
                        if (!in[static_cast<size_t>(j)]) {
                            in[static_cast<size_t>(j)] = 1;
                            grew = true;
                        }
                    }
    }
    std::vector<int> elems;
    for (int x = 0; x < q.size(); ++x)
        if (in[static_cast<size_t>(x)]) elems.push_back(x);
    int n = static_cast<int>(elems.size());
    std::vector<char> leq(static_cast<size_t>(n) * n, 0);
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) {
        labels.push_back(q.lat.label(elems[static_cast<size_t>(i)]));
        for (int j = 0; j < n; ++j)
            leq[static_cast<size_t>(i) * n + j] =
                q.lat.leq(elems[static_cast<size_t>(i)], elems[static_cast<size_t>(j)]) ? 1
                                                                                        : 0;
    }
    auto idx = [&](int orig) {
        return static_cast<int>(std::lower_bound(elems.begin(), elems.end(), orig) -
                                elems.begin());
    };
    std::vector<int> act(static_cast<size_t>(q.size()) * n);
    for (int a = 0; a < q.size(); ++a)
        for (int i = 0; i < n; ++i)
            act[static_cast<size_t>(a) * n + i] =
                idx(q.times(a, elems[static_cast<size_t>(i)]));
    return FiniteModule(q, FiniteSupLattice::trusted(n, std::move(leq), std::move(labels)),
                        std::move(act), Side::left);
}

struct CyclicProjectiveResult {
    bool yes = false;
    int witness = -1; // multiplicatively idempotent u with M isomorphic to Q.u
};

/// M is cyclic and projective iff it is isomorphic to Q.u for a
/// multiplicatively idempotent u.
inline CyclicProjectiveResult is_cyclic_projective(const FiniteModule& m) {
    for (int u = 0; u < m.q.size(); ++u) {
        if (m.q.times(u, u) != u) continue;
        FiniteModule qu = cyclic_submodule(m.q, u);
        if (qu.lat.n != m.lat.n) continue;
        if (!enumerate_module_homs(qu, m, HomFlavor::iso).empty())
            return {true, u};
    }
    return {false, -1};
}

/// A sup-lattice carrying a left Q-action and a right R-action that
/// associate: (a . x) . b = a . (x . b).
struct Bimodule {
    FiniteQuantale left_q, right_q;
    FiniteSupLattice lat;
    std::vector<int> lact; // left_q.size() * lat.n
    std::vector<int> ract; // right_q.size() * lat.n (scalar-first indexing)

    Bimodule() = default;
    Bimodule(FiniteQuantale lq, FiniteQuantale rq, FiniteSupLattice lattice,
             std::vector<int> left_action, std::vector<int> right_action)
        : left_q(std::move(lq)), right_q(std::move(rq)), lat(std::move(lattice)),
          lact(std::move(left_action)), ract(std::move(right_action)) {
        ModuleReport lrep = as_left().validate();
        if (!lrep.ok())
            throw precondition_error("invalid bimodule (left): " + lrep.violations.front());
        ModuleReport rrep = as_right().validate();
        if (!rrep.ok())
            throw precondition_error("invalid bimodule (right): " + rrep.violations.front());
        for (int a = 0; a < left_q.size(); ++a)
            for (int b = 0; b < right_q.size(); ++b)
                for (int x = 0; x < lat.n; ++x)
                    if (right(b, left(a, x)) != left(a, right(b, x)))
                        throw precondition_error("bimodule compatibility fails at (" +
                                                 left_q.lat.label(a) + "," + lat.label(x) +
                                                 "," + right_q.lat.label(b) + ")");
    }

    int left(int a, int x) const { return lact[static_cast<size_t>(a) * lat.n + x]; }
    int right(int b, int x) const { return ract[static_cast<size_t>(b) * lat.n + x]; }
    FiniteModule as_left() const {
        return FiniteModule::unchecked(left_q, lat, lact, Side::left);
    }
    FiniteModule as_right() const {
        return FiniteModule::unchecked(right_q, lat, ract, Side::right);
    }
};

/// R as an R-Q-bimodule along a quantale hom h: left action is multiplication,
/// right action is r . a = r h(a).
inline Bimodule scalar_bimodule(const FiniteQuantale& Q, const FiniteQuantale& R,
                                const Map& h) {
    std::vector<int> lact(static_cast<size_t>(R.size()) * R.size());
    std::vector<int> ract(static_cast<size_t>(Q.size()) * R.size());
    for (int b = 0; b < R.size(); ++b)
        for (int x = 0; x < R.size(); ++x)
            lact[static_cast<size_t>(b) * R.size() + x] = R.times(b, x);
    for (int a = 0; a < Q.size(); ++a)
        for (int x = 0; x < R.size(); ++x)
            ract[static_cast<size_t>(a) * R.size() + x] = R.times(x, apply_map(h, a));
    return Bimodule(R, Q, R.lat, std::move(lact), std::move(ract));
}

/// Identification of a designated common subquantale: pairs (q, r) naming the
/// same element inside Q and R.
struct DesignatedSubquantale {
    std::vector<std::pair<int, int>> pairs;
};

struct TransChar2Report {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Quantale-translation conditions: (i) h preserves complete join-primeness;
/// (ii) preimages of completely join-prime idempotents are empty or consist
/// of completely join-prime idempotents; (iii) the designated subquantale
/// elements have exactly themselves as preimage.
inline TransChar2Report check_transchar2(const FiniteQuantale& Q, const FiniteQuantale& R,
                                         const Map& h,
                                         const DesignatedSubquantale& designated) {
    TransChar2Report rep;
    if (!is_quantale_hom(Q, R, h)) {
        rep.violations.push_back("not a quantale homomorphism");
        return rep;
    }
    for (int p = 0; p < Q.size(); ++p)
        if (Q.completely_join_prime(p) && !R.completely_join_prime(apply_map(h, p)))
            rep.violations.push_back("(i) image of join-prime " + Q.lat.label(p) +
                                     " is not join-prime");
    // (ii) constrains the join-prime members of the preimage: a non-injective
    // translation legitimately sends many-element sets onto a join-prime
    // idempotent, so only join-prime preimages must be idempotent.
    for (int r = 0; r < R.size(); ++r) {
        if (!R.completely_join_prime(r) || R.times(r, r) != r) continue;
        for (int a = 0; a < Q.size(); ++a)
            if (apply_map(h, a) == r && Q.completely_join_prime(a) &&
                Q.times(a, a) != a)
                rep.violations.push_back("(ii) join-prime preimage " + Q.lat.label(a) +
                                         " of join-prime idempotent " + R.lat.label(r) +
                                         " is not idempotent");
    }
    for (const auto& [qv, rv] : designated.pairs) {
        if (apply_map(h, qv) != rv)
            rep.violations.push_back("(iii) designated element " + Q.lat.label(qv) +
                                     " does not map to " + R.lat.label(rv));
        for (int a = 0; a < Q.size(); ++a)
            if (apply_map(h, a) == rv && a != qv)
                rep.violations.push_back("(iii) designated element " + R.lat.label(rv) +
                                         " has extra preimage " + Q.lat.label(a));
    }
    return rep;
}

} // namespace deductio

#endif
