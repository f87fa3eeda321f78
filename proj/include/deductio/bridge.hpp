#ifndef DEDUCTIO_BRIDGE_HPP
#define DEDUCTIO_BRIDGE_HPP

#include "consequence.hpp"
#include "tensor.hpp"

namespace deductio {

/// A deductive system at desk scale: a finite monoid action on a finite set
/// of sequent stand-ins together with a consequence operator on the powerset,
/// presented as an explicit table indexed by subset masks.
struct FiniteActionSystem {
    std::string name;
    ASet aset;
    Map closure; // 2^aset.n entries, mask -> mask

    int subsets() const { return 1 << aset.n; }

    void validate_closure() const {
        int n = subsets();
        if (static_cast<int>(closure.size()) != n) throw error("closure table size mismatch");
        for (int X = 0; X < n; ++X) {
            int cX = closure[static_cast<size_t>(X)];
            if ((X & ~cX) != 0) throw precondition_error("closure not extensive");
            if (closure[static_cast<size_t>(cX)] != cX)
                throw precondition_error("closure not idempotent");
            for (int Y = 0; Y < n; ++Y)
                if ((X & ~Y) == 0 && (cX & ~closure[static_cast<size_t>(Y)]) != 0)
                    throw precondition_error("closure not monotone");
        }
    }

    int act_elem(int a, int s) const { return aset.at(a, s); }
    int act_set(int a, int X) const {
        int out = 0;
        for (int s = 0; s < aset.n; ++s)
            if (X & (1 << s)) out |= 1 << act_elem(a, s);
        return out;
    }
    bool entails(int X, int u) const {
        return (closure[static_cast<size_t>(X)] >> u) & 1;
    }
};

/// The finite submonoid of substitutions x_i -> x_{m(i)} on a fixed variable
/// window, acting on a formula universe.
struct RenamingAction {
    Monoid monoid;
    std::vector<Substitution> substitutions; // aligned with monoid elements
};

inline RenamingAction variable_map_monoid(int vars) {
    std::vector<Substitution> subs;
    std::vector<int> img(static_cast<size_t>(vars), 0);
    while (true) {
        Substitution s;
        for (int v = 1; v <= vars; ++v) s.set(v, Formula::variable(img[static_cast<size_t>(v - 1)] + 1));
        subs.push_back(s);
        size_t k = img.size();
        while (k > 0 && ++img[k - 1] == vars) img[--k] = 0;
        if (k == 0) break;
    }
    int n = static_cast<int>(subs.size());
    std::vector<int> mult(static_cast<size_t>(n) * n);
    int unit = -1;
    for (int i = 0; i < n; ++i) {
        if (subs[static_cast<size_t>(i)].is_identity()) unit = i;
        for (int j = 0; j < n; ++j) {
            Substitution c = compose(subs[static_cast<size_t>(i)], subs[static_cast<size_t>(j)]);
            int idx = -1;
            for (int k2 = 0; k2 < n; ++k2)
                if (subs[static_cast<size_t>(k2)] == c) { idx = k2; break; }
            if (idx < 0) throw error("variable-map monoid is not closed");
            mult[static_cast<size_t>(i) * n + j] = idx;
        }
    }
    RenamingAction out;
    out.monoid = Monoid(n, std::move(mult), unit);
    out.substitutions = std::move(subs);
    return out;
}

/// Concrete pipeline: a rule system over a finite universe, acted on by the
/// variable-map monoid, becomes a finite action system.
inline FiniteActionSystem action_system_from_rules(const RuleSystem& sys,
                                                   const FiniteUniverse& u, int vars,
                                                   int subset_cap = 14) {
    if (u.size() > subset_cap)
        throw cap_exceeded("action system over |U| = " + std::to_string(u.size()));
    RenamingAction ra = variable_map_monoid(vars);
    std::vector<int> act(static_cast<size_t>(ra.monoid.n) * u.size());
    std::vector<std::string> labels;
    for (int i = 0; i < u.size(); ++i) labels.push_back(print_sequent(u.carrier[static_cast<size_t>(i)]));
    for (int a = 0; a < ra.monoid.n; ++a)
        for (int s = 0; s < u.size(); ++s) {
            Sequent img = apply(ra.substitutions[static_cast<size_t>(a)],
                                u.carrier[static_cast<size_t>(s)]);
            act[static_cast<size_t>(a) * u.size() + s] = u.at(img);
        }
    FiniteActionSystem out;
    out.name = sys.name;
    out.aset = ASet(ra.monoid, u.size(), std::move(act), std::move(labels));
    out.closure.resize(1ul << u.size());
    for (int X = 0; X < (1 << u.size()); ++X) {
        SeqSet mask(static_cast<size_t>(u.size()), 0);
        for (int i = 0; i < u.size(); ++i)
            if (X & (1 << i)) mask[static_cast<size_t>(i)] = 1;
        SeqSet cl = close(sys, mask, u);
        int bits = 0;
        for (int i = 0; i < u.size(); ++i)
            if (cl[static_cast<size_t>(i)]) bits |= 1 << i;
        out.closure[static_cast<size_t>(X)] = bits;
    }
    out.validate_closure();
    return out;
}

/// The consequence operator as a module nucleus on the powerset module of
/// the action. Throws with the violating (a, X) if the table is not
/// action-invariant.
struct SystemModule {
    PowersetQuantale quantale;
    FiniteModule module;   // powerset module of the A-set
    Nucleus nucleus;       // the system's closure
    QuotientModule quotient;
};

inline SystemModule nucleus_of(const FiniteActionSystem& sys) {
    sys.validate_closure();
    for (int a = 0; a < sys.aset.monoid.n; ++a)
        for (int X = 0; X < sys.subsets(); ++X) {
            int lhs = sys.act_set(a, sys.closure[static_cast<size_t>(X)]);
            int rhs = sys.closure[static_cast<size_t>(sys.act_set(a, X))];
            if ((lhs & ~rhs) != 0)
                throw precondition_error(
                    "closure is not action-invariant at a = " +
                    sys.aset.monoid.labels[static_cast<size_t>(a)] +
                    ", X = " + std::to_string(X));
        }
    PowersetQuantale pq = powerset_quantale(sys.aset.monoid);
    FiniteModule mod = powerset_module(pq, sys.aset);
    Nucleus nuc(mod, sys.closure);
    QuotientModule quot = quotient_module(nuc);
    return SystemModule{std::move(pq), std::move(mod), std::move(nuc), std::move(quot)};
}

/// The inverse direction: a nucleus on the powerset module induces an
/// action-invariant consequence table.
inline FiniteActionSystem system_from_nucleus(const ASet& aset, const Map& nucleus_table) {
    FiniteActionSystem out;
    out.name = "from_nucleus";
    out.aset = aset;
    out.closure = nucleus_table;
    out.validate_closure();
    return out;
}

/// All action-invariant consequence tables on the powerset of the action,
/// enumerated from the relation side: extensive maps filtered by
/// monotonicity, idempotency, and action invariance.
inline std::vector<Map> enumerate_consequence_tables(const ASet& aset) {
    int n = aset.n;
    if (n > 4) throw cap_exceeded("consequence table enumeration needs |S| <= 4");
    int subsets = 1 << n;
    std::vector<Map> out;
    Map table(static_cast<size_t>(subsets));
    // DFS over supersets: table[X] ranges over supersets of X
    std::function<void(int)> assign = [&](int X) {
        if (X == subsets) {
            for (int A = 0; A < subsets; ++A) {
                int cA = table[static_cast<size_t>(A)];
                if (table[static_cast<size_t>(cA)] != cA) return;
                for (int B = 0; B < subsets; ++B)
                    if ((A & ~B) == 0 && (cA & ~table[static_cast<size_t>(B)]) != 0)
                        return;
            }
            for (int a = 0; a < aset.monoid.n; ++a)
                for (int A = 0; A < subsets; ++A) {
                    int moved = 0;
                    for (int s = 0; s < n; ++s)
                        if (table[static_cast<size_t>(A)] & (1 << s))
                            moved |= 1 << aset.at(a, s);
                    int movedA = 0;
                    for (int s = 0; s < n; ++s)
                        if (A & (1 << s)) movedA |= 1 << aset.at(a, s);
                    if ((moved & ~table[static_cast<size_t>(movedA)]) != 0) return;
                }
            out.push_back(table);
            return;
        }
        int free = ~X & (subsets - 1);
        // iterate supersets of X: X | sub for sub subset of free
        int sub = 0;
        while (true) {
            table[static_cast<size_t>(X)] = X | sub;
            assign(X + 1);
            if (sub == free) break;
            sub = (sub - free) & free;
        }
    };
    assign(0);
    return out;
}

/// All nuclei on the powerset module, enumerated from the operator side
/// through meet-closed families.
inline std::vector<Map> enumerate_nucleus_tables(const ASet& aset) {
    PowersetQuantale pq = powerset_quantale(aset.monoid);
    FiniteModule m = powerset_module(pq, aset);
    const FiniteSupLattice& L = m.lat;
    std::vector<Map> out;
    int top = L.top();
    if (L.n > 20) throw cap_exceeded("nucleus enumeration");
    for (unsigned long fam = 0; fam < (1ul << L.n); ++fam) {
        if (!(fam & (1ul << top))) continue;
        bool meet_closed = true;
        for (int a = 0; a < L.n && meet_closed; ++a)
            for (int b = a; b < L.n && meet_closed; ++b)
                if ((fam & (1ul << a)) && (fam & (1ul << b)) &&
                    !(fam & (1ul << (a & b)))) // powerset meet is intersection
                    meet_closed = false;
        if (!meet_closed) continue;
        Map table(static_cast<size_t>(L.n));
        for (int x = 0; x < L.n; ++x) {
            int best = -1;
            for (int c = 0; c < L.n; ++c)
                if ((fam & (1ul << c)) && (x & ~c) == 0 && (best < 0 || (c & ~best) == 0))
                    best = c;
            table[static_cast<size_t>(x)] = best;
        }
        if (is_nucleus_table(m, table)) out.push_back(table);
    }
    return out;
}

enum class InterpFlavor { interpret, represent, equivalent, weak };

/// A materialized set-valued map S -> P(T), with its companion for
/// equivalences.
struct BridgeVerdict {
    bool holds = false;
    Map hom;                   // quotient-level witness (empty if none)
    std::vector<int> iota;     // S element -> T subset mask (when materialized)
    std::vector<int> iota_back; // for equivalences
    std::vector<std::string> notes;
};

namespace detail {

inline std::vector<Map> suplattice_homs(const FiniteSupLattice& src,
                                        const FiniteSupLattice& tgt, HomFlavor flavor) {
    std::vector<int> ji = src.join_irreducibles();
    long total = 1;
    for (size_t i = 0; i < ji.size(); ++i) {
        total *= tgt.n;
        if (total > caps().hom_candidates) throw cap_exceeded("sup-lattice hom enumeration");
    }
    std::vector<Map> out;
    std::vector<int> assign(ji.size(), 0);
    while (true) {
        Map f(static_cast<size_t>(src.n));
        for (int x = 0; x < src.n; ++x) {
            std::vector<int> imgs;
            for (size_t i = 0; i < ji.size(); ++i)
                if (src.leq(ji[i], x)) imgs.push_back(assign[i]);
            f[static_cast<size_t>(x)] = tgt.join(imgs);
        }
        bool keep = preserves_joins(src, tgt, f);
        if (keep && flavor != HomFlavor::all) {
            std::vector<char> hit(static_cast<size_t>(tgt.n), 0);
            bool inj = true;
            for (int x = 0; x < src.n && inj; ++x) {
                if (hit[static_cast<size_t>(f[static_cast<size_t>(x)])]) inj = false;
                hit[static_cast<size_t>(f[static_cast<size_t>(x)])] = 1;
            }
            keep = inj && (flavor == HomFlavor::injective || src.n == tgt.n);
        }
        if (keep && std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
        size_t k = assign.size();
        while (k > 0 && ++assign[k - 1] == tgt.n) assign[--k] = 0;
        if (k == 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Lift a quotient-level hom to singleton images: find iota with
/// delta(iota(u)) = f(gamma({u})) and iota(a.u) = a.iota(u), by searching the
/// preimage choices. Returns empty if no action-invariant lift exists.
inline std::vector<int> lift_hom(const FiniteActionSystem& S, const FiniteActionSystem& T,
                                 const SystemModule& sm, const SystemModule& tm,
                                 const Map& f) {
    int n = S.aset.n;
    std::vector<int> targets(static_cast<size_t>(n)); // required delta-closed image
    for (int u = 0; u < n; ++u) {
        int gsing = sm.quotient.projection[static_cast<size_t>(1 << u)];
        int fq = apply_map(f, gsing);
        targets[static_cast<size_t>(u)] = tm.quotient.closed[static_cast<size_t>(fq)];
    }
    // candidate preimages per u: Y with delta(Y) = target
    std::vector<std::vector<int>> candidates(static_cast<size_t>(n));
    for (int u = 0; u < n; ++u) {
        for (int Y = 0; Y < T.subsets(); ++Y)
            if (T.closure[static_cast<size_t>(Y)] == targets[static_cast<size_t>(u)])
                candidates[static_cast<size_t>(u)].push_back(Y);
        // prefer the closed set itself: deterministic first choice
        std::sort(candidates[static_cast<size_t>(u)].begin(),
                  candidates[static_cast<size_t>(u)].end(), std::greater<int>());
    }
    std::vector<int> iota(static_cast<size_t>(n), -1);
    std::function<bool(int)> dfs = [&](int u) -> bool {
        if (u == n) return true;
        for (int Y : candidates[static_cast<size_t>(u)]) {
            iota[static_cast<size_t>(u)] = Y;
            bool ok = true;
            for (int a = 0; a < S.aset.monoid.n && ok; ++a) {
                for (int v = 0; v <= u && ok; ++v) {
                    int av = S.act_elem(a, v);
                    if (av <= u && iota[static_cast<size_t>(av)] >= 0)
                        ok = iota[static_cast<size_t>(av)] ==
                             T.act_set(a, iota[static_cast<size_t>(v)]);
                }
            }
            if (ok && dfs(u + 1)) return true;
        }
        iota[static_cast<size_t>(u)] = -1;
        return false;
    };
    if (!dfs(0)) return {};
    return iota;
}

inline int image_of_set(const FiniteActionSystem& T, const std::vector<int>& iota, int X) {
    int out = 0;
    for (size_t u = 0; u < iota.size(); ++u)
        if (X & (1 << u)) out |= iota[u];
    (void)T;
    return out;
}

/// Def-level check that iota is an interpretation (and optionally a
/// representation).
inline bool iota_is_interpretation(const FiniteActionSystem& S, const FiniteActionSystem& T,
                                   const std::vector<int>& iota, bool conservative) {
    for (int a = 0; a < S.aset.monoid.n; ++a)
        for (int u = 0; u < S.aset.n; ++u)
            if (iota[static_cast<size_t>(S.act_elem(a, u))] !=
                T.act_set(a, iota[static_cast<size_t>(u)]))
                return false;
    for (int X = 0; X < S.subsets(); ++X) {
        int iX = image_of_set(T, iota, X);
        int clT = T.closure[static_cast<size_t>(iX)];
        for (int u = 0; u < S.aset.n; ++u) {
            bool s_side = S.entails(X, u);
            bool t_side = (iota[static_cast<size_t>(u)] & ~clT) == 0;
            if (s_side && !t_side) return false;
            if (conservative && t_side && !s_side) return false;
        }
    }
    return true;
}

} // namespace detail

/// Same-language decision procedure: interpretability (representability,
/// equivalence) holds iff a module homomorphism (injective hom, isomorphism)
/// exists between the quotient modules. A successful search is materialized
/// as a set-valued map via the projective lift and re-verified against the
/// definition.
inline BridgeVerdict decide_interpretability(const FiniteActionSystem& S,
                                             const FiniteActionSystem& T,
                                             InterpFlavor flavor) {
    if (!(S.aset.monoid.mult == T.aset.monoid.mult) ||
        S.aset.monoid.unit != T.aset.monoid.unit)
        throw precondition_error("systems act over different monoids");
    SystemModule sm = nucleus_of(S);
    SystemModule tm = nucleus_of(T);
    BridgeVerdict verdict;
    if (flavor == InterpFlavor::weak) {
        std::vector<Map> homs =
            detail::suplattice_homs(sm.quotient.mod.lat, tm.quotient.mod.lat, HomFlavor::all);
        verdict.holds = !homs.empty();
        if (verdict.holds) verdict.hom = homs.front();
        verdict.notes.push_back("weak: sup-lattice homs = " + std::to_string(homs.size()));
        return verdict;
    }
    HomFlavor hf = flavor == InterpFlavor::interpret    ? HomFlavor::all
                   : flavor == InterpFlavor::represent ? HomFlavor::injective
                                                        : HomFlavor::iso;
    std::vector<Map> homs = enumerate_module_homs(sm.quotient.mod, tm.quotient.mod, hf);
    verdict.holds = !homs.empty();
    verdict.notes.push_back("module homs found: " + std::to_string(homs.size()));
    if (!verdict.holds) return verdict;

    for (const Map& f : homs) {
        std::vector<int> iota = detail::lift_hom(S, T, sm, tm, f);
        if (iota.empty()) continue;
        bool conservative = flavor != InterpFlavor::interpret;
        if (!detail::iota_is_interpretation(S, T, iota, conservative)) continue;
        verdict.hom = f;
        verdict.iota = iota;
        if (flavor == InterpFlavor::equivalent) {
            // companion from the inverse isomorphism
            Map finv(f.size());
            for (size_t i = 0; i < f.size(); ++i) finv[static_cast<size_t>(f[i])] = static_cast<int>(i);
            std::vector<int> back = detail::lift_hom(T, S, tm, sm, finv);
            if (back.empty() || !detail::iota_is_interpretation(T, S, back, true)) continue;
            // eqeq: v and iota[iota'(v)] are inter-derivable
            bool eqeq = true;
            for (int v = 0; v < T.aset.n && eqeq; ++v) {
                int round = detail::image_of_set(T, verdict.iota, back[static_cast<size_t>(v)]);
                eqeq = T.entails(round, v) &&
                       (round & ~T.closure[static_cast<size_t>(1 << v)]) == 0;
            }
            if (!eqeq) continue;
            verdict.iota_back = back;
        }
        verdict.notes.push_back("witness materialized and verified");
        return verdict;
    }
    verdict.notes.push_back("hom exists but no action-invariant lift verified");
    verdict.holds = false;
    return verdict;
}

/// Brute-force oracle over all set-valued maps (tiny carriers only).
inline BridgeVerdict decide_interpretability_bruteforce(const FiniteActionSystem& S,
                                                        const FiniteActionSystem& T,
                                                        InterpFlavor flavor) {
    long total = 1;
    for (int u = 0; u < S.aset.n; ++u) {
        total *= T.subsets();
        if (total > caps().hom_candidates) throw cap_exceeded("brute-force map search");
    }
    BridgeVerdict verdict;
    std::vector<int> iota(static_cast<size_t>(S.aset.n), 0);
    std::vector<std::vector<int>> representations;
    auto weak_ok = [&](const std::vector<int>& io, bool conservative) {
        for (int X = 0; X < S.subsets(); ++X) {
            int iX = detail::image_of_set(T, io, X);
            int clT = T.closure[static_cast<size_t>(iX)];
            for (int u = 0; u < S.aset.n; ++u) {
                bool s_side = S.entails(X, u);
                bool t_side = (io[static_cast<size_t>(u)] & ~clT) == 0;
                if (s_side && !t_side) return false;
                if (conservative && t_side && !s_side) return false;
            }
        }
        return true;
    };
    while (true) {
        bool ok = false;
        switch (flavor) {
        case InterpFlavor::interpret:
            ok = detail::iota_is_interpretation(S, T, iota, false);
            break;
        case InterpFlavor::represent:
        case InterpFlavor::equivalent:
            ok = detail::iota_is_interpretation(S, T, iota, true);
            break;
        case InterpFlavor::weak:
            ok = weak_ok(iota, false);
            break;
        }
        if (ok) {
            if (flavor == InterpFlavor::equivalent) {
                representations.push_back(iota);
            } else {
                verdict.holds = true;
                verdict.iota = iota;
                return verdict;
            }
        }
        size_t k = iota.size();
        while (k > 0 && ++iota[k - 1] == T.subsets()) iota[--k] = 0;
        if (k == 0) break;
    }
    if (flavor == InterpFlavor::equivalent) {
        // search companions among representations of T in S
        std::vector<int> back(static_cast<size_t>(T.aset.n), 0);
        std::vector<std::vector<int>> back_reps;
        while (true) {
            if (detail::iota_is_interpretation(T, S, back, true)) back_reps.push_back(back);
            size_t k = back.size();
            while (k > 0 && ++back[k - 1] == S.subsets()) back[--k] = 0;
            if (k == 0) break;
        }
        for (const auto& io : representations)
            for (const auto& ib : back_reps) {
                bool eqeq = true;
                for (int v = 0; v < T.aset.n && eqeq; ++v) {
                    int round = detail::image_of_set(T, io, ib[static_cast<size_t>(v)]);
                    eqeq = T.entails(round, v) &&
                           (round & ~T.closure[static_cast<size_t>(1 << v)]) == 0;
                }
                if (eqeq) {
                    verdict.holds = true;
                    verdict.iota = io;
                    verdict.iota_back = ib;
                    return verdict;
                }
            }
    }
    return verdict;
}

/// Different-language decision: search module homs from the source quotient
/// into the restriction of the target quotient along a quantale translation
/// h between the powerset quantales. For equivalence with surjective h the
/// single-isomorphism criterion applies; otherwise a section k must be
/// supplied and both directions are checked.
inline BridgeVerdict decide_interpretability_via(const FiniteActionSystem& S,
                                                 const FiniteActionSystem& T, const Map& h,
                                                 const DesignatedSubquantale& designated,
                                                 InterpFlavor flavor,
                                                 const Map* section = nullptr) {
    SystemModule sm = nucleus_of(S);
    SystemModule tm = nucleus_of(T);
    TransChar2Report tc = check_transchar2(sm.quantale.q, tm.quantale.q, h, designated);
    if (!tc.ok())
        throw precondition_error("not a quantale translation: " + tc.violations.front());
    BridgeVerdict verdict;
    if (flavor == InterpFlavor::weak) {
        std::vector<Map> homs =
            detail::suplattice_homs(sm.quotient.mod.lat, tm.quotient.mod.lat, HomFlavor::all);
        verdict.holds = !homs.empty();
        if (verdict.holds) verdict.hom = homs.front();
        verdict.notes.push_back("weak: sup-lattice homs = " + std::to_string(homs.size()));
        return verdict;
    }
    FiniteModule restricted = restrict_scalars(sm.quantale.q, tm.quantale.q, h, tm.quotient.mod);
    if (flavor == InterpFlavor::interpret || flavor == InterpFlavor::represent) {
        HomFlavor hf =
            flavor == InterpFlavor::interpret ? HomFlavor::all : HomFlavor::injective;
        std::vector<Map> homs = enumerate_module_homs(sm.quotient.mod, restricted, hf);
        verdict.holds = !homs.empty();
        if (verdict.holds) verdict.hom = homs.front();
        verdict.notes.push_back("module homs into the restriction: " +
                                std::to_string(homs.size()));
        return verdict;
    }
    // equivalence
    std::vector<Map> isos = enumerate_module_homs(sm.quotient.mod, restricted, HomFlavor::iso);
    bool onto = [&] {
        std::vector<char> hit(static_cast<size_t>(tm.quantale.q.size()), 0);
        for (int a = 0; a < sm.quantale.q.size(); ++a) hit[static_cast<size_t>(apply_map(h, a))] = 1;
        return std::find(hit.begin(), hit.end(), 0) == hit.end();
    }();
    if (onto) {
        verdict.holds = !isos.empty();
        if (verdict.holds) verdict.hom = isos.front();
        verdict.notes.push_back("surjective translation: single-isomorphism criterion, isos = " +
                                std::to_string(isos.size()));
        return verdict;
    }
    if (!section) throw precondition_error("equivalence with non-surjective translation needs a section");
    FiniteModule restricted_back =
        restrict_scalars(tm.quantale.q, sm.quantale.q, *section, sm.quotient.mod);
    std::vector<Map> isos_back =
        enumerate_module_homs(tm.quotient.mod, restricted_back, HomFlavor::iso);
    verdict.holds = !isos.empty() && !isos_back.empty();
    if (verdict.holds) verdict.hom = isos.front();
    verdict.notes.push_back("two-sided criterion: isos = " + std::to_string(isos.size()) +
                            " / " + std::to_string(isos_back.size()));
    return verdict;
}

struct PreorderFunctorReport {
    bool action_invariant = false;
    bool functorial = false;       // interpretation direction
    bool full = false;             // conservative direction
    bool equivalence = false;      // with the companion, when supplied
    bool initial_terminal = false; // S initial, empty set terminal
    std::vector<std::string> notes;
};

/// The preorder-category reading: F(X) = union of f over X preserves the
/// entailment preorder iff f is a (weak) interpretation; fullness matches
/// conservativity; a companion G with X ~ GF(X) and Y ~ FG(Y) matches
/// equivalence.
inline PreorderFunctorReport check_preorder_functor(const FiniteActionSystem& S,
                                                    const FiniteActionSystem& T,
                                                    const std::vector<int>& f,
                                                    const std::vector<int>* companion = nullptr) {
    PreorderFunctorReport rep;
    auto F = [&](int X) { return detail::image_of_set(T, f, X); };
    auto entails_set = [](const FiniteActionSystem& sys, int X, int Y) {
        return (Y & ~sys.closure[static_cast<size_t>(X)]) == 0;
    };
    rep.action_invariant = true;
    for (int a = 0; a < S.aset.monoid.n && rep.action_invariant; ++a)
        for (int u = 0; u < S.aset.n && rep.action_invariant; ++u)
            rep.action_invariant = f[static_cast<size_t>(S.act_elem(a, u))] ==
                                   T.act_set(a, f[static_cast<size_t>(u)]);
    rep.functorial = true;
    rep.full = true;
    for (int X = 0; X < S.subsets(); ++X)
        for (int Y = 0; Y < S.subsets(); ++Y) {
            bool sxy = entails_set(S, X, Y);
            bool txy = entails_set(T, F(X), F(Y));
            if (sxy && !txy) {
                rep.functorial = false;
                rep.notes.push_back("functoriality fails at X=" + std::to_string(X) +
                                    " Y=" + std::to_string(Y));
            }
            if (txy && !sxy) rep.full = false;
        }
    // initial object: the full carrier entails every object; terminal: empty
    rep.initial_terminal = true;
    int full_carrier = S.subsets() - 1;
    for (int Y = 0; Y < S.subsets(); ++Y)
        if (!entails_set(S, full_carrier, Y)) rep.initial_terminal = false;
    // X entails the empty set vacuously: nothing to check
    if (companion) {
        rep.equivalence = true;
        const std::vector<int>& g = *companion;
        auto G = [&](int Y) { return detail::image_of_set(S, g, Y); };
        for (int X = 0; X < S.subsets() && rep.equivalence; ++X) {
            int gfx = G(F(X));
            rep.equivalence = entails_set(S, X, gfx) && entails_set(S, gfx, X);
        }
        for (int Y = 0; Y < T.subsets() && rep.equivalence; ++Y) {
            int fgy = F(G(Y));
            rep.equivalence = entails_set(T, Y, fgy) && entails_set(T, fgy, Y);
        }
    }
    return rep;
}

} // namespace deductio

#endif
