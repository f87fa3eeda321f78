#ifndef DEDUCTIO_CONSEQUENCE_HPP
#define DEDUCTIO_CONSEQUENCE_HPP

#include <functional>
#include <random>
#include <unordered_map>

#include "lattice.hpp"
#include "translation.hpp"

namespace deductio {

/// A schematic rule: every variable occurring in the premises or the
/// conclusion is a scheme variable and may be instantiated by any formula.
/// Rules with no premises are axiom schemes.
struct Rule {
    std::string name;
    std::vector<Sequent> premises;
    Sequent conclusion;
};

/// A Hilbert-style presentation of a substitution-invariant consequence
/// relation: the relation holds by closing a set of sequents under every
/// substitution instance of every rule.
struct RuleSystem {
    std::string name;
    Language lang;
    std::set<SequentType> types{{0, 1}};
    std::vector<Rule> rules;

    void check_well_formed() const {
        for (const Rule& r : rules) {
            if (!r.conclusion.well_formed(lang))
                throw error("rule " + r.name + ": conclusion is not well-formed");
            if (!types.count(r.conclusion.type()))
                throw error("rule " + r.name + ": conclusion type not admitted");
            for (const Sequent& p : r.premises) {
                if (!p.well_formed(lang))
                    throw error("rule " + r.name + ": premise is not well-formed");
                if (!types.count(p.type()))
                    throw error("rule " + r.name + ": premise type not admitted");
            }
        }
    }
};

/// The finite sequent carrier on which closures are computed. Kept in
/// canonical order with an index for membership tests.
struct FiniteUniverse {
    Language lang;
    std::vector<Sequent> carrier;
    std::unordered_map<Sequent, int, SequentHash> index;

    FiniteUniverse() = default;
    FiniteUniverse(Language l, std::vector<Sequent> seqs) : lang(std::move(l)) {
        std::sort(seqs.begin(), seqs.end());
        seqs.erase(std::unique(seqs.begin(), seqs.end()), seqs.end());
        carrier = std::move(seqs);
        if (static_cast<int>(carrier.size()) > caps().universe)
            throw cap_exceeded("universe carrier " + std::to_string(carrier.size()));
        for (size_t i = 0; i < carrier.size(); ++i)
            index.emplace(carrier[i], static_cast<int>(i));
    }

    /// All (0,1)-sequents over the generated formula carrier.
    static FiniteUniverse formulas(const Language& lang, const std::set<int>& vars,
                                   int depth, int cap = caps().universe) {
        std::vector<Sequent> seqs;
        for (Formula& f : generate_formulas(lang, vars, depth, cap))
            seqs.push_back(Sequent(std::move(f)));
        return FiniteUniverse(lang, std::move(seqs));
    }

    /// A (0,1) universe from an explicit formula pool, closed under
    /// subformulas so that detachment never escapes the carrier.
    static FiniteUniverse formula_pool(const Language& lang,
                                       const std::vector<Formula>& pool) {
        std::vector<Formula> work = pool;
        std::vector<Sequent> seqs;
        std::set<Formula> seen;
        while (!work.empty()) {
            Formula f = work.back();
            work.pop_back();
            if (!seen.insert(f).second) continue;
            seqs.push_back(Sequent(f));
            if (f.is_application())
                for (const Formula& c : f.children()) work.push_back(c);
        }
        return FiniteUniverse(lang, std::move(seqs));
    }

    /// All sequents of the admitted types over the generated formulas.
    static FiniteUniverse sequents(const Language& lang, const std::set<SequentType>& types,
                                   const std::set<int>& vars, int depth,
                                   int cap = caps().universe) {
        std::vector<Formula> fs = generate_formulas(lang, vars, depth, cap);
        std::vector<Sequent> seqs;
        for (const auto& [m, n] : types) {
            std::vector<size_t> idx(static_cast<size_t>(m + n), 0);
            if (m + n == 0) continue;
            while (true) {
                Sequent s;
                for (int i = 0; i < m; ++i) s.lhs.push_back(fs[idx[static_cast<size_t>(i)]]);
                for (int i = 0; i < n; ++i)
                    s.rhs.push_back(fs[idx[static_cast<size_t>(m + i)]]);
                seqs.push_back(std::move(s));
                if (static_cast<int>(seqs.size()) > cap)
                    throw cap_exceeded("sequent universe");
                size_t k = idx.size();
                while (k > 0 && ++idx[k - 1] == fs.size()) idx[--k] = 0;
                if (k == 0) break;
            }
        }
        return FiniteUniverse(lang, std::move(seqs));
    }

    bool contains(const Sequent& s) const { return index.count(s) != 0; }
    int at(const Sequent& s) const {
        auto it = index.find(s);
        if (it == index.end()) throw error("sequent outside the universe: " + print_sequent(s));
        return it->second;
    }
    int size() const { return static_cast<int>(carrier.size()); }
};

/// Membership mask over a universe carrier.
using SeqSet = std::vector<char>;

inline SeqSet make_set(const FiniteUniverse& u, const std::vector<Sequent>& seqs) {
    SeqSet out(static_cast<size_t>(u.size()), 0);
    for (const Sequent& s : seqs) out[static_cast<size_t>(u.at(s))] = 1;
    return out;
}

inline bool subset(const SeqSet& a, const SeqSet& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] && !b[i]) return false;
    return true;
}

namespace detail {

using Binding = std::map<int, Formula>;

inline bool match_formula(const Formula& pat, const Formula& ground, Binding& bind) {
    if (pat.is_variable()) {
        auto [it, fresh] = bind.emplace(pat.var_index(), ground);
        return fresh || it->second == ground;
    }
    if (!ground.is_application() || ground.conn() != pat.conn() ||
        ground.children().size() != pat.children().size())
        return false;
    for (size_t i = 0; i < pat.children().size(); ++i)
        if (!match_formula(pat.children()[i], ground.children()[i], bind)) return false;
    return true;
}

inline bool match_sequent(const Sequent& pat, const Sequent& ground, Binding& bind) {
    if (pat.type() != ground.type()) return false;
    for (size_t i = 0; i < pat.lhs.size(); ++i)
        if (!match_formula(pat.lhs[i], ground.lhs[i], bind)) return false;
    for (size_t i = 0; i < pat.rhs.size(); ++i)
        if (!match_formula(pat.rhs[i], ground.rhs[i], bind)) return false;
    return true;
}

inline bool ground_under(const Sequent& pat, const Binding& bind) {
    for (int v : pat.variables())
        if (!bind.count(v)) return false;
    return true;
}

inline Sequent instantiate(const Sequent& pat, const Binding& bind) {
    Substitution s;
    for (const auto& [v, f] : bind) s.set(v, f);
    return apply(s, pat);
}

/// Premise order for matching: structured patterns first so that later
/// premises are ground lookups rather than scans.
inline std::vector<const Sequent*> premise_order(const Rule& rule) {
    std::vector<const Sequent*> order;
    for (const Sequent& p : rule.premises) order.push_back(&p);
    std::stable_sort(order.begin(), order.end(), [](const Sequent* a, const Sequent* b) {
        auto weight = [](const Sequent* s) {
            int w = 0;
            for (const Formula& f : s->lhs) w += f.connective_count();
            for (const Formula& f : s->rhs) w += f.connective_count();
            return w;
        };
        return weight(a) > weight(b);
    });
    return order;
}

/// Instantiate a rule against the universe: premises match derived members,
/// leftover conclusion variables match carrier members; every complete
/// instance whose conclusion lies in the carrier is reported.
template <typename Emit>
void for_each_instance(const std::vector<const Sequent*>& premises,
                       const Sequent& conclusion, const FiniteUniverse& u,
                       const SeqSet& derived, Binding bind, size_t next_premise,
                       const Emit& emit) {
    if (next_premise < premises.size()) {
        const Sequent& pat = *premises[next_premise];
        if (ground_under(pat, bind)) {
            Sequent inst = instantiate(pat, bind);
            if (u.contains(inst) && derived[static_cast<size_t>(u.at(inst))])
                for_each_instance(premises, conclusion, u, derived, std::move(bind),
                                  next_premise + 1, emit);
            return;
        }
        for (int i = 0; i < u.size(); ++i) {
            if (!derived[static_cast<size_t>(i)]) continue;
            Binding child = bind;
            if (match_sequent(pat, u.carrier[static_cast<size_t>(i)], child))
                for_each_instance(premises, conclusion, u, derived, std::move(child),
                                  next_premise + 1, emit);
        }
        return;
    }
    if (ground_under(conclusion, bind)) {
        Sequent inst = instantiate(conclusion, bind);
        if (u.contains(inst)) emit(u.at(inst));
        return;
    }
    // leftover conclusion variables range over the carrier by matching
    for (int i = 0; i < u.size(); ++i) {
        Binding child = bind;
        if (match_sequent(conclusion, u.carrier[static_cast<size_t>(i)], child)) emit(i);
    }
}

template <typename Emit>
void for_each_instance(const Rule& rule, const FiniteUniverse& u, const SeqSet& derived,
                       const Emit& emit) {
    for_each_instance(premise_order(rule), rule.conclusion, u, derived, Binding{}, 0,
                      emit);
}

} // namespace detail

/// Least superset of X closed under every rule instance whose premises and
/// conclusion lie in the universe carrier: a sound under-approximation of the
/// global consequence restricted to the universe.
inline SeqSet close(const RuleSystem& sys, const SeqSet& X, const FiniteUniverse& u) {
    if (static_cast<int>(X.size()) != u.size()) throw error("set/universe size mismatch");
    SeqSet derived = X;
    bool grew = true;
    while (grew) {
        grew = false;
        for (const Rule& rule : sys.rules)
            detail::for_each_instance(rule, u, derived, [&](int concl) {
                if (!derived[static_cast<size_t>(concl)]) {
                    derived[static_cast<size_t>(concl)] = 1;
                    grew = true;
                }
            });
    }
    return derived;
}

inline SeqSet close(const RuleSystem& sys, const std::vector<Sequent>& X,
                    const FiniteUniverse& u) {
    return close(sys, make_set(u, X), u);
}

enum class Derivable { yes, unknown };

/// Bounded forward chaining: yes iff the goal is reached within depth_bound
/// rounds of rule application over the universe (each round adds every
/// one-step consequence of the current set). Never answers "no".
inline Derivable derivable_in(const RuleSystem& sys, const std::vector<Sequent>& X,
                              const Sequent& goal, int depth_bound,
                              const FiniteUniverse& u) {
    for (const Sequent& s : X)
        if (s == goal) return Derivable::yes;
    if (!u.contains(goal)) return Derivable::unknown;
    SeqSet derived(static_cast<size_t>(u.size()), 0);
    for (const Sequent& s : X)
        if (u.contains(s)) derived[static_cast<size_t>(u.at(s))] = 1;
    int goal_idx = u.at(goal);
    for (int round = 0; round < depth_bound; ++round) {
        if (derived[static_cast<size_t>(goal_idx)]) return Derivable::yes;
        bool grew = false;
        SeqSet next = derived;
        for (const Rule& rule : sys.rules)
            detail::for_each_instance(rule, u, derived, [&](int concl) {
                if (!next[static_cast<size_t>(concl)]) {
                    next[static_cast<size_t>(concl)] = 1;
                    grew = true;
                }
            });
        derived = std::move(next);
        if (!grew) break;
    }
    return derived[static_cast<size_t>(goal_idx)] ? Derivable::yes : Derivable::unknown;
}

/// Default substitution grid: the subformula closure of X and the goal.
inline Derivable derivable(const RuleSystem& sys, const std::vector<Sequent>& X,
                           const Sequent& goal, int depth_bound) {
    std::vector<Formula> pool;
    auto push_seq = [&](const Sequent& s) {
        for (const Formula& f : s.lhs) pool.push_back(f);
        for (const Formula& f : s.rhs) pool.push_back(f);
    };
    for (const Sequent& s : X) push_seq(s);
    push_seq(goal);
    FiniteUniverse u = FiniteUniverse::formula_pool(sys.lang, pool);
    return derivable_in(sys, X, goal, depth_bound, u);
}

/// sigma . close(X) included in close(sigma . X), for a universe-stabilizing
/// substitution. Holds for every rule-presented system.
inline bool check_substitution_invariance(
    const std::function<SeqSet(const SeqSet&)>& closure, const Substitution& sigma,
    const FiniteUniverse& u, const SeqSet& X) {
    for (int i = 0; i < u.size(); ++i)
        if (!u.contains(apply(sigma, u.carrier[static_cast<size_t>(i)])))
            throw precondition_error("substitution does not stabilize the universe");
    SeqSet lhs(static_cast<size_t>(u.size()), 0);
    SeqSet cx = closure(X);
    for (int i = 0; i < u.size(); ++i)
        if (cx[static_cast<size_t>(i)])
            lhs[static_cast<size_t>(u.at(apply(sigma, u.carrier[static_cast<size_t>(i)])))] = 1;
    SeqSet sx(static_cast<size_t>(u.size()), 0);
    for (int i = 0; i < u.size(); ++i)
        if (X[static_cast<size_t>(i)])
            sx[static_cast<size_t>(u.at(apply(sigma, u.carrier[static_cast<size_t>(i)])))] = 1;
    return subset(lhs, closure(sx));
}

inline bool check_substitution_invariance(const RuleSystem& sys, const SeqSet& X,
                                          const Substitution& sigma,
                                          const FiniteUniverse& u) {
    return check_substitution_invariance(
        [&](const SeqSet& s) { return close(sys, s, u); }, sigma, u, X);
}

/// All closed subsets of the universe, ordered by inclusion. A closure
/// system: intersection-closed with top = the full carrier.
struct TheoryLattice {
    std::vector<SeqSet> theories; // canonical order (by size, then mask)
    FiniteSupLattice lattice;
};

inline TheoryLattice theories(const RuleSystem& sys, const FiniteUniverse& u,
                              int cap = 20) {
    if (u.size() > cap) throw cap_exceeded("theory enumeration over |U| = " +
                                           std::to_string(u.size()));
    std::vector<SeqSet> found;
    std::set<SeqSet> seen;
    for (unsigned long sub = 0; sub < (1ul << u.size()); ++sub) {
        SeqSet X(static_cast<size_t>(u.size()), 0);
        for (int i = 0; i < u.size(); ++i)
            if (sub & (1ul << i)) X[static_cast<size_t>(i)] = 1;
        SeqSet cl = close(sys, X, u);
        if (seen.insert(cl).second) found.push_back(std::move(cl));
    }
    std::sort(found.begin(), found.end(), [](const SeqSet& a, const SeqSet& b) {
        int ca = static_cast<int>(std::count(a.begin(), a.end(), 1));
        int cb = static_cast<int>(std::count(b.begin(), b.end(), 1));
        if (ca != cb) return ca < cb;
        return a < b;
    });
    int n = static_cast<int>(found.size());
    std::vector<char> leq(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            leq[static_cast<size_t>(i) * n + j] =
                subset(found[static_cast<size_t>(i)], found[static_cast<size_t>(j)]) ? 1 : 0;
    TheoryLattice out;
    out.lattice = FiniteSupLattice::trusted(n, std::move(leq));
    out.theories = std::move(found);
    return out;
}

/// A set-valued interpretation map presented by pattern rules: the first
/// pattern that matches decides, and its image templates are instantiated
/// with the matched binding.
struct InterpRule {
    Sequent pattern;
    std::vector<Sequent> images;
};

struct InterpMap {
    std::string name;
    std::vector<InterpRule> rules;

    std::vector<Sequent> operator()(const Sequent& s) const {
        for (const InterpRule& r : rules) {
            detail::Binding bind;
            if (detail::match_sequent(r.pattern, s, bind)) {
                Substitution sigma;
                for (const auto& [v, f] : bind) sigma.set(v, f);
                std::vector<Sequent> out;
                for (const Sequent& img : r.images) out.push_back(apply(sigma, img));
                return out;
            }
        }
        throw error("interpretation map is not defined on: " + print_sequent(s));
    }
};

enum class InterpretationMode { interpret, represent };

struct InterpretationReport {
    std::vector<std::string> violations;
    long checked_sets = 0;
    bool ok() const { return violations.empty(); }
};

/// Verifies the entailment-transfer clauses of an interpretation over all
/// X in the powerset of U_S (exhaustive up to the cap, a deterministic
/// sample beyond), and optionally the action-invariance clause
/// iota(sigma . x) = taubar(sigma) . iota(x) for the sampled substitutions.
inline InterpretationReport check_interpretation(
    const InterpMap& iota, const RuleSystem& sysS, const RuleSystem& sysT,
    const FiniteUniverse& uS, const FiniteUniverse& uT,
    InterpretationMode mode = InterpretationMode::interpret,
    const Translation* tau = nullptr,
    const std::vector<Substitution>& action_sample = {}, int exhaustive_cap = 12) {
    InterpretationReport rep;

    // image sets and membership of images inside U_T
    std::vector<SeqSet> image(static_cast<size_t>(uS.size()));
    for (int i = 0; i < uS.size(); ++i) {
        SeqSet img(static_cast<size_t>(uT.size()), 0);
        for (const Sequent& s : iota(uS.carrier[static_cast<size_t>(i)])) {
            if (!uT.contains(s)) {
                rep.violations.push_back("image escapes the target universe: " +
                                         print_sequent(s));
                return rep;
            }
            img[static_cast<size_t>(uT.at(s))] = 1;
        }
        image[static_cast<size_t>(i)] = std::move(img);
    }

    auto check_one = [&](unsigned long sub) {
        SeqSet X(static_cast<size_t>(uS.size()), 0);
        SeqSet iX(static_cast<size_t>(uT.size()), 0);
        for (int i = 0; i < uS.size(); ++i)
            if (sub & (1ul << i)) {
                X[static_cast<size_t>(i)] = 1;
                for (int j = 0; j < uT.size(); ++j)
                    if (image[static_cast<size_t>(i)][static_cast<size_t>(j)])
                        iX[static_cast<size_t>(j)] = 1;
            }
        SeqSet clS = close(sysS, X, uS);
        SeqSet clT = close(sysT, iX, uT);
        ++rep.checked_sets;
        for (int i = 0; i < uS.size(); ++i) {
            bool s_entails = clS[static_cast<size_t>(i)] != 0;
            bool t_entails = subset(image[static_cast<size_t>(i)], clT);
            if (s_entails && !t_entails)
                rep.violations.push_back(
                    "entailment not transferred: X set " + std::to_string(sub) +
                    " derives " + print_sequent(uS.carrier[static_cast<size_t>(i)]) +
                    " but the image is not derivable");
            if (mode == InterpretationMode::represent && t_entails && !s_entails)
                rep.violations.push_back(
                    "conservativity fails: image of " +
                    print_sequent(uS.carrier[static_cast<size_t>(i)]) +
                    " derivable from image of X set " + std::to_string(sub));
        }
    };

    if (uS.size() <= exhaustive_cap) {
        for (unsigned long sub = 0; sub < (1ul << uS.size()); ++sub) check_one(sub);
    } else {
        std::mt19937_64 rng(0xded0c7u);
        std::uniform_int_distribution<unsigned long> dist(
            0, (uS.size() >= 64 ? ~0ul : (1ul << uS.size()) - 1));
        for (int k = 0; k < (1 << exhaustive_cap); ++k) check_one(dist(rng));
    }

    if (tau) {
        for (const Substitution& sigma : action_sample) {
            Substitution moved = induced_hom(*tau, sigma);
            for (int i = 0; i < uS.size(); ++i) {
                const Sequent& x = uS.carrier[static_cast<size_t>(i)];
                std::vector<Sequent> lhs = iota(apply(sigma, x));
                std::vector<Sequent> rhs;
                for (const Sequent& img : iota(x)) rhs.push_back(apply(moved, img));
                std::sort(lhs.begin(), lhs.end());
                std::sort(rhs.begin(), rhs.end());
                if (lhs != rhs)
                    rep.violations.push_back("action invariance fails at " +
                                             print_sequent(x) + " with sigma = " +
                                             print_substitution(sigma));
            }
        }
    }
    return rep;
}

} // namespace deductio

#endif
