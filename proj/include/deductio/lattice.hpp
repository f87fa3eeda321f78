#ifndef DEDUCTIO_LATTICE_HPP
#define DEDUCTIO_LATTICE_HPP

#include <algorithm>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"

namespace deductio {

/// A finite sup-lattice presented by an explicit order table. Elements are
/// indices 0..n-1; labels are optional and purely cosmetic. Direct
/// construction validates that the relation is a partial order and that every
/// pair has a least upper bound (plus the empty join as bottom), which for a
/// finite carrier yields all joins. Directly presented lattices are capped at
/// caps().lattice; larger carriers (powersets, quotients, tensor carriers)
/// come through the trusted factory of the constructions that guarantee
/// lattice-ness structurally.
struct FiniteSupLattice {
    int n = 0;
    std::vector<std::string> labels;
    std::vector<char> leq_; // n*n, row-major: leq_[a*n+b] iff a <= b

    FiniteSupLattice() = default;
    FiniteSupLattice(int size, std::vector<char> leq, std::vector<std::string> labs = {}) {
        if (size > caps().lattice)
            throw cap_exceeded("direct lattice carrier " + std::to_string(size) +
                               " (cap " + std::to_string(caps().lattice) + ")");
        init(size, std::move(leq), std::move(labs));
        validate();
    }

    /// For constructions that are lattices by construction (powerset orders,
    /// meet-closed subfamilies containing top). Skips the O(n^3) validation.
    static FiniteSupLattice trusted(int size, std::vector<char> leq,
                                    std::vector<std::string> labs = {}) {
        FiniteSupLattice L;
        L.init(size, std::move(leq), std::move(labs));
        return L;
    }

    bool leq(int a, int b) const { return leq_[static_cast<size_t>(a) * n + b] != 0; }

    std::string label(int a) const { return labels[static_cast<size_t>(a)]; }

    int index_of(const std::string& label) const {
        for (int i = 0; i < n; ++i)
            if (labels[static_cast<size_t>(i)] == label) return i;
        throw error("unknown lattice element: " + label);
    }

    /// Least upper bound of the set with the given membership mask.
    int join_mask(const std::vector<char>& mask) const {
        int best = -1;
        for (int u = 0; u < n; ++u) {
            bool ub = true;
            for (int x = 0; x < n && ub; ++x)
                if (mask[static_cast<size_t>(x)] && !leq(x, u)) ub = false;
            if (ub && (best < 0 || leq(u, best))) best = u;
        }
        return best; // existence/uniqueness comes from lattice-ness
    }

    int join(std::span<const int> xs) const {
        std::vector<char> mask(static_cast<size_t>(n), 0);
        for (int x : xs) mask[static_cast<size_t>(x)] = 1;
        return join_mask(mask);
    }
    int join(std::initializer_list<int> xs) const {
        return join(std::span<const int>(xs.begin(), xs.size()));
    }
    int join2(int a, int b) const {
        int xs[2] = {a, b};
        return join(xs);
    }
    int bottom() const { return join(std::span<const int>{}); }
    int top() const {
        std::vector<int> all(static_cast<size_t>(n));
        std::iota(all.begin(), all.end(), 0);
        return join(all);
    }
    /// Greatest lower bound, as the join of the common lower bounds.
    int meet(std::span<const int> xs) const {
        std::vector<char> lbs(static_cast<size_t>(n), 1);
        for (int x : xs)
            for (int z = 0; z < n; ++z)
                if (!leq(z, x)) lbs[static_cast<size_t>(z)] = 0;
        return join_mask(lbs);
    }
    int meet2(int a, int b) const {
        int xs[2] = {a, b};
        return meet(xs);
    }

    /// Join-irreducibles: x is not the join of the elements strictly below it.
    std::vector<int> join_irreducibles() const {
        std::vector<int> out;
        for (int x = 0; x < n; ++x) {
            std::vector<char> below(static_cast<size_t>(n), 0);
            for (int z = 0; z < n; ++z)
                if (leq(z, x) && z != x) below[static_cast<size_t>(z)] = 1;
            if (join_mask(below) != x) out.push_back(x);
        }
        return out;
    }

    friend bool operator==(const FiniteSupLattice& a, const FiniteSupLattice& b) {
        return a.n == b.n && a.leq_ == b.leq_;
    }

private:
    void init(int size, std::vector<char> leq, std::vector<std::string> labs) {
        n = size;
        leq_ = std::move(leq);
        labels = std::move(labs);
        if (n <= 0) throw error("lattice must be nonempty");
        if (static_cast<int>(leq_.size()) != n * n) throw error("order table size mismatch");
        if (labels.empty())
            for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
        if (static_cast<int>(labels.size()) != n) throw error("label count mismatch");
    }

    void validate() const {
        for (int a = 0; a < n; ++a) {
            if (!leq(a, a)) throw error("order not reflexive at " + label(a));
            for (int b = 0; b < n; ++b) {
                if (a != b && leq(a, b) && leq(b, a))
                    throw error("order not antisymmetric at " + label(a) + "," + label(b));
                for (int c = 0; c < n; ++c)
                    if (leq(a, b) && leq(b, c) && !leq(a, c))
                        throw error("order not transitive at " + label(a) + "," +
                                    label(b) + "," + label(c));
            }
        }
        auto check_lub = [&](const std::vector<char>& mask, const std::string& what) {
            int least = -1;
            for (int u = 0; u < n; ++u) {
                bool ub = true;
                for (int x = 0; x < n && ub; ++x)
                    if (mask[static_cast<size_t>(x)] && !leq(x, u)) ub = false;
                if (ub && (least < 0 || leq(u, least))) least = u;
            }
            if (least < 0) throw error("no upper bound for " + what);
            for (int u = 0; u < n; ++u) {
                bool ub = true;
                for (int x = 0; x < n && ub; ++x)
                    if (mask[static_cast<size_t>(x)] && !leq(x, u)) ub = false;
                if (ub && !leq(least, u))
                    throw error("upper bounds of " + what + " have no least element");
            }
        };
        std::vector<char> empty(static_cast<size_t>(n), 0);
        check_lub(empty, "the empty set");
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                std::vector<char> mask(static_cast<size_t>(n), 0);
                mask[static_cast<size_t>(a)] = mask[static_cast<size_t>(b)] = 1;
                check_lub(mask, "{" + label(a) + "," + label(b) + "}");
            }
    }
};

/// Chain 0 < 1 < ... < size-1.
inline FiniteSupLattice chain_lattice(int size) {
    std::vector<char> leq(static_cast<size_t>(size) * size, 0);
    for (int a = 0; a < size; ++a)
        for (int b = a; b < size; ++b) leq[static_cast<size_t>(a) * size + b] = 1;
    return FiniteSupLattice(size, std::move(leq));
}

/// Value table of a map between (or within) lattices.
using Map = std::vector<int>;

inline int apply_map(const Map& m, int x) { return m[static_cast<size_t>(x)]; }

inline Map compose_maps(const Map& outer, const Map& inner) {
    Map out(inner.size());
    for (size_t i = 0; i < inner.size(); ++i)
        out[i] = outer[static_cast<size_t>(inner[i])];
    return out;
}

inline Map identity_map(int n) {
    Map m(static_cast<size_t>(n));
    std::iota(m.begin(), m.end(), 0);
    return m;
}

/// Join preservation via binary joins and bottom; equivalent to preserving
/// all joins between finite lattices.
inline bool preserves_joins(const FiniteSupLattice& src, const FiniteSupLattice& tgt,
                            const Map& f) {
    if (apply_map(f, src.bottom()) != tgt.bottom()) return false;
    for (int a = 0; a < src.n; ++a)
        for (int b = 0; b < src.n; ++b)
            if (apply_map(f, src.join2(a, b)) !=
                tgt.join2(apply_map(f, a), apply_map(f, b)))
                return false;
    return true;
}

/// Arbitrary-subset check; cross-validates the binary criterion on small
/// carriers.
inline bool preserves_all_joins_bruteforce(const FiniteSupLattice& src,
                                           const FiniteSupLattice& tgt, const Map& f) {
    if (src.n > 20) throw cap_exceeded("brute-force join check needs |L| <= 20");
    for (unsigned long sub = 0; sub < (1ul << src.n); ++sub) {
        std::vector<int> xs, ys;
        for (int x = 0; x < src.n; ++x)
            if (sub & (1ul << x)) {
                xs.push_back(x);
                ys.push_back(apply_map(f, x));
            }
        if (apply_map(f, src.join(xs)) != tgt.join(ys)) return false;
    }
    return true;
}

/// A join-preserving (equivalently, residuated) map between finite sup-lattices.
struct ResiduatedMap {
    FiniteSupLattice source, target;
    Map table;

    ResiduatedMap(FiniteSupLattice src, FiniteSupLattice tgt, Map values)
        : source(std::move(src)), target(std::move(tgt)), table(std::move(values)) {
        if (static_cast<int>(table.size()) != source.n)
            throw error("value table size mismatch");
        if (!preserves_joins(source, target, table))
            throw precondition_error("map does not preserve joins");
    }

    int operator()(int x) const { return apply_map(table, x); }
};

/// The residual f_*(y) = join{ x : f(x) <= y }; satisfies f(x) <= y iff
/// x <= f_*(y).
inline Map residual(const ResiduatedMap& f) {
    Map out(static_cast<size_t>(f.target.n));
    for (int y = 0; y < f.target.n; ++y) {
        std::vector<char> mask(static_cast<size_t>(f.source.n), 0);
        for (int x = 0; x < f.source.n; ++x)
            if (f.target.leq(f(x), y)) mask[static_cast<size_t>(x)] = 1;
        out[static_cast<size_t>(y)] = f.source.join_mask(mask);
    }
    return out;
}

/// An extensive, monotone, idempotent table on a lattice.
struct ClosureOp {
    FiniteSupLattice lattice;
    Map table;

    ClosureOp(FiniteSupLattice lat, Map values)
        : lattice(std::move(lat)), table(std::move(values)) {
        if (static_cast<int>(table.size()) != lattice.n)
            throw error("closure table size mismatch");
        for (int x = 0; x < lattice.n; ++x) {
            if (!lattice.leq(x, at(x)))
                throw precondition_error("closure not extensive at " + lattice.label(x));
            if (at(at(x)) != at(x))
                throw precondition_error("closure not idempotent at " + lattice.label(x));
            for (int y = 0; y < lattice.n; ++y)
                if (lattice.leq(x, y) && !lattice.leq(at(x), at(y)))
                    throw precondition_error("closure not monotone at " +
                                             lattice.label(x) + "," + lattice.label(y));
        }
    }

    int at(int x) const { return table[static_cast<size_t>(x)]; }
    int operator()(int x) const { return at(x); }

    std::vector<int> closed_elements() const {
        std::vector<int> out;
        for (int x = 0; x < lattice.n; ++x)
            if (at(x) == x) out.push_back(x);
        return out;
    }
};

/// gamma = f_* o f is a closure operator on the source.
inline ClosureOp closure_from_adjoint(const ResiduatedMap& f) {
    Map res = residual(f);
    Map table(static_cast<size_t>(f.source.n));
    for (int x = 0; x < f.source.n; ++x)
        table[static_cast<size_t>(x)] = apply_map(res, f(x));
    return ClosureOp(f.source, std::move(table));
}

/// The free sup-lattice over a finite set: the powerset ordered by inclusion.
/// Element i is the subset whose membership bits are the bits of i; the
/// singleton embedding sends generator s to bit s.
struct FreeSupLattice {
    FiniteSupLattice lattice;
    int generators = 0;

    unsigned long mask_of(int element) const { return static_cast<unsigned long>(element); }
    int element_of(unsigned long mask) const { return static_cast<int>(mask); }
    int singleton(int s) const { return element_of(1ul << s); }
};

inline FreeSupLattice free_suplattice(int set_size,
                                      const std::vector<std::string>& names = {}) {
    if (set_size < 0) throw error("set size must be >= 0");
    if (set_size > 20 || (1l << set_size) > caps().powerset)
        throw cap_exceeded("powerset over " + std::to_string(set_size) + " elements");
    int n = 1 << set_size;
    std::vector<char> leq(static_cast<size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            leq[static_cast<size_t>(a) * n + b] = ((a & ~b) == 0) ? 1 : 0;
    std::vector<std::string> labels;
    for (int a = 0; a < n; ++a) {
        std::string l;
        for (int s = 0; s < set_size; ++s)
            if (a & (1 << s)) {
                if (!l.empty()) l += '+';
                l += names.empty() ? ("s" + std::to_string(s))
                                   : names[static_cast<size_t>(s)];
            }
        labels.push_back(l.empty() ? "bot" : l);
    }
    FreeSupLattice out;
    out.lattice = FiniteSupLattice::trusted(n, std::move(leq), std::move(labels));
    out.generators = set_size;
    return out;
}

/// Least closure operator identifying the given pairs, via the compatible-set
/// characterization: c is compatible when a <= c iff b <= c for every pair
/// (a,b); gamma(x) is the least compatible element above x. The compatible
/// set is meet-closed and contains top, so that least element exists. The
/// quotient lattice is the compatible family with join gamma o join.
struct CongruenceResult {
    ClosureOp closure;
    std::vector<int> closed;   // compatible elements, ascending index order
    FiniteSupLattice quotient; // order restricted to the compatible elements
    Map projection;            // L -> quotient index
};

inline CongruenceResult congruence_closure(const FiniteSupLattice& L,
                                           const std::vector<std::pair<int, int>>& pairs) {
    std::vector<int> closed;
    for (int c = 0; c < L.n; ++c) {
        bool ok = true;
        for (const auto& [a, b] : pairs)
            if (L.leq(a, c) != L.leq(b, c)) { ok = false; break; }
        if (ok) closed.push_back(c);
    }
    Map table(static_cast<size_t>(L.n));
    for (int x = 0; x < L.n; ++x) {
        int best = -1; // compatible sets are meet-closed: running min suffices
        for (int c : closed)
            if (L.leq(x, c) && (best < 0 || L.leq(c, best))) best = c;
        if (best < 0) throw error("no compatible element above " + L.label(x));
        table[static_cast<size_t>(x)] = best;
    }
    ClosureOp gamma(L, table);

    int qn = static_cast<int>(closed.size());
    std::vector<char> qleq(static_cast<size_t>(qn) * qn, 0);
    std::vector<std::string> qlabels;
    for (int i = 0; i < qn; ++i) {
        qlabels.push_back(L.label(closed[static_cast<size_t>(i)]));
        for (int j = 0; j < qn; ++j)
            qleq[static_cast<size_t>(i) * qn + j] =
                L.leq(closed[static_cast<size_t>(i)], closed[static_cast<size_t>(j)]) ? 1
                                                                                      : 0;
    }
    Map proj(static_cast<size_t>(L.n));
    for (int x = 0; x < L.n; ++x) {
        int cx = gamma(x);
        proj[static_cast<size_t>(x)] = static_cast<int>(
            std::lower_bound(closed.begin(), closed.end(), cx) - closed.begin());
    }
    return {std::move(gamma), std::move(closed),
            FiniteSupLattice::trusted(qn, std::move(qleq), std::move(qlabels)),
            std::move(proj)};
}

} // namespace deductio

#endif
