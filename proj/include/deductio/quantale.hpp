#ifndef DEDUCTIO_QUANTALE_HPP
#define DEDUCTIO_QUANTALE_HPP

#include "lattice.hpp"

namespace deductio {

/// Finite monoid as explicit tables.
struct Monoid {
    int n = 0;
    std::vector<int> mult; // n*n, row-major
    int unit = 0;
    std::vector<std::string> labels;

    Monoid() = default;
    Monoid(int size, std::vector<int> table, int one, std::vector<std::string> labs = {})
        : n(size), mult(std::move(table)), unit(one), labels(std::move(labs)) {
        if (labels.empty())
            for (int i = 0; i < n; ++i) labels.push_back("m" + std::to_string(i));
        if (static_cast<int>(mult.size()) != n * n) throw error("monoid table size mismatch");
        for (int a = 0; a < n; ++a) {
            if (at(unit, a) != a || at(a, unit) != a)
                throw error("monoid unit law fails at " + labels[static_cast<size_t>(a)]);
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (at(at(a, b), c) != at(a, at(b, c)))
                        throw error("monoid associativity fails");
        }
    }

    int at(int a, int b) const { return mult[static_cast<size_t>(a) * n + b]; }
    int index_of(const std::string& l) const {
        for (int i = 0; i < n; ++i)
            if (labels[static_cast<size_t>(i)] == l) return i;
        throw error("unknown monoid element: " + l);
    }
};

inline Monoid trivial_monoid() { return Monoid(1, {0}, 0, {"1"}); }

/// The cyclic group of order two, written additively ({0,1}, +).
inline Monoid z2_monoid() { return Monoid(2, {0, 1, 1, 0}, 0, {"0", "1"}); }

/// The two-element monoid {1, e} with e*e = e.
inline Monoid idem_monoid() { return Monoid(2, {0, 1, 1, 1}, 0, {"1", "e"}); }

/// A finite action of a monoid on a set.
struct ASet {
    Monoid monoid;
    int n = 0;
    std::vector<int> act; // monoid.n * n
    std::vector<std::string> labels;

    ASet() = default;
    ASet(Monoid m, int size, std::vector<int> action, std::vector<std::string> labs = {})
        : monoid(std::move(m)), n(size), act(std::move(action)), labels(std::move(labs)) {
        if (labels.empty())
            for (int i = 0; i < n; ++i) labels.push_back("s" + std::to_string(i));
        if (static_cast<int>(act.size()) != monoid.n * n)
            throw error("action table size mismatch");
        for (int s = 0; s < n; ++s) {
            if (at(monoid.unit, s) != s) throw error("action unit law fails");
            for (int a = 0; a < monoid.n; ++a)
                for (int b = 0; b < monoid.n; ++b)
                    if (at(monoid.at(a, b), s) != at(a, at(b, s)))
                        throw error("action associativity fails");
        }
    }

    int at(int a, int s) const { return act[static_cast<size_t>(a) * n + s]; }
    int index_of(const std::string& l) const {
        for (int i = 0; i < n; ++i)
            if (labels[static_cast<size_t>(i)] == l) return i;
        throw error("unknown set element: " + l);
    }
};

struct QuantaleReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// A finite quantale: a sup-lattice with a monoid multiplication that
/// distributes over arbitrary joins on both sides. By finiteness it is
/// enough to check distribution over binary joins and the empty join.
struct FiniteQuantale {
    FiniteSupLattice lat;
    std::vector<int> mult; // lat.n * lat.n
    int unit = 0;

    FiniteQuantale() = default;
    FiniteQuantale(FiniteSupLattice lattice, std::vector<int> table, int one)
        : lat(std::move(lattice)), mult(std::move(table)), unit(one) {
        QuantaleReport rep = validate();
        if (!rep.ok()) throw precondition_error("invalid quantale: " + rep.violations.front());
    }
    static FiniteQuantale unchecked(FiniteSupLattice lattice, std::vector<int> table,
                                    int one) {
        FiniteQuantale q;
        q.lat = std::move(lattice);
        q.mult = std::move(table);
        q.unit = one;
        return q;
    }

    int times(int a, int b) const { return mult[static_cast<size_t>(a) * lat.n + b]; }
    int size() const { return lat.n; }

    QuantaleReport validate() const {
        QuantaleReport rep;
        auto lab = [&](int x) { return lat.label(x); };
        if (static_cast<int>(mult.size()) != lat.n * lat.n) {
            rep.violations.push_back("multiplication table size mismatch");
            return rep;
        }
        for (int a = 0; a < lat.n; ++a) {
            if (times(unit, a) != a || times(a, unit) != a)
                rep.violations.push_back("unit law fails at " + lab(a));
            for (int b = 0; b < lat.n; ++b)
                for (int c = 0; c < lat.n; ++c)
                    if (times(times(a, b), c) != times(a, times(b, c)))
                        rep.violations.push_back("associativity fails at (" + lab(a) + "," +
                                                 lab(b) + "," + lab(c) + ")");
        }
        int bot = lat.bottom();
        for (int a = 0; a < lat.n; ++a) {
            if (times(a, bot) != bot)
                rep.violations.push_back("right distributivity over the empty join fails at " +
                                         lab(a));
            if (times(bot, a) != bot)
                rep.violations.push_back("left distributivity over the empty join fails at " +
                                         lab(a));
            for (int b = 0; b < lat.n; ++b)
                for (int c = 0; c < lat.n; ++c) {
                    if (times(a, lat.join2(b, c)) != lat.join2(times(a, b), times(a, c)))
                        rep.violations.push_back("left distributivity fails at (" + lab(a) +
                                                 "," + lab(b) + "," + lab(c) + ")");
                    if (times(lat.join2(b, c), a) != lat.join2(times(b, a), times(c, a)))
                        rep.violations.push_back("right distributivity fails at (" + lab(a) +
                                                 "," + lab(b) + "," + lab(c) + ")");
                }
        }
        return rep;
    }

    bool commutative() const {
        for (int a = 0; a < lat.n; ++a)
            for (int b = 0; b < lat.n; ++b)
                if (times(a, b) != times(b, a)) return false;
        return true;
    }

    /// p is completely join-prime: p <= join(X) implies p <= x for some x in X.
    /// Binary joins plus nonbottomness suffice on a finite carrier.
    bool completely_join_prime(int p) const {
        if (p == lat.bottom()) return false;
        for (int a = 0; a < lat.n; ++a)
            for (int b = 0; b < lat.n; ++b)
                if (lat.leq(p, lat.join2(a, b)) && !lat.leq(p, a) && !lat.leq(p, b))
                    return false;
        return true;
    }

    friend bool operator==(const FiniteQuantale& a, const FiniteQuantale& b) {
        return a.lat == b.lat && a.mult == b.mult && a.unit == b.unit;
    }
};

inline QuantaleReport validate_quantale(const FiniteQuantale& q) { return q.validate(); }

/// The two-element quantale on the chain 0 < 1: join = max, mult = min,
/// unit = 1 (the Boolean quantale).
inline FiniteQuantale q2() {
    FiniteSupLattice lat = chain_lattice(2);
    lat.labels = {"0", "1"};
    return FiniteQuantale(std::move(lat), {0, 0, 0, 1}, 1);
}

/// Powerset quantale of a monoid: subsets with union, complex multiplication
/// BC = {bc}, unit {1}. Free over the monoid.
struct PowersetQuantale {
    FiniteQuantale q;
    Monoid monoid;

    int element_of(unsigned long mask) const { return static_cast<int>(mask); }
    unsigned long mask_of(int element) const { return static_cast<unsigned long>(element); }
    int singleton(int m) const { return element_of(1ul << m); }
};

inline PowersetQuantale powerset_quantale(const Monoid& m) {
    FreeSupLattice free = free_suplattice(m.n, m.labels);
    int n = free.lattice.n;
    std::vector<int> mult(static_cast<size_t>(n) * n);
    for (int A = 0; A < n; ++A)
        for (int B = 0; B < n; ++B) {
            unsigned long prod = 0;
            for (int a = 0; a < m.n; ++a)
                if (A & (1 << a))
                    for (int b = 0; b < m.n; ++b)
                        if (B & (1 << b)) prod |= 1ul << m.at(a, b);
            mult[static_cast<size_t>(A) * n + B] = static_cast<int>(prod);
        }
    PowersetQuantale out;
    out.q = FiniteQuantale::unchecked(std::move(free.lattice), std::move(mult),
                                      1 << m.unit);
    out.monoid = m;
    QuantaleReport rep = out.q.validate();
    if (!rep.ok()) throw error("powerset quantale validation: " + rep.violations.front());
    return out;
}

/// A join- and monoid-structure-preserving map between quantales.
inline bool is_quantale_hom(const FiniteQuantale& Q, const FiniteQuantale& R,
                            const Map& h) {
    if (!preserves_joins(Q.lat, R.lat, h)) return false;
    if (apply_map(h, Q.unit) != R.unit) return false;
    for (int a = 0; a < Q.size(); ++a)
        for (int b = 0; b < Q.size(); ++b)
            if (apply_map(h, Q.times(a, b)) != R.times(apply_map(h, a), apply_map(h, b)))
                return false;
    return true;
}

/// All quantale homomorphisms Q -> R, by assigning images to the
/// join-irreducibles of Q and extending by joins.
inline std::vector<Map> enumerate_quantale_homs(const FiniteQuantale& Q,
                                                const FiniteQuantale& R) {
    std::vector<int> ji = Q.lat.join_irreducibles();
    std::vector<Map> out;
    long total = 1;
    for (size_t i = 0; i < ji.size(); ++i) {
        total *= R.size();
        if (total > caps().hom_candidates)
            throw cap_exceeded("quantale hom enumeration");
    }
    std::vector<int> assign(ji.size(), 0);
    while (true) {
        Map h(static_cast<size_t>(Q.size()));
        for (int x = 0; x < Q.size(); ++x) {
            std::vector<int> imgs;
            for (size_t i = 0; i < ji.size(); ++i)
                if (Q.lat.leq(ji[i], x)) imgs.push_back(assign[i]);
            h[static_cast<size_t>(x)] = R.lat.join(imgs);
        }
        if (is_quantale_hom(Q, R, h) &&
            std::find(out.begin(), out.end(), h) == out.end())
            out.push_back(h);
        size_t k = assign.size();
        while (k > 0 && ++assign[k - 1] == R.size()) assign[--k] = 0;
        if (k == 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace deductio

#endif
