#ifndef DEDUCTIO_SEQUENT_HPP
#define DEDUCTIO_SEQUENT_HPP

#include <utility>
#include <vector>

#include "substitution.hpp"

namespace deductio {

/// Sequent type (m, n): m formulas on the left, n on the right; not both zero.
using SequentType = std::pair<int, int>;

/// A sequent over a language. A (0,1)-sequent is identified with its formula,
/// a (1,1)-sequent with an equation.
struct Sequent {
    std::vector<Formula> lhs, rhs;

    Sequent() = default;
    Sequent(std::vector<Formula> l, std::vector<Formula> r)
        : lhs(std::move(l)), rhs(std::move(r)) {
        if (lhs.empty() && rhs.empty()) throw error("sequent type (0,0) is not allowed");
    }
    /// The (0,1)-sequent of a single formula.
    explicit Sequent(Formula f) : rhs{std::move(f)} {}

    SequentType type() const {
        return {static_cast<int>(lhs.size()), static_cast<int>(rhs.size())};
    }
    bool is_formula() const { return lhs.empty() && rhs.size() == 1; }
    const Formula& formula() const { return rhs.front(); }

    bool well_formed(const Language& lang) const {
        for (const auto& f : lhs) if (!f.well_formed(lang)) return false;
        for (const auto& f : rhs) if (!f.well_formed(lang)) return false;
        return true;
    }

    std::set<int> variables() const {
        std::set<int> out;
        for (const auto& f : lhs) f.collect_variables(out);
        for (const auto& f : rhs) f.collect_variables(out);
        return out;
    }

    size_t hash() const {
        size_t h = 0x7e1ec41d + lhs.size() * 31;
        for (const auto& f : lhs) h = h * 1000003 ^ f.hash();
        for (const auto& f : rhs) h = h * 998244353 ^ f.hash();
        return h;
    }

    friend bool operator==(const Sequent& a, const Sequent& b) {
        return a.lhs == b.lhs && a.rhs == b.rhs;
    }
    friend bool operator!=(const Sequent& a, const Sequent& b) { return !(a == b); }
    friend int compare(const Sequent& a, const Sequent& b) {
        if (a.type() != b.type()) return a.type() < b.type() ? -1 : 1;
        for (size_t i = 0; i < a.lhs.size(); ++i)
            if (int c = compare(a.lhs[i], b.lhs[i]); c != 0) return c;
        for (size_t i = 0; i < a.rhs.size(); ++i)
            if (int c = compare(a.rhs[i], b.rhs[i]); c != 0) return c;
        return 0;
    }
    friend bool operator<(const Sequent& a, const Sequent& b) { return compare(a, b) < 0; }
};

struct SequentHash {
    size_t operator()(const Sequent& s) const { return s.hash(); }
};

/// Pointwise action of a substitution on a sequent.
inline Sequent apply(const Substitution& s, const Sequent& seq) {
    Sequent out;
    out.lhs.reserve(seq.lhs.size());
    out.rhs.reserve(seq.rhs.size());
    for (const auto& f : seq.lhs) out.lhs.push_back(s(f));
    for (const auto& f : seq.rhs) out.rhs.push_back(s(f));
    return out;
}

inline std::string print_sequent(const Sequent& s) {
    if (s.is_formula()) return print_formula(s.formula());
    std::string out;
    for (size_t i = 0; i < s.lhs.size(); ++i) {
        if (i) out += ", ";
        out += print_formula(s.lhs[i]);
    }
    out += " => ";
    for (size_t i = 0; i < s.rhs.size(); ++i) {
        if (i) out += ", ";
        out += print_formula(s.rhs[i]);
    }
    return out;
}

} // namespace deductio

#endif
