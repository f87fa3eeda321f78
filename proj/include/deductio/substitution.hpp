#ifndef DEDUCTIO_SUBSTITUTION_HPP
#define DEDUCTIO_SUBSTITUTION_HPP

#include <map>
#include <string>

#include "formula.hpp"

namespace deductio {

/// A substitution: finite-support map variable-index -> Formula, identity
/// outside the support. Entries mapping a variable to itself are normalized
/// away, so structural equality is extensional equality.
class Substitution {
    std::map<int, Formula> map_;

public:
    Substitution() = default;
    explicit Substitution(std::map<int, Formula> entries) {
        for (auto& [v, f] : entries) set(v, f);
    }

    void set(int var, const Formula& image) {
        if (var <= 0) throw error("variable index must be positive");
        if (image.is_variable() && image.var_index() == var)
            map_.erase(var);
        else
            map_[var] = image;
    }

    static Substitution identity() { return Substitution(); }
    bool is_identity() const { return map_.empty(); }
    const std::map<int, Formula>& support() const { return map_; }

    Formula operator()(int var) const {
        auto it = map_.find(var);
        return it == map_.end() ? Formula::variable(var) : it->second;
    }

    Formula operator()(const Formula& f) const {
        if (f.is_variable()) return (*this)(f.var_index());
        if (map_.empty()) return f;
        std::vector<Formula> children;
        children.reserve(f.children().size());
        bool changed = false;
        for (const auto& c : f.children()) {
            children.push_back((*this)(c));
            changed = changed || !(children.back() == c);
        }
        return changed ? Formula::apply(f.conn(), std::move(children)) : f;
    }

    friend bool operator==(const Substitution& a, const Substitution& b) {
        return a.map_ == b.map_;
    }
    friend bool operator!=(const Substitution& a, const Substitution& b) {
        return !(a == b);
    }
    friend bool operator<(const Substitution& a, const Substitution& b) {
        return std::lexicographical_compare(
            a.map_.begin(), a.map_.end(), b.map_.begin(), b.map_.end(),
            [](const auto& x, const auto& y) {
                if (x.first != y.first) return x.first < y.first;
                return compare(x.second, y.second) < 0;
            });
    }
};

/// (s2 o s1)(x) = s2(s1(x)); support is contained in the union of supports.
inline Substitution compose(const Substitution& s2, const Substitution& s1) {
    Substitution out;
    for (const auto& [v, f] : s1.support()) out.set(v, s2(f));
    for (const auto& [v, f] : s2.support())
        if (!s1.support().count(v)) out.set(v, f);
    return out;
}

/// Member of the submonoid V: every variable maps to a variable.
inline bool is_variable_renaming(const Substitution& s) {
    for (const auto& [v, f] : s.support())
        if (!f.is_variable()) return false;
    return true;
}

/// sigma o sigma agrees with sigma on the window x1..xW (and on the support).
/// Full idempotency is not finitely decidable; W defaults to caps().idem_window.
inline bool is_idempotent_on_window(const Substitution& s, int window = caps().idem_window) {
    int upper = window;
    if (!s.support().empty()) upper = std::max(upper, s.support().rbegin()->first);
    for (int v = 1; v <= upper; ++v)
        if (!(s(s(v)) == s(v))) return false;
    return true;
}

inline std::string print_substitution(const Substitution& s) {
    std::string out = "{";
    bool first = true;
    for (const auto& [v, f] : s.support()) {
        if (!first) out += ", ";
        first = false;
        out += "x" + std::to_string(v) + " -> " + print_formula(f);
    }
    return out + "}";
}

} // namespace deductio

#endif
