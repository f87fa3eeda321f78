#ifndef DEDUCTIO_FORMULA_HPP
#define DEDUCTIO_FORMULA_HPP

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "core.hpp"

namespace deductio {

/// A propositional language: finitely many named connectives with arities.
/// Arity 0 connectives are constants. Variables x1, x2, ... live outside the
/// connective namespace (names matching x[1-9][0-9]* are rejected).
struct Language {
    std::string name;
    std::map<std::string, int> connectives;

    int arity(const std::string& conn) const {
        auto it = connectives.find(conn);
        if (it == connectives.end()) throw error("unknown connective: " + conn);
        return it->second;
    }
    bool has(const std::string& conn) const { return connectives.count(conn) != 0; }
};

inline bool is_variable_name(std::string_view s) {
    if (s.size() < 2 || s[0] != 'x' || s[1] == '0') return false;
    for (size_t i = 1; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

inline bool is_connective_name(std::string_view s) {
    if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s)
        if (!std::islower(static_cast<unsigned char>(c)) &&
            !std::isdigit(static_cast<unsigned char>(c)) && c != '_')
            return false;
    return !is_variable_name(s);
}

/// Immutable term tree. A node is either a variable (positive index) or an
/// application of a connective to child formulas. Shared subtrees make copies
/// cheap; structural hash is cached at construction.
class Formula {
    struct Node {
        std::string conn;             // empty for variables
        int var = 0;                  // variable index, 0 for applications
        std::vector<Formula> children;
        int depth = 0;
        size_t hash = 0;
    };
    std::shared_ptr<const Node> node_;

    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    static size_t mix(size_t h, size_t v) {
        return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }

public:
    Formula() = default;   // empty handle; only produced by default construction

    static Formula variable(int index) {
        if (index <= 0) throw error("variable index must be positive");
        auto n = std::make_shared<Node>();
        n->var = index;
        n->hash = mix(0x517cc1b7, static_cast<size_t>(index));
        return Formula(std::move(n));
    }

    static Formula apply(std::string conn, std::vector<Formula> children) {
        auto n = std::make_shared<Node>();
        size_t h = mix(0x2545f491, std::hash<std::string>{}(conn));
        int d = 0;
        for (const auto& c : children) {
            h = mix(h, c.hash());
            d = std::max(d, c.depth() + 1);
        }
        n->conn = std::move(conn);
        n->children = std::move(children);
        n->depth = d;
        n->hash = h;
        return Formula(std::move(n));
    }

    /// Well-formedness check against a language; throws on arity mismatch or
    /// unknown connective.
    static Formula apply_checked(const Language& lang, const std::string& conn,
                                 std::vector<Formula> children) {
        int a = lang.arity(conn);
        if (a != static_cast<int>(children.size()))
            throw error("arity mismatch: " + conn + " expects " + std::to_string(a) +
                        " arguments, got " + std::to_string(children.size()));
        return apply(conn, std::move(children));
    }

    bool valid() const { return node_ != nullptr; }
    bool is_variable() const { return node_ && node_->var > 0; }
    bool is_application() const { return node_ && node_->var == 0; }
    int var_index() const { return node_->var; }
    const std::string& conn() const { return node_->conn; }
    const std::vector<Formula>& children() const { return node_->children; }
    int depth() const { return node_->depth; }
    size_t hash() const { return node_ ? node_->hash : 0; }

    bool well_formed(const Language& lang) const {
        if (is_variable()) return true;
        if (!lang.has(conn()) || lang.arity(conn()) != static_cast<int>(children().size()))
            return false;
        return std::all_of(children().begin(), children().end(),
                           [&](const Formula& c) { return c.well_formed(lang); });
    }

    void collect_variables(std::set<int>& out) const {
        if (is_variable()) { out.insert(var_index()); return; }
        for (const auto& c : children()) c.collect_variables(out);
    }
    std::set<int> variables() const {
        std::set<int> out;
        collect_variables(out);
        return out;
    }

    int connective_count() const {
        if (is_variable()) return 0;
        int n = 1;
        for (const auto& c : children()) n += c.connective_count();
        return n;
    }

    friend bool operator==(const Formula& a, const Formula& b) {
        if (a.node_ == b.node_) return true;
        if (!a.node_ || !b.node_) return false;
        if (a.hash() != b.hash()) return false;
        if (a.node_->var != b.node_->var || a.node_->conn != b.node_->conn ||
            a.node_->children.size() != b.node_->children.size())
            return false;
        for (size_t i = 0; i < a.node_->children.size(); ++i)
            if (!(a.node_->children[i] == b.node_->children[i])) return false;
        return true;
    }
    friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

    /// Canonical total order: by depth, then variables before applications,
    /// then variable index / connective name / children lexicographically.
    friend int compare(const Formula& a, const Formula& b) {
        if (a.depth() != b.depth()) return a.depth() < b.depth() ? -1 : 1;
        if (a.is_variable() != b.is_variable()) return a.is_variable() ? -1 : 1;
        if (a.is_variable()) {
            if (a.var_index() != b.var_index()) return a.var_index() < b.var_index() ? -1 : 1;
            return 0;
        }
        if (int c = a.conn().compare(b.conn()); c != 0) return c < 0 ? -1 : 1;
        if (a.children().size() != b.children().size())
            return a.children().size() < b.children().size() ? -1 : 1;
        for (size_t i = 0; i < a.children().size(); ++i)
            if (int c = compare(a.children()[i], b.children()[i]); c != 0) return c;
        return 0;
    }
    friend bool operator<(const Formula& a, const Formula& b) { return compare(a, b) < 0; }
};

struct FormulaHash {
    size_t operator()(const Formula& f) const { return f.hash(); }
};

inline void print_formula_to(std::string& out, const Formula& f) {
    if (f.is_variable()) {
        out += 'x';
        out += std::to_string(f.var_index());
        return;
    }
    out += f.conn();
    if (!f.children().empty()) {
        out += '(';
        for (size_t i = 0; i < f.children().size(); ++i) {
            if (i) out += ',';
            print_formula_to(out, f.children()[i]);
        }
        out += ')';
    }
}

inline std::string print_formula(const Formula& f) {
    std::string out;
    print_formula_to(out, f);
    return out;
}

namespace detail {

struct FormulaParser {
    const Language& lang;
    std::string_view text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw parse_error(msg + " at offset " + std::to_string(pos) + " in '" +
                          std::string(text) + "'");
    }
    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (start == pos) fail("expected identifier");
        return std::string(text.substr(start, pos - start));
    }

    Formula formula() {
        std::string name = ident();
        if (is_variable_name(name))
            return Formula::variable(std::stoi(name.substr(1)));
        if (!lang.has(name)) fail("unknown connective '" + name + "'");
        int arity = lang.arity(name);
        std::vector<Formula> children;
        skip_ws();
        if (pos < text.size() && text[pos] == '(') {
            ++pos;
            while (true) {
                children.push_back(formula());
                skip_ws();
                if (pos >= text.size()) fail("unterminated argument list");
                if (text[pos] == ',') { ++pos; continue; }
                if (text[pos] == ')') { ++pos; break; }
                fail("expected ',' or ')'");
            }
        }
        if (static_cast<int>(children.size()) != arity)
            fail("arity mismatch: '" + name + "' expects " + std::to_string(arity) +
                 " arguments, got " + std::to_string(children.size()));
        return Formula::apply(name, std::move(children));
    }
};

} // namespace detail

/// Parse the prefix grammar: formula := var | const | conn '(' formula (',' formula)* ')'.
inline Formula parse_formula(const Language& lang, std::string_view text) {
    detail::FormulaParser p{lang, text};
    Formula f = p.formula();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return f;
}

/// All well-formed formulas of tree depth <= depth over the given variables,
/// in canonical order. Guards against combinatorial blowup via cap.
inline std::vector<Formula> generate_formulas(const Language& lang,
                                              const std::set<int>& vars, int depth,
                                              int cap = caps().formulas) {
    if (depth < 0) throw error("depth must be >= 0");
    std::vector<Formula> layer; // depth <= d, canonically sorted
    for (int v : vars) layer.push_back(Formula::variable(v));
    for (const auto& [name, arity] : lang.connectives)
        if (arity == 0) layer.push_back(Formula::apply(name, {}));
    std::sort(layer.begin(), layer.end());
    for (int d = 1; d <= depth && !layer.empty(); ++d) {
        std::vector<Formula> next = layer;
        for (const auto& [name, arity] : lang.connectives) {
            if (arity == 0) continue;
            std::vector<size_t> idx(static_cast<size_t>(arity), 0);
            while (true) {
                std::vector<Formula> children;
                children.reserve(idx.size());
                int maxd = -1;
                for (size_t i : idx) {
                    children.push_back(layer[i]);
                    maxd = std::max(maxd, layer[i].depth());
                }
                if (maxd == d - 1) { // exactly-depth-d applications only; rest already present
                    next.push_back(Formula::apply(name, std::move(children)));
                    if (static_cast<int>(next.size()) > cap)
                        throw cap_exceeded("generate_formulas: more than " +
                                           std::to_string(cap) + " formulas");
                }
                size_t k = idx.size();
                while (k > 0 && ++idx[k - 1] == layer.size()) idx[--k] = 0;
                if (k == 0) break;
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        layer = std::move(next);
    }
    return layer;
}

} // namespace deductio

#endif
