#ifndef DEDUCTIO_TRANSLATION_HPP
#define DEDUCTIO_TRANSLATION_HPP

#include <functional>
#include <optional>

#include "sequent.hpp"

namespace deductio {

/// A language translation: one template formula per source connective, written
/// in the formal variables x1..xn for an n-ary connective. Translation of a
/// formula replaces every connective by its template, leaving variables fixed.
struct Translation {
    std::string name;
    Language source;
    Language target;
    std::map<std::string, Formula> templates;

    const Formula& template_for(const std::string& conn) const {
        auto it = templates.find(conn);
        if (it == templates.end()) throw error("translation has no template for: " + conn);
        return it->second;
    }
};

enum class ValidationMode { strict, lax };

struct ValidationIssue {
    std::string subject; // offending connective or clause
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
    std::string summary() const {
        std::string out;
        for (const auto& i : issues) out += i.subject + ": " + i.message + "\n";
        return out;
    }
};

/// Checks the translation invariants. Strict mode additionally requires each
/// template to contain every formal variable x1..xn at least once; lax mode
/// only requires templates to stay inside x1..xn.
inline ValidationReport validate_translation(const Translation& t,
                                             ValidationMode mode = ValidationMode::strict) {
    ValidationReport rep;
    auto issue = [&](const std::string& subj, const std::string& msg) {
        rep.issues.push_back({subj, msg});
    };
    for (const auto& [conn, arity] : t.source.connectives) {
        auto it = t.templates.find(conn);
        if (it == t.templates.end()) {
            issue(conn, "missing template");
            continue;
        }
        const Formula& tpl = it->second;
        if (!tpl.well_formed(t.target))
            issue(conn, "template is not a well-formed target formula");
        if (tpl.is_variable()) {
            issue(conn, "template is a bare variable (breaks preimage-of-variable "
                        "condition)");
            continue;
        }
        std::set<int> vars = tpl.variables();
        if (arity == 0) {
            if (!vars.empty())
                issue(conn, "template for a constant must contain no variables");
            continue;
        }
        for (int v : vars)
            if (v > arity) {
                issue(conn, "template uses x" + std::to_string(v) +
                            " beyond the connective arity " + std::to_string(arity));
                break;
            }
        if (mode == ValidationMode::strict) {
            for (int v = 1; v <= arity; ++v)
                if (!vars.count(v)) {
                    issue(conn, "template does not mention x" + std::to_string(v) +
                                " (strict mode)");
                    break;
                }
        }
    }
    for (const auto& [conn, tpl] : t.templates)
        if (!t.source.has(conn)) issue(conn, "template for unknown source connective");
    return rep;
}

/// Homomorphic image of a formula: variables are fixed, each connective unfolds
/// into its template.
inline Formula translate(const Translation& t, const Formula& f) {
    if (f.is_variable()) return f;
    std::map<int, Formula> bind;
    const auto& kids = f.children();
    for (size_t i = 0; i < kids.size(); ++i)
        bind[static_cast<int>(i) + 1] = translate(t, kids[i]);
    return Substitution(std::move(bind))(t.template_for(f.conn()));
}

inline Sequent translate(const Translation& t, const Sequent& s) {
    Sequent out;
    for (const auto& f : s.lhs) out.lhs.push_back(translate(t, f));
    for (const auto& f : s.rhs) out.rhs.push_back(translate(t, f));
    return out;
}

/// The induced substitution-monoid homomorphism: tbar(sigma) is the target
/// substitution determined by (translate o sigma) restricted to variables.
inline Substitution induced_hom(const Translation& t, const Substitution& s) {
    Substitution out;
    for (const auto& [v, f] : s.support()) out.set(v, translate(t, f));
    return out;
}

/// translate(sigma(phi)) == induced_hom(sigma)(translate(phi)); holds for
/// every valid translation.
inline bool check_commutation(const Translation& t, const Substitution& s,
                              const Formula& f) {
    return translate(t, s(f)) == induced_hom(t, s)(translate(t, f));
}

struct SurjectivityResult {
    bool onto = false;
    std::map<std::string, std::string> witness; // target connective -> source connective
};

/// Exact-template criterion: every target connective f'/n must be hit by a
/// source template literally of the form f'(x1,...,xn) (for constants: f').
/// Ties break to the lexicographically least source name.
inline SurjectivityResult is_surjective(const Translation& t) {
    SurjectivityResult res;
    res.onto = true;
    for (const auto& [tconn, tarity] : t.target.connectives) {
        std::optional<std::string> found;
        for (const auto& [sconn, sarity] : t.source.connectives) {
            if (sarity != tarity) continue;
            auto it = t.templates.find(sconn);
            if (it == t.templates.end()) continue;
            const Formula& tpl = it->second;
            if (tpl.is_variable() || tpl.conn() != tconn) continue;
            bool exact = static_cast<int>(tpl.children().size()) == tarity;
            for (int i = 0; exact && i < tarity; ++i)
                exact = tpl.children()[static_cast<size_t>(i)].is_variable() &&
                        tpl.children()[static_cast<size_t>(i)].var_index() == i + 1;
            if (exact && (!found || sconn < *found)) found = sconn;
        }
        if (!found) {
            res.onto = false;
            return res;
        }
        res.witness[tconn] = *found;
    }
    return res;
}

/// Right inverse t' with translate(t, translate(t', psi)) == psi for all
/// target formulas. Requires the exact-template surjectivity criterion.
inline Translation right_inverse(const Translation& t) {
    SurjectivityResult s = is_surjective(t);
    if (!s.onto) throw precondition_error("translation is not surjective");
    Translation inv;
    inv.name = t.name + "_rinv";
    inv.source = t.target;
    inv.target = t.source;
    for (const auto& [tconn, sconn] : s.witness) {
        int arity = t.target.arity(tconn);
        std::vector<Formula> vars;
        for (int i = 1; i <= arity; ++i) vars.push_back(Formula::variable(i));
        inv.templates[tconn] = Formula::apply(sconn, std::move(vars));
    }
    return inv;
}

/// Queryable substitution-monoid homomorphism. Queries must be idempotent in
/// the caching sense: equal inputs yield equal outputs.
using SubstitutionHomOracle = std::function<Substitution(const Substitution&)>;

inline SubstitutionHomOracle oracle_of(const Translation& t) {
    return [t](const Substitution& s) { return induced_hom(t, s); };
}

struct ReconstructionResult {
    std::map<Formula, Formula> images;   // queried formula -> reconstructed image
    std::vector<std::string> inconsistencies;
    bool consistent() const { return inconsistencies.empty(); }
};

/// Rebuilds a translation from a substitution-monoid homomorphism oracle: the
/// image of phi is h(sigma_phi)(x1) where sigma_phi sends x1 to phi. Two
/// different sigma_phi choices must agree; disagreement flags an oracle that
/// does not factor through a translation.
inline ReconstructionResult reconstruct_translation(const SubstitutionHomOracle& h,
                                                    const std::vector<Formula>& queries) {
    ReconstructionResult res;
    for (const Formula& phi : queries) {
        Substitution primary;
        primary.set(1, phi);
        Formula image = h(primary)(1);

        Substitution alt;            // also sends x1 to phi, differs off x1
        alt.set(1, phi);
        alt.set(2, phi);
        Formula image2 = h(alt)(1);
        if (!(image == image2)) {
            res.inconsistencies.push_back(
                "h(sigma_phi)(x1) differs across sigma_phi choices for phi = " +
                print_formula(phi) + ": " + print_formula(image) + " vs " +
                print_formula(image2));
        }
        res.images.emplace(phi, image);
    }
    return res;
}

struct TranscharReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Sampled necessary conditions for h to be induced by a translation:
/// (i) preimages of idempotents contain only idempotents, (ii) h fixes the
/// variable renamings pointwise. Idempotency is judged on the window x1..xW.
inline TranscharReport check_transchar_conditions(const SubstitutionHomOracle& h,
                                                  const std::vector<Substitution>& sample,
                                                  int window = caps().idem_window) {
    TranscharReport rep;
    for (const Substitution& s : sample) {
        Substitution hs = h(s);
        if (is_idempotent_on_window(hs, window) && !is_idempotent_on_window(s, window)) {
            rep.violations.push_back(
                "(i) non-idempotent " + print_substitution(s) +
                " maps to idempotent " + print_substitution(hs));
        }
        if (is_variable_renaming(s) && !(hs == s)) {
            rep.violations.push_back(
                "(ii) renaming " + print_substitution(s) + " maps to " +
                print_substitution(hs) + " instead of itself");
        }
    }
    return rep;
}

} // namespace deductio

#endif
