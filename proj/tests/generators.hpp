#ifndef DEDUCTIO_TEST_GENERATORS_HPP
#define DEDUCTIO_TEST_GENERATORS_HPP

#include <random>

#include "deductio/substitution.hpp"

namespace deductio::testgen {

inline Language unary_lang() { return {"ul", {{"f", 1}}}; }

inline Language prop_lang() {
    return {"prop", {{"and", 2}, {"or", 2}, {"imp", 2}, {"not", 1}}};
}

inline Formula random_formula(std::mt19937_64& rng, const Language& lang, int max_depth,
                              int max_var = 4) {
    std::vector<std::pair<std::string, int>> conns(lang.connectives.begin(),
                                                   lang.connectives.end());
    std::uniform_int_distribution<int> var_dist(1, max_var);
    if (max_depth == 0 || std::uniform_int_distribution<int>(0, 2)(rng) == 0)
        return Formula::variable(var_dist(rng));
    auto& [name, arity] =
        conns[std::uniform_int_distribution<size_t>(0, conns.size() - 1)(rng)];
    std::vector<Formula> children;
    for (int i = 0; i < arity; ++i)
        children.push_back(random_formula(rng, lang, max_depth - 1, max_var));
    return Formula::apply(name, std::move(children));
}

inline Substitution random_substitution(std::mt19937_64& rng, const Language& lang,
                                        int max_depth, int max_var = 4) {
    Substitution s;
    std::uniform_int_distribution<int> coin(0, 1);
    for (int v = 1; v <= max_var; ++v)
        if (coin(rng)) s.set(v, random_formula(rng, lang, max_depth, max_var));
    return s;
}

/// Every substitution with support inside {x1..max_var} and images drawn from
/// the given formula list.
inline std::vector<Substitution> all_substitutions(const std::vector<Formula>& images,
                                                   int max_var) {
    std::vector<Substitution> out;
    std::vector<size_t> idx(static_cast<size_t>(max_var), 0);
    while (true) {
        Substitution s;
        for (int v = 1; v <= max_var; ++v)
            s.set(v, images[idx[static_cast<size_t>(v - 1)]]);
        out.push_back(s);
        size_t k = idx.size();
        while (k > 0 && ++idx[k - 1] == images.size()) idx[--k] = 0;
        if (k == 0) break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace deductio::testgen

#endif
