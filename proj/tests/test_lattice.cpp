#include <catch2/catch_amalgamated.hpp>

#include "deductio/lattice.hpp"

using namespace deductio;

namespace {

// all join-preserving tables src -> tgt by brute force
std::vector<Map> all_join_maps(const FiniteSupLattice& src, const FiniteSupLattice& tgt) {
    std::vector<Map> out;
    Map f(static_cast<size_t>(src.n), 0);
    while (true) {
        if (preserves_joins(src, tgt, f)) out.push_back(f);
        size_t k = f.size();
        while (k > 0 && ++f[k - 1] == tgt.n) f[--k] = 0;
        if (k == 0) break;
    }
    return out;
}

// all closure operators on L, enumerated through meet-closed families
// containing top
std::vector<Map> all_closure_ops(const FiniteSupLattice& L) {
    std::vector<Map> out;
    int top = L.top();
    for (unsigned long fam = 0; fam < (1ul << L.n); ++fam) {
        if (!(fam & (1ul << top))) continue;
        bool meet_closed = true;
        for (int a = 0; a < L.n && meet_closed; ++a)
            for (int b = 0; b < L.n && meet_closed; ++b)
                if ((fam & (1ul << a)) && (fam & (1ul << b)) &&
                    !(fam & (1ul << L.meet2(a, b))))
                    meet_closed = false;
        if (!meet_closed) continue;
        Map table(static_cast<size_t>(L.n));
        for (int x = 0; x < L.n; ++x) {
            int best = -1;
            for (int c = 0; c < L.n; ++c)
                if ((fam & (1ul << c)) && L.leq(x, c) && (best < 0 || L.leq(c, best)))
                    best = c;
            table[static_cast<size_t>(x)] = best;
        }
        out.push_back(table);
    }
    return out;
}

} // namespace

TEST_CASE("lattice construction validates order and joins") {
    // 2-element antichain: no joins
    REQUIRE_THROWS_AS(FiniteSupLattice(2, {1, 0, 0, 1}), error);
    // not antisymmetric
    REQUIRE_THROWS_AS(FiniteSupLattice(2, {1, 1, 1, 1}), error);
    FiniteSupLattice chain = chain_lattice(3);
    REQUIRE(chain.bottom() == 0);
    REQUIRE(chain.top() == 2);
    REQUIRE(chain.join2(0, 2) == 2);
    REQUIRE(chain.meet2(1, 2) == 1);
    REQUIRE(chain.join_irreducibles() == std::vector<int>{1, 2});
}

TEST_CASE("residual of the 3-chain example") {
    FiniteSupLattice chain = chain_lattice(3); // 0 < m=1 < top=2
    SECTION("identity") {
        ResiduatedMap f(chain, chain, identity_map(3));
        REQUIRE(residual(f) == identity_map(3));
    }
    SECTION("the map (0,m,1) -> (0,0,m)") {
        ResiduatedMap f(chain, chain, {0, 0, 1});
        REQUIRE(residual(f) == Map{1, 2, 2}); // (0 -> m, m -> top, top -> top)
    }
    SECTION("constant bottom has constant-top residual") {
        ResiduatedMap f(chain, chain, {0, 0, 0});
        REQUIRE(residual(f) == Map{2, 2, 2});
    }
    SECTION("non-join-preserving rejected") {
        REQUIRE_THROWS_AS(ResiduatedMap(chain, chain, {1, 1, 2}), precondition_error);
    }
}

TEST_CASE("adjunction holds for every join-preserving map on small fixtures") {
    std::vector<FiniteSupLattice> fixtures = {chain_lattice(2), chain_lattice(3),
                                              free_suplattice(2).lattice};
    for (const auto& src : fixtures)
        for (const auto& tgt : fixtures)
            for (const Map& table : all_join_maps(src, tgt)) {
                ResiduatedMap f(src, tgt, table);
                Map r = residual(f);
                for (int x = 0; x < src.n; ++x)
                    for (int y = 0; y < tgt.n; ++y)
                        REQUIRE(tgt.leq(f(x), y) == src.leq(x, apply_map(r, y)));
            }
}

TEST_CASE("closure_from_adjoint") {
    FiniteSupLattice chain = chain_lattice(3);
    SECTION("identity gives identity") {
        ClosureOp g = closure_from_adjoint(ResiduatedMap(chain, chain, identity_map(3)));
        REQUIRE(g.table == identity_map(3));
    }
    SECTION("3-chain example composes to (m,m,top)") {
        ClosureOp g = closure_from_adjoint(ResiduatedMap(chain, chain, {0, 0, 1}));
        REQUIRE(g.table == Map{1, 1, 2});
    }
    SECTION("surjective maps satisfy f o f_* = id on the target") {
        std::vector<FiniteSupLattice> fixtures = {chain_lattice(2), chain_lattice(3),
                                                  free_suplattice(2).lattice};
        for (const auto& src : fixtures)
            for (const auto& tgt : fixtures)
                for (const Map& table : all_join_maps(src, tgt)) {
                    std::vector<char> hit(static_cast<size_t>(tgt.n), 0);
                    for (int x = 0; x < src.n; ++x)
                        hit[static_cast<size_t>(apply_map(table, x))] = 1;
                    if (std::find(hit.begin(), hit.end(), 0) != hit.end()) continue;
                    ResiduatedMap f(src, tgt, table);
                    Map r = residual(f);
                    for (int y = 0; y < tgt.n; ++y)
                        REQUIRE(f(apply_map(r, y)) == y);
                }
    }
}

TEST_CASE("binary-join criterion matches the all-subsets criterion") {
    FiniteSupLattice chain = chain_lattice(3);
    Map f(3);
    for (f[0] = 0; f[0] < 3; ++f[0])
        for (f[1] = 0; f[1] < 3; ++f[1])
            for (f[2] = 0; f[2] < 3; ++f[2])
                REQUIRE(preserves_joins(chain, chain, f) ==
                        preserves_all_joins_bruteforce(chain, chain, f));
}

TEST_CASE("free sup-lattice") {
    SECTION("empty set gives the one-element lattice") {
        REQUIRE(free_suplattice(0).lattice.n == 1);
    }
    SECTION("two generators give the four-element Boolean lattice") {
        FreeSupLattice fl = free_suplattice(2);
        REQUIRE(fl.lattice.n == 4);
        REQUIRE(fl.lattice.join2(fl.singleton(0), fl.singleton(1)) == fl.lattice.top());
        REQUIRE(fl.lattice.meet2(fl.singleton(0), fl.singleton(1)) ==
                fl.lattice.bottom());
    }
    SECTION("every map of generators has exactly one join-preserving extension") {
        FreeSupLattice fl = free_suplattice(2);
        FiniteSupLattice chain = chain_lattice(3);
        auto maps = all_join_maps(fl.lattice, chain);
        // group by restriction to the two singletons
        std::map<std::pair<int, int>, int> count;
        for (const Map& g : maps)
            ++count[{apply_map(g, fl.singleton(0)), apply_map(g, fl.singleton(1))}];
        REQUIRE(maps.size() == 9);
        for (const auto& [key, c] : count) REQUIRE(c == 1);
    }
    SECTION("cap guard") { REQUIRE_THROWS_AS(free_suplattice(21), cap_exceeded); }
}

TEST_CASE("congruence closure") {
    FreeSupLattice fl = free_suplattice(2); // {0, s0, s1, s0+s1}
    const FiniteSupLattice& B2 = fl.lattice;

    SECTION("no pairs gives the identity closure") {
        CongruenceResult r = congruence_closure(B2, {});
        REQUIRE(r.closure.table == identity_map(4));
        REQUIRE(r.quotient.n == 4);
    }
    SECTION("collapsing a singleton onto bottom halves the lattice") {
        CongruenceResult r = congruence_closure(B2, {{fl.singleton(0), B2.bottom()}});
        REQUIRE(r.quotient.n == 2);
        // closed elements are exactly those containing s0
        REQUIRE(r.closed == std::vector<int>{fl.singleton(0), B2.top()});
    }
    SECTION("projection preserves joins, closed set is meet-closed with top") {
        std::vector<std::vector<std::pair<int, int>>> pair_sets = {
            {}, {{1, 0}}, {{1, 2}}, {{3, 0}}, {{1, 0}, {2, 0}}};
        for (const auto& pairs : pair_sets) {
            CongruenceResult r = congruence_closure(B2, pairs);
            REQUIRE(preserves_joins(B2, r.quotient, r.projection));
            const auto& cl = r.closed;
            REQUIRE(std::find(cl.begin(), cl.end(), B2.top()) != cl.end());
            for (int a : cl)
                for (int b : cl)
                    REQUIRE(std::find(cl.begin(), cl.end(), B2.meet2(a, b)) != cl.end());
        }
    }
    SECTION("least among closures identifying the pairs, lattices up to 5 elements") {
        std::vector<FiniteSupLattice> fixtures = {chain_lattice(4), free_suplattice(2).lattice};
        // 5-element: B2 with a new top above it
        {
            int n = 5;
            std::vector<char> leq(25, 0);
            auto set = [&](int a, int b) { leq[static_cast<size_t>(a) * 5 + b] = 1; };
            for (int a = 0; a < n; ++a) set(a, a);
            set(0, 1); set(0, 2); set(0, 3); set(0, 4);
            set(1, 3); set(2, 3); set(1, 4); set(2, 4); set(3, 4);
            fixtures.push_back(FiniteSupLattice(5, leq));
        }
        for (const auto& L : fixtures) {
            std::vector<std::vector<std::pair<int, int>>> pair_sets = {
                {{1, 0}}, {{L.top(), 0}}, {{1, 2}}, {{1, 0}, {L.top(), 2}}};
            auto closures = all_closure_ops(L);
            for (const auto& pairs : pair_sets) {
                CongruenceResult r = congruence_closure(L, pairs);
                for (const auto& [a, b] : pairs)
                    REQUIRE(r.closure(a) == r.closure(b));
                for (const Map& delta : closures) {
                    bool identifies = true;
                    for (const auto& [a, b] : pairs)
                        if (apply_map(delta, a) != apply_map(delta, b)) identifies = false;
                    if (!identifies) continue;
                    for (int x = 0; x < L.n; ++x)
                        REQUIRE(L.leq(r.closure(x), apply_map(delta, x)));
                }
            }
        }
    }
}
