#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "cubenerve/nu.hpp"

using namespace cubenerve;

namespace {

const sign MINUS = sign::minus;
const sign PLUS = sign::plus;

chain parse_sum(int n, const std::vector<std::pair<std::string, long long>>& ts) {
    chain c(n);
    for (const auto& [w, k] : ts) c.add(basis_element(w), k);
    return c;
}

chain unit(const std::string& w) { return chain::unit(basis_element(w)); }

double_sequence seq(complex_id k,
                    std::vector<std::pair<chain, chain>> levels) {
    return double_sequence(k, std::move(levels));
}

// A pool of elements of nu I^n built from atoms, faces, and composites:
// deterministic, reasonably varied, all valid by construction.
std::vector<double_sequence> element_pool(int n, std::size_t cap) {
    std::vector<double_sequence> pool;
    std::set<std::string> seen;
    auto push = [&](const double_sequence& x) {
        if (pool.size() < cap && seen.insert(format_sequence(x)).second)
            pool.push_back(x);
    };
    for (const auto& b : all_basis_elements(n)) push(atom(b));
    std::size_t atoms = pool.size();
    for (std::size_t i = 0; i < atoms; ++i)
        for (int p = 0; p < n; ++p)
            for (sign a : {MINUS, PLUS}) push(d(p, a, pool[i]));
    std::size_t base = pool.size();
    for (std::size_t i = 0; i < base; ++i)
        for (std::size_t j = 0; j < base; ++j)
            for (int p = 0; p < n; ++p)
                if (composable(p, pool[i], pool[j]))
                    push(comp(p, pool[i], pool[j]));
    return pool;
}

} // namespace

TEST_CASE("the atom of the 3-cube, level by level") {
    double_sequence u3 = atom(basis_element("***"));
    CHECK(u3.ambient() == 3);
    CHECK(u3.complex() == complex_id::cube(3));
    CHECK(u3.dimension() == 3);
    CHECK(u3.level(0, MINUS) == unit("---"));
    CHECK(u3.level(0, PLUS) == unit("+++"));
    CHECK(u3.level(1, MINUS) ==
          parse_sum(3, {{"--*", 1}, {"-*+", 1}, {"*++", 1}}));
    CHECK(u3.level(1, PLUS) ==
          parse_sum(3, {{"*--", 1}, {"+*-", 1}, {"++*", 1}}));
    CHECK(u3.level(2, MINUS) ==
          parse_sum(3, {{"-**", 1}, {"*+*", 1}, {"**-", 1}}));
    CHECK(u3.level(2, PLUS) ==
          parse_sum(3, {{"**+", 1}, {"*-*", 1}, {"+**", 1}}));
    CHECK(u3.level(3, MINUS) == unit("***"));
    CHECK(u3.level(3, PLUS) == unit("***"));
}

TEST_CASE("atoms of lower cubes and of non-top elements") {
    double_sequence pt = atom(basis_element(""));
    CHECK(pt.ambient() == 0);
    CHECK(pt.level(0, MINUS) == unit(""));

    double_sequence u1 = atom(basis_element("*"));
    CHECK(u1.level(0, MINUS) == unit("-"));
    CHECK(u1.level(0, PLUS) == unit("+"));
    CHECK(u1.level(1, MINUS) == unit("*"));

    double_sequence u2 = atom(basis_element("**"));
    CHECK(u2.level(1, MINUS) == parse_sum(2, {{"-*", 1}, {"*+", 1}}));
    CHECK(u2.level(1, PLUS) == parse_sum(2, {{"*-", 1}, {"+*", 1}}));

    // An edge inside the square: levels above its degree are zero.
    double_sequence e = atom(basis_element("*+"));
    CHECK(e.dimension() == 1);
    CHECK(e.level(0, MINUS) == unit("-+"));
    CHECK(e.level(0, PLUS) == unit("++"));
    CHECK(e.level(1, MINUS) == unit("*+"));
    CHECK(e.level(2, MINUS).is_zero());
    CHECK(e.level(2, PLUS).is_zero());

    // Every atom of the 4-cube is internally consistent: atom() cross
    // checks its two construction routes and validates the result.
    for (int n = 0; n <= 4; ++n)
        for (const auto& b : all_basis_elements(n))
            CHECK(atom(b).dimension() == b.degree());
}

TEST_CASE("atoms commute with face inclusions, level by level") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& b : all_basis_elements(n - 1))
            for (int i = 1; i <= n; ++i)
                for (sign a : {MINUS, PLUS}) {
                    double_sequence big = atom(face_inclusion(i, a, b));
                    double_sequence small = atom(b);
                    for (int q = 0; q <= n - 1; ++q)
                        for (sign g : {MINUS, PLUS})
                            CHECK(big.level(q, g) ==
                                  face_inclusion(i, a, small.level(q, g)));
                    CHECK(big.level(n, MINUS).is_zero());
                }
}

TEST_CASE("double sequence validation rejects broken data") {
    complex_id cube2 = complex_id::cube(2);
    chain zero2(2);

    // The square's atom, assembled by hand: fine.
    CHECK_NOTHROW(seq(cube2, {{unit("--"), unit("++")},
                              {parse_sum(2, {{"-*", 1}, {"*+", 1}}),
                               parse_sum(2, {{"*-", 1}, {"+*", 1}})},
                              {unit("**"), unit("**")}}));

    // Wrong number of levels.
    CHECK_THROWS_AS(seq(cube2, {{unit("--"), unit("--")}}), domain_error);
    // Augmentation of the bottom level must be 1.
    CHECK_THROWS_AS(
        seq(cube2, {{parse_sum(2, {{"--", 2}}), unit("++")},
                    {zero2, zero2}, {zero2, zero2}}),
        domain_error);
    // Negative coefficients are not allowed.
    CHECK_THROWS_AS(
        seq(cube2, {{parse_sum(2, {{"--", 2}, {"-+", -1}}), unit("++")},
                    {zero2, zero2}, {zero2, zero2}}),
        domain_error);
    // Level q must be homogeneous of degree q.
    CHECK_THROWS_AS(seq(cube2, {{unit("--"), unit("--")},
                                {unit("++"), unit("++")},
                                {zero2, zero2}}),
                    domain_error);
    // Boundary relation: del x_{q+1} = x_q^+ - x_q^-.
    CHECK_THROWS_AS(seq(cube2, {{unit("--"), unit("++")},
                                {unit("-*"), unit("-*")},
                                {zero2, zero2}}),
                    domain_error);
    // Top level pair must be equal when the levels above are zero: here
    // level 1 differs but has zero boundary difference target.
    CHECK_THROWS_AS(seq(cube2, {{unit("--"), unit("--")},
                                {zero2, unit("-*")},
                                {zero2, zero2}}),
                    domain_error);
    // Chains must lie in the stated complex: the shell has no "**".
    CHECK_THROWS_AS(seq(complex_id::shell(2),
                        {{unit("--"), unit("++")},
                         {parse_sum(2, {{"-*", 1}, {"*+", 1}}),
                          parse_sum(2, {{"*-", 1}, {"+*", 1}})},
                         {unit("**"), unit("**")}}),
                    domain_error);
}

TEST_CASE("the worked composition in the square") {
    complex_id cube2 = complex_id::cube(2);
    chain zero2(2);
    double_sequence a = seq(cube2, {{unit("--"), unit("-+")},
                                    {unit("-*"), unit("-*")},
                                    {zero2, zero2}});
    double_sequence b = seq(cube2, {{unit("-+"), unit("++")},
                                    {unit("*+"), unit("*+")},
                                    {zero2, zero2}});
    CHECK(a == atom(basis_element("-*")));
    CHECK(b == atom(basis_element("*+")));

    double_sequence corner = seq(cube2, {{unit("-+"), unit("-+")},
                                         {zero2, zero2}, {zero2, zero2}});
    CHECK(d(0, PLUS, a) == corner);
    CHECK(d(0, MINUS, b) == corner);
    CHECK(composable(0, a, b));
    CHECK_FALSE(composable(0, b, a));
    CHECK_THROWS_AS(comp(0, b, a), composability_error);

    chain both = parse_sum(2, {{"-*", 1}, {"*+", 1}});
    double_sequence ab = seq(cube2, {{unit("--"), unit("++")},
                                     {both, both}, {zero2, zero2}});
    CHECK(comp(0, a, b) == ab);
    CHECK(format_sequence(ab) == "(--, ++ | -* + *+, -* + *+ | 0, 0)");
}

TEST_CASE("faces: truncation, levels, and the stabilization rule") {
    double_sequence u3 = atom(basis_element("***"));
    double_sequence f = d(2, MINUS, u3);
    CHECK(f.dimension() == 2);
    CHECK(f.level(2, MINUS) == u3.level(2, MINUS));
    CHECK(f.level(2, PLUS) == u3.level(2, MINUS));
    CHECK(f.level(1, MINUS) == u3.level(1, MINUS));
    CHECK(f.level(3, MINUS).is_zero());
    // p at or above the dimension leaves the element alone.
    CHECK(d(3, MINUS, u3) == u3);
    CHECK(d(7, PLUS, u3) == u3);
    CHECK_THROWS_AS(d(-1, MINUS, u3), domain_error);

    // d_p^a d_q^b = d_q^b when p >= q, and d_p^a otherwise.
    for (const auto& x : element_pool(2, 60))
        for (int p = 0; p <= 2; ++p)
            for (sign pa : {MINUS, PLUS})
                for (int q = 0; q <= 2; ++q)
                    for (sign qa : {MINUS, PLUS}) {
                        double_sequence lhs = d(p, pa, d(q, qa, x));
                        if (p >= q) CHECK(lhs == d(q, qa, x));
                        else CHECK(lhs == d(p, pa, x));
                    }
}

TEST_CASE("identities and units") {
    double_sequence u2 = atom(basis_element("**"));
    CHECK(is_identity_for(2, u2));
    CHECK(is_identity_for(5, u2));
    CHECK_FALSE(is_identity_for(1, u2));
    CHECK_FALSE(is_identity_for(0, u2));

    for (const auto& x : element_pool(2, 60))
        for (int p = 0; p <= 2; ++p) {
            CHECK(is_identity_for(p, x) == (d(p, MINUS, x) == x));
            // Unit laws for composition.
            CHECK(comp(p, d(p, MINUS, x), x) == x);
            CHECK(comp(p, x, d(p, PLUS, x)) == x);
        }
}

TEST_CASE("composition is associative and satisfies interchange") {
    auto pool = element_pool(2, 40);
    for (int p = 0; p <= 1; ++p) {
        for (const auto& x : pool)
            for (const auto& y : pool) {
                if (!composable(p, x, y)) continue;
                double_sequence xy = comp(p, x, y);
                for (const auto& z : pool) {
                    if (composable(p, y, z)) {
                        CHECK(comp(p, xy, z) == comp(p, x, comp(p, y, z)));
                    }
                }
            }
    }
    // Interchange: (x comp_q y) comp_p (z comp_q w) =
    //              (x comp_p z) comp_q (y comp_p w) for p != q.
    int checked = 0;
    for (const auto& x : pool)
        for (const auto& y : pool) {
            if (!composable(1, x, y)) continue;
            for (const auto& z : pool) {
                if (!composable(0, x, z)) continue;
                for (const auto& w : pool) {
                    if (!composable(1, z, w) || !composable(0, y, w))
                        continue;
                    CHECK(comp(0, comp(1, x, y), comp(1, z, w)) ==
                          comp(1, comp(0, x, z), comp(0, y, w)));
                    ++checked;
                }
            }
        }
    CHECK(checked > 0);
}

TEST_CASE("faces of compositions") {
    auto pool = element_pool(2, 40);
    for (int p = 0; p <= 1; ++p)
        for (const auto& x : pool)
            for (const auto& y : pool) {
                if (!composable(p, x, y)) continue;
                double_sequence xy = comp(p, x, y);
                CHECK(d(p, MINUS, xy) == d(p, MINUS, x));
                CHECK(d(p, PLUS, xy) == d(p, PLUS, y));
                for (int r = 0; r <= 2; ++r) {
                    if (r == p) continue;
                    for (sign a : {MINUS, PLUS}) {
                        if (r < p)
                            CHECK(d(r, a, xy) == d(r, a, x));
                        else
                            CHECK(d(r, a, xy) ==
                                  comp(p, d(r, a, x), d(r, a, y)));
                    }
                }
            }
}

TEST_CASE("complex membership and conversion") {
    double_sequence u2 = atom(basis_element("**"));
    CHECK(in_complex(u2, complex_id::cube(2)));
    CHECK_FALSE(in_complex(u2, complex_id::shell(2)));
    double_sequence f = d(1, MINUS, u2);
    CHECK(in_complex(f, complex_id::shell(2)));
    double_sequence fs = with_complex(f, complex_id::shell(2));
    CHECK(fs.complex() == complex_id::shell(2));
    CHECK(same_values(f, fs));
    CHECK(f != fs); // the complex tag is part of the identity
    CHECK_THROWS_AS(with_complex(u2, complex_id::shell(2)), domain_error);
    CHECK(in_complex(f, complex_id::box(basis_element("*-"))));
    CHECK_FALSE(in_complex(f, complex_id::box(basis_element("-*"))));
    CHECK(with_complex(fs, complex_id::cube(2)) == f);
}

TEST_CASE("the two-face factorizations of the square and its relatives") {
    // d_1^- <u_2> = <-*> comp_0 <*+>, d_1^+ <u_2> = <*-> comp_0 <+*>.
    double_sequence u2 = atom(basis_element("**"));
    CHECK(d(1, MINUS, u2) ==
          comp(0, atom(basis_element("-*")), atom(basis_element("*+"))));
    CHECK(d(1, PLUS, u2) ==
          comp(0, atom(basis_element("*-")), atom(basis_element("+*"))));
    // d_0^g <a*> = <ag>, d_0^g <*a> = <ga>.
    for (sign g : {MINUS, PLUS})
        for (char a : {'-', '+'}) {
            std::string ga{to_char(g), a}, ag{a, to_char(g)};
            CHECK(d(0, g, atom(basis_element(std::string{a, '*'}))) ==
                  atom(basis_element(ag)));
            CHECK(d(0, g, atom(basis_element(std::string{'*', a}))) ==
                  atom(basis_element(ga)));
        }

    // The same pattern for every degree-2 element of larger cubes: with
    // stars at positions p1 < p2,
    //   d_1^- <w> = <w[p1 -> -]> comp_0 <w[p2 -> +]>,
    //   d_1^+ <w> = <w[p2 -> -]> comp_0 <w[p1 -> +]>.
    for (int n = 2; n <= 4; ++n)
        for (const auto& w : basis_elements_of_degree(n, 2)) {
            std::vector<int> stars;
            for (int i = 1; i <= n; ++i)
                if (w.is_star(i)) stars.push_back(i);
            CHECK(d(1, MINUS, atom(w)) ==
                  comp(0, atom(w.with_letter(stars[0], '-')),
                       atom(w.with_letter(stars[1], '+'))));
            CHECK(d(1, PLUS, atom(w)) ==
                  comp(0, atom(w.with_letter(stars[1], '-')),
                       atom(w.with_letter(stars[0], '+'))));
        }
}

TEST_CASE("composition trees: structure, rendering, serialization") {
    composition_tree l1 = composition_tree::leaf(basis_element("-**"));
    composition_tree l2 = composition_tree::leaf(basis_element("*++"));
    composition_tree t = composition_tree::node(0, l1, l2);
    CHECK(l1.is_leaf());
    CHECK_FALSE(t.is_leaf());
    CHECK(t.level() == 0);
    CHECK(t.left() == l1);
    CHECK(t.right() == l2);
    CHECK(t != composition_tree::node(1, l1, l2));
    CHECK(render_tree(t) == "(<-**> comp0 <*++>)");
    CHECK(render_tree(l1) == "<-**>");

    nlohmann::json j = tree_to_json(t);
    CHECK(j["p"] == 0);
    CHECK(j["left"]["leaf"] == "-**");
    CHECK(tree_from_json(j) == t);
    CHECK(tree_from_json(tree_to_json(l2)) == l2);

    composition_tree m = map_leaves(t, [](const basis_element& b) {
        return face_inclusion(1, sign::minus, b);
    });
    CHECK(m == composition_tree::node(
                   0, composition_tree::leaf(basis_element("--**")),
                   composition_tree::leaf(basis_element("-*++"))));

    CHECK(eval_tree(t, 3) ==
          comp(0, atom(basis_element("-**")), atom(basis_element("*++"))));
    CHECK_THROWS_AS(eval_tree(t, 4), domain_error);
}

TEST_CASE("word embedding") {
    CHECK(word_embed(basis_element("*+*"), basis_element("-*")) ==
          basis_element("-+*"));
    CHECK(word_embed(basis_element("*+*"), basis_element("**")) ==
          basis_element("*+*"));
    CHECK(word_embed(basis_element("***"), basis_element("-+*")) ==
          basis_element("-+*"));
    CHECK(word_embed(basis_element("-+"), basis_element("")) ==
          basis_element("-+"));
    CHECK_THROWS_AS(word_embed(basis_element("*+"), basis_element("**")),
                    domain_error);
}

TEST_CASE("decompose returns leaves on atoms") {
    for (int n = 0; n <= 3; ++n)
        for (const auto& b : all_basis_elements(n))
            CHECK(decompose(atom(b)) == composition_tree::leaf(b));
}

TEST_CASE("decompose recovers the worked square composition") {
    double_sequence x =
        comp(0, atom(basis_element("-*")), atom(basis_element("*+")));
    composition_tree t = decompose(x);
    CHECK(t ==
          composition_tree::node(0, composition_tree::leaf(basis_element("-*")),
                                 composition_tree::leaf(basis_element("*+"))));
}

TEST_CASE("decompose inverts evaluation on a pool of composites") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& x : element_pool(n, 60)) {
            composition_tree t = decompose(x);
            CHECK(eval_tree(t, n) == x);
        }
}

TEST_CASE("decompose handles the faces of the 3-cube's atom") {
    double_sequence u3 = atom(basis_element("***"));
    for (sign a : {MINUS, PLUS}) {
        double_sequence f = d(2, a, u3);
        CHECK(eval_tree(decompose(f), 3) == f);
    }
}

TEST_CASE("standard trees evaluate to the faces they factorize") {
    // The cached tree for d_{p-1}^a <u_p>, and its embedding into any
    // degree-p element of a larger cube.
    for (int p = 1; p <= 3; ++p)
        for (sign a : {MINUS, PLUS}) {
            const composition_tree& t = standard_tree(p, a);
            CHECK(eval_tree(t, p) ==
                  d(p - 1, a, atom(basis_element::top(p))));
        }
    for (int n = 1; n <= 4; ++n)
        for (const auto& b : all_basis_elements(n)) {
            int p = b.degree();
            if (p == 0) continue;
            for (sign a : {MINUS, PLUS}) {
                composition_tree t = face_tree(a, b);
                CHECK(eval_tree(t, n) == d(p - 1, a, atom(b)));
            }
        }
}

TEST_CASE("sequence serialization round trips") {
    double_sequence x =
        comp(0, atom(basis_element("-*")), atom(basis_element("*+")));
    nlohmann::json j = sequence_to_json(x);
    REQUIRE(j.is_array());
    CHECK(j.size() == 3);
    CHECK(j[0]["neg"]["terms"][0]["word"] == "--");
    double_sequence back = sequence_from_json(j, complex_id::cube(2));
    CHECK(back == x);
    CHECK(sequence_to_json(back).dump() == j.dump());

    double_sequence f = with_complex(d(1, MINUS, atom(basis_element("**"))),
                                     complex_id::shell(2));
    CHECK(sequence_from_json(sequence_to_json(f), complex_id::shell(2)) == f);
}
