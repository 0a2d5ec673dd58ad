#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cubenerve/chain.hpp"

using namespace cubenerve;

namespace {

chain parse_sum(int n, const std::vector<std::pair<std::string, long long>>& ts) {
    chain c(n);
    for (const auto& [w, k] : ts) c.add(basis_element(w), k);
    return c;
}

// Random integer combination of all basis elements of I^n of one degree.
chain random_homogeneous(int n, int degree, std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    chain c(n);
    for (const auto& b : basis_elements_of_degree(n, degree))
        c.add(b, coeff(rng));
    return c;
}

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

} // namespace

TEST_CASE("letter order is minus < plus < interval") {
    CHECK(letter_rank('-') == 0);
    CHECK(letter_rank('+') == 1);
    CHECK(letter_rank('*') == 2);
    CHECK(basis_element("-") < basis_element("+"));
    CHECK(basis_element("+") < basis_element("*"));
    // Not the ASCII order: '*' < '+' < '-' would be wrong.
    CHECK(basis_element("-*") < basis_element("*-"));
    CHECK_THROWS_AS(basis_element("x"), domain_error);
}

TEST_CASE("basis element letters and edits") {
    basis_element b("-*+");
    CHECK(b.ambient() == 3);
    CHECK(b.degree() == 1);
    CHECK(b.letter(1) == '-');
    CHECK(b.letter(3) == '+');
    CHECK(b.with_letter(2, '-') == basis_element("--+"));
    CHECK(b.with_inserted(2, '*') == basis_element("-**+"));
    CHECK(b.with_deleted(1) == basis_element("*+"));
    CHECK_THROWS_AS(b.letter(0), domain_error);
    CHECK_THROWS_AS(b.letter(4), domain_error);
    CHECK(basis_element::top(3) == basis_element("***"));
    CHECK(basis_element::top(0).ambient() == 0);
}

TEST_CASE("boundary of the interval and the square") {
    chain du1 = boundary(chain::unit(basis_element("*")));
    CHECK(du1 == parse_sum(1, {{"+", 1}, {"-", -1}}));

    chain du2 = boundary(chain::unit(basis_element("**")));
    CHECK(du2 == parse_sum(2, {{"+*", 1}, {"-*", -1}, {"*-", 1}, {"*+", -1}}));

    // Degree-0 elements have no '*' positions, so their boundary is zero.
    CHECK(boundary(chain::unit(basis_element("-+"))).is_zero());
}

TEST_CASE("boundary squares to zero") {
    std::mt19937 rng(7);
    for (int n = 1; n <= 6; ++n) {
        CHECK(boundary(boundary(chain::unit(basis_element::top(n)))).is_zero());
        for (int d = 2; d <= n; ++d) {
            chain c = random_homogeneous(n, d, rng);
            CHECK(boundary(boundary(c)).is_zero());
        }
    }
}

TEST_CASE("augmentation") {
    CHECK(augmentation(chain::unit(basis_element("-+"))) == 1);
    chain c = parse_sum(1, {{"-", 2}, {"+", -1}});
    CHECK(augmentation(c) == 1);
    CHECK(augmentation(chain(2)) == 0);
    CHECK_THROWS_AS(augmentation(chain::unit(basis_element("*"))), domain_error);

    // Augmentation kills boundaries.
    std::mt19937 rng(11);
    for (int n = 1; n <= 5; ++n) {
        chain c1 = random_homogeneous(n, 1, rng);
        CHECK(augmentation(boundary(c1)) == 0);
    }
}

TEST_CASE("signed parts") {
    auto [neg, pos] = signed_parts(boundary(chain::unit(basis_element("*"))));
    CHECK(neg == chain::unit(basis_element("-")));
    CHECK(pos == chain::unit(basis_element("+")));

    auto [zn, zp] = signed_parts(chain(3));
    CHECK(zn.is_zero());
    CHECK(zp.is_zero());

    // The negative part of the boundary of the 3-cube.
    chain du3 = boundary(chain::unit(basis_element("***")));
    CHECK(negative_part(du3) ==
          parse_sum(3, {{"-**", 1}, {"*+*", 1}, {"**-", 1}}));
    CHECK(positive_part(du3) ==
          parse_sum(3, {{"+**", 1}, {"*-*", 1}, {"**+", 1}}));

    // c = pos - neg with disjoint nonnegative supports, on random chains.
    std::mt19937 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        chain c = random_homogeneous(4, 2, rng);
        auto [n_, p_] = signed_parts(c);
        CHECK(p_ - n_ == c);
        CHECK(is_nonneg(n_));
        CHECK(is_nonneg(p_));
        for (const auto& [b, k] : n_.terms()) CHECK(p_.coeff(b) == 0);
    }
}

TEST_CASE("face inclusion") {
    CHECK(face_inclusion(2, sign::plus, basis_element("*")) ==
          basis_element("*+"));
    // Only one sign letter, at the inserted position.
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= n; ++k) {
            basis_element got =
                face_inclusion(k, sign::minus, basis_element::top(n - 1));
            CHECK(got.letter(k) == '-');
            CHECK(got.degree() == n - 1);
        }
    CHECK_THROWS_AS(face_inclusion(3, sign::plus, basis_element("*")),
                    domain_error);
}

TEST_CASE("face inclusion is a chain map") {
    std::mt19937 rng(17);
    for (int n = 2; n <= 5; ++n)
        for (int i = 1; i <= n; ++i)
            for (sign a : {sign::minus, sign::plus}) {
                chain c = random_homogeneous(n - 1, 2, rng);
                CHECK(boundary(face_inclusion(i, a, c)) ==
                      face_inclusion(i, a, boundary(c)));
                chain c0 = random_homogeneous(n - 1, 0, rng);
                CHECK(augmentation(face_inclusion(i, a, c0)) ==
                      augmentation(c0));
            }
}

TEST_CASE("face inclusions satisfy the cubical relation") {
    // incl_j^b incl_i^a = incl_{i+1}^a incl_j^b on u_{n-2}, for i >= j.
    for (int n = 2; n <= 5; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = j; i <= n - 1; ++i)
                for (sign a : {sign::minus, sign::plus})
                    for (sign b : {sign::minus, sign::plus}) {
                        basis_element u = basis_element::top(n - 2);
                        CHECK(face_inclusion(j, b, face_inclusion(i, a, u)) ==
                              face_inclusion(i + 1, a, face_inclusion(j, b, u)));
                    }
}

TEST_CASE("nonnegativity") {
    CHECK(is_nonneg(parse_sum(1, {{"*", 1}, {"-", 1}})));
    CHECK_FALSE(is_nonneg(boundary(chain::unit(basis_element("*")))));
    CHECK(is_nonneg(chain(2)));
}

TEST_CASE("complex membership") {
    complex_id cube3 = complex_id::cube(3);
    complex_id shell3 = complex_id::shell(3);
    chain u3 = chain::unit(basis_element("***"));
    CHECK(in_complex(u3, cube3));
    CHECK_FALSE(in_complex(u3, shell3));

    chain two_minus = parse_sum(3, {{"-**", 1}, {"*+*", 1}, {"**-", 1}});
    CHECK(in_complex(two_minus, shell3));
    // The box missing "*-*" still contains all three of these faces...
    CHECK(in_complex(two_minus, complex_id::box(basis_element("*-*"))));
    // ...but the box missing "*+*" does not.
    CHECK_FALSE(in_complex(two_minus, complex_id::box(basis_element("*+*"))));

    CHECK_THROWS_AS(complex_id::box(basis_element("**")), domain_error);
    CHECK_FALSE(in_complex(chain(2), complex_id::cube(3)));
}

TEST_CASE("basis enumeration counts") {
    for (int n = 0; n <= 6; ++n) {
        auto all = all_basis_elements(n);
        long long total = 1;
        for (int i = 0; i < n; ++i) total *= 3;
        CHECK(static_cast<long long>(all.size()) == total);
        for (int m = 0; m <= n; ++m) {
            auto deg = basis_elements_of_degree(n, m);
            CHECK(static_cast<long long>(deg.size()) ==
                  binom(n, m) * (1LL << (n - m)));
        }
    }
    // Canonical order is strictly increasing.
    auto all = all_basis_elements(3);
    for (size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] < all[i]);
}

TEST_CASE("chain arithmetic and formatting") {
    chain a = parse_sum(2, {{"-*", 1}, {"*+", 2}});
    chain b = parse_sum(2, {{"-*", -1}, {"+*", 1}});
    CHECK((a + b) == parse_sum(2, {{"*+", 2}, {"+*", 1}}));
    CHECK((a - a).is_zero());
    CHECK((2 * a) == parse_sum(2, {{"-*", 2}, {"*+", 4}}));
    CHECK(-a == parse_sum(2, {{"-*", -1}, {"*+", -2}}));
    CHECK(format_chain(chain(2)) == "0");
    CHECK(format_chain(a) == "-* + 2 *+");
    CHECK(format_chain(b) == "- -* + +*");
    CHECK(a.degree() == 1);
    CHECK(chain(2).degree() == -1);
    chain mixed = parse_sum(2, {{"-*", 1}, {"--", 1}});
    CHECK_FALSE(mixed.is_homogeneous());
    CHECK_THROWS_AS(mixed.degree(), domain_error);
    CHECK_THROWS_AS(a.add(basis_element("-"), 1), domain_error);
}

TEST_CASE("json round trip is bit exact") {
    chain a = parse_sum(3, {{"-*+", 2}, {"***", -1}, {"--*", 7}});
    nlohmann::json j = chain_to_json(a);
    CHECK(j.at("n") == 3);
    CHECK(chain_from_json(j) == a);
    // Canonical order in the serialized term list.
    std::string prev;
    for (const auto& t : j.at("terms")) {
        std::string w = t.at("word").get<std::string>();
        if (!prev.empty())
            CHECK(basis_element(prev) < basis_element(w));
        prev = w;
    }
    // Byte-for-byte stable through a reserialization.
    CHECK(chain_to_json(chain_from_json(j)).dump() == j.dump());
    CHECK(chain_from_json(chain_to_json(chain(0))) == chain(0));
}
