#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cubenerve/omega_cat.hpp"

using namespace cubenerve;

namespace {

const sign MINUS = sign::minus;
const sign PLUS = sign::plus;

// A single arrow: two objects and one 1-cell between them, with the
// composition table filled in by hand.
finite_omega_category arrow_category() {
    finite_omega_category c(1, {"src", "dst", "arrow"});
    int s = c.by_name("src"), t = c.by_name("dst"), e = c.by_name("arrow");
    for (int obj : {s, t}) {
        c.set_d(0, MINUS, obj, obj);
        c.set_d(0, PLUS, obj, obj);
    }
    c.set_d(0, MINUS, e, s);
    c.set_d(0, PLUS, e, t);
    c.set_comp(0, s, s, s);
    c.set_comp(0, t, t, t);
    c.set_comp(0, s, e, e);
    c.set_comp(0, e, t, e);
    return c;
}

} // namespace

TEST_CASE("cells, names, and the level rule") {
    finite_omega_category c = arrow_category();
    CHECK(c.level() == 1);
    CHECK(c.size() == 3);
    CHECK(c.name(0) == "src");
    CHECK(c.by_name("arrow") == 2);
    CHECK_THROWS_AS(c.by_name("nope"), domain_error);
    CHECK_THROWS_AS(finite_omega_category(1, {"a", "a"}), domain_error);

    int e = c.by_name("arrow");
    CHECK(c.d(0, MINUS, e) == c.by_name("src"));
    CHECK(c.d(0, PLUS, e) == c.by_name("dst"));
    // At or above the level every cell is fixed by d and composes only
    // with itself.
    CHECK(c.d(1, MINUS, e) == e);
    CHECK(c.d(5, PLUS, e) == e);
    CHECK(c.comp(1, e, e) == e);
    CHECK_FALSE(c.comp(1, e, c.by_name("src")).has_value());

    CHECK(c.comp(0, c.by_name("src"), e) == e);
    CHECK_FALSE(c.comp(0, e, c.by_name("src")).has_value());

    CHECK(c.is_identity_for(0, c.by_name("src")));
    CHECK_FALSE(c.is_identity_for(0, e));
    CHECK(c.is_identity_for(1, e));
}

TEST_CASE("the arrow category satisfies all the laws") {
    CHECK(validate_category(arrow_category()).empty());
}

TEST_CASE("validation pinpoints broken categories") {
    // Missing a required composite: identities must compose.
    {
        finite_omega_category c = arrow_category();
        c.erase_comp(0, c.by_name("src"), c.by_name("arrow"));
        auto bad = validate_category(c);
        CHECK(!bad.empty());
    }
    // A composite with mismatched faces must not be defined.
    {
        finite_omega_category c = arrow_category();
        c.set_comp(0, c.by_name("arrow"), c.by_name("src"),
                   c.by_name("arrow"));
        CHECK(!validate_category(c).empty());
    }
    // A wrong unit: src comp arrow must be arrow itself.
    {
        finite_omega_category c = arrow_category();
        c.set_comp(0, c.by_name("src"), c.by_name("arrow"),
                   c.by_name("src"));
        CHECK(!validate_category(c).empty());
    }
    // An undefined face map.
    {
        finite_omega_category c(1, {"x"});
        c.set_comp(0, 0, 0, 0);
        CHECK(!validate_category(c).empty());
    }
}

TEST_CASE("category serialization round trips") {
    finite_omega_category c = arrow_category();
    nlohmann::json j = category_to_json(c);
    CHECK(j["level"] == 1);
    CHECK(j["cells"].size() == 3);
    CHECK(j["d"]["0,-"]["arrow"] == "src");
    finite_omega_category back = category_from_json(j);
    CHECK(category_to_json(back).dump() == j.dump());
    CHECK(validate_category(back).empty());

    nlohmann::json broken = j;
    broken["comp"]["0"].push_back({"arrow", "nope", "arrow"});
    CHECK_THROWS_AS(category_from_json(broken), domain_error);
}

TEST_CASE("materializing the interval's cube category") {
    materialized_nu m = materialize_nu(1);
    CHECK(m.category.level() == 1);
    CHECK(m.category.size() == 3);
    CHECK(m.cells.size() == 3);
    CHECK(validate_category(m.category).empty());

    // The edge's faces are the two endpoint cells.
    int edge = -1;
    for (int i = 0; i < 3; ++i)
        if (m.cells[i].dimension() == 1) edge = i;
    REQUIRE(edge >= 0);
    CHECK(m.cells[m.category.d(0, MINUS, edge)] ==
          d(0, MINUS, m.cells[edge]));
    CHECK(m.cells[m.category.d(0, PLUS, edge)] == d(0, PLUS, m.cells[edge]));
}

TEST_CASE("materializing the square's cube category") {
    materialized_nu m = materialize_nu(2);
    CHECK(m.category.level() == 2);
    CHECK(m.category.size() == 11);
    CHECK(validate_category(m.category).empty());

    // Count by dimension: 4 corners, 4 edges + 2 paths, 1 square.
    int by_dim[3] = {0, 0, 0};
    for (const auto& x : m.cells) ++by_dim[x.dimension()];
    CHECK(by_dim[0] == 4);
    CHECK(by_dim[1] == 6);
    CHECK(by_dim[2] == 1);

    // The category's composition agrees with the model's.
    auto find = [&](const double_sequence& x) {
        auto it = std::find(m.cells.begin(), m.cells.end(), x);
        REQUIRE(it != m.cells.end());
        return static_cast<int>(it - m.cells.begin());
    };
    double_sequence a = atom(basis_element("-*"));
    double_sequence b = atom(basis_element("*+"));
    CHECK(m.category.comp(0, find(a), find(b)) == find(comp(0, a, b)));
    CHECK_FALSE(m.category.comp(0, find(b), find(a)).has_value());
}

TEST_CASE("the direct cube-category target") {
    nu_target t;
    double_sequence u2 = atom(basis_element("**"));
    CHECK(t.d(1, MINUS, u2) == d(1, MINUS, u2));
    CHECK(t.is_identity_for(2, u2));
    CHECK_FALSE(t.is_identity_for(1, u2));
    double_sequence a = atom(basis_element("-*"));
    double_sequence b = atom(basis_element("*+"));
    REQUIRE(t.comp(0, a, b).has_value());
    CHECK(*t.comp(0, a, b) == comp(0, a, b));
    CHECK_FALSE(t.comp(0, b, a).has_value());
}
