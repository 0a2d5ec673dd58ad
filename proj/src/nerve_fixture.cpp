#include "cubenerve/nerve_fixture.hpp"

#include <utility>

namespace cubenerve {

finite_omega_category fixture_category() {
    finite_omega_category cat(
        2, {"c", "d", "e", "a-", "a+", "b", "ab", "A"});
    auto id = [&](const std::string& s) { return cat.by_name(s); };
    int c = id("c"), d = id("d"), e = id("e");
    int am = id("a-"), ap = id("a+"), b = id("b"), ab = id("ab"), A = id("A");

    auto endpoints = [&](int x, int s, int t) {
        cat.set_d(0, sign::minus, x, s);
        cat.set_d(0, sign::plus, x, t);
    };
    endpoints(c, c, c);
    endpoints(d, d, d);
    endpoints(e, e, e);
    endpoints(am, c, d);
    endpoints(ap, c, d);
    endpoints(b, d, e);
    endpoints(ab, c, e);
    endpoints(A, c, d);
    for (int x : {c, d, e, am, ap, b, ab}) {
        cat.set_d(1, sign::minus, x, x);
        cat.set_d(1, sign::plus, x, x);
    }
    cat.set_d(1, sign::minus, A, am);
    cat.set_d(1, sign::plus, A, ap);

    // Pasting along objects; every defined pair of the free composition.
    cat.set_comp(0, c, c, c);
    cat.set_comp(0, c, am, am);
    cat.set_comp(0, c, ap, ap);
    cat.set_comp(0, c, ab, ab);
    cat.set_comp(0, c, A, A);
    cat.set_comp(0, am, d, am);
    cat.set_comp(0, am, b, ab);
    cat.set_comp(0, ap, d, ap);
    cat.set_comp(0, ap, b, ab);
    cat.set_comp(0, A, d, A);
    cat.set_comp(0, A, b, ab);
    cat.set_comp(0, d, d, d);
    cat.set_comp(0, d, b, b);
    cat.set_comp(0, b, e, b);
    cat.set_comp(0, ab, e, ab);
    cat.set_comp(0, e, e, e);

    // Pasting along arrows.
    for (int x : {c, d, e, am, ap, b, ab}) cat.set_comp(1, x, x, x);
    cat.set_comp(1, am, A, A);
    cat.set_comp(1, A, ap, A);

    return cat;
}

const finite_omega_category& shared_fixture() {
    static const finite_omega_category cat = fixture_category();
    return cat;
}

std::map<basis_element, int> fixture_shell_images() {
    const finite_omega_category& cat = shared_fixture();
    std::map<basis_element, int> images;
    auto put = [&](const char* word, const char* name) {
        images.emplace(basis_element(word), cat.by_name(name));
    };
    // squares
    put("-**", "A");
    put("+**", "ab");
    put("*-*", "ab");
    put("*+*", "b");
    put("**-", "a+");
    put("**+", "ab");
    // edges
    put("--*", "c");
    put("-*-", "a+");
    put("-*+", "a-");
    put("-+*", "d");
    put("*--", "c");
    put("*-+", "ab");
    put("*+-", "d");
    put("*++", "b");
    put("+-*", "ab");
    put("+*-", "a+");
    put("+*+", "e");
    put("++*", "b");
    // corners
    put("---", "c");
    put("--+", "c");
    put("-+-", "d");
    put("-++", "d");
    put("+--", "c");
    put("+-+", "e");
    put("++-", "d");
    put("+++", "e");
    return images;
}

counterexample_result counterexample() {
    const finite_omega_category& cat = shared_fixture();
    nerve_table<finite_omega_category> shell(cat, complex_id::shell(3),
                                             fixture_shell_images());
    auto filler = fill_shell(shell);

    std::vector<std::string> report;
    bool ok = true;
    auto fact = [&](bool good, const std::string& text) {
        ok = ok && good;
        report.push_back(std::string(good ? "[ok] " : "[XX] ") + text);
    };

    int ab = cat.by_name("ab");
    auto top = filler.image(basis_element::top(3));
    fact(evaluate(shell, d(2, sign::minus, atom(basis_element::top(3)))) ==
                 ab &&
             evaluate(shell, d(2, sign::plus, atom(basis_element::top(3)))) ==
                 ab,
         "both boundary composites of the shell equal the composite of A "
         "and b");
    fact(top == ab && is_thin(filler),
         "the unique thin filler exists, with top image " + cat.name(ab));

    int non_thin = 0;
    bool low_is_A = false;
    for (int i = 1; i <= 3; ++i)
        for (sign a : {sign::minus, sign::plus})
            if (!is_thin(face(filler, i, a))) {
                ++non_thin;
                low_is_A = i == 1 && a == sign::minus &&
                           face(filler, i, a).image(basis_element::top(2)) ==
                               cat.by_name("A");
            }
    fact(non_thin == 1 && low_is_A,
         "exactly one face of the filler is not thin: the 1- face, whose "
         "top image is A");

    fact(box_admissible(box_of(filler, 2, sign::minus)),
         "the box opposite the 2- face is admissible, so the filler is the "
         "thin filler of an admissible box with a non-thin face");
    fact(!box_admissible(box_of(filler, 1, sign::minus)),
         "the box opposite the non-thin face is not admissible, so "
         "completeness never forces that face to be thin");
    fact(!shell_admissible(shell),
         "the shell itself is not admissible: its thin filler exists "
         "without being required");

    return counterexample_result{fixture_category(), std::move(shell),
                                 std::move(filler), std::move(report), ok};
}

nlohmann::json counterexample_to_json(const counterexample_result& r) {
    auto images = [&](const nerve_table<finite_omega_category>& t) {
        nlohmann::json j = nlohmann::json::object();
        for (const auto& [b, v] : t.images())
            j[b.word()] = r.category.name(v);
        return j;
    };
    return nlohmann::json{{"category", category_to_json(r.category)},
                          {"shell", images(r.shell)},
                          {"filler", images(r.filler)},
                          {"report", r.report},
                          {"all_expected", r.all_expected}};
}

} // namespace cubenerve
