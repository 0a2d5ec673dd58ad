#include "cubenerve/factorization.hpp"

namespace cubenerve {

namespace {

basis_element sigma_word(int n, int k, sign g) {
    if (n < 1 || k < 1 || k > n)
        throw domain_error("slot " + std::to_string(k) +
                           " out of range for the " + std::to_string(n) +
                           "-cube");
    return face_inclusion(k, g, basis_element::top(n - 1));
}

} // namespace

face_factorization::face_factorization(int n, int k, sign g)
    : n_(n), k_(k), g_(g), sigma_(sigma_word(n, k, g)),
      top_(atom(basis_element::top(n))) {}

chain face_factorization::retract(const chain& c) const {
    chain r(c.ambient());
    for (const auto& [w, coeff] : c.terms()) {
        if (w.is_star(k_)) continue;
        r.add(w.with_letter(k_, to_char(g_)), coeff);
    }
    return r;
}

chain face_factorization::homotopy(const chain& c) const {
    chain r(c.ambient());
    for (const auto& [w, coeff] : c.terms()) {
        if (w.letter(k_) != to_char(-g_)) continue;
        int stars_left = 0;
        for (int i = 1; i < k_; ++i)
            if (w.is_star(i)) ++stars_left;
        long long s = -to_int(parity_sign(stars_left) * g_);
        r.add(w.with_letter(k_, '*'), coeff * s);
    }
    return r;
}

double_sequence face_factorization::stage(int q) const {
    if (q < 0 || q > n_ - 1)
        throw domain_error("stage index out of range");
    double_sequence sg = atom(sigma_);
    std::vector<std::pair<chain, chain>> levels;
    for (int i = 0; i < q; ++i)
        levels.emplace_back(top_.level(i, sign::minus),
                            top_.level(i, sign::plus));
    levels.emplace_back(
        top_.level(q, sign::minus) -
            boundary(homotopy(top_.level(q, sign::minus))),
        top_.level(q, sign::plus) -
            boundary(homotopy(top_.level(q, sign::plus))));
    for (int i = q + 1; i <= n_; ++i)
        levels.emplace_back(sg.level(i, sign::minus),
                            sg.level(i, sign::plus));
    return double_sequence(complex_id::cube(n_), std::move(levels));
}

double_sequence face_factorization::stage_side(int q, sign beta) const {
    if (q < 1 || q > n_ - 1)
        throw domain_error("stage side index out of range");
    chain base = top_.level(q - 1, beta);
    chain lifted = homotopy(base);
    if (beta == sign::minus) lifted = -lifted;
    chain other = base - boundary(homotopy(base));
    std::vector<std::pair<chain, chain>> levels;
    for (int i = 0; i < q - 1; ++i)
        levels.emplace_back(top_.level(i, sign::minus),
                            top_.level(i, sign::plus));
    if (beta == sign::minus) levels.emplace_back(base, other);
    else levels.emplace_back(other, base);
    levels.emplace_back(lifted, lifted);
    for (int i = q + 1; i <= n_; ++i)
        levels.emplace_back(chain(n_), chain(n_));
    return double_sequence(complex_id::cube(n_), std::move(levels));
}

composition_tree face_factorization::tree() const {
    composition_tree t = composition_tree::leaf(sigma_);
    for (int q = 1; q <= n_ - 1; ++q) {
        composition_tree before = decompose(stage_side(q, sign::minus));
        composition_tree after = decompose(stage_side(q, sign::plus));
        t = composition_tree::node(
            q - 1, composition_tree::node(q - 1, before, t), after);
    }
    return t;
}

namespace {

// Flat rendering for display lines: the outermost composite is written
// without parentheses, nested composites keep theirs.
std::string render_flat(const composition_tree& t) {
    if (t.is_leaf()) return "<" + t.word().word() + ">";
    std::string l = render_flat(t.left());
    if (!t.left().is_leaf()) l = "(" + l + ")";
    std::string r = render_flat(t.right());
    if (!t.right().is_leaf()) r = "(" + r + ")";
    return l + " comp_" + std::to_string(t.level()) + " " + r;
}

std::string side_name(int q, sign beta) {
    return "A_" + std::to_string(q) + "^" + to_char(beta);
}

sign face_sign(const face_factorization& ff) {
    return parity_sign(ff.slot() - 1) * ff.facing();
}

std::string face_label(const face_factorization& ff) {
    return "d_" + std::to_string(ff.ambient() - 1) + "^" +
           to_char(face_sign(ff)) + " <" +
           basis_element::top(ff.ambient()).word() + ">";
}

std::string headline(const face_factorization& ff) {
    std::string rhs = "<" + ff.sigma().word() + ">";
    for (int q = 1; q <= ff.ambient() - 1; ++q) {
        if (q > 1) rhs = "(" + rhs + ")";
        std::string comp = " comp_" + std::to_string(q - 1) + " ";
        rhs = side_name(q, sign::minus) + comp + rhs + comp +
              side_name(q, sign::plus);
    }
    return face_label(ff) + " = " + rhs;
}

} // namespace

std::string format_factorization(const face_factorization& ff) {
    int n = ff.ambient();
    std::string out = headline(ff) + "\n";
    for (int q = n - 1; q >= 1; --q)
        for (sign beta : {sign::minus, sign::plus}) {
            double_sequence a = ff.stage_side(q, beta);
            if (is_identity_for(q - 1, a))
                out += side_name(q, beta) + " is an identity for comp_" +
                       std::to_string(q - 1) + "\n";
            else
                out += side_name(q, beta) + " = " +
                       render_flat(decompose(a)) + "\n";
        }
    composition_tree t = ff.tree();
    out += "tree: " + render_tree(t) + "\n";
    if (eval_tree(t, n) == d(n - 1, face_sign(ff), atom(basis_element::top(n))))
        out += "verdict: the tree evaluates to " + face_label(ff) + "\n";
    else
        out += "verdict: MISMATCH: the tree does not evaluate to " +
               face_label(ff) + "\n";
    return out;
}

nlohmann::json factorization_to_json(const face_factorization& ff) {
    int n = ff.ambient();
    nlohmann::json sides = nlohmann::json::array();
    for (int q = n - 1; q >= 1; --q)
        for (sign beta : {sign::minus, sign::plus}) {
            double_sequence a = ff.stage_side(q, beta);
            nlohmann::json side{{"q", q},
                                {"side", to_string(beta)},
                                {"identity_for_comp", nullptr},
                                {"value", sequence_to_json(a)},
                                {"tree", tree_to_json(decompose(a))}};
            if (is_identity_for(q - 1, a)) side["identity_for_comp"] = q - 1;
            sides.push_back(std::move(side));
        }
    composition_tree t = ff.tree();
    double_sequence value = eval_tree(t, n);
    sign s = face_sign(ff);
    bool ok = value == d(n - 1, s, atom(basis_element::top(n)));
    return nlohmann::json{{"n", n},
                          {"k", ff.slot()},
                          {"sign", to_string(ff.facing())},
                          {"sigma", ff.sigma().word()},
                          {"face", {{"level", n - 1}, {"sign", to_string(s)}}},
                          {"equation", headline(ff)},
                          {"sides", sides},
                          {"tree", tree_to_json(t)},
                          {"value", sequence_to_json(value)},
                          {"verified", ok}};
}

} // namespace cubenerve
