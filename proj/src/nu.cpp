#include "cubenerve/nu.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace cubenerve {

namespace {

chain zero_chain(int n) { return chain(n); }

std::string level_name(int q, sign a) {
    return "x_" + std::to_string(q) + (a == sign::minus ? "^-" : "^+");
}

} // namespace

std::optional<std::string> validate_report(
    const complex_id& complex,
    const std::vector<std::pair<chain, chain>>& levels) {
    int n = complex.ambient();
    if (static_cast<int>(levels.size()) != n + 1)
        return "expected " + std::to_string(n + 1) + " levels, got " +
               std::to_string(levels.size());
    for (int q = 0; q <= n; ++q)
        for (sign a : {sign::minus, sign::plus}) {
            const chain& c = a == sign::minus ? levels[q].first
                                              : levels[q].second;
            if (c.ambient() != n)
                return level_name(q, a) + " has ambient dimension " +
                       std::to_string(c.ambient());
            if (!is_nonneg(c))
                return level_name(q, a) + " has a negative coefficient";
            if (!c.is_homogeneous() || (!c.is_zero() && c.degree() != q))
                return level_name(q, a) + " is not homogeneous of degree " +
                       std::to_string(q);
            if (!in_complex(c, complex))
                return level_name(q, a) + " does not lie in " +
                       complex.describe();
        }
    for (sign a : {sign::minus, sign::plus}) {
        const chain& c = a == sign::minus ? levels[0].first
                                          : levels[0].second;
        if (augmentation(c) != 1)
            return level_name(0, a) + " has augmentation " +
                   std::to_string(augmentation(c));
    }
    for (int q = 0; q < n; ++q) {
        chain diff = levels[q].second - levels[q].first;
        if (boundary(levels[q + 1].first) != diff)
            return "boundary of " + level_name(q + 1, sign::minus) +
                   " differs from " + level_name(q, sign::plus) + " - " +
                   level_name(q, sign::minus);
        if (boundary(levels[q + 1].second) != diff)
            return "boundary of " + level_name(q + 1, sign::plus) +
                   " differs from " + level_name(q, sign::plus) + " - " +
                   level_name(q, sign::minus);
    }
    if (levels[n].first != levels[n].second)
        return "top level chains differ";
    return std::nullopt;
}

double_sequence::double_sequence(complex_id complex,
                                 std::vector<std::pair<chain, chain>> levels)
    : complex_(std::move(complex)), levels_(std::move(levels)) {
    if (auto why = validate_report(complex_, levels_))
        throw domain_error("invalid double sequence: " + *why);
}

const chain& double_sequence::level(int q, sign a) const {
    if (q < 0 || q > ambient())
        throw domain_error("level " + std::to_string(q) +
                           " out of range for ambient dimension " +
                           std::to_string(ambient()));
    return a == sign::minus ? levels_[q].first : levels_[q].second;
}

int double_sequence::dimension() const {
    for (int q = ambient(); q >= 1; --q)
        if (!levels_[q].first.is_zero() || !levels_[q].second.is_zero())
            return q;
    return 0;
}

bool double_sequence::operator<(const double_sequence& o) const {
    if (ambient() != o.ambient()) return ambient() < o.ambient();
    if (levels_ != o.levels_) return levels_ < o.levels_;
    return complex_.describe() < o.complex_.describe();
}

double_sequence d(int p, sign a, const double_sequence& x) {
    if (p < 0) throw domain_error("face dimension must be nonnegative");
    int n = x.ambient();
    if (p >= n) return x;
    std::vector<std::pair<chain, chain>> levels;
    levels.reserve(n + 1);
    for (int q = 0; q < p; ++q)
        levels.emplace_back(x.level(q, sign::minus), x.level(q, sign::plus));
    levels.emplace_back(x.level(p, a), x.level(p, a));
    for (int q = p + 1; q <= n; ++q)
        levels.emplace_back(zero_chain(n), zero_chain(n));
    return double_sequence(x.complex(), std::move(levels));
}

bool composable(int p, const double_sequence& x, const double_sequence& y) {
    if (p < 0) throw domain_error("composition dimension must be nonnegative");
    return x.complex() == y.complex() &&
           d(p, sign::plus, x) == d(p, sign::minus, y);
}

double_sequence comp(int p, const double_sequence& x,
                     const double_sequence& y) {
    if (!composable(p, x, y))
        throw composability_error(
            "not composable over dimension " + std::to_string(p) + ": " +
            format_sequence(x) + " and " + format_sequence(y));
    int n = x.ambient();
    if (p >= n) return x; // composability forces x == y here
    std::vector<std::pair<chain, chain>> levels;
    levels.reserve(n + 1);
    for (int q = 0; q < p; ++q)
        levels.emplace_back(x.level(q, sign::minus), x.level(q, sign::plus));
    levels.emplace_back(x.level(p, sign::minus), y.level(p, sign::plus));
    for (int q = p + 1; q <= n; ++q)
        levels.emplace_back(x.level(q, sign::minus) + y.level(q, sign::minus),
                            x.level(q, sign::plus) + y.level(q, sign::plus));
    return double_sequence(x.complex(), std::move(levels));
}

bool is_identity_for(int p, const double_sequence& x) {
    if (p < 0) throw domain_error("composition dimension must be nonnegative");
    for (int q = p + 1; q <= x.ambient(); ++q)
        if (!x.level(q, sign::minus).is_zero() ||
            !x.level(q, sign::plus).is_zero())
            return false;
    return true;
}

namespace {

// Prepend a letter to every word of a chain over the (n-1)-cube.
chain prepend(char letter, const chain& c) {
    chain r(c.ambient() + 1);
    for (const auto& [b, k] : c.terms())
        r.add(basis_element(std::string(1, letter) + b.word()), k);
    return r;
}

// Level q, side a of the atom of a word, by the tensor decomposition over
// the first letter: a star contributes itself in degree 1 and its a-side
// endpoint in degree 0 (flipping the side for the rest), a sign letter
// contributes itself in degree 0.
chain atom_level_tensor(const std::string& word, int q, sign a) {
    int n = static_cast<int>(word.size());
    if (q < 0) return chain(n);
    if (word.empty()) {
        chain r(0);
        if (q == 0) r.add(basis_element(""), 1);
        return r;
    }
    std::string rest = word.substr(1);
    char c = word[0];
    if (c != '*') return prepend(c, atom_level_tensor(rest, q, a));
    chain r = prepend(to_char(a), atom_level_tensor(rest, q, a));
    r += prepend('*', atom_level_tensor(rest, q - 1, -a));
    return r;
}

} // namespace

double_sequence atom(const basis_element& b) {
    int n = b.ambient();
    int p = b.degree();
    std::vector<std::pair<chain, chain>> levels(n + 1,
                                                {zero_chain(n), zero_chain(n)});
    levels[p] = {chain::unit(b), chain::unit(b)};
    for (int q = p - 1; q >= 0; --q) {
        levels[q].first = negative_part(boundary(levels[q + 1].first));
        levels[q].second = positive_part(boundary(levels[q + 1].second));
    }
    for (int q = 0; q <= n; ++q)
        for (sign a : {sign::minus, sign::plus}) {
            chain t = atom_level_tensor(b.word(), q, a);
            const chain& direct =
                a == sign::minus ? levels[q].first : levels[q].second;
            if (t != direct)
                throw internal_error(
                    "atom construction routes disagree for " + b.word() +
                    " at " + level_name(q, a) + ": " + format_chain(direct) +
                    " vs " + format_chain(t));
        }
    return double_sequence(complex_id::cube(n), std::move(levels));
}

bool in_complex(const double_sequence& x, const complex_id& k) {
    if (k.ambient() != x.ambient()) return false;
    for (const auto& [neg, pos] : x.levels())
        if (!in_complex(neg, k) || !in_complex(pos, k)) return false;
    return true;
}

double_sequence with_complex(const double_sequence& x, const complex_id& k) {
    return double_sequence(k, x.levels());
}

bool same_values(const double_sequence& a, const double_sequence& b) {
    return a.ambient() == b.ambient() && a.levels() == b.levels();
}

std::string format_sequence(const double_sequence& x) {
    std::ostringstream out;
    out << "(";
    for (int q = 0; q <= x.ambient(); ++q) {
        if (q > 0) out << " | ";
        out << format_chain(x.level(q, sign::minus)) << ", "
            << format_chain(x.level(q, sign::plus));
    }
    out << ")";
    return out.str();
}

nlohmann::json sequence_to_json(const double_sequence& x) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& [neg, pos] : x.levels())
        j.push_back({{"neg", chain_to_json(neg)}, {"pos", chain_to_json(pos)}});
    return j;
}

double_sequence sequence_from_json(const nlohmann::json& j,
                                   const complex_id& complex) {
    if (!j.is_array())
        throw domain_error("double sequence JSON must be an array of levels");
    std::vector<std::pair<chain, chain>> levels;
    for (const auto& entry : j)
        levels.emplace_back(chain_from_json(entry.at("neg")),
                            chain_from_json(entry.at("pos")));
    return double_sequence(complex, std::move(levels));
}

composition_tree composition_tree::leaf(const basis_element& b) {
    auto r = std::make_shared<rep>();
    r->word = b;
    return composition_tree(std::move(r));
}

composition_tree composition_tree::node(int p, composition_tree left,
                                        composition_tree right) {
    if (p < 0) throw domain_error("composition dimension must be nonnegative");
    auto r = std::make_shared<rep>();
    r->p = p;
    r->l = left.impl_;
    r->r = right.impl_;
    return composition_tree(std::move(r));
}

const basis_element& composition_tree::word() const {
    if (!is_leaf()) throw domain_error("inner node has no word");
    return *impl_->word;
}

int composition_tree::level() const {
    if (is_leaf()) throw domain_error("leaf has no composition dimension");
    return impl_->p;
}

composition_tree composition_tree::left() const {
    if (is_leaf()) throw domain_error("leaf has no subtrees");
    return composition_tree(impl_->l);
}

composition_tree composition_tree::right() const {
    if (is_leaf()) throw domain_error("leaf has no subtrees");
    return composition_tree(impl_->r);
}

bool composition_tree::operator==(const composition_tree& o) const {
    if (impl_ == o.impl_) return true;
    if (is_leaf() != o.is_leaf()) return false;
    if (is_leaf()) return word() == o.word();
    return impl_->p == o.impl_->p && left() == o.left() &&
           right() == o.right();
}

std::string render_tree(const composition_tree& t) {
    if (t.is_leaf()) return "<" + t.word().word() + ">";
    return "(" + render_tree(t.left()) + " comp" +
           std::to_string(t.level()) + " " + render_tree(t.right()) + ")";
}

nlohmann::json tree_to_json(const composition_tree& t) {
    if (t.is_leaf()) return nlohmann::json{{"leaf", t.word().word()}};
    return nlohmann::json{{"p", t.level()},
                          {"left", tree_to_json(t.left())},
                          {"right", tree_to_json(t.right())}};
}

composition_tree tree_from_json(const nlohmann::json& j) {
    if (j.contains("leaf"))
        return composition_tree::leaf(
            basis_element(j.at("leaf").get<std::string>()));
    return composition_tree::node(j.at("p").get<int>(),
                                  tree_from_json(j.at("left")),
                                  tree_from_json(j.at("right")));
}

composition_tree map_leaves(
    const composition_tree& t,
    const std::function<basis_element(const basis_element&)>& f) {
    if (t.is_leaf()) return composition_tree::leaf(f(t.word()));
    return composition_tree::node(t.level(), map_leaves(t.left(), f),
                                  map_leaves(t.right(), f));
}

double_sequence eval_tree(const composition_tree& t, int ambient) {
    if (t.is_leaf()) {
        if (t.word().ambient() != ambient)
            throw domain_error("leaf " + t.word().word() +
                               " has the wrong ambient dimension");
        return atom(t.word());
    }
    return comp(t.level(), eval_tree(t.left(), ambient),
                eval_tree(t.right(), ambient));
}

namespace {

long long chain_mass(const chain& c) {
    long long s = 0;
    for (const auto& [b, k] : c.terms()) s += k;
    return s;
}

// Componentwise minimum of two nonnegative chains.
chain min_chain(const chain& a, const chain& b) {
    chain r(a.ambient());
    for (const auto& [w, k] : a.terms()) {
        long long m = std::min(k, b.coeff(w));
        if (m > 0) r.add(w, m);
    }
    return r;
}

// Every chain e with 0 <= e <= cap componentwise, smallest mass first.
std::vector<chain> subchains(const chain& cap) {
    std::vector<chain> out{chain(cap.ambient())};
    for (const auto& [w, k] : cap.terms()) {
        std::vector<chain> next;
        next.reserve(out.size() * (k + 1));
        for (const auto& base : out)
            for (long long c = 0; c <= k; ++c) {
                chain e = base;
                if (c > 0) e.add(w, c);
                next.push_back(std::move(e));
            }
        out = std::move(next);
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const chain& a, const chain& b) {
                         long long ma = chain_mass(a), mb = chain_mass(b);
                         if (ma != mb) return ma < mb;
                         return a < b;
                     });
    return out;
}

struct decomposer {
    std::map<std::string, composition_tree> done;
    std::set<std::string> dead;
    int depth = 0;

    std::optional<composition_tree> run(const double_sequence& x);
    std::optional<composition_tree> split_at(const double_sequence& x, int q);
};

std::optional<composition_tree> decomposer::run(const double_sequence& x) {
    if (depth > 200)
        throw internal_error("decomposition recursion too deep");
    std::string key = format_sequence(x);
    if (auto it = done.find(key); it != done.end()) return it->second;
    if (dead.count(key)) return std::nullopt;

    int p = x.dimension();
    const chain& top = x.level(p, sign::minus);
    if (p == 0) {
        composition_tree t = composition_tree::leaf(top.terms().begin()->first);
        done.emplace(key, t);
        return t;
    }
    if (top.terms().size() == 1 && top.terms().begin()->second == 1) {
        const basis_element& w = top.terms().begin()->first;
        if (same_values(x, atom(w))) {
            composition_tree t = composition_tree::leaf(w);
            done.emplace(key, t);
            return t;
        }
    }
    ++depth;
    for (int q = p - 1; q >= 0; --q)
        if (auto t = split_at(x, q)) {
            --depth;
            done.emplace(key, *t);
            return t;
        }
    --depth;
    dead.insert(key);
    return std::nullopt;
}

std::optional<composition_tree> decomposer::split_at(const double_sequence& x,
                                                     int q) {
    int p = x.dimension();
    int n = x.ambient();
    const chain& top = x.level(p, sign::minus);
    // Levels q+1 .. p of the left part, chosen from the top down.
    std::vector<std::pair<chain, chain>> upper(
        n + 1, {zero_chain(n), zero_chain(n)});

    std::function<std::optional<composition_tree>(int)> descend =
        [&](int i) -> std::optional<composition_tree> {
        if (i == q) {
            chain w = x.level(q, sign::minus) +
                      boundary(upper[q + 1].first);
            if (!is_nonneg(w)) return std::nullopt;
            std::vector<std::pair<chain, chain>> ulv, vlv;
            for (int r = 0; r < q; ++r) {
                ulv.emplace_back(x.level(r, sign::minus),
                                 x.level(r, sign::plus));
                vlv.emplace_back(x.level(r, sign::minus),
                                 x.level(r, sign::plus));
            }
            ulv.emplace_back(x.level(q, sign::minus), w);
            vlv.emplace_back(w, x.level(q, sign::plus));
            bool u_proper = false, v_proper = false;
            for (int r = q + 1; r <= n; ++r) {
                chain vn = x.level(r, sign::minus) - upper[r].first;
                chain vp = x.level(r, sign::plus) - upper[r].second;
                if (!upper[r].first.is_zero() || !upper[r].second.is_zero())
                    u_proper = true;
                if (!vn.is_zero() || !vp.is_zero()) v_proper = true;
                ulv.push_back(upper[r]);
                vlv.emplace_back(std::move(vn), std::move(vp));
            }
            if (!u_proper || !v_proper) return std::nullopt;
            if (validate_report(x.complex(), ulv) ||
                validate_report(x.complex(), vlv))
                throw internal_error("split candidate fails validation");
            double_sequence u(x.complex(), std::move(ulv));
            double_sequence v(x.complex(), std::move(vlv));
            auto tu = run(u);
            if (!tu) return std::nullopt;
            auto tv = run(v);
            if (!tv) return std::nullopt;
            return composition_tree::node(q, *tu, *tv);
        }
        auto [neg, pos] = signed_parts(boundary(upper[i + 1].first));
        chain cap_neg = x.level(i, sign::minus) - neg;
        chain cap_pos = x.level(i, sign::plus) - pos;
        if (!is_nonneg(cap_neg) || !is_nonneg(cap_pos)) return std::nullopt;
        for (const chain& e : subchains(min_chain(cap_neg, cap_pos))) {
            upper[i] = {neg + e, pos + e};
            if (auto t = descend(i - 1)) return t;
        }
        upper[i] = {zero_chain(n), zero_chain(n)};
        return std::nullopt;
    };

    for (const chain& s : subchains(top)) {
        upper[p] = {s, s};
        if (auto t = descend(p - 1)) return t;
    }
    return std::nullopt;
}

} // namespace

composition_tree decompose(const double_sequence& x) {
    decomposer dec;
    auto t = dec.run(x);
    if (!t)
        throw internal_error("no decomposition found for " +
                             format_sequence(x));
    return *t;
}

basis_element word_embed(const basis_element& sigma,
                         const basis_element& tau) {
    if (tau.ambient() != sigma.degree())
        throw domain_error("embedding of " + tau.word() + " into " +
                           sigma.word() + ": dimension mismatch");
    std::string out = sigma.word();
    int next = 1;
    for (char& c : out)
        if (c == '*') c = tau.letter(next++);
    return basis_element(out);
}

const composition_tree& standard_tree(int p, sign a) {
    if (p < 1)
        throw domain_error("standard trees factorize faces of positive "
                           "degree elements");
    static std::map<std::pair<int, int>, composition_tree> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, to_int(a));
    auto it = cache.find(key);
    if (it == cache.end()) {
        double_sequence face = d(p - 1, a, atom(basis_element::top(p)));
        it = cache.emplace(key, decompose(face)).first;
    }
    return it->second;
}

composition_tree face_tree(sign a, const basis_element& b) {
    int p = b.degree();
    if (p < 1)
        throw domain_error("degree-0 elements have no face factorization");
    return map_leaves(standard_tree(p, a), [&](const basis_element& t) {
        return word_embed(b, t);
    });
}

} // namespace cubenerve
