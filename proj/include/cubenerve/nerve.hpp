#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cubenerve/chain.hpp"
#include "cubenerve/errors.hpp"
#include "cubenerve/nu.hpp"
#include "cubenerve/precubical.hpp"

namespace cubenerve {

// The nerve machinery is generic over a composition target: any
// omega-category-like object providing
//
//     using cell = ...;                            // with ==, <
//     cell d(int p, sign a, cell) const;           // identity for p >= level
//     std::optional<cell> comp(int p, cell, cell) const;
//     bool is_identity_for(int p, cell) const;
//     std::string describe(cell) const;
//
// Both finite_omega_category and nu_target fit.

// Compose a tree of basis-element leaves over a target, reading the leaf
// values from an image table.  Empty when a leaf is missing from the table
// or a composition is undefined.
template <class Target>
std::optional<typename Target::cell> fold_tree(
    const Target& t, const composition_tree& tree,
    const std::map<basis_element, typename Target::cell>& images) {
    if (tree.is_leaf()) {
        auto it = images.find(tree.word());
        if (it == images.end()) return std::nullopt;
        return it->second;
    }
    auto l = fold_tree(t, tree.left(), images);
    if (!l) return std::nullopt;
    auto r = fold_tree(t, tree.right(), images);
    if (!r) return std::nullopt;
    return t.comp(tree.level(), *l, *r);
}

// Every way the images fail to define a morphism on the complex into the
// target: wrong key set, an image that is not an identity at its degree,
// or a face of an image that differs from the folded composite of the
// lower-degree images.
template <class Target>
std::vector<std::string> validate_images(
    const Target& t, const complex_id& complex,
    const std::map<basis_element, typename Target::cell>& images) {
    std::vector<std::string> out;
    std::size_t allowed = 0;
    for (const basis_element& b : all_basis_elements(complex.ambient())) {
        if (!complex.allows(b)) continue;
        ++allowed;
        auto it = images.find(b);
        if (it == images.end()) {
            out.push_back("no image for " + b.word());
            continue;
        }
        int p = b.degree();
        if (!t.is_identity_for(p, it->second)) {
            out.push_back("the image of " + b.word() + " is " +
                          t.describe(it->second) +
                          ", which has dimension above " + std::to_string(p));
            continue;
        }
        if (p == 0) continue;
        for (sign a : {sign::minus, sign::plus}) {
            auto v = fold_tree(t, face_tree(a, b), images);
            if (!v) {
                out.push_back("the boundary composite of " + b.word() +
                              " is undefined");
                continue;
            }
            if (!(t.d(p - 1, a, it->second) == *v))
                out.push_back("the image of " + b.word() +
                              " does not restrict to the composite of the " +
                              "lower images on its " +
                              std::string(1, to_char(a)) + " side");
        }
    }
    if (images.size() != allowed)
        out.push_back("the table has images for words outside the complex");
    return out;
}

// A cube, shell, or box in the cubical nerve of a target: a table
// assigning a target cell to every basis element the complex allows.
// Construction validates the full relation set, so a nerve_table is always
// a genuine (restricted) morphism.
template <class Target>
class nerve_table {
public:
    using cell = typename Target::cell;
    using image_map = std::map<basis_element, cell>;

    nerve_table(const Target& t, complex_id complex, image_map images)
        : target_(&t),
          complex_(std::move(complex)),
          images_(std::move(images)) {
        auto errors = validate_images(t, complex_, images_);
        if (!errors.empty())
            throw domain_error("invalid table on " + complex_.describe() +
                               ": " + errors.front());
    }

    const Target& target() const { return *target_; }
    const complex_id& complex() const { return complex_; }
    int ambient() const { return complex_.ambient(); }

    const cell& image(const basis_element& b) const {
        auto it = images_.find(b);
        if (it == images_.end())
            throw domain_error("the table has no image for " + b.word());
        return it->second;
    }
    const image_map& images() const { return images_; }

    bool operator==(const nerve_table& o) const {
        return complex_ == o.complex_ && images_ == o.images_;
    }
    bool operator!=(const nerve_table& o) const { return !(*this == o); }
    // Total order for use as a map or set key.
    bool operator<(const nerve_table& o) const {
        if (ambient() != o.ambient()) return ambient() < o.ambient();
        auto rank = [](const complex_id& c) {
            if (c.kind() == complex_id::kind_t::cube) return 0;
            return c.kind() == complex_id::kind_t::shell ? 1 : 2;
        };
        if (rank(complex_) != rank(o.complex_))
            return rank(complex_) < rank(o.complex_);
        if (complex_.kind() == complex_id::kind_t::box &&
            complex_.removed_face() != o.complex_.removed_face())
            return complex_.removed_face() < o.complex_.removed_face();
        return images_ < o.images_;
    }

    // Repackages images drawn from the already-validated table x without
    // re-running validation; restrictions and faces of morphisms are
    // morphisms, so this is only for image maps read off from x.
    friend nerve_table reindexed(const nerve_table& x, complex_id c,
                                 image_map m) {
        return nerve_table(*x.target_, std::move(c), std::move(m), 0);
    }

private:
    nerve_table(const Target& t, complex_id complex, image_map images, int)
        : target_(&t),
          complex_(std::move(complex)),
          images_(std::move(images)) {}

    const Target* target_;
    complex_id complex_;
    image_map images_;
};

// Apply the morphism to an arbitrary element of its complex: decompose the
// element into atoms and fold the target compositions over the images.
// The result does not depend on the decomposition chosen.
template <class Target>
typename Target::cell evaluate(const nerve_table<Target>& x,
                               const double_sequence& e) {
    if (e.ambient() != x.ambient())
        throw domain_error("cannot evaluate a table on " +
                           x.complex().describe() + " at an element of a " +
                           std::to_string(e.ambient()) + "-cube");
    if (!in_complex(e, x.complex()))
        throw domain_error("the element " + format_sequence(e) +
                           " does not lie in " + x.complex().describe());
    auto v = fold_tree(x.target(), decompose(e), x.images());
    if (!v)
        throw domain_error("the target does not compose the decomposition "
                           "of " + format_sequence(e));
    return *v;
}

// The direction and sign of the face a box complex is missing.
inline std::pair<int, sign> box_direction(const complex_id& c) {
    const basis_element& w = c.removed_face();
    for (int pos = 1; pos <= w.ambient(); ++pos)
        if (!w.is_star(pos)) return {pos, sign_from_char(w.letter(pos))};
    throw internal_error("box complex with no removed direction");
}

// The face cube in direction (i, a): images are read off by inserting the
// letter of a at position i.  Defined on cubes and shells for every
// direction, and on boxes for every direction except the missing face.
template <class Target>
nerve_table<Target> face(const nerve_table<Target>& x, int i, sign a) {
    int n = x.ambient();
    if (n == 0 || i < 1 || i > n)
        throw domain_error("no face in direction " + std::to_string(i) +
                           " on " + x.complex().describe());
    if (x.complex().kind() == complex_id::kind_t::box) {
        auto [k, g] = box_direction(x.complex());
        if (k == i && g == a)
            throw domain_error("the box is missing its face in direction " +
                               std::to_string(i) + std::string(1, to_char(a)));
    }
    typename nerve_table<Target>::image_map out;
    for (const basis_element& b : all_basis_elements(n - 1))
        out.emplace(b, x.image(face_inclusion(i, a, b)));
    return reindexed(x, complex_id::cube(n - 1), std::move(out));
}

// Apply a precubical operation, rightmost factor first.  The identity is
// only defined on full cubes.
template <class Target>
nerve_table<Target> apply_op(const precubical_op& op,
                             const nerve_table<Target>& x) {
    if (op.ambient() != x.ambient())
        throw domain_error("operation on " + std::to_string(op.ambient()) +
                           "-cubes applied to " + x.complex().describe());
    if (op.is_identity()) {
        if (x.complex().kind() != complex_id::kind_t::cube)
            throw domain_error("the identity operation is not defined on " +
                               x.complex().describe());
        return x;
    }
    const auto& fs = op.factors();
    auto y = face(x, fs.back().index, fs.back().a);
    for (int r = static_cast<int>(fs.size()) - 2; r >= 0; --r)
        y = face(y, fs[r].index, fs[r].a);
    return y;
}

// A cube of positive dimension is thin when its top image is an identity
// one level down.
template <class Target>
bool is_thin(const nerve_table<Target>& x) {
    if (x.complex().kind() != complex_id::kind_t::cube)
        throw domain_error("thinness is defined for full cubes, not " +
                           x.complex().describe());
    int n = x.ambient();
    if (n == 0) throw domain_error("0-cubes are never thin");
    return x.target().is_identity_for(n - 1, x.image(basis_element::top(n)));
}

// Restrict a table to a smaller complex of the same ambient dimension.
template <class Target>
nerve_table<Target> restrict_to(const nerve_table<Target>& x, complex_id c) {
    if (c.ambient() != x.ambient())
        throw domain_error("cannot restrict across ambient dimensions");
    typename nerve_table<Target>::image_map out;
    for (const auto& [b, v] : x.images())
        if (c.allows(b)) out.emplace(b, v);
    return reindexed(x, std::move(c), std::move(out));
}

template <class Target>
nerve_table<Target> shell_of(const nerve_table<Target>& x) {
    return restrict_to(x, complex_id::shell(x.ambient()));
}

template <class Target>
nerve_table<Target> box_of(const nerve_table<Target>& x, int k, sign g) {
    return restrict_to(
        x, complex_id::box(face_inclusion(k, g, basis_element::top(
                                                    x.ambient() - 1))));
}

// A box is admissible when every face picked out by a non-identity
// operation complementary to the missing direction is thin.
template <class Target>
bool box_admissible(const nerve_table<Target>& b) {
    if (b.complex().kind() != complex_id::kind_t::box)
        throw domain_error("admissibility of a box requires a box, not " +
                           b.complex().describe());
    auto [k, g] = box_direction(b.complex());
    for (const precubical_op& op : complementary_ops(b.ambient(), k, g)) {
        if (op.is_identity()) continue;
        if (!is_thin(apply_op(op, b))) return false;
    }
    return true;
}

// A shell is admissible when two distinct faces in non-complementary
// directions ((-)^k gamma differs from (-)^l delta) are equal and removing
// either one leaves an admissible box.
template <class Target>
bool shell_admissible(const nerve_table<Target>& s) {
    if (s.complex().kind() != complex_id::kind_t::shell)
        throw domain_error("admissibility of a shell requires a shell, not " +
                           s.complex().describe());
    int n = s.ambient();
    for (int k = 1; k <= n; ++k)
        for (sign g : {sign::minus, sign::plus})
            for (int l = k; l <= n; ++l)
                for (sign d : {sign::minus, sign::plus}) {
                    if (l == k && (g == sign::plus || d == sign::minus))
                        continue; // each unordered pair once
                    if (parity_sign(k) * g == parity_sign(l) * d) continue;
                    if (face(s, k, g) != face(s, l, d)) continue;
                    if (box_admissible(box_of(s, k, g)) &&
                        box_admissible(box_of(s, l, d)))
                        return true;
                }
    return false;
}

// The unique thin filler of a shell: the two boundary composites of the
// would-be top cell must agree, and the filler's top image is that common
// value.  Throws filler_error when the composites differ.
template <class Target>
nerve_table<Target> fill_shell(const nerve_table<Target>& s) {
    if (s.complex().kind() != complex_id::kind_t::shell)
        throw domain_error("fill_shell requires a shell, not " +
                           s.complex().describe());
    int n = s.ambient();
    auto vm = fold_tree(s.target(), standard_tree(n, sign::minus), s.images());
    auto vp = fold_tree(s.target(), standard_tree(n, sign::plus), s.images());
    if (!vm || !vp)
        throw domain_error("the shell's boundary composites are undefined");
    if (!(*vm == *vp))
        throw filler_error("the shell has no thin filler: its boundary "
                           "composites are " + s.target().describe(*vm) +
                           " and " + s.target().describe(*vp));
    typename nerve_table<Target>::image_map out = s.images();
    out.emplace(basis_element::top(n), *vm);
    return nerve_table<Target>(s.target(), complex_id::cube(n),
                               std::move(out));
}

// The unique thin filler of an admissible box: the missing face image is
// forced to be the boundary composite on the side that avoids it, after
// which the completed shell is filled.
template <class Target>
nerve_table<Target> fill_box(const nerve_table<Target>& b) {
    if (b.complex().kind() != complex_id::kind_t::box)
        throw domain_error("fill_box requires a box, not " +
                           b.complex().describe());
    if (!box_admissible(b))
        throw domain_error("the box is not admissible, so it has no forced "
                           "thin filler");
    auto [k, g] = box_direction(b.complex());
    int n = b.ambient();
    auto w = fold_tree(b.target(), standard_tree(n, parity_sign(k) * g),
                       b.images());
    if (!w)
        throw domain_error("the box's boundary composite is undefined");
    typename nerve_table<Target>::image_map out = b.images();
    out.emplace(b.complex().removed_face(), *w);
    nerve_table<Target> s(b.target(), complex_id::shell(n), std::move(out));
    return fill_shell(s);
}

// Assemble a shell from its 2n face cubes.  Overlapping faces must agree;
// the assembled table is validated in full.
template <class Target>
nerve_table<Target> shell_from_faces(
    const Target& t, int n,
    const std::function<nerve_table<Target>(int, sign)>& face_of) {
    std::map<std::pair<int, int>, nerve_table<Target>> fs;
    for (int i = 1; i <= n; ++i)
        for (sign a : {sign::minus, sign::plus})
            fs.emplace(std::make_pair(i, a == sign::plus), face_of(i, a));
    typename nerve_table<Target>::image_map out;
    complex_id c = complex_id::shell(n);
    for (const basis_element& b : all_basis_elements(n)) {
        if (!c.allows(b)) continue;
        std::optional<typename Target::cell> v;
        for (int pos = 1; pos <= n; ++pos) {
            if (b.is_star(pos)) continue;
            const auto& f = fs.at({pos, b.letter(pos) == '+'});
            const auto& w = f.image(b.with_deleted(pos));
            if (!v)
                v = w;
            else if (!(*v == w))
                throw internal_error("assembled faces disagree at " +
                                     b.word());
        }
        out.emplace(b, *v);
    }
    return nerve_table<Target>(t, std::move(c), std::move(out));
}

// Assemble a box opposite direction (k, g) from its 2n - 1 face cubes; the
// callback is never asked for the missing face.
template <class Target>
nerve_table<Target> box_from_faces(
    const Target& t, int n, int k, sign g,
    const std::function<nerve_table<Target>(int, sign)>& face_of) {
    std::map<std::pair<int, int>, nerve_table<Target>> fs;
    for (int i = 1; i <= n; ++i)
        for (sign a : {sign::minus, sign::plus}) {
            if (i == k && a == g) continue;
            fs.emplace(std::make_pair(i, a == sign::plus), face_of(i, a));
        }
    typename nerve_table<Target>::image_map out;
    complex_id c =
        complex_id::box(face_inclusion(k, g, basis_element::top(n - 1)));
    for (const basis_element& b : all_basis_elements(n)) {
        if (!c.allows(b)) continue;
        std::optional<typename Target::cell> v;
        for (int pos = 1; pos <= n; ++pos) {
            if (b.is_star(pos)) continue;
            if (pos == k && b.letter(pos) == to_char(g)) continue;
            const auto& f = fs.at({pos, b.letter(pos) == '+'});
            const auto& w = f.image(b.with_deleted(pos));
            if (!v)
                v = w;
            else if (!(*v == w))
                throw internal_error("assembled faces disagree at " +
                                     b.word());
        }
        out.emplace(b, *v);
    }
    return nerve_table<Target>(t, std::move(c), std::move(out));
}

// Degeneracies, connections, composers and composites, built inductively
// as thin fillers of the shells and boxes their face equations prescribe.
// The instance memoizes every construction, so repeated work over a fixed
// target (test suites, pools) stays cheap.
template <class Target>
class cube_ops {
public:
    using table = nerve_table<Target>;

    explicit cube_ops(const Target& t) : t_(&t) {}
    const Target& target() const { return *t_; }

    // The thin (n+1)-cube collapsing direction k: both its k-faces are x.
    table degeneracy(int k, const table& x) {
        require_cube(x, "degeneracy");
        int n = x.ambient();
        if (k < 1 || k > n + 1)
            throw domain_error("degeneracy direction " + std::to_string(k) +
                               " out of range for a " + std::to_string(n) +
                               "-cube");
        return memoized('e', k, sign::minus, {x}, [&] {
            return fill_shell(shell_from_faces<Target>(
                *t_, n + 1, [&](int i, sign a) -> table {
                    if (i < k) return degeneracy(k - 1, face(x, i, a));
                    if (i == k) return x;
                    return degeneracy(k, face(x, i - 1, a));
                }));
        });
    }

    // The thin (n+1)-cube folding direction k onto direction k+1: its g
    // faces in both directions are x, its -g faces are degenerate.
    table connection(int k, sign g, const table& x) {
        require_cube(x, "connection");
        int n = x.ambient();
        if (n < 1 || k < 1 || k > n)
            throw domain_error("connection direction " + std::to_string(k) +
                               " out of range for a " + std::to_string(n) +
                               "-cube");
        return memoized('c', k, g, {x}, [&] {
            return fill_shell(shell_from_faces<Target>(
                *t_, n + 1, [&](int i, sign a) -> table {
                    if (i < k) return connection(k - 1, g, face(x, i, a));
                    if (i > k + 1) return connection(k, g, face(x, i - 1, a));
                    if (a == g) return x;
                    return degeneracy(k, face(x, k, -g));
                }));
        });
    }

    // The thin (n+1)-cube pasting y after x in direction k; its missing
    // face is the composite x in direction k with y.
    table composer(int k, const table& x, const table& y) {
        require_cube(x, "composer");
        require_cube(y, "composer");
        int n = x.ambient();
        if (y.ambient() != n || n < 1 || k < 1 || k > n)
            throw domain_error("composer direction " + std::to_string(k) +
                               " needs two cubes of equal dimension >= " +
                               std::to_string(k));
        if (face(x, k, sign::plus) != face(y, k, sign::minus))
            throw composability_error(
                "the cubes do not meet in direction " + std::to_string(k));
        return memoized('g', k, sign::minus, {x, y}, [&] {
            return fill_box(box_from_faces<Target>(
                *t_, n + 1, k, sign::minus, [&](int i, sign a) -> table {
                    if (i < k)
                        return composer(k - 1, face(x, i, a), face(y, i, a));
                    if (i > k + 1)
                        return composer(k, face(x, i - 1, a),
                                        face(y, i - 1, a));
                    if (i == k) return y;            // a == plus here
                    if (a == sign::minus) return x;  // i == k + 1
                    return degeneracy(k, face(y, k, sign::plus));
                }));
        });
    }

    table composite(int k, const table& x, const table& y) {
        return face(composer(k, x, y), k, sign::minus);
    }

    // Squeezes the content of directions k and k+1 into direction k by
    // composing with connections; directions above k+1 become degenerate
    // on the (k+1)-faces.
    table psi(int k, const table& x) {
        require_cube(x, "psi");
        int n = x.ambient();
        if (n < 2 || k < 1 || k > n - 1)
            throw domain_error("psi direction " + std::to_string(k) +
                               " out of range for a " + std::to_string(n) +
                               "-cube");
        return memoized('p', k, sign::minus, {x}, [&] {
            table l = connection(k, sign::plus, face(x, k + 1, sign::minus));
            table r = connection(k, sign::minus, face(x, k + 1, sign::plus));
            return composite(k + 1, composite(k + 1, l, x), r);
        });
    }

    // Iterated psi, squeezing everything into direction 1: a cube is thin
    // exactly when its flattening is the degeneracy of its own positive
    // 1-face.
    table flatten(const table& x) {
        require_cube(x, "flatten");
        int n = x.ambient();
        if (n == 0) throw domain_error("flatten needs a positive dimension");
        table y = x;
        for (int k = n - 1; k >= 1; --k) y = psi(k, y);
        return y;
    }

private:
    static void require_cube(const table& x, const char* who) {
        if (x.complex().kind() != complex_id::kind_t::cube)
            throw domain_error(std::string(who) + " is defined on full "
                               "cubes, not " + x.complex().describe());
    }

    template <class Make>
    table memoized(char op, int k, sign g, std::vector<table> args,
                   const Make& make) {
        auto key = std::make_tuple(op, k, g == sign::plus, std::move(args));
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        table value = make();
        return memo_.emplace(std::move(key), std::move(value)).first->second;
    }

    const Target* t_;
    std::map<std::tuple<char, int, bool, std::vector<table>>, table> memo_;
};

// One-shot conveniences; heavy callers should keep a cube_ops instance.
template <class Target>
nerve_table<Target> degeneracy(int k, const nerve_table<Target>& x) {
    cube_ops<Target> ops(x.target());
    return ops.degeneracy(k, x);
}
template <class Target>
nerve_table<Target> connection(int k, sign g, const nerve_table<Target>& x) {
    cube_ops<Target> ops(x.target());
    return ops.connection(k, g, x);
}
template <class Target>
nerve_table<Target> composer(int k, const nerve_table<Target>& x,
                             const nerve_table<Target>& y) {
    cube_ops<Target> ops(x.target());
    return ops.composer(k, x, y);
}
template <class Target>
nerve_table<Target> composite(int k, const nerve_table<Target>& x,
                              const nerve_table<Target>& y) {
    cube_ops<Target> ops(x.target());
    return ops.composite(k, x, y);
}

// Close a seed set of cubes under faces, degeneracies, connections and
// composites up to the given dimension, deduplicated, breadth first, until
// nothing new appears or the cap is reached.
template <class Target>
std::vector<nerve_table<Target>> generate_cubes(
    cube_ops<Target>& ops, std::vector<nerve_table<Target>> seeds,
    int max_dim, std::size_t cap) {
    std::vector<nerve_table<Target>> pool;
    std::set<nerve_table<Target>> seen;
    auto add = [&](const nerve_table<Target>& x) {
        if (pool.size() >= cap) return;
        if (seen.insert(x).second) pool.push_back(x);
    };
    for (const auto& s : seeds) add(s);
    for (std::size_t i = 0; i < pool.size() && pool.size() < cap; ++i) {
        // pool grows while we walk it; index-based loop keeps that safe
        const auto x = pool[i];
        int n = x.ambient();
        for (int k = 1; k <= n; ++k)
            for (sign a : {sign::minus, sign::plus}) add(face(x, k, a));
        if (n + 1 <= max_dim) {
            for (int k = 1; k <= n + 1; ++k) add(ops.degeneracy(k, x));
            for (int k = 1; k <= n; ++k)
                for (sign g : {sign::minus, sign::plus})
                    add(ops.connection(k, g, x));
        }
        for (std::size_t j = 0; j <= i && pool.size() < cap; ++j) {
            const auto y = pool[j];
            if (y.ambient() != n) continue;
            for (int k = 1; k <= n; ++k) {
                if (face(x, k, sign::plus) == face(y, k, sign::minus))
                    add(ops.composite(k, x, y));
                if (face(y, k, sign::plus) == face(x, k, sign::minus))
                    add(ops.composite(k, y, x));
            }
        }
    }
    // Seeds above max_dim contribute their faces but are not returned.
    std::erase_if(pool, [max_dim](const nerve_table<Target>& x) {
        return x.ambient() > max_dim;
    });
    return pool;
}

} // namespace cubenerve
