#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubenerve/chain.hpp"
#include "cubenerve/errors.hpp"

namespace cubenerve {

// An element of the omega-category associated with a complex of cubical
// chains: a double sequence of nonnegative chains
//
//   (x_0^-, x_0^+ | x_1^-, x_1^+ | ... | x_n^-, x_n^+)
//
// with one pair per degree up to the ambient dimension n, satisfying
//   - x_q^a is homogeneous of degree q (or zero),
//   - the augmentation of x_0^- and x_0^+ is 1,
//   - boundary(x_{q+1}^-) = boundary(x_{q+1}^+) = x_q^+ - x_q^-,
// and with every chain lying in the stated complex (full cube, shell, or
// box).  The element has dimension p when the levels above p vanish; the
// relations then force x_p^- = x_p^+.
class double_sequence {
public:
    double_sequence(complex_id complex,
                    std::vector<std::pair<chain, chain>> levels);

    int ambient() const { return complex_.ambient(); }
    const complex_id& complex() const { return complex_; }
    const std::vector<std::pair<chain, chain>>& levels() const {
        return levels_;
    }
    const chain& level(int q, sign a) const;

    // Largest q with a nonzero level-q chain (0 if only level 0 remains).
    int dimension() const;

    bool operator==(const double_sequence& o) const {
        return complex_ == o.complex_ && levels_ == o.levels_;
    }
    bool operator!=(const double_sequence& o) const { return !(*this == o); }
    bool operator<(const double_sequence& o) const;

private:
    complex_id complex_;
    std::vector<std::pair<chain, chain>> levels_;
};

// Why the data above fails to be a valid double sequence, or nothing.
std::optional<std::string> validate_report(
    const complex_id& complex,
    const std::vector<std::pair<chain, chain>>& levels);

// The p-dimensional source (a = -) or target (a = +) of x: levels below p
// are kept, level p becomes (x_p^a, x_p^a), levels above p vanish.  When p
// is at least the dimension of x this is x itself.
double_sequence d(int p, sign a, const double_sequence& x);

// x and y are composable over dimension p iff d(p, +, x) == d(p, -, y).
bool composable(int p, const double_sequence& x, const double_sequence& y);

// Composition over dimension p: levels below p are shared, level p becomes
// (x_p^-, y_p^+), and levels above p add.  Throws composability_error when
// the faces do not match.
double_sequence comp(int p, const double_sequence& x,
                     const double_sequence& y);

// x is an identity for comp_p iff its levels above p vanish.
bool is_identity_for(int p, const double_sequence& x);

// The atom of a basis element: the canonical element of the cube complex
// with (sigma, sigma) at the top level and the signed parts of the
// boundary propagated downwards.  Computed independently by that recursion
// and by the tensor decomposition of the word; the two must agree.
double_sequence atom(const basis_element& b);

// Does every chain of x lie in the complex k?
bool in_complex(const double_sequence& x, const complex_id& k);
// Reinterpret x in the complex k (throws domain_error if some chain does
// not belong there).  The chains are unchanged.
double_sequence with_complex(const double_sequence& x, const complex_id& k);
// Equality of the level chains, ignoring the complex tag.
bool same_values(const double_sequence& a, const double_sequence& b);

// "(x0-, x0+ | x1-, x1+ | ...)"
std::string format_sequence(const double_sequence& x);

// JSON: an array of {"neg": chain, "pos": chain}, one entry per level.
nlohmann::json sequence_to_json(const double_sequence& x);
double_sequence sequence_from_json(const nlohmann::json& j,
                                   const complex_id& complex);

// A formal composite of atoms: leaves carry basis elements, inner nodes
// compose their two subtrees over a dimension p.  Immutable, cheap to copy.
class composition_tree {
public:
    static composition_tree leaf(const basis_element& b);
    static composition_tree node(int p, composition_tree left,
                                 composition_tree right);

    bool is_leaf() const { return impl_->word.has_value(); }
    const basis_element& word() const; // leaves only
    int level() const;                 // inner nodes only
    composition_tree left() const;     // inner nodes only
    composition_tree right() const;    // inner nodes only

    bool operator==(const composition_tree& o) const;
    bool operator!=(const composition_tree& o) const { return !(*this == o); }

private:
    struct rep {
        std::optional<basis_element> word;
        int p = -1;
        std::shared_ptr<const rep> l, r;
    };
    explicit composition_tree(std::shared_ptr<const rep> i)
        : impl_(std::move(i)) {}
    std::shared_ptr<const rep> impl_;
};

// "<word>" for leaves, "(left compP right)" for inner nodes.
std::string render_tree(const composition_tree& t);
// {"leaf": "-**"} or {"p": 0, "left": ..., "right": ...}
nlohmann::json tree_to_json(const composition_tree& t);
composition_tree tree_from_json(const nlohmann::json& j);

composition_tree map_leaves(
    const composition_tree& t,
    const std::function<basis_element(const basis_element&)>& f);

// Replace leaves by their atoms in the cube complex of the given ambient
// dimension and fold the compositions.  Throws on a leaf of the wrong
// ambient dimension or a non-composable node.
double_sequence eval_tree(const composition_tree& t, int ambient);

// Express x as a composite of atoms.  Returns a leaf exactly when x is an
// atom; otherwise searches for a splitting x = u comp_q v with both parts
// proper, highest q first, smallest top part first.  Every element splits
// this way, so failure to find one is an internal error.
composition_tree decompose(const double_sequence& x);

// Replace the stars of sigma, in order, by the letters of tau (whose
// ambient dimension must equal the degree of sigma).
basis_element word_embed(const basis_element& sigma,
                         const basis_element& tau);

// The decomposition of d_{p-1}^a applied to the atom of the top element
// of the p-cube, computed once and cached.
const composition_tree& standard_tree(int p, sign a);

// The decomposition of d_{p-1}^a applied to the atom of b (of degree
// p >= 1): the standard tree with its leaves embedded into b's word.
composition_tree face_tree(sign a, const basis_element& b);

} // namespace cubenerve
