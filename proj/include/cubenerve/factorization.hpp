#pragma once

#include "cubenerve/nu.hpp"
#include "cubenerve/precubical.hpp"

namespace cubenerve {

// Splits one face of the n-cube's atom into a composite in which a chosen
// (n-1)-dimensional face appears exactly once and every other factor
// avoids it.  The chosen face sits in slot k (1-based) with sign g; its
// word sigma has that sign at position k and stars elsewhere.
//
// The splitting is organized around a retraction of the chain complex onto
// the subcomplex generated by sigma's letters and a chain homotopy
// witnessing it.  Interpolating stages A_0, ..., A_{n-1} connect the atom
// of sigma (A_0) to the whole cube's face d_{n-1} with sign (-1)^{k-1} g
// (A_{n-1}); each step composes two low-dimensional correction terms
// around the previous stage.
class face_factorization {
public:
    face_factorization(int n, int k, sign g);

    int ambient() const { return n_; }
    int slot() const { return k_; }
    sign facing() const { return g_; }

    // The distinguished face's word: stars everywhere except the sign g
    // at position k.
    const basis_element& sigma() const { return sigma_; }

    // Chain map sending each word through the distinguished face: words
    // with a star in slot k die, otherwise slot k is forced to g.
    // Idempotent; commutes with boundary and augmentation.
    chain retract(const chain& c) const;

    // Degree +1 map h with boundary(h(c)) + h(boundary(c)) = c - retract(c).
    // A word survives only when slot k carries the sign opposite to g; the
    // slot opens to a star and the coefficient is -(-1)^i g for i stars
    // strictly left of the slot.
    chain homotopy(const chain& c) const;

    // The q-th interpolating stage A_q, 0 <= q <= n-1: agrees with the
    // cube's atom below level q, with (id - boundary . homotopy) applied
    // at level q, and with sigma's atom above.
    double_sequence stage(int q) const;

    // The correction terms A_q^beta, 1 <= q <= n-1: at most q-dimensional,
    // supported away from both the top element and sigma, satisfying
    // stage(q) = (stage_side(q,-) comp_{q-1} stage(q-1)) comp_{q-1}
    //            stage_side(q,+).
    double_sequence stage_side(int q, sign beta) const;

    // The full composition tree: sigma's leaf wrapped by the decomposed
    // correction terms, level by level.  Evaluates to
    // d(n-1, (-1)^{k-1} g, atom of the top element).
    composition_tree tree() const;

private:
    int n_, k_;
    sign g_;
    basis_element sigma_;
    double_sequence top_; // the n-cube's atom
};

// Human-readable account of the factorization: the headline equation with
// symbolic correction terms A_q^beta, one line per correction term (its
// decomposition, or a note that it is an identity at its composition
// level), the fully expanded tree, and a verdict line confirming that the
// tree evaluates to the face it factorizes.
std::string format_factorization(const face_factorization& ff);

// Machine-readable form: parameters, sigma, the headline equation, the
// correction terms (value and decomposition), the expanded tree, the
// evaluated face, and the verification flag.
nlohmann::json factorization_to_json(const face_factorization& ff);

} // namespace cubenerve
