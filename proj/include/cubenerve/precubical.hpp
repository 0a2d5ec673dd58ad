#pragma once

#include <string>
#include <vector>

#include "cubenerve/chain.hpp"
#include "cubenerve/sign.hpp"

namespace cubenerve {

// One face map d_i^a.  Written "d1-", "d2+", ... in text form.
struct face_op {
    int index;
    sign a;

    bool operator==(const face_op& o) const {
        return index == o.index && a == o.a;
    }
    bool operator<(const face_op& o) const {
        if (index != o.index) return index < o.index;
        return to_int(a) < to_int(o.a);
    }
};

// A composite of face maps acting on n-cubes.  Factors are listed
// left to right as written, and the word applies right to left: the LAST
// factor acts first.  So the factor at position r from the right acts on
// cubes of dimension n - r + 1, and its index must lie in [1, n - r + 1].
//
// Standard form means strictly increasing indices left to right; every
// word is equal to a unique standard-form word under the relation
//     d_i^a d_j^b = d_j^b d_{i+1}^a   for i >= j.
// The empty word is the identity.
class precubical_op {
public:
    // Requires the factors to already be in standard form and valid for
    // the ambient dimension; use normalize() for arbitrary words.
    precubical_op(int ambient, std::vector<face_op> factors);
    static precubical_op identity(int ambient);

    int ambient() const { return ambient_; }
    const std::vector<face_op>& factors() const { return factors_; }
    bool is_identity() const { return factors_.empty(); }
    // Dimension of the cubes the operation produces.
    int result_dim() const {
        return ambient_ - static_cast<int>(factors_.size());
    }

    // "d1- d2+" with factors in standard order; "id" for the identity.
    std::string render() const;
    static precubical_op parse(const std::string& text, int ambient);

    bool operator==(const precubical_op& o) const {
        return ambient_ == o.ambient_ && factors_ == o.factors_;
    }
    bool operator!=(const precubical_op& o) const { return !(*this == o); }
    bool operator<(const precubical_op& o) const;

private:
    int ambient_;
    std::vector<face_op> factors_; // strictly increasing indices
};

// True if the word has strictly increasing indices left to right.
bool is_standard(const std::vector<face_op>& word);

// Checks that each factor's index is valid for the dimension it acts on
// (rightmost factor first), then rewrites the word to its unique standard
// form by repeatedly applying d_i^a d_j^b -> d_j^b d_{i+1}^a for i >= j.
precubical_op normalize(std::vector<face_op> word, int ambient);

// A standard-form operation d_{i(1)}^{a(1)} ... d_{i(p)}^{a(p)} is extreme
// if the signs (-)^{i(r)-r} a(r) agree for all r (vacuously so for the
// identity).
bool is_extreme(const precubical_op& op);

// op is complementary to d_k^g if it has no factor with index k and
// inserting d_k^{-g} into its standard form yields an extreme operation.
bool is_complementary(const precubical_op& op, int k, sign g);

// All operations on n-cubes complementary to d_k^g.  There are 2^{n-1} of
// them, one per subset of {1..n}\{k}; returned with the subsets enumerated
// as ascending bitmasks, which puts the identity first.
std::vector<precubical_op> complementary_ops(int n, int k, sign g);

// All standard-form operations on n-cubes (3^n of them), identity first,
// then by factor count and factor order.
std::vector<precubical_op> all_ops(int n);

// The bijection between standard-form operations on n-cubes and basis
// elements of I^n: apply the factors of op left to right as face
// inclusions, starting from the top element of dimension result_dim().
// The resulting word has a(r) at position i(r) and '*' elsewhere.
basis_element op_to_basis(const precubical_op& op);
// Inverse: read off the sign letters of b in ascending position order.
precubical_op basis_to_op(const basis_element& b);

} // namespace cubenerve
