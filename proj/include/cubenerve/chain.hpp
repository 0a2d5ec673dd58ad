#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cubenerve/errors.hpp"
#include "cubenerve/sign.hpp"

namespace cubenerve {

// One basis element of the chain complex of an n-cube: a word of length n
// over the letters '-', '+', '*'.  A sign letter at position i pins that
// coordinate to an endpoint; '*' leaves it free.  The degree is the number
// of '*' letters.  The top element u_n is the all-'*' word; I^0 has the
// single empty word u_0.
class basis_element {
public:
    explicit basis_element(std::string word);

    // u_n: the all-'*' word of length n.
    static basis_element top(int n);

    const std::string& word() const { return word_; }
    int ambient() const { return static_cast<int>(word_.size()); }
    int degree() const;

    // Letter positions are 1-based, matching the subscripts of the face
    // maps that insert them.
    char letter(int pos) const;
    bool is_star(int pos) const { return letter(pos) == '*'; }

    // Copy with the letter at pos replaced.
    basis_element with_letter(int pos, char c) const;
    // Copy with a new letter inserted at pos (length grows by one).
    basis_element with_inserted(int pos, char c) const;
    // Copy with the letter at pos deleted (length shrinks by one).
    basis_element with_deleted(int pos) const;

    bool operator==(const basis_element& o) const { return word_ == o.word_; }
    bool operator!=(const basis_element& o) const { return word_ != o.word_; }
    // Canonical order: positionwise with '-' < '+' < '*'.  This is not the
    // ASCII order ('*' sorts below '+' in ASCII), so it is spelled out here
    // and used everywhere a deterministic term order is needed.
    bool operator<(const basis_element& o) const;

private:
    std::string word_;
};

int letter_rank(char c); // '-' -> 0, '+' -> 1, '*' -> 2

// Names one of the chain complexes this library works in: the full complex
// of the n-cube, the shell (everything except u_n), or a box (everything
// except u_n and one chosen (n-1)-dimensional face).
class complex_id {
public:
    enum class kind_t { cube, shell, box };

    static complex_id cube(int n);
    static complex_id shell(int n);
    static complex_id box(const basis_element& removed_face);

    int ambient() const { return n_; }
    kind_t kind() const { return kind_; }
    const basis_element& removed_face() const;

    // Whether a basis element may appear in chains of this complex.
    bool allows(const basis_element& b) const;

    bool operator==(const complex_id& o) const;
    bool operator!=(const complex_id& o) const { return !(*this == o); }

    std::string describe() const;

private:
    complex_id(int n, kind_t k, std::optional<basis_element> removed);

    int n_;
    kind_t kind_;
    std::optional<basis_element> removed_;
};

// A finitely supported integer combination of basis elements, all of one
// ambient dimension.  Terms are kept sorted in the canonical basis order
// with zero coefficients elided, so equality is structural.
class chain {
public:
    explicit chain(int ambient);
    static chain unit(const basis_element& b); // single term, coefficient 1

    int ambient() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<basis_element, long long>& terms() const { return terms_; }
    long long coeff(const basis_element& b) const;

    // Accumulate c * b, dropping the term if it cancels to zero.
    void add(const basis_element& b, long long c);

    chain& operator+=(const chain& o);
    chain& operator-=(const chain& o);
    chain& operator*=(long long c);
    friend chain operator+(chain a, const chain& b) { return a += b; }
    friend chain operator-(chain a, const chain& b) { return a -= b; }
    friend chain operator*(long long c, chain a) { return a *= c; }
    chain operator-() const;

    bool operator==(const chain& o) const;
    bool operator!=(const chain& o) const { return !(*this == o); }
    // Arbitrary but total order, for use as a map or set key.
    bool operator<(const chain& o) const;

    // True if every term has the same degree (vacuously true when zero).
    bool is_homogeneous() const;
    // Common degree of the terms; -1 for the zero chain.
    int degree() const;

private:
    int n_;
    std::map<basis_element, long long> terms_;
};

// Boundary: on a word, each '*' at position p contributes
// (-1)^(number of '*' strictly left of p) * (word[p -> '+'] - word[p -> '-']).
// Extends linearly.  Degree-0 terms have no '*' positions and contribute
// nothing.
chain boundary(const chain& c);

// Sum of coefficients of a degree-0 chain.
long long augmentation(const chain& c);

// The unique decomposition c = positive - negative with both parts
// componentwise >= 0 and of disjoint support.  Returned as (negative,
// positive).
std::pair<chain, chain> signed_parts(const chain& c);
chain negative_part(const chain& c);
chain positive_part(const chain& c);

// The face inclusion that inserts the letter of a at position i (1-based)
// into every word, mapping chains over the (n-1)-cube to chains over the
// n-cube.  A chain map: commutes with boundary and augmentation.
basis_element face_inclusion(int i, sign a, const basis_element& b);
chain face_inclusion(int i, sign a, const chain& c);

bool is_nonneg(const chain& c);

// Whether the support of c avoids the elements excluded by K.
bool in_complex(const chain& c, const complex_id& K);

// All basis elements of I^n, optionally of one degree, in canonical order.
std::vector<basis_element> all_basis_elements(int n);
std::vector<basis_element> basis_elements_of_degree(int n, int degree);

// Rendering: "2 -** + *+* - **-" style; "0" for the zero chain.
std::string format_chain(const chain& c);

// JSON round trip: {"n": 3, "terms": [{"word": "-*+", "coeff": 2}]} with
// terms in canonical order.
nlohmann::json chain_to_json(const chain& c);
chain chain_from_json(const nlohmann::json& j);

} // namespace cubenerve
