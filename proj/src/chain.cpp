#include "cubenerve/chain.hpp"

#include <algorithm>
#include <sstream>

namespace cubenerve {

int letter_rank(char c) {
    switch (c) {
        case '-': return 0;
        case '+': return 1;
        case '*': return 2;
    }
    throw domain_error(std::string("not a cube letter: '") + c + "'");
}

basis_element::basis_element(std::string word) : word_(std::move(word)) {
    for (char c : word_) letter_rank(c); // validates
}

basis_element basis_element::top(int n) {
    if (n < 0) throw domain_error("negative dimension");
    return basis_element(std::string(static_cast<size_t>(n), '*'));
}

int basis_element::degree() const {
    return static_cast<int>(std::count(word_.begin(), word_.end(), '*'));
}

char basis_element::letter(int pos) const {
    if (pos < 1 || pos > ambient())
        throw domain_error("letter position " + std::to_string(pos) +
                           " out of range for word of length " +
                           std::to_string(ambient()));
    return word_[static_cast<size_t>(pos - 1)];
}

basis_element basis_element::with_letter(int pos, char c) const {
    letter(pos); // range check
    letter_rank(c);
    std::string w = word_;
    w[static_cast<size_t>(pos - 1)] = c;
    return basis_element(std::move(w));
}

basis_element basis_element::with_inserted(int pos, char c) const {
    if (pos < 1 || pos > ambient() + 1)
        throw domain_error("insert position " + std::to_string(pos) +
                           " out of range for word of length " +
                           std::to_string(ambient()));
    letter_rank(c);
    std::string w = word_;
    w.insert(w.begin() + (pos - 1), c);
    return basis_element(std::move(w));
}

basis_element basis_element::with_deleted(int pos) const {
    letter(pos); // range check
    std::string w = word_;
    w.erase(w.begin() + (pos - 1));
    return basis_element(std::move(w));
}

bool basis_element::operator<(const basis_element& o) const {
    if (word_.size() != o.word_.size()) return word_.size() < o.word_.size();
    for (size_t i = 0; i < word_.size(); ++i) {
        int a = letter_rank(word_[i]), b = letter_rank(o.word_[i]);
        if (a != b) return a < b;
    }
    return false;
}

complex_id::complex_id(int n, kind_t k, std::optional<basis_element> removed)
    : n_(n), kind_(k), removed_(std::move(removed)) {}

complex_id complex_id::cube(int n) {
    if (n < 0) throw domain_error("negative dimension");
    return complex_id(n, kind_t::cube, std::nullopt);
}

complex_id complex_id::shell(int n) {
    if (n < 1) throw domain_error("shells need dimension >= 1");
    return complex_id(n, kind_t::shell, std::nullopt);
}

complex_id complex_id::box(const basis_element& removed_face) {
    int n = removed_face.ambient();
    if (removed_face.degree() != n - 1)
        throw domain_error("a box removes a face of degree n-1, got degree " +
                           std::to_string(removed_face.degree()) + " in I^" +
                           std::to_string(n));
    return complex_id(n, kind_t::box, removed_face);
}

const basis_element& complex_id::removed_face() const {
    if (!removed_) throw domain_error("only boxes have a removed face");
    return *removed_;
}

bool complex_id::allows(const basis_element& b) const {
    if (b.ambient() != n_) return false;
    if (kind_ == kind_t::cube) return true;
    if (b.degree() == n_) return false; // u_n is excluded from shells and boxes
    if (kind_ == kind_t::box && b == *removed_) return false;
    return true;
}

bool complex_id::operator==(const complex_id& o) const {
    if (n_ != o.n_ || kind_ != o.kind_) return false;
    if (kind_ == kind_t::box) return *removed_ == *o.removed_;
    return true;
}

std::string complex_id::describe() const {
    switch (kind_) {
        case kind_t::cube: return "cube(" + std::to_string(n_) + ")";
        case kind_t::shell: return "shell(" + std::to_string(n_) + ")";
        case kind_t::box: return "box(" + removed_->word() + ")";
    }
    return "?";
}

chain::chain(int ambient) : n_(ambient) {
    if (ambient < 0) throw domain_error("negative dimension");
}

chain chain::unit(const basis_element& b) {
    chain c(b.ambient());
    c.add(b, 1);
    return c;
}

long long chain::coeff(const basis_element& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? 0 : it->second;
}

void chain::add(const basis_element& b, long long c) {
    if (b.ambient() != n_)
        throw domain_error("term of ambient dimension " +
                           std::to_string(b.ambient()) + " added to chain in I^" +
                           std::to_string(n_));
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(b, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

chain& chain::operator+=(const chain& o) {
    if (o.n_ != n_) throw domain_error("chain dimensions differ");
    for (const auto& [b, c] : o.terms_) add(b, c);
    return *this;
}

chain& chain::operator-=(const chain& o) {
    if (o.n_ != n_) throw domain_error("chain dimensions differ");
    for (const auto& [b, c] : o.terms_) add(b, -c);
    return *this;
}

chain& chain::operator*=(long long c) {
    if (c == 0) {
        terms_.clear();
    } else {
        for (auto& [b, v] : terms_) v *= c;
    }
    return *this;
}

chain chain::operator-() const {
    chain r(n_);
    for (const auto& [b, c] : terms_) r.add(b, -c);
    return r;
}

bool chain::operator==(const chain& o) const {
    return n_ == o.n_ && terms_ == o.terms_;
}

bool chain::operator<(const chain& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return terms_ < o.terms_;
}

bool chain::is_homogeneous() const {
    int d = -1;
    for (const auto& [b, c] : terms_) {
        if (d == -1) d = b.degree();
        else if (b.degree() != d) return false;
    }
    return true;
}

int chain::degree() const {
    if (terms_.empty()) return -1;
    int d = terms_.begin()->first.degree();
    for (const auto& [b, c] : terms_)
        if (b.degree() != d)
            throw domain_error("degree of an inhomogeneous chain");
    return d;
}

chain boundary(const chain& c) {
    chain r(c.ambient());
    for (const auto& [b, coeff] : c.terms()) {
        // Degree-0 terms have no '*' positions: empty sum, no contribution.
        long long s = 1; // (-1)^(number of '*' seen so far)
        for (int p = 1; p <= b.ambient(); ++p) {
            if (b.letter(p) != '*') continue;
            r.add(b.with_letter(p, '+'), coeff * s);
            r.add(b.with_letter(p, '-'), -coeff * s);
            s = -s;
        }
    }
    return r;
}

long long augmentation(const chain& c) {
    long long sum = 0;
    for (const auto& [b, coeff] : c.terms()) {
        if (b.degree() != 0)
            throw domain_error("augmentation of a positive-degree term " +
                               b.word());
        sum += coeff;
    }
    return sum;
}

std::pair<chain, chain> signed_parts(const chain& c) {
    chain neg(c.ambient()), pos(c.ambient());
    for (const auto& [b, coeff] : c.terms()) {
        if (coeff > 0) pos.add(b, coeff);
        else neg.add(b, -coeff);
    }
    return {neg, pos};
}

chain negative_part(const chain& c) { return signed_parts(c).first; }
chain positive_part(const chain& c) { return signed_parts(c).second; }

basis_element face_inclusion(int i, sign a, const basis_element& b) {
    if (i < 1 || i > b.ambient() + 1)
        throw domain_error("face inclusion index " + std::to_string(i) +
                           " out of range for I^" + std::to_string(b.ambient()));
    return b.with_inserted(i, to_char(a));
}

chain face_inclusion(int i, sign a, const chain& c) {
    chain r(c.ambient() + 1);
    for (const auto& [b, coeff] : c.terms())
        r.add(face_inclusion(i, a, b), coeff);
    return r;
}

bool is_nonneg(const chain& c) {
    for (const auto& [b, coeff] : c.terms())
        if (coeff < 0) return false;
    return true;
}

bool in_complex(const chain& c, const complex_id& K) {
    if (c.ambient() != K.ambient()) return false;
    for (const auto& [b, coeff] : c.terms())
        if (!K.allows(b)) return false;
    return true;
}

std::vector<basis_element> all_basis_elements(int n) {
    std::vector<std::string> words{""};
    for (int i = 0; i < n; ++i) {
        std::vector<std::string> next;
        next.reserve(words.size() * 3);
        for (const auto& w : words)
            for (char c : {'-', '+', '*'}) next.push_back(w + c);
        words = std::move(next);
    }
    std::vector<basis_element> out;
    out.reserve(words.size());
    for (auto& w : words) out.push_back(basis_element(std::move(w)));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<basis_element> basis_elements_of_degree(int n, int degree) {
    std::vector<basis_element> out;
    for (auto& b : all_basis_elements(n))
        if (b.degree() == degree) out.push_back(b);
    return out;
}

std::string format_chain(const chain& c) {
    if (c.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [b, coeff] : c.terms()) {
        long long a = coeff;
        if (first) {
            if (a < 0) { os << "- "; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (a != 1) os << a << " ";
        os << (b.ambient() == 0 ? "()" : b.word());
        first = false;
    }
    return os.str();
}

nlohmann::json chain_to_json(const chain& c) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [b, coeff] : c.terms())
        terms.push_back({{"word", b.word()}, {"coeff", coeff}});
    return {{"n", c.ambient()}, {"terms", std::move(terms)}};
}

chain chain_from_json(const nlohmann::json& j) {
    chain c(j.at("n").get<int>());
    for (const auto& t : j.at("terms"))
        c.add(basis_element(t.at("word").get<std::string>()),
              t.at("coeff").get<long long>());
    return c;
}

} // namespace cubenerve
