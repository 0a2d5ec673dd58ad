#include "cubenerve/precubical.hpp"

#include <algorithm>
#include <sstream>

namespace cubenerve {

namespace {

// The factor at 0-based position r of a length-p word acts on cubes of
// dimension ambient - (p - 1 - r); its index must fit that dimension.
void check_word(const std::vector<face_op>& word, int ambient) {
    int p = static_cast<int>(word.size());
    if (p > ambient)
        throw domain_error("word of length " + std::to_string(p) +
                           " cannot act on " + std::to_string(ambient) +
                           "-cubes");
    for (int r = 0; r < p; ++r) {
        int acts_on = ambient - (p - 1 - r);
        int idx = word[static_cast<size_t>(r)].index;
        if (idx < 1 || idx > acts_on)
            throw domain_error("factor at position " + std::to_string(r + 1) +
                               " acts on " + std::to_string(acts_on) +
                               "-cubes but has index " + std::to_string(idx));
    }
}

} // namespace

precubical_op::precubical_op(int ambient, std::vector<face_op> factors)
    : ambient_(ambient), factors_(std::move(factors)) {
    if (ambient < 0) throw domain_error("negative dimension");
    if (!is_standard(factors_))
        throw domain_error("factors not in standard form; use normalize()");
    check_word(factors_, ambient_);
}

precubical_op precubical_op::identity(int ambient) {
    return precubical_op(ambient, {});
}

std::string precubical_op::render() const {
    if (factors_.empty()) return "id";
    std::ostringstream os;
    for (size_t r = 0; r < factors_.size(); ++r) {
        if (r) os << ' ';
        os << 'd' << factors_[r].index << to_char(factors_[r].a);
    }
    return os.str();
}

precubical_op precubical_op::parse(const std::string& text, int ambient) {
    std::istringstream is(text);
    std::vector<face_op> word;
    std::string tok;
    while (is >> tok) {
        if (tok == "id") continue;
        if (tok.size() < 3 || tok[0] != 'd')
            throw domain_error("bad face token '" + tok + "'");
        char sc = tok.back();
        int idx;
        try {
            idx = std::stoi(tok.substr(1, tok.size() - 2));
        } catch (const std::exception&) {
            throw domain_error("bad face token '" + tok + "'");
        }
        word.push_back(face_op{idx, sign_from_char(sc)});
    }
    return normalize(std::move(word), ambient);
}

bool precubical_op::operator<(const precubical_op& o) const {
    if (ambient_ != o.ambient_) return ambient_ < o.ambient_;
    if (factors_.size() != o.factors_.size())
        return factors_.size() < o.factors_.size();
    return factors_ < o.factors_;
}

bool is_standard(const std::vector<face_op>& word) {
    for (size_t r = 1; r < word.size(); ++r)
        if (word[r - 1].index >= word[r].index) return false;
    return true;
}

precubical_op normalize(std::vector<face_op> word, int ambient) {
    check_word(word, ambient);
    // Each rewrite fixes one adjacent inversion and raises the index sum
    // by one; the sum is bounded, so this terminates.
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t r = 0; r + 1 < word.size(); ++r) {
            if (word[r].index >= word[r + 1].index) {
                face_op left = word[r], right = word[r + 1];
                word[r] = right;
                word[r + 1] = face_op{left.index + 1, left.a};
                changed = true;
            }
        }
    }
    return precubical_op(ambient, std::move(word));
}

namespace {

// The sign (-)^{i-r} a of a factor d_i^a at 1-based standard position r.
sign extremity_sign(const face_op& f, int r) {
    return parity_sign(f.index - r) * f.a;
}

} // namespace

bool is_extreme(const precubical_op& op) {
    const auto& fs = op.factors();
    for (size_t r = 1; r < fs.size(); ++r)
        if (extremity_sign(fs[r], static_cast<int>(r) + 1) !=
            extremity_sign(fs[0], 1))
            return false;
    return true;
}

bool is_complementary(const precubical_op& op, int k, sign g) {
    if (k < 1 || k > op.ambient())
        throw domain_error("face index " + std::to_string(k) +
                           " out of range for I^" + std::to_string(op.ambient()));
    std::vector<face_op> word;
    bool inserted = false;
    for (const auto& f : op.factors()) {
        if (f.index == k) return false;
        if (f.index > k && !inserted) {
            word.push_back(face_op{k, -g});
            inserted = true;
        }
        word.push_back(f);
    }
    if (!inserted) word.push_back(face_op{k, -g});
    return is_extreme(precubical_op(op.ambient(), std::move(word)));
}

std::vector<precubical_op> complementary_ops(int n, int k, sign g) {
    if (k < 1 || k > n)
        throw domain_error("face index " + std::to_string(k) +
                           " out of range for I^" + std::to_string(n));
    // Positions other than k, in the bit order 1, 2, ..., n (skipping k).
    std::vector<int> others;
    for (int i = 1; i <= n; ++i)
        if (i != k) others.push_back(i);

    std::vector<precubical_op> out;
    for (unsigned mask = 0; mask < (1u << others.size()); ++mask) {
        std::vector<int> chosen{k};
        for (size_t bit = 0; bit < others.size(); ++bit)
            if (mask & (1u << bit)) chosen.push_back(others[bit]);
        std::sort(chosen.begin(), chosen.end());
        // The extreme operation through these indices containing d_k^{-g}:
        // its constant sign is fixed by the factor at index k, and each
        // other factor's sign follows from its position.
        int r0 = static_cast<int>(
                     std::lower_bound(chosen.begin(), chosen.end(), k) -
                     chosen.begin()) + 1;
        sign constant = parity_sign(k - r0) * (-g);
        std::vector<face_op> word;
        for (size_t r = 0; r < chosen.size(); ++r) {
            int idx = chosen[r];
            if (idx == k) continue;
            // In the extreme word, idx sits at position r+1; solve
            // (-)^{idx-(r+1)} a = constant for a.
            sign a = parity_sign(idx - (static_cast<int>(r) + 1)) * constant;
            word.push_back(face_op{idx, a});
        }
        precubical_op op(n, std::move(word));
        if (!is_complementary(op, k, g))
            throw internal_error("constructed operation " + op.render() +
                                 " is not complementary to d" +
                                 std::to_string(k) + to_char(g));
        out.push_back(std::move(op));
    }
    return out;
}

std::vector<precubical_op> all_ops(int n) {
    std::vector<precubical_op> out;
    // One operation per subset of {1..n} with signs; enumerate subsets as
    // bitmasks and signs as nested masks.
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) idx.push_back(i + 1);
        unsigned p = static_cast<unsigned>(idx.size());
        for (unsigned smask = 0; smask < (1u << p); ++smask) {
            std::vector<face_op> word;
            for (unsigned r = 0; r < p; ++r)
                word.push_back(face_op{
                    idx[r], (smask & (1u << r)) ? sign::plus : sign::minus});
            out.push_back(precubical_op(n, std::move(word)));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

basis_element op_to_basis(const precubical_op& op) {
    basis_element b = basis_element::top(op.result_dim());
    for (const auto& f : op.factors()) b = face_inclusion(f.index, f.a, b);
    return b;
}

precubical_op basis_to_op(const basis_element& b) {
    std::vector<face_op> word;
    for (int pos = 1; pos <= b.ambient(); ++pos) {
        char c = b.letter(pos);
        if (c != '*') word.push_back(face_op{pos, sign_from_char(c)});
    }
    return precubical_op(b.ambient(), std::move(word));
}

} // namespace cubenerve
