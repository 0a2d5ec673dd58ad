#include "cubenerve/pcs.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

namespace cubenerve {

namespace {

std::string op_name(const face_op& f) {
    return "d" + std::to_string(f.index) + to_char(f.a);
}

std::string op_name(int i, sign a) { return op_name(face_op{i, a}); }

} // namespace

void finite_pcs::add_cube(const std::string& id, int dim, bool thin) {
    if (dim < 0) throw domain_error("a cube cannot have dimension " +
                                    std::to_string(dim));
    if (!cubes_.emplace(id, cube_data{id, dim, thin}).second)
        throw domain_error("duplicate cube identifier " + id);
}

void finite_pcs::set_face(const std::string& id, int i, sign a,
                          const std::string& value) {
    const cube_data& c = cube(id);
    if (i < 1 || i > c.dim)
        throw domain_error("the " + std::to_string(c.dim) + "-cube " + id +
                           " has no face direction " + std::to_string(i));
    const cube_data& v = cube(value);
    if (v.dim != c.dim - 1)
        throw domain_error("the face " + op_name(i, a) + " of " + id +
                           " must have dimension " +
                           std::to_string(c.dim - 1) + ", but " + value +
                           " has dimension " + std::to_string(v.dim));
    faces_[id][face_op{i, a}] = value;
}

void finite_pcs::set_thin(const std::string& id, bool thin) {
    auto it = cubes_.find(id);
    if (it == cubes_.end()) throw domain_error("no cube named " + id);
    it->second.thin = thin;
}

bool finite_pcs::has_cube(const std::string& id) const {
    return cubes_.count(id) > 0;
}

const finite_pcs::cube_data& finite_pcs::cube(const std::string& id) const {
    auto it = cubes_.find(id);
    if (it == cubes_.end()) throw domain_error("no cube named " + id);
    return it->second;
}

bool finite_pcs::has_face(const std::string& id, int i, sign a) const {
    auto it = faces_.find(id);
    if (it == faces_.end()) return false;
    return it->second.count(face_op{i, a}) > 0;
}

const std::string& finite_pcs::face(const std::string& id, int i,
                                    sign a) const {
    cube(id); // report unknown identifiers first
    auto it = faces_.find(id);
    if (it != faces_.end()) {
        auto f = it->second.find(face_op{i, a});
        if (f != it->second.end()) return f->second;
    }
    throw domain_error("the cube " + id + " has no face " + op_name(i, a));
}

std::vector<std::string> finite_pcs::ids(int dim) const {
    std::vector<std::string> out;
    for (const auto& [id, c] : cubes_)
        if (c.dim == dim) out.push_back(id);
    return out;
}

std::vector<std::string> finite_pcs::all_ids() const {
    std::vector<std::string> out;
    out.reserve(cubes_.size());
    for (const auto& [id, c] : cubes_) out.push_back(id);
    return out;
}

int finite_pcs::max_dim() const {
    int m = -1;
    for (const auto& [id, c] : cubes_) m = std::max(m, c.dim);
    return m;
}

std::vector<std::string> validate_pcs(const finite_pcs& X) {
    std::vector<std::string> out;
    for (const std::string& id : X.all_ids()) {
        const auto& c = X.cube(id);
        if (c.dim == 0 && c.thin)
            out.push_back("the 0-cube " + id + " is marked thin");
        for (int i = 1; i <= c.dim; ++i)
            for (sign a : {sign::minus, sign::plus})
                if (!X.has_face(id, i, a))
                    out.push_back("the cube " + id + " has no face " +
                                  op_name(i, a));
        // d_i^a d_j^b = d_j^b d_{i+1}^a for i >= j; skip any instance with
        // a gap, which is already reported above.
        for (int j = 1; j <= c.dim; ++j)
            for (sign b : {sign::minus, sign::plus}) {
                if (!X.has_face(id, j, b)) continue;
                for (int i = j; i <= c.dim - 1; ++i)
                    for (sign a : {sign::minus, sign::plus}) {
                        if (!X.has_face(id, i + 1, a)) continue;
                        const std::string& fj = X.face(id, j, b);
                        const std::string& fi = X.face(id, i + 1, a);
                        if (!X.has_face(fj, i, a) ||
                            !X.has_face(fi, j, b))
                            continue;
                        const std::string& left = X.face(fj, i, a);
                        const std::string& right = X.face(fi, j, b);
                        if (left != right)
                            out.push_back(
                                "the faces of " + id +
                                " break the relation: " + op_name(i, a) +
                                " after " + op_name(j, b) + " gives " +
                                left + " but " + op_name(j, b) + " after " +
                                op_name(i + 1, a) + " gives " + right);
                    }
            }
    }
    return out;
}

std::string describe_family(const pcs_family& fam) {
    std::ostringstream s;
    int present = static_cast<int>(fam.faces.size());
    if (present == 2 * fam.dim) {
        s << fam.dim << "-shell";
    } else {
        s << fam.dim << "-box";
        for (int i = 1; i <= fam.dim; ++i)
            for (sign a : {sign::minus, sign::plus})
                if (!fam.faces.count(face_op{i, a}))
                    s << " opposite " << op_name(i, a);
    }
    s << " (";
    bool first = true;
    for (const auto& [op, id] : fam.faces) {
        if (!first) s << ", ";
        first = false;
        s << op_name(op) << "=" << id;
    }
    s << ")";
    return s.str();
}

pcs_family pcs_shell_of(const finite_pcs& X, const std::string& id) {
    int n = X.dim(id);
    if (n == 0) throw domain_error("the 0-cube " + id + " has no shell");
    pcs_family fam;
    fam.dim = n;
    for (int i = 1; i <= n; ++i)
        for (sign a : {sign::minus, sign::plus})
            fam.faces[face_op{i, a}] = X.face(id, i, a);
    return fam;
}

pcs_family pcs_box_of(const finite_pcs& X, const std::string& id, int k,
                      sign g) {
    pcs_family fam = pcs_shell_of(X, id);
    if (k < 1 || k > fam.dim)
        throw domain_error("no face " + op_name(k, g) + " on a " +
                           std::to_string(fam.dim) + "-cube");
    fam.faces.erase(face_op{k, g});
    return fam;
}

face_op missing_face(const pcs_family& fam) {
    std::optional<face_op> found;
    for (int i = 1; i <= fam.dim; ++i)
        for (sign a : {sign::minus, sign::plus})
            if (!fam.faces.count(face_op{i, a})) {
                if (found)
                    throw domain_error(
                        "the family is missing more than one face");
                found = face_op{i, a};
            }
    if (!found) throw domain_error("the family is a full shell");
    return *found;
}

std::vector<std::string> family_violations(const finite_pcs& X,
                                           const pcs_family& fam) {
    std::vector<std::string> out;
    for (const auto& [e, x] : fam.faces)
        for (const auto& [o, y] : fam.faces) {
            if (e.index >= o.index) continue;
            // d_e(s_o) must equal d_{o-1 with o's sign}(s_e)
            if (!X.has_face(y, e.index, e.a) ||
                !X.has_face(x, o.index - 1, o.a)) {
                out.push_back("the comparison of " + op_name(e) + " and " +
                              op_name(o) + " is undefined");
                continue;
            }
            const std::string& left = X.face(y, e.index, e.a);
            const std::string& right = X.face(x, o.index - 1, o.a);
            if (left != right)
                out.push_back("the faces " + op_name(e) + "=" + x +
                              " and " + op_name(o) + "=" + y +
                              " do not meet: " + left + " versus " + right);
        }
    return out;
}

std::string apply_op(const finite_pcs& X, const precubical_op& op,
                     const std::string& id) {
    if (op.ambient() != X.dim(id))
        throw domain_error("an operation on " +
                           std::to_string(op.ambient()) +
                           "-cubes cannot act on the " +
                           std::to_string(X.dim(id)) + "-cube " + id);
    std::string cur = id;
    const auto& fs = op.factors();
    for (auto it = fs.rbegin(); it != fs.rend(); ++it)
        cur = X.face(cur, it->index, it->a);
    return cur;
}

std::string apply_op(const finite_pcs& X, const precubical_op& op,
                     const pcs_family& fam) {
    if (op.ambient() != fam.dim)
        throw domain_error("an operation on " +
                           std::to_string(op.ambient()) +
                           "-cubes cannot act on the faces of a " +
                           std::to_string(fam.dim) + "-cube");
    if (op.is_identity())
        throw domain_error(
            "the identity operation does not act on a shell or box");
    const auto& fs = op.factors();
    const face_op& first = fs.back(); // rightmost factor acts first
    auto it = fam.faces.find(first);
    if (it == fam.faces.end())
        throw domain_error("the family has no face " + op_name(first));
    std::string cur = it->second;
    for (auto r = std::next(fs.rbegin()); r != fs.rend(); ++r)
        cur = X.face(cur, r->index, r->a);
    return cur;
}

bool pcs_box_admissible(const finite_pcs& X, const pcs_family& box) {
    face_op miss = missing_face(box);
    for (const precubical_op& op :
         complementary_ops(box.dim, miss.index, miss.a)) {
        if (op.is_identity()) continue;
        if (!X.thin(apply_op(X, op, box))) return false;
    }
    return true;
}

bool pcs_shell_admissible(const finite_pcs& X, const pcs_family& shell) {
    if (static_cast<int>(shell.faces.size()) != 2 * shell.dim)
        throw domain_error("admissibility of shells needs all " +
                           std::to_string(2 * shell.dim) + " faces");
    for (const auto& [f, x] : shell.faces)
        for (const auto& [g, y] : shell.faces) {
            if (!(f < g)) continue;
            if (x != y) continue;
            // the two operations must not be complementary to each other
            if (f.index != g.index &&
                parity_sign(f.index) * f.a == parity_sign(g.index) * g.a)
                continue;
            pcs_family left = shell;
            left.faces.erase(f);
            pcs_family right = shell;
            right.faces.erase(g);
            if (pcs_box_admissible(X, left) &&
                pcs_box_admissible(X, right))
                return true;
        }
    return false;
}

std::vector<std::string> pcs_fillers(const finite_pcs& X,
                                     const pcs_family& fam) {
    std::vector<std::string> out;
    for (const std::string& id : X.ids(fam.dim)) {
        bool match = true;
        for (const auto& [op, value] : fam.faces)
            if (!X.has_face(id, op.index, op.a) ||
                X.face(id, op.index, op.a) != value) {
                match = false;
                break;
            }
        if (match) out.push_back(id);
    }
    return out;
}

std::vector<std::string> pcs_thin_fillers(const finite_pcs& X,
                                          const pcs_family& fam) {
    std::vector<std::string> out;
    for (const std::string& id : pcs_fillers(X, fam))
        if (X.thin(id)) out.push_back(id);
    return out;
}

namespace {

// All compatible families of filler dimension n, optionally omitting one
// face, assigned in face order with bucket lookups against the already
// chosen faces.
std::vector<pcs_family> enumerate_families(const finite_pcs& X, int n,
                                           std::optional<face_op> missing) {
    if (n < 1)
        throw domain_error("shells and boxes need dimension at least 1");
    std::vector<pcs_family> out;
    std::vector<face_op> ops;
    for (int i = 1; i <= n; ++i)
        for (sign a : {sign::minus, sign::plus})
            if (!(missing && face_op{i, a} == *missing))
                ops.push_back(face_op{i, a});
    const std::vector<std::string> lower = X.ids(n - 1);
    if (lower.empty()) return out;

    // Earlier faces with strictly smaller index constrain each position.
    std::vector<std::vector<face_op>> earlier(ops.size());
    for (std::size_t t = 0; t < ops.size(); ++t)
        for (std::size_t s = 0; s < t; ++s)
            if (ops[s].index < ops[t].index) earlier[t].push_back(ops[s]);

    using bucket_map =
        std::map<std::vector<std::string>, std::vector<std::string>>;
    std::vector<bucket_map> bucket(ops.size());
    for (std::size_t t = 0; t < ops.size(); ++t) {
        if (earlier[t].empty()) continue;
        for (const std::string& c : lower) {
            std::vector<std::string> key;
            key.reserve(earlier[t].size());
            bool ok = true;
            for (const face_op& e : earlier[t]) {
                if (!X.has_face(c, e.index, e.a)) {
                    ok = false;
                    break;
                }
                key.push_back(X.face(c, e.index, e.a));
            }
            if (ok) bucket[t][std::move(key)].push_back(c);
        }
    }

    pcs_family fam;
    fam.dim = n;
    std::function<void(std::size_t)> assign = [&](std::size_t t) {
        if (t == ops.size()) {
            out.push_back(fam);
            return;
        }
        const face_op o = ops[t];
        static const std::vector<std::string> none;
        const std::vector<std::string>* cands = &none;
        if (earlier[t].empty()) {
            cands = &lower;
        } else {
            std::vector<std::string> key;
            key.reserve(earlier[t].size());
            bool ok = true;
            for (const face_op& e : earlier[t]) {
                const std::string& prev = fam.faces.at(e);
                if (!X.has_face(prev, o.index - 1, o.a)) {
                    ok = false;
                    break;
                }
                key.push_back(X.face(prev, o.index - 1, o.a));
            }
            if (ok) {
                auto it = bucket[t].find(key);
                if (it != bucket[t].end()) cands = &it->second;
            }
        }
        for (const std::string& c : *cands) {
            fam.faces[o] = c;
            assign(t + 1);
            fam.faces.erase(o);
        }
    };
    assign(0);
    return out;
}

} // namespace

std::vector<pcs_family> enumerate_shells(const finite_pcs& X, int n) {
    return enumerate_families(X, n, std::nullopt);
}

std::vector<pcs_family> enumerate_boxes(const finite_pcs& X, int n, int k,
                                        sign g) {
    if (k < 1 || k > n)
        throw domain_error("no face " + op_name(k, g) + " on a " +
                           std::to_string(n) + "-cube");
    return enumerate_families(X, n, face_op{k, g});
}

completeness_report completeness_check(const finite_pcs& X, int max_dim) {
    completeness_report rep;
    rep.max_dim = max_dim;
    auto check_family = [&](const pcs_family& fam, bool is_box) {
        auto thin = pcs_thin_fillers(X, fam);
        if (thin.size() != 1) {
            std::string count =
                thin.empty() ? "no thin filler"
                             : std::to_string(thin.size()) + " thin fillers";
            std::string witnesses;
            for (const std::string& id : thin) witnesses += " " + id;
            rep.failures.push_back("admissible " + describe_family(fam) +
                                   " has " + count +
                                   (thin.empty() ? "" : ":" + witnesses));
        }
        if (!is_box) return;
        // Third condition: a thin filler of an all-thin admissible box has
        // a thin remaining face as well.
        bool all_thin = true;
        for (const auto& [op, id] : fam.faces)
            if (!X.thin(id)) {
                all_thin = false;
                break;
            }
        if (!all_thin) return;
        face_op miss = missing_face(fam);
        for (const std::string& x : thin) {
            ++rep.third_condition_checked;
            const std::string& extra = X.face(x, miss.index, miss.a);
            if (!X.thin(extra))
                rep.failures.push_back(
                    "the thin filler " + x + " of the all-thin admissible " +
                    describe_family(fam) + " has a non-thin " +
                    op_name(miss) + " face " + extra);
        }
    };

    for (int n = 1; n <= max_dim + 1; ++n) {
        bool beyond = n == max_dim + 1;
        for (const pcs_family& s : enumerate_shells(X, n)) {
            if (!pcs_shell_admissible(X, s)) continue;
            if (beyond) {
                ++rep.shells_skipped;
                continue;
            }
            ++rep.shells_checked;
            check_family(s, false);
        }
        for (int k = 1; k <= n; ++k)
            for (sign g : {sign::minus, sign::plus})
                for (const pcs_family& b : enumerate_boxes(X, n, k, g)) {
                    if (!pcs_box_admissible(X, b)) continue;
                    if (beyond) {
                        ++rep.boxes_skipped;
                        continue;
                    }
                    ++rep.boxes_checked;
                    check_family(b, true);
                }
    }
    return rep;
}

std::string format_completeness_report(const completeness_report& r) {
    std::ostringstream s;
    s << "checked " << r.boxes_checked << " admissible boxes and "
      << r.shells_checked << " admissible shells up to dimension "
      << r.max_dim << "\n";
    s << "skipped " << r.boxes_skipped << " admissible boxes and "
      << r.shells_skipped << " admissible shells at dimension "
      << r.max_dim + 1 << " (fillers above the truncation)\n";
    s << "third-condition instances checked: " << r.third_condition_checked
      << "\n";
    for (const std::string& f : r.failures) s << "failure: " << f << "\n";
    s << "result: " << (r.complete() ? "complete" : "INCOMPLETE") << "\n";
    return s.str();
}

nlohmann::json completeness_report_to_json(const completeness_report& r) {
    nlohmann::json j;
    j["max_dim"] = r.max_dim;
    j["boxes_checked"] = r.boxes_checked;
    j["shells_checked"] = r.shells_checked;
    j["boxes_skipped"] = r.boxes_skipped;
    j["shells_skipped"] = r.shells_skipped;
    j["third_condition_checked"] = r.third_condition_checked;
    j["failures"] = r.failures;
    j["complete"] = r.complete();
    return j;
}

nlohmann::json pcs_to_json(const finite_pcs& X) {
    std::vector<finite_pcs::cube_data> cubes;
    for (const std::string& id : X.all_ids()) cubes.push_back(X.cube(id));
    std::stable_sort(cubes.begin(), cubes.end(),
                     [](const auto& a, const auto& b) {
                         return a.dim < b.dim;
                     });
    nlohmann::json j;
    j["cubes"] = nlohmann::json::array();
    for (const auto& c : cubes)
        j["cubes"].push_back(
            {{"id", c.id}, {"dim", c.dim}, {"thin", c.thin}});
    j["faces"] = nlohmann::json::object();
    for (const auto& c : cubes) {
        if (c.dim == 0) continue;
        nlohmann::json fs = nlohmann::json::object();
        for (int i = 1; i <= c.dim; ++i)
            for (sign a : {sign::minus, sign::plus})
                if (X.has_face(c.id, i, a))
                    fs[std::to_string(i) + "," + to_char(a)] =
                        X.face(c.id, i, a);
        j["faces"][c.id] = fs;
    }
    return j;
}

finite_pcs pcs_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("cubes") || !j.contains("faces") ||
        !j["cubes"].is_array() || !j["faces"].is_object())
        throw domain_error(
            "a precubical set needs a cubes array and a faces object");
    finite_pcs X;
    for (const auto& c : j["cubes"]) {
        if (!c.is_object() || !c.contains("id") || !c.contains("dim") ||
            !c["id"].is_string() || !c["dim"].is_number_integer())
            throw domain_error(
                "every cube needs an id string and an integer dim");
        bool thin = false;
        if (c.contains("thin")) {
            if (!c["thin"].is_boolean())
                throw domain_error("thin must be a boolean");
            thin = c["thin"].get<bool>();
        }
        X.add_cube(c["id"].get<std::string>(), c["dim"].get<int>(), thin);
    }
    for (const auto& [id, fs] : j["faces"].items()) {
        if (!fs.is_object())
            throw domain_error("the faces of " + id + " must be an object");
        for (const auto& [key, value] : fs.items()) {
            auto comma = key.find(',');
            if (comma == std::string::npos || comma == 0 ||
                comma + 2 != key.size())
                throw domain_error("bad face key " + key + " on " + id);
            int i = 0;
            try {
                std::size_t used = 0;
                i = std::stoi(key.substr(0, comma), &used);
                if (used != comma) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                throw domain_error("bad face key " + key + " on " + id);
            }
            sign a = sign_from_char(key[comma + 1]);
            if (!value.is_string())
                throw domain_error("the face " + key + " of " + id +
                                   " must name a cube");
            X.set_face(id, i, a, value.get<std::string>());
        }
    }
    return X;
}

finite_pcs free_cube_pcs(int n) {
    finite_pcs X;
    for (const basis_element& b : all_basis_elements(n))
        X.add_cube(b.word(), b.degree());
    for (const basis_element& b : all_basis_elements(n)) {
        int q = b.degree();
        if (q == 0) continue;
        int star = 0;
        for (int pos = 1; pos <= n; ++pos) {
            if (!b.is_star(pos)) continue;
            ++star;
            for (sign a : {sign::minus, sign::plus})
                X.set_face(b.word(), star, a,
                           b.with_letter(pos, to_char(a)).word());
        }
    }
    return X;
}

namespace {

// Every valid n-cube table over the category, found by assigning images
// degree by degree; each face of a word must restrict to the composite of
// the images below it.
std::vector<nerve_table<finite_omega_category>> all_nerve_cubes(
    const finite_omega_category& c, int n) {
    std::vector<basis_element> words = all_basis_elements(n);
    std::stable_sort(words.begin(), words.end(),
                     [](const basis_element& a, const basis_element& b) {
                         return a.degree() < b.degree();
                     });
    std::vector<nerve_table<finite_omega_category>> out;
    nerve_table<finite_omega_category>::image_map m;
    std::function<void(std::size_t)> assign = [&](std::size_t t) {
        if (t == words.size()) {
            out.emplace_back(c, complex_id::cube(n), m);
            return;
        }
        const basis_element& w = words[t];
        int q = w.degree();
        std::optional<int> need_minus, need_plus;
        if (q >= 1) {
            need_minus = fold_tree(c, face_tree(sign::minus, w), m);
            need_plus = fold_tree(c, face_tree(sign::plus, w), m);
            if (!need_minus || !need_plus) return;
        }
        for (int x = 0; x < c.size(); ++x) {
            if (!c.is_identity_for(q, x)) continue;
            if (q >= 1 && (c.d(q - 1, sign::minus, x) != *need_minus ||
                           c.d(q - 1, sign::plus, x) != *need_plus))
                continue;
            m.emplace(w, x);
            assign(t + 1);
            m.erase(w);
        }
    };
    assign(0);
    return out;
}

} // namespace

finite_pcs nerve_pcs(const finite_omega_category& c, int max_dim) {
    std::vector<nerve_table<finite_omega_category>> all;
    for (int n = 0; n <= max_dim; ++n) {
        auto tables = all_nerve_cubes(c, n);
        all.insert(all.end(), tables.begin(), tables.end());
    }
    return pcs_from_cubes(all);
}

} // namespace cubenerve
