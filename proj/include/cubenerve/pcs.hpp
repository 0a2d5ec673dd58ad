#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cubenerve/errors.hpp"
#include "cubenerve/nerve.hpp"
#include "cubenerve/omega_cat.hpp"
#include "cubenerve/precubical.hpp"

namespace cubenerve {

// A finite stratified precubical set: finitely many cubes with opaque
// string identifiers, face maps one dimension down, and a thinness flag on
// cubes of positive dimension.  Structure is wired in by hand or loaded
// from JSON; set_face checks ids and dimensions, while the face relation
// itself is checked separately by validate_pcs.
class finite_pcs {
public:
    struct cube_data {
        std::string id;
        int dim = 0;
        bool thin = false;
    };

    void add_cube(const std::string& id, int dim, bool thin = false);
    void set_face(const std::string& id, int i, sign a,
                  const std::string& value);
    void set_thin(const std::string& id, bool thin);

    bool has_cube(const std::string& id) const;
    const cube_data& cube(const std::string& id) const;
    int dim(const std::string& id) const { return cube(id).dim; }
    bool thin(const std::string& id) const { return cube(id).thin; }

    bool has_face(const std::string& id, int i, sign a) const;
    const std::string& face(const std::string& id, int i, sign a) const;

    // Identifiers in sorted order.
    std::vector<std::string> ids(int dim) const;
    std::vector<std::string> all_ids() const;
    int size() const { return static_cast<int>(cubes_.size()); }
    int max_dim() const; // -1 when empty

private:
    std::map<std::string, cube_data> cubes_;
    std::map<std::string, std::map<face_op, std::string>> faces_;
};

// Every structural violation: a missing face, a broken instance of the
// relation d_i^a d_j^b = d_j^b d_{i+1}^a (i >= j), or a thin 0-cube.
// Empty means the set is valid.
std::vector<std::string> validate_pcs(const finite_pcs& X);

// The faces of a prospective n-cube drawn from X: all 2n of them for a
// shell, all but one for a box.
struct pcs_family {
    int dim = 0; // dimension a filler would have
    std::map<face_op, std::string> faces;

    bool operator==(const pcs_family& o) const {
        return dim == o.dim && faces == o.faces;
    }
    bool operator<(const pcs_family& o) const {
        if (dim != o.dim) return dim < o.dim;
        return faces < o.faces;
    }
};

// Readable one-line description, e.g. "2-box opposite d1- (d1+=e, ...)".
std::string describe_family(const pcs_family& fam);

// The face family of an existing cube, with or without the (k, g) entry.
pcs_family pcs_shell_of(const finite_pcs& X, const std::string& id);
pcs_family pcs_box_of(const finite_pcs& X, const std::string& id, int k,
                      sign g);

// The face operation a box lacks; domain_error if the family is full or
// is missing more than one face.
face_op missing_face(const pcs_family& fam);

// Violations of d_i^a s_j^b = d_j^b s_{i+1}^a among the present faces.
std::vector<std::string> family_violations(const finite_pcs& X,
                                           const pcs_family& fam);

// Apply a face word, rightmost factor first.  On a cube the identity is
// allowed; on a family the identity and the missing face are domain
// errors, as is any absent face along the way.
std::string apply_op(const finite_pcs& X, const precubical_op& op,
                     const std::string& id);
std::string apply_op(const finite_pcs& X, const precubical_op& op,
                     const pcs_family& fam);

// A box is admissible when every non-identity operation complementary to
// its missing face lands on a thin cube.
bool pcs_box_admissible(const finite_pcs& X, const pcs_family& box);
// A shell is admissible when two distinct non-complementary face
// operations carry equal faces and both boxes obtained by removing one of
// them are admissible.
bool pcs_shell_admissible(const finite_pcs& X, const pcs_family& shell);

// Cubes of X whose faces match every present face of the family.
std::vector<std::string> pcs_fillers(const finite_pcs& X,
                                     const pcs_family& fam);
std::vector<std::string> pcs_thin_fillers(const finite_pcs& X,
                                          const pcs_family& fam);

// All compatible families of the given filler dimension with faces drawn
// from X, in deterministic order.
std::vector<pcs_family> enumerate_shells(const finite_pcs& X, int n);
std::vector<pcs_family> enumerate_boxes(const finite_pcs& X, int n, int k,
                                        sign g);

struct completeness_report {
    int max_dim = 0;
    int boxes_checked = 0;
    int shells_checked = 0;
    // Admissible at dimension max_dim + 1, where a filler would exceed the
    // truncation; counted but not checked.
    int boxes_skipped = 0;
    int shells_skipped = 0;
    int third_condition_checked = 0;
    std::vector<std::string> failures;

    bool complete() const { return failures.empty(); }
};

// Checks, for every admissible box and shell of filler dimension at most
// max_dim, that X holds exactly one thin filler; and for every admissible
// box all of whose faces are thin, that the remaining face of its thin
// filler is thin too.  X must be valid.
completeness_report completeness_check(const finite_pcs& X, int max_dim);

std::string format_completeness_report(const completeness_report& r);
nlohmann::json completeness_report_to_json(const completeness_report& r);

// {"cubes": [{"id": ..., "dim": n, "thin": bool}, ...],
//  "faces": {id: {"i,a": id, ...}, ...}}
nlohmann::json pcs_to_json(const finite_pcs& X);
finite_pcs pcs_from_json(const nlohmann::json& j);

// The standard n-cube as a precubical set: one cube per basis word, faces
// by letter substitution, nothing thin.
finite_pcs free_cube_pcs(int n);

// Every cube of the nerve of a finite omega-category up to the given
// dimension, exported with identifiers q{dim}_{index} in table order.
finite_pcs nerve_pcs(const finite_omega_category& c, int max_dim);

// Export a face-closed pool of nerve cubes (for example the output of
// generate_cubes) under the same identifier scheme.
template <class Target>
finite_pcs pcs_from_cubes(const std::vector<nerve_table<Target>>& pool) {
    std::map<int, std::vector<nerve_table<Target>>> by_dim;
    for (const auto& x : pool) {
        if (x.complex().kind() != complex_id::kind_t::cube)
            throw domain_error("only full cubes can be exported, not " +
                               x.complex().describe());
        by_dim[x.ambient()].push_back(x);
    }
    finite_pcs X;
    std::map<nerve_table<Target>, std::string> id_of;
    for (auto& [n, tables] : by_dim) {
        std::sort(tables.begin(), tables.end());
        tables.erase(std::unique(tables.begin(), tables.end()),
                     tables.end());
        for (std::size_t i = 0; i < tables.size(); ++i) {
            std::string id =
                "q" + std::to_string(n) + "_" + std::to_string(i);
            id_of.emplace(tables[i], id);
            X.add_cube(id, n, n > 0 && is_thin(tables[i]));
        }
    }
    for (const auto& [x, id] : id_of) {
        int n = x.ambient();
        for (int i = 1; i <= n; ++i)
            for (sign a : {sign::minus, sign::plus}) {
                auto it = id_of.find(face(x, i, a));
                if (it == id_of.end())
                    throw domain_error(
                        "the pool is not closed under faces at " + id);
                X.set_face(id, i, a, it->second);
            }
    }
    return X;
}

} // namespace cubenerve
