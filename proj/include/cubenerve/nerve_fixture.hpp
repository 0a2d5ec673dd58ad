#pragma once

#include <map>
#include <string>
#include <vector>

#include "cubenerve/chain.hpp"
#include "cubenerve/nerve.hpp"
#include "cubenerve/omega_cat.hpp"

#include "json.hpp"

namespace cubenerve {

// A small hand-built two-level omega-category: three objects c, d, e, two
// parallel arrows a-, a+ : c -> d, an arrow b : d -> e, their composite
// ab : c -> e, and a single 2-cell A : a- => a+.  Its nerve carries a
// 3-cube that is the thin filler of an admissible box yet has one
// non-thin face, showing that the all-faces-thin hypothesis in the
// completeness condition on boxes cannot be weakened.
finite_omega_category fixture_category();

// A shared immutable instance for building nerve tables against.
const finite_omega_category& shared_fixture();

// The 26 face images of that 3-shell over fixture_category(), keyed by
// basis word; the 2-dimensional entries pair the 2-cell A against the
// arrow b around the cube.
std::map<basis_element, int> fixture_shell_images();

// Everything the shell demonstrates, in one bundle: the category, the
// shell, its thin filler, and a human-readable report of the checked
// facts.  all_expected is true when every fact came out as predicted.
struct counterexample_result {
    finite_omega_category category;
    nerve_table<finite_omega_category> shell;
    nerve_table<finite_omega_category> filler;
    std::vector<std::string> report;
    bool all_expected = false;
};

counterexample_result counterexample();

nlohmann::json counterexample_to_json(const counterexample_result& r);

} // namespace cubenerve
