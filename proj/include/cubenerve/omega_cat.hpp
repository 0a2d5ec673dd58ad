#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubenerve/nu.hpp"

namespace cubenerve {

// A finite omega-category presented on a single set of cells, truncated at
// a level N: face maps d_p^a are stored for p < N and act as the identity
// above, and composition over p >= N is defined only between equal cells.
// Face maps and composites are wired in by hand (or from JSON); whether
// the result satisfies the category laws is checked by validate_category.
class finite_omega_category {
public:
    using cell = int;

    finite_omega_category(int level, std::vector<std::string> names);

    int level() const { return level_; }
    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(cell c) const;
    cell by_name(const std::string& name) const;

    void set_d(int p, sign a, cell c, cell value);
    void set_comp(int p, cell x, cell y, cell z);
    void erase_comp(int p, cell x, cell y);

    // Total for p < level only when fully wired; throws domain_error on a
    // missing entry.
    cell d(int p, sign a, cell c) const;
    std::optional<cell> comp(int p, cell x, cell y) const;
    bool is_identity_for(int p, cell c) const;
    std::string describe(cell c) const { return name(c); }

    // The raw composition table for dimension p (p < level).
    const std::map<std::pair<cell, cell>, cell>& comp_table(int p) const;

private:
    void check_cell(cell c) const;
    int level_;
    std::vector<std::string> names_;
    std::map<std::string, cell> index_;
    // d_[p][0] = d_p^-, d_[p][1] = d_p^+; -1 marks an unset entry.
    std::vector<std::array<std::vector<cell>, 2>> d_;
    std::vector<std::map<std::pair<cell, cell>, cell>> comp_;
};

// Every violation of the omega-category laws: totality of the face maps,
// their compatibility, composability exactly on matching faces, units,
// faces of composites, associativity, and interchange.  Empty means the
// category is lawful.
std::vector<std::string> validate_category(const finite_omega_category& c);

// {"level": N, "cells": [...], "d": {"p,a": {cell: cell}},
//  "comp": {"p": [[x, y, z], ...]}}
nlohmann::json category_to_json(const finite_omega_category& c);
finite_omega_category category_from_json(const nlohmann::json& j);

// The cube omega-category itself as a composition target: cells are
// double sequences.
struct nu_target {
    using cell = double_sequence;
    cell d(int p, sign a, const cell& x) const {
        return cubenerve::d(p, a, x);
    }
    std::optional<cell> comp(int p, const cell& x, const cell& y) const {
        if (!composable(p, x, y)) return std::nullopt;
        return cubenerve::comp(p, x, y);
    }
    bool is_identity_for(int p, const cell& x) const {
        return cubenerve::is_identity_for(p, x);
    }
    std::string describe(const cell& x) const { return format_sequence(x); }
};

// The closure of the m-cube's atoms under faces and composition, packaged
// as a finite omega-category of level m.  cells[i] is the double sequence
// behind cell i.
struct materialized_nu {
    finite_omega_category category;
    std::vector<double_sequence> cells;
};
materialized_nu materialize_nu(int m);

} // namespace cubenerve
