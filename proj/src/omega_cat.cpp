#include "cubenerve/omega_cat.hpp"

#include <algorithm>

namespace cubenerve {

finite_omega_category::finite_omega_category(int level,
                                             std::vector<std::string> names)
    : level_(level), names_(std::move(names)) {
    if (level < 0) throw domain_error("category level must be nonnegative");
    for (int i = 0; i < size(); ++i) {
        if (names_[i].empty()) throw domain_error("empty cell name");
        if (!index_.emplace(names_[i], i).second)
            throw domain_error("duplicate cell name " + names_[i]);
    }
    d_.resize(level_);
    for (auto& maps : d_) {
        maps[0].assign(names_.size(), -1);
        maps[1].assign(names_.size(), -1);
    }
    comp_.resize(level_);
}

void finite_omega_category::check_cell(cell c) const {
    if (c < 0 || c >= size())
        throw domain_error("cell index " + std::to_string(c) +
                           " out of range");
}

const std::string& finite_omega_category::name(cell c) const {
    check_cell(c);
    return names_[c];
}

finite_omega_category::cell finite_omega_category::by_name(
    const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw domain_error("no cell named " + name);
    return it->second;
}

void finite_omega_category::set_d(int p, sign a, cell c, cell value) {
    check_cell(c);
    check_cell(value);
    if (p < 0 || p >= level_)
        throw domain_error("face maps are stored for dimensions below " +
                           std::to_string(level_));
    d_[p][a == sign::plus][c] = value;
}

void finite_omega_category::set_comp(int p, cell x, cell y, cell z) {
    check_cell(x);
    check_cell(y);
    check_cell(z);
    if (p < 0 || p >= level_)
        throw domain_error("composites are stored for dimensions below " +
                           std::to_string(level_));
    comp_[p][{x, y}] = z;
}

void finite_omega_category::erase_comp(int p, cell x, cell y) {
    if (p < 0 || p >= level_) return;
    comp_[p].erase({x, y});
}

finite_omega_category::cell finite_omega_category::d(int p, sign a,
                                                     cell c) const {
    check_cell(c);
    if (p < 0) throw domain_error("face dimension must be nonnegative");
    if (p >= level_) return c;
    cell value = d_[p][a == sign::plus][c];
    if (value < 0)
        throw domain_error("face d_" + std::to_string(p) +
                           (a == sign::plus ? "^+" : "^-") +
                           " is not defined on cell " + names_[c]);
    return value;
}

std::optional<finite_omega_category::cell> finite_omega_category::comp(
    int p, cell x, cell y) const {
    check_cell(x);
    check_cell(y);
    if (p < 0) throw domain_error("composition dimension must be nonnegative");
    if (p >= level_) {
        if (x == y) return x;
        return std::nullopt;
    }
    auto it = comp_[p].find({x, y});
    if (it == comp_[p].end()) return std::nullopt;
    return it->second;
}

bool finite_omega_category::is_identity_for(int p, cell c) const {
    return d(p, sign::minus, c) == c;
}

const std::map<std::pair<int, int>, int>& finite_omega_category::comp_table(
    int p) const {
    if (p < 0 || p >= level_)
        throw domain_error("no composition table in dimension " +
                           std::to_string(p));
    return comp_[p];
}

std::vector<std::string> validate_category(const finite_omega_category& c) {
    std::vector<std::string> out;
    int N = c.level(), S = c.size();

    for (int p = 0; p < N; ++p)
        for (sign a : {sign::minus, sign::plus})
            for (int x = 0; x < S; ++x)
                try {
                    c.d(p, a, x);
                } catch (const domain_error& e) {
                    out.push_back(e.what());
                }
    if (!out.empty()) return out; // the laws below need total face maps

    auto nm = [&](int x) { return c.name(x); };

    for (int x = 0; x < S; ++x)
        for (int p = 0; p <= N; ++p)
            for (sign pa : {sign::minus, sign::plus})
                for (int q = 0; q <= N; ++q)
                    for (sign qa : {sign::minus, sign::plus}) {
                        int lhs = c.d(p, pa, c.d(q, qa, x));
                        int rhs = p >= q ? c.d(q, qa, x) : c.d(p, pa, x);
                        if (lhs != rhs)
                            out.push_back("face maps disagree on " + nm(x) +
                                          ": d_" + std::to_string(p) +
                                          " after d_" + std::to_string(q));
                    }

    for (int p = 0; p < N; ++p)
        for (int x = 0; x < S; ++x)
            for (int y = 0; y < S; ++y) {
                bool defined = c.comp(p, x, y).has_value();
                bool matching =
                    c.d(p, sign::plus, x) == c.d(p, sign::minus, y);
                if (defined && !matching)
                    out.push_back("composite over " + std::to_string(p) +
                                  " of " + nm(x) + " and " + nm(y) +
                                  " is defined but their faces differ");
                if (!defined && matching)
                    out.push_back("composite over " + std::to_string(p) +
                                  " of " + nm(x) + " and " + nm(y) +
                                  " should be defined");
            }

    for (int p = 0; p < N; ++p)
        for (int x = 0; x < S; ++x) {
            auto lu = c.comp(p, c.d(p, sign::minus, x), x);
            if (lu && *lu != x)
                out.push_back("left unit law fails over " +
                              std::to_string(p) + " at " + nm(x));
            auto ru = c.comp(p, x, c.d(p, sign::plus, x));
            if (ru && *ru != x)
                out.push_back("right unit law fails over " +
                              std::to_string(p) + " at " + nm(x));
        }

    for (int p = 0; p < N; ++p)
        for (const auto& [xy, z] : c.comp_table(p)) {
            auto [x, y] = xy;
            if (c.d(p, sign::minus, z) != c.d(p, sign::minus, x) ||
                c.d(p, sign::plus, z) != c.d(p, sign::plus, y))
                out.push_back("faces over " + std::to_string(p) +
                              " of the composite of " + nm(x) + " and " +
                              nm(y) + " are wrong");
            for (int r = 0; r <= N; ++r) {
                if (r == p) continue;
                for (sign a : {sign::minus, sign::plus}) {
                    auto part =
                        c.comp(p, c.d(r, a, x), c.d(r, a, y));
                    if (!part || *part != c.d(r, a, z))
                        out.push_back("face d_" + std::to_string(r) +
                                      " of the composite of " + nm(x) +
                                      " and " + nm(y) + " over " +
                                      std::to_string(p) + " is wrong");
                }
            }
        }

    for (int p = 0; p < N; ++p)
        for (const auto& [xy, v] : c.comp_table(p))
            for (const auto& [yz, w] : c.comp_table(p)) {
                if (xy.second != yz.first) continue;
                auto left = c.comp(p, v, yz.second);
                auto right = c.comp(p, xy.first, w);
                if (!left || !right || *left != *right)
                    out.push_back("associativity fails over " +
                                  std::to_string(p) + " at " +
                                  nm(xy.first) + ", " + nm(xy.second) +
                                  ", " + nm(yz.second));
            }

    for (int p = 0; p < N; ++p)
        for (int q = 0; q < N; ++q) {
            if (p == q) continue;
            for (const auto& [xy, v] : c.comp_table(p))
                for (const auto& [zw, u] : c.comp_table(p)) {
                    auto xz = c.comp(q, xy.first, zw.first);
                    auto yw = c.comp(q, xy.second, zw.second);
                    if (!xz || !yw) continue;
                    auto lhs = c.comp(q, v, u);
                    auto rhs = c.comp(p, *xz, *yw);
                    if (!lhs || !rhs || *lhs != *rhs)
                        out.push_back("interchange fails between " +
                                      std::to_string(p) + " and " +
                                      std::to_string(q) + " at " +
                                      nm(xy.first) + ", " + nm(xy.second) +
                                      ", " + nm(zw.first) + ", " +
                                      nm(zw.second));
                }
        }

    return out;
}

nlohmann::json category_to_json(const finite_omega_category& c) {
    nlohmann::json j;
    j["level"] = c.level();
    nlohmann::json cells = nlohmann::json::array();
    for (int i = 0; i < c.size(); ++i) cells.push_back(c.name(i));
    j["cells"] = cells;
    nlohmann::json dmaps = nlohmann::json::object();
    for (int p = 0; p < c.level(); ++p)
        for (sign a : {sign::minus, sign::plus}) {
            nlohmann::json entry = nlohmann::json::object();
            for (int x = 0; x < c.size(); ++x)
                entry[c.name(x)] = c.name(c.d(p, a, x));
            dmaps[std::to_string(p) + "," + to_char(a)] = entry;
        }
    j["d"] = dmaps;
    nlohmann::json comps = nlohmann::json::object();
    for (int p = 0; p < c.level(); ++p) {
        nlohmann::json table = nlohmann::json::array();
        for (const auto& [xy, z] : c.comp_table(p))
            table.push_back({c.name(xy.first), c.name(xy.second), c.name(z)});
        comps[std::to_string(p)] = table;
    }
    j["comp"] = comps;
    return j;
}

finite_omega_category category_from_json(const nlohmann::json& j) {
    if (!j.contains("level") || !j.contains("cells"))
        throw domain_error("category JSON needs level and cells");
    std::vector<std::string> names;
    for (const auto& n : j.at("cells")) names.push_back(n.get<std::string>());
    finite_omega_category c(j.at("level").get<int>(), std::move(names));
    if (j.contains("d"))
        for (const auto& [key, entry] : j.at("d").items()) {
            auto comma = key.find(',');
            if (comma == std::string::npos || comma + 2 != key.size())
                throw domain_error("bad face map key " + key);
            int p = std::stoi(key.substr(0, comma));
            sign a = sign_from_char(key[comma + 1]);
            for (const auto& [from, to] : entry.items())
                c.set_d(p, a, c.by_name(from),
                        c.by_name(to.get<std::string>()));
        }
    if (j.contains("comp"))
        for (const auto& [key, table] : j.at("comp").items()) {
            int p = std::stoi(key);
            for (const auto& row : table) {
                if (!row.is_array() || row.size() != 3)
                    throw domain_error("composition rows are triples");
                c.set_comp(p, c.by_name(row[0].get<std::string>()),
                           c.by_name(row[1].get<std::string>()),
                           c.by_name(row[2].get<std::string>()));
            }
        }
    return c;
}

materialized_nu materialize_nu(int m) {
    if (m < 0) throw domain_error("cube dimension must be nonnegative");
    std::vector<double_sequence> cells;
    std::map<double_sequence, int> index;
    auto add = [&](const double_sequence& x) {
        auto [it, fresh] = index.emplace(x, static_cast<int>(cells.size()));
        if (fresh) cells.push_back(x);
        return fresh;
    };
    for (const auto& b : all_basis_elements(m)) add(atom(b));
    bool grew = true;
    while (grew) {
        grew = false;
        if (cells.size() > 10000)
            throw internal_error("cube category closure kept growing");
        std::size_t snapshot = cells.size();
        for (std::size_t i = 0; i < snapshot; ++i)
            for (int p = 0; p < m; ++p) {
                for (sign a : {sign::minus, sign::plus})
                    grew |= add(d(p, a, cells[i]));
                for (std::size_t k = 0; k < snapshot; ++k)
                    if (composable(p, cells[i], cells[k]))
                        grew |= add(comp(p, cells[i], cells[k]));
            }
    }

    std::stable_sort(cells.begin(), cells.end(),
                     [](const double_sequence& a, const double_sequence& b) {
                         if (a.dimension() != b.dimension())
                             return a.dimension() < b.dimension();
                         return format_sequence(a) < format_sequence(b);
                     });
    index.clear();
    std::vector<std::string> names;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        index.emplace(cells[i], static_cast<int>(i));
        names.push_back("c" + std::to_string(i));
    }

    finite_omega_category cat(m, std::move(names));
    for (int i = 0; i < static_cast<int>(cells.size()); ++i)
        for (int p = 0; p < m; ++p)
            for (sign a : {sign::minus, sign::plus})
                cat.set_d(p, a, i, index.at(d(p, a, cells[i])));
    for (int p = 0; p < m; ++p)
        for (int i = 0; i < static_cast<int>(cells.size()); ++i)
            for (int k = 0; k < static_cast<int>(cells.size()); ++k)
                if (composable(p, cells[i], cells[k]))
                    cat.set_comp(p, i, k,
                                 index.at(comp(p, cells[i], cells[k])));
    return {std::move(cat), std::move(cells)};
}

} // namespace cubenerve
