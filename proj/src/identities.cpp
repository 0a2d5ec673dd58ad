#include "cubenerve/identities.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <utility>

#include "cubenerve/nerve.hpp"
#include "cubenerve/nerve_fixture.hpp"
#include "cubenerve/omega_cat.hpp"

namespace cubenerve {

int suite_report::total_samples() const {
    int n = 0;
    for (const auto& c : checks) n += c.samples;
    return n;
}

int suite_report::total_failures() const {
    int n = 0;
    for (const auto& c : checks) n += c.failures;
    return n;
}

namespace {

const nu_target& interval_target() {
    static const nu_target t;
    return t;
}

std::vector<nerve_table<nu_target>> interval_seeds() {
    const nu_target& t = interval_target();
    using table = nerve_table<nu_target>;
    std::vector<table> seeds;
    for (char c : {'-', '+'}) {
        typename table::image_map m;
        m.emplace(basis_element(""), atom(basis_element(std::string(1, c))));
        seeds.emplace_back(t, complex_id::cube(0), std::move(m));
    }
    typename table::image_map m;
    for (const char* w : {"-", "+", "*"})
        m.emplace(basis_element(w), atom(basis_element(w)));
    seeds.emplace_back(t, complex_id::cube(1), std::move(m));
    return seeds;
}

std::vector<nerve_table<finite_omega_category>> fixture_seeds() {
    const finite_omega_category& cat = shared_fixture();
    using table = nerve_table<finite_omega_category>;
    std::vector<table> seeds;
    for (const char* name : {"a-", "a+", "b", "ab"}) {
        int w = cat.by_name(name);
        typename table::image_map m;
        m.emplace(basis_element("-"), cat.d(0, sign::minus, w));
        m.emplace(basis_element("+"), cat.d(0, sign::plus, w));
        m.emplace(basis_element("*"), w);
        seeds.emplace_back(cat, complex_id::cube(1), std::move(m));
    }
    seeds.push_back(fill_shell(nerve_table<finite_omega_category>(
        cat, complex_id::shell(3), fixture_shell_images())));
    return seeds;
}

template <class Target>
struct law_context {
    using table = nerve_table<Target>;

    const Target& t;
    std::string tname;
    cube_ops<Target> ops;
    std::vector<table> pool;
    std::vector<std::vector<int>> by_dim;
    // (n, k) -> index pairs (i, j) with pool[i] composable before pool[j]
    // in direction k
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> pairs;
    std::mt19937_64 rng;
    int want;
    int max_dim;
    suite_report* report;

    law_context(const Target& t_, std::string name, std::vector<table> seeds,
                int max_dim_, std::size_t cap, int want_, std::uint64_t seed,
                suite_report* rep)
        : t(t_),
          tname(std::move(name)),
          ops(t_),
          rng(seed),
          want(want_),
          max_dim(max_dim_),
          report(rep) {
        pool = generate_cubes(ops, std::move(seeds), max_dim, cap);
        by_dim.assign(max_dim + 1, {});
        for (int i = 0; i < static_cast<int>(pool.size()); ++i)
            by_dim[pool[i].ambient()].push_back(i);
        for (int n = 1; n <= max_dim; ++n)
            for (int k = 1; k <= n; ++k) {
                std::map<table, std::vector<int>> by_neg;
                for (int j : by_dim[n])
                    by_neg[face(pool[j], k, sign::minus)].push_back(j);
                auto& out = pairs[{n, k}];
                for (int i : by_dim[n]) {
                    auto it = by_neg.find(face(pool[i], k, sign::plus));
                    if (it == by_neg.end()) continue;
                    for (int j : it->second) out.emplace_back(i, j);
                }
            }
    }

    int rand_int(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    }
    sign rand_sign() { return rand_int(0, 1) ? sign::plus : sign::minus; }

    const table* pick(int lo, int hi) {
        hi = std::min(hi, max_dim);
        std::vector<int> dims;
        for (int n = std::max(lo, 0); n <= hi; ++n)
            if (!by_dim[n].empty()) dims.push_back(n);
        if (dims.empty()) return nullptr;
        const auto& v = by_dim[dims[rand_int(0, (int)dims.size() - 1)]];
        return &pool[v[rand_int(0, (int)v.size() - 1)]];
    }

    // Random composable pair in a random direction, dimension in [lo, hi].
    const std::pair<int, int>* pick_pair(int lo, int hi, int& n, int& k) {
        hi = std::min(hi, max_dim);
        std::vector<std::pair<int, int>> keys;
        for (int d = std::max(lo, 1); d <= hi; ++d)
            for (int dir = 1; dir <= d; ++dir)
                if (!pairs[{d, dir}].empty()) keys.emplace_back(d, dir);
        if (keys.empty()) return nullptr;
        auto [d, dir] = keys[rand_int(0, (int)keys.size() - 1)];
        n = d;
        k = dir;
        const auto& v = pairs[{d, dir}];
        return &v[rand_int(0, (int)v.size() - 1)];
    }

    void law(const std::string& name,
             const std::function<std::optional<bool>()>& attempt) {
        suite_check c{tname, name, 0, 0, false};
        long budget = static_cast<long>(want) * 300;
        while (c.samples < want && budget-- > 0) {
            auto r = attempt();
            if (!r) continue;
            ++c.samples;
            if (!*r) ++c.failures;
        }
        report->checks.push_back(c);
    }

    void exhaustive(const std::string& name,
                    const std::function<void(int&, int&)>& run) {
        suite_check c{tname, name, 0, 0, true};
        run(c.samples, c.failures);
        report->checks.push_back(c);
    }
};

template <class Target>
void run_laws(law_context<Target>& C) {
    using table = nerve_table<Target>;
    auto& O = C.ops;
    int md = C.max_dim;
    const sign M = sign::minus, P = sign::plus;

    C.law("faces of a degeneracy", [&]() -> std::optional<bool> {
        const table* xp = C.pick(0, md - 1);
        if (!xp) return std::nullopt;
        const table x = *xp;
        int n = x.ambient(), k = C.rand_int(1, n + 1);
        table e = O.degeneracy(k, x);
        bool ok = true;
        for (int i = 1; i <= n + 1; ++i)
            for (sign a : {M, P}) {
                table lhs = face(e, i, a);
                if (i < k)
                    ok = ok && lhs == O.degeneracy(k - 1, face(x, i, a));
                else if (i == k)
                    ok = ok && lhs == x;
                else
                    ok = ok && lhs == O.degeneracy(k, face(x, i - 1, a));
            }
        return ok;
    });

    C.law("faces of a connection", [&]() -> std::optional<bool> {
        const table* xp = C.pick(1, md - 1);
        if (!xp) return std::nullopt;
        const table x = *xp;
        int n = x.ambient(), k = C.rand_int(1, n);
        sign g = C.rand_sign();
        table c = O.connection(k, g, x);
        bool ok = true;
        for (int i = 1; i <= n + 1; ++i)
            for (sign a : {M, P}) {
                table lhs = face(c, i, a);
                if (i < k)
                    ok = ok && lhs == O.connection(k - 1, g, face(x, i, a));
                else if (i == k || i == k + 1)
                    ok = ok && lhs == (a == g
                                           ? x
                                           : O.degeneracy(k, face(x, k, -g)));
                else
                    ok = ok && lhs == O.connection(k, g, face(x, i - 1, a));
            }
        return ok;
    });

    C.law("faces of a composer", [&]() -> std::optional<bool> {
        int n = 0, k = 0;
        const auto* pr = C.pick_pair(1, md, n, k);
        if (!pr) return std::nullopt;
        const table x = C.pool[pr->first], y = C.pool[pr->second];
        table g = O.composer(k, x, y);
        bool ok = face(g, k, P) == y && face(g, k + 1, M) == x &&
                  face(g, k + 1, P) == O.degeneracy(k, face(y, k, P));
        for (int i = 1; i <= n + 1; ++i)
            for (sign a : {M, P}) {
                if (i == k || i == k + 1) continue;
                table lhs = face(g, i, a);
                if (i < k)
                    ok = ok && lhs == O.composer(k - 1, face(x, i, a),
                                                 face(y, i, a));
                else
                    ok = ok && lhs == O.composer(k, face(x, i - 1, a),
                                                 face(y, i - 1, a));
            }
        return ok;
    });

    C.law("degeneracies and connections are thin",
          [&]() -> std::optional<bool> {
              const table* xp = C.pick(0, md - 1);
              if (!xp) return std::nullopt;
              const table x = *xp;
              int n = x.ambient();
              bool ok = is_thin(O.degeneracy(C.rand_int(1, n + 1), x));
              if (n >= 1)
                  ok = ok && is_thin(O.connection(C.rand_int(1, n),
                                                  C.rand_sign(), x));
              return ok;
          });

    C.law("composites of thin cubes are thin", [&]() -> std::optional<bool> {
        int n = 0, k = 0;
        const auto* pr = C.pick_pair(1, md, n, k);
        if (!pr) return std::nullopt;
        const table x = C.pool[pr->first], y = C.pool[pr->second];
        if (!is_thin(x) || !is_thin(y)) return std::nullopt;
        return is_thin(O.composite(k, x, y));
    });

    C.law("degeneracies exchange", [&]() -> std::optional<bool> {
        const table* xp = C.pick(0, md);
        if (!xp) return std::nullopt;
        const table x = *xp;
        int n = x.ambient();
        int l = C.rand_int(1, n + 1), k = C.rand_int(1, l);
        return O.degeneracy(k, O.degeneracy(l, x)) ==
               O.degeneracy(l + 1, O.degeneracy(k, x));
    });

    C.law("connection past a lower degeneracy", [&]() -> std::optional<bool> {
        const table* xp = C.pick(1, md);
        if (!xp) return std::nullopt;
        const table x = *xp;
        int n = x.ambient();
        int l = C.rand_int(2, n + 1), k = C.rand_int(1, std::min(l - 1, n));
        sign g = C.rand_sign();
        return O.connection(k, g, O.degeneracy(l, x)) ==
               O.degeneracy(l + 1, O.connection(k, g, x));
    });

    C.law("connection of its own degeneracy", [&]() -> std::optional<bool> {
        const table* xp = C.pick(0, md);
        if (!xp) return std::nullopt;
        const table x = *xp;
        int k = C.rand_int(1, x.ambient() + 1);
        sign g = C.rand_sign();
        return O.connection(k, g, O.degeneracy(k, x)) ==
               O.degeneracy(k + 1, O.degeneracy(k, x));
    });

    C.law("connection past a higher degeneracy", [&]() -> std::optional<bool> {
        const table* xp = C.pick(1, md);
        if (!xp) return std::nullopt;
        const table x = *xp;
        int n = x.ambient();
        int k = C.rand_int(2, n + 1), l = C.rand_int(1, k - 1);
        sign g = C.rand_sign();
        return O.connection(k, g, O.degeneracy(l, x)) ==
               O.degeneracy(l, O.connection(k - 1, g, x));
    });

    C.law("connections exchange", [&]() -> std::optional<bool> {
        const table* xp = C.pick(2, md);
        if (!xp) return std::nullopt;
        const table x = *xp;
        int n = x.ambient();
        int l = C.rand_int(2, n), k = C.rand_int(1, l - 1);
        sign g = C.rand_sign(), h = C.rand_sign();
        return O.connection(k, g, O.connection(l, h, x)) ==
               O.connection(l + 1, h, O.connection(k, g, x));
    });

    C.law("connection repeated", [&]() -> std::optional<bool> {
        const table* xp = C.pick(1, md);
        if (!xp) return std::nullopt;
        const table x = *xp;
        int k = C.rand_int(1, x.ambient());
        sign g = C.rand_sign();
        return O.connection(k, g, O.connection(k, g, x)) ==
               O.connection(k + 1, g, O.connection(k, g, x));
    });

    C.law("faces of a composite", [&]() -> std::optional<bool> {
        int n = 0, k = 0;
        const auto* pr = C.pick_pair(1, md, n, k);
        if (!pr) return std::nullopt;
        const table x = C.pool[pr->first], y = C.pool[pr->second];
        table z = O.composite(k, x, y);
        bool ok = face(z, k, M) == face(x, k, M) &&
                  face(z, k, P) == face(y, k, P);
        for (int i = 1; i <= n; ++i)
            for (sign a : {M, P}) {
                if (i == k) continue;
                table lhs = face(z, i, a);
                if (i < k)
                    ok = ok && lhs == O.composite(k - 1, face(x, i, a),
                                                  face(y, i, a));
                else
                    ok = ok && lhs == O.composite(k, face(x, i, a),
                                                  face(y, i, a));
            }
        return ok;
    });

    C.law("left and right units", [&]() -> std::optional<bool> {
        const table* xp = C.pick(1, md);
        if (!xp) return std::nullopt;
        const table x = *xp;
        int k = C.rand_int(1, x.ambient());
        return O.composite(k, O.degeneracy(k, face(x, k, M)), x) == x &&
               O.composite(k, x, O.degeneracy(k, face(x, k, P))) == x;
    });

    C.law("connections compose to degeneracies", [&]() -> std::optional<bool> {
        const table* xp = C.pick(1, md);
        if (!xp) return std::nullopt;
        const table x = *xp;
        int n = x.ambient(), k = C.rand_int(1, n);
        table cp = O.connection(k, P, x), cm = O.connection(k, M, x);
        return O.composite(k, cp, cm) == O.degeneracy(k + 1, x) &&
               O.composite(k + 1, cp, cm) == O.degeneracy(k, x);
    });

    C.law("degeneracy of a composite", [&]() -> std::optional<bool> {
        int n = 0, k = 0;
        const auto* pr = C.pick_pair(1, md, n, k);
        if (!pr) return std::nullopt;
        const table x = C.pool[pr->first], y = C.pool[pr->second];
        int j = C.rand_int(1, n + 1);
        table lhs = O.degeneracy(j, O.composite(k, x, y));
        if (j <= k)
            return lhs == O.composite(k + 1, O.degeneracy(j, x),
                                      O.degeneracy(j, y));
        return lhs == O.composite(k, O.degeneracy(j, x), O.degeneracy(j, y));
    });

    C.law("connection of a composite in another direction",
          [&]() -> std::optional<bool> {
              int n = 0, k = 0;
              const auto* pr = C.pick_pair(1, md, n, k);
              if (!pr) return std::nullopt;
              if (n < 2) return std::nullopt;
              const table x = C.pool[pr->first], y = C.pool[pr->second];
              int j = C.rand_int(1, n - 1);
              if (j >= k) ++j; // j != k, j <= n
              sign g = C.rand_sign();
              table lhs = O.connection(j, g, O.composite(k, x, y));
              if (j < k)
                  return lhs == O.composite(k + 1, O.connection(j, g, x),
                                            O.connection(j, g, y));
              return lhs == O.composite(k, O.connection(j, g, x),
                                        O.connection(j, g, y));
          });

    C.law("negative connection of a composite", [&]() -> std::optional<bool> {
        int n = 0, k = 0;
        const auto* pr = C.pick_pair(1, md, n, k);
        if (!pr) return std::nullopt;
        const table x = C.pool[pr->first], y = C.pool[pr->second];
        table lhs = O.connection(k, M, O.composite(k, x, y));
        table cx = O.connection(k, M, x), cy = O.connection(k, M, y);
        bool one =
            lhs == O.composite(k + 1,
                               O.composite(k, cx,
                                           O.degeneracy(k + 1, y)),
                               cy);
        bool two =
            lhs == O.composite(k,
                               O.composite(k + 1, cx, O.degeneracy(k, y)),
                               cy);
        return one && two;
    });

    C.law("positive connection of a composite", [&]() -> std::optional<bool> {
        int n = 0, k = 0;
        const auto* pr = C.pick_pair(1, md, n, k);
        if (!pr) return std::nullopt;
        const table x = C.pool[pr->first], y = C.pool[pr->second];
        table lhs = O.connection(k, P, O.composite(k, x, y));
        table cx = O.connection(k, P, x), cy = O.connection(k, P, y);
        bool one =
            lhs == O.composite(k, cx,
                               O.composite(k + 1, O.degeneracy(k, x), cy));
        bool two =
            lhs == O.composite(k + 1, cx,
                               O.composite(k, O.degeneracy(k + 1, x), cy));
        return one && two;
    });

    C.law("interchange of composites", [&]() -> std::optional<bool> {
        int n = 0, k = 0;
        const auto* pr = C.pick_pair(1, md, n, k);
        if (!pr) return std::nullopt;
        if (n < 2) return std::nullopt;
        const table x = C.pool[pr->first], y = C.pool[pr->second];
        int l = C.rand_int(1, n - 1);
        if (l >= k) ++l; // l != k
        table z = O.degeneracy(l, face(x, l, P));
        table w = O.degeneracy(l, face(y, l, P));
        if (face(z, k, P) != face(w, k, M)) return false;
        return O.composite(l, O.composite(k, x, y), O.composite(k, z, w)) ==
               O.composite(k, O.composite(l, x, z), O.composite(l, y, w));
    });

    C.law("associativity of composition", [&]() -> std::optional<bool> {
        int n = 0, k = 0;
        const auto* pr = C.pick_pair(1, md, n, k);
        if (!pr) return std::nullopt;
        const table x = C.pool[pr->first], y = C.pool[pr->second];
        std::vector<int> zs;
        table yp = face(y, k, P);
        for (int j : C.by_dim[n])
            if (face(C.pool[j], k, M) == yp) zs.push_back(j);
        table z = zs.empty() ? O.degeneracy(k, yp)
                             : C.pool[zs[C.rand_int(0, (int)zs.size() - 1)]];
        return O.composite(k, O.composite(k, x, y), z) ==
               O.composite(k, x, O.composite(k, y, z));
    });

    C.law("squeeze faces", [&]() -> std::optional<bool> {
        const table* xp = C.pick(2, md);
        if (!xp) return std::nullopt;
        const table x = *xp;
        int n = x.ambient(), k = C.rand_int(1, n - 1);
        table s = O.psi(k, x);
        bool ok = true;
        for (sign a : {M, P})
            ok = ok && face(s, k + 1, a) ==
                           O.degeneracy(k, face(face(x, k + 1, a), k, a));
        for (int i = k + 2; i <= n; ++i)
            for (sign a : {M, P})
                ok = ok && face(s, i, a) == O.psi(k, face(x, i, a));
        return ok;
    });

    C.law("squeeze of a degeneracy", [&]() -> std::optional<bool> {
        const table* xp = C.pick(1, md);
        if (!xp) return std::nullopt;
        const table x = *xp;
        int n = x.ambient(), k = C.rand_int(1, n);
        return O.psi(k, O.degeneracy(k + 1, x)) == O.degeneracy(k, x);
    });

    C.law("squeeze recovery", [&]() -> std::optional<bool> {
        const table* xp = C.pick(2, md);
        if (!xp) return std::nullopt;
        const table x = *xp;
        int n = x.ambient(), k = C.rand_int(1, n - 1);
        table left = O.composite(
            k + 1, O.degeneracy(k, face(x, k, M)),
            O.connection(k, P, face(x, k + 1, P)));
        table right = O.composite(
            k + 1, O.connection(k, M, face(x, k + 1, M)),
            O.degeneracy(k, face(x, k, P)));
        return O.composite(k, O.composite(k, left, O.psi(k, x)), right) == x;
    });

    C.law("composers against units", [&]() -> std::optional<bool> {
        const table* xp = C.pick(1, md);
        if (!xp) return std::nullopt;
        const table x = *xp;
        int k = C.rand_int(1, x.ambient());
        return O.composer(k, O.degeneracy(k, face(x, k, M)), x) ==
                   O.degeneracy(k, x) &&
               O.composer(k, x, O.degeneracy(k, face(x, k, P))) ==
                   O.connection(k, M, x);
    });

    C.law("flatten collapses the higher faces", [&]() -> std::optional<bool> {
        const table* xp = C.pick(2, md);
        if (!xp) return std::nullopt;
        const table x = *xp;
        int n = x.ambient();
        table f = O.flatten(x);
        table base = face(f, 1, P);
        bool ok = true;
        for (int i = 2; i <= n; ++i)
            for (sign a : {M, P})
                ok = ok &&
                     face(f, i, a) == O.degeneracy(1, face(base, i - 1, a));
        return ok;
    });

    C.law("forced shell faces along admissible boxes",
          [&]() -> std::optional<bool> {
              const table* xp = C.pick(2, md);
              if (!xp) return std::nullopt;
              const table x = *xp;
              int n = x.ambient();
              std::vector<std::pair<int, sign>> good;
              for (int k = 1; k <= n; ++k)
                  for (sign g : {M, P})
                      if (box_admissible(box_of(x, k, g)))
                          good.emplace_back(k, g);
              if (good.empty()) return std::nullopt;
              auto [k, g] = good[C.rand_int(0, (int)good.size() - 1)];
              table s = shell_of(x);
              auto forced = evaluate(
                  s, d(n - 1, -(parity_sign(k) * g),
                       atom(basis_element::top(n))));
              return x.image(face_inclusion(
                         k, g, basis_element::top(n - 1))) == forced;
          });

    C.law("forced box corners along admissible boxes",
          [&]() -> std::optional<bool> {
              const table* xp = C.pick(2, md);
              if (!xp) return std::nullopt;
              const table x = *xp;
              int n = x.ambient();
              std::vector<std::pair<int, sign>> good;
              for (int k = 1; k <= n; ++k)
                  for (sign g : {M, P})
                      if (box_admissible(box_of(x, k, g)))
                          good.emplace_back(k, g);
              if (good.empty()) return std::nullopt;
              auto [k, g] = good[C.rand_int(0, (int)good.size() - 1)];
              table b = box_of(x, k, g);
              auto side = evaluate(b, d(n - 1, parity_sign(k) * g,
                                        atom(basis_element::top(n))));
              basis_element removed =
                  face_inclusion(k, g, basis_element::top(n - 1));
              bool ok = true;
              for (sign a : {M, P})
                  ok = ok && evaluate(b, d(n - 2, a, atom(removed))) ==
                                 C.t.d(n - 2, a, side);
              return ok;
          });

    C.law("admissible boxes of thin cubes refill", [&]() -> std::optional<bool> {
        const table* xp = C.pick(1, md);
        if (!xp) return std::nullopt;
        const table x = *xp;
        if (!is_thin(x)) return std::nullopt;
        int n = x.ambient();
        std::vector<std::pair<int, sign>> good;
        for (int k = 1; k <= n; ++k)
            for (sign g : {M, P})
                if (box_admissible(box_of(x, k, g))) good.emplace_back(k, g);
        if (good.empty()) return std::nullopt;
        auto [k, g] = good[C.rand_int(0, (int)good.size() - 1)];
        return fill_box(box_of(x, k, g)) == x;
    });

    C.exhaustive("thin cubes are their shells' fillers",
                 [&](int& samples, int& failures) {
                     for (const table& x : C.pool) {
                         if (x.ambient() == 0 || !is_thin(x)) continue;
                         ++samples;
                         if (!(fill_shell(shell_of(x)) == x)) ++failures;
                     }
                 });

    // The all-faces-thin condition only makes sense from dimension 2 up,
    // since the faces of a 1-box are 0-cubes.
    C.exhaustive("thin missing faces of all-thin admissible boxes",
                 [&](int& samples, int& failures) {
                     for (const table& x : C.pool) {
                         int n = x.ambient();
                         if (n < 2 || !is_thin(x)) continue;
                         for (int k = 1; k <= n; ++k)
                             for (sign g : {M, P}) {
                                 table b = box_of(x, k, g);
                                 if (!box_admissible(b)) continue;
                                 bool all_thin = true;
                                 for (int i = 1; i <= n && all_thin; ++i)
                                     for (sign a : {M, P}) {
                                         if (i == k && a == g) continue;
                                         all_thin = all_thin &&
                                                    is_thin(face(b, i, a));
                                     }
                                 if (!all_thin) continue;
                                 ++samples;
                                 if (!is_thin(face(x, k, g))) ++failures;
                             }
                     }
                 });

    C.exhaustive("recovered stratification",
                 [&](int& samples, int& failures) {
                     for (const table& x : C.pool) {
                         if (x.ambient() == 0) continue;
                         ++samples;
                         table f = O.flatten(x);
                         bool computed =
                             f == O.degeneracy(1, face(f, 1, P));
                         if (computed != is_thin(x)) ++failures;
                     }
                 });

    C.exhaustive("composer via connection and degeneracy",
                 [&](int& samples, int& failures) {
                     for (int n = 1; n <= md; ++n)
                         for (int k = 1; k <= n; ++k)
                             for (auto [i, j] : C.pairs[{n, k}]) {
                                 ++samples;
                                 const table& x = C.pool[i];
                                 const table& y = C.pool[j];
                                 table rhs = O.composite(
                                     k + 1, O.connection(k, M, x),
                                     O.degeneracy(k, y));
                                 if (!(O.composer(k, x, y) == rhs))
                                     ++failures;
                             }
                 });
}

} // namespace

suite_report run_identity_suite(int max_dim, int samples,
                                std::uint64_t seed) {
    suite_report rep;
    rep.max_dim = max_dim;
    {
        law_context<nu_target> C(interval_target(), "interval nerve",
                                 interval_seeds(), max_dim, 110, samples,
                                 seed, &rep);
        run_laws(C);
    }
    {
        law_context<finite_omega_category> C(
            shared_fixture(), "two-level nerve", fixture_seeds(), max_dim,
            150, samples, seed + 1, &rep);
        run_laws(C);
    }
    return rep;
}

nlohmann::json suite_report_to_json(const suite_report& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"target", c.target},
                          {"name", c.name},
                          {"samples", c.samples},
                          {"failures", c.failures},
                          {"exhaustive", c.exhaustive}});
    return nlohmann::json{{"max_dim", r.max_dim},
                          {"checks", checks},
                          {"total_samples", r.total_samples()},
                          {"total_failures", r.total_failures()},
                          {"passed", r.passed()}};
}

std::string format_suite_report(const suite_report& r) {
    std::ostringstream out;
    for (const auto& c : r.checks)
        out << "[" << c.target << "] " << c.name << ": " << c.samples
            << (c.exhaustive ? " configurations" : " samples") << ", "
            << c.failures << " failures\n";
    out << (r.passed() ? "all laws hold" : "LAW FAILURES PRESENT") << " ("
        << r.total_samples() << " checks, " << r.total_failures()
        << " failures)\n";
    return out.str();
}

} // namespace cubenerve
