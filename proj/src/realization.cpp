#include "tetrahopf/realization.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "tetrahopf/error.hpp"

namespace tetrahopf {

int FiniteGroup::element(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
        if (labels[i] == label) return i;
    throw Error("unknown group element label: " + label);
}

void FiniteGroup::check() const {
    const int n = size();
    if (n == 0) throw Error("empty group");
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(mul[a].size()) != n) throw Error("Cayley table is not square");
        if (mul[id][a] != a || mul[a][id] != a)
            throw Error("identity fails at " + labels[a]);
        if (mul[a][inv[a]] != id || mul[inv[a]][a] != id)
            throw Error("inverse fails at " + labels[a]);
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) {
                    std::ostringstream os;
                    os << "associativity fails at (" << labels[a] << "," << labels[b] << ","
                       << labels[c] << ")";
                    throw Error(os.str());
                }
}

FiniteGroup FiniteGroup::trivial() {
    FiniteGroup g;
    g.mul = {{0}};
    g.inv = {0};
    g.labels = {"1"};
    return g;
}

FiniteGroup FiniteGroup::cyclic(int n, const std::string& gen_name) {
    if (n < 1) throw Error("cyclic group order must be positive");
    FiniteGroup g;
    g.mul.assign(n, std::vector<int>(n));
    g.inv.assign(n, 0);
    g.labels.assign(n, "");
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) g.mul[a][b] = (a + b) % n;
        g.inv[a] = (n - a) % n;
        if (a == 0)
            g.labels[a] = "1";
        else if (a == 1)
            g.labels[a] = gen_name;
        else
            g.labels[a] = gen_name + "^" + std::to_string(a);
    }
    return g;
}

FiniteGroup FiniteGroup::f4_semidirect_cyclic(int n) {
    if (n < 1 || n % 3 != 0) throw Error("F4 x| C_n needs 3 | n");
    FiniteGroup g;
    const int size = 4 * n;
    auto idx = [n](F4 j, int s) { return static_cast<int>(j) * n + s; };
    g.mul.assign(size, std::vector<int>(size));
    g.inv.assign(size, 0);
    g.labels.assign(size, "");
    auto omega_pow = [](int s) -> F4 {
        static const F4 p[3] = {kF4One, kF4Omega, kF4OmegaSq};
        return p[((s % 3) + 3) % 3];
    };
    for (F4 j1 = 0; j1 < 4; ++j1)
        for (int s1 = 0; s1 < n; ++s1) {
            for (F4 j2 = 0; j2 < 4; ++j2)
                for (int s2 = 0; s2 < n; ++s2) {
                    // (j1, t^s1)(j2, t^s2) = (j1 + omega^s1 j2, t^{s1+s2})
                    F4 j = f4_add(j1, f4_mul(omega_pow(s1), j2));
                    g.mul[idx(j1, s1)][idx(j2, s2)] = idx(j, (s1 + s2) % n);
                }
            int sinv = (n - s1) % n;
            g.inv[idx(j1, s1)] = idx(f4_mul(omega_pow(sinv), j1), sinv);
            std::string ts = s1 == 0 ? "1" : (s1 == 1 ? "t" : "t^" + std::to_string(s1));
            g.labels[idx(j1, s1)] = "(" + f4_name(j1) + "," + ts + ")";
        }
    g.id = idx(kF4Zero, 0);
    return g;
}

FiniteGroup FiniteGroup::product(const FiniteGroup& a, const FiniteGroup& b) {
    FiniteGroup g;
    const int na = a.size(), nb = b.size();
    auto idx = [nb](int x, int y) { return x * nb + y; };
    g.mul.assign(na * nb, std::vector<int>(na * nb));
    g.inv.assign(na * nb, 0);
    g.labels.assign(na * nb, "");
    for (int x1 = 0; x1 < na; ++x1)
        for (int y1 = 0; y1 < nb; ++y1) {
            for (int x2 = 0; x2 < na; ++x2)
                for (int y2 = 0; y2 < nb; ++y2)
                    g.mul[idx(x1, y1)][idx(x2, y2)] = idx(a.mul[x1][x2], b.mul[y1][y2]);
            g.inv[idx(x1, y1)] = idx(a.inv[x1], b.inv[y1]);
            g.labels[idx(x1, y1)] =
                nb == 1 ? a.labels[x1] : a.labels[x1] + "*(" + b.labels[y1] + ")";
        }
    g.id = idx(a.id, b.id);
    return g;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table,
                                    std::vector<std::string> labels) {
    FiniteGroup g;
    g.mul = std::move(table);
    const int n = g.size();
    if (labels.empty()) {
        labels.resize(n);
        for (int i = 0; i < n; ++i) labels[i] = "g" + std::to_string(i);
    }
    if (static_cast<int>(labels.size()) != n) throw Error("label count does not match table size");
    g.labels = std::move(labels);
    // Locate the identity, then read inverses off the table.
    g.id = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = g.mul[e][a] == a && g.mul[a][e] == a;
        if (ok) {
            g.id = e;
            break;
        }
    }
    if (g.id < 0) throw Error("table has no identity element");
    g.inv.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (g.mul[a][b] == g.id && g.mul[b][a] == g.id) {
                g.inv[a] = b;
                break;
            }
        if (g.inv[a] < 0) throw Error("element " + g.labels[a] + " has no inverse");
    }
    g.check();
    return g;
}

std::optional<std::pair<int, int>> Character::multiplicative_defect(const FiniteGroup& G) const {
    for (int a = 0; a < G.size(); ++a)
        for (int b = 0; b < G.size(); ++b)
            if (values[G.op(a, b)] != values[a] * values[b]) return std::make_pair(a, b);
    return std::nullopt;
}

namespace {

int lcm_int(int a, int b) { return a / std::gcd(a, b) * b; }

// Session order and promotion of all character values to it.
void fix_session_order(YDRealization& r) {
    int n = 1;
    for (const auto& v : r.chi.values) {
        long ord = v.root_of_unity_order();
        if (ord == 0) throw Error("character value is not a root of unity: " + v.to_string());
        n = lcm_int(n, static_cast<int>(ord));
    }
    r.session_order = std::max(n, 2);
    for (auto& v : r.chi.values) v = v.promoted(r.session_order);
}

// dot[h][i] = j defined by h g_i h^{-1} = g_j; throws if the conjugate is not
// in the image of g.
void derive_dot_from_conjugation(YDRealization& r) {
    const auto& G = r.group;
    r.dot.assign(G.size(), {0, 0, 0, 0});
    for (int h = 0; h < G.size(); ++h)
        for (F4 i = 0; i < 4; ++i) {
            int conj = G.op(G.op(h, r.gmap[i]), G.inverse(h));
            int j = -1;
            for (F4 c = 0; c < 4; ++c)
                if (r.gmap[c] == conj) j = c;
            if (j < 0)
                throw Error("conjugate of g_" + f4_name(i) + " by " + G.label(h) +
                            " leaves the image of g");
            r.dot[h][i] = static_cast<F4>(j);
        }
}

} // namespace

YDRealization mk_affine_realization(int m, int k) {
    if (m < 1 || k < 0 || k >= m) throw Error("affine realization needs 0 <= k < m");
    YDRealization r;
    r.group = FiniteGroup::f4_semidirect_cyclic(6 * m);
    for (F4 i = 0; i < 4; ++i)
        r.gmap[i] = r.group.element("(" + f4_name(i) + "," +
                                    (6 * k + 1 == 1 ? "t" : "t^" + std::to_string(6 * k + 1)) + ")");
    derive_dot_from_conjugation(r);
    // chi(j, t^s) = (-1)^s.
    r.chi.values.assign(r.group.size(), Cyclotomic::one(2));
    const int n = 6 * m;
    for (int idx = 0; idx < r.group.size(); ++idx) {
        int s = idx % n;
        r.chi.values[idx] = Cyclotomic::root_of_unity(s, 2);
    }
    fix_session_order(r);
    return r;
}

YDRealization extend_realization(const YDRealization& base, const FiniteGroup& extra,
                                 const std::vector<Cyclotomic>& chi1) {
    if (static_cast<int>(chi1.size()) != extra.size())
        throw Error("chi1 must assign a value to every element of the extra factor");
    Character c1{chi1};
    if (auto bad = c1.multiplicative_defect(extra))
        throw Error("chi1 is not multiplicative at (" + extra.label(bad->first) + "," +
                    extra.label(bad->second) + ")");
    YDRealization r;
    r.group = FiniteGroup::product(base.group, extra);
    const int nb = extra.size();
    for (F4 i = 0; i < 4; ++i) r.gmap[i] = base.gmap[i] * nb + extra.id;
    r.chi.values.assign(r.group.size(), Cyclotomic());
    for (int x = 0; x < base.group.size(); ++x)
        for (int y = 0; y < nb; ++y) r.chi.values[x * nb + y] = base.chi(x) * chi1[y];
    derive_dot_from_conjugation(r);
    fix_session_order(r);
    return r;
}

ValidationReport validate_realization(const YDRealization& r) {
    ValidationReport rep;
    const auto& G = r.group;
    auto add = [&rep](const std::string& name, bool pass, const std::string& witness = "") {
        rep.entries.push_back({name, pass, pass ? "" : witness});
    };

    try {
        G.check();
        add("group axioms", true);
    } catch (const Error& e) {
        add("group axioms", false, e.what());
        return rep;
    }

    bool inj = true;
    for (F4 i = 0; i < 4 && inj; ++i)
        for (F4 j = static_cast<F4>(i + 1); j < 4 && inj; ++j)
            if (r.gmap[i] == r.gmap[j]) inj = false;
    add("gmap injective", inj, "g_i = g_j for distinct i, j");

    if (auto bad = r.chi.multiplicative_defect(G)) {
        add("chi multiplicative", false,
            "fails at (" + G.label(bad->first) + "," + G.label(bad->second) + ")");
    } else {
        add("chi multiplicative", true);
    }
    add("chi(e) = 1", r.chi(G.id) == Cyclotomic::one(r.session_order));

    bool roots = true;
    std::string rw;
    for (int g = 0; g < G.size() && roots; ++g)
        if (r.chi(g).root_of_unity_order() == 0) {
            roots = false;
            rw = G.label(g);
        }
    add("chi values are roots of unity", roots, "at " + rw);

    bool minus1 = true;
    std::string mw;
    const Cyclotomic neg1 = Cyclotomic::rational(mpq_class(-1), r.session_order);
    for (F4 i = 0; i < 4; ++i)
        if (r.chi(r.gmap[i]) != neg1) {
            minus1 = false;
            mw = "chi(g_" + f4_name(i) + ") = " + r.chi(r.gmap[i]).to_string();
        }
    add("chi(g_i) = -1", minus1, mw);

    bool action = true;
    std::string aw;
    for (int h = 0; h < G.size() && action; ++h)
        for (int k = 0; k < G.size() && action; ++k)
            for (F4 i = 0; i < 4 && action; ++i)
                if (r.act(G.op(h, k), i) != r.act(h, r.act(k, i))) {
                    action = false;
                    aw = "(" + G.label(h) + "," + G.label(k) + ") . " + f4_name(i);
                }
    for (F4 i = 0; i < 4 && action; ++i)
        if (r.act(G.id, i) != i) {
            action = false;
            aw = "e . " + f4_name(i) + " != " + f4_name(i);
        }
    add("dot is a group action", action, aw);

    bool equiv = true;
    std::string ew;
    for (int h = 0; h < G.size() && equiv; ++h)
        for (F4 i = 0; i < 4 && equiv; ++i) {
            int lhs = r.gmap[r.act(h, i)];
            int rhs = G.op(G.op(h, r.gmap[i]), G.inverse(h));
            if (lhs != rhs) {
                equiv = false;
                ew = "g_{h.i} != h g_i h^{-1} at h = " + G.label(h) + ", i = " + f4_name(i);
            }
        }
    add("g_{h.i} = h g_i h^{-1}", equiv, ew);

    bool rackact = true;
    std::string tw;
    for (F4 i = 0; i < 4 && rackact; ++i)
        for (F4 j = 0; j < 4 && rackact; ++j)
            if (r.act(r.gmap[i], j) != triangle(i, j)) {
                rackact = false;
                tw = "g_" + f4_name(i) + " . " + f4_name(j) + " != " + f4_name(i) + " |> " + f4_name(j);
            }
    add("g_i . j = i |> j", rackact, tw);

    return rep;
}

std::vector<int> ker_chi_z(const YDRealization& r) {
    const auto& G = r.group;
    std::vector<int> ker;
    const Cyclotomic one = Cyclotomic::one(r.session_order);
    for (int g = 0; g < G.size(); ++g)
        if (r.chi_z(g) == one) ker.push_back(g);
    for (int a : ker) {
        if (std::find(ker.begin(), ker.end(), G.inverse(a)) == ker.end())
            throw Error("ker chi_z not closed under inverse");
        for (int b : ker)
            if (std::find(ker.begin(), ker.end(), G.op(a, b)) == ker.end())
                throw Error("ker chi_z not closed under product");
    }
    return ker;
}

bool z_weight_is_e(const YDRealization& r) {
    // The three summands of z, as letter sequences.
    const std::vector<std::vector<F4>> summands = {
        {kF4Omega, kF4Zero, kF4One, kF4Omega, kF4Zero, kF4One},
        {kF4One, kF4Omega, kF4Zero, kF4One, kF4Omega, kF4Zero},
        {kF4Zero, kF4One, kF4Omega, kF4Zero, kF4One, kF4Omega},
    };
    int w0 = r.weight_of_letters(summands[0]);
    for (const auto& s : summands)
        if (r.weight_of_letters(s) != w0)
            throw Error("the three summands of z have different weights");
    return w0 == r.group.id;
}

int g_top(const YDRealization& r) {
    const std::vector<F4> mtop = {kF4Zero, kF4One,  kF4Zero, kF4Omega,  kF4Zero,
                                  kF4One,  kF4Omega, kF4Zero, kF4OmegaSq};
    return r.weight_of_letters(mtop);
}

int Epimorphism::operator()(int g) const {
    if (image[g] < 0) throw Error("element outside G'");
    return image[g];
}

Epimorphism epimorphism_to_F4C6(const YDRealization& r) {
    Epimorphism epi;
    epi.target = FiniteGroup::f4_semidirect_cyclic(6);
    const auto& G = r.group;
    epi.image.assign(G.size(), -1);

    std::deque<int> queue;
    for (F4 i = 0; i < 4; ++i) {
        int ti = epi.target.element("(" + f4_name(i) + ",t)");
        int gi = r.gmap[i];
        if (epi.image[gi] >= 0 && epi.image[gi] != ti)
            throw Error("epimorphism inconsistent on generators");
        if (epi.image[gi] < 0) {
            epi.image[gi] = ti;
            queue.push_back(gi);
        }
    }
    // Close under right multiplication by generators; every element of G'
    // is reached and each assignment is checked against prior ones.
    while (!queue.empty()) {
        int a = queue.front();
        queue.pop_front();
        for (F4 i = 0; i < 4; ++i) {
            int b = G.op(a, r.gmap[i]);
            int im = epi.target.op(epi.image[a], epi.target.element("(" + f4_name(i) + ",t)"));
            if (epi.image[b] < 0) {
                epi.image[b] = im;
                queue.push_back(b);
            } else if (epi.image[b] != im) {
                throw Error("epimorphism to F4 x| C6 is not well defined at " + G.label(b));
            }
        }
    }
    std::vector<bool> hit(epi.target.size(), false);
    for (int g = 0; g < G.size(); ++g) {
        if (epi.image[g] >= 0) {
            epi.gprime.push_back(g);
            hit[epi.image[g]] = true;
        }
    }
    for (bool h : hit)
        if (!h) throw Error("map G' -> F4 x| C6 is not surjective");
    return epi;
}

} // namespace tetrahopf
