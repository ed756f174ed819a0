#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tetrahopf/rack.hpp"
#include "tetrahopf/scalars.hpp"

namespace tetrahopf {

/// A finite group given by its full Cayley table. Elements are indices into
/// the table; structured labels (e.g. "(0,t^3)*(g^1)") are kept alongside so
/// reports stay readable.
struct FiniteGroup {
    std::vector<std::vector<int>> mul;
    std::vector<int> inv;
    std::vector<std::string> labels;
    int id = 0;

    int size() const { return static_cast<int>(mul.size()); }
    int op(int a, int b) const { return mul[a][b]; }
    int inverse(int a) const { return inv[a]; }
    const std::string& label(int a) const { return labels[a]; }
    /// Index of the element with the given label; throws on unknown labels.
    int element(const std::string& label) const;

    /// Exhaustive associativity/identity/inverse check; throws with a witness.
    void check() const;

    static FiniteGroup trivial();
    static FiniteGroup cyclic(int n, const std::string& gen_name = "g");
    /// F4 x| C_n with t.i = omega*i; n must be divisible by 3 for the action
    /// to be well defined on exponents (we always use n = 6m).
    static FiniteGroup f4_semidirect_cyclic(int n);
    static FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b);
    static FiniteGroup from_table(std::vector<std::vector<int>> table,
                                  std::vector<std::string> labels = {});
};

/// A multiplicative character G -> k^* with values in Q(zeta_N).
struct Character {
    std::vector<Cyclotomic> values;

    const Cyclotomic& operator()(int g) const { return values[g]; }
    /// First pair violating chi(gh) = chi(g)chi(h), if any.
    std::optional<std::pair<int, int>> multiplicative_defect(const FiniteGroup& G) const;
};

struct CheckEntry {
    std::string name;
    bool pass = true;
    std::string witness;
};

struct ValidationReport {
    std::vector<CheckEntry> entries;
    bool pass() const {
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }
    std::string first_failure() const {
        for (const auto& e : entries)
            if (!e.pass) return e.name + ": " + e.witness;
        return "";
    }
};

/// A faithful principal YD-realization of the tetrahedron rack over G:
/// an action of G on F4, an injective section g: F4 -> G and a character
/// with chi(g_i) = -1.
struct YDRealization {
    FiniteGroup group;
    std::vector<std::array<F4, 4>> dot; // dot[h][i] = h . i
    std::array<int, 4> gmap{};          // g_i as group indices
    Character chi;
    int session_order = 2; // N = lcm of the orders of all chi values

    F4 act(int h, F4 i) const { return dot[h][i]; }
    int gen(F4 i) const { return gmap[i]; }

    /// chi_z = chi^6 evaluated at g.
    Cyclotomic chi_z(int g) const { return chi(g).pow(6); }

    /// Adjoint weight g_{i_1}^{-1} ... g_{i_l}^{-1} of a monomial in the x_i.
    template <typename Seq>
    int weight_of_letters(const Seq& letters) const {
        int w = group.id;
        for (F4 i : letters) w = group.op(w, group.inverse(gmap[i]));
        return w;
    }
};

/// The (m,k)-affine realization over F4 x| C_{6m} with g_i = (i, t^{6k+1}).
YDRealization mk_affine_realization(int m, int k);

/// Extends a realization to the direct product with an extra group acting
/// trivially on F4, with character chi x chi1.
YDRealization extend_realization(const YDRealization& base, const FiniteGroup& extra,
                                 const std::vector<Cyclotomic>& chi1);

/// Exhaustive check of every realization axiom.
ValidationReport validate_realization(const YDRealization& r);

/// {g : chi_z(g) = 1}, verified closed under product and inverse.
std::vector<int> ker_chi_z(const YDRealization& r);

/// Whether the common weight of the three summands of z is e; throws if the
/// three weights disagree.
bool z_weight_is_e(const YDRealization& r);

/// g_top = g_0^{-1} g_1^{-1} g_0^{-1} g_w^{-1} g_0^{-1} g_1^{-1} g_w^{-1} g_0^{-1} g_{w2}^{-1}.
int g_top(const YDRealization& r);

/// The epimorphism G' -> F4 x| C6, g_i -> (i, t), computed by closing the
/// generators and checking consistency.
struct Epimorphism {
    FiniteGroup target;           // F4 x| C6
    std::vector<int> image;       // G index -> target index, -1 off G'
    std::vector<int> gprime;      // the elements of G', sorted
    bool defined_at(int g) const { return image[g] >= 0; }
    int operator()(int g) const;  // throws off G'
};

Epimorphism epimorphism_to_F4C6(const YDRealization& r);

} // namespace tetrahopf
