#pragma once

#include <optional>
#include <vector>

#include "tetrahopf/scalars.hpp"

namespace tetrahopf {

using Vec = std::vector<Cyclotomic>;

/// Dense matrix over Q(zeta_N). Small sizes only (<= a few hundred), exact
/// Gaussian elimination throughout.
struct Mat {
    int rows = 0, cols = 0;
    std::vector<Cyclotomic> a;

    Mat() = default;
    Mat(int r, int c, int order)
        : rows(r), cols(c), a(static_cast<size_t>(r) * c, Cyclotomic::zero(order)) {}

    Cyclotomic& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Cyclotomic& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static Mat identity(int n, int order);
    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Vec apply(const Vec& v) const;
    bool is_zero() const;
    bool operator==(const Mat& o) const;
};

Vec vec_zero(int n, int order);
bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Vec& a, const Cyclotomic& c);

int rank(Mat m);
/// Basis of the right nullspace {x : m x = 0}.
std::vector<Vec> nullspace(const Mat& m);
/// Solves m x = b; std::nullopt when inconsistent.
std::optional<Vec> solve(Mat m, Vec b);
/// Inverse of a square matrix; throws on singular input.
Mat inverse(Mat m);

/// Incremental echelon basis of a subspace; insert() reduces a vector and
/// keeps it when independent. coords() expresses a vector over the inserted
/// generators that produced pivots.
class SubspaceBasis {
public:
    explicit SubspaceBasis(int ambient_dim, int order) : dim_(ambient_dim), order_(order) {}

    int size() const { return static_cast<int>(rows_.size()); }
    int ambient_dim() const { return dim_; }
    /// Returns true when v enlarged the span.
    bool insert(Vec v);
    bool contains(Vec v) const;
    /// Coordinates of v over the stored echelon basis, or nullopt.
    std::optional<Vec> coords_in_echelon(Vec v) const;
    const std::vector<Vec>& echelon_rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

private:
    int dim_, order_;
    std::vector<Vec> rows_;   // echelon, pivot normalized to 1
    std::vector<int> pivots_; // pivot column per row
};

} // namespace tetrahopf
