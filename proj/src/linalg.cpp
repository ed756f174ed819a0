#include "tetrahopf/linalg.hpp"

#include <algorithm>

#include "tetrahopf/error.hpp"

namespace tetrahopf {

Mat Mat::identity(int n, int order) {
    Mat m(n, n, order);
    for (int i = 0; i < n; ++i) m.at(i, i) = Cyclotomic::one(order);
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols != o.rows) throw Error("matrix product shape mismatch");
    int order = a.empty() ? 1 : a[0].order();
    Mat r(rows, o.cols, order);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const Cyclotomic& x = at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < o.cols; ++j) {
                const Cyclotomic& y = o.at(k, j);
                if (y.is_zero()) continue;
                r.at(i, j) = r.at(i, j) + x * y;
            }
        }
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows != o.rows || cols != o.cols) throw Error("matrix sum shape mismatch");
    Mat r(*this);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = r.a[i] + o.a[i];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows != o.rows || cols != o.cols) throw Error("matrix difference shape mismatch");
    Mat r(*this);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = r.a[i] - o.a[i];
    return r;
}

Vec Mat::apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols) throw Error("matrix apply shape mismatch");
    int order = a.empty() ? 1 : a[0].order();
    Vec r(rows, Cyclotomic::zero(order));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            const Cyclotomic& x = at(i, j);
            if (x.is_zero() || v[j].is_zero()) continue;
            r[i] = r[i] + x * v[j];
        }
    return r;
}

bool Mat::is_zero() const {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

bool Mat::operator==(const Mat& o) const {
    if (rows != o.rows || cols != o.cols) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != o.a[i]) return false;
    return true;
}

Vec vec_zero(int n, int order) { return Vec(n, Cyclotomic::zero(order)); }

bool vec_is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
    Vec r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    Vec r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] - b[i];
    return r;
}

Vec vec_scale(const Vec& a, const Cyclotomic& c) {
    Vec r(a);
    for (auto& x : r) x = x * c;
    return r;
}

namespace {

// Row echelon form in place; returns pivot columns.
std::vector<int> echelonize(Mat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int p = -1;
        for (int i = row; i < m.rows; ++i)
            if (!m.at(i, col).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        for (int j = 0; j < m.cols; ++j) std::swap(m.at(row, j), m.at(p, j));
        Cyclotomic inv = m.at(row, col).inverse();
        for (int j = col; j < m.cols; ++j) m.at(row, j) = m.at(row, j) * inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            Cyclotomic f = m.at(i, col);
            for (int j = col; j < m.cols; ++j) m.at(i, j) = m.at(i, j) - f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

int rank(Mat m) { return static_cast<int>(echelonize(m).size()); }

std::vector<Vec> nullspace(const Mat& m) {
    Mat e(m);
    std::vector<int> pivots = echelonize(e);
    int order = m.a.empty() ? 1 : m.a[0].order();
    std::vector<bool> is_pivot(m.cols, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (int freec = 0; freec < m.cols; ++freec) {
        if (is_pivot[freec]) continue;
        Vec v = vec_zero(m.cols, order);
        v[freec] = Cyclotomic::one(order);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -e.at(static_cast<int>(r), freec);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(Mat m, Vec b) {
    int order = m.a.empty() ? (b.empty() ? 1 : b[0].order()) : m.a[0].order();
    Mat aug(m.rows, m.cols + 1, order);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i];
    }
    std::vector<int> pivots = echelonize(aug);
    Vec x = vec_zero(m.cols, order);
    for (size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == m.cols) return std::nullopt; // pivot in the rhs column
        x[pivots[r]] = aug.at(static_cast<int>(r), m.cols);
    }
    return x;
}

Mat inverse(Mat m) {
    if (m.rows != m.cols) throw Error("inverse of non-square matrix");
    int order = m.a.empty() ? 1 : m.a[0].order();
    Mat aug(m.rows, 2 * m.cols, order);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols + i) = Cyclotomic::one(order);
    }
    std::vector<int> pivots = echelonize(aug);
    if (static_cast<int>(pivots.size()) != m.rows || pivots.back() != m.rows - 1)
        throw Error("matrix is singular");
    for (size_t r = 0; r < pivots.size(); ++r)
        if (pivots[r] != static_cast<int>(r)) throw Error("matrix is singular");
    Mat inv(m.rows, m.cols, order);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) inv.at(i, j) = aug.at(i, m.cols + j);
    return inv;
}

bool SubspaceBasis::insert(Vec v) {
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Cyclotomic& c = v[pivots_[r]];
        if (!c.is_zero()) v = vec_sub(v, vec_scale(rows_[r], c));
    }
    int pivot = -1;
    for (int j = 0; j < dim_; ++j)
        if (!v[j].is_zero()) {
            pivot = j;
            break;
        }
    if (pivot < 0) return false;
    v = vec_scale(v, v[pivot].inverse());
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
}

bool SubspaceBasis::contains(Vec v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Cyclotomic& c = v[pivots_[r]];
        if (!c.is_zero()) v = vec_sub(v, vec_scale(rows_[r], c));
    }
    return vec_is_zero(v);
}

std::optional<Vec> SubspaceBasis::coords_in_echelon(Vec v) const {
    Vec coords = vec_zero(static_cast<int>(rows_.size()), order_);
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Cyclotomic& c = v[pivots_[r]];
        if (!c.is_zero()) {
            coords[r] = c;
            v = vec_sub(v, vec_scale(rows_[r], c));
        }
    }
    if (!vec_is_zero(v)) return std::nullopt;
    return coords;
}

} // namespace tetrahopf
