#include "tetrahopf/scalars.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace tetrahopf {

namespace {

// Quotient of integer polynomials, exact division assumed (both monic cases
// we use divide exactly). Index = degree.
std::vector<mpz_class> exact_div(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
    std::vector<mpz_class> q(num.size() - den.size() + 1, 0);
    for (int d = static_cast<int>(q.size()) - 1; d >= 0; --d) {
        mpz_class c = num[d + den.size() - 1] / den.back();
        q[d] = c;
        if (c != 0)
            for (size_t j = 0; j < den.size(); ++j) num[d + j] -= c * den[j];
    }
    for (const auto& r : num)
        if (r != 0) throw Error("cyclotomic polynomial division not exact");
    return q;
}

std::vector<mpz_class> cyclotomic_poly(int n) {
    // x^n - 1 divided by Phi_d for every proper divisor d of n.
    std::vector<mpz_class> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        num = exact_div(std::move(num), cyclotomic_poly(d));
    }
    return num;
}

} // namespace

CycField::CycField(int order) : order_(order), phi_(cyclotomic_poly(order)) {}

std::shared_ptr<const CycField> CycField::get(int order) {
    if (order < 1) throw Error("cyclotomic order must be positive");
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const CycField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;
    auto f = std::shared_ptr<const CycField>(new CycField(order));
    cache.emplace(order, f);
    return f;
}

std::vector<mpq_class> CycField::reduce(std::vector<mpq_class> poly) const {
    const int deg = degree();
    // Divide by the monic Phi_N and keep the remainder.
    for (int d = static_cast<int>(poly.size()) - 1; d >= deg; --d) {
        mpq_class c = poly[d];
        if (c == 0) continue;
        for (int j = 0; j <= deg; ++j) poly[d - deg + j] -= c * mpq_class(phi_[j]);
    }
    poly.resize(deg);
    for (auto& q : poly) q.canonicalize();
    return poly;
}

Cyclotomic::Cyclotomic() : field_(CycField::get(1)), c_(1, mpq_class(0)) {}
Cyclotomic::Cyclotomic(long v) : field_(CycField::get(1)), c_(1, mpq_class(v)) {}
Cyclotomic::Cyclotomic(const mpq_class& v) : field_(CycField::get(1)), c_(1, v) {}

Cyclotomic::Cyclotomic(std::shared_ptr<const CycField> f, std::vector<mpq_class> c)
    : field_(std::move(f)), c_(std::move(c)) {
    c_.resize(field_->degree(), mpq_class(0));
}

Cyclotomic Cyclotomic::zero(int order) {
    auto f = CycField::get(order);
    return Cyclotomic(f, std::vector<mpq_class>(f->degree(), mpq_class(0)));
}

Cyclotomic Cyclotomic::one(int order) { return rational(mpq_class(1), order); }

Cyclotomic Cyclotomic::rational(const mpq_class& v, int order) {
    auto f = CycField::get(order);
    std::vector<mpq_class> c(f->degree(), mpq_class(0));
    if (f->degree() > 0) c[0] = v;
    return Cyclotomic(f, std::move(c));
}

Cyclotomic Cyclotomic::root_of_unity(long k, int order) {
    if (order < 1) throw Error("root_of_unity: order must be >= 1");
    auto f = CycField::get(order);
    long e = ((k % order) + order) % order;
    std::vector<mpq_class> p(static_cast<size_t>(e) + 1, mpq_class(0));
    p[e] = 1;
    return Cyclotomic(f, f->reduce(std::move(p)));
}

bool Cyclotomic::is_zero() const {
    for (const auto& q : c_)
        if (q != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

mpq_class Cyclotomic::rational_value() const {
    if (!is_rational()) throw Error("scalar is not rational: " + to_string());
    return c_.empty() ? mpq_class(0) : c_[0];
}

Cyclotomic Cyclotomic::promoted(int order) const {
    const int m = field_->order();
    if (m == order) return *this;
    if (order % m != 0) throw Error("cannot embed Q(zeta_" + std::to_string(m) + ") into Q(zeta_" + std::to_string(order) + ")");
    auto f = CycField::get(order);
    const long step = order / m;
    std::vector<mpq_class> p(static_cast<size_t>(order), mpq_class(0));
    for (size_t k = 0; k < c_.size(); ++k) p[k * step] = c_[k];
    return Cyclotomic(f, f->reduce(std::move(p)));
}

void Cyclotomic::align(Cyclotomic& a, Cyclotomic& b) {
    if (a.order() == b.order()) return;
    if (b.order() % a.order() == 0) {
        a = a.promoted(b.order());
    } else if (a.order() % b.order() == 0) {
        b = b.promoted(a.order());
    } else {
        throw Error("mixed cyclotomic orders " + std::to_string(a.order()) + " and " + std::to_string(b.order()));
    }
}

Cyclotomic Cyclotomic::operator-() const {
    std::vector<mpq_class> c(c_);
    for (auto& q : c) q = -q;
    return Cyclotomic(field_, std::move(c));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    Cyclotomic a(*this), b(o);
    align(a, b);
    std::vector<mpq_class> c(a.c_);
    for (size_t i = 0; i < c.size(); ++i) c[i] += b.c_[i];
    return Cyclotomic(a.field_, std::move(c));
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    Cyclotomic a(*this), b(o);
    align(a, b);
    std::vector<mpq_class> prod(a.c_.size() + b.c_.size(), mpq_class(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            prod[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return Cyclotomic(a.field_, a.field_->reduce(std::move(prod)));
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw Error("division by zero");
    // Extended Euclid in Q[x] against Phi_N.
    std::vector<mpq_class> r0(field_->modulus().size());
    for (size_t i = 0; i < r0.size(); ++i) r0[i] = mpq_class(field_->modulus()[i]);
    std::vector<mpq_class> r1(c_);
    std::vector<mpq_class> s0(1, mpq_class(0)), s1(1, mpq_class(1));
    auto deg = [](const std::vector<mpq_class>& p) {
        for (int d = static_cast<int>(p.size()) - 1; d >= 0; --d)
            if (p[d] != 0) return d;
        return -1;
    };
    while (deg(r1) > 0) {
        // r0 = q*r1 + r
        std::vector<mpq_class> q(std::max<size_t>(1, r0.size()), mpq_class(0));
        std::vector<mpq_class> r(r0);
        int d1 = deg(r1);
        for (int d = deg(r); d >= d1; d = deg(r)) {
            mpq_class c = r[d] / r1[d1];
            q[d - d1] += c;
            for (int j = 0; j <= d1; ++j) r[d - d1 + j] -= c * r1[j];
        }
        // s = s0 - q*s1
        std::vector<mpq_class> s(std::max(s0.size(), q.size() + s1.size()), mpq_class(0));
        for (size_t i = 0; i < s0.size(); ++i) s[i] = s0[i];
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < s1.size(); ++j) s[i + j] -= q[i] * s1[j];
        }
        r0 = std::move(r1);
        s0 = std::move(s1);
        r1 = std::move(r);
        s1 = std::move(s);
    }
    int d = deg(r1);
    if (d < 0) throw Error("inverse: scalar not invertible");
    mpq_class lead = r1[d];
    for (auto& q : s1) q /= lead;
    return Cyclotomic(field_, field_->reduce(std::move(s1)));
}

Cyclotomic Cyclotomic::operator/(const Cyclotomic& o) const { return *this * o.inverse(); }

Cyclotomic Cyclotomic::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic acc = Cyclotomic::one(order());
    Cyclotomic base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    Cyclotomic a(*this), b(o);
    align(a, b);
    return a.c_ == b.c_;
}

long Cyclotomic::root_of_unity_order() const {
    const long n = order();
    Cyclotomic acc = *this;
    for (long k = 1; k <= 2 * n; ++k) {
        if (acc == Cyclotomic::one(order())) return k;
        acc = acc * (*this);
    }
    return 0;
}

std::string Cyclotomic::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        mpq_class v = c_[k];
        if (first) {
            if (v < 0) os << "-";
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        mpq_class av = abs(v);
        if (k == 0) {
            os << av.get_str();
        } else {
            if (av != 1) os << av.get_str() << "*";
            os << "z^" << k;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

FPoly::FPoly(const Cyclotomic& constant) {
    if (!constant.is_zero()) c_.push_back(constant);
}

FPoly FPoly::monomial(const Cyclotomic& c, int d) {
    FPoly p;
    if (c.is_zero()) return p;
    p.c_.assign(static_cast<size_t>(d) + 1, Cyclotomic::zero(c.order()));
    p.c_[d] = c;
    return p;
}

FPoly FPoly::F(int order) { return monomial(Cyclotomic::one(order), 1); }

const Cyclotomic& FPoly::coeff(int d) const {
    static const Cyclotomic kZero;
    if (d < 0 || d >= static_cast<int>(c_.size())) return kZero;
    return c_[d];
}

Cyclotomic FPoly::eval(const Cyclotomic& value) const {
    if (c_.empty()) return Cyclotomic::zero(value.order());
    Cyclotomic acc = c_.back();
    for (int d = static_cast<int>(c_.size()) - 2; d >= 0; --d) acc = acc * value + c_[d];
    return acc;
}

void FPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FPoly FPoly::operator-() const {
    FPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

FPoly FPoly::operator+(const FPoly& o) const {
    FPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), Cyclotomic());
    for (size_t i = 0; i < r.c_.size(); ++i) {
        if (i < c_.size() && i < o.c_.size())
            r.c_[i] = c_[i] + o.c_[i];
        else if (i < c_.size())
            r.c_[i] = c_[i];
        else
            r.c_[i] = o.c_[i];
    }
    r.trim();
    return r;
}

FPoly FPoly::operator-(const FPoly& o) const { return *this + (-o); }

FPoly FPoly::operator*(const FPoly& o) const {
    FPoly r;
    if (c_.empty() || o.c_.empty()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Cyclotomic::zero(c_[0].order()));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j].is_zero()) continue;
            r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
        }
    }
    r.trim();
    return r;
}

FPoly FPoly::operator*(const Cyclotomic& s) const {
    if (s.is_zero()) return FPoly();
    FPoly r(*this);
    for (auto& c : r.c_) c = c * s;
    r.trim();
    return r;
}

FPoly FPoly::div_unit(const FPoly& unit) const {
    if (unit.is_zero() || unit.degree() != 0)
        throw Error("division by non-unit polynomial in F: " + unit.to_string());
    return *this * unit.c_[0].inverse();
}

bool FPoly::operator==(const FPoly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

std::string FPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t d = 0; d < c_.size(); ++d) {
        if (c_[d].is_zero()) continue;
        if (!first) os << " + ";
        if (d == 0) {
            os << "(" << c_[d].to_string() << ")";
        } else {
            if (!(c_[d] == Cyclotomic::one(c_[d].order()))) os << "(" << c_[d].to_string() << ")*";
            os << "F";
            if (d > 1) os << "^" << d;
        }
        first = false;
    }
    return os.str();
}

} // namespace tetrahopf
