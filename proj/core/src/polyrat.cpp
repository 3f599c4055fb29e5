#include "netcode/polyrat.hpp"

#include <algorithm>
#include <cassert>

namespace netcode {

namespace {
void require_same_field(const Field* a, const Field* b) {
    if (a == nullptr || b == nullptr || !(*a == *b))
        throw FieldError("operands belong to different fields");
}
}  // namespace

Poly::Poly(const Field* f, std::vector<uint32_t> coeffs)
    : field_(f), coeffs_(std::move(coeffs)) {
    trim();
}

Poly Poly::constant(const Field* f, uint32_t c) {
    return c == 0 ? Poly(f) : Poly(f, {c});
}

Poly Poly::monomial(const Field* f, uint32_t c, int k) {
    if (c == 0) return Poly(f);
    std::vector<uint32_t> v(size_t(k) + 1, 0);
    v[size_t(k)] = c;
    return Poly(f, std::move(v));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int Poly::valuation() const {
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return int(i);
    return kNegInfDegree;
}

Poly Poly::operator+(const Poly& o) const {
    require_same_field(field_, o.field_);
    std::vector<uint32_t> r(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = field_->add(coeff(int(i)), o.coeff(int(i)));
    return Poly(field_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    std::vector<uint32_t> r(coeffs_);
    for (auto& c : r) c = field_->neg(c);
    return Poly(field_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    require_same_field(field_, o.field_);
    if (is_zero() || o.is_zero()) return Poly(field_);
    std::vector<uint32_t> r(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            r[i + j] = field_->add(r[i + j], field_->mul(coeffs_[i], o.coeffs_[j]));
    }
    return Poly(field_, std::move(r));
}

Poly Poly::scaled(uint32_t c) const {
    if (c == 0) return Poly(field_);
    std::vector<uint32_t> r(coeffs_);
    for (auto& x : r) x = field_->mul(x, c);
    return Poly(field_, std::move(r));
}

Poly Poly::shifted(int k) const {
    if (is_zero()) return *this;
    std::vector<uint32_t> r(coeffs_.size() + size_t(k), 0);
    std::copy(coeffs_.begin(), coeffs_.end(), r.begin() + k);
    return Poly(field_, std::move(r));
}

bool Poly::operator==(const Poly& o) const {
    return field_ == o.field_ && coeffs_ == o.coeffs_;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    require_same_field(a.field_, b.field_);
    if (b.is_zero()) throw FieldError("polynomial division by zero");
    const Field* f = a.field_;
    Poly rem = a;
    if (a.degree() < b.degree()) return {Poly(f), rem};
    std::vector<uint32_t> q(size_t(a.degree() - b.degree()) + 1, 0);
    uint32_t lead_inv = f->inv(b.leading());
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int shift = rem.degree() - b.degree();
        uint32_t c = f->mul(rem.leading(), lead_inv);
        q[size_t(shift)] = c;
        rem = rem - b.scaled(c).shifted(shift);
    }
    return {Poly(f, std::move(q)), rem};
}

Poly Poly::exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw FieldError("inexact polynomial division");
    return q;
}

Poly Poly::gcd(Poly a, Poly b) {
    const Field* f = a.field();
    require_same_field(f, b.field());
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(f->inv(a.leading()));  // monic
}

uint32_t Poly::eval(uint32_t z0) const {
    uint32_t acc = 0;
    for (size_t i = coeffs_.size(); i-- > 0;)
        acc = field_->add(field_->mul(acc, z0), coeffs_[i]);
    return acc;
}

uint32_t Poly::eval_embedded(const Embedding& emb, uint32_t z0) const {
    const Field* tgt = emb.to;
    uint32_t acc = 0;
    for (size_t i = coeffs_.size(); i-- > 0;)
        acc = tgt->add(tgt->mul(acc, z0), emb(coeffs_[i]));
    return acc;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
            s += std::to_string(coeffs_[i]);
        } else {
            if (coeffs_[i] != 1) s += std::to_string(coeffs_[i]) + "*";
            s += (i == 1) ? "z" : "z^" + std::to_string(i);
        }
    }
    return s;
}

Rat::Rat(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    require_same_field(num_.field(), den_.field());
    canonicalize();
}

Rat::Rat(Poly num)
    : num_(std::move(num)), den_(Poly::constant(num_.field(), 1)) {}

void Rat::canonicalize() {
    if (den_.is_zero()) throw FieldError("rational with zero denominator");
    const Field* f = num_.field();
    if (num_.is_zero()) {
        den_ = Poly::constant(f, 1);
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = Poly::exact_div(num_, g);
        den_ = Poly::exact_div(den_, g);
    }
    uint32_t lead = den_.leading();
    if (lead != 1) {
        uint32_t li = f->inv(lead);
        num_ = num_.scaled(li);
        den_ = den_.scaled(li);
    }
}

bool Rat::is_one() const {
    return den_.is_constant() && den_.coeff(0) == 1 && num_.is_constant() &&
           num_.coeff(0) == 1;
}

Rat Rat::operator+(const Rat& o) const {
    return Rat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rat Rat::operator-(const Rat& o) const {
    return Rat(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rat Rat::operator-() const {
    Rat r = *this;
    r.num_ = -r.num_;
    return r;
}

Rat Rat::operator*(const Rat& o) const {
    return Rat(num_ * o.num_, den_ * o.den_);
}

Rat Rat::operator/(const Rat& o) const {
    if (o.is_zero()) throw FieldError("division by zero rational");
    return Rat(num_ * o.den_, den_ * o.num_);
}

Rat Rat::scaled(uint32_t c) const {
    Rat r = *this;
    r.num_ = r.num_.scaled(c);
    if (c == 0) r.den_ = Poly::constant(field(), 1);
    return r;
}

Rat Rat::inverse() const {
    if (is_zero()) throw FieldError("inverse of zero rational");
    return Rat(den_, num_);
}

bool Rat::operator==(const Rat& o) const {
    return num_ == o.num_ && den_ == o.den_;
}

uint32_t Rat::eval_embedded(const Embedding& emb, uint32_t z0) const {
    uint32_t d = den_.eval_embedded(emb, z0);
    if (d == 0) throw PoleError("pole at z0 = " + std::to_string(z0));
    uint32_t n = num_.eval_embedded(emb, z0);
    return emb.to->div(n, d);
}

uint32_t Rat::eval(uint32_t z0) const {
    uint32_t d = den_.eval(z0);
    if (d == 0) throw PoleError("pole at z0 = " + std::to_string(z0));
    return field()->div(num_.eval(z0), d);
}

std::string Rat::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatMatrix::RatMatrix(const Field* f, size_t rows, size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Rat(f)) {}

RatMatrix RatMatrix::identity(const Field* f, size_t n) {
    RatMatrix m(f, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Rat::constant(f, 1);
    return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix shape mismatch");
    RatMatrix r(field_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                const Rat& b = o.at(k, j);
                if (b.is_zero()) continue;
                r.at(i, j) = r.at(i, j) + a * b;
            }
        }
    return r;
}

bool RatMatrix::operator==(const RatMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::vector<Rat> RatMatrix::column(size_t c) const {
    std::vector<Rat> v;
    v.reserve(rows_);
    for (size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
    return v;
}

void RatMatrix::set_column(size_t c, const std::vector<Rat>& v) {
    if (v.size() != rows_) throw Error("column length mismatch");
    for (size_t r = 0; r < rows_; ++r) at(r, c) = v[r];
}

Poly poly_det_bareiss(std::vector<std::vector<Poly>> m) {
    const size_t n = m.size();
    if (n == 0) throw Error("determinant of empty matrix is handled by caller");
    const Field* f = m[0][0].field();
    Poly prev = Poly::constant(f, 1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k].is_zero()) ++piv;
            if (piv == n) return Poly(f);  // singular
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Poly t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = Poly::exact_div(t, prev);
            }
            m[i][k] = Poly(f);
        }
        prev = m[k][k];
    }
    Poly det = m[n - 1][n - 1];
    if (sign < 0) det = -det;
    return det;
}

Rat mat_det(const RatMatrix& mat) {
    if (mat.rows() != mat.cols()) throw Error("determinant of non-square matrix");
    const Field* f = mat.field();
    const size_t n = mat.rows();
    if (n == 0) return Rat::constant(f, 1);  // empty product

    // Clear denominators per row with the row lcm.
    std::vector<std::vector<Poly>> pm(n, std::vector<Poly>(n, Poly(f)));
    Poly cleared = Poly::constant(f, 1);
    for (size_t i = 0; i < n; ++i) {
        Poly l = Poly::constant(f, 1);
        for (size_t j = 0; j < n; ++j) {
            const Poly& d = mat.at(i, j).den();
            l = Poly::exact_div(l * d, Poly::gcd(l, d));
        }
        for (size_t j = 0; j < n; ++j) {
            const Rat& e = mat.at(i, j);
            pm[i][j] = e.num() * Poly::exact_div(l, e.den());
        }
        cleared = cleared * l;
    }
    return Rat(poly_det_bareiss(std::move(pm)), cleared);
}

namespace {

// Rank of a polynomial matrix via fraction-free elimination.
size_t poly_rank(std::vector<std::vector<Poly>> m) {
    if (m.empty() || m[0].empty()) return 0;
    const size_t rows = m.size(), cols = m[0].size();
    const Field* f = m[0][0].field();
    Poly prev = Poly::constant(f, 1);
    size_t rank = 0;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j) {
                Poly t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                m[i][j] = Poly::exact_div(t, prev);
            }
            m[i][c] = Poly(f);
        }
        prev = m[r][c];
        ++rank;
        ++r;
    }
    return rank;
}

std::vector<std::vector<Poly>> clear_rows(const std::vector<std::vector<Rat>>& m) {
    const Field* f = m[0][0].field();
    std::vector<std::vector<Poly>> pm(m.size());
    for (size_t i = 0; i < m.size(); ++i) {
        Poly l = Poly::constant(f, 1);
        for (const Rat& e : m[i]) {
            const Poly& d = e.den();
            l = Poly::exact_div(l * d, Poly::gcd(l, d));
        }
        pm[i].reserve(m[i].size());
        for (const Rat& e : m[i])
            pm[i].push_back(e.num() * Poly::exact_div(l, e.den()));
    }
    return pm;
}

}  // namespace

size_t poly_row_rank(std::vector<std::vector<Poly>> rows) {
    return poly_rank(std::move(rows));
}

size_t mat_rank(const RatMatrix& mat) {
    if (mat.rows() == 0 || mat.cols() == 0) return 0;
    std::vector<std::vector<Rat>> m(mat.rows());
    for (size_t i = 0; i < mat.rows(); ++i)
        for (size_t j = 0; j < mat.cols(); ++j) m[i].push_back(mat.at(i, j));
    return poly_rank(clear_rows(m));
}

size_t vec_rank(const std::vector<std::vector<Rat>>& cols) {
    if (cols.empty() || cols[0].empty()) return 0;
    // rows of the transposed matrix are the vectors; rank is unchanged
    return poly_rank(clear_rows(cols));
}

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    if (a.size() != b.size()) throw Error("dot product length mismatch");
    if (a.empty()) throw Error("dot product of empty vectors");
    Rat acc(a[0].field());
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero() || b[i].is_zero()) continue;
        acc = acc + a[i] * b[i];
    }
    return acc;
}

}  // namespace netcode
