#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "netcode/field.hpp"

namespace netcode {

/// Degree of the zero polynomial (stands in for -infinity).
constexpr int kNegInfDegree = std::numeric_limits<int>::min();

/// Polynomial over F_q in the delay parameter z, coefficients ascending.
/// Canonical form: no trailing zero coefficient; zero = empty list.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Field* f) : field_(f) {}
    Poly(const Field* f, std::vector<uint32_t> coeffs);
    static Poly zero(const Field* f) { return Poly(f); }
    static Poly constant(const Field* f, uint32_t c);
    static Poly z(const Field* f) { return Poly(f, {0, 1}); }
    /// c * z^k
    static Poly monomial(const Field* f, uint32_t c, int k);

    const Field* field() const { return field_; }
    const std::vector<uint32_t>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// kNegInfDegree for the zero polynomial.
    int degree() const { return coeffs_.empty() ? kNegInfDegree : int(coeffs_.size()) - 1; }
    uint32_t coeff(int i) const {
        return (i >= 0 && i < int(coeffs_.size())) ? coeffs_[size_t(i)] : 0;
    }
    uint32_t leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
    bool is_monic() const { return leading() == 1; }
    bool is_constant() const { return coeffs_.size() <= 1; }
    /// Index of the lowest nonzero coefficient; kNegInfDegree if zero.
    int valuation() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scaled(uint32_t c) const;
    Poly shifted(int k) const;  // * z^k, k >= 0
    bool operator==(const Poly& o) const;

    /// Quotient and remainder; divisor must be nonzero.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    /// Exact division; throws if the remainder is nonzero.
    static Poly exact_div(const Poly& a, const Poly& b);
    /// Monic gcd.
    static Poly gcd(Poly a, Poly b);

    uint32_t eval(uint32_t z0) const;
    /// Evaluate with coefficients pushed through `emb` into emb.to.
    uint32_t eval_embedded(const Embedding& emb, uint32_t z0) const;

    std::string str() const;  // e.g. "1+z^2", "2*z", "0"

private:
    void trim();
    const Field* field_ = nullptr;
    std::vector<uint32_t> coeffs_;
};

/// Rational function over F_q(z) in canonical form:
/// gcd(num, den) = 1, den monic and nonzero; zero is 0/1.
class Rat {
public:
    Rat() = default;
    explicit Rat(const Field* f) : num_(f), den_(Poly::constant(f, 1)) {}
    Rat(Poly num, Poly den);
    /// num / 1
    explicit Rat(Poly num);
    static Rat zero(const Field* f) { return Rat(f); }
    static Rat constant(const Field* f, uint32_t c) { return Rat(Poly::constant(f, c)); }
    static Rat z(const Field* f) { return Rat(Poly::z(f)); }

    const Field* field() const { return num_.field(); }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_constant(); }

    Rat operator+(const Rat& o) const;
    Rat operator-(const Rat& o) const;
    Rat operator-() const;
    Rat operator*(const Rat& o) const;
    Rat operator/(const Rat& o) const;
    Rat scaled(uint32_t c) const;
    Rat inverse() const;
    bool operator==(const Rat& o) const;

    /// (deg num, deg den); deg num is kNegInfDegree for zero.
    std::pair<int, int> degree_bound() const { return {num_.degree(), den_.degree()}; }

    /// Value at z0 in the embedding's target field; throws PoleError if the
    /// denominator vanishes there.
    uint32_t eval_embedded(const Embedding& emb, uint32_t z0) const;
    uint32_t eval(uint32_t z0) const;

    std::string str() const;

private:
    void canonicalize();
    Poly num_, den_;
};

/// Dense matrix of rational functions over one field.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(const Field* f, size_t rows, size_t cols);
    static RatMatrix identity(const Field* f, size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const Field* field() const { return field_; }
    Rat& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const Rat& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    RatMatrix operator*(const RatMatrix& o) const;
    bool operator==(const RatMatrix& o) const;

    std::vector<Rat> column(size_t c) const;
    void set_column(size_t c, const std::vector<Rat>& v);

private:
    const Field* field_ = nullptr;
    size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> data_;
};

/// Exact determinant: denominators cleared row by row, then fraction-free
/// (Bareiss) elimination over F_q[z], with the cleared factor divided out.
Rat mat_det(const RatMatrix& m);

/// Rank over F_q(z).
size_t mat_rank(const RatMatrix& m);

/// Rank of a set of column vectors over F_q(z).
size_t vec_rank(const std::vector<std::vector<Rat>>& cols);

/// Dot product of equal-length vectors.
Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b);

/// Fraction-free determinant of a polynomial matrix (used directly by tests
/// and by mat_det after clearing).
Poly poly_det_bareiss(std::vector<std::vector<Poly>> m);

/// Rank of a polynomial matrix given as rows (fraction-free elimination);
/// the denominator-free fast path for search pruning.
size_t poly_row_rank(std::vector<std::vector<Poly>> rows);

}  // namespace netcode
