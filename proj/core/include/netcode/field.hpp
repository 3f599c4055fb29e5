#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "netcode/errors.hpp"

namespace netcode {

class Field;

/// Fields are interned: make(p, m) always returns the same instance for the
/// same parameters, and instances live for the duration of the process.
/// Raw `const Field*` handles taken from a FieldPtr are therefore stable.
using FieldPtr = std::shared_ptr<const Field>;

/// The finite field F_q, q = p^m <= 2^16, with a canonical modulus polynomial
/// (the lexicographically least monic irreducible of degree m over F_p, by
/// ascending integer encoding of the non-leading coefficients).
///
/// Elements are integers in [0, q) encoding residue polynomials in base p:
/// rep = sum_i c_i p^i for the residue sum_i c_i x^i.
class Field {
public:
    static constexpr uint32_t kMaxSize = 1u << 16;

    /// Returns the interned field with characteristic p and degree m.
    static FieldPtr make(uint32_t p, uint32_t m);

    /// Parses "p^m" or a plain prime power like "8" (factored as 2^3).
    static FieldPtr parse(const std::string& name);

    uint32_t characteristic() const { return p_; }
    uint32_t degree() const { return m_; }
    uint32_t size() const { return q_; }
    /// Modulus coefficients ascending in x, length m+1, monic.
    const std::vector<uint32_t>& modulus() const { return modulus_; }
    std::string name() const;

    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        uint32_t s = log_[a] + log_[b];
        if (s >= q_ - 1) s -= q_ - 1;
        return exp_[s];
    }
    uint32_t inv(uint32_t a) const {
        if (a == 0) throw FieldError("division by zero in " + name());
        return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }
    uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }
    uint32_t pow(uint32_t a, uint64_t e) const;

    /// A fixed generator of the multiplicative group.
    uint32_t generator() const { return generator_; }

    bool operator==(const Field& o) const { return p_ == o.p_ && m_ == o.m_; }

private:
    Field(uint32_t p, uint32_t m, std::vector<uint32_t> modulus);
    void build_tables();

    uint32_t p_, m_, q_;
    std::vector<uint32_t> modulus_;
    uint32_t generator_ = 0;
    std::vector<uint32_t> exp_;  // exp_[i] = g^i, i in [0, q-1)
    std::vector<uint32_t> log_;  // log_[exp_[i]] = i, log_[0] unused
};

/// Requires same field; the usual checked element wrapper.
struct FieldElem {
    const Field* field = nullptr;
    uint32_t v = 0;

    FieldElem() = default;
    FieldElem(const Field* f, uint32_t value) : field(f), v(value) {}
    FieldElem(const FieldPtr& f, uint32_t value) : field(f.get()), v(value) {}

    friend FieldElem operator+(FieldElem a, FieldElem b) {
        check_same(a, b);
        return {a.field, a.field->add(a.v, b.v)};
    }
    friend FieldElem operator-(FieldElem a, FieldElem b) {
        check_same(a, b);
        return {a.field, a.field->sub(a.v, b.v)};
    }
    friend FieldElem operator*(FieldElem a, FieldElem b) {
        check_same(a, b);
        return {a.field, a.field->mul(a.v, b.v)};
    }
    friend FieldElem operator/(FieldElem a, FieldElem b) {
        check_same(a, b);
        return {a.field, a.field->div(a.v, b.v)};
    }
    friend bool operator==(FieldElem a, FieldElem b) {
        check_same(a, b);
        return a.v == b.v;
    }

private:
    static void check_same(const FieldElem& a, const FieldElem& b) {
        if (a.field == nullptr || b.field == nullptr || !(*a.field == *b.field))
            throw FieldError("elements belong to different fields");
    }
};

/// Injective field homomorphism from a subfield into an extension,
/// tabulated on every element of the subfield.
struct Embedding {
    const Field* from = nullptr;
    const Field* to = nullptr;
    std::vector<uint32_t> table;  // table[a] = image of a

    uint32_t operator()(uint32_t a) const { return table[a]; }
    bool is_identity() const { return from == to; }
};

/// Smallest extension F_{p^{m*k}} of `base` with size strictly greater than
/// `min_size`, together with the embedding of `base` into it.  The embedding
/// maps the base generator polynomial x to the first root (in representative
/// order) of the base modulus inside the extension.
std::pair<FieldPtr, Embedding> extension_containing(const FieldPtr& base,
                                                    uint64_t min_size);

/// Identity embedding of a field into itself.
Embedding identity_embedding(const FieldPtr& f);

}  // namespace netcode
