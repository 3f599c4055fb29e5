#include "netcode/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace netcode {
namespace {

// Construction-time polynomial arithmetic over F_p (coefficients ascending).
using PPoly = std::vector<uint32_t>;

void ptrim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmul(const PPoly& a, const PPoly& b, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + uint64_t(a[i]) * b[j]) % p;
    ptrim(r);
    return r;
}

uint32_t modinv_prime(uint32_t a, uint32_t p) {
    // Fermat; p is a small prime.
    uint32_t r = 1, base = a % p;
    uint32_t e = p - 2;
    while (e) {
        if (e & 1) r = uint32_t(uint64_t(r) * base % p);
        base = uint32_t(uint64_t(base) * base % p);
        e >>= 1;
    }
    return r;
}

// a mod b, b nonzero.
PPoly pmod(PPoly a, const PPoly& b, uint32_t p) {
    ptrim(a);
    uint32_t lead_inv = modinv_prime(b.back(), p);
    while (a.size() >= b.size() && !a.empty()) {
        uint32_t c = uint32_t(uint64_t(a.back()) * lead_inv % p);
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) {
            uint64_t sub = uint64_t(c) * b[i] % p;
            a[shift + i] = uint32_t((a[shift + i] + p - sub) % p);
        }
        ptrim(a);
    }
    return a;
}

bool pis_zero(const PPoly& a) { return a.empty(); }

// Exhaustive trial division by every monic polynomial of degree 1..deg/2.
bool irreducible(const PPoly& f, uint32_t p) {
    int deg = int(f.size()) - 1;
    if (deg <= 0) return false;
    if (deg == 1) return true;
    for (int d = 1; d <= deg / 2; ++d) {
        uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (uint64_t lo = 0; lo < count; ++lo) {
            PPoly g(d + 1, 0);
            uint64_t t = lo;
            for (int i = 0; i < d; ++i) {
                g[i] = uint32_t(t % p);
                t /= p;
            }
            g[d] = 1;
            if (pis_zero(pmod(f, g, p))) return false;
        }
    }
    return true;
}

PPoly canonical_modulus(uint32_t p, uint32_t m) {
    uint64_t count = 1;
    for (uint32_t i = 0; i < m; ++i) count *= p;
    for (uint64_t lo = 0; lo < count; ++lo) {
        PPoly f(m + 1, 0);
        uint64_t t = lo;
        for (uint32_t i = 0; i < m; ++i) {
            f[i] = uint32_t(t % p);
            t /= p;
        }
        f[m] = 1;
        if (irreducible(f, p)) return f;
    }
    throw FieldError("no irreducible modulus found (unreachable)");
}

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; uint64_t(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<uint32_t> prime_factors(uint32_t n) {
    std::vector<uint32_t> fs;
    for (uint32_t d = 2; uint64_t(d) * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

}  // namespace

Field::Field(uint32_t p, uint32_t m, std::vector<uint32_t> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
    uint64_t q = 1;
    for (uint32_t i = 0; i < m; ++i) q *= p;
    q_ = uint32_t(q);
    build_tables();
}

namespace {

// rep <-> digit vector in base p
PPoly rep_to_poly(uint32_t rep, uint32_t p) {
    PPoly c;
    while (rep) {
        c.push_back(rep % p);
        rep /= p;
    }
    return c;
}

uint32_t poly_to_rep(const PPoly& c, uint32_t p) {
    uint32_t rep = 0;
    for (size_t i = c.size(); i-- > 0;) rep = rep * p + c[i];
    return rep;
}

}  // namespace

void Field::build_tables() {
    auto slow_mul = [&](uint32_t a, uint32_t b) {
        PPoly r = pmod(pmul(rep_to_poly(a, p_), rep_to_poly(b, p_), p_),
                       modulus_, p_);
        return poly_to_rep(r, p_);
    };
    auto slow_pow = [&](uint32_t a, uint32_t e) {
        uint32_t r = 1;
        while (e) {
            if (e & 1) r = slow_mul(r, a);
            a = slow_mul(a, a);
            e >>= 1;
        }
        return r;
    };

    const uint32_t order = q_ - 1;
    auto factors = prime_factors(order);
    generator_ = 0;
    for (uint32_t g = 1; g < q_; ++g) {
        bool ok = true;
        for (uint32_t f : factors) {
            if (slow_pow(g, order / f) == 1) {
                ok = false;
                break;
            }
        }
        if (ok && (order == 1 || g > 1)) {
            // for q = 2, the only candidate is g = 1
            generator_ = (order == 1) ? 1 : g;
            break;
        }
    }
    if (generator_ == 0) throw FieldError("no multiplicative generator found");

    exp_.assign(order, 0);
    log_.assign(q_, 0);
    uint32_t cur = 1;
    for (uint32_t i = 0; i < order; ++i) {
        exp_[i] = cur;
        log_[cur] = i;
        cur = slow_mul(cur, generator_);
    }
    if (cur != 1) throw FieldError("generator order mismatch");
}

uint32_t Field::add(uint32_t a, uint32_t b) const {
    if (p_ == 2) return a ^ b;
    uint32_t r = 0, mul = 1;
    while (a || b) {
        uint32_t d = (a % p_ + b % p_) % p_;
        r += d * mul;
        mul *= p_;
        a /= p_;
        b /= p_;
    }
    return r;
}

uint32_t Field::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t Field::neg(uint32_t a) const {
    if (p_ == 2) return a;
    uint32_t r = 0, mul = 1;
    while (a) {
        uint32_t d = a % p_;
        r += (d ? p_ - d : 0) * mul;
        mul *= p_;
        a /= p_;
    }
    return r;
}

uint32_t Field::pow(uint32_t a, uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    uint64_t l = (uint64_t(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
    return exp_[l];
}

std::string Field::name() const {
    return std::to_string(p_) + "^" + std::to_string(m_);
}

FieldPtr Field::make(uint32_t p, uint32_t m) {
    if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
    if (m < 1) throw FieldError("extension degree must be positive");
    uint64_t q = 1;
    for (uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxSize) throw FieldError("field size exceeds 2^16 cap");
    }

    static std::mutex mtx;
    static std::map<std::pair<uint32_t, uint32_t>, FieldPtr> registry;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(p, m);
    auto it = registry.find(key);
    if (it != registry.end()) return it->second;
    FieldPtr f(new Field(p, m, canonical_modulus(p, m)));
    registry.emplace(key, f);
    return f;
}

FieldPtr Field::parse(const std::string& name) {
    auto caret = name.find('^');
    if (caret != std::string::npos) {
        uint32_t p = uint32_t(std::stoul(name.substr(0, caret)));
        uint32_t m = uint32_t(std::stoul(name.substr(caret + 1)));
        return make(p, m);
    }
    uint64_t q = std::stoull(name);
    if (q < 2 || q > kMaxSize) throw FieldError("bad field size: " + name);
    for (uint32_t p = 2; p <= q; ++p) {
        if (!is_prime(p)) continue;
        if (q % p == 0) {
            uint32_t m = 0;
            uint64_t t = q;
            while (t % p == 0) {
                t /= p;
                ++m;
            }
            if (t != 1) throw FieldError(name + " is not a prime power");
            return make(p, m);
        }
    }
    throw FieldError(name + " is not a prime power");
}

Embedding identity_embedding(const FieldPtr& f) {
    Embedding e;
    e.from = f.get();
    e.to = f.get();
    e.table.resize(f->size());
    for (uint32_t a = 0; a < f->size(); ++a) e.table[a] = a;
    return e;
}

std::pair<FieldPtr, Embedding> extension_containing(const FieldPtr& base,
                                                    uint64_t min_size) {
    const uint32_t p = base->characteristic();
    const uint32_t m = base->degree();
    uint64_t q = 1;
    uint32_t k = 0;
    do {
        ++k;
        q = 1;
        for (uint32_t i = 0; i < m * k; ++i) {
            q *= p;
            if (q > Field::kMaxSize)
                throw FieldError("required extension exceeds 2^16 cap");
        }
    } while (q <= min_size);

    FieldPtr ext = Field::make(p, m * k);
    if (ext.get() == base.get()) return {ext, identity_embedding(base)};

    Embedding emb;
    emb.from = base.get();
    emb.to = ext.get();
    emb.table.assign(base->size(), 0);

    if (m == 1) {
        // prime subfield: representatives coincide
        for (uint32_t a = 0; a < base->size(); ++a) emb.table[a] = a;
        return {ext, emb};
    }

    // Map the base generator polynomial x to a root of the base modulus in
    // the extension (first root in representative order).
    const auto& mod = base->modulus();
    uint32_t root = 0;
    bool found = false;
    for (uint32_t cand = 0; cand < ext->size(); ++cand) {
        uint32_t acc = 0, pw = 1;
        for (size_t i = 0; i < mod.size(); ++i) {
            acc = ext->add(acc, ext->mul(mod[i] % p, pw));
            pw = ext->mul(pw, cand);
        }
        if (acc == 0) {
            root = cand;
            found = true;
            break;
        }
    }
    if (!found) throw FieldError("no root of base modulus in extension (unreachable)");

    for (uint32_t a = 0; a < base->size(); ++a) {
        uint32_t acc = 0, pw = 1, t = a;
        while (t) {
            acc = ext->add(acc, ext->mul(t % p, pw));
            pw = ext->mul(pw, root);
            t /= p;
        }
        emb.table[a] = acc;
    }
    return {ext, emb};
}

}  // namespace netcode
