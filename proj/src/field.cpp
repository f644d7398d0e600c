#include "forge/field.hpp"

namespace forge {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<__uint128_t>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_probable_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // These witnesses are a proven deterministic set for n < 3.3 * 10^24.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

namespace fieldops {
namespace {
thread_local std::uint64_t g_ops = 0;
}
std::uint64_t count() { return g_ops; }
void reset() { g_ops = 0; }
void bump() { ++g_ops; }
}  // namespace fieldops

namespace {
// Primality is checked once per distinct modulus seen on this thread, so
// element construction in hot loops stays cheap.
thread_local std::uint64_t g_checked_q = 0;
}

FieldElem::FieldElem(std::uint64_t value, std::uint64_t q) : v_(value % (q ? q : 1)), q_(q) {
    if (q != g_checked_q) {
        if (!is_probable_prime(q)) throw std::invalid_argument("FieldElem: modulus " + std::to_string(q) + " is not prime");
        g_checked_q = q;
    }
}

void FieldElem::check_same(const FieldElem& o) const {
    if (q_ != o.q_) throw std::invalid_argument("FieldElem: modulus mismatch");
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    check_same(o);
    fieldops::bump();
    std::uint64_t s = v_ + o.v_;
    if (s >= q_) s -= q_;
    FieldElem r = *this;
    r.v_ = s;
    return r;
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    check_same(o);
    fieldops::bump();
    FieldElem r = *this;
    r.v_ = v_ >= o.v_ ? v_ - o.v_ : q_ - (o.v_ - v_);
    return r;
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    check_same(o);
    fieldops::bump();
    FieldElem r = *this;
    r.v_ = mulmod(v_, o.v_, q_);
    return r;
}

FieldElem FieldElem::operator-() const {
    fieldops::bump();
    FieldElem r = *this;
    r.v_ = v_ == 0 ? 0 : q_ - v_;
    return r;
}

FieldElem FieldElem::inverse() const {
    if (v_ == 0) throw std::domain_error("FieldElem: inversion of zero");
    fieldops::bump();
    FieldElem r = *this;
    r.v_ = powmod(v_, q_ - 2, q_);
    return r;
}

TruncPoly::TruncPoly(std::vector<FieldElem> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("TruncPoly: empty coefficient vector");
    for (const auto& c : c_) {
        if (c.modulus() != c_.front().modulus()) throw std::invalid_argument("TruncPoly: mixed moduli");
    }
}

TruncPoly TruncPoly::zero(std::uint64_t q, int r) {
    return TruncPoly(std::vector<FieldElem>(static_cast<std::size_t>(r) + 1, FieldElem::zero(q)));
}

TruncPoly TruncPoly::one(std::uint64_t q, int r) {
    TruncPoly p = zero(q, r);
    p.c_[0] = FieldElem::one(q);
    return p;
}

void TruncPoly::set(int i, FieldElem v) {
    if (v.modulus() != modulus()) throw std::invalid_argument("TruncPoly::set: modulus mismatch");
    c_[static_cast<std::size_t>(i)] = v;
}

void TruncPoly::check_compatible(const TruncPoly& o) const {
    if (c_.size() != o.c_.size() || modulus() != o.modulus())
        throw std::invalid_argument("TruncPoly: parameter mismatch");
}

TruncPoly TruncPoly::operator+(const TruncPoly& o) const {
    check_compatible(o);
    TruncPoly r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

TruncPoly TruncPoly::operator-(const TruncPoly& o) const {
    check_compatible(o);
    TruncPoly r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

TruncPoly TruncPoly::operator*(const TruncPoly& o) const {
    check_compatible(o);
    TruncPoly r = zero(modulus(), degree_bound());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < c_.size(); ++j) {
            r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
        }
    }
    return r;
}

TruncPoly TruncPoly::inverse() const {
    if (c_[0].is_zero()) throw std::domain_error("TruncPoly: not invertible (zero constant term)");
    // Solve (sum a_i x^i)(sum b_j x^j) = 1 coefficient by coefficient:
    // b_0 = a_0^-1, b_n = -a_0^-1 * sum_{i=1..n} a_i b_{n-i}.
    FieldElem a0inv = c_[0].inverse();
    TruncPoly b = zero(modulus(), degree_bound());
    b.c_[0] = a0inv;
    for (std::size_t n = 1; n < c_.size(); ++n) {
        FieldElem acc = FieldElem::zero(modulus());
        for (std::size_t i = 1; i <= n; ++i) acc = acc + c_[i] * b.c_[n - i];
        b.c_[n] = -(a0inv * acc);
    }
    return b;
}

}  // namespace forge
