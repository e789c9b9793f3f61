#include "symblock/cyclotomic.hpp"

#include <sstream>

namespace symblock {

namespace {

// Fold a length-p coefficient vector (exponents 0..p-1) into the power
// basis of length p-1, using z^(p-1) = -(1 + z + ... + z^(p-2)).
std::vector<Rat> fold(int p, std::vector<Rat> full) {
    std::vector<Rat> out(static_cast<std::size_t>(p - 1));
    const Rat& top = full[static_cast<std::size_t>(p - 1)];
    for (int i = 0; i + 1 < p; ++i) out[static_cast<std::size_t>(i)] = full[static_cast<std::size_t>(i)] - top;
    return out;
}

}  // namespace

void Cyclotomic::check_compatible(const Cyclotomic& o) const {
    if (p_ != o.p_) throw ShapeError("cyclotomic arithmetic across different primes");
}

Cyclotomic Cyclotomic::zero(int p) {
    if (p < 2) throw ShapeError("Cyclotomic: p must be at least 2");
    return Cyclotomic(p, std::vector<Rat>(static_cast<std::size_t>(p - 1)));
}

Cyclotomic Cyclotomic::one(int p) { return from_rational(p, Rat(1)); }

Cyclotomic Cyclotomic::from_rational(int p, const Rat& r) {
    Cyclotomic c = zero(p);
    c.coords_[0] = r;
    return c;
}

Cyclotomic Cyclotomic::root_power(int p, long k) {
    Cyclotomic c = zero(p);
    long e = k % p;
    if (e < 0) e += p;
    if (e == p - 1) {
        for (auto& x : c.coords_) x = -1;
    } else {
        c.coords_[static_cast<std::size_t>(e)] = 1;
    }
    return c;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    check_compatible(o);
    Cyclotomic out = *this;
    for (std::size_t i = 0; i < coords_.size(); ++i) out.coords_[i] += o.coords_[i];
    return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
    check_compatible(o);
    Cyclotomic out = *this;
    for (std::size_t i = 0; i < coords_.size(); ++i) out.coords_[i] -= o.coords_[i];
    return out;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (auto& x : out.coords_) x = -x;
    return out;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    check_compatible(o);
    const int p = p_;
    // Convolve, reducing exponents mod p on the fly (z^p = 1 modulo Phi_p).
    std::vector<Rat> full(static_cast<std::size_t>(p));
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coords_.size(); ++j) {
            if (o.coords_[j] == 0) continue;
            full[(i + j) % static_cast<std::size_t>(p)] += coords_[i] * o.coords_[j];
        }
    }
    return Cyclotomic(p, fold(p, std::move(full)));
}

Cyclotomic Cyclotomic::conj() const {
    const int p = p_;
    std::vector<Rat> full(static_cast<std::size_t>(p));
    for (std::size_t k = 0; k < coords_.size(); ++k) {
        const std::size_t e = k == 0 ? 0 : static_cast<std::size_t>(p) - k;
        full[e] += coords_[k];
    }
    return Cyclotomic(p, fold(p, std::move(full)));
}

Cyclotomic Cyclotomic::scaled(const Rat& r) const {
    Cyclotomic out = *this;
    for (auto& c : out.coords_) c *= r;
    return out;
}

bool Cyclotomic::is_zero() const {
    for (const auto& x : coords_)
        if (x != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

Rat Cyclotomic::to_rational() const {
    if (!is_rational())
        throw NonRationalError("cyclotomic element is not rational: " + to_string());
    return coords_[0];
}

namespace {

using Poly = std::vector<Rat>;  // coefficients, low degree first

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_rem(Poly a, const Poly& b) {
    trim(a);
    while (a.size() >= b.size()) {
        const Rat q = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
        trim(a);
    }
    return a;
}

}  // namespace

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw ShapeError("cyclotomic inverse of zero");
    const int p = p_;

    // Extended Euclid in Q[x] against Phi_p = 1 + x + ... + x^(p-1).
    Poly r0(static_cast<std::size_t>(p), Rat(1));
    Poly r1(coords_.begin(), coords_.end());
    trim(r1);
    Poly s0 = {};        // coefficient of *this in r0
    Poly s1 = {Rat(1)};  // coefficient of *this in r1

    while (true) {
        trim(r1);
        if (r1.size() == 1) break;  // unit: this and Phi_p are coprime
        // One division step: r0 = q*r1 + r2, s2 = s0 - q*s1.
        Poly q(r0.size() - r1.size() + 1);
        Poly rem = r0;
        while (rem.size() >= r1.size()) {
            const Rat c = rem.back() / r1.back();
            const std::size_t shift = rem.size() - r1.size();
            q[shift] = c;
            for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
            trim(rem);
            if (rem.empty()) break;
        }
        Poly s2 = s0;
        s2.resize(std::max(s2.size(), q.size() + s1.size() - 1), Rat(0));
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (std::size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
        }
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
        if (r1.empty()) throw ConsistencyError("cyclotomic inverse: gcd degenerated");
    }

    const Rat unit = r1[0];
    Poly inv = s1;
    for (auto& c : inv) c /= unit;
    inv = poly_rem(std::move(inv), Poly(static_cast<std::size_t>(p), Rat(1)));
    inv.resize(static_cast<std::size_t>(p - 1), Rat(0));
    Cyclotomic out(p, std::vector<Rat>(inv.begin(), inv.begin() + (p - 1)));
    return out;
}

std::string Cyclotomic::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << ',';
        os << symblock::to_string(coords_[i]);
    }
    os << ']';
    return os.str();
}

}  // namespace symblock
