#pragma once

#include <string>
#include <vector>

#include "symblock/numeric.hpp"

namespace symblock {

/// Element of Q(zeta_p), p prime, in the power basis 1, z, ..., z^(p-2)
/// with z^(p-1) = -(1 + z + ... + z^(p-2)). For p = 2 there is a single
/// coordinate and every element is rational.
class Cyclotomic {
  public:
    Cyclotomic() = default;  // invalid until assigned; prime() == 0

    static Cyclotomic zero(int p);
    static Cyclotomic one(int p);
    static Cyclotomic from_rational(int p, const Rat& r);
    /// zeta_p^k
    static Cyclotomic root_power(int p, long k);

    int prime() const { return p_; }
    const std::vector<Rat>& coordinates() const { return coords_; }

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic& operator+=(const Cyclotomic& o);

    Cyclotomic conj() const;  // zeta -> zeta^(p-1), i.e. complex conjugation
    Cyclotomic inverse() const;
    Cyclotomic scaled(const Rat& r) const;

    bool is_zero() const;
    bool is_rational() const;
    /// Throws NonRationalError unless all non-constant coordinates vanish.
    Rat to_rational() const;

    bool operator==(const Cyclotomic& o) const = default;

    std::string to_string() const;  // "[a0,a1,...]" coordinates in basis order

  private:
    Cyclotomic(int p, std::vector<Rat> coords) : p_(p), coords_(std::move(coords)) {}
    void check_compatible(const Cyclotomic& o) const;

    int p_ = 0;
    std::vector<Rat> coords_;
};

}  // namespace symblock
