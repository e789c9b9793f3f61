#include "symblock/linalg.hpp"

#include <algorithm>

#include "symblock/parallel.hpp"

namespace symblock {

RationalMatrix identity_matrix(std::size_t n) {
    RationalMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
    return out;
}

RationalMatrix gram_project(const CycloMatrix& x, const std::vector<Int>& norms, int jobs) {
    const std::size_t m = x.rows(), c = x.cols();
    if (norms.size() != c) throw ShapeError("gram_project: norm count != column count");
    for (const auto& n : norms)
        if (n <= 0) throw ShapeError("gram_project: norms must be positive");

    // Precondition: X^t * conj(X) = diag(norms), exactly.
    parallel_for(c, jobs, [&](std::size_t a) {
        for (std::size_t b = a; b < c; ++b) {
            Cyclotomic dot = Cyclotomic::zero(x(0, 0).prime());
            for (std::size_t r = 0; r < m; ++r) dot += x(r, a) * x(r, b).conj();
            if (a == b) {
                if (!dot.is_rational() || dot.to_rational() != Rat(norms[a]))
                    throw OrthogonalityError("gram_project: column norm mismatch at " +
                                             std::to_string(a));
            } else if (!dot.is_zero()) {
                throw OrthogonalityError("gram_project: columns " + std::to_string(a) + "," +
                                         std::to_string(b) + " not orthogonal");
            }
        }
    });

    RationalMatrix p(m, m);
    std::vector<Rat> inv_norms(c);
    for (std::size_t j = 0; j < c; ++j) inv_norms[j] = Rat(1) / Rat(norms[j]);

    parallel_for(m, jobs, [&](std::size_t i) {
        for (std::size_t j = i; j < m; ++j) {
            Cyclotomic dot = Cyclotomic::zero(x(0, 0).prime());
            for (std::size_t g = 0; g < c; ++g)
                dot += (x(i, g).conj() * x(j, g)).scaled(inv_norms[g]);
            if (!dot.is_rational())
                throw NonRationalError("gram_project: non-rational projection entry");
            p(i, j) = dot.to_rational();
            p(j, i) = p(i, j);
        }
    });

    // P = P^t holds by construction; idempotence and rank are the live
    // contract. rank = trace for an exact idempotent.
    if (!(p * p == p)) throw ConsistencyError("gram_project: projection not idempotent");
    if (p.trace() != Rat(static_cast<long>(c)))
        throw ConsistencyError("gram_project: projection rank != column count");
    return p;
}

std::vector<Int> char_poly(const IntMatrix& a) {
    if (!a.is_square()) throw ShapeError("char_poly: matrix must be square");
    const std::size_t n = a.rows();
    // Berkowitz iteration: division-free, exact over Z.
    std::vector<Int> poly = {Int(1)};  // leading-first while building
    for (std::size_t r = 0; r < n; ++r) {
        // Toeplitz column for principal minor of size r+1:
        // (1, -a_rr, -R*C, -R*M*C, -R*M^2*C, ...)
        std::vector<Int> t(r + 2);
        t[0] = 1;
        t[1] = -a(r, r);
        if (r > 0) {
            std::vector<Int> v(r);  // starts as C, then M^k * C
            for (std::size_t i = 0; i < r; ++i) v[i] = a(i, r);
            for (std::size_t k = 2; k <= r + 1; ++k) {
                Int dot = 0;
                for (std::size_t i = 0; i < r; ++i) dot += a(r, i) * v[i];
                t[k] = -dot;
                if (k == r + 1) break;
                std::vector<Int> next(r);
                for (std::size_t i = 0; i < r; ++i) {
                    Int s = 0;
                    for (std::size_t j = 0; j < r; ++j) s += a(i, j) * v[j];
                    next[i] = s;
                }
                v = std::move(next);
            }
        }
        std::vector<Int> out(r + 2);
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (t[i] == 0) continue;
            for (std::size_t j = 0; j < poly.size(); ++j) out[i + j] += t[i] * poly[j];
        }
        poly = std::move(out);
    }
    std::reverse(poly.begin(), poly.end());  // low degree first
    return poly;
}

namespace {

// Divide poly (low first) by (t - r) with synthetic division; returns false
// and leaves poly untouched when the remainder is non-zero.
bool deflate_root(std::vector<Int>& poly, const Int& r) {
    std::vector<Int> quotient(poly.size() - 1);
    Int acc = poly.back();
    for (std::size_t i = poly.size() - 1; i-- > 0;) {
        quotient[i] = acc;
        acc = acc * r + poly[i];
    }
    if (acc != 0) return false;
    poly = std::move(quotient);
    return true;
}

Int eval_poly(const std::vector<Int>& poly, const Int& x) {
    Int acc = 0;
    for (std::size_t i = poly.size(); i-- > 0;) acc = acc * x + poly[i];
    return acc;
}

}  // namespace

IntegerRoots char_poly_integer_roots(const RationalMatrix& a, const Int& scale) {
    if (!a.is_square()) throw ShapeError("char_poly_integer_roots: matrix must be square");
    const std::size_t n = a.rows();
    IntMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rat v = a(i, j) * Rat(scale);
            v.canonicalize();
            if (v.get_den() != 1)
                throw ShapeError("char_poly_integer_roots: scale does not clear denominators");
            b(i, j) = v.get_num();
        }

    std::vector<Int> poly = char_poly(b);
    IntegerRoots out;
    out.scale = scale;

    // Zero roots first.
    while (poly.size() > 1 && poly[0] == 0) {
        out.roots.emplace_back(0);
        poly.erase(poly.begin());
    }

    // Divisor search on the constant term; multiplicities by re-testing.
    if (poly.size() > 1 && poly[0] != 0) {
        std::vector<Int> cands;
        try {
            cands = divisors(poly[0]);
        } catch (const CapExceededError&) {
            cands.clear();  // give up on splitting; report residual
        }
        for (const auto& d : cands) {
            for (const Int& r : {d, Int(-d)}) {
                while (poly.size() > 1 && eval_poly(poly, r) == 0) {
                    if (!deflate_root(poly, r))
                        throw ConsistencyError("char_poly_integer_roots: deflation failed");
                    out.roots.push_back(r);
                }
            }
            if (poly.size() <= 1) break;
        }
    }

    std::sort(out.roots.begin(), out.roots.end(), std::greater<Int>());
    if (poly.size() > 1) out.residual = std::move(poly);
    return out;
}

std::size_t rank(const RationalMatrix& a) {
    RationalMatrix m = a;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m(pivot, c) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(m(pivot, j), m(r, j));
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m(i, c) == 0) continue;
            const Rat f = m(i, c) / m(r, c);
            for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

RationalMatrix inverse(const RationalMatrix& a) {
    if (!a.is_square()) throw ShapeError("inverse: matrix must be square");
    const std::size_t n = a.rows();
    RationalMatrix m = a;
    RationalMatrix inv = identity_matrix(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && m(pivot, c) == 0) ++pivot;
        if (pivot == n) throw ShapeError("inverse: singular matrix");
        if (pivot != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(pivot, j), m(c, j));
                std::swap(inv(pivot, j), inv(c, j));
            }
        const Rat d = m(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            m(c, j) /= d;
            inv(c, j) /= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m(i, c) == 0) continue;
            const Rat f = m(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) -= f * m(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

}  // namespace symblock
