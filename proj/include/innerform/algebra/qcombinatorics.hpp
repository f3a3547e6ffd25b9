#pragma once

#include <cstdint>

#include "innerform/algebra/partition.hpp"
#include "innerform/algebra/qscalar.hpp"

namespace innerform {

/// Balanced q-integer (q^{dk/2} - q^{-dk/2}) / (q^{k/2} - q^{-k/2}) = sum_j v^{k(d-1-2j)}.
QScalar qint_balanced(int d, int k);

/// Gaussian binomial [d choose a]_q, a polynomial in q.
QScalar qbinom(int d, int a);

/// |GL_n(F_q)|. Throws PreconditionError on overflow of 64 bits.
std::uint64_t gl_order(int n, std::uint64_t q);

/// Order of the block upper-triangular parabolic with diagonal blocks c.
std::uint64_t parabolic_order(const Composition& c, std::uint64_t q);

/// [GL_n : P_c] as a polynomial in q (the q-multinomial coefficient of c).
QScalar parahoric_index(const Composition& c);

bool is_prime(std::uint64_t q);

}  // namespace innerform
