#pragma once

#include <array>
#include <cstdint>

#include "horo/errors.hpp"
#include "horo/sol.hpp"

namespace horo {

/// Integer matrix (a b; c d) with determinant 1.
struct IntMat2 {
    std::int64_t a, b, c, d;
};

IntMat2 make_sl2(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);
IntMat2 intmat_mul(const IntMat2& x, const IntMat2& y);
IntMat2 intmat_inverse(const IntMat2& x);
IntMat2 intmat_pow(const IntMat2& x, int m);

/// Element (k, l, m) of Z^2 rtimes_A Z.
struct SdEl {
    std::int64_t k = 0;
    std::int64_t l = 0;
    int m = 0;

    bool operator==(const SdEl&) const = default;
};

SdEl sd_mul(const SdEl& g, const SdEl& h, const IntMat2& A);
SdEl sd_inverse(const SdEl& g, const IntMat2& A);
Mat3 sd_matrix(const SdEl& g, const IntMat2& A);

/// Diagonalisation data of a trace > 2 matrix: lambda > 1, p = log lambda,
/// and the det-1 eigenbasis (alpha beta; gamma delta) with its 3x3 lift B.
struct EigenData {
    double lambda;
    double p_param;
    double alpha, beta, gamma, delta;
    Mat3 big_b;
    Mat3 big_b_inv;
};

EigenData eigen_data(const IntMat2& A);

/// Conjugation by B: (k,l,m) -> (delta k - beta l, -gamma k + alpha l, m)
/// in S(p,p) with p = log lambda.
SolEl embed(const SdEl& g, const EigenData& e);

/// Baumslag-Solitar element (p^m, k/p^l; 0, 1) with the rational entry in
/// lowest p-adic terms (p does not divide k, or l = 0).
struct BsEl {
    int m = 0;
    std::int64_t k = 0; // numerator
    int l = 0;          // denominator exponent, >= 0

    bool operator==(const BsEl&) const = default;
};

BsEl make_bs(int p, int m, std::int64_t k, int l);
BsEl bs_mul(int p, const BsEl& g, const BsEl& h);
BsEl bs_identity();
/// Verifies a b = b^p a exactly for the standard generators.
bool bs_relation_check(int p);

} // namespace horo
