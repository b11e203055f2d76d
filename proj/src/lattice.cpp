#include "horo/lattice.hpp"

#include <cmath>
#include <stdexcept>

namespace horo {

IntMat2 make_sl2(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    if (a * d - b * c != 1) throw std::invalid_argument("matrix must have determinant 1");
    return IntMat2{a, b, c, d};
}

IntMat2 intmat_mul(const IntMat2& x, const IntMat2& y) {
    return IntMat2{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                   x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

IntMat2 intmat_inverse(const IntMat2& x) {
    return IntMat2{x.d, -x.b, -x.c, x.a};
}

IntMat2 intmat_pow(const IntMat2& x, int m) {
    IntMat2 base = m >= 0 ? x : intmat_inverse(x);
    int n = m >= 0 ? m : -m;
    IntMat2 r{1, 0, 0, 1};
    for (int i = 0; i < n; ++i) r = intmat_mul(r, base);
    return r;
}

SdEl sd_mul(const SdEl& g, const SdEl& h, const IntMat2& A) {
    IntMat2 am = intmat_pow(A, g.m);
    return SdEl{g.k + am.a * h.k + am.b * h.l, g.l + am.c * h.k + am.d * h.l, g.m + h.m};
}

SdEl sd_inverse(const SdEl& g, const IntMat2& A) {
    IntMat2 am = intmat_pow(A, -g.m);
    return SdEl{-(am.a * g.k + am.b * g.l), -(am.c * g.k + am.d * g.l), -g.m};
}

Mat3 sd_matrix(const SdEl& g, const IntMat2& A) {
    IntMat2 am = intmat_pow(A, g.m);
    return Mat3{{{static_cast<double>(am.a), static_cast<double>(am.b), static_cast<double>(g.k)},
                 {static_cast<double>(am.c), static_cast<double>(am.d), static_cast<double>(g.l)},
                 {0.0, 0.0, 1.0}}};
}

EigenData eigen_data(const IntMat2& A) {
    if (A.a * A.d - A.b * A.c != 1) throw std::invalid_argument("matrix must have determinant 1");
    std::int64_t t = A.a + A.d;
    if (t <= 2) throw TraceTooSmall("eigen_data needs trace > 2");
    // trace > 2 and det 1 force b != 0 (else the matrix is +-identity-like)
    if (A.b == 0) throw std::invalid_argument("unexpected b = 0 with trace > 2");
    double td = static_cast<double>(t);
    double root = std::sqrt(td * td - 4.0);
    double lambda = (td + root) / 2.0;
    double mu = (td - root) / 2.0;
    double a = static_cast<double>(A.a);
    double b = static_cast<double>(A.b);
    EigenData e;
    e.lambda = lambda;
    e.p_param = std::log(lambda);
    // first eigencolumn normalised to alpha = 1, second scaled for det 1
    e.alpha = 1.0;
    e.gamma = (lambda - a) / b;
    e.beta = -b / root;
    e.delta = (a - mu) / root;
    e.big_b = Mat3{{{e.alpha, 0.0, e.beta}, {e.gamma, 0.0, e.delta}, {0.0, 1.0, 0.0}}};
    e.big_b_inv = Mat3{{{e.delta, -e.beta, 0.0}, {0.0, 0.0, 1.0}, {-e.gamma, e.alpha, 0.0}}};
    return e;
}

SolEl embed(const SdEl& g, const EigenData& e) {
    return SolEl{e.delta * static_cast<double>(g.k) - e.beta * static_cast<double>(g.l),
                 -e.gamma * static_cast<double>(g.k) + e.alpha * static_cast<double>(g.l),
                 static_cast<double>(g.m)};
}

namespace {

std::int64_t ipow(std::int64_t base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

} // namespace

BsEl make_bs(int p, int m, std::int64_t k, int l) {
    if (p < 2) throw std::invalid_argument("Baumslag-Solitar parameter must be >= 2");
    if (l < 0) throw std::invalid_argument("denominator exponent must be >= 0");
    while (l > 0 && k != 0 && k % p == 0) {
        k /= p;
        --l;
    }
    if (k == 0) l = 0;
    return BsEl{m, k, l};
}

BsEl bs_identity() { return BsEl{0, 0, 0}; }

BsEl bs_mul(int p, const BsEl& g, const BsEl& h) {
    // upper-triangular product: entry = p^{g.m} * h.k/p^{h.l} + g.k/p^{g.l}
    int e1 = g.m - h.l;
    int e2 = -g.l;
    int L = 0;
    L = std::max(L, -e1);
    L = std::max(L, -e2);
    std::int64_t num = h.k * ipow(p, e1 + L) + g.k * ipow(p, e2 + L);
    return make_bs(p, g.m + h.m, num, L);
}

bool bs_relation_check(int p) {
    BsEl a = make_bs(p, 1, 0, 0); // (p, 0; 0, 1)
    BsEl b = make_bs(p, 0, 1, 0); // (1, 1; 0, 1)
    BsEl lhs = bs_mul(p, a, b);
    BsEl bp = bs_identity();
    for (int i = 0; i < p; ++i) bp = bs_mul(p, bp, b);
    BsEl rhs = bs_mul(p, bp, a);
    return lhs == rhs;
}

} // namespace horo
