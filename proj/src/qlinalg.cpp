#include "plrk/qlinalg.hpp"

namespace plrk {

size_t qrank(QMatrix m) {
    if (m.empty() || m[0].empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();

    // clear denominators per row (does not change the row space)
    std::vector<std::vector<mpz_class>> z(rows, std::vector<mpz_class>(cols));
    for (size_t i = 0; i < rows; ++i) {
        mpz_class l(1);
        for (size_t j = 0; j < cols; ++j) {
            mpz_class d = m[i][j].denominator();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
            l = l / g * d;
        }
        for (size_t j = 0; j < cols; ++j) z[i][j] = m[i][j].numerator() * (l / m[i][j].denominator());
    }

    // Bareiss fraction-free elimination
    mpz_class prev(1);
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && z[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(z[piv], z[rank]);
        for (size_t i = rank + 1; i < rows; ++i) {
            for (size_t j = col + 1; j < cols; ++j) {
                mpz_class num = z[rank][col] * z[i][j] - z[i][col] * z[rank][j];
                mpz_class q, r;
                mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                if (r != 0) throw error("qrank: fraction-free elimination produced an inexact division");
                z[i][j] = q;
            }
            z[i][col] = 0;
        }
        prev = z[rank][col];
        ++rank;
    }
    return rank;
}

std::optional<std::vector<Rational>> qsolve(QMatrix a, std::vector<Rational> b) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    std::vector<int> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && a[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        std::swap(b[piv], b[r]);
        Rational inv = Rational(1) / a[r][c];
        for (size_t j = c; j < cols; ++j) a[r][j] = a[r][j] * inv;
        b[r] = b[r] * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            Rational f = a[i][c];
            for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(static_cast<int>(c));
        ++r;
    }
    for (size_t i = r; i < rows; ++i)
        if (!b[i].is_zero()) return std::nullopt;
    std::vector<Rational> x(cols, Rational(0));
    for (size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];
    return x;
}

} // namespace plrk
