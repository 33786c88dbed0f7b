#include "linalg.hpp"

#include <cstdint>

namespace oplab::detail {

namespace {

constexpr std::uint64_t kPrime = (std::uint64_t(1) << 61) - 1;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    for (; e; e >>= 1, a = mul_mod(a, a))
        if (e & 1) r = mul_mod(r, a);
    return r;
}

}  // namespace

std::size_t rank_mod_prime(const IntMatrix& rows, std::size_t cols) {
    std::vector<std::vector<std::uint64_t>> m(rows.size(), std::vector<std::uint64_t>(cols));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            BigInt r;
            mpz_fdiv_r_ui(r.get_mpz_t(), rows[i][j].get_mpz_t(), kPrime);
            m[i][j] = r.get_ui();
        }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t p = rank;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[rank]);
        std::uint64_t inv = pow_mod(m[rank][c], kPrime - 2);
        for (std::size_t i = rank + 1; i < m.size(); ++i) {
            if (m[i][c] == 0) continue;
            std::uint64_t f = mul_mod(m[i][c], inv);
            for (std::size_t j = c; j < cols; ++j) m[i][j] = (m[i][j] + kPrime - mul_mod(f, m[rank][j])) % kPrime;
        }
        ++rank;
    }
    return rank;
}

std::vector<std::vector<Rational>> nullspace(IntMatrix m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    BigInt previous = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && sgn(m[p][c]) == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                m[i][j] = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), previous.get_mpz_t());
            }
            m[i][c] = 0;
        }
        previous = m[r][c];
        pivots.push_back(c);
        ++r;
    }

    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> x(cols, 0);
        x[f] = 1;
        for (std::size_t k = pivots.size(); k-- > 0;) {
            const std::size_t c = pivots[k];
            Rational acc = 0;
            for (std::size_t j = c + 1; j < cols; ++j)
                if (sgn(x[j]) != 0 && sgn(m[k][j]) != 0) acc += Rational(m[k][j]) * x[j];
            x[c] = -acc / Rational(m[k][c]);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace oplab::detail
