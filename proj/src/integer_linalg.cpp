#include "gorenstein/integer_linalg.hpp"

#include <numeric>
#include <utility>

#include "gorenstein/errors.hpp"

namespace gorenstein {

namespace {

[[noreturn]] void overflow() { throw ResourceError("integer overflow in exact arithmetic"); }

Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

/// Reduced row echelon form over the rationals; returns the pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) {
        return pivots;
    }
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) {
            ++p;
        }
        if (p == m.size()) {
            continue;
        }
        std::swap(m[p], m[r]);
        const Rational inv = 1 / m[r][c];
        for (auto& x : m[r]) {
            x *= inv;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i != r && m[i][c] != 0) {
                const Rational f = m[i][c];
                for (std::size_t j = c; j < cols; ++j) {
                    m[i][j] -= f * m[r][j];
                }
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<std::vector<Rational>> to_rational(const IntMatrix& a) {
    std::vector<std::vector<Rational>> out;
    out.reserve(a.size());
    for (const auto& row : a) {
        out.emplace_back(row.begin(), row.end());
    }
    return out;
}

}  // namespace

Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) {
        overflow();
    }
    return r;
}

Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) {
        overflow();
    }
    return r;
}

Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) {
        overflow();
    }
    return r;
}

Int dot(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) {
        throw PreconditionError("dot product of vectors of different length");
    }
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s = checked_add(s, checked_mul(a[i], b[i]));
    }
    return s;
}

Int gcd_of(const IntVector& v) {
    Int g = 0;
    for (Int x : v) {
        g = std::gcd(g, x);
    }
    return g;
}

Int make_primitive(IntVector& v) {
    const Int g = gcd_of(v);
    if (g > 1) {
        for (Int& x : v) {
            x /= g;
        }
    }
    return g;
}

Hnf hermite_normal_form(IntMatrix rows) {
    Hnf out;
    if (rows.empty()) {
        return out;
    }
    const std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        // Euclid on column c among rows r.. until at most one non-zero entry remains.
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t i = r; i < rows.size(); ++i) {
                if (rows[i][c] != 0 && (best == rows.size() || std::abs(rows[i][c]) < std::abs(rows[best][c]))) {
                    best = i;
                }
            }
            if (best == rows.size()) {
                break;
            }
            std::swap(rows[r], rows[best]);
            bool done = true;
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][c] != 0) {
                    const Int q = rows[i][c] / rows[r][c];
                    for (std::size_t j = c; j < cols; ++j) {
                        rows[i][j] = checked_sub(rows[i][j], checked_mul(q, rows[r][j]));
                    }
                    if (rows[i][c] != 0) {
                        done = false;
                    }
                }
            }
            if (done) {
                break;
            }
        }
        if (rows[r][c] == 0) {
            continue;
        }
        if (rows[r][c] < 0) {
            for (Int& x : rows[r]) {
                x = checked_mul(x, -1);
            }
        }
        for (std::size_t i = 0; i < r; ++i) {
            const Int q = floor_div(rows[i][c], rows[r][c]);
            if (q != 0) {
                for (std::size_t j = c; j < cols; ++j) {
                    rows[i][j] = checked_sub(rows[i][j], checked_mul(q, rows[r][j]));
                }
            }
        }
        out.pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    out.rows = std::move(rows);
    return out;
}

std::optional<IntVector> lattice_coordinates(const Hnf& hnf, const IntVector& x) {
    IntVector rest = x;
    IntVector c(hnf.rows.size(), 0);
    for (std::size_t i = 0; i < hnf.rows.size(); ++i) {
        const std::size_t p = hnf.pivots[i];
        const Int piv = hnf.rows[i][p];
        if (rest[p] % piv != 0) {
            return std::nullopt;
        }
        c[i] = rest[p] / piv;
        for (std::size_t j = p; j < rest.size(); ++j) {
            rest[j] = checked_sub(rest[j], checked_mul(c[i], hnf.rows[i][j]));
        }
    }
    for (Int v : rest) {
        if (v != 0) {
            return std::nullopt;
        }
    }
    return c;
}

std::size_t rank(const IntMatrix& rows) {
    auto m = to_rational(rows);
    return rref(m).size();
}

Int determinant(IntMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) {
        return 1;
    }
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) {
                ++p;
            }
            if (p == n) {
                return 0;
            }
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = checked_sub(checked_mul(m[i][j], m[k][k]), checked_mul(m[i][k], m[k][j])) / prev;
            }
        }
        prev = m[k][k];
    }
    return checked_mul(sign, m[n - 1][n - 1]);
}

std::optional<Int> gcd_of_maximal_minors(const IntMatrix& rows, std::size_t guard) {
    const std::size_t d = rows.size();
    if (d == 0) {
        return 1;
    }
    const std::size_t n = rows[0].size();
    // count C(n, d) without overflow past the guard
    double combos = 1;
    for (std::size_t i = 0; i < d; ++i) {
        combos = combos * static_cast<double>(n - i) / static_cast<double>(i + 1);
    }
    if (combos > static_cast<double>(guard)) {
        return std::nullopt;
    }
    std::vector<std::size_t> idx(d);
    std::iota(idx.begin(), idx.end(), 0);
    Int g = 0;
    while (true) {
        IntMatrix sub(d, IntVector(d));
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                sub[i][j] = rows[i][idx[j]];
            }
        }
        g = std::gcd(g, determinant(std::move(sub)));
        if (g == 1) {
            return g;
        }
        std::size_t i = d;
        while (i > 0 && idx[i - 1] == n - d + i - 1) {
            --i;
        }
        if (i == 0) {
            break;
        }
        ++idx[i - 1];
        for (std::size_t j = i; j < d; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
    }
    return g;
}

IntVector kernel_vector(const IntMatrix& rows) {
    const std::size_t n = rows.empty() ? 0 : rows[0].size();
    if (rows.size() + 1 != n) {
        throw PreconditionError("kernel_vector expects an (n-1) x n matrix");
    }
    IntVector out(n);
    for (std::size_t j = 0; j < n; ++j) {
        IntMatrix minor(rows.size(), IntVector(n - 1));
        for (std::size_t i = 0; i < rows.size(); ++i) {
            for (std::size_t k = 0, col = 0; k < n; ++k) {
                if (k != j) {
                    minor[i][col++] = rows[i][k];
                }
            }
        }
        const Int det = determinant(std::move(minor));
        out[j] = (j % 2 == 0) ? det : checked_mul(det, -1);
    }
    make_primitive(out);
    return out;
}

std::vector<std::vector<Rational>> inverse(const IntMatrix& m) {
    const std::size_t n = m.size();
    std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            aug[i][j] = m[i][j];
        }
        aug[i][n + i] = 1;
    }
    const auto pivots = rref(aug);
    if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) {
        throw PreconditionError("matrix is singular");
    }
    std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out[i][j] = aug[i][n + j];
        }
    }
    return out;
}

std::optional<std::vector<Rational>> solve_full_column_rank(const IntMatrix& a, const IntVector& b) {
    if (a.empty()) {
        return std::vector<Rational>{};
    }
    const std::size_t cols = a[0].size();
    std::vector<std::vector<Rational>> aug;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::vector<Rational> row(a[i].begin(), a[i].end());
        row.emplace_back(b[i]);
        aug.push_back(std::move(row));
    }
    const auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == cols) {
        return std::nullopt;
    }
    if (pivots.size() != cols) {
        throw PreconditionError("system does not have full column rank");
    }
    std::vector<Rational> y(cols);
    for (std::size_t i = 0; i < cols; ++i) {
        y[i] = aug[i][cols];
    }
    return y;
}

}  // namespace gorenstein
