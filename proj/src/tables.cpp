#include "mdtrees/tables.hpp"

#include <stdexcept>
#include <utility>

namespace mdtrees {

namespace {

void require_nonneg(int n, const char* what) {
    if (n < 0) {
        throw std::invalid_argument(std::string(what) + " must be nonnegative");
    }
}

// Rows 0..max_n of the Z triangle.
std::vector<std::vector<BigNat>> z_rows(int max_n) {
    std::vector<std::vector<BigNat>> rows(max_n + 1);
    for (int n = 0; n <= max_n; ++n) {
        rows[n].resize(n + 1);
        for (int k = 0; k < n; ++k) {
            rows[n][k] = n * rows[n - 1][k];
            if (k >= 1) {
                rows[n][k] += (n + k - 1) * rows[n - 1][k - 1];
            }
        }
        rows[n][n] = double_factorial_odd(n);
    }
    return rows;
}

std::vector<std::vector<BigNat>> r_rows(int max_n) {
    // rows[i] is row n = i+1, entries k = 0..n-1
    std::vector<std::vector<BigNat>> rows(max_n);
    for (int n = 1; n <= max_n; ++n) {
        auto& row = rows[n - 1];
        row.resize(n);
        if (n == 1) {
            row[0] = 1;
            continue;
        }
        const auto& prev = rows[n - 2];
        for (int k = 0; k < n; ++k) {
            if (k < n - 1) {
                row[k] = (n - 1) * prev[k];
            }
            if (k >= 1) {
                row[k] += (n + k - 2) * prev[k - 1];
            }
        }
    }
    return rows;
}

// Row n of the F triangle (entries k = 0..n) with a running product, so a
// whole row costs O(n) big-integer multiplications.
std::vector<BigNat> f_row(int n) {
    std::vector<BigNat> row(n + 1);
    if (n == 0) {
        row[0] = 1;
        return row;
    }
    row[0] = 0;
    row[n] = 1;
    // tail(k) = (n+1)(n+2)...(2n-k-1); tail(n-1) is empty.
    BigNat tail = 1;
    for (int k = n - 1; k >= 1; --k) {
        row[k] = binomial(n, k) * k * tail;
        tail *= 2 * n - k;
    }
    return row;
}

// o(n,k) for k < n, given the Z rows up to n.  The m = k summand is zero
// and is skipped.
BigNat o_sum(int n, int k, const std::vector<std::vector<BigNat>>& z) {
    const int np = n - k;
    BigNat total = z[n][k];  // m = n: C(n+1,n+1) and a full prescribed root set
    BigNat rising = 1;       // (np+1)...(2np-d-1) for the current d = m-k
    for (int m = n - 1; m > k; --m) {
        const int d = m - k;
        total += binomial(n + 1, m + 1) * z[m][k] * d * rising;
        rising *= 2 * np - d;
    }
    return total;
}

}  // namespace

TriangleKind triangle_kind_from_name(const std::string& name) {
    if (name == "z") return TriangleKind::Z;
    if (name == "f") return TriangleKind::F;
    if (name == "o") return TriangleKind::O;
    if (name == "r") return TriangleKind::R;
    throw std::invalid_argument("unknown triangle kind: " + name);
}

std::string triangle_kind_name(TriangleKind kind) {
    switch (kind) {
        case TriangleKind::Z: return "z";
        case TriangleKind::F: return "f";
        case TriangleKind::O: return "o";
        case TriangleKind::R: return "r";
    }
    throw std::logic_error("unreachable");
}

BigNat z_count(int n, int k) {
    require_nonneg(n, "n");
    if (k < 0 || k > n) {
        return 0;
    }
    return z_rows(n)[n][k];
}

BigNat f_count(int n, int k) {
    require_nonneg(n, "n");
    require_nonneg(k, "k");
    if (k > n) {
        return 0;
    }
    if (k == n) {
        return 1;
    }
    if (k == 0) {
        return 0;
    }
    return binomial(n, k) * k * rising_factorial(n + 1, n - k - 1);
}

BigNat prescribed_root_forest_count(int n_prime, int k_prime) {
    require_nonneg(n_prime, "n'");
    require_nonneg(k_prime, "k'");
    if (k_prime > n_prime) {
        throw std::invalid_argument("prescribed_root_forest_count: k' must not exceed n'");
    }
    if (k_prime == n_prime) {
        return 1;
    }
    if (k_prime == 0) {
        return 0;
    }
    return k_prime * rising_factorial(n_prime + 1, n_prime - k_prime - 1);
}

BigNat o_count(int n, int k) {
    require_nonneg(n, "n");
    require_nonneg(k, "k");
    if (k > n) {
        throw std::invalid_argument("o_count: k must not exceed n");
    }
    if (k == n) {
        return double_factorial_odd(n);
    }
    return o_sum(n, k, z_rows(n));
}

BigNat r_count(int n, int k) {
    if (n < 1) {
        throw std::invalid_argument("r_count: n must be at least 1");
    }
    if (k < 0 || k >= n) {
        return 0;
    }
    return r_rows(n)[n - 1][k];
}

IntPolynomial ramanujan_poly(int n) {
    if (n < 1) {
        throw std::invalid_argument("ramanujan_poly: n must be at least 1");
    }
    std::vector<BigNat> coeffs{1};
    for (int m = 1; m < n; ++m) {
        // next = m (1+x) coeffs + x^2 coeffs'
        std::vector<BigNat> next(coeffs.size() + 1);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            next[i] += m * coeffs[i];
            next[i + 1] += m * coeffs[i];
            if (i >= 1) {
                next[i + 1] += static_cast<long>(i) * coeffs[i];
            }
        }
        while (next.size() > 1 && next.back() == 0) {
            next.pop_back();
        }
        coeffs = std::move(next);
    }
    return IntPolynomial{std::move(coeffs)};
}

CountTriangle build_triangle(TriangleKind kind, int max_n) {
    require_nonneg(max_n, "max_n");
    CountTriangle t;
    t.kind = kind;
    t.max_n = max_n;
    switch (kind) {
        case TriangleKind::Z:
            t.rows = z_rows(max_n);
            break;
        case TriangleKind::R:
            if (max_n < 1) {
                throw std::invalid_argument("build_triangle: the R triangle starts at n = 1");
            }
            t.rows = r_rows(max_n);
            break;
        case TriangleKind::F:
            t.rows.reserve(max_n + 1);
            for (int n = 0; n <= max_n; ++n) {
                t.rows.push_back(f_row(n));
            }
            break;
        case TriangleKind::O: {
            const auto z = z_rows(max_n);
            t.rows.resize(max_n + 1);
            for (int n = 0; n <= max_n; ++n) {
                t.rows[n].resize(n + 1);
                for (int k = 0; k < n; ++k) {
                    t.rows[n][k] = o_sum(n, k, z);
                }
                t.rows[n][n] = double_factorial_odd(n);
            }
            break;
        }
    }
    return t;
}

}  // namespace mdtrees
