#ifndef MDTREES_TABLES_HPP
#define MDTREES_TABLES_HPP

#include <string>
#include <vector>

#include "mdtrees/bignum.hpp"

namespace mdtrees {

// The four count triangles:
//   Z  trees on {0..n} built from a decreasing tree with k edges by
//      attaching n-k increasing leaves
//   F  forests on {1..n} of k ordered trees with unordered roots
//   O  ordered trees on {0..n} whose maximal decreasing subtree has k edges
//   R  rooted unordered trees on {1..n} with k improper edges
enum class TriangleKind { Z, F, O, R };

TriangleKind triangle_kind_from_name(const std::string& name);  // "z","f","o","r"
std::string triangle_kind_name(TriangleKind kind);

/// Lower-triangular table of exact counts.  Kinds Z, F, O cover
/// 0 <= k <= n <= max_n; kind R starts at row n = 1 with k = 0..n-1.
struct CountTriangle {
    TriangleKind kind = TriangleKind::Z;
    int max_n = 0;
    std::vector<std::vector<BigNat>> rows;

    int first_row() const { return kind == TriangleKind::R ? 1 : 0; }
    const std::vector<BigNat>& row(int n) const { return rows.at(n - first_row()); }
    const BigNat& at(int n, int k) const { return row(n).at(k); }
    BigNat& entry(int n, int k) { return rows.at(n - first_row()).at(k); }
};

// z(n,k) = n z(n-1,k) + (n+k-1) z(n-1,k-1), diagonal (2n-1)!!, zero
// outside 0 <= k <= n.  The recurrence is applied down to k = 0, which
// forces z(n,0) = n! (oracle-verified).
BigNat z_count(int n, int k);

// Closed form C(n,k) * k * (n+1)(n+2)...(2n-k-1) for 0 < k < n; 0 for
// k = 0 < n or k > n.  f(n,n) = 1 (n unordered isolated roots): the
// literal product formula gives n there, which contradicts direct
// enumeration, so the enumeration value is adopted.
BigNat f_count(int n, int k);

// Forests counted by f_count whose root set is one fixed k'-subset;
// equals f(n',k') / C(n',k'), evaluated without division as
// k' * (n'+1)...(2n'-k'-1).
BigNat prescribed_root_forest_count(int n_prime, int k_prime);

// o(n,k) = sum over m in [k,n] of
//   C(n+1,m+1) * z(m,k) * prescribed_root_forest_count(n-k, m-k),
// with o(n,n) = (2n-1)!!.  Rejects k > n.
BigNat o_count(int n, int k);

// r(n,k) = (n-1) r(n-1,k) + (n+k-2) r(n-1,k-1), r(1,0) = 1, zero for
// k < 0 or k >= n.  Rejects n < 1.
BigNat r_count(int n, int k);

/// Dense integer polynomial; coefficients[i] is the coefficient of x^i.
/// No trailing zero coefficients except for the zero polynomial.
struct IntPolynomial {
    std::vector<BigNat> coefficients;

    int degree() const { return static_cast<int>(coefficients.size()) - 1; }
    BigNat coefficient(int i) const {
        if (i < 0 || i >= static_cast<int>(coefficients.size())) {
            return 0;
        }
        return coefficients[i];
    }
    bool operator==(const IntPolynomial&) const = default;
};

// R_{n+1}(x) = n (1+x) R_n(x) + x^2 R_n'(x) with R_1(x) = 1.  The
// coefficients of R_n are the r(n,k) row.  Rejects n < 1.
IntPolynomial ramanujan_poly(int n);

// Materializes rows 0..max_n (1..max_n for R) with one dynamic-programming
// pass: O(max_n^2) big-integer operations for Z, R, F and O(max_n^3) for O.
CountTriangle build_triangle(TriangleKind kind, int max_n);

}  // namespace mdtrees

#endif
