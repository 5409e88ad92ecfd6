#pragma once

#include "sipoly/polynomial.hpp"

#include <random>

namespace sipoly {

/// n x n coefficient matrix with entry(i, j) = a_(2j-i) (1-based indices),
/// where a_k = 0 outside 0..n.
struct HurwitzMatrix {
    int n = 0;
    std::vector<Rational> entries;  // row-major

    const Rational& at(int row, int col) const;  // 1-based
};

/// Strictly increasing 1-based row/column selections of equal length.
struct MinorIndex {
    std::vector<int> rows;
    std::vector<int> cols;

    void validate(int n) const;  // throws std::domain_error
};

HurwitzMatrix hurwitz_matrix(const Polynomial& p);

/// Exact determinant via fraction-free elimination on the denominator-cleared
/// integer matrix.
Rational determinant(const std::vector<std::vector<Rational>>& m);

/// Leading principal minors Delta_1..Delta_n of the Hurwitz matrix.
std::vector<Rational> leading_minors(const Polynomial& p);

Rational minor(const HurwitzMatrix& m, const MinorIndex& idx);

/// Exact identity between corresponding minors of the Hurwitz matrices of p
/// and its dual:
///   H(dual p)(idx) = (-1)^(sum i_k(i_k-1)/2 + sum j_k) * H(p)(idx).
/// Holds for every real polynomial and every index selection.
bool minor_sign_relation_check(const Polynomial& p, const MinorIndex& idx);

/// Parity of sum i_k(i_k-1)/2 + sum j_k as a sign.
int minor_relation_sign(const MinorIndex& idx);

struct MinorCheckEntry {
    MinorIndex idx;
    Rational value;        // minor of H(p)
    Rational dual_value;   // corresponding minor of H(dual p)
    bool signed_nonnegative = false;
    bool magnitudes_equal = false;
};

struct TotalNonnegativityReport {
    std::vector<MinorCheckEntry> entries;
    bool pass = false;
};

/// For a kind-I self-interlacing p, every sampled minor must satisfy
/// minor_relation_sign(idx) * H(p)(idx) >= 0, and the magnitudes of
/// corresponding minors of H(p) and H(dual p) must agree exactly.
TotalNonnegativityReport total_nonnegativity_spot_check(
    const Polynomial& p, const std::vector<MinorIndex>& sample);

/// All index selections up to max_order, plus `extra` random larger ones.
std::vector<MinorIndex> sample_minor_indices(int n, int max_order, int extra,
                                             std::mt19937_64& rng);

}  // namespace sipoly
