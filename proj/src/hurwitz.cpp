#include "sipoly/hurwitz.hpp"

#include <algorithm>

namespace sipoly {

namespace {

// Denominator-cleared copy: returns the integer matrix and the product of the
// per-row scale factors applied to rows 0..k for each k (prefix products).
struct ClearedMatrix {
    std::vector<std::vector<Integer>> a;
    std::vector<Integer> row_scale;
};

ClearedMatrix clear_denominators(const std::vector<std::vector<Rational>>& m) {
    ClearedMatrix out;
    out.a.resize(m.size());
    out.row_scale.resize(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        Integer l = 1;
        for (const Rational& x : m[i])
            l = boost::multiprecision::lcm(l, Integer(denominator(x)));
        out.row_scale[i] = l;
        out.a[i].reserve(m[i].size());
        for (const Rational& x : m[i])
            out.a[i].push_back(Integer(numerator(x)) * (l / Integer(denominator(x))));
    }
    return out;
}

// Bareiss elimination with row pivoting; exact integer arithmetic throughout.
Integer bareiss_determinant(std::vector<std::vector<Integer>> a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    Integer prev = 1;
    int det_sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r)
                if (a[r][k] != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return 0;
            std::swap(a[k], a[pivot]);
            det_sign = -det_sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return det_sign > 0 ? a[n - 1][n - 1] : Integer(-a[n - 1][n - 1]);
}

}  // namespace

const Rational& HurwitzMatrix::at(int row, int col) const {
    if (row < 1 || row > n || col < 1 || col > n)
        throw std::domain_error("matrix index out of range");
    return entries[static_cast<std::size_t>((row - 1) * n + (col - 1))];
}

void MinorIndex::validate(int n) const {
    if (rows.size() != cols.size())
        throw std::domain_error("minor selections must have equal length");
    if (rows.empty() || static_cast<int>(rows.size()) > n)
        throw std::domain_error("minor order out of range");
    auto check = [n](const std::vector<int>& v) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] < 1 || v[i] > n)
                throw std::domain_error("minor index out of range");
            if (i > 0 && v[i] <= v[i - 1])
                throw std::domain_error("minor indices must strictly increase");
        }
    };
    check(rows);
    check(cols);
}

HurwitzMatrix hurwitz_matrix(const Polynomial& p) {
    if (p.degree() < 1)
        throw std::domain_error("hurwitz matrix requires degree >= 1");
    const int n = p.degree();
    HurwitzMatrix m;
    m.n = n;
    m.entries.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) m.entries.push_back(p.coeff(2 * j - i));
    return m;
}

Rational determinant(const std::vector<std::vector<Rational>>& m) {
    for (const auto& row : m)
        if (row.size() != m.size()) throw std::domain_error("determinant needs a square matrix");
    ClearedMatrix cleared = clear_denominators(m);
    Integer scale = 1;
    for (const Integer& s : cleared.row_scale) scale *= s;
    return Rational(bareiss_determinant(std::move(cleared.a)), scale);
}

std::vector<Rational> leading_minors(const Polynomial& p) {
    const HurwitzMatrix h = hurwitz_matrix(p);
    const int n = h.n;
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            m[static_cast<std::size_t>(i - 1)].push_back(h.at(i, j));

    std::vector<Rational> minors(static_cast<std::size_t>(n));
    ClearedMatrix cleared = clear_denominators(m);
    std::vector<std::vector<Integer>>& a = cleared.a;
    Integer scale = 1;

    // One Bareiss sweep without pivoting: after step k the pivot a[k][k] is
    // the order-(k+1) leading minor of the cleared matrix. A zero pivot stops
    // the sweep; the remaining orders fall back to independent determinants.
    Integer prev = 1;
    int computed = 0;
    scale *= cleared.row_scale[0];
    minors[0] = Rational(a[0][0], scale);
    computed = 1;
    while (computed < n && a[computed - 1][computed - 1] != 0) {
        const int k = computed - 1;
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
        scale *= cleared.row_scale[static_cast<std::size_t>(computed)];
        minors[static_cast<std::size_t>(computed)] = Rational(a[computed][computed], scale);
        ++computed;
    }
    for (int order = computed + 1; order <= n; ++order) {
        std::vector<std::vector<Rational>> sub(static_cast<std::size_t>(order));
        for (int i = 0; i < order; ++i)
            sub[static_cast<std::size_t>(i)].assign(
                m[static_cast<std::size_t>(i)].begin(),
                m[static_cast<std::size_t>(i)].begin() + order);
        minors[static_cast<std::size_t>(order - 1)] = determinant(sub);
    }
    return minors;
}

Rational minor(const HurwitzMatrix& m, const MinorIndex& idx) {
    idx.validate(m.n);
    std::vector<std::vector<Rational>> sub(idx.rows.size());
    for (std::size_t i = 0; i < idx.rows.size(); ++i)
        for (std::size_t j = 0; j < idx.cols.size(); ++j)
            sub[i].push_back(m.at(idx.rows[i], idx.cols[j]));
    return determinant(sub);
}

int minor_relation_sign(const MinorIndex& idx) {
    long long exponent = 0;
    for (int i : idx.rows) exponent += static_cast<long long>(i) * (i - 1) / 2;
    for (int j : idx.cols) exponent += j;
    return exponent % 2 == 0 ? 1 : -1;
}

bool minor_sign_relation_check(const Polynomial& p, const MinorIndex& idx) {
    const HurwitzMatrix hp = hurwitz_matrix(p);
    const HurwitzMatrix hq = hurwitz_matrix(p.dual());
    const Rational lhs = minor(hq, idx);
    const Rational rhs = minor(hp, idx) * minor_relation_sign(idx);
    return lhs == rhs;
}

TotalNonnegativityReport total_nonnegativity_spot_check(
    const Polynomial& p, const std::vector<MinorIndex>& sample) {
    const HurwitzMatrix hp = hurwitz_matrix(p);
    const HurwitzMatrix hq = hurwitz_matrix(p.dual());
    TotalNonnegativityReport report;
    report.pass = true;
    for (const MinorIndex& idx : sample) {
        MinorCheckEntry entry;
        entry.idx = idx;
        entry.value = minor(hp, idx);
        entry.dual_value = minor(hq, idx);
        entry.signed_nonnegative = entry.value * minor_relation_sign(idx) >= 0;
        entry.magnitudes_equal = abs(entry.value) == abs(entry.dual_value);
        if (!entry.signed_nonnegative || !entry.magnitudes_equal) report.pass = false;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

std::vector<MinorIndex> sample_minor_indices(int n, int max_order, int extra,
                                             std::mt19937_64& rng) {
    std::vector<MinorIndex> out;
    std::vector<std::vector<int>> subsets;
    max_order = std::min(max_order, n);

    // All strictly increasing index tuples of each order up to max_order.
    for (int order = 1; order <= max_order; ++order) {
        std::vector<int> pick(static_cast<std::size_t>(order));
        for (int i = 0; i < order; ++i) pick[static_cast<std::size_t>(i)] = i + 1;
        while (true) {
            subsets.push_back(pick);
            int pos = order - 1;
            while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == n - (order - 1 - pos))
                --pos;
            if (pos < 0) break;
            ++pick[static_cast<std::size_t>(pos)];
            for (int i = pos + 1; i < order; ++i)
                pick[static_cast<std::size_t>(i)] = pick[static_cast<std::size_t>(i - 1)] + 1;
        }
    }
    // Pair every subset with every subset of the same order.
    std::size_t start = 0;
    while (start < subsets.size()) {
        const std::size_t order = subsets[start].size();
        std::size_t stop = start;
        while (stop < subsets.size() && subsets[stop].size() == order) ++stop;
        for (std::size_t i = start; i < stop; ++i)
            for (std::size_t j = start; j < stop; ++j)
                out.push_back({subsets[i], subsets[j]});
        start = stop;
    }

    auto random_subset = [&rng, n](int order) {
        std::vector<int> all(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i + 1;
        for (int i = 0; i < order; ++i) {
            std::uniform_int_distribution<int> pick(i, n - 1);
            std::swap(all[static_cast<std::size_t>(i)],
                      all[static_cast<std::size_t>(pick(rng))]);
        }
        std::vector<int> chosen(all.begin(), all.begin() + order);
        std::sort(chosen.begin(), chosen.end());
        return chosen;
    };
    if (n > max_order) {
        std::uniform_int_distribution<int> order_dist(max_order + 1, n);
        for (int t = 0; t < extra; ++t) {
            const int order = order_dist(rng);
            out.push_back({random_subset(order), random_subset(order)});
        }
    }
    return out;
}

}  // namespace sipoly
