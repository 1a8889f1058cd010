#include "qc2/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace qc2 {

namespace {

// grevlex: higher degree later here (we enumerate within one degree), order
// within a degree: reverse lexicographic on exponent vectors.
void enumerate_rec(int nvars, int d, Mono& cur, int pos, std::vector<Mono>& out) {
    if (pos == nvars - 1) {
        cur[pos] = static_cast<std::uint8_t>(d);
        out.push_back(cur);
        return;
    }
    for (int e = d; e >= 0; --e) {
        cur[pos] = static_cast<std::uint8_t>(e);
        enumerate_rec(nvars, d - e, cur, pos + 1, out);
    }
}

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Streaming Gaussian elimination: keeps an echelon basis, feeds rows one at
// a time. Pivot columns are normalized to 1.
class Echelon {
public:
    Echelon(const FieldTower& T, int level, int ncols)
        : T_(T), level_(level), ncols_(ncols), pivot_of_col_(ncols, -1) {}

    // Returns true if the row added to the rank.
    bool feed(std::vector<std::uint64_t> row) {
        for (int c = 0; c < ncols_; ++c) {
            if (!row[c]) continue;
            int p = pivot_of_col_[c];
            if (p < 0) {
                std::uint64_t inv = T_.inv_raw(level_, row[c]);
                for (int j = c; j < ncols_; ++j)
                    if (row[j]) row[j] = T_.mul_raw(level_, row[j], inv);
                pivot_of_col_[c] = static_cast<int>(rows_.size());
                rows_.push_back(std::move(row));
                return true;
            }
            std::uint64_t f = row[c];
            const auto& pr = rows_[p];
            for (int j = c; j < ncols_; ++j)
                if (pr[j]) row[j] ^= T_.mul_raw(level_, f, pr[j]);
        }
        return false;
    }

    int rank() const { return static_cast<int>(rows_.size()); }

private:
    const FieldTower& T_;
    int level_;
    int ncols_;
    std::vector<int> pivot_of_col_;
    std::vector<std::vector<std::uint64_t>> rows_;
};

}  // namespace

std::vector<Mono> monomials_of_degree(int nvars, int d) {
    std::vector<Mono> out;
    if (nvars == 0) {
        if (d == 0) out.push_back(Mono{});
        return out;
    }
    Mono cur(nvars, 0);
    enumerate_rec(nvars, d, cur, 0, out);
    return out;
}

int graded_hilbert(const IdealPresentation& I, int d) {
    I.validate();
    if (I.chart != Chart::Homogeneous)
        throw std::invalid_argument("graded_hilbert: homogeneous chart required");
    int nv = I.num_vars();
    if (nv == 0) return d == 0 ? 1 : 0;
    const FieldTower* T = nullptr;
    int lvl = 1;
    for (auto& g : I.generators) {
        T = &g.tower();
        lvl = std::lcm(lvl, g.level());
    }
    auto cols = monomials_of_degree(nv, d);
    if (!T) return static_cast<int>(cols.size());
    std::map<Mono, int> col_index;
    for (size_t i = 0; i < cols.size(); ++i) col_index[cols[i]] = static_cast<int>(i);

    Echelon ech(*T, lvl, static_cast<int>(cols.size()));
    for (auto& g0 : I.generators) {
        if (g0.is_zero()) continue;
        MultiPoly g = g0.lift(lvl);
        int e = *g.homogeneous_degree();
        if (e > d) continue;
        for (auto& mu : monomials_of_degree(nv, d - e)) {
            std::vector<std::uint64_t> row(cols.size(), 0);
            for (auto& [m, c] : g.terms()) {
                Mono prod(nv);
                for (int i = 0; i < nv; ++i) prod[i] = static_cast<std::uint8_t>(m[i] + mu[i]);
                row[col_index.at(prod)] ^= c;
            }
            ech.feed(std::move(row));
        }
    }
    return static_cast<int>(cols.size()) - ech.rank();
}

SchemeLengthResult scheme_length(const IdealPresentation& I, int d_max, int bail_bound) {
    I.validate();
    std::vector<int> h;
    int streak = 1;
    for (int d = 0; d <= d_max; ++d) {
        h.push_back(graded_hilbert(I, d));
        size_t k = h.size();
        if (k >= 2 && h[k - 1] == h[k - 2])
            ++streak;
        else
            streak = 1;
        if (streak >= 3) return SchemeLengthResult{true, h.back()};
        if (bail_bound > 0 && k >= 2 && h[k - 1] >= bail_bound && h[k - 1] > h[k - 2])
            return SchemeLengthResult{false, 0};
    }
    if (h.size() >= 2 && h[h.size() - 1] > h[h.size() - 2]) return SchemeLengthResult{false, 0};
    throw CertificationError("scheme_length: d_max too small to certify stabilization");
}

ColengthResult local_colength(const IdealPresentation& I, int cap, int bail_bound) {
    I.validate();
    if (I.chart != Chart::AffineOrigin)
        throw std::invalid_argument("local_colength: affine-at-origin chart required");
    int nv = I.num_vars();
    const FieldTower* T = nullptr;
    int lvl = 1;
    for (auto& g : I.generators) {
        T = &g.tower();
        lvl = std::lcm(lvl, g.level());
    }
    if (!T) return ColengthResult{false, 0};  // zero ideal: infinite colength

    auto colength_at = [&](int N) {
        // columns: monomials of degree < N
        std::vector<Mono> cols;
        for (int d = 0; d < N; ++d) {
            auto md = monomials_of_degree(nv, d);
            cols.insert(cols.end(), md.begin(), md.end());
        }
        std::map<Mono, int> col_index;
        for (size_t i = 0; i < cols.size(); ++i) col_index[cols[i]] = static_cast<int>(i);
        Echelon ech(*T, lvl, static_cast<int>(cols.size()));
        for (auto& g0 : I.generators) {
            if (g0.is_zero()) continue;
            MultiPoly g = g0.lift(lvl);
            for (int d = 0; d <= N - 2; ++d) {
                for (auto& mu : monomials_of_degree(nv, d)) {
                    std::vector<std::uint64_t> row(cols.size(), 0);
                    bool any = false;
                    for (auto& [m, c] : g.terms()) {
                        Mono prod(nv);
                        int tot = 0;
                        for (int i = 0; i < nv; ++i) {
                            prod[i] = static_cast<std::uint8_t>(m[i] + mu[i]);
                            tot += prod[i];
                        }
                        if (tot >= N) continue;  // truncate into K[x]/m^N
                        row[col_index.at(prod)] ^= c;
                        any = true;
                    }
                    if (any) ech.feed(std::move(row));
                }
            }
        }
        return static_cast<int>(cols.size()) - ech.rank();
    };

    int prev = colength_at(2);
    for (int N = 3; N <= cap + 1; ++N) {
        int cur = colength_at(N);
        if (cur == prev) return ColengthResult{true, cur};
        if (bail_bound > 0 && cur > bail_bound) return ColengthResult{false, 0};
        prev = cur;
    }
    return ColengthResult{false, 0};
}

int gauss_rank(const FieldTower& T, int level, std::vector<std::vector<std::uint64_t>>& rows) {
    if (rows.empty()) return 0;
    Echelon ech(T, level, static_cast<int>(rows.front().size()));
    for (auto& r : rows) ech.feed(std::move(r));
    rows.clear();
    return ech.rank();
}

std::vector<std::vector<std::uint64_t>> nullspace(const FieldTower& T, int level,
                                                  const std::vector<std::vector<std::uint64_t>>& rows,
                                                  int ncols) {
    // Reduce the matrix to rref, then read off free-column solutions.
    std::vector<std::vector<std::uint64_t>> red;
    std::vector<int> pivot_col;
    for (auto row : rows) {
        for (int c = 0; c < ncols; ++c) {
            if (!row[c]) continue;
            bool reduced = false;
            for (size_t p = 0; p < red.size(); ++p) {
                if (pivot_col[p] == c) {
                    std::uint64_t f = row[c];
                    for (int j = 0; j < ncols; ++j)
                        if (red[p][j]) row[j] ^= T.mul_raw(level, f, red[p][j]);
                    reduced = true;
                    break;
                }
            }
            if (!reduced) {
                std::uint64_t inv = T.inv_raw(level, row[c]);
                for (int j = 0; j < ncols; ++j)
                    if (row[j]) row[j] = T.mul_raw(level, row[j], inv);
                red.push_back(row);
                pivot_col.push_back(c);
                break;
            }
        }
    }
    // Back-substitute to full rref.
    for (size_t p = 0; p < red.size(); ++p) {
        for (size_t q = 0; q < red.size(); ++q) {
            if (p == q) continue;
            std::uint64_t f = red[q][pivot_col[p]];
            if (!f) continue;
            for (int j = 0; j < ncols; ++j)
                if (red[p][j]) red[q][j] ^= T.mul_raw(level, f, red[p][j]);
        }
    }
    std::vector<bool> is_pivot(ncols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<std::uint64_t>> basis;
    for (int c = 0; c < ncols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<std::uint64_t> v(ncols, 0);
        v[c] = 1;
        for (size_t p = 0; p < red.size(); ++p) v[pivot_col[p]] = red[p][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace qc2
