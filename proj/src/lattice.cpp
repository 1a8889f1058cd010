#include "qc2/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace qc2 {

std::vector<std::vector<long long>> negated_cartan(const AdeType& t) {
    int n = t.n;
    auto bad = [&] { throw std::invalid_argument("negated_cartan: invalid ADE type"); };
    if (t.kind == AdeKind::A && n < 1) bad();
    if (t.kind == AdeKind::D && n < 4) bad();
    if (t.kind == AdeKind::E && (n < 6 || n > 8)) bad();
    std::vector<std::vector<long long>> g(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) g[i][i] = -2;
    auto link = [&](int i, int j) { g[i][j] = g[j][i] = 1; };
    switch (t.kind) {
        case AdeKind::A:
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            break;
        case AdeKind::D:
            // path 0-1-...-(n-3), with n-2 and n-1 both attached to n-3
            for (int i = 0; i + 1 < n - 2; ++i) link(i, i + 1);
            link(n - 3, n - 2);
            link(n - 3, n - 1);
            break;
        case AdeKind::E:
            // Bourbaki: path 0-2-3-4-...-(n-1), node 1 attached to node 3
            link(0, 2);
            for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
            link(1, 3);
            break;
    }
    return g;
}

LatticeBasis LatticeBasis::quartic_basis(const std::vector<AdeType>& ade, int num_lines,
                                         const std::vector<std::vector<long long>>& line_exc) {
    LatticeBasis B;
    int exc = 0;
    for (auto& t : ade) exc += t.n;
    int r = 1 + exc + num_lines;
    B.gram.assign(r, std::vector<long long>(r, 0));
    B.gram[0][0] = 4;
    B.labels.push_back("H");
    int off = 1;
    int grp = 0;
    for (auto& t : ade) {
        auto g = negated_cartan(t);
        for (int i = 0; i < t.n; ++i) {
            for (int j = 0; j < t.n; ++j) B.gram[off + i][off + j] = g[i][j];
            B.labels.push_back("C" + std::to_string(grp) + "_" + std::to_string(i));
        }
        off += t.n;
        ++grp;
    }
    for (int l = 0; l < num_lines; ++l) {
        int idx = off + l;
        B.gram[idx][idx] = -2;
        B.gram[0][idx] = B.gram[idx][0] = 1;
        if (l < static_cast<int>(line_exc.size()))
            for (size_t k = 0; k < line_exc[l].size() && 1 + k < static_cast<size_t>(off); ++k) {
                B.gram[idx][1 + k] = line_exc[l][k];
                B.gram[1 + k][idx] = line_exc[l][k];
            }
        B.labels.push_back("L" + std::to_string(l));
    }
    B.validate();
    return B;
}

namespace {

// Determinant of an integer matrix by fraction-free elimination.
long long int_det(std::vector<std::vector<long long>> a) {
    int n = static_cast<int>(a.size());
    long long prev = 1;
    long long sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

}  // namespace

void LatticeBasis::validate() const {
    int r = rank();
    if (static_cast<int>(labels.size()) != r)
        throw std::invalid_argument("LatticeBasis: labels and gram size differ");
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(gram[i].size()) != r)
            throw std::invalid_argument("LatticeBasis: gram not square");
        for (int j = 0; j < r; ++j)
            if (gram[i][j] != gram[j][i]) throw std::invalid_argument("LatticeBasis: not symmetric");
        if (gram[i][i] % 2 != 0) throw std::invalid_argument("LatticeBasis: not even");
    }
    if (gram[0][0] != 4) throw std::invalid_argument("LatticeBasis: H^2 must be 4");
    for (int i = 1; i < r; ++i)
        if (gram[i][i] != -2)
            throw std::invalid_argument("LatticeBasis: non-hyperplane classes must have square -2");
    // negative definiteness of the span of the classes orthogonal to H
    std::vector<int> exc;
    for (int i = 1; i < r; ++i)
        if (gram[0][i] == 0) exc.push_back(i);
    for (size_t k = 1; k <= exc.size(); ++k) {
        std::vector<std::vector<long long>> minor(k, std::vector<long long>(k));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) minor[i][j] = gram[exc[i]][exc[j]];
        long long det = int_det(minor);
        long long want_sign = (k % 2 == 0) ? 1 : -1;
        if (det == 0 || (det > 0 ? 1 : -1) != want_sign)
            throw std::invalid_argument("LatticeBasis: exceptional span not negative definite");
    }
}

DivisorClass LatticeBasis::unit(int i) const {
    DivisorClass D;
    D.c.assign(rank(), 0);
    D.c[i] = 1;
    return D;
}

long long pair_int(const LatticeBasis& B, const DivisorClass& D, const DivisorClass& E) {
    if (D.c.size() != B.gram.size() || E.c.size() != B.gram.size())
        throw std::invalid_argument("pair_int: dimension mismatch");
    long long s = 0;
    for (size_t i = 0; i < D.c.size(); ++i) {
        if (!D.c[i]) continue;
        for (size_t j = 0; j < E.c.size(); ++j) s += D.c[i] * B.gram[i][j] * E.c[j];
    }
    return s;
}

long long self_int(const LatticeBasis& B, const DivisorClass& D) { return pair_int(B, D, D); }

DivisorClass reflect_reduce(const LatticeBasis& B, DivisorClass D,
                            const std::vector<DivisorClass>& minus_two_classes,
                            int iteration_cap) {
    if (self_int(B, D) != 0)
        throw std::invalid_argument("reflect_reduce: class must be isotropic");
    for (auto& E : minus_two_classes)
        if (self_int(B, E) != -2)
            throw std::invalid_argument("reflect_reduce: listed class has square != -2");
    for (int it = 0; it < iteration_cap; ++it) {
        bool moved = false;
        for (auto& E : minus_two_classes) {
            long long de = pair_int(B, D, E);
            if (de < 0) {
                for (size_t i = 0; i < D.c.size(); ++i) D.c[i] += de * E.c[i];
                if (self_int(B, D) != 0)
                    throw std::logic_error("reflect_reduce: reflection broke isotropy");
                moved = true;
                break;
            }
        }
        if (!moved) return D;
    }
    throw std::runtime_error("reflect_reduce: iteration cap hit (inconsistent input)");
}

int shioda_tate_lower(const std::vector<KodairaType>& fibers, bool has_section) {
    if (!has_section) return 0;
    int s = 2;
    for (auto& f : fibers) s += fiber_table(f).m_v - 1;
    return s;
}

}  // namespace qc2
