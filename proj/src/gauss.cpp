#include "qc2/gauss.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace qc2 {

DegreeLedger degree_ledger(const SingularLocusReport& report) {
    if (!report.complete) throw std::invalid_argument("degree_ledger: report not complete");
    if (report.any_defect_infinite())
        throw std::invalid_argument("degree_ledger: a defect failed to stabilize");
    DegreeLedger L;
    L.defect_sum = report.defect_sum();
    L.product = 36 - L.defect_sum;
    L.nu = report.nu;
    L.b = report.b;
    L.u = report.u;
    L.bound_ok = L.defect_sum >= 2LL * L.nu + L.b + 6LL * L.u;
    return L;
}

std::vector<std::vector<FieldElem>> dual_plane_kernel(const QuarticSurface& X) {
    const FieldTower& T = X.tower();
    int lvl = X.F.level();
    // rows of the 4 x 20 coefficient matrix of the partials, transposed into
    // the kernel computation over K^4
    std::map<Mono, int> cols;
    std::vector<std::vector<std::uint64_t>> rows(4);
    for (int i = 0; i < 4; ++i) {
        MultiPoly Fi = X.F.partial(i);
        for (auto& [m, c] : Fi.terms()) cols.emplace(m, 0);
    }
    int idx = 0;
    for (auto& [m, v] : cols) v = idx++;
    for (int i = 0; i < 4; ++i) {
        rows[i].assign(cols.size(), 0);
        MultiPoly Fi = X.F.partial(i);
        for (auto& [m, c] : Fi.terms()) rows[i][cols.at(m)] = c;
    }
    // kernel of the transpose: combinations of rows summing to zero
    // build the matrix with columns = the four partials
    std::vector<std::vector<std::uint64_t>> mat(cols.size(), std::vector<std::uint64_t>(4, 0));
    for (int i = 0; i < 4; ++i)
        for (size_t r = 0; r < cols.size(); ++r) mat[r][i] = rows[i][r];
    auto ns = nullspace(T, lvl, mat, 4);
    std::vector<std::vector<FieldElem>> out;
    for (auto& v : ns) {
        std::vector<FieldElem> w;
        for (int i = 0; i < 4; ++i) w.push_back(T.from_bits(v[i], lvl));
        out.push_back(std::move(w));
    }
    return out;
}

std::optional<long long> gauss_degree_if_dual_plane(const DegreeLedger& ledger, int kernel_dim) {
    if (kernel_dim != 1) return std::nullopt;
    return ledger.product;
}

std::vector<ProjPoint> geometric_points(const SingularLocusReport& report) {
    std::vector<ProjPoint> pts;
    for (auto& r : report.points) {
        ProjPoint cur = r.point;
        for (int k = 0; k < r.ext_degree; ++k) {
            pts.push_back(cur);
            cur = cur.frobenius();
        }
    }
    return pts;
}

namespace {

// Rank of the matrix whose rows are the homogeneous coordinates.
int point_rank(const std::vector<const ProjPoint*>& pts) {
    if (pts.empty()) return 0;
    const FieldTower& T = pts.front()->x.front().tower();
    int lvl = 1;
    for (auto* p : pts) lvl = std::lcm(lvl, p->level());
    std::vector<std::vector<std::uint64_t>> rows;
    for (auto* p : pts) {
        std::vector<std::uint64_t> r;
        for (auto& c : p->x) r.push_back(c.lift(lvl).bits());
        rows.push_back(std::move(r));
    }
    return gauss_rank(T, lvl, rows);
}

}  // namespace

ConfigurationReport configuration_report(const std::vector<ProjPoint>& points) {
    int n = static_cast<int>(points.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (points[i] == points[j])
                throw std::invalid_argument("configuration_report: points must be distinct");
    ConfigurationReport rep;
    if (n < 2) {
        rep.max_collinear = std::min(n, 1);
        rep.max_coplanar = n;
        return rep;
    }
    // lines through pairs: on-line test is rank <= 2 with the two spanners
    std::vector<std::vector<bool>> on_line(n, std::vector<bool>(n, false));
    std::vector<bool> seen_pair(static_cast<size_t>(n) * n, false);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (seen_pair[i * n + j]) continue;
            std::vector<int> members;
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j) {
                    members.push_back(k);
                    continue;
                }
                std::vector<const ProjPoint*> trio{&points[i], &points[j], &points[k]};
                if (point_rank(trio) == 2) members.push_back(k);
            }
            for (size_t a = 0; a < members.size(); ++a)
                for (size_t b = a + 1; b < members.size(); ++b)
                    seen_pair[members[a] * n + members[b]] = true;
            rep.lines.push_back(LineIncidence{i, j, static_cast<int>(members.size())});
            rep.max_collinear = std::max(rep.max_collinear, static_cast<int>(members.size()));
            if (members.size() == 2) rep.companion_pairs.emplace_back(i, j);
        }
    rep.max_collinear = std::max(rep.max_collinear, n >= 1 ? 1 : 0);

    // planes: maximize points of rank <= 3 over spanning triples
    rep.max_coplanar = std::min(n, 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                std::vector<const ProjPoint*> trio{&points[i], &points[j], &points[k]};
                if (point_rank(trio) != 3) continue;
                int cnt = 0;
                for (int l = 0; l < n; ++l) {
                    std::vector<const ProjPoint*> quad{&points[i], &points[j], &points[k],
                                                       &points[l]};
                    if (point_rank(quad) == 3) ++cnt;
                }
                rep.max_coplanar = std::max(rep.max_coplanar, cnt);
            }

    std::vector<int> companions(n, 0);
    for (auto& [a, b] : rep.companion_pairs) {
        ++companions[a];
        ++companions[b];
    }
    for (int i = 0; i < n; ++i)
        if (companions[i] >= 2) rep.has_point_with_two_companions = true;
    rep.collinear_bound_ok = rep.max_collinear <= 3;
    rep.coplanar_bound_ok = rep.max_coplanar <= 6;
    return rep;
}

}  // namespace qc2
