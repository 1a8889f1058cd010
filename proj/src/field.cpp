#include "qc2/field.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace qc2 {

namespace {

// Carry-less 64x64 -> 128 multiply, schoolbook over set bits.
inline void clmul(std::uint64_t a, std::uint64_t b, std::uint64_t& lo, std::uint64_t& hi) {
    lo = hi = 0;
    while (a) {
        int k = __builtin_ctzll(a);
        a &= a - 1;
        lo ^= b << k;
        if (k) hi ^= b >> (64 - k);
    }
}

std::uint64_t poly_to_bits(const Gf2x& f) { return f.w.empty() ? 0 : f.w[0]; }

}  // namespace

struct FieldTower::Level {
    int d = 0;                   // tower level
    int n = 0;                   // degree over GF(2): m*d
    Gf2x poly;                   // defining polynomial, degree n
    std::uint64_t poly_low = 0;  // poly minus its leading term x^n

    static constexpr int kTableBits = 16;
    std::vector<std::uint32_t> log_tab;  // log of nonzero elements
    std::vector<std::uint32_t> exp_tab;  // size 2(q-1), doubled to skip a reduction

    // Per proper divisor d': column i holds the bits of phi(g_{d'})^i here.
    std::map<int, std::vector<std::uint64_t>> emb_cols;

    std::uint64_t reduce128(std::uint64_t lo, std::uint64_t hi) const {
        for (int i = 63; i >= 0; --i) {
            if ((hi >> i) & 1) {
                hi ^= std::uint64_t(1) << i;
                int k = 64 + i - n;
                if (k >= 64) {
                    hi ^= poly_low << (k - 64);
                } else {
                    lo ^= poly_low << k;
                    if (k) hi ^= poly_low >> (64 - k);
                }
            }
        }
        for (int i = 63; i >= n; --i) {
            if ((lo >> i) & 1) {
                lo ^= std::uint64_t(1) << i;
                lo ^= poly_low << (i - n);
            }
        }
        return lo;
    }

    std::uint64_t mul_slow(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t lo, hi;
        clmul(a, b, lo, hi);
        return reduce128(lo, hi);
    }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        if (!a || !b) return 0;
        if (!log_tab.empty()) return exp_tab[log_tab[a] + log_tab[b]];
        return mul_slow(a, b);
    }

    std::uint64_t sqr(std::uint64_t a) const { return mul(a, a); }

    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = sqr(a);
            e >>= 1;
        }
        return r;
    }

    std::uint64_t inv(std::uint64_t a) const {
        if (!a) throw std::domain_error("FieldElem: inverse of zero");
        if (a == 1) return 1;
        if (!log_tab.empty()) {
            std::uint64_t q1 = (std::uint64_t(1) << n) - 1;
            return exp_tab[q1 - log_tab[a]];
        }
        // a^(2^n - 2) = prod_{i=1}^{n-1} a^(2^i)
        std::uint64_t r = 1, base = a;
        for (int i = 1; i < n; ++i) {
            base = sqr(base);
            r = mul(r, base);
        }
        return r;
    }

    std::uint64_t sqrt(std::uint64_t a) const {
        std::uint64_t r = a;
        for (int i = 0; i + 1 < n; ++i) r = sqr(r);
        return r;
    }
};

struct FieldTower::Impl {
    std::mutex mu;
    std::array<std::atomic<Level*>, 64> slots{};
    std::vector<std::unique_ptr<Level>> storage;  // guarded by mu
};

// ---------------------------------------------------------------------------
// Minimal univariate arithmetic over one level, only for root splitting while
// constructing embeddings. Coefficient vectors indexed by degree.

namespace {

using Poly = std::vector<std::uint64_t>;

inline void ptrim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int pdeg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

template <class Lvl>
void pmonic(const Lvl& L, Poly& p) {
    if (p.empty()) return;
    std::uint64_t li = L.inv(p.back());
    for (auto& c : p) c = L.mul(c, li);
}

template <class Lvl>
Poly pmod(const Lvl& L, Poly a, const Poly& b) {
    int db = pdeg(b);
    std::uint64_t lead_inv = L.inv(b[db]);
    while (pdeg(a) >= db) {
        int da = pdeg(a);
        std::uint64_t c = L.mul(a[da], lead_inv);
        for (int i = 0; i <= db; ++i) a[da - db + i] ^= L.mul(c, b[i]);
        ptrim(a);
    }
    return a;
}

template <class Lvl>
Poly pquot(const Lvl& L, Poly a, const Poly& b) {
    int db = pdeg(b);
    std::uint64_t lead_inv = L.inv(b[db]);
    Poly q(std::max(0, pdeg(a) - db + 1), 0);
    while (pdeg(a) >= db) {
        int da = pdeg(a);
        std::uint64_t c = L.mul(a[da], lead_inv);
        q[da - db] = c;
        for (int i = 0; i <= db; ++i) a[da - db + i] ^= L.mul(c, b[i]);
        ptrim(a);
    }
    return q;
}

template <class Lvl>
Poly pgcd(const Lvl& L, Poly a, Poly b) {
    while (!b.empty()) {
        Poly r = pmod(L, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    pmonic(L, a);
    return a;
}

template <class Lvl>
Poly pmulmod(const Lvl& L, const Poly& a, const Poly& b, const Poly& mod) {
    Poly r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] ^= L.mul(a[i], b[j]);
    }
    ptrim(r);
    return pmod(L, std::move(r), mod);
}

// One root of a squarefree polynomial that splits completely over the level.
// Deterministic: trace-map splitting, beta enumerated exhaustively by bits.
template <class Lvl>
std::uint64_t split_root(const Lvl& L, Poly g) {
    pmonic(L, g);
    while (pdeg(g) > 1) {
        // For any two distinct roots some basis element beta = x^i separates
        // their absolute traces, so a proper factor appears within n tries.
        bool split = false;
        for (int bit = 0; bit < L.n && !split; ++bit) {
            std::uint64_t beta = std::uint64_t(1) << bit;
            Poly u = pmod(L, Poly{0, beta}, g);
            Poly acc = u;
            for (int i = 1; i < L.n; ++i) {
                u = pmulmod(L, u, u, g);
                acc.resize(std::max(acc.size(), u.size()), 0);
                for (size_t k = 0; k < u.size(); ++k) acc[k] ^= u[k];
            }
            ptrim(acc);
            if (acc.empty()) continue;
            Poly c = pgcd(L, g, acc);
            int dc = pdeg(c);
            if (dc <= 0 || dc >= pdeg(g)) continue;
            if (2 * dc <= pdeg(g))
                g = std::move(c);
            else
                g = pquot(L, std::move(g), c);
            pmonic(L, g);
            split = true;
        }
        if (!split) throw std::logic_error("split_root: no separating trace found");
    }
    if (pdeg(g) != 1) throw std::logic_error("split_root: did not reach a linear factor");
    return g[0];  // monic x + r has root r in characteristic 2
}

}  // namespace

// ---------------------------------------------------------------------------

FieldTower::FieldTower(int m) : m_(m), impl_(std::make_unique<Impl>()) {}

const FieldTower& FieldTower::make(int m) {
    if (m < 1 || m > 32) throw std::invalid_argument("FieldTower::make: need 1 <= m <= 32");
    static std::mutex reg_mu;
    static std::map<int, std::unique_ptr<FieldTower>>* registry =
        new std::map<int, std::unique_ptr<FieldTower>>();
    std::lock_guard<std::mutex> lk(reg_mu);
    auto it = registry->find(m);
    if (it == registry->end())
        it = registry->emplace(m, std::unique_ptr<FieldTower>(new FieldTower(m))).first;
    return *it->second;
}

const FieldTower::Level& FieldTower::level(int d) const {
    if (d >= 1 && d < 64) {
        Level* p = impl_->slots[d].load(std::memory_order_acquire);
        if (p) return *p;
    }
    std::lock_guard<std::mutex> lk(impl_->mu);
    return level_unlocked(d);
}

const FieldTower::Level& FieldTower::level_unlocked(int d) const {
    if (d < 1 || d > max_level())
        throw std::invalid_argument(
            "FieldTower: level out of range (m*level must stay below 64 bits)");
    if (Level* p = impl_->slots[d].load(std::memory_order_relaxed)) return *p;

    std::vector<int> divs;
    for (int dd = 1; dd < d; ++dd)
        if (d % dd == 0) divs.push_back(dd);
    for (int dd : divs) level_unlocked(dd);

    auto L = std::make_unique<Level>();
    L->d = d;
    L->n = m_ * d;
    L->poly = smallest_irreducible(L->n);
    {
        Gf2x low = L->poly;
        low.set(L->n, false);
        L->poly_low = poly_to_bits(low);
    }

    if (L->n <= Level::kTableBits && L->n > 1) {
        std::uint64_t q = std::uint64_t(1) << L->n;
        std::uint64_t q1 = q - 1;
        auto pow_slow = [&](std::uint64_t g, std::uint64_t e) {
            std::uint64_t r = 1;
            while (e) {
                if (e & 1) r = L->mul_slow(r, g);
                g = L->mul_slow(g, g);
                e >>= 1;
            }
            return r;
        };
        auto is_primitive = [&](std::uint64_t g) {
            std::uint64_t n1 = q1;
            for (std::uint64_t p = 2; p * p <= n1; ++p) {
                if (n1 % p) continue;
                if (pow_slow(g, q1 / p) == 1) return false;
                while (n1 % p == 0) n1 /= p;
            }
            if (n1 > 1 && pow_slow(g, q1 / n1) == 1) return false;
            return true;
        };
        std::uint64_t prim = 2;
        while (!is_primitive(prim)) ++prim;
        L->log_tab.assign(q, 0);
        L->exp_tab.assign(2 * q1, 0);
        std::uint64_t v = 1;
        for (std::uint64_t e = 0; e < q1; ++e) {
            L->exp_tab[e] = static_cast<std::uint32_t>(v);
            L->exp_tab[e + q1] = static_cast<std::uint32_t>(v);
            L->log_tab[v] = static_cast<std::uint32_t>(e);
            v = L->mul_slow(v, prim);
        }
    }

    // Canonical embeddings from every proper divisor, increasing order. The
    // chosen root must agree with all edges through smaller common divisors.
    for (int dd : divs) {
        const Level& S = *impl_->slots[dd].load(std::memory_order_relaxed);
        int n_small = S.n;

        Poly g;
        for (int i = 0; i <= S.poly.degree(); ++i) g.push_back(S.poly.get(i) ? 1 : 0);
        std::uint64_t r0 = split_root(*L, g);
        std::vector<std::uint64_t> roots;
        std::uint64_t r = r0;
        for (int i = 0; i < n_small; ++i) {
            roots.push_back(r);
            r = L->sqr(r);
        }
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());

        auto eval_bits_at = [&](std::uint64_t bits, std::uint64_t x) {
            std::uint64_t acc = 0;
            for (int i = 63; i >= 0; --i) {
                acc = L->mul(acc, x);
                if ((bits >> i) & 1) acc ^= 1;
            }
            return acc;
        };

        std::uint64_t chosen = 0;
        bool found = false;
        for (std::uint64_t cand : roots) {
            bool ok = true;
            for (int c : divs) {
                if (c >= dd || dd % c != 0 || m_ * c == 1) continue;
                std::uint64_t direct = L->emb_cols.at(c)[1];       // phi_{c->d}(g_c)
                std::uint64_t via_bits = S.emb_cols.at(c)[1];      // phi_{c->dd}(g_c)
                if (eval_bits_at(via_bits, cand) != direct) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                chosen = cand;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("FieldTower: no compatible embedding root");

        std::vector<std::uint64_t> cols(n_small);
        std::uint64_t p = 1;
        for (int i = 0; i < n_small; ++i) {
            cols[i] = p;
            p = L->mul(p, chosen);
        }
        L->emb_cols[dd] = std::move(cols);
    }

    Level* raw = L.get();
    impl_->storage.push_back(std::move(L));
    impl_->slots[d].store(raw, std::memory_order_release);
    return *raw;
}

std::uint64_t FieldTower::order(int lvl) const {
    const Level& L = level(lvl);
    if (L.n >= 64) throw std::domain_error("FieldTower::order: does not fit");
    return std::uint64_t(1) << L.n;
}

Gf2x FieldTower::defining_poly(int lvl) const { return level(lvl).poly; }

FieldElem FieldTower::zero(int lvl) const {
    level(lvl);
    return FieldElem(this, lvl, 0);
}

FieldElem FieldTower::one(int lvl) const {
    level(lvl);
    return FieldElem(this, lvl, 1);
}

FieldElem FieldTower::gen(int lvl) const {
    const Level& L = level(lvl);
    if (L.n == 1) return FieldElem(this, lvl, 1);
    return FieldElem(this, lvl, 2);
}

FieldElem FieldTower::from_bits(std::uint64_t bits, int lvl) const {
    const Level& L = level(lvl);
    if (L.n < 64 && (bits >> L.n)) throw std::invalid_argument("from_bits: value out of range");
    return FieldElem(this, lvl, bits);
}

FieldElem FieldTower::from_hex(const std::string& hex, int lvl) const {
    if (hex.empty()) throw std::invalid_argument("from_hex: empty string");
    std::uint64_t v = 0;
    for (char c : hex) {
        int d;
        if (c >= '0' && c <= '9') d = c - '0';
        else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
        else throw std::invalid_argument("from_hex: bad digit");
        v = (v << 4) | static_cast<std::uint64_t>(d);
    }
    return from_bits(v, lvl);
}

std::uint64_t FieldTower::mul_raw(int lvl, std::uint64_t a, std::uint64_t b) const {
    return level(lvl).mul(a, b);
}

std::uint64_t FieldTower::inv_raw(int lvl, std::uint64_t a) const { return level(lvl).inv(a); }

std::uint64_t FieldTower::sqrt_raw(int lvl, std::uint64_t a) const { return level(lvl).sqrt(a); }

std::uint64_t FieldTower::lift_raw(int from, int to, std::uint64_t a) const {
    if (from == to) return a;
    if (to % from != 0) throw std::invalid_argument("lift: target level not a multiple");
    const Level& L = level(to);
    const auto& cols = L.emb_cols.at(from);
    std::uint64_t r = 0;
    for (size_t i = 0; i < cols.size(); ++i)
        if ((a >> i) & 1) r ^= cols[i];
    return r;
}

std::optional<std::uint64_t> FieldTower::descend_raw(int from, int to, std::uint64_t a) const {
    if (from == to) return a;
    if (from % to != 0) throw std::invalid_argument("descend: target level not a divisor");
    const Level& L = level(from);
    const auto& cols = L.emb_cols.at(to);
    int k = static_cast<int>(cols.size());
    // Gaussian elimination on the columns; comb tracks the GF(2) combination.
    std::vector<std::uint64_t> work = cols;
    std::vector<std::uint64_t> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = std::uint64_t(1) << i;
    std::array<int, 64> pivot_of;
    pivot_of.fill(-1);
    for (int i = 0; i < k; ++i) {
        while (work[i]) {
            int pb = 63 - __builtin_clzll(work[i]);
            if (pivot_of[pb] == -1) {
                pivot_of[pb] = i;
                break;
            }
            work[i] ^= work[pivot_of[pb]];
            comb[i] ^= comb[pivot_of[pb]];
        }
    }
    std::uint64_t target = a, sol = 0;
    while (target) {
        int pb = 63 - __builtin_clzll(target);
        if (pivot_of[pb] == -1) return std::nullopt;
        target ^= work[pivot_of[pb]];
        sol ^= comb[pivot_of[pb]];
    }
    return sol;
}

// ---------------------------------------------------------------------------
// FieldElem

FieldElem::FieldElem() : tower_(&FieldTower::make(1)), level_(1), bits_(0) {}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    if (tower_ != o.tower_) throw std::invalid_argument("FieldElem: mixed towers");
    if (level_ == o.level_) return FieldElem(tower_, level_, bits_ ^ o.bits_);
    int l = std::lcm(level_, o.level_);
    std::uint64_t a = tower_->lift_raw(level_, l, bits_);
    std::uint64_t b = tower_->lift_raw(o.level_, l, o.bits_);
    return FieldElem(tower_, l, a ^ b);
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    if (tower_ != o.tower_) throw std::invalid_argument("FieldElem: mixed towers");
    if (level_ == o.level_)
        return FieldElem(tower_, level_, tower_->mul_raw(level_, bits_, o.bits_));
    int l = std::lcm(level_, o.level_);
    std::uint64_t a = tower_->lift_raw(level_, l, bits_);
    std::uint64_t b = tower_->lift_raw(o.level_, l, o.bits_);
    return FieldElem(tower_, l, tower_->mul_raw(l, a, b));
}

FieldElem FieldElem::inv() const {
    return FieldElem(tower_, level_, tower_->inv_raw(level_, bits_));
}

FieldElem FieldElem::square() const {
    return FieldElem(tower_, level_, tower_->mul_raw(level_, bits_, bits_));
}

FieldElem FieldElem::sqrt() const {
    return FieldElem(tower_, level_, tower_->sqrt_raw(level_, bits_));
}

FieldElem FieldElem::pow(std::uint64_t e) const {
    FieldElem r = tower_->one(level_);
    FieldElem b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b.square();
        e >>= 1;
    }
    return r;
}

FieldElem FieldElem::frobenius_base() const {
    FieldElem r = *this;
    for (int i = 0; i < tower_->m(); ++i) r = r.square();
    return r;
}

FieldElem FieldElem::lift(int target) const {
    return FieldElem(tower_, target, tower_->lift_raw(level_, target, bits_));
}

std::optional<FieldElem> FieldElem::descend(int target) const {
    auto r = tower_->descend_raw(level_, target, bits_);
    if (!r) return std::nullopt;
    return FieldElem(tower_, target, *r);
}

int FieldElem::min_level() const {
    for (int d = 1; d < level_; ++d) {
        if (level_ % d) continue;
        if (tower_->descend_raw(level_, d, bits_)) return d;
    }
    return level_;
}

FieldElem FieldElem::normalized() const {
    int d = min_level();
    if (d == level_) return *this;
    return *descend(d);
}

bool FieldElem::operator==(const FieldElem& o) const {
    if (tower_ != o.tower_) return false;
    if (level_ == o.level_) return bits_ == o.bits_;
    int l = std::lcm(level_, o.level_);
    return tower_->lift_raw(level_, l, bits_) == tower_->lift_raw(o.level_, l, o.bits_);
}

std::string FieldElem::to_hex() const {
    if (bits_ == 0) return "0";
    static const char* digits = "0123456789abcdef";
    std::string s;
    std::uint64_t v = bits_;
    while (v) {
        s.insert(s.begin(), digits[v & 15]);
        v >>= 4;
    }
    return s;
}

}  // namespace qc2
