#include "qc2/multipoly.hpp"

#include <numeric>
#include <stdexcept>

namespace qc2 {

MultiPoly MultiPoly::constant(const FieldTower& t, int level, int nvars, const FieldElem& c) {
    MultiPoly p(t, level, nvars);
    p.set_coeff(Mono(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(const FieldTower& t, int level, int nvars, int i) {
    if (i < 0 || i >= nvars) throw std::out_of_range("MultiPoly::variable: index");
    MultiPoly p(t, level, nvars);
    Mono m(nvars, 0);
    m[i] = 1;
    p.set_coeff(m, t.one(level));
    return p;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (auto& [m, c] : terms_) d = std::max(d, mono_total(m));
    return d;
}

std::optional<int> MultiPoly::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = mono_total(terms_.begin()->first);
    for (auto& [m, c] : terms_)
        if (mono_total(m) != d) return std::nullopt;
    return d;
}

FieldElem MultiPoly::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return tower_->from_bits(it == terms_.end() ? 0 : it->second, level_);
}

void MultiPoly::set_coeff(const Mono& m, const FieldElem& c) {
    if (static_cast<int>(m.size()) != nvars_)
        throw std::invalid_argument("MultiPoly::set_coeff: wrong arity");
    FieldElem v = c;
    if (c.level() != level_) {
        if (level_ % c.level() == 0) v = c.lift(level_);
        else {
            auto d = c.descend(level_);
            if (!d) throw std::invalid_argument("MultiPoly::set_coeff: coefficient level");
            v = *d;
        }
    }
    if (v.is_zero())
        terms_.erase(m);
    else
        terms_[m] = v.bits();
}

void MultiPoly::add_term(const Mono& m, const FieldElem& c) { set_coeff(m, coeff(m) + c); }

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (tower_ != o.tower_ || nvars_ != o.nvars_)
        throw std::invalid_argument("MultiPoly: incompatible operands");
    if (level_ != o.level_) {
        int l = std::lcm(level_, o.level_);
        return lift(l) + o.lift(l);
    }
    MultiPoly r = *this;
    for (auto& [m, c] : o.terms_) {
        auto [it, fresh] = r.terms_.try_emplace(m, c);
        if (!fresh) {
            it->second ^= c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (tower_ != o.tower_ || nvars_ != o.nvars_)
        throw std::invalid_argument("MultiPoly: incompatible operands");
    if (level_ != o.level_) {
        int l = std::lcm(level_, o.level_);
        return lift(l) * o.lift(l);
    }
    MultiPoly r(*tower_, level_, nvars_);
    Mono m(nvars_, 0);
    for (auto& [ma, ca] : terms_) {
        for (auto& [mb, cb] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) m[i] = static_cast<std::uint8_t>(ma[i] + mb[i]);
            std::uint64_t prod = tower_->mul_raw(level_, ca, cb);
            auto [it, fresh] = r.terms_.try_emplace(m, prod);
            if (!fresh) {
                it->second ^= prod;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    }
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (tower_ != o.tower_ || nvars_ != o.nvars_) return false;
    if (level_ != o.level_) {
        int l = std::lcm(level_, o.level_);
        return lift(l) == o.lift(l);
    }
    return terms_ == o.terms_;
}

MultiPoly MultiPoly::scale(const FieldElem& a) const {
    if (a.level() != level_) {
        int l = std::lcm(level_, a.level());
        return lift(l).scale(a.lift(l));
    }
    MultiPoly r(*tower_, level_, nvars_);
    if (a.is_zero()) return r;
    for (auto& [m, c] : terms_) r.terms_[m] = tower_->mul_raw(level_, c, a.bits());
    return r;
}

MultiPoly MultiPoly::lift(int target) const {
    if (target == level_) return *this;
    MultiPoly r(*tower_, target, nvars_);
    for (auto& [m, c] : terms_) r.terms_[m] = tower_->lift_raw(level_, target, c);
    return r;
}

MultiPoly MultiPoly::partial(int var) const {
    if (var < 0 || var >= nvars_) throw std::out_of_range("MultiPoly::partial: index");
    MultiPoly r(*tower_, level_, nvars_);
    for (auto& [m, c] : terms_) {
        if (m[var] % 2 == 0) continue;  // even exponents vanish in characteristic 2
        Mono d = m;
        --d[var];
        r.terms_[d] = c;
    }
    return r;
}

FieldElem MultiPoly::eval(const std::vector<FieldElem>& x) const {
    if (static_cast<int>(x.size()) != nvars_)
        throw std::invalid_argument("MultiPoly::eval: wrong arity");
    int lvl = level_;
    for (auto& xi : x) lvl = std::lcm(lvl, xi.level());
    // power cache per variable
    std::vector<std::vector<std::uint64_t>> pows(nvars_);
    int dmax = total_degree();
    for (int i = 0; i < nvars_; ++i) {
        pows[i].assign(dmax + 1, 1);
        std::uint64_t xb = tower_->lift_raw(x[i].level(), lvl, x[i].bits());
        for (int e = 1; e <= dmax; ++e) pows[i][e] = tower_->mul_raw(lvl, pows[i][e - 1], xb);
    }
    std::uint64_t acc = 0;
    for (auto& [m, c] : terms_) {
        std::uint64_t t = tower_->lift_raw(level_, lvl, c);
        for (int i = 0; i < nvars_; ++i)
            if (m[i]) t = tower_->mul_raw(lvl, t, pows[i][m[i]]);
        acc ^= t;
    }
    return tower_->from_bits(acc, lvl);
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
    if (static_cast<int>(images.size()) != nvars_)
        throw std::invalid_argument("MultiPoly::substitute: wrong arity");
    int out_vars = images.empty() ? 0 : images.front().num_vars();
    int lvl = level_;
    for (auto& im : images) lvl = std::lcm(lvl, im.level());
    int dmax = total_degree();
    // memoized powers of each image
    std::vector<std::vector<MultiPoly>> pows(nvars_);
    for (int i = 0; i < nvars_; ++i) {
        pows[i].push_back(MultiPoly::constant(*tower_, lvl, out_vars, tower_->one(lvl)));
        for (int e = 1; e <= dmax; ++e) pows[i].push_back(pows[i].back() * images[i].lift(lvl));
    }
    MultiPoly r(*tower_, lvl, out_vars);
    for (auto& [m, c] : terms_) {
        MultiPoly t =
            MultiPoly::constant(*tower_, lvl, out_vars, tower_->from_bits(tower_->lift_raw(level_, lvl, c), lvl));
        for (int i = 0; i < nvars_; ++i)
            if (m[i]) t = t * pows[i][m[i]];
        r += t;
    }
    return r;
}

MultiPoly MultiPoly::linear_change(const std::vector<std::vector<FieldElem>>& M) const {
    std::vector<MultiPoly> images;
    int lvl = level_;
    for (auto& row : M)
        for (auto& e : row) lvl = std::lcm(lvl, e.level());
    for (int i = 0; i < nvars_; ++i) {
        MultiPoly li(*tower_, lvl, nvars_);
        for (int j = 0; j < nvars_; ++j) {
            Mono m(nvars_, 0);
            m[j] = 1;
            li.add_term(m, M[i][j].lift(lvl));
        }
        images.push_back(li);
    }
    return substitute(images);
}

MultiPoly MultiPoly::eval_var(int var, const FieldElem& c) const {
    int lvl = std::lcm(level_, c.level());
    std::uint64_t cb = tower_->lift_raw(c.level(), lvl, c.bits());
    int dmax = total_degree();
    std::vector<std::uint64_t> pows(std::max(dmax + 1, 1), 1);
    for (int e = 1; e <= dmax; ++e) pows[e] = tower_->mul_raw(lvl, pows[e - 1], cb);
    MultiPoly r(*tower_, lvl, nvars_ - 1);
    for (auto& [m, co] : terms_) {
        Mono d;
        d.reserve(nvars_ - 1);
        for (int i = 0; i < nvars_; ++i)
            if (i != var) d.push_back(m[i]);
        std::uint64_t t = tower_->mul_raw(lvl, tower_->lift_raw(level_, lvl, co), pows[m[var]]);
        if (!t) continue;
        auto [it, fresh] = r.terms_.try_emplace(d, t);
        if (!fresh) {
            it->second ^= t;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

MultiPoly MultiPoly::translate_var(int var, const FieldElem& c) const {
    std::vector<MultiPoly> images;
    int lvl = std::lcm(level_, c.level());
    for (int i = 0; i < nvars_; ++i) {
        MultiPoly xi = MultiPoly::variable(*tower_, lvl, nvars_, i);
        if (i == var) {
            Mono zero(nvars_, 0);
            xi.add_term(zero, c.lift(lvl));
        }
        images.push_back(xi);
    }
    return substitute(images);
}

UniPoly MultiPoly::as_univariate() const {
    int var = -1;
    for (auto& [m, c] : terms_)
        for (int i = 0; i < nvars_; ++i)
            if (m[i]) {
                if (var == -1) var = i;
                else if (var != i)
                    throw std::logic_error("MultiPoly::as_univariate: several variables present");
            }
    UniPoly p(*tower_, level_);
    for (auto& [m, c] : terms_) p.set_coeff(var == -1 ? 0 : m[var], tower_->from_bits(c, level_));
    return p;
}

bool MultiPoly::is_perfect_square() const {
    for (auto& [m, c] : terms_)
        for (auto e : m)
            if (e % 2) return false;
    return true;
}

MultiPoly MultiPoly::square_root() const {
    MultiPoly r(*tower_, level_, nvars_);
    for (auto& [m, c] : terms_) {
        Mono h = m;
        for (auto& e : h) {
            if (e % 2) throw std::logic_error("MultiPoly::square_root: not a square");
            e /= 2;
        }
        r.terms_[h] = tower_->sqrt_raw(level_, c);
    }
    return r;
}

MultiPoly MultiPoly::graded_part(int d) const {
    MultiPoly r(*tower_, level_, nvars_);
    for (auto& [m, c] : terms_)
        if (mono_total(m) == d) r.terms_[m] = c;
    return r;
}

void IdealPresentation::validate() const {
    if (generators.empty()) return;
    int nv = generators.front().num_vars();
    for (auto& g : generators) {
        if (g.num_vars() != nv) throw std::invalid_argument("IdealPresentation: mixed arities");
        if (chart == Chart::Homogeneous && !g.is_zero() && !g.homogeneous_degree())
            throw std::invalid_argument("IdealPresentation: non-homogeneous generator");
        if (chart == Chart::AffineOrigin && !g.is_zero()) {
            if (!g.coeff(Mono(nv, 0)).is_zero())
                throw std::invalid_argument("IdealPresentation: generator not vanishing at origin");
        }
    }
}

bool euler_check(const MultiPoly& F) {
    auto d = F.homogeneous_degree();
    if (!d || *d % 2 != 0)
        throw std::invalid_argument("euler_check: F must be homogeneous of even degree");
    MultiPoly acc(F.tower(), F.level(), F.num_vars());
    for (int i = 0; i < F.num_vars(); ++i)
        acc += MultiPoly::variable(F.tower(), F.level(), F.num_vars(), i) * F.partial(i);
    return acc.is_zero();
}

}  // namespace qc2
