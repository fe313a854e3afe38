#include "padorb/series.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>

#include "padorb/bounds.hpp"
#include "padorb/modular.hpp"

namespace padorb {

Monomial Monomial::of(std::initializer_list<int> e) {
    if (e.size() > static_cast<std::size_t>(kMaxVariables))
        throw ParameterError("too many variables in monomial");
    Monomial m;
    std::size_t i = 0;
    for (int x : e) {
        if (x < 0 || x > 255) throw ParameterError("monomial exponent out of range");
        m.exps[i++] = static_cast<std::uint8_t>(x);
    }
    return m;
}

int Monomial::degree() const {
    int d = 0;
    for (auto x : exps) d += x;
    return d;
}

// ---------------------------------------------------------------------------
// MonomialIndex

namespace {

constexpr std::uint32_t kNoIndex = UINT32_MAX;
constexpr std::uint64_t kMaxTable = std::uint64_t{1} << 22;

void enumerate(int g, int D, int var, int remaining, Monomial& cur, std::vector<Monomial>& out) {
    if (var == g) {
        out.push_back(cur);
        return;
    }
    for (int k = 0; k <= remaining; ++k) {
        cur.exps[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(k);
        enumerate(g, D, var + 1, remaining - k, cur, out);
    }
    cur.exps[static_cast<std::size_t>(var)] = 0;
}

}  // namespace

MonomialIndex::MonomialIndex(int g, int D) : g_(g), D_(D) {
    if (g < 1 || g > kMaxVariables)
        throw ParameterError("number of variables must lie in [1, " + std::to_string(kMaxVariables) + "]");
    if (D < 1 || D > 255) throw ParameterError("degree cap must lie in [1, 255]");
    unsigned __int128 span = 1;
    for (int i = 0; i < g; ++i) {
        span *= static_cast<unsigned>(D + 1);
        if (span > (static_cast<unsigned __int128>(1) << 62))
            throw ParameterError("monomial space too large");
    }
    Monomial cur;
    enumerate(g, D, 0, D, cur, monomials_);
    std::stable_sort(monomials_.begin(), monomials_.end(), [](const Monomial& a, const Monomial& b) {
        int da = a.degree(), db = b.degree();
        return da != db ? da < db : a < b;
    });
    degrees_.reserve(monomials_.size());
    codes_.reserve(monomials_.size());
    for (const auto& m : monomials_) {
        degrees_.push_back(m.degree());
        std::uint64_t c = 0;
        for (int i = g - 1; i >= 0; --i) c = c * static_cast<std::uint64_t>(D + 1) + m.exps[static_cast<std::size_t>(i)];
        codes_.push_back(c);
    }
    if (span <= kMaxTable) {
        table_.assign(static_cast<std::size_t>(span), kNoIndex);
        for (std::size_t i = 0; i < codes_.size(); ++i) table_[codes_[i]] = static_cast<std::uint32_t>(i);
    }
}

std::shared_ptr<const MonomialIndex> MonomialIndex::get(int g, int D) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const MonomialIndex>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[{g, D}];
    if (!slot) slot = std::make_shared<const MonomialIndex>(g, D);
    return slot;
}

std::size_t MonomialIndex::lookup(std::uint64_t code) const {
    if (!table_.empty()) return table_[code];
    // Large spaces: linear-time fallback keyed on the sorted code list.
    auto it = std::find(codes_.begin(), codes_.end(), code);
    return static_cast<std::size_t>(it - codes_.begin());
}

std::size_t MonomialIndex::index_of(const Monomial& m) const {
    std::uint64_t c = 0;
    for (int i = g_ - 1; i >= 0; --i) c = c * static_cast<std::uint64_t>(D_ + 1) + m.exps[static_cast<std::size_t>(i)];
    return lookup(c);
}

// ---------------------------------------------------------------------------
// Dense scratch arithmetic

namespace {

using Dense = std::vector<PadicScalar>;

Dense to_dense(const Series& s, const MonomialIndex& idx, const RingParams& params) {
    Dense d(idx.size(), PadicScalar::zero(params));
    for (const auto& [m, c] : s.terms()) d[idx.index_of(m)] = c;
    return d;
}

std::vector<std::size_t> support(const Dense& a) {
    std::vector<std::size_t> nz;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero()) nz.push_back(i);
    return nz;
}

// out += c * a * b, truncated at the cap.
void mul_acc(const Dense& a, const Dense& b, const MonomialIndex& idx, int D, Dense& out) {
    const auto sa = support(a);
    const auto sb = support(b);
    for (std::size_t i : sa) {
        const int di = idx.degree(i);
        for (std::size_t j : sb) {
            if (di + idx.degree(j) > D) break;  // supports are sorted by degree
            out[idx.lookup(idx.code(i) + idx.code(j))] += a[i] * b[j];
        }
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// Series / SeriesTuple

const PadicScalar* Series::find(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return t.first < key; });
    return (it != terms_.end() && it->first == m) ? &it->second : nullptr;
}

SeriesTuple::SeriesTuple(const RingParams& params, int g, int D)
    : params_(params), g_(g), D_(D), index_(MonomialIndex::get(g, D)),
      components_(static_cast<std::size_t>(g)) {}

SeriesTuple SeriesTuple::identity(const RingParams& params, int g, int D) {
    SeriesTuple id(params, g, D);
    for (int i = 0; i < g; ++i) id.set(i, Monomial::unit(i), PadicScalar::one(params));
    return id;
}

SeriesTuple SeriesTuple::affine(std::span<const PadicScalar> translation,
                                const std::vector<std::vector<PadicScalar>>& matrix, int D) {
    const int g = static_cast<int>(translation.size());
    if (g == 0 || matrix.size() != translation.size())
        throw ParameterError("affine map needs a g-vector and a g x g matrix");
    SeriesTuple F(translation[0].params(), g, D);
    for (int i = 0; i < g; ++i) {
        const auto& row = matrix[static_cast<std::size_t>(i)];
        if (row.size() != translation.size()) throw ParameterError("matrix is not square");
        F.set(i, Monomial{}, translation[static_cast<std::size_t>(i)]);
        for (int j = 0; j < g; ++j) F.set(i, Monomial::unit(j), row[static_cast<std::size_t>(j)]);
    }
    return F;
}

PadicScalar SeriesTuple::coefficient(int i, const Monomial& m) const {
    const PadicScalar* c = component(i).find(m);
    return c ? *c : PadicScalar::zero(params_);
}

void SeriesTuple::set(int i, const Monomial& m, const PadicScalar& c) {
    if (!(c.params() == params_)) throw ParameterError("coefficient from a different ring");
    for (int v = g_; v < kMaxVariables; ++v)
        if (m.exps[static_cast<std::size_t>(v)] != 0) throw ParameterError("monomial uses too many variables");
    if (m.degree() > D_) return;
    auto& terms = components_.at(static_cast<std::size_t>(i)).terms_;
    auto it = std::lower_bound(terms.begin(), terms.end(), m,
                               [](const Series::Term& t, const Monomial& key) { return t.first < key; });
    const bool present = it != terms.end() && it->first == m;
    if (c.is_zero()) {
        if (present) terms.erase(it);
    } else if (present) {
        it->second = c;
    } else {
        terms.insert(it, {m, c});
    }
}

void SeriesTuple::add(int i, const Monomial& m, const PadicScalar& c) {
    set(i, m, coefficient(i, m) + c);
}

std::size_t SeriesTuple::term_count() const {
    std::size_t n = 0;
    for (const auto& s : components_) n += s.terms().size();
    return n;
}

std::vector<PadicScalar> SeriesTuple::evaluate(std::span<const PadicScalar> x) const {
    if (x.size() != static_cast<std::size_t>(g_)) throw ParameterError("point has the wrong dimension");
    for (const auto& xi : x)
        if (!(xi.params() == params_)) throw ParameterError("point from a different ring");
    // powers[j][k] = x_j^k
    std::vector<std::vector<PadicScalar>> powers(static_cast<std::size_t>(g_));
    for (int j = 0; j < g_; ++j) {
        auto& pw = powers[static_cast<std::size_t>(j)];
        pw.push_back(PadicScalar::one(params_));
        for (int k = 1; k <= D_; ++k) pw.push_back(pw.back() * x[static_cast<std::size_t>(j)]);
    }
    std::vector<PadicScalar> out;
    out.reserve(static_cast<std::size_t>(g_));
    for (const auto& s : components_) {
        PadicScalar acc = PadicScalar::zero(params_);
        for (const auto& [m, c] : s.terms()) {
            PadicScalar t = c;
            for (int j = 0; j < g_; ++j) {
                auto k = m.exps[static_cast<std::size_t>(j)];
                if (k) t *= powers[static_cast<std::size_t>(j)][k];
            }
            acc += t;
        }
        out.push_back(acc);
    }
    return out;
}

SeriesTuple SeriesTuple::with_degree_cap(int D) const {
    SeriesTuple out(params_, g_, D);
    for (int i = 0; i < g_; ++i)
        for (const auto& [m, c] : component(i).terms())
            if (m.degree() <= D) out.components_[static_cast<std::size_t>(i)].terms_.push_back({m, c});
    return out;
}

SeriesTuple SeriesTuple::reduced_mod_pi(int t) const {
    SeriesTuple out(params_, g_, D_);
    for (int i = 0; i < g_; ++i)
        for (const auto& [m, c] : component(i).terms()) {
            PadicScalar r = c.reduced_mod_pi(t);
            if (!r.is_zero()) out.components_[static_cast<std::size_t>(i)].terms_.push_back({m, r});
        }
    return out;
}

bool SeriesTuple::is_scaled(int max_degree) const {
    for (const auto& s : components_)
        for (const auto& [m, c] : s.terms()) {
            const int d = m.degree();
            if (max_degree >= 0 && d > max_degree) continue;
            if (d >= 2 && c.valuation() < d - 1) return false;
        }
    return true;
}

bool operator==(const SeriesTuple& a, const SeriesTuple& b) {
    if (!(a.params_ == b.params_) || a.g_ != b.g_ || a.D_ != b.D_) return false;
    for (std::size_t i = 0; i < a.components_.size(); ++i)
        if (a.components_[i].terms_ != b.components_[i].terms_) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Composition and iteration

namespace {

void require_same_shape(const SeriesTuple& F, const SeriesTuple& G) {
    if (!(F.params() == G.params()) || F.dimension() != G.dimension() ||
        F.degree_cap() != G.degree_cap())
        throw ParameterError("series tuples differ in ring, dimension or degree cap");
}

}  // namespace

SeriesTuple compose(const SeriesTuple& F, const SeriesTuple& G) {
    require_same_shape(F, G);
    const auto& idx = *F.index_;
    const RingParams& params = F.params_;
    const int g = F.g_;
    const int D = F.D_;

    std::vector<Dense> inner;
    inner.reserve(static_cast<std::size_t>(g));
    for (int j = 0; j < g; ++j) inner.push_back(to_dense(G.component(j), idx, params));

    // prod[k] = G^{monomial k}, built on demand from a smaller monomial.
    std::vector<std::optional<Dense>> prod(idx.size());
    auto get = [&](auto&& self, const Monomial& m) -> const Dense& {
        const std::size_t k = idx.index_of(m);
        if (prod[k]) return *prod[k];
        int var = 0;
        while (m.exps[static_cast<std::size_t>(var)] == 0) ++var;
        Monomial smaller = m;
        smaller.exps[static_cast<std::size_t>(var)]--;
        const Dense& base = smaller.degree() == 0 ? inner[static_cast<std::size_t>(var)] : self(self, smaller);
        if (smaller.degree() == 0) {
            prod[k] = base;
        } else {
            Dense out(idx.size(), PadicScalar::zero(params));
            mul_acc(base, inner[static_cast<std::size_t>(var)], idx, D, out);
            prod[k] = std::move(out);
        }
        return *prod[k];
    };

    SeriesTuple result(params, g, D);
    for (int i = 0; i < g; ++i) {
        Dense acc(idx.size(), PadicScalar::zero(params));
        for (const auto& [m, c] : F.component(i).terms()) {
            if (m.degree() == 0) {
                acc[0] += c;
                continue;
            }
            const Dense& gm = get(get, m);
            for (std::size_t k = 0; k < gm.size(); ++k)
                if (!gm[k].is_zero()) acc[k] += c * gm[k];
        }
        auto& terms = result.components_[static_cast<std::size_t>(i)].terms_;
        for (std::size_t k = 0; k < acc.size(); ++k)
            if (!acc[k].is_zero()) terms.push_back({idx.monomial(k), acc[k]});
        std::sort(terms.begin(), terms.end(),
                  [](const Series::Term& a, const Series::Term& b) { return a.first < b.first; });
    }
    return result;
}

SeriesTuple iterate(const SeriesTuple& F, std::uint64_t m) {
    SeriesTuple result = SeriesTuple::identity(F.params(), F.dimension(), F.degree_cap());
    if (m == 0) return result;
    SeriesTuple base = F;
    bool first = true;
    while (m > 0) {
        if (m & 1) {
            result = first ? base : compose(result, base);
            first = false;
        }
        m >>= 1;
        if (m > 0) base = compose(base, base);
    }
    return result;
}

// ---------------------------------------------------------------------------
// Linear part and the affine residue

LinearData linear_part(const SeriesTuple& F) {
    const int g = F.dimension();
    LinearData d;
    for (int i = 0; i < g; ++i) {
        d.translation.push_back(F.coefficient(i, Monomial{}));
        std::vector<PadicScalar> row;
        for (int j = 0; j < g; ++j) row.push_back(F.coefficient(i, Monomial::unit(j)));
        d.matrix.push_back(std::move(row));
    }
    return d;
}

AffineResidue affine_residue(const LinearData& data) {
    AffineResidue a;
    for (const auto& c : data.translation) a.translation.push_back(c.residue());
    for (const auto& row : data.matrix) {
        std::vector<std::uint64_t> r;
        for (const auto& c : row) r.push_back(c.residue());
        a.matrix.push_back(std::move(r));
    }
    return a;
}

AffineResidue affine_product(const AffineResidue& a, const AffineResidue& b, std::uint64_t p) {
    const std::size_t g = a.translation.size();
    if (b.translation.size() != g) throw ParameterError("affine maps differ in dimension");
    AffineResidue out;
    out.translation.assign(g, 0);
    out.matrix.assign(g, std::vector<std::uint64_t>(g, 0));
    for (std::size_t i = 0; i < g; ++i) {
        std::uint64_t t = a.translation[i] % p;
        for (std::size_t k = 0; k < g; ++k) t = add_mod(t, mul_mod(a.matrix[i][k], b.translation[k], p), p);
        out.translation[i] = t;
        for (std::size_t j = 0; j < g; ++j) {
            std::uint64_t s = 0;
            for (std::size_t k = 0; k < g; ++k) s = add_mod(s, mul_mod(a.matrix[i][k], b.matrix[k][j], p), p);
            out.matrix[i][j] = s;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Congruences

bool congruent_mod(const SeriesTuple& F, const SeriesTuple& G, int t) {
    require_same_shape(F, G);
    if (t < 1 || t > F.params().precision())
        throw ParameterError("congruence exponent must lie in [1, eN], got " + std::to_string(t));
    for (int i = 0; i < F.dimension(); ++i) {
        const auto& a = F.component(i).terms();
        const auto& b = G.component(i).terms();
        std::size_t x = 0, y = 0;
        while (x < a.size() || y < b.size()) {
            PadicScalar diff;
            if (y == b.size() || (x < a.size() && a[x].first < b[y].first)) {
                diff = a[x++].second;
            } else if (x == a.size() || b[y].first < a[x].first) {
                diff = b[y++].second;
            } else {
                diff = a[x++].second - b[y++].second;
            }
            if (diff.valuation() < t) return false;
        }
    }
    return true;
}

SeriesTuple fingerprint(const SeriesTuple& F) {
    const int e = F.params().e;
    const auto id = SeriesTuple::identity(F.params(), F.dimension(), F.degree_cap());
    if (!congruent_mod(F, id, 1)) throw DomainError("fingerprint needs a tuple congruent to the identity mod pi");
    if (!F.is_scaled(e + 1)) throw DomainError("fingerprint needs degree-d coefficients of valuation >= d - 1");
    return F.with_degree_cap(e + 1).reduced_mod_pi(e + 1);
}

SeriesTuple compose_fingerprints(const SeriesTuple& A, const SeriesTuple& B) {
    const int e = A.params().e;
    if (A.degree_cap() != e + 1 || B.degree_cap() != e + 1)
        throw ParameterError("fingerprints must have degree cap e + 1");
    return compose(A, B).reduced_mod_pi(e + 1);
}

// ---------------------------------------------------------------------------
// Iteration bound check

BoundCheckReport verify_mikes_bound(const SeriesTuple& F) {
    const RingParams& params = F.params();
    const int g = F.dimension();
    if (F.degree_cap() < params.precision())
        throw ParameterError("degree cap must be at least eN for an exact truncated check");

    const AffineResidue res = affine_residue(linear_part(F));
    if (det_mod_prime(res.matrix, static_cast<std::uint64_t>(params.p)) == 0)
        throw DomainError("linear part is not invertible mod pi");
    for (int i = 0; i < g; ++i)
        for (const auto& [m, c] : F.component(i).terms())
            if (m.degree() >= 2 && c.valuation() == 0)
                throw DomainError("a nonlinear coefficient is a unit; the tuple is not affine mod pi");

    BoundCheckReport rep;
    rep.r = r_exponent(params.p, params.e);
    rep.t = congruence_threshold(params.p, params.e);
    const mpz_class m = iteration_count(params.p, params.e, g, params.p);
    if (!m.fits_ulong_p()) throw ParameterError("iteration count exceeds 64 bits");
    rep.m = m.get_ui();
    const SeriesTuple Fm = iterate(F, rep.m);
    rep.pass = congruent_mod(Fm, SeriesTuple::identity(params, g, F.degree_cap()), rep.t);
    return rep;
}

}  // namespace padorb
