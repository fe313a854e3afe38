#include "padorb/dynamics.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>

#include "padorb/bounds.hpp"
#include "padorb/modular.hpp"

namespace padorb {

IntPoint int_point(std::initializer_list<long> coords) {
    IntPoint x;
    for (long c : coords) x.emplace_back(c);
    return x;
}

ResiduePoint reduce_point(std::span<const mpz_class> x, std::uint64_t modulus) {
    mpz_class m;
    mpz_set_ui(m.get_mpz_t(), modulus);
    ResiduePoint out;
    out.reserve(x.size());
    mpz_class r;
    for (const auto& c : x) {
        mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        out.push_back(r.get_ui());
    }
    return out;
}

namespace {

void require_self_map(const std::vector<IntPoly>& polys, const char* what) {
    const int g = static_cast<int>(polys.size());
    if (g < 1) throw ParameterError(std::string(what) + " has no components");
    for (const auto& f : polys)
        if (f.variables() != g)
            throw ParameterError(std::string(what) + " is not a self-map of affine " + std::to_string(g) + "-space");
}

// Mixed-radix enumeration of (Z/m)^g; returns false after the last point.
bool next_point(ResiduePoint& x, std::uint64_t m) {
    for (auto& c : x) {
        if (++c < m) return true;
        c = 0;
    }
    return false;
}

std::uint64_t space_size(std::uint64_t m, int g, std::uint64_t budget) {
    unsigned __int128 n = 1;
    for (int i = 0; i < g; ++i) {
        n *= m;
        if (n > budget)
            throw ResourceError("enumerating (Z/" + std::to_string(m) + ")^" + std::to_string(g) +
                                " exceeds the budget of " + std::to_string(budget) + " points");
    }
    return static_cast<std::uint64_t>(n);
}

std::uint64_t encode(const ResiduePoint& x, std::uint64_t m) {
    std::uint64_t c = 0;
    for (std::size_t i = x.size(); i-- > 0;) c = c * m + x[i];
    return c;
}

}  // namespace

PolySelfMap::PolySelfMap(std::vector<IntPoly> polynomials, std::optional<std::vector<IntPoly>> inverse,
                         int p, int k)
    : polys_(std::move(polynomials)), inverse_(std::move(inverse)), p_(p), k_(k) {
    require_self_map(polys_, "map");
    if (inverse_) {
        require_self_map(*inverse_, "inverse");
        if (inverse_->size() != polys_.size()) throw ParameterError("inverse has the wrong dimension");
    }
    if (p < 3 || !is_prime(static_cast<std::uint64_t>(p))) throw ParameterError("p must be an odd prime");
    if (k < 1) throw ParameterError("k must be positive");
    (void)modulus();
}

std::uint64_t PolySelfMap::modulus() const {
    std::uint64_t m = checked_pow(static_cast<std::uint64_t>(p_), static_cast<unsigned>(k_));
    if (m >= (std::uint64_t{1} << 62)) throw ParameterError("p^k must be below 2^62");
    return m;
}

IntPoint PolySelfMap::apply(std::span<const mpz_class> x) const {
    IntPoint y;
    y.reserve(polys_.size());
    for (const auto& f : polys_) y.push_back(f.evaluate(x));
    return y;
}

ResiduePoint PolySelfMap::apply_mod(std::span<const std::uint64_t> x, std::uint64_t modulus) const {
    ResiduePoint y;
    y.reserve(polys_.size());
    for (const auto& f : polys_) y.push_back(f.evaluate_mod(x, modulus));
    return y;
}

ResiduePoint PolySelfMap::apply_inverse_mod(std::span<const std::uint64_t> x, std::uint64_t modulus) const {
    if (!inverse_) throw ParameterError("map has no inverse");
    ResiduePoint y;
    y.reserve(inverse_->size());
    for (const auto& f : *inverse_) y.push_back(f.evaluate_mod(x, modulus));
    return y;
}

PolySelfMap PolySelfMap::with_modulus(int p, int k) const { return PolySelfMap(polys_, inverse_, p, k); }

// ---------------------------------------------------------------------------

EtaleCertificate check_etale(const PolySelfMap& map) { return check_etale(map, map.p()); }

EtaleCertificate check_etale(const PolySelfMap& map, int p) {
    if (p < 3 || !is_prime(static_cast<std::uint64_t>(p))) throw ParameterError("p must be an odd prime");
    const int g = map.dimension();
    const auto up = static_cast<std::uint64_t>(p);
    std::vector<std::vector<IntPoly>> jac(static_cast<std::size_t>(g));
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) jac[static_cast<std::size_t>(i)].push_back(map.polynomials()[static_cast<std::size_t>(i)].derivative(j));

    space_size(up, g, std::uint64_t{1} << 24);
    EtaleCertificate cert;
    cert.p = p;
    ResiduePoint x(static_cast<std::size_t>(g), 0);
    do {
        ModMatrix m(static_cast<std::size_t>(g), std::vector<std::uint64_t>(static_cast<std::size_t>(g)));
        for (int i = 0; i < g; ++i)
            for (int j = 0; j < g; ++j)
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    jac[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].evaluate_mod(x, up);
        if (det_mod_prime(std::move(m), up) == 0) {
            cert.witness = x;
            return cert;
        }
    } while (next_point(x, up));
    cert.etale = true;
    return cert;
}

std::uint64_t count_special_fiber_points(std::span<const IntPoly> generators, int g, int p) {
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) throw ParameterError("p must be prime");
    for (const auto& f : generators)
        if (f.variables() != g) throw ParameterError("generator in the wrong number of variables");
    const auto up = static_cast<std::uint64_t>(p);
    space_size(up, g, std::uint64_t{1} << 26);
    std::uint64_t count = 0;
    ResiduePoint x(static_cast<std::size_t>(g), 0);
    do {
        bool zero = std::all_of(generators.begin(), generators.end(),
                                [&](const IntPoly& f) { return f.evaluate_mod(x, up) == 0; });
        if (zero) ++count;
    } while (next_point(x, up));
    return count;
}

// ---------------------------------------------------------------------------

OrbitReport orbit_of_point(const PolySelfMap& map, std::span<const mpz_class> x, int k,
                           std::uint64_t max_steps) {
    if (x.size() != static_cast<std::size_t>(map.dimension())) throw ParameterError("point has the wrong dimension");
    if (k < 1) throw ParameterError("k must be positive");
    const std::uint64_t m = checked_pow(static_cast<std::uint64_t>(map.p()), static_cast<unsigned>(k));
    OrbitReport rep;
    rep.modulus = m;
    rep.start = reduce_point(x, m);

    std::map<ResiduePoint, std::uint64_t> seen;
    ResiduePoint cur = rep.start;
    for (std::uint64_t step = 0;; ++step) {
        auto [it, inserted] = seen.emplace(cur, step);
        if (!inserted) {
            rep.tail = it->second;
            rep.cycle = step - it->second;
            return rep;
        }
        if (step >= max_steps) throw ResourceError("orbit exceeds " + std::to_string(max_steps) + " steps");
        cur = map.apply_mod(cur, m);
    }
}

OrbitReport residue_cycle(const PolySelfMap& map, std::span<const mpz_class> x) {
    OrbitReport rep = orbit_of_point(map, x, 1);
    const auto fiber = checked_pow(static_cast<std::uint64_t>(map.p()), static_cast<unsigned>(map.dimension()));
    if (rep.tail + rep.cycle > fiber) throw InternalError("residue orbit longer than the special fiber");
    return rep;
}

SeriesTuple disk_linearization(const PolySelfMap& map, std::span<const mpz_class> a, int N, int D) {
    const int g = map.dimension();
    if (a.size() != static_cast<std::size_t>(g)) throw ParameterError("center has the wrong dimension");
    const auto up = static_cast<std::uint64_t>(map.p());
    const ResiduePoint ar = reduce_point(a, up);
    if (map.apply_mod(ar, up) != ar) throw DomainError("the residue of the center is not fixed by the map");

    const mpz_class p = map.p();
    std::vector<IntPoly> shifted;  // a_i + p z_i
    for (int i = 0; i < g; ++i)
        shifted.push_back(IntPoly::constant(g, a[static_cast<std::size_t>(i)]) + IntPoly::variable(g, i).scaled(p));
    std::vector<IntPoly> model;
    int degree = 1;
    for (int i = 0; i < g; ++i) {
        IntPoly h = map.polynomials()[static_cast<std::size_t>(i)].substitute(shifted) -
                    IntPoly::constant(g, a[static_cast<std::size_t>(i)]);
        model.push_back(h.divided_exactly(p));
        degree = std::max(degree, model.back().degree());
    }
    const RingParams params = RingParams::make(map.p(), 1, N);
    return to_series(model, params, D > 0 ? D : std::max(degree, N));
}

bool certify_exact_period(const PolySelfMap& map, std::span<const mpz_class> x, std::uint64_t n) {
    if (n < 1) throw ParameterError("period must be positive");
    if (x.size() != static_cast<std::size_t>(map.dimension())) throw ParameterError("point has the wrong dimension");
    IntPoint cur(x.begin(), x.end());
    for (std::uint64_t j = 1; j <= n; ++j) {
        cur = map.apply(cur);
        const bool back = std::equal(cur.begin(), cur.end(), x.begin(), x.end());
        if (back) return j == n;
    }
    return false;
}

PeriodBoundReport verify_period_bound(const PolySelfMap& map, std::span<const mpz_class> x, std::uint64_t n,
                                      int p) {
    if (!certify_exact_period(map, x, n))
        throw DomainError("point is not exactly periodic with period " + std::to_string(n));
    EtaleCertificate cert = check_etale(map, p);
    if (!cert.etale) throw DomainError("map is not etale at p = " + std::to_string(p));
    const int g = map.dimension();
    BoundInput in;
    in.p = p;
    in.e = 1;
    in.g = g;
    in.q = p;
    mpz_ui_pow_ui(in.n_points.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(g));
    PeriodBoundReport rep;
    rep.period = n;
    rep.p = p;
    rep.bound = orbit_length_bound(in);
    rep.pass = mpz_class(static_cast<unsigned long>(n)) <= rep.bound;
    return rep;
}

// ---------------------------------------------------------------------------

SubvarietyModel::SubvarietyModel(std::vector<IntPoly> generators, IntPoint sample)
    : generators_(std::move(generators)), sample_(std::move(sample)) {
    for (const auto& f : generators_) {
        if (f.variables() != static_cast<int>(sample_.size()))
            throw ParameterError("generator and sample point differ in dimension");
        if (f.evaluate(sample_) != 0) throw DomainError("sample point does not lie on the subvariety");
    }
}

SubvarietyOrbitReport subvariety_orbit(const PolySelfMap& map, const SubvarietyModel& Y, int k,
                                       std::uint64_t n_max, std::uint64_t budget) {
    if (!map.inverse()) throw ParameterError("subvariety orbits need the inverse map");
    const int g = map.dimension();
    if (Y.sample().size() != static_cast<std::size_t>(g)) throw ParameterError("subvariety in the wrong dimension");
    if (k < 1) throw ParameterError("k must be positive");
    const std::uint64_t m = checked_pow(static_cast<std::uint64_t>(map.p()), static_cast<unsigned>(k));
    const std::uint64_t size = space_size(m, g, budget);

    // Tables of the inverse, checked against the forward map.
    std::vector<ResiduePoint> points;
    points.reserve(size);
    std::vector<std::uint64_t> inv(size);
    ResiduePoint x(static_cast<std::size_t>(g), 0);
    do {
        ResiduePoint y = map.apply_inverse_mod(x, m);
        if (map.apply_mod(y, m) != x) throw DomainError("the inverse does not invert the map mod p^k");
        inv[encode(x, m)] = encode(y, m);
        points.push_back(x);
    } while (next_point(x, m));

    std::vector<bool> on_y(size);
    for (std::uint64_t c = 0; c < size; ++c) {
        const ResiduePoint& pt = points[c];
        on_y[encode(pt, m)] = std::all_of(Y.generators().begin(), Y.generators().end(),
                                          [&](const IntPoly& f) { return f.evaluate_mod(pt, m) == 0; });
    }

    SubvarietyOrbitReport rep;
    rep.modulus = m;
    rep.n_max = n_max;
    rep.zero_set_size = static_cast<std::uint64_t>(std::count(on_y.begin(), on_y.end(), true));

    // Z_n = { y : inverse^n(y) in Y }; back[c] holds inverse^n of point c.
    std::vector<std::uint64_t> back(size);
    for (std::uint64_t c = 0; c < size; ++c) back[c] = c;
    std::map<std::vector<bool>, std::uint64_t> seen;
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        std::vector<bool> zn(size);
        for (std::uint64_t c = 0; c < size; ++c) zn[c] = on_y[back[c]];
        auto [it, inserted] = seen.emplace(std::move(zn), n);
        if (!inserted) {
            rep.detected = true;
            rep.tail = it->second;
            rep.cycle = n - it->second;
            return rep;
        }
        for (auto& b : back) b = inv[b];
    }
    return rep;
}

}  // namespace padorb
