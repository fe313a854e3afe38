#pragma once

// Truncated multivariate power-series tuples over o = Z_p[pi]/(pi^e - p, p^N).
//
// A SeriesTuple is a g-tuple (F_1, ..., F_g) of power series in z_1..z_g,
// each kept up to total degree D.  Coefficients are stored sparsely; only
// nonzero terms are kept.
//
// Composition truncates every intermediate product at degree D.  This is
// exact at working precision whenever the dropped terms vanish mod p^N,
// which holds for tuples with no constant term and for scaled tuples
// (degree-d coefficients of pi-valuation >= d - 1) with D >= eN.

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "padorb/modular.hpp"
#include "padorb/ring.hpp"

namespace padorb {

inline constexpr int kMaxVariables = 8;

struct Monomial {
    std::array<std::uint8_t, kMaxVariables> exps{};

    static Monomial unit(int var) {
        Monomial m;
        m.exps[static_cast<std::size_t>(var)] = 1;
        return m;
    }
    static Monomial of(std::initializer_list<int> e);

    int degree() const;
    auto operator<=>(const Monomial&) const = default;
};

class MonomialIndex;
class SeriesTuple;

/// One component: a sparse truncated power series.
class Series {
public:
    using Term = std::pair<Monomial, PadicScalar>;

    Series() = default;

    const std::vector<Term>& terms() const { return terms_; }
    /// Coefficient of m, or nullptr when it is zero.
    const PadicScalar* find(const Monomial& m) const;

private:
    friend class SeriesTuple;
    friend bool operator==(const SeriesTuple&, const SeriesTuple&);
    friend SeriesTuple compose(const SeriesTuple&, const SeriesTuple&);
    std::vector<Term> terms_;  // sorted by monomial, nonzero coefficients only
};

class SeriesTuple {
public:
    /// The zero tuple.  Throws ParameterError unless 1 <= g <= kMaxVariables, D >= 1.
    SeriesTuple(const RingParams& params, int g, int D);

    static SeriesTuple identity(const RingParams& params, int g, int D);
    /// z |-> C + L z.
    static SeriesTuple affine(std::span<const PadicScalar> translation,
                              const std::vector<std::vector<PadicScalar>>& matrix, int D);

    const RingParams& params() const { return params_; }
    int dimension() const { return g_; }
    int degree_cap() const { return D_; }

    const Series& component(int i) const { return components_.at(static_cast<std::size_t>(i)); }
    PadicScalar coefficient(int i, const Monomial& m) const;
    /// Sets a coefficient; terms above the degree cap are silently dropped.
    void set(int i, const Monomial& m, const PadicScalar& c);
    void add(int i, const Monomial& m, const PadicScalar& c);

    std::size_t term_count() const;

    /// (F_1(x), ..., F_g(x)).
    std::vector<PadicScalar> evaluate(std::span<const PadicScalar> x) const;

    /// Same tuple with a different degree cap (dropping terms above it).
    SeriesTuple with_degree_cap(int D) const;
    /// Every coefficient replaced by its class mod pi^t.
    SeriesTuple reduced_mod_pi(int t) const;

    /// True iff every degree-d coefficient with d <= max_degree has
    /// pi-valuation >= d - 1 (max_degree < 0 means all stored terms).
    bool is_scaled(int max_degree = -1) const;

    friend bool operator==(const SeriesTuple& a, const SeriesTuple& b);

    const MonomialIndex& index() const { return *index_; }

private:
    friend SeriesTuple compose(const SeriesTuple&, const SeriesTuple&);

    RingParams params_;
    int g_;
    int D_;
    std::shared_ptr<const MonomialIndex> index_;
    std::vector<Series> components_;
};

/// Dense enumeration of the monomials of degree <= D in g variables.
class MonomialIndex {
public:
    MonomialIndex(int g, int D);

    static std::shared_ptr<const MonomialIndex> get(int g, int D);

    std::size_t size() const { return monomials_.size(); }
    const Monomial& monomial(std::size_t i) const { return monomials_[i]; }
    int degree(std::size_t i) const { return degrees_[i]; }
    std::uint64_t code(std::size_t i) const { return codes_[i]; }
    /// Index of the monomial with the given code; the code must be valid.
    std::size_t lookup(std::uint64_t code) const;
    std::size_t index_of(const Monomial& m) const;

private:
    int g_;
    int D_;
    std::vector<Monomial> monomials_;
    std::vector<int> degrees_;
    std::vector<std::uint64_t> codes_;
    std::vector<std::uint32_t> table_;
};

/// F o G, truncated at the common degree cap.
SeriesTuple compose(const SeriesTuple& F, const SeriesTuple& G);

/// m-fold self-composition; iterate(F, 0) is the identity.
SeriesTuple iterate(const SeriesTuple& F, std::uint64_t m);

/// Translation C and matrix L read from the degree-0 and degree-1 coefficients.
struct LinearData {
    std::vector<PadicScalar> translation;
    std::vector<std::vector<PadicScalar>> matrix;
};

LinearData linear_part(const SeriesTuple& F);

/// Reduction mod pi of z |-> C + L z, an element of the affine group over F_p.
struct AffineResidue {
    std::vector<std::uint64_t> translation;
    ModMatrix matrix;

    friend bool operator==(const AffineResidue&, const AffineResidue&) = default;
};

AffineResidue affine_residue(const LinearData& data);
/// Composition a o b in the affine group of F_p^g.
AffineResidue affine_product(const AffineResidue& a, const AffineResidue& b, std::uint64_t p);

/// True iff every coefficient of F - G has pi-valuation >= t.  Requires 1 <= t <= eN.
bool congruent_mod(const SeriesTuple& F, const SeriesTuple& G, int t);

/// Reduction of a tuple congruent to the identity mod pi into
/// ((o / pi^{e+1})[[z]] / (z)^{e+2})^g.  The result has degree cap e + 1.
/// Throws DomainError unless F = id mod pi and its retained terms are scaled.
SeriesTuple fingerprint(const SeriesTuple& F);

/// Composition of two fingerprints inside the truncated ring.
SeriesTuple compose_fingerprints(const SeriesTuple& A, const SeriesTuple& B);

struct BoundCheckReport {
    int r = 0;
    std::uint64_t m = 0;
    int t = 0;
    bool pass = false;
};

/// Checks F^m = id mod pi^t with m = p^{1+r} #GL_g(F_p) and t the least
/// exponent with t/e > 1/(p-1).  Throws DomainError when the linear part is
/// not invertible mod pi or a nonlinear coefficient is a unit, and
/// ParameterError when D < eN.
BoundCheckReport verify_mikes_bound(const SeriesTuple& F);

}  // namespace padorb
