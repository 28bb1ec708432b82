// kupresent.hpp
//
// Weight-graded presentations of the ku-homology of B(Z/2^e) and of the
// tensor product for B(Z/2^k x Z/2^e).
//
// The coefficient ring is Z[v1] with v1 of weight 1.  The free module
// underlying the tensor presentation has basis pairs (a,b) of weight
// a+b; the homogeneous piece of weight w therefore has one generator
// v1^(w-a-b) (a,b) per pair with a+b <= w.  Relation columns come from
// the 2^e-series (1+v1 x)^(2^e) - 1 acting on either tensor factor:
// the factor acting on the second coordinate contributes
//     sum_s C(2^e, s+1) v1^s (a, b-s),
// the one acting on the first coordinate the mirror image with 2^k.
// Terms with a negative coordinate vanish.

#pragma once

#include <kutoral/zlinalg.hpp>

#include <map>
#include <string>
#include <vector>

namespace kutoral {

// A coefficient-ring monomial c * v1^q.
struct KuTerm {
    Int coeff;
    long vpow = 0;

    bool is_zero() const { return coeff == 0; }
    std::string str() const
    {
        std::string s = coeff.str();
        if (vpow == 1)
            s += "*v1";
        else if (vpow > 1)
            s += "*v1^" + std::to_string(vpow);
        return s;
    }
};

struct BasisPair {
    long a = 0;
    long b = 0;
    auto operator<=>(const BasisPair&) const = default;
};

// A homogeneous element of the tensor presentation at a fixed weight.
// The key (a,b) carries the monomial v1^(weight-a-b) (a,b).
struct GradedVector {
    long weight = 0;
    std::map<BasisPair, Int> coeffs;

    void add(long a, long b, const Int& c)
    {
        if (c == 0)
            return;
        if (a < 0 || b < 0)
            return; // out-of-range generators vanish
        if (a + b > weight)
            throw std::invalid_argument("GradedVector: key exceeds weight");
        Int& slot = coeffs[BasisPair{a, b}];
        slot += c;
        if (slot == 0)
            coeffs.erase(BasisPair{a, b});
    }
};

struct PresentationSpec {
    long k = 1;
    long e = 1;
};

// Coefficients c_1..c_{2^e} of the 2^e-series: c_i = C(2^e, i), so that
// the series is sum_i c_i v1^(i-1) x^i.
inline std::vector<Int> two_series_coeffs(long e)
{
    if (e < 1)
        throw std::invalid_argument("two_series_coeffs: e must be >= 1");
    Int top = pow2(e);
    std::vector<Int> c;
    for (Int i = 1; i <= top; ++i)
        c.push_back(binom(top, i));
    return c;
}

namespace detail {

// sum_s C(2^t, s+1) v1^(w-alpha-beta+s) applied to the chosen coordinate
inline GradedVector relation_vector(long two_pow, long alpha, long beta, long weight,
                                    bool first_coordinate)
{
    if (alpha < 0 || beta < 0)
        throw std::invalid_argument("relation_vector: negative index");
    if (alpha + beta > weight)
        throw std::invalid_argument("relation_vector: alpha+beta exceeds weight");
    GradedVector v;
    v.weight = weight;
    Int top = pow2(two_pow);
    for (Int s = 0; s < top; ++s) {
        long ss = static_cast<long>(s);
        Int c = binom(top, s + 1);
        if (first_coordinate)
            v.add(alpha - ss, beta, c);
        else
            v.add(alpha, beta - ss, c);
    }
    return v;
}

} // namespace detail

inline GradedVector relation_vector_first(const PresentationSpec& spec, long alpha,
                                          long beta, long weight)
{
    return detail::relation_vector(spec.k, alpha, beta, weight, true);
}

inline GradedVector relation_vector_second(const PresentationSpec& spec, long alpha,
                                           long beta, long weight)
{
    return detail::relation_vector(spec.e, alpha, beta, weight, false);
}

// All pairs (a,b) with a+b <= weight, ordered by (a+b, a).
inline std::vector<BasisPair> weight_basis(long weight)
{
    std::vector<BasisPair> basis;
    for (long s = 0; s <= weight; ++s)
        for (long a = 0; a <= s; ++a)
            basis.push_back(BasisPair{a, s - a});
    return basis;
}

// Index of (a,b) in weight_basis order.
inline std::size_t basis_index(const BasisPair& p)
{
    long s = p.a + p.b;
    return static_cast<std::size_t>(s * (s + 1) / 2 + p.a);
}

inline std::vector<Int> to_column(const GradedVector& v)
{
    std::size_t n = static_cast<std::size_t>((v.weight + 1) * (v.weight + 2) / 2);
    std::vector<Int> col(n);
    for (const auto& [key, c] : v.coeffs)
        col[basis_index(key)] = c;
    return col;
}

// The full relation matrix of the graded piece: one first-factor and
// one second-factor column per pair (alpha, beta) with
// alpha+beta <= weight, over the weight_basis row order.  First-factor
// columns come first, each block in basis order.
inline ExactMatrix relation_matrix(const PresentationSpec& spec, long weight)
{
    std::vector<BasisPair> basis = weight_basis(weight);
    std::size_t n = basis.size();
    ExactMatrix m(n, 2 * n);
    for (std::size_t j = 0; j < n; ++j) {
        auto colf = to_column(relation_vector_first(spec, basis[j].a, basis[j].b, weight));
        auto cols = to_column(relation_vector_second(spec, basis[j].a, basis[j].b, weight));
        for (std::size_t i = 0; i < n; ++i) {
            m.at(i, j) = colf[i];
            m.at(i, n + j) = cols[i];
        }
    }
    return m;
}

// One-variable analogue for ku-homology of B(Z/2^e): basis (i) for
// i <= weight carrying v1^(weight-i) (i), one relation column per i.
inline ExactMatrix single_factor_matrix(long e, long weight)
{
    if (e < 1)
        throw std::invalid_argument("single_factor_matrix: e must be >= 1");
    std::size_t n = static_cast<std::size_t>(weight + 1);
    ExactMatrix m(n, n);
    Int top = pow2(e);
    for (long alpha = 0; alpha <= weight; ++alpha)
        for (Int s = 0; s < top; ++s) {
            long i = alpha - static_cast<long>(s);
            if (i < 0)
                break;
            m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(alpha)) =
                binom(top, s + 1);
        }
    return m;
}

inline std::vector<Int> single_graded_invariants(long e, long weight)
{
    ExactMatrix m = single_factor_matrix(e, weight);
    return invariant_factors(m, m.rows());
}

} // namespace kutoral
