#pragma once

#include <concepts>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "numeric.hpp"

namespace catalan {

// Capability record for a Euclidean domain with computable irreducible
// factorizations. divrem(a, b) must return (q, r) with a = b q + r and
// either r = 0 or measure(r) < measure(b); canonical_associate picks one
// fixed representative per associate class; factor returns irreducibles
// (not necessarily canonical) whose product is associate to the input;
// unit_nth_root(u, k) gives v with v^k = u when one exists.
template <typename D>
concept Domain = requires(const typename D::Element& a, const typename D::Element& b,
                          unsigned long k) {
    typename D::Element;
    { D::name() } -> std::convertible_to<std::string>;
    { D::zero() } -> std::same_as<typename D::Element>;
    { D::one() } -> std::same_as<typename D::Element>;
    { D::add(a, b) } -> std::same_as<typename D::Element>;
    { D::negate(a) } -> std::same_as<typename D::Element>;
    { D::mul(a, b) } -> std::same_as<typename D::Element>;
    {
        D::divrem(a, b)
    } -> std::same_as<std::pair<typename D::Element, typename D::Element>>;
    { D::is_zero(a) } -> std::same_as<bool>;
    { D::is_unit(a) } -> std::same_as<bool>;
    { D::equal(a, b) } -> std::same_as<bool>;
    { D::less(a, b) } -> std::same_as<bool>;
    { D::canonical_associate(a) } -> std::same_as<typename D::Element>;
    { D::factor(a) } -> std::same_as<std::vector<typename D::Element>>;
    { D::unit_nth_root(a, k) } -> std::same_as<std::optional<typename D::Element>>;
    { D::to_string(a) } -> std::same_as<std::string>;
};

template <typename D>
struct DomainLess {
    bool operator()(const typename D::Element& a, const typename D::Element& b) const {
        return D::less(a, b);
    }
};

// Irreducible factorization: one unit plus a finite map from canonical
// irreducible representatives to positive multiplicities. The map is empty
// exactly for units.
template <Domain D>
struct Factorization {
    using Element = typename D::Element;
    Element unit = D::one();
    std::map<Element, unsigned long, DomainLess<D>> factors;

    bool operator==(const Factorization& o) const {
        if (!D::equal(unit, o.unit) || factors.size() != o.factors.size()) return false;
        auto it = o.factors.begin();
        for (const auto& [k, m] : factors) {
            if (!D::equal(k, it->first) || m != it->second) return false;
            ++it;
        }
        return true;
    }
};

template <Domain D>
typename D::Element sub(const typename D::Element& a, const typename D::Element& b) {
    return D::add(a, D::negate(b));
}

template <Domain D>
typename D::Element pow_elem(typename D::Element base, unsigned long e) {
    typename D::Element acc = D::one();
    while (e > 0) {
        if (e & 1) acc = D::mul(acc, base);
        e >>= 1;
        if (e > 0) base = D::mul(base, base);
    }
    return acc;
}

template <Domain D>
bool divides_elem(const typename D::Element& a, const typename D::Element& b) {
    if (D::is_zero(a)) return D::is_zero(b);
    auto [q, r] = D::divrem(b, a);
    return D::is_zero(r);
}

template <Domain D>
typename D::Element div_exact(const typename D::Element& a, const typename D::Element& b) {
    require(!D::is_zero(b), "exact division by zero");
    auto [q, r] = D::divrem(a, b);
    verify(D::is_zero(r), "exact division left a remainder in " + D::name());
    return q;
}

// The unit u with a = u * b, for associates a ~ b.
template <Domain D>
typename D::Element unit_between(const typename D::Element& a, const typename D::Element& b) {
    if (D::is_zero(a) && D::is_zero(b)) return D::one();
    typename D::Element u = div_exact<D>(a, b);
    verify(D::is_unit(u), "elements are not associates in " + D::name());
    return u;
}

template <Domain D>
typename D::Element unit_inverse(const typename D::Element& u) {
    require(D::is_unit(u), "inverse of a non-unit");
    return div_exact<D>(D::one(), u);
}

template <Domain D>
bool associates(const typename D::Element& a, const typename D::Element& b) {
    if (D::is_zero(a) || D::is_zero(b)) return D::is_zero(a) && D::is_zero(b);
    if (!divides_elem<D>(b, a)) return false;
    return D::is_unit(div_exact<D>(a, b));
}

// Euclidean gcd, returned as the canonical associate.
template <Domain D>
typename D::Element gcd_elem(typename D::Element a, typename D::Element b) {
    require(!D::is_zero(a) || !D::is_zero(b), "gcd(0, 0) does not exist");
    while (!D::is_zero(b)) {
        auto [q, r] = D::divrem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return D::canonical_associate(a);
}

template <Domain D>
bool coprime(const typename D::Element& a, const typename D::Element& b) {
    if (D::is_zero(a) && D::is_zero(b)) return false;
    return D::is_unit(gcd_elem<D>(a, b));
}

// Bachet's identity: coefficients (c, d) with c a + d b = 1, by the extended
// Euclidean algorithm. Inputs must be coprime and not both zero.
template <Domain D>
std::pair<typename D::Element, typename D::Element> bachet(const typename D::Element& a,
                                                           const typename D::Element& b) {
    using E = typename D::Element;
    require(!D::is_zero(a) || !D::is_zero(b), "bachet on (0, 0)");
    E old_r = a, r = b;
    E old_s = D::one(), s = D::zero();
    E old_t = D::zero(), t = D::one();
    while (!D::is_zero(r)) {
        auto [q, rem] = D::divrem(old_r, r);
        old_r = std::move(r);
        r = std::move(rem);
        E s_next = sub<D>(old_s, D::mul(q, s));
        old_s = std::move(s);
        s = std::move(s_next);
        E t_next = sub<D>(old_t, D::mul(q, t));
        old_t = std::move(t);
        t = std::move(t_next);
    }
    require(D::is_unit(old_r), "bachet requires coprime inputs");
    E v = unit_inverse<D>(old_r);
    E c = D::mul(v, old_s);
    E d = D::mul(v, old_t);
    verify(D::equal(D::add(D::mul(c, a), D::mul(d, b)), D::one()),
           "bachet coefficients failed to verify");
    return {std::move(c), std::move(d)};
}

template <Domain D>
typename D::Element reconstruct(const Factorization<D>& f) {
    typename D::Element prod = f.unit;
    for (const auto& [irr, mult] : f.factors) prod = D::mul(prod, pow_elem<D>(irr, mult));
    return prod;
}

template <Domain D>
Factorization<D> factorize(const typename D::Element& a) {
    require(!D::is_zero(a), "factorization of zero");
    Factorization<D> f;
    for (const auto& irr : D::factor(a)) {
        verify(!D::is_unit(irr) && !D::is_zero(irr), "factor list contains a non-irreducible");
        f.factors[D::canonical_associate(irr)] += 1;
    }
    typename D::Element prod = D::one();
    for (const auto& [irr, mult] : f.factors) prod = D::mul(prod, pow_elem<D>(irr, mult));
    f.unit = div_exact<D>(a, prod);
    verify(D::is_unit(f.unit), "factorization does not reconstruct a unit cofactor");
    return f;
}

template <Domain D>
bool divides(const Factorization<D>& x, const Factorization<D>& y) {
    for (const auto& [irr, mult] : x.factors) {
        auto it = y.factors.find(irr);
        if (it == y.factors.end() || mult > it->second) return false;
    }
    return true;
}

template <Domain D>
Factorization<D> gcd_fact(const Factorization<D>& x, const Factorization<D>& y) {
    Factorization<D> g;
    for (const auto& [irr, mult] : x.factors) {
        auto it = y.factors.find(irr);
        if (it != y.factors.end()) g.factors[irr] = std::min(mult, it->second);
    }
    return g;
}

// Power extraction from a coprime product: given pairwise coprime parts whose
// product is an l-th power up to a unit, produces pairwise coprime roots b_i
// with part_i ~ b_i^l. Whenever the leftover unit has an l-th root (always in
// Z for odd l), the witness is exact: part_i == b_i^l.
template <Domain D>
std::vector<typename D::Element> pp1_extract(const std::vector<typename D::Element>& parts,
                                             unsigned long l) {
    using E = typename D::Element;
    require(l >= 2, "power extraction needs l >= 2");
    require(!parts.empty(), "power extraction on an empty list");

    for (size_t i = 0; i < parts.size(); ++i)
        for (size_t j = i + 1; j < parts.size(); ++j)
            require(coprime<D>(parts[i], parts[j]),
                    "parts " + std::to_string(i) + " and " + std::to_string(j) +
                        " are not coprime");

    size_t zeros = 0;
    for (const auto& p : parts)
        if (D::is_zero(p)) ++zeros;

    std::vector<E> roots;
    roots.reserve(parts.size());
    if (zeros > 0) {
        // Coprimality forces every other part to be a unit; 0 = 0^l.
        for (const auto& p : parts) {
            if (D::is_zero(p)) {
                roots.push_back(D::zero());
            } else {
                verify(D::is_unit(p), "zero part next to a non-unit part");
                auto r = D::unit_nth_root(p, l);
                roots.push_back(r ? *r : D::one());
            }
        }
    } else {
        for (size_t i = 0; i < parts.size(); ++i) {
            if (D::is_unit(parts[i])) {
                auto r = D::unit_nth_root(parts[i], l);
                roots.push_back(r ? *r : D::one());
                continue;
            }
            Factorization<D> f = factorize<D>(parts[i]);
            E b = D::one();
            for (const auto& [irr, mult] : f.factors) {
                if (mult % l != 0)
                    throw rejected_input("product is not an l-th power: irreducible " +
                                         D::to_string(irr) + " carries multiplicity " +
                                         std::to_string(mult) + " in part " +
                                         std::to_string(i));
                b = D::mul(b, pow_elem<D>(irr, mult / l));
            }
            E u = unit_between<D>(parts[i], pow_elem<D>(b, l));
            if (auto v = D::unit_nth_root(u, l)) b = D::mul(*v, b);
            roots.push_back(std::move(b));
        }
    }

    for (size_t i = 0; i < parts.size(); ++i)
        verify(associates<D>(parts[i], pow_elem<D>(roots[i], l)),
               "extracted root does not reproduce its part");
    return roots;
}

// Power extraction across a gcd ~ p: from gcd(a, b) ~ p and a b ~ c^k,
// produces coprime (d, e) with {a, b} ~ {p d^k, p^{k-1} e^k}. The flag
// records which input carries the single factor p (the "p d^k" slot).
template <Domain D>
struct Pp2Result {
    typename D::Element d;
    typename D::Element e;
    bool a_carries_single_p = true;
};

template <Domain D>
Pp2Result<D> pp2_extract(const typename D::Element& a, const typename D::Element& b,
                         const typename D::Element& p, unsigned long k) {
    using E = typename D::Element;
    require(k >= 2, "power extraction needs k >= 2");
    require(!D::is_zero(p) && !D::is_unit(p), "p must be irreducible");
    {
        Factorization<D> pf = factorize<D>(p);
        require(pf.factors.size() == 1 && pf.factors.begin()->second == 1,
                "p must be irreducible");
    }
    require(!(D::is_zero(a) && D::is_zero(b)), "both inputs are zero");

    E cp = D::canonical_associate(p);

    if (D::is_zero(a) || D::is_zero(b)) {
        // gcd(0, x) = x, so the nonzero input must be associate to p;
        // then 0 = p^{k-1} 0^k and p = p 1^k.
        const E& nonzero = D::is_zero(a) ? b : a;
        require(associates<D>(nonzero, p), "gcd is not associate to p");
        Pp2Result<D> res{D::one(), D::zero(), !D::is_zero(a)};
        return res;
    }

    Factorization<D> fa = factorize<D>(a);
    Factorization<D> fb = factorize<D>(b);

    // Shared support must be exactly {p}, with 1 as the smaller multiplicity.
    for (const auto& [irr, mult] : fa.factors) {
        auto it = fb.factors.find(irr);
        if (it == fb.factors.end()) continue;
        require(D::equal(irr, cp), "gcd has an irreducible besides p: " + D::to_string(irr));
    }
    auto ita = fa.factors.find(cp);
    auto itb = fb.factors.find(cp);
    require(ita != fa.factors.end() && itb != fb.factors.end(),
            "gcd is not associate to p");
    require(std::min(ita->second, itb->second) == 1, "gcd is not associate to p");

    bool a_single = ita->second == 1;
    const Factorization<D>& fs = a_single ? fa : fb; // the p d^k side
    const Factorization<D>& fm = a_single ? fb : fa; // the p^{k-1} e^k side

    unsigned long m = (a_single ? itb : ita)->second;
    if ((m + 1) % k != 0)
        throw rejected_input("product is not a k-th power: p carries multiplicity " +
                             std::to_string(m + 1));
    unsigned long m0 = (m - (k - 1)) / k;

    auto build = [&](const Factorization<D>& f, unsigned long extra_p) {
        E out = pow_elem<D>(cp, extra_p);
        for (const auto& [irr, mult] : f.factors) {
            if (D::equal(irr, cp)) continue;
            if (mult % k != 0)
                throw rejected_input("product is not a k-th power: irreducible " +
                                     D::to_string(irr) + " carries multiplicity " +
                                     std::to_string(mult));
            out = D::mul(out, pow_elem<D>(irr, mult / k));
        }
        return out;
    };

    E d = build(fs, 0);
    E e = build(fm, m0);

    const E& a_side = a_single ? a : b;
    const E& b_side = a_single ? b : a;
    E u = unit_between<D>(a_side, D::mul(p, pow_elem<D>(d, k)));
    if (auto v = D::unit_nth_root(u, k)) d = D::mul(*v, d);
    E w = unit_between<D>(b_side, D::mul(pow_elem<D>(p, k - 1), pow_elem<D>(e, k)));
    if (auto v = D::unit_nth_root(w, k)) e = D::mul(*v, e);

    verify(coprime<D>(d, e), "extracted pair is not coprime");
    verify(associates<D>(a_side, D::mul(p, pow_elem<D>(d, k))),
           "p d^k side does not reconstruct");
    verify(associates<D>(b_side, D::mul(pow_elem<D>(p, k - 1), pow_elem<D>(e, k))),
           "p^{k-1} e^k side does not reconstruct");

    return Pp2Result<D>{std::move(d), std::move(e), a_single};
}

} // namespace catalan
