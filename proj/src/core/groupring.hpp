#pragma once

#include <map>
#include <vector>

#include "numeric.hpp"

namespace catalan {

// Finite abelian group presented as a product of cyclic groups, written
// multiplicatively. Elements are coordinate tuples reduced into [0, order).
class FiniteAbelianGroup {
public:
    using Elem = std::vector<unsigned>;

    explicit FiniteAbelianGroup(std::vector<unsigned> cyclic_orders);

    const std::vector<unsigned>& cyclic_orders() const { return orders_; }
    size_t size() const;
    Elem identity() const;
    Elem op(const Elem& a, const Elem& b) const;
    bool valid(const Elem& a) const;
    std::vector<Elem> elements() const; // lexicographic

    bool operator==(const FiniteAbelianGroup& o) const { return orders_ == o.orders_; }
    bool operator!=(const FiniteAbelianGroup& o) const { return !(*this == o); }

private:
    std::vector<unsigned> orders_;
};

std::string group_elem_str(const FiniteAbelianGroup::Elem& e);

// Finitely supported integer coefficient function on a group; zero
// coefficients are never stored.
class GroupRingElement {
public:
    explicit GroupRingElement(FiniteAbelianGroup group);

    static GroupRingElement zero(const FiniteAbelianGroup& g);
    static GroupRingElement one(const FiniteAbelianGroup& g);
    static GroupRingElement monomial(const FiniteAbelianGroup& g,
                                     const FiniteAbelianGroup::Elem& e, const Int& c);

    const FiniteAbelianGroup& group() const { return group_; }
    const std::map<FiniteAbelianGroup::Elem, Int>& coefficients() const { return coeff_; }

    Int coefficient(const FiniteAbelianGroup::Elem& e) const;
    void add_term(const FiniteAbelianGroup::Elem& e, const Int& c); // prunes zeros
    bool is_zero() const { return coeff_.empty(); }

    bool operator==(const GroupRingElement& o) const {
        return group_ == o.group_ && coeff_ == o.coeff_;
    }
    bool operator!=(const GroupRingElement& o) const { return !(*this == o); }

private:
    FiniteAbelianGroup group_;
    std::map<FiniteAbelianGroup::Elem, Int> coeff_;
};

GroupRingElement gr_add(const GroupRingElement& x, const GroupRingElement& y);
GroupRingElement gr_neg(const GroupRingElement& x);
GroupRingElement gr_sub(const GroupRingElement& x, const GroupRingElement& y);
// Convolution product: (F * F')(g) = sum over e f = g of F(e) F'(f).
GroupRingElement gr_mul(const GroupRingElement& x, const GroupRingElement& y);

std::string gr_str(const GroupRingElement& x);

} // namespace catalan
