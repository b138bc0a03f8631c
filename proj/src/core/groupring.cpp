#include "groupring.hpp"

namespace catalan {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<unsigned> cyclic_orders)
    : orders_(std::move(cyclic_orders)) {
    require(!orders_.empty(), "group needs at least one cyclic factor");
    for (unsigned n : orders_) require(n >= 2, "cyclic orders must be at least 2");
}

size_t FiniteAbelianGroup::size() const {
    size_t n = 1;
    for (unsigned o : orders_) n *= o;
    return n;
}

FiniteAbelianGroup::Elem FiniteAbelianGroup::identity() const {
    return Elem(orders_.size(), 0);
}

FiniteAbelianGroup::Elem FiniteAbelianGroup::op(const Elem& a, const Elem& b) const {
    require(valid(a) && valid(b), "group element out of range");
    Elem c(orders_.size());
    for (size_t i = 0; i < orders_.size(); ++i) c[i] = (a[i] + b[i]) % orders_[i];
    return c;
}

bool FiniteAbelianGroup::valid(const Elem& a) const {
    if (a.size() != orders_.size()) return false;
    for (size_t i = 0; i < orders_.size(); ++i)
        if (a[i] >= orders_[i]) return false;
    return true;
}

std::vector<FiniteAbelianGroup::Elem> FiniteAbelianGroup::elements() const {
    std::vector<Elem> out;
    Elem cur = identity();
    for (;;) {
        out.push_back(cur);
        size_t i = orders_.size();
        while (i > 0) {
            --i;
            if (++cur[i] < orders_[i]) break;
            cur[i] = 0;
            if (i == 0) return out;
        }
    }
}

std::string group_elem_str(const FiniteAbelianGroup::Elem& e) {
    std::string out = "(";
    for (size_t i = 0; i < e.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(e[i]);
    }
    return out + ")";
}

GroupRingElement::GroupRingElement(FiniteAbelianGroup group) : group_(std::move(group)) {}

GroupRingElement GroupRingElement::zero(const FiniteAbelianGroup& g) {
    return GroupRingElement(g);
}

GroupRingElement GroupRingElement::one(const FiniteAbelianGroup& g) {
    GroupRingElement e(g);
    e.add_term(g.identity(), 1);
    return e;
}

GroupRingElement GroupRingElement::monomial(const FiniteAbelianGroup& g,
                                            const FiniteAbelianGroup::Elem& e,
                                            const Int& c) {
    GroupRingElement x(g);
    x.add_term(e, c);
    return x;
}

Int GroupRingElement::coefficient(const FiniteAbelianGroup::Elem& e) const {
    auto it = coeff_.find(e);
    return it == coeff_.end() ? Int(0) : it->second;
}

void GroupRingElement::add_term(const FiniteAbelianGroup::Elem& e, const Int& c) {
    require(group_.valid(e), "coefficient at an element outside the group");
    if (c == 0) return;
    Int& slot = coeff_[e];
    slot += c;
    if (slot == 0) coeff_.erase(e);
}

namespace {

void require_same_group(const GroupRingElement& x, const GroupRingElement& y) {
    require(x.group() == y.group(), "group ring elements over different groups");
}

} // namespace

GroupRingElement gr_add(const GroupRingElement& x, const GroupRingElement& y) {
    require_same_group(x, y);
    GroupRingElement out = x;
    for (const auto& [e, c] : y.coefficients()) out.add_term(e, c);
    return out;
}

GroupRingElement gr_neg(const GroupRingElement& x) {
    GroupRingElement out(x.group());
    for (const auto& [e, c] : x.coefficients()) out.add_term(e, -c);
    return out;
}

GroupRingElement gr_sub(const GroupRingElement& x, const GroupRingElement& y) {
    return gr_add(x, gr_neg(y));
}

GroupRingElement gr_mul(const GroupRingElement& x, const GroupRingElement& y) {
    require_same_group(x, y);
    GroupRingElement out(x.group());
    for (const auto& [e, c] : x.coefficients())
        for (const auto& [f, d] : y.coefficients())
            out.add_term(x.group().op(e, f), c * d);
    return out;
}

std::string gr_str(const GroupRingElement& x) {
    if (x.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : x.coefficients()) {
        if (!out.empty()) out += " + ";
        out += c.get_str() + "*" + group_elem_str(e);
    }
    return out;
}

} // namespace catalan
