#include "sep2/curve.hpp"

#include "sep2/intersect.hpp"

namespace sep2 {

Curve Curve::make(const CyclicWord& w) {
    if (!is_primitive(w)) throw NonPrimitive();
    if (self_intersection(w) != 0) throw NotSimple();
    Curve c;
    c.word_ = w;
    c.homology_ = homology_class(w);
    c.separating_ = (c.homology_ == std::array<int, 4>{0, 0, 0, 0});
    c.key_ = conjugacy_key_unoriented(w);
    return c;
}

Curve Curve::make(const Word& raw) { return make(CyclicWord(raw)); }

int intersection_number(const Curve& u, const Curve& v) {
    if (u.key() == v.key()) return 0;
    return intersection_number_classes(u.word(), v.word());
}

bool disjoint(const Curve& u, const Curve& v) { return intersection_number(u, v) == 0; }

} // namespace sep2
