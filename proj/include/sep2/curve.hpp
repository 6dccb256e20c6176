#pragma once

#include <array>
#include <string>

#include "sep2/word.hpp"

namespace sep2 {

struct NotSimple : WordError {
    NotSimple() : WordError("NotSimple: word is not a simple closed curve class") {}
};

/// A verified essential simple closed curve: a primitive cyclic word with
/// zero self-intersection, plus cached class data.
class Curve {
public:
    static Curve make(const Word& raw);           // throws EmptyWord/NonPrimitive/NotSimple
    static Curve make(const CyclicWord& w);

    const CyclicWord& word() const { return word_; }
    const std::array<int, 4>& homology() const { return homology_; }
    bool separating() const { return separating_; }
    const Word& key() const { return key_; }      // unoriented class key

    bool operator==(const Curve& o) const { return key_ == o.key_; }
    bool operator!=(const Curve& o) const { return key_ != o.key_; }
    bool operator<(const Curve& o) const { return key_ < o.key_; }

private:
    Curve() = default;
    CyclicWord word_;
    std::array<int, 4> homology_{};
    bool separating_ = false;
    Word key_;
};

/// Geometric intersection number of two simple curves; isotopic curves are
/// disjoint.
int intersection_number(const Curve& u, const Curve& v);

bool disjoint(const Curve& u, const Curve& v);

} // namespace sep2
