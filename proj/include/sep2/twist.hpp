#pragma once

#include <array>

#include "sep2/curve.hpp"
#include "sep2/word.hpp"

namespace sep2 {

/// Dehn twist about a simple closed curve, realized as an automorphism of the
/// surface group.  The curve's strands through the vertex are pushed off to
/// one side; a letter picks up one conjugate copy of the curve word for every
/// strand it crosses, ordered by how deeply the strand's corner arc encloses
/// the letter's germ.
class Twist {
public:
    explicit Twist(const Curve& curve);

    const Curve& curve() const { return curve_; }

    /// image of a based word under the power-th twist, freely reduced
    Word apply_to_word(Word w, int power) const;

    /// image of a free homotopy class
    CyclicWord apply_to_class(const CyclicWord& w, int power) const;
    Curve apply_to_curve(const Curve& c, int power) const;

private:
    Curve curve_;
    std::array<Word, 8> image_;      // letter images, power +1
    std::array<Word, 8> image_inv_;  // letter images, power -1
};

/// The standard chain of five simple closed curves: consecutive curves meet
/// once, all other pairs are disjoint, every curve nonseparating.  Derived by
/// bounded search and frozen; validated in the test suite.
const std::array<Curve, 5>& chain_curves();
const Twist& chain_twist(int k);  // k in [0, 5)

CyclicWord apply_chain_twist(int k, const CyclicWord& w, int power);

} // namespace sep2
