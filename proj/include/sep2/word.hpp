#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sep2 {

// Words over {a,b,c,d,A,B,C,D} in the one-relator presentation of the closed
// genus-2 surface group, relator R = abABcdCD.  Uppercase letters are
// inverses.  The presentation satisfies the small-cancellation hypothesis
// that makes Dehn's algorithm decide the word and conjugacy problems.

using Word = std::string;

struct WordError : std::runtime_error {
    explicit WordError(const std::string& what) : std::runtime_error(what) {}
};
struct EmptyWord : WordError {
    EmptyWord() : WordError("EmptyWord: word reduces to the identity") {}
};
struct NonPrimitive : WordError {
    NonPrimitive() : WordError("NonPrimitive: word is a proper power") {}
};

inline constexpr const char* kRelator = "abABcdCD";

bool is_letter(char c);
char inv_letter(char c);
int letter_index(char c);  // a..d -> 0..3, A..D -> 4..7
void check_word(const Word& w);

Word inverse_word(const Word& w);
Word free_reduce(Word w);
Word cyclic_free_reduce(Word w);

/// Element-preserving shortening: replaces any subword that is more than half
/// of a cyclic rotation of R or R^-1 by the inverse of the complementary part.
Word dehn_reduce(Word w);

/// Conjugacy-preserving shortening on the cyclic word (windows wrap).
Word cyclic_dehn_reduce(Word w);

bool is_trivial_word(const Word& w);
bool words_equal(const Word& x, const Word& y);

/// One-sided geodesic normal forms.  ccw removes every length-4 subword of a
/// rotation of R^-1 (swapping in the complementary R-sided half); cw is the
/// mirror.  Both preserve the group element and the length of geodesic words.
Word ccw_normalize(Word w);
Word cw_normalize(Word w);
bool is_ccw_normal(const Word& w);

/// A freely and cyclically reduced, Dehn-reduced word considered up to
/// rotation; stored at the lexicographically least rotation.
class CyclicWord {
public:
    CyclicWord() = default;
    explicit CyclicWord(const Word& raw);
    static CyclicWord from_cyclic_reduced(Word w);

    const Word& letters() const { return w_; }
    std::size_t size() const { return w_.size(); }
    char at(std::int64_t i) const;  // cyclic indexing, negative ok
    CyclicWord inverse() const;
    Word rotation(std::size_t i) const;

    bool operator==(const CyclicWord& o) const { return w_ == o.w_; }
    bool operator!=(const CyclicWord& o) const { return w_ != o.w_; }
    bool operator<(const CyclicWord& o) const { return w_ < o.w_; }

private:
    Word w_;
};

/// Exponent sums of (a, b, c, d); conjugation invariant.
std::array<int, 4> homology_of_word(const Word& w);
std::array<int, 4> homology_class(const CyclicWord& w);

/// Algebraic intersection pairing on H1 in the basis (a, b, c, d):
/// <a,b> = <c,d> = 1, cross-handle pairs 0.
int alg_intersection(const std::array<int, 4>& x, const std::array<int, 4>& y);

/// All minimal cyclic representatives of the conjugacy class: the closure of
/// the rotation orbit under half-relator swaps.  Returned as canonical-rotation
/// strings, sorted.
std::vector<Word> conjugacy_orbit(const CyclicWord& w, std::size_t cap = 2000000);

/// Lexicographically least element of the conjugacy orbit; class invariant.
Word conjugacy_key(const CyclicWord& w);
/// min over the keys of w and w^-1; invariant of the unoriented curve class.
Word conjugacy_key_unoriented(const CyclicWord& w);

bool is_conjugate(const CyclicWord& u, const CyclicWord& v);
bool conjugate_or_inverse(const CyclicWord& u, const CyclicWord& v);

/// False iff some minimal cyclic representative is a literal proper power.
bool is_primitive(const CyclicWord& w);

/// Cyclic CCW normal form: same conjugacy class, no R^-1-sided half anywhere
/// in the bi-infinite periodic word.
CyclicWord ccw_cycle(const CyclicWord& w);

/// Dehn-reduced word maintained under letter pushes at both ends; empty()
/// detects the identity element exactly.
class IncrementalReducedWord {
public:
    void push_back_letter(char c);
    void push_front_letter(char c);
    bool empty() const { return s_.empty(); }
    std::size_t size() const { return s_.size(); }
    const Word& str() const { return s_; }

private:
    void fix_end(bool back);
    Word s_;
};

/// All geodesic words spelling the same element: swap closure of the
/// Dehn-reduced form under half-relator swaps.
std::vector<Word> geodesic_representatives(const Word& w, std::size_t cap = 500000);

/// Lexicographically least geodesic spelling; canonical form of the element.
Word element_key(const Word& w);

} // namespace sep2
