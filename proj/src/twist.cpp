#include "sep2/twist.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "sep2/intersect.hpp"

namespace sep2 {

namespace {

struct Strand {
    int v;          // visit index on the ccw cycle
    char out_germ;  // gamma[v]
    char in_germ;   // inv(gamma[v-1])
};

// germs strictly inside the CCW arc from the strand's out-germ to its in-germ
bool arc_contains(const Strand& s, char germ) {
    int g = germ_position(s.out_germ);
    int h = germ_position(s.in_germ);
    int y = germ_position(germ);
    if (g == h) return false;  // cannot happen on reduced words
    int span = (h - g + 8) % 8;
    int off = (y - g + 8) % 8;
    return off > 0 && off < span;
}

// does strand a enclose strand b as seen from the germ marker?  Decided on
// the circle at infinity: both of b's ray ends lie in the arc of a's ends
// that contains the marker ray.
bool encloses(const Word& cyc, const Strand& a, const Strand& b, char marker) {
    std::vector<RaySpec> rays(5);
    rays[0] = {&cyc, a.v, false, 0};
    rays[1] = {&cyc, a.v, true, 0};
    rays[2] = {&cyc, b.v, false, 0};
    rays[3] = {&cyc, b.v, true, 0};
    rays[4] = {nullptr, 0, false, marker};
    std::vector<int> order = circular_ray_order(rays);
    int pos[5];
    for (int k = 0; k < 5; ++k) pos[order[(std::size_t)k]] = k;
    // walk from a-forward to a-backward; note which of marker/b-ends we pass
    bool seen_marker = false, seen_b0 = false, seen_b1 = false;
    for (int p = (pos[0] + 1) % 5; p != pos[1]; p = (p + 1) % 5) {
        int who = order[(std::size_t)p];
        if (who == 4) seen_marker = true;
        if (who == 2) seen_b0 = true;
        if (who == 3) seen_b1 = true;
    }
    if (seen_marker) return seen_b0 && seen_b1;
    return !seen_b0 && !seen_b1;
}

} // namespace

Twist::Twist(const Curve& curve) : curve_(curve) {
    CyclicWord cyc = ccw_cycle(curve.word());
    const Word& c = cyc.letters();
    int g = (int)c.size();

    std::vector<Strand> strands;
    for (int v = 0; v < g; ++v)
        strands.push_back({v, c[(std::size_t)v], inv_letter(c[(std::size_t)((v + g - 1) % g)])});

    auto rotation = [&](int v) { return c.substr((std::size_t)v) + c.substr(0, (std::size_t)v); };

    // crossings of the single letter x with the pushed-off strands: on the way
    // out of the vertex (germ x, outermost strand first) and on the way in
    // (germ inv(x), innermost first)
    auto letter_image = [&](char x, int dir) {
        std::vector<Strand> dep, arr;
        for (const Strand& s : strands) {
            if (arc_contains(s, x)) dep.push_back(s);
            if (arc_contains(s, inv_letter(x))) arr.push_back(s);
        }
        auto outer_first = [&](const Strand& p, const Strand& q, char germ) {
            return encloses(c, p, q, germ);  // outermost strand first
        };
        std::sort(dep.begin(), dep.end(),
                  [&](const Strand& p, const Strand& q) { return outer_first(p, q, x); });
        std::sort(arr.begin(), arr.end(),
                  [&](const Strand& p, const Strand& q) { return outer_first(q, p, inv_letter(x)); });
        Word out;
        for (const Strand& s : dep) {
            Word w = rotation(s.v);
            if (dir > 0) w = inverse_word(w);  // departure crossings carry the opposite sign
            out += w;
        }
        out.push_back(x);
        for (const Strand& s : arr) {
            Word w = rotation(s.v);
            if (dir < 0) w = inverse_word(w);
            out += w;
        }
        return free_reduce(out);
    };

    const char* alphabet = "abcdABCD";
    for (int k = 0; k < 8; ++k) {
        image_[(std::size_t)k] = letter_image(alphabet[k], +1);
        image_inv_[(std::size_t)k] = letter_image(alphabet[k], -1);
    }
}

Word Twist::apply_to_word(Word w, int power) const {
    while (power != 0) {
        const auto& img = power > 0 ? image_ : image_inv_;
        Word out;
        for (char ch : w) out += img[(std::size_t)letter_index(ch)];
        w = dehn_reduce(out);
        power += power > 0 ? -1 : 1;
    }
    return w;
}

CyclicWord Twist::apply_to_class(const CyclicWord& w, int power) const {
    if (power == 0) return w;
    return CyclicWord(apply_to_word(w.letters(), power));
}

Curve Twist::apply_to_curve(const Curve& c, int power) const {
    return Curve::make(apply_to_class(c.word(), power));
}

namespace {

// bounded search for the middle chain curve: simple, nonseparating, meeting
// the a- and c-handles once each and disjoint from b and d
Curve find_bridge_curve() {
    const char* alphabet = "abcdABCD";
    std::vector<Word> queue{""};
    for (int len = 1; len <= 4; ++len) {
        std::vector<Word> next;
        for (const Word& w : queue)
            for (int k = 0; k < 8; ++k) next.push_back(w + alphabet[k]);
        queue = std::move(next);
        std::vector<Word> sorted = queue;
        std::sort(sorted.begin(), sorted.end());
        for (const Word& w : sorted) {
            try {
                Curve cand = Curve::make(w);
                if (cand.separating()) continue;
                Curve a = Curve::make("a"), b = Curve::make("b");
                Curve cc = Curve::make("c"), d = Curve::make("d");
                if (intersection_number(cand, a) == 1 && intersection_number(cand, cc) == 1 &&
                    intersection_number(cand, b) == 0 && intersection_number(cand, d) == 0)
                    return cand;
            } catch (const WordError&) {
            }
        }
    }
    throw WordError("find_bridge_curve: no candidate found");
}

} // namespace

const std::array<Curve, 5>& chain_curves() {
    static const std::array<Curve, 5> chain = [] {
        Curve bridge = find_bridge_curve();
        return std::array<Curve, 5>{Curve::make("b"), Curve::make("a"), bridge, Curve::make("c"),
                                    Curve::make("d")};
    }();
    return chain;
}

const Twist& chain_twist(int k) {
    static const std::array<Twist, 5> twists = [] {
        const auto& c = chain_curves();
        return std::array<Twist, 5>{Twist(c[0]), Twist(c[1]), Twist(c[2]), Twist(c[3]), Twist(c[4])};
    }();
    if (k < 0 || k >= 5) throw WordError("chain_twist: index out of range");
    return twists[(std::size_t)k];
}

CyclicWord apply_chain_twist(int k, const CyclicWord& w, int power) {
    return chain_twist(k).apply_to_class(w, power);
}

} // namespace sep2
