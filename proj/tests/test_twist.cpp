#include <doctest.h>

#include <random>

#include "sep2/curve.hpp"
#include "sep2/intersect.hpp"
#include "sep2/twist.hpp"

using namespace sep2;

namespace {

std::vector<Curve> simple_corpus(unsigned seed, int count) {
    std::mt19937 rng(seed);
    const char* alphabet = "abcdABCD";
    std::vector<Curve> out;
    while ((int)out.size() < count) {
        int len = 1 + (int)(rng() % 6);
        Word raw;
        for (int i = 0; i < len; ++i) raw.push_back(alphabet[rng() % 8]);
        try {
            out.push_back(Curve::make(raw));
        } catch (const WordError&) {
        }
    }
    return out;
}

} // namespace

TEST_CASE("chain curves have the chain intersection pattern") {
    const auto& c = chain_curves();
    for (int i = 0; i < 5; ++i) {
        CHECK_FALSE(c[(std::size_t)i].separating());
        for (int j = i + 1; j < 5; ++j) {
            int expect = (j - i == 1) ? 1 : 0;
            CHECK(intersection_number(c[(std::size_t)i], c[(std::size_t)j]) == expect);
        }
    }
}

TEST_CASE("twists are relator-preserving automorphisms") {
    for (int k = 0; k < 5; ++k) {
        const Twist& t = chain_twist(k);
        CHECK(is_trivial_word(t.apply_to_word(kRelator, 1)));
        CHECK(is_trivial_word(t.apply_to_word(kRelator, -1)));
        CHECK(is_trivial_word(t.apply_to_word(kRelator, 2)));
    }
    for (const Curve& c : simple_corpus(11, 8)) {
        Twist t(c);
        CHECK(is_trivial_word(t.apply_to_word(kRelator, 1)));
        CHECK(is_trivial_word(t.apply_to_word(kRelator, -1)));
    }
}

TEST_CASE("twist then inverse twist is the identity on classes") {
    auto corpus = simple_corpus(23, 6);
    for (int k = 0; k < 5; ++k) {
        const Twist& t = chain_twist(k);
        for (const Curve& c : corpus) {
            CyclicWord once = t.apply_to_class(c.word(), 1);
            CyclicWord back = t.apply_to_class(once, -1);
            CHECK(is_conjugate(back, c.word()));
            CHECK(t.apply_to_class(c.word(), 0) == c.word());
        }
    }
}

TEST_CASE("twists fix their own curve and disjoint curves") {
    const auto& c = chain_curves();
    for (int k = 0; k < 5; ++k) {
        const Twist& t = chain_twist(k);
        CHECK(is_conjugate(t.apply_to_class(c[(std::size_t)k].word(), 1), c[(std::size_t)k].word()));
        for (int j = 0; j < 5; ++j) {
            if (std::abs(j - k) <= 1) continue;
            CHECK(conjugate_or_inverse(t.apply_to_class(c[(std::size_t)j].word(), 1),
                                       c[(std::size_t)j].word()));
        }
    }
}

TEST_CASE("twist acts on homology as a transvection") {
    auto corpus = simple_corpus(31, 10);
    for (int k = 0; k < 5; ++k) {
        const Twist& t = chain_twist(k);
        auto g = chain_curves()[(std::size_t)k].homology();
        for (const Curve& c : corpus) {
            auto before = c.homology();
            auto after = homology_of_word(t.apply_to_word(c.word().letters(), 1));
            int coef = alg_intersection(before, g);
            bool plus = true, minus = true;
            for (int idx = 0; idx < 4; ++idx) {
                if (after[(std::size_t)idx] != before[(std::size_t)idx] + coef * g[(std::size_t)idx]) plus = false;
                if (after[(std::size_t)idx] != before[(std::size_t)idx] - coef * g[(std::size_t)idx]) minus = false;
            }
            CHECK((plus || minus));
        }
    }
}

TEST_CASE("twist invariance of intersection numbers") {
    auto corpus = simple_corpus(47, 6);
    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const Twist& t = chain_twist((int)(rng() % 5));
        const Curve& u = corpus[rng() % corpus.size()];
        const Curve& v = corpus[rng() % corpus.size()];
        int n = 1 + (int)(rng() % 3);
        int before = intersection_number_classes(u.word(), v.word());
        int after = intersection_number_classes(t.apply_to_class(u.word(), n),
                                                t.apply_to_class(v.word(), n));
        CHECK(before == after);
    }
}

TEST_CASE("braid and commutation relations of the chain twists") {
    auto corpus = simple_corpus(59, 8);
    for (int i = 0; i + 1 < 5; ++i) {
        const Twist& ti = chain_twist(i);
        const Twist& tj = chain_twist(i + 1);
        for (const Curve& c : corpus) {
            CyclicWord lhs = ti.apply_to_class(tj.apply_to_class(ti.apply_to_class(c.word(), 1), 1), 1);
            CyclicWord rhs = tj.apply_to_class(ti.apply_to_class(tj.apply_to_class(c.word(), 1), 1), 1);
            CHECK(is_conjugate(lhs, rhs));
        }
    }
    for (int i = 0; i < 5; ++i)
        for (int j = i + 2; j < 5; ++j) {
            const Twist& ti = chain_twist(i);
            const Twist& tj = chain_twist(j);
            for (const Curve& c : corpus) {
                CyclicWord lhs = ti.apply_to_class(tj.apply_to_class(c.word(), 1), 1);
                CyclicWord rhs = tj.apply_to_class(ti.apply_to_class(c.word(), 1), 1);
                CHECK(is_conjugate(lhs, rhs));
            }
        }
}

TEST_CASE("twist growth band") {
    const auto& chain = chain_curves();
    auto corpus = simple_corpus(71, 5);
    std::mt19937 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        int k = (int)(rng() % 5);
        const Twist& t = chain_twist(k);
        const Curve& g = chain[(std::size_t)k];
        const Curve& alpha = corpus[rng() % corpus.size()];
        const Curve& beta = corpus[rng() % corpus.size()];
        if (conjugate_or_inverse(alpha.word(), beta.word())) continue;
        int iag = intersection_number(alpha, g);
        int igb = intersection_number(g, beta);
        int iab = intersection_number(alpha, beta);
        for (int n = -4; n <= 4; ++n) {
            CyclicWord ta = t.apply_to_class(alpha.word(), n);
            int lhs = conjugate_or_inverse(ta, beta.word())
                          ? 0
                          : intersection_number_classes(ta, beta.word());
            CHECK(std::abs(lhs - std::abs(n) * iag * igb) <= iab);
        }
    }
}
