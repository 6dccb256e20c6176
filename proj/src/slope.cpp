#include "sep2/slope.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace sep2 {

Slope::Slope(std::int64_t num, std::int64_t den) {
    if (num == 0 && den == 0) throw FareyError("Slope: 0/0 is not a slope");
    if (den < 0) { num = -num; den = -den; }
    if (den == 0) {
        p = 1; q = 0;  // infinity has the single representative 1/0
        return;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g == 0) g = 1;
    p = num / g;
    q = den / g;
}

bool Slope::operator<(const Slope& o) const {
    if (q != o.q) return q < o.q;
    return p < o.p;
}

std::string Slope::str() const {
    return std::to_string(p) + "/" + std::to_string(q);
}

Slope Slope::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Slope(std::stoll(s), 1);
    return Slope(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

const char* parity_name(ParityClass c) {
    switch (c) {
        case ParityClass::OO: return "OO";
        case ParityClass::OE: return "OE";
        case ParityClass::EO: return "EO";
    }
    return "?";
}

std::int64_t farey_det(const Slope& a, const Slope& b) {
    __int128 d = (__int128)a.p * b.q - (__int128)a.q * b.p;
    if (d < 0) d = -d;
    return (std::int64_t)d;
}

bool farey_adjacent(const Slope& a, const Slope& b) {
    return farey_det(a, b) == 1;
}

Slope mediant(const Slope& a, const Slope& b) {
    if (!farey_adjacent(a, b)) throw NotAdjacent();
    return Slope(a.p + b.p, a.q + b.q);
}

Slope farey_difference(const Slope& a, const Slope& b) {
    if (!farey_adjacent(a, b)) throw NotAdjacent();
    return Slope(a.p - b.p, a.q - b.q);
}

std::pair<Slope, Slope> triangle_completions(const Slope& a, const Slope& b) {
    return {mediant(a, b), farey_difference(a, b)};
}

ParityClass parity_class(const Slope& a) {
    bool po = (a.p % 2) != 0, qo = (a.q % 2) != 0;
    if (po && qo) return ParityClass::OO;
    if (po) return ParityClass::OE;
    return ParityClass::EO;
}

namespace {

// Farey parents of p/q (q >= 2): the two neighbours with strictly smaller
// denominator.  Every geodesic from 1/0 enters through one of them.
std::pair<Slope, Slope> parents(const Slope& s) {
    std::int64_t p = s.p, q = s.q;
    // extended euclid for p^{-1} mod q
    std::int64_t t = 0, t_new = 1, r = q, r_new = ((p % q) + q) % q;
    while (r_new != 0) {
        std::int64_t quot = r / r_new;
        std::int64_t tmp = t - quot * t_new;
        t = t_new; t_new = tmp;
        tmp = r - quot * r_new;
        r = r_new; r_new = tmp;
    }
    std::int64_t v1 = ((t % q) + q) % q;  // p * v1 == 1 mod q
    if (v1 == 0) v1 = q;
    std::int64_t u1 = (p * v1 - 1) / q;
    return {Slope(u1, v1), Slope(p - u1, q - v1)};
}

struct DistMemo {
    std::unordered_map<Slope, int> d;
    std::unordered_map<Slope, Slope> via;

    int dist(const Slope& s) {
        if (s.q == 0) return 0;
        if (s.q == 1) return 1;
        auto it = d.find(s);
        if (it != d.end()) return it->second;
        auto [a, b] = parents(s);
        int da = dist(a), db = dist(b);
        Slope pick = a;
        int best = da;
        if (db < da || (db == da && (b.q < a.q || (b.q == a.q && b.p < a.p)))) {
            pick = b; best = db;
        }
        d[s] = best + 1;
        via[s] = pick;
        return best + 1;
    }
};

// Unimodular map sending a -> 1/0.
struct Mobius {
    std::int64_t m00, m01, m10, m11;  // det +1
    Slope apply(const Slope& s) const {
        __int128 np = (__int128)m00 * s.p + (__int128)m01 * s.q;
        __int128 nq = (__int128)m10 * s.p + (__int128)m11 * s.q;
        return Slope((std::int64_t)np, (std::int64_t)nq);
    }
    Mobius inverse() const { return {m11, -m01, -m10, m00}; }
};

Mobius to_infinity(const Slope& a) {
    std::int64_t old_r = a.p, r = a.q;
    std::int64_t old_s = 1, s = 0;
    std::int64_t old_t = 0, t = 1;
    while (r != 0) {
        std::int64_t quot = old_r / r;
        std::int64_t tmp = old_r - quot * r; old_r = r; r = tmp;
        tmp = old_s - quot * s; old_s = s; s = tmp;
        tmp = old_t - quot * t; old_t = t; t = tmp;
    }
    if (old_r < 0) { old_s = -old_s; old_t = -old_t; }
    // rows: (x, y) with x*p + y*q = 1, and (-q, p); det = +1
    return Mobius{old_s, old_t, -a.q, a.p};
}

} // namespace

std::vector<Slope> farey_geodesic(const Slope& a, const Slope& b) {
    if (a == b) return {a};
    Mobius M = to_infinity(a);
    Slope target = M.apply(b);
    DistMemo memo;
    memo.dist(target);
    std::vector<Slope> rev;
    Slope cur = target;
    rev.push_back(cur);
    while (cur.q >= 2) {
        cur = memo.via.at(cur);
        rev.push_back(cur);
    }
    if (cur.q == 1) rev.push_back(Slope(1, 0));
    Mobius Minv = M.inverse();
    std::vector<Slope> path;
    for (auto it = rev.rbegin(); it != rev.rend(); ++it) path.push_back(Minv.apply(*it));
    return path;
}

int farey_distance(const Slope& a, const Slope& b) {
    if (a == b) return 0;
    Slope target = to_infinity(a).apply(b);
    if (target.q == 0) return 0;
    if (target.q == 1) return 1;
    DistMemo memo;
    return memo.dist(target);
}

namespace {

std::int64_t size_measure(const Slope& s) {
    return std::max(s.p < 0 ? -s.p : s.p, s.q);
}

// Triangles below an integer edge (n/1, (n+1)/1) form a binary mediant tree.
// Within such an edge max(|p|, q) is strictly increasing along descent, so the
// in-bound prune on the apex loses nothing.
void over_edge(const Slope& a, const Slope& b, std::int64_t bound,
               const std::function<void(const Slope&, const Slope&, const Slope&)>& emit) {
    Slope m = mediant(a, b);
    if (size_measure(m) > bound) return;
    emit(a, b, m);
    over_edge(a, m, bound, emit);
    over_edge(m, b, bound, emit);
}

} // namespace

void enumerate_triangles(std::int64_t bound,
                         const std::function<void(const Slope&, const Slope&, const Slope&)>& emit) {
    if (bound < 1) throw FareyError("enumerate_triangles: bound must be >= 1");
    Slope inf(1, 0);
    // Triangles containing 1/0 are exactly {1/0, n/1, (n+1)/1}; every other
    // triangle lies below exactly one integer edge.
    for (std::int64_t n = -bound; n < bound; ++n) {
        Slope u(n, 1), v(n + 1, 1);
        emit(inf, u, v);
        over_edge(u, v, bound, emit);
    }
}

} // namespace sep2
