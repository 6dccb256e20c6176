#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sep2 {

struct FareyError : std::runtime_error {
    explicit FareyError(const std::string& what) : std::runtime_error(what) {}
};
struct NotAdjacent : FareyError {
    NotAdjacent() : FareyError("NotAdjacent: slopes are not joined in the Farey graph") {}
};

/// A reduced rational p/q with q >= 0; the point at infinity is exactly 1/0,
/// zero is 0/1.  Vertices of the Farey graph.
struct Slope {
    std::int64_t p = 1;
    std::int64_t q = 0;

    Slope() = default;
    Slope(std::int64_t num, std::int64_t den);

    bool operator==(const Slope& o) const { return p == o.p && q == o.q; }
    bool operator!=(const Slope& o) const { return !(*this == o); }
    bool operator<(const Slope& o) const;  // lexicographic on (q, p); any total order

    bool is_infinity() const { return q == 0; }
    std::string str() const;
    static Slope parse(const std::string& s);
};

enum class ParityClass { OO, OE, EO };

const char* parity_name(ParityClass c);

bool farey_adjacent(const Slope& a, const Slope& b);

/// |p_a * q_b - q_a * p_b|
std::int64_t farey_det(const Slope& a, const Slope& b);

/// Farey addition: the triangle vertex (p+r)/(q+s) over the edge (a, b).
Slope mediant(const Slope& a, const Slope& b);

/// Farey subtraction: (p-r)/(q-s), sign-normalized; denominator 0 becomes 1/0.
Slope farey_difference(const Slope& a, const Slope& b);

/// The two vertices completing the edge (a, b) to a triangle.  The pair has
/// mutual determinant 2.
std::pair<Slope, Slope> triangle_completions(const Slope& a, const Slope& b);

ParityClass parity_class(const Slope& a);

/// Minimal-length path a = v0, ..., vn = b with consecutive vertices adjacent.
/// Ties broken toward the parent with the smaller denominator.
std::vector<Slope> farey_geodesic(const Slope& a, const Slope& b);

int farey_distance(const Slope& a, const Slope& b);

/// Every unordered Farey triangle with all three entries bounded by
/// max(|p|, q) <= bound, each exactly once, by recursive mediant subdivision
/// from the two base triangles.
void enumerate_triangles(std::int64_t bound,
                         const std::function<void(const Slope&, const Slope&, const Slope&)>& emit);

} // namespace sep2

template <>
struct std::hash<sep2::Slope> {
    std::size_t operator()(const sep2::Slope& s) const noexcept {
        return std::hash<std::int64_t>()(s.p * 1000003 + s.q);
    }
};
