#pragma once

// Independent curve-lifting oracle on the hyperbolic octagon.
//
// The closed genus-2 surface is realized as the regular hyperbolic octagon
// (vertex angle pi/4) with sides identified in the pattern a b A B c d C D.
// Side pairings are exact SO(2,1) matrices over the real quadratic tower
// Q(sqrt2)(sqrt(2+2*sqrt2)), so every predicate below is decided exactly:
// no floating point anywhere.  Geometric intersection numbers are counted by
// clipping lifts of one curve against a fundamental period of the other's
// axis.  Test support only.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Rat = boost::multiprecision::cpp_rational;

// x + y*sqrt(2)
struct L1 {
    Rat x{0}, y{0};
    L1() = default;
    L1(Rat a) : x(std::move(a)) {}
    L1(Rat a, Rat b) : x(std::move(a)), y(std::move(b)) {}
};

L1 operator+(const L1& a, const L1& b);
L1 operator-(const L1& a, const L1& b);
L1 operator*(const L1& a, const L1& b);
L1 operator-(const L1& a);
bool is_zero(const L1& a);
int sign(const L1& a);
L1 inverse(const L1& a);
std::string to_string(const L1& a);

// u + v*w where w = sqrt(2 + 2*sqrt(2))
struct L2 {
    L1 u, v;
    L2() = default;
    L2(L1 a) : u(std::move(a)) {}
    L2(L1 a, L1 b) : u(std::move(a)), v(std::move(b)) {}
    static L2 from_int(long n) { return L2(L1(Rat(n))); }
};

L2 operator+(const L2& a, const L2& b);
L2 operator-(const L2& a, const L2& b);
L2 operator*(const L2& a, const L2& b);
L2 operator-(const L2& a);
bool is_zero(const L2& a);
int sign(const L2& a);
L2 inverse(const L2& a);
std::string to_string(const L2& a);

using Vec3 = std::array<L2, 3>;
using Mat3 = std::array<std::array<L2, 3>, 3>;

Mat3 mat_mul(const Mat3& A, const Mat3& B);
Vec3 mat_apply(const Mat3& A, const Vec3& x);
bool mat_equal(const Mat3& A, const Mat3& B);
Mat3 so21_inverse(const Mat3& A);  // eta * A^T * eta

L2 lorentz(const Vec3& a, const Vec3& b);       // a0 b0 + a1 b1 - a2 b2
Vec3 lorentz_cross(const Vec3& a, const Vec3& b);

/// Holonomy and fundamental-domain data for the octagon.
struct Octagon {
    Mat3 gen[8];        // images of a,b,c,d,A,B,C,D
    Vec3 side_normal[8];  // outward normals of the identity tile's sides
    char side_letter[8];  // crossing side k leads to tile gen[side_letter[k]]

    static const Octagon& get();
    const Mat3& letter_matrix(char c) const;
    Mat3 word_matrix(const std::string& w) const;
};

/// Spacelike normal of the invariant geodesic of a hyperbolic element.
Vec3 axis_normal(const Mat3& M);

/// Do the axes of two matrices cross transversally?  Requires distinct axes.
bool axes_cross(const Vec3& n1, const Vec3& n2);
bool same_axis(const Vec3& n1, const Vec3& n2);

/// Geometric intersection number of the free homotopy classes of u and v.
/// u and v must be cyclically reduced, primitive and non-conjugate (up to
/// inversion) to one another.
int intersection_count(const std::string& u, const std::string& v);

/// Minimal self-intersection number of the class of the primitive word u.
int self_intersection_count(const std::string& u);

} // namespace oracle
