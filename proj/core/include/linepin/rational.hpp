#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace linepin {

using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;
using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;

inline int sgn(const Rat& x) { return x.sign(); }

Rat dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rat& s, const Vec& a);
Vec neg(const Vec& a);
bool is_zero(const Vec& a);
Rat inf_norm(const Vec& a);

// positive multiple with coprime integer entries; zero stays zero
Vec primitive(const Vec& a);

// a = c*b with c > 0
bool positively_parallel(const Vec& a, const Vec& b);
bool parallel(const Vec& a, const Vec& b);

std::string to_string(const Rat& x);
// "p/q", "p", decimal "0.25", "-1.5e-2"
Rat parse_rat(std::string_view s);

struct Rref {
    Mat rows;                 // nonzero rows only
    std::vector<int> pivots;
};

Rref rref(Mat m);
int rank(const Mat& m);
// basis of {x : m x = 0}, n = column count
Mat nullspace(const Mat& m, int n);
// unique solution of A x = b, nullopt if singular or inconsistent (A square)
std::optional<Vec> solve(Mat a, Vec b);
Mat transpose(const Mat& m, int ncols);
Vec unit(int n, int i);

} // namespace linepin
