#include "linepin/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace linepin {

Rat dot(const Vec& a, const Vec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec scale(const Rat& s, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

Vec neg(const Vec& a) { return scale(Rat(-1), a); }

bool is_zero(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](const Rat& x) { return x == 0; });
}

Rat inf_norm(const Vec& a) {
    Rat m = 0;
    for (auto& x : a) m = std::max(m, Rat(abs(x)));
    return m;
}

Vec primitive(const Vec& a) {
    if (is_zero(a)) return a;
    Int l = 1;
    for (auto& x : a)
        if (x != 0) l = boost::multiprecision::lcm(l, Int(denominator(x)));
    Int g = 0;
    for (auto& x : a) {
        Int n = numerator(x) * (l / denominator(x));
        g = boost::multiprecision::gcd(g, Int(abs(n)));
    }
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        Int n = numerator(a[i]) * (l / denominator(a[i]));
        r[i] = Rat(n / g);
    }
    return r;
}

bool parallel(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i] * b[j] != a[j] * b[i]) return false;
    return true;
}

bool positively_parallel(const Vec& a, const Vec& b) {
    if (!parallel(a, b) || is_zero(a) || is_zero(b)) return false;
    return dot(a, b) > 0;
}

std::string to_string(const Rat& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

static Int parse_int(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty number");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("bad number");
    for (std::size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9') throw std::invalid_argument("bad number: " + std::string(s));
    bool negative = s[0] == '-';
    std::string_view t = s.substr(i);
    while (t.size() > 1 && t.front() == '0') t.remove_prefix(1);
    Int v{std::string(t)};
    return negative ? Int(-v) : v;
}

Rat parse_rat(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    if (auto p = s.find('/'); p != std::string_view::npos) {
        Int d = parse_int(s.substr(p + 1));
        if (d == 0) throw std::invalid_argument("zero denominator");
        return Rat(parse_int(s.substr(0, p)), d);
    }
    long exp10 = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        exp10 = static_cast<long>(parse_int(s.substr(e + 1)).convert_to<long>());
        s = s.substr(0, e);
    }
    std::string digits;
    bool negative = false;
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        negative = s[0] == '-';
        i = 1;
    }
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        digits = std::string(s.substr(i, dot - i)) + std::string(s.substr(dot + 1));
        exp10 -= static_cast<long>(s.size() - dot - 1);
    } else {
        digits = std::string(s.substr(i));
    }
    if (digits.empty()) throw std::invalid_argument("bad number");
    Rat r(parse_int(digits));
    Int ten = 1;
    for (long k = 0; k < std::labs(exp10); ++k) ten *= 10;
    r = exp10 >= 0 ? r * Rat(ten) : r / Rat(ten);
    return negative ? -r : r;
}

Rref rref(Mat m) {
    Rref out;
    if (m.empty()) return out;
    int rows = static_cast<int>(m.size());
    int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(m[r], m[p]);
        Rat inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        out.pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    out.rows = std::move(m);
    return out;
}

int rank(const Mat& m) { return static_cast<int>(rref(m).pivots.size()); }

Mat nullspace(const Mat& m, int n) {
    Rref R = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (int p : R.pivots) is_pivot[p] = true;
    Mat basis;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vec v(n, Rat(0));
        v[f] = 1;
        for (std::size_t i = 0; i < R.pivots.size(); ++i) v[R.pivots[i]] = -R.rows[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(Mat a, Vec b) {
    int n = static_cast<int>(a.size());
    for (int i = 0; i < n; ++i) a[i].push_back(b[i]);
    Rref R = rref(std::move(a));
    if (static_cast<int>(R.pivots.size()) != n) return std::nullopt;
    for (int i = 0; i < n; ++i)
        if (R.pivots[i] != i) return std::nullopt;
    Vec x(n);
    for (int i = 0; i < n; ++i) x[i] = R.rows[i][n];
    return x;
}

Mat transpose(const Mat& m, int ncols) {
    Mat t(ncols, Vec(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (int j = 0; j < ncols; ++j) t[j][i] = m[i][j];
    return t;
}

Vec unit(int n, int i) {
    Vec v(n, Rat(0));
    v[i] = 1;
    return v;
}

} // namespace linepin
