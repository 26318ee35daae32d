#include "linepin/classify.hpp"
#include "linepin/cone.hpp"
#include "linepin/errors.hpp"
#include "linepin/pinning.hpp"

#include <algorithm>
#include <numeric>

namespace linepin {

std::string to_string(BlockType t) {
    switch (t) {
    case BlockType::B2: return "2-block";
    case BlockType::B3Par: return "3par-block";
    case BlockType::B3Cross: return "3cross-block";
    case BlockType::B4Par: return "4par-block";
    case BlockType::B4Cross: return "4cross-block";
    case BlockType::B5: return "5-block";
    }
    return "?";
}

std::string to_string(SurroundingKind k) {
    switch (k) {
    case SurroundingKind::Simplex4: return "simplex4";
    case SurroundingKind::TwoCritical: return "two_critical";
    case SurroundingKind::ThreeCritical: return "three_critical";
    case SurroundingKind::FourSegments: return "four_segments";
    case SurroundingKind::Star: return "star";
    }
    return "?";
}

namespace {
const char* kLabels[] = {"(1)",  "(2a)", "(2b)", "(3a)", "(3b)", "(3c)", "(4a)", "(4b)",
                         "(4c)", "(4d)", "(5a)", "(5b)", "(6a)", "(6b)", "(7)",  "(8)"};
}

std::string to_string(OrthoClass c) { return kLabels[static_cast<int>(c)]; }

std::optional<OrthoClass> ortho_class_from_string(const std::string& s) {
    std::string t = s;
    if (!t.empty() && t.front() != '(') t = "(" + t + ")";
    for (int i = 0; i < 16; ++i)
        if (t == kLabels[i]) return static_cast<OrthoClass>(i);
    return std::nullopt;
}

static Vec eta(const Constraint& g) {
    Vec a = halfspace_of(g);
    a.pop_back();
    return a;
}

bool is_dependent(const std::vector<Constraint>& F) {
    if (F.size() < 2 || F.size() > 4) throw WrongArity("dependence test takes 2 to 4 constraints");
    Mat N;
    for (auto& g : F) N.push_back(eta(g));
    return rank(N) < static_cast<int>(F.size());
}

bool is_critical_simplex(const Mat& X) {
    if (X.empty()) return false;
    Mat aff;
    for (auto& x : X) {
        Vec r = x;
        r.push_back(1);
        aff.push_back(std::move(r));
    }
    if (rank(aff) != static_cast<int>(X.size())) return false;
    return origin_in_relint(X);
}

namespace {

Mat pick(const Mat& X, const std::vector<std::size_t>& idx) {
    Mat out;
    for (auto i : idx) out.push_back(X[i]);
    return out;
}

template <class F>
void for_subsets(std::size_t n, std::size_t k, F&& f) {
    if (k > n || k == 0) return;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        if (f(idx)) return;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

bool origin_in_hull(const Mat& X) {
    const std::size_t d = X[0].size();
    Mat A(d + 1, Vec(X.size()));
    Vec b(d + 1, Rat(0));
    for (std::size_t j = 0; j < X.size(); ++j) {
        for (std::size_t i = 0; i < d; ++i) A[i][j] = X[j][i];
        A[d][j] = 1;
    }
    b[d] = 1;
    return feasible_standard(A, b).has_value();
}

using Simplex = std::vector<std::size_t>;
using Cover = std::vector<Simplex>;

std::vector<Simplex> critical_subsets(const Mat& X) {
    std::vector<Simplex> out;
    std::size_t top = std::min<std::size_t>(X.size(), X.empty() ? 0 : X[0].size() + 1);
    for (std::size_t k = 2; k <= top; ++k)
        for_subsets(X.size(), k, [&](const Simplex& S) {
            if (is_critical_simplex(pick(X, S))) out.push_back(S);
            return false;
        });
    return out;
}

std::size_t overlap(const Simplex& a, const Simplex& b) {
    std::size_t n = 0;
    for (auto i : a)
        if (std::find(b.begin(), b.end(), i) != b.end()) ++n;
    return n;
}

bool covers(const Cover& c, std::size_t n) {
    std::vector<bool> seen(n, false);
    for (auto& s : c)
        for (auto i : s) seen[i] = true;
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

// covers matching the shapes of the minimal surrounding sets
std::vector<Cover> candidate_covers(const std::vector<Simplex>& crit, std::size_t n) {
    std::vector<Cover> out;
    const std::size_t m = crit.size();
    if (n == 5) {
        for (auto& s : crit)
            if (s.size() == 5) out.push_back({s});
    } else if (n == 6) {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                if (crit[i].size() > 4 || crit[j].size() > 4) continue;
                Cover c{crit[i], crit[j]};
                if (crit[i].size() + crit[j].size() - overlap(crit[i], crit[j]) == 6 && covers(c, n))
                    out.push_back(c);
            }
    } else if (n == 7) {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                for (std::size_t k = j + 1; k < m; ++k) {
                    Cover c{crit[i], crit[j], crit[k]};
                    bool ok = true;
                    std::vector<Simplex> tri, seg;
                    for (auto& s : c) {
                        if (s.size() == 3) tri.push_back(s);
                        else if (s.size() == 2) seg.push_back(s);
                        else ok = false;
                    }
                    if (!ok || tri.empty() || !covers(c, n)) continue;
                    for (std::size_t a = 0; a < 3; ++a)
                        for (std::size_t b = a + 1; b < 3; ++b)
                            if ((c[a].size() == 2 || c[b].size() == 2) && overlap(c[a], c[b]) != 0) ok = false;
                    if (tri.size() >= 2) {
                        // triangles share a single common point
                        std::vector<std::size_t> common = tri[0];
                        for (auto& t : tri) {
                            std::vector<std::size_t> keep;
                            for (auto x : common)
                                if (std::find(t.begin(), t.end(), x) != t.end()) keep.push_back(x);
                            common = keep;
                        }
                        if (common.size() != 1) ok = false;
                        for (std::size_t a = 0; a < tri.size(); ++a)
                            for (std::size_t b = a + 1; b < tri.size(); ++b)
                                if (overlap(tri[a], tri[b]) != 1) ok = false;
                    }
                    if (ok) out.push_back(c);
                }
    } else if (n == 8) {
        std::vector<Simplex> segs;
        for (auto& s : crit)
            if (s.size() == 2) segs.push_back(s);
        for (std::size_t a = 0; a < segs.size(); ++a)
            for (std::size_t b = a + 1; b < segs.size(); ++b)
                for (std::size_t c = b + 1; c < segs.size(); ++c)
                    for (std::size_t d = c + 1; d < segs.size(); ++d) {
                        Cover cv{segs[a], segs[b], segs[c], segs[d]};
                        if (covers(cv, n)) out.push_back(cv);
                    }
    }
    for (auto& c : out)
        std::stable_sort(c.begin(), c.end(), [](const Simplex& a, const Simplex& b) {
            if (a.size() != b.size()) return a.size() > b.size();
            return a < b;
        });
    return out;
}

// largest block first, then lexicographically least
bool better(const Cover& a, const Cover& b) {
    if (a.front().size() != b.front().size()) return a.front().size() > b.front().size();
    return a < b;
}

void require_minimal_surrounding(const Mat& X) {
    if (X.empty() || !surrounds(X, static_cast<int>(X[0].size())))
        throw NotMinimallySurrounding("set does not surround the origin");
    const int d = static_cast<int>(X[0].size());
    for (std::size_t i = 0; i < X.size(); ++i) {
        Mat rest;
        for (std::size_t j = 0; j < X.size(); ++j)
            if (j != i) rest.push_back(X[j]);
        if (surrounds(rest, d)) throw NotMinimallySurrounding("a proper subset already surrounds the origin");
    }
}

} // namespace

std::vector<std::size_t> find_critical_simplex(const Mat& X) {
    if (X.empty() || !origin_in_hull(X)) throw NotContainingOrigin("origin not in the convex hull");
    for (std::size_t i = 0; i < X.size(); ++i)
        if (is_zero(X[i])) return {i};
    std::vector<std::size_t> found;
    for (std::size_t k = 2; k <= X.size() && found.empty(); ++k)
        for_subsets(X.size(), k, [&](const Simplex& S) {
            if (!is_critical_simplex(pick(X, S))) return false;
            found = S;
            return true;
        });
    return found;
}

SurroundingCase decompose_surrounding(const Mat& X) {
    require_minimal_surrounding(X);
    auto crit = critical_subsets(X);
    auto cands = candidate_covers(crit, X.size());
    if (cands.empty()) throw std::logic_error("no critical cover of a minimal surrounding set");
    Cover best = cands.front();
    for (auto& c : cands)
        if (better(c, best)) best = c;

    SurroundingCase sc;
    sc.simplices = best;
    switch (X.size()) {
    case 5: sc.kind = SurroundingKind::Simplex4; break;
    case 6:
        sc.kind = SurroundingKind::TwoCritical;
        sc.sizes = {static_cast<int>(best[0].size()), static_cast<int>(best[1].size())};
        break;
    case 7: {
        int k = 0;
        for (auto& s : best)
            if (s.size() == 3) ++k;
        sc.triangles = k;
        sc.kind = k == 3 ? SurroundingKind::Star : SurroundingKind::ThreeCritical;
        break;
    }
    default: sc.kind = SurroundingKind::FourSegments; break;
    }
    return sc;
}

std::optional<BlockType> block_classify(const std::vector<Constraint>& F) {
    for (auto& g : F)
        if (!is_orthogonal(g)) throw NotOrthogonal("block classification needs orthogonal constraints");
    Mat N;
    for (auto& g : F) N.push_back(eta(g));
    if (N.size() < 2 || !is_critical_simplex(N)) return std::nullopt;
    switch (F.size()) {
    case 2: return BlockType::B2;
    case 3: {
        bool cop = coplanar(F[0], F[1]) && coplanar(F[0], F[2]);
        return cop ? BlockType::B3Par : BlockType::B3Cross;
    }
    case 4:
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j)
                if (coplanar(F[i], F[j]) || concurrent(F[i], F[j])) return BlockType::B4Cross;
        return BlockType::B4Par;
    case 5: return BlockType::B5;
    }
    return std::nullopt;
}

namespace {

std::optional<OrthoClass> label_of(const std::vector<BlockType>& t, std::size_t n) {
    using B = BlockType;
    auto par = [](B b) { return b == B::B3Par || b == B::B4Par; };
    if (n == 5) return OrthoClass::C1;
    if (n == 8) return OrthoClass::C8;
    if (n == 6) {
        B a = t[0], b = t[1];
        bool a4 = a == B::B4Par || a == B::B4Cross;
        bool b4 = b == B::B4Par || b == B::B4Cross;
        if (!a4 && !b4) {
            if (a == B::B3Par && b == B::B3Par) return OrthoClass::C2a;
            if (a == B::B3Cross && b == B::B3Cross) return OrthoClass::C2b;
            return std::nullopt;
        }
        if (a4 && b4) {
            if (par(a) && par(b)) return OrthoClass::C3a;
            if (!par(a) && !par(b)) return OrthoClass::C3b;
            return OrthoClass::C3c;
        }
        if (b == B::B2) return par(a) ? OrthoClass::C5a : OrthoClass::C5b;
        if (par(a)) return par(b) ? OrthoClass::C4a : OrthoClass::C4b;
        return par(b) ? OrthoClass::C4c : OrthoClass::C4d;
    }
    if (n == 7) {
        int tri = 0, p = 0;
        for (auto b : t)
            if (b == B::B3Par || b == B::B3Cross) {
                ++tri;
                if (b == B::B3Par) ++p;
            }
        if (tri == 1) return p ? OrthoClass::C6a : OrthoClass::C6b;
        if (tri == 2 && p == 1) return OrthoClass::C7;
    }
    return std::nullopt;
}

} // namespace

OrthoClassification classify_ortho_pinning(const std::vector<Constraint>& F) {
    for (auto& g : F)
        if (!is_orthogonal(g)) throw NotOrthogonal("classification needs orthogonal constraints");
    std::vector<std::size_t> order(F.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return F[a] < F[b]; });
    std::vector<Constraint> G;
    for (auto i : order) G.push_back(F[i]);
    if (!is_minimal_pinning(G)) throw NotAMinimalOrthoPinning("family does not minimally pin");

    Mat N;
    for (auto& g : G) N.push_back(eta(g));
    auto crit = critical_subsets(N);
    auto cands = candidate_covers(crit, N.size());

    std::optional<OrthoClassification> best;
    Cover bestCover;
    for (auto& c : cands) {
        std::vector<BlockType> types;
        bool ok = true;
        for (auto& s : c) {
            std::vector<Constraint> sub;
            for (auto i : s) sub.push_back(G[i]);
            auto bt = block_classify(sub);
            if (!bt) { ok = false; break; }
            types.push_back(*bt);
        }
        if (!ok) continue;
        auto label = label_of(types, N.size());
        if (!label) continue;
        if (best && !better(c, bestCover)) continue;
        OrthoClassification oc{*label, {}};
        for (std::size_t k = 0; k < c.size(); ++k) {
            Block b{types[k], {}};
            for (auto i : c[k]) b.members.push_back(order[i]);
            std::sort(b.members.begin(), b.members.end());
            oc.blocks.push_back(b);
        }
        best = oc;
        bestCover = c;
    }
    if (!best) throw std::logic_error("minimal orthogonal pinning without a block cover");
    return *best;
}

bool detect_4pinning(const std::vector<Constraint>& F) {
    if (F.empty() || has_degenerate_pair(F) || !is_minimal_pinning(F)) return false;
    auto P = orthogonalize_family(F);
    if (decide_cone(halfspaces_of(P)).pinned()) return false;
    if (F.size() != 4) throw BoundViolation("minimal pinning with non-pinning orthogonal part has size != 4");
    if (block_classify(P) != BlockType::B4Par)
        throw BoundViolation("orthogonal part of a four-constraint pinning is not a 4par-block");
    return true;
}

} // namespace linepin
