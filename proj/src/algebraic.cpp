#include "algebraic.hpp"
#include "factor.hpp"

#include <algorithm>

namespace stubborn {

bool alg_equal(AlgReal& a, AlgReal& b) {
    if (a.is_exact() && b.is_exact()) return a.iv.lo == b.iv.lo;
    if (a.is_exact() || b.is_exact()) {
        AlgReal& ex = a.is_exact() ? a : b;
        AlgReal& bx = a.is_exact() ? b : a;
        const Q& v = ex.iv.lo;
        if (!bx.sqfree.eval(FieldElem(v)).is_zero()) return false;
        // v is a root of bx.sqfree; bx isolates exactly one root
        return bx.iv.lo < v && v < bx.iv.hi;
    }
    if (!is_zero_at_root(b.sqfree, a)) return false;
    // a is a root of b's defining polynomial; decide containment in b's box
    while (true) {
        if (!a.iv.intersects(b.iv)) return false;
        if (b.iv.lo < a.iv.lo && a.iv.hi < b.iv.hi) return true;
        a.refine();
        b.refine();
        if (a.is_exact()) return alg_equal(a, b);
        if (b.is_exact()) return alg_equal(a, b);
    }
}

bool alg_point_equal(AlgPoint2& p, AlgPoint2& q) {
    return alg_equal(p.x, q.x) && alg_equal(p.y, q.y);
}

namespace {

std::vector<QInterval> box_of(const AlgPoint2& p, int nvars, int vx, int vy) {
    std::vector<QInterval> b(size_t(nvars), QInterval(Q(0)));
    b[size_t(vx)] = p.x.iv;
    b[size_t(vy)] = p.y.iv;
    return b;
}

} // namespace

std::optional<std::vector<AlgPoint2>> common_real_zeros_2(const MPoly& A, const MPoly& B,
                                                          int vx, int vy) {
    if (A.is_zero() || B.is_zero()) fail(ErrCode::precondition, "common_real_zeros_2: zero input");
    MPoly rxm = (A.degree_in(vy) > 0 && B.degree_in(vy) > 0) ? resultant(A, B, vy)
               : (A.degree_in(vy) == 0 ? A : B);
    MPoly rym = (A.degree_in(vx) > 0 && B.degree_in(vx) > 0) ? resultant(A, B, vx)
               : (A.degree_in(vx) == 0 ? A : B);
    if (rxm.is_zero() || rym.is_zero())
        fail(ErrCode::common_component, "common_real_zeros_2: curves share a component");
    UPoly rx = rxm.to_upoly(vx);
    UPoly ry = rym.to_upoly(vy);
    if (rx.degree() == 0 || ry.degree() == 0) return std::vector<AlgPoint2>{};

    // separation validation: the number of distinct complex solutions seen
    // along both axes must agree
    if (squarefree_part(rx).degree() != squarefree_part(ry).degree()) return std::nullopt;

    RootProfile px = root_profile(rx), py = root_profile(ry);
    size_t n = px.real_roots.size();
    if (py.real_roots.size() != n) return std::nullopt;
    if (n == 0) return std::vector<AlgPoint2>{};

    // box matching by interval exclusion
    std::vector<std::vector<char>> possible(n, std::vector<char>(n, 1));
    unsigned prec = 96;
    for (int round = 0; round < 64; ++round) {
        // exclude pairs
        size_t total = 0;
        std::vector<int> rowc(n, 0), colc(n, 0);
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j) {
                if (!possible[i][j]) continue;
                AlgPoint2 cand{px.real_roots[i], py.real_roots[j], 1};
                auto bx = box_of(cand, A.nvars, vx, vy);
                QInterval va = A.eval_interval(bx, prec);
                QInterval vb = B.eval_interval(bx, prec);
                if (!va.contains_zero() || !vb.contains_zero()) {
                    possible[i][j] = 0;
                    continue;
                }
                ++rowc[i];
                ++colc[j];
                ++total;
            }
        }
        bool perfect = total == n;
        for (size_t i = 0; i < n && perfect; ++i)
            if (rowc[i] != 1 || colc[i] != 1) perfect = false;
        if (perfect) {
            std::vector<AlgPoint2> out;
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j)
                    if (possible[i][j])
                        out.push_back({px.real_roots[i], py.real_roots[j],
                                       px.real_roots[i].multiplicity});
            std::sort(out.begin(), out.end(), [](const AlgPoint2& a, const AlgPoint2& b) {
                return a.x.iv.lo < b.x.iv.lo;
            });
            return out;
        }
        bool anyrow = false;
        for (size_t i = 0; i < n; ++i)
            if (rowc[i] == 0 || colc[i] == 0) anyrow = true;
        if (anyrow) return std::nullopt; // a real abscissa lost its fiber
        for (auto& r : px.real_roots) r.refine();
        for (auto& r : py.real_roots) r.refine();
        if (round % 8 == 7 && prec < (1u << 14)) prec *= 2;
    }
    return std::nullopt;
}

std::optional<std::pair<FieldElem, FieldElem>> exactify_point(const AlgPoint2& pin, const MPoly& A,
                                                              const MPoly& B, int vx, int vy) {
    AlgPoint2 p = pin;
    FieldElem x0;
    if (p.x.is_exact()) {
        x0 = FieldElem(p.x.iv.lo);
    } else {
        if (!p.x.sqfree.is_rational()) return std::nullopt;
        bool found = false;
        for (auto& [fac, mult] : factor_upoly(p.x.sqfree)) {
            (void)mult;
            SturmChain ch = sturm_chain(fac);
            AlgReal probe = p.x;
            UPoly g = gcd_field(fac, probe.sqfree);
            if (g.degree() <= 0) continue;
            SturmChain gch = sturm_chain(g);
            if (gch.count(probe.iv.lo, probe.iv.hi) <= 0) continue;
            // this irreducible factor defines x0
            if (fac.degree() == 1) {
                x0 = -fac.c[0];
                found = true;
            } else if (fac.degree() == 2) {
                // monic t^2 + bt + c
                FieldElem b = fac.c[1], c = fac.c[0];
                FieldElem disc = b * b - FieldElem(Q(4)) * c;
                if (disc.sign() < 0) return std::nullopt;
                FieldElem sq = sqrt_field(disc);
                FieldElem half(Q(1, 2));
                FieldElem r1 = (-b + sq) * half, r2 = (-b - sq) * half;
                // pick the root inside the interval
                AlgReal probe2 = p.x;
                QInterval i1 = r1.enclosure(128), i2 = r2.enclosure(128);
                while (i1.intersects(probe2.iv) && i2.intersects(probe2.iv)) {
                    probe2.refine();
                    i1 = r1.enclosure(256);
                    i2 = r2.enclosure(256);
                }
                x0 = i1.intersects(probe2.iv) ? r1 : r2;
                found = true;
            } else {
                return std::nullopt;
            }
            break;
        }
        if (!found) return std::nullopt;
    }
    // fiber polynomial in y over the (possibly extended) tower
    auto subs_x = [&](const MPoly& f) {
        MPoly s = f.substitute(vx, MPoly::constant(f.nvars, x0));
        return s.to_upoly(vy);
    };
    UPoly ay = subs_x(A), by = subs_x(B);
    UPoly g = ay.is_zero() ? by : (by.is_zero() ? ay : gcd_field(ay, by));
    if (g.degree() < 1) return std::nullopt;
    // strip multiple roots, then find the unique root in the y-box
    g = squarefree_part(g);
    FieldElem y0;
    if (g.degree() == 1) {
        y0 = -g.c[0] / g.c[1];
    } else if (g.degree() == 2) {
        FieldElem b = g.c[1] / g.c[2], c = g.c[0] / g.c[2];
        FieldElem disc = b * b - FieldElem(Q(4)) * c;
        if (disc.sign() < 0) return std::nullopt;
        FieldElem sq = sqrt_field(disc);
        FieldElem half(Q(1, 2));
        FieldElem r1 = (-b + sq) * half, r2 = (-b - sq) * half;
        AlgReal probe = p.y;
        QInterval i1 = r1.enclosure(128), i2 = r2.enclosure(128);
        while (i1.intersects(probe.iv) && i2.intersects(probe.iv)) {
            if ((r1 - r2).is_zero()) break;
            probe.refine();
            i1 = r1.enclosure(256);
            i2 = r2.enclosure(256);
        }
        y0 = i1.intersects(probe.iv) ? r1 : r2;
    } else {
        return std::nullopt;
    }
    // verify
    std::vector<FieldElem> pt(size_t(A.nvars), FieldElem(Q(0)));
    pt[size_t(vx)] = x0;
    pt[size_t(vy)] = y0;
    if (!A.eval(pt).is_zero() || !B.eval(pt).is_zero()) return std::nullopt;
    return std::make_pair(x0, y0);
}

int sign_at_point(const MPoly& G, AlgPoint2& p, const MPoly& A, const MPoly& B, int vx, int vy) {
    if (auto ex = exactify_point(p, A, B, vx, vy)) {
        std::vector<FieldElem> pt(size_t(G.nvars), FieldElem(Q(0)));
        pt[size_t(vx)] = ex->first;
        pt[size_t(vy)] = ex->second;
        return G.eval(pt).sign();
    }
    unsigned prec = 96;
    for (int round = 0; round < 80; ++round) {
        auto bx = box_of(p, G.nvars, vx, vy);
        QInterval v = G.eval_interval(bx, prec);
        if (v.sign_known()) return v.sign();
        p.x.refine();
        p.y.refine();
        if (round % 8 == 7 && prec < (1u << 14)) prec *= 2;
    }
    fail(ErrCode::unresolved_box, "sign_at_point: cannot certify sign at box precision");
}

} // namespace stubborn
