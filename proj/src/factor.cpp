#include "factor.hpp"
#include "zzfactor.hpp"

#include <algorithm>
#include <memory>

namespace stubborn {

namespace {

// ---------- power series over Q truncated at K ----------

using Ser = std::vector<Q>; // length K

Ser ser_zero(int K) { return Ser(size_t(K), Q(0)); }

Ser ser_mul(const Ser& a, const Ser& b, int K) {
    Ser r = ser_zero(K);
    for (int i = 0; i < K; ++i) {
        if (sgn(a[size_t(i)]) == 0) continue;
        for (int j = 0; i + j < K; ++j) {
            if (sgn(b[size_t(j)]) == 0) continue;
            r[size_t(i + j)] += a[size_t(i)] * b[size_t(j)];
        }
    }
    return r;
}

Ser ser_inv(const Ser& a, int K) {
    // a[0] != 0
    Ser r = ser_zero(K);
    r[0] = Q(1) / a[0];
    for (int n = 1; n < K; ++n) {
        Q acc(0);
        for (int i = 1; i <= n; ++i) acc += a[size_t(i)] * r[size_t(n - i)];
        r[size_t(n)] = -acc / a[0];
    }
    return r;
}

// ---------- bivariate polynomials as x-coefficient series ----------

using BiSer = std::vector<Ser>; // index = x power

void bs_trim(BiSer& p) {
    auto zero = [](const Ser& s) {
        for (auto& q : s)
            if (sgn(q) != 0) return false;
        return true;
    };
    while (!p.empty() && zero(p.back())) p.pop_back();
}

int bs_deg(const BiSer& p) { return int(p.size()) - 1; }

BiSer bs_mul(const BiSer& a, const BiSer& b, int K) {
    if (a.empty() || b.empty()) return {};
    BiSer r(a.size() + b.size() - 1, ser_zero(K));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) {
            Ser m = ser_mul(a[i], b[j], K);
            for (int k = 0; k < K; ++k) r[i + j][size_t(k)] += m[size_t(k)];
        }
    bs_trim(r);
    return r;
}

BiSer bs_add(const BiSer& a, const BiSer& b, int K) {
    BiSer r(std::max(a.size(), b.size()), ser_zero(K));
    for (size_t i = 0; i < a.size(); ++i)
        for (int k = 0; k < K; ++k) r[i][size_t(k)] += a[i][size_t(k)];
    for (size_t i = 0; i < b.size(); ++i)
        for (int k = 0; k < K; ++k) r[i][size_t(k)] += b[i][size_t(k)];
    bs_trim(r);
    return r;
}

BiSer bs_sub(const BiSer& a, const BiSer& b, int K) {
    BiSer nb = b;
    for (auto& s : nb)
        for (auto& q : s) q = -q;
    return bs_add(a, nb, K);
}

bool bs_is_zero(const BiSer& p) { return p.empty(); }

// division by g monic in x (top coefficient is the constant series 1)
void bs_divmod(const BiSer& f, const BiSer& g, int K, BiSer& q, BiSer& r) {
    r = f;
    bs_trim(r);
    q.clear();
    int dg = bs_deg(g);
    if (bs_deg(r) >= dg) q.assign(size_t(bs_deg(r) - dg + 1), ser_zero(K));
    while (bs_deg(r) >= dg) {
        int k = bs_deg(r) - dg;
        Ser c = r.back();
        for (int kk = 0; kk < K; ++kk) q[size_t(k)][size_t(kk)] += c[size_t(kk)];
        for (int i = 0; i <= dg; ++i) {
            Ser m = ser_mul(c, g[size_t(i)], K);
            for (int kk = 0; kk < K; ++kk) r[size_t(i + k)][size_t(kk)] -= m[size_t(kk)];
        }
        bs_trim(r);
    }
    bs_trim(q);
}

// ---------- bivariate Hensel tree ----------

struct BNode {
    std::unique_ptr<BNode> l, r;
    BiSer val;
    BiSer s, t;
    int leaf_index = -1;
};

BiSer bs_of_upoly_const(const UPoly& u, int K) {
    BiSer r(u.c.size(), ser_zero(K));
    for (size_t i = 0; i < u.c.size(); ++i) r[i][0] = u.c[i].rat();
    return r;
}

UPoly bs_at_zero(const BiSer& p) {
    std::vector<FieldElem> c(p.size());
    for (size_t i = 0; i < p.size(); ++i) c[i] = FieldElem(p[i][0]);
    return UPoly(std::move(c));
}

std::unique_ptr<BNode> b_build(const std::vector<UPoly>& factors, int lo, int hi, int K) {
    auto node = std::make_unique<BNode>();
    if (hi - lo == 1) {
        node->leaf_index = lo;
        node->val = bs_of_upoly_const(factors[size_t(lo)], K);
        return node;
    }
    int mid = (lo + hi) / 2;
    node->l = b_build(factors, lo, mid, K);
    node->r = b_build(factors, mid, hi, K);
    node->val = bs_mul(node->l->val, node->r->val, K);
    // Bezout at y'=0 over Q
    UPoly a = bs_at_zero(node->l->val), b = bs_at_zero(node->r->val);
    // extended Euclid over Q
    UPoly r0 = a, r1 = b;
    UPoly s0 = UPoly::from_q({1}), s1, t0, t1 = UPoly::from_q({1});
    while (!r1.is_zero()) {
        UPoly q, rr;
        divmod_field(r0, r1, q, rr);
        UPoly ns = s0 - q * s1, nt = t0 - q * t1;
        s0 = s1; s1 = ns;
        t0 = t1; t1 = nt;
        r0 = r1; r1 = rr;
    }
    if (r0.degree() != 0) fail(ErrCode::internal, "bivariate hensel: factors not coprime");
    FieldElem inv = r0.c[0].inv();
    node->s = bs_of_upoly_const(s0.scaled(inv), K);
    node->t = bs_of_upoly_const(t0.scaled(inv), K);
    return node;
}

void b_hensel_step(const BiSer& f, BiSer& g, BiSer& h, BiSer& s, BiSer& t, int K) {
    BiSer e = bs_sub(f, bs_mul(g, h, K), K);
    BiSer q, r;
    bs_divmod(bs_mul(s, e, K), h, K, q, r);
    BiSer g1 = bs_add(g, bs_add(bs_mul(t, e, K), bs_mul(q, g, K), K), K);
    BiSer h1 = bs_add(h, r, K);
    BiSer one(1, ser_zero(K));
    one[0][0] = 1;
    BiSer b = bs_sub(bs_add(bs_mul(s, g1, K), bs_mul(t, h1, K), K), one, K);
    BiSer c, d;
    bs_divmod(bs_mul(s, b, K), h1, K, c, d);
    BiSer s1 = bs_sub(s, d, K);
    BiSer t1 = bs_sub(bs_sub(t, bs_mul(t, b, K), K), bs_mul(c, g1, K), K);
    g = g1; h = h1; s = s1; t = t1;
}

void b_lift(BNode* node, const BiSer& newval, int K) {
    node->val = newval;
    if (!node->l) return;
    BiSer g = node->l->val, h = node->r->val, s = node->s, t = node->t;
    b_hensel_step(newval, g, h, s, t, K);
    node->s = s;
    node->t = t;
    b_lift(node->l.get(), g, K);
    b_lift(node->r.get(), h, K);
}

void b_collect(const BNode* node, std::vector<BiSer>& out) {
    if (node->leaf_index >= 0) {
        out[size_t(node->leaf_index)] = node->val;
        return;
    }
    b_collect(node->l.get(), out);
    b_collect(node->r.get(), out);
}

// ---------- helpers bridging MPoly ----------

ZVec zvec_of_upoly(const UPoly& u) {
    Z l = 1;
    for (auto& x : u.c) l = lcm(l, x.rat().get_den());
    ZVec p(u.c.size());
    for (size_t i = 0; i < u.c.size(); ++i) p[i] = Q(u.c[i].rat() * Q(l)).get_num();
    return p;
}

UPoly upoly_of_zvec(const ZVec& p) {
    std::vector<FieldElem> c(p.size());
    for (size_t i = 0; i < p.size(); ++i) c[i] = FieldElem(Q(p[i]));
    return UPoly(std::move(c));
}

// normalize an integer-primitive positive-lead version of a rational MPoly
MPoly make_primitive(const MPoly& f, Q* content_out) {
    Z l = 1;
    for (auto& [m, c] : f.terms) l = lcm(l, c.rat().get_den());
    Z g = 0;
    for (auto& [m, c] : f.terms) g = gcd(g, Z(Q(c.rat() * Q(l)).get_num()));
    if (g == 0) g = 1;
    Q scale = Q(l) / Q(g);
    MPoly r = f.scaled(FieldElem(scale));
    if (r.lead_coeff().rat() < 0) {
        r = -r;
        scale = -scale;
    }
    if (content_out) *content_out = Q(1) / scale;
    return r;
}

std::vector<int> active_vars(const MPoly& f) {
    std::vector<int> v;
    for (int i = 0; i < f.nvars; ++i)
        if (f.degree_in(i) > 0) v.push_back(i);
    return v;
}

std::vector<MPoly> factor_squarefree_primitive(const MPoly& f);

// univariate in variable v
std::vector<MPoly> factor_univar(const MPoly& f, int v) {
    UPoly u = f.to_upoly(v);
    std::vector<ZVec> fs = zz_factor_squarefree(zvec_of_upoly(u));
    std::vector<MPoly> out;
    for (auto& g : fs) out.push_back(MPoly::of_upoly(upoly_of_zvec(g), f.nvars, v));
    return out;
}

// f squarefree primitive with exactly two active vars vx (main) and vy
std::vector<MPoly> factor_bivar(const MPoly& f, int vx, int vy) {
    int nv = f.nvars;
    // content in x lives in Q[y]
    std::vector<MPoly> cs = f.as_univar(vx);
    MPoly cont = cs[0];
    for (size_t i = 1; i < cs.size() && !cont.is_constant(); ++i) cont = mgcd(cont, cs[i]);
    std::vector<MPoly> out;
    MPoly body = f;
    if (!cont.is_constant()) {
        Q cq;
        MPoly cprim = make_primitive(cont, &cq);
        for (auto& g : factor_univar(cprim, vy)) out.push_back(g);
        body = divexact(f, cprim.scaled(FieldElem(cq)));
    }
    if (body.is_constant()) return out;
    if (body.degree_in(vy) == 0) {
        for (auto& g : factor_univar(body, vx)) out.push_back(g);
        return out;
    }
    if (body.degree_in(vx) == 0) {
        for (auto& g : factor_univar(body, vy)) out.push_back(g);
        return out;
    }

    // leading coefficient in x as polynomial in y
    std::vector<MPoly> bc = body.as_univar(vx);
    int dx = int(bc.size()) - 1;
    UPoly l = bc[size_t(dx)].to_upoly(vy);
    int dy = body.degree_in(vy), dl = l.degree();
    int K = dy + dl + 1;

    // choose the expansion point y0
    Q y0;
    bool ok = false;
    for (long t = 0; t <= 40 && !ok; ++t) {
        for (long ss : {1L, -1L}) {
            Q cand(ss * t);
            if (l.eval(FieldElem(cand)).is_zero()) continue;
            // specialize and check squarefree of full degree
            UPoly u(std::vector<FieldElem>(size_t(dx) + 1, FieldElem(Q(0))));
            std::vector<FieldElem> uc(size_t(dx) + 1, FieldElem(Q(0)));
            for (int i = 0; i <= dx; ++i) uc[size_t(i)] = bc[size_t(i)].to_upoly(vy).eval(FieldElem(cand));
            u = UPoly(std::move(uc));
            if (u.degree() != dx) continue;
            if (gcd_field(u, u.derivative()).degree() != 0) continue;
            y0 = cand;
            ok = true;
            break;
        }
    }
    if (!ok) fail(ErrCode::internal, "factor_bivar: no good expansion point");

    // u(x) = body(x, y0): factor over Q
    std::vector<FieldElem> uc(size_t(dx) + 1, FieldElem(Q(0)));
    for (int i = 0; i <= dx; ++i) uc[size_t(i)] = bc[size_t(i)].to_upoly(vy).eval(FieldElem(y0));
    UPoly u(std::move(uc));
    std::vector<ZVec> uf = zz_factor_squarefree(zvec_of_upoly(u));
    if (uf.size() == 1) {
        out.push_back(body);
        return out;
    }
    std::vector<UPoly> monic;
    for (auto& g : uf) monic.push_back(upoly_of_zvec(g).monic());

    // f~ = body(x, y'+y0) / l(y'+y0) as a monic BiSer mod y'^K
    UPoly lshift = l.shift(FieldElem(y0));
    Ser lser = ser_zero(K);
    for (int i = 0; i < K && i < int(lshift.c.size()); ++i) lser[size_t(i)] = lshift.c[size_t(i)].rat();
    Ser linv = ser_inv(lser, K);
    BiSer ftilde(size_t(dx) + 1, ser_zero(K));
    for (int i = 0; i <= dx; ++i) {
        UPoly ci = bc[size_t(i)].to_upoly(vy).shift(FieldElem(y0));
        Ser cser = ser_zero(K);
        for (int k = 0; k < K && k < int(ci.c.size()); ++k) cser[size_t(k)] = ci.c[size_t(k)].rat();
        ftilde[size_t(i)] = ser_mul(cser, linv, K);
    }

    auto tree = b_build(monic, 0, int(monic.size()), K);
    int steps = 1;
    while ((1 << steps) < K) ++steps;
    for (int it = 0; it <= steps; ++it) {
        b_lift(tree.get(), ftilde, K);
        // early exit when the product already matches
        std::vector<BiSer> cur(monic.size());
        b_collect(tree.get(), cur);
        BiSer prod(1, ser_zero(K));
        prod[0][0] = 1;
        for (auto& gi : cur) prod = bs_mul(prod, gi, K);
        if (bs_is_zero(bs_sub(prod, ftilde, K))) break;
    }
    std::vector<BiSer> lifted(monic.size());
    b_collect(tree.get(), lifted);

    // recombination
    std::vector<int> alive(lifted.size(), 1);
    int remaining = int(lifted.size());
    MPoly rest = body;
    Ser lser_full = lser; // l(y'+y0) series (exact: poly degree dl < K)
    int card = 1;
    while (card <= remaining / 2) {
        std::vector<int> idx;
        for (size_t i = 0; i < lifted.size(); ++i)
            if (alive[i]) idx.push_back(int(i));
        int n = int(idx.size());
        bool found = false;
        std::vector<int> comb(static_cast<size_t>(card), 0);
        for (int i = 0; i < card; ++i) comb[size_t(i)] = i;
        while (true) {
            BiSer cand(1, lser_full);
            for (int i = 0; i < card; ++i)
                cand = bs_mul(cand, lifted[size_t(idx[size_t(comb[size_t(i)])])], K);
            // back to a polynomial in (x, y): un-shift each x-coefficient
            MPoly candpoly(nv);
            for (size_t i = 0; i < cand.size(); ++i) {
                std::vector<FieldElem> sc(static_cast<size_t>(K), FieldElem(Q(0)));
                for (int k = 0; k < K; ++k) sc[size_t(k)] = FieldElem(cand[i][size_t(k)]);
                UPoly cy = UPoly(std::move(sc)).shift(FieldElem(-y0));
                MPoly cm = MPoly::of_upoly(cy, nv, vy);
                candpoly += cm * MPoly::var(nv, vx, unsigned(i));
            }
            if (!candpoly.is_zero() && candpoly.total_degree() >= 1) {
                Q cq;
                MPoly cprim = make_primitive(candpoly, &cq);
                MPoly quot;
                if (divides(cprim, rest, &quot)) {
                    out.push_back(cprim);
                    for (int i = 0; i < card; ++i) alive[size_t(idx[size_t(comb[size_t(i)])])] = 0;
                    remaining -= card;
                    rest = quot;
                    found = true;
                    break;
                }
            }
            int i = card - 1;
            while (i >= 0 && comb[size_t(i)] == n - card + i) --i;
            if (i < 0) break;
            ++comb[size_t(i)];
            for (int j = i + 1; j < card; ++j) comb[size_t(j)] = comb[size_t(j - 1)] + 1;
        }
        if (!found) ++card;
    }
    if (!rest.is_constant()) {
        Q cq;
        out.push_back(make_primitive(rest, &cq));
    }
    return out;
}

std::vector<MPoly> factor_trivar_kronecker(const MPoly& f, const std::vector<int>& av);

std::vector<MPoly> factor_squarefree_primitive(const MPoly& f) {
    std::vector<MPoly> out;
    auto av = active_vars(f);
    if (av.empty()) return out;
    if (av.size() == 1) return factor_univar(f, av[0]);
    if (av.size() == 2) {
        if (f.is_homogeneous()) {
            // binary form: dehomogenize in the second active variable
            int vx = av[0], vy = av[1];
            int d = f.total_degree();
            MPoly u = f.set_var_one(vy);
            std::vector<MPoly> uf = factor_univar(u, vx);
            for (auto& g : uf) out.push_back(g.homogenize(g.total_degree(), vy));
            (void)d;
            return out;
        }
        int vx = av[0], vy = av[1];
        if (f.degree_in(vx) < f.degree_in(vy)) std::swap(vx, vy);
        return factor_bivar(f, vx, vy);
    }
    if (av.size() == 3 && f.is_homogeneous()) {
        int vz = av[2];
        MPoly u = f.set_var_one(vz);
        std::vector<MPoly> uf;
        auto uav = active_vars(u);
        if (uav.size() <= 1) {
            uf = uav.empty() ? std::vector<MPoly>{} : factor_univar(u, uav[0]);
        } else {
            int vx = uav[0], vy = uav[1];
            if (u.degree_in(vx) < u.degree_in(vy)) std::swap(vx, vy);
            uf = factor_bivar(u, vx, vy);
        }
        for (auto& g : uf) out.push_back(g.homogenize(g.total_degree(), vz));
        return out;
    }
    if (av.size() == 3) return factor_trivar_kronecker(f, av);
    fail(ErrCode::unsupported_coefficients,
         "factor_rational: more than three active variables unsupported");
}

// Non-homogeneous trivariate inputs go through a Kronecker substitution
// z -> y^D, bivariate factorization of the image, and subset recombination
// with trial division. Retries with a larger D if the image misbehaves.
std::vector<MPoly> factor_trivar_kronecker(const MPoly& f, const std::vector<int>& av) {
    int vx = av[0], vy = av[1], vz = av[2];
    int nv = f.nvars;
    for (int bump = 0; bump < 4; ++bump) {
        unsigned D = unsigned(f.degree_in(vy) + 1 + bump);
        MPoly img = f.substitute(vz, MPoly::var(nv, vy, D));
        // full factorization of the image with multiplicity
        std::vector<MPoly> items;
        {
            std::vector<MPoly> d{img};
            while (!d.back().is_constant()) d.push_back(multiple_factor_part(d.back()));
            std::vector<MPoly> s;
            for (size_t i = 1; i < d.size(); ++i) s.push_back(divexact(d[i - 1], d[i]));
            for (size_t i = 0; i < s.size(); ++i) {
                MPoly pi = (i + 1 < s.size()) ? divexact(s[i], s[i + 1]) : s[i];
                if (pi.is_constant()) continue;
                Q cq;
                MPoly prim = make_primitive(pi, &cq);
                for (auto& irr : factor_squarefree_primitive(prim))
                    for (size_t k = 0; k <= i; ++k) items.push_back(irr);
            }
        }
        auto decode = [&](const MPoly& p) {
            MPoly r(nv);
            for (auto& [m, c] : p.terms) {
                Mono n = m;
                unsigned e = n[vy];
                n[vy] = e % D;
                n[vz] = e / D;
                r.add_term(n, c);
            }
            return r;
        };
        std::vector<MPoly> out;
        std::vector<int> alive(items.size(), 1);
        int remaining = int(items.size());
        MPoly rest = f;
        int card = 1;
        while (card <= remaining) {
            std::vector<int> idx;
            for (size_t i = 0; i < items.size(); ++i)
                if (alive[i]) idx.push_back(int(i));
            int n = int(idx.size());
            if (card > n) break;
            bool found = false;
            std::vector<int> comb(static_cast<size_t>(card), 0);
            for (int i = 0; i < card; ++i) comb[size_t(i)] = i;
            while (true) {
                MPoly prod = MPoly::constant(nv, FieldElem(Q(1)));
                for (int i = 0; i < card; ++i) prod = prod * items[size_t(idx[size_t(comb[size_t(i)])])];
                MPoly cand = decode(prod);
                if (!cand.is_constant()) {
                    Q cq;
                    MPoly cprim = make_primitive(cand, &cq);
                    MPoly quot;
                    if (divides(cprim, rest, &quot)) {
                        out.push_back(cprim);
                        for (int i = 0; i < card; ++i) alive[size_t(idx[size_t(comb[size_t(i)])])] = 0;
                        remaining -= card;
                        rest = quot;
                        found = true;
                        break;
                    }
                }
                int i = card - 1;
                while (i >= 0 && comb[size_t(i)] == n - card + i) --i;
                if (i < 0) break;
                ++comb[size_t(i)];
                for (int j = i + 1; j < card; ++j) comb[size_t(j)] = comb[size_t(j - 1)] + 1;
            }
            if (!found) ++card;
        }
        if (rest.is_constant()) {
            // fold the leftover unit into the first factor via caller's content fix
            return out;
        }
    }
    fail(ErrCode::internal, "factor_rational: kronecker recombination failed");
}

} // namespace

Factorization factor_rational(const MPoly& f) {
    if (f.is_zero()) fail(ErrCode::zero_polynomial, "factor_rational: zero polynomial");
    if (!f.is_rational())
        fail(ErrCode::unsupported_coefficients, "factor_rational: tower coefficients unsupported");
    Factorization out;
    MPoly g = make_primitive(f, &out.content);

    // monomial content
    for (int v = 0; v < f.nvars; ++v) {
        unsigned mn = ~0u;
        for (auto& [m, c] : g.terms) mn = std::min(mn, m[v]);
        if (mn > 0 && mn != ~0u) {
            out.factors.push_back({MPoly::var(f.nvars, v), int(mn)});
            MPoly shift(g.nvars);
            for (auto& [m, c] : g.terms) {
                Mono n = m;
                n[v] -= mn;
                shift.terms.emplace(std::move(n), c);
            }
            g = shift;
        }
    }
    if (g.is_constant()) {
        out.content *= g.constant_value().rat();
        return out;
    }

    // multiplicity chain via repeated multiple-factor parts
    std::vector<MPoly> d{g};
    while (!d.back().is_constant()) d.push_back(multiple_factor_part(d.back()));
    std::vector<MPoly> s;
    for (size_t i = 1; i < d.size(); ++i) s.push_back(divexact(d[i - 1], d[i]));
    for (size_t i = 0; i < s.size(); ++i) {
        MPoly pi = (i + 1 < s.size()) ? divexact(s[i], s[i + 1]) : s[i];
        if (pi.is_constant()) continue;
        Q cq;
        MPoly prim = make_primitive(pi, &cq);
        for (auto& irr : factor_squarefree_primitive(prim))
            out.factors.push_back({irr, int(i) + 1});
    }

    // fix the content so the product reconstructs f exactly
    MPoly prod = MPoly::constant(f.nvars, FieldElem(Q(1)));
    for (auto& [p, e] : out.factors) prod = prod * p.pow(unsigned(e));
    // f = content * prod must hold: adjust content by the residual constant
    MPoly ratio_num = f;
    // compute f / prod coefficient-wise via exact division
    MPoly quot = divexact(f, prod);
    if (!quot.is_constant()) fail(ErrCode::internal, "factor_rational: reconstruction failed");
    out.content = quot.constant_value().rat();
    return out;
}

std::vector<std::pair<UPoly, int>> factor_upoly(const UPoly& f) {
    if (f.is_zero()) fail(ErrCode::zero_polynomial, "factor_upoly: zero polynomial");
    if (!f.is_rational())
        fail(ErrCode::unsupported_coefficients, "factor_upoly: tower coefficients unsupported");
    std::vector<std::pair<UPoly, int>> out;
    std::vector<UPoly> parts = multiplicity_split(f);
    for (size_t m = 1; m < parts.size(); ++m) {
        if (parts[m].degree() <= 0) continue;
        for (auto& g : zz_factor_squarefree(zvec_of_upoly(parts[m])))
            out.push_back({upoly_of_zvec(g).monic(), int(m)});
    }
    return out;
}

} // namespace stubborn
