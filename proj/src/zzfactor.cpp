#include "zzfactor.hpp"
#include "errors.hpp"

#include <algorithm>
#include <memory>

namespace stubborn {

namespace {

void trim(ZVec& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int deg(const ZVec& p) { return int(p.size()) - 1; }

Z content(const ZVec& p) {
    Z g = 0;
    for (auto& a : p) g = gcd(g, a);
    return g == 0 ? Z(1) : g;
}

ZVec primitive(ZVec p) {
    trim(p);
    if (p.empty()) return p;
    Z c = content(p);
    if (sgn(p.back()) < 0) c = -c;
    for (auto& a : p) {
        Z r;
        mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
        a = r;
    }
    return p;
}

// ---------- arithmetic mod m (m = p or p^k) ----------

Z md(const Z& a, const Z& m) {
    Z r = a % m;
    if (sgn(r) < 0) r += m;
    return r;
}

ZVec mod_poly(ZVec p, const Z& m) {
    for (auto& a : p) a = md(a, m);
    trim(p);
    return p;
}

Z inv_mod(const Z& a, const Z& m) {
    Z r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        fail(ErrCode::internal, "inv_mod: not invertible");
    return r;
}

ZVec mul_mod(const ZVec& a, const ZVec& b, const Z& m) {
    if (a.empty() || b.empty()) return {};
    ZVec r(a.size() + b.size() - 1, Z(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return mod_poly(std::move(r), m);
}

// division by monic g
void divmod_monic(const ZVec& f, const ZVec& g, const Z& m, ZVec& q, ZVec& r) {
    r = mod_poly(f, m);
    q.assign(std::max<size_t>(1, f.size()), Z(0));
    int dg = deg(g);
    while (deg(r) >= dg) {
        int k = deg(r) - dg;
        Z c = r.back();
        q[size_t(k)] = md(q[size_t(k)] + c, m);
        for (int i = 0; i <= dg; ++i)
            r[size_t(i + k)] = md(r[size_t(i + k)] - c * g[size_t(i)], m);
        trim(r);
    }
    trim(q);
}

ZVec rem_monic(const ZVec& f, const ZVec& g, const Z& m) {
    ZVec q, r;
    divmod_monic(f, g, m, q, r);
    return r;
}

ZVec quo_monic_exact(const ZVec& f, const ZVec& g, const Z& m) {
    ZVec q, r;
    divmod_monic(f, g, m, q, r);
    if (!r.empty()) fail(ErrCode::internal, "quo_monic_exact: not divisible");
    return q;
}

ZVec make_monic(const ZVec& f, const Z& m) {
    ZVec r = mod_poly(f, m);
    if (r.empty()) return r;
    Z inv = inv_mod(r.back(), m);
    for (auto& a : r) a = md(a * inv, m);
    return r;
}

ZVec gcd_mod(ZVec a, ZVec b, const Z& p) {
    a = mod_poly(std::move(a), p);
    b = mod_poly(std::move(b), p);
    while (!b.empty()) {
        ZVec bm = make_monic(b, p);
        ZVec r = rem_monic(a, bm, p);
        a = std::move(bm);
        b = std::move(r);
    }
    return a.empty() ? a : make_monic(a, p);
}

ZVec pow_mod(ZVec base, Z e, const ZVec& f, const Z& p) {
    ZVec acc{Z(1)};
    base = rem_monic(base, f, p);
    while (sgn(e) > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = rem_monic(mul_mod(acc, base, p), f, p);
        base = rem_monic(mul_mod(base, base, p), f, p);
        e >>= 1;
    }
    return acc;
}

ZVec derivative(const ZVec& f) {
    if (f.size() <= 1) return {};
    ZVec r(f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i) r[i - 1] = f[i] * long(i);
    return r;
}

// ---------- factorization mod p ----------

void equal_degree_split(const ZVec& f, int d, const Z& p, SplitMix64& rng,
                        std::vector<ZVec>& out) {
    if (deg(f) == d) {
        out.push_back(f);
        return;
    }
    while (true) {
        ZVec r(size_t(deg(f)), Z(0));
        for (auto& a : r) a = md(Z(long(rng.next() % 1000003)), p);
        trim(r);
        if (deg(r) < 1) continue;
        Z e = 1;
        for (int i = 0; i < d; ++i) e *= p;
        e = (e - 1) / 2;
        ZVec s = pow_mod(r, e, f, p);
        if (s.empty()) continue;
        if (s.empty()) continue;
        s[0] = md(s[0] - 1, p);
        trim(s);
        if (s.empty()) continue;
        ZVec g = gcd_mod(s, f, p);
        if (deg(g) >= 1 && deg(g) < deg(f)) {
            equal_degree_split(g, d, p, rng, out);
            equal_degree_split(quo_monic_exact(f, g, p), d, p, rng, out);
            return;
        }
    }
}

std::vector<ZVec> factor_mod_p(const ZVec& fin, const Z& p, SplitMix64& rng) {
    std::vector<ZVec> out;
    ZVec f = make_monic(fin, p);
    ZVec h{Z(0), Z(1)}; // x
    int d = 0;
    while (deg(f) >= 1) {
        ++d;
        if (deg(f) < 2 * d) {
            out.push_back(f);
            break;
        }
        h = pow_mod(h, p, f, p);
        ZVec hm = h;
        if (hm.size() < 2) hm.resize(2, Z(0));
        hm[1] = md(hm[1] - 1, p); // h - x
        trim(hm);
        // hm empty means x^(p^d) == x mod f: every remaining factor has
        // degree d, and gcd(0, f) = f below does the right thing
        ZVec g = gcd_mod(hm, f, p);
        if (deg(g) >= 1) {
            equal_degree_split(g, d, p, rng, out);
            f = quo_monic_exact(f, g, p);
            h = rem_monic(h, f, p);
        }
    }
    return out;
}

// ---------- Hensel lifting (monic, tree) ----------

struct HNode {
    std::unique_ptr<HNode> l, r;
    ZVec val;  // product of its leaf factors, monic mod current modulus
    ZVec s, t; // Bezout: s*l.val + t*r.val = 1
    int leaf_index = -1;
};

void ext_gcd_mod(const ZVec& a, const ZVec& b, const Z& p, ZVec& s, ZVec& t) {
    ZVec r0 = mod_poly(a, p), r1 = mod_poly(b, p);
    ZVec s0{Z(1)}, s1{}, t0{}, t1{Z(1)};
    while (!r1.empty()) {
        Z lead_inv = inv_mod(r1.back(), p);
        ZVec r1m = make_monic(r1, p);
        ZVec q, rr;
        divmod_monic(r0, r1m, p, q, rr);
        ZVec qq = q;
        for (auto& c : qq) c = md(c * lead_inv, p);
        auto step = [&](ZVec& u0, ZVec& u1) {
            ZVec qu = mul_mod(qq, u1, p);
            ZVec nu = u0;
            nu.resize(std::max(nu.size(), qu.size()), Z(0));
            for (size_t i = 0; i < qu.size(); ++i) nu[i] = md(nu[i] - qu[i], p);
            trim(nu);
            u0 = std::move(u1);
            u1 = std::move(nu);
        };
        step(s0, s1);
        step(t0, t1);
        r0 = std::move(r1);
        r1 = std::move(rr);
    }
    if (deg(r0) != 0) fail(ErrCode::internal, "ext_gcd_mod: inputs not coprime");
    Z inv = inv_mod(r0[0], p);
    for (auto& c : s0) c = md(c * inv, p);
    for (auto& c : t0) c = md(c * inv, p);
    s = s0;
    t = t0;
}

std::unique_ptr<HNode> build_tree(const std::vector<ZVec>& factors, int lo, int hi, const Z& p) {
    auto node = std::make_unique<HNode>();
    if (hi - lo == 1) {
        node->leaf_index = lo;
        node->val = factors[size_t(lo)];
        return node;
    }
    int mid = (lo + hi) / 2;
    node->l = build_tree(factors, lo, mid, p);
    node->r = build_tree(factors, mid, hi, p);
    node->val = mul_mod(node->l->val, node->r->val, p);
    ext_gcd_mod(node->l->val, node->r->val, p, node->s, node->t);
    return node;
}

void hensel_step(const ZVec& f, ZVec& g, ZVec& h, ZVec& s, ZVec& t, const Z& m2) {
    auto sub = [&](const ZVec& a, const ZVec& b) {
        ZVec r = a;
        r.resize(std::max(a.size(), b.size()), Z(0));
        for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
        for (auto& c : r) c = md(c, m2);
        trim(r);
        return r;
    };
    auto add = [&](const ZVec& a, const ZVec& b) {
        ZVec r = a;
        r.resize(std::max(a.size(), b.size()), Z(0));
        for (size_t i = 0; i < b.size(); ++i) r[i] = md(r[i] + b[i], m2);
        trim(r);
        return r;
    };
    ZVec e = sub(mod_poly(f, m2), mul_mod(g, h, m2));
    ZVec q, r;
    divmod_monic(mul_mod(s, e, m2), h, m2, q, r);
    ZVec g1 = add(g, add(mul_mod(t, e, m2), mul_mod(q, g, m2)));
    ZVec h1 = add(h, r);
    ZVec b = sub(add(mul_mod(s, g1, m2), mul_mod(t, h1, m2)), ZVec{Z(1)});
    ZVec c, d;
    divmod_monic(mul_mod(s, b, m2), h1, m2, c, d);
    ZVec s1 = sub(s, d);
    ZVec t1 = sub(sub(t, mul_mod(t, b, m2)), mul_mod(c, g1, m2));
    g = g1; h = h1; s = s1; t = t1;
}

void lift_node(HNode* node, const ZVec& newval, const Z& m2) {
    node->val = newval;
    if (!node->l) return;
    ZVec g = node->l->val, h = node->r->val, s = node->s, t = node->t;
    hensel_step(newval, g, h, s, t, m2);
    node->s = s;
    node->t = t;
    lift_node(node->l.get(), g, m2);
    lift_node(node->r.get(), h, m2);
}

void collect_leaves(const HNode* node, std::vector<ZVec>& out) {
    if (node->leaf_index >= 0) {
        out[size_t(node->leaf_index)] = node->val;
        return;
    }
    collect_leaves(node->l.get(), out);
    collect_leaves(node->r.get(), out);
}

Z sym(const Z& a, const Z& m) {
    Z r = md(a, m);
    if (r * 2 > m) r -= m;
    return r;
}

ZVec sym_poly(ZVec p, const Z& m) {
    for (auto& a : p) a = sym(a, m);
    trim(p);
    return p;
}

bool zz_divides(const ZVec& f, const ZVec& g, ZVec& q) {
    ZVec r = f;
    q.assign(f.size(), Z(0));
    int dg = deg(g);
    const Z& lg = g.back();
    while (deg(r) >= dg) {
        Z lr = r.back();
        if (!mpz_divisible_p(lr.get_mpz_t(), lg.get_mpz_t())) return false;
        Z c;
        mpz_divexact(c.get_mpz_t(), lr.get_mpz_t(), lg.get_mpz_t());
        int k = deg(r) - dg;
        q[size_t(k)] = c;
        for (int i = 0; i <= dg; ++i) r[size_t(i + k)] -= c * g[size_t(i)];
        trim(r);
    }
    trim(q);
    return r.empty();
}

} // namespace

std::vector<ZVec> zz_factor_squarefree(const ZVec& fin, uint64_t seed) {
    ZVec f = primitive(fin);
    std::vector<ZVec> result;
    if (deg(f) < 1) return result;
    if (deg(f) == 1) {
        result.push_back(f);
        return result;
    }
    SplitMix64 rng(seed * 0x9e37ULL + 12345ULL);

    static const long primes[] = {1000003, 1000033, 1000037, 1000039, 1000081,
                                  1000099, 1000117, 1000121, 1000133, 1000151,
                                  2000003, 2000029, 2000039, 4000037, 8000009};
    Z p = 0;
    for (long cand : primes) {
        Z pc(cand);
        if (mpz_divisible_p(f.back().get_mpz_t(), pc.get_mpz_t())) continue;
        ZVec fp = mod_poly(f, pc);
        if (deg(fp) != deg(f)) continue;
        ZVec g = gcd_mod(fp, derivative(fp), pc);
        if (deg(g) == 0) { p = pc; break; }
    }
    if (p == 0) fail(ErrCode::internal, "zz_factor: no usable prime");

    std::vector<ZVec> modular = factor_mod_p(f, p, rng);
    if (modular.size() == 1) {
        result.push_back(f);
        return result;
    }
    std::sort(modular.begin(), modular.end(), [](const ZVec& a, const ZVec& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });

    // lift beyond twice the Mignotte bound times the leading coefficient
    Z H = 0;
    for (auto& a : f) {
        Z aa = abs(a);
        if (aa > H) H = aa;
    }
    Z bound = (Z(1) << unsigned(deg(f) + 1)) * Z(long(deg(f)) + 1) * H * abs(f.back()) * 2;
    auto tree = build_tree(modular, 0, int(modular.size()), p);
    Z m = p;
    while (m <= bound) {
        Z m2 = m * m;
        Z lcinv = inv_mod(f.back(), m2);
        ZVec fmonic = mod_poly(f, m2);
        for (auto& a : fmonic) a = md(a * lcinv, m2);
        lift_node(tree.get(), fmonic, m2);
        m = m2;
    }
    std::vector<ZVec> lifted(modular.size());
    collect_leaves(tree.get(), lifted);

    // subset recombination against the shrinking f
    std::vector<int> alive(lifted.size(), 1);
    int remaining = int(lifted.size());
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
            ZVec cand{f.back()};
            for (int i = 0; i < card; ++i)
                cand = mul_mod(cand, lifted[size_t(idx[size_t(comb[size_t(i)])])], m);
            cand = primitive(sym_poly(cand, m));
            ZVec q;
            if (deg(cand) >= 1 && zz_divides(f, cand, q)) {
                result.push_back(cand);
                for (int i = 0; i < card; ++i) alive[size_t(idx[size_t(comb[size_t(i)])])] = 0;
                remaining -= card;
                f = primitive(q);
                found = true;
                break;
            }
            int i = card - 1;
            while (i >= 0 && comb[size_t(i)] == n - card + i) --i;
            if (i < 0) break;
            ++comb[size_t(i)];
            for (int j = i + 1; j < card; ++j) comb[size_t(j)] = comb[size_t(j - 1)] + 1;
        }
        if (!found) ++card;
    }
    if (deg(f) >= 1) result.push_back(primitive(f));
    return result;
}

} // namespace stubborn
