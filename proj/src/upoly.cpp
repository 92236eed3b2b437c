#include "upoly.hpp"

#include <algorithm>
#include <sstream>

namespace stubborn {

namespace {

FieldElem q_scale(const FieldElem& x, const Q& s) {
    FieldElem r = x;
    for (auto& c : r.coords) c *= s;
    return r;
}

} // namespace

UPoly UPoly::from_q(const std::vector<Q>& qs) {
    std::vector<FieldElem> c;
    c.reserve(qs.size());
    for (auto& q : qs) c.emplace_back(q);
    return UPoly(std::move(c));
}

void UPoly::normalize() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

bool UPoly::is_rational() const {
    for (auto& x : c)
        if (!x.is_rational()) return false;
    return true;
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& x : r.c) x = -x;
    return r;
}

UPoly UPoly::operator+(const UPoly& o) const {
    std::vector<FieldElem> r(std::max(c.size(), o.c.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < c.size() && i < o.c.size()) r[i] = c[i] + o.c[i];
        else if (i < c.size()) r[i] = c[i];
        else r[i] = o.c[i];
    }
    return UPoly(std::move(r));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return UPoly();
    std::vector<FieldElem> r(c.size() + o.c.size() - 1, FieldElem(Q(0)));
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        for (size_t j = 0; j < o.c.size(); ++j) {
            if (o.c[j].is_zero()) continue;
            r[i + j] += c[i] * o.c[j];
        }
    }
    return UPoly(std::move(r));
}

UPoly UPoly::scaled(const FieldElem& s) const {
    if (s.is_zero()) return UPoly();
    UPoly r = *this;
    for (auto& x : r.c) x = x * s;
    r.normalize();
    return r;
}

bool UPoly::operator==(const UPoly& o) const {
    if (c.size() != o.c.size()) return false;
    for (size_t i = 0; i < c.size(); ++i)
        if (!(c[i] == o.c[i])) return false;
    return true;
}

UPoly UPoly::derivative() const {
    if (c.size() <= 1) return UPoly();
    std::vector<FieldElem> r(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) r[i - 1] = q_scale(c[i], Q(long(i)));
    return UPoly(std::move(r));
}

FieldElem UPoly::eval(const FieldElem& x) const {
    if (is_zero()) return FieldElem(Q(0));
    FieldElem acc = c.back();
    for (size_t i = c.size() - 1; i-- > 0;) acc = acc * x + c[i];
    return acc;
}

QInterval UPoly::eval_interval(const QInterval& x, unsigned prec) const {
    if (is_zero()) return QInterval(Q(0));
    QInterval acc = c.back().enclosure(prec);
    for (size_t i = c.size() - 1; i-- > 0;) acc = acc * x + c[i].enclosure(prec);
    return acc;
}

UPoly UPoly::shift(const FieldElem& a) const {
    // Horner: p(t+a)
    UPoly res;
    UPoly t_plus_a(std::vector<FieldElem>{a, FieldElem(Q(1))});
    for (size_t i = c.size(); i-- > 0;) {
        res = res * t_plus_a;
        res = res + UPoly::constant(c[i]);
    }
    return res;
}

UPoly UPoly::reverse() const {
    std::vector<FieldElem> r(c.rbegin(), c.rend());
    return UPoly(std::move(r));
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(lc().inv());
}

std::string UPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c.size(); i-- > 0;) {
        if (c[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c[i].str() << ")";
        if (i >= 1) os << "*" << var;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

void divmod_field(const UPoly& f, const UPoly& g, UPoly& q, UPoly& r) {
    if (g.is_zero()) fail(ErrCode::precondition, "polynomial division by zero");
    r = f;
    q = UPoly();
    int dg = g.degree();
    FieldElem inv_lc = g.lc().inv();
    while (!r.is_zero() && r.degree() >= dg) {
        int k = r.degree() - dg;
        FieldElem coef = r.lc() * inv_lc;
        // q += coef * t^k ; r -= coef * t^k * g
        std::vector<FieldElem> qc(q.c);
        if ((int)qc.size() < k + 1) qc.resize(k + 1, FieldElem(Q(0)));
        qc[k] += coef;
        q = UPoly(std::move(qc));
        std::vector<FieldElem> rc = r.c;
        for (int i = 0; i <= dg; ++i) {
            if (g.c[i].is_zero()) continue;
            rc[i + k] -= coef * g.c[i];
        }
        UPoly nr(std::move(rc));
        if (!nr.is_zero() && nr.degree() == r.degree())
            fail(ErrCode::internal, "divmod_field failed to reduce degree");
        r = nr;
    }
}

UPoly divexact_field(const UPoly& f, const UPoly& g) {
    UPoly q, r;
    divmod_field(f, g, q, r);
    if (!r.is_zero()) fail(ErrCode::internal, "divexact_field: nonzero remainder");
    return q;
}

namespace {

// ---- integer polynomial helpers (fast path for rational input) ----

using ZPoly = std::vector<Z>; // dense, trailing high zeros trimmed

void z_trim(ZPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

ZPoly z_of_upoly(const UPoly& f) {
    // clear denominators; result is primitive up to sign of lcm scaling
    Z l = 1;
    for (auto& x : f.c) l = lcm(l, x.rat().get_den());
    ZPoly p(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) {
        Q v = f.c[i].rat() * Q(l);
        p[i] = v.get_num();
    }
    z_trim(p);
    return p;
}

Z z_content(const ZPoly& p) {
    Z g = 0;
    for (auto& a : p) g = gcd(g, a);
    return g == 0 ? Z(1) : g;
}

void z_divexact_scalar(ZPoly& p, const Z& d) {
    for (auto& a : p) {
        Z r;
        mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
        a = r;
    }
}

ZPoly z_derivative(const ZPoly& p) {
    if (p.size() <= 1) return {};
    ZPoly r(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * long(i);
    return r;
}

// pseudo-remainder: exactly lc(b)^(da-db+1) * a mod b
ZPoly z_prem(ZPoly a, const ZPoly& b) {
    int da = int(a.size()) - 1, db = int(b.size()) - 1;
    Z lb = b.back();
    int needed = da - db + 1, k = 0;
    while (!a.empty() && int(a.size()) - 1 >= db) {
        Z la = a.back();
        for (auto& x : a) x *= lb;
        ++k;
        int sh = int(a.size()) - 1 - db;
        for (int i = 0; i <= db; ++i) a[size_t(i + sh)] -= la * b[size_t(i)];
        z_trim(a);
    }
    for (; k < needed; ++k)
        for (auto& x : a) x *= lb;
    return a;
}

int z_sign_at(const ZPoly& p, const Q& x) {
    // sign of sum a_i num^i den^(n-i)
    if (p.empty()) return 0;
    Z num = x.get_num(), den = x.get_den();
    Z acc = 0, npow = 1;
    std::vector<Z> dpow(p.size());
    dpow[p.size() - 1] = 1;
    for (size_t i = p.size() - 1; i-- > 0;) dpow[i] = dpow[i + 1] * den;
    for (size_t i = 0; i < p.size(); ++i) {
        acc += p[i] * npow * dpow[i];
        npow *= num;
    }
    return sgn(acc);
}

int z_variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

} // namespace

SturmChain sturm_chain(const UPoly& f) {
    SturmChain ch;
    if (f.is_zero()) return ch;
    if (f.is_rational()) {
        ch.zmode = true;
        ZPoly a = z_of_upoly(f);
        z_divexact_scalar(a, z_content(a));
        ch.zs.push_back(a);
        ZPoly b = z_derivative(a);
        z_trim(b);
        if (!b.empty()) {
            z_divexact_scalar(b, z_content(b));
            ch.zs.push_back(b);
            while (true) {
                const ZPoly& s0 = ch.zs[ch.zs.size() - 2];
                const ZPoly& s1 = ch.zs.back();
                if (int(s1.size()) - 1 < 1) break;
                int d = int(s0.size()) - int(s1.size());
                ZPoly r = z_prem(s0, s1);
                if (r.empty()) break;
                // prem scales by lc(s1)^(d+1); restore the true remainder's
                // sign, then negate for the Sturm recurrence
                bool flip = (sgn(s1.back()) < 0) && ((d + 1) % 2 == 1);
                for (auto& x : r) x = flip ? x : -x;
                z_divexact_scalar(r, z_content(r));
                ch.zs.push_back(r);
            }
        }
        return ch;
    }
    ch.zmode = false;
    ch.fs.push_back(f);
    UPoly d = f.derivative();
    if (!d.is_zero()) {
        ch.fs.push_back(d);
        while (true) {
            const UPoly& s0 = ch.fs[ch.fs.size() - 2];
            const UPoly& s1 = ch.fs.back();
            if (s1.degree() < 1) break;
            UPoly q, r;
            divmod_field(s0, s1, q, r);
            if (r.is_zero()) break;
            ch.fs.push_back(-r);
        }
    }
    return ch;
}

int SturmChain::var_at(const Q& x) const {
    std::vector<int> signs;
    if (zmode) {
        for (auto& p : zs) signs.push_back(z_sign_at(p, x));
    } else {
        for (auto& p : fs) signs.push_back(p.eval(FieldElem(x)).sign());
    }
    return z_variations(signs);
}

int SturmChain::var_at_pos_inf() const {
    std::vector<int> signs;
    if (zmode) {
        for (auto& p : zs) signs.push_back(p.empty() ? 0 : sgn(p.back()));
    } else {
        for (auto& p : fs) signs.push_back(p.is_zero() ? 0 : p.lc().sign());
    }
    return z_variations(signs);
}

int SturmChain::var_at_neg_inf() const {
    std::vector<int> signs;
    if (zmode) {
        for (auto& p : zs) {
            int s = p.empty() ? 0 : sgn(p.back());
            if ((int(p.size()) - 1) % 2 == 1) s = -s;
            signs.push_back(s);
        }
    } else {
        for (auto& p : fs) {
            int s = p.is_zero() ? 0 : p.lc().sign();
            if (p.degree() % 2 == 1) s = -s;
            signs.push_back(s);
        }
    }
    return z_variations(signs);
}

int SturmChain::count(const Q& a, const Q& b) const { return var_at(a) - var_at(b); }

namespace {

UPoly upoly_of_z(const ZPoly& p) {
    std::vector<FieldElem> c(p.size());
    for (size_t i = 0; i < p.size(); ++i) c[i] = FieldElem(Q(p[i]));
    return UPoly(std::move(c));
}

ZPoly z_gcd(ZPoly a, ZPoly b) {
    z_trim(a); z_trim(b);
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.size() < b.size()) std::swap(a, b);
    Z ca = z_content(a), cb = z_content(b);
    z_divexact_scalar(a, ca);
    z_divexact_scalar(b, cb);
    Z cont = gcd(ca, cb);
    Z g = 1, h = 1;
    while (true) {
        int d = int(a.size()) - int(b.size());
        ZPoly r = z_prem(a, b);
        if (r.empty()) break;
        if (r.size() == 1) { b = {Z(1)}; break; }
        a = std::move(b);
        b = std::move(r);
        Z denom = g * h;
        for (int i = 1; i < d; ++i) denom *= h;
        z_divexact_scalar(b, denom);
        g = a.back();
        // h = g^d / h^(d-1)
        if (d == 0) {
            // h unchanged
        } else {
            Z num = g;
            for (int i = 1; i < d; ++i) num *= g;
            Z den = 1;
            for (int i = 1; i < d; ++i) den *= h;
            Z nh;
            mpz_divexact(nh.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            h = nh;
        }
    }
    z_divexact_scalar(b, z_content(b));
    if (sgn(b.back()) < 0)
        for (auto& x : b) x = -x;
    for (auto& x : b) x *= cont;
    return b;
}

} // namespace

UPoly gcd_field(UPoly a, UPoly b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_rational() && b.is_rational()) {
        ZPoly g = z_gcd(z_of_upoly(a), z_of_upoly(b));
        return upoly_of_z(g).monic();
    }
    while (!b.is_zero()) {
        UPoly q, r;
        divmod_field(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
        if (!b.is_zero()) b = b.monic();
    }
    return a.monic();
}

UPoly squarefree_part(const UPoly& f) {
    if (f.degree() <= 0) return f.monic();
    UPoly g = gcd_field(f, f.derivative());
    return divexact_field(f, g).monic();
}

std::vector<UPoly> multiplicity_split(const UPoly& f) {
    // gcd-chain: d0 = f, d_{i+1} = gcd(d_i, d_i'); s_i = d_{i-1}/d_i holds
    // roots of multiplicity >= i; p_i = s_i / s_{i+1} exactly multiplicity i.
    std::vector<UPoly> d{f.monic()};
    while (d.back().degree() > 0)
        d.push_back(gcd_field(d.back(), d.back().derivative()));
    std::vector<UPoly> s;
    for (size_t i = 1; i < d.size(); ++i) s.push_back(divexact_field(d[i - 1], d[i]));
    std::vector<UPoly> p(d.size() + 1, UPoly::constant(FieldElem(Q(1))));
    for (size_t i = 0; i < s.size(); ++i) {
        UPoly next = (i + 1 < s.size()) ? s[i + 1] : UPoly::constant(FieldElem(Q(1)));
        p[i + 1] = divexact_field(s[i], next).monic();
    }
    return p;
}

int sign_variations(const std::vector<FieldElem>& seq) {
    int v = 0, last = 0;
    for (auto& x : seq) {
        int s = x.sign();
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

int descartes_bound(const UPoly& f) { return sign_variations(f.c); }

namespace {

Q cauchy_bound(const UPoly& f) {
    // rational B with all real roots in (-B, B)
    Q maxabs(0);
    for (size_t i = 0; i + 1 < f.c.size(); ++i) {
        QInterval e = f.c[i].enclosure(64);
        Q m = std::max(abs(e.lo), abs(e.hi));
        if (m > maxabs) maxabs = m;
    }
    Q lclow;
    unsigned prec = 64;
    while (true) {
        QInterval e = f.lc().enclosure(prec);
        if (e.sign_known()) {
            lclow = e.sign() > 0 ? e.lo : -e.hi;
            break;
        }
        prec *= 2;
        if (prec > (1u << 20)) fail(ErrCode::internal, "cauchy_bound: cannot bound leading coeff");
    }
    return Q(2) + maxabs / lclow;
}

} // namespace

std::vector<RootInterval> isolate_squarefree(const UPoly& f) {
    std::vector<RootInterval> out;
    if (f.degree() <= 0) return out;
    SturmChain ch = sturm_chain(f);
    Q B = cauchy_bound(f);
    struct Seg { Q a, b; int n; };
    std::vector<Seg> stack;
    int total = ch.count(-B, B);
    if (total > 0) stack.push_back({-B, B, total});
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.n == 0) continue;
        if (s.n == 1) {
            RootInterval r;
            r.sqfree = f;
            r.iv = QInterval(s.a, s.b);
            out.push_back(std::move(r));
            continue;
        }
        Q m = (s.a + s.b) / 2;
        if (f.eval(FieldElem(m)).is_zero()) {
            RootInterval r;
            r.sqfree = f;
            r.iv = QInterval(m);
            out.push_back(std::move(r));
            Q d = (s.b - s.a) / 4;
            while (ch.count(m - d, m + d) != 1) d /= 2;
            int left = ch.count(s.a, m - d);
            int right = ch.count(m + d, s.b);
            if (left) stack.push_back({s.a, m - d, left});
            if (right) stack.push_back({m + d, s.b, right});
        } else {
            int left = ch.count(s.a, m);
            if (left) stack.push_back({s.a, m, left});
            if (s.n - left) stack.push_back({m, s.b, s.n - left});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const RootInterval& x, const RootInterval& y) { return x.iv.lo < y.iv.lo; });
    return out;
}

void RootInterval::refine() {
    if (is_exact()) return;
    Q m = iv.mid();
    FieldElem fm = sqfree.eval(FieldElem(m));
    if (fm.is_zero()) {
        iv = QInterval(m);
        return;
    }
    int sm = fm.sign();
    int shi = sqfree.eval(FieldElem(iv.hi)).sign();
    if (sm == shi) iv.hi = m;
    else iv.lo = m;
}

void RootInterval::refine_below(const Q& width) {
    while (!is_exact() && iv.width() >= width) refine();
}

bool is_zero_at_root(const UPoly& g, RootInterval& r) {
    if (g.is_zero()) return true;
    if (r.is_exact()) return g.eval(FieldElem(r.iv.lo)).is_zero();
    UPoly h = gcd_field(r.sqfree, g);
    if (h.degree() <= 0) return false;
    SturmChain ch = sturm_chain(h);
    return ch.count(r.iv.lo, r.iv.hi) > 0;
}

int sign_at_root(const UPoly& g, RootInterval& r) {
    if (g.is_zero()) return 0;
    if (r.is_exact()) return g.eval(FieldElem(r.iv.lo)).sign();
    if (is_zero_at_root(g, r)) return 0;
    unsigned prec = 64;
    while (true) {
        QInterval e = g.eval_interval(r.iv, prec);
        if (e.sign_known()) return e.sign();
        r.refine();
        if (prec < (1u << 16)) prec *= 2;
    }
}

RootProfile root_profile(const UPoly& f) {
    if (f.is_zero()) fail(ErrCode::precondition, "root_profile of zero polynomial");
    RootProfile rp;
    rp.degree = f.degree();
    std::vector<UPoly> parts = multiplicity_split(f);
    for (size_t m = 1; m < parts.size(); ++m) {
        if (parts[m].degree() <= 0) continue;
        for (auto& ri : isolate_squarefree(parts[m])) {
            ri.multiplicity = int(m);
            rp.real_roots.push_back(std::move(ri));
        }
    }
    std::sort(rp.real_roots.begin(), rp.real_roots.end(),
              [](const RootInterval& x, const RootInterval& y) { return x.iv.lo < y.iv.lo; });
    // make isolating intervals pairwise disjoint
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < rp.real_roots.size(); ++i) {
            auto& a = rp.real_roots[i];
            auto& b = rp.real_roots[i + 1];
            if (a.iv.intersects(b.iv)) {
                if (!a.is_exact()) a.refine();
                if (!b.is_exact()) b.refine();
                if (a.iv.lo > b.iv.lo) std::swap(a, b);
                changed = true;
            }
        }
    }
    rp.nonreal_multiplicity = rp.degree - rp.real_count_with_mult();
    return rp;
}

int real_root_count_with_mult(const UPoly& f) {
    if (f.is_zero()) fail(ErrCode::precondition, "root count of zero polynomial");
    int total = 0;
    std::vector<UPoly> parts = multiplicity_split(f);
    for (size_t m = 1; m < parts.size(); ++m) {
        if (parts[m].degree() <= 0) continue;
        SturmChain ch = sturm_chain(parts[m]);
        total += int(m) * ch.count_all();
    }
    return total;
}

bool all_roots_real(const UPoly& f) {
    return real_root_count_with_mult(f) == f.degree();
}

} // namespace stubborn
