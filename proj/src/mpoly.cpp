#include "mpoly.hpp"

#include <algorithm>
#include <sstream>

namespace stubborn {

MPoly MPoly::constant(int nv, const FieldElem& c) {
    MPoly p(nv);
    if (!c.is_zero()) p.terms.emplace(Mono(nv, 0), c);
    return p;
}

MPoly MPoly::var(int nv, int i, unsigned e) {
    MPoly p(nv);
    Mono m(nv, 0);
    m[i] = e;
    p.terms.emplace(std::move(m), FieldElem(Q(1)));
    return p;
}

bool MPoly::is_constant() const {
    if (terms.empty()) return true;
    return terms.size() == 1 && mono_tdeg(terms.begin()->first) == 0;
}

FieldElem MPoly::constant_value() const {
    if (terms.empty()) return FieldElem(Q(0));
    auto it = terms.find(Mono(nvars, 0));
    return it == terms.end() ? FieldElem(Q(0)) : it->second;
}

bool MPoly::is_rational() const {
    for (auto& [m, c] : terms)
        if (!c.is_rational()) return false;
    return true;
}

int MPoly::total_degree() const {
    if (terms.empty()) return -1;
    return int(mono_tdeg(terms.rbegin()->first));
}

int MPoly::degree_in(int v) const {
    int d = 0;
    for (auto& [m, c] : terms) d = std::max(d, int(m[v]));
    return d;
}

bool MPoly::is_homogeneous() const {
    if (terms.empty()) return true;
    unsigned d = mono_tdeg(terms.begin()->first);
    for (auto& [m, c] : terms)
        if (mono_tdeg(m) != d) return false;
    return true;
}

void MPoly::add_term(const Mono& m, const FieldElem& c) {
    if (c.is_zero()) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
        terms.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [m, c] : r.terms) c = -c;
    return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r = *this;
    for (auto& [m, c] : o.terms) r.add_term(m, c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    MPoly r = *this;
    for (auto& [m, c] : o.terms) r.add_term(m, -c);
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    MPoly r(nvars);
    if (is_zero() || o.is_zero()) return r;
    for (auto& [ma, ca] : terms) {
        for (auto& [mb, cb] : o.terms) {
            Mono m(nvars);
            for (int i = 0; i < nvars; ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

bool MPoly::operator==(const MPoly& o) const {
    if (terms.size() != o.terms.size()) return false;
    auto it = terms.begin();
    auto jt = o.terms.begin();
    for (; it != terms.end(); ++it, ++jt) {
        if (it->first != jt->first) return false;
        if (!(it->second == jt->second)) return false;
    }
    return true;
}

MPoly MPoly::scaled(const FieldElem& s) const {
    MPoly r(nvars);
    if (s.is_zero()) return r;
    for (auto& [m, c] : terms) r.terms.emplace(m, c * s);
    return r;
}

MPoly MPoly::pow(unsigned e) const {
    MPoly acc = MPoly::constant(nvars, FieldElem(Q(1)));
    MPoly base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

MPoly MPoly::derivative(int v) const {
    MPoly r(nvars);
    for (auto& [m, c] : terms) {
        if (m[v] == 0) continue;
        Mono n = m;
        n[v] -= 1;
        r.add_term(n, c * FieldElem(Q(long(m[v]))));
    }
    return r;
}

std::vector<MPoly> MPoly::gradient() const {
    std::vector<MPoly> g;
    for (int v = 0; v < nvars; ++v) g.push_back(derivative(v));
    return g;
}

FieldElem MPoly::eval(const std::vector<FieldElem>& x) const {
    FieldElem acc(Q(0));
    for (auto& [m, c] : terms) {
        FieldElem t = c;
        for (int i = 0; i < nvars; ++i)
            if (m[i]) t = t * x[i].pow(m[i]);
        acc += t;
    }
    return acc;
}

QInterval MPoly::eval_interval(const std::vector<QInterval>& x, unsigned prec) const {
    QInterval acc(Q(0));
    for (auto& [m, c] : terms) {
        QInterval t = c.enclosure(prec);
        for (int i = 0; i < nvars; ++i)
            if (m[i]) t = t * x[i].pow(m[i]);
        acc = acc + t;
    }
    return acc;
}

MPoly MPoly::substitute(int v, const MPoly& g) const {
    // cache powers of g
    std::vector<MPoly> pows{MPoly::constant(nvars, FieldElem(Q(1)))};
    MPoly r(nvars);
    for (auto& [m, c] : terms) {
        while (pows.size() <= m[v]) pows.push_back(pows.back() * g);
        Mono n = m;
        n[v] = 0;
        MPoly t(nvars);
        t.terms.emplace(n, c);
        r += t * pows[m[v]];
    }
    return r;
}

MPoly MPoly::subs_all(const std::vector<MPoly>& imgs, int out_nvars) const {
    MPoly r(out_nvars);
    for (auto& [m, c] : terms) {
        MPoly t = MPoly::constant(out_nvars, c);
        for (int i = 0; i < nvars; ++i)
            if (m[i]) t = t * imgs[i].pow(m[i]);
        r += t;
    }
    return r;
}

MPoly MPoly::set_var_one(int v) const {
    MPoly r(nvars);
    for (auto& [m, c] : terms) {
        Mono n = m;
        n[v] = 0;
        r.add_term(n, c);
    }
    return r;
}

MPoly MPoly::drop_var(int v) const {
    MPoly r(nvars - 1);
    for (auto& [m, c] : terms) {
        if (m[v] != 0) fail(ErrCode::internal, "drop_var: variable present");
        Mono n;
        n.reserve(nvars - 1);
        for (int i = 0; i < nvars; ++i)
            if (i != v) n.push_back(m[i]);
        r.terms.emplace(std::move(n), c);
    }
    return r;
}

MPoly MPoly::insert_var(int pos) const {
    MPoly r(nvars + 1);
    for (auto& [m, c] : terms) {
        Mono n;
        n.reserve(nvars + 1);
        for (int i = 0; i < pos; ++i) n.push_back(m[i]);
        n.push_back(0);
        for (int i = pos; i < nvars; ++i) n.push_back(m[i]);
        r.terms.emplace(std::move(n), c);
    }
    return r;
}

MPoly MPoly::homogenize(int deg, int v) const {
    MPoly r(nvars);
    for (auto& [m, c] : terms) {
        int t = int(mono_tdeg(m)) - int(m[v]);
        int need = deg - t - int(m[v]);
        if (need < 0) fail(ErrCode::chart_mismatch, "homogenize: target degree below term degree");
        Mono n = m;
        n[v] += unsigned(need);
        r.add_term(n, c);
    }
    return r;
}

MPoly MPoly::swap_vars(int a, int b) const {
    MPoly r(nvars);
    for (auto& [m, c] : terms) {
        Mono n = m;
        std::swap(n[a], n[b]);
        r.add_term(n, c);
    }
    return r;
}

MPoly MPoly::linear_change(const std::vector<std::vector<Q>>& M) const {
    std::vector<MPoly> imgs(nvars);
    for (int i = 0; i < nvars; ++i) {
        MPoly li(nvars);
        for (int j = 0; j < nvars; ++j)
            li += MPoly::var(nvars, j).scaled(FieldElem(M[i][j]));
        imgs[i] = li;
    }
    return subs_all(imgs, nvars);
}

const Mono& MPoly::lead_mono() const {
    if (terms.empty()) fail(ErrCode::internal, "lead of zero polynomial");
    return terms.rbegin()->first;
}

const FieldElem& MPoly::lead_coeff() const {
    if (terms.empty()) fail(ErrCode::internal, "lead of zero polynomial");
    return terms.rbegin()->second;
}

std::string MPoly::str(const std::vector<std::string>& vars) const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const Mono& m = it->first;
        std::string cs = it->second.str();
        bool neg = false;
        if (cs.size() && cs[0] == '-' && cs.find('+', 1) == std::string::npos &&
            cs.find('-', 1) == std::string::npos) {
            neg = true;
            cs = cs.substr(1);
        }
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? "-" : "+");
        }
        bool wrap = cs.find('+') != std::string::npos || cs.find('-') != std::string::npos;
        bool unit = (cs == "1") && mono_tdeg(m) > 0;
        bool printed = false;
        if (!unit) {
            if (wrap) os << "(" << cs << ")";
            else os << cs;
            printed = true;
        }
        for (int i = 0; i < nvars; ++i) {
            if (!m[i]) continue;
            if (printed) os << "*";
            os << vars[size_t(i)];
            if (m[i] > 1) os << "^" << m[i];
            printed = true;
        }
        if (!printed) os << cs; // constant 1
    }
    return os.str();
}

std::string MPoly::str() const {
    static const char* names[] = {"x", "y", "z", "w", "u", "v", "s", "t"};
    std::vector<std::string> vars;
    for (int i = 0; i < nvars; ++i)
        vars.push_back(i < 8 ? names[i] : "x" + std::to_string(i));
    return str(vars);
}

std::vector<MPoly> MPoly::as_univar(int v) const {
    std::vector<MPoly> cs(size_t(degree_in(v)) + 1, MPoly(nvars));
    for (auto& [m, c] : terms) {
        Mono n = m;
        unsigned e = n[v];
        n[v] = 0;
        cs[e].add_term(n, c);
    }
    while (cs.size() > 1 && cs.back().is_zero()) cs.pop_back();
    return cs;
}

MPoly MPoly::from_univar(const std::vector<MPoly>& cs, int v) {
    if (cs.empty()) fail(ErrCode::internal, "from_univar: empty");
    MPoly r(cs[0].nvars);
    for (size_t e = 0; e < cs.size(); ++e) {
        for (auto& [m, c] : cs[e].terms) {
            Mono n = m;
            n[v] += unsigned(e);
            r.add_term(n, c);
        }
    }
    return r;
}

UPoly MPoly::to_upoly(int v) const {
    std::vector<FieldElem> c(size_t(degree_in(v)) + 1, FieldElem(Q(0)));
    for (auto& [m, co] : terms) {
        for (int i = 0; i < nvars; ++i)
            if (i != v && m[i] != 0)
                fail(ErrCode::internal, "to_upoly: polynomial is not univariate");
        c[m[v]] += co;
    }
    return UPoly(std::move(c));
}

MPoly MPoly::of_upoly(const UPoly& p, int nv, int v) {
    MPoly r(nv);
    for (size_t i = 0; i < p.c.size(); ++i) {
        if (p.c[i].is_zero()) continue;
        Mono m(nv, 0);
        m[v] = unsigned(i);
        r.terms.emplace(std::move(m), p.c[i]);
    }
    return r;
}

bool divides(const MPoly& g, const MPoly& f, MPoly* quotient) {
    if (g.is_zero()) return f.is_zero();
    MPoly r = f, q(f.nvars);
    const Mono& gm = g.lead_mono();
    FieldElem glc_inv = g.lead_coeff().inv();
    while (!r.is_zero()) {
        const Mono& rm = r.lead_mono();
        Mono d(f.nvars);
        for (int i = 0; i < f.nvars; ++i) {
            if (rm[i] < gm[i]) return false;
            d[i] = rm[i] - gm[i];
        }
        FieldElem c = r.lead_coeff() * glc_inv;
        MPoly t(f.nvars);
        t.terms.emplace(d, c);
        q += t;
        r -= t * g;
    }
    if (quotient) *quotient = q;
    return true;
}

MPoly divexact(const MPoly& f, const MPoly& g) {
    MPoly q;
    if (!divides(g, f, &q)) fail(ErrCode::internal, "divexact: not divisible");
    return q;
}

MPoly reduce_mod(const MPoly& f, const MPoly& g, const std::vector<int>& var_priority) {
    if (g.is_zero()) fail(ErrCode::precondition, "reduce_mod by zero");
    // permute so the requested priority becomes the grlex variable order
    int nv = f.nvars;
    std::vector<int> inv(nv);
    for (int i = 0; i < nv; ++i) inv[var_priority[size_t(i)]] = i;
    auto permute = [&](const MPoly& p, const std::vector<int>& perm) {
        MPoly r(nv);
        for (auto& [m, c] : p.terms) {
            Mono n(nv);
            for (int i = 0; i < nv; ++i) n[perm[size_t(i)]] = m[i];
            r.add_term(n, c);
        }
        return r;
    };
    MPoly fp = permute(f, inv), gp = permute(g, inv);
    const Mono& gm = gp.lead_mono();
    FieldElem glc_inv = gp.lead_coeff().inv();
    MPoly rem(nv);
    MPoly work = fp;
    while (!work.is_zero()) {
        // find highest term divisible by lead(gp)
        bool reduced = false;
        for (auto it = work.terms.rbegin(); it != work.terms.rend(); ++it) {
            const Mono& m = it->first;
            bool div = true;
            for (int i = 0; i < nv; ++i)
                if (m[i] < gm[i]) { div = false; break; }
            if (!div) continue;
            Mono d(nv);
            for (int i = 0; i < nv; ++i) d[i] = m[i] - gm[i];
            MPoly t(nv);
            t.terms.emplace(d, it->second * glc_inv);
            work -= t * gp;
            reduced = true;
            break;
        }
        if (!reduced) break;
    }
    // remaining terms are all irreducible by lead(gp)
    std::vector<int> fwd(nv);
    for (int i = 0; i < nv; ++i) fwd[size_t(i)] = var_priority[size_t(i)];
    return permute(work, fwd);
}

namespace {

// pseudo-remainder of univariate-in-v coefficient vectors: lc(b)^(da-db+1) a mod b
std::vector<MPoly> uv_prem(std::vector<MPoly> a, const std::vector<MPoly>& b) {
    int da = int(a.size()) - 1, db = int(b.size()) - 1;
    const MPoly& lb = b.back();
    int needed = da - db + 1, k = 0;
    while (!a.empty() && int(a.size()) - 1 >= db) {
        MPoly la = a.back();
        for (auto& x : a) x *= lb;
        ++k;
        int sh = int(a.size()) - 1 - db;
        for (int i = 0; i <= db; ++i) a[size_t(i + sh)] -= la * b[size_t(i)];
        while (!a.empty() && a.back().is_zero()) a.pop_back();
    }
    for (; k < needed; ++k)
        for (auto& x : a) x *= lb;
    return a;
}

std::vector<MPoly> uv_divexact_scalar(const std::vector<MPoly>& a, const MPoly& d) {
    std::vector<MPoly> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i].is_zero() ? a[i] : divexact(a[i], d);
    return r;
}

} // namespace

MPoly resultant(const MPoly& f, const MPoly& g, int v) {
    if (f.is_zero() || g.is_zero()) fail(ErrCode::precondition, "resultant of zero polynomial");
    std::vector<MPoly> A = f.as_univar(v), B = g.as_univar(v);
    int m = int(A.size()) - 1, n = int(B.size()) - 1;
    int nv = f.nvars;
    int s = 1;
    if (m < n) {
        std::swap(A, B);
        std::swap(m, n);
        if ((m & 1) && (n & 1)) s = -s;
    }
    if (n == 0) return B[0].pow(unsigned(m)).scaled(FieldElem(Q(s)));
    MPoly gg = MPoly::constant(nv, FieldElem(Q(1)));
    MPoly h = gg;
    while (true) {
        int da = int(A.size()) - 1, db = int(B.size()) - 1;
        int delta = da - db;
        if ((da & 1) && (db & 1)) s = -s;
        std::vector<MPoly> R = uv_prem(A, B);
        A = std::move(B);
        MPoly denom = gg * h.pow(unsigned(delta));
        B = uv_divexact_scalar(R, denom);
        gg = A.back();
        if (delta > 0) {
            // h = g^delta / h^(delta-1)
            MPoly num = gg.pow(unsigned(delta));
            h = (delta == 1) ? num : divexact(num, h.pow(unsigned(delta - 1)));
        }
        if (B.empty()) return MPoly(nv); // common factor
        if (int(B.size()) - 1 == 0) {
            int dA = int(A.size()) - 1;
            MPoly num = B[0].pow(unsigned(dA));
            MPoly res = (dA <= 1) ? num : divexact(num, h.pow(unsigned(dA - 1)));
            return res.scaled(FieldElem(Q(s)));
        }
    }
}

MPoly mpoly_det(std::vector<std::vector<MPoly>> a) {
    // fraction-free Gauss-Bareiss
    size_t n = a.size();
    if (n == 0) fail(ErrCode::precondition, "empty determinant");
    int nv = a[0][0].nvars;
    MPoly prev = MPoly::constant(nv, FieldElem(Q(1)));
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            size_t p = k + 1;
            while (p < n && a[p][k].is_zero()) ++p;
            if (p == n) return MPoly(nv);
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                MPoly num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                a[i][j] = divexact(num, prev);
            }
            a[i][k] = MPoly(nv);
        }
        prev = a[k][k];
    }
    return sign == 1 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

namespace {

MPoly mgcd_norm(MPoly f) {
    if (f.is_zero()) return f;
    return f.scaled(f.lead_coeff().inv());
}

MPoly mgcd_impl(const MPoly& f, const MPoly& g, int depth);

MPoly content_in(const MPoly& f, int v, int depth) {
    std::vector<MPoly> cs = f.as_univar(v);
    MPoly c = cs[0];
    for (size_t i = 1; i < cs.size() && !(c.is_constant() && !c.is_zero()); ++i)
        c = mgcd_impl(c, cs[i], depth + 1);
    return c;
}

MPoly mgcd_impl(const MPoly& f, const MPoly& g, int depth) {
    int nv = f.nvars;
    if (f.is_zero()) return mgcd_norm(g);
    if (g.is_zero()) return mgcd_norm(f);
    if (f.is_constant() || g.is_constant()) return MPoly::constant(nv, FieldElem(Q(1)));
    // main variable: highest-index variable occurring in either
    int v = -1;
    for (int i = nv - 1; i >= 0; --i)
        if (f.degree_in(i) > 0 || g.degree_in(i) > 0) { v = i; break; }
    if (f.degree_in(v) == 0) return mgcd_norm(mgcd_impl(content_in(g, v, depth), f, depth + 1));
    if (g.degree_in(v) == 0) return mgcd_norm(mgcd_impl(content_in(f, v, depth), g, depth + 1));
    MPoly cf = content_in(f, v, depth), cg = content_in(g, v, depth);
    MPoly cont = mgcd_impl(cf, cg, depth + 1);
    std::vector<MPoly> A = divexact(f, cf).as_univar(v);
    std::vector<MPoly> B = divexact(g, cg).as_univar(v);
    if (A.size() < B.size()) std::swap(A, B);
    while (true) {
        std::vector<MPoly> R = uv_prem(A, B);
        if (R.empty()) break;
        if (R.size() == 1) return mgcd_norm(cont); // coprime primitive parts
        // primitive PRS: divide by content each step
        MPoly rc = R[0];
        for (size_t i = 1; i < R.size() && !(rc.is_constant() && !rc.is_zero()); ++i)
            rc = mgcd_impl(rc, R[i], depth + 1);
        if (!rc.is_zero() && !rc.is_constant()) R = uv_divexact_scalar(R, rc);
        A = std::move(B);
        B = std::move(R);
    }
    MPoly pp = MPoly::from_univar(B, v);
    MPoly ppc = content_in(pp, v, depth);
    if (!ppc.is_constant()) pp = divexact(pp, ppc);
    return mgcd_norm(pp * cont);
}

} // namespace

MPoly mgcd(const MPoly& f, const MPoly& g) { return mgcd_impl(f, g, 0); }

MPoly multiple_factor_part(const MPoly& f) {
    MPoly g = f;
    for (int v = 0; v < f.nvars; ++v) {
        if (g.is_constant()) break;
        g = mgcd(g, f.derivative(v));
    }
    return g;
}

bool is_squarefree(const MPoly& f) {
    return multiple_factor_part(f).is_constant();
}

} // namespace stubborn
