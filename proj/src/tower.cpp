#include "tower.hpp"

#include <cassert>
#include <sstream>

namespace stubborn {

namespace {

constexpr size_t kMaxHeight = 8;

std::vector<Q> zeros(size_t n) { return std::vector<Q>(n, Q(0)); }

TowerPtr prefix_of(const TowerPtr& t, size_t h) {
    if (h == 0) return nullptr;
    if (h == t->height()) return t;
    auto p = std::make_shared<Tower>();
    p->radicands.assign(t->radicands.begin(), t->radicands.begin() + h);
    return p;
}

// coordinate-span multiply over the first h levels of tower t: out = a*b
void mul_rec(const TowerPtr& t, size_t h, const Q* a, const Q* b, Q* out);

void addmul_radicand(const TowerPtr& t, size_t h, const Q* x, const FieldElem& r, Q* out) {
    // out += x * r where r has height <= h (lives in prefix field)
    size_t rh = r.height();
    assert(rh <= h);
    size_t n = size_t(1) << h;
    size_t rn = size_t(1) << rh;
    // r's coords occupy the low rn slots of the height-h basis
    std::vector<Q> rfull = zeros(n);
    for (size_t i = 0; i < rn; ++i) rfull[i] = r.coords[i];
    std::vector<Q> tmp = zeros(n);
    mul_rec(t, h, x, rfull.data(), tmp.data());
    for (size_t i = 0; i < n; ++i) out[i] += tmp[i];
}

void mul_rec(const TowerPtr& t, size_t h, const Q* a, const Q* b, Q* out) {
    if (h == 0) {
        out[0] += a[0] * b[0];
        return;
    }
    size_t half = size_t(1) << (h - 1);
    const Q *a0 = a, *a1 = a + half, *b0 = b, *b1 = b + half;
    // (a0 + a1 g)(b0 + b1 g) = (a0 b0 + a1 b1 r) + (a0 b1 + a1 b0) g
    mul_rec(t, h - 1, a0, b0, out);
    std::vector<Q> a1b1 = zeros(half);
    mul_rec(t, h - 1, a1, b1, a1b1.data());
    addmul_radicand(t, h - 1, a1b1.data(), t->radicands[h - 1], out);
    mul_rec(t, h - 1, a0, b1, out + half);
    mul_rec(t, h - 1, a1, b0, out + half);
}

bool span_zero(const Q* a, size_t n) {
    for (size_t i = 0; i < n; ++i)
        if (sgn(a[i]) != 0) return false;
    return true;
}

int sign_exact_rec(const TowerPtr& t, size_t h, const Q* a);

// sign of an element given as coords over prefix height h of tower t
int sign_exact_rec(const TowerPtr& t, size_t h, const Q* a) {
    if (h == 0) return sgn(a[0]);
    size_t half = size_t(1) << (h - 1);
    const Q *u = a, *v = a + half;
    bool uz = span_zero(u, half), vz = span_zero(v, half);
    if (vz) return uz ? 0 : sign_exact_rec(t, h - 1, u);
    int sv = sign_exact_rec(t, h - 1, v);
    if (uz) return sv;
    int su = sign_exact_rec(t, h - 1, u);
    if (su == sv) return su;
    if (su == 0) return sv;
    if (sv == 0) return su;
    // opposite signs: sign(u + v g) = sign(u) * sign(u^2 - v^2 r)
    std::vector<Q> u2 = zeros(half), v2 = zeros(half);
    mul_rec(t, h - 1, u, u, u2.data());
    mul_rec(t, h - 1, v, v, v2.data());
    std::vector<Q> v2r = zeros(half);
    addmul_radicand(t, h - 1, v2.data(), t->radicands[h - 1], v2r.data());
    for (size_t i = 0; i < half; ++i) u2[i] -= v2r[i];
    int sn = sign_exact_rec(t, h - 1, u2.data());
    return su * sn;
}

QInterval enclosure_rec(const TowerPtr& t, size_t h, const Q* a, unsigned prec) {
    if (h == 0) return QInterval(a[0]);
    size_t half = size_t(1) << (h - 1);
    QInterval u = enclosure_rec(t, h - 1, a, prec);
    if (span_zero(a + half, half)) return u;
    QInterval v = enclosure_rec(t, h - 1, a + half, prec);
    const FieldElem& rad = t->radicands[h - 1];
    QInterval r = enclosure_rec(t, rad.height(), rad.coords.data(), prec);
    QInterval g = sqrt_enclosure(r, prec);
    return u + v * g;
}

} // namespace

size_t tower_height(const TowerPtr& t) { return t ? t->height() : 0; }

bool tower_equal(const TowerPtr& a, const TowerPtr& b) {
    if (a.get() == b.get()) return true;
    size_t ha = tower_height(a), hb = tower_height(b);
    if (ha != hb) return false;
    for (size_t i = 0; i < ha; ++i)
        if (!(a->radicands[i] == b->radicands[i])) return false;
    return true;
}

bool tower_is_prefix(const TowerPtr& a, const TowerPtr& b) {
    size_t ha = tower_height(a), hb = tower_height(b);
    if (ha > hb) return false;
    if (a.get() == b.get()) return true;
    for (size_t i = 0; i < ha; ++i)
        if (!(a->radicands[i] == b->radicands[i])) return false;
    return true;
}

bool FieldElem::is_zero() const {
    return span_zero(coords.data(), coords.size());
}

const Q& FieldElem::rat() const {
    if (!is_rational()) fail(ErrCode::unsupported_coefficients, "value is not rational");
    return coords[0];
}

void FieldElem::trim() {
    while (coords.size() > 1) {
        size_t half = coords.size() / 2;
        if (!span_zero(coords.data() + half, half)) break;
        coords.resize(half);
        tower = prefix_of(tower, height() - 1);
    }
}

FieldElem lift_to(const FieldElem& x, const TowerPtr& t) {
    if (tower_equal(x.tower, t)) return x;
    if (!tower_is_prefix(x.tower, t))
        fail(ErrCode::internal, "lift_to: tower is not an extension");
    std::vector<Q> c = zeros(size_t(1) << tower_height(t));
    for (size_t i = 0; i < x.coords.size(); ++i) c[i] = x.coords[i];
    return FieldElem(t, std::move(c));
}

namespace {

// Embed an element of tower `src` into tower `dst` given images of src's
// generators in dst.
FieldElem embed(const FieldElem& x, const TowerPtr& dst,
                const std::vector<FieldElem>& gen_images) {
    FieldElem acc = lift_to(FieldElem(Q(0)), dst);
    size_t h = x.height();
    for (size_t mask = 0; mask < x.coords.size(); ++mask) {
        if (sgn(x.coords[mask]) == 0) continue;
        FieldElem term = lift_to(FieldElem(x.coords[mask]), dst);
        for (size_t i = 0; i < h; ++i)
            if (mask & (size_t(1) << i)) term = term * gen_images[i];
        acc = acc + term;
    }
    return acc;
}

std::optional<FieldElem> exact_sqrt_impl(const FieldElem& x);

// generator of tower t at level i, as an element of t
FieldElem generator(const TowerPtr& t, size_t i) {
    std::vector<Q> c = zeros(size_t(1) << t->height());
    c[size_t(1) << i] = 1;
    return FieldElem(t, c);
}

// Merge: returns a tower extending a that contains b's generators, and the
// images of b's generators there.
TowerPtr merge_towers(const TowerPtr& a, const TowerPtr& b,
                      std::vector<FieldElem>& b_gen_images) {
    TowerPtr m = a;
    b_gen_images.clear();
    size_t hb = tower_height(b);
    for (size_t i = 0; i < hb; ++i) {
        // keep the radicand represented over the full merged tower so any
        // extension stacks on top of m rather than on a trimmed prefix
        FieldElem rad = lift_to(embed(b->radicands[i], m, b_gen_images), m);
        FieldElem g = sqrt_field(rad); // may extend m
        if (tower_height(g.tower) > tower_height(m)) m = g.tower;
        // re-lift previous images into the possibly taller tower
        for (auto& img : b_gen_images) img = lift_to(img, m);
        b_gen_images.push_back(lift_to(g, m));
    }
    return m;
}

} // namespace

void unify(FieldElem& a, FieldElem& b) {
    if (tower_equal(a.tower, b.tower)) {
        if (a.tower.get() != b.tower.get()) b.tower = a.tower;
        return;
    }
    if (tower_is_prefix(a.tower, b.tower)) { a = lift_to(a, b.tower); return; }
    if (tower_is_prefix(b.tower, a.tower)) { b = lift_to(b, a.tower); return; }
    std::vector<FieldElem> images;
    TowerPtr m = merge_towers(a.tower, b.tower, images);
    FieldElem bm = embed(b, m, images);
    a = lift_to(a, m);
    b = bm;
    a.trim();
    b.trim();
    unify(a, b); // now one tower is a prefix of the other
}

FieldElem FieldElem::operator-() const {
    FieldElem r = *this;
    for (auto& c : r.coords) c = -c;
    return r;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    FieldElem a = *this, b = o;
    unify(a, b);
    for (size_t i = 0; i < a.coords.size(); ++i) a.coords[i] += b.coords[i];
    a.trim();
    return a;
}

FieldElem FieldElem::operator-(const FieldElem& o) const { return *this + (-o); }

FieldElem FieldElem::operator*(const FieldElem& o) const {
    if (is_rational() && o.is_rational()) return FieldElem(coords[0] * o.coords[0]);
    FieldElem a = *this, b = o;
    unify(a, b);
    std::vector<Q> out = zeros(a.coords.size());
    mul_rec(a.tower, a.height(), a.coords.data(), b.coords.data(), out.data());
    FieldElem r(a.tower, std::move(out));
    r.trim();
    return r;
}

FieldElem FieldElem::inv() const {
    if (is_zero()) fail(ErrCode::precondition, "division by zero field element");
    if (is_rational()) return FieldElem(Q(1) / coords[0]);
    // (u + v g)^-1 = (u - v g) / (u^2 - v^2 r)
    size_t h = height();
    size_t half = size_t(1) << (h - 1);
    FieldElem u(prefix_of(tower, h - 1), std::vector<Q>(coords.begin(), coords.begin() + half));
    FieldElem v(prefix_of(tower, h - 1), std::vector<Q>(coords.begin() + half, coords.end()));
    u.trim(); v.trim();
    const FieldElem& r = tower->radicands[h - 1];
    FieldElem norm = u * u - v * v * r;
    FieldElem ninv = norm.inv();
    FieldElem lo = u * ninv, hi = (-v) * ninv;
    lo = lift_to(lo, tower);
    hi = lift_to(hi, tower);
    std::vector<Q> out = zeros(coords.size());
    for (size_t i = 0; i < half; ++i) {
        out[i] = lo.coords[i];
        out[i + half] = hi.coords[i];
    }
    FieldElem res(tower, std::move(out));
    res.trim();
    return res;
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inv(); }

FieldElem FieldElem::pow(unsigned e) const {
    FieldElem acc(Q(1)), base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool FieldElem::operator==(const FieldElem& o) const {
    FieldElem d = *this - o;
    return d.is_zero();
}

int FieldElem::sign() const {
    if (is_zero()) return 0;
    if (is_rational()) return sgn(coords[0]);
    for (unsigned prec : {64u, 256u, 1024u}) {
        QInterval e = enclosure(prec);
        if (e.sign_known()) return e.sign();
    }
    return sign_exact_rec(tower, height(), coords.data());
}

QInterval FieldElem::enclosure(unsigned prec_bits) const {
    return enclosure_rec(tower, height(), coords.data(), prec_bits);
}

double FieldElem::to_double() const {
    return enclosure(64).mid().get_d();
}

namespace {

// Squareness relative to the prefix field of height h of tower t. Works on
// untrimmed coordinate vectors so the v=0 branch is examined at every level.
std::optional<FieldElem> sqrt_in_prefix(const TowerPtr& t, size_t h, const FieldElem& x) {
    if (x.is_zero()) return FieldElem(Q(0));
    if (h == 0) {
        const Q& q = x.coords[0];
        if (sgn(q) < 0) return std::nullopt;
        Z pd = q.get_num() * q.get_den();
        if (!z_is_square(pd)) return std::nullopt;
        Q root(z_isqrt(pd), q.get_den());
        root.canonicalize();
        return FieldElem(root);
    }
    TowerPtr pre = prefix_of(t, h);
    FieldElem xs = lift_to(x, pre);
    size_t half = size_t(1) << (h - 1);
    TowerPtr pre1 = prefix_of(t, h - 1);
    FieldElem u(pre1, std::vector<Q>(xs.coords.begin(), xs.coords.begin() + half));
    FieldElem v(pre1, std::vector<Q>(xs.coords.begin() + half, xs.coords.end()));
    const FieldElem& r = t->radicands[h - 1];
    auto assemble = [&](const FieldElem& p, const FieldElem& qv) -> FieldElem {
        FieldElem res = lift_to(p, pre);
        FieldElem g = generator(pre, h - 1);
        res = res + lift_to(qv, pre) * g;
        if (res.sign() < 0) res = -res;
        return res;
    };
    if (v.is_zero()) {
        if (auto p = sqrt_in_prefix(t, h - 1, u)) return assemble(*p, FieldElem(Q(0)));
        FieldElem w = u / lift_to(r, pre1);
        if (auto y = sqrt_in_prefix(t, h - 1, w)) return assemble(FieldElem(Q(0)), *y);
        return std::nullopt;
    }
    FieldElem disc = u * u - v * v * lift_to(r, pre1);
    auto s = sqrt_in_prefix(t, h - 1, disc);
    if (!s) return std::nullopt;
    for (int pm : {1, -1}) {
        FieldElem cand = (u + (pm > 0 ? *s : -*s)) / FieldElem(Q(2));
        auto p = sqrt_in_prefix(t, h - 1, cand);
        if (p && !p->is_zero()) {
            FieldElem qv = v / (FieldElem(Q(2)) * *p);
            FieldElem root = assemble(*p, qv);
            if (root * root == xs) return root;
        }
    }
    return std::nullopt;
}

std::optional<FieldElem> exact_sqrt_impl(const FieldElem& x) {
    if (x.is_zero()) return FieldElem(Q(0));
    if (x.sign() < 0) return std::nullopt;
    auto r = sqrt_in_prefix(x.tower, x.height(), x);
    if (r) r->trim();
    return r;
}

} // namespace

std::optional<FieldElem> FieldElem::exact_sqrt() const { return exact_sqrt_impl(*this); }

FieldElem sqrt_field(const FieldElem& x) {
    int s = x.sign();
    if (s < 0) fail(ErrCode::negative_radicand, "sqrt of certified-negative value: " + x.str());
    if (s == 0) return FieldElem(Q(0));
    if (auto r = x.exact_sqrt()) return *r;
    // genuinely new generator
    size_t h = x.height();
    if (h + 1 > kMaxHeight) fail(ErrCode::unsupported_coefficients, "tower height limit exceeded");
    auto t = std::make_shared<Tower>();
    if (x.tower) t->radicands = x.tower->radicands;
    t->radicands.push_back(x);
    std::vector<Q> c = zeros(size_t(1) << (h + 1));
    c[size_t(1) << h] = 1;
    return FieldElem(t, std::move(c));
}

std::string FieldElem::str() const {
    if (is_rational()) return q_str(coords[0]);
    // print generator expressions once per level
    std::vector<std::string> gens(height());
    for (size_t i = 0; i < height(); ++i)
        gens[i] = "sqrt(" + tower->radicands[i].str() + ")";
    std::ostringstream os;
    bool first = true;
    for (size_t mask = 0; mask < coords.size(); ++mask) {
        const Q& c = coords[mask];
        if (sgn(c) == 0) continue;
        Q a = c;
        if (!first) {
            os << (sgn(a) < 0 ? "-" : "+");
            if (sgn(a) < 0) a = -a;
        } else {
            if (sgn(a) < 0) { os << "-"; a = -a; }
            first = false;
        }
        bool need_coeff = (a != 1) || mask == 0;
        if (need_coeff) os << q_str(a);
        bool prev = need_coeff;
        for (size_t i = 0; i < height(); ++i) {
            if (mask & (size_t(1) << i)) {
                if (prev) os << "*";
                os << gens[i];
                prev = true;
            }
        }
    }
    if (first) return "0";
    return os.str();
}

} // namespace stubborn
