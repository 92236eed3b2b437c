#include "interval.hpp"
#include "errors.hpp"

namespace stubborn {

QInterval sqrt_point_enclosure(const Q& v, unsigned prec_bits) {
    if (sgn(v) < 0) fail(ErrCode::negative_radicand, "sqrt of negative rational");
    if (sgn(v) == 0) return QInterval(Q(0));
    // sqrt(p/q) = sqrt(p*q)/q; bound floor(sqrt(p*q*4^k))/(q*2^k).
    Z p = v.get_num(), q = v.get_den();
    Z pq = p * q;
    Z scale = Z(1) << prec_bits;
    Z s = z_isqrt(pq * scale * scale);
    Q lo(s, q * scale);
    Q hi(s + 1, q * scale);
    lo.canonicalize();
    hi.canonicalize();
    return {lo, hi};
}

QInterval sqrt_enclosure(const QInterval& v, unsigned prec_bits) {
    Q lo = v.lo < 0 ? Q(0) : v.lo;
    if (sgn(v.hi) < 0) fail(ErrCode::negative_radicand, "sqrt of negative interval");
    QInterval a = sqrt_point_enclosure(lo, prec_bits);
    QInterval b = sqrt_point_enclosure(v.hi, prec_bits);
    return {a.lo, b.hi};
}

} // namespace stubborn
