#pragma once

#include "interval.hpp"
#include "errors.hpp"

#include <memory>
#include <optional>
#include <vector>
#include <string>

namespace stubborn {

class FieldElem;
struct Tower;
using TowerPtr = std::shared_ptr<const Tower>;

// A tower of real quadratic extensions Q(g_0, ..., g_{h-1}) with
// g_i = sqrt(r_i), where the radicand r_i lives in the prefix field of
// height i. Each radicand is certified positive and certified not a square
// in its prefix field, so the multiplicative basis {prod g_i^{e_i}} is a
// vector-space basis and the fixed embedding takes every g_i > 0.
struct Tower {
    std::vector<FieldElem> radicands;
    size_t height() const { return radicands.size(); }
};

size_t tower_height(const TowerPtr& t);
bool tower_equal(const TowerPtr& a, const TowerPtr& b);
bool tower_is_prefix(const TowerPtr& a, const TowerPtr& b); // a prefix of b

class FieldElem {
public:
    TowerPtr tower;        // null means plain rational
    std::vector<Q> coords; // size 2^height, indexed by generator bitmask

    FieldElem() : coords{Q(0)} {}
    FieldElem(const Q& q) : coords{q} {}
    FieldElem(long n) : coords{Q(n)} {}
    FieldElem(TowerPtr t, std::vector<Q> c) : tower(std::move(t)), coords(std::move(c)) {}

    size_t height() const { return tower_height(tower); }
    bool is_zero() const;
    bool is_rational() const { return coords.size() == 1; }
    const Q& rat() const; // requires is_rational()

    FieldElem operator-() const;
    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem& operator+=(const FieldElem& o) { *this = *this + o; return *this; }
    FieldElem& operator-=(const FieldElem& o) { *this = *this - o; return *this; }
    FieldElem& operator*=(const FieldElem& o) { *this = *this * o; return *this; }
    FieldElem& operator/=(const FieldElem& o) { *this = *this / o; return *this; }
    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    FieldElem inv() const;
    FieldElem pow(unsigned e) const;

    // Decidable sign in the fixed real embedding.
    int sign() const;

    // Interval enclosure at roughly 2^-prec_bits generator precision.
    QInterval enclosure(unsigned prec_bits) const;
    double to_double() const;

    // Exact square root if the element is a perfect square in its own field
    // (positive branch); nullopt otherwise.
    std::optional<FieldElem> exact_sqrt() const;

    // Canonical re-parseable expression string.
    std::string str() const;

    // Drop unused top generators so equal values have equal representations.
    void trim();
};

// Lift x into a field whose tower extends x's tower.
FieldElem lift_to(const FieldElem& x, const TowerPtr& t);

// Put two elements over one common tower (merging distinct towers if needed).
void unify(FieldElem& a, FieldElem& b);

// sqrt in the tower framework: exact root if x is a square, otherwise extend
// x's tower by a new generator. x must be certified nonnegative.
FieldElem sqrt_field(const FieldElem& x);

} // namespace stubborn
