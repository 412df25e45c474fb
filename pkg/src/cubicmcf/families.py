"""Parametric families of totally real cubic orders.

simplest cubic   x^3 - a*x^2 - (a+3)*x - 1   for a >= -1 (Galois, cyclic)
type I           x^3 + (a-1)*x^2 - a*x - 1   for a >= 3
type II          x^3 - (a-1)*x^2 - a*x - 1   for a >= 5
two-parameter    x^3 - (a+b)*x^2 + a*b*x - 1 for 2 <= a <= b-2
generic          arbitrary coefficients, optional ingested unit pair

Each constructor returns a CubicOrder tagged with family name and parameters,
with root labels in the conventional order (largest root first) and, where the
family provides them, a fundamental pair of units.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .core import AlgInt, CubicOrder, MissingUnits, OrderError


class ParameterOutOfRange(ValueError):
    """Family parameter outside the admissible range."""


class BoundViolated(OrderError):
    """An isolated root fell outside its proven rational bounds."""


class NotGalois(OrderError):
    """The conjugates of g cannot be expressed inside Z[g]."""


def _tag(order, family, **params):
    order.family = family
    order.family_params = dict(params)
    return order


def simplest_cubic(a):
    """Order Z[rho] for x^3 - a*x^2 - (a+3)*x - 1; ascending roots rho' < rho'' < rho."""
    if not isinstance(a, int) or a < -1:
        raise ParameterOutOfRange("simplest cubic needs integer a >= -1")
    order = CubicOrder(-a, -(a + 3), -1,
                       labels=("rho", "rho'", "rho''"),
                       label_order=(2, 0, 1))
    # conjugates of g in closed form; both are exact roots of f
    conj = [order.g,
            order.element(-2, -(a + 1), 1),
            order.element(a + 2, a, -1)]
    for e in conj:
        assert not _apply_poly(order, e), "conjugate closed form failed"
    order._conjugates = conj
    order.units = (order.g, order.element(a + 2, a, -1))
    return _tag(order, "simplest", a=a)


def ennola1(a):
    """Order Z[rho] for x^3 + (a-1)*x^2 - a*x - 1; ascending rho'' < rho' < rho."""
    if not isinstance(a, int) or a < 3:
        raise ParameterOutOfRange("type I needs integer a >= 3")
    order = CubicOrder(a - 1, -a, -1,
                       labels=("rho", "rho'", "rho''"),
                       label_order=(2, 1, 0))
    order.units = (order.g, order.g - order.one)
    return _tag(order, "ennola1", a=a)


def ennola2(a):
    """Order Z[psi] for x^3 - (a-1)*x^2 - a*x - 1; ascending psi' < psi'' < psi."""
    if not isinstance(a, int) or a < 5:
        raise ParameterOutOfRange("type II needs integer a >= 5")
    order = CubicOrder(-(a - 1), -a, -1,
                       labels=("psi", "psi'", "psi''"),
                       label_order=(2, 0, 1))
    # g - 1 has norm 2a - 1 here, so the type I recipe does not transfer; a
    # fundamental pair is (1 + 1/g, 1/g) with 1/g = g^2 - (a-1)*g - a
    ginv = order.element(-a, 1 - a, 1)
    order.units = (order.one + ginv, ginv)
    return _tag(order, "ennola2", a=a)


def ab_family(a, b):
    """Order for x^3 - (a+b)*x^2 + a*b*x - 1 with 2 <= a <= b-2."""
    if not (isinstance(a, int) and isinstance(b, int) and 2 <= a <= b - 2):
        raise ParameterOutOfRange("two-parameter family needs 2 <= a <= b-2")
    order = CubicOrder(-(a + b), a * b, -1)
    return _tag(order, "ab", a=a, b=b)


def generic_order(p, q, r, units=None, labels=None, label_order=None):
    """Order for x^3 + p*x^2 + q*x + r; units, when given, are coordinate triples."""
    order = CubicOrder(p, q, r, labels=labels, label_order=label_order)
    if units is not None:
        us = tuple(order.element(u) for u in units)
        if len(us) != 2:
            raise ValueError("a unit pair is needed")
        for u in us:
            if abs(u.norm()) != 1:
                raise ValueError("ingested element %r is not a unit" % (u,))
        order.units = us
    return _tag(order, "generic", p=p, q=q, r=r)


def construct(family_id, **params):
    """Build an order from a family name plus parameters, or a spec string."""
    if isinstance(family_id, str) and ":" in family_id:
        return parse_family(family_id)
    name = family_id
    makers = {"simplest": simplest_cubic, "ennola1": ennola1,
              "ennola2": ennola2, "ab": ab_family, "generic": generic_order}
    if name not in makers:
        raise ValueError("unknown family %r" % (name,))
    return makers[name](**params)


def parse_family(spec):
    """Parse strings like "ennola1:a=5", "ab:a=2,b=4",
    "generic:p=0,q=-3,r=1,u1=0:1:0,u2=-2:0:1"."""
    name, _, rest = spec.partition(":")
    name = name.strip().lower()
    kv = {}
    if rest:
        for part in rest.split(","):
            key, _, val = part.partition("=")
            if not _:
                raise ValueError("bad family parameter %r" % (part,))
            kv[key.strip()] = val.strip()
    try:
        if name == "simplest":
            return simplest_cubic(int(kv["a"]))
        if name == "ennola1":
            return ennola1(int(kv["a"]))
        if name == "ennola2":
            return ennola2(int(kv["a"]))
        if name == "ab":
            return ab_family(int(kv["a"]), int(kv["b"]))
        if name == "generic":
            units = None
            if "u1" in kv or "u2" in kv:
                units = (_parse_triple(kv["u1"]), _parse_triple(kv["u2"]))
            return generic_order(int(kv["p"]), int(kv["q"]), int(kv["r"]), units=units)
    except KeyError as e:
        raise ValueError("family %r is missing parameter %s" % (name, e))
    raise ValueError("unknown family %r" % (name,))


def _parse_triple(text):
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError("coordinate triple must be v1:v2:v3, got %r" % (text,))
    return tuple(int(t) for t in parts)


def _apply_poly(order, e):
    """f(e) evaluated in the ring."""
    return ((e * e * e) + order.p * (e * e) + order.q * e + order.r * order.one)


# ---------------------------------------------------------------------------
# Conjugates inside the order (Galois case).

def _value_root_index(order, e, embedding):
    """Which ascending root equals the value of e at the given embedding.

    Only sound when that value is exactly one of the roots (e is a conjugate
    of g): intervals are refined until a single root bracket overlaps.
    """
    k = 96
    while True:
        lo, hi = order.value_interval(embedding, e.v, k)
        hits = []
        for i in range(3):
            rlo, rhi = order.root_interval(i, k)
            if not (hi <= rlo or rhi <= lo):
                hits.append(i)
        if len(hits) == 1:
            return hits[0]
        k += 64
        if k > 4096:
            raise OrderError("value of %r does not isolate against the roots" % (e,))


def _find_conjugates(order, bound=None):
    """All e in Z[g] with f(e) = 0, by bounded coefficient search.

    The quadratic in c0 comes from the g^2-coordinate of f(c0 + w) where
    w = c1*g + c2*g^2; candidates are verified exactly in the ring.
    """
    if bound is None:
        bound = min(200, 4 + 2 * max(abs(order.p), abs(order.q), abs(order.r)))
    p, q = order.p, order.q
    found = {order.g.v: order.g}
    for c2 in range(-bound, bound + 1):
        for c1 in range(-bound, bound + 1):
            if c1 == 0 and c2 == 0:
                continue
            w = order.element(0, c1, c2)
            acc_a = (w * w * w) + p * (w * w) + q * w + order.r * order.one
            acc_b = 3 * (w * w) + 2 * p * w + q * order.one
            a2, b2 = acc_a.v[2], acc_b.v[2]
            cands = []
            if c2 != 0:
                disc = b2 * b2 - 12 * c2 * a2
                if disc >= 0:
                    s = math.isqrt(disc)
                    if s * s == disc:
                        for num in (-b2 + s, -b2 - s):
                            cands.append(Fraction(num, 6 * c2))
            elif b2 != 0:
                cands.append(Fraction(-a2, b2))
            for c0 in cands:
                if c0.denominator != 1:
                    continue
                e = order.element(int(c0), c1, c2)
                if not _apply_poly(order, e):
                    found.setdefault(e.v, e)
    return list(found.values())


def express_conjugate(order, root_index, embedding=0):
    """The element of Z[g] whose value at `embedding` is the root_index-th
    ascending root.  Raises NotGalois when no such element exists in the order.
    """
    conj = getattr(order, "_conjugates", None)
    if conj is None:
        s = math.isqrt(order.disc)
        if s * s != order.disc:
            raise NotGalois("discriminant %d is not a square" % order.disc)
        conj = _find_conjugates(order)
        if len(conj) != 3:
            raise NotGalois("conjugates of g not found inside the order")
        order._conjugates = conj
    for e in conj:
        if _value_root_index(order, e, embedding) == root_index:
            return e
    raise NotGalois("no conjugate matches root %d at embedding %d"
                    % (root_index, embedding))


def units_for_tracking(order, tracking):
    """Unit pair (u1, u2) used to report unit factorizations for an expansion
    tracked at the given ascending embedding: u1 takes the largest root as its
    tracked value and u2 the smallest; type I/II orders use their stored pair,
    (g, g-1) for type I and (1 + 1/g, 1/g) for type II."""
    fam = getattr(order, "family", None)
    if fam in ("ennola1", "ennola2"):
        return order.units
    if fam == "simplest":
        return (express_conjugate(order, 2, tracking),
                express_conjugate(order, 0, tracking))
    if order.units is not None:
        return order.units
    raise MissingUnits("no unit pair available for this order")


def standard_vector(order, tracking):
    """The triple (1, t, t^2) where t = +-g has positive value at the tracked
    embedding; this is the vector whose expansion the catalogs classify."""
    s = order.sign_at(tracking, order.g.v)
    t = order.g if s > 0 else -order.g
    return (order.one, t, t * t)


# ---------------------------------------------------------------------------
# Proven rational root bounds.

def _bounds_for(order):
    fam = getattr(order, "family", None)
    if fam == "simplest":
        a = order.family_params["a"]
        if a < 7:
            raise ParameterOutOfRange("root bounds need a >= 7 here")
        return {"rho": (Fraction(a + 1), a + 1 + Fraction(2, a)),
                "rho'": (-1 - Fraction(1, a + 1), -1 - Fraction(1, a + 2)),
                "rho''": (-Fraction(1, a + 2), -Fraction(1, a + 3))}
    if fam == "ennola1":
        a = order.family_params["a"]
        if a < 3:
            raise ParameterOutOfRange("root bounds need a >= 3 here")
        return {"rho": (1 + Fraction(1, a + 3), 1 + Fraction(1, a + 2)),
                "rho'": (-Fraction(1, a), -Fraction(1, a + 1)),
                "rho''": (-a + Fraction(1, a * a + a), -a + Fraction(1, a * a))}
    if fam == "ennola2":
        a = order.family_params["a"]
        if a < 5:
            raise ParameterOutOfRange("root bounds need a >= 5 here")
        return {"psi": (a + Fraction(a - 1, a**3), a + Fraction(a * a - 1, a**4)),
                "psi'": (-Fraction(a - 1, a), -Fraction(a - 2, a - 1)),
                "psi''": (-Fraction(1, a - 2), -Fraction(1, a - 1))}
    raise ParameterOutOfRange("no proven root bounds for this family")


def root_bounds_check(order):
    """Verify each labelled root lies strictly inside its proven rational
    bounds; BoundViolated would signal a root-isolation bug."""
    for label, (lo, hi) in _bounds_for(order).items():
        if lo > hi:
            lo, hi = hi, lo
        i = order.label_index(label)
        k = 32
        while True:
            blo, bhi = order.root_interval(i, k)
            if blo >= lo and bhi <= hi:
                break
            if bhi <= lo or blo >= hi:
                raise BoundViolated("root %s escapes (%s, %s)" % (label, lo, hi))
            k += 32
    return True
