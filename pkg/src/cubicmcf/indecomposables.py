"""Additively indecomposable integers of a totally real cubic order.

An element of signature s (no conjugate zero) is s-indecomposable when it is
not a sum of two elements of the same signature.  This module provides

* closed-form catalogs of indecomposable representatives for the three
  parametric families, up to multiplication by units;
* an exhaustive decomposability oracle (``is_decomposable``) driven by exact
  coordinate boxes: a part of x must lie strictly between 0 and x in every
  embedding, which bounds its coordinates via the inverse root Vandermonde;
* codifferent trace certificates (``certify_by_codifferent``): a codifferent
  element delta = num/f'(g) of the same signature with Tr(x*delta) = 1 proves
  indecomposability;
* exact lattice-point enumeration of the parallelepipeds spanned by
  (gamma, gamma*e1, gamma*e2) that confine all indecomposable candidates;
* the minimal norm among elements not associated to a rational integer, and
  a trace-layered harvest of all totally positive indecomposables.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import product

from .core import (
    AlgInt,
    MissingUnits,
    OrderError,
    associate_or_none,
    coordinate_box,
    fprime_signs,
    is_totally_positive,
    is_unit,
    mul,
    signature,
    signature_ascending,
)
from . import families


class SignatureMismatch(OrderError):
    """The supplied signature differs from the element's actual signature."""


class NoCatalog(OrderError):
    """The order does not belong to a family with a closed-form catalog."""


class DegenerateBasis(OrderError):
    """Parallelepiped generators are linearly dependent over the rationals.

    For a rank-1 (collinear) span the finitely many lattice points on the
    segment are attached as ``candidates``; for rank 2 there are infinitely
    many and ``candidates`` is None.
    """

    def __init__(self, message, candidates=None):
        super().__init__(message)
        self.candidates = candidates


class CatalogEntry:
    """One indecomposable representative with its structured label."""

    __slots__ = ("label", "element")

    def __init__(self, label, element):
        self.label = label
        self.element = element

    def __repr__(self):
        return "CatalogEntry(%s, %r)" % (label_str(self.label), self.element)


def label_str(label):
    name = label[0]
    if len(label) == 1:
        return name
    return "%s(%s)" % (name, ",".join(str(t) for t in label[1:]))


class IndecomposableCatalog:
    """All indecomposable representatives of one family member.

    entries are (label, element) pairs; labels are tuples like ("theta", v, W).
    ``groups`` buckets the entries by signature: families whose units do not
    realize every signature keep genuinely non-associated orbits apart.
    """

    __slots__ = ("family", "a", "entries")

    def __init__(self, family, a, entries):
        self.family = family
        self.a = a
        self.entries = entries

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    @property
    def groups(self):
        out = {}
        for entry in self.entries:
            out.setdefault(signature(entry.element), []).append(entry)
        return out

    def __repr__(self):
        return "IndecomposableCatalog(%s, a=%d, %d entries)" % (
            self.family, self.a, len(self.entries))


def catalog(family, a):
    """Indecomposable representatives for a family member, exact coordinates.

    simplest (a >= -1):  1, the exceptional 1 + g + g^2, and
        theta(v, W) = -v - (v(a+2)+1+W) g + (v+1) g^2,  0 <= v <= a, 0 <= W <= a-v;
    ennola1 (a >= 3):  1, kappa(s) = 1 + s g + g^2 (1 <= s <= a-1),
        lambda(v, w) = -v - (a(v-1)+w) g + (a(v-1)+w+1) g^2
            (1 <= v <= a-1, max(1, v-1) <= w <= a-1),
        mu(u) = -1 - u g + (u+2) g^2 (0 <= u <= a-2);
    ennola2 (a >= 5):  1, tkappa(w) = (1+(a-1)w)(1 + g) - w g^2 (1 <= w <= a-3),
        tlambda(v, u) = 1+v+(a-1)u + (a+(a-1)u) g - (u+1) g^2
            (1 <= v <= a-3, 0 <= u <= v, (v, u) != (1, 0)),
        tmu(z) = z+2 + (z+4) g + g^2 (0 <= z <= a-4).
    """
    entries = []
    if family == "simplest":
        order = families.simplest_cubic(a)
        entries.append(CatalogEntry(("one",), order.element(1)))
        entries.append(CatalogEntry(("exceptional",), order.element(1, 1, 1)))
        for v in range(a + 1):
            for w_off in range(a - v + 1):
                elem = order.element(-v, -(v * (a + 2) + 1 + w_off), v + 1)
                entries.append(CatalogEntry(("theta", v, w_off), elem))
    elif family == "ennola1":
        order = families.ennola1(a)
        entries.append(CatalogEntry(("one",), order.element(1)))
        for s in range(1, a):
            entries.append(CatalogEntry(("kappa", s), order.element(1, s, 1)))
        for v in range(1, a):
            for w in range(max(1, v - 1), a):
                t = a * (v - 1) + w
                entries.append(CatalogEntry(("lambda", v, w),
                                            order.element(-v, -t, t + 1)))
        for u in range(a - 1):
            entries.append(CatalogEntry(("mu", u), order.element(-1, -u, u + 2)))
    elif family == "ennola2":
        order = families.ennola2(a)
        entries.append(CatalogEntry(("one",), order.element(1)))
        for w in range(1, a - 2):
            c = 1 + (a - 1) * w
            entries.append(CatalogEntry(("tkappa", w), order.element(c, c, -w)))
        for v in range(1, a - 2):
            for u in range(v + 1):
                if (v, u) == (1, 0):
                    continue
                entries.append(CatalogEntry(
                    ("tlambda", v, u),
                    order.element(1 + v + (a - 1) * u, a + (a - 1) * u, -(u + 1))))
        for z in range(a - 3):
            entries.append(CatalogEntry(("tmu", z), order.element(z + 2, z + 4, 1)))
    else:
        raise NoCatalog("no closed-form catalog for family %r" % (family,))
    return IndecomposableCatalog(family, a, entries)


def catalog_for(order):
    """Catalog of the family the order was constructed from."""
    family = getattr(order, "family", None)
    if family in ("simplest", "ennola1", "ennola2"):
        return catalog(family, order.family_params["a"])
    raise NoCatalog("order %r has no catalog" % (order,))


class DecompositionWitness:
    """Two parts of the queried signature summing to the input."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        self.parts = parts

    def __bool__(self):
        return True

    def __repr__(self):
        return "DecompositionWitness(%r + %r)" % self.parts


class Indecomposable:
    """Falsy sentinel: exhaustive search found no decomposition."""

    __slots__ = ()

    def __bool__(self):
        return False

    def __repr__(self):
        return "Indecomposable"


INDECOMPOSABLE = Indecomposable()


def _signs_match(order, coords, sig):
    for e in range(3):
        if order.sign_at(e, coords) != sig[e]:
            return False
    return True


def is_decomposable(x, s=None):
    """Exhaustive decomposability test in the signature of x.

    Any part y of x = y + z with signature(y) = signature(z) = signature(x)
    satisfies 0 < sigma_i(y) < sigma_i(x) (or the reversed inequalities at
    negative embeddings), so y lies in a finite coordinate box obtained from
    the inverse root Vandermonde with outward rounding.  Small coordinate
    shells are scanned first to find witnesses quickly; exhausting the box
    proves indecomposability.  Returns a truthy :class:`DecompositionWitness`
    or the falsy ``INDECOMPOSABLE`` sentinel.
    """
    if not isinstance(x, AlgInt):
        raise TypeError("is_decomposable expects an AlgInt")
    if not x:
        raise SignatureMismatch("the zero element has no signature")
    order = x.order
    if s is not None and tuple(s) != signature(x):
        raise SignatureMismatch("supplied signature %r != %r" % (tuple(s), signature(x)))
    sig = signature_ascending(x)

    def witness(yc):
        y = order.element(*yc)
        return DecompositionWitness((y, x - y))

    def parts_ok(yc):
        if not _signs_match(order, yc, sig):
            return False
        zc = tuple(a - b for a, b in zip(x.v, yc))
        return _signs_match(order, zc, sig)

    for shell in (1, 2, 3):
        rng = range(-shell, shell + 1)
        for yc in product(rng, rng, rng):
            if max(abs(t) for t in yc) != shell:
                continue
            if parts_ok(yc):
                return witness(yc)

    bounds = []
    for e in range(3):
        lo, hi = order.value_interval(e, x.v, 64)
        bounds.append((Fraction(0), hi) if sig[e] > 0 else (lo, Fraction(0)))
    (l1, h1), (l2, h2), (l3, h3) = coordinate_box(order, bounds)
    for v1 in range(l1, h1 + 1):
        for v2 in range(l2, h2 + 1):
            for v3 in range(l3, h3 + 1):
                yc = (v1, v2, v3)
                if yc == (0, 0, 0) or yc == x.v:
                    continue
                if max(abs(t) for t in yc) <= 3:
                    continue
                if parts_ok(yc):
                    return witness(yc)
    return INDECOMPOSABLE


def _embedding_size(x):
    # float hint for picking the flattest associate; never drives a verdict
    order = x.order
    v1, v2, v3 = x.v
    total = 0.0
    for e in range(3):
        t = float(order.root_float(e))
        try:
            total += abs(v1 + v2 * t + v3 * t * t)
        except OverflowError:
            return math.inf
    return total


def flat_associate(x, units):
    """The associate of x with the most balanced embedding values.

    Solves the 2x2 log system |sigma_e(x u1^i u2^j)| ~ |N(x)|^(1/3) for
    e = 0, 1 in floats (the third row is dependent), rounds, and polishes
    over a neighborhood.  The logs come from exact dyadic brackets because
    direct float evaluation cancels catastrophically on elements with huge
    coordinates.  The hint only picks which associate to return; callers use
    it because decomposability questions are invariant under unit scaling,
    and the coordinate boxes behind them stay small for balanced elements.
    Returns ``(x * u, u)`` with u the chosen unit.
    """
    order = x.order
    u1, u2 = units

    def logs(y):
        out = []
        for e in range(3):
            lo, hi = order.value_interval(e, y.v, 64)
            m = (lo + hi) / 2
            num = abs(m.numerator) or 1
            out.append(math.log(num) - math.log(m.denominator))
        return out

    lx, l1, l2 = logs(x), logs(u1), logs(u2)
    mean = sum(lx) / 3.0
    det = l1[0] * l2[1] - l1[1] * l2[0]
    if det == 0.0:
        i0 = j0 = 0
    else:
        bi = mean - lx[0]
        bj = mean - lx[1]
        i0 = round((bi * l2[1] - bj * l2[0]) / det)
        j0 = round((l1[0] * bj - l1[1] * bi) / det)
    best, best_size = x, _embedding_size(x)
    best_u = order.element(1)
    for di in range(-2, 3):
        p1 = u1 ** (i0 + di)
        for dj in range(-2, 3):
            u = mul(p1, u2 ** (j0 + dj))
            cand = mul(x, u)
            size = _embedding_size(cand)
            if size < best_size:
                best, best_size, best_u = cand, size, u
    return best, best_u


class CodifferentCertificate:
    """delta = numerator/f'(g) of the element's signature with Tr(x*delta) = 1."""

    __slots__ = ("numerator", "trace")

    def __init__(self, numerator, trace):
        self.numerator = numerator
        self.trace = trace

    def __bool__(self):
        return True

    def __repr__(self):
        return "CodifferentCertificate(num=%r, trace=%d)" % (self.numerator, self.trace)


class NoCertificate:
    """Falsy result: no trace-1 codifferent certificate within the bound.

    min_trace is the smallest trace realized by a codifferent element of the
    right signature within the searched box (None if none was found).
    """

    __slots__ = ("min_trace",)

    def __init__(self, min_trace):
        self.min_trace = min_trace

    def __bool__(self):
        return False

    def __repr__(self):
        return "NoCertificate(min_trace=%r)" % (self.min_trace,)


def certify_by_codifferent(x, s=None, search_bound=None, trace_cap=8):
    """Search for a codifferent element certifying indecomposability of x.

    Tr(x * (c0 + c1 g + c2 g^2)/f'(g)) equals the g^2-coordinate of the ring
    product x * (c0 + c1 g + c2 g^2), a linear form u.c in the numerator
    coordinates.  The numerator must have signs signature(x) * sign(f' at the
    ascending roots); candidates with all |c_j| <= search_bound are filtered
    by a float prescreen and confirmed exactly.  Finding u.c = 1 with a
    feasible numerator certifies indecomposability (sound, not complete).
    """
    if not isinstance(x, AlgInt) or not x:
        raise SignatureMismatch("certify_by_codifferent expects a nonzero AlgInt")
    order = x.order
    if s is not None and tuple(s) != signature(x):
        raise SignatureMismatch("supplied signature %r != %r" % (tuple(s), signature(x)))
    if search_bound is None:
        a = getattr(order, "family_params", {}).get("a")
        search_bound = 4 * a * a if a else 256
    sig = signature_ascending(x)
    target = tuple(sg * fs for sg, fs in zip(sig, fprime_signs()))

    # u_j = g^2-coordinate of x*g^j
    xg = order.times_g(x.v)
    xgg = order.times_g(xg)
    u = (x.v[2], xg[2], xgg[2])
    m = max(range(3), key=lambda t: abs(u[t]))
    if u[m] == 0:
        raise OrderError("degenerate trace form")
    i, j = [t for t in range(3) if t != m]

    roots = [order.root_float(e) for e in range(3)]

    def feasible(c):
        for e in range(3):
            val = c[0] + c[1] * roots[e] + c[2] * roots[e] * roots[e]
            if val * target[e] < -1e-6 * (1 + abs(val)):
                return False
        return _signs_match(order, c, target)

    def search(t):
        B = search_bound
        for ci in range(-B, B + 1):
            for cj in range(-B, B + 1):
                rem = t - ci * u[i] - cj * u[j]
                if rem % u[m]:
                    continue
                cm = rem // u[m]
                if abs(cm) > B:
                    continue
                c = [0, 0, 0]
                c[i], c[j], c[m] = ci, cj, cm
                if feasible(tuple(c)):
                    return order.element(*c)
        return None

    num = search(1)
    if num is not None:
        prod = mul(x, num)
        if prod.v[2] != 1:
            raise OrderError("certificate verification failed")
        return CodifferentCertificate(num, 1)
    for t in range(2, trace_cap + 1):
        if search(t) is not None:
            return NoCertificate(t)
    return NoCertificate(None)


def _det3(m):
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def _adjugate3(m):
    co = [[0] * 3 for _ in range(3)]
    for r in range(3):
        for c in range(3):
            rr = [t for t in range(3) if t != r]
            cc = [t for t in range(3) if t != c]
            minor = (m[rr[0]][cc[0]] * m[rr[1]][cc[1]]
                     - m[rr[0]][cc[1]] * m[rr[1]][cc[0]])
            co[c][r] = minor if (r + c) % 2 == 0 else -minor
    return co


def _merge_progression(r1, m1, r2, m2):
    # k == r1 (mod m1) and k == r2 (mod m2); None when incompatible
    g = math.gcd(m1, m2)
    if (r2 - r1) % g:
        return None
    l = m1 // g * m2
    t = ((r2 - r1) // g * pow(m1 // g, -1, m2 // g)) % (m2 // g) if m2 != g else 0
    r = (r1 + m1 * t) % l
    return r, l


def parallelepiped_candidates(gamma, e1, e2):
    """Order elements inside the closed parallelepiped on (gamma, gamma*e1, gamma*e2).

    Every x = t1*gamma + t2*gamma*e1 + t3*gamma*e2 with 0 <= t_i <= 1 has
    rational t_i with denominator D = |det| of the coordinate basis, so
    candidates are solved by congruences: x = W k / D with k in [0, D]^3 and
    W k = 0 (mod D) componentwise.  Rationally dependent generators raise
    :class:`DegenerateBasis` (with the segment points attached when the span
    is a line).
    """
    if not isinstance(gamma, AlgInt) or not gamma:
        raise ValueError("gamma must be a nonzero AlgInt")
    order = gamma.order
    for e in (e1, e2):
        if not (is_unit(e) and is_totally_positive(e)):
            raise ValueError("e1, e2 must be totally positive units")
    w = [gamma, mul(gamma, e1), mul(gamma, e2)]
    cols = [t.v for t in w]
    W = [[cols[c][r] for c in range(3)] for r in range(3)]
    D0 = _det3(W)
    if D0 == 0:
        # rank 1: all three generators on one rational line
        rank2 = any(
            cols[i][r] * cols[j][c] != cols[i][c] * cols[j][r]
            for i in range(3) for j in range(i + 1, 3)
            for r in range(3) for c in range(r + 1, 3))
        if rank2:
            raise DegenerateBasis("generators span a plane", candidates=None)
        g = math.gcd(math.gcd(abs(cols[0][0]), abs(cols[0][1])), abs(cols[0][2]))
        prim = order.element(*(t // g for t in cols[0]))
        total = Fraction(0)
        for t in cols:
            ref = next(e for e in range(3) if prim.v[e])
            total += Fraction(t[ref], prim.v[ref])
        cands = [k * prim for k in range(math.floor(total) + 1)]
        raise DegenerateBasis("generators span a line", candidates=cands)
    D = abs(D0)
    A = _adjugate3(W)
    if D0 < 0:
        A = [[-t for t in row] for row in A]
    out = []
    seen = set()
    for k1 in range(D + 1):
        for k2 in range(D + 1):
            # W k == 0 (mod D): three congruences a*k3 == b (mod D)
            prog = (0, 1)
            for r in range(3):
                a_r = W[r][2] % D
                b_r = (-(W[r][0] * k1 + W[r][1] * k2)) % D
                g = math.gcd(a_r, D)
                if b_r % g:
                    prog = None
                    break
                mod = D // g
                if mod == 1:
                    continue
                root = (b_r // g * pow(a_r // g, -1, mod)) % mod
                prog = _merge_progression(prog[0], prog[1], root, mod)
                if prog is None:
                    break
            if prog is None:
                continue
            r0, mstep = prog
            for k3 in range(r0, D + 1, mstep):
                num = [W[r][0] * k1 + W[r][1] * k2 + W[r][2] * k3 for r in range(3)]
                if any(t % D for t in num):
                    continue
                coords = tuple(t // D for t in num)
                if coords not in seen:
                    seen.add(coords)
                    out.append(order.element(*coords))
    out.sort(key=lambda t: t.v)
    return out


def min_nonassociated_norm(order, bound=6):
    """Minimal |N(x)| over nonzero x not associated to a rational integer.

    Candidates are the catalog representatives together with 1 + eps for
    every totally positive unit eps != 1 with exponents up to the bound
    (covering all sums of two units of a common signature, up to association).
    """
    units = getattr(order, "units", None)
    if not units:
        raise MissingUnits("fundamental units required")
    u1, u2 = (order.element(*u) if not isinstance(u, AlgInt) else u for u in units)
    cands = [entry.element for entry in catalog_for(order)]
    one = order.element(1)
    for k in range(-bound, bound + 1):
        for l in range(-bound, bound + 1):
            eps = u1**k * u2**l
            if eps == one or not is_totally_positive(eps):
                continue
            cands.append(one + eps)
    best = None
    for x in cands:
        n = abs(x.norm())
        if best is not None and n >= best:
            continue
        # skip x associated to a rational integer (|N| then is a cube)
        m = round(n ** (1 / 3))
        cube_root = next((t for t in (m - 1, m, m + 1) if t >= 1 and t**3 == n), None)
        if cube_root is not None and associate_or_none(x, order.element(cube_root)):
            continue
        best = n
    return best


def _totally_positive_coords(order, trace_bound):
    """Coordinates of all totally positive elements with trace <= trace_bound.

    The bounding box can vastly overestimate the feasible region for skewed
    bases, so only the (v2, v3) ranges come from the box; the v1 interval is
    solved per pair.  Every embedding value is strictly increasing in v1, so
    the least admissible v1 follows from a float hint corrected by exact sign
    checks, and the trace cap 3*v1 + v2*Tr(g) + v3*Tr(g^2) <= trace_bound
    gives the top in integer arithmetic.
    """
    bounds = [(Fraction(0), Fraction(trace_bound))] * 3
    _, (l2, h2), (l3, h3) = coordinate_box(order, bounds)
    s1 = -order.p
    s2 = order.p * order.p - 2 * order.q
    roots = [float(order.root_float(e)) for e in range(3)]
    out = []
    for v2 in range(l2, h2 + 1):
        for v3 in range(l3, h3 + 1):
            v1_hi = (trace_bound - v2 * s1 - v3 * s2) // 3

            def all_pos(v1):
                return all(order.sign_at(e, (v1, v2, v3)) > 0 for e in range(3))

            v1 = math.floor(max(-(v2 * t + v3 * t * t) for t in roots))
            if all_pos(v1):
                while all_pos(v1 - 1):
                    v1 -= 1
            else:
                v1 += 1
                while v1 <= v1_hi and not all_pos(v1):
                    v1 += 1
            out.extend((w, v2, v3) for w in range(v1, v1_hi + 1))
    return out


def harvest_totally_positive(order, trace_bound):
    """All totally positive elements with trace <= trace_bound, flagged.

    Returns a dict mapping each such element to True when indecomposable.
    Layering by trace makes the flags self-consistent: x with trace t is
    decomposable iff x - y is totally positive for some indecomposable y of
    trace <= t - 3 (every totally positive integer has trace >= 3).
    """
    layers = {}
    for yc in _totally_positive_coords(order, trace_bound):
        layers.setdefault(order.trace_coords(yc), []).append(yc)
    flags = {}
    indec = []
    for t in sorted(layers):
        for yc in layers[t]:
            x = order.element(*yc)
            dec = any(is_totally_positive(x - y) for y, ty in indec
                      if ty <= t - 3)
            flags[x] = not dec
            if not dec:
                indec.append((x, t))
    return flags
