"""Exact arithmetic in totally real cubic orders Z[g].

The ring is Z[x]/(f) for a monic integer cubic f = x^3 + p*x^2 + q*x + r that
is irreducible over Q and has three distinct real roots.  Elements are integer
(or, for field computations, rational) vectors in the power basis 1, g, g^2.
Every sign, floor and comparison at a real embedding is decided exactly with
shrinking dyadic root brackets; floating point is used only to seed guesses
that are then verified exactly.
"""

from __future__ import annotations

import math
from fractions import Fraction


class OrderError(ArithmeticError):
    """Base class for arithmetic failures inside a cubic order."""


class ZeroElement(OrderError):
    """An operation that needs a nonzero element received zero."""


class ZeroDivisor(OrderError):
    """Division by zero."""


class NotDivisible(OrderError):
    """Exact division left the order: the quotient is not integral."""


class NotAUnit(OrderError):
    """The element does not have norm +-1."""


class DecompositionNotFound(OrderError):
    """No exponent pair within the search bound writes the unit as +-u1^k*u2^l."""


class NotAssociated(OrderError):
    """The two elements do not differ by a unit of the order."""


class NonIntegralTrace(OrderError):
    """A codifferent trace came out non-integral."""


class MissingUnits(OrderError):
    """The operation needs a fundamental pair of units and the order has none."""


def discriminant(p, q, r):
    return 18 * p * q * r - 4 * p**3 * r + p * p * q * q - 4 * q**3 - 27 * r * r


def _has_rational_root(p, q, r):
    # a rational root of a monic integer cubic is an integer dividing r
    if r == 0:
        return True
    n = abs(r)
    d = 1
    while d * d <= n:
        if n % d == 0:
            for c in (d, -d, n // d, -(n // d)):
                if c * c * c + p * c * c + q * c + r == 0:
                    return True
        d += 1
    return False


# ---------------------------------------------------------------------------
# Sturm-chain isolation of the three real roots.

def _poly_eval(cs, x):
    v = Fraction(0)
    for c in cs:
        v = v * x + c
    return v


def _poly_rem(a, b):
    # remainder of a mod b, coefficients descending, b nonconstant
    a = list(a)
    while len(a) >= len(b) and any(a):
        if a[0] == 0:
            a.pop(0)
            continue
        t = a[0] / b[0]
        for i in range(len(b)):
            a[i] -= t * b[i]
        a.pop(0)
    while a and a[0] == 0:
        a.pop(0)
    return a


def _sturm_chain(p, q, r):
    f0 = [Fraction(1), Fraction(p), Fraction(q), Fraction(r)]
    f1 = [Fraction(3), Fraction(2 * p), Fraction(q)]
    chain = [f0, f1]
    while len(chain[-1]) > 1:
        rem = _poly_rem(chain[-2], chain[-1])
        if not rem:
            break
        chain.append([-c for c in rem])
    return chain


def _sign_changes(chain, x):
    signs = []
    for cs in chain:
        v = _poly_eval(cs, x)
        if v:
            signs.append(1 if v > 0 else -1)
    return sum(1 for i in range(len(signs) - 1) if signs[i] != signs[i + 1])


def _isolate_roots(p, q, r):
    """Disjoint open dyadic intervals (lo, hi), one per real root, ascending."""
    chain = _sturm_chain(p, q, r)
    m = 1 + max(abs(p), abs(q), abs(r))
    work = [(Fraction(-m), Fraction(m))]
    done = []
    while work:
        lo, hi = work.pop()
        n = _sign_changes(chain, lo) - _sign_changes(chain, hi)
        if n == 0:
            continue
        if n == 1:
            done.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        if _poly_eval(chain[0], mid) == 0:  # cannot happen when irreducible
            raise ValueError("rational root hit during isolation")
        work.append((lo, mid))
        work.append((mid, hi))
    done.sort()
    return done


def _dyadic_float(n, k):
    s = abs(n).bit_length() - 53
    if s > 0:
        return math.ldexp(n >> s if n >= 0 else -((-n) >> s), s - k)
    return math.ldexp(n, -k)


class _RootBracket:
    """Isolating bracket (n/2^k, (n+1)/2^k) around one real root of f."""

    __slots__ = ("p", "q", "r", "n", "k", "sign_lo")

    def __init__(self, p, q, r, lo, hi):
        self.p, self.q, self.r = p, q, r
        k = max(_dyadic_exp(lo.denominator), _dyadic_exp(hi.denominator))
        nlo = int(lo * (1 << k))
        nhi = int(hi * (1 << k))
        s = self._fsign(nlo, k)
        while nhi - nlo > 1:
            mid = (nlo + nhi) // 2
            sm = self._fsign(mid, k)
            if sm == s:
                nlo = mid
            else:
                nhi = mid
        self.n, self.k, self.sign_lo = nlo, k, s

    def _fsign(self, m, k):
        t = 1 << k
        v = m * m * m + self.p * m * m * t + self.q * m * t * t + self.r * t * t * t
        if v == 0:
            raise ValueError("dyadic point is a root; polynomial is reducible")
        return 1 if v > 0 else -1

    def refine(self):
        n2 = 2 * self.n
        if self._fsign(n2 + 1, self.k + 1) == self.sign_lo:
            self.n = n2 + 1
        else:
            self.n = n2
        self.k += 1

    def refine_to(self, k):
        while self.k < k:
            self.refine()

    def value_bounds(self, v1, v2, v3):
        """Integer lo, hi with v1 + v2*x + v3*x^2 in (lo, hi)/4^k.  Coords ints."""
        n, k = self.n, self.k
        a, b = n, n + 1
        two_k = 1 << k
        four_k = two_k * two_k
        if a >= 0:
            s_lo, s_hi = a * a, b * b
        elif b <= 0:
            s_lo, s_hi = b * b, a * a
        else:
            s_lo, s_hi = 0, max(a * a, b * b)
        lo = hi = v1 * four_k
        t = v2 * two_k
        if v2 >= 0:
            lo += t * a
            hi += t * b
        else:
            lo += t * b
            hi += t * a
        if v3 >= 0:
            lo += v3 * s_lo
            hi += v3 * s_hi
        else:
            lo += v3 * s_hi
            hi += v3 * s_lo
        return lo, hi

    def interval(self):
        return Fraction(self.n, 1 << self.k), Fraction(self.n + 1, 1 << self.k)

    def as_float(self):
        return _dyadic_float(2 * self.n + 1, self.k + 1)


def _dyadic_exp(d):
    # d a power of two (Fraction denominators from dyadic bisection)
    k = d.bit_length() - 1
    if 1 << k != d:
        raise ValueError("non-dyadic endpoint")
    return k


def _clear_denominators(coords):
    """(integer coords, d) with the input equal to coords / d componentwise."""
    if all(isinstance(c, int) for c in coords):
        return coords, 1
    fr = [Fraction(c) for c in coords]
    d = 1
    for c in fr:
        d = d * c.denominator // math.gcd(d, c.denominator)
    return tuple(int(c * d) for c in fr), d


class CubicOrder:
    """The order Z[g], g a root of x^3 + p*x^2 + q*x + r.

    labels names the three real embeddings; label_order[i] is the index of the
    i-th labelled root in the ascending root ordering, so signatures can be
    reported in the conventional label order while all internal work uses the
    ascending order.  units, when present, is a pair of fundamental totally
    real units used by unit decompositions and classification.
    """

    _REFINE_START = 64

    def __init__(self, p, q, r, labels=None, label_order=None, units=None):
        for c in (p, q, r):
            if not isinstance(c, int):
                raise ValueError("polynomial coefficients must be integers")
        disc = discriminant(p, q, r)
        if disc <= 0:
            raise ValueError("polynomial is not totally real (disc <= 0)")
        if _has_rational_root(p, q, r):
            raise ValueError("polynomial is reducible over Q")
        self.p, self.q, self.r = p, q, r
        self.disc = disc
        self._brackets = [_RootBracket(p, q, r, lo, hi)
                          for lo, hi in _isolate_roots(p, q, r)]
        assert len(self._brackets) == 3
        self.labels = tuple(labels) if labels else ("g0", "g1", "g2")
        self.label_order = tuple(label_order) if label_order else (0, 1, 2)
        self.units = None
        if units is not None:
            self.units = tuple(self.element(u) for u in units)
        self.zero = AlgInt(self, (0, 0, 0))
        self.one = AlgInt(self, (1, 0, 0))
        self.g = AlgInt(self, (0, 1, 0))

    # -- construction helpers ------------------------------------------------

    def element(self, *coords):
        if len(coords) == 1:
            c0 = coords[0]
            if isinstance(c0, AlgInt):
                if c0.order.poly() != self.poly():
                    raise ValueError("element belongs to a different order")
                return AlgInt(self, c0.v)
            if isinstance(c0, (int, Fraction)):
                coords = (c0, 0, 0)
            else:
                coords = tuple(c0)
        if len(coords) != 3:
            raise ValueError("an element needs three coordinates")
        return AlgInt(self, coords)

    def poly(self):
        return (self.p, self.q, self.r)

    def label_index(self, name):
        """Ascending root index for a labelled root name."""
        return self.label_order[self.labels.index(name)]

    def tracking_default(self):
        """Ascending index of the first labelled root (the usual tracking root)."""
        return self.label_order[0]

    def __repr__(self):
        return "CubicOrder(x^3 %+d*x^2 %+d*x %+d)" % (self.p, self.q, self.r)

    def __eq__(self, other):
        return isinstance(other, CubicOrder) and self.poly() == other.poly()

    def __hash__(self):
        return hash(self.poly())

    # -- exact decisions at one embedding -------------------------------------

    def sign_at(self, i, coords):
        """Sign of v1 + v2*x_i + v3*x_i^2 at the i-th ascending root, exact."""
        (v1, v2, v3), _ = _clear_denominators(tuple(coords))
        if v2 == 0 and v3 == 0:
            return 0 if v1 == 0 else (1 if v1 > 0 else -1)
        br = self._brackets[i]
        br.refine_to(self._REFINE_START)
        while True:
            lo, hi = br.value_bounds(v1, v2, v3)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            br.refine()

    def floor_at(self, i, coords):
        """Exact floor of the value of coords at the i-th ascending root."""
        fr = [Fraction(c) for c in coords]
        if fr[1] == 0 and fr[2] == 0:
            return math.floor(fr[0])
        d = 1
        for c in fr:
            d = d * c.denominator // math.gcd(d, c.denominator)
        u = tuple(int(c * d) for c in fr)
        br = self._brackets[i]
        br.refine_to(self._REFINE_START)
        while True:
            lo, hi = br.value_bounds(*u)
            scale = d << (2 * br.k)
            m1 = lo // scale
            m2 = hi // scale
            if m1 == m2:
                return m1
            br.refine()

    def compare_at(self, i, a, b):
        """-1, 0, +1 comparing the values of coordinate triples a and b at root i."""
        return self.sign_at(i, tuple(x - y for x, y in zip(a, b)))

    def value_interval(self, i, coords, k=None):
        """Rational (lo, hi) enclosing the value of coords at root i."""
        v1, v2, v3 = (Fraction(c) for c in coords)
        br = self._brackets[i]
        br.refine_to(k if k is not None else self._REFINE_START)
        xlo, xhi = br.interval()
        if xlo >= 0:
            s_lo, s_hi = xlo * xlo, xhi * xhi
        elif xhi <= 0:
            s_lo, s_hi = xhi * xhi, xlo * xlo
        else:
            s_lo, s_hi = Fraction(0), max(xlo * xlo, xhi * xhi)
        lo = hi = v1
        if v2 >= 0:
            lo, hi = lo + v2 * xlo, hi + v2 * xhi
        else:
            lo, hi = lo + v2 * xhi, hi + v2 * xlo
        if v3 >= 0:
            lo, hi = lo + v3 * s_lo, hi + v3 * s_hi
        else:
            lo, hi = lo + v3 * s_hi, hi + v3 * s_lo
        return lo, hi

    def root_interval(self, i, k=None):
        br = self._brackets[i]
        if k is not None:
            br.refine_to(k)
        return br.interval()

    def root_float(self, i):
        br = self._brackets[i]
        br.refine_to(self._REFINE_START)
        return br.as_float()

    def log_abs_value(self, i, coords):
        """Float approximation of log|value at root i| for a nonzero element."""
        (v1, v2, v3), d = _clear_denominators(tuple(coords))
        if v2 == 0 and v3 == 0:
            if v1 == 0:
                raise ZeroElement("log of zero")
            return math.log(abs(v1)) - math.log(d)
        br = self._brackets[i]
        br.refine_to(self._REFINE_START)
        while True:
            lo, hi = br.value_bounds(v1, v2, v3)
            if lo > 0 or hi < 0:
                m = max(abs(lo), abs(hi))
                return math.log(m) - (2 * br.k) * math.log(2) - math.log(d)
            br.refine()

    # -- ring arithmetic on coordinate triples --------------------------------

    def mul_coords(self, a, b):
        p, q, r = self.p, self.q, self.r
        a1, a2, a3 = a
        b1, b2, b3 = b
        c0 = a1 * b1
        c1 = a1 * b2 + a2 * b1
        c2 = a1 * b3 + a2 * b2 + a3 * b1
        c3 = a2 * b3 + a3 * b2
        c4 = a3 * b3
        return (c0 - c3 * r + c4 * p * r,
                c1 - c3 * q + c4 * (p * q - r),
                c2 - c3 * p + c4 * (p * p - q))

    def times_g(self, a):
        a1, a2, a3 = a
        return (-self.r * a3, a1 - self.q * a3, a2 - self.p * a3)

    def trace_coords(self, a):
        p, q = self.p, self.q
        return 3 * a[0] - p * a[1] + (p * p - 2 * q) * a[2]

    def norm_coords(self, a):
        c0 = a
        c1 = self.times_g(a)
        c2 = self.times_g(c1)
        return (c0[0] * (c1[1] * c2[2] - c1[2] * c2[1])
                - c1[0] * (c0[1] * c2[2] - c0[2] * c2[1])
                + c2[0] * (c0[1] * c1[2] - c0[2] * c1[1]))

    def divide_coords(self, a, b):
        """Field quotient a/b as a Fraction triple; b must be nonzero."""
        if not any(b):
            raise ZeroDivisor("division by zero element")
        m0 = b
        m1 = self.times_g(b)
        m2 = self.times_g(m1)
        det = self.norm_coords(b)
        # Cramer on the 3x3 system with columns m0, m1, m2
        cols = (m0, m1, m2)

        def det3(c0, c1, c2):
            return (c0[0] * (c1[1] * c2[2] - c1[2] * c2[1])
                    - c1[0] * (c0[1] * c2[2] - c0[2] * c2[1])
                    + c2[0] * (c0[1] * c1[2] - c0[2] * c1[1]))

        out = []
        for j in range(3):
            mod = [cols[0], cols[1], cols[2]]
            mod[j] = a
            out.append(Fraction(det3(*mod), det))
        return tuple(out)


class AlgInt:
    """Element v1 + v2*g + v3*g^2 of a cubic order.

    Integer coordinates give an element of the order; Fraction coordinates are
    allowed and represent an element of the fraction field.
    """

    __slots__ = ("order", "v")

    def __init__(self, order, coords):
        vs = []
        for c in coords:
            if isinstance(c, Fraction):
                if c.denominator == 1:
                    c = int(c)
            elif not isinstance(c, int):
                c = Fraction(c)
                if c.denominator == 1:
                    c = int(c)
            vs.append(c)
        if len(vs) != 3:
            raise ValueError("an element needs three coordinates")
        self.order = order
        self.v = tuple(vs)

    # -- basics ---------------------------------------------------------------

    def is_integral(self):
        return all(isinstance(c, int) for c in self.v)

    def is_rational(self):
        return self.v[1] == 0 and self.v[2] == 0

    def __bool__(self):
        return any(self.v)

    def __eq__(self, other):
        if isinstance(other, AlgInt):
            return self.order.poly() == other.order.poly() and self.v == other.v
        if isinstance(other, (int, Fraction)):
            return self.v == (other, 0, 0)
        return NotImplemented

    def __hash__(self):
        return hash((self.order.poly(), self.v))

    def __repr__(self):
        return "AlgInt(%s, %s, %s)" % self.v

    def __str__(self):
        names = ("", "g", "g^2")
        parts = []
        for c, n in zip(self.v, names):
            if c == 0:
                continue
            if n and c == 1:
                t = n
            elif n and c == -1:
                t = "-" + n
            else:
                t = str(c) + ("*" + n if n else "")
            parts.append(t)
        if not parts:
            return "0"
        out = parts[0]
        for t in parts[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out

    # -- arithmetic -----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, AlgInt):
            if other.order.poly() != self.order.poly():
                raise ValueError("mixed orders")
            return other
        if isinstance(other, (int, Fraction)):
            return AlgInt(self.order, (other, 0, 0))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return AlgInt(self.order, tuple(a + b for a, b in zip(self.v, o.v)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return AlgInt(self.order, tuple(a - b for a, b in zip(self.v, o.v)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return AlgInt(self.order, tuple(b - a for a, b in zip(self.v, o.v)))

    def __neg__(self):
        return AlgInt(self.order, tuple(-a for a in self.v))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return AlgInt(self.order, self.order.mul_coords(self.v, o.v))

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out = self.order.one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inverse(self):
        return AlgInt(self.order, self.order.divide_coords((1, 0, 0), self.v))

    def trace(self):
        return self.order.trace_coords(self.v)

    def norm(self):
        return self.order.norm_coords(self.v)


# ---------------------------------------------------------------------------
# Named operations.

def mul(a, b):
    return a * b


def trace(x):
    return x.trace()


def norm(x):
    return x.norm()


def char_poly(x):
    """Monic characteristic polynomial of x, as coefficients (1, c2, c1, c0)."""
    s1 = Fraction(x.trace())
    x2 = x * x
    s2 = Fraction(x2.trace())
    s3 = Fraction((x2 * x).trace())
    e1 = s1
    e2 = (s1 * s1 - s2) / 2
    e3 = (s1 * s1 * s1 - 3 * s1 * s2 + 2 * s3) / 6
    out = []
    for c in (1, -e1, e2, -e3):
        c = Fraction(c)
        out.append(int(c) if c.denominator == 1 else c)
    return tuple(out)


def embed_sign(x, i):
    """Sign of x at the i-th ascending real embedding: -1, 0 or +1."""
    return x.order.sign_at(i, x.v)


def signature(x):
    """Signs of x at the three embeddings, reported in label order."""
    if not x:
        raise ZeroElement("the zero element has no signature")
    asc = [x.order.sign_at(i, x.v) for i in range(3)]
    return tuple(asc[j] for j in x.order.label_order)


def signature_ascending(x):
    if not x:
        raise ZeroElement("the zero element has no signature")
    return tuple(x.order.sign_at(i, x.v) for i in range(3))


def total_order_cmp(a, b):
    """Compare a and b in the componentwise partial order.

    Returns "eq", "lt" (a <= b with a != b), "gt", or "mixed".
    """
    d = tuple(y - x for x, y in zip(a.v, b.v))
    if not any(d):
        return "eq"
    signs = {a.order.sign_at(i, d) for i in range(3)}
    if signs == {1}:
        return "lt"
    if signs == {-1}:
        return "gt"
    return "mixed"


def totally_leq(a, b):
    """True when b - a is totally nonnegative."""
    return total_order_cmp(a, b) in ("eq", "lt")


def is_totally_positive(x):
    return bool(x) and all(x.order.sign_at(i, x.v) > 0 for i in range(3))


def field_divide(a, b):
    """Quotient a/b in the fraction field (rational coordinates allowed)."""
    return AlgInt(a.order, a.order.divide_coords(a.v, b.v))


def divide_exact(a, b):
    """Quotient a/b when it lies in the order; NotDivisible otherwise."""
    q = field_divide(a, b)
    if not q.is_integral():
        raise NotDivisible("quotient %r is not integral" % (q,))
    return q


def is_unit(x):
    return x.is_integral() and abs(x.norm()) == 1


def is_associated(a, b):
    """The unit a/b when a and b are associated; raises NotAssociated."""
    if not b:
        raise ZeroDivisor("association against zero")
    if not a:
        raise NotAssociated("zero is associated only with zero")
    q = field_divide(a, b)
    if q.is_integral() and abs(q.norm()) == 1:
        return q
    raise NotAssociated("%r and %r differ by a non-unit" % (a, b))


def associate_or_none(a, b):
    try:
        return is_associated(a, b)
    except (NotAssociated, ZeroDivisor):
        return None


def unit_decompose(x, units=None, bound=64):
    """Write the unit x as sign * u1^k * u2^l; returns (sign, k, l).

    The exponents are found from a float solve of the 2x2 log system and then
    verified exactly; nearby pairs are tried before giving up.
    """
    order = x.order
    if units is None:
        units = order.units
    if units is None:
        raise MissingUnits("no fundamental unit pair on this order")
    u1, u2 = units
    if not is_unit(x):
        raise NotAUnit("%r has norm != +-1" % (x,))
    a11 = order.log_abs_value(0, u1.v)
    a12 = order.log_abs_value(0, u2.v)
    a21 = order.log_abs_value(1, u1.v)
    a22 = order.log_abs_value(1, u2.v)
    b1 = order.log_abs_value(0, x.v)
    b2 = order.log_abs_value(1, x.v)
    det = a11 * a22 - a12 * a21
    if abs(det) < 1e-12:
        raise DecompositionNotFound("unit pair looks multiplicatively dependent")
    k0 = round((b1 * a22 - b2 * a12) / det)
    l0 = round((a11 * b2 - a21 * b1) / det)
    for w in range(4):
        for dk in range(-w, w + 1):
            for dl in range(-w, w + 1):
                if max(abs(dk), abs(dl)) != w:
                    continue
                k, l = k0 + dk, l0 + dl
                if abs(k) > bound or abs(l) > bound:
                    continue
                cand = (u1 ** k) * (u2 ** l)
                if x == cand:
                    return (1, k, l)
                if x == -cand:
                    return (-1, k, l)
    raise DecompositionNotFound("no exponents within bound %d" % bound)


def codifferent_trace(x, dnum):
    """Trace of x * dnum / f'(g), exact; dnum is the codifferent numerator.

    Tr(g^m / f'(g)) vanishes for m = 0, 1 and is 1 for m = 2, so the trace is
    the g^2-coordinate of the product.  Raises NonIntegralTrace when the inputs
    are rational vectors whose product trace is not an integer.
    """
    z = x * dnum
    t = z.v[2]
    if isinstance(t, Fraction):
        raise NonIntegralTrace("trace %s is not an integer" % t)
    return t


def fprime_signs():
    """Signs of f' at the ascending roots of a cubic with three real roots."""
    return (1, -1, 1)


def canonical_sign(x):
    """x or -x, normalized so the first nonzero coordinate is positive."""
    for c in x.v:
        if c > 0:
            return x
        if c < 0:
            return -x
    return x


# ---------------------------------------------------------------------------
# Coordinate boxes from embedding bounds (interval inverse Vandermonde).

def _iv_mul(a, b):
    ps = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return (min(ps), max(ps))


def _iv_add(a, b):
    return (a[0] + b[0], a[1] + b[1])


def _iv_div(a, b):
    if b[0] <= 0 <= b[1]:
        raise ZeroDivisionError("interval division through zero")
    ps = (a[0] / b[0], a[0] / b[1], a[1] / b[0], a[1] / b[1])
    return (min(ps), max(ps))


def coordinate_box(order, embedding_bounds, k=80):
    """Integer coordinate ranges containing all elements whose value at the
    i-th ascending embedding lies in embedding_bounds[i] = (lo_i, hi_i).

    Solves coords = V^-1 * values with interval arithmetic on the root
    brackets, rounding outward.  Returns [(lo1, hi1), (lo2, hi2), (lo3, hi3)].
    """
    xs = [order.root_interval(i, k) for i in range(3)]
    bounds = [(Fraction(lo), Fraction(hi)) for lo, hi in embedding_bounds]
    out = []
    rows = []
    for i in range(3):
        j, l = [t for t in range(3) if t != i]
        dij = _iv_add(xs[i], (-xs[j][1], -xs[j][0]))
        dil = _iv_add(xs[i], (-xs[l][1], -xs[l][0]))
        den = _iv_mul(dij, dil)
        r0 = _iv_div(_iv_mul(xs[j], xs[l]), den)
        r1 = _iv_div(_iv_add((-xs[j][1], -xs[j][0]), (-xs[l][1], -xs[l][0])), den)
        r2 = _iv_div((Fraction(1), Fraction(1)), den)
        rows.append((r0, r1, r2))
    for c in range(3):
        lo = Fraction(0)
        hi = Fraction(0)
        acc = (lo, hi)
        for i in range(3):
            acc = _iv_add(acc, _iv_mul(rows[i][c], bounds[i]))
        out.append((math.ceil(acc[0]), math.floor(acc[1])))
    return out
