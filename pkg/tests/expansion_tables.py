"""Expected classifications of JPA semiconvergents for the parametric families.

Each generator returns concrete rows ``(k, i, j, norm, label, eps)`` for the
expansion of one standard vector at one tracked root:

* ``norm`` is the exact norm of the semiconvergent ``delta_{i,j}^{(k)}``;
* ``label`` is a catalog label tuple, with ``("one",)`` for unit rows, or
  ``None`` when the semiconvergent decomposes in its signature;
* ``eps = (sign, e1, e2)`` gives the unit with ``delta = alpha * eps`` as
  ``sign * U1**e1 * U2**e2`` in the basis of :func:`unit_basis`
  (``None`` exactly for the decomposable rows).

For the Galois family the basis is the conjugate pair ``(c(g), g)`` where
``c(g) = g^2 - (a+1)g - 2`` is the conjugate root mapped onto by the tracked
smallest root.  For the first Ennola polynomial it is ``(g, g - 1)``.  The
second Ennola polynomial generates the same field as the first one at
parameter ``a - 2``, and the classifications are stated in that generator
``1 + 1/g``, so the basis is ``(1 + 1/g, 1/g)``.
"""

from cubicmcf.core import mul


def unit_basis(order):
    g = order.element(0, 1, 0)
    if order.family == "simplest":
        a = order.family_params["a"]
        return (order.element(-2, -(a + 1), 1), g)
    if order.family == "ennola2":
        ginv = g ** -1
        return (order.element(1) + ginv, ginv)
    return (g, g - 1)


def eps_element(order, eps):
    sign, e1, e2 = eps
    u1, u2 = unit_basis(order)
    x = mul(u1 ** e1, u2 ** e2)
    return -x if sign < 0 else x


# -- Galois family, vector (1, |g'|, g'^2) at the smallest root --------------

def simplest_even_rows(a):
    # a = 2*A0 >= 4
    assert a >= 4 and a % 2 == 0
    A0 = a // 2
    rows = [
        (1, 2, 0, -(2 * a + 3), ("theta", 0, 0), (-1, -1, -1)),
        (1, 2, 1, -1, ("one",), (-1, -1, 1)),
    ]
    for j in range(1, a + 1):
        rows.append((1, 3, j, -j**3 + a * j * j + (a + 3) * j + 1,
                     ("theta", a - j + 1, 0), (1, -2, -2)))
    rows.append((2, 2, 0, 2 * a + 3, ("theta", 0, 0), (1, -2, -2)))
    rows.append((2, 3, 0, 1, ("one",), (1, -1, 0)))
    for j in range(1, a + 1):
        rows.append((2, 3, j, -j**3 + a * j * j + (a + 3) * j + 1,
                     ("theta", a - j + 1, 0), (1, -3, -2)))
    rows.append((3, 3, 0, 1, ("one",), (1, -2, 0)))
    rows.append((4, 3, 0, -1, ("one",), (-1, -2, -1)))
    for j in range(1, A0):
        rows.append((4, 3, j,
                     -(2 * a + 3) * j**3 + a * a * j * j
                     + (a * a + 2 * a + 3) * j - 1,
                     ("theta", a - 2 * j, j + 1), (1, -4, -2)))
    rows.append((5, 3, 0, 2 * a + 3, ("theta", 0, 0), (1, -3, -2)))
    rows.append((5, 3, 1, 1, ("one",), (1, -3, 0)))
    rows.append((6, 3, 0, -1, ("one",), (-1, -3, -1)))
    for j in range(0, A0 - 2):
        v = A0 - j - 3
        rows.append((7, 2, j,
                     j**3 - (A0 - 6) * j * j - (6 * A0 - 9) * j
                     - A0 * A0 * j + A0**3 - 5 * A0 + 3,
                     ("theta", v, a - v), (1, -5, -2)))
    for j in range(0, A0 + 2):
        rows.append((7, 3, j,
                     j**3 - (A0 + 6) * j * j + (2 * A0 + 9) * j
                     - A0 * A0 * j + A0**3 + 4 * A0 * A0 + 3 * A0 - 1,
                     ("theta", 0, A0 + 1 - j), (1, -4, -2)))
    rows.append((7, 3, A0 + 2, 1, ("one",), (1, -4, 0)))
    rows.append((8, 2, 0, -1, ("one",), (-1, -5, -1)))
    rows.append((8, 3, 0, -1, ("one",), (-1, -4, -1)))
    rows.append((8, 3, 1, 1, ("one",), (1, -4, -2)))
    for j in range(2, a + 2):
        rows.append((8, 3, j, -j**3 + (a + 3) * j * j - a * j - 1,
                     ("theta", a - j + 2, 0), (1, -6, -4)))
    return rows


def simplest_odd_rows(a):
    # a = 2*A0 + 1 >= 5
    assert a >= 5 and a % 2 == 1
    A0 = (a - 1) // 2
    rows = [
        (1, 2, 0, -(2 * a + 3), ("theta", 0, 0), (-1, -1, -1)),
        (1, 2, 1, -1, ("one",), (-1, -1, 1)),
    ]
    for j in range(1, a + 1):
        rows.append((1, 3, j, -j**3 + a * j * j + (a + 3) * j + 1,
                     ("theta", a - j + 1, 0), (1, -2, -2)))
    rows.append((2, 2, 0, 2 * a + 3, ("theta", 0, 0), (1, -2, -2)))
    rows.append((2, 3, 0, 1, ("one",), (1, -1, 0)))
    for j in range(1, a + 1):
        rows.append((2, 3, j, -j**3 + a * j * j + (a + 3) * j + 1,
                     ("theta", a - j + 1, 0), (1, -3, -2)))
    rows.append((3, 3, 0, 1, ("one",), (1, -2, 0)))
    rows.append((4, 3, 0, -1, ("one",), (-1, -2, -1)))
    for j in range(1, A0):
        rows.append((4, 3, j,
                     -(2 * a + 3) * j**3 + a * a * j * j
                     + (a * a + 2 * a + 3) * j - 1,
                     ("theta", a - 2 * j, j + 1), (1, -4, -2)))
    rows.append((5, 2, 0, 3 * A0**3 + 9 * A0 * A0 + 6 * A0 - 1,
                 ("theta", 1, A0 + 1), (1, -4, -2)))
    rows.append((5, 3, 0, 2 * a + 3, ("theta", 0, 0), (1, -3, -2)))
    rows.append((5, 3, 1, 1, ("one",), (1, -3, 0)))
    rows.append((6, 3, 0, -1, ("one",), (-1, -3, -1)))
    for j in range(0, A0 - 2):
        v = A0 - j - 3
        rows.append((7, 2, j,
                     j**3 - (A0 - 7) * j * j - (8 * A0 - 12) * j
                     - A0 * A0 * j + A0**3 + A0 * A0 - 8 * A0 + 5,
                     ("theta", v, a - v), (1, -5, -2)))
    for j in range(0, A0 + 3):
        rows.append((7, 3, j,
                     j**3 - (A0 + 8) * j * j + (2 * A0 + 17) * j
                     - A0 * A0 * j + A0**3 + 6 * A0 * A0 + 7 * A0 - 5,
                     ("theta", 0, A0 + 2 - j), (1, -4, -2)))
    rows.append((7, 3, A0 + 3, 1, ("one",), (1, -4, 0)))
    rows.append((8, 2, 0, -1, ("one",), (-1, -5, -1)))
    rows.append((8, 3, 0, -1, ("one",), (-1, -4, -1)))
    rows.append((8, 3, 1, 1, ("one",), (1, -4, -2)))
    for j in range(2, a + 2):
        rows.append((8, 3, j, -j**3 + (a + 3) * j * j - a * j - 1,
                     ("theta", a - j + 2, 0), (1, -6, -4)))
    return rows


def simplest_small_rows(a):
    # 1 <= a <= 3
    assert 1 <= a <= 3
    rows = [
        (1, 2, 0, -(2 * a + 3), ("theta", 0, 0), (-1, -1, -1)),
        (1, 2, 1, -1, ("one",), (-1, -1, 1)),
    ]
    for j in range(1, a + 1):
        rows.append((1, 3, j, -j**3 + a * j * j + (a + 3) * j + 1,
                     ("theta", a - j + 1, 0), (1, -2, -2)))
    rows.append((2, 2, 0, 2 * a + 3, ("theta", 0, 0), (1, -2, -2)))
    rows.append((2, 3, 0, 1, ("one",), (1, -1, 0)))
    for j in range(1, a + 1):
        rows.append((2, 3, j, -j**3 + a * j * j + (a + 3) * j + 1,
                     ("theta", a - j + 1, 0), (1, -3, -2)))
    rows.append((3, 3, 0, 1, ("one",), (1, -2, 0)))
    rows.append((4, 3, 0, -1, ("one",), (-1, -2, -1)))
    for j in range(0, a - 1):
        rows.append((5, 2, j,
                     j**3 - (2 * a - 3) * j * j + (a * a - 5 * a) * j
                     + 2 * a * a - 1,
                     ("theta", a - j - 2, j + 2), (1, -4, -2)))
    rows.append((5, 3, 0, 2 * a + 3, ("theta", 0, 0), (1, -3, -2)))
    rows.append((5, 3, 1, 1, ("one",), (1, -3, 0)))
    rows.append((6, 2, 0, -1, ("one",), (-1, -4, -1)))
    rows.append((6, 3, 0, -1, ("one",), (-1, -3, -1)))
    rows.append((6, 3, 1, 1, ("one",), (1, -3, -2)))
    for j in range(2, a + 2):
        rows.append((6, 3, j, -j**3 + (a + 3) * j * j - a * j - 1,
                     ("theta", a - j + 2, 0), (1, -5, -4)))
    return rows


def simplest_a0_rows():
    return [
        (0, 3, 1, -3, ("theta", 0, 0), (-1, -1, -1)),
        (2, 2, 0, 3, ("theta", 0, 0), (1, -2, -2)),
        (2, 3, 0, 1, ("one",), (1, -1, 0)),
        (3, 2, 0, -1, ("one",), (-1, -2, -1)),
        (3, 3, 0, -1, ("one",), (-1, -1, -1)),
        (3, 3, 1, 1, ("one",), (1, -1, -2)),
        (4, 2, 0, 3, ("theta", 0, 0), (1, -3, -4)),
        (4, 3, 0, 1, ("one",), (1, -2, -2)),
    ]


def simplest_neg1_rows():
    return [
        (0, 3, 1, -1, ("one",), (-1, 1, 1)),
        (0, 3, 2, 1, ("one",), (1, 1, 0)),
        (2, 3, 0, 1, ("one",), (1, -1, 0)),
        (2, 3, 1, -1, ("one",), (-1, 0, -1)),
        (2, 3, 2, 1, ("one",), (1, 0, -2)),
    ]


# -- First Ennola polynomial x^3 + (a-1)x^2 - ax - 1 --------------------------

def ennola1_main_rows(a):
    # vector (1, g, g^2) at the largest root, a >= 3
    assert a >= 3
    rows = [
        (1, 2, 0, -2 * a + 3, ("lambda", a - 1, a - 1), (1, -2, 0)),
        (1, 2, 1, 1, ("one",), (1, 1, 1)),
    ]
    cubic1 = lambda j: -j**3 + (a + 1) * j * j + (a + 2) * j + 1
    for j in range(1, a):
        rows.append((1, 3, j, cubic1(j), ("kappa", a - j), (1, -1, 1)))
    for j in (a, a + 1):
        rows.append((1, 3, j, cubic1(j), None, None))
    rows.append((2, 3, 0, 1, ("one",), (1, 0, 1)))
    for j in range(1, a):
        rows.append((2, 3, j, cubic1(j), ("kappa", a - j), (1, -1, 2)))
    for j in (a, a + 1):
        rows.append((2, 3, j, cubic1(j), None, None))
    cubic3 = lambda j: -j**3 + (a + 4) * j * j - (a + 3) * j + 1
    rows.append((3, 3, 0, 1, ("one",), (1, 0, 2)))
    rows.append((3, 3, 1, 1, ("one",), (1, -1, 2)))
    for j in range(2, a + 1):
        rows.append((3, 3, j, cubic3(j), ("kappa", a - j + 1), (1, -2, 3)))
    for j in (a + 1, a + 2):
        rows.append((3, 3, j, cubic3(j), None, None))
    return rows


def ennola1_second_rows(a):
    # vector (1, |g'|, g'^2) at the middle root, a >= 3
    assert a >= 3
    rows = [(1, 3, 1, -2 * a + 3, ("lambda", a - 1, a - 1), (1, -2, -1))]
    for j in range(2, a):
        rows.append((1, 3, j, j**3 - a * j * j - (a - 1) * j + 1,
                     ("lambda", 1, j - 1), (1, 0, -1)))
    for j in range(0, a - 2):
        rows.append((2, 2, j,
                     -j**3 + (2 * a - 2) * j * j - (a * a - 3 * a + 1) * j
                     - a * a + a + 1,
                     ("lambda", j + 1, a - 1), (1, 0, -1)))
    rows.append((2, 3, 1, 2 * a - 3, ("lambda", a - 1, a - 1), (-1, -1, -1)))
    for j in range(2, a):
        rows.append((2, 3, j, -j**3 + a * j * j + (a - 1) * j - 1,
                     ("lambda", 1, j - 1), (-1, 1, -1)))
    rows.append((4, 3, 0, -2 * a + 3, ("lambda", a - 1, a - 1), (1, 0, -1)))
    for j in range(0, a - 2):
        rows.append((5, 3, j,
                     j**3 - (2 * a - 2) * j * j + (a * a - 3 * a + 1) * j
                     + a * a - a - 1,
                     ("lambda", j + 1, a - 1), (-1, 1, -1)))
    rows.append((6, 3, 0, -1, ("one",), (-1, 3, 0)))
    rows.append((7, 3, 0, 1, ("one",), (1, 3, -1)))
    rows.append((8, 3, 0, 2 * a - 3, ("lambda", a - 1, a - 1), (-1, 1, -1)))
    rows.append((8, 3, 1, -a * a + a + 1, ("lambda", 1, a - 1), (1, 2, -1)))
    for j in range(2, a):
        rows.append((8, 3, j,
                     j**3 - j * j - (a * a + a - 4) * j + 2 * a - 3,
                     ("lambda", 2, j - 1), (1, 3, -2)))
    for j in range(0, a - 3):
        rows.append((9, 2, j,
                     -j**3 + (2 * a - 5) * j * j - (a * a - 7 * a + 8) * j
                     - 2 * a * a + 6 * a - 3,
                     ("lambda", j + 2, a - 1), (1, 3, -2)))
    rows.append((9, 3, 0, -1, ("one",), (-1, 4, -1)))
    rows.append((9, 3, 1, 2 * a - 3, ("lambda", a - 1, a - 1), (-1, 2, -2)))
    for j in range(2, a):
        rows.append((9, 3, j, -j**3 + a * j * j + (a - 1) * j - 1,
                     ("lambda", 1, j - 1), (-1, 4, -2)))
    return rows


def ennola1_third_rows(a):
    # vector (1, |g''|, g''^2) at the smallest root, a >= 4
    assert a >= 4
    rows = []
    for j in range(1, a - 1):
        rows.append((0, 2, j, -j**3 + (a - 1) * j * j + a * j - 1,
                     ("lambda", a - j, a - 1), (-1, -2, -1)))
    rows.append((0, 3, 1, -2 * a + 3, ("lambda", a - 1, a - 1), (1, -2, 0)))
    rows.append((0, 3, 2, 2 * a * a - 4 * a + 1, ("lambda", 1, a - 2),
                 (-1, -1, 0)))
    rows.append((0, 3, 3, 6 * a * a - 6 * a - 11, ("mu", a - 3), (-1, -1, 0)))
    for j in range(4, a * a - 1):
        rows.append((0, 3, j,
                     -j**3 + (a * a + 1) * j * j
                     - (a * a + 2 * a - 2) * j + 1, None, None))
    rows.append((2, 3, 0, a * a - a - 1, ("lambda", 1, a - 1), (-1, -2, -1)))
    cubic3 = lambda j: (-j**3 + (4 * a - 4) * j * j
                        - (5 * a * a - 11 * a + 5) * j
                        + 2 * a**3 - 7 * a * a + 7 * a - 3)
    for j in range(0, a - 3):
        rows.append((3, 2, j, cubic3(j), None, None))
    rows.append((3, 2, a - 3, 2 * a + 3, ("kappa", a - 1), (1, -2, 0)))
    rows.append((3, 2, a - 2, -1, ("one",), (-1, -1, 0)))
    rows.append((3, 2, a - 1, -1, ("one",), (-1, 0, -1)))
    for j in range(a, 2 * a - 2):
        rows.append((3, 2, j, cubic3(j), ("lambda", 2 * a - j - 1, a - 1),
                     (-1, -3, -2)))
    for j in range(0, a * a - a - 1):
        rows.append((3, 3, j,
                     -j**3 + (a * a - 3 * a + 1) * j * j
                     + (2 * a**3 - 4 * a * a + 2) * j
                     + a**4 - 2 * a**3 - a * a + 2 * a + 1, None, None))
    return rows


# -- Second Ennola polynomial x^3 - (a-1)x^2 - ax - 1 -------------------------

def ennola2_main_rows(a):
    # vector (1, g, g^2) at the largest root, a >= 5
    assert a >= 5
    rows = []
    cubic0 = lambda j: -j**3 + (a - 1) * j * j + a * j + 1
    for j in range(1, a - 2):
        rows.append((0, 2, j, cubic0(j), ("tkappa", j), (1, -1, 0)))
    for j in (a - 2, a - 1):
        rows.append((0, 2, j, cubic0(j), None, None))
    rows.append((0, 3, 1, 2 * a - 1, ("tkappa", 1), (1, 0, -1)))
    for j in range(2, a * a):
        rows.append((0, 3, j,
                     -j**3 + (a * a + 1) * j * j
                     - (a * a - 2 * a + 2) * j + 1, None, None))
    cubic1 = lambda j: (-j**3 + (4 * a - 1) * j * j
                        - (5 * a * a - 3 * a) * j + 2 * a**3 - 2 * a * a + 1)
    for j in range(0, a - 1):
        rows.append((1, 2, j, cubic1(j), None, None))
    rows.append((1, 2, a - 1, 1, ("one",), (1, 0, 1)))
    rows.append((1, 2, a, 1, ("one",), (1, -1, 1)))
    for j in range(a + 1, 2 * a - 2):
        rows.append((1, 2, j, cubic1(j), ("tkappa", j - a), (1, -2, 2)))
    for j in (2 * a - 2, 2 * a - 1):
        rows.append((1, 2, j, cubic1(j), None, None))
    for j in range(1, a * a + a):
        rows.append((1, 3, j,
                     -j**3 + (a * a + a) * j * j + (2 * a + 1) * j + 1,
                     None, None))
    cubic2 = lambda j: (-j**3 + (4 * a + 2) * j * j
                        - (5 * a * a + 5 * a + 1) * j
                        + 2 * a**3 + 3 * a * a + a + 1)
    for j in range(0, a):
        rows.append((2, 2, j, cubic2(j), None, None))
    rows.append((2, 2, a, 1, ("one",), (1, -1, 3)))
    rows.append((2, 2, a + 1, 1, ("one",), (1, -2, 3)))
    for j in range(a + 2, 2 * a - 1):
        rows.append((2, 2, j, cubic2(j), ("tkappa", j - a - 1), (1, -3, 4)))
    for j in (2 * a - 1, 2 * a):
        rows.append((2, 2, j, cubic2(j), None, None))
    rows.append((2, 3, 0, 1, ("one",), (1, -1, 2)))
    for j in range(1, a * a + a):
        rows.append((2, 3, j,
                     -j**3 + (a * a + a) * j * j + (2 * a + 1) * j + 1,
                     None, None))
    return rows


def ennola2_second_rows(a):
    # vector (1, |g'|, g'^2) at the smallest root, a >= 5
    assert a >= 5
    rows = []
    for j in range(1, a - 3):
        rows.append((3, 3, j,
                     -j**3 + (2 * a - 3) * j * j
                     - (a * a - 3 * a + 2) * j + 1,
                     ("tlambda", j, j), (1, 1, -2)))
    rows.append((4, 3, 0, 1, ("one",), (1, 1, -1)))
    rows.append((5, 3, 0, -1, ("one",), (-1, 1, -2)))
    rows.append((6, 3, 0, -2 * a + 7, ("tlambda", a - 3, a - 3), (1, 1, -2)))
    for j in range(1, a - 2):
        rows.append((6, 3, j,
                     -j**3 + j * j + (a * a - 3 * a - 2) * j - 2 * a + 7,
                     ("tlambda", j, 1), (-1, 2, -2)))
    for j in range(0, a - 5):
        rows.append((7, 2, j,
                     j**3 - (2 * a - 9) * j * j + (a * a - 11 * a + 26) * j
                     + 2 * a * a - 14 * a + 23,
                     ("tlambda", j + 2, j + 2), (-1, 3, -3)))
    rows.append((7, 3, 0, 1, ("one",), (1, 2, -2)))
    rows.append((7, 3, 1, -2 * a + 7, ("tlambda", a - 3, a - 3), (1, 2, -3)))
    for j in range(2, a - 2):
        rows.append((7, 3, j, j**3 - (a - 2) * j * j - (a - 3) * j + 1,
                     ("tlambda", j, 0), (1, 3, -2)))
    rows.append((8, 3, 0, -1, ("one",), (-1, 3, -2)))
    rows.append((9, 3, 0, 2 * a - 7, ("tlambda", a - 3, a - 3), (-1, 3, -3)))
    for j in range(0, a - 4):
        rows.append((10, 3, j,
                     -j**3 + (2 * a - 6) * j * j - (a * a - 7 * a + 11) * j
                     - a * a + 5 * a - 5,
                     ("tlambda", j + 1, j + 1), (1, 4, -3)))
    return rows


def ennola2_third_rows(a):
    # vector (1, |g''|, g''^2) at the middle root, a >= 5
    assert a >= 5
    rows = [(1, 3, 1, 1, ("one",), (1, 1, -1))]
    for j in range(2, a - 2):
        rows.append((1, 3, j, j**3 - a * j * j + (a - 1) * j + 1,
                     ("tlambda", a - j - 1, a - j - 1), (1, 0, -2)))
    rows.append((2, 2, 0, -a * a + 5 * a - 5, ("tlambda", 1, 1), (1, 0, -2)))
    for j in range(1, a - 2):
        rows.append((2, 2, j,
                     -j**3 + 2 * j * j + (a * a - 3 * a - 3) * j
                     - a * a + 5 * a - 5,
                     ("tlambda", a - 3, a - 2 - j), (-1, -1, -2)))
    rows.append((2, 3, 1, -1, ("one",), (-1, 1, -2)))
    for j in range(2, a - 2):
        rows.append((2, 3, j, -j**3 + a * j * j - (a - 1) * j - 1,
                     ("tlambda", a - j - 1, a - j - 1), (-1, 0, -3)))
    rows.append((3, 2, 0, a * a - 5 * a + 5, ("tlambda", 1, 1), (-1, 0, -3)))
    rows.append((4, 2, 0, 2 * a - 1, ("tkappa", 1), (1, -2, -2)))
    for j in range(0, a - 4):
        rows.append((4, 3, j,
                     j**3 - (2 * a - 7) * j * j + (a * a - 9 * a + 18) * j
                     + 2 * a * a - 12 * a + 17,
                     ("tlambda", a - 3 - j, 0), (-1, -1, -2)))
    for j in range(0, a - 3):
        rows.append((5, 2, j,
                     -j**3 - j * j + (a * a - 3 * a - 2) * j + 2 * a - 7,
                     ("tlambda", a - 3, a - 3 - j), (-1, -2, -3)))
    rows.append((5, 3, 0, -1, ("one",), (-1, -1, -2)))
    rows.append((5, 3, 1, -1, ("one",), (-1, 0, -3)))
    for j in range(2, a - 2):
        rows.append((5, 3, j, -j**3 + a * j * j - (a - 1) * j - 1,
                     ("tlambda", a - j - 1, a - j - 1), (-1, -1, -4)))
    return rows


# table name -> (family, tracked root label, row generator)
TABLES = {
    "simplest-even": ("simplest", "rho'", simplest_even_rows),
    "simplest-odd": ("simplest", "rho'", simplest_odd_rows),
    "simplest-small": ("simplest", "rho'", simplest_small_rows),
    "simplest-a0": ("simplest", "rho'", lambda a: simplest_a0_rows()),
    "simplest-neg1": ("simplest", "rho'", lambda a: simplest_neg1_rows()),
    "ennola1-main": ("ennola1", "rho", ennola1_main_rows),
    "ennola1-second": ("ennola1", "rho'", ennola1_second_rows),
    "ennola1-third": ("ennola1", "rho''", ennola1_third_rows),
    "ennola2-main": ("ennola2", "psi", ennola2_main_rows),
    "ennola2-second": ("ennola2", "psi'", ennola2_second_rows),
    "ennola2-third": ("ennola2", "psi''", ennola2_third_rows),
}
