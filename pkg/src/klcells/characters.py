"""Exact complex character tables of finite groups from a multiplication oracle.

Standard class-sum approach: class multiplication constants give commuting
integer matrices whose common eigenvectors are the central characters.
Working modulo a prime p = 1 (mod exponent), p > 2|W|, the eigenproblem is
solved exactly over F_p; eigenvalue multiplicities of rho(g) are then
recovered by a discrete Fourier transform over F_p and lifted to the
cyclotomic field Q(zeta_exponent), where all values are exact.

Any group object with mul/inv/identity/element_order/conjugacy_classes
works; CoxeterGroup does, and CyclicGroup below covers mu_d.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm
from typing import List, Sequence, Tuple

from .cyclotomic import Cyclotomic, CyclotomicField


class CyclicGroup:
    """Z/d with the same element-oracle surface as CoxeterGroup."""

    def __init__(self, d: int):
        if d < 1:
            raise ValueError("cyclic group order must be >= 1")
        self.d = d
        self._classes = _CyclicClasses(d)

    def __len__(self) -> int:
        return self.d

    @property
    def identity(self) -> int:
        return 0

    def mul(self, a: int, b: int) -> int:
        return (a + b) % self.d

    def inv(self, a: int) -> int:
        return (-a) % self.d

    def element_order(self, a: int) -> int:
        return self.d // gcd(a, self.d) if a else 1

    def name(self, a: int) -> str:
        return f"s^{a}"

    def conjugacy_classes(self) -> "_CyclicClasses":
        return self._classes


class _CyclicClasses:
    def __init__(self, d: int):
        self.blocks = [[a] for a in range(d)]
        self.class_of = list(range(d))
        self.representatives = list(range(d))
        self.sizes = [1] * d

    def __len__(self) -> int:
        return len(self.blocks)


@dataclass
class ClassFunction:
    """Values of a class function, aligned with a table's class order."""

    values: Tuple[Cyclotomic, ...]


@dataclass
class CharacterTable:
    group: object
    classes: object
    field: CyclotomicField
    rows: List[List[Cyclotomic]]
    class_orders: List[int]

    @property
    def degrees(self) -> List[int]:
        return [int(row[0].to_fraction()) for row in self.rows]

    def from_integers(self, values: Sequence[int]) -> List[Cyclotomic]:
        return [self.field.from_fraction(v) for v in values]

    def regular_character(self) -> List[Cyclotomic]:
        n = sum(self.classes.sizes)
        return self.from_integers([n] + [0] * (len(self.classes) - 1))

    def trivial_character(self) -> List[Cyclotomic]:
        return self.from_integers([1] * len(self.classes))

    def to_json_dict(self) -> dict:
        group = self.group
        reps = self.classes.representatives
        name = getattr(group, "name", lambda w: str(w))
        return {
            "zeta_order": self.field.order,
            "classes": [
                {"representative": name(r), "size": self.classes.sizes[i],
                 "element_order": self.class_orders[i]}
                for i, r in enumerate(reps)
            ],
            "irreducibles": [
                [[str(c) for c in value.coeffs] for value in row]
                for row in self.rows
            ],
            "degrees": self.degrees,
        }


# -- F_p linear algebra helpers ------------------------------------------


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def dixon_prime(order: int, exponent: int) -> int:
    """Least prime p = 1 (mod exponent) with p > 2*order (deterministic)."""
    p = ((2 * order) // exponent) * exponent + 1
    if p <= 2 * order:
        p += exponent
    while not _is_prime(p):
        p += exponent
    return p


def _primitive_root(p: int) -> int:
    n = p - 1
    factors = []
    m, d = n, 2
    while d * d <= m:
        if m % d == 0:
            factors.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        factors.append(m)
    g = 2
    while True:
        if all(pow(g, n // q, p) != 1 for q in factors):
            return g
        g += 1


def _charpoly_mod(a: List[List[int]], p: int) -> List[int]:
    """x^d + c1 x^(d-1) + ... + cd by Faddeev-LeVerrier (p > d)."""
    d = len(a)
    coeffs = [1]
    m = [[1 if i == j else 0 for j in range(d)] for i in range(d)]
    for k in range(1, d + 1):
        m = [[sum(a[i][t] * m[t][j] for t in range(d)) % p for j in range(d)]
             for i in range(d)]
        tr = sum(m[i][i] for i in range(d)) % p
        c = (-tr * pow(k, -1, p)) % p
        coeffs.append(c)
        for i in range(d):
            m[i][i] = (m[i][i] + c) % p
    return coeffs


def _poly_roots_mod(coeffs: List[int], p: int) -> List[int]:
    roots = []
    for x in range(p):
        acc = 0
        for c in coeffs:
            acc = (acc * x + c) % p
        if acc == 0:
            roots.append(x)
    return roots


def _rref(rows: List[List[int]], p: int) -> Tuple[List[List[int]], List[int]]:
    rows = [r[:] for r in rows]
    pivots: List[int] = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][c] % p:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def _nullspace(a: List[List[int]], p: int) -> List[List[int]]:
    d = len(a)
    rows, pivots = _rref(a, p)
    pivot_set = set(pivots)
    basis = []
    for free in range(d):
        if free in pivot_set:
            continue
        vec = [0] * d
        vec[free] = 1
        for r, pc in zip(rows, pivots):
            vec[pc] = (-r[free]) % p
        basis.append(vec)
    return basis


class _Subspace:
    """Row space in rref form with pivot bookkeeping."""

    def __init__(self, rows: List[List[int]], p: int):
        self.rows, self.pivots = _rref(rows, p)
        self.p = p

    @property
    def dim(self) -> int:
        return len(self.rows)

    def coords(self, vec: List[int]) -> List[int]:
        p = self.p
        out = [vec[pc] % p for pc in self.pivots]
        residual = vec[:]
        for c, row in zip(out, self.rows):
            if c:
                residual = [(x - c * y) % p for x, y in zip(residual, row)]
        if any(residual):
            raise ArithmeticError("vector escaped an invariant subspace")
        return out


def _refine(space: _Subspace, mat: List[List[int]], p: int) -> List[_Subspace]:
    """Split a mat-invariant subspace into eigenspaces of mat."""
    d = space.dim
    k = len(mat)
    images = []
    for row in space.rows:
        img = [sum(mat[l][j] * row[j] for j in range(k)) % p for l in range(k)]
        images.append(space.coords(img))
    # action[t][idx] = coefficient of basis row t in the image of row idx
    action = [[images[idx][t] for idx in range(d)] for t in range(d)]
    roots = _poly_roots_mod(_charpoly_mod(action, p), p)
    out = []
    for lam in roots:
        shifted = [[(action[i][j] - (lam if i == j else 0)) % p for j in range(d)]
                   for i in range(d)]
        null_basis = _nullspace(shifted, p)
        if not null_basis:
            continue
        ambient = []
        for nv in null_basis:
            vec = [0] * k
            for coef, row in zip(nv, space.rows):
                if coef:
                    vec = [(x + coef * y) % p for x, y in zip(vec, row)]
            ambient.append(vec)
        out.append(_Subspace(ambient, p))
    if sum(s.dim for s in out) != d:
        raise ArithmeticError("eigenspace refinement lost dimensions")
    return out


# -- the table -------------------------------------------------------------


def _class_constants(group, classes) -> List[List[List[int]]]:
    """a[i][l][j] = #{(x, y) in C_i x C_l : xy = rep_j}."""
    k = len(classes.blocks)
    a = [[[0] * k for _ in range(k)] for _ in range(k)]
    for j, rep in enumerate(classes.representatives):
        for x in range(len(group)):
            y = group.mul(group.inv(x), rep)
            a[classes.class_of[x]][classes.class_of[y]][j] += 1
    return a


def character_table(group) -> CharacterTable:
    """Exact character table; rows sorted with the trivial character first,
    then by (degree, value key)."""
    classes = group.conjugacy_classes()
    k = len(classes.blocks)
    n = len(group)
    reps = classes.representatives
    class_orders = [group.element_order(r) for r in reps]
    exponent = lcm(*class_orders) if class_orders else 1
    p = dixon_prime(n, exponent)
    field = CyclotomicField.get(exponent)

    a = _class_constants(group, classes)
    # M_i[l][j] = a_{il}^j, so M_i u = omega_i(chi) u on u = (omega_j(chi))_j.
    spaces = [_Subspace([[1 if i == j else 0 for j in range(k)] for i in range(k)], p)]
    for i in range(1, k):
        if all(s.dim == 1 for s in spaces):
            break
        mat = [[a[i][l][j] % p for j in range(k)] for l in range(k)]
        nxt: List[_Subspace] = []
        for s in spaces:
            if s.dim == 1:
                nxt.append(s)
            else:
                nxt.extend(_refine(s, mat, p))
        spaces = nxt
    if not all(s.dim == 1 for s in spaces):
        raise ArithmeticError("class matrices failed to separate characters")

    inv_class = [classes.class_of[group.inv(r)] for r in reps]
    theta = _primitive_root(p)
    zeta_fp = pow(theta, (p - 1) // exponent, p)

    # power map: class of rep_l^t
    power_class = []
    for l, rep in enumerate(reps):
        m = class_orders[l]
        row = []
        g = group.identity
        for _ in range(m):
            row.append(classes.class_of[g])
            g = group.mul(g, rep)
        power_class.append(row)

    rows_out: List[List[Cyclotomic]] = []
    for s in spaces:
        u = s.rows[0]
        if u[0] % p == 0:
            raise ArithmeticError("central character vanishes on the identity class")
        scale = pow(u[0], -1, p)
        u = [(x * scale) % p for x in u]
        # chi(1)^2 = |G| / sum_l u_l u_{l*} / |C_l|
        acc = 0
        for l in range(k):
            acc = (acc + u[l] * u[inv_class[l]] * pow(classes.sizes[l], -1, p)) % p
        chi1_sq = (n * pow(acc, -1, p)) % p
        chi1 = None
        for r in range(1, p // 2 + 1):
            if (r * r) % p == chi1_sq:
                chi1 = r
                break
        if chi1 is None:
            raise ArithmeticError("degree is not a square mod p")
        chi_fp = [(chi1 * u[l] * pow(classes.sizes[l], -1, p)) % p for l in range(k)]

        row = []
        for l in range(k):
            m = class_orders[l]
            zm = pow(zeta_fp, exponent // m, p)
            minv = pow(m, -1, p)
            mults = []
            for j in range(m):
                c = 0
                for t in range(m):
                    c = (c + chi_fp[power_class[l][t]] * pow(zm, (-j * t) % m, p)) % p
                mults.append((c * minv) % p)
            if sum(mults) % p != chi1 % p:
                raise ArithmeticError("eigenvalue multiplicities do not sum to the degree")
            value = field.zero()
            for j, c in enumerate(mults):
                if c:
                    value = value + field.zeta(j * (exponent // m)) * c
            row.append(value)
        rows_out.append(row)

    # Deterministic row order: trivial first, then (degree, value key).
    one = field.one()

    def row_key(row):
        return (int(row[0].to_fraction()), tuple(v.sort_key() for v in row))

    trivial = [r for r in rows_out if all(v == one for v in r)]
    rest = sorted((r for r in rows_out if not all(v == one for v in r)), key=row_key)
    rows_sorted = trivial + rest
    if len(trivial) != 1:
        raise ArithmeticError("expected exactly one trivial character")
    return CharacterTable(group, classes, field, rows_sorted, class_orders)


def inner_product(f: Sequence[Cyclotomic], g: Sequence[Cyclotomic],
                  table: CharacterTable) -> Cyclotomic:
    """(1/|W|) sum over classes of |class| * f * conj(g)."""
    n = sum(table.classes.sizes)
    acc = table.field.zero()
    for size, fv, gv in zip(table.classes.sizes, f, g):
        acc = acc + fv * gv.conj() * size
    return acc / n


def decompose(f: Sequence[Cyclotomic], table: CharacterTable
              ) -> Tuple[List[Cyclotomic], bool]:
    """Multiplicity vector of f against the irreducible rows, plus a flag
    telling whether every entry is a nonnegative rational integer."""
    coeffs = [inner_product(f, row, table) for row in table.rows]
    ok = all(c.is_rational() and c.to_fraction().denominator == 1
             and c.to_fraction() >= 0 for c in coeffs)
    return coeffs, ok


def verify_orthogonality(table: CharacterTable) -> bool:
    """Exact row orthogonality and the degree sum |W| = sum chi(1)^2."""
    k = len(table.rows)
    for i in range(k):
        for j in range(k):
            ip = inner_product(table.rows[i], table.rows[j], table)
            if not ip == (1 if i == j else 0):
                return False
    n = sum(table.classes.sizes)
    return sum(d * d for d in table.degrees) == n
