"""Finite Coxeter groups from Coxeter matrices, with exact root-system action.

The geometric reflection representation is realized over Q(zeta_N) with
Cartan-like entries -2cos(pi/m_st) = -(zeta_2m + zeta_2m^-1), uniformly
for every finite type including I2(m).  Elements are identified by their
permutation of the (finite) root system; breadth-first enumeration yields
ShortLex-canonical reduced words and the length table, so no sign
decisions on real algebraic numbers are ever needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Dict, List, Optional, Sequence, Tuple

from .cyclotomic import Cyclotomic, CyclotomicField
from .ordered_coeffs import OrderedExponent

DEFAULT_SIZE_CAP = 10_000

_LETTERS = "stuvwxyz"


class InfiniteOrTooLarge(ValueError):
    """Root system or group enumeration exceeded the size cap."""


class ConjugacyViolation(ValueError):
    """A weight function differs on two conjugate generators."""

    def __init__(self, gen_a: str, gen_b: str):
        self.gen_a = gen_a
        self.gen_b = gen_b
        super().__init__(
            f"generators {gen_a!r} and {gen_b!r} are conjugate in W "
            f"but carry different weights"
        )


def default_gen_names(rank: int) -> Tuple[str, ...]:
    if rank <= len(_LETTERS):
        return tuple(_LETTERS[:rank])
    return tuple(f"s{i + 1}" for i in range(rank))


@dataclass(frozen=True)
class CoxeterMatrix:
    """Symmetric matrix of bond orders m_st (1 on the diagonal, >=2 off it)."""

    entries: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.entries)
        for i, row in enumerate(self.entries):
            if len(row) != n:
                raise ValueError("Coxeter matrix must be square")
            if row[i] != 1:
                raise ValueError("diagonal entries must be 1")
            for j in range(n):
                if self.entries[i][j] != self.entries[j][i]:
                    raise ValueError("Coxeter matrix must be symmetric")
                if i != j and self.entries[i][j] < 2:
                    raise ValueError("off-diagonal entries must be >= 2")

    @property
    def rank(self) -> int:
        return len(self.entries)

    @staticmethod
    def from_rows(rows: Sequence[Sequence[int]]) -> "CoxeterMatrix":
        return CoxeterMatrix(tuple(tuple(int(x) for x in row) for row in rows))

    @staticmethod
    def from_upper_triangle(rank: int, upper: Sequence[Sequence[int]]) -> "CoxeterMatrix":
        """Build from rows m_{i,i+1} ... m_{i,rank-1}, one row per i."""
        m = [[1 if i == j else 2 for j in range(rank)] for i in range(rank)]
        if len(upper) != rank - 1:
            raise ValueError(f"expected {rank - 1} upper-triangle rows")
        for i, row in enumerate(upper):
            if len(row) != rank - 1 - i:
                raise ValueError(f"upper-triangle row {i + 1} has wrong length")
            for k, val in enumerate(row):
                j = i + 1 + k
                m[i][j] = m[j][i] = int(val)
        return CoxeterMatrix.from_rows(m)

    def upper_triangle(self) -> List[List[int]]:
        return [[self.entries[i][j] for j in range(i + 1, self.rank)]
                for i in range(self.rank - 1)]


def named_coxeter_matrix(kind: str, n: int) -> CoxeterMatrix:
    """The classified matrices: A n, B n, D n, I2 m."""
    kind = kind.upper()
    if kind == "A":
        if n < 1:
            raise ValueError("A n needs n >= 1")
        rank = n
        bonds = {(i, i + 1): 3 for i in range(rank - 1)}
    elif kind == "B":
        if n < 2:
            raise ValueError("B n needs n >= 2")
        rank = n
        bonds = {(i, i + 1): 3 for i in range(rank - 2)}
        bonds[(rank - 2, rank - 1)] = 4
    elif kind == "D":
        if n < 3:
            raise ValueError("D n needs n >= 3")
        rank = n
        # Chain on nodes 0..rank-2, fork: node rank-1 also bonds to rank-3.
        bonds = {(i, i + 1): 3 for i in range(rank - 2)}
        bonds[(rank - 3, rank - 1)] = 3
    elif kind == "I2":
        if n < 2:
            raise ValueError("I2 m needs m >= 2")
        rank = 2
        bonds = {(0, 1): n}
    else:
        raise ValueError(f"unknown Coxeter type {kind!r}")
    m = [[1 if i == j else 2 for j in range(rank)] for i in range(rank)]
    for (i, j), v in bonds.items():
        m[i][j] = m[j][i] = v
    return CoxeterMatrix.from_rows(m)


def _ground_field(matrix: CoxeterMatrix) -> CyclotomicField:
    orders = [1]
    for i in range(matrix.rank):
        for j in range(i + 1, matrix.rank):
            m = matrix.entries[i][j]
            if m not in (2, 3):
                orders.append(2 * m)
    return CyclotomicField.get(lcm(*orders))


def _cartan_entry(field: CyclotomicField, m: int) -> Cyclotomic:
    """-2cos(pi/m) as an exact field element."""
    if m == 1:
        return field.from_fraction(2)
    if m == 2:
        return field.zero()
    if m == 3:
        return field.from_fraction(-1)
    k = field.order // (2 * m)
    return -(field.zeta(k) + field.zeta(-k))


class CoxeterGroup:
    """A finite Coxeter group, fully enumerated.

    Elements are indices 0..|W|-1 in BFS (ShortLex) order; index 0 is the
    identity.  ``word(i)`` is the ShortLex-least reduced word of element i
    as a tuple of generator indices.
    """

    def __init__(self, matrix: CoxeterMatrix,
                 gen_names: Optional[Sequence[str]] = None,
                 size_cap: int = DEFAULT_SIZE_CAP):
        self.matrix = matrix
        self.rank = matrix.rank
        self.gen_names = tuple(gen_names) if gen_names else default_gen_names(self.rank)
        if len(self.gen_names) != self.rank:
            raise ValueError("generator name count must equal the rank")
        self.field = _ground_field(matrix)
        self._cartan = [
            [_cartan_entry(self.field, matrix.entries[i][j]) for j in range(self.rank)]
            for i in range(self.rank)
        ]
        self.roots = self._enumerate_roots(size_cap)
        self._gen_perms = self._generator_permutations()
        self._enumerate_elements(size_cap)
        self._classes: Optional[ConjugacyClasses] = None

    # -- construction -------------------------------------------------

    def _reflect(self, gen: int, root: Tuple[Cyclotomic, ...]) -> Tuple[Cyclotomic, ...]:
        # s_i changes only coordinate i: x_i -> x_i - sum_j a_ij x_j.
        acc = self.field.zero()
        for j in range(self.rank):
            a = self._cartan[gen][j]
            if not a.is_zero():
                acc = acc + a * root[j]
        out = list(root)
        out[gen] = root[gen] - acc
        return tuple(out)

    def _enumerate_roots(self, cap: int) -> List[Tuple[Cyclotomic, ...]]:
        one, zero = self.field.one(), self.field.zero()
        simple = [tuple(one if j == i else zero for j in range(self.rank))
                  for i in range(self.rank)]
        seen = {r: idx for idx, r in enumerate(simple)}
        roots = list(simple)
        frontier = list(simple)
        while frontier:
            nxt = []
            for root in frontier:
                for g in range(self.rank):
                    image = self._reflect(g, root)
                    if image not in seen:
                        seen[image] = len(roots)
                        roots.append(image)
                        nxt.append(image)
                        if len(roots) > cap:
                            raise InfiniteOrTooLarge(
                                f"root system exceeds {cap} vectors; "
                                f"group is infinite or above the size cap")
            frontier = nxt
        return roots

    def _generator_permutations(self) -> List[Tuple[int, ...]]:
        index = {r: i for i, r in enumerate(self.roots)}
        perms = []
        for g in range(self.rank):
            perms.append(tuple(index[self._reflect(g, r)] for r in self.roots))
        return perms

    def _enumerate_elements(self, cap: int) -> None:
        nroots = len(self.roots)
        identity = tuple(range(nroots))
        perm_index: Dict[Tuple[int, ...], int] = {identity: 0}
        perms = [identity]
        words: List[Tuple[int, ...]] = [()]
        lengths = [0]
        rmul: List[List[int]] = []
        queue = [0]
        while queue:
            nxt = []
            for w in queue:
                pw = perms[w]
                row = []
                for g in range(self.rank):
                    pg = self._gen_perms[g]
                    image = tuple(pw[pg[r]] for r in range(nroots))
                    idx = perm_index.get(image)
                    if idx is None:
                        idx = len(perms)
                        if idx >= cap:
                            raise InfiniteOrTooLarge(
                                f"group exceeds {cap} elements")
                        perm_index[image] = idx
                        perms.append(image)
                        words.append(words[w] + (g,))
                        lengths.append(lengths[w] + 1)
                        nxt.append(idx)
                    row.append(idx)
                rmul.append(row)
            queue = nxt
        self.size = len(perms)
        self._words = words
        self._lengths = lengths
        self._rmul = rmul
        # Left multiplication by generators, via permutation composition.
        self._lmul = []
        for g in range(self.rank):
            pg = self._gen_perms[g]
            col = [perm_index[tuple(pg[p[r]] for r in range(nroots))] for p in perms]
            self._lmul.append(col)
        self._inv = [self.element_by_word(reversed(wd)) for wd in words]

    # -- queries -------------------------------------------------------

    def __len__(self) -> int:
        return self.size

    @property
    def identity(self) -> int:
        return 0

    def generator(self, g: int) -> int:
        return self._rmul[0][g]

    def generators(self) -> List[int]:
        return [self.generator(g) for g in range(self.rank)]

    def word(self, w: int) -> Tuple[int, ...]:
        return self._words[w]

    def length(self, w: int) -> int:
        return self._lengths[w]

    def name(self, w: int) -> str:
        if w == 0:
            return "e"
        return " ".join(self.gen_names[g] for g in self._words[w])

    def element_by_name(self, text: str) -> int:
        text = text.strip()
        if text == "e":
            return 0
        gen_of = {nm: i for i, nm in enumerate(self.gen_names)}
        return self.element_by_word(gen_of[t] for t in text.split())

    def element_by_word(self, word) -> int:
        w = 0
        for g in word:
            w = self._rmul[w][g]
        return w

    def rmul_gen(self, w: int, g: int) -> int:
        return self._rmul[w][g]

    def lmul_gen(self, g: int, w: int) -> int:
        return self._lmul[g][w]

    def mul(self, a: int, b: int) -> int:
        for g in self._words[b]:
            a = self._rmul[a][g]
        return a

    def inv(self, w: int) -> int:
        return self._inv[w]

    def left_descents(self, w: int) -> List[int]:
        lw = self._lengths[w]
        return [g for g in range(self.rank) if self._lengths[self._lmul[g][w]] < lw]

    def right_descents(self, w: int) -> List[int]:
        lw = self._lengths[w]
        return [g for g in range(self.rank) if self._lengths[self._rmul[w][g]] < lw]

    def descents(self, w: int, side: str = "left") -> List[int]:
        if side == "left":
            return self.left_descents(w)
        if side == "right":
            return self.right_descents(w)
        raise ValueError("side must be 'left' or 'right'")

    def longest_element(self) -> int:
        return max(range(self.size), key=self._lengths.__getitem__)

    def reflections(self) -> List[int]:
        classes = self.conjugacy_classes()
        out = set()
        for g in range(self.rank):
            out.update(classes.class_members(classes.class_of[self.generator(g)]))
        return sorted(out)

    def element_order(self, w: int) -> int:
        k, x = 1, w
        while x != 0:
            x = self.mul(x, w)
            k += 1
        return k

    def conjugacy_classes(self) -> "ConjugacyClasses":
        if self._classes is None:
            self._classes = ConjugacyClasses(self)
        return self._classes


class ConjugacyClasses:
    """Orbit partition of W under conjugation, in canonical order."""

    def __init__(self, group: CoxeterGroup):
        self.group = group
        n = len(group)
        class_of = [-1] * n
        blocks: List[List[int]] = []
        for start in range(n):
            if class_of[start] >= 0:
                continue
            cid = len(blocks)
            orbit = [start]
            class_of[start] = cid
            frontier = [start]
            while frontier:
                nxt = []
                for x in frontier:
                    for g in range(group.rank):
                        y = group.rmul_gen(group.lmul_gen(g, x), g)
                        if class_of[y] < 0:
                            class_of[y] = cid
                            orbit.append(y)
                            nxt.append(y)
                frontier = nxt
            blocks.append(sorted(orbit))
        self.blocks = blocks
        self.class_of = class_of
        self.representatives = [b[0] for b in blocks]
        self.sizes = [len(b) for b in blocks]

    def __len__(self) -> int:
        return len(self.blocks)

    def class_members(self, cid: int) -> List[int]:
        return self.blocks[cid]


@dataclass(frozen=True)
class WeightFunction:
    """Nonnegative weights L(s) per generator, in a common exponent group."""

    exps: Tuple[OrderedExponent, ...]

    def __post_init__(self) -> None:
        if not self.exps:
            raise ValueError("weight function needs at least one generator")
        mode, arity = self.exps[0].mode, self.exps[0].arity
        for e in self.exps:
            if e.mode != mode or e.arity != arity:
                raise ValueError("all weights must share one exponent group")

    @property
    def mode(self) -> str:
        return self.exps[0].mode

    @property
    def arity(self) -> Optional[int]:
        return self.exps[0].arity

    def __getitem__(self, g: int) -> OrderedExponent:
        return self.exps[g]

    @staticmethod
    def rational(values: Sequence) -> "WeightFunction":
        return WeightFunction(tuple(OrderedExponent.rational(v) for v in values))

    @staticmethod
    def lex_generic(rank: int) -> "WeightFunction":
        """One independent lex coordinate per generator: fully generic weights."""
        return WeightFunction(tuple(
            OrderedExponent.lex(tuple(1 if j == i else 0 for j in range(rank)))
            for i in range(rank)))

    @staticmethod
    def from_lex_units(assignments: Sequence[Optional[int]], arity: int) -> "WeightFunction":
        """Weights e_i (1-based basis vectors) or 0 per generator, in Z^arity."""
        exps = []
        for a in assignments:
            vec = [0] * arity
            if a is not None:
                vec[a - 1] = 1
            exps.append(OrderedExponent.lex(vec))
        return WeightFunction(tuple(exps))


def conjugate_generator_components(matrix: CoxeterMatrix) -> List[int]:
    """Component id per generator under the odd-bond conjugacy criterion.

    Generators s, t are conjugate in a finite Coxeter group exactly when
    they are joined by a path of odd m_st.
    """
    n = matrix.rank
    comp = list(range(n))

    def find(x: int) -> int:
        while comp[x] != x:
            comp[x] = comp[comp[x]]
            x = comp[x]
        return x

    for i in range(n):
        for j in range(i + 1, n):
            if matrix.entries[i][j] % 2 == 1:
                comp[find(i)] = find(j)
    roots = [find(i) for i in range(n)]
    rename: Dict[int, int] = {}
    return [rename.setdefault(r, len(rename)) for r in roots]


def validate_weights(matrix: CoxeterMatrix, weights: WeightFunction,
                     gen_names: Optional[Sequence[str]] = None) -> None:
    """Check nonnegativity and constancy on conjugate generators."""
    names = tuple(gen_names) if gen_names else default_gen_names(matrix.rank)
    if len(weights.exps) != matrix.rank:
        raise ValueError("weight count must equal the rank")
    for g, e in enumerate(weights.exps):
        if e.sign() < 0:
            raise ValueError(f"weight of generator {names[g]!r} is negative")
    comp = conjugate_generator_components(matrix)
    seen: Dict[int, int] = {}
    for g, c in enumerate(comp):
        if c in seen:
            if weights[seen[c]] != weights[g]:
                raise ConjugacyViolation(names[seen[c]], names[g])
        else:
            seen[c] = g


def build_group(matrix: CoxeterMatrix,
                gen_names: Optional[Sequence[str]] = None,
                size_cap: int = DEFAULT_SIZE_CAP) -> CoxeterGroup:
    return CoxeterGroup(matrix, gen_names=gen_names, size_cap=size_cap)
