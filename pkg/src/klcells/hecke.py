"""The Hecke algebra of a finite Coxeter group with unequal parameters.

Elements are finitely supported maps W -> Z[G] in the T-basis.  The
Kazhdan-Lusztig basis {C_w} is the unique basis with i(C_w) = C_w and
C_w - T_w supported on strictly negative exponents; it is computed by
length induction: take the bar-invariant candidate C_s * C_{sw} for a
left descent s, then cancel the non-negative exponent parts of lower
coefficients by subtracting bar-symmetric multiples of shorter C_y,
longest support element first.
"""

from __future__ import annotations

import hashlib
import json
from typing import Dict, List, Optional, Tuple

from .coxeter import CoxeterGroup, WeightFunction, validate_weights
from .ordered_coeffs import LaurentElt

HeckeCoeffs = Dict[int, LaurentElt]


class HeckeAlgebra:
    """Context object: group, validated weights, and per-generator constants."""

    def __init__(self, group: CoxeterGroup, weights: WeightFunction):
        validate_weights(group.matrix, weights, group.gen_names)
        self.group = group
        self.weights = weights
        self.mode = weights.mode
        self.arity = weights.arity
        # v^{L(s)} - v^{-L(s)}; zero when L(s) = 0.
        self._xi: List[LaurentElt] = []
        self._v_plus: List[LaurentElt] = []
        self._v_minus: List[LaurentElt] = []
        for g in range(group.rank):
            L = weights[g]
            self._v_plus.append(LaurentElt.v_power(L))
            self._v_minus.append(LaurentElt.v_power(-L))
            self._xi.append(self._v_plus[g] - self._v_minus[g])
        self._i_of_t: Optional[List[HeckeCoeffs]] = None

    # -- element helpers ----------------------------------------------

    def zero_coeff(self) -> LaurentElt:
        return LaurentElt.zero(self.mode, self.arity)

    def one_coeff(self) -> LaurentElt:
        return LaurentElt.one(self.mode, self.arity)

    def t(self, w: int) -> HeckeCoeffs:
        return {w: self.one_coeff()}

    def unit(self) -> HeckeCoeffs:
        return self.t(self.group.identity)

    @staticmethod
    def clean(h: HeckeCoeffs) -> HeckeCoeffs:
        return {w: c for w, c in h.items() if c}

    def add(self, a: HeckeCoeffs, b: HeckeCoeffs) -> HeckeCoeffs:
        out = dict(a)
        for w, c in b.items():
            cur = out.get(w)
            out[w] = c if cur is None else cur + c
        return self.clean(out)

    def scale(self, c: LaurentElt, h: HeckeCoeffs) -> HeckeCoeffs:
        return self.clean({w: c * x for w, x in h.items()})

    def sub(self, a: HeckeCoeffs, b: HeckeCoeffs) -> HeckeCoeffs:
        out = dict(a)
        for w, c in b.items():
            cur = out.get(w)
            out[w] = (-c) if cur is None else cur - c
        return self.clean(out)

    def equal(self, a: HeckeCoeffs, b: HeckeCoeffs) -> bool:
        return self.clean(a) == self.clean(b)

    # -- multiplication -----------------------------------------------

    def mul_ts(self, s: int, h: HeckeCoeffs, side: str = "left") -> HeckeCoeffs:
        """T_s * h (side='left') or h * T_s (side='right')."""
        group = self.group
        out: HeckeCoeffs = {}
        xi = self._xi[s]
        for w, c in h.items():
            if side == "left":
                sw = group.lmul_gen(s, w)
            else:
                sw = group.rmul_gen(w, s)
            cur = out.get(sw)
            out[sw] = c if cur is None else cur + c
            if xi and group.length(sw) < group.length(w):
                extra = xi * c
                cur = out.get(w)
                out[w] = extra if cur is None else cur + extra
        return self.clean(out)

    def t_inv_times(self, s: int, h: HeckeCoeffs) -> HeckeCoeffs:
        """T_s^{-1} * h, using T_s^{-1} = T_s - (v^{L(s)} - v^{-L(s)})."""
        out = self.mul_ts(s, h)
        if self._xi[s]:
            out = self.sub(out, self.scale(self._xi[s], h))
        return out

    def multiply(self, a: HeckeCoeffs, b: HeckeCoeffs) -> HeckeCoeffs:
        """Bilinear product; T_w * b is computed along the reduced word of w."""
        out: HeckeCoeffs = {}
        for w, c in a.items():
            part = b
            for g in reversed(self.group.word(w)):
                part = self.mul_ts(g, part)
            out = self.add(out, self.scale(c, part))
        return out

    # -- bar involution -------------------------------------------------

    def _i_of_t_table(self) -> List[HeckeCoeffs]:
        """i(T_w) for every w, built by length induction."""
        if self._i_of_t is None:
            group = self.group
            table: List[HeckeCoeffs] = [self.unit()]
            for w in range(1, len(group)):
                word = group.word(w)
                s = word[0]
                u = group.element_by_word(word[1:])
                table.append(self.t_inv_times(s, table[u]))
            self._i_of_t = table
        return self._i_of_t

    def bar(self, h: HeckeCoeffs) -> HeckeCoeffs:
        """The ring involution with i(v^g) = v^{-g} and i(T_s) = T_s^{-1}."""
        table = self._i_of_t_table()
        out: HeckeCoeffs = {}
        for w, c in h.items():
            out = self.add(out, self.scale(c.bar(), table[w]))
        return out

    # -- KL generators ---------------------------------------------------

    def c_gen(self, s: int) -> HeckeCoeffs:
        """C_s = T_s + v^{-L(s)} T_e for L(s) > 0, or T_s when L(s) = 0."""
        if self.weights[s].sign() > 0:
            return {self.group.generator(s): self.one_coeff(),
                    self.group.identity: self._v_minus[s]}
        return {self.group.generator(s): self.one_coeff()}


class KLTable:
    """The KL basis: T-expansions of every C_w plus C-expansions of C_s C_w."""

    def __init__(self, algebra: HeckeAlgebra, c_exp: List[HeckeCoeffs],
                 cs_in_c: Dict[Tuple[int, int], HeckeCoeffs]):
        self.algebra = algebra
        self.group = algebra.group
        self._c_exp = c_exp
        self._cs_in_c = cs_in_c

    def c_expansion(self, w: int) -> HeckeCoeffs:
        """C_w in the T-basis."""
        return self._c_exp[w]

    def cs_product_in_c(self, s: int, w: int) -> HeckeCoeffs:
        """C_s C_w in the C-basis (cached)."""
        return self._cs_in_c[(s, w)]

    # -- serialization ---------------------------------------------------

    def header(self) -> dict:
        weights = {self.group.gen_names[g]: self.algebra.weights[g].render()
                   for g in range(self.group.rank)}
        return {
            "matrix": [list(row) for row in self.group.matrix.entries],
            "generators": list(self.group.gen_names),
            "weights": weights,
            "mode": self.algebra.mode,
            "arity": self.algebra.arity,
        }

    def content_key(self) -> str:
        blob = json.dumps(self.header(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()

    def _coeffs_to_json(self, h: HeckeCoeffs) -> dict:
        return {self.group.name(w): c.render()
                for w, c in sorted(h.items(), key=lambda kv: kv[0])}

    def to_json_dict(self) -> dict:
        doc = self.header()
        doc["key"] = self.content_key()
        doc["c_basis"] = {self.group.name(w): self._coeffs_to_json(self._c_exp[w])
                          for w in range(len(self.group))}
        doc["cs_products"] = {
            f"{self.group.gen_names[s]}|{self.group.name(w)}":
                self._coeffs_to_json(h)
            for (s, w), h in sorted(self._cs_in_c.items())
        }
        return doc

    @staticmethod
    def from_json_dict(doc: dict, algebra: HeckeAlgebra) -> "KLTable":
        group = algebra.group
        mode, arity = algebra.mode, algebra.arity

        def coeffs(obj: dict) -> HeckeCoeffs:
            return {group.element_by_name(nm): LaurentElt.parse(txt, mode, arity)
                    for nm, txt in obj.items()}

        c_exp = [coeffs(doc["c_basis"][group.name(w)]) for w in range(len(group))]
        cs: Dict[Tuple[int, int], HeckeCoeffs] = {}
        for key, obj in doc["cs_products"].items():
            sname, wname = key.split("|", 1)
            s = group.gen_names.index(sname)
            cs[(s, group.element_by_name(wname))] = coeffs(obj)
        return KLTable(algebra, c_exp, cs)


def _symmetrize_correction(r: LaurentElt) -> LaurentElt:
    """zero part + positive part + bar(positive part): the bar-invariant
    multiple whose subtraction leaves only negative exponents."""
    _, const, pos = r.split_by_sign()
    out = LaurentElt.integer(const, r.mode, r.arity) + pos + pos.bar()
    return out


def kl_basis(algebra: HeckeAlgebra) -> KLTable:
    """Compute the full KL basis and the C-basis expansions of C_s C_w."""
    group = algebra.group
    n = len(group)
    c_exp: List[HeckeCoeffs] = [algebra.unit()]
    cs_in_c: Dict[Tuple[int, int], HeckeCoeffs] = {}

    lengths = [group.length(w) for w in range(n)]
    for w in range(1, n):
        word = group.word(w)
        s = word[0]
        u = group.element_by_word(word[1:])
        # Bar-invariant candidate C_s C_u, expanded in the T-basis.
        cand = algebra.mul_ts(s, c_exp[u])
        if algebra.weights[s].sign() > 0:
            cand = algebra.add(cand, algebra.scale(
                LaurentElt.v_power(-algebra.weights[s]), c_exp[u]))
        # Cancel non-negative parts, longest support element first;
        # subtractions only ever introduce strictly shorter elements.
        correction: HeckeCoeffs = {}
        processed = {w}
        while True:
            pending = [y for y in cand if y not in processed]
            if not pending:
                break
            y = max(pending, key=lambda x: (lengths[x], x))
            processed.add(y)
            m = _symmetrize_correction(cand[y])
            if m:
                correction[y] = m
                cand = algebra.sub(cand, algebra.scale(m, c_exp[y]))
        c_exp.append(cand)
        # The construction already exhibits C_s C_u in the C-basis.
        prod = dict(correction)
        prod[w] = algebra.one_coeff()
        cs_in_c[(s, u)] = algebra.clean(prod)

    table = KLTable(algebra, c_exp, cs_in_c)
    for s in range(group.rank):
        for w in range(n):
            if (s, w) not in cs_in_c:
                prod = algebra.multiply(algebra.c_gen(s), c_exp[w])
                cs_in_c[(s, w)] = express_in_kl(prod, table)
    return table


def express_in_kl(h: HeckeCoeffs, table: KLTable) -> HeckeCoeffs:
    """Unique expansion of h in the C-basis, by back-substitution from the
    longest support element down."""
    algebra = table.algebra
    group = table.group
    rest = algebra.clean(dict(h))
    out: HeckeCoeffs = {}
    while rest:
        y = max(rest, key=lambda x: (group.length(x), x))
        c = rest.pop(y)
        out[y] = c
        expansion = table.c_expansion(y)
        for z, cz in expansion.items():
            if z == y:
                continue
            cur = rest.get(z, algebra.zero_coeff())
            val = cur - c * cz
            if val:
                rest[z] = val
            else:
                rest.pop(z, None)
    return out
