"""The extended affine Hecke algebra in the Bernstein basis ``theta_x T_w``.

Multiplication pushes ``theta_y`` leftwards through ``T_w`` one simple
reflection at a time using the Bernstein-Lusztig rule

    T_s theta_x = theta_{s x} T_s + (v - v^-1) E(x, s)

where, with n = <x, alpha^vee>,

    E = theta_x (1 + theta_{-alpha} + ... + theta_{-(n-1) alpha})   if n > 0
    E = -(theta_{x+alpha} + ... + theta_{x-n alpha})                 if n < 0
    E = 0                                                            if n = 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable, Mapping

from .laurent import ONE, V, V_INV, ZERO, LaurentPoly
from .rootdata import RootDatum, Weight, WeylElt, all_elements, braid_order, reflect

Key = tuple[Weight, WeylElt]
Coeff = LaurentPoly | int

Q_MINUS = V - V_INV  # v - v^-1


def _add_into(acc: dict, key, c: LaurentPoly) -> None:
    s = acc.get(key)
    s = c if s is None else s + c
    if s:
        acc[key] = s
    else:
        acc.pop(key, None)


class HeckeElt:
    """A finite sum of ``c(v) theta_x T_w`` over a fixed root datum."""

    __slots__ = ("datum", "_terms", "_hash")

    def __init__(self, datum: RootDatum, terms: Mapping[Key, Coeff] | None = None):
        self.datum = datum
        clean: dict[Key, LaurentPoly] = {}
        for (x, w), c in (terms or {}).items():
            if isinstance(c, int):
                c = LaurentPoly.const(c)
            if c:
                _add_into(clean, (tuple(x), datum.element(w) if not isinstance(w, WeylElt) else w), c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, datum: RootDatum, terms: dict[Key, LaurentPoly]) -> "HeckeElt":
        obj = cls.__new__(cls)
        obj.datum = datum
        obj._terms = terms
        obj._hash = None
        return obj

    @property
    def terms(self) -> dict[Key, LaurentPoly]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, x: Weight, w: WeylElt) -> LaurentPoly:
        return self._terms.get((tuple(x), w), ZERO)

    # arithmetic -----------------------------------------------------------

    def _coerce(self, other) -> "HeckeElt":
        if isinstance(other, HeckeElt):
            if other.datum != self.datum:
                raise ValueError("Hecke elements over different root data")
            return other
        if isinstance(other, (int, LaurentPoly)):
            return scalar(self.datum, other)
        return NotImplemented

    def __add__(self, other) -> "HeckeElt":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            _add_into(out, k, c)
        return HeckeElt._raw(self.datum, out)

    __radd__ = __add__

    def __neg__(self) -> "HeckeElt":
        return HeckeElt._raw(self.datum, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> "HeckeElt":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "HeckeElt":
        return self._coerce(other) - self

    def __mul__(self, other) -> "HeckeElt":
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return hecke_mul(self, other)

    def __rmul__(self, other) -> "HeckeElt":
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c: Coeff) -> "HeckeElt":
        if isinstance(c, int):
            c = LaurentPoly.const(c)
        if not c:
            return HeckeElt._raw(self.datum, {})
        return HeckeElt._raw(self.datum, {k: c * a for k, a in self._terms.items()})

    def __pow__(self, n: int) -> "HeckeElt":
        if n < 0:
            return inverse(self) ** (-n)
        out = one(self.datum)
        for _ in range(n):
            out = out * self
        return out

    def map_coefficients(self, f: Callable[[LaurentPoly], LaurentPoly]) -> "HeckeElt":
        out: dict[Key, LaurentPoly] = {}
        for k, c in self._terms.items():
            c2 = f(c)
            if c2:
                out[k] = c2
        return HeckeElt._raw(self.datum, out)

    # comparison -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, LaurentPoly)):
            other = scalar(self.datum, other)
        if not isinstance(other, HeckeElt):
            return NotImplemented
        return self.datum == other.datum and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"HeckeElt({render(self)})"

    def __str__(self) -> str:
        return render(self)


# constructors ---------------------------------------------------------------


def scalar(d: RootDatum, c: Coeff) -> HeckeElt:
    if isinstance(c, int):
        c = LaurentPoly.const(c)
    return HeckeElt._raw(d, {(d.zero(), d.identity()): c} if c else {})


def zero(d: RootDatum) -> HeckeElt:
    return HeckeElt._raw(d, {})


def one(d: RootDatum) -> HeckeElt:
    return scalar(d, 1)


def monomial(d: RootDatum, x: Weight, w: WeylElt | Iterable[int] = (), c: Coeff = 1) -> HeckeElt:
    x = tuple(x)
    if len(x) != d.rank:
        raise ValueError(f"weight {x} has length {len(x)}, expected {d.rank}")
    w = w if isinstance(w, WeylElt) else d.element(w)
    return HeckeElt(d, {(x, w): c})


def theta(d: RootDatum, x: Weight) -> HeckeElt:
    return monomial(d, x)


def t_alpha(d: RootDatum, i: int) -> HeckeElt:
    """The generator T_{s_i}."""
    return monomial(d, d.zero(), d.simple(i))


def t_small(d: RootDatum, i: int) -> HeckeElt:
    """t_alpha = v T_alpha."""
    return t_alpha(d, i).scale(V)


def t_word(d: RootDatum, word: Iterable[int]) -> HeckeElt:
    """The product T_{i1} ... T_{ik} (need not be reduced)."""
    out = one(d)
    for i in word:
        out = out * t_alpha(d, i)
    return out


# multiplication -------------------------------------------------------------


def _caches(d: RootDatum) -> tuple[dict, dict, dict]:
    c = d._cache
    if "hk_fin" not in c:
        c["hk_fin"] = {}
        c["hk_comm"] = {}
        c["hk_tw"] = {}
    return c["hk_fin"], c["hk_comm"], c["hk_tw"]


def _finite_mul(d: RootDatum, w: WeylElt, u: WeylElt) -> dict[WeylElt, LaurentPoly]:
    """T_w T_u in the finite Hecke algebra, as {element: coeff}."""
    fin, _, _ = _caches(d)
    key = (w, u)
    out = fin.get(key)
    if out is not None:
        return out
    cur: dict[WeylElt, LaurentPoly] = {w: ONE}
    for i in u:
        nxt: dict[WeylElt, LaurentPoly] = {}
        for y, c in cur.items():
            ys = d.right_mul_simple(y, i)
            _add_into(nxt, ys, c)
            if len(ys) < len(y):
                _add_into(nxt, y, c * Q_MINUS)
        cur = nxt
    fin[key] = cur
    return cur


def _commute_simple(d: RootDatum, i: int, x: Weight) -> dict[Weight, tuple[LaurentPoly, bool]]:
    """T_i theta_x as {(weight, has_T): coeff}."""
    _, comm, _ = _caches(d)
    key = (i, x)
    out = comm.get(key)
    if out is not None:
        return out
    out = {}
    _add_into(out, (reflect(d, i, x), True), ONE)
    n = x[i - 1]
    alpha = d.simple_root(i)
    if n > 0:
        for k in range(n):
            _add_into(out, (tuple(a - k * b for a, b in zip(x, alpha)), False), Q_MINUS)
    elif n < 0:
        for k in range(1, -n + 1):
            _add_into(out, (tuple(a + k * b for a, b in zip(x, alpha)), False), -Q_MINUS)
    comm[key] = out
    return out


def _tw_theta(d: RootDatum, w: WeylElt, y: Weight) -> dict[Key, LaurentPoly]:
    """T_w theta_y in normal form."""
    _, _, tw = _caches(d)
    key = (w, y)
    out = tw.get(key)
    if out is not None:
        return out
    if not w:
        out = {(y, w): ONE}
    else:
        i = w[0]
        rest = WeylElt(w[1:])  # suffixes of reduced words are reduced, and canonical
        rest = d.element(rest)
        inner = _tw_theta(d, rest, y)
        out = {}
        si = d.simple(i)
        for (z, u), c in inner.items():
            for (z2, has_t), c2 in _commute_simple(d, i, z).items():
                if has_t:
                    for u2, c3 in _finite_mul(d, si, u).items():
                        _add_into(out, (z2, u2), c * c2 * c3)
                else:
                    _add_into(out, (z2, u), c * c2)
    tw[key] = out
    return out


def hecke_mul(a: HeckeElt, b: HeckeElt) -> HeckeElt:
    d = a.datum
    if b.datum != d:
        raise ValueError("Hecke elements over different root data")
    out: dict[Key, LaurentPoly] = {}
    for (x, w), c in a._terms.items():
        for (y, u), c1 in b._terms.items():
            cc = c * c1
            for (z, w2), c2 in _tw_theta(d, w, y).items():
                xz = tuple(p + q for p, q in zip(x, z))
                for w3, c3 in _finite_mul(d, w2, u).items():
                    _add_into(out, (xz, w3), cc * c2 * c3)
    return HeckeElt._raw(d, out)


def t_inverse(d: RootDatum, i: int) -> HeckeElt:
    """T_i^-1 = T_i - (v - v^-1)."""
    return t_alpha(d, i) - scalar(d, Q_MINUS)


def inverse(a: HeckeElt) -> HeckeElt:
    """Inverse of a monomial ``c theta_x T_w`` with ``c`` a unit of Z[v, v^-1]."""
    d = a.datum
    if len(a._terms) != 1:
        raise ZeroDivisionError(f"{a} is not invertible (only unit monomials are)")
    ((x, w), c), = a._terms.items()
    if not c.is_unit():
        raise ZeroDivisionError(f"{a} is not invertible: coefficient {c} is not a unit")
    out = scalar(d, c.inverse())
    for i in w:
        out = t_inverse(d, i) * out
    return out * theta(d, tuple(-t for t in x))


# morphisms ------------------------------------------------------------------

TWISTS = ("identity", "neg_v")


@dataclass
class AlgebraMorphismSpec:
    """Images of the generators T_i and theta_{+-omega_i}, plus a coefficient twist.

    The map extends to all of the algebra as a (semi)linear map that is
    multiplicative along the canonical factorization of each basis monomial.
    """

    datum: RootDatum
    image_of_T: dict[int, HeckeElt]
    image_of_theta: dict[Weight, HeckeElt]
    coefficient_twist: str = "identity"
    name: str = "custom"
    _memo: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if self.coefficient_twist not in TWISTS:
            raise ValueError(f"coefficient twist must be one of {TWISTS}")

    def twist(self, c: LaurentPoly) -> LaurentPoly:
        return c.substitute_neg_v() if self.coefficient_twist == "neg_v" else c

    def image_T(self, i: int) -> HeckeElt:
        try:
            return self.image_of_T[i]
        except KeyError:
            raise KeyError(f"morphism {self.name!r} has no image for T[{i}]") from None

    def image_theta_generator(self, i: int, sign: int) -> HeckeElt:
        gen = tuple(sign if k == i - 1 else 0 for k in range(self.datum.rank))
        try:
            return self.image_of_theta[gen]
        except KeyError:
            raise KeyError(f"morphism {self.name!r} has no image for theta{list(gen)}") from None

    def image_theta(self, x: Weight) -> HeckeElt:
        key = ("theta", tuple(x))
        out = self._memo.get(key)
        if out is None:
            out = one(self.datum)
            for i, n in enumerate(x, start=1):
                g = self.image_theta_generator(i, 1 if n > 0 else -1)
                for _ in range(abs(n)):
                    out = out * g
            self._memo[key] = out
        return out

    def image_T_word(self, word: Iterable[int]) -> HeckeElt:
        word = tuple(word)
        key = ("T", word)
        out = self._memo.get(key)
        if out is None:
            out = one(self.datum)
            for i in word:
                out = out * self.image_T(i)
            self._memo[key] = out
        return out

    def image_monomial(self, x: Weight, w: WeylElt) -> HeckeElt:
        key = ("mono", x, w)
        out = self._memo.get(key)
        if out is None:
            out = self.image_theta(x) * self.image_T_word(w)
            self._memo[key] = out
        return out


def apply_morphism(spec: AlgebraMorphismSpec, a: HeckeElt) -> HeckeElt:
    out: dict[Key, LaurentPoly] = {}
    for (x, w), c in a._terms.items():
        c = spec.twist(c)
        for k, c2 in spec.image_monomial(x, w)._terms.items():
            _add_into(out, k, c * c2)
    return HeckeElt._raw(a.datum, out)


def _theta_gens(d: RootDatum) -> list[Weight]:
    gens = []
    for i in range(1, d.rank + 1):
        for s in (1, -1):
            gens.append(tuple(s if k == i - 1 else 0 for k in range(d.rank)))
    return gens


def identity_spec(d: RootDatum) -> AlgebraMorphismSpec:
    return AlgebraMorphismSpec(
        d,
        {i: t_alpha(d, i) for i in range(1, d.rank + 1)},
        {g: theta(d, g) for g in _theta_gens(d)},
        "identity",
        "identity",
    )


def im_spec(d: RootDatum) -> AlgebraMorphismSpec:
    """T_i -> -T_i^-1, theta_x -> theta_{-x}."""
    return AlgebraMorphismSpec(
        d,
        {i: -t_inverse(d, i) for i in range(1, d.rank + 1)},
        {g: theta(d, tuple(-t for t in g)) for g in _theta_gens(d)},
        "identity",
        "IM",
    )


def iota_spec(d: RootDatum) -> AlgebraMorphismSpec:
    """Fixes t_i = v T_i and theta_x, sends v to -v; hence T_i -> -T_i."""
    return AlgebraMorphismSpec(
        d,
        {i: -t_alpha(d, i) for i in range(1, d.rank + 1)},
        {g: theta(d, g) for g in _theta_gens(d)},
        "neg_v",
        "iota",
    )


def k_im_spec(d: RootDatum) -> AlgebraMorphismSpec:
    """T_i -> T_i - v + v^-1, theta_x -> theta_{-x}, v -> -v."""
    return AlgebraMorphismSpec(
        d,
        {i: t_alpha(d, i) - scalar(d, Q_MINUS) for i in range(1, d.rank + 1)},
        {g: theta(d, tuple(-t for t in g)) for g in _theta_gens(d)},
        "neg_v",
        "KIM",
    )


def _spec_cached(d: RootDatum, name: str, factory) -> AlgebraMorphismSpec:
    key = ("hk_spec", name)
    spec = d._cache.get(key)
    if spec is None:
        spec = factory(d)
        d._cache[key] = spec
    return spec


def im(a: HeckeElt) -> HeckeElt:
    return apply_morphism(_spec_cached(a.datum, "IM", im_spec), a)


def iota(a: HeckeElt) -> HeckeElt:
    """Closed form: theta_x T_w -> (-1)^l(w) theta_x T_w, coefficients v -> -v."""
    out = {}
    for (x, w), c in a._terms.items():
        c = c.substitute_neg_v()
        out[(x, w)] = -c if len(w) % 2 else c
    return HeckeElt._raw(a.datum, out)


def k_im(a: HeckeElt) -> HeckeElt:
    return iota(im(a))


# relation verification ------------------------------------------------------


@dataclass(frozen=True)
class RelationCheck:
    relation: str
    instance: str
    passed: bool
    witness: str | None = None


@dataclass
class RelationReport:
    spec_name: str
    type_label: str
    weight_bound: int
    checks: list[RelationCheck]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[RelationCheck]:
        return [c for c in self.checks if not c.passed]

    def counts(self) -> dict[str, tuple[int, int]]:
        """relation -> (passed, total)."""
        out: dict[str, list[int]] = {}
        for c in self.checks:
            p = out.setdefault(c.relation, [0, 0])
            p[0] += c.passed
            p[1] += 1
        return {k: (v[0], v[1]) for k, v in sorted(out.items())}


def _weights(d: RootDatum, bound: int) -> list[Weight]:
    return [tuple(p) for p in product(range(-bound, bound + 1), repeat=d.rank)]


def verify_relations(spec: AlgebraMorphismSpec, d: RootDatum, weight_bound: int = 3) -> RelationReport:
    """Check that the generator images satisfy every defining relation.

    Coefficients of the relations are twisted along with the map, so a
    semilinear morphism (v -> -v) is checked correctly.
    """
    checks: list[RelationCheck] = []
    tw = spec.twist
    T = spec.image_T
    th = spec.image_theta
    unit = one(d)

    def record(rel: str, inst: str, lhs: HeckeElt, rhs: HeckeElt) -> None:
        if lhs == rhs:
            checks.append(RelationCheck(rel, inst, True))
        else:
            checks.append(RelationCheck(rel, inst, False, f"lhs = {lhs}; rhs = {rhs}"))

    # (i) braid relations
    for i in range(1, d.rank + 1):
        for j in range(i + 1, d.rank + 1):
            m = braid_order(d, i, j)
            lhs, rhs = unit, unit
            for k in range(m):
                lhs = lhs * T((i, j)[k % 2])
                rhs = rhs * T((j, i)[k % 2])
            record("i", f"braid({i},{j})", lhs, rhs)
    # (ii) theta_0 = 1 and the generators are inverse pairs
    record("ii", "theta[0]", th(d.zero()), unit)
    for i in range(1, d.rank + 1):
        g = spec.image_theta_generator(i, 1) * spec.image_theta_generator(i, -1)
        record("ii", f"theta[+-w{i}]", g, unit)
    # (iii) theta_x theta_y = theta_{x+y}
    ws = _weights(d, weight_bound)
    for x in ws:
        for y in ws:
            s = tuple(a + b for a, b in zip(x, y))
            record("iii", f"x={list(x)},y={list(y)}", th(x) * th(y), th(s))
    # (iv) and (v)
    for i in range(1, d.rank + 1):
        Ti = T(i)
        for x in ws:
            if x[i - 1] == 0:
                record("iv", f"s{i},x={list(x)}", Ti * th(x), th(x) * Ti)
            elif x[i - 1] == 1:
                sx = reflect(d, i, x)
                record("v", f"s{i},x={list(x)}", th(x), Ti * th(sx) * Ti)
    # (vi) quadratic relation (T + v^-1)(T - v) = 0
    for i in range(1, d.rank + 1):
        Ti = T(i)
        lhs = (Ti + scalar(d, tw(V_INV))) * (Ti - scalar(d, tw(V)))
        record("vi", f"s{i}", lhs, zero(d))
    return RelationReport(spec.name, d.type_label, weight_bound, checks)


# rendering ------------------------------------------------------------------


def _sort_key(item):
    (x, w), _ = item
    return (len(w), tuple(w), tuple(-t for t in x))


def render(a: HeckeElt) -> str:
    """Text form ``coeff * theta[..] * T[..] + ...``; parsed back by the CLI."""
    if not a._terms:
        return "0"
    pieces: list[str] = []
    for (x, w), c in sorted(a._terms.items(), key=_sort_key):
        mono = f"theta[{','.join(map(str, x))}] * T[{','.join(map(str, w))}]"
        if c == ONE:
            pieces.append(mono)
        elif c == -ONE:
            pieces.append("-" + mono)
        elif len(c.terms) == 1:
            pieces.append(f"{c} * {mono}")
        else:
            pieces.append(f"({c}) * {mono}")
    out = pieces[0]
    for p in pieces[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


def basis_monomials(d: RootDatum, bound: int) -> list[HeckeElt]:
    return [monomial(d, x, w) for x in _weights(d, bound) for w in all_elements(d)]
