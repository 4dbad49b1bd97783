"""Parameter records and constructors for the Hopf algebra families.

Four families are supported:

* ``K``: generators x^{+-1}, y_1..y_s with commutations y_i x = q_i x y_i,
  y_j y_i = q_j^{n_i} y_i y_j and the power identities
  y_j^{p_j} = y_i^{p_i} + (alpha_j - alpha_i)(x^M - 1);
* ``B``: the coprime sub-family presented by a single base root q with
  q_i = q^{ell/p_i};
* ``A``: the skew Laurent plane x^{+-1}, y with y x = q x y and y skew
  primitive of weight x^n;
* ``C``: the differential-operator family on k[y^{+-1}] with grouplike y
  and x y = y x + y^n - y.

``validate`` reports the defining parameter conditions one by one,
``to_b_form`` recovers a base root for coprime K-parameters, and ``build``
derives the oriented rewrite system together with the coproduct, counit and
antipode tables on the generators.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .ncpoly import NCPoly, NFMonomial, RewriteSystem, Rule, normal_form
from .scalars import Cyclo, ScalarLike, is_primitive_pth_root, make_root

# validation flags, in reporting order; the starred ones are informational
CONDITION_NAMES = (
    "sizes",            # s >= 2 and M >= 2
    "degree_split",     # M = n_i * p_i with positive integers
    "q_nonzero",
    "q_primitive",      # q_i and q_i^{n_i} are primitive p_i-th roots
    "q_cross",          # q_j^{n_i} = q_i^{-n_j} for i < j
    "alpha_scalars",
    "p_coprime",        # * governs the domain property only
    "alpha_separated",  # * governs Ext vanishing only
    "p_nontrivial",     # p_i >= 2
)
INFORMATIONAL = frozenset({"p_coprime", "alpha_separated"})


def _promote_all(values: Sequence[ScalarLike]) -> tuple[Cyclo, ...]:
    return tuple(Cyclo.promote(v) for v in values)


@dataclass(frozen=True)
class KParams:
    s: int
    M: int
    n: tuple[int, ...]
    p: tuple[int, ...]
    q: tuple[Cyclo, ...]
    alpha: tuple[Cyclo, ...]

    @staticmethod
    def make(M: int, n: Sequence[int], p: Sequence[int],
             q: Sequence[ScalarLike], alpha: Sequence[ScalarLike]) -> "KParams":
        n, p = tuple(n), tuple(p)
        if not (len(n) == len(p) == len(q) == len(alpha)):
            raise ValueError("parameter sequences must share one length")
        return KParams(len(p), M, n, p, _promote_all(q), _promote_all(alpha))


@dataclass(frozen=True)
class BParams:
    n: int
    p: tuple[int, ...]
    q: Cyclo
    alpha: tuple[Cyclo, ...]

    @staticmethod
    def make(n: int, p: Sequence[int], q: ScalarLike, alpha: Sequence[ScalarLike]) -> "BParams":
        p = tuple(p)
        if len(alpha) != len(p):
            raise ValueError("one alpha per p")
        if n < 1:
            raise ValueError("n must be a positive integer")
        if any(a >= b for a, b in zip(p, p[1:])) or (p and p[0] < 2):
            raise ValueError("p must be strictly increasing with every entry > 1")
        if any(math.gcd(a, b) != 1 for a, b in combinations(p, 2)):
            raise ValueError("p must be pairwise coprime")
        q = Cyclo.promote(q)
        if not is_primitive_pth_root(q, math.prod(p)):
            raise ValueError("q must be a primitive root of unity of order p_1*...*p_s")
        return BParams(n, p, q, _promote_all(alpha))

    @property
    def ell(self) -> int:
        return math.prod(self.p)

    @property
    def M(self) -> int:
        return self.n * self.ell

    def expand(self) -> KParams:
        ell = self.ell
        q = tuple(self.q ** (ell // pi) for pi in self.p)
        return KParams(len(self.p), self.M, tuple(self.M // pi for pi in self.p),
                       self.p, q, self.alpha)


@dataclass(frozen=True)
class AParams:
    n: int
    q: Cyclo

    @staticmethod
    def make(n: int, q: ScalarLike) -> "AParams":
        q = Cyclo.promote(q)
        if q.is_zero():
            raise ValueError("q must be nonzero")
        return AParams(n, q)


@dataclass(frozen=True)
class CParams:
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("the differential-operator family needs n >= 2")


@dataclass(frozen=True)
class HopfPresentation:
    family: str  # "K", "B", "A", "C"
    kparams: Optional[KParams] = None
    bparams: Optional[BParams] = None
    aparams: Optional[AParams] = None
    cparams: Optional[CParams] = None

    @staticmethod
    def from_k(params: KParams) -> "HopfPresentation":
        return HopfPresentation("K", kparams=params)

    @staticmethod
    def from_b(params: BParams) -> "HopfPresentation":
        return HopfPresentation("B", kparams=params.expand(), bparams=params)

    @staticmethod
    def a_family(n: int, q: ScalarLike) -> "HopfPresentation":
        return HopfPresentation("A", aparams=AParams.make(n, q))

    @staticmethod
    def c_family(n: int) -> "HopfPresentation":
        return HopfPresentation("C", cparams=CParams(n))


@dataclass
class ValidationReport:
    flags: dict[str, bool]
    messages: list[str]

    @property
    def ok(self) -> bool:
        return all(v for k, v in self.flags.items() if k not in INFORMATIONAL)


def validate(params: KParams) -> ValidationReport:
    """Check every defining condition of the K family, one flag each."""
    flags = {name: True for name in CONDITION_NAMES}
    messages: list[str] = []

    def fail(name: str, msg: str) -> None:
        flags[name] = False
        messages.append(msg)

    if params.s < 2 or params.M < 2:
        fail("sizes", f"need s >= 2 and M >= 2, got s={params.s}, M={params.M}")
    if len(params.n) != params.s or len(params.p) != params.s \
            or len(params.q) != params.s or len(params.alpha) != params.s:
        fail("degree_split", "parameter sequences disagree with s")
        return ValidationReport(flags, messages)
    for i in range(params.s):
        if params.n[i] < 1 or params.p[i] < 1 or params.n[i] * params.p[i] != params.M:
            fail("degree_split", f"M != n_{i+1} * p_{i+1}")
        if params.q[i].is_zero():
            fail("q_nonzero", f"q_{i+1} = 0")
        if params.p[i] < 2:
            fail("p_nontrivial", f"p_{i+1} < 2")
    if flags["q_nonzero"]:
        for i in range(params.s):
            qi, ni, pi = params.q[i], params.n[i], params.p[i]
            if not (is_primitive_pth_root(qi, pi) and is_primitive_pth_root(qi ** ni, pi)):
                fail("q_primitive", f"q_{i+1} or q_{i+1}^n_{i+1} is not a primitive root of order p_{i+1}")
        for i, j in combinations(range(params.s), 2):
            if params.q[j] ** params.n[i] != params.q[i] ** (-params.n[j]):
                fail("q_cross", f"q_{j+1}^n_{i+1} != q_{i+1}^-n_{j+1}")
    if not any(params.alpha[i] != params.alpha[j] for i, j in combinations(range(params.s), 2)):
        flags["alpha_separated"] = False
    if any(math.gcd(params.p[i], params.p[j]) != 1 for i, j in combinations(range(params.s), 2)):
        flags["p_coprime"] = False
    return ValidationReport(flags, messages)


def validate_presentation(pres: HopfPresentation) -> ValidationReport:
    if pres.family in ("K", "B"):
        return validate(pres.kparams)
    # comparison families carry their constraints in the constructors
    return ValidationReport({"well_formed": True}, [])


@dataclass
class BFormResult:
    bparams: BParams
    base_exponents: list[int]   # every admissible exponent k with q = zeta_ell^k
    permutation: tuple[int, ...]  # sorted position -> original index


def to_b_form(params: KParams) -> Optional[BFormResult]:
    """Recover a base root q with q_i = q^{ell/p_i}, after sorting the p_i."""
    report = validate(params)
    hard = [k for k in ("sizes", "degree_split", "q_nonzero", "q_primitive", "q_cross")
            if not report.flags[k]]
    if hard:
        raise ValueError(f"parameters fail structural validation: {', '.join(hard)}")
    if not report.flags["p_coprime"]:
        return None
    order = tuple(sorted(range(params.s), key=lambda i: params.p[i]))
    p_sorted = tuple(params.p[i] for i in order)
    q_sorted = tuple(params.q[i] for i in order)
    a_sorted = tuple(params.alpha[i] for i in order)
    ell = math.prod(p_sorted)
    if params.M % ell:
        return None
    hits = []
    for k in range(ell):
        if math.gcd(k, ell) != 1:
            continue
        q = make_root(ell, k)
        if all(q ** (ell // p_sorted[i]) == q_sorted[i] for i in range(params.s)):
            hits.append(k)
    if not hits:
        return None
    q = make_root(ell, hits[0])
    return BFormResult(BParams(params.M // ell, p_sorted, q, a_sorted), hits, order)


# ---------------------------------------------------------------------------
# build: rewrite system + coalgebra tables
# ---------------------------------------------------------------------------

CoproductTable = tuple[tuple[tuple[Cyclo, NFMonomial, NFMonomial], ...], ...]


@dataclass
class BuiltPresentation:
    presentation: HopfPresentation
    rs: RewriteSystem
    coproducts: CoproductTable          # per letter
    counits: tuple[Cyclo, ...]          # per letter
    antipodes: tuple[NCPoly, ...]       # per letter
    skew_weights: tuple[int, ...]       # weight exponent of each free letter
    diagonal_conjugation: Optional[tuple[Cyclo, ...]]  # chi per free letter
    central_exponent: Optional[int]     # group-letter power that is central

    @property
    def family(self) -> str:
        return self.presentation.family

    @property
    def num_free(self) -> int:
        return self.rs.num_free

    def unit(self) -> NCPoly:
        return NCPoly.monomial(self.rs.unit_monomial())

    def group_monomial(self, k: int) -> NFMonomial:
        return NFMonomial(k, (0,) * self.num_free)

    def free_monomial(self, i: int, e: int = 1) -> NFMonomial:
        w = [0] * self.num_free
        w[i] = e
        return NFMonomial(0, tuple(w))

    def monomial(self, w0: int, w: Sequence[int]) -> NFMonomial:
        return NFMonomial(w0, tuple(w))

    def conjugation_character(self, m: NFMonomial) -> Cyclo:
        """Eigenvalue of g^{-1} m g on a basis monomial (diagonal families)."""
        if self.diagonal_conjugation is None:
            raise ValueError("conjugation by the grouplike is not diagonal here")
        out = Cyclo.one()
        for i, e in enumerate(m.w):
            if e:
                out = out * self.diagonal_conjugation[i] ** e
        return out

    def nf_monomials(self, degree_cap: int, x_window: int):
        """All basis monomials with weighted degree <= cap, |w0| <= window."""
        shapes = self.free_shapes(degree_cap)
        for w0 in range(-x_window, x_window + 1):
            for w in shapes:
                yield NFMonomial(w0, w)

    def free_shapes(self, degree_cap: int) -> list[tuple[int, ...]]:
        weights = self.rs.letter_weights[2:]
        bounds = self._shape_bounds()
        shapes: list[tuple[int, ...]] = []

        def rec(i: int, acc: list[int], left: int):
            if i == len(weights):
                shapes.append(tuple(acc))
                return
            e = 0
            while e * weights[i] <= left and (bounds[i] is None or e <= bounds[i]):
                rec(i + 1, acc + [e], left - e * weights[i])
                e += 1
        rec(0, [], degree_cap)
        return shapes

    def _shape_bounds(self) -> list[Optional[int]]:
        if self.family in ("K", "B"):
            params = self.presentation.kparams
            pivot = min(range(params.s), key=lambda i: params.p[i])
            return [None if i == pivot else params.p[i] - 1 for i in range(params.s)]
        return [None]


def _unit_word() -> tuple[int, ...]:
    return ()


def build(pres: HopfPresentation, step_budget: int = 1_000_000) -> BuiltPresentation:
    if pres.family in ("K", "B"):
        return _build_k(pres, step_budget)
    if pres.family == "A":
        return _build_a(pres, step_budget)
    if pres.family == "C":
        return _build_c(pres, step_budget)
    raise ValueError(f"unknown family {pres.family}")


def build_rewrite_system(pres: HopfPresentation, step_budget: int = 1_000_000) -> RewriteSystem:
    return build(pres, step_budget).rs


def _build_k(pres: HopfPresentation, step_budget: int) -> BuiltPresentation:
    params = pres.kparams
    s = params.s
    if len({len(params.n), len(params.p), len(params.q), len(params.alpha), s}) != 1:
        raise ValueError("parameter sequences disagree with s")
    if any(q.is_zero() for q in params.q):
        raise ValueError("q_i must be nonzero")
    names = ["x^-1", "x"] + [f"y{i+1}" for i in range(s)]
    ell = math.prod(params.p)
    weights = [0, 0] + [ell // pi for pi in params.p]
    one = Cyclo.one()
    rules = [
        Rule((1, 0), ((one, _unit_word()),), "x*x^-1"),
        Rule((0, 1), ((one, _unit_word()),), "x^-1*x"),
    ]
    for i in range(s):
        yi = i + 2
        rules.append(Rule((yi, 1), ((params.q[i], (1, yi)),), f"y{i+1}*x"))
        rules.append(Rule((yi, 0), ((params.q[i].inv(), (0, yi)),), f"y{i+1}*x^-1"))
    for i in range(s):
        for j in range(i + 1, s):
            qij = params.q[j] ** params.n[i]
            rules.append(Rule((j + 2, i + 2), ((qij, (i + 2, j + 2)),), f"y{j+1}*y{i+1}"))
    # the power rules rewrite onto the generator with the smallest exponent,
    # which keeps them strictly descending in the monomial order
    pivot = min(range(s), key=lambda i: params.p[i])
    for j in range(s):
        if j == pivot:
            continue
        aj = params.alpha[j] - params.alpha[pivot]
        rhs = [(one, (pivot + 2,) * params.p[pivot])]
        if not aj.is_zero():
            rhs.append((aj, (1,) * params.M))
            rhs.append((-aj, _unit_word()))
        rules.append(Rule((j + 2,) * params.p[j], tuple(rhs), f"y{j+1}^p"))
    rs = RewriteSystem(names, weights, rules, step_budget)

    unit = rs.unit_monomial()
    x1 = NFMonomial(1, unit.w)
    xm1 = NFMonomial(-1, unit.w)
    cops = [((one, xm1, xm1),), ((one, x1, x1),)]
    eps = [one, one]
    antis = [NCPoly.monomial(x1), NCPoly.monomial(xm1)]
    for i in range(s):
        yi = NFMonomial(0, tuple(1 if t == i else 0 for t in range(s)))
        xw = NFMonomial(params.n[i], unit.w)
        cops.append(((one, yi, unit), (one, xw, yi)))
        eps.append(Cyclo.zero())
        antis.append(NCPoly.monomial(NFMonomial(-params.n[i], yi.w), -1))
    return BuiltPresentation(
        presentation=pres,
        rs=rs,
        coproducts=tuple(cops),
        counits=tuple(eps),
        antipodes=tuple(antis),
        skew_weights=tuple(params.n),
        diagonal_conjugation=tuple(params.q),
        central_exponent=params.M,
    )


def _build_a(pres: HopfPresentation, step_budget: int) -> BuiltPresentation:
    params = pres.aparams
    one = Cyclo.one()
    rules = [
        Rule((1, 0), ((one, _unit_word()),), "x*x^-1"),
        Rule((0, 1), ((one, _unit_word()),), "x^-1*x"),
        Rule((2, 1), ((params.q, (1, 2)),), "y*x"),
        Rule((2, 0), ((params.q.inv(), (0, 2)),), "y*x^-1"),
    ]
    rs = RewriteSystem(["x^-1", "x", "y"], [0, 0, 1], rules, step_budget)
    unit = rs.unit_monomial()
    x1, xm1, y = NFMonomial(1, (0,)), NFMonomial(-1, (0,)), NFMonomial(0, (1,))
    cops = (
        ((one, xm1, xm1),),
        ((one, x1, x1),),
        ((one, y, unit), (one, NFMonomial(params.n, (0,)), y)),
    )
    eps = (one, one, Cyclo.zero())
    antis = (
        NCPoly.monomial(x1),
        NCPoly.monomial(xm1),
        NCPoly.monomial(NFMonomial(-params.n, (1,)), -1),
    )
    return BuiltPresentation(pres, rs, cops, eps, antis,
                             skew_weights=(params.n,),
                             diagonal_conjugation=(params.q,),
                             central_exponent=None)


def _build_c(pres: HopfPresentation, step_budget: int) -> BuiltPresentation:
    n = pres.cparams.n
    one = Cyclo.one()
    minus = Cyclo.from_rational(-1)
    rules = [
        Rule((1, 0), ((one, _unit_word()),), "y*y^-1"),
        Rule((0, 1), ((one, _unit_word()),), "y^-1*y"),
        Rule((2, 1), ((one, (1, 2)), (one, (1,) * n), (minus, (1,))), "x*y"),
        Rule((2, 0), ((one, (0, 2)), (one, (0,)), (minus, (1,) * (n - 2))), "x*y^-1"),
    ]
    rs = RewriteSystem(["y^-1", "y", "x"], [0, 0, 1], rules, step_budget)
    unit = rs.unit_monomial()
    y1, ym1, x = NFMonomial(1, (0,)), NFMonomial(-1, (0,)), NFMonomial(0, (1,))
    cops = (
        ((one, ym1, ym1),),
        ((one, y1, y1),),
        ((one, x, NFMonomial(n - 1, (0,))), (one, unit, x)),
    )
    eps = (one, one, Cyclo.zero())
    s_of_x = normal_form([(minus, (2,) + (0,) * (n - 1))], rs)
    antis = (NCPoly.monomial(y1), NCPoly.monomial(ym1), s_of_x)
    return BuiltPresentation(pres, rs, cops, eps, antis,
                             skew_weights=(1 - n,),
                             diagonal_conjugation=None,
                             central_exponent=None)


# ---------------------------------------------------------------------------
# JSON parameter schema (consumed by the CLI)
# ---------------------------------------------------------------------------


def scalar_from_json(obj) -> Cyclo:
    """Scalars appear as ints, "a/b" strings, [num, den], {"L","k"} roots,
    or {"L","poly": [[num,den],...]} coefficient lists."""
    if isinstance(obj, int):
        return Cyclo.from_rational(obj)
    if isinstance(obj, str):
        return Cyclo.from_rational(Fraction(obj))
    if isinstance(obj, (list, tuple)) and len(obj) == 2 and all(isinstance(v, int) for v in obj):
        return Cyclo.from_rational(Fraction(obj[0], obj[1]))
    if isinstance(obj, dict):
        if "poly" in obj:
            L = int(obj["L"])
            coeffs = {e: Fraction(num, den) for e, (num, den) in enumerate(obj["poly"])}
            return Cyclo(L, coeffs)
        if "k" in obj:
            return make_root(int(obj["L"]), int(obj["k"]))
    raise ValueError(f"cannot read a scalar from {obj!r}")


def scalar_to_json(value: Cyclo) -> dict:
    from .scalars import euler_phi

    poly = []
    for e in range(euler_phi(value.conductor)):
        c = value.coeffs.get(e, Fraction(0))
        poly.append([c.numerator, c.denominator])
    while len(poly) > 1 and poly[-1] == [0, 1]:
        poly.pop()
    return {"L": value.conductor, "poly": poly}


def presentation_from_json(data: dict) -> HopfPresentation:
    family = data.get("family")
    if family == "K":
        q = [scalar_from_json(v) for v in data["q"]]
        alpha = [scalar_from_json(v) for v in data["alpha"]]
        if "s" in data and int(data["s"]) != len(data["p"]):
            raise ValueError("field 's' disagrees with the length of 'p'")
        return HopfPresentation.from_k(KParams.make(int(data["M"]), data["n"], data["p"], q, alpha))
    if family == "B":
        q = scalar_from_json(data["q"])
        alpha = [scalar_from_json(v) for v in data["alpha"]]
        return HopfPresentation.from_b(BParams.make(int(data["n"]), data["p"], q, alpha))
    if family == "A":
        return HopfPresentation.a_family(int(data["n"]), scalar_from_json(data["q"]))
    if family == "C":
        return HopfPresentation.c_family(int(data["n"]))
    raise ValueError(f"unknown family {family!r}")
