"""The path coalgebra of a quiver: sparse elements, counit, comultiplication.

Comultiplication splits a path at every junction,

    Delta(a_n ... a_1) = p (x) s(a_1)
                         + sum_i  a_n ... a_(i+1) (x) a_i ... a_1
                         + t(a_n) (x) p ,

so the first tensor leg always carries the *later* portion of the path.  The
iterated comultiplication of a tensor power acts componentwise with
interleaving and, by coassociativity, may be (and is) always applied to the
rightmost leg.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .cyclotomic import FieldContext, Scalar
from .quiver import HopfQuiver, Path


def path_sort_key(p: Path):
    return p.sort_key()


class Element:
    """A finitely supported scalar combination of paths (no zero terms)."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: FieldContext, terms: Mapping[Path, Scalar] | None = None):
        self.ctx = ctx
        clean: dict[Path, Scalar] = {}
        if terms:
            for p, c in terms.items():
                if not c.is_zero():
                    clean[p] = c
        self.terms = clean

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero(ctx: FieldContext) -> "Element":
        return Element(ctx)

    @staticmethod
    def of_path(ctx: FieldContext, path: Path, coeff: Scalar | int = 1) -> "Element":
        c = ctx.scalar(coeff) if not isinstance(coeff, Scalar) else coeff
        return Element(ctx, {path: c})

    # -- structure queries ------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> list[Path]:
        return sorted(self.terms, key=path_sort_key)

    def coeff(self, path: Path) -> Scalar:
        return self.terms.get(path, self.ctx.zero())

    def max_degree(self) -> int:
        return max((len(p.arrows) for p in self.terms), default=0)

    def is_homogeneous(self, degree: int) -> bool:
        return all(len(p.arrows) == degree for p in self.terms)

    def graded_component(self, degree: int) -> "Element":
        return Element(
            self.ctx,
            {p: c for p, c in self.terms.items() if len(p.arrows) == degree},
        )

    # -- linear algebra -----------------------------------------------------

    def _require_same_field(self, other: "Element"):
        if other.ctx.order != self.ctx.order:
            raise ValueError("cannot mix elements over different field contexts")

    def __add__(self, other: "Element") -> "Element":
        self._require_same_field(other)
        out = dict(self.terms)
        for p, c in other.terms.items():
            out[p] = out[p] + c if p in out else c
        return Element(self.ctx, out)

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def __neg__(self) -> "Element":
        return Element(self.ctx, {p: -c for p, c in self.terms.items()})

    def scale(self, scalar: Scalar) -> "Element":
        return Element(self.ctx, {p: scalar * c for p, c in self.terms.items()})

    def __eq__(self, other):
        return (
            isinstance(other, Element)
            and other.ctx.order == self.ctx.order
            and other.terms == self.terms
        )

    def __hash__(self):
        return hash((self.ctx.order, frozenset(self.terms.items())))

    def __repr__(self):
        return f"Element({self.format()})"

    def format(self, quiver: HopfQuiver | None = None) -> str:
        if not self.terms:
            return "0"
        parts = []
        for p in self.support():
            c = self.terms[p]
            name = quiver.format_path(p) if quiver else _plain_path_name(p)
            cf = c.format()
            parts.append(name if cf == "1" else f"({cf})*{name}")
        return " + ".join(parts)

    def to_json(self):
        return [
            {"source": p.source, "arrows": list(p.arrows), "coeff": self.terms[p].to_json()}
            for p in self.support()
        ]


def _plain_path_name(p: Path) -> str:
    if p.is_vertex():
        return f"g{p.source}"
    return "".join(f"a{i}" for i in reversed(p.arrows))


def element_from_json(ctx: FieldContext, quiver: HopfQuiver, data: Iterable[dict]) -> Element:
    terms: dict[Path, Scalar] = {}
    for item in data:
        p = quiver.path(item["source"], item.get("arrows", []))
        c = ctx.from_json(item["coeff"])
        terms[p] = terms[p] + c if p in terms else c
    return Element(ctx, terms)


class TensorElement:
    """A sparse combination of flat path tuples of a fixed arity k >= 1."""

    __slots__ = ("ctx", "arity", "terms")

    def __init__(self, ctx: FieldContext, arity: int, terms: Mapping[tuple, Scalar] | None = None):
        if arity < 1:
            raise ValueError("tensor arity must be >= 1")
        self.ctx = ctx
        self.arity = arity
        clean: dict[tuple, Scalar] = {}
        if terms:
            for t, c in terms.items():
                if len(t) != arity:
                    raise ValueError(f"tuple {t} does not have arity {arity}")
                if not c.is_zero():
                    clean[t] = c
        self.terms = clean

    @staticmethod
    def of(ctx: FieldContext, paths: tuple[Path, ...], coeff: Scalar | int = 1) -> "TensorElement":
        c = coeff if isinstance(coeff, Scalar) else ctx.scalar(coeff)
        return TensorElement(ctx, len(paths), {paths: c})

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> list[tuple]:
        return sorted(self.terms, key=lambda t: tuple(p.sort_key() for p in t))

    def __add__(self, other: "TensorElement") -> "TensorElement":
        if other.arity != self.arity:
            raise ValueError("cannot add tensors of different arity")
        out = dict(self.terms)
        for t, c in other.terms.items():
            out[t] = out[t] + c if t in out else c
        return TensorElement(self.ctx, self.arity, out)

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + other.scale(-self.ctx.one())

    def scale(self, scalar: Scalar) -> "TensorElement":
        return TensorElement(
            self.ctx, self.arity, {t: scalar * c for t, c in self.terms.items()}
        )

    def swap(self) -> "TensorElement":
        """Reverse the tensor legs (used for cop-side comparisons)."""
        return TensorElement(
            self.ctx, self.arity, {tuple(reversed(t)): c for t, c in self.terms.items()}
        )

    def __eq__(self, other):
        return (
            isinstance(other, TensorElement)
            and other.arity == self.arity
            and other.ctx.order == self.ctx.order
            and other.terms == self.terms
        )

    def __repr__(self):
        if not self.terms:
            return "TensorElement(0)"
        parts = []
        for t in self.support():
            c = self.terms[t]
            name = " (x) ".join(_plain_path_name(p) for p in t)
            cf = c.format()
            parts.append(name if cf == "1" else f"({cf})*[{name}]")
        return "TensorElement(" + " + ".join(parts) + ")"


# ---------------------------------------------------------------------------
# the coalgebra structure maps


def path_splits(quiver: HopfQuiver, p: Path) -> list[tuple[Path, Path]]:
    """All splittings of Delta(p), as (later part, earlier part) pairs."""
    junctions = quiver.junctions(p)
    n = len(p.arrows)
    out = []
    for i in range(n + 1):
        earlier = Path(p.source, p.arrows[:i], junctions[i])
        later = Path(junctions[i], p.arrows[i:], p.target)
        out.append((later, earlier))
    return out


def comultiply(ctx: FieldContext, quiver: HopfQuiver, p: Path) -> TensorElement:
    """Delta of a single path: n+1 terms, all with coefficient 1."""
    one = ctx.one()
    return TensorElement(ctx, 2, {pair: one for pair in path_splits(quiver, p)})


def comultiply_element(quiver: HopfQuiver, x: Element) -> TensorElement:
    out: dict[tuple, Scalar] = {}
    for p, c in x.terms.items():
        for pair in path_splits(quiver, p):
            out[pair] = out[pair] + c if pair in out else c
    return TensorElement(x.ctx, 2, out)


def counit(x: Element) -> Scalar:
    """Sum of the coefficients of the length-0 paths."""
    total = x.ctx.zero()
    for p, c in x.terms.items():
        if p.is_vertex():
            total = total + c
    return total


def iterated_comultiply(quiver: HopfQuiver, x: TensorElement, steps: int) -> TensorElement:
    """Apply the tensor-coalgebra comultiplication of the arity-k base
    coalgebra `steps` times, always expanding the rightmost k-leg block.

    Starting from arity k the result has arity k * (steps + 1).
    """
    if steps < 0:
        raise ValueError("steps must be >= 0")
    k = x.arity
    ctx = x.ctx
    cur = x
    for _ in range(steps):
        out: dict[tuple, Scalar] = {}
        for tup, c in cur.terms.items():
            prefix, block = tup[:-k], tup[-k:]
            # componentwise Delta of the block, legs interleaved
            combos: list[tuple[tuple[Path, ...], tuple[Path, ...]]] = [((), ())]
            for p in block:
                splits = path_splits(quiver, p)
                combos = [
                    (lefts + (l,), rights + (r,))
                    for lefts, rights in combos
                    for l, r in splits
                ]
            for lefts, rights in combos:
                key = prefix + lefts + rights
                out[key] = out[key] + c if key in out else c
        cur = TensorElement(ctx, cur.arity + k, out)
    return cur


def graded_component(x: Element, degree: int) -> Element:
    return x.graded_component(degree)
