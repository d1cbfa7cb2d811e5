"""Block decomposition, translation maps, the twisted crossed product, and
primitive-element extraction for graded Majid algebras on Hopf quivers.

The connected components of Q(G, R) are the cosets of the normal subgroup N
generated by the ramified classes; right translation by a vertex maps the
principal block onto any other block, and the whole algebra is recovered from
the principal block as a crossed product with the coset space, twisted by a
2-cocycle sigma into N and a scalar Theta made of eight reassociator values.

The written Theta display admits more than one reading (which factors swap
source and target, and where sigma multiplies in).  `crossed_product` treats
the transport identity as the arbiter: it tries the literal reading first and
falls back to the alternatives, recording which one validated.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cyclotomic import Scalar
from .errors import IsoCheckFailed, NotSingleVertex
from .groups import subgroup_generated
from .majid import MajidStructure
from .pathcoalg import Element, TensorElement, comultiply_element, path_splits
from .quiver import Path, connected_components
from .report import VerificationReport

# ---------------------------------------------------------------------------
# exact linear algebra (small dense systems over the cyclotomic field)


def matrix_rank(rows: list[list[Scalar]]) -> int:
    """Rank by fraction-free-ish Gaussian elimination (exact division)."""
    if not rows:
        return 0
    rows = [list(r) for r in rows]
    ncols = len(rows[0])
    rank = 0
    col = 0
    while rank < len(rows) and col < ncols:
        pivot = None
        for r in range(rank, len(rows)):
            if not rows[r][col].is_zero():
                pivot = r
                break
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pv = rows[rank][col]
        for r in range(rank + 1, len(rows)):
            c = rows[r][col]
            if not c.is_zero():
                factor = c / pv
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


# ---------------------------------------------------------------------------
# blocks


@dataclass
class BlockDecomposition:
    normal_subgroup: tuple[int, ...]
    coset_reps: tuple[int, ...]            # identity first, then by min element
    rep_of_vertex: tuple[int, ...]         # vertex -> its coset representative
    blocks: dict[int, list[Path]]          # rep -> basis paths (degree <= cap)
    vertex_sets: dict[int, tuple[int, ...]]

    @property
    def principal_rep(self) -> int:
        return self.coset_reps[0]

    def to_json(self):
        return {
            "normal_subgroup": list(self.normal_subgroup),
            "coset_reps": list(self.coset_reps),
            "blocks": {
                str(rep): {
                    "vertices": list(self.vertex_sets[rep]),
                    "basis_counts": _degree_counts(self.blocks[rep]),
                }
                for rep in self.coset_reps
            },
        }


def _degree_counts(paths: list[Path]) -> dict[str, int]:
    out: dict[str, int] = {}
    for p in paths:
        key = str(len(p.arrows))
        out[key] = out.get(key, 0) + 1
    return out


def blocks(structure: MajidStructure) -> BlockDecomposition:
    """Decompose the basis into blocks indexed by cosets of N = <ramified classes>."""
    group = structure.group
    quiver = structure.quiver
    support = quiver.ram.support_elements(group)
    subgroup, index = subgroup_generated(group, support)
    comps = connected_components(quiver)
    if len(comps.components) != index:
        raise AssertionError(
            f"component count {len(comps.components)} != index [G:N] = {index}"
        )
    reps = []
    for comp in comps.components:
        if group.identity in comp:
            reps.append(group.identity)
        else:
            reps.append(min(comp))
    # identity's coset first, the rest by representative
    reps.sort(key=lambda r: (r != group.identity, r))
    rep_of_vertex = [None] * group.order
    vertex_sets = {}
    for rep in reps:
        comp = comps.component_vertices(rep)
        vertex_sets[rep] = comp
        for v in comp:
            rep_of_vertex[v] = rep
    block_paths: dict[int, list[Path]] = {rep: [] for rep in reps}
    for p in structure.basis_up_to():
        block_paths[rep_of_vertex[p.source]].append(p)
    assert set(subgroup) == set(vertex_sets[group.identity]), "principal block vertices must be N"
    return BlockDecomposition(
        subgroup, tuple(reps), tuple(rep_of_vertex), block_paths, vertex_sets
    )


def translate(structure: MajidStructure, x: Element | Path, g: int) -> Element:
    """Right translation Tr_g: p -> p * g (multiplication by the vertex g)."""
    if isinstance(x, Path):
        x = Element.of_path(structure.ctx, x)
    return structure.multiply(x, structure.vertex(g))


def verify_translations(structure: MajidStructure, cap: int | None = None) -> VerificationReport:
    """Check that every Tr_g is a degree-preserving coalgebra bijection from
    the principal block onto the block of g, for basis paths up to `cap`."""
    S = structure
    cap = S.degree_cap if cap is None else min(cap, S.degree_cap)
    dec = blocks(S)
    group = S.group
    quiver = S.quiver
    report = VerificationReport()
    principal = [p for p in dec.blocks[dec.principal_rep] if len(p.arrows) <= cap]
    by_degree: dict[int, list[Path]] = {}
    for p in principal:
        by_degree.setdefault(len(p.arrows), []).append(p)

    for g in group.elements():
        target_rep = dec.rep_of_vertex[g]
        target_paths = {
            d: [p for p in dec.blocks[target_rep] if len(p.arrows) == d]
            for d in by_degree
        }
        for d, sources in sorted(by_degree.items()):
            images = []
            cols = {p: i for i, p in enumerate(target_paths[d])}
            ok_support = True
            matrix = []
            for p in sources:
                img = translate(S, p, g)
                images.append(img)
                if not img.is_homogeneous(d):
                    report.add("translation_graded", (g, p), "image not homogeneous")
                row = [S.ctx.zero()] * len(cols)
                for q, c in img.terms.items():
                    if q not in cols:
                        report.add(
                            "translation_block", (g, p), f"image leaves block {target_rep}"
                        )
                        ok_support = False
                    else:
                        row[cols[q]] = c
                matrix.append(row)
            report.tally("translation_graded", len(sources))
            report.tally("translation_block", len(sources))
            if ok_support:
                if len(sources) != len(cols) or matrix_rank(matrix) != len(sources):
                    report.add(
                        "translation_bijective", (g, d),
                        f"rank deficiency on degree-{d} basis",
                    )
            report.tally("translation_bijective", 1)
            # coalgebra morphism: Delta(p g) = sum p1 g (x) p2 g
            for p in sources:
                img = translate(S, p, g)
                lhs = comultiply_element(quiver, img)
                rhs_terms: dict[tuple, Scalar] = {}
                for p1, p2 in path_splits(quiver, p):
                    left = translate(S, p1, g)
                    right = translate(S, p2, g)
                    for lp, lc in left.terms.items():
                        for rp, rc in right.terms.items():
                            keyt = (lp, rp)
                            add = lc * rc
                            rhs_terms[keyt] = (
                                rhs_terms[keyt] + add if keyt in rhs_terms else add
                            )
                if lhs != TensorElement(S.ctx, 2, rhs_terms):
                    report.add("translation_comultiplicative", (g, p))
            report.tally("translation_comultiplicative", len(sources))
    return report


def block_product_check(structure: MajidStructure, cap: int | None = None) -> VerificationReport:
    """Products respect blocks (H_(g) H_(h) inside H_(gh)) and the antipode
    sends the block of g into the block of g^-1."""
    S = structure
    cap = S.degree_cap if cap is None else min(cap, S.degree_cap)
    dec = blocks(S)
    group = S.group
    report = VerificationReport()
    basis = [p for p in S.basis_up_to(cap)]
    count = 0
    for p in basis:
        for q in basis:
            if len(p.arrows) + len(q.arrows) > cap:
                continue
            count += 1
            expected = dec.rep_of_vertex[group.mul(p.source, q.source)]
            prod = S.multiply_paths(p, q)
            for r in prod.terms:
                if dec.rep_of_vertex[r.source] != expected:
                    report.add("block_product", (p, q), f"term escapes block {expected}")
                    break
    report.tally("block_product", count)
    for p in basis:
        expected = dec.rep_of_vertex[group.inv(p.source)]
        for r in S.antipode_path(p).terms:
            if dec.rep_of_vertex[r.source] != expected:
                report.add("block_antipode", (p,), f"term escapes block {expected}")
                break
    report.tally("block_antipode", len(basis))
    return report


# ---------------------------------------------------------------------------
# the crossed product


def theta(
    structure: MajidStructure,
    p: Path,
    q: Path,
    u: int,
    v: int,
    swap_third: bool = True,
) -> Scalar:
    """The eight-factor reassociator ratio Theta(p, q, u, v).

    With s/t the source/target vertices of the principal-block paths p and q,
    the literal reading (swap_third=True) is

        Phi(s(p), u, s(q)v) Phi(s(q), u^-1, uv) Phi(u, t(q)u^-1, uv) Phi(t(p), t(q), uv)
        -----------------------------------------------------------------------------
        Phi(t(p), u, t(q)v) Phi(t(q), u^-1, uv) Phi(u, s(q)u^-1, uv) Phi(s(p), s(q), uv)

    i.e. numerator and denominator differ by swapping s and t everywhere,
    including inside the conjugated argument of the third factor.  The
    alternative reading (swap_third=False) keeps t(q)u^-1 in both.
    """
    g = structure.group
    phi = structure.phi
    sp, tp = p.source, p.target
    sq, tq = q.source, q.target
    uinv = g.inv(u)
    uv = g.mul(u, v)
    third_num = g.mul(tq, uinv)
    third_den = g.mul(sq, uinv) if swap_third else third_num
    num = (
        phi(sp, u, g.mul(sq, v))
        * phi(sq, uinv, uv)
        * phi(u, third_num, uv)
        * phi(tp, tq, uv)
    )
    den = (
        phi(tp, u, g.mul(tq, v))
        * phi(tq, uinv, uv)
        * phi(u, third_den, uv)
        * phi(sp, sq, uv)
    )
    return num / den


_READINGS = (
    ("literal", True, "vertex_product"),
    ("sigma_in_block", True, "sigma_then_rep"),
    ("literal_third_unswapped", False, "vertex_product"),
    ("sigma_in_block_third_unswapped", False, "sigma_then_rep"),
)


@dataclass
class CrossedProduct:
    """The crossed product of the principal block with the coset space.

    `sigma` is the 2-cocycle u,v -> u v (uv-bar)^-1 into N attached to the
    minimal-index transversal; `reading` records which interpretation of the
    product formula the transport check validated.
    """

    structure: MajidStructure
    decomposition: BlockDecomposition
    coset_reps: tuple[int, ...]
    sigma: dict[tuple[int, int], int]
    reading: str
    swap_third: bool
    sigma_slot: str
    iso_report: VerificationReport
    _cache: dict = field(default_factory=dict)

    def product(
        self, p: Path, u: int, q: Path, v: int
    ) -> tuple[Element, int, Scalar]:
        """Product of (p (x) u) and (q (x) v): a principal-block element, the
        representative of the combined coset, and the Theta scalar used."""
        key = (p, u, q, v)
        if key not in self._cache:
            self._cache[key] = _crossed_term(
                self.structure, self.decomposition, p, u, q, v, self.swap_third
            )
        return self._cache[key]

    def to_json(self):
        g = self.structure.group
        sig = {
            f"{u},{v}": n for (u, v), n in sorted(self.sigma.items())
        }
        samples = []
        principal = [
            p for p in self.decomposition.blocks[self.decomposition.principal_rep]
            if len(p.arrows) <= 2
        ]
        for p in principal[:4]:
            for q in principal[:4]:
                for u in self.coset_reps:
                    for v in self.coset_reps:
                        if len(samples) >= 20:
                            break
                        samples.append(
                            {
                                "p": p.to_json(),
                                "q": q.to_json(),
                                "u": u,
                                "v": v,
                                "theta": theta(
                                    self.structure, p, q, u, v, self.swap_third
                                ).to_json(),
                            }
                        )
        return {
            "normal_subgroup": list(self.decomposition.normal_subgroup),
            "coset_reps": list(self.coset_reps),
            "sigma": sig,
            "reading": self.reading,
            "theta_samples": samples,
            "iso_check": self.iso_report.to_json(),
            "group_order": g.order,
        }


def _conjugate(structure: MajidStructure, u: int, q: Path) -> Element:
    """u |> q = u (q u^-1), both products via the graded multiplication."""
    S = structure
    g = S.group
    qu = S.multiply(Element.of_path(S.ctx, q), S.vertex(g.inv(u)))
    return S.multiply(S.vertex(u), qu)


def _crossed_term(structure, dec, p, u, q, v, swap_third):
    S = structure
    g = S.group
    th = theta(S, p, q, u, v, swap_third)
    core = S.multiply(Element.of_path(S.ctx, p), _conjugate(S, u, q))
    uv = g.mul(u, v)
    wbar = dec.rep_of_vertex[uv]
    return core, wbar, th


def _transport_rhs(structure, dec, sigma, p, u, q, v, swap_third, sigma_slot) -> Element:
    """Image in H of the crossed-product product, under p (x) u -> p u."""
    S = structure
    g = S.group
    core, wbar, th = _crossed_term(structure, dec, p, u, q, v, swap_third)
    if sigma_slot == "vertex_product":
        # second slot sigma(u,v) wbar read as the single group element u v
        out = S.multiply(core, S.vertex(g.mul(u, v)))
    else:
        # sigma multiplies into the principal block first, then translate
        sig = sigma[(u, v)]
        out = S.multiply(S.multiply(core, S.vertex(sig)), S.vertex(wbar))
    return out.scale(th)


def crossed_product(structure: MajidStructure, cap: int | None = None) -> CrossedProduct:
    """Build the crossed product and verify the multiplicative transport of
    the isomorphism p u -> p (x) u on all basis pairs of total degree <= cap.

    Raises IsoCheckFailed when no reading of the product formula transports
    correctly (which would indicate an implementation defect, not a failure
    of the theory).
    """
    S = structure
    cap = S.degree_cap if cap is None else min(cap, S.degree_cap)
    dec = blocks(S)
    g = S.group
    reps = dec.coset_reps
    sigma = {}
    for u in reps:
        for v in reps:
            uv = g.mul(u, v)
            wbar = dec.rep_of_vertex[uv]
            sigma[(u, v)] = g.mul(uv, g.inv(wbar))
    assert all(n in set(dec.normal_subgroup) for n in sigma.values())

    principal = [
        p for p in dec.blocks[dec.principal_rep] if len(p.arrows) <= cap
    ]
    pairs = [
        (p, u, q, v)
        for p in principal
        for q in principal
        if len(p.arrows) + len(q.arrows) <= cap
        for u in reps
        for v in reps
    ]

    attempts = []
    for reading, swap_third, sigma_slot in _READINGS:
        report = VerificationReport()
        failed = None
        for p, u, q, v in pairs:
            lhs = S.multiply(
                translate(S, p, u), translate(S, q, v)
            )
            rhs = _transport_rhs(S, dec, sigma, p, u, q, v, swap_third, sigma_slot)
            if lhs != rhs:
                failed = (p, u, q, v)
                report.add("crossed_product_transport", failed)
                break
        report.tally("crossed_product_transport", len(pairs))
        if failed is None:
            for prior_reading, prior_witness in attempts:
                report.tally(f"rejected_reading_{prior_reading}", 1)
            return CrossedProduct(
                S, dec, reps, sigma, reading, swap_third, sigma_slot, report
            )
        attempts.append((reading, failed))
    raise IsoCheckFailed(attempts[0][1])


# ---------------------------------------------------------------------------
# primitives and the Lie bracket (one-vertex quivers)


@dataclass
class LieData:
    """Degree-1 primitives of a one-vertex structure and their commutators."""

    loop_arrows: tuple[int, ...]
    brackets: dict[tuple[int, int], Element]
    structure_constants: dict[tuple[int, int], dict[Path, Scalar]]
    report: VerificationReport

    def to_json(self):
        return {
            "loops": list(self.loop_arrows),
            "brackets": {
                f"{i},{j}": el.to_json() for (i, j), el in sorted(self.brackets.items())
            },
            "report": self.report.to_json(),
        }


def primitives(structure: MajidStructure) -> LieData:
    """Extract the degree-1 primitives (the loops), their commutators, and
    check primitivity, associativity on primitives, antisymmetry and Jacobi.

    Jacobi needs degree 3; when the cap is 2 the Jacobi check is skipped and
    recorded as such in the report counts.
    """
    S = structure
    if S.quiver.num_vertices != 1:
        raise NotSingleVertex(S.quiver.num_vertices)
    if S.degree_cap < 2:
        raise ValueError("primitive extraction needs degree cap >= 2")
    ctx = S.ctx
    quiver = S.quiver
    report = VerificationReport()
    loops = tuple(a.index for a in quiver.arrows)
    unit_path = quiver.vertex_path(0)

    for idx in loops:
        p = quiver.arrow_path(idx)
        delta = comultiply_element(quiver, Element.of_path(ctx, p))
        expected = TensorElement(
            ctx, 2, {(p, unit_path): ctx.one(), (unit_path, p): ctx.one()}
        )
        if delta != expected:
            report.add("primitive", (p,))
    report.tally("primitive", len(loops))

    def bracket(x: Element, y: Element) -> Element:
        return S.multiply(x, y) - S.multiply(y, x)

    elems = {i: S.arrow(i) for i in loops}
    brackets: dict[tuple[int, int], Element] = {}
    constants: dict[tuple[int, int], dict[Path, Scalar]] = {}
    for i in loops:
        for j in loops:
            b = bracket(elems[i], elems[j])
            brackets[(i, j)] = b
            constants[(i, j)] = dict(b.terms)

    for i in loops:
        for j in loops:
            if brackets[(i, j)] != -brackets[(j, i)]:
                report.add("bracket_antisymmetry", (i, j))
    report.tally("bracket_antisymmetry", len(loops) ** 2)

    count = 0
    for i in loops:
        for j in loops:
            for k in loops:
                count += 1
                x, y, z = elems[i], elems[j], elems[k]
                if S.multiply(x, S.multiply(y, z)) != S.multiply(S.multiply(x, y), z):
                    report.add("primitive_associativity", (i, j, k))
    report.tally("primitive_associativity", count)

    if S.degree_cap >= 3:
        count = 0
        for i in loops:
            for j in loops:
                for k in loops:
                    count += 1
                    x, y, z = elems[i], elems[j], elems[k]
                    jac = (
                        bracket(x, bracket(y, z))
                        + bracket(y, bracket(z, x))
                        + bracket(z, bracket(x, y))
                    )
                    if not jac.is_zero():
                        report.add("jacobi", (i, j, k))
        report.tally("jacobi", count)

    # bracket closure inside the degree-filtered span: commutators of the
    # degree-1 primitives must stay expressible over the recorded brackets
    span_paths = set()
    for b in brackets.values():
        span_paths.update(b.terms)
    for (i, j), b in brackets.items():
        if any(p not in span_paths for p in b.terms):
            report.add("bracket_closure", (i, j))
    report.tally("bracket_closure", len(brackets))

    return LieData(loops, brackets, constants, report)


def cocommutative_check(
    structure: MajidStructure, cap: int | None = None
) -> tuple[bool, Path | None]:
    """Is Delta = Delta^op on all basis paths of degree <= cap?  Scans degrees
    in ascending order and returns the first witness path on failure."""
    S = structure
    cap = S.degree_cap if cap is None else min(cap, S.degree_cap)
    for d in range(cap + 1):
        for p in S.basis(d):
            delta = comultiply_element(S.quiver, Element.of_path(S.ctx, p))
            if delta != delta.swap():
                return False, p
    return True, None
