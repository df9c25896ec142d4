"""Effective good divisibility sweeps, md-pair listings, and the morphism test.

A marked diagram D(R) is the homogeneous variety G/P_J with J the
complement of R.  Its effective good divisibility is the largest s such
that every pair u, v in W^J with l(v) + c^J(u) = s satisfies v <= u in the
Bruhat order; the first failing degree exposes the maximal disjoint pairs.
Degrees are swept increasing (divisibility up to s implies it up to every
r <= s), and the sweep never goes past the dimension l(w_0^J): in larger
total codimension every product lands in a zero group, so if no violation
appears the value is exactly the dimension.

Closed forms: A_n(R) = n, B_n(R) = C_n(R) = 2n-1, D_n(R) = 2n-3 when R
meets {1, n-1, n} and 2n-2 otherwise; complete flags of G2, F4, E6 give
5, 12, 12.  Brute force cross-validates the closed forms and is the only
route for the remaining exceptional quotients.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace

from .bruhat import bruhat_leq, quotient_dimension, quotient_stratum
from .dynkin import DynkinSpec, is_proper_subdiagram, quotient_size
from .errors import DegreeOutOfRange, EgdError, EmptyMarkedSet, Infeasible
from .parabolic import (
    decompose,
    dn_distinguished,
    is_opposite_pullback,
    is_schubert_pullback,
    longest_in_WJ,
)
from .weyl import WeylElement, WeylGroupContext, build_group

DEFAULT_BUDGET = 10**6

_context_cache: dict[DynkinSpec, WeylGroupContext] = {}


def get_context(spec: DynkinSpec) -> WeylGroupContext:
    """Shared per-spec context; construction is deterministic so sharing is safe."""
    ctx = _context_cache.get(spec)
    if ctx is None:
        ctx = build_group(spec)
        _context_cache[spec] = ctx
    return ctx


@dataclass(frozen=True)
class MarkedDiagram:
    """A diagram with a marked node set R; J = complement(R) is the parabolic set."""

    spec: DynkinSpec
    marked: frozenset[int]

    def __post_init__(self):
        bad = [i for i in self.marked if i < 1 or i > self.spec.rank]
        if bad:
            raise EgdError(f"marked nodes {bad} outside diagram {self.spec}")

    @property
    def parabolic_set(self) -> frozenset[int]:
        return frozenset(self.spec.nodes) - self.marked

    def label(self) -> str:
        inner = ",".join(map(str, sorted(self.marked)))
        return f"{self.spec}({inner})"

    @classmethod
    def parse(cls, diagram: str, marked: str) -> "MarkedDiagram":
        spec = DynkinSpec.parse(diagram)
        text = marked.strip().lower()
        if text == "all":
            nodes = frozenset(spec.nodes)
        elif text == "none":
            nodes = frozenset()
        else:
            try:
                nodes = frozenset(int(p) for p in text.split(","))
            except ValueError as exc:
                raise EgdError(f"cannot parse marked set {marked!r}") from exc
        return cls(spec, nodes)


@dataclass(frozen=True)
class MdPair:
    """A violating pair at some degree: v not<= u with l(v) + c^J(u) = degree."""

    u: WeylElement
    v: WeylElement
    len_v: int
    codim_u: int
    degree: int
    tags: frozenset[int] = frozenset()

    def record(self) -> dict:
        return {
            "v": ",".join(map(str, self.v.word())),
            "u": ",".join(map(str, self.u.word())),
            "len_v": self.len_v,
            "codim_u": self.codim_u,
            "tags": sorted(self.tags),
        }


@dataclass(frozen=True)
class EdResult:
    value: int
    method: str  # closed_form | brute_force | both
    witness: MdPair | None
    closed_form: int | None
    brute_force: int | None
    capped: bool


@dataclass(frozen=True)
class MorphismVerdict:
    verdict: str  # constant | inconclusive
    source_label: str
    target_label: str
    source_ed: int
    target_ed: int
    subdiagram_rule: bool


def closed_form_ed(md: MarkedDiagram) -> int | None:
    """Table value, or None where only brute force is known."""
    fam, n = md.spec.family, md.spec.rank
    if fam == "A":
        return n
    if fam in ("B", "C"):
        return 2 * n - 1
    if fam == "D":
        return 2 * n - 3 if md.marked & {1, n - 1, n} else 2 * n - 2
    if md.marked == frozenset(md.spec.nodes):
        return {"G": 5, "F": 12, "E": 12 if n == 6 else None}[fam]
    return None


def _infeasibility(spec: DynkinSpec, jset: frozenset[int], budget: int, extended: bool) -> str | None:
    size = quotient_size(spec, jset)
    if size > budget:
        return f"W^J of {spec} has {size} elements, over the budget of {budget}"
    if spec.family == "E" and spec.rank == 6 and not jset and not extended:
        return "the E6 complete-flag sweep runs only with the extended flag"
    return None


# -- degree sweep ------------------------------------------------------------

_WORKER_CTX: WeylGroupContext | None = None


def _sweep_worker_init(family: str, rank: int) -> None:
    global _WORKER_CTX
    _WORKER_CTX = get_context(DynkinSpec(family, rank))


def _bucket_violations(
    ctx: WeylGroupContext, jset: frozenset[int], s: int, len_v: int
) -> list[tuple[WeylElement, WeylElement]]:
    """Pairs (v, u) with l(v) = len_v, c^J(u) = s - len_v and v not<= u."""
    dim = quotient_dimension(ctx, jset)
    vs = quotient_stratum(ctx, jset, len_v)
    us = quotient_stratum(ctx, jset, dim - (s - len_v))
    return [(v, u) for v in vs for u in us if not bruhat_leq(ctx, v, u)]


def _sweep_worker(args) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    jnodes, s, len_v = args
    ctx = _WORKER_CTX
    hits = _bucket_violations(ctx, frozenset(jnodes), s, len_v)
    return [(v.word(), u.word()) for v, u in hits]


def _sweep_degree(
    ctx: WeylGroupContext,
    jset: frozenset[int],
    s: int,
    halve: bool,
    executor: ProcessPoolExecutor | None,
) -> list[tuple[WeylElement, WeylElement]]:
    """All violating pairs at degree s; over l(v) <= c^J(u) only when halved."""
    dim = quotient_dimension(ctx, jset)
    buckets = [
        l
        for l in range(1, s)
        if l <= dim and s - l <= dim and (not halve or l <= s - l)
    ]
    if executor is None:
        out: list[tuple[WeylElement, WeylElement]] = []
        for l in buckets:
            out.extend(_bucket_violations(ctx, jset, s, l))
        return out
    jnodes = tuple(sorted(jset))
    futures = [executor.submit(_sweep_worker, (jnodes, s, l)) for l in buckets]
    out = []
    for future in futures:
        for v_word, u_word in future.result():
            out.append((ctx.from_word(v_word), ctx.from_word(u_word)))
    return out


def has_egd_up_to(
    ctx: WeylGroupContext, jset, s: int, *, workers: int = 1
) -> bool:
    """Whether every pair at total degree s satisfies the Bruhat condition.

    The complete-flag sweep checks only l(v) <= c(u); the two classes of a
    violating pair swap under x -> w_0 x, so the halved scan is complete.
    Proper quotients are checked over all ordered pairs.
    """
    jset = frozenset(jset)
    dim = quotient_dimension(ctx, jset)
    if s < 0 or s > dim:
        raise DegreeOutOfRange(f"degree {s} outside 0..{dim}")
    halve = not jset
    with _pool(ctx, workers) as executor:
        return not _sweep_degree(ctx, jset, s, halve, executor)


class _pool:
    """Optional process pool; workers <= 1 stays in-process."""

    def __init__(self, ctx: WeylGroupContext, workers: int):
        self.ctx = ctx
        self.workers = workers
        self.executor = None

    def __enter__(self) -> ProcessPoolExecutor | None:
        if self.workers > 1:
            self.executor = ProcessPoolExecutor(
                max_workers=self.workers,
                initializer=_sweep_worker_init,
                initargs=(self.ctx.spec.family, self.ctx.spec.rank),
            )
        return self.executor

    def __exit__(self, *exc):
        if self.executor is not None:
            self.executor.shutdown()
        return False


def _listing(
    ctx: WeylGroupContext,
    jset: frozenset[int],
    degree: int,
    executor: ProcessPoolExecutor | None,
) -> list[MdPair]:
    """Violating pairs at a degree with 0 < l(v) <= c^J(u), deterministically sorted."""
    hits = _sweep_degree(ctx, jset, degree, True, executor)
    hits.sort(key=lambda pair: (pair[0].length, pair[0].word(), pair[1].word()))
    return [
        MdPair(u=u, v=v, len_v=v.length, codim_u=degree - v.length, degree=degree)
        for v, u in hits
    ]


def _brute_ed(
    ctx: WeylGroupContext,
    jset: frozenset[int],
    executor: ProcessPoolExecutor | None,
) -> tuple[int, bool]:
    """Smallest failing degree minus one, capped at the dimension."""
    dim = quotient_dimension(ctx, jset)
    halve = not jset
    for s in range(1, dim + 1):
        if _sweep_degree(ctx, jset, s, halve, executor):
            return s - 1, False
    return dim, True


def effective_divisibility(
    md: MarkedDiagram,
    mode: str = "both",
    *,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
    extended: bool = False,
) -> EdResult:
    """Effective good divisibility of the marked diagram.

    mode picks the computation path: "closed_form", "brute_force", or
    "both" (the default: run whichever are available and cross-check).
    """
    if mode not in ("closed_form", "brute_force", "both"):
        raise EgdError(f"unknown mode {mode!r}")
    if not md.marked:
        raise EmptyMarkedSet(f"{md.spec} needs at least one marked node")
    jset = md.parabolic_set
    cf = closed_form_ed(md)
    blocked = _infeasibility(md.spec, jset, budget, extended)

    if mode == "closed_form":
        if cf is None:
            raise Infeasible(f"no closed form for {md.label()}")
        return EdResult(cf, "closed_form", None, cf, None, False)

    if mode == "brute_force" and blocked:
        raise Infeasible(blocked)
    if mode == "both" and blocked and cf is None:
        raise Infeasible(blocked)

    if blocked:
        return EdResult(cf, "closed_form", None, cf, None, False)

    ctx = get_context(md.spec)
    with _pool(ctx, workers) as executor:
        bf, capped = _brute_ed(ctx, jset, executor)
        witness_list = _listing(ctx, jset, bf + 1, executor)
    witness = witness_list[0] if witness_list else None

    if mode == "brute_force" or cf is None:
        return EdResult(bf, "brute_force", witness, None, bf, capped)
    if cf != bf:
        raise EgdError(
            f"closed form {cf} and brute force {bf} disagree on {md.label()}"
        )
    return EdResult(bf, "both", witness, cf, bf, capped)


def md_pairs(
    md: MarkedDiagram,
    *,
    degree: int | None = None,
    classify: bool = False,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
    extended: bool = False,
) -> list[MdPair]:
    """All maximal disjoint pairs of md (or the violating pairs at ``degree``).

    Pairs are listed with l(v) <= c^J(u); the dual of each pair is
    recoverable through x -> w_0 x w_{0J}.  With ``classify`` (family D
    flags and their quotients) each pair is tagged with the marked nodes r
    such that the pair pulls back from D(r).
    """
    if not md.marked:
        raise EmptyMarkedSet(f"{md.spec} needs at least one marked node")
    jset = md.parabolic_set
    blocked = _infeasibility(md.spec, jset, budget, extended)
    if blocked:
        raise Infeasible(blocked)
    ctx = get_context(md.spec)
    with _pool(ctx, workers) as executor:
        if degree is None:
            value, _ = _brute_ed(ctx, jset, executor)
            degree = value + 1
        else:
            dim = quotient_dimension(ctx, jset)
            if degree < 0 or degree > dim + 1:
                raise DegreeOutOfRange(f"degree {degree} outside 0..{dim + 1}")
        pairs = _listing(ctx, jset, degree, executor)
    if classify:
        pairs = classify_md_pairs(ctx, pairs, jset=jset)
    return pairs


def classify_md_pairs(
    ctx: WeylGroupContext, pairs, *, jset=frozenset()
) -> list[MdPair]:
    """Tag each D_n pair with the quotient nodes {1, n-1, n} it pulls back from.

    Pairs from a proper quotient are first lifted to the flag: the Schubert
    side picks up the fiber class (u -> u w_{0J}), the opposite side is
    already a flag class.  Node 1 is recognized by the quadric criterion
    {v^J, u^J} = {w_alpha, w_beta}; the spinor nodes by the pullback tests
    on the corresponding quotients.
    """
    n = ctx.rank
    dist = dn_distinguished(ctx)  # raises NotTypeD off family D
    jset = frozenset(jset)
    w0j = longest_in_WJ(ctx, jset)
    quadric_j = frozenset(ctx.spec.nodes) - {1}
    middle = {dist.w_alpha, dist.w_beta}
    out = []
    for pair in pairs:
        u = ctx.multiply(pair.u, w0j)
        v = pair.v
        tags = set()
        if {decompose(ctx, v, quadric_j).up, decompose(ctx, u, quadric_j).up} == middle:
            tags.add(1)
        for r in (n - 1, n):
            jr = frozenset(ctx.spec.nodes) - {r}
            if is_schubert_pullback(ctx, u, jr) and is_opposite_pullback(ctx, v, jr):
                tags.add(r)
        out.append(replace(pair, tags=frozenset(tags)))
    return out


def _resolve_ed(
    side, *, budget: int, workers: int, extended: bool
) -> tuple[int, str]:
    """(ed value, display label) for a marked diagram or a user-supplied value."""
    if isinstance(side, int):
        return side, f"ed={side}"
    if not side.marked:
        raise EmptyMarkedSet(f"{side.spec} needs at least one marked node")
    cf = closed_form_ed(side)
    if cf is not None:
        return cf, side.label()
    result = effective_divisibility(
        side, "brute_force", budget=budget, workers=workers, extended=extended
    )
    return result.value, side.label()


def morphism_constancy(
    source,
    target: MarkedDiagram,
    *,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
    extended: bool = False,
) -> MorphismVerdict:
    """Decide constancy of morphisms source -> target from divisibility alone.

    "constant" when ed(source) > ed(target): pulled-back disjoint effective
    cycles would otherwise contradict the source's divisibility.  Anything
    else is "inconclusive" (never a claim that a nonconstant map exists).
    The proper-subdiagram rule is reported when it applies; in that case
    the ed comparison always lands on "constant" as well.
    """
    src_ed, src_label = _resolve_ed(
        source, budget=budget, workers=workers, extended=extended
    )
    tgt_ed, tgt_label = _resolve_ed(
        target, budget=budget, workers=workers, extended=extended
    )
    rule = (
        isinstance(source, MarkedDiagram)
        and isinstance(target, MarkedDiagram)
        and is_proper_subdiagram(target.spec, source.spec)
    )
    verdict = "constant" if src_ed > tgt_ed else "inconclusive"
    return MorphismVerdict(verdict, src_label, tgt_label, src_ed, tgt_ed, rule)
