"""Parabolic decomposition w = w^J * w_J and the distinguished type-D elements.

For a set J of nodes, W_J is the subgroup generated by {s_j : j in J} and
W^J the set of elements with no right descent in J; every w factors
uniquely as w^J * w_J with additive lengths, w^J in W^J minimal in w W_J.
The decomposition is computed by stripping right descents lying in J
(scanning J in increasing order; the result is order-independent).

The type-D section provides the maximal-quadric-plane elements w_alpha and
w_beta, their inverses theta_alpha/theta_beta, the self-disjoint spinor
class sigma_beta, and Stumbo's suffix parametrization of the spinor coset
space W^{Delta \\ {n}} by nondecreasing integer sequences.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dynkin import DynkinSpec
from .errors import NotClassical, NotTypeD
from .weyl import WeylElement, WeylGroupContext, Word


@dataclass(frozen=True)
class Decomposition:
    """The unique factorization w = up * down, up in W^J, down in W_J.

    ``strip`` is the sequence of right descents removed while peeling off
    the W_J part; it is a reduced word for ``down`` read right to left.
    """

    up: WeylElement
    down: WeylElement
    strip: tuple[int, ...]


@dataclass(frozen=True)
class CodimData:
    """Codimension bookkeeping: c_total = cJ_up + cJ_down."""

    cJ_up: int
    cJ_down: int
    c_total: int


def decompose(ctx: WeylGroupContext, w: WeylElement, jset) -> Decomposition:
    """Split w into its minimal coset representative and its W_J part."""
    jlist = sorted(frozenset(jset))
    x = w
    stripped = []
    while True:
        j = next((j for j in jlist if x.perm[j - 1] < 0), None)
        if j is None:
            break
        x = ctx.multiply(x, ctx.simple_reflections[j - 1])
        stripped.append(j)
    down = ctx.from_word(reversed(stripped))
    return Decomposition(x, down, tuple(stripped))


def longest_in_WJ(ctx: WeylGroupContext, jset) -> WeylElement:
    """Longest element w_{0J} of the parabolic subgroup W_J."""
    return ctx.longest_in_parabolic(frozenset(jset))


def longest_in_quotient(ctx: WeylGroupContext, jset) -> WeylElement:
    """The unique maximal element w_0^J of W^J; its length is dim G/P_J."""
    return decompose(ctx, ctx.longest_element, jset).up


def codims(ctx: WeylGroupContext, u: WeylElement, jset) -> CodimData:
    """Codimensions of u relative to J: c^J, c_J and the total c."""
    jset = frozenset(jset)
    dec = decompose(ctx, u, jset)
    dim_quot = longest_in_quotient(ctx, jset).length
    dim_fiber = longest_in_WJ(ctx, jset).length
    return CodimData(
        cJ_up=dim_quot - dec.up.length,
        cJ_down=dim_fiber - dec.down.length,
        c_total=ctx.longest_element.length - u.length,
    )


def stumbo_word(spec: DynkinSpec) -> Word:
    """Stumbo's reduced expression for w_0^J with J = all nodes but 1.

    A_n: n,...,1.  B_n/C_n: 1,...,n,...,1.  D_n: 1,...,n-2,n,n-1,n-2,...,1.
    """
    n = spec.rank
    if spec.family == "A":
        return tuple(range(n, 0, -1))
    if spec.family in ("B", "C"):
        return tuple(range(1, n + 1)) + tuple(range(n - 1, 0, -1))
    if spec.family == "D":
        return tuple(range(1, n - 1)) + (n, n - 1) + tuple(range(n - 2, 0, -1))
    raise NotClassical(f"no Stumbo expression for family {spec.family}")


def is_schubert_pullback(ctx: WeylGroupContext, u: WeylElement, jset) -> bool:
    """True iff the Schubert class of u on the flag comes from G/P_J (u_J = w_{0J})."""
    return decompose(ctx, u, jset).down is longest_in_WJ(ctx, jset)


def is_opposite_pullback(ctx: WeylGroupContext, v: WeylElement, jset) -> bool:
    """True iff the opposite class of v comes from G/P_J (v in W^J)."""
    return decompose(ctx, v, jset).down.length == 0


# -- distinguished elements in type D ---------------------------------------


def _require_type_d(ctx: WeylGroupContext) -> int:
    if ctx.spec.family != "D":
        raise NotTypeD(f"operation needs family D, got {ctx.spec}")
    return ctx.rank


def _theta_word(n: int, kind: str) -> Word:
    # theta_alpha = 1..n-2, n-1 and theta_beta = 1..n-2, n; their length-l
    # right suffixes are the only admitted suffix source.
    tail = n - 1 if kind == "alpha" else n
    return tuple(range(1, n - 1)) + (tail,)


def _theta_suffix(n: int, kind: str, l: int) -> Word:
    word = _theta_word(n, kind)
    return word[len(word) - l :] if l else ()


def _factor_kind(n: int, j: int) -> str:
    # factor j of the spinor pattern uses theta_alpha when j = n mod 2,
    # theta_beta otherwise; the last factor (j = n-1) is always beta.
    return "alpha" if (j - n) % 2 == 0 else "beta"


def spinor_sequences(n: int) -> list[tuple[int, ...]]:
    """Admissible (n-1)-tuples indexing W^I, I = all nodes but n.

    Either (1,2,...,n-1), for the top element, or zeros followed by a
    strictly increasing tail with values <= n-1.  One sequence per subset
    of {1,...,n-1}: the sorted subset, left-padded with zeros.
    """
    seqs = []
    for mask in range(2 ** (n - 1)):
        tail = [i for i in range(1, n) if mask >> (i - 1) & 1]
        seqs.append((0,) * (n - 1 - len(tail)) + tuple(tail))
    return sorted(set(seqs))


def spinor_word(n: int, seq: tuple[int, ...]) -> Word:
    """The word theta_gamma(l_1)...theta_alpha(l_{n-2})theta_beta(l_{n-1})."""
    out: list[int] = []
    for j, l in enumerate(seq, start=1):
        out.extend(_theta_suffix(n, _factor_kind(n, j), l))
    return tuple(out)


def spinor_coset_words(ctx: WeylGroupContext) -> list[tuple[tuple[int, ...], Word]]:
    """All (sequence, word) pairs of the spinor parametrization of W^{Delta\\{n}}."""
    n = _require_type_d(ctx)
    return [(seq, spinor_word(n, seq)) for seq in spinor_sequences(n)]


@dataclass(frozen=True)
class DnDistinguished:
    w_alpha: WeylElement
    w_beta: WeylElement
    theta_alpha: WeylElement
    theta_beta: WeylElement
    sigma_beta: WeylElement


def dn_distinguished(ctx: WeylGroupContext) -> DnDistinguished:
    """The five named D_n elements used by the md-pair classification.

    w_alpha = s_{n-1}s_{n-2}...s_1 and w_beta = s_n s_{n-2}...s_1 are the
    two middle classes of the even quadric; theta_* are their inverses;
    sigma_beta is the spinor element of the sequence (0, 1, ..., n-2),
    whose opposite class is its own disjoint partner.
    """
    n = _require_type_d(ctx)
    w_alpha = ctx.from_word((n - 1,) + tuple(range(n - 2, 0, -1)))
    w_beta = ctx.from_word((n,) + tuple(range(n - 2, 0, -1)))
    sigma = ctx.from_word(spinor_word(n, (0,) + tuple(range(1, n - 1))))
    return DnDistinguished(
        w_alpha=w_alpha,
        w_beta=w_beta,
        theta_alpha=ctx.inverse(w_alpha),
        theta_beta=ctx.inverse(w_beta),
        sigma_beta=sigma,
    )
