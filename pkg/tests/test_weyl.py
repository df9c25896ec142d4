"""Core group tests: construction, multiplication, lengths, words, Coxeter numbers."""

import random

import pytest

from egd import (
    DynkinSpec,
    elements_of_length,
    get_context,
    group_order,
    parse_word,
    format_word,
)
from egd.errors import BadLetter, ContextMismatch, InvalidRank


# -- independent oracles ------------------------------------------------------


def closure_root_count(cartan):
    """Count positive roots by closing the simple roots under all reflections.

    Standalone: works on a raw Cartan matrix given as literal rows.
    """
    n = len(cartan)
    simple = [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]
    seen = set(simple)
    queue = list(simple)
    while queue:
        vec = queue.pop()
        for j in range(n):
            pairing = sum(c * cartan[i][j] for i, c in enumerate(vec))
            img = vec[:j] + (vec[j] - pairing,) + vec[j + 1 :]
            if img not in seen:
                seen.add(img)
                queue.append(img)
    return sum(1 for r in seen if all(c >= 0 for c in r))


def even_signed_group(n):
    """The group of signed permutations of 1..n with an even number of sign
    flips, generated matrix-free; returns {element: word length} by BFS.

    Generators: g_i swaps slots i, i+1 (i < n); g_n swaps slots n-1, n and
    flips both signs.  This is a standalone model of the D_n Weyl group.
    """
    idem = tuple(range(1, n + 1))

    def gen(word_pos, elem):
        out = list(elem)
        if word_pos < n:
            out[word_pos - 1], out[word_pos] = out[word_pos], out[word_pos - 1]
        else:
            out[n - 2], out[n - 1] = -out[n - 1], -out[n - 2]
        return tuple(out)

    dist = {idem: 0}
    frontier = [idem]
    while frontier:
        nxt = []
        for elem in frontier:
            for i in range(1, n + 1):
                img = gen(i, elem)
                if img not in dist:
                    dist[img] = dist[elem] + 1
                    nxt.append(img)
        frontier = nxt
    return dist


# -- construction -------------------------------------------------------------


@pytest.mark.parametrize(
    "family,rank",
    [("A", 0), ("B", 1), ("C", 1), ("D", 3), ("E", 5), ("E", 9), ("F", 3), ("G", 3)],
)
def test_rank_bounds(family, rank):
    with pytest.raises(InvalidRank):
        DynkinSpec(family, rank)


def test_a1_context():
    ctx = get_context(DynkinSpec("A", 1))
    assert ctx.num_positive_roots == 1
    assert len(elements_of_length(ctx, 0)) + len(elements_of_length(ctx, 1)) == 2


def test_d4_context_against_signed_permutation_model():
    dist = even_signed_group(4)
    assert len(dist) == 192
    assert max(dist.values()) == 12
    ctx = get_context(DynkinSpec("D", 4))
    assert ctx.num_positive_roots == 12
    assert ctx.longest_element.length == 12
    total = sum(len(elements_of_length(ctx, l)) for l in range(13))
    assert total == 192


def test_f4_roots_against_closure_oracle():
    f4_cartan = (
        (2, -1, 0, 0),
        (-1, 2, -2, 0),
        (0, -1, 2, -1),
        (0, 0, -1, 2),
    )
    assert closure_root_count(f4_cartan) == 24
    ctx = get_context(DynkinSpec("F", 4))
    assert ctx.num_positive_roots == 24


@pytest.mark.parametrize(
    "family,rank,roots",
    [("A", 5, 15), ("B", 5, 25), ("C", 5, 25), ("D", 6, 30), ("E", 6, 36), ("E", 7, 63), ("E", 8, 120), ("G", 2, 6)],
)
def test_positive_root_counts(family, rank, roots):
    ctx = get_context(DynkinSpec(family, rank))
    assert ctx.num_positive_roots == roots
    assert ctx.longest_element.length == roots


def test_group_order_matches_bfs():
    for spec in [DynkinSpec("A", 3), DynkinSpec("B", 3), DynkinSpec("D", 4), DynkinSpec("G", 2)]:
        ctx = get_context(spec)
        total = sum(
            len(elements_of_length(ctx, l))
            for l in range(ctx.longest_element.length + 1)
        )
        assert total == group_order(spec)


# -- multiplication and words -------------------------------------------------


def test_generators_are_involutions():
    ctx = get_context(DynkinSpec("B", 3))
    for s in ctx.simple_reflections:
        assert ctx.multiply(s, s) is ctx.identity


def test_braid_relation_a2():
    ctx = get_context(DynkinSpec("A", 2))
    assert ctx.from_word([1, 2, 1]) == ctx.from_word([2, 1, 2])


def test_d4_longest_element_is_involution():
    ctx = get_context(DynkinSpec("D", 4))
    w0 = ctx.longest_element
    assert ctx.multiply(w0, w0) is ctx.identity


def test_context_mismatch():
    a2 = get_context(DynkinSpec("A", 2))
    b2 = get_context(DynkinSpec("B", 2))
    with pytest.raises(ContextMismatch):
        a2.multiply(a2.identity, b2.identity)


def test_lengths():
    ctx = get_context(DynkinSpec("B", 3))
    assert ctx.identity.length == 0
    assert all(s.length == 1 for s in ctx.simple_reflections)
    assert ctx.longest_element.length == 9


def test_descents():
    ctx = get_context(DynkinSpec("A", 3))
    assert ctx.descents(ctx.identity, "right") == frozenset()
    assert ctx.descents(ctx.identity, "left") == frozenset()
    s2 = ctx.simple_reflections[1]
    assert ctx.descents(s2, "right") == {2}
    assert ctx.descents(s2, "left") == {2}
    w0 = ctx.longest_element
    assert ctx.descents(w0, "right") == {1, 2, 3}
    assert ctx.descents(w0, "left") == {1, 2, 3}


def test_from_word():
    ctx = get_context(DynkinSpec("D", 4))
    assert ctx.from_word([]) is ctx.identity
    assert ctx.from_word([1, 2, 4, 3, 2, 1]).length == 6
    with pytest.raises(BadLetter):
        ctx.from_word([5])


def test_canonical_word_round_trip():
    ctx = get_context(DynkinSpec("D", 4))
    assert ctx.canonical_word(ctx.identity) == ()
    assert ctx.canonical_word(ctx.simple_reflections[2]) == (3,)
    w = ctx.from_word([4, 2, 3, 1, 2, 4, 1, 2, 1])
    cw = ctx.canonical_word(w)
    assert len(cw) == w.length == 9
    assert ctx.from_word(cw) == w


def all_reduced_words(ctx, x):
    if x.length == 0:
        yield ()
        return
    for i in sorted(ctx.descents(x, "left")):
        rest = ctx.multiply(ctx.simple_reflections[i - 1], x)
        for tail in all_reduced_words(ctx, rest):
            yield (i,) + tail


def test_canonical_word_is_lex_smallest_a3():
    ctx = get_context(DynkinSpec("A", 3))
    for l in range(7):
        for x in elements_of_length(ctx, l):
            words = list(all_reduced_words(ctx, x))
            assert ctx.canonical_word(x) == min(words)
            assert all(len(w) == x.length for w in words)
            assert all(ctx.from_word(w) == x for w in words)


# -- Coxeter numbers ----------------------------------------------------------


@pytest.mark.parametrize(
    "family,rank,number",
    [("A", n, n + 1) for n in range(1, 9)]
    + [("B", n, 2 * n) for n in range(2, 9)]
    + [("C", n, 2 * n) for n in range(2, 9)]
    + [("D", n, 2 * n - 2) for n in range(4, 9)]
    + [("G", 2, 6), ("F", 4, 12), ("E", 6, 12), ("E", 7, 18), ("E", 8, 30)],
)
def test_coxeter_numbers(family, rank, number):
    assert get_context(DynkinSpec(family, rank)).coxeter_number() == number


def test_coxeter_number_reordering_invariant():
    rng = random.Random(20230314)
    for spec in [DynkinSpec("A", 4), DynkinSpec("B", 4), DynkinSpec("D", 5), DynkinSpec("F", 4)]:
        ctx = get_context(spec)
        order = ctx.coxeter_number()
        letters = list(spec.nodes)
        rng.shuffle(letters)
        elem = ctx.from_word(letters)
        power, k = elem, 1
        while power is not ctx.identity:
            power = ctx.multiply(power, elem)
            k += 1
        assert k == order


# -- length invariants --------------------------------------------------------


def test_exchange_condition_and_length_symmetries():
    for spec in [DynkinSpec("A", 3), DynkinSpec("B", 3)]:
        ctx = get_context(spec)
        w0 = ctx.longest_element
        for l in range(ctx.longest_element.length + 1):
            for x in elements_of_length(ctx, l):
                assert ctx.inverse(x).length == x.length
                assert ctx.multiply(w0, x).length == w0.length - x.length
                for s in ctx.simple_reflections:
                    assert abs(ctx.multiply(x, s).length - x.length) == 1


def test_total_order_is_stable():
    ctx = get_context(DynkinSpec("A", 3))
    elems = [e for l in range(7) for e in elements_of_length(ctx, l)]
    once = sorted(elems)
    twice = sorted(reversed(elems))
    assert once == twice
    assert len(set(elems)) == 24


def test_word_serialization():
    assert parse_word("4,2,3,1,2,4,1,2,1") == (4, 2, 3, 1, 2, 4, 1, 2, 1)
    assert parse_word("") == ()
    assert parse_word("e") == ()
    assert format_word(()) == "e"
    assert format_word((1, 2)) == "1,2"
    with pytest.raises(BadLetter):
        parse_word("1,x")
