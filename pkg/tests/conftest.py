"""
Shared fixture fans.

Ray order matters: it names the Coxeter generators and picks the basis.
"""

import itertools
import json

import networkx as nx
import pytest

from torfan.fan import Fan, barycentric_refine, catalog, is_flag_like, product, star_subdivide, to_document
from torfan.racg import reduce


def rp2() -> Fan:
    return catalog.projective_space(2)


def f1() -> Fan:
    return catalog.hirzebruch(1)


def surface_corpus():
    """Smooth complete 2-fans with 3 to 8 rays, built by blowing up RP^2 and P^1 x P^1."""
    fans = [("rp2+%d" % k, catalog.blowup_chain(rp2(), k)) for k in range(0, 6)]
    fans += [("p1p1+%d" % k, catalog.blowup_chain(catalog.p1_times_p1(), k)) for k in range(0, 5)]
    return fans


def orthant_blowup() -> Fan:
    """The orthant in Z^3 subdivided at e1 + e2 + e3; not flag-like."""
    return star_subdivide(catalog.orthant(3), (0, 1, 2))


def corpus():
    """Named smooth fans used for corpus-wide checks."""
    fans = [
        ("circle", catalog.circle()),
        ("line_pair", catalog.line_pair()),
        ("skew_pair", catalog.connected_skew_pair()),
        ("f1", f1()),
        ("f2", catalog.hirzebruch(2)),
        ("orthant2", catalog.orthant(2)),
        ("orthant3", catalog.orthant(3)),
        ("orthant_blowup", orthant_blowup()),
        ("rp3", catalog.projective_space(3)),
        ("rp1xrp2", product(catalog.circle(), rp2())),
        ("rp2xrp2", product(rp2(), rp2())),
        ("refined_rp2", barycentric_refine(rp2())),
    ]
    return surface_corpus() + fans


def flag_like_corpus():
    """Flag-like corpus fans, plus refinements and products that are flag-like by construction."""
    fans = [(name, fan) for name, fan in corpus() if is_flag_like(fan)]
    fans += [
        ("refined_rp3", barycentric_refine(catalog.projective_space(3))),
        ("refined_orthant_blowup", barycentric_refine(orthant_blowup())),
        ("f1xcircle", product(f1(), catalog.circle())),
        ("p1p1xcircle", product(catalog.p1_times_p1(), catalog.circle())),
    ]
    return fans


def words_up_to(generator_count, max_length):
    for length in range(max_length + 1):
        yield from itertools.product(range(generator_count), repeat=length)


def move_classes(graph, max_length):
    """Union words related by deleting a square or swapping commuting neighbours.

    Any word reaches a reduced one by such moves without getting longer, so two
    words of length <= max_length name the same element iff they end up in one
    class.
    """
    classes = nx.utils.UnionFind()
    for word in words_up_to(graph.generator_count, max_length):
        classes[word]
        for p in range(len(word) - 1):
            a, b = word[p], word[p + 1]
            if a == b:
                classes.union(word, word[:p] + word[p + 2 :])
            elif graph.commutes(a, b):
                classes.union(word, word[:p] + (b, a) + word[p + 2 :])
    return classes


def normal_forms_match_moves(graph, max_length):
    classes = move_classes(graph, max_length)
    forms = {}
    for word in words_up_to(graph.generator_count, max_length):
        forms.setdefault(classes[word], set()).add(reduce(graph, word))
    if any(len(found) != 1 for found in forms.values()):
        return False
    flattened = [next(iter(found)) for found in forms.values()]
    return len(flattened) == len(set(flattened))


def random_rewrite(graph, word, random):
    """Reduce a word by deleting cancelling pairs in random order, shuffling commuting neighbours between deletions.

    A pair i < j cancels when word[i] == word[j] and every letter strictly between
    them commutes with it. A word with no cancelling pair is reduced.
    """
    word = list(word)
    while True:
        for _ in range(len(word) - 1):
            p = random.randrange(len(word) - 1)
            if graph.commutes(word[p], word[p + 1]):
                word[p], word[p + 1] = word[p + 1], word[p]
        pairs = [
            (i, j)
            for i, j in itertools.combinations(range(len(word)), 2)
            if word[i] == word[j] and all(graph.commutes(word[i], x) for x in word[i + 1 : j])
        ]
        if not pairs:
            return tuple(word)
        i, j = random.choice(pairs)
        del word[j]
        del word[i]


@pytest.fixture
def fan_file(tmp_path):
    """Write a fan document to disk and return its path."""

    def write(fan_or_document, name="fan.json"):
        if isinstance(fan_or_document, Fan):
            document = to_document(fan_or_document)
        else:
            document = fan_or_document
        path = tmp_path / name
        path.write_text(json.dumps(document))
        return str(path)

    return write
