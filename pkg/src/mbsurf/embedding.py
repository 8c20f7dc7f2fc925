"""3-sphere embedding: the torsion obstruction and a constructive certificate.

A regular multibranched surface embeds in some closed orientable
3-manifold; to sit inside the 3-sphere its first homology must in addition
be torsion free, since every subcomplex of the 3-sphere has torsion-free
H1.  ``s3_obstruction`` reports which of these necessary conditions fails.

For the one-sector family with degrees (p1, p2, p3), pairwise coprime in
the gcd-of-all-three sense, ``construct_certificate`` produces the
arithmetic core of an actual embedding for large enough sector genus:
pairwise linking numbers (a12, a13, a23) of a 3-component link together
with cable slopes q_i such that

* ``q_i + sum_j a_ij * p_j == 0`` for each i (each cable has total linking
  zero with every companion component, so a spanning surface for the cable
  link can be pushed off the companions), and
* ``gcd(p_i, q_i) == 1`` (each q_i/p_i is a genuine cable slope).

A closed pure 3-braid realizing the linking numbers is attached;
``linking_matrix_of_braid`` recomputes its linking matrix independently by
signed crossing counting, which the tests use as an oracle.  The
certificate stays at the arithmetic level: it does not construct the
spanning surface or bound the genus needed.
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass

from .homology import homology_h1
from .surfaces import MultibranchedSurface, is_regular


@dataclass(frozen=True)
class LinkingMatrix:
    """Pairwise linking numbers of a 3-component link (diagonal undefined)."""

    a12: int
    a13: int
    a23: int

    def lk(self, i: int, j: int) -> int:
        pair = frozenset((i, j))
        table = {frozenset((1, 2)): self.a12, frozenset((1, 3)): self.a13, frozenset((2, 3)): self.a23}
        if pair not in table:
            raise ValueError(f"component pair ({i}, {j}) is not a pair of distinct indices in 1..3")
        return table[pair]

    def as_rows(self) -> list[list[int]]:
        return [[0, self.a12, self.a13], [self.a12, 0, self.a23], [self.a13, self.a23, 0]]


@dataclass(frozen=True)
class BraidWord:
    """Word in the 3-strand braid group, run-length encoded.

    Stored canonically: exponents are nonzero and adjacent runs use
    distinct generators (construction freely reduces its input).  The text
    form is whitespace-separated tokens ``s1^k`` / ``s2^k`` with ``^1``
    elided.
    """

    word: tuple[tuple[int, int], ...] = ()
    strands: int = 3

    def __post_init__(self) -> None:
        if self.strands != 3:
            raise ValueError("only 3-strand words are supported")
        reduced: list[tuple[int, int]] = []
        for gen, exp in self.word:
            if not isinstance(gen, int) or gen not in (1, 2):
                raise ValueError(f"generator index must be 1 or 2, got {gen!r}")
            if not isinstance(exp, int):
                raise ValueError(f"exponent must be an integer, got {exp!r}")
            if exp == 0:
                continue
            if reduced and reduced[-1][0] == gen:
                exp += reduced.pop()[1]
            if exp:
                reduced.append((gen, exp))
        object.__setattr__(self, "word", tuple(reduced))

    def permutation(self) -> tuple[int, int, int]:
        """Where each starting position ends up after the braid."""
        pos = [0, 1, 2]
        for gen, exp in self.word:
            if exp % 2:
                i = gen - 1
                pos[i], pos[i + 1] = pos[i + 1], pos[i]
        return tuple(pos)

    @property
    def is_pure(self) -> bool:
        return self.permutation() == (0, 1, 2)

    def __str__(self) -> str:
        return " ".join(f"s{g}" if e == 1 else f"s{g}^{e}" for g, e in self.word)


_BRAID_TOKEN = re.compile(r"s([12])(?:\^(-?\d+))?\Z")


def parse_braid_word(text: str) -> BraidWord:
    """Parse the braid text form; the empty string is the empty word."""
    runs = []
    for token in text.split():
        match = _BRAID_TOKEN.match(token)
        if match is None:
            raise ValueError(f"bad braid token {token!r} (expected s1^k or s2^k)")
        exp = int(match.group(2)) if match.group(2) is not None else 1
        if exp == 0:
            raise ValueError(f"zero exponent in braid token {token!r}")
        runs.append((int(match.group(1)), exp))
    return BraidWord(tuple(runs))


def pure_braid_word(a12: int, a13: int, a23: int) -> BraidWord:
    """Closed 3-braid whose closure realizes the given pairwise linking numbers.

    Concatenates the full-twist blocks ``s1^(2*a12)``,
    ``s2 s1^(2*a13) s2^-1`` and ``s2^(2*a23)``; free reduction normalizes
    the result.  Each block is a pure braid, so the closure always has
    three components.
    """
    runs = ((1, 2 * a12), (2, 1), (1, 2 * a13), (2, -1), (2, 2 * a23))
    return BraidWord(runs)


def linking_matrix_of_braid(word: BraidWord) -> LinkingMatrix:
    """Linking numbers of the closure: half the signed crossing count
    between each pair of strands, tracked through the word.

    A run ``(g, k)`` contributes k signed crossings between the two strands
    currently at positions g and g+1 and swaps them when k is odd.  The
    word must be pure (identity permutation), else the closure has fewer
    than three components and the pairwise numbers are undefined.
    """
    pos = [0, 1, 2]
    counts = {(0, 1): 0, (0, 2): 0, (1, 2): 0}
    for gen, exp in word.word:
        i = gen - 1
        s, t = pos[i], pos[i + 1]
        counts[(s, t) if s < t else (t, s)] += exp
        if exp % 2:
            pos[i], pos[i + 1] = pos[i + 1], pos[i]
    if pos != [0, 1, 2]:
        raise ValueError("braid word is not pure: closure has fewer than 3 components")
    # strands of a pure braid cross each other an even number of times
    assert all(c % 2 == 0 for c in counts.values())
    return LinkingMatrix(counts[(0, 1)] // 2, counts[(0, 2)] // 2, counts[(1, 2)] // 2)


def coprime_split(a: int, m: int) -> tuple[int, int]:
    """Split ``a = alpha * rest`` with ``gcd(alpha, m) == 1`` and every prime
    factor of ``rest`` dividing ``m``.

    Runs on repeated gcds alone (no factorization): divide out
    ``gcd(alpha, m)`` until coprime.  The split is unique, since each prime
    power of ``a`` lands wholly in ``alpha`` or wholly in ``rest``.
    """
    if a < 1 or m < 1:
        raise ValueError(f"coprime_split needs positive inputs, got ({a}, {m})")
    alpha = a
    g = math.gcd(alpha, m)
    while g > 1:
        alpha //= g
        g = math.gcd(alpha, m)
    return alpha, a // alpha


def _witness_odd_last(a: int, b: int, c: int) -> tuple[int, int, int]:
    # Requires c odd.  alpha, beta are the c-coprime parts of a and b;
    # gamma is the ab-coprime part of c.
    alpha, _ = coprime_split(a, c)
    beta, _ = coprime_split(b, c)
    gamma, _ = coprime_split(c, a * b)
    x = alpha * beta
    return x, -b * x + gamma, -a * x + gamma


def lemma_witness(a: int, b: int, c: int) -> tuple[int, int, int]:
    """Integers (x, y, z) such that

        gcd(a, b*x + c*y) == gcd(b, a*x + c*z) == gcd(c, a*y + b*z) == 1

    for any a, b, c > 1 with gcd(a, b, c) == 1.  The variables are indexed
    by pairs: x ~ {1,2}, y ~ {1,3}, z ~ {2,3}, and the system is symmetric
    under permuting (a, b, c) together with the pair-indexed variables.

    The construction needs its last argument odd, so the inputs are left-
    rotated first (gcd 1 rules out all three being even) and the solved
    variables are rotated back through the pair-index correspondence.
    """
    if min(a, b, c) <= 1:
        raise ValueError(f"inputs must all exceed 1, got ({a}, {b}, {c})")
    g = math.gcd(a, b, c)
    if g != 1:
        raise ValueError(f"gcd(a, b, c) = {g} > 1")
    values = (a, b, c)
    for shift in range(3):
        rotated = (values[shift % 3], values[(shift + 1) % 3], values[(shift + 2) % 3])
        if rotated[2] % 2 == 1:
            break
    solved = _witness_odd_last(*rotated)
    return tuple(solved[(i + shift) % 3] for i in range(3))


def witness_sums(a: int, b: int, c: int, x: int, y: int, z: int) -> tuple[int, int, int]:
    """The three combinations whose coprimality the witness guarantees."""
    return b * x + c * y, a * x + c * z, a * y + b * z


@dataclass(frozen=True)
class EmbeddingCertificate:
    """Arithmetic witness that the genus-large family member embeds.

    ``slopes`` holds the meridional coefficients (q1, q2, q3) paired with
    the covering degrees; ``zero_linking`` and ``coprime`` record the
    verified identities ``q_i + sum_j a_ij p_j == 0`` and
    ``gcd(p_i, q_i) == 1``.
    """

    degrees: tuple[int, int, int]
    linking: LinkingMatrix
    slopes: tuple[int, int, int]
    zero_linking: tuple[bool, bool, bool]
    coprime: tuple[bool, bool, bool]
    braid: BraidWord

    def linking_sums(self) -> tuple[int, int, int]:
        """lk(l_i, K) for the three components; all zero for a valid certificate."""
        p1, p2, p3 = self.degrees
        q1, q2, q3 = self.slopes
        a = self.linking
        return (q1 + a.a12 * p2 + a.a13 * p3,
                q2 + a.a12 * p1 + a.a23 * p3,
                q3 + a.a13 * p1 + a.a23 * p2)

    @property
    def valid(self) -> bool:
        return all(self.zero_linking) and all(self.coprime)


def construct_certificate(p1: int, p2: int, p3: int) -> EmbeddingCertificate:
    """Build the full arithmetic certificate for degrees with gcd 1.

    The linking numbers come from ``lemma_witness``; each slope is then
    forced, ``q_i = -(sum of the other two a_ij * p_j)``, which makes the
    total linking of each cable with the companion components vanish, and
    the witness guarantees ``gcd(p_i, q_i) = 1``.
    """
    if min(p1, p2, p3) <= 1:
        raise ValueError(f"degrees must all exceed 1, got ({p1}, {p2}, {p3})")
    g = math.gcd(p1, p2, p3)
    if g != 1:
        raise ValueError(f"gcd(p1, p2, p3) = {g} > 1: the torsion obstruction applies")
    a12, a13, a23 = lemma_witness(p1, p2, p3)
    q1 = -(a12 * p2 + a13 * p3)
    q2 = -(a12 * p1 + a23 * p3)
    q3 = -(a13 * p1 + a23 * p2)
    linking = LinkingMatrix(a12, a13, a23)
    cert = EmbeddingCertificate(
        degrees=(p1, p2, p3),
        linking=linking,
        slopes=(q1, q2, q3),
        zero_linking=(True, True, True),
        coprime=(math.gcd(p1, q1) == 1, math.gcd(p2, q2) == 1, math.gcd(p3, q3) == 1),
        braid=pure_braid_word(a12, a13, a23),
    )
    assert cert.linking_sums() == (0, 0, 0)
    return cert


class ObstructionVerdict(enum.Enum):
    NOT_EMBEDDABLE_ANY_CLOSED_ORIENTABLE_3MANIFOLD = "NotEmbeddableAnyClosedOrientable3Manifold"
    OBSTRUCTED_IN_S3 = "ObstructedInS3"
    NO_OBSTRUCTION_FOUND = "NoObstructionFound"


@dataclass(frozen=True)
class ObstructionReport:
    regular: bool
    torsion: tuple[int, ...]
    verdict: ObstructionVerdict


def s3_obstruction(surface: MultibranchedSurface) -> ObstructionReport:
    """Check the two necessary conditions for a 3-sphere embedding.

    An irregular surface embeds in no closed orientable 3-manifold at all;
    a regular surface with torsion in H1 embeds in some 3-manifold but not
    in the 3-sphere.  ``NO_OBSTRUCTION_FOUND`` asserts only the absence of
    these obstructions, never embeddability at a particular genus.
    """
    regular = is_regular(surface)
    torsion = homology_h1(surface).torsion
    if not regular:
        verdict = ObstructionVerdict.NOT_EMBEDDABLE_ANY_CLOSED_ORIENTABLE_3MANIFOLD
    elif torsion:
        verdict = ObstructionVerdict.OBSTRUCTED_IN_S3
    else:
        verdict = ObstructionVerdict.NO_OBSTRUCTION_FOUND
    return ObstructionReport(regular, torsion, verdict)
