"""Canonical staircase presentations in symmetric and alternating groups.

Every permutation of degree n factors uniquely as w_1 ... w_{n-1} where the
j-th factor is a descending run of adjacent transpositions
``s_j s_{j-1} ... s_r`` (possibly empty).  The factor is found by pulling the
value j+1 to its home position from the right, largest value first.

The alternating group of degree m is generated by ``a_k = s_1 s_{k+1}`` for
1 <= k <= m-2; a_1 has order 3 and every other generator is an involution.
Even permutations factor uniquely as v_1 ... v_{m-2} where the j-th factor is
either empty, a descending run ``a_j a_{j-1} ... a_e`` ending at index e >= 1,
or such a run ending in the inverted letter ``a_1^{-1}``.  The factor again
comes from pulling the value j+2 rightwards, with a parity fix-up (one extra
swap of the first two entries) whenever the pull uses an odd number of swaps.

Words are stored structurally, one entry per factor, never as flat letter
lists; occurrence counts and length are O(1) per factor.  Flat letter views
exist for printing and parsing only.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterator

from .perm import Perm, is_even

# Factor encodings.
#   S: factors[j-1] = r        for the run s_j s_{j-1} ... s_r  (1 <= r <= j)
#   A: factors[j-1] = (e, inv) for the run a_j a_{j-1} ... a_e, where inv is
#      True only when e == 1 and the final letter is a_1^{-1}
# None encodes the empty factor in both cases.
SFactor = int
AFactor = tuple[int, bool]


@dataclass(frozen=True)
class SWord:
    """Canonical word in the symmetric group of degree n."""

    n: int
    factors: tuple[SFactor | None, ...]

    def __post_init__(self):
        if self.n < 1 or len(self.factors) != self.n - 1:
            raise ValueError(f"need {self.n - 1} factors for degree {self.n}")
        for j, r in enumerate(self.factors, start=1):
            if r is not None and not 1 <= r <= j:
                raise ValueError(f"factor {j} start {r} outside 1..{j}")

    @property
    def length(self) -> int:
        return sum(j - r + 1 for j, r in enumerate(self.factors, start=1) if r is not None)

    def factor_lengths(self) -> tuple[int, ...]:
        return tuple(0 if r is None else j - r + 1 for j, r in enumerate(self.factors, start=1))

    def letters(self) -> list[int]:
        """Flat generator indices, leftmost letter first."""
        out = []
        for j, r in enumerate(self.factors, start=1):
            if r is not None:
                out.extend(range(j, r - 1, -1))
        return out


@dataclass(frozen=True)
class AWord:
    """Canonical word in the alternating group of degree m."""

    m: int
    factors: tuple[AFactor | None, ...]

    def __post_init__(self):
        if self.m < 1 or len(self.factors) != max(0, self.m - 2):
            raise ValueError(f"need {max(0, self.m - 2)} factors for degree {self.m}")
        for j, f in enumerate(self.factors, start=1):
            if f is None:
                continue
            e, inv = f
            if not 1 <= e <= j:
                raise ValueError(f"factor {j} end {e} outside 1..{j}")
            if inv and e != 1:
                raise ValueError(f"factor {j}: only a final a_1 may be inverted")

    @property
    def length(self) -> int:
        return sum(j - f[0] + 1 for j, f in enumerate(self.factors, start=1) if f is not None)

    def factor_lengths(self) -> tuple[int, ...]:
        return tuple(0 if f is None else j - f[0] + 1 for j, f in enumerate(self.factors, start=1))

    def letters(self) -> list[tuple[int, bool]]:
        """Flat (index, inverted) letter pairs, leftmost letter first."""
        out = []
        for j, f in enumerate(self.factors, start=1):
            if f is None:
                continue
            e, inv = f
            out.extend((k, False) for k in range(j, e, -1))
            out.append((e, inv))
        return out


def s_canonical(w: Perm) -> SWord:
    """Factor w into its unique staircase word.

    >>> s_word_pretty(s_canonical((2, 5, 4, 1, 3)))
    's1 | 1 | s3 s2 | s4 s3 s2'
    """
    n = len(w)
    work = list(w)
    factors: list[SFactor | None] = [None] * (n - 1)
    for top in range(n, 1, -1):
        r = work.index(top) + 1
        if r == top:
            continue
        for pos in range(r - 1, top - 1):
            work[pos], work[pos + 1] = work[pos + 1], work[pos]
        factors[top - 2] = r
    return SWord(n, tuple(factors))


def s_word_to_perm(word: SWord) -> Perm:
    """Multiply the factors back out, leftmost factor first."""
    work = list(range(1, word.n + 1))
    for j, r in enumerate(word.factors, start=1):
        if r is None:
            continue
        for i in range(j, r - 1, -1):
            work[i - 1], work[i] = work[i], work[i - 1]
    return tuple(work)


def a_canonical(v: Perm) -> AWord:
    """Factor an even permutation into its unique staircase word.

    >>> a_word_pretty(a_canonical((3, 5, 4, 2, 1)))
    'a1 | a2 a1^-1 | a3 a2 a1'
    """
    m = len(v)
    if not is_even(v):
        raise ValueError(f"{list(v)} is odd; only even permutations have a word")
    work = list(v)
    factors: list[AFactor | None] = [None] * max(0, m - 2)
    for top in range(m, 2, -1):
        r = work.index(top) + 1
        if r == top:
            continue
        for pos in range(r - 1, top - 1):
            work[pos], work[pos + 1] = work[pos + 1], work[pos]
        if (top - r) % 2 == 1:
            work[0], work[1] = work[1], work[0]
        # Pull position r fixes the factor: position 1 is the inverted tail,
        # position r >= 2 the plain run down to a_{r-1}.
        factors[top - 3] = (1, True) if r == 1 else (r - 1, False)
    return AWord(m, tuple(factors))


def a_word_to_perm(word: AWord) -> Perm:
    """Multiply the factors back out, leftmost factor first."""
    work = list(range(1, word.m + 1))
    for j, f in enumerate(word.factors, start=1):
        if f is None:
            continue
        e, inv = f
        for k in range(j, e, -1):
            work[0], work[1] = work[1], work[0]
            work[k], work[k + 1] = work[k + 1], work[k]
        if inv:
            work[1], work[2] = work[2], work[1]
            work[0], work[1] = work[1], work[0]
        else:
            work[0], work[1] = work[1], work[0]
            work[e], work[e + 1] = work[e + 1], work[e]
    return tuple(work)


def occurrences_s(word: SWord, k: int) -> int:
    """How many times the generator s_k appears across the factors."""
    if not 1 <= k <= word.n - 1:
        raise ValueError(f"generator index {k} outside 1..{word.n - 1}")
    return sum(1 for j, r in enumerate(word.factors, start=1) if r is not None and r <= k <= j)


def occurrences_a(word: AWord, k: int) -> int:
    """How many times a_k appears; for k = 1 both a_1 and a_1^{-1} count."""
    if not 1 <= k <= word.m - 2:
        raise ValueError(f"generator index {k} outside 1..{word.m - 2}")
    return sum(1 for j, f in enumerate(word.factors, start=1) if f is not None and f[0] <= k <= j)


def epsilon_s(w: Perm) -> tuple[int, ...]:
    """Indicator per factor of a full run reaching s_1.

    >>> epsilon_s((2, 5, 4, 1, 3))
    (1, 0, 0, 0)
    """
    return tuple(1 if r == 1 else 0 for r in s_canonical(w).factors)


def epsilon_a(v: Perm) -> tuple[int, ...]:
    """Indicator per factor of a run ending in a_1 or a_1^{-1}."""
    return tuple(1 if f is not None and f[0] == 1 else 0 for f in a_canonical(v).factors)


def t_vector(w: Perm) -> tuple[int, ...]:
    """For each value j = 2..n, how many smaller values sit to its right.

    Entry j-2 equals the length of canonical factor j-1, so the vector reads
    off the factor lengths without running the factorisation.

    >>> t_vector((2, 5, 4, 1, 3))
    (1, 0, 2, 3)
    """
    n = len(w)
    pos = [0] * (n + 1)
    for p, x in enumerate(w, start=1):
        pos[x] = p
    return tuple(sum(1 for i in range(1, j) if pos[i] > pos[j]) for j in range(2, n + 1))


def s_image(word: AWord) -> SWord:
    """Letterwise projection onto the symmetric group one degree down.

    Each letter a_k maps to s_k, collapsing a_1 and a_1^{-1} together, so a
    factor keeps its run shape and just forgets the inversion mark.
    """
    return SWord(word.m - 1, tuple(None if f is None else f[0] for f in word.factors))


def a_lifts(word: SWord) -> Iterator[AWord]:
    """All alternating words projecting onto the given word, one degree up.

    Factors not reaching s_1 lift uniquely; each factor ending in s_1 lifts
    two ways, so the number of lifts is 2 to the number of such factors.
    """
    choices: list[list[AFactor | None]] = []
    for r in word.factors:
        if r is None:
            choices.append([None])
        elif r == 1:
            choices.append([(1, False), (1, True)])
        else:
            choices.append([(r, False)])
    for combo in itertools.product(*choices):
        yield AWord(word.n + 1, tuple(combo))


# -- flat letter views ------------------------------------------------------

_S_TOKEN = re.compile(r"s(\d+)$")
_A_TOKEN = re.compile(r"a(\d+)(\^-1)?$")


def s_word_pretty(word: SWord) -> str:
    """Factors joined by ' | ', empty factors shown as '1'."""
    if not word.factors:
        return "1"
    parts = []
    for j, r in enumerate(word.factors, start=1):
        parts.append("1" if r is None else " ".join(f"s{i}" for i in range(j, r - 1, -1)))
    return " | ".join(parts)


def a_word_pretty(word: AWord) -> str:
    if not word.factors:
        return "1"
    parts = []
    for j, f in enumerate(word.factors, start=1):
        if f is None:
            parts.append("1")
            continue
        e, inv = f
        letters = [f"a{k}" for k in range(j, e - 1, -1)]
        if inv:
            letters[-1] = "a1^-1"
        parts.append(" ".join(letters))
    return " | ".join(parts)


def parse_s_letters(text: str) -> list[int]:
    """Parse a flat word like 's1 s2 s1 s3'; '|' and '1' tokens are ignored."""
    letters = []
    for tok in text.replace("|", " ").split():
        if tok == "1":
            continue
        m = _S_TOKEN.match(tok)
        if not m:
            raise ValueError(f"bad letter {tok!r}; expected s<k>")
        letters.append(int(m.group(1)))
    return letters


def parse_a_letters(text: str) -> list[tuple[int, bool]]:
    """Parse a flat word like 'a1 a2 a1^-1'; only a1 may carry ^-1."""
    letters = []
    for tok in text.replace("|", " ").split():
        if tok == "1":
            continue
        m = _A_TOKEN.match(tok)
        if not m:
            raise ValueError(f"bad letter {tok!r}; expected a<k> or a1^-1")
        k, inv = int(m.group(1)), m.group(2) is not None
        if inv and k != 1:
            raise ValueError(f"bad letter {tok!r}; only a1 has a distinct inverse")
        letters.append((k, inv))
    return letters


def eval_s_letters(n: int, letters: list[int]) -> Perm:
    """Right-multiply the identity of degree n by the given s-letters."""
    work = list(range(1, n + 1))
    for k in letters:
        if not 1 <= k <= n - 1:
            raise ValueError(f"letter s{k} needs degree at least {k + 1}")
        work[k - 1], work[k] = work[k], work[k - 1]
    return tuple(work)


def eval_a_letters(m: int, letters: list[tuple[int, bool]]) -> Perm:
    """Right-multiply the identity of degree m by the given a-letters."""
    work = list(range(1, m + 1))
    for k, inv in letters:
        if not 1 <= k <= m - 2:
            raise ValueError(f"letter a{k} needs degree at least {k + 2}")
        if inv:
            work[1], work[2] = work[2], work[1]
            work[0], work[1] = work[1], work[0]
        else:
            work[0], work[1] = work[1], work[0]
            work[k], work[k + 1] = work[k + 1], work[k]
    return tuple(work)


def word_to_json(word: SWord | AWord) -> list[dict]:
    """Nonempty factors as JSON objects; alternating words carry 'last'."""
    out = []
    if isinstance(word, SWord):
        for j, r in enumerate(word.factors, start=1):
            if r is not None:
                out.append({"j": j, "r": r})
    else:
        for j, f in enumerate(word.factors, start=1):
            if f is None:
                continue
            e, inv = f
            last = None if e > 1 else ("a1inv" if inv else "a1")
            out.append({"j": j, "r": e, "last": last})
    return out
