"""Input sequences: the +-1 parity sequence and its Sturmian counterparts.

Signs are plain ints restricted to {-1, +1}; rational parameters are
``fractions.Fraction`` values kept exact throughout.
"""

from __future__ import annotations

from fractions import Fraction


def thue_morse(n: int) -> int:
    """Sign at index n: +1 when n has an odd number of 1-bits, else -1.

    Indexing starts at -1, i.e. the fixed point of the doubling substitution
    seeded with the letter -1, so the sequence opens -1, 1, 1, -1, ...
    """
    if n < 0:
        raise ValueError(f"index must be >= 0, got {n}")
    return 1 if n.bit_count() & 1 else -1


def thue_morse_prefix(count: int) -> list[int]:
    """First ``count`` signs built by iterating the doubling substitution.

    Each pass rewrites every letter s to the pair (s, -s); starting from
    [-1] this converges letterwise, so iterating until the word is long
    enough and truncating gives the prefix.  Independent of thue_morse(),
    which makes the two constructions usable as mutual cross-checks.
    """
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    word = [-1]
    while len(word) < count:
        word = [x for s in word for x in (s, -s)]
    return word[:count]


def _checked_unit_interval(alpha) -> Fraction:
    alpha = Fraction(alpha)
    if not 0 <= alpha <= 1:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    return alpha


def sturmian_letter(alpha, n: int) -> int:
    """Letter n of the slope-``alpha`` floor-difference word, in {0, 1}."""
    alpha = _checked_unit_interval(alpha)
    if n < 0:
        raise ValueError(f"index must be >= 0, got {n}")
    p, q = alpha.numerator, alpha.denominator
    return ((n + 1) * p) // q - (n * p) // q


def sturmian_increment(alpha, n: int) -> Fraction:
    """Centered companion of the word: alpha on letter 0, alpha - 1 on letter 1.

    Its partial sums telescope to the fractional part {n * alpha}, which is
    why the first accumulated column stays bounded.
    """
    alpha = _checked_unit_interval(alpha)
    return alpha if sturmian_letter(alpha, n) == 0 else alpha - 1
