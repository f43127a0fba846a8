"""Piecewise-linear interpolants of the renormalized depth rows.

Level n places the grid value at column k, divided by 2**((n-1)(n-2)/2),
at abscissa k / 2**(n-1), interpolates linearly between neighbours, and is
identically zero left of the origin.  All evaluation is exact dyadic
arithmetic.  The same family is reproduced dynamically by driving a
lower-triangular shift operator with the parity signs, which provides an
independent cross-check on the whole construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .dyadic import Dyadic, ZERO
from .errors import EvaluationRangeError
from .seqcore import thue_morse
from .triangle import DEFAULT_CELL_BUDGET, InitSpec, scale_exponent, triangle_row


class PiecewiseLinearApproximant:
    """Level-n interpolant backed by one integer depth row.

    ``raw[k]`` is the unscaled grid value at column k; node ordinates are
    raw[k] / 2**scale.  The instance never mutates its row.
    """

    __slots__ = ("level", "raw", "scale")

    def __init__(self, level: int, raw_row):
        if level < 1:
            raise ValueError(f"level must be >= 1, got {level}")
        self.level = level
        self.raw = raw_row
        self.scale = scale_exponent(level)

    @classmethod
    def build(
        cls,
        level: int,
        k_max: int | None = None,
        *,
        x_max=None,
        init: InitSpec | None = None,
        cache=None,
        max_cells: int = DEFAULT_CELL_BUDGET,
    ) -> "PiecewiseLinearApproximant":
        """Construct from the grid, sized by node count or by abscissa reach."""
        if k_max is None:
            if x_max is None:
                raise ValueError("give either k_max or x_max")
            hi = Dyadic.of(x_max)
            k_max = max(hi.floor_times_pow2(level - 1) + 1, 1)
        row = triangle_row(level, k_max, init, cache=cache, max_cells=max_cells)
        return cls(level, row)

    @property
    def k_max(self) -> int:
        return len(self.raw) - 1

    @property
    def step(self) -> Dyadic:
        return Dyadic(1, self.level - 1)

    @property
    def x_max(self) -> Dyadic:
        return Dyadic(self.k_max, self.level - 1)

    def abscissa(self, k: int) -> Dyadic:
        return Dyadic(k, self.level - 1)

    def node(self, k: int) -> Dyadic:
        return Dyadic(self.raw[k], self.scale)

    def eval(self, x) -> Dyadic:
        """Exact value at a dyadic point; zero for x <= 0.

        Points beyond the built row raise EvaluationRangeError, distinct
        from the implicit zero extension on the left.
        """
        x = Dyadic.of(x)
        if x <= 0:
            return ZERO
        k = x.floor_times_pow2(self.level - 1)
        if k > self.k_max:
            raise EvaluationRangeError(
                f"x={x} beyond built range (x_max={self.x_max})"
            )
        delta = x - self.abscissa(k)
        if not delta:
            return self.node(k)
        if k + 1 > self.k_max:
            raise EvaluationRangeError(
                f"x={x} beyond built range (x_max={self.x_max})"
            )
        rise = self.node(k + 1) - self.node(k)
        return self.node(k) + delta.times_pow2(self.level - 1) * rise

    __call__ = eval


def node_value(level: int, k: int, *, cache=None, max_cells: int = DEFAULT_CELL_BUDGET) -> Dyadic:
    """Node ordinate at grid index k of the given level."""
    if k < 0:
        raise ValueError(f"node index must be >= 0, got {k}")
    approx = PiecewiseLinearApproximant.build(
        level, k_max=max(k, 1), cache=cache, max_cells=max_cells
    )
    return approx.node(k)


def eval_at(level: int, x, *, cache=None, max_cells: int = DEFAULT_CELL_BUDGET) -> Dyadic:
    """One-shot exact evaluation, building just enough of the grid."""
    x = Dyadic.of(x)
    if x <= 0:
        return ZERO
    approx = PiecewiseLinearApproximant.build(level, x_max=x, cache=cache, max_cells=max_cells)
    return approx.eval(x)


def limit_at_integer(m: int) -> int:
    """Exact limit value at an integer: 0 when even or <= 0, parity sign when odd.

    These values are already attained by every finite level, which is what
    makes them usable as anchors for enclosing the limit elsewhere.
    """
    if m <= 0 or m % 2 == 0:
        return 0
    return thue_morse((m - 1) // 2)


@dataclass(frozen=True)
class IntervalEstimate:
    """Interval guaranteed to contain the level limit at one point."""

    lower: Dyadic
    upper: Dyadic
    level_reached: int
    converged: bool

    @property
    def width(self) -> Dyadic:
        return self.upper - self.lower


def enclose_limit(
    x,
    tol,
    max_level: int = 12,
    *,
    cone_slope: int = 2,
    cache=None,
    max_cells: int = DEFAULT_CELL_BUDGET,
) -> IntervalEstimate:
    """Two-sided enclosure of the pointwise limit of the level sequence.

    One side comes from the last computed level: between consecutive even
    integers the level sequence at a fixed point is monotone, with the
    direction set by the parity sign of the pair interval and flipped on
    its right half.  The other side hangs cones of slope ``cone_slope``
    off the exact integer values, clipped to the global range [-1, 1].

    Every level is 2-Lipschitz (consecutive-node jumps equal the previous
    level's node values scaled by 2**(2-level), which are bounded by 1),
    and that survives the pointwise limit, so the default slope 2 yields a
    guaranteed interval.  ``cone_slope=1`` gives tighter intervals that
    match the family's per-parent-cell jump rate but rest on a unit
    Lipschitz claim the interpolants themselves violate; it is heuristic,
    and whenever such a cone strictly contradicts the (always sound)
    monotone bound it is discarded in favour of the range bound.  Hitting
    the level cap before ``tol`` is reported via ``converged=False``, not
    an exception.
    """
    x = Dyadic.of(x)
    tol = Dyadic.of(tol)
    if x < 0:
        raise ValueError(f"x must be >= 0, got {x}")
    if not tol > 0:
        raise ValueError("tol must be positive")
    if max_level < 2:
        raise ValueError("max_level must be >= 2")
    if x.is_integer:
        v = Dyadic(limit_at_integer(x.mantissa))
        return IntervalEstimate(v, v, 1, True)

    i0 = x.floor_times_pow2(0)
    lo_anchor, hi_anchor = Dyadic(limit_at_integer(i0)), Dyadic(limit_at_integer(i0 + 1))
    d0, d1 = x - i0, (i0 + 1) - x
    pair, right_half = divmod(i0, 2)
    decreasing = (thue_morse(pair) == -1) == (right_half == 0)

    cone_lower = max(lo_anchor - cone_slope * d0, hi_anchor - cone_slope * d1, Dyadic(-1))
    cone_upper = min(lo_anchor + cone_slope * d0, hi_anchor + cone_slope * d1, Dyadic(1))

    # A heuristic cone (slope < 2) may be grazed by the monotone bound one
    # level before being crossed, so a stop there must be confirmed by the
    # next level; a refuted cone is dropped for good.
    confirm = cone_slope < 2
    cone_alive = True
    prev_within = False
    lower, upper = Dyadic(-1), Dyadic(1)
    level = 1
    for level in range(2, max_level + 1):
        f = eval_at(level, x, cache=cache, max_cells=max_cells)
        if decreasing:
            upper = f
            if cone_alive and cone_lower > upper:
                cone_alive = False
            lower = cone_lower if cone_alive else Dyadic(-1)
        else:
            lower = f
            if cone_alive and cone_upper < lower:
                cone_alive = False
            upper = cone_upper if cone_alive else Dyadic(1)
        within = upper - lower <= tol
        if within and (not confirm or prev_within):
            return IntervalEstimate(lower, upper, level, True)
        prev_within = within
    return IntervalEstimate(lower, upper, level, False)


@dataclass(frozen=True)
class SequenceState:
    """Finite truncation of the driven orbit: exact rational coordinates."""

    coords: tuple[Fraction, ...]
    step: int = 0


def shift_operator(state: SequenceState) -> SequenceState:
    """Apply the lower-triangular map once, without driving input.

    Coordinate 1 is kept; coordinate i >= 2 becomes y_i + y_{i-1} / 2**(i-2).
    Because coordinate i only reads coordinates <= i, truncating to finitely
    many coordinates is exact.
    """
    y = state.coords
    if not y:
        raise ValueError("state must have at least one coordinate")
    moved = [y[0]]
    moved.extend(y[j] + y[j - 1] / (1 << (j - 1)) for j in range(1, len(y)))
    return SequenceState(tuple(moved), state.step)


def shift_orbit(step_count: int, depth: int) -> list[SequenceState]:
    """Orbit y^0 .. y^step_count of the parity-driven iteration.

    Each step applies the shift operator and subtracts the current parity
    sign from the first coordinate.  The orbit reproduces the negated node
    ordinates coordinate by coordinate, which the verification suite checks
    against the grid route.
    """
    if step_count < 1 or depth < 1:
        raise ValueError("step_count and depth must be >= 1")
    states = [SequenceState((Fraction(0),) * depth, 0)]
    for k in range(step_count):
        moved = shift_operator(states[-1]).coords
        driven = (moved[0] - thue_morse(k),) + moved[1:]
        states.append(SequenceState(driven, k + 1))
    return states
