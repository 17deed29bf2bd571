"""Partial L-functions as Euler products over abstract Satake data.

A place contributes det(I - rho(t_v) q_v^(-s))^(-1); since only the spectrum
of the semisimple class enters, Satake data is carried as an eigenvalue
multiset rather than any group-element realization.  Products are truncated
at a prime-power cutoff with an explicit convergence-abscissa check (Euler
products diverge gracefully and misleadingly, so a thin margin warns and a
nonpositive margin refuses).

The constant-term ratio prod_j L(a_j s) / L(1 + a_j s) and the symbolic
"crude" functional-equation descriptor relating prod_j L(a_j s) to
prod_j L(1 - a_j s) are built on top.  Archimedean and ramified local
factors are out of numeric scope and appear only as an opaque annotation on
the descriptor; the numeric identity is deliberately not asserted anywhere.
"""

from __future__ import annotations

import math
import re
import warnings
from dataclasses import dataclass

from ._arith import prime_power_base, primes_up_to
from .errors import ConvergenceWarning, DivergenceError, DomainError, PlaceDataError, PoleError

_FACTOR_EXCLUSION = 1e-12
_THIN_MARGIN = 0.1


@dataclass(frozen=True)
class SatakeClass:
    """Eigenvalue multiset of rho(t_v); all eigenvalues nonzero."""

    eigenvalues: tuple[complex, ...]

    def __post_init__(self):
        if not self.eigenvalues:
            raise DomainError("a Satake class needs at least one eigenvalue")
        object.__setattr__(self, "eigenvalues", tuple(complex(e) for e in self.eigenvalues))
        if any(e == 0 for e in self.eigenvalues):
            raise DomainError("Satake eigenvalues must be nonzero")

    @property
    def dim(self) -> int:
        return len(self.eigenvalues)

    def max_log_abs(self) -> float:
        return max(math.log(abs(e)) for e in self.eigenvalues)


@dataclass(frozen=True)
class PlaceDatum:
    """One unramified place: residue cardinality q (a prime power) plus its
    Satake class."""

    q: int
    satake: SatakeClass

    def __post_init__(self):
        if self.q < 2 or prime_power_base(self.q) is None:
            raise DomainError(f"q must be a prime power >= 2, got {self.q}")


@dataclass(frozen=True)
class LFunctionData:
    """Ordered place data for one partial L-function L_S(s, pi, rho).

    Places are kept sorted by q ascending with one datum per q, and every
    Satake class must have the same dimension (one fixed rho).
    """

    places: tuple[PlaceDatum, ...]
    excluded_set_label: str = "S"

    def __post_init__(self):
        places = tuple(sorted(self.places, key=lambda p: p.q))
        object.__setattr__(self, "places", places)
        qs = [p.q for p in places]
        if len(set(qs)) != len(qs):
            dup = sorted({q for q in qs if qs.count(q) > 1})
            raise DomainError(f"duplicate place(s) q = {dup}")
        dims = {p.satake.dim for p in places}
        if len(dims) > 1:
            raise DomainError(f"inconsistent Satake dimensions {sorted(dims)}")

    @property
    def dim(self) -> int:
        return self.places[0].satake.dim if self.places else 0

    def convergence_abscissa(self) -> float:
        """Smallest sigma0 = 1 + max log|lambda| / log q with documented
        convergence for Re(s) > sigma0."""
        if not self.places:
            return 1.0
        return 1.0 + max(p.satake.max_log_abs() / math.log(p.q) for p in self.places)


@dataclass(frozen=True)
class RatioSpec:
    """Graded levels (a_j, L-data) feeding the constant-term ratio product."""

    levels: tuple[tuple[int, LFunctionData], ...]

    def __post_init__(self):
        m = len(self.levels)
        if not 1 <= m <= 8:
            raise DomainError(f"need 1 <= m <= 8 levels, got {m}")
        a_values = [a for a, _ in self.levels]
        if any(a < 1 for a in a_values):
            raise DomainError("level integers a_j must be positive")
        if any(b <= a for a, b in zip(a_values, a_values[1:])):
            raise DomainError(f"a_j must be strictly increasing, got {a_values}")


def trivial_zeta_data(limit: int, label: str = "S") -> LFunctionData:
    """All-ones one-dimensional Satake data at every prime < limit; its Euler
    product is the truncated zeta."""
    one = SatakeClass((1.0 + 0.0j,))
    places = tuple(PlaceDatum(p, one) for p in primes_up_to(limit - 1))
    return LFunctionData(places, label)


def local_factor(place: PlaceDatum, s: complex) -> complex:
    """det(I - rho(t_v) q^(-s))^(-1) = prod_lambda (1 - lambda q^(-s))^(-1)."""
    s = complex(s)
    q_pow = complex(place.q) ** (-s)
    denominator = 1.0 + 0.0j
    for lam in place.satake.eigenvalues:
        factor = 1.0 - lam * q_pow
        if abs(factor) <= _FACTOR_EXCLUSION:
            raise PoleError(
                f"local factor at q = {place.q} vanishes: eigenvalue {lam}, s = {s}"
            )
        denominator *= factor
    return 1.0 / denominator


class LProductValue:
    """Truncated Euler-product value with its multiplicative tail estimate."""

    __slots__ = ("value", "tail_bound", "margin", "factor_count")

    def __init__(self, value, tail_bound, margin, factor_count):
        self.value = value
        self.tail_bound = tail_bound
        self.margin = margin
        self.factor_count = factor_count

    def __repr__(self):
        return (
            f"LProductValue(value={self.value!r}, tail_bound={self.tail_bound!r}, "
            f"margin={self.margin!r}, factor_count={self.factor_count})"
        )


def _tail_estimate(data: LFunctionData, s: complex, max_q: int) -> float:
    # |log L_full/L_truncated| <~ dim * sum_{p > Q} p^(theta - sigma), bounded
    # by the prime-counting integral Q^(1 + theta - sigma)/((sigma - theta - 1) ln Q)
    if not data.places:
        return 0.0
    theta = data.convergence_abscissa() - 1.0
    sigma = complex(s).real
    gap = sigma - theta - 1.0
    q = max(max_q, 2)
    return data.dim * q ** (-gap) / (gap * math.log(q)) * 2.0


def partial_l(data: LFunctionData, s: complex, max_q: int) -> LProductValue:
    """Euler product over the places of ``data`` with q <= max_q.

    Factors multiply left to right in ascending q (fixed reduction order, so
    serial evaluation is bit-reproducible).  DivergenceError outside the
    documented abscissa; ConvergenceWarning when the margin is below 0.1.
    """
    s = complex(s)
    margin = s.real - data.convergence_abscissa()
    if margin <= 0.0:
        raise DivergenceError(
            f"Euler product needs Re(s) > {data.convergence_abscissa():.6g}, got {s.real:.6g}"
        )
    if margin < _THIN_MARGIN:
        warnings.warn(
            f"Euler product margin {margin:.3g} below {_THIN_MARGIN}; "
            "truncation converges slowly",
            ConvergenceWarning,
            stacklevel=2,
        )
    value = 1.0 + 0.0j
    count = 0
    for place in data.places:
        if place.q > max_q:
            break
        value *= local_factor(place, s)
        count += 1
    return LProductValue(value, _tail_estimate(data, s, max_q), margin, count)


def constant_term_ratio(spec: RatioSpec, s: complex, max_q: int) -> complex:
    """prod_j L(a_j s) / L(1 + a_j s) over the spec's graded levels.

    Errors from a constituent product are re-raised with the offending level
    index attached.
    """
    s = complex(s)
    result = 1.0 + 0.0j
    for j, (a, data) in enumerate(spec.levels, start=1):
        try:
            numerator = partial_l(data, a * s, max_q)
            denominator = partial_l(data, 1.0 + a * s, max_q)
        except (PoleError, DivergenceError) as exc:
            raise type(exc)(f"level j = {j} (a_j = {a}): {exc}") from exc
        result *= numerator.value / denominator.value
    return result


@dataclass(frozen=True)
class CrudeEquationLevel:
    """One factor of the crude functional equation: L(a s, dual side) on the
    left matched with L(1 - a s, plain side) on the right."""

    index: int
    a: int
    left_dual: bool = True
    right_dual: bool = False

    def left_argument(self, s: complex) -> complex:
        return self.a * complex(s)

    def right_argument(self, s: complex) -> complex:
        return 1.0 - self.a * complex(s)


@dataclass(frozen=True)
class CrudeEquationDescriptor:
    """Symbolic record of prod_j L_S(a_j s, dual) = prod_j L_S(1 - a_j s)
    x (local factors); no numeric equality is claimed, since the omitted
    local factors at the excluded places are out of scope."""

    levels: tuple[CrudeEquationLevel, ...]
    local_factor_note: str = "local factors at excluded places omitted"

    def argument_pairs(self, s: complex) -> list[tuple[complex, complex]]:
        return [(lv.left_argument(s), lv.right_argument(s)) for lv in self.levels]

    def render(self) -> str:
        def side(lv: CrudeEquationLevel, left: bool) -> str:
            mark = "dual" if (lv.left_dual if left else lv.right_dual) else "std"
            arg = f"{lv.a}s" if left else f"1-{lv.a}s"
            return f"L[{arg},{mark},r{lv.index}]"

        lhs = " * ".join(side(lv, True) for lv in self.levels)
        rhs = " * ".join(side(lv, False) for lv in self.levels)
        return f"{lhs} = {rhs} * (local factors)"

    @classmethod
    def parse(cls, text: str) -> "CrudeEquationDescriptor":
        lhs_text, rhs_text = text.split(" = ", 1)
        rhs_text = rhs_text.rsplit(" * (local factors)", 1)[0]
        pattern = re.compile(r"L\[(?:1-)?(\d+)s,(dual|std),r(\d+)\]")
        lhs = pattern.findall(lhs_text)
        rhs = pattern.findall(rhs_text)
        if len(lhs) != len(rhs) or not lhs:
            raise PlaceDataError(f"cannot parse descriptor: {text!r}")
        levels = []
        for (a_l, mark_l, idx_l), (a_r, mark_r, idx_r) in zip(lhs, rhs):
            if a_l != a_r or idx_l != idx_r:
                raise PlaceDataError(f"mismatched sides in descriptor: {text!r}")
            levels.append(
                CrudeEquationLevel(
                    index=int(idx_l),
                    a=int(a_l),
                    left_dual=mark_l == "dual",
                    right_dual=mark_r == "dual",
                )
            )
        return cls(tuple(levels))

    def to_dict(self) -> dict:
        return {
            "levels": [
                {
                    "index": lv.index,
                    "a": lv.a,
                    "left_dual": lv.left_dual,
                    "right_dual": lv.right_dual,
                }
                for lv in self.levels
            ],
            "local_factor_note": self.local_factor_note,
        }

    @classmethod
    def from_dict(cls, payload: dict) -> "CrudeEquationDescriptor":
        levels = tuple(
            CrudeEquationLevel(
                index=entry["index"],
                a=entry["a"],
                left_dual=entry["left_dual"],
                right_dual=entry["right_dual"],
            )
            for entry in payload["levels"]
        )
        return cls(levels, payload.get("local_factor_note", ""))


def crude_equation_descriptor(spec: RatioSpec) -> CrudeEquationDescriptor:
    """Descriptor pairing L(a_j s, dual) with L(1 - a_j s) per level; drives
    rendering and paired numeric sweeps, never a numeric identity claim."""
    levels = tuple(
        CrudeEquationLevel(index=j, a=a) for j, (a, _) in enumerate(spec.levels, start=1)
    )
    return CrudeEquationDescriptor(levels)


def read_place_data(lines, label: str = "S") -> LFunctionData:
    """Parse the line-oriented place format: ``q re im re im ...`` per place,
    ``#`` starting a comment, blank lines skipped.

    ``lines`` may be a path, an open file, or an iterable of strings.  Raises
    PlaceDataError carrying the 1-based offending line number.
    """
    if isinstance(lines, (str, bytes)):
        with open(lines, "r", encoding="utf-8") as handle:
            return read_place_data(handle, label)
    places = []
    for lineno, raw in enumerate(lines, start=1):
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        fields = text.split()
        try:
            q = int(fields[0])
        except ValueError:
            raise PlaceDataError(f"bad residue cardinality {fields[0]!r}", lineno) from None
        rest = fields[1:]
        if not rest or len(rest) % 2 != 0:
            raise PlaceDataError(
                f"expected an even, positive number of eigenvalue components, got {len(rest)}",
                lineno,
            )
        try:
            comps = [float(tok) for tok in rest]
        except ValueError as exc:
            raise PlaceDataError(str(exc), lineno) from None
        eigenvalues = tuple(
            complex(re_part, im_part) for re_part, im_part in zip(comps[::2], comps[1::2])
        )
        try:
            places.append(PlaceDatum(q, SatakeClass(eigenvalues)))
        except DomainError as exc:
            raise PlaceDataError(str(exc), lineno) from None
    try:
        return LFunctionData(tuple(places), label)
    except DomainError as exc:
        raise PlaceDataError(str(exc)) from None
