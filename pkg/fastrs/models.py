from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from fastrs.errors import IndexViolation, MalformedInput, OddT0

FieldElement = int
LchPoly = List[FieldElement]
MonoPoly = List[FieldElement]


@dataclass
class OpCounter:
    """Tally of field operations for one instrumented scope."""
    mul: int = 0
    add: int = 0
    inv: int = 0

    def as_tuple(self):
        return self.mul, self.add, self.inv


@dataclass(frozen=True)
class CodeParams:
    m: int
    mu: int
    t0: Optional[int] = None
    shortened_length: Optional[int] = None

    def __post_init__(self):
        if self.mu < 2 or self.mu >= self.m:
            raise MalformedInput('mu must satisfy 2 <= mu < m, got mu=%d m=%d' % (self.mu, self.m))
        if self.t0 is None:
            object.__setattr__(self, 't0', self.t)
        if self.t0 % 2:
            raise OddT0('t0 must be even, got %d' % self.t0)
        if not 0 <= self.t0 < 2 * self.t:
            raise MalformedInput('t0 must lie in [0, 2t), got %d' % self.t0)
        if self.shortened_length is not None:
            if not self.n - self.k < self.shortened_length <= self.n:
                raise MalformedInput('shortened length %d out of range' % self.shortened_length)

    @property
    def n(self):
        return 1 << self.m

    @property
    def T(self):
        return 1 << self.mu

    @property
    def k(self):
        return self.n - self.T

    @property
    def t(self):
        return 1 << (self.mu - 1)

    @property
    def block_count(self):
        return 1 << (self.m - self.mu)

    @property
    def deleted(self):
        """Leading data positions removed by the shortened view."""
        if self.shortened_length is None:
            return 0
        return self.n - self.shortened_length


@dataclass
class ErrorPattern:
    entries: Dict[int, FieldElement] = field(default_factory=dict)

    @property
    def e(self):
        return len(self.entries)

    @property
    def positions(self):
        return sorted(self.entries)

    def validate(self, params, unsafe=False):
        for index, value in self.entries.items():
            if not 0 <= index < params.n:
                raise IndexViolation('error index %d outside the code' % index)
            if not unsafe and index < 2 * params.t:
                raise IndexViolation('error index %d below 2t=%d' % (index, 2 * params.t))
            if value == 0 or value >> params.m:
                raise MalformedInput('error value %#x at %d is not a nonzero symbol' % (value, index))

    def __eq__(self, other):
        if not isinstance(other, ErrorPattern):
            return NotImplemented
        return self.entries == other.entries


@dataclass
class SyndromeBundle:
    s_lch: LchPoly
    s_evals: List[FieldElement]

    @property
    def is_zero(self):
        return not any(self.s_evals)


@dataclass
class PowerSyndromes:
    S: List[FieldElement]


@dataclass
class DecodeResult:
    codeword: List[FieldElement]
    error_pattern: ErrorPattern
    algorithm_tag: str
    counters: OpCounter


@dataclass
class CountRow:
    e: int
    t: int
    n: int
    k: int
    label: str
    mul: int
    add: int
    inv: Optional[int] = None
    source: str = ''
    published_mul: Optional[int] = None


@dataclass
class WbIterState:
    """Evaluation-domain state shared by the I-FDMA family.

    ``history`` keeps one ``(g_r, d_r, keep_w)`` tuple per finished step so a
    truncated run can later be extended to more indices without recomputing.
    """
    d: List[FieldElement]
    g: List[FieldElement]
    W: List[FieldElement]
    V: List[FieldElement]
    R0: int = 0
    R1: int = 1
    r: int = 0
    hi: int = 0
    history: List[Tuple[FieldElement, FieldElement, bool]] = field(default_factory=list)


@dataclass
class MaPolyState:
    w: MonoPoly
    n: MonoPoly
    v: MonoPoly
    m: MonoPoly
    d: List[FieldElement]
    g: List[FieldElement]
    R0: int = 0
    R1: int = 1
    r: int = 0


@dataclass
class EsbmState:
    lam: MonoPoly
    shadow: MonoPoly
    L: int = 0
    D: FieldElement = 1
    gap: int = 1


@dataclass
class LocatorEvals:
    evals: List[FieldElement]
    steps: int
    e: int
    state: WbIterState


@dataclass
class CountEstimate:
    e: Optional[int]
    iterations: int
    state: WbIterState
