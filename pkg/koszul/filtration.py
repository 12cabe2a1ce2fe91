"""Koszul filtrations: certification, flags, unions and minimality."""

import itertools
import logging
import threading
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Sequence, Set, Tuple

from errors import KoszulError
from algebra.ideals import colon_general, ideal_equal
from koszul.linear_ideal import ColonResult, LinearIdeal, QuotientRing, colon, contains, cyclic_over
from logger import ProgressTracker

try:
    from tqdm import tqdm
except ImportError:
    tqdm = None

logger = logging.getLogger('koszul_toolkit.koszul')

DEFAULT_EXHAUSTIVE_BOUND = 12


class Filtration:
    """Finite family of linear ideals of one quotient ring, merged by canonical key.

    ``hints`` maps a member index to member indices tried first as the
    smaller ideal ``J`` of its certificate.
    """

    def __init__(self, host: QuotientRing, members: Iterable[LinearIdeal] = (), name: str = ''):
        self.host = host
        self.name = name
        self.members: List[LinearIdeal] = []
        self.hints: Dict[int, List[int]] = {}
        self._index: Dict[Tuple, int] = {}
        for member in members:
            self.add(member)

    def add(self, member: LinearIdeal) -> int:
        """Insert ``member`` unless an equal ideal is present; return its index."""
        if member.host is not self.host and member.host != self.host:
            raise KoszulError("Member belongs to a different quotient ring")
        existing = self._index.get(member.key)
        if existing is not None:
            return existing
        self.members.append(member)
        self._index[member.key] = len(self.members) - 1
        return len(self.members) - 1

    def add_hint(self, member: LinearIdeal, witness: LinearIdeal) -> None:
        i, j = self.index_of(member), self.index_of(witness)
        if i is None or j is None:
            raise KoszulError("Hints must refer to members of the filtration")
        self.hints.setdefault(i, []).append(j)

    def index_of(self, ideal: LinearIdeal) -> Optional[int]:
        return self._index.get(ideal.key)

    def index_of_key(self, key: Tuple) -> Optional[int]:
        return self._index.get(key)

    def __contains__(self, ideal: LinearIdeal) -> bool:
        return self.index_of(ideal) is not None

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def labels(self) -> List[List[str]]:
        return [member.labels() for member in self.members]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'name': self.name,
            'ring': list(self.host.ring.names),
            'members': self.labels(),
        }


@dataclass(frozen=True)
class Certificate:
    """``member = witness + (form)`` and ``witness : member = colon``, as member indices."""

    member: int
    witness: int
    form: str
    colon: int


@dataclass(frozen=True)
class MemberFailure:
    member: int
    reason: str
    degree: Optional[int] = None


@dataclass
class FiltrationReport:
    ok: bool
    certificates: Dict[int, Certificate] = field(default_factory=dict)
    failures: List[MemberFailure] = field(default_factory=list)

    def to_dict(self, filtration: Optional[Filtration] = None) -> Dict[str, Any]:
        def label(index: int) -> Any:
            return filtration.members[index].labels() if filtration is not None else index

        return {
            'ok': self.ok,
            'certificates': [
                {'member': label(c.member), 'witness': label(c.witness), 'form': c.form, 'colon': label(c.colon)}
                for _, c in sorted(self.certificates.items())
            ],
            'failures': [
                {'member': label(f.member) if f.member >= 0 else None, 'reason': f.reason, 'degree': f.degree}
                for f in self.failures
            ],
        }


@dataclass(frozen=True)
class WitnessOption:
    witness: int
    form: str
    colon: Optional[int]
    defect_degree: Optional[int] = None


class _ColonCache:
    """Colons ``J : I`` keyed by member indices; shared by concurrent certifications."""

    def __init__(self, filtration: Filtration):
        self.filtration = filtration
        self._values: Dict[Tuple[int, int], ColonResult] = {}
        self._lock = threading.Lock()

    def get(self, j: int, i: int, step) -> ColonResult:
        with self._lock:
            cached = self._values.get((j, i))
        if cached is not None:
            return cached
        members = self.filtration.members
        result = colon(members[j], members[i], step)
        with self._lock:
            return self._values.setdefault((j, i), result)


def _candidates(F: Filtration, i: int) -> List[int]:
    member = F.members[i]
    ordered = sorted(
        (j for j in range(len(F)) if j != i and F.members[j].dimension < member.dimension),
        key=lambda j: (-F.members[j].dimension, F.members[j].key_text),
    )
    preferred = [j for j in F.hints.get(i, []) if j != i]
    return preferred + [j for j in ordered if j not in preferred]


def _certify_member(F: Filtration, i: int, cache: _ColonCache):
    member = F.members[i]
    defect = None
    saw_cyclic = False
    for j in _candidates(F, i):
        witness = F.members[j]
        if not contains(member, witness):
            continue
        step = cyclic_over(member, witness)
        if not step.is_cyclic:
            continue
        saw_cyclic = True
        result = cache.get(j, i, step)
        if not result.is_linear:
            defect = result.defect_degree if defect is None else min(defect, result.defect_degree)
            continue
        target = F.index_of_key(result.linear.key)
        if target is not None:
            return Certificate(i, j, str(step.form), target)
    if not saw_cyclic:
        return MemberFailure(i, "no member below with a cyclic quotient")
    if defect is not None:
        return MemberFailure(i, "colon is not generated by linear forms", defect)
    return MemberFailure(i, "colon is not a member")


def verify(F: Filtration, workers: int = 1, progress: bool = False) -> FiltrationReport:
    """Certify ``F`` as a Koszul filtration.

    Every nonzero member needs a member ``J`` below it with cyclic quotient
    whose colon is again a member; the first witness found is recorded.
    """
    host = F.host
    report = FiltrationReport(ok=True)
    if host.zero_ideal() not in F:
        report.failures.append(MemberFailure(-1, "zero ideal absent"))
    if host.maximal_ideal() not in F:
        report.failures.append(MemberFailure(-1, "maximal ideal absent"))
    targets = [i for i, member in enumerate(F.members) if not member.is_zero()]
    cache = _ColonCache(F)
    outcomes: Dict[int, Any] = {}
    with ProgressTracker(len(targets), "filtration members") as tracker:
        if workers > 1 and len(targets) > 4:
            with ThreadPoolExecutor(max_workers=workers) as executor:
                futures = {executor.submit(_certify_member, F, i, cache): i for i in targets}
                for future in as_completed(futures):
                    outcome = future.result()
                    outcomes[futures[future]] = outcome
                    tracker.increment(isinstance(outcome, Certificate))
        else:
            iterator = targets
            if progress and tqdm is not None:
                iterator = tqdm(targets, desc=F.name or "members", unit="member", leave=False)
            for i in iterator:
                outcome = _certify_member(F, i, cache)
                outcomes[i] = outcome
                tracker.increment(isinstance(outcome, Certificate))
    for i in sorted(outcomes):
        outcome = outcomes[i]
        if isinstance(outcome, Certificate):
            report.certificates[i] = outcome
        else:
            report.failures.append(outcome)
            logger.debug(f"Member {F.members[i]} fails: {outcome.reason}")
    report.ok = not report.failures
    return report


def recheck_certificate(F: Filtration, certificate: Certificate) -> bool:
    """Re-derive a certificate from scratch, computing the colon by elimination."""
    member = F.members[certificate.member]
    witness = F.members[certificate.witness]
    target = F.members[certificate.colon]
    if not contains(member, witness):
        return False
    step = cyclic_over(member, witness)
    if not step.is_cyclic:
        return False
    order = F.host.order
    if not ideal_equal(member.ideal, witness.ideal.plus([step.form]), order):
        return False
    return ideal_equal(colon_general(witness.ideal, step.form), target.ideal, order)


def witness_options(F: Filtration) -> Dict[int, List[WitnessOption]]:
    """Every cyclic step inside ``F`` with its colon, computed once per pair."""
    cache = _ColonCache(F)
    options: Dict[int, List[WitnessOption]] = {}
    for i, member in enumerate(F.members):
        if member.is_zero():
            continue
        found = []
        for j in _candidates(F, i):
            witness = F.members[j]
            if not contains(member, witness):
                continue
            step = cyclic_over(member, witness)
            if not step.is_cyclic:
                continue
            result = cache.get(j, i, step)
            target = F.index_of_key(result.linear.key) if result.is_linear else None
            found.append(WitnessOption(j, str(step.form), target, result.defect_degree))
        options[i] = found
    return options


def _subset_certifies(F: Filtration, options: Dict[int, List[WitnessOption]], subset: Set[int],
                      zero: int, maximal: int) -> bool:
    if zero not in subset or maximal not in subset:
        return False
    for i in subset:
        if i == zero:
            continue
        if not any(o.witness in subset and o.colon is not None and o.colon in subset for o in options.get(i, [])):
            return False
    return True


@dataclass
class MinimalityReport:
    removable: List[int]
    fully_minimal: Optional[bool]

    def to_dict(self, filtration: Optional[Filtration] = None) -> Dict[str, Any]:
        return {
            'removable': [filtration.members[i].labels() if filtration else i for i in self.removable],
            'fully_minimal': self.fully_minimal,
        }


def minimality_probe(F: Filtration, exhaustive_bound: int = DEFAULT_EXHAUSTIVE_BOUND,
                     options: Optional[Dict[int, List[WitnessOption]]] = None) -> MinimalityReport:
    """Members whose removal keeps a Koszul filtration, and full minimality for small families."""
    options = options if options is not None else witness_options(F)
    zero = F.index_of(F.host.zero_ideal())
    maximal = F.index_of(F.host.maximal_ideal())
    if zero is None or maximal is None:
        raise KoszulError("Minimality needs a family containing the zero and maximal ideals")
    everything = set(range(len(F)))
    removable = [i for i in sorted(everything) if _subset_certifies(F, options, everything - {i}, zero, maximal)]
    fully_minimal = None
    if len(F) <= exhaustive_bound:
        fully_minimal = not removable
        optional = sorted(everything - {zero, maximal})
        for size in range(len(optional)):
            if not fully_minimal:
                break
            for chosen in itertools.combinations(optional, size):
                if _subset_certifies(F, options, set(chosen) | {zero, maximal}, zero, maximal):
                    fully_minimal = False
                    break
    return MinimalityReport(removable, fully_minimal)


def is_flag(F: Filtration) -> bool:
    """True iff the members form a full chain with one-dimensional steps whose colons are members."""
    chain = sorted(F.members, key=lambda member: member.dimension)
    top = F.host.maximal_ideal().dimension
    if [member.dimension for member in chain] != list(range(top + 1)):
        return False
    for lower, upper in zip(chain, chain[1:]):
        if not contains(upper, lower):
            return False
        result = colon(lower, upper)
        if not result.is_linear or F.index_of_key(result.linear.key) is None:
            return False
    return True


def union(F1: Filtration, F2: Filtration, check: bool = True) -> Filtration:
    """Member union of two filtrations of the same ring.

    Raises:
        KoszulError: If the hosts differ, or ``check`` is set and the union fails to verify
    """
    if F1.host is not F2.host and F1.host != F2.host:
        raise KoszulError("Cannot unite filtrations of different quotient rings")
    merged = Filtration(F1.host, F1.members, name=f"{F1.name} + {F2.name}".strip(' +'))
    for member in F2.members:
        merged.add(LinearIdeal(F1.host, member.generators))
    if check:
        report = verify(merged)
        if not report.ok:
            raise KoszulError(f"Union does not verify: {[f.reason for f in report.failures]}")
    return merged


__all__ = [
    'DEFAULT_EXHAUSTIVE_BOUND',
    'Filtration',
    'Certificate',
    'MemberFailure',
    'FiltrationReport',
    'WitnessOption',
    'MinimalityReport',
    'verify',
    'recheck_certificate',
    'witness_options',
    'minimality_probe',
    'is_flag',
    'union',
]
