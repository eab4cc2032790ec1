"""Sign ledger: constant +-1 conventions recorded per identity.

The engine freezes one set of slot/star conventions; several published
identities then hold only after flipping the sign of individual terms.
Each such flip is recorded here under a stable name.  A sign that varies
between samples of the same identity is a hard failure: it would mean the
discrepancy is not a convention delta but a genuine mismatch.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .exterior import KForm


class VaryingSignError(AssertionError):
    """An identity's convention sign changed between samples."""


@dataclass
class LedgerEntry:
    name: str
    sign: int
    note: str = ""
    samples: int = 0


@dataclass
class SignLedger:
    entries: dict[str, LedgerEntry] = field(default_factory=dict)

    def record(self, name: str, sign: int, note: str = "") -> None:
        if sign not in (1, -1):
            raise ValueError(f"ledger sign must be +-1, got {sign}")
        cur = self.entries.get(name)
        if cur is None:
            self.entries[name] = LedgerEntry(name, sign, note, 1)
        else:
            if cur.sign != sign:
                raise VaryingSignError(
                    f"sign of {name!r} flipped: recorded {cur.sign}, saw {sign}"
                )
            cur.samples += 1

    def sign(self, name: str) -> int:
        return self.entries[name].sign

    def as_dict(self) -> dict[str, int]:
        return {k: e.sign for k, e in sorted(self.entries.items())}

    def notes(self) -> dict[str, str]:
        return {k: e.note for k, e in sorted(self.entries.items()) if e.note}


def forms_match(a: KForm, b: KForm, tol: float | None = None) -> bool:
    """Backend-aware form comparison: exact for rationals, tol for floats."""
    if tol is None or not (a.is_float() or b.is_float()):
        return a == b
    keys = set(a.c) | set(b.c)
    return all(abs(float(a.c.get(m, 0)) - float(b.c.get(m, 0))) <= tol for m in keys)


class SignResolver:
    """Calibrate per-term signs of one identity across samples.

    Feeds pairs (lhs, [t_1..t_m]) and keeps every sign vector s with
    lhs == sum_i s_i t_i.  Signs are pinned as soon as the samples make
    them unique; degenerate terms (zero on every sample) default to +1.
    """

    def __init__(self, name: str, nterms: int, tol: float | None = None):
        self.name = name
        self.candidates = list(itertools.product((1, -1), repeat=nterms))
        self.nterms = nterms
        self.tol = tol
        self.samples = 0

    def feed(self, lhs: KForm, terms: Sequence[KForm]) -> bool:
        if len(terms) != self.nterms:
            raise ValueError("wrong number of terms")
        self.samples += 1
        keep = []
        for cand in self.candidates:
            rhs = KForm(lhs.n, lhs.k)
            for s, t in zip(cand, terms):
                rhs = rhs + (t if s > 0 else -t)
            if forms_match(lhs, rhs, self.tol):
                keep.append(cand)
        self.candidates = keep
        return bool(keep)

    def resolved(self) -> tuple[int, ...]:
        """Canonical surviving sign vector (prefers +1 on degenerate terms)."""
        if not self.candidates:
            raise VaryingSignError(f"no constant sign vector fits {self.name!r}")
        return max(self.candidates)

    def commit(self, ledger: SignLedger, note: str = "") -> dict[str, int]:
        signs = self.resolved()
        out = {}
        if self.nterms == 1:
            ledger.record(self.name, signs[0], note)
            out[self.name] = signs[0]
        else:
            for i, s in enumerate(signs, start=1):
                key = f"{self.name}/term{i}"
                ledger.record(key, s, note)
                out[key] = s
        return out


class IdentitySuite:
    """Groups the sign resolvers of one verification sweep.

    ``check`` feeds one sample of one identity; the sign vector must stay
    consistent across every sample of the sweep.  ``commit_prefix``
    finalizes all identities under a name prefix into the ledger.
    """

    def __init__(self, tol: float | None = None):
        self.tol = tol
        self.resolvers: dict[str, SignResolver] = {}
        self.failures: set[str] = set()

    def check(self, name: str, lhs: KForm, terms: Sequence[KForm]) -> bool:
        r = self.resolvers.get(name)
        if r is None:
            r = self.resolvers[name] = SignResolver(name, len(terms), self.tol)
        ok = r.feed(lhs, terms)
        if not ok:
            self.failures.add(name)
        return ok

    def _matches(self, name: str, prefix: str) -> bool:
        return name == prefix or name.startswith(prefix + "-") or name.startswith(prefix + "/")

    def all_ok(self, prefix: str) -> bool:
        return not any(self._matches(f, prefix) for f in self.failures)

    def commit_prefix(self, ledger: SignLedger, prefix: str, note: str = "") -> dict[str, int]:
        signs: dict[str, int] = {}
        for name, r in self.resolvers.items():
            if not self._matches(name, prefix):
                continue
            if name in self.failures or not r.candidates:
                continue
            signs.update(r.commit(ledger, note))
        return signs

    def commit_all(self, ledger: SignLedger, note: str = "") -> dict[str, int]:
        signs: dict[str, int] = {}
        for name, r in self.resolvers.items():
            if name in self.failures or not r.candidates:
                continue
            signs.update(r.commit(ledger, note))
        return signs
