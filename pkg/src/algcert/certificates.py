"""Check verdicts: pass, or the first violating basis tuple with its exact residual.

Every exhaustive check walks basis tuples in lexicographic order, so the
reported violation is deterministically the lexicographically first one;
`violations` counts all of them.  Composite checks carry their stages in
`parts` and fail if any stage fails.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exact import rat_str

# a residual is a sparse exact vector/tensor: ((index tuple, value), ...)
Residual = tuple[tuple[tuple[int, ...], Fraction], ...]


@dataclass(frozen=True)
class Certificate:
    check: str
    ok: bool
    where: tuple[int, ...] | None = None
    residual: Residual | None = None
    violations: int = 0
    skipped: int = 0
    note: str = ""
    parts: tuple["Certificate", ...] = field(default_factory=tuple)

    @classmethod
    def passed(cls, check: str, note: str = "", skipped: int = 0) -> "Certificate":
        return cls(check=check, ok=True, note=note, skipped=skipped)

    @classmethod
    def failed(
        cls,
        check: str,
        where: tuple[int, ...],
        residual: Residual,
        violations: int,
        note: str = "",
        skipped: int = 0,
    ) -> "Certificate":
        return cls(
            check=check,
            ok=False,
            where=where,
            residual=residual,
            violations=violations,
            skipped=skipped,
            note=note,
        )

    @classmethod
    def combine(cls, check: str, parts: list["Certificate"], note: str = "") -> "Certificate":
        """Bundle stage certificates; the verdict and pinpoint come from the first failure."""
        first_bad = next((p for p in parts if not p.ok), None)
        return cls(
            check=check,
            ok=first_bad is None,
            where=None if first_bad is None else first_bad.where,
            residual=None if first_bad is None else first_bad.residual,
            violations=sum(p.violations for p in parts),
            skipped=sum(p.skipped for p in parts),
            note=note if first_bad is None else (note + (" " if note else "") + f"failed: {first_bad.check}").strip(),
            parts=tuple(parts),
        )

    def first_failure(self) -> "Certificate | None":
        if self.ok:
            return None
        for p in self.parts:
            bad = p.first_failure()
            if bad is not None:
                return bad
        return self if self.where is not None or not self.parts else None

    def to_json(self) -> dict:
        out: dict = {"check": self.check, "ok": self.ok}
        if self.where is not None:
            out["where"] = list(self.where)
        if self.residual is not None:
            out["residual"] = [
                {"at": list(idx), "c": rat_str(c)} for idx, c in self.residual
            ]
        if self.violations:
            out["violations"] = self.violations
        if self.skipped:
            out["skipped"] = self.skipped
        if self.note:
            out["note"] = self.note
        if self.parts:
            out["parts"] = [p.to_json() for p in self.parts]
        return out

    def render(self, indent: int = 0) -> str:
        pad = "  " * indent
        tag = "PASS" if self.ok else "FAIL"
        line = f"{pad}[{tag}] {self.check}"
        if not self.ok and self.where is not None:
            line += f" at {self.where}"
            if self.residual:
                body = ", ".join(f"{list(idx)}={rat_str(c)}" for idx, c in self.residual)
                line += f" residual {{{body}}}"
            line += f" violations={self.violations}"
        if self.skipped:
            line += f" skipped={self.skipped}"
        if self.note:
            line += f"  ({self.note})"
        lines = [line]
        for p in self.parts:
            lines.append(p.render(indent + 1))
        return "\n".join(lines)


class CheckFailed(Exception):
    """Raised by constructive operations when a required hypothesis check fails."""

    def __init__(self, certificate: Certificate):
        super().__init__(certificate.render())
        self.certificate = certificate


def residual_from_vec(v) -> Residual:
    return tuple(((k,), c) for k, c in enumerate(v) if c != 0)


def residual_from_mat(m) -> Residual:
    return tuple(
        ((i, j), c)
        for i, row in enumerate(m.entries)
        for j, c in enumerate(row)
        if c != 0
    )


def residual_from_tensor(t) -> Residual:
    return tuple((idx, c) for idx, c in t.items())
