"""Flat output records and their text, JSON and CSV renderings."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Tuple

from .optimizer import CprResult

CSV_FIELDS = (
    "m", "n", "K", "effectiveK", "cpr",
    "bound_num", "bound_den", "bound_ceil",
    "witness_pink", "witness_black", "equality", "ms",
)


@dataclass(frozen=True)
class OutputRecord:
    m: int
    n: int
    K: int
    effective_k: int
    cpr: int
    bound_num: int
    bound_den: int
    bound_ceil: int
    witness_pink: Tuple[int, ...]
    witness_black: Tuple[int, ...]
    equality: bool
    ms: float

    @classmethod
    def from_result(cls, result: CprResult, ms: float) -> "OutputRecord":
        b = result.lower_bound
        w = result.witness
        return cls(
            m=result.spec.m,
            n=result.spec.n,
            K=result.requested_k,
            effective_k=result.effective_k,
            cpr=result.value,
            bound_num=b.numerator,
            bound_den=b.denominator,
            bound_ceil=b.ceiling_value,
            witness_pink=w.pink,
            witness_black=w.black,
            equality=Fraction(b.numerator, b.denominator) == result.value,
            ms=round(ms, 3),
        )

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "K": self.K,
            "effectiveK": self.effective_k,
            "cpr": self.cpr,
            "bound": {"num": self.bound_num, "den": self.bound_den, "ceil": self.bound_ceil},
            "witness": {"pink": list(self.witness_pink), "black": list(self.witness_black)},
            "equality": self.equality,
            "ms": self.ms,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "OutputRecord":
        return cls(
            m=int(d["m"]),
            n=int(d["n"]),
            K=int(d["K"]),
            effective_k=int(d["effectiveK"]),
            cpr=int(d["cpr"]),
            bound_num=int(d["bound"]["num"]),
            bound_den=int(d["bound"]["den"]),
            bound_ceil=int(d["bound"]["ceil"]),
            witness_pink=tuple(int(x) for x in d["witness"]["pink"]),
            witness_black=tuple(int(x) for x in d["witness"]["black"]),
            equality=bool(d["equality"]),
            ms=float(d["ms"]),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "OutputRecord":
        return cls.from_dict(json.loads(text))

    def to_csv_row(self) -> List[str]:
        return [
            str(self.m), str(self.n), str(self.K), str(self.effective_k), str(self.cpr),
            str(self.bound_num), str(self.bound_den), str(self.bound_ceil),
            " ".join(map(str, self.witness_pink)),
            " ".join(map(str, self.witness_black)),
            "true" if self.equality else "false",
            repr(self.ms),
        ]

    @classmethod
    def from_csv_row(cls, row: dict) -> "OutputRecord":
        return cls(
            m=int(row["m"]),
            n=int(row["n"]),
            K=int(row["K"]),
            effective_k=int(row["effectiveK"]),
            cpr=int(row["cpr"]),
            bound_num=int(row["bound_num"]),
            bound_den=int(row["bound_den"]),
            bound_ceil=int(row["bound_ceil"]),
            witness_pink=tuple(int(x) for x in row["witness_pink"].split()),
            witness_black=tuple(int(x) for x in row["witness_black"].split()),
            equality=row["equality"] == "true",
            ms=float(row["ms"]),
        )

    def to_text(self) -> str:
        return (
            f"cpr_{self.K}(K_{{{self.m},{self.n}}}) = {self.cpr}"
            f"  [searched {self.effective_k} arcs]\n"
            f"  lower bound {self.bound_num}/{self.bound_den} (ceil {self.bound_ceil})"
            f"{', attained' if self.equality else ''}\n"
            f"  witness pink={list(self.witness_pink)} black={list(self.witness_black)}\n"
            f"  {self.ms:.3f} ms"
        )


def render_json(records: Iterable[OutputRecord]) -> str:
    return json.dumps([r.to_dict() for r in records], indent=2)


def parse_json(text: str) -> List[OutputRecord]:
    data = json.loads(text)
    if isinstance(data, dict):
        data = [data]
    return [OutputRecord.from_dict(d) for d in data]


def render_csv(records: Iterable[OutputRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for r in records:
        writer.writerow(r.to_csv_row())
    return buf.getvalue()


def parse_csv(text: str) -> List[OutputRecord]:
    return [OutputRecord.from_csv_row(row) for row in csv.DictReader(io.StringIO(text))]


def render_text(records: Iterable[OutputRecord]) -> str:
    return "\n".join(r.to_text() for r in records)


def render(records: List[OutputRecord], fmt: str, single: bool = False) -> str:
    """Render in ``fmt``; ``single`` emits a bare JSON object instead of a list."""
    if fmt == "json":
        return records[0].to_json() if single else render_json(records)
    if fmt == "csv":
        return render_csv(records)
    return render_text(records)
