"""Batch engine: ingest code tables, virtualize, compute invariants in
parallel, deduplicate, label bridge numbers and export ML-ready datasets.

The run is deterministic: records are keyed and finally sorted by the
canonical form of their code, so the output bytes do not depend on the
worker count.  Rejected rows go to a side file with reasons and never
abort the run; the summary accounts for every row
(ingested = exported + rejected + deduplicated).
"""

from __future__ import annotations

import csv
import json
import sys
import time
from dataclasses import dataclass, field
from multiprocessing import Pool
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .biquandles import (
    BIQUANDLE_4,
    DIHEDRAL_3,
    Biquandle,
    coloring_lower_bound,
    count_colorings,
    load_table_file,
)
from .bracket import jones_fingerprint
from .bridges import BridgeBounds, bridge_label, wirtinger_number
from .codes import (
    GaussCode,
    SignedGaussCode,
    canonical_form,
    overbridge_count,
    parse,
    serialize,
    simplify,
    strands,
    virtualize_remove,
)
from .errors import (
    CodeError,
    FileUnreadable,
    InconsistentBounds,
    NoCodeColumn,
    OutputUnwritable,
)

__all__ = ["KnotRecord", "RunConfig", "RunSummary", "ingest", "generate_virtual", "run_dataset"]

CSV_COLUMNS = [
    "code",
    "signs",
    "crossings",
    "strands",
    "overbridges",
    "wirtinger_upper",
    "quandle_lower",
    "b1_lower",
    "b1_upper",
    "b1_exact",
    "b2_lower",
    "jones_fp",
    "source",
]


@dataclass
class KnotRecord:
    """One labeled dataset row."""

    code: str
    signs: str
    crossings: int
    strand_count: int
    overbridges: int
    wirtinger_upper: int | None
    quandle_lower: int
    biquandle_counts: dict[str, int]
    b1: BridgeBounds
    b2_lower: int | None
    jones_fp: str | None
    source: str
    canonical_key: str = ""
    signs_assumed: bool = False

    def csv_row(self) -> list[str]:
        return [
            self.code,
            self.signs,
            str(self.crossings),
            str(self.strand_count),
            str(self.overbridges),
            "" if self.wirtinger_upper is None else str(self.wirtinger_upper),
            str(self.quandle_lower),
            str(self.b1.lower),
            "" if self.b1.upper is None else str(self.b1.upper),
            "1" if self.b1.exact else "0",
            "" if self.b2_lower is None else str(self.b2_lower),
            self.jones_fp or "",
            self.source,
        ]

    def to_json(self) -> dict:
        return {
            "code": self.code,
            "signs": self.signs,
            "signs_assumed": self.signs_assumed,
            "crossings": self.crossings,
            "strands": self.strand_count,
            "overbridges": self.overbridges,
            "wirtinger_upper": self.wirtinger_upper,
            "quandle_lower": self.quandle_lower,
            "biquandle_counts": self.biquandle_counts,
            "b1_lower": self.b1.lower,
            "b1_upper": self.b1.upper,
            "b1_exact": self.b1.exact,
            "b2_lower": self.b2_lower,
            "jones_fp": self.jones_fp,
            "source": self.source,
            "canonical_key": self.canonical_key,
        }

    @classmethod
    def from_json(cls, d: dict) -> "KnotRecord":
        return cls(
            code=d["code"],
            signs=d["signs"],
            crossings=d["crossings"],
            strand_count=d["strands"],
            overbridges=d["overbridges"],
            wirtinger_upper=d["wirtinger_upper"],
            quandle_lower=d["quandle_lower"],
            biquandle_counts=dict(d["biquandle_counts"]),
            b1=BridgeBounds(d["b1_lower"], d["b1_upper"], d["b1_exact"]),
            b2_lower=d["b2_lower"],
            jones_fp=d["jones_fp"],
            source=d["source"],
            canonical_key=d["canonical_key"],
            signs_assumed=d.get("signs_assumed", False),
        )


@dataclass
class RunConfig:
    inputs: list[str]
    output: str
    k_start: int = 1
    k_max: int = 6
    quandle_files: list[str] = field(default_factory=list)
    biquandle_files: list[str] = field(default_factory=list)
    with_wirtinger: bool = True
    with_quandle: bool = True
    with_biquandle: bool = True
    with_jones: bool = True
    virtualize: bool = False
    classical_census: bool = False
    dedup: str = "both"  # canonical | jones | both
    jobs: int = 1
    resume: str | None = None

    def validate(self) -> None:
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")
        if self.dedup not in ("canonical", "jones", "both"):
            raise ValueError(f"bad dedup mode {self.dedup!r}")
        if not (self.with_wirtinger or self.with_quandle or self.with_biquandle or self.with_jones):
            raise ValueError("select at least one invariant")
        if self.dedup in ("jones", "both") and not self.with_jones:
            raise ValueError("jones dedup needs the jones invariant")


@dataclass
class RunSummary:
    ingested: int = 0
    rejected: int = 0
    generated: int = 0
    deduped_canonical: int = 0
    deduped_jones: int = 0
    resumed: int = 0
    exported: int = 0
    exact_rows: int = 0
    bounded_rows: int = 0
    histogram_exact: dict[int, int] = field(default_factory=dict)
    elapsed_s: float = 0.0
    throughput: float = 0.0

    def check_accounting(self, virtualize: bool) -> None:
        candidates = self.generated if virtualize else self.ingested - self.rejected
        if candidates != self.exported + self.deduped_canonical + self.deduped_jones:
            raise InconsistentBounds(
                f"record accounting broken: {candidates} candidates vs "
                f"{self.exported} exported + {self.deduped_canonical}+{self.deduped_jones} deduped"
            )

    def to_json(self) -> dict:
        d = self.__dict__.copy()
        d["histogram_exact"] = {str(k): v for k, v in sorted(self.histogram_exact.items())}
        return d

    def render(self) -> str:
        lines = [
            f"ingested            {self.ingested}",
            f"rejected            {self.rejected}",
            f"generated (virtual) {self.generated}",
            f"deduped canonical   {self.deduped_canonical}",
            f"deduped jones       {self.deduped_jones}",
            f"resumed from ckpt   {self.resumed}",
            f"exported            {self.exported}",
            f"exact labels        {self.exact_rows}",
            f"bounded labels      {self.bounded_rows}",
            "bridge-number histogram (exact rows):",
        ]
        total = max(1, self.exact_rows)
        for b, cnt in sorted(self.histogram_exact.items()):
            bar = "#" * max(1, round(40 * cnt / total))
            lines.append(f"  b1={b:<2} {cnt:>8}  {bar}")
        lines.append(f"elapsed             {self.elapsed_s:.1f}s")
        lines.append(f"throughput          {self.throughput:.1f} codes/s")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# ingest

_CODE_ALIASES = ("gauss_code", "gausscode", "code")
_WIRT_ALIASES = ("wirtinger_number", "wirtinger")
_HOM_ALIASES = ("any_homomorphism", "any_homomorphism_1_y_0_n")


def _norm_header(name: str) -> str:
    out = []
    for ch in name.strip().lower():
        out.append(ch if ch.isalnum() else "_")
    squeezed = "_".join(p for p in "".join(out).split("_") if p)
    return squeezed


def _pick(row: dict, aliases: Sequence[str]):
    for a in aliases:
        if a in row and row[a] not in (None, ""):
            return row[a]
    return None


def ingest(path: str | Path, reject: "RejectLog | None" = None) -> Iterator[tuple[GaussCode | SignedGaussCode, dict]]:
    """Yield validated codes with optional external columns from CSV or JSONL.

    Malformed rows are logged to ``reject`` and skipped.  The code column
    may be named ``gauss_code`` or ``code``; ``wirtinger_number`` and
    ``any_homomorphism`` are picked up when present.
    """
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise FileUnreadable(f"{path}: {exc}") from exc
    rows: Iterable[dict]
    if path.suffix.lower() in (".jsonl", ".ndjson", ".json"):
        def _json_rows():
            for ln, line in enumerate(text.splitlines(), 1):
                if not line.strip():
                    continue
                try:
                    obj = json.loads(line)
                except json.JSONDecodeError as exc:
                    if reject:
                        reject.add(path, ln, line[:80], f"bad json: {exc}")
                    continue
                yield ln, {_norm_header(k): v for k, v in obj.items()}
        numbered = _json_rows()
    else:
        reader = csv.DictReader(text.splitlines())
        if reader.fieldnames is None:
            raise NoCodeColumn(f"{path}: empty file")
        fields = [_norm_header(f) for f in reader.fieldnames]
        if not any(a in fields for a in _CODE_ALIASES):
            raise NoCodeColumn(f"{path}: no gauss_code column in {reader.fieldnames}")
        def _csv_rows():
            for ln, row in enumerate(reader, 2):
                yield ln, {_norm_header(k): v for k, v in row.items() if k is not None}
        numbered = _csv_rows()
    for ln, row in numbered:
        raw = None
        for a in _CODE_ALIASES:
            if a in row and row[a] is not None:
                raw = row[a]  # an empty cell is the unknot, a legal code
                break
        if raw is None:
            if reject:
                reject.add(path, ln, "", "missing gauss_code value")
            continue
        try:
            code = parse(str(raw))
        except CodeError as exc:
            if reject:
                reject.add(path, ln, str(raw)[:80], f"{type(exc).__name__}: {exc}")
            continue
        extras: dict = {}
        w = _pick(row, _WIRT_ALIASES)
        if w is not None:
            try:
                extras["wirtinger_number"] = int(w)
            except (TypeError, ValueError):
                pass
        h = _pick(row, _HOM_ALIASES)
        if h is not None:
            extras["any_homomorphism"] = str(h).strip() in ("1", "true", "True", "y", "Y")
        yield code, extras


class RejectLog:
    """CSV sink for rows the pipeline refuses, with reasons."""

    def __init__(self, path: str | Path):
        self.path = Path(path)
        self.count = 0
        self._rows: list[list[str]] = []

    def add(self, source, line, content, reason) -> None:
        self.count += 1
        self._rows.append([str(source), str(line), content, reason])

    def flush(self) -> None:
        with self.path.open("w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["file", "line", "content", "reason"])
            w.writerows(self._rows)


def generate_virtual(
    items: Iterable[tuple[GaussCode | SignedGaussCode, dict]]
) -> Iterator[tuple[GaussCode | SignedGaussCode, dict, str]]:
    """Replace each classical code by its crossing-removal children.

    One child per crossing label; duplicates are handled downstream.
    """
    for code, extras in items:
        parent = serialize(code)
        for k in range(1, code.crossings + 1):
            yield virtualize_remove(code, k), {}, f"virtualized({parent},{k})"


# ---------------------------------------------------------------------------
# per-record computation

_WORKER: dict = {}


def _worker_init(cfg_blob: dict) -> None:
    quandles = [
        Biquandle(q["order"], tuple(map(tuple, q["over"])), tuple(map(tuple, q["under"])), q["name"])
        for q in cfg_blob["quandles"]
    ]
    biquandles = [
        Biquandle(b["order"], tuple(map(tuple, b["over"])), tuple(map(tuple, b["under"])), b["name"])
        for b in cfg_blob["biquandles"]
    ]
    _WORKER.update(cfg_blob, quandles=quandles, biquandles=biquandles)


def _compute_record(task: tuple[tuple[int, ...], tuple[int, ...] | None, dict, str, str]) -> dict:
    entries, signs, extras, source, canonical_key = task
    signs_assumed = signs is None
    signed = SignedGaussCode(entries, signs if signs is not None else tuple([-1] * (len(entries) // 2)))
    sts = strands(signed) if entries else []
    n_strands = len(sts) if entries else 0
    over = overbridge_count(signed)
    wirt = extras.get("wirtinger_number")
    if wirt is None and _WORKER["with_wirtinger"]:
        wirt = wirtinger_number(signed, _WORKER["k_start"], _WORKER["k_max"])
    # coloring counts and the Jones polynomial are blind to kink/slide
    # deletion, so compute them on the reduced code
    reduced = simplify(signed)
    quandle_lower = 1
    if _WORKER["with_quandle"]:
        for q in _WORKER["quandles"]:
            cnt = count_colorings(reduced, q)
            quandle_lower = max(quandle_lower, coloring_lower_bound(cnt, q.order, "quandle"))
    biq_counts: dict[str, int] = {}
    b2_lower: int | None = None
    if _WORKER["with_biquandle"]:
        for b in _WORKER["biquandles"]:
            cnt = count_colorings(reduced, b)
            biq_counts[b.name] = cnt
            bound = coloring_lower_bound(cnt, b.order, "biquandle")
            b2_lower = bound if b2_lower is None else max(b2_lower, bound)
    fp = jones_fingerprint(reduced) if _WORKER["with_jones"] else None
    b1 = bridge_label(
        signed,
        wirt,
        [quandle_lower],
        external_exact_hint=extras.get("any_homomorphism"),
        classical_census=_WORKER["classical_census"],
        k_start=_WORKER["k_start"],
    )
    rec = KnotRecord(
        code=" ".join(str(v) for v in entries),
        signs="" if signs_assumed else " ".join("+" if s > 0 else "-" for s in signed.signs),
        crossings=signed.crossings,
        strand_count=n_strands,
        overbridges=over,
        wirtinger_upper=wirt,
        quandle_lower=quandle_lower,
        biquandle_counts=biq_counts,
        b1=b1,
        b2_lower=b2_lower,
        jones_fp=fp,
        source=source,
        canonical_key=canonical_key,
        signs_assumed=signs_assumed,
    )
    return rec.to_json()


def _biq_blob(b: Biquandle) -> dict:
    return {"order": b.order, "over": b.over, "under": b.under, "name": b.name or "unnamed"}


# ---------------------------------------------------------------------------
# the run


def run_dataset(config: RunConfig, log=lambda msg: print(msg, file=sys.stderr)) -> RunSummary:
    """Execute the full batch: ingest, (virtualize,) dedup, label, export."""
    config.validate()
    t0 = time.perf_counter()
    out_dir = Path(config.output)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise OutputUnwritable(f"{config.output}: {exc}") from exc

    summary = RunSummary()
    reject = RejectLog(out_dir / "rejects.csv")

    quandles = [DIHEDRAL_3] if not config.quandle_files else [load_table_file(p) for p in config.quandle_files]
    biquandles = [BIQUANDLE_4] if not config.biquandle_files else [load_table_file(p) for p in config.biquandle_files]
    for b in quandles:
        if not b.is_quandle:
            raise CodeError(f"{b.name}: not a quandle (over table must be trivial)")

    ingested: list[tuple[GaussCode | SignedGaussCode, dict]] = []
    for path in config.inputs:
        for code, extras in ingest(path, reject):
            ingested.append((code, extras))
    summary.ingested = len(ingested) + reject.count
    summary.rejected = reject.count

    if config.virtualize:
        stream = list(generate_virtual(ingested))
        summary.generated = len(stream)
    else:
        stream = [(code, extras, "census" if config.classical_census else "file") for code, extras in ingested]

    # canonical dedup, in input order
    seen_keys: set[str] = set()
    tasks = []
    for code, extras, source in stream:
        key = serialize(canonical_form(code))
        if config.dedup in ("canonical", "both"):
            if key in seen_keys:
                summary.deduped_canonical += 1
                continue
            seen_keys.add(key)
        signs = code.signs if isinstance(code, SignedGaussCode) else None
        tasks.append((code.entries, signs, extras, source, key))

    # resume: skip tasks whose canonical key is already checkpointed
    done_records: dict[str, dict] = {}
    ckpt_path = Path(config.resume) if config.resume else None
    if ckpt_path and ckpt_path.exists():
        for line in ckpt_path.read_text().splitlines():
            if line.strip():
                d = json.loads(line)
                done_records[d["canonical_key"]] = d
        before = len(tasks)
        tasks = [t for t in tasks if t[4] not in done_records]
        summary.resumed = before - len(tasks)
        log(f"resume: {summary.resumed} records from checkpoint")

    blob = {
        "k_start": config.k_start,
        "k_max": config.k_max,
        "with_wirtinger": config.with_wirtinger,
        "with_quandle": config.with_quandle,
        "with_biquandle": config.with_biquandle,
        "with_jones": config.with_jones,
        "classical_census": config.classical_census,
        "quandles": [_biq_blob(q) for q in quandles],
        "biquandles": [_biq_blob(b) for b in biquandles],
    }

    results: list[dict] = [done_records[k] for k in sorted(done_records)] if done_records else []
    ckpt_fh = ckpt_path.open("a") if ckpt_path else None
    try:
        if config.jobs == 1:
            _worker_init(blob)
            for task in tasks:
                d = _compute_record(task)
                results.append(d)
                if ckpt_fh:
                    ckpt_fh.write(json.dumps(d) + "\n")
                    ckpt_fh.flush()
        else:
            with Pool(config.jobs, initializer=_worker_init, initargs=(blob,)) as pool:
                for d in pool.imap_unordered(_compute_record, tasks, chunksize=8):
                    results.append(d)
                    if ckpt_fh:
                        ckpt_fh.write(json.dumps(d) + "\n")
                        ckpt_fh.flush()
    finally:
        if ckpt_fh:
            ckpt_fh.close()

    records = [KnotRecord.from_json(d) for d in results]
    # jones dedup, deterministic: decided in canonical-key order
    if config.dedup in ("jones", "both"):
        records.sort(key=lambda r: (r.canonical_key, r.source))
        seen_fp: set[str] = set()
        kept = []
        for r in records:
            if r.jones_fp in seen_fp:
                summary.deduped_jones += 1
                continue
            if r.jones_fp is not None:
                seen_fp.add(r.jones_fp)
            kept.append(r)
        records = kept
    records.sort(key=lambda r: (r.canonical_key, r.source))

    csv_path = out_dir / "dataset.csv"
    jsonl_path = out_dir / "dataset.jsonl"
    try:
        with csv_path.open("w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(CSV_COLUMNS)
            for r in records:
                w.writerow(r.csv_row())
        with jsonl_path.open("w") as fh:
            for r in records:
                fh.write(json.dumps(r.to_json(), sort_keys=True) + "\n")
    except OSError as exc:
        raise OutputUnwritable(f"{config.output}: {exc}") from exc
    reject.flush()

    summary.exported = len(records)
    for r in records:
        if r.b1.exact:
            summary.exact_rows += 1
            summary.histogram_exact[r.b1.lower] = summary.histogram_exact.get(r.b1.lower, 0) + 1
        else:
            summary.bounded_rows += 1
    summary.elapsed_s = time.perf_counter() - t0
    candidates = summary.generated if config.virtualize else summary.ingested - summary.rejected
    summary.throughput = candidates / summary.elapsed_s if summary.elapsed_s > 0 else 0.0
    summary.check_accounting(config.virtualize)

    (out_dir / "summary.json").write_text(json.dumps(summary.to_json(), indent=2) + "\n")
    (out_dir / "summary.txt").write_text(summary.render() + "\n")
    return summary
