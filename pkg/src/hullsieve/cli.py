"""Command line front end: ``hullsieve {run,bench,verify,gen}``."""

from __future__ import annotations

import argparse
import csv
import itertools
import logging
import os
import statistics
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import datagen
from .datagen import DatasetSpec
from .errors import HullError
from .hull import PipelineConfig, PipelineTrace, StageStats, full_pipeline
from .oracle import monotone_chain, strictly_inside_mask

log = logging.getLogger("hullsieve")

CSV_HEADER = [
    "dataset", "n", "seed", "chunks", "n_after_r1", "n_after_r2", "hull_size",
    "t_r1_ms", "t_annotate_ms", "t_sort_ms", "t_r2_ms", "t_finalize_ms", "t_total_ms",
    "baseline_ms", "speedup", "remaining_r1_pct", "remaining_r2_pct",
]

TIME_FIELDS = ("t_round1", "t_annotate", "t_sort", "t_round2", "t_finalize", "t_total")

DEFAULT_VERIFY_KINDS = ("square", "disk", "circle", "collinear")
DEFAULT_VERIFY_CHUNKS = (1, 2, 7, 1024)


@dataclass
class RunReport:
    spec: DatasetSpec
    cfg: PipelineConfig
    stats: StageStats
    baseline_ms: float | None = None

    @property
    def speedup(self) -> float | None:
        if self.baseline_ms is None or self.stats.t_total <= 0:
            return None
        return self.baseline_ms / self.stats.t_total

    @property
    def remaining_r1_pct(self) -> float:
        return self.stats.remaining_r1_pct

    @property
    def remaining_r2_pct(self) -> float:
        return self.stats.remaining_r2_pct

    def summary(self) -> str:
        s = self.stats
        text = (
            f"dataset={self.spec.label} n={s.n_input} seed={self.spec.seed} cfg={self.cfg.label()} "
            f"after_r1={s.n_after_round1} ({self.remaining_r1_pct:.2f}%) "
            f"after_r2={s.n_after_round2} ({self.remaining_r2_pct:.2f}%) "
            f"hull={s.hull_size} total={s.t_total:.3f}ms finalize={s.t_finalize:.3f}ms"
        )
        if self.baseline_ms is not None:
            text += f" baseline={self.baseline_ms:.3f}ms speedup={self.speedup:.2f}x"
        return text

    def csv_row(self) -> list:
        s = self.stats
        chunks = self.cfg.chunk_count if self.cfg.chunked else 0
        return [
            self.spec.label, s.n_input, self.spec.seed, chunks,
            s.n_after_round1, s.n_after_round2, s.hull_size,
            *(f"{getattr(s, f):.4f}" for f in TIME_FIELDS),
            "" if self.baseline_ms is None else f"{self.baseline_ms:.4f}",
            "" if self.speedup is None else f"{self.speedup:.4f}",
            f"{self.remaining_r1_pct:.4f}", f"{self.remaining_r2_pct:.4f}",
        ]


def _count(text: str) -> int:
    """Accept ``1000``, ``1e6`` or ``2_000_000``."""
    v = float(text.replace("_", ""))
    if v != int(v) or v < 0:
        raise argparse.ArgumentTypeError(f"not a count: {text!r}")
    return int(v)


def _positive(text: str) -> int:
    v = _count(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {text!r}")
    return v


def _config_from_args(args, chunk_count: int | None = None) -> PipelineConfig:
    return PipelineConfig(
        chunk_count=chunk_count if chunk_count is not None else args.chunks,
        enable_round1=not args.no_round1,
        enable_round2=not args.no_round2,
        chunked=not args.sequential_discard,
    )


def _listify(v):
    if v is None or isinstance(v, list):
        return v
    return [v]


def _specs_from_args(args) -> list[DatasetSpec]:
    if args.input:
        return [DatasetSpec("file", path=p) for p in _listify(args.input)]
    if args.obj:
        return [DatasetSpec("obj", path=p) for p in _listify(args.obj)]
    kinds = _listify(args.gen) or ["square"]
    return [
        DatasetSpec(kind, n=n, seed=seed)
        for kind, n, seed in itertools.product(kinds, args.n, args.seed)
        if not (kind == "circle" and n < 3)
    ]


_warm = False


def _warm_up(cfg: PipelineConfig) -> None:
    # load compiled kernels once so the first timed run is not charged for it
    global _warm
    if not _warm:
        pts = datagen.gen_disk(256, 0)
        full_pipeline(pts, cfg)
        monotone_chain(pts)
        _warm = True


def _run_one(spec: DatasetSpec, cfg: PipelineConfig, repeats: int, baseline: bool) -> RunReport:
    pts = spec.materialize()
    _warm_up(cfg)
    base_times = []
    if baseline:
        for _ in range(repeats):
            t0 = time.perf_counter()
            ref = monotone_chain(pts)
            base_times.append((time.perf_counter() - t0) * 1e3)
    runs = [full_pipeline(pts, cfg) for _ in range(repeats)]
    hull, last = runs[-1]
    if baseline and hull.vertex_set() != ref.vertex_set():
        raise HullError(f"{spec}: pipeline hull differs from the baseline hull")
    med = {f: statistics.median(getattr(s, f) for _, s in runs) for f in TIME_FIELDS}
    stats = StageStats(last.n_input, last.n_after_round1, last.n_after_round2, last.hull_size, **med)
    return RunReport(spec, cfg, stats, statistics.median(base_times) if baseline else None)


def _map(fn, items, jobs: int):
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            yield from pool.map(fn, items)
    else:
        yield from map(fn, items)


def cmd_run(args) -> int:
    spec = _specs_from_args(args)[0]
    cfg = _config_from_args(args)
    pts = spec.materialize()
    _warm_up(cfg)
    hull, stats = full_pipeline(pts, cfg)
    report = RunReport(spec, cfg, stats)
    if args.out:
        datagen.save_points(hull.vertices, args.out)
        print(report.summary())
    else:
        datagen.save_points(hull.vertices, stream=sys.stdout)
        print(report.summary(), file=sys.stderr)
    return 0


def write_csv(reports, csv_path: str | None) -> None:
    if csv_path is None:
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(CSV_HEADER)
        w.writerows(r.csv_row() for r in reports)
        return
    new = not os.path.exists(csv_path) or os.path.getsize(csv_path) == 0
    with open(csv_path, "a", newline="", encoding="utf-8") as f:
        w = csv.writer(f, lineterminator="\n")
        if new:
            w.writerow(CSV_HEADER)
        w.writerows(r.csv_row() for r in reports)


class _BenchJob:
    def __init__(self, cfg, repeats):
        self.cfg = cfg
        self.repeats = repeats

    def __call__(self, spec):
        return _run_one(spec, self.cfg, self.repeats, baseline=True)


def cmd_bench(args) -> int:
    cfg = _config_from_args(args)
    specs = _specs_from_args(args)
    reports = []
    for report in _map(_BenchJob(cfg, args.repeats), specs, args.jobs):
        log.info("%s", report.summary())
        reports.append(report)
    write_csv(reports, args.csv)
    return 0


@dataclass
class Failure:
    spec: DatasetSpec
    cfg: PipelineConfig
    what: str
    point: tuple[float, float]

    def __str__(self) -> str:
        return (
            f"FAIL dataset={self.spec.label} n={self.spec.n} seed={self.spec.seed} "
            f"cfg={self.cfg.label()}: {self.what} {self.point!r}"
        )


def _inject_fault(buf, split, flags) -> None:
    # the farthest point from the anchor is always a hull vertex
    flags[split.l] = 0


def check_instance(spec: DatasetSpec, pts: np.ndarray, cfg: PipelineConfig,
                   *, inject_fault: bool = False, oracle=None) -> Failure | None:
    """Compare one pipeline run with the oracle; return the first problem found."""
    oracle = oracle if oracle is not None else monotone_chain(pts)
    trace = PipelineTrace()
    hull, _ = full_pipeline(pts, cfg, trace=trace, tamper=_inject_fault if inject_fault else None)
    for label, dropped in (("round 1", trace.round1_discarded()), ("round 2", trace.round2_discarded())):
        bad = ~strictly_inside_mask(oracle, dropped)
        if bad.any():
            p = tuple(dropped[np.argmax(bad)].tolist())
            return Failure(spec, cfg, f"{label} discarded a point not strictly inside the hull:", p)
    got, want = hull.vertex_set(), oracle.vertex_set()
    if got != want:
        missing = sorted(want - got)
        if missing:
            return Failure(spec, cfg, "hull vertex missing:", missing[0])
        return Failure(spec, cfg, "spurious hull vertex:", sorted(got - want)[0])
    return None


class _VerifyJob:
    def __init__(self, cfgs, inject_fault):
        self.cfgs = cfgs
        self.inject_fault = inject_fault

    def __call__(self, spec):
        pts = spec.materialize()
        oracle = monotone_chain(pts)
        for cfg in self.cfgs:
            fail = check_instance(spec, pts, cfg, inject_fault=self.inject_fault, oracle=oracle)
            if fail is not None:
                return fail
        return None


def verify_matrix(args) -> list[PipelineConfig]:
    chunks = args.chunks if args.chunks else list(DEFAULT_VERIFY_CHUNKS)
    cfgs = [PipelineConfig(chunk_count=k) for k in chunks]
    cfgs.append(PipelineConfig(chunked=False))
    cfgs.append(PipelineConfig(enable_round1=False))
    cfgs.append(PipelineConfig(enable_round2=False))
    cfgs.append(PipelineConfig(enable_round1=False, enable_round2=False))
    return cfgs


def cmd_verify(args) -> int:
    if not (args.input or args.obj or args.gen):
        args.gen = list(DEFAULT_VERIFY_KINDS)
    specs = _specs_from_args(args)
    cfgs = verify_matrix(args)
    checked = 0
    for fail in _map(_VerifyJob(cfgs, args.inject_fault), specs, args.jobs):
        if fail is not None:
            print(fail)
            return 1
        checked += 1
    print(f"ok: {checked} datasets x {len(cfgs)} configurations agree with the oracle")
    return 0


def cmd_gen(args) -> int:
    spec = DatasetSpec(args.gen, n=args.n[0], seed=args.seed[0])
    pts = spec.materialize()
    if args.out:
        datagen.save_points(pts, args.out)
    else:
        datagen.save_points(pts, stream=sys.stdout)
    return 0


def _add_source(p: argparse.ArgumentParser, multi: bool) -> None:
    nargs = "+" if multi else None
    src = p.add_mutually_exclusive_group()
    src.add_argument("--gen", choices=datagen.GENERATED_KINDS, nargs=nargs,
                     help="generate points of this kind")
    src.add_argument("--input", metavar="PATH", nargs=nargs, help="plain 'x y' point file")
    src.add_argument("--obj", metavar="PATH", nargs=nargs, help="OBJ mesh, vertices projected to XY")
    p.add_argument("--n", type=_positive, nargs="+", default=[1000], help="point count(s)")
    p.add_argument("--seed", type=int, nargs="+", default=[0], help="seed(s)")


def _add_config(p: argparse.ArgumentParser, multi_chunks: bool = False) -> None:
    if multi_chunks:
        p.add_argument("--chunks", type=_positive, nargs="+", default=None,
                       help="chunk counts for the second round (default: 1 2 7 1024)")
    else:
        p.add_argument("--chunks", type=_positive, default=1024,
                       help="slices per region in the second round (default: 1024)")
    p.add_argument("--no-round1", action="store_true", help="skip the quadrilateral round")
    p.add_argument("--no-round2", action="store_true", help="skip the angular round")
    p.add_argument("--sequential-discard", action="store_true",
                   help="walk each region as one slice")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hullsieve", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="compute one hull")
    _add_source(p, multi=False)
    _add_config(p)
    p.add_argument("--out", metavar="PATH", help="write hull vertices here (default: stdout)")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("bench", help="time the pipeline against the monotone chain baseline")
    _add_source(p, multi=True)
    _add_config(p)
    p.add_argument("--repeats", type=_positive, default=5)
    p.add_argument("--csv", metavar="PATH", help="append rows here (default: stdout)")
    p.add_argument("--jobs", type=_positive, default=1)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("verify", help="check hulls and discards against the oracle")
    _add_source(p, multi=True)
    p.set_defaults(n=[2000], seed=list(range(50)))
    _add_config(p, multi_chunks=True)
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--inject-fault", action="store_true",
                   help="drop a hull vertex in the second round (tests the checker)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="write a generated dataset")
    p.add_argument("--gen", "--kind", dest="gen", choices=datagen.GENERATED_KINDS, required=True)
    p.add_argument("--n", type=_positive, nargs=1, default=[1000])
    p.add_argument("--seed", type=int, nargs=1, default=[0])
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(message)s", stream=sys.stderr)
    if args.command == "run" and (len(args.n) > 1 or len(args.seed) > 1):
        parser.error("run takes a single --n and --seed")
    try:
        return args.func(args)
    except (OSError, HullError, ValueError) as exc:
        print(f"hullsieve: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
