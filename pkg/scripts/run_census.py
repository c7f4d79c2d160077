"""Write ZHS and QHS censuses to disk as jsonl (or csv).

    python scripts/run_census.py --out results/ --zhs-amax 60 --qhs-amax 8
"""

import argparse
import time
from dataclasses import dataclass
from pathlib import Path

from seifert_taut.census import emit, enumerate_qhs, enumerate_zhs


@dataclass
class CensusConfig:
    out: Path = Path("results")
    fmt: str = "jsonl"
    zhs_n: tuple[int, ...] = (3, 4)
    zhs_amax: int = 60
    qhs_n: tuple[int, ...] = (3, 4)
    qhs_amax: int = 8
    b0_range: tuple[int, ...] | None = None


def run(cfg: CensusConfig):
    cfg.out.mkdir(parents=True, exist_ok=True)
    jobs = [(f"zhs_n{n}_a{cfg.zhs_amax}", lambda n=n: enumerate_zhs(n, cfg.zhs_amax)) for n in cfg.zhs_n]
    jobs += [
        (f"qhs_n{n}_a{cfg.qhs_amax}", lambda n=n: enumerate_qhs(n, cfg.qhs_amax, cfg.b0_range))
        for n in cfg.qhs_n
    ]
    for name, records in jobs:
        t0 = time.perf_counter()
        path = cfg.out / f"{name}.{cfg.fmt}"
        count = emit(records(), cfg.fmt, path)
        print(f"{name:20s} {count:8d} records  {time.perf_counter() - t0:6.1f} s  -> {path}")


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--out", type=Path, default=CensusConfig.out)
    p.add_argument("--format", dest="fmt", choices=("jsonl", "csv"), default="jsonl")
    p.add_argument("--zhs-n", type=int, nargs="+", default=list(CensusConfig.zhs_n))
    p.add_argument("--zhs-amax", type=int, default=CensusConfig.zhs_amax)
    p.add_argument("--qhs-n", type=int, nargs="+", default=list(CensusConfig.qhs_n))
    p.add_argument("--qhs-amax", type=int, default=CensusConfig.qhs_amax)
    p.add_argument("--b0", type=int, nargs="+")
    a = p.parse_args()
    run(CensusConfig(a.out, a.fmt, tuple(a.zhs_n), a.zhs_amax, tuple(a.qhs_n), a.qhs_amax,
                     tuple(a.b0) if a.b0 else None))


if __name__ == "__main__":
    main()
