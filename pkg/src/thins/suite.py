"""Run the lemma registry over finite universes and report the outcome."""
from __future__ import annotations

import json
import logging
import random
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from typing import Iterable

from .enumeration import (PER_SIZE_CAP, RELATION_CELL_CAP, enumerate_pers,
                          enumerate_relations)
from .formats import rel_from_dict, rel_to_dict
from .general import thins_rel
from .lemmas import REGISTRY, Lemma
from .rel import Carrier, Rel, TypeSig

log = logging.getLogger(__name__)

DEFAULT_SIGS = ("2x2", "2x3", "3x3")


def parse_sig(text: str) -> TypeSig:
    """``"2x3"`` → ``A2~B3``; ``"3x3"`` is the homogeneous ``A3~A3``."""
    try:
        a, b = (int(x) for x in text.lower().replace("~", "x").split("x"))
    except ValueError:
        raise ValueError(f"bad signature {text!r}; expected e.g. 2x3") from None
    if a < 1 or b < 1:
        raise ValueError(f"signature {text!r} needs nonempty carriers")
    src = Carrier("A", a)
    return TypeSig(src, src if a == b else Carrier("B", b))


@dataclass(frozen=True)
class SuiteConfig:
    max_size: int = 3
    sigs: tuple[str, ...] = DEFAULT_SIGS
    sample_budget: int = 2000
    seed: int = 0
    exhaustive_limit: int = 3
    per_cap: int = PER_SIZE_CAP
    cell_cap: int = RELATION_CELL_CAP

    def __post_init__(self):
        if self.max_size < 1:
            raise ValueError("carrier sizes must be at least 1")
        if self.sample_budget < 1:
            raise ValueError("sample budget must be positive")
        for s in self.sigs:
            parse_sig(s)


@dataclass
class LemmaReport:
    id: str
    group: str
    instances: int
    status: str
    counterexample: dict | None = None
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"


class Context:
    """Shared, lazily built quantification domains for one suite run."""

    def __init__(self, cfg: SuiteConfig):
        self.cfg = cfg
        self.small_sizes = tuple(range(1, min(2, cfg.max_size) + 1))
        self.sampled_rel_size = 3 if cfg.max_size >= 3 else 0
        self._sigs = tuple(parse_sig(s) for s in cfg.sigs)
        for s in self._sigs:
            enumerate_relations(s, cap=cfg.cell_cap)
        for n in range(1, cfg.max_size + 1):
            enumerate_pers(n, cap=cfg.per_cap)

    def rng(self, lemma_id: str) -> random.Random:
        return random.Random(f"{self.cfg.seed}/{lemma_id}")

    def per_universes(self, limit: int | None = None):
        top_size = self.cfg.max_size if limit is None else min(limit, self.cfg.max_size)
        return [enumerate_pers(n, cap=self.cfg.per_cap) for n in range(1, top_size + 1)]

    def rel_sigs(self):
        return self._sigs

    def relations(self, s: TypeSig):
        return enumerate_relations(s, cap=self.cfg.cell_cap)

    def thins_table(self, s: TypeSig) -> dict[Rel, list[Rel]]:
        return _thins_table(s, self.cfg.cell_cap)


@lru_cache(maxsize=None)
def _thins_table(s: TypeSig, cap: int) -> dict[Rel, list[Rel]]:
    rels = enumerate_relations(s, cap=cap)
    return {R: [S for S in rels if thins_rel(R, S)] for R in rels}


def encode_witness(inst: dict) -> dict:
    return {k: rel_to_dict(v) if isinstance(v, Rel) else v for k, v in inst.items()}


def decode_witness(data: dict) -> dict:
    return {k: rel_from_dict(v) if isinstance(v, dict) and "pairs" in v else v
            for k, v in data.items()}


def run_lemma(lem: Lemma, ctx: Context) -> LemmaReport:
    count = 0
    for inst in lem.instances(ctx, ctx.rng(lem.id)):
        count += 1
        try:
            ok = lem.check(**inst)
        except Exception as exc:  # a crash on one instance is a failure of that instance
            return LemmaReport(lem.id, lem.group, count, "fail", encode_witness(inst),
                               f"{type(exc).__name__}: {exc}")
        if not ok:
            return LemmaReport(lem.id, lem.group, count, "fail", encode_witness(inst))
    status = "pass" if count else "fail"
    return LemmaReport(lem.id, lem.group, count, status,
                       error=None if count else "no instances generated")


def run_lemma_suite(cfg: SuiteConfig, only: Iterable[str] | None = None) -> list[LemmaReport]:
    ctx = Context(cfg)
    ids = sorted(REGISTRY) if only is None else sorted(only)
    reports = []
    for lid in ids:
        if lid not in REGISTRY:
            raise KeyError(f"unknown lemma id {lid!r}")
        rep = run_lemma(REGISTRY[lid], ctx)
        log.info("%s %s (%d instances)", rep.status, rep.id, rep.instances)
        reports.append(rep)
    return reports


def replay(report_data: dict) -> list[tuple[str, bool]]:
    """Re-check every recorded counterexample; ``True`` means it still fails."""
    out = []
    for rep in report_data.get("reports", []):
        cx = rep.get("counterexample")
        if not cx:
            continue
        lem = REGISTRY[rep["id"]]
        try:
            still_fails = not lem.check(**decode_witness(cx))
        except Exception:
            still_fails = True
        out.append((rep["id"], still_fails))
    return out


def suite_passed(reports: list[LemmaReport]) -> bool:
    return all(r.passed for r in reports)


def report_dict(cfg: SuiteConfig, reports: list[LemmaReport]) -> dict:
    return {
        "config": asdict(cfg),
        "seed": cfg.seed,
        "status": "pass" if suite_passed(reports) else "fail",
        "reports": [asdict(r) for r in sorted(reports, key=lambda r: r.id)],
    }


def report_json(cfg: SuiteConfig, reports: list[LemmaReport]) -> str:
    return json.dumps(report_dict(cfg, reports), sort_keys=True, indent=2, ensure_ascii=False)


def report_text(cfg: SuiteConfig, reports: list[LemmaReport]) -> str:
    lines = [f"# thins lemma suite: sizes 1..{cfg.max_size}, sigs {','.join(cfg.sigs)}, "
             f"seed {cfg.seed}, sample budget {cfg.sample_budget}",
             "status\tlemma\tgroup\tinstances"]
    for r in sorted(reports, key=lambda r: r.id):
        lines.append(f"{r.status.upper()}\t{r.id}\t{r.group}\t{r.instances}")
        if r.counterexample:
            lines.append(f"#\tcounterexample\t{json.dumps(r.counterexample, sort_keys=True)}")
        if r.error:
            lines.append(f"#\terror\t{r.error}")
    passed = sum(r.passed for r in reports)
    lines.append(f"# {passed}/{len(reports)} passed")
    return "\n".join(lines)
