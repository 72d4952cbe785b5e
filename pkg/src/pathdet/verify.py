"""Sweep driver for the identity catalog.

Each check id expands a sweep configuration into independent cells; cells
are pure and may be fanned out across worker threads.  The report is a
plain dict matching the documented JSON schema: {command, config, cells,
summary}, with polynomials serialized in canonical text form.
"""
from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import comb
from typing import Callable, Iterable

from . import closedform, connection, hypergeom
from .closedform import CorollaryId, TheoremId
from .hankel import HankelSpec, build_hankel, det_bareiss, det_bareiss_int, det_cofactor, hankel_transform
from .paths import Point, gf_dp, gf_restricted, gf_restricted_reflection, gf_unrestricted, prefix_gf, spec_prefix_int, spec_endpoint_int
from .ring import LaurentPoly, PolyMatrix

__all__ = ["SweepConfig", "CapExceeded", "CHECK_IDS", "run_checks", "resolve_check_ids"]


class CapExceeded(ValueError):
    """A requested sweep exceeds the configured hard cap."""


@dataclass
class SweepConfig:
    """Ranges and execution options for a verification sweep."""

    n_max: int | None = None  # None: per-check default
    k_max: int | None = None
    shifts: tuple[int, ...] = (0, 1)
    theorems: tuple[str, ...] = ("all",)
    parallel: bool = False
    workers: int = 4
    output_format: str = "json"
    n_cap_symbolic: int = 12
    n_cap_integer: int = 24
    allow_over_cap: bool = False

    def bounded(self, default_n: int, default_k: int, cap: int) -> tuple[int, int]:
        if self.n_max is None:
            n = default_n if self.allow_over_cap else min(default_n, cap)
        else:
            n = self.n_max
            if n > cap and not self.allow_over_cap:
                raise CapExceeded(f"n_max={n} exceeds the hard cap {cap}")
        k = self.k_max if self.k_max is not None else default_k
        return n, k


def _cell(params: dict, ok: bool, lhs=None, rhs=None, diff=None, status=None) -> dict:
    return {
        "params": params,
        "status": status if status is not None else ("pass" if ok else "fail"),
        "lhs": lhs,
        "rhs": rhs,
        "diff": diff,
    }


def _render(v) -> str:
    if isinstance(v, LaurentPoly):
        return v.render()
    return str(v)


Job = Callable[[], dict]


def _theorem_jobs(check: str, cfg: SweepConfig) -> list[Job]:
    tid = TheoremId(check.upper())
    shift = 0 if tid in (TheoremId.T1, TheoremId.T3) else 1
    if shift not in cfg.shifts:
        return []
    prefix_family = tid in (TheoremId.T3, TheoremId.T4)
    n_max, k_max = cfg.bounded(10, 3, cfg.n_cap_symbolic)

    def job(n: int, k: int) -> dict:
        if prefix_family:
            source = lambda i: prefix_gf(i, k)
        else:
            source = lambda i: gf_restricted(i, 0, k)
        det = det_bareiss(build_hankel(HankelSpec(n, shift, source)))
        rhs = closedform.theorem_rhs(tid, n, k)
        diff = det - rhs
        return _cell(
            {"check": check, "n": n, "k": k, "shift": shift},
            diff.is_zero,
            _render(det),
            _render(rhs),
            None if diff.is_zero else _render(diff),
        )

    return [lambda n=n, k=k: job(n, k) for n in range(1, n_max + 1) for k in range(k_max + 1)]


def _corollary_jobs(check: str, cfg: SweepConfig) -> list[Job]:
    cid = CorollaryId(check.upper())
    n_max, k_max = cfg.bounded(16, 4, cfg.n_cap_integer)

    # only these two ids may report a literal-table disagreement; the
    # specialized theorem stays authoritative for them
    reportable = cid in (CorollaryId.C14, CorollaryId.C16)

    def job(n: int, k: int) -> dict:
        det = det_bareiss_int(
            [[closedform.corollary_lhs_entry(cid, i, j, k) for j in range(n)] for i in range(n)]
        )
        value, table, specialized = closedform.corollary_rhs_dual(cid, n, k)
        ok = det == value and (table == specialized or reportable)
        status = "pass" if ok else "fail"
        if ok and table != specialized:
            status = "table-mismatch"
        return _cell(
            {"check": check, "n": n, "k": k},
            ok,
            str(det),
            str(value),
            None if ok else str(det - value),
            status=status,
        )

    return [lambda n=n, k=k: job(n, k) for n in range(1, n_max + 1) for k in range(k_max + 1)]


def _identity_jobs(check: str, cfg: SweepConfig) -> list[Job]:
    if check == "lemma5":
        n_max, _ = cfg.bounded(10, 0, cfg.n_cap_symbolic)

        def job5(n: int, j: int) -> dict:
            lhs = connection.last_row_alt(n, j)
            rhs = connection.connection_matrix(n).entry(n - 1, j)
            diff = lhs - rhs
            return _cell({"check": check, "n": n, "j": j}, diff.is_zero,
                         _render(lhs), _render(rhs), None if diff.is_zero else _render(diff))

        return [lambda n=n, j=j: job5(n, j) for n in range(2, n_max + 1) for j in range(n - 1)]

    if check == "lemma6":
        n_max, _ = cfg.bounded(12, 0, cfg.n_cap_symbolic)

        def job6(n: int) -> dict:
            det = det_bareiss(connection.connection_matrix(n))
            ok = det == 1
            return _cell({"check": check, "n": n}, ok, _render(det), "1",
                         None if ok else _render(det - 1))

        return [lambda n=n: job6(n) for n in range(1, n_max + 1)]

    if check == "lemma7":
        n_max, _ = cfg.bounded(12, 0, cfg.n_cap_symbolic)
        return [
            lambda n=n: _cell({"check": check, "n": n}, connection.check_lemma7(n))
            for n in range(1, n_max + 1)
        ]

    if check == "lemma8":
        n_max, k_max = cfg.bounded(10, 4, cfg.n_cap_symbolic)
        return [
            lambda m=m, k=k: _cell({"check": check, "m": m, "k": k}, connection.check_lemma8(m, k))
            for m in range(n_max + 1)
            for k in range(k_max + 1)
        ]

    if check == "lemma9":
        n_max, k_max = cfg.bounded(7, 3, cfg.n_cap_symbolic)
        return [
            lambda m=m, n=n, k=k: _cell(
                {"check": check, "m": m, "n": n, "k": k}, connection.check_lemma9(m, n, k)
            )
            for n in range(1, n_max + 1)
            for m in range(n + 1)
            for k in range(k_max + 1)
        ]

    if check in ("lemma11", "lemma12"):
        shift = 0 if check == "lemma11" else 1
        if shift not in cfg.shifts:
            return []
        n_max, k_max = cfg.bounded(8, 3, cfg.n_cap_symbolic)
        return [
            lambda n=n, k=k: _cell(
                {"check": check, "n": n, "k": k, "shift": shift},
                connection.check_factorization(n, k, shift),
            )
            for n in range(1, n_max + 1)
            for k in range(k_max + 1)
        ]

    if check == "eq41":
        n_max, k_max = cfg.bounded(10, 4, cfg.n_cap_symbolic)
        return [
            lambda i=i, j=j, k=k: _cell(
                {"check": check, "i": i, "j": j, "k": k}, connection.check_path_cut(i, j, k)
            )
            for i in range(n_max + 1)
            for j in range(n_max + 1 - i)
            for k in range(k_max + 1)
        ]

    raise ValueError(f"unknown identity check {check!r}")


def _expected_motzkin_shift1(n: int) -> int:
    if n % 3 == 0:
        return (-1) ** (n // 3)
    if n % 3 == 1:
        return (-1) ** ((n - 1) // 3)
    return 0


def _transform_jobs(check: str, cfg: SweepConfig) -> list[Job]:
    n_max, _ = cfg.bounded(16, 0, cfg.n_cap_integer)

    def catalan(m: int) -> int:
        return comb(2 * m, m) // (m + 1)

    def motzkin(m: int) -> int:
        return spec_endpoint_int(Point.OMEGA, m, 0, 0, True)

    def mp(m: int) -> int:
        return spec_prefix_int(Point.OMEGA, m, 0)

    cases = {
        "mp-transform": [("mp", mp, 0, lambda n: 1)],
        "catalan-transform": [
            ("catalan", catalan, 0, lambda n: 1),
            ("catalan", catalan, 1, lambda n: 1),
        ],
        "motzkin-transform": [
            ("motzkin", motzkin, 0, lambda n: 1),
            ("motzkin", motzkin, 1, _expected_motzkin_shift1),
        ],
    }[check]

    jobs: list[Job] = []
    for name, source, shift, expected in cases:
        def job(name=name, source=source, shift=shift, expected=expected) -> dict:
            got = hankel_transform(source, n_max, shift)
            want = [expected(n) for n in range(1, n_max + 1)]
            ok = got == want
            return _cell(
                {"check": check, "sequence": name, "shift": shift, "count": n_max},
                ok,
                " ".join(map(str, got)),
                " ".join(map(str, want)),
                None,
            )

        jobs.append(job)
    return jobs


def _oracle_jobs(check: str, cfg: SweepConfig) -> list[Job]:
    if check == "gf-oracle":
        n_max, _ = cfg.bounded(10, 0, cfg.n_cap_symbolic)

        def job(n: int) -> dict:
            for k in range(n + 1):
                for l in range(n + 1):
                    closed = gf_restricted(n, k, l)
                    if closed != gf_dp(n, k, l, True) or closed != gf_restricted_reflection(n, k, l):
                        return _cell({"check": check, "n": n, "family": "restricted"}, False)
            for k in range(-n, n + 1):
                for l in range(-n, n + 1):
                    if gf_unrestricted(n, k, l) != gf_dp(n, k, l, False):
                        return _cell({"check": check, "n": n, "family": "unrestricted"}, False)
            return _cell({"check": check, "n": n}, True)

        return [lambda n=n: job(n) for n in range(n_max + 1)]

    if check == "det-oracle":
        def det_job(n: int, k: int, shift: int) -> dict:
            m = build_hankel(HankelSpec(n, shift, lambda i: prefix_gf(i, k)))
            a = det_bareiss(m)
            b = det_cofactor(m)
            ok = a == b
            return _cell({"check": check, "n": n, "k": k, "shift": shift}, ok,
                         _render(a), _render(b), None if ok else _render(a - b))

        def random_job(batch: int) -> dict:
            rng = random.Random(1000 + batch)
            for _ in range(25):
                dim = rng.randint(2, 5)
                rows = [
                    [_random_poly(rng) for _ in range(dim)]
                    for _ in range(dim)
                ]
                m = PolyMatrix(rows)
                if det_bareiss(m) != det_cofactor(m):
                    return _cell({"check": check, "batch": batch}, False)
            return _cell({"check": check, "batch": batch, "matrices": 25}, True)

        jobs: list[Job] = [
            lambda n=n, k=k, s=s: det_job(n, k, s)
            for n in range(1, 8)
            for k in range(4)
            for s in (0, 1)
        ]
        jobs += [lambda b=b: random_job(b) for b in range(8)]
        return jobs

    raise ValueError(f"unknown oracle check {check!r}")


def _random_poly(rng: random.Random) -> LaurentPoly:
    terms = {}
    for _ in range(rng.randint(0, 4)):
        terms[(rng.randint(-2, 3), rng.randint(-2, 3))] = rng.randint(-9, 9)
    return LaurentPoly(terms)


def _hyper_jobs(check: str, cfg: SweepConfig) -> list[Job]:
    from fractions import Fraction

    if check == "chu":
        def job(batch: int) -> dict:
            rng = random.Random(2000 + batch)
            done = 0
            while done < 25:
                a = Fraction(rng.randint(-20, 20), rng.randint(1, 9))
                c = Fraction(rng.randint(-20, 20), rng.randint(1, 9))
                count = rng.randint(0, 12)
                if c.denominator == 1 and c <= 0 and 1 - int(c) <= count:
                    continue
                done += 1
                if not hypergeom.check_chu_vandermonde(a, count, c):
                    return _cell({"check": check, "batch": batch, "a": str(a), "c": str(c), "N": count}, False)
            return _cell({"check": check, "batch": batch, "instances": 25}, True)

        return [lambda b=b: job(b) for b in range(8)]

    if check == "lemma10":
        def job10(batch: int) -> dict:
            rng = random.Random(3000 + batch)
            done = 0
            while done < 20:
                n = rng.randint(1, 10)
                a = Fraction(rng.randint(-12, 12), rng.randint(1, 6))
                b = Fraction(rng.randint(-12, 12), rng.randint(1, 6))
                try:
                    ok = hypergeom.check_lemma10(n, a, b)
                except (ZeroDivisionError, ValueError):
                    continue
                done += 1
                if not ok:
                    return _cell({"check": check, "batch": batch, "n": n, "A": str(a), "B": str(b)}, False)
            return _cell({"check": check, "batch": batch, "instances": 20}, True)

        return [lambda b=b: job10(b) for b in range(5)]

    raise ValueError(f"unknown hypergeometric check {check!r}")


_BUILDERS: dict[str, Callable[[str, SweepConfig], list[Job]]] = {}
for _id in ("t1", "t2", "t3", "t4"):
    _BUILDERS[_id] = _theorem_jobs
for _id in ("c13", "c14", "c15", "c16", "c17", "c18", "t19"):
    _BUILDERS[_id] = _corollary_jobs
for _id in ("lemma5", "lemma6", "lemma7", "lemma8", "lemma9", "lemma11", "lemma12", "eq41"):
    _BUILDERS[_id] = _identity_jobs
for _id in ("mp-transform", "catalan-transform", "motzkin-transform"):
    _BUILDERS[_id] = _transform_jobs
for _id in ("gf-oracle", "det-oracle"):
    _BUILDERS[_id] = _oracle_jobs
for _id in ("chu", "lemma10"):
    _BUILDERS[_id] = _hyper_jobs

CHECK_IDS = tuple(_BUILDERS)

_GROUPS = {
    "all": CHECK_IDS,
    "theorems": ("t1", "t2", "t3", "t4"),
    "corollaries": ("c13", "c14", "c15", "c16", "c17", "c18", "t19"),
    "lemmas": ("lemma5", "lemma6", "lemma7", "lemma8", "lemma9", "lemma11", "lemma12"),
    "transforms": ("mp-transform", "catalan-transform", "motzkin-transform"),
    "oracles": ("gf-oracle", "det-oracle"),
    "hypergeometric": ("chu", "lemma10"),
}


def resolve_check_ids(names: Iterable[str]) -> list[str]:
    out: list[str] = []
    for name in names:
        lowered = name.lower()
        if lowered in _GROUPS:
            ids = _GROUPS[lowered]
        elif lowered in _BUILDERS:
            ids = (lowered,)
        else:
            raise ValueError(f"unknown check id {name!r}; known: {', '.join(CHECK_IDS)}")
        for check in ids:
            if check not in out:
                out.append(check)
    return out


def run_checks(cfg: SweepConfig) -> dict:
    """Run the selected checks and assemble the report dict."""
    ids = resolve_check_ids(cfg.theorems)
    jobs: list[Job] = []
    for check in ids:
        jobs.extend(_BUILDERS[check](check, cfg))
    if cfg.parallel and cfg.workers > 1:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            cells = list(pool.map(lambda j: j(), jobs))
    else:
        cells = [j() for j in jobs]
    failed = sum(1 for c in cells if c["status"] == "fail")
    mismatched = sum(1 for c in cells if c["status"] == "table-mismatch")
    report = {
        "command": "verify",
        "config": {
            "checks": ids,
            "n_max": cfg.n_max,
            "k_max": cfg.k_max,
            "shifts": list(cfg.shifts),
            "parallel": cfg.parallel,
        },
        "cells": cells,
        "summary": {
            "total": len(cells),
            "passed": sum(1 for c in cells if c["status"] == "pass"),
            "failed": failed,
            "table_mismatches": mismatched,
        },
    }
    return report
