"""Acceptance suite: one PASS/FAIL line per criterion, printed to the terminal."""

import shutil
import subprocess
import sys
import time

from sigmalat.classify import (PsigmaTMode, corollary2_17_check, is_MT, is_PsigmaT, is_PST, is_PT,
                               is_QsigmaT, is_T_sigma, theorem2_3_check, theorem3_3_clauses)
from sigmalat.cli import main
from sigmalat.corpus import builtin_corpus
from sigmalat.formations import chief_series, is_soluble
from sigmalat.lattice import _bits, get_lattice, subnormal_by_closures
from sigmalat.modularity import (Strategy, is_m_group, is_modular_idx, is_quasinormal_idx,
                                 is_sigma_quasinormal_idx)
from sigmalat.sigma import is_sigma_soluble

from conftest import GRID, group, names, sigma


def report(capsys, n, title, ok, info=""):
    with capsys.disabled():
        print(f"\nACCEPTANCE {n:>2} {'PASS' if ok else 'FAIL'}  {title}" + (f"  [{info}]" if info else ""))
    assert ok, info


def all_groups():
    return [e.name for e in builtin_corpus()]


def test_01_oracle_modes_agree(capsys):
    bad, checks = [], 0
    for name in names(100):
        G = group(name)
        lat = get_lattice(G)
        t = lat.index(G.whole())
        for a in _bits(lat.down[t]):
            checks += 2
            if is_modular_idx(lat, a, t, Strategy.DIRECT) != is_modular_idx(lat, a, t, Strategy.REDUCED):
                bad.append((name, "modular", a))
            if is_quasinormal_idx(lat, a, t, Strategy.FULL) != is_quasinormal_idx(lat, a, t, Strategy.CYCLIC):
                bad.append((name, "quasinormal", a))
        for spec in GRID:
            s = sigma(spec)
            checks += 2
            if is_PsigmaT(s, G, PsigmaTMode.TRANSITIVE).verdict != is_PsigmaT(s, G, PsigmaTMode.SUBNORMAL).verdict:
                bad.append((name, spec, "PsigmaT"))
            if is_QsigmaT(s, G, Strategy.DIRECT).verdict != is_QsigmaT(s, G, Strategy.REDUCED).verdict:
                bad.append((name, spec, "QsigmaT"))
    report(capsys, 1, "DIRECT/REDUCED, FULL/CYCLIC, TRANSITIVE/SUBNORMAL agree for |G| <= 100",
           not bad, f"{checks} comparisons, {len(bad)} mismatches {bad[:3]}")


def test_02_abelian_hall_equivalence(capsys):
    bad, seen = [], {True: 0, False: 0}
    for name in all_groups():
        G = group(name)
        for spec in GRID:
            s = sigma(spec)
            if not is_sigma_soluble(s, G):
                continue
            direct = is_PsigmaT(s, G).verdict
            bundle = theorem2_3_check(s, G).verdict
            if direct is None:
                continue
            seen[direct] += 1
            if direct != bundle:
                bad.append((name, spec))
    report(capsys, 2, "PsigmaT verdict equals abelian odd-order Hall bundle on sigma-soluble groups",
           not bad and seen[True] > 0 and seen[False] > 0,
           f"{seen[True]} true / {seen[False]} false cases, {len(bad)} mismatches {bad[:3]}")


def test_03_quasinormal_iff_modular_subnormal(capsys):
    bad, checks = [], 0
    for name in names(100):
        G = group(name)
        lat = get_lattice(G)
        t = lat.index(G.whole())
        for a in _bits(lat.down[t]):
            checks += 1
            qn = is_quasinormal_idx(lat, a, t, Strategy.FULL)
            ms = is_modular_idx(lat, a, t, Strategy.DIRECT) and subnormal_by_closures(lat[a], G)
            if qn != ms:
                bad.append((name, a))
    report(capsys, 3, "quasinormal <=> modular and subnormal for |G| <= 100",
           not bad, f"{checks} subgroups, {len(bad)} mismatches {bad[:3]}")


def test_04_mt_iff_m_group(capsys):
    bad, checks = [], 0
    for name in all_groups():
        G = group(name)
        if not is_soluble(G):
            continue
        checks += 1
        if is_MT(G).verdict != is_m_group(G):
            bad.append(name)
    s3, d8, q8 = is_MT(group("S3")), is_MT(group("D8")), is_MT(group("Q8"))
    W, lat = d8.witness, get_lattice(group("D8"))
    # <s> for a reflection s: order 2 and not normal
    witness_ok = W is not None and W.order == 2 and not lat.is_normal_idx(lat.index(W), len(lat) - 1)
    ok = not bad and s3.verdict is True and d8.verdict is False and witness_ok and q8.verdict is True
    report(capsys, 4, "soluble MT <=> M-group; S3 true, D8 false with <s>, Q8 true", ok,
           f"{checks} soluble groups, mismatches {bad}")


def test_05_t_sigma(capsys):
    bad, checks = [], 0
    for name in all_groups():
        G = group(name)
        for spec in GRID:
            s = sigma(spec)
            if not is_sigma_soluble(s, G):
                continue
            checks += 1
            if is_T_sigma(s, G).verdict != corollary2_17_check(s, G).verdict:
                bad.append((name, spec))
    report(capsys, 5, "T_sigma <=> T and Dedekind Hall sigma_i-subgroups on sigma-soluble groups",
           not bad, f"{checks} cases, {len(bad)} mismatches {bad[:3]}")


def test_06_a5(capsys):
    G = group("A5")
    s = sigma("classes=[[2,3,5]];rest=singletons")
    pt, q = is_PT(G), is_QsigmaT(s, G)
    ok = pt.verdict is True and q.verdict is False and q.witness is not None and q.witness.order == 2
    report(capsys, 6, "A5 is PT and not QsigmaT for sigma={{2,3,5}} rest singletons, order-2 witness", ok,
           f"PT={pt.verdict} QsigmaT={q.verdict} witness order={q.witness.order if q.witness else None}")


SL25_SCRIPT = """
from sigmalat.classify import condition_N, is_PST, is_T, robinson_complex, theorem2_20_check
from sigmalat.corpus import corpus_entry
G = corpus_entry("SL(2,5)").build()
cx = robinson_complex("sigma1", G)
chk = theorem2_20_check("sigma1", G)
print(is_T(G).verdict, cx.D.order, cx.Z.order, cx.k, chk.verdict, chk.details["i"], chk.details["ii"],
      chk.details["iii"], is_PST(G).verdict, condition_N(G, [2]).verdict)
"""


def test_07_sl25(capsys):
    # a fresh interpreter so the timing includes lattice construction
    start = time.monotonic()
    proc = subprocess.run([sys.executable, "-c", SL25_SCRIPT], capture_output=True, text=True)
    elapsed = time.monotonic() - start
    got = proc.stdout.split()
    ok = got == ["True", "120", "2", "1", "True", "True", "True", "True", "True", "True"] and elapsed <= 60
    report(capsys, 7, "SL(2,5) end to end", ok, f"T D Z k check i ii iii PST N_2 = {' '.join(got)}; "
           f"{elapsed:.1f}s {proc.stderr[-200:]}")


def test_08_sl23(capsys):
    G = group("SL(2,3)")
    chk = theorem2_3_check(sigma("sigma1"), G)
    pst = is_PST(G)
    D = chk.objects["D"]
    W = pst.witness
    ok = (chk.verdict is False and D.order == 8 and chk.details["D_abelian"] is False and pst.verdict is False
          and W is not None and W.order == 4 and G.element_orders[W.indices].max() == 4 and chk.verdict == pst.verdict)
    report(capsys, 8, "SL(2,3) negative control", ok,
           f"check={chk.verdict} |D|={D.order} PST={pst.verdict} witness order={W.order if W else None}")


def test_09_sigma_quasinormal_sweep(capsys):
    found, bad = 0, []
    for name in all_groups():
        G = group(name)
        lat = get_lattice(G)
        t = lat.index(G.whole())
        for spec in GRID:
            s = sigma(spec)
            for a in _bits(lat.down[t]):
                if is_sigma_quasinormal_idx(s, lat, a, t):
                    found += 1
                    clauses = theorem3_3_clauses(s, lat[a], G)
                    if not all(clauses.values()):
                        bad.append((name, spec, a, clauses))
    report(capsys, 9, "every sigma-quasinormal subgroup satisfies the structural clauses",
           not bad and found > 0, f"{found} subgroups, {len(bad)} violations {bad[:2]}")


def test_10_jordan_holder(capsys):
    bad = []
    for name in names(200):
        G = group(name)
        sigs = {tuple(chief_series(G, seed=seed).signature()) for seed in (None, 1, 2)}
        if len(sigs) != 1:
            bad.append(name)
    report(capsys, 10, "chief factor multiset stable across seeded series for |G| <= 200",
           not bad, f"{len(names(200))} groups, unstable {bad}")


def test_11_determinism(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("SIGMALAT_CACHE_DIR", str(tmp_path / "cache"))

    def run(out, workers):
        code = main(["corpus", "--workers", str(workers), "--out", str(tmp_path / out)])
        return code, (tmp_path / out).read_bytes()

    runs = [run("cold.jsonl", 1), run("warm.jsonl", 4)]
    shutil.rmtree(tmp_path / "cache")
    runs.append(run("cleared.jsonl", 3))
    reports = {r for _, r in runs}
    ok = all(code == 0 for code, _ in runs) and len(reports) == 1 and runs[0][1]
    report(capsys, 11, "corpus reports byte-identical across runs, worker counts and cache state", ok,
           f"{len(runs[0][1].splitlines())} records, {len(reports)} distinct reports")
