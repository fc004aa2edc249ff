"""End-to-end acceptance checks; each records a PASS/FAIL line in the summary."""
import io
import itertools
import json
import math
import time

from oracles import box_partitions, partitions_between, row_corners, triangular_by_disjointness, triangular_up_to
from table1 import DELTA, DELTA1, DELTA2
from tripart.cli import main
from tripart.core import Partition, complementary_corner_cells, contains, partitions_of, staircase
from tripart.enumeration import (
    coprime_pair_series,
    count_delta_dfs,
    count_delta_gf,
    phi_inv,
    phi_map,
    rect_counts,
    square_count,
    triangle_counts,
)
from tripart.hull import is_triangular, is_triangular_reference
from tripart.lattice import (
    count_subpartitions,
    join,
    meet,
    mobius,
    mobius_reference,
    tyt_count_brute,
    tyt_count_two_row,
)
from tripart.words import (
    ChiTriple,
    balanced_count_formula,
    chi,
    chi_size,
    is_balanced,
    is_balanced_naive,
    omega,
    omega_inv,
    xi,
)


def cli(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def csv_column(text, name):
    lines = text.strip().splitlines()
    idx = lines[0].split(",").index(name)
    return [int(line.split(",")[idx]) for line in lines[1:]]


def test_table_reproduction(acceptance):
    start = time.perf_counter()
    _, counts = cli("count", "--max-n", "50", "--threads", "1")
    _, classes = cli("classes", "--max-n", "50", "--threads", "1")
    elapsed = time.perf_counter() - start
    got = {
        "delta": csv_column(counts, "count"),
        "delta1": csv_column(classes, "d1"),
        "delta2": csv_column(classes, "d2"),
    }
    want = {"delta": DELTA, "delta1": DELTA1, "delta2": DELTA2}
    misses = [
        f"{name}({n + 1}) published {want[name][n]} computed {got[name][n]}"
        for name in want
        for n in range(50)
        if got[name][n] != want[name][n]
    ]
    matched = 150 - len(misses)
    ok = not misses and elapsed < 5
    acceptance(1, "published table, 150 values", ok, f"{matched}/150 match, {elapsed:.2f}s; " + "; ".join(misses))
    assert ok, misses


def test_gf_history_and_agreement(acceptance):
    start = time.perf_counter()
    gf = count_delta_gf(200)
    dfs = count_delta_dfs(200)
    elapsed = time.perf_counter() - start
    history_ok = list(gf.values[1:40]) == DELTA[:39]
    agree = gf.values == dfs.values
    ok = history_ok and agree and elapsed < 60
    acceptance(2, "39 historical terms and GF = DFS to N = 200", ok, f"history={history_ok} agree={agree} {elapsed:.2f}s")
    assert ok


def _best_time(n, repeats=3):
    best = math.inf
    for _ in range(repeats):
        t = time.perf_counter()
        count_delta_dfs(n, 1)
        best = min(best, time.perf_counter() - t)
    return best


def test_performance_scaling(acceptance):
    count_delta_dfs(100, 1)  # compile or load the cached kernel
    t1k = _best_time(1000)
    sizes = [2500, 5000, 10000]
    times = [_best_time(n) for n in sizes]
    xs = [math.log(n) for n in sizes]
    ys = [math.log(t) for t in times]
    mx, my = sum(xs) / 3, sum(ys) / 3
    slope = sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / sum((x - mx) ** 2 for x in xs)
    ok = t1k <= 10 and times[-1] <= 120 and 1.5 <= slope <= 2.6
    acceptance(
        3,
        "DFS speed and scaling",
        ok,
        f"N=1e3 {t1k:.3f}s, N=1e4 {times[-1]:.2f}s, log-log slope {slope:.2f}",
    )
    assert ok


def _oracle_failures():
    fails = []
    # triangularity and removable/addable cells, exhaustive to size 25
    for n in range(26):
        for p in partitions_of(n):
            r = is_triangular(p, witness=False)
            ref = is_triangular_reference(p)
            if not (r.triangular == ref == triangular_by_disjointness(p)):
                fails.append(f"triangularity {p!r}")
                continue
            if not ref or not p:
                continue
            rem = sorted(c for c in row_corners(p) if is_triangular_reference(p.remove_cell(c)))
            add = sorted(c for c in complementary_corner_cells(p)[1:] if is_triangular_reference(p.add_cell(c)))
            if list(r.removable) != rem or list(r.addable) != add:
                fails.append(f"cells {p!r}")
    # Moebius function
    tri12 = triangular_up_to(12)
    for q in tri12:
        for p in tri12:
            if contains(q, p) and mobius(p, q) != mobius_reference(p, q):
                fails.append(f"mobius {p!r} {q!r}")
    # join and meet against brute bounds
    # A least upper bound lies inside every upper bound, in particular inside
    # the computed join, so searching between max(p, q) and the join suffices.
    tri10 = triangular_up_to(10)
    for p, q in itertools.combinations_with_replacement(tri10, 2):
        j = join(p, q)
        rho = Partition(max(a, b) for a, b in itertools.zip_longest(p, q, fillvalue=0))
        ub = [r for r in partitions_between(rho, j) if is_triangular_reference(r)] if contains(j, rho) else []
        least = [r for r in ub if all(contains(s, r) for s in ub)]
        lb = [r for r in tri10 if contains(p, r) and contains(q, r)]
        greatest = [r for r in lb if all(contains(r, s) for s in lb)]
        if least != [join(p, q)] or greatest != [meet(p, q)]:
            fails.append(f"join/meet {p!r} {q!r}")
    # omega round trips
    for p in triangular_up_to(40):
        if p and all(a > b for a, b in zip(p, p[1:])):
            w = omega(p)
            if omega_inv(w) != p or len(w) != p.width or w.count("1") != p.height:
                fails.append(f"omega {p!r}")
    for n in range(1, 17):
        for bits in itertools.product("01", repeat=n - 1):
            w = "1" + "".join(bits)
            if is_balanced(w) and omega(omega_inv(w)) != w:
                fails.append(f"omega_inv {w}")
    # chi / xi round trips
    wide40 = [p for p in triangular_up_to(40) if len(p) >= 2 and all(a > b for a, b in zip(p, p[1:]))]
    for p in wide40:
        t = chi(p)
        if xi(t) != p or chi_size(t) != p.size:
            fails.append(f"chi {p!r}")
    for n in range(1, 11):
        for bits in itertools.product("01", repeat=n):
            w = "".join(bits)
            if "0" not in w or not is_balanced(w):
                continue
            for m, d in itertools.product(range(1, 7), repeat=2):
                if m > d + 1 or (m == d + 1 and not is_balanced(w + "1")):
                    continue
                t = ChiTriple(m, d, w)
                p = xi(t)
                if chi(p) != t or chi_size(t) != p.size:
                    fails.append(f"xi {t}")
    # phi bijection and square-fit
    for p in triangular_up_to(25):
        if p and p[0] > 1 and phi_inv(phi_map(p)) != p:
            fails.append(f"phi {p!r}")
    for a, b, d, e in itertools.product(range(1, 9), repeat=4):
        if d < a and math.gcd(d, e) == 1:
            p = phi_inv((a, b, d, e))
            if phi_map(p) != (a, b, d, e):
                fails.append(f"phi_inv {(a, b, d, e)}")
            if max(a, b, d, e) > 6:
                continue
            for l in range(1, 11):
                fits = len(p) <= l and p[0] <= l
                if d < e:
                    inside = a >= d + 1 and b >= 1 and e * a + d * b <= e + d * (l + 1)
                else:
                    inside = a >= d + 1 and b >= 1 and e * a + d * b < e * (l + 1) + d
                if fits != inside:
                    fails.append(f"square fit {(a, b, d, e)} l={l}")
    return fails


def test_oracle_equivalence(acceptance):
    fails = _oracle_failures()
    ok = not fails
    acceptance(4, "oracle equivalence suites", ok, f"{len(fails)} disagreements " + "; ".join(fails[:5]))
    assert ok, fails[:20]


def _formula_failures():
    fails = []
    seq = [1, 2, 5, 12, 25, 48, 83]
    for l in range(7):
        closed = square_count(l)
        rec = count_subpartitions(staircase(l)) if l else 1
        brute = sum(1 for p in box_partitions(l, l) if is_triangular_reference(p))
        if not closed == rec == brute == seq[l]:
            fails.append(f"square l={l}: {closed} {rec} {brute}")
    for l in range(15):
        brute = sum(1 for bits in itertools.product("01", repeat=l) if is_balanced_naive("".join(bits)))
        if brute != balanced_count_formula(l):
            fails.append(f"lipatov l={l}")
    for l in range(1, 31):
        for e in range(2, l + 1):
            for d in range(1, e):
                if math.gcd(d, e) == 1:
                    s = triangle_counts(d, e, l)["less"] + triangle_counts(e, e - d, l)["geq"]
                    if s != math.comb(l - e + 2, 2):
                        fails.append(f"triangle {(d, e, l)}")
    for l in range(1, 9):
        rc = rect_counts(l)
        tri = [p for p in box_partitions(l, l) if is_triangular_reference(p)]
        checks = {
            "minus1": sum(1 for p in tri if p.width <= l - 1) if l >= 2 else None,
            "minus2": sum(1 for p in tri if p.width <= l - 2) if l >= 3 else None,
            "widthExact": sum(1 for p in tri if p.width == l),
            "narrowTall": sum(1 for p in tri if p.width == l - 1 and len(p) == l) if l >= 2 else None,
        }
        if checks != rc:
            fails.append(f"rect l={l}: {rc} vs {checks}")
    for size in range(3, 17):
        for t2 in range(1, size):
            t1 = size - t2
            if t1 >= t2 and t1 >= 2 * t2 - 1:
                if tyt_count_two_row(t1, t2) != tyt_count_brute(Partition([t1, t2])):
                    fails.append(f"tableaux {(t1, t2)}")
    delta = count_delta_dfs(2000)
    pp = coprime_pair_series(4001)
    for n in range(1, 2001):
        if not (pp[(n + 1) // 2] / 3 <= delta[n] <= pp[2 * n + 1]):
            fails.append(f"sandwich n={n}")
    return fails


def test_formula_suite(acceptance):
    fails = _formula_failures()
    ok = not fails
    acceptance(5, "closed-form formula suite", ok, f"{len(fails)} failures " + "; ".join(fails[:5]))
    assert ok, fails[:20]


def test_worked_example_goldens(acceptance):
    def doc(*argv):
        code, text = cli(*argv)
        return json.loads(text) if code == 0 else {"exit": code}

    results = {
        "join": doc("lattice", "join", "8,6,5,3,1", "4,3,3,3,2,2,1,1,1") == {"join": "8,7,6,5,4,3,2,1,1"},
        "chi": doc("encode", "chi", "12,9,7,4,1") == {"m": 1, "d": 2, "w": "1011"},
        "huge": doc("removable", "5^576,4^1037,3^1037,2^1036,1^1037") == {"removable": [[3, 2650]]},
        "omega": doc("encode", "omega", "8,6,5,3,1") == {"word": "10110101"},
        "75421": (lambda r: r["removable"] == [[1, 5], [7, 1]] and r["addable"] == [[3, 4], [6, 2]])(
            doc("check", "7,5,4,2,1")
        ),
        "65421": doc("check", "6,5,4,2,1")["removable"] == [[4, 3]],
        "65321": doc("check", "6,5,3,2,1")["removable"] == [[1, 5], [5, 2]],
    }
    ok = all(results.values())
    acceptance(6, "worked-example goldens via CLI", ok, ", ".join(f"{k}={'ok' if v else 'BAD'}" for k, v in results.items()))
    assert ok, results


def test_determinism_across_workers(acceptance):
    runs = {t: count_delta_dfs(5000, t).values for t in (1, 2, 8)}
    ok = runs[1] == runs[2] == runs[8]
    acceptance(7, "DFS determinism for 1/2/8 workers at N = 5000", ok, f"|Delta(5000)| = {runs[1][5000]}")
    assert ok
