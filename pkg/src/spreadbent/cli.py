"""Command-line driver: list candidate pools, build single functions,
run the two benchmark sweeps, and self-check the whole pipeline.

Exit codes: 0 success, 1 self-check failure, 2 bad arguments, 3 construction
rejected (non-coprime family, wrong family size, overlapping kernels).

Data goes to stdout or --out; progress goes to stderr. Sweep output is
byte-identical for every --jobs setting: families are enumerated, numbered,
and emitted in catalog order no matter how the per-family analysis is
distributed across workers.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import multiprocessing
import os
import sys
from collections import Counter

import numpy as np

from .boolfun import (
    algebraic_degree,
    anf,
    format_anf,
    from_spread,
    walsh_transform,
)
from .errors import (
    BentCheckFailed,
    BothZero,
    DegenerateMap,
    DimensionMismatch,
    NotCoprime,
    OverlapDetected,
    SpreadbentError,
    WrongSpreadSize,
)
from .families import (
    TAG_PRODUCT,
    TAG_SQUARE,
    FamilySpec,
    build_bent,
    candidate_pool,
    coprime_subsets,
    enumerate_families,
    manifest_line,
    nonzero_constant_members,
    verify_desarguesian_equivalence,
)
from .gf2e import describe, fe_inv, fe_mul, field
from .lrs import build_matrix, build_partial_spread, kernel, sylvester_resultant_nonzero, trivial_intersection
from .poly import (
    closed_form_family_count,
    enumerate_irreducibles,
    format_poly,
    gauss_count,
    one,
    parse_poly,
    poly,
    poly_gcd,
)
from .rank2 import classify, development_rank

CSV_HEADER = (
    "family_id,type,l,b,polys,tt_hex,weight,degree,nonlinearity,rank,classification"
).split(",")

CONSTRUCTION_ERRORS = (
    NotCoprime,
    WrongSpreadSize,
    OverlapDetected,
    BentCheckFailed,
    DegenerateMap,
    DimensionMismatch,
    BothZero,
)


# ---------------------------------------------------------------- sweeps

_KERNELS = []  # per-process copy of the pool's kernels, set by _init_worker


def _init_worker(kernels):
    global _KERNELS
    _KERNELS = kernels


def _analyze_item(item):
    """(family_id, plus_type, member indices) -> analysis tuple.

    Runs in worker processes; everything heavy (kernels) comes from the
    initializer, so the item itself stays tiny.
    """
    fid, plus, idxs = item
    tt = from_spread([_KERNELS[i] for i in idxs], plus_type=plus)
    m = tt.n // 2
    spectrum = walsh_transform(tt)
    mags = np.abs(spectrum.values)
    if mags.min() != (1 << m) or mags.max() != (1 << m):
        raise BentCheckFailed(f"family {fid} produced a non-flat spectrum")
    nl = (1 << (tt.n - 1)) - (1 << (m - 1))
    degree = algebraic_degree(anf(tt))
    rank = development_rank(tt)
    return (fid, tt.hex(), tt.weight(), degree, nl, rank, classify(rank, m))


def _run_sweep(families, kernels, member_index, jobs):
    items = [
        (fs.family_id, fs.spread_type == "PS+", tuple(member_index[p] for p in fs.polys))
        for fs in families
    ]
    results = []
    if jobs == 1:
        _init_worker(kernels)
        for done, item in enumerate(items, 1):
            results.append(_analyze_item(item))
            if done % 2000 == 0:
                print(f"  analyzed {done}/{len(items)}", file=sys.stderr)
    else:
        with multiprocessing.Pool(jobs, initializer=_init_worker, initargs=(kernels,)) as pool:
            chunk = max(1, len(items) // (jobs * 8))
            for done, row in enumerate(pool.imap(_analyze_item, items, chunksize=chunk), 1):
                results.append(row)
                if done % 2000 == 0:
                    print(f"  analyzed {done}/{len(items)}", file=sys.stderr)
    return results


def _sweep_catalog(spec, b, sizes, jobs, include_e_infinity=False):
    """Enumerate, build, and analyze the full catalog for each family size.

    Returns (families, analysis rows) with both lists concatenated over
    sizes in the given order, preserving per-catalog numbering.
    """
    pool = candidate_pool(spec, b, include_e_infinity=include_e_infinity)
    kernels = [kernel(build_matrix(p, b)) for p in pool.members]
    member_index = {p: i for i, p in enumerate(pool.members)}
    all_families, all_results = [], []
    for t in sizes:
        families = enumerate_families(pool, t)
        print(f"catalog l={spec.l} b={b} t={t}: {len(families)} families", file=sys.stderr)
        all_families.extend(families)
        all_results.extend(_run_sweep(families, kernels, member_index, jobs))
    return all_families, all_results


def _records(families, results):
    rows = []
    for fs, (fid, tt_hex, weight, degree, nl, rank, cls) in zip(families, results):
        assert fid == fs.family_id
        polys = ";".join(format_poly(p) for p in fs.polys)
        rows.append(
            [fs.family_id, fs.spread_type, fs.l, fs.b, polys,
             tt_hex, weight, degree, nl, rank, cls]
        )
    return rows


def _histogram_text(rows):
    blocks = []
    for spread_type in ("PS-", "PS+"):
        sub = [r for r in rows if r[1] == spread_type]
        if not sub:
            continue
        lines = [f"{spread_type} rank distribution (l={sub[0][2]}, b={sub[0][3]}, n={2 * sub[0][2] * sub[0][3]})"]
        counts = Counter(r[9] for r in sub)
        for rank in sorted(counts):
            lines.append(f"  rank {rank}: {counts[rank]}")
        lines.append(f"  total: {len(sub)}")
        blocks.append("\n".join(lines))
    return "\n".join(blocks) + "\n"


def _csv_text(rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    writer.writerows(rows)
    return buf.getvalue()


def _emit(text, out):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        print(f"wrote {out}", file=sys.stderr)


def _resolve_jobs(requested):
    if requested is None:
        env = os.environ.get("SPREADBENT_JOBS", "")
        requested = int(env) if env else 0
    if requested < 0:
        raise ValueError(f"--jobs must be >= 0, got {requested}")
    return requested if requested else (os.cpu_count() or 1)


# ---------------------------------------------------------------- commands

def cmd_polys(args):
    spec = field(args.l)
    pool = candidate_pool(spec, args.b, include_e_infinity=args.include_e_infinity)
    counts = {}
    for tag in pool.tags:
        counts[tag] = counts.get(tag, 0) + 1
    breakdown = ", ".join(f"{tag}: {n}" for tag, n in counts.items())
    print(f"# pool {describe(spec)} b={args.b}: {len(pool.members)} members ({breakdown})")
    for p, tag in zip(pool.members, pool.tags):
        print(f"{format_poly(p)}  {tag}")
    return 0


def cmd_build(args):
    spec = field(args.l)
    m = args.l * args.b
    plus = args.type == "ps+"
    t = (1 << (m - 1)) + (1 if plus else 0)
    if args.family_id is not None:
        pool = candidate_pool(spec, args.b, include_e_infinity=args.include_e_infinity)
        families = enumerate_families(pool, t)
        if not 0 <= args.family_id < len(families):
            print(
                f"error: family id {args.family_id} out of range: the "
                f"l={args.l} b={args.b} {families[0].spread_type if families else args.type} "
                f"catalog has {len(families)} families",
                file=sys.stderr,
            )
            return 2
        fs = families[args.family_id]
    else:
        polys = tuple(parse_poly(spec, text) for text in args.polys.split(";"))
        fs = FamilySpec(
            l=args.l, b=args.b, m=m, n=2 * m, polys=polys,
            spread_type="PS+" if plus else "PS-", family_id=-1,
        )
    tt = build_bent(fs)
    spectrum = walsh_transform(tt)
    nl = (1 << (tt.n - 1)) - int(np.abs(spectrum.values).max()) // 2
    a = anf(tt)
    rank = development_rank(tt)
    print(manifest_line(fs))
    print(f"tt_hex={tt.hex()}")
    print(f"weight={tt.weight()}")
    print(f"degree={algebraic_degree(a)}")
    print(f"nonlinearity={nl}")
    print("bent=true")
    print(f"anf={format_anf(a)}")
    print(f"rank={rank}")
    print(f"classification={classify(rank, m)}")
    return 0


def cmd_table1(args):
    jobs = _resolve_jobs(args.jobs)
    families, results = _sweep_catalog(
        field(4), 1, (8,), jobs, include_e_infinity=args.include_e_infinity
    )
    rows = _records(families, results)
    _emit(_csv_text(rows) if args.format == "csv" else _histogram_text(rows), args.out)
    return 0


def cmd_table2(args):
    jobs = _resolve_jobs(args.jobs)
    families, results = _sweep_catalog(field(2), 2, (8, 9), jobs)
    rows = _records(families, results)
    _emit(_csv_text(rows) if args.format == "csv" else _histogram_text(rows), args.out)
    return 0


# ---------------------------------------------------------------- verify

def _nonzero_polys(spec, maxdeg):
    seen = {}
    for coeffs in itertools.product(range(spec.q), repeat=maxdeg + 1):
        if any(coeffs):
            p = poly(spec, coeffs)
            seen[p.coeffs] = p
    return sorted(seen.values(), key=lambda p: (len(p.coeffs), p.coeffs))


def _check_field_axioms():
    for l in (1, 2, 3, 4):
        spec = field(l)
        elems = range(spec.q)
        for x in elems:
            for y in elems:
                if fe_mul(spec, x, y) != fe_mul(spec, y, x):
                    return False, f"commutativity fails in GF(2^{l})"
                for z in elems:
                    lhs = fe_mul(spec, fe_mul(spec, x, y), z)
                    if lhs != fe_mul(spec, x, fe_mul(spec, y, z)):
                        return False, f"associativity fails in GF(2^{l})"
        for x in range(1, spec.q):
            if fe_mul(spec, x, fe_inv(spec, x)) != 1:
                return False, f"inverse fails for {x} in GF(2^{l})"
    return True, "l=1..4 exhaustive"


def _check_goldens():
    spec = field(1)
    minus = [poly(spec, (1, 0, 1)), poly(spec, (1, 1, 1))]
    plus = minus + [poly(spec, (0, 0, 1))]
    tt_g = from_spread(build_partial_spread(minus, b=2), plus_type=False)
    tt_h = from_spread(build_partial_spread(plus, b=2), plus_type=True)
    if tt_g.hex() != "0635":
        return False, f"negative-type table is {tt_g.hex()}, want 0635"
    if tt_h.hex() != "f635":
        return False, f"positive-type table is {tt_h.hex()}, want f635"
    if anf(tt_g).monomials() != [5, 6, 10]:
        return False, f"negative-type anf monomials {anf(tt_g).monomials()}"
    if anf(tt_h).monomials() != [0, 4, 5, 6, 8, 10, 12]:
        return False, f"positive-type anf monomials {anf(tt_h).monomials()}"
    return True, "n=4 tables 0635/f635 with matching anf"


def _check_triangle(spec, maxdeg):
    polys = _nonzero_polys(spec, maxdeg)
    unit = one(spec)
    pairs = 0
    for f, g in itertools.combinations_with_replacement(polys, 2):
        if f.degree == 0 and g.degree == 0:
            continue
        b = int(max(f.degree, g.degree))
        coprime = poly_gcd(f, g) == unit
        invertible = sylvester_resultant_nonzero(f, g, b)
        disjoint = trivial_intersection(kernel(build_matrix(f, b)), kernel(build_matrix(g, b)))
        if not (coprime == invertible == disjoint):
            return False, (
                f"{format_poly(f)} vs {format_poly(g)}: gcd=1 is {coprime}, "
                f"invertible {invertible}, disjoint kernels {disjoint}"
            )
        pairs += 1
    return True, f"{pairs} pairs agree"


def _check_irreducible_counts():
    for l in (1, 2):
        spec = field(l)
        for k in range(1, 5):
            expected = gauss_count(spec, k)
            got = len(enumerate_irreducibles(spec, k))
            if expected != got:
                return False, f"GF(2^{l}) degree {k}: formula {expected}, enumeration {got}"
    return True, "q in {2,4}, degrees 1..4"


def _check_closed_form(l, b):
    spec = field(l)
    m = spec.l * b
    closed = closed_form_family_count(spec, b, m)
    members = nonzero_constant_members(candidate_pool(spec, b))
    brute = sum(1 for _ in coprime_subsets(members, 1 << (m - 1)))
    if closed != brute:
        return False, f"closed form {closed} != exhaustive {brute}"
    return True, f"closed form {closed} == exhaustive {brute}"


def _check_graph_equivalence(m):
    if not verify_desarguesian_equivalence(m):
        return False, "kernel or union mismatch"
    return True, f"all window-1 kernels and functions match at m={m}"


def _check_window2_catalog():
    pool = candidate_pool(field(2), 2)
    tag_of = dict(zip(pool.members, pool.tags))
    observed = {}
    for spread_type, t, want in (("PS-", 8, (165, 3, 6)), ("PS+", 9, (55, 6, 3))):
        families = enumerate_families(pool, t)
        supports = {build_bent(fs).hex() for fs in families}
        if len(supports) != len(families):
            return False, f"{spread_type}: duplicate supports among {len(families)} families"
        no_product = with_square = without_square = 0
        for fs in families:
            tags = [tag_of[p] for p in fs.polys]
            if TAG_PRODUCT not in tags:
                no_product += 1
            elif TAG_SQUARE in tags:
                with_square += 1
            else:
                without_square += 1
        got = (no_product, with_square, without_square)
        if got != want:
            return False, f"{spread_type}: buckets {got}, want {want}"
        observed[spread_type] = len(families)
    if (observed["PS-"], observed["PS+"]) != (174, 64):
        return False, f"catalog sizes {observed}"
    return True, "174 = 165+3+6 and 64 = 55+6+3, all supports distinct"


def _check_window3_catalog():
    pool = candidate_pool(field(1), 3)
    minus = enumerate_families(pool, 4)
    plus = enumerate_families(pool, 5)
    if (len(minus), len(plus)) != (5, 1):
        return False, f"counts ({len(minus)}, {len(plus)}), want (5, 1)"
    for fs in minus + plus:
        tt = build_bent(fs)
        want_weight = 32 + (4 if fs.spread_type == "PS+" else -4)
        if tt.weight() != want_weight:
            return False, f"family {fs.family_id} weight {tt.weight()}"
        if algebraic_degree(anf(tt)) != 3:
            return False, f"family {fs.family_id} degree != 3"
    return True, "5 negative + 1 positive, all bent of degree 3"


def cmd_verify(args):
    checks = [
        ("field axioms", _check_field_axioms),
        ("golden 16-bit tables", _check_goldens),
        ("coprimality triangle GF(2) deg<=3", lambda: _check_triangle(field(1), 3)),
        ("coprimality triangle GF(4) deg<=2", lambda: _check_triangle(field(2), 2)),
        ("irreducible counts vs enumeration", _check_irreducible_counts),
        ("family count q=2 b=2", lambda: _check_closed_form(1, 2)),
        ("family count q=4 b=2", lambda: _check_closed_form(2, 2)),
        ("graph-subspace equivalence m=2", lambda: _check_graph_equivalence(2)),
        ("graph-subspace equivalence m=4", lambda: _check_graph_equivalence(4)),
        ("window-2 catalog", _check_window2_catalog),
        ("window-3 catalog", _check_window3_catalog),
    ]
    failures = 0
    for label, check in checks:
        try:
            ok, info = check()
        except SpreadbentError as exc:
            ok, info = False, f"{type(exc).__name__}: {exc}"
        suffix = f" ({info})" if info else ""
        print(f"{label}{suffix}: {'PASS' if ok else 'FAIL'}")
        sys.stdout.flush()
        if not ok:
            failures += 1
    return 1 if failures else 0


# ---------------------------------------------------------------- wiring

def _build_parser():
    parser = argparse.ArgumentParser(
        prog="spreadbent",
        description="Bent functions from kernels of linear recurring sequences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_params(p, type_flag=False):
        p.add_argument("--l", type=int, required=True, help="field extension degree")
        p.add_argument("--b", type=int, required=True, help="recurrence window size")
        if type_flag:
            p.add_argument("--type", choices=("ps-", "ps+"), default="ps-",
                           help="spread type (default ps-)")
        p.add_argument("--include-e-infinity", action="store_true",
                       help="admit the constant 1 into the window-1 pool")

    def add_output(p):
        p.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
        p.add_argument("--format", choices=("table", "csv"), default="table",
                       help="histogram table or full per-function CSV")
        p.add_argument("--jobs", type=int, default=None,
                       help="worker processes; 0 = all cores (default from SPREADBENT_JOBS)")

    p = sub.add_parser("polys", help="list the candidate polynomial pool")
    add_params(p)
    p.set_defaults(func=cmd_polys)

    p = sub.add_parser("build", help="build and analyze one function")
    add_params(p, type_flag=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--family-id", type=int, help="catalog index of the family")
    group.add_argument("--polys", help='semicolon-joined coefficient lists, e.g. "[1,0,1];[1,1,1]"')
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("table1", help="rank distribution of the full window-1 catalog at n=8")
    p.add_argument("--include-e-infinity", action="store_true",
                   help="widen the pool with the constant 1 (off-catalog exploration)")
    add_output(p)
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("table2", help="rank distributions of both window-2 catalogs at n=8")
    add_output(p)
    p.set_defaults(func=cmd_table2)

    p = sub.add_parser("verify", help="run the self-check suite")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    l = getattr(args, "l", None)
    b = getattr(args, "b", None)
    if l is not None and b is not None:
        if l < 1 or b < 1:
            print("error: --l and --b must be >= 1", file=sys.stderr)
            return 2
        if l * b > 8:
            print(
                f"error: l*b = {l * b} exceeds the supported capacity "
                "l*b <= 8 (function arity n = 2*l*b <= 16)",
                file=sys.stderr,
            )
            return 2
    try:
        return args.func(args)
    except CONSTRUCTION_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except SpreadbentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run():
    sys.exit(main())
