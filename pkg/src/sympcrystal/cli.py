"""Command-line front door.

Subcommands:
  enumerate king|ssot     list objects, one per line, then a count line
  map psi|psi-inv|phi|phi-inv   transport one object between the three models
  crystal apply|graph|decompose  operators and component graphs
  char chi|schur|decompose|pieri  exact character computations
  verify bijections|crystal|characters|conjecture|all   invariant batteries

Objects travel as text: King tableaux as rows of letters (``2 2b / 3 3``,
``-`` for the empty tableau), oscillating tableaux as ``(1 1b)(2 1)``,
matrices as comma-separated rows on separate lines.  All output is sorted,
so identical invocations produce identical bytes.

Exit codes: 0 success / all checks pass, 1 verification failure,
2 usage error (including out-of-bounds verify requests), 3 invalid input.
"""

import argparse
import random
import sys
from collections import Counter
from pathlib import Path

from .bijections import phi, phi_inverse, psi, psi_inverse
from .characters import (
    conjecture_verify,
    decompose_sp,
    dual_pieri_count,
    king_character,
    schur_eval,
    sundaram_h_count,
    weyl_character,
)
from .crystal import (
    MatrixCrystal,
    SsotCrystal,
    axiom_violations,
    crystal_graph,
    decompose,
    graph_to_adjacency,
    graph_to_dot,
    matrix_lower,
    matrix_lower_surgery,
    matrix_raise,
    matrix_raise_surgery,
    ssot_lower,
    ssot_raise,
    ssot_stats,
    matrix_eps,
    matrix_phi,
    stembridge_violations,
)
from .oscillating import enumerate_ssot, ssot_from_text
from .rsk import (
    c_index,
    enumerate_admissible,
    format_matrix,
    parse_matrix,
    row_sums,
)
from .tableaux import (
    enumerate_king,
    format_partition,
    king_from_text,
    king_to_text,
    king_weight,
    parse_partition,
    partitions_in_box,
    partitions_of,
    rect_complement,
    weight_to_partition,
)

BOUNDS = {"m": 3, "g": 3, "max_size_characters": 6, "max_size_conjecture": 4}


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# object text forms


def king_line(t) -> str:
    return " / ".join(" ".join(p) for p in
                      (line.split() for line in king_to_text(t).splitlines())) or "-"


def parse_king_text(text: str):
    text = text.strip()
    if text == "-":
        return king_from_text("")
    return king_from_text(text.replace("/", "\n"))


def read_input(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


# ---------------------------------------------------------------------------
# subcommand bodies; each returns (lines, all_ok)


def cmd_enumerate(args):
    mu = parse_partition(args.mu)
    if args.what == "king":
        items = [king_line(t) for t in enumerate_king(mu, args.m)]
    else:
        if args.g is None:
            raise UsageError("enumerate ssot needs --g")
        outside = rect_complement(mu, args.m, args.g)
        items = sorted(
            str(t) for t in enumerate_ssot(outside, args.m, args.g)
        )
    return items + [f"count {len(items)}"], True


def cmd_map(args):
    text = read_input(args.input)
    if args.how == "psi":
        if args.g is None:
            raise UsageError("map psi needs --g")
        out = str(psi(parse_king_text(text), args.m, args.g))
    elif args.how == "psi-inv":
        if args.g is None:
            raise UsageError("map psi-inv needs --g")
        out = king_line(psi_inverse(ssot_from_text(text), args.g))
    elif args.how == "phi":
        out = format_matrix(phi(ssot_from_text(text)))
    else:  # phi-inv
        out = str(phi_inverse(parse_matrix(text)))
    return out.splitlines(), True


def _looks_like_matrix(text: str) -> bool:
    head = text.lstrip()
    return bool(head) and head[0] in "-0123456789"


def cmd_crystal_apply(args):
    if args.g is None:
        raise UsageError("crystal apply needs --g")
    text = read_input(args.input)
    i = args.index
    if _looks_like_matrix(text):
        mat = parse_matrix(text)
        out = (
            matrix_raise(mat, i, args.g)
            if args.op == "raise"
            else matrix_lower(mat, i, args.g)
        )
        return (["none"] if out is None else format_matrix(out).splitlines()), True
    t = ssot_from_text(text, inside=parse_partition(args.inside))
    out = ssot_raise(t, i) if args.op == "raise" else ssot_lower(t, i, args.g)
    return [str(out) if out is not None else "none"], True


def _ssot_graph(args):
    if args.g is None:
        raise UsageError("needs --g")
    mu = parse_partition(args.mu)
    seeds = enumerate_ssot(rect_complement(mu, args.m, args.g), args.m, args.g)
    return crystal_graph(SsotCrystal(args.m, args.g), seeds)


def cmd_crystal_graph(args):
    graph = _ssot_graph(args)
    text = graph_to_dot(graph) if args.format == "dot" else graph_to_adjacency(graph)
    return text.splitlines(), True


def cmd_crystal_decompose(args):
    graph = _ssot_graph(args)
    counts = Counter()
    for w, c in decompose(graph).items():
        counts[weight_to_partition(w)] += c
    lines = [
        f"{format_partition(nu)}\t{counts[nu]}"
        for nu in sorted(counts, key=lambda p: (sum(p), p))
    ]
    return lines, True


def char_lines(f, fmt: str):
    if fmt == "tsv":
        return [
            "[" + ",".join(str(v) for v in e) + "]\t" + str(f.terms[e])
            for e in sorted(f.terms, reverse=True)
        ]
    return [str(f)]


def cmd_char(args):
    if args.what == "chi":
        return char_lines(weyl_character(parse_partition(args.lam), args.m), args.format), True
    if args.what == "schur":
        return char_lines(schur_eval(parse_partition(args.mu), args.m), args.format), True
    if args.what == "decompose":
        f = king_character(parse_partition(args.lam), args.m)
        if args.mu is not None:
            f = f * schur_eval(parse_partition(args.mu), args.m)
        dec = decompose_sp(f, args.m)
        lines = [
            f"{format_partition(nu)}\t{dec[nu]}"
            for nu in sorted(dec, key=lambda p: (sum(p), p))
        ]
        return lines, True
    # pieri: strip counts for one column length, optionally a single target
    lam = parse_partition(args.lam)
    ell = args.index
    if ell is None:
        raise UsageError("char pieri needs --index (the strip size)")
    if args.nu is not None:
        return [str(dual_pieri_count(lam, ell, parse_partition(args.nu), args.m))], True
    lines = []
    for size in range(sum(lam) + ell, -1, -2):
        for nu in partitions_of(size, args.m):
            c = dual_pieri_count(lam, ell, nu, args.m)
            if c:
                lines.append(f"{format_partition(nu)}\t{c}")
    return sorted(lines), True


# ---------------------------------------------------------------------------
# verification suites


def _check(rows, suite, name, ok, detail):
    rows.append((suite, name, bool(ok), detail))


def suite_bijections(m, g):
    rows = []
    pairs = strips = 0
    weight_ok = True
    for mu in partitions_in_box(m, g):
        outside = rect_complement(mu, m, g)
        kings = enumerate_king(mu, m)
        ssots = enumerate_ssot(outside, m, g)
        pairs += len(kings)
        if sorted(map(str, (psi(t, m, g) for t in kings))) != sorted(map(str, ssots)):
            weight_ok = False
        for t in kings:
            s = psi(t, m, g)
            if psi_inverse(s, g) != t or king_weight(t, m) != s.crystal_weight(g):
                weight_ok = False
    _check(rows, "bijections", "king_transport_round_trip", weight_ok,
           f"tableaux={pairs} m={m} g={g}")
    chains = enumerate_ssot((), m, g)
    mats = enumerate_admissible(m, g)
    ok = len(chains) == len(mats)
    inv_ok = True
    for t in chains:
        mat = phi(t)
        strips += 1
        if phi_inverse(mat) != t:
            inv_ok = False
        if c_index(mat) != 2 * t.num_cols or row_sums(mat) != t.weight():
            inv_ok = False
    _check(rows, "bijections", "matrix_transport_round_trip", inv_ok,
           f"tableaux={strips}")
    _check(rows, "bijections", "matrix_count_matches", ok,
           f"ssot={len(chains)} matrices={len(mats)}")
    return rows


def _ssot_corpus(m, g):
    return [
        t
        for mu in partitions_in_box(m, g)
        for t in enumerate_ssot(rect_complement(mu, m, g), m, g)
    ]


def suite_crystal(m, g):
    rows = []
    corpus = _ssot_corpus(m, g)
    mats = enumerate_admissible(m, g)
    v = axiom_violations(SsotCrystal(m, g), corpus)
    _check(rows, "crystal", "axioms_oscillating", not v,
           v[0] if v else f"vertices={len(corpus)}")
    v = axiom_violations(MatrixCrystal(m, g), mats)
    _check(rows, "crystal", "axioms_matrix", not v,
           v[0] if v else f"vertices={len(mats)}")
    route_ok = True
    checked = 0
    for mat in mats:
        for i in range(1, m):
            checked += 2
            if matrix_raise(mat, i, g) != matrix_raise_surgery(mat, i):
                route_ok = False
            if matrix_lower(mat, i, g) != matrix_lower_surgery(mat, i):
                route_ok = False
    _check(rows, "crystal", "insertion_vs_surgery", route_ok, f"checks={checked}")
    equi_ok = True
    checked = 0
    for t in enumerate_ssot((), m, g):
        mat = phi(t)
        for i in range(m):
            checked += 1
            up, down = ssot_raise(t, i), ssot_lower(t, i, g)
            if (None if up is None else phi(up)) != matrix_raise(mat, i, g):
                equi_ok = False
            if (None if down is None else phi(down)) != matrix_lower(mat, i, g):
                equi_ok = False
            if ssot_stats(t, i, g) != (matrix_eps(mat, i, g), matrix_phi(mat, i, g)):
                equi_ok = False
    _check(rows, "crystal", "transport_equivariance", equi_ok, f"checks={checked}")
    v = stembridge_violations(SsotCrystal(m, g), corpus)
    v += stembridge_violations(MatrixCrystal(m, g), mats)
    _check(rows, "crystal", "stembridge_battery", not v,
           v[0] if v else f"vertices={len(corpus) + len(mats)}")
    return rows


def _parts_upto(n, max_length=None):
    for k in range(n + 1):
        yield from partitions_of(k, max_length)


def suite_characters(m, max_size):
    rows = []
    ok = True
    n = 0
    for lam in _parts_upto(max_size, m):
        n += 1
        if king_character(lam, m) != weyl_character(lam, m):
            ok = False
    _check(rows, "characters", "tableau_sum_equals_determinant_ratio", ok,
           f"shapes={n} m={m}")
    dp_ok = h_ok = True
    checked = 0
    for lam in _parts_upto(min(max_size, 4), m):
        chi = weyl_character(lam, m)
        for ell in range(4):
            dec_e = decompose_sp(chi * schur_eval((1,) * ell, m), m)
            dec_h = decompose_sp(chi * schur_eval((ell,), m), m)
            for nu in _parts_upto(min(max_size, 4) + ell, m):
                checked += 1
                if dec_e.get(nu, 0) != dual_pieri_count(lam, ell, nu, m):
                    dp_ok = False
                if dec_h.get(nu, 0) != sundaram_h_count(lam, ell, nu):
                    h_ok = False
    _check(rows, "characters", "dual_pieri_rule", dp_ok, f"checks={checked}")
    _check(rows, "characters", "row_pieri_rule", h_ok, f"checks={checked}")
    rng = random.Random(0)
    pool = list(_parts_upto(min(max_size, 3), m))
    rec_ok = True
    for _ in range(20):
        a, b = rng.choice(pool), rng.choice(pool)
        f = weyl_character(a, m) * weyl_character(b, m)
        rebuilt = f - f
        for nu, c in decompose_sp(f, m).items():
            rebuilt = rebuilt + c * weyl_character(nu, m)
        if rebuilt != f:
            rec_ok = False
    _check(rows, "characters", "decomposition_reconstructs", rec_ok, "products=20")
    return rows


def suite_conjecture(m, max_size):
    rows = []
    asserted = reported = 0
    bad = []
    for lam in _parts_upto(max_size, m):
        for mu in _parts_upto(max_size, m):
            r = conjecture_verify(lam, mu, m)
            if r.mode == "ASSERT":
                asserted += 1
                if not r.ok:
                    bad.append((lam, mu))
            else:
                reported += 1
                if not r.ok:
                    rows.append(("conjecture", "report_mode_difference", True,
                                 f"lambda={format_partition(lam)} mu={format_partition(mu)}"))
    _check(rows, "conjecture", "product_formula_proved_range", not bad,
           f"asserted={asserted} reported={reported}" if not bad
           else f"first failure lambda={bad[0][0]} mu={bad[0][1]}")
    return rows


def cmd_verify(args):
    m = args.m
    g = args.g if args.g is not None else min(m, 2)
    if m > BOUNDS["m"] or g > BOUNDS["g"]:
        raise UsageError(f"verify is desk-scale: m <= {BOUNDS['m']}, g <= {BOUNDS['g']}")
    rows = []
    if args.what in ("bijections", "all"):
        rows += suite_bijections(m, g)
    if args.what in ("crystal", "all"):
        rows += suite_crystal(m, g)
    if args.what in ("characters", "all"):
        size = args.max_size if args.max_size is not None else 4
        if size > BOUNDS["max_size_characters"]:
            raise UsageError(
                f"characters suite caps --max-size at {BOUNDS['max_size_characters']}"
            )
        rows += suite_characters(m, size)
    if args.what in ("conjecture", "all"):
        size = args.max_size if args.max_size is not None else 3
        if size > BOUNDS["max_size_conjecture"]:
            raise UsageError(
                f"conjecture suite caps --max-size at {BOUNDS['max_size_conjecture']}"
            )
        rows += suite_conjecture(m, size)
    lines = [
        f"{suite}\t{name}\t{'PASS' if ok else 'FAIL'}\t{detail}"
        for suite, name, ok, detail in rows
    ]
    ok = all(r[2] for r in rows)
    passed = sum(1 for r in rows if r[2])
    lines.append(f"summary\t{args.what}\t{'PASS' if ok else 'FAIL'}\t{passed}/{len(rows)} checks")
    return lines, ok


# ---------------------------------------------------------------------------
# wiring


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sympcrystal", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, g_default=None):
        p.add_argument("--m", type=int, default=2, help="number of letter tracks")
        p.add_argument("--g", type=int, default=g_default, help="column bound")
        p.add_argument("--output", help="write here instead of stdout")

    p = sub.add_parser("enumerate", help="list King or oscillating tableaux")
    p.add_argument("what", choices=["king", "ssot"])
    p.add_argument("--mu", default="[]", help="shape, like [2,1]")
    common(p)

    p = sub.add_parser("map", help="transport an object between models")
    p.add_argument("how", choices=["psi", "psi-inv", "phi", "phi-inv"])
    p.add_argument("--input", help="path, or - for stdin")
    common(p)

    p = sub.add_parser("crystal", help="operators, graphs, decompositions")
    crystal_sub = p.add_subparsers(dest="action", required=True)
    pa = crystal_sub.add_parser("apply", help="apply one operator to one object")
    pa.add_argument("--op", choices=["raise", "lower"], required=True)
    pa.add_argument("--index", type=int, required=True)
    pa.add_argument("--input", help="path, or - for stdin")
    pa.add_argument("--inside", default="[]", help="inner shape for skew chains")
    common(pa)
    for name in ("graph", "decompose"):
        pg = crystal_sub.add_parser(name)
        pg.add_argument("--mu", default="[]", help="shape, like [2,1]")
        pg.add_argument("--format", choices=["dot", "adj"], default="dot")
        common(pg)

    p = sub.add_parser("char", help="exact character computations")
    p.add_argument("what", choices=["chi", "schur", "decompose", "pieri"])
    p.add_argument("--lambda", dest="lam", default="[]")
    p.add_argument("--mu", default=None)
    p.add_argument("--nu", default=None)
    p.add_argument("--index", type=int, default=None, help="strip size for pieri")
    p.add_argument("--format", choices=["text", "tsv"], default="text")
    common(p)

    p = sub.add_parser("verify", help="run an invariant battery")
    p.add_argument("what", choices=["bijections", "crystal", "characters",
                                    "conjecture", "all"])
    p.add_argument("--max-size", type=int, default=None,
                   help="partition size cap for character suites")
    common(p)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "enumerate":
            lines, ok = cmd_enumerate(args)
        elif args.command == "map":
            lines, ok = cmd_map(args)
        elif args.command == "crystal":
            if args.action == "apply":
                lines, ok = cmd_crystal_apply(args)
            elif args.action == "graph":
                lines, ok = cmd_crystal_graph(args)
            else:
                lines, ok = cmd_crystal_decompose(args)
        elif args.command == "char":
            lines, ok = cmd_char(args)
        else:
            lines, ok = cmd_verify(args)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"invalid input: {e}", file=sys.stderr)
        return 3
    text = "\n".join(lines) + ("\n" if lines else "")
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
