"""Batch command-line front end.

Subcommands: tori (torus table for one group), weyl (signed-permutation
class tables and double-coset counts), omega (Steinberg / restricted
Steinberg / signed-power-dual values classwise), census (per-series norm
predictions against the brute-force total, as a JSON certificate), verify
(named check suites with one PASS/FAIL line each).

Every output embeds the run configuration and contains only exact
integers, no timestamps, so a rerun with a warm cache is byte-identical.
Output formats: text (aligned columns), csv (one `#` config comment, then
a header row), json.  Exit status: 0 clean, 1 any failed check, 2 refusal
(cap exceeded or inconsistent flags).
"""

import argparse
import csv
import json
import os
import sys

from . import characters, matgrp, tori, weyl
from .gf import field_of_order


class Refusal(Exception):
    pass


# ---------------------------------------------------------------------------
# argument plumbing


def _add_field_args(p, need_dim):
    p.add_argument("--q", type=int, help="field size")
    p.add_argument("--p", type=int, dest="char",
                   help="field characteristic (alternative to --q, with --k)")
    p.add_argument("--k", type=int, default=1,
                   help="extension degree over the prime field")
    p.add_argument("--dim", type=int, required=need_dim,
                   help="dimension of the orthogonal space")
    p.add_argument("--type", choices=["+", "-", "odd"],
                   help="form type; defaults to odd/+ by dimension parity")


def _add_output_args(p):
    p.add_argument("--cache-dir", default=os.environ.get("STB_CACHE_DIR"),
                   help="group cache directory (default: env STB_CACHE_DIR)")
    p.add_argument("--format", choices=["json", "csv", "text"],
                   default="text")
    p.add_argument("--max-order", type=int, default=matgrp.DEFAULT_CAP,
                   help="refuse groups larger than this before enumerating")
    p.add_argument("--threads", type=int, default=1,
                   help="worker hint, echoed into the output; the "
                        "enumeration kernels are single-threaded")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="stb",
        description="exact computations in small finite orthogonal and "
                    "symplectic groups")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tori", help="maximal-torus table for one group")
    _add_field_args(p, need_dim=True)
    _add_output_args(p)
    p.set_defaults(func=cmd_tori)

    p = sub.add_parser("weyl", help="signed-permutation class table or "
                                    "double-coset counts")
    p.add_argument("--type", choices=["B", "D"], required=True)
    p.add_argument("--n", type=int, required=True, help="rank")
    p.add_argument("--doublecosets", action="store_true",
                   help="print the cross/self double-coset counts instead "
                        "of the class table")
    _add_output_args(p)
    p.set_defaults(func=cmd_weyl)

    p = sub.add_parser("omega", help="classwise Steinberg, restricted "
                                     "Steinberg, and dual values")
    _add_field_args(p, need_dim=True)
    _add_output_args(p)
    p.set_defaults(func=cmd_omega)

    p = sub.add_parser("census", help="series norms vs brute force")
    _add_field_args(p, need_dim=True)
    _add_output_args(p)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify", help="run named check suites")
    p.add_argument("suites", nargs="*", metavar="SUITE",
                   help="any of: " + ", ".join(SUITE_NAMES))
    p.add_argument("--suite", action="append", default=[],
                   choices=SUITE_NAMES, help="additional suite to run")
    _add_field_args(p, need_dim=False)
    _add_output_args(p)
    p.set_defaults(func=cmd_verify)

    return ap


def _resolve_q(args):
    if args.q is None:
        if args.char is None:
            raise Refusal("need --q (or --p with --k)")
        args.q = args.char ** args.k
    elif args.char is not None and args.char ** args.k != args.q:
        raise Refusal(f"--q {args.q} contradicts --p {args.char} --k {args.k}")
    try:
        F = field_of_order(args.q)
    except ValueError:
        raise Refusal(f"q = {args.q} is not a prime power")
    if F.k != 1:
        raise Refusal("group enumeration supports prime fields only; "
                      f"q = {args.q} is a proper extension")
    return args.q


def _resolve_type(dim, type_str):
    """Return (normalized type string, sign)."""
    if type_str is None:
        type_str = "odd" if dim % 2 else "+"
    if type_str == "odd":
        if dim % 2 == 0:
            raise Refusal("--type odd needs an odd --dim")
        return type_str, 1
    if dim % 2:
        raise Refusal(f"--type {type_str} needs an even --dim")
    return type_str, 1 if type_str == "+" else -1


def _config(args, **extra):
    F = field_of_order(args.q) if getattr(args, "q", None) else None
    cfg = {"command": args.command}
    if F is not None:
        cfg.update(q=F.q, p=F.p, k=F.k)
    for key in ("dim", "n"):
        if getattr(args, key, None) is not None:
            cfg[key] = getattr(args, key)
    cfg.update(extra)
    cfg["cache_dir"] = getattr(args, "cache_dir", None)
    cfg["format"] = args.format
    cfg["max_order"] = getattr(args, "max_order", None)
    cfg["threads"] = getattr(args, "threads", 1)
    return cfg


def _refuse_over_cap(kind, dim, q, sign, cap):
    expected = matgrp.group_order(kind, dim, q, sign)
    if expected > cap:
        t = ""
        if kind != "Sp" and dim % 2 == 0:
            t = "+" if sign > 0 else "-"
        raise Refusal(f"|{kind}{dim}{t}({q})| = {expected} exceeds the cap "
                      f"{cap}; rerun with --max-order {expected}")
    return expected


def _build_target(args):
    """Group selected by --dim/--q/--type, cap-checked before enumeration."""
    q = _resolve_q(args)
    type_str, sign = _resolve_type(args.dim, args.type)
    kind = "SO" if q % 2 else "Omega"
    _refuse_over_cap(kind, args.dim, q, sign, args.max_order)
    G = matgrp.build_group(kind, args.dim, q, sign=sign,
                           cap=args.max_order, cache_dir=args.cache_dir)
    return G, type_str


def _extensions(G, cap, cache_dir):
    """One-dimension-up extensions; prebuilds the two stabilizer models
    when G is the symplectic stand-in for an odd-dimensional group."""
    if G.p == 2 and G.is_symplectic_model:
        hs = []
        for s in (1, -1):
            _refuse_over_cap("Omega", G.logical_dim + 1, G.q, s, cap)
            hs.append(matgrp.build_group("Omega", G.logical_dim + 1, G.q,
                                         sign=s, cap=cap,
                                         cache_dir=cache_dir))
        return characters.extensions_of(G, stabilizer_groups=hs)
    return characters.extensions_of(G)


# ---------------------------------------------------------------------------
# output


def _config_comment(cfg):
    return "# " + " ".join(f"{k}={v}" for k, v in cfg.items()
                           if v is not None)


def _print_table(cfg, columns, rows, fmt, trailer=()):
    """trailer: extra (text, csv-comment) summary lines for text/csv."""
    out = sys.stdout
    if fmt == "json":
        doc = {"config": cfg, "rows": rows}
        if trailer:
            doc["summary"] = list(trailer)
        out.write(json.dumps(doc, indent=2) + "\n")
        return
    if fmt == "csv":
        out.write(_config_comment(cfg) + "\n")
        w = csv.writer(out, lineterminator="\n")
        w.writerow(columns)
        for r in rows:
            w.writerow([r[c] for c in columns])
        for line in trailer:
            out.write(f"# {line}\n")
        return
    out.write(_config_comment(cfg) + "\n")
    cells = [[str(r[c]) for c in columns] for r in rows]
    widths = [max([len(col)] + [len(row[i]) for row in cells])
              for i, col in enumerate(columns)]
    out.write("  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip()
              + "\n")
    for row in cells:
        out.write("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip()
                  + "\n")
    for line in trailer:
        out.write(line + "\n")


def _mat_rows(mat):
    return [list(row) for row in mat]


def _mat_str(mat):
    return ";".join(" ".join(str(x) for x in row) for row in mat)


# ---------------------------------------------------------------------------
# commands


def cmd_tori(args):
    G, type_str = _build_target(args)
    cfg = _config(args, type=type_str, group=G.name)
    rows = []
    for T in tori.catalog(G):
        rows.append({
            "decomp": str(T.label),
            "order": T.order,
            "classification": " x ".join(f"C{o}" for o in T.factor_orders),
            "weyl_order": T.weyl_order,
        })
    _print_table(cfg, ["decomp", "order", "classification", "weyl_order"],
                 rows, args.format)
    return 0


def cmd_weyl(args):
    cfg = {"command": args.command, "type": args.type, "n": args.n,
           "doublecosets": args.doublecosets, "format": args.format}
    if args.doublecosets:
        rows = []
        if args.type == "D" and args.n % 2 == 0:
            rows.append({"pair": "cross", "count": weyl.cross_norm(args.n)})
        rows.append({"pair": "self",
                     "count": weyl.self_norm(args.n, args.type)})
        if args.format == "text":
            sys.stdout.write(_config_comment(cfg) + "\n")
            sys.stdout.write(
                ", ".join(f"{r['pair']} {r['count']}" for r in rows) + "\n")
        else:
            _print_table(cfg, ["pair", "count"], rows, args.format)
        return 0
    rows = []
    for label, branch, size, cent in weyl.conjugacy_classes(args.type,
                                                            args.n):
        d, e = label
        rows.append({
            "label_d": "+".join(str(i) for i in d) or "-",
            "label_e": "+".join(str(j) for j in e) or "-",
            "size": size,
            "centralizer": cent,
            "splits": branch,
        })
    _print_table(cfg, ["label_d", "label_e", "size", "centralizer",
                       "splits"], rows, args.format)
    return 0


def cmd_omega(args):
    G, type_str = _build_target(args)
    cfg = _config(args, type=type_str, group=G.name)
    exts = _extensions(G, args.max_order, args.cache_dir)
    st = characters.steinberg(G)
    stp = characters.restricted_steinberg(G, exts)
    ratio = characters.steinberg_ratio(G, exts)
    rows = []
    for i, cl in enumerate(G.conj_classes()):
        rows.append({
            "class": i,
            "size": cl.size,
            "element_order": cl.element_order,
            "semisimple": int(cl.is_semisimple),
            "steinberg": st[i],
            "steinberg_plus": stp[i],
            "omega": ratio[i],
        })
    _print_table(cfg, ["class", "size", "element_order", "semisimple",
                       "steinberg", "steinberg_plus", "omega"],
                 rows, args.format)
    return 0


def cmd_census(args):
    G, type_str = _build_target(args)
    cfg = _config(args, type=type_str, group=G.name)
    exts = _extensions(G, args.max_order, args.cache_dir)
    stp = characters.restricted_steinberg(G, exts)
    if G.logical_dim % 2 and G.p != 2:
        _refuse_over_cap("Sp", G.logical_dim - 1, G.q, 1, args.max_order)
    dual = characters.dual_group(G, cap=args.max_order,
                                 cache_dir=args.cache_dir)
    reports, predicted, brute = characters.census(G, stp=stp, dual=dual)
    quad = characters.quadruple_of_inner_products(G, stp=stp)
    series = [{
        "s_rep": _mat_rows(r.s_rep),
        "order_s": r.order_s,
        "dim_fix": r.dim_fix,
        "defect": r.defect,
        "tag": r.tag,
        "m": r.m,
        "predicted_norm": r.predicted_norm,
        "predicted_count": r.predicted_count,
        "max_mult": r.max_mult,
    } for r in reports]
    totals = {"predicted_norm_sum": predicted, "bruteforce_norm": brute,
              "match": predicted == brute}
    inner = {"with_steinberg": quad[0], "with_steinberg_sign_twist": quad[1],
             "with_trivial": quad[2], "with_sign_character": quad[3]}
    if args.format == "json":
        doc = {"config": cfg, "group": G.name, "q": G.q,
               "dim": G.logical_dim, "type": type_str, "series": series,
               "totals": totals, "inner_products": inner}
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        rows = [dict(r, s_rep=_mat_str(rep.s_rep))
                for r, rep in zip(series, reports)]
        trailer = [
            "totals: predicted {predicted_norm_sum} brute {bruteforce_norm} "
            "match {match}".format(**totals),
            "inner products: " + " ".join(f"{k}={v}"
                                          for k, v in inner.items()),
        ]
        _print_table(cfg, ["s_rep", "order_s", "dim_fix", "defect", "tag",
                           "m", "predicted_norm", "predicted_count",
                           "max_mult"], rows, args.format, trailer=trailer)
    return 0 if totals["match"] else 1


# ---------------------------------------------------------------------------
# verify suites


class _Runner:
    def __init__(self):
        self.checks = []

    def run(self, suite, name, fn):
        try:
            detail = fn()
            self.checks.append(
                {"suite": suite, "name": name, "status": "PASS",
                 "detail": detail or ""})
        except Refusal:
            raise
        except Exception as exc:
            self.checks.append(
                {"suite": suite, "name": name, "status": "FAIL",
                 "detail": f"{type(exc).__name__}: {exc}"})


def _verify_qs(args):
    if args.q:
        return [args.q]
    return [2, 3, 4, 5, 8, 9]


def _verify_groups(args):
    """(kind, dim, q, sign) targets for the group-level suites."""
    if args.q and args.dim:
        _, sign = _resolve_type(args.dim, args.type)
        kind = "SO" if args.q % 2 else "Omega"
        return [(kind, args.dim, args.q, sign)]
    out = []
    q = args.q or 3
    if q % 2:
        out += [("SO", 3, q, 1), ("SO", 4, q, 1), ("SO", 4, q, -1),
                ("SO", 5, q, 1), ("Sp", 2, q, 1), ("Sp", 4, q, 1)]
    if args.q is None:
        q2 = 2
    elif q % 2 == 0:
        q2 = q
    else:
        q2 = None
    if q2:
        out += [("Omega", 4, q2, 1), ("Omega", 4, q2, -1),
                ("Omega", 5, q2, 1), ("Sp", 4, q2, 1)]
    if args.dim:
        out = [t for t in out if t[1] == args.dim]
    return out


def _group_targets(args, defaults):
    """(dim, q, type) targets, narrowed by --dim/--q/--type when given."""
    out = [t for t in defaults
           if (not args.dim or t[0] == args.dim)
           and (not args.q or t[1] == args.q)
           and (not args.type or t[2] == args.type)]
    if not out and args.q and args.dim:
        # a combination outside the default list still runs once
        out = [(args.dim, args.q, args.type)]
    return out


def _census_targets(args):
    return _group_targets(args, [(3, 3, "odd"), (4, 3, "+"), (4, 3, "-"),
                                 (4, 2, "+"), (4, 2, "-")])


def _build(kind, dim, q, sign, args):
    _refuse_over_cap(kind, dim, q, sign, args.max_order)
    return matgrp.build_group(kind, dim, q, sign=sign, cap=args.max_order,
                              cache_dir=args.cache_dir)


def suite_fields(run, args):
    for q in _verify_qs(args):
        F = field_of_order(q)

        def chk(F=F, q=q):
            assert F.element_order(F.gen) == q - 1, "generator order"
            for a in range(1, q):
                assert F.mul(a, F.inv(a)) == 1, f"inverse of {a}"
                assert F.frobenius(a) == F.pow(a, F.p), f"frobenius at {a}"
            if q % 2:
                squares = {F.mul(a, a) for a in range(1, q)}
                assert len(squares) == (q - 1) // 2, "square count"
                assert F.nonsquare() not in squares, "nonsquare"
                for a in squares:
                    r = F.sqrt(a)
                    assert F.mul(r, r) == a, f"sqrt at {a}"
            return f"GF({q}) arithmetic"

        run.run("fields", f"GF({q})", chk)


def suite_spaces(run, args):
    from . import quadspace
    qs = [q for q in _verify_qs(args) if field_of_order(q).k == 1]
    for q in qs:
        F = field_of_order(q)
        for dim in range(2, 6):
            if dim % 2 and q % 2 == 0:
                continue  # odd dim over even q lives in the symplectic model
            def chk(F=F, q=q, dim=dim):
                notes = []
                if dim % 2 == 0:
                    for sign in (1, -1):
                        sp = quadspace.standard_space(F, dim, sign)
                        assert sp.type_sign() == sign, "type round-trip"
                        assert sp.witt_index() == dim // 2 - (sign < 0), \
                            "witt index"
                    notes.append("both types")
                else:
                    sp = quadspace.standard_space(F, dim)
                    assert sp.witt_index() == dim // 2, "witt index"
                    notes.append("odd")
                if q % 2 and dim % 2 == 0:
                    sp = quadspace.standard_space(F, dim, 1)
                    v = next(w for w in sp.vectors() if sp.Q(w) != 0)
                    assert sp.is_isometry(sp.reflection(v)), "reflection"
                return f"dim {dim}: " + ", ".join(notes)

            run.run("spaces", f"GF({q}) dim {dim}", chk)
        if q % 2:
            def chk_planes(F=F, q=q):
                plus = quadspace.standard_space(F, 4, 1)
                minus = quadspace.standard_space(F, 4, -1)
                np_ = len(plus.totally_singular_planes())
                nm = len(minus.totally_singular_planes())
                assert np_ == 2 * (q + 1), f"plus planes {np_}"
                assert nm == 0, f"minus planes {nm}"
                return f"dim-4 singular planes {np_} / {nm}"

            run.run("spaces", f"GF({q}) planes", chk_planes)


def suite_groups(run, args):
    for kind, dim, q, sign in _verify_groups(args):
        def chk(kind=kind, dim=dim, q=q, sign=sign):
            expected = _refuse_over_cap(kind, dim, q, sign, args.max_order)
            G = matgrp.build_group(kind, dim, q, sign=sign,
                                   cap=args.max_order,
                                   cache_dir=args.cache_dir)
            assert G.order == expected
            return f"{G.name} order {G.order}"

        suffix = "" if kind == "Sp" or dim % 2 else ("+" if sign > 0
                                                     else "-")
        run.run("groups", f"{kind}{dim}{suffix}({q})", chk)


def suite_weyl(run, args):
    nmax = min(args.dim, 6) if args.dim else 4
    for wtype in ("B", "D"):
        for n in range(2, nmax + 1):
            def chk(wtype=wtype, n=n):
                total = 0
                splits = set()
                for label, branch, size, cent in weyl.conjugacy_classes(
                        wtype, n):
                    total += size
                    expect = (weyl.centralizer_order_formula(label)
                              if wtype == "B"
                              else weyl.torus_weyl_order("D", label))
                    assert cent == expect, f"centralizer at {label}"
                    if branch:
                        splits.add(label)
                        assert weyl.is_exceptional_label(label), \
                            f"unexpected split {label}"
                order = 2 ** n * _fact(n) // (1 if wtype == "B" else 2)
                assert total == order, "class sizes do not sum to |W|"
                if wtype == "D":
                    expected_splits = {
                        lab for lab, *_ in weyl.conjugacy_classes("D", n)
                        if weyl.is_exceptional_label(lab)}
                    assert splits == expected_splits, "split set"
                return f"{len(set(splits))} split labels" if wtype == "D" \
                    else "all centralizers match"

            run.run("weyl", f"{wtype}{n}", chk)


def _fact(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def _tori_targets(args):
    return _group_targets(args, [(5, 3, "odd"), (4, 3, "+"), (4, 3, "-"),
                                 (4, 2, "+"), (4, 2, "-")])


def suite_tori(run, args):
    for dim, q, tstr in _tori_targets(args):
        def chk(dim=dim, q=q, tstr=tstr):
            _, sign = _resolve_type(dim, tstr)
            kind = "SO" if q % 2 else "Omega"
            G = _build(kind, dim, q, sign, args)
            cat = tori.catalog(G)
            expected = tori.labels(G.logical_dim, sign)
            assert len(cat) == len(expected), "torus count"
            for T in cat:
                assert T.order == tori.torus_order(T.label, q), \
                    f"order at {T.label}"
                assert T.weyl_order == tori.torus_weyl_order(
                    T.label, G.logical_dim), f"weyl order at {T.label}"
            return f"{G.name}: {len(cat)} tori"

        run.run("tori", f"dim{dim} q{q} {tstr or 'auto'}", chk)


def _omega_targets(args):
    return _group_targets(args, [(3, 3, "odd"), (4, 3, "+"), (4, 3, "-")])


def suite_omega(run, args):
    for dim, q, tstr in _omega_targets(args):
        def chk(dim=dim, q=q, tstr=tstr):
            _, sign = _resolve_type(dim, tstr)
            kind = "SO" if q % 2 else "Omega"
            G = _build(kind, dim, q, sign, args)
            exts = _extensions(G, args.max_order, args.cache_dir)
            characters.check_steinberg_gates(G)
            ratio = characters.steinberg_ratio(G, exts)
            idx1 = next(i for i, cl in enumerate(G.conj_classes())
                        if cl.size == 1 and cl.element_order == 1)
            assert ratio[idx1] == q ** (G.logical_dim // 2), "value at 1"
            if G.p != 2 and G.logical_dim % 2 == 0:
                neg = next(i for i, cl in enumerate(G.conj_classes())
                           if cl.size == 1 and cl.element_order == 2)
                assert ratio[neg] == sign, "value at -1"
            for T in tori.catalog(G):
                characters.check_torus_pattern(G, T, ratio)
            return f"{G.name}: dual verified on {len(ratio)} classes"

        run.run("omega", f"dim{dim} q{q} {tstr or 'auto'}", chk)


def suite_multiplication(run, args):
    q = args.q or 3
    if q % 2 == 0:
        run.run("multiplication", "skip",
                lambda: "stabilizer product law needs q odd")
        return
    F = field_of_order(q)
    from . import quadspace
    splits = [
        ("1+3", quadspace.line_space(F, 1), quadspace.standard_space(F, 3)),
        ("1'+3", quadspace.line_space(F, F.nonsquare()),
         quadspace.standard_space(F, 3)),
        ("2+ + 2+", quadspace.standard_space(F, 2, 1),
         quadspace.standard_space(F, 2, 1)),
        ("2+ + 2-", quadspace.standard_space(F, 2, 1),
         quadspace.standard_space(F, 2, -1)),
    ]
    if args.dim == 5:
        splits += [
            ("1+4+", quadspace.line_space(F, 1),
             quadspace.standard_space(F, 4, 1)),
            ("2+ + 3", quadspace.standard_space(F, 2, 1),
             quadspace.standard_space(F, 3)),
            ("2- + 3", quadspace.standard_space(F, 2, -1),
             quadspace.standard_space(F, 3)),
        ]
    for name, sp1, sp2 in splits:
        def chk(sp1=sp1, sp2=sp2):
            pairs = characters.check_product_rule(sp1, sp2, q)
            corr = q if sp1.dim % 2 and sp2.dim % 2 else 1
            return f"{pairs} pairs, factor {corr}"

        run.run("multiplication", f"q{q} {name}", chk)


def suite_census(run, args):
    for dim, q, tstr in _census_targets(args):
        def chk(dim=dim, q=q, tstr=tstr):
            _, sign = _resolve_type(dim, tstr)
            kind = "SO" if q % 2 else "Omega"
            G = _build(kind, dim, q, sign, args)
            exts = _extensions(G, args.max_order, args.cache_dir)
            stp = characters.restricted_steinberg(G, exts)
            dual = characters.dual_group(G, cap=args.max_order,
                                         cache_dir=args.cache_dir)
            reports, predicted, brute = characters.census(G, stp=stp,
                                                          dual=dual)
            assert predicted == brute, \
                f"predicted {predicted} != brute force {brute}"
            for r in reports:
                if r.defect == 1:
                    assert r.predicted_norm == 0, "defect-1 series nonzero"
            return f"{G.name}: predicted {predicted} = brute force {brute}"

        run.run("census", f"dim{dim} q{q} {tstr or 'auto'}", chk)


def _quadruple_targets(args):
    return _group_targets(args, [(3, 3, "odd"), (4, 3, "+"), (4, 3, "-"),
                                 (5, 3, "odd")])


def suite_quadruples(run, args):
    for dim, q, tstr in _quadruple_targets(args):
        def chk(dim=dim, q=q, tstr=tstr):
            _, sign = _resolve_type(dim, tstr)
            kind = "SO" if q % 2 else "Omega"
            G = _build(kind, dim, q, sign, args)
            exts = _extensions(G, args.max_order, args.cache_dir)
            stp = characters.restricted_steinberg(G, exts)
            quad = characters.quadruple_of_inner_products(G, stp=stp)
            if (dim, q) == (3, 3):
                assert quad == (1, 1, 1, 0), quad
            elif (dim, q) == (5, 3):
                assert quad == (1, 1, 0, 0), quad
            elif dim == 4 and q == 3:
                assert quad == (1 + sign, 1, 0, 0), quad
            return f"{G.name}: {quad}"

        run.run("quadruples", f"dim{dim} q{q} {tstr or 'auto'}", chk)


SUITES = {
    "fields": suite_fields,
    "spaces": suite_spaces,
    "groups": suite_groups,
    "weyl": suite_weyl,
    "tori": suite_tori,
    "omega": suite_omega,
    "multiplication": suite_multiplication,
    "census": suite_census,
    "quadruples": suite_quadruples,
}
SUITE_NAMES = list(SUITES) + ["all"]


def cmd_verify(args):
    wanted = list(args.suites) + list(args.suite)
    for s in wanted:
        if s not in SUITE_NAMES:
            raise Refusal(f"unknown suite {s!r}; choose from "
                          + ", ".join(SUITE_NAMES))
    if not wanted:
        wanted = ["all"]
    if "all" in wanted:
        wanted = list(SUITES)
    seen = set()
    ordered = [s for s in wanted if not (s in seen or seen.add(s))]
    if getattr(args, "q", None):
        _resolve_q(args)
    run = _Runner()
    for suite in ordered:
        SUITES[suite](run, args)
        if not any(c["suite"] == suite for c in run.checks):
            run.run(suite, "skip", lambda: "no matching targets")
    failed = sum(1 for c in run.checks if c["status"] == "FAIL")
    passed = len(run.checks) - failed
    cfg = {"command": "verify", "suites": ",".join(ordered)}
    for key in ("q", "dim", "type"):
        if getattr(args, key, None):
            cfg[key] = getattr(args, key)
    cfg.update(cache_dir=args.cache_dir, format=args.format,
               max_order=args.max_order, threads=args.threads)
    if args.format == "json":
        doc = {"config": cfg, "checks": run.checks,
               "totals": {"passed": passed, "failed": failed}}
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        sys.stdout.write(_config_comment(cfg) + "\n")
        for c in run.checks:
            line = f"{c['status']} [{c['suite']}] {c['name']}"
            if c["detail"]:
                line += f": {c['detail']}"
            sys.stdout.write(line + "\n")
        sys.stdout.write(f"passed {passed} failed {failed}\n")
    return 1 if failed else 0


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except Refusal as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
