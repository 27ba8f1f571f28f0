"""Command-line front end. Every subcommand prints one JSON document (or CSV)."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import bounds, lemmas, pairing, qseries
from .counting import count_series, enumerate_class, enumerate_two_colored, inequality_scan
from .errors import NotInRangeError, WorkbenchError
from .frobenius import frobenius_number, solve_refined, solve_sylvester
from .injections import eta_alt, eta_alt_recover, eta_t3, eta_t3_recover, phi_t1, phi_t1_recover, verify_injection
from .partitions import KINDS, ClassParams, parse, serialize

EXIT_OK, EXIT_DOMAIN, EXIT_ASSERT, EXIT_USAGE = 0, 1, 2, 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def _int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _partition(text: str):
    try:
        return parse(text)
    except WorkbenchError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _class_opts(p, kind=True):
    p.add_argument("--L", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--V", type=_int_list, default=())
    if kind:
        p.add_argument("--kind", choices=KINDS, default="I")


def _params(a, kind=None) -> ClassParams:
    return ClassParams(a.L, a.s, a.V, kind or a.kind)


def _rows_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _flat_csv(doc: dict) -> str:
    return _rows_csv(["key", "value"], [(k, json.dumps(v, separators=(",", ":")) if isinstance(v, (dict, list)) else v)
                                        for k, v in doc.items()])


# -- subcommands -------------------------------------------------------------

def cmd_count(a):
    table = count_series(_params(a), a.nmax)
    return table.to_csv() if a.format == "csv" else table.to_json()


def cmd_enumerate(a):
    c = _params(a)
    if c.kind == "P":
        pairs = enumerate_two_colored(c, a.n)
        rows = [(serialize(g), serialize(r)) for g, r in pairs]
        if a.format == "csv":
            return _rows_csv(["green", "red"], rows)
        return {"params": c.to_json(), "n": a.n, "count": len(rows),
                "partitions": [{"green": g, "red": r} for g, r in rows]}
    parts = [serialize(p) for p in enumerate_class(c, a.n)]
    if a.format == "csv":
        return _rows_csv(["partition"], [(p,) for p in parts])
    return {"params": c.to_json(), "n": a.n, "count": len(parts), "partitions": parts}


def cmd_scan(a):
    rep = inequality_scan(_params(a, a.kind_a), _params(a, a.kind_b), a.nmax)
    if a.format == "csv":
        return _rows_csv(["n", "sign"], list(enumerate(rep.signs)))
    return rep.to_json()


_MAPS = {
    "map-t1": (phi_t1, phi_t1_recover, "I"),
    "map-t3": (eta_t3, eta_t3_recover, "DV"),
    "map-alt": (eta_alt, eta_alt_recover, "DV"),
}


def cmd_map(a):
    forward, recover, kind = _MAPS[a.command]
    c = _params(a, kind)
    if a.recover:
        trace = recover(a.partition, c)
        doc = {"image": serialize(a.partition), **trace.to_json()}
    else:
        image, trace = forward(a.partition, c)
        doc = {"partition": serialize(a.partition), "image": serialize(image), **trace.to_json()}
    return _flat_csv(doc) if a.format == "csv" else doc


def cmd_verify(a):
    rep = verify_injection(_params(a, "I"), a.map, a.n)
    doc = rep.to_json()
    return _flat_csv(doc) if a.format == "csv" else doc


def cmd_qseries(a):
    x = qseries.SERIES[a.series](a.L, a.s, a.V, a.nmax)
    if a.sign_from is not None:
        doc = {"series": a.series, **qseries.sign_scan(x, a.sign_from).to_json()}
        return _flat_csv(doc) if a.format == "csv" else doc
    return x.to_csv() if a.format == "csv" else {"series": a.series, **x.to_json()}


_PAIR_RANK = {
    "cantor": lambda m: pairing.cantor_pair(*m),
    "cantor-shifted": lambda m: pairing.cantor_pair_shifted(*m),
    "spiral": lambda m: pairing.spiral_pair(*m),
    "cns": pairing.cns_rank,
    "psi0": pairing.psi0_rank,
    "psi": pairing.psi_rank,
}


def _pair_unrank(name, v, t):
    if name == "cantor":
        return pairing.cantor_unpair(v)
    if name == "spiral":
        return pairing.spiral_unpair(v)
    if name == "cns":
        m = pairing.cns_unrank(v, t)
        if m is None:
            raise NotInRangeError(f"{v} is not a rank of a positive {t}-tuple")
        return m
    if name == "psi0":
        return pairing.psi0_unrank(v, t)
    if name == "psi":
        return pairing.psi_unrank(v, t)
    raise NotInRangeError(f"{name} has no inverse here")


def cmd_pairing(a):
    if a.rank is not None:
        m = a.rank
        if a.map in ("cantor", "cantor-shifted", "spiral") and len(m) != 2:
            raise NotInRangeError(f"{a.map} takes exactly two entries")
        doc = {"map": a.map, "tuple": [str(x) for x in m], "value": str(_PAIR_RANK[a.map](m))}
    else:
        m = _pair_unrank(a.map, a.unrank, a.t)
        doc = {"map": a.map, "value": str(a.unrank), "tuple": [str(x) for x in m]}
    return _flat_csv(doc) if a.format == "csv" else doc


def cmd_frobenius(a):
    if a.op == "number":
        doc = {"a": str(a.a), "b": str(a.b), "frobenius": str(frobenius_number(a.a, a.b))}
    elif a.op == "solve":
        x, y = solve_sylvester(a.a, a.b, a.n)
        doc = {"x": str(x), "y": str(y)}
    else:
        x, y = solve_refined(a.a, a.b, a.n, a.h)
        doc = {"x": str(x), "y": str(y)}
    return _flat_csv(doc) if a.format == "csv" else doc


def cmd_bounds(a):
    names = [a.name] if a.name else list(bounds.NAMES)
    out = {}
    for name in names:
        sig = bounds.signature(name)
        args = a.args if a.name else tuple(getattr(a, k) for k in sig)
        if None in args:
            continue
        out[name] = str(bounds.evaluate(name, *args))
    if not out:
        raise NotInRangeError("no constant could be evaluated from the given arguments")
    if a.format == "csv":
        return _rows_csv(["name", "value"], list(out.items()))
    return out


_LEMMAS = {
    "cns-power": lambda a: lemmas.cns_power_lemma(a.t_max or 5, a.entry_max),
    "ratio-power": lambda a: lemmas.ratio_power_lemma(a.s_max, a.t_max or 12),
    "k2-regions": lambda a: lemmas.k2_regions_disjoint(a.k_max),
    "vsets": lambda a: lemmas.v_sets_disjoint_scan(a.s, a.t, a.window * bounds.B(a.s, a.t)),
}


def cmd_lemma_check(a):
    names = list(_LEMMAS) if a.which == "all" else [a.which]
    results = [_LEMMAS[n](a) for n in names]
    if a.format == "csv":
        return _rows_csv(["name", "checked", "violations"], [(r.name, r.checked, len(r.violations)) for r in results])
    return {"results": [r.to_json() for r in results], "ok": all(r.ok for r in results)}


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    root = _Parser(prog="partineq", description="Partition inequality workbench.")
    root.add_argument("--seed", type=int, default=None, help="accepted for interface stability; unused")
    sub = root.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, **kw):
        p = sub.add_parser(name, **kw)
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.set_defaults(fn=fn)
        return p

    p = add("count", cmd_count, help="coefficient table of a class generating function")
    _class_opts(p)
    p.add_argument("--nmax", type=int, required=True)

    p = add("enumerate", cmd_enumerate, help="list the members of a class of a given weight")
    _class_opts(p)
    p.add_argument("--n", type=int, required=True)

    p = add("scan", cmd_scan, help="sign of count_a(n) - count_b(n)")
    _class_opts(p, kind=False)
    p.add_argument("--kind-a", choices=KINDS, default="I")
    p.add_argument("--kind-b", choices=KINDS, default="D")
    p.add_argument("--nmax", type=int, required=True)

    for name in _MAPS:
        p = add(name, cmd_map, help=f"apply {name[4:].upper()} to one partition")
        _class_opts(p, kind=False)
        p.add_argument("--partition", type=_partition, required=True, help='e.g. [["1","28"]]')
        p.add_argument("--recover", action="store_true", help="treat the partition as an image and invert")

    p = add("verify", cmd_verify, help="check a map on every member of weight n")
    _class_opts(p, kind=False)
    p.add_argument("--map", type=str.upper, choices=("T1", "T3", "ALT"), required=True)
    p.add_argument("--n", type=int, required=True)

    p = add("qseries", cmd_qseries, help="expand H, Hprime or Hdoubleprime")
    _class_opts(p, kind=False)
    p.add_argument("--series", choices=tuple(qseries.SERIES), required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--sign-from", type=int, default=None, help="report the sign pattern from this index on")

    p = add("pairing", cmd_pairing, help="rank or unrank a tuple")
    p.add_argument("--map", choices=tuple(_PAIR_RANK), required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--rank", type=_int_list, metavar="M1,M2,...")
    g.add_argument("--unrank", type=int, metavar="V")
    p.add_argument("--t", type=int, default=2)

    p = add("frobenius", cmd_frobenius, help="Frobenius number and canonical solutions")
    p.add_argument("op", choices=("number", "solve", "refined"))
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--h", type=int, default=0)

    p = add("bounds", cmd_bounds, help="evaluate the named thresholds")
    p.add_argument("--name", choices=bounds.NAMES)
    p.add_argument("--args", type=_int_list, default=(), metavar="X,Y")
    for k in ("L", "s", "t"):
        p.add_argument(f"--{k}", type=int)

    p = add("lemma-check", cmd_lemma_check, help="exhaustive checks of the numeric lemmas")
    p.add_argument("which", nargs="?", choices=("all", *_LEMMAS), default="all")
    p.add_argument("--t-max", type=int, default=None)
    p.add_argument("--entry-max", type=int, default=10)
    p.add_argument("--s-max", type=int, default=12)
    p.add_argument("--k-max", type=int, default=30)
    p.add_argument("--s", type=int, default=1, help="vsets: smallest part")
    p.add_argument("--t", type=int, default=1, help="vsets: |V|")
    p.add_argument("--window", type=int, default=1000, help="vsets: number of B-blocks to scan")
    return root


def _check(a, parser):
    if a.command == "frobenius" and a.op != "number" and a.n is None:
        parser.error("frobenius solve/refined need --n")


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
        _check(a, parser)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        result = a.fn(a)
    except WorkbenchError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_DOMAIN
    except AssertionError as exc:
        sys.stderr.write(f"internal check failed: {exc}\n")
        return EXIT_ASSERT
    if isinstance(result, str):
        out.write(result)
    else:
        out.write(json.dumps(result, separators=(",", ":")) + "\n")
    return EXIT_OK


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
