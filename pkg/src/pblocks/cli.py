"""Command line front end.

Subcommands: ``table``, ``blocks``, ``ibr``, ``weights``, ``verify``
(awc, navarro, extended, navset, dgn, chains), and ``battery``.  Groups
are given as catalog names (``sym:4``), inline cycles
(``"(1,2,3)(4,5); (1,2)"``), or paths to group files.  JSON output is
deterministic: keys sorted, integers and strings only, and a constant
``wall_ms`` of 0 so identical invocations produce identical bytes.

Exit codes: 0 when every verdict is EQUAL (SKIPPED also passes under
``--allow-skip``), 2 when any verdict fails, 1 on usage or input errors.
"""

import argparse
import json
import sys

from .catalog import resolve_group
from .errors import (CapExceeded, HypothesisViolated, PBlocksError,
                     QuotientNotPGroup)
from .group import PermGroup
from .perm import format_cycles
from .verify import (VerificationReport, group_descriptor, verify_bawc,
                     verify_chain_counts, verify_dgn_count, verify_extended,
                     verify_nav_set, verify_navarro, CHAIN_CAP)
from .weights import enumerate_weights
from .workspace import Workspace

__all__ = ["main"]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        raise SystemExit(1)


def _primes(text):
    try:
        out = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise PBlocksError(f"bad prime list {text!r}")
    if not out or any(p < 2 for p in out):
        raise PBlocksError(f"bad prime list {text!r}")
    return out


def _check_dim_cap(G: PermGroup, cap_dim):
    # the splitting engine works inside the regular module, so the group
    # order bounds every dimension it can meet
    if cap_dim is not None and G.order > cap_dim:
        raise CapExceeded(
            f"regular module dimension {G.order} exceeds cap {cap_dim}")


_REPORT_KEYS = {"schema_version", "statement", "group", "prime", "seed",
                "caps", "per_block", "wall_ms"}


def _check_exact(node):
    # no float may reach a report; everything is an int, a string, or a
    # container of those
    if isinstance(node, dict):
        for key, value in node.items():
            assert isinstance(key, str)
            _check_exact(value)
    elif isinstance(node, (list, tuple)):
        for value in node:
            _check_exact(value)
    else:
        assert node is None or isinstance(node, (str, int)), \
            f"inexact value {node!r} in emitted payload"


def _write_json(payload, path, reports=False):
    _check_exact(payload)
    if reports:
        for entry in payload if isinstance(payload, list) else [payload]:
            missing = _REPORT_KEYS - entry.keys()
            assert not missing, f"report missing fields {sorted(missing)}"
    text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    with open(path, "w", encoding="ascii") as fh:
        fh.write(text)


def _report_caps(report, args):
    if getattr(args, "cap_order", None) is not None:
        report.caps["order"] = args.cap_order
    if getattr(args, "cap_dim", None) is not None:
        report.caps["dim"] = args.cap_dim


def _emit_reports(reports, args):
    for rep in reports:
        head = f"{rep.statement} {rep.group}"
        if rep.overgroup is not None:
            head += f" < {rep.overgroup}"
        print(f"{head} p={rep.prime}")
        for line in rep.per_block:
            rhs = "-" if line.rhs is None else line.rhs
            print(f"  {line.block_id} (defect {line.defect}): "
                  f"{line.lhs} vs {rhs}  {line.verdict}")
        print(f"  verdict: {rep.verdict}")
    if args.json_path:
        payloads = [rep.payload() for rep in reports]
        _write_json(payloads[0] if len(payloads) == 1 else payloads,
                    args.json_path, reports=True)


def _exit_code(reports, allow_skip):
    verdicts = [rep.verdict for rep in reports]
    if any(v == "UNEQUAL" for v in verdicts):
        return 2
    if any(v == "SKIPPED" for v in verdicts) and not allow_skip:
        return 2
    return 0


# -- informational subcommands ---------------------------------------------

def _cmd_table(args):
    G = resolve_group(args.group, cap=args.cap_order)
    ws = Workspace(G, 2, seed=args.seed)
    table = ws.bundle(G).table
    print(f"{group_descriptor(G)}: order {G.order}, degree {G.degree}, "
          f"{len(table.classes)} classes")
    for cls in table.classes:
        print(f"  class {cls.index}: size {cls.size}, order {cls.order}, "
              f"rep {format_cycles(cls.rep)}")
    for chi in table.chars:
        print(f"  X{chi.index} (degree {chi.degree}): "
              + " ".join(str(v) for v in chi.values))
    if args.json_path:
        _write_json({
            "schema_version": 1,
            "group": group_descriptor(G),
            "order": G.order,
            "degree": G.degree,
            "classes": [{"index": c.index, "size": c.size, "order": c.order,
                         "rep": format_cycles(c.rep)}
                        for c in table.classes],
            "characters": [{"index": chi.index, "degree": chi.degree,
                            "values": [str(v) for v in chi.values]}
                           for chi in table.chars],
        }, args.json_path)
    return 0


def _cmd_blocks(args):
    G = resolve_group(args.group, cap=args.cap_order)
    entries = []
    for p in _primes(args.prime):
        ws = Workspace(G, p, seed=args.seed)
        gb = ws.bundle(G)
        print(f"{group_descriptor(G)} p={p}: {len(gb.blocks)} blocks")
        for B in gb.blocks:
            print(f"  {B.label()}: defect {B.defect}, "
                  f"defect group order {B.defect_group.order}, "
                  f"characters {sorted(B.char_indices)}")
        entries.append({
            "schema_version": 1,
            "group": group_descriptor(G),
            "prime": p,
            "blocks": [{"block_id": B.label(), "defect": B.defect,
                        "defect_group_order": B.defect_group.order,
                        "characters": sorted(B.char_indices)}
                       for B in gb.blocks],
        })
    if args.json_path:
        _write_json(entries[0] if len(entries) == 1 else entries,
                    args.json_path)
    return 0


def _cmd_ibr(args):
    G = resolve_group(args.group, cap=args.cap_order)
    _check_dim_cap(G, args.cap_dim)
    entries = []
    for p in _primes(args.prime):
        ws = Workspace(G, p, seed=args.seed)
        gb = ws.bundle(G)
        print(f"{group_descriptor(G)} p={p}: {len(gb.ibr)} Brauer characters")
        for phi in gb.ibr:
            print(f"  phi{phi.index} (dim {phi.dim}) in "
                  f"B{gb.ibr_block[phi.index]}: "
                  + " ".join(str(v) for v in phi.values))
        entries.append({
            "schema_version": 1,
            "group": group_descriptor(G),
            "prime": p,
            "seed": ws.seed,
            "p_regular_classes": list(gb.p_regular_indices()),
            "ibr": [{"index": phi.index, "dim": phi.dim,
                     "block": gb.ibr_block[phi.index],
                     "values": [str(v) for v in phi.values]}
                    for phi in gb.ibr],
        })
    if args.json_path:
        _write_json(entries[0] if len(entries) == 1 else entries,
                    args.json_path)
    return 0


def _cmd_weights(args):
    G = resolve_group(args.group, cap=args.cap_order)
    _check_dim_cap(G, args.cap_dim)
    entries = []
    for p in _primes(args.prime):
        ws = Workspace(G, p, seed=args.seed)
        weights = enumerate_weights(ws)
        print(f"{group_descriptor(G)} p={p}: {len(weights)} weight orbits")
        for w in weights:
            print(f"  {w.orbit_id}: |Q| = {w.subgroup.order}, "
                  f"psi dim {w.psi.dim}, induced block B{w.induced_block}")
        entries.append({
            "schema_version": 1,
            "group": group_descriptor(G),
            "prime": p,
            "seed": ws.seed,
            "weights": [{"orbit_id": w.orbit_id,
                         "q_order": w.subgroup.order,
                         "psi_dim": w.psi.dim,
                         "normalizer_block": w.normalizer_block,
                         "induced_block": w.induced_block}
                        for w in weights],
        })
    if args.json_path:
        _write_json(entries[0] if len(entries) == 1 else entries,
                    args.json_path)
    return 0


# -- verification ----------------------------------------------------------

def _resolve_pair(args, need_pair):
    if args.overgroup and args.normal_subgroup:
        raise PBlocksError("--overgroup and --normal-subgroup are exclusive")
    if args.overgroup:
        G = resolve_group(args.group, cap=args.cap_order)
        Gamma = resolve_group(args.overgroup, cap=args.cap_order)
    elif args.normal_subgroup:
        Gamma = resolve_group(args.group, cap=args.cap_order)
        G = resolve_group(args.normal_subgroup, cap=args.cap_order)
    else:
        if need_pair:
            raise PBlocksError(
                "this statement needs --overgroup or --normal-subgroup")
        G = Gamma = resolve_group(args.group, cap=args.cap_order)
    if G.degree != Gamma.degree:
        raise PBlocksError(
            f"degree mismatch: {G.degree} vs {Gamma.degree}; both groups "
            f"must act on the same points")
    return G, Gamma


def _chains_report(ws, G, seed):
    gb = ws.bundle(G)
    merged = VerificationReport(statement="chains",
                                group=group_descriptor(G),
                                prime=ws.p, seed=seed,
                                caps={"chains": CHAIN_CAP})
    for B in gb.blocks:
        if B.defect == 0:
            continue
        sub = verify_chain_counts(ws, B)
        merged.per_block.extend(sub.per_block)
    return merged


def _skipped_report(statement, G, Gamma, p, seed, reason):
    # caps and statement hypotheses that fail on the given input yield a
    # SKIPPED verdict rather than an error; --allow-skip then passes it
    rep = VerificationReport(
        statement=statement, group=group_descriptor(G), prime=p, seed=seed,
        overgroup=None if Gamma is None or Gamma is G
        else group_descriptor(Gamma))
    rep.add("all", 0, 0, 0, witnesses={"reason": str(reason)},
            verdict="SKIPPED")
    return rep


def _cmd_verify(args):
    statement = args.statement
    reports = []
    for p in _primes(args.prime):
        if statement == "awc":
            if args.normal_subgroup:
                raise PBlocksError("awc takes --overgroup only")
            G = resolve_group(args.group, cap=args.cap_order)
            Gamma = resolve_group(args.overgroup, cap=args.cap_order) \
                if args.overgroup else None
            if Gamma is not None and Gamma.degree != G.degree:
                raise PBlocksError("degree mismatch between group and "
                                   "overgroup")
        elif statement == "chains":
            G = resolve_group(args.group, cap=args.cap_order)
            Gamma = None
        else:
            G, Gamma = _resolve_pair(args, need_pair=(statement == "dgn"))
        try:
            if statement == "awc":
                _check_dim_cap(Gamma or G, args.cap_dim)
                ws = Workspace(Gamma if Gamma is not None else G, p,
                               seed=args.seed)
                rep = verify_bawc(ws, G if Gamma is not None else None,
                                  A=Gamma)
            elif statement == "chains":
                ws = Workspace(G, p, seed=args.seed)
                rep = _chains_report(ws, G, args.seed)
            else:
                if statement != "dgn":
                    _check_dim_cap(Gamma, args.cap_dim)
                ws = Workspace(Gamma, p, seed=args.seed)
                fn = {"navarro": verify_navarro,
                      "extended": verify_extended,
                      "navset": verify_nav_set,
                      "dgn": verify_dgn_count}[statement]
                rep = fn(ws, G)
        except (CapExceeded, HypothesisViolated, QuotientNotPGroup) as exc:
            rep = _skipped_report(statement, G, Gamma, p, args.seed, exc)
        _report_caps(rep, args)
        reports.append(rep)
    reports.sort(key=lambda r: (r.statement, r.group, r.prime))
    _emit_reports(reports, args)
    return _exit_code(reports, args.allow_skip)


# -- battery ---------------------------------------------------------------

_V4 = "(1,3)(2,4); (1,2)(3,4)"
_E9 = "(1,2,3); (4,5,6)"
_E9C2 = "(1,2,3); (4,5,6); (1,4)(2,5)(3,6)"
_C3_DEG6 = "(1,3,5)(2,4,6)"
_C7 = "(1,2,3,4,5,6,7)"
_F21 = "(1,2,3,4,5,6,7); (2,3,5)(4,7,6)"

BATTERY_AWC = [("cyclic:6", (2, 3)), ("sym:3", (2, 3)), ("sym:4", (2, 3)),
               ("alt:4", (2, 3)), ("alt:5", (2, 3, 5)), ("dihedral:8", (2,)),
               ("quaternion:8", (2,)), ("sl:2:3", (2, 3))]
BATTERY_PAIRS = [("cyclic:3", "sym:3"), (_V4, "dihedral:8"),
                 (_C3_DEG6, "cyclic:6"), ("alt:4", "sym:4"), (_E9, _E9C2)]
BATTERY_DGN = [("cyclic:3", "sym:3", 2), (_E9, _E9C2, 2),
               ("cyclic:5", "dihedral:10", 2), (_C7, _F21, 3)]
BATTERY_CHAINS = [("sym:3", 3), ("dihedral:8", 2), ("alt:5", 2)]


def _cmd_battery(args):
    if args.suite != "default":
        raise PBlocksError(f"unknown suite {args.suite!r}")
    wanted = set(_primes(args.prime)) if args.prime else None

    def keep(p):
        return wanted is None or p in wanted

    reports = []
    for spec, primes in BATTERY_AWC:
        G = resolve_group(spec)
        for p in primes:
            if not keep(p):
                continue
            ws = Workspace(G, p, seed=args.seed)
            reports.append(verify_bawc(ws))
    for g_spec, gamma_spec in BATTERY_PAIRS:
        if not keep(2):
            continue
        G = resolve_group(g_spec)
        Gamma = resolve_group(gamma_spec)
        ws = Workspace(Gamma, 2, seed=args.seed)
        reports.append(verify_navarro(ws, G))
        reports.append(verify_extended(ws, G))
        reports.append(verify_nav_set(ws, G))
    for k_spec, gamma_spec, p in BATTERY_DGN:
        if not keep(p):
            continue
        K = resolve_group(k_spec)
        Gamma = resolve_group(gamma_spec)
        ws = Workspace(Gamma, p, seed=args.seed)
        reports.append(verify_dgn_count(ws, K))
    for spec, p in BATTERY_CHAINS:
        if not keep(p):
            continue
        G = resolve_group(spec)
        ws = Workspace(G, p, seed=args.seed)
        reports.append(_chains_report(ws, G, args.seed))
    reports.sort(key=lambda r: (r.statement, r.group,
                                r.overgroup or "", r.prime))
    _emit_reports(reports, args)
    return _exit_code(reports, args.allow_skip)


# -- parser ----------------------------------------------------------------

def build_parser():
    parser = _Parser(prog="pblocks",
                     description="block, weight, and counting identity "
                                 "toolkit for finite permutation groups")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, prime=True):
        sp.add_argument("--group", required=True,
                        help="catalog name, inline cycles, or group file")
        if prime:
            sp.add_argument("--prime", required=True,
                            help="prime or comma-separated primes")
        sp.add_argument("--json", dest="json_path", metavar="PATH")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--cap-order", type=int, default=None)
        sp.add_argument("--cap-dim", type=int, default=None)

    sp = sub.add_parser("table", help="ordinary character table")
    common(sp, prime=False)
    sp.set_defaults(func=_cmd_table)

    sp = sub.add_parser("blocks", help="block distribution")
    common(sp)
    sp.set_defaults(func=_cmd_blocks)

    sp = sub.add_parser("ibr", help="irreducible Brauer characters")
    common(sp)
    sp.set_defaults(func=_cmd_ibr)

    sp = sub.add_parser("weights", help="weight orbits")
    common(sp)
    sp.set_defaults(func=_cmd_weights)

    sp = sub.add_parser("verify", help="counting identity verifiers")
    sp.add_argument("statement", choices=["awc", "navarro", "extended",
                                          "navset", "dgn", "chains"])
    common(sp)
    sp.add_argument("--overgroup", metavar="SPEC")
    sp.add_argument("--normal-subgroup", metavar="SPEC")
    sp.add_argument("--allow-skip", action="store_true")
    sp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("battery", help="fixed verification suite")
    sp.add_argument("--suite", default="default")
    sp.add_argument("--prime", default=None,
                    help="restrict suite jobs to these primes")
    sp.add_argument("--json", dest="json_path", metavar="PATH")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--allow-skip", action="store_true")
    sp.set_defaults(func=_cmd_battery)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PBlocksError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
