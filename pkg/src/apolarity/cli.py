"""Command-line front end.

Exit status: 0 on success, 2 when a verification or table comparison fails,
1 on a usage error (bad flags, unsupported sizes).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import apolar, combinatorics, groebner, invariants, ranks, symgroup, tables
from .ring import GENERIC, SYMMETRIC, USUAL, RingSpec, format_monomial, format_poly

EXIT_OK, EXIT_USAGE, EXIT_FAILED = 0, 1, 2
DEFAULT_CAP, EXTENDED_CAP = 6, 7


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _layout(name: str) -> str:
    return {"sym": SYMMETRIC, "symmetric": SYMMETRIC, "generic": GENERIC}[name]


def _add_size(p, forms=True, pairing=True):
    p.add_argument("--n", type=int, required=True, help="matrix size")
    p.add_argument("--extended", action="store_true",
                   help=f"allow n up to {EXTENDED_CAP} (slow)")
    if forms:
        p.add_argument("--form", default="det",
                       help="det, perm, hafnian or imm:<partition> such as imm:2,1")
        p.add_argument("--layout", default="sym", choices=["sym", "symmetric", "generic"])
    if pairing:
        p.add_argument("--pairing", default="diff", choices=["diff", "contract"])


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--out", help="write the report to this file instead of stdout")
    common.add_argument("--output", choices=["json", "md"], default=None,
                        help="report format (tables default to md, everything else to json)")
    common.add_argument("--threads", type=int, default=1,
                        help="accepted as a hint; computations are single-threaded")
    parser = _Parser(prog="apolarity", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, help: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, help=help, parents=[common])

    p = add("hilbert", help="Hilbert sequence of the apolar algebra")
    _add_size(p)
    p.add_argument("--profile", action="store_true", help="also report minimal generator counts")

    p = add("generators", help="minimal generator counts of the apolar ideal")
    _add_size(p)
    p.add_argument("--monomial-degree", type=int, default=None,
                   help="also list the monomial generators of this degree")

    p = add("verify", help="check that a named set generates the apolar ideal")
    _add_size(p)
    p.add_argument("--set", required=True, choices=sorted(invariants.GENERATOR_SETS))
    p.add_argument("--max-degree", type=int, default=None)

    p = add("groebner-check", help="Buchberger's criterion for a named set")
    _add_size(p, forms=False, pairing=False)
    p.add_argument("--set", default="V", choices=sorted(invariants.GENERATOR_SETS))
    p.add_argument("--order", default="conca", choices=["conca", "conca_lex", "reverse",
                                                        "reverse_conca_lex"])

    p = add("ranks", help="rank lower bounds")
    _add_size(p)
    p.add_argument("--t", type=int, default=None, help="fix t in the determinant bound")

    p = add("character", help="characters of S_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--space", default="monhaf", choices=["monhaf", "irreducible"])
    p.add_argument("--shape", default=None, help="partition for --space irreducible, e.g. 2,2")
    p.add_argument("--maps", action="store_true",
                   help="also report kernels and images of h -> h o perm and h -> h o det")

    p = add("combinatorics", help="minor-space dimensions and lattice-path counts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--convention", default="table", choices=["table", "shifted"])

    p = add("tables", help="recompute a published table and compare")
    p.add_argument("--id", type=int, required=True, choices=list(tables.TABLE_IDS))
    p.add_argument("--extended", action="store_true", help="add the n = 7, 8 rows")
    return parser


def _check_size(args) -> None:
    cap = EXTENDED_CAP if getattr(args, "extended", False) else DEFAULT_CAP
    if args.n < 1:
        raise UsageError("--n must be positive")
    if args.n > cap:
        hint = "" if args.extended else f"; pass --extended for n <= {EXTENDED_CAP}"
        raise UsageError(f"n = {args.n} exceeds the size cap {cap}{hint}")


def _form(args):
    ring = RingSpec(args.n, _layout(args.layout), USUAL)
    try:
        return invariants.form_poly(ring, args.form)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _header(args) -> dict:
    return {"n": args.n, "form": args.form, "layout": _layout(args.layout), "pairing": args.pairing}


def cmd_hilbert(args):
    _check_size(args)
    F = _form(args)
    spaces = apolar.derived_spaces(F, args.pairing)
    h = [s.dim for s in spaces]
    report = {**_header(args), "hilbert": h, "length": sum(h)}
    if args.profile:
        prof = apolar.minimal_generator_profile(F, args.pairing, spaces=spaces)
        report["generator_profile"] = {str(k): v for k, v in prof.as_dict().items()}
    return report, EXIT_OK


def cmd_generators(args):
    _check_size(args)
    F = _form(args)
    spaces = apolar.derived_spaces(F, args.pairing)
    prof = apolar.minimal_generator_profile(F, args.pairing, spaces=spaces)
    report = {**_header(args), "generator_profile": {str(k): v for k, v in prof.as_dict().items()},
              "socle": prof.socle, "max_degree": prof.max_degree}
    if args.monomial_degree is not None:
        k = args.monomial_degree
        if not 1 <= k <= len(spaces):
            raise UsageError(f"--monomial-degree must lie in 1..{len(spaces)}")
        mons = apolar.monomial_generators(F, k, args.pairing, spaces=spaces)
        report["monomial_generators"] = [format_monomial(m, F.ring, "y") for m in mons]
    return report, EXIT_OK


def cmd_verify(args):
    _check_size(args)
    if args.layout == "generic":
        raise UsageError("named generator sets live in the symmetric layout")
    F = _form(args)
    gens = invariants.generator_set(args.set, args.n)
    rep = apolar.verify_generator_set(F, gens, args.pairing, args.max_degree)
    report = {**_header(args), "set": args.set, "size": len(gens), "verification": rep.as_dict()}
    return report, EXIT_OK if rep.passed else EXIT_FAILED


def cmd_groebner(args):
    _check_size(args)
    gens = invariants.generator_set(args.set, args.n)
    rep = groebner.is_groebner(gens, args.order)
    failures = [{"i": i, "j": j, "normal_form": format_poly(rep.remainders[(i, j)], "y")}
                for i, j in rep.failures]
    report = {"n": args.n, "set": args.set, "order": groebner.get_order(args.order).name,
              "pairs_checked": rep.pairs_checked, "failures": failures}
    return report, EXIT_OK if rep.passed else EXIT_FAILED


def cmd_ranks(args):
    _check_size(args)
    F = _form(args)
    rep = ranks.rank_report(F, args.form, args.pairing)
    out = rep.as_dict()
    if args.t is not None:
        if args.form != "det" or args.layout == "generic" or args.pairing != "diff":
            raise UsageError("--t applies to the symmetric determinant under diff")
        try:
            lt = ranks.lt_bound_det(args.n, args.t)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        out["lt_bound"] = {"bound": lt.bound, "t": lt.t, "claimed_argmax": lt.claimed_argmax,
                           "computed_argmax": lt.computed_argmax}
    return out, EXIT_OK


def _partition(text: str) -> tuple:
    try:
        parts = tuple(sorted((int(x) for x in text.split(",")), reverse=True))
    except ValueError:
        raise UsageError(f"bad partition {text!r}") from None
    if any(p <= 0 for p in parts):
        raise UsageError(f"bad partition {text!r}")
    return parts


def cmd_character(args):
    n = args.n
    if not 1 <= n <= 10:
        raise UsageError("character computations support 1 <= n <= 10")
    classes = symgroup.conjugacy_classes(n)
    if args.space == "monhaf":
        if n % 2:
            raise UsageError("the hafnian monomial space needs an even n")
        ring = RingSpec(n, SYMMETRIC, USUAL)
        chi = symgroup.monomial_space_character(invariants.hafnian_poly(ring).monomials(), ring)
    else:
        if args.shape is None:
            raise UsageError("--space irreducible needs --shape")
        shape = _partition(args.shape)
        if sum(shape) != n:
            raise UsageError(f"{args.shape} is not a partition of {n}")
        chi = symgroup.character(shape)
    decomposition = symgroup.decompose(chi, n)
    report = {
        "n": n, "space": args.space,
        "classes": [c.label for c in classes],
        "class_sizes": [c.size for c in classes],
        "chi": symgroup.character_vector(chi, n),
        "norm": str(symgroup.inner_product(chi, chi, n)),
        "decomposition": {",".join(map(str, s)): m for s, m in
                          sorted(decomposition.items(), reverse=True)},
    }
    if args.maps:
        if args.space != "monhaf":
            raise UsageError("--maps needs --space monhaf")
        if n > 8:
            raise UsageError("--maps supports n <= 8")
        report["maps"] = symgroup.phi_psi_maps(n).as_dict()
    return report, EXIT_OK


def cmd_combinatorics(args):
    n = args.n
    if not 1 <= n <= 30:
        raise UsageError("combinatorics supports 1 <= n <= 30")
    report = {
        "n": n,
        "catalan": combinatorics.catalan(n + 1),
        "narayana": [combinatorics.narayana(n + 1, k) for k in range(1, n + 2)],
        "minor_space_dims": [combinatorics.minor_space_dim(n, t, args.convention)
                             for t in range(n + 1)],
        "permanent_space_dims": [combinatorics.permanent_space_dim(n, t) for t in range(n + 1)],
        "det_length": combinatorics.det_length(n),
        "perm_length": combinatorics.perm_length(n),
        "convention": args.convention,
    }
    return report, EXIT_OK


def cmd_tables(args):
    table = tables.emit_table(args.id, args.extended)
    return table, EXIT_OK if table.matches else EXIT_FAILED


COMMANDS = {
    "hilbert": cmd_hilbert, "generators": cmd_generators, "verify": cmd_verify,
    "groebner-check": cmd_groebner, "ranks": cmd_ranks, "character": cmd_character,
    "combinatorics": cmd_combinatorics, "tables": cmd_tables,
}


def _render(result, fmt: str) -> str:
    if isinstance(result, tables.Table):
        if fmt == "json":
            return json.dumps(result.as_dict(), indent=2) + "\n"
        return result.to_markdown()
    if fmt == "md":
        lines = ["| key | value |", "|---|---|"]
        lines += [f"| {k} | {json.dumps(v)} |" for k, v in result.items()]
        return "\n".join(lines) + "\n"
    return json.dumps(result, indent=2) + "\n"


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        result, code = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=stderr)
        return EXIT_USAGE
    fmt = args.output or ("md" if args.command == "tables" else "json")
    text = _render(result, fmt)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    if isinstance(result, tables.Table) and result.mismatches:
        for m in result.mismatches:
            print(f"mismatch in table {result.id}, {m.row} [{m.column}]: "
                  f"expected {m.expected}, actual {m.actual}", file=stderr)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
