"""Command-line driver.

Exit codes: 0 success, 1 input error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .algebra import Ideal, TermOrder
from .chow import (
    chow_form_hypersurface,
    chow_form_monomial,
    expand,
    minimal_supports,
    noether_complexity,
    parse_brackets,
    sparsest_normalization,
)
from .config import DEFAULTS
from .fixtures import read_text
from .monomial_ideals import MonomialIdeal, codim_ideal, initial_ideal, minimal_primes
from .noether import (
    NormalizationCandidate,
    greedy_sop,
    initial_ideals_with_orders,
    is_noether_normalization,
    lift_details,
)
from .reproduce import EXAMPLES, run_example
from .sop_partition import VerificationError, sparse_sop
from .sparsity import Subspace, basis_sparseness, cobasis_sparseness, pluecker_sparseness
from .stable_sets import max_disjoint_stable_pair, noether_complexity_via_graph
from .textio import ParseError, parse_graph, parse_ideal, parse_matrix


class Failed(Exception):
    """Verification failure reported with exit code 2."""


def _read(path) -> str:
    """File contents; a bare name missing from disk falls back to the bundled data."""
    try:
        return Path(path).read_text()
    except OSError as exc:
        if Path(path).name == path:
            try:
                return read_text(path)
            except OSError:
                pass
        raise ValueError(f"cannot read {path}: {exc.strerror}") from None


def _ideal(args) -> Ideal:
    if not args.ideal:
        raise ValueError("--ideal is required")
    return parse_ideal(_read(args.ideal), args.field)


def _order(args, m) -> TermOrder:
    perm = None
    if args.perm:
        try:
            perm = tuple(int(t) - 1 for t in args.perm.split(","))
        except ValueError:
            raise ValueError(f"bad --perm {args.perm!r}") from None
        if len(perm) != m:
            raise ValueError(f"--perm needs {m} entries")
    spec = args.order
    if spec == "lex":
        return TermOrder.lex(perm)
    if spec == "grevlex":
        return TermOrder.grevlex(perm)
    if spec.startswith("weight:"):
        try:
            w = tuple(int(t) for t in spec[7:].split(","))
        except ValueError:
            raise ValueError(f"bad weight in {spec!r}") from None
        if len(w) != m:
            raise ValueError(f"weight needs {m} entries")
        return TermOrder.weighted(w, perm=perm)
    raise ValueError(f"unknown order {spec!r}")


def _residues(rows, p):
    return tuple(tuple(x.numerator * pow(x.denominator, -1, p) % p for x in row) for row in rows)


def _polys(polys):
    return [str(f) for f in polys]


# ---------------------------------------------------------------------------
# Commands: each returns (document, human lines)


def cmd_codim(args):
    J = _ideal(args)
    order = _order(args, J.nvars)
    c = codim_ideal(J, order)
    M = initial_ideal(J, order)
    primes = [str(P) for P in minimal_primes(M) if len(P) == c]
    doc = {"codim": c, "initial_ideal": str(M), "order": order.describe(), "top_primes_of_initial": primes}
    return doc, [str(c)]


def cmd_sop(args):
    J = _ideal(args)
    order = _order(args, J.nvars)
    S = sparse_sop(
        list(J.generators), order, seed=args.seed, homogeneous=args.homogeneous,
        retries=args.retries, prime_index=args.prime_index,
    )
    verified = codim_ideal(Ideal(J.ring, S.forms), order)
    doc = {
        "attempts": S.attempts,
        "blocks": [_polys(b) for b in S.blocks],
        "codim": verified,
        "forms": _polys(S.forms),
        "nonzero_coefficients": S.nonzero_coefficients(),
        "prime": str(S.prime),
        "seed": args.seed,
    }
    lines = [f"codim {verified}, prime {S.prime}"]
    for i, (b, f) in enumerate(zip(S.blocks, S.forms), 1):
        lines.append(f"block {i}: {{{', '.join(_polys(b))}}}")
        lines.append(f"  f{i} = {f}")
    return doc, lines


def cmd_greedy(args):
    J = _ideal(args)
    order = _order(args, J.nvars)
    if args.forms:
        F = list(parse_ideal(_read(args.forms), J.ring.p).generators)
    else:
        F = list(J.ring.gens())
    base = J if not args.zero_ideal else Ideal(J.ring, ())
    trace = greedy_sop(F, base, seed=args.seed, homogeneous=args.homogeneous, order=order, retries=args.retries)
    steps = [
        {"codim": s.codim, "form": str(s.form), "subset": _polys(s.subset)} for s in trace.steps
    ]
    lines = [f"step {i}: {{{', '.join(st['subset'])}}} -> {st['form']} (codim {st['codim']})"
             for i, st in enumerate(steps, 1)]
    lines.append(f"total non-zeros {trace.total_nonzeros}")
    return {"seed": args.seed, "steps": steps, "total_nonzeros": trace.total_nonzeros}, lines


def _bracket_form(args):
    if args.brackets:
        return parse_brackets(_read(args.brackets))
    J = _ideal(args)
    if J.is_monomial():
        return chow_form_monomial(MonomialIdeal.from_ideal(J))
    if len(J.generators) == 1:
        return chow_form_hypersurface(J.generators[0])
    raise ValueError("Chow forms are built for monomial ideals and hypersurfaces only")


def cmd_chow(args):
    R = _bracket_form(args)
    doc = {"chow_form": str(R), "d": R.d, "m": R.m}
    lines = [str(R)]
    if args.expand:
        E = expand(R, args.limit)
        doc.update(terms=len(E), min_support=noether_complexity(E), minimal_supports=len(minimal_supports(E)))
        lines.append(f"{len(E)} terms, min support {doc['min_support']}")
    return doc, lines


def cmd_complexity(args):
    R = _bracket_form(args)
    c = noether_complexity(expand(R, args.limit))
    return {"complexity": c}, [str(c)]


def cmd_normalize(args):
    J = _ideal(args)
    p = J.ring.p
    if args.matrix:
        cand = NormalizationCandidate(_residues(parse_matrix(_read(args.matrix)), p), p)
        ok = is_noether_normalization(J, cand)
        doc = {"is_noether_normalization": ok, "nonzeros": cand.nonzeros()}
        if not ok:
            raise Failed(json.dumps(doc, sort_keys=True))
        return doc, ["Noether normalization: yes", f"non-zeros {cand.nonzeros()}"]
    if J.is_monomial():
        cand = sparsest_normalization(MonomialIdeal.from_ideal(J), seed=args.seed, p=p, retries=args.retries)
        source = "monomial"
    else:
        if args.search:
            found = initial_ideals_with_orders(J)
        else:
            order = _order(args, J.nvars)
            found = {initial_ideal(J, order): order}
        best = None
        for M, order in found.items():
            c = sparsest_normalization(M, seed=args.seed, p=p, retries=args.retries)
            if best is None or c.nonzeros() < best[0].nonzeros():
                best = (c, order)
        lifted = lift_details(J, best[1], best[0], seed=args.seed, retries=args.retries)
        cand = lifted.candidate
        source = f"lifted from in(J) under {best[1].describe()} with t = {lifted.t}"
    if not is_noether_normalization(J, cand):
        raise Failed("constructed matrix failed verification")
    doc = {"matrix": [list(r) for r in cand.matrix], "nonzeros": cand.nonzeros(), "source": source}
    return doc, [str(cand), f"non-zeros {cand.nonzeros()} ({source})"]


def cmd_sparsity(args):
    if not args.matrix:
        raise ValueError("--matrix is required")
    M = Subspace.row_space(parse_matrix(_read(args.matrix)))
    doc = {
        "basis": basis_sparseness(M),
        "cobasis": cobasis_sparseness(M),
        "dim": M.dim,
        "n": M.n,
        "pluecker": pluecker_sparseness(M),
    }
    return doc, [f"{k} {doc[k]}" for k in ("basis", "cobasis", "pluecker")]


def cmd_stableset(args):
    if not args.graph:
        raise ValueError("--graph is required")
    G = parse_graph(_read(args.graph))
    S1, S2 = max_disjoint_stable_pair(G)
    c = noether_complexity_via_graph(G)
    one = [[v + 1 for v in S1], [v + 1 for v in S2]]
    doc = {"S1": one[0], "S2": one[1], "complexity": c, "n": G.n}
    return doc, [f"S1 = {one[0]}, S2 = {one[1]}", f"complexity {c}"]


def cmd_example(args):
    checks = run_example(args.name, args.seed)
    doc = {
        "example": args.name,
        "checks": [{"label": c.label.rstrip(":= "), "observed": str(c.observed), "ok": c.ok} for c in checks],
        "ok": all(c.ok for c in checks),
    }
    lines = [f"example {args.name}"] + [c.line() for c in checks]
    if not doc["ok"]:
        raise Failed("\n".join(lines))
    return doc, lines


COMMANDS = {
    "codim": cmd_codim,
    "sop": cmd_sop,
    "greedy": cmd_greedy,
    "chow": cmd_chow,
    "complexity": cmd_complexity,
    "normalize": cmd_normalize,
    "sparsity": cmd_sparsity,
    "stableset": cmd_stableset,
    "example": cmd_example,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--field", type=int, help="override the modulus declared in the ideal file")
    common.add_argument("--order", default="grevlex", help="lex, grevlex or weight:w1,...,wm")
    common.add_argument("--perm", help="variable priority, 1-based, e.g. 3,1,2")
    common.add_argument("--json", action="store_true", help="print one JSON document")
    common.add_argument("--retries", type=int, default=DEFAULTS.retries)

    parser = argparse.ArgumentParser(prog="sparsesop", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("codim", "sop", "greedy", "chow", "complexity", "normalize"):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("--ideal")
        if name == "sop":
            sp.add_argument("--homogeneous", action="store_true")
            sp.add_argument("--prime-index", type=int, default=0)
        if name == "greedy":
            sp.add_argument("--forms", help="ideal file whose generators form F (default: the variables)")
            sp.add_argument("--zero-ideal", action="store_true", help="work modulo (0) instead of the ideal")
            sp.add_argument("--homogeneous", action="store_true")
        if name in ("chow", "complexity"):
            sp.add_argument("--brackets", help="bracket polynomial file instead of an ideal")
            sp.add_argument("--limit", type=int, default=DEFAULTS.expand_limit)
        if name == "chow":
            sp.add_argument("--expand", action="store_true")
        if name == "normalize":
            sp.add_argument("--matrix", help="candidate matrix to test instead of constructing one")
            sp.add_argument("--search", action="store_true", help="try every permuted lex/grevlex initial ideal")
    sub.add_parser("sparsity", parents=[common]).add_argument("--matrix")
    sub.add_parser("stableset", parents=[common]).add_argument("--graph")
    ex = sub.add_parser("example", parents=[common])
    ex.add_argument("name", choices=list(EXAMPLES))
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc, lines = COMMANDS[args.command](args)
    except Failed as exc:
        print(exc, file=sys.stderr)
        return 2
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 2
    except (ParseError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps({"command": args.command, **doc}, sort_keys=True, indent=2))
    else:
        print("\n".join(lines))
    return 0


if __name__ == "__main__":
    sys.exit(main())
