"""Command line interface: ``formlab <command> ...``.

Exit codes: 0 success (or a clean suite), 1 error, 2 violations found,
3 definition and characterization disagree under ``member --via both``.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .centralizers import cS, cp, small_centralizer
from .errors import DomainError, FormlabError
from .formations.dsl import parse_formation
from .formations.expr import contains, residual
from .permcore.groups import is_prime, read_group
from .report import dumps, subgroup_generators
from .satellites.membership import membership, membership_characterized
from .satellites.spec import read_satellite
from .structure import (
    chief_series,
    com,
    cyclic_type,
    frattini,
    nonabelian_type,
    normal_subgroups,
    p_layer,
    pi_core,
    socle,
)

EXIT_OK, EXIT_ERROR, EXIT_VIOLATIONS, EXIT_DISAGREE = 0, 1, 2, 3


def load_group(ref):
    """A group file path, or ``builtin:<name>`` for a member of the builtin corpus."""
    if ref.startswith("builtin:"):
        from .harness.corpus import builtin_corpus

        name = ref.split(":", 1)[1]
        try:
            return builtin_corpus().get(name)
        except KeyError:
            raise DomainError(f"no builtin group named {name!r}") from None
    path = Path(ref)
    if not path.is_file():
        raise DomainError(f"group file {ref!r} not found")
    return read_group(path)


def simple_type_arg(text):
    """A simple type from an order (prime or catalogued) or a label such as C5 or A5."""
    text = text.strip()
    if text.isdigit():
        n = int(text)
        return cyclic_type(n) if is_prime(n) else nonabelian_type(n)
    if text.startswith("C") and text[1:].isdigit() and is_prime(int(text[1:])):
        return cyclic_type(int(text[1:]))
    return nonabelian_type(text)


def _sub(G, H):
    return {"order": H.order(), "generators": subgroup_generators(G, H.mask)}


def analyze(G):
    primes = G.prime_divisors()
    data = {
        "order": G.order(),
        "primes": primes,
        "normal_subgroups": len(normal_subgroups(G)),
        "chief_series": [
            {"type": str(f.simple_type), "copies": f.copies, "order": f.order}
            for f in chief_series(G)
        ],
        "frattini": _sub(G, frattini(G)),
        "socle": _sub(G, socle(G)) if G.order() > 1 else None,
        "cores": {
            str(p): {"O_p": _sub(G, pi_core(G, [p])), "O_p'p": _sub(G, p_layer(G, p))}
            for p in primes
        },
        "com": [str(s) for s in sorted(com(G))],
    }
    return data


def _analyze_text(data):
    lines = [
        f"order {data['order']}",
        f"primes {','.join(map(str, data['primes'])) or '-'}",
        f"normal subgroups {data['normal_subgroups']}",
        "chief series " + (" ".join(
            f"{c['type']}^{c['copies']}" for c in data["chief_series"]) or "-"),
        f"Phi order {data['frattini']['order']}",
        f"Soc order {data['socle']['order'] if data['socle'] else '-'}",
    ]
    for p, cores in data["cores"].items():
        layer = cores["O_p'p"]["order"]
        lines.append(f"O_{p} order {cores['O_p']['order']}; O_{p}',{p} order {layer}")
    lines.append(f"Com {' '.join(data['com']) or '-'}")
    return "\n".join(lines) + "\n"


def cmd_analyze(args):
    data = analyze(load_group(args.group))
    sys.stdout.write(dumps(data) if args.json else _analyze_text(data))
    return EXIT_OK


def cmd_op(args):
    G = load_group(args.group)
    what, _, arg = args.compute.partition(":")
    if what == "cp":
        H = cp(G, int(arg))
    elif what == "cs":
        H = cS(G, simple_type_arg(arg))
    elif what == "small-centralizer":
        series = chief_series(G)
        i = int(arg)
        if not 0 <= i < len(series):
            raise DomainError(f"chief factor index {i} out of range 0..{len(series) - 1}")
        H = small_centralizer(G, series[i])
    else:
        raise DomainError(f"unknown computation {args.compute!r} (cp:<p>, cs:<order|label>, small-centralizer:<i>)")
    _print_sub(G, H)
    return EXIT_OK


def _print_sub(G, H):
    print(f"order {H.order()}")
    for g in subgroup_generators(G, H.mask):
        print(g)


def cmd_residual(args):
    G = load_group(args.group)
    F = parse_formation(args.formation, base=Path.cwd())
    _print_sub(G, residual(G, F))
    return EXIT_OK


def cmd_fcheck(args):
    G = load_group(args.group)
    F = parse_formation(args.formation, base=Path.cwd())
    inside = contains(F, G)
    print(f"{F.text()}: {'member' if inside else 'not a member'}")
    return EXIT_OK


def cmd_member(args):
    G = load_group(args.group)
    spec = read_satellite(args.satellite)
    if args.via == "definition":
        print(f"definition: {membership(G, spec)}")
        return EXIT_OK
    if args.via == "characterization":
        print(f"characterization: {membership_characterized(G, spec)}")
        return EXIT_OK
    d, c = membership(G, spec), membership_characterized(G, spec)
    print(f"definition: {d}")
    print(f"characterization: {c}")
    if d != c:
        print("disagreement", file=sys.stderr)
        return EXIT_DISAGREE
    return EXIT_OK


def cmd_verify(args):
    from .harness.corpus import resolve_corpus
    from .harness.runner import emit_report, verify_suite

    corpus = resolve_corpus(args.corpus)
    report = verify_suite(args.suite, corpus, jobs=args.jobs)
    if args.report:
        emit_report(report, "json", args.report)
    sys.stdout.write(emit_report(report, args.format))
    return EXIT_OK if report.clean else EXIT_VIOLATIONS


def cmd_corpus_gen(args):
    from .harness.corpus import builtin_corpus, write_corpus

    corpus = builtin_corpus(args.max_order, args.max_degree)
    write_corpus(corpus, args.out)
    print(f"wrote {len(corpus)} groups to {args.out}")
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="formlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="normal structure of a group")
    p.add_argument("group")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("op", help="centralizer computations")
    p.add_argument("group")
    p.add_argument("--compute", required=True,
                   help="cp:<p> | cs:<order|label> | small-centralizer:<i>")
    p.set_defaults(func=cmd_op)

    for name, func, text in (("residual", cmd_residual, "F-residual of a group"),
                             ("fcheck", cmd_fcheck, "membership in a formation")):
        p = sub.add_parser(name, help=text)
        p.add_argument("group")
        p.add_argument("--formation", required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("member", help="membership in a satellite class")
    p.add_argument("group")
    p.add_argument("--satellite", required=True)
    p.add_argument("--via", choices=("definition", "characterization", "both"), default="both")
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", required=True, help="suite id or all")
    p.add_argument("--corpus", default="builtin", help="builtin, builtin:<max order> or a directory")
    p.add_argument("--report", help="write the JSON report here")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("corpus", help="corpus management")
    csub = p.add_subparsers(dest="corpus_command", required=True)
    g = csub.add_parser("gen", help="write the builtin corpus to a directory")
    g.add_argument("--max-order", type=int, default=360)
    g.add_argument("--max-degree", type=int, default=24)
    g.add_argument("--out", required=True)
    g.set_defaults(func=cmd_corpus_gen)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FormlabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
