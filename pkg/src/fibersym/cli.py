"""``fibersym`` command line: mcg, cohomology, crossings, graphlink.

Every subcommand prints a human-readable report, or with ``--json`` a
deterministic JSON document ``{command, format_version, inputs, payload}``.
Rationals are written as "p/q" strings, ε-numbers as ``{"coeffs": [...]}``.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from . import fibration, graphlink, surfaces, wang
from .errors import FibersymError
from .exactla import EpsNumber, MatrixQ, image_basis, jordan_census, kernel_basis

FORMAT_VERSION = "1.0.0"


@dataclass
class CommandResult:
    command: str
    inputs: dict
    payload: dict
    format_version: str = FORMAT_VERSION
    text: str = field(default="", compare=False, repr=False)

    def to_json(self) -> str:
        doc = {k: v for k, v in asdict(self).items() if k != "text"}
        return json.dumps(doc, sort_keys=True, indent=2)

    @classmethod
    def from_json(cls, text: str) -> CommandResult:
        doc = json.loads(text)
        return cls(doc["command"], doc["inputs"], doc["payload"], doc["format_version"])


def encode(x: Any) -> Any:
    """Map exact objects onto JSON-native values."""
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, EpsNumber):
        return {"coeffs": [str(c) for c in x.coeffs]}
    if isinstance(x, MatrixQ):
        return [[str(a) for a in row] for row in x.entries]
    if isinstance(x, dict):
        return {str(k): encode(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [encode(v) for v in x]
    raise TypeError(f"cannot encode {type(x).__name__}")


def decode_eps(doc: dict) -> EpsNumber:
    return EpsNumber(Fraction(c) for c in doc["coeffs"])


def _indent(block: str, pad: str = "  ") -> str:
    return "\n".join(pad + line for line in block.splitlines())


def _vec(v) -> str:
    return "(" + ", ".join(str(a) for a in v) + ")"


def run_mcg(surface: str, word: str) -> CommandResult:
    s = surfaces.get_surface(surface)
    w = surfaces.parse_word(word, s)
    action = surfaces.evaluate_word(w)
    fstar = action.on_h1_dual
    N = fstar - MatrixQ.identity(s.h1_rank)
    census = jordan_census(N, 0)
    ker, im = kernel_basis(N), image_basis(N)
    torelli = action.on_h1.is_identity()
    payload = {
        "basis": list(s.basis_labels),
        "letters": len(w),
        "expanded_word": str(surfaces.free_reduce(surfaces.expand_relations(w))),
        "on_h1": encode(action.on_h1),
        "on_h1_dual": encode(fstar),
        "fstar_minus_identity": encode(N),
        "census": {
            "eigenvalue": "1",
            "filtration_dims": list(census.filtration_dims),
            "blocks_of_size": {str(k): v for k, v in sorted(census.blocks_of_size.items())},
            "nu2": census.nu2,
        },
        "kernel": encode(ker.basis),
        "image": encode(im.basis),
        "torelli": torelli,
    }
    text = "\n".join(
        [
            f"surface: {s.name}  basis: {', '.join(s.basis_labels)}",
            f"word: {w or '(identity)'}",
            "f* on H^1:",
            _indent(str(fstar)),
            "f* - 1:",
            _indent(str(N)),
            "Jordan blocks of f* at 1: "
            + (", ".join(f"size {k}: {v}" for k, v in sorted(census.blocks_of_size.items())) or "none"),
            f"nu2 = {census.nu2}",
            f"ker(f* - 1), dim {ker.dim}: " + ", ".join(map(_vec, ker.basis)),
            f"Im(f* - 1), dim {im.dim}: " + ", ".join(map(_vec, im.basis)),
            f"Torelli: {str(torelli).lower()}",
        ]
    )
    return CommandResult("mcg", {"surface": surface, "word": word}, payload, text=text)


def run_cohomology(surface: str, word: str, eta: Sequence[Fraction] | None) -> CommandResult:
    s = surfaces.get_surface(surface)
    w = surfaces.parse_word(word, s)
    m = wang.FiberedFourManifold(s, surfaces.evaluate_word(w).on_h1_dual)
    report = wang.primitive_betti(m, eta)
    payload = {
        "b": list(report.b),
        "bY": list(report.bY),
        "p_plus": list(report.p_plus),
        "p_minus": list(report.p_minus),
        "nu2": report.nu2,
        "chi_p": report.chi_p,
        "jordan_sizes": list(m.census.chain_sizes()),
        "torelli": wang.torelli_product_check(m),
    }
    text = "\n".join(
        [
            f"surface: {s.name}  word: {w or '(identity)'}",
            "eta: " + ("none, [w] = [dt ^ dpi]" if eta is None else _vec(eta)),
            f"Jordan chain sizes at 1: {_vec(payload['jordan_sizes'])}",
            f"b(Y_f) = {_vec(report.bY)}",
            f"b(X)   = {_vec(report.b)}",
            f"p+     = {_vec(report.p_plus)}",
            f"p-     = {_vec(report.p_minus)}",
            f"nu2 = {report.nu2}  chi_p = {report.chi_p}",
        ]
    )
    inputs = {"surface": surface, "word": word, "eta": None if eta is None else encode(list(eta))}
    return CommandResult("cohomology", inputs, payload, text=text)


def _event_doc(e: fibration.CrossingEvent) -> dict:
    return {
        "pair": list(e.pair),
        "times": encode(list(e.times)),
        "event_time": encode(e.event_time),
        "over": e.over,
        "point": encode(list(e.point)),
        "flags": sorted(e.flags),
    }


def run_crossings(v1: Sequence[int]) -> CommandResult:
    frame = fibration.FibrationFrame(tuple(v1))
    paths = fibration.puncture_paths(frame)
    disjoint = fibration.verify_disjoint_strands(paths)
    locations = fibration.relative_locations(paths)
    events = fibration.crossing_table(paths)
    rows = fibration.table_rows(events)
    flagged = [e for e in events if e.flags]
    payload = {
        "A": frame.A,
        "paths": [
            {"label": p.label, "start": encode(list(p.start)), "velocity": list(p.velocity)} for p in paths
        ],
        "disjoint": disjoint,
        "relative_locations": [
            {"mover": r.mover, "anchor": r.anchor, "relation": r.relation.value, "time": encode(r.time)}
            for r in locations
        ],
        "table": [_event_doc(e) for e in rows],
        "flagged": [_event_doc(e) for e in flagged],
    }
    lines = [f"v1 = {_vec(frame.v1)}  A = {frame.A}", "paths:"]
    for p in paths:
        lines.append(f"  y{p.label}(t) = ({p.start[0]}, {p.start[1]}) + {_vec(p.velocity)} t")
    lines.append(f"strands disjoint: {str(disjoint).lower()}")
    lines.append("relative locations:")
    for r in locations:
        where = "through" if r.relation is fibration.Relation.THROUGH_START else r.relation.value
        lines.append(f"  y{r.mover} passes {where} y{r.anchor} start at t = {r.time}")
    lines.append("crossings:")
    lines.append(f"  {'points':<10}{'time':<10}crossing")
    for e in rows:
        lines.append(f"  {f'(y{e.pair[0]},y{e.pair[1]})':<10}{str(e.event_time):<10}y{e.over} over y{e.under}")
    if flagged:
        lines.append("flagged:")
        for e in flagged:
            lines.append(
                f"  (y{e.pair[0]},y{e.pair[1]}) times ({e.times[0]}, {e.times[1]}): {', '.join(sorted(e.flags))}"
            )
    return CommandResult("crossings", {"v1": list(frame.v1)}, payload, text="\n".join(lines))


def run_graphlink(n: int, m1: int, m2: int) -> CommandResult:
    spec = graphlink.GraphLinkSpec(n, m1, m2)
    g = graphlink.gcd_data(spec)
    prod = graphlink.delta_prime(spec)
    expansion = prod.expansion()
    plus, minus, case = graphlink.p2_offsets(spec)
    payload = {
        "valid": True,
        "d": spec.d,
        "dE": list(g.dE),
        "dV": list(g.dV),
        "factors": {str(e): m for e, m in prod.factors.items()},
        "expansion": list(expansion),
        "polynomial": graphlink.format_poly(expansion),
        "degree": prod.degree,
        "cyclotomic": {str(j): m for j, m in prod.cyclotomic_multiplicities().items()},
        "p2_plus_minus_b2": plus,
        "p2_minus_minus_b2": minus,
        "theorem_case": case,
    }
    factor_text = " ".join(f"(t^{e}-1)^{m}" for e, m in prod.factors.items()) or "1"
    text = "\n".join(
        [
            f"K^({2 * n}) with (m1, m2) = ({m1}, {m2}): valid fibration, d = {spec.d}",
            f"dE = {_vec(g.dE)}",
            f"dV = {_vec(g.dV)}",
            f"Delta'(t) = {factor_text} = {payload['polynomial']}",
            f"deg Delta' = {prod.degree}, cyclotomic factors: "
            + (", ".join(f"Phi_{j}^{m}" for j, m in payload["cyclotomic"].items()) or "none"),
            f"p2+ = b2 + {plus}, p2- = b2 + {minus}",
            f"case k: {case if case is not None else 'n/a'}",
        ]
    )
    return CommandResult("graphlink", {"n": n, "m1": m1, "m2": m2}, payload, text=text)


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _rational_list(text: str) -> list[Fraction]:
    try:
        return [Fraction(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated rationals, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fibersym", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)

    p = sub.add_parser("mcg", parents=[common], help="homology action of a monodromy word")
    p.add_argument("--surface", choices=sorted(surfaces.SURFACES), required=True)
    p.add_argument("--word", required=True)

    p = sub.add_parser("cohomology", parents=[common], help="Betti and primitive Betti numbers")
    p.add_argument("--surface", choices=sorted(surfaces.SURFACES), required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--eta", type=_rational_list, default=None, help="λ coefficients in census order")

    p = sub.add_parser("crossings", parents=[common], help="puncture paths and crossing table")
    p.add_argument("--v1", type=_int_list, required=True, help="a1,a2,a3")

    p = sub.add_parser("graphlink", parents=[common], help="graph-link fibration data")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m1", type=int, required=True)
    p.add_argument("--m2", type=int, required=True)
    return parser


def _join_negative_values(argv: list[str]) -> list[str]:
    # argparse reads "-1,1,1" as an option flag; glue list values to their option
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in ("--v1", "--eta"):
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    args = parser.parse_args(_join_negative_values(argv))
    try:
        if args.command == "mcg":
            result = run_mcg(args.surface, args.word)
        elif args.command == "cohomology":
            result = run_cohomology(args.surface, args.word, args.eta)
        elif args.command == "crossings":
            if len(args.v1) != 3:
                raise FibersymError("--v1 needs exactly three integers")
            result = run_crossings(args.v1)
        else:
            result = run_graphlink(args.n, args.m1, args.m2)
    except (FibersymError, ValueError, IndexError) as exc:
        print(f"fibersym: error: {exc}", file=sys.stderr)
        return 1
    print(result.to_json() if args.json else result.text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
