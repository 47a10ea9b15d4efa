"""Command-line front end.

    foresthit analyze|metrics|resistance|oracle-check INPUT [--format table|json|structured]
              [--tau p/q] [--show-q] [--max-n N] [--ref-vertex k]

Exit codes: 0 success, 1 usage or parse error, 2 mathematical precondition
(reducible chain, disconnected graph), 3 internal invariant failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .chain import load_chain, load_graph
from .errors import ChainValidationError, ForestHitError
from .forests import forest_recurrence
from .hitting import analyze_chain, resistance_via_forests, resistance_via_group_inverse, verify_scaling_laws
from .metrics import Verdict, analyze_metrics
from .numerics import RationalMatrix, format_rational, parse_rational
from .oracle import DEFAULT_MAX_N, oracle_sigma_Q

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION, EXIT_INTERNAL = 0, 1, 2, 3
COMMANDS = ("analyze", "metrics", "resistance", "oracle-check")


@dataclass
class RunConfig:
    command: str
    input_path: str
    output_format: str = "table"
    tau: str | None = None
    max_n: int | None = None
    ref_vertex: int = 1
    show_q: bool = False


def _r(x):
    return None if x is None else format_rational(x)


def _vec(v):
    return None if v is None else [format_rational(x) for x in v]


def _mat(m: RationalMatrix | None):
    return None if m is None else m.to_strings()


def _verdict(v: Verdict | None):
    if v is None:
        return None
    return {
        "holds": v.holds,
        "axiom": v.axiom,
        "witness": list(v.witness) if v.witness else None,
        "detail": v.detail,
    }


def _read_document(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise ChainValidationError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise ChainValidationError(f"{path} is not valid JSON: {exc}") from None


def _analysis_blocks(chain, show_q: bool) -> dict:
    res = analyze_chain(chain)
    out = {
        "n": chain.n,
        "irreducible": chain.irreducible,
        "aperiodic": chain.aperiodic,
        "sigma": _vec(res.sequence.sigma),
        "q": _vec(res.q),
        "total_q": _r(res.total_q),
        "pi": _vec(res.pi),
        "f": _mat(res.f) if chain.n > 1 else None,
        "M_classic": _mat(res.M_classic),
        "M": _mat(res.M_zero),
        "kemeny": _r(res.kemeny),
        "commute": _mat(res.commute),
        "group_inverse": _mat(res.group_inverse),
        "warnings": list(res.warnings),
    }
    if show_q:
        out["Q"] = [_mat(Q) for Q in res.sequence.Q]
    return out, res


def cmd_analyze(config: RunConfig) -> dict:
    chain = load_chain(_read_document(config.input_path), tau=config.tau)
    out, _ = _analysis_blocks(chain, config.show_q)
    return out


def cmd_metrics(config: RunConfig) -> dict:
    chain = load_chain(_read_document(config.input_path), tau=config.tau)
    out, res = _analysis_blocks(chain, config.show_q)
    rep = analyze_metrics(res.M_zero, chain.digraph, config.ref_vertex)
    cut = rep.cutpoint
    out["metrics"] = {
        "quasi_metric": _verdict(rep.quasi_metric),
        "commute_metric": _verdict(rep.commute_metric),
        "cutpoint": {
            "consistent": cut.consistent,
            "equalities": [list(e.triple) for e in cut.entries if e.equality],
            "separators": [list(e.triple) for e in cut.entries if e.separator],
        },
        "cyclic_tour": _verdict(rep.cyclic_tour),
        "weightable": rep.weightable,
        "u": _vec(rep.weight_u),
        "P": _mat(rep.partial_P),
        "triangle_identity": _verdict(rep.triangle_identity),
        "strong_shift": _r(rep.strong_shift),
        "u_strong": _vec(rep.u_strong),
        "strong_equivalence": _verdict(rep.strong_equivalence),
        "C_prime": _mat(rep.extended_Cprime),
        "extended_metric": _verdict(rep.extended_metric),
    }
    if not rep.weightable:
        out["metrics"]["verdict"] = "not weightable"
    return out


def cmd_resistance(config: RunConfig) -> dict:
    doc = _read_document(config.input_path)
    if "edges" not in doc:
        raise ChainValidationError("resistance needs an undirected graph ('edges')")
    G = load_graph(doc)
    tau = config.tau
    construction = doc.get("construction")
    if tau is None and isinstance(construction, dict):
        tau = construction.get("laplacian-tau")
    forest = resistance_via_forests(G)
    direct = resistance_via_group_inverse(G)
    scaling = verify_scaling_laws(G, tau)
    return {
        "n": G.n,
        "omega": _mat(forest.omega),
        "omega_group_inverse": _mat(direct),
        "routes_equal": forest.omega == direct,
        "q_prime": _r(forest.q_prime),
        "f_prime": _mat(forest.f_prime),
        "scaling": {
            "tau": _r(scaling.tau),
            **{
                c.name: {
                    "factor": _r(c.factor),
                    "holds": c.holds,
                    "witness": list(c.witness) if c.witness else None,
                }
                for c in scaling.checks
            },
        },
    }


def cmd_oracle_check(config: RunConfig) -> dict:
    chain = load_chain(_read_document(config.input_path), tau=config.tau)
    max_n = DEFAULT_MAX_N if config.max_n is None else config.max_n
    sigma_o, Q_o = oracle_sigma_Q(chain.digraph, max_n=max_n)
    seq = forest_recurrence(chain.L)
    diffs = []
    for k in range(chain.n):
        if sigma_o[k] != seq.sigma[k]:
            diffs.append({"k": k, "what": "sigma", "oracle": _r(sigma_o[k]), "recurrence": _r(seq.sigma[k])})
        for i in range(chain.n):
            for j in range(chain.n):
                if Q_o[k][i, j] != seq.Q[k][i, j]:
                    diffs.append({
                        "k": k, "what": "Q", "i": i + 1, "j": j + 1,
                        "oracle": _r(Q_o[k][i, j]), "recurrence": _r(seq.Q[k][i, j]),
                    })
    return {
        "n": chain.n,
        "sigma": _vec(seq.sigma),
        "oracle_sigma": _vec(sigma_o),
        "diffs": diffs,
        "agree": not diffs,
    }


HANDLERS = {
    "analyze": cmd_analyze,
    "metrics": cmd_metrics,
    "resistance": cmd_resistance,
    "oracle-check": cmd_oracle_check,
}


def render_table(report: dict, indent: int = 0) -> str:
    """Plain-text rendering of a structured report; same strings as the JSON."""
    pad = " " * indent
    lines = []
    for key, value in report.items():
        if value is None:
            lines.append(f"{pad}{key}: -")
        elif isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.append(render_table(value, indent + 2))
        elif _is_matrix(value):
            lines.append(f"{pad}{key}:")
            lines.extend(_matrix_lines(value, pad + "  "))
        elif isinstance(value, list) and value and all(_is_matrix(x) for x in value):
            for k, layer in enumerate(value):
                lines.append(f"{pad}{key}[{k}]:")
                lines.extend(_matrix_lines(layer, pad + "  "))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{key}:")
            for item in value:
                lines.append(pad + "  " + ", ".join(f"{k}={v}" for k, v in item.items()))
        elif isinstance(value, list):
            lines.append(f"{pad}{key}: " + " ".join(_scalar(v) for v in value))
        else:
            lines.append(f"{pad}{key}: {_scalar(value)}")
    return "\n".join(lines)


def _is_matrix(value):
    return (
        isinstance(value, list)
        and bool(value)
        and all(isinstance(r, list) and r and all(isinstance(x, str) for x in r) for r in value)
    )


def _scalar(v):
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, list):
        return "(" + ",".join(str(x) for x in v) + ")"
    return str(v)


def _matrix_lines(rows, pad):
    width = max((len(x) for r in rows for x in r), default=1)
    return [pad + " ".join(x.rjust(width) for x in r) for r in rows]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="foresthit", description="Exact forest-based hitting-time analysis.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("input", help="JSON chain or graph document")
    p.add_argument(
        "--format", choices=("table", "json", "structured"), default="table",
        help="'structured' is an alias for 'json'",
    )
    p.add_argument("--tau", help="step size for the laplacian-tau construction (p/q)")
    p.add_argument("--show-q", action="store_true", help="include every forest layer Q_k")
    p.add_argument("--max-n", type=int, help=f"enumeration size guard (default {DEFAULT_MAX_N})")
    p.add_argument("--ref-vertex", type=int, default=1, help="reference vertex for the weight function")
    return p


def run(config: RunConfig) -> dict:
    if config.tau is not None:
        config.tau = parse_rational(config.tau)
    return HANDLERS[config.command](config)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    config = RunConfig(
        command=args.command,
        input_path=args.input,
        output_format=args.format,
        tau=args.tau,
        max_n=args.max_n,
        ref_vertex=args.ref_vertex,
        show_q=args.show_q,
    )
    try:
        report = run(config)
    except ForestHitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except (AssertionError, ArithmeticError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    if config.output_format in ("json", "structured"):
        print(json.dumps(report, indent=2))
    else:
        print(render_table(report))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
