"""Command-line front end.

Every invocation writes exactly one JSON document to standard output and
nothing else there; human diagnostics go to standard error.  Exit codes:
0 success, 1 usage error, 2 domain error.  All integers that can exceed a
machine word are rendered as decimal strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .characters import CharExp, char, char_order, ell_regular_part, enumerate_orbits, orbit_of
from .errors import DomainError, NotPrimePower, ZsigmondyException
from .green import green_trace
from .jsonio import (
    certificate_to_json,
    char_to_json,
    cyclotomic_to_json,
    lift_to_json,
    orbit_to_json,
)
from .linking import build_link_chain, linked_partition
from .numth import is_prime_power
from .regularize import regularize, zsigmondy_prime
from .selftest import run_selftest
from .tame import (
    apply_transfer,
    orbit_to_pair,
    pair_to_orbit,
    rectifier,
    tame_pair,
    transfer_pair,
    transfer_via_descent,
)
from .tower import TowerParams, derive_tower, field_level, level


@dataclass(frozen=True)
class CommandResult:
    status: str
    payload: dict | None = None
    error_kind: str | None = None
    message: str | None = None
    exit_code: int = 0

    def document(self) -> dict:
        if self.status == "ok":
            return {"status": "ok", "payload": self.payload}
        return {"status": "error", "error_kind": self.error_kind, "message": self.message}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # noqa: A003 - argparse API
        raise _UsageError(f"{message}\n{self.format_usage()}")


_SHAPE_KEYS = ("p", "q", "eEF", "fEF", "m", "d")


def _add_shape_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--shape", help="comma-separated p,q,eEF,fEF,m,d")
    sub.add_argument("--config", help="key=value file with the shape parameters")
    for key in _SHAPE_KEYS:
        sub.add_argument(f"--{key}", dest=f"shape_{key}", type=int)


def _read_config(path: str) -> dict[str, int]:
    vals: dict[str, int] = {}
    try:
        with open(path, encoding="utf-8") as fh:
            for raw in fh:
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise _UsageError(f"config line is not key=value: {line!r}")
                key, _, value = line.partition("=")
                key = key.strip()
                if key not in _SHAPE_KEYS:
                    raise _UsageError(f"unknown config key {key!r}, expected one of {_SHAPE_KEYS}")
                vals[key] = int(value.strip())
    except OSError as exc:
        raise _UsageError(f"cannot read config file: {exc}") from exc
    except ValueError as exc:
        raise _UsageError(f"bad integer in config file: {exc}") from exc
    return vals


def _resolve_shape(args: argparse.Namespace) -> TowerParams:
    vals: dict[str, int] = {}
    if args.config:
        vals.update(_read_config(args.config))
    if args.shape:
        parts = args.shape.split(",")
        if len(parts) != 6:
            raise _UsageError("--shape expects six comma-separated integers p,q,eEF,fEF,m,d")
        try:
            vals.update(dict(zip(_SHAPE_KEYS, (int(x) for x in parts))))
        except ValueError as exc:
            raise _UsageError(f"bad integer in --shape: {exc}") from exc
    for key in _SHAPE_KEYS:
        flag = getattr(args, f"shape_{key}")
        if flag is not None:
            vals[key] = flag
    missing = [k for k in _SHAPE_KEYS if k not in vals]
    if missing:
        raise _UsageError(f"missing shape parameters: {', '.join(missing)}")
    return derive_tower(vals["p"], vals["q"], vals["eEF"], vals["fEF"], vals["m"], vals["d"])


def _shape_payload(params: TowerParams) -> dict:
    return {
        "p": params.p,
        "q": params.q,
        "eEF": params.e_ef,
        "fEF": params.f_ef,
        "m": params.m,
        "d": params.d,
        "g": params.g,
        "n": params.n,
        "Q": str(params.Q),
        "dprime": params.d_prime,
        "mprime": params.m_prime,
        "nprime": params.n_prime,
    }


def _cmd_tower(args) -> dict:
    return _shape_payload(_resolve_shape(args))


def _level_char(args) -> CharExp:
    lvl = field_level(args.Q, args.nprime)
    return char(lvl, args.a)


def _cmd_orbit(args) -> dict:
    alpha = _level_char(args)
    doc = orbit_to_json(orbit_of(alpha))
    doc.update({"Q": str(alpha.level.Q), "level_deg": alpha.level.deg, "M": str(alpha.level.M)})
    return doc


def _cmd_order(args) -> dict:
    alpha = _level_char(args)
    return {"a": str(alpha.a), "M": str(alpha.level.M), "order": str(char_order(alpha))}


def _cmd_regular_part(args) -> dict:
    alpha = _level_char(args)
    reg = ell_regular_part(alpha, args.ell)
    return {
        "alpha": char_to_json(alpha),
        "ell": str(args.ell),
        "regular_part": char_to_json(reg),
        "order": str(char_order(reg)),
    }


def _cmd_chain(args) -> dict:
    if args.M is not None:
        # Frobenius multiplication by M+1 is trivial mod M, so a bare modulus
        # is modeled as the degree-one level over a base of that cardinality.
        lvl = field_level(args.M + 1, 1)
    elif args.Q is not None and args.nprime is not None:
        lvl = field_level(args.Q, args.nprime)
    else:
        raise _UsageError("chain needs either --M or both --Q and --nprime")
    chain = build_link_chain(char(lvl, args.src), char(lvl, args.dst))
    return {
        "M": str(lvl.M),
        "from": str(chain.source.a),
        "to": str(chain.target.a),
        "primes": [str(p) for p in chain.primes],
        "steps": [
            {"ell": str(s.ell), "before": orbit_to_json(s.before), "after": orbit_to_json(s.after)}
            for s in chain.steps
        ],
    }


def _cmd_partition(args) -> dict:
    lvl = field_level(args.Q, args.nprime)
    blocks = linked_partition(lvl)
    return {
        "Q": str(args.Q),
        "nprime": args.nprime,
        "M": str(lvl.M),
        "blocks": [[str(rep) for rep in block] for block in blocks],
        "block_count": len(blocks),
    }


def _cmd_zsigmondy(args) -> dict:
    hit = zsigmondy_prime(args.b, args.r)
    if hit is None:
        raise ZsigmondyException(f"no primitive prime divisor for b={args.b}, r={args.r}")
    ell, cert = hit
    return {"b": str(args.b), "r": args.r, "ell": str(ell), "certificate": certificate_to_json(cert)}


def _cmd_regularize(args) -> dict:
    params = _resolve_shape(args)
    alpha = char(level(params, params.n_prime), args.alpha)
    lift = regularize(alpha, params, a_override=args.a_override)
    doc = lift_to_json(lift)
    doc["alpha"] = char_to_json(alpha)
    doc["f"] = orbit_of(alpha).size
    return doc


def _cmd_rectifier(args) -> dict:
    spec = rectifier(_resolve_shape(args))
    return {
        "y": spec.y,
        "w": spec.w,
        "v": spec.v,
        "u": spec.u,
        "mu_exp": str(spec.mu.a),
        "nontrivial": spec.nontrivial,
        "nprime": spec.params.n_prime,
        "M": str(spec.mu.level.M),
    }


def _cmd_transfer(args) -> dict:
    params = _resolve_shape(args)
    spec = rectifier(params)
    source = orbit_of(char(level(params, params.n_prime), args.alpha))
    return {
        "mu_exp": str(spec.mu.a),
        "from": orbit_to_json(source),
        "to": orbit_to_json(apply_transfer(source, spec)),
    }


def _cmd_transfer_descent(args) -> dict:
    params = _resolve_shape(args)
    alpha = char(level(params, params.n_prime), args.alpha)
    result = transfer_via_descent(alpha, params)
    lift = regularize(alpha, params)
    return {
        "from": orbit_to_json(orbit_of(alpha)),
        "to": orbit_to_json(result),
        "lift": lift_to_json(lift),
        "agrees_with_rectifier": True,
    }


def _cmd_pair(args) -> dict:
    params = _resolve_shape(args)
    pair = tame_pair(params, args.f, args.beta)
    orbit = pair_to_orbit(pair, params)
    back = orbit_to_pair(orbit, params)
    return {
        "f": pair.f,
        "beta": str(pair.beta.a),
        "M_l": str(pair.beta.level.M),
        "orbit": orbit_to_json(orbit),
        "round_trip_ok": back == pair,
    }


def _cmd_pair_transfer(args) -> dict:
    params = _resolve_shape(args)
    pair = tame_pair(params, args.f, args.beta)
    moved = transfer_pair(pair, params)
    return {
        "from": {"f": pair.f, "beta": str(pair.beta.a)},
        "to": {"f": moved.pair.f, "beta": str(moved.pair.beta.a)},
        "mu_L": str(moved.mu_l.a),
        "mu_L_order": str(char_order(moved.mu_l)),
    }


def _cmd_green(args) -> dict:
    if is_prime_power(args.d) is None:
        raise NotPrimePower(f"base cardinality d={args.d} is not a prime power")
    lvl = field_level(args.d, args.u)
    trace = green_trace(char(lvl, args.alpha0), args.g, args.u)
    return cyclotomic_to_json(trace)


def _cmd_table(args) -> dict:
    params = _resolve_shape(args)
    spec = rectifier(params)
    lvl = level(params, params.n_prime)
    pairs = [
        {"from": orbit_to_json(o), "to": orbit_to_json(apply_transfer(o, spec))}
        for o in enumerate_orbits(lvl)
    ]
    return {"shape": _shape_payload(params), "mu_exp": str(spec.mu.a), "pairs": pairs}


def _cmd_selftest(args) -> dict:
    return run_selftest(args.scale)


def build_parser() -> _Parser:
    parser = _Parser(prog="tametransfer", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tower", help="derive all tower invariants from a shape")
    _add_shape_flags(p)
    p.set_defaults(handler=_cmd_tower)

    for name, handler in (("orbit", _cmd_orbit), ("order", _cmd_order)):
        p = sub.add_parser(name)
        p.add_argument("--Q", type=int, required=True)
        p.add_argument("--nprime", type=int, required=True)
        p.add_argument("--a", type=int, required=True)
        p.set_defaults(handler=handler)

    p = sub.add_parser("regular-part")
    p.add_argument("--Q", type=int, required=True)
    p.add_argument("--nprime", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.set_defaults(handler=_cmd_regular_part)

    p = sub.add_parser("chain")
    p.add_argument("--M", type=int)
    p.add_argument("--Q", type=int)
    p.add_argument("--nprime", type=int)
    p.add_argument("--from", dest="src", type=int, required=True)
    p.add_argument("--to", dest="dst", type=int, required=True)
    p.set_defaults(handler=_cmd_chain)

    p = sub.add_parser("partition")
    p.add_argument("--Q", type=int, required=True)
    p.add_argument("--nprime", type=int, required=True)
    p.set_defaults(handler=_cmd_partition)

    p = sub.add_parser("zsigmondy")
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(handler=_cmd_zsigmondy)

    p = sub.add_parser("regularize")
    _add_shape_flags(p)
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--a-override", dest="a_override", type=int)
    p.set_defaults(handler=_cmd_regularize)

    p = sub.add_parser("rectifier")
    _add_shape_flags(p)
    p.set_defaults(handler=_cmd_rectifier)

    p = sub.add_parser("transfer")
    _add_shape_flags(p)
    p.add_argument("--alpha", type=int, required=True)
    p.set_defaults(handler=_cmd_transfer)

    p = sub.add_parser("transfer-descent")
    _add_shape_flags(p)
    p.add_argument("--alpha", type=int, required=True)
    p.set_defaults(handler=_cmd_transfer_descent)

    p = sub.add_parser("pair")
    _add_shape_flags(p)
    p.add_argument("--f", type=int, required=True)
    p.add_argument("--beta", type=int, required=True)
    p.set_defaults(handler=_cmd_pair)

    p = sub.add_parser("pair-transfer")
    _add_shape_flags(p)
    p.add_argument("--f", type=int, required=True)
    p.add_argument("--beta", type=int, required=True)
    p.set_defaults(handler=_cmd_pair_transfer)

    p = sub.add_parser("green")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--u", type=int, required=True)
    p.add_argument("--alpha0", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.set_defaults(handler=_cmd_green)

    p = sub.add_parser("table")
    _add_shape_flags(p)
    p.set_defaults(handler=_cmd_table)

    p = sub.add_parser("selftest")
    p.add_argument("--scale", choices=("small", "full"), default="small")
    p.set_defaults(handler=_cmd_selftest)

    return parser


def run(argv: list[str]) -> CommandResult:
    """Parse and execute; never raises for usage or domain problems."""
    try:
        args = build_parser().parse_args(argv)
        payload = args.handler(args)
        return CommandResult(status="ok", payload=payload, exit_code=0)
    except _UsageError as exc:
        return CommandResult(
            status="error", error_kind="UsageError", message=str(exc), exit_code=1
        )
    except DomainError as exc:
        return CommandResult(
            status="error", error_kind=exc.kind, message=str(exc), exit_code=2
        )


def main(argv: list[str] | None = None) -> int:
    result = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(json.dumps(result.document(), sort_keys=True) + "\n")
    if result.status == "error":
        sys.stderr.write(f"{result.error_kind}: {result.message}\n")
    return result.exit_code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
