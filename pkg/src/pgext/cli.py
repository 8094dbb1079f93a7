"""Command-line front end. Every subcommand reads JSON and writes a single
JSON value to stdout; diagnostics go to stderr.

Exit codes: 0 = computed (whatever the mathematical answer), 2 = bad usage
or invalid input, 3 = a resource bound was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .abelian import DEFAULT_MAX_ORDER, PGroupType, primary_decompose
from .equivalence import (
    DEFAULT_MAX_TOTAL,
    DEFAULT_MAX_WITNESSES,
    are_equivalent,
    classify_all,
)
from .errors import BoundExceededError, ValidationError
from .exactmat import IntMatrix, snf
from .extension import ExtensionData, middle_type, normalize, presentation_matrix
from .oracle import diagram_equivalent, realize_extension

__all__ = ["run", "main"]


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _add_payload_flags(sub):
    grp = sub.add_mutually_exclusive_group(required=True)
    grp.add_argument("--input", metavar="PATH", help="read the JSON payload from a file")
    grp.add_argument("--json", dest="inline", metavar="JSON", help="inline JSON payload")


def _build_parser() -> _Parser:
    parser = _Parser(prog="pgext", description="extensions of finite abelian p-groups")
    sub = parser.add_subparsers(dest="command")

    p_snf = sub.add_parser("snf", help="Smith normal form of an integer matrix")
    _add_payload_flags(p_snf)

    p_dec = sub.add_parser("decompose", help="primary (Sylow) decomposition of cyclic orders")
    _add_payload_flags(p_dec)

    p_build = sub.add_parser("build", help="presentation matrix of an extension")
    _add_payload_flags(p_build)

    p_type = sub.add_parser("type", help="isomorphism type of the middle group")
    _add_payload_flags(p_type)

    p_equiv = sub.add_parser("equiv", help="decide equivalence of two extensions")
    _add_payload_flags(p_equiv)
    p_equiv.add_argument("--max-witnesses", type=int, default=DEFAULT_MAX_WITNESSES)

    p_cls = sub.add_parser("classify", help="all equivalence classes for (p, lambda, mu)")
    p_cls.add_argument("--p", type=int, required=True)
    p_cls.add_argument("--lambda", dest="lam", required=True, metavar="PARTS",
                       help="comma-separated exponents, e.g. 2,1 (empty string for trivial)")
    p_cls.add_argument("--mu", required=True, metavar="PARTS")
    p_cls.add_argument("--max-total", type=int, default=DEFAULT_MAX_TOTAL)
    p_cls.add_argument("--max-witnesses", type=int, default=DEFAULT_MAX_WITNESSES)

    p_oeq = sub.add_parser("oracle-equiv", help="decide equivalence by the brute-force oracle")
    _add_payload_flags(p_oeq)
    p_oeq.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER)

    return parser


def _load_payload(args):
    if args.input is not None:
        with open(args.input, "r", encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = args.inline
    return json.loads(text)


def _parse_partition(text: str) -> PGroupType:
    text = text.strip()
    if not text:
        return PGroupType(())
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValidationError("bad_partition", f"cannot parse partition {text!r}") from None
    return PGroupType(parts)


def _matrix_from_payload(payload) -> IntMatrix:
    if not isinstance(payload, list):
        raise ValidationError("bad_matrix", "expected a JSON array of rows")
    return IntMatrix(payload, cols=None if payload else 0)


def _extension_pair(payload) -> tuple[ExtensionData, ExtensionData]:
    if not isinstance(payload, dict) or "ext1" not in payload or "ext2" not in payload:
        raise ValidationError("bad_matrix", 'expected {"ext1": {...}, "ext2": {...}}')
    return (
        ExtensionData.from_json_dict(payload["ext1"]),
        ExtensionData.from_json_dict(payload["ext2"]),
    )


def _cmd_snf(args):
    res = snf(_matrix_from_payload(_load_payload(args)))
    return {"D": res.D.to_lists(), "U": res.U.to_lists(), "V": res.V.to_lists()}


def _cmd_decompose(args):
    payload = _load_payload(args)
    if not isinstance(payload, list):
        raise ValidationError("bad_order", "expected a JSON array of cyclic orders")
    types = primary_decompose(payload)
    return {str(p): list(t.parts) for p, t in types.items()}


def _cmd_build(args):
    ext = ExtensionData.from_json_dict(_load_payload(args))
    return presentation_matrix(ext).to_lists()


def _cmd_type(args):
    ext = ExtensionData.from_json_dict(_load_payload(args))
    return {"middle_type": list(middle_type(ext).parts)}


def _cmd_equiv(args):
    e1, e2 = _extension_pair(_load_payload(args))
    witness = are_equivalent(normalize(e1), normalize(e2), max_witnesses=args.max_witnesses)
    return {
        "equivalent": witness is not None,
        "witness": witness.to_json_dict() if witness is not None else None,
    }


def _cmd_classify(args):
    result = classify_all(
        args.p,
        _parse_partition(args.lam),
        _parse_partition(args.mu),
        max_total=args.max_total,
        max_witnesses=args.max_witnesses,
    )
    return result.to_json_dict()


def _cmd_oracle_equiv(args):
    e1, e2 = _extension_pair(_load_payload(args))
    r1 = realize_extension(e1, max_order=args.max_order)
    r2 = realize_extension(e2, max_order=args.max_order)
    return {"equivalent": diagram_equivalent(r1, r2, max_order=args.max_order)}


_HANDLERS = {
    "snf": _cmd_snf,
    "decompose": _cmd_decompose,
    "build": _cmd_build,
    "type": _cmd_type,
    "equiv": _cmd_equiv,
    "classify": _cmd_classify,
    "oracle-equiv": _cmd_oracle_equiv,
}


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n")


def _fail(code: str, message: str, exit_code: int) -> int:
    print(message, file=sys.stderr)
    _emit({"error": code, "message": message})
    return exit_code


def run(argv: list[str] | None = None) -> int:
    """Execute one CLI invocation; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise _UsageError("a subcommand is required (see --help)")
        result = _HANDLERS[args.command](args)
    except _UsageError as exc:
        return _fail("usage_error", str(exc), 2)
    except json.JSONDecodeError as exc:
        return _fail("parse_error", f"invalid JSON: {exc}", 2)
    except ValidationError as exc:
        return _fail(exc.code, str(exc), 2)
    except BoundExceededError as exc:
        return _fail(exc.code, str(exc), 3)
    except OSError as exc:
        return _fail("io_error", str(exc), 2)
    except (TypeError, ValueError, KeyError) as exc:
        return _fail("invalid_input", str(exc), 2)
    _emit(result)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
