"""Thin command-line client for the simulator service.

By default commands run against an in-process instance of the FastAPI app;
``--server URL`` points them at a remote instance instead.

Exit codes: 0 success, 1 usage error, 2 data/type error, 3 capacity error,
4 oracle contract violation.
"""

from __future__ import annotations

import argparse
import sys

import httpx

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_CAPACITY = 3
EXIT_ORACLE = 4

_CATEGORY_EXIT = {
    "usage": EXIT_USAGE,
    "data": EXIT_DATA,
    "capacity": EXIT_CAPACITY,
    "oracle": EXIT_ORACLE,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def make_client(server: str | None) -> httpx.Client:
    if server:
        return httpx.Client(base_url=server)
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient

    from .service.app import app

    return TestClient(app)


def _request(client: httpx.Client, method: str, path: str, **kwargs) -> dict:
    resp = client.request(method, path, **kwargs)
    if resp.status_code == 200:
        return resp.json()
    try:
        body = resp.json()
    except ValueError:
        body = {}
    if resp.status_code == 400 and "category" in body:
        print(body.get("message", "request failed"), file=sys.stderr)
        raise SystemExit(_CATEGORY_EXIT.get(body["category"], EXIT_DATA))
    print(f"request failed with status {resp.status_code}", file=sys.stderr)
    raise SystemExit(EXIT_USAGE)


def _parse_number(token: str):
    try:
        return int(token)
    except ValueError:
        pass
    try:
        return float(token)
    except ValueError:
        return None


def _read_rows(path: str, allow_values_only: bool) -> tuple[list, list]:
    """Parse an input file of 'bin value' lines ('#' comments, blanks ignored).

    With ``allow_values_only`` a single-token line is taken as a bare value.
    Returns (bins, values); bins is empty for a values-only file.
    """
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"cannot read {path}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_DATA)

    bins, values = [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) == 1 and allow_values_only:
            value = _parse_number(tokens[0])
            if value is None:
                print(f"{path}:{lineno}: not a number: {tokens[0]!r}", file=sys.stderr)
                raise SystemExit(EXIT_DATA)
            values.append(value)
            continue
        if len(tokens) != 2:
            print(f"{path}:{lineno}: expected 'bin value'", file=sys.stderr)
            raise SystemExit(EXIT_DATA)
        value = _parse_number(tokens[1])
        if value is None:
            print(f"{path}:{lineno}: not a number: {tokens[1]!r}", file=sys.stderr)
            raise SystemExit(EXIT_DATA)
        bin_token = _parse_number(tokens[0])
        bins.append(tokens[0] if bin_token is None else bin_token)
        values.append(value)
    if not values:
        print(f"{path}: no data rows", file=sys.stderr)
        raise SystemExit(EXIT_DATA)
    if bins and len(bins) != len(values):
        print(f"{path}: mixed values-only and bin/value lines", file=sys.stderr)
        raise SystemExit(EXIT_DATA)
    return bins, values


def _parse_pv(text: str) -> list[int]:
    bits = []
    for token in text.split():
        if token not in ("0", "1"):
            print(f"partition vector bits must be 0 or 1, got {token!r}", file=sys.stderr)
            raise SystemExit(EXIT_DATA)
        bits.append(int(token))
    if not bits or bits[0] != 1:
        print("partition vector must start with 1", file=sys.stderr)
        raise SystemExit(EXIT_DATA)
    return bits


def _fmt(value) -> str:
    if isinstance(value, float):
        return format(value, "g")
    return str(value)


def build_parser() -> _Parser:
    parser = _Parser(prog="djvm", description=__doc__)
    parser.add_argument("--server", help="base URL of a running service (default: in-process)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("machine-show", help="print a fresh machine dump")
    p.add_argument("--qr", type=int, default=3)
    p.add_argument("--ascii", action="store_true")

    p = sub.add_parser("dj", help="run a Deutsch-Jozsa experiment")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--oracle", required=True,
                   help="constant0 | constant1 | mask:M | table:BITS")
    p.add_argument("--show-matrix", action="store_true")

    p = sub.add_parser("partition", help="compute a partition vector from bins")
    p.add_argument("--input", required=True)
    p.add_argument("--qr", type=int, default=3)
    p.add_argument("--show-machine", action="store_true")
    p.add_argument("--ascii", action="store_true")

    p = sub.add_parser("reduce", help="partition and reduce a data column")
    p.add_argument("--input", required=True)
    p.add_argument("--op", required=True,
                   choices=["sum", "product", "min", "max", "count"])
    p.add_argument("--pv", help="explicit partition vector, e.g. '1 0 0 1'")
    p.add_argument("--qr", type=int, default=3)
    p.add_argument("--show-machine", action="store_true")
    p.add_argument("--ascii", action="store_true")

    p = sub.add_parser("demo", help="run the built-in worked example with self-check")
    p.add_argument("--ascii", action="store_true")
    p.add_argument("--corrupt-expectation", action="store_true",
                   help=argparse.SUPPRESS)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    client = make_client(args.server)

    if args.command == "machine-show":
        body = _request(client, "GET", "/machine",
                        params={"qr": args.qr, "ascii_mode": args.ascii})
        print(body["dump"], end="")

    elif args.command == "dj":
        body = _request(client, "POST", "/dj", json={
            "n": args.n, "oracle": args.oracle, "show_matrix": args.show_matrix,
        })
        if body.get("matrix") is not None:
            for row in body["matrix"]:
                print(" ".join(str(v) for v in row))
        if body["outcome"] == "constant":
            line = "constant"
        else:
            line = "balanced, states: " + " ".join(body["detected"])
        if body.get("promise_violated"):
            line += " (promise violated)"
        print(line)

    elif args.command == "partition":
        bins, values = _read_rows(args.input, allow_values_only=False)
        body = _request(client, "POST", "/partition", json={
            "bins": bins, "qr": args.qr,
            "show_machine": args.show_machine, "ascii_mode": args.ascii,
        })
        print(" ".join(str(b) for b in body["bits"]))
        print(f"parts: {body['parts']}")
        if body.get("dump"):
            print()
            print(body["dump"], end="")

    elif args.command == "reduce":
        bins, values = _read_rows(args.input, allow_values_only=args.pv is not None)
        payload = {
            "values": values, "op": args.op, "qr": args.qr,
            "show_machine": args.show_machine, "ascii_mode": args.ascii,
        }
        if args.pv is not None:
            pv = _parse_pv(args.pv)
            if len(pv) != len(values):
                print("partition vector length does not match row count", file=sys.stderr)
                raise SystemExit(EXIT_DATA)
            payload["pv"] = pv
        else:
            payload["bins"] = bins
        body = _request(client, "POST", "/reduce", json=payload)
        print(" ".join(_fmt(t) for t in body["totals"]))
        if body.get("dump"):
            print()
            print(body["dump"], end="")

    elif args.command == "demo":
        body = _request(client, "POST", "/demo", json={
            "ascii_mode": args.ascii, "corrupt": args.corrupt_expectation,
        })
        for event in body["events"]:
            print(event)
        print()
        print(body["dump"], end="")
        if not body["ok"]:
            for failure in body["failures"]:
                print(f"self-check failed: {failure}", file=sys.stderr)
            return EXIT_DATA

    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
