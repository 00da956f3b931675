"""Command-line front end.

Exit codes: 0 for ok / equivalent / true, 1 for inequivalent / false, and 2
for any input or usage error.  The first line of output is the verdict word.
"""
from __future__ import annotations

import argparse
import sys

from . import bdt as B
from . import classical as C
from .encode import check_representation, encode_bdt
from .equiv import proof_equiv, proof_equiv_oracle
from .errors import MalleqError
from .generators import GenConfig, equivalent_pair, random_free_bdt, random_line
from .proof import check_proof, parse_proof, show_proof
from .reductions import OrdInstance, ord_solve, ord_to_bdt_pair, ord_to_proof_pair, parse_line_graph, show_line_graph
from .slicing import bdt_slicing, bdt_slicing_pair, format_bdt_slicing, format_slicing, slicing

OK, NO, BAD = 0, 1, 2


class UsageError(MalleqError):
    pass


class InputError(MalleqError):
    """A malformed or ill-typed input file; the message names the file."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise UsageError(f"{path}: cannot read file: {e.strerror}") from None


def _load(path, parse):
    text = _read(path)
    try:
        return parse(text, source=path)
    except MalleqError as e:
        msg = str(e)
        raise InputError(msg if msg.startswith(path) else f"{path}: {msg}") from None


def _checked(path, parse, check):
    p = _load(path, parse)
    try:
        check(p)
    except MalleqError as e:
        raise InputError(f"{path}: {e}") from None
    return p


def _proof(path):
    return _checked(path, parse_proof, check_proof)


def _mall_proof(path):
    return _checked(path, C.parse_mall_proof, C.check_mall_proof)


def _leaf_path(lp):
    steps = " ".join(f"{x}={b}" for x, b in lp.path) or "(root)"
    return f"leaf {lp.value} at {steps}"


def _verdict(out, equivalent, witness=None, show_witness=False):
    out.append("equivalent" if equivalent else "inequivalent")
    if show_witness and witness is not None:
        i, j = witness.pair
        out.append(f"pair ({i},{j})")
        out.append(f"first: {_leaf_path(witness.left)}")
        out.append(f"second: {_leaf_path(witness.right)}")
    return OK if equivalent else NO


def _equiv(args, out, load, decide, oracle):
    p, q = load(args.first), load(args.second)
    if args.oracle:
        return _verdict(out, oracle(p, q))
    v = decide(p, q)
    return _verdict(out, v.equivalent, v.witness, args.witness)


def cmd_check(args, out):
    p = _proof(args.file)
    out += ["ok", str(p.conclusion)]
    return OK


def cmd_equiv(args, out):
    return _equiv(args, out, _proof, proof_equiv, proof_equiv_oracle)


def cmd_slice(args, out):
    p = _proof(args.file)
    out.append("ok")
    if args.explicit:
        out.append(format_slicing(slicing(p)))
    else:
        text = format_bdt_slicing(bdt_slicing(p))
        if text:
            out.append(text)
    return OK


def _pair(text):
    try:
        i, j = (int(w) for w in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected i,j, got {text!r}") from None
    if i == j or min(i, j) < 0:
        raise argparse.ArgumentTypeError(f"expected two distinct non-negative indices, got {text!r}")
    return (i, j)


def cmd_bdt_slice(args, out):
    p = _proof(args.file)
    try:
        t = bdt_slicing_pair(p, args.pair)
    except (MalleqError, ValueError) as e:
        raise InputError(f"{args.file}: {e}") from None
    out += ["ok", str(t)]
    return OK


def _bdt(path):
    return _load(path, B.parse_bdt)


def _valuation(text):
    v = {}
    for part in filter(None, (w.strip() for w in text.split(","))):
        name, _, bit = part.partition("=")
        if bit not in ("0", "1") or not B.VAR_RE.fullmatch(name):
            raise argparse.ArgumentTypeError(f"expected var=0|1, got {part!r}")
        v[name] = int(bit)
    return v


def cmd_bdt(args, out):
    if args.action == "equiv":
        t1, t2 = _bdt(args.first), _bdt(args.second)
        if args.oracle:
            return _verdict(out, B.equiv_oracle(t1, t2))
        w = B.equiv_witness(t1, t2)
        out.append("equivalent" if w is None else "inequivalent")
        if w is not None and args.witness:
            out += [f"first: {_leaf_path(w[0])}", f"second: {_leaf_path(w[1])}"]
        return OK if w is None else NO
    t = _bdt(args.first)
    bit = B.evaluate(t, args.valuation)
    out.append("true" if bit else "false")
    return OK if bit else NO


def cmd_encode(args, out):
    t = _bdt(args.file)
    p = encode_bdt(args.vars, t)
    out.append("ok")
    if args.check_representation:
        rep = check_representation(args.vars, t)
        out[0] = "ok" if rep.ok else "failed"
        out.append(str(rep))
        if not rep.ok:
            return NO
    text = show_proof(p)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        out.append(text)
    return OK


def cmd_reduce(args, out):
    g = _load(args.file, parse_line_graph)
    inst = OrdInstance(g, args.f, args.s)
    if args.kind == "ord-proof":
        p, q = ord_to_proof_pair(inst)
        v = proof_equiv(p, q)
        code = _verdict(out, v.equivalent)
        out += [f"gadget: {show_proof(p)}", f"reference: {show_proof(q)}"]
    else:
        t, u = ord_to_bdt_pair(inst)
        code = _verdict(out, B.equiv(t, u))
        out += [f"rewired: {t}", f"plain: {u}"]
    out.append(f"order: {'f before s' if ord_solve(inst) else 's before f'}")
    return code


def cmd_gen(args, out):
    cfg = GenConfig(args.seed, args.vars, args.depth, args.mutations)
    out.append("ok")
    if args.kind == "bdt":
        out.append(str(random_free_bdt(cfg)))
    elif args.kind == "proof-pair":
        p, q, expected = equivalent_pair(cfg)
        out += [
            f"expected: {'equivalent' if expected else 'inequivalent'}",
            show_proof(p),
            show_proof(q),
        ]
    else:
        inst = random_line(cfg)
        out += [show_line_graph(inst.graph), f"# f={inst.f} s={inst.s}"]
    return OK


def cmd_mall(args, out):
    if args.action == "check":
        p = _mall_proof(args.first)
        out += ["ok", str(p.conclusion)]
        return OK
    if args.second is None:
        raise UsageError("mall equiv needs two proof files")
    return _equiv(args, out, _mall_proof, C.mall_equiv, C.mall_equiv_oracle)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="malleq", description="Proof equivalence by BDT slicings.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("check", help="check a proof and print its conclusion")
    c.add_argument("file")
    c.set_defaults(run=cmd_check)

    c = sub.add_parser("equiv", help="decide equivalence of two proofs")
    c.add_argument("first")
    c.add_argument("second")
    c.add_argument("--oracle", action="store_true", help="compare explicit slicings instead")
    c.add_argument("--witness", action="store_true", help="print the distinguishing pair")
    c.set_defaults(run=cmd_equiv)

    c = sub.add_parser("slice", help="print the BDT slicing of a proof")
    c.add_argument("file")
    c.add_argument("--explicit", action="store_true", help="print the set of slices instead")
    c.set_defaults(run=cmd_slice)

    c = sub.add_parser("bdt-slice", help="print the tree of one occurrence pair")
    c.add_argument("file")
    c.add_argument("--pair", type=_pair, required=True, metavar="I,J")
    c.set_defaults(run=cmd_bdt_slice)

    c = sub.add_parser("bdt", help="equivalence or evaluation of trees")
    c.add_argument("action", choices=["equiv", "eval"])
    c.add_argument("first")
    c.add_argument("second", nargs="?")
    c.add_argument("--oracle", action="store_true")
    c.add_argument("--witness", action="store_true")
    c.add_argument("--valuation", type=_valuation, default={}, metavar="x=0,y=1")
    c.set_defaults(run=cmd_bdt)

    c = sub.add_parser("encode", help="encode a tree as a proof")
    c.add_argument("file")
    c.add_argument("--vars", type=int, required=True)
    c.add_argument("--check-representation", action="store_true")
    c.add_argument("-o", "--output")
    c.set_defaults(run=cmd_encode)

    c = sub.add_parser("reduce", help="build and decide an ORD gadget pair")
    c.add_argument("kind", choices=["ord-proof", "ord-bdt"])
    c.add_argument("file")
    c.add_argument("--f", required=True)
    c.add_argument("--s", required=True)
    c.set_defaults(run=cmd_reduce)

    c = sub.add_parser("gen", help="seeded random instances")
    c.add_argument("kind", choices=["bdt", "proof-pair", "line"])
    c.add_argument("--seed", type=int, default=42)
    c.add_argument("--vars", type=int, default=3)
    c.add_argument("--depth", type=int, default=3)
    c.add_argument("--mutations", type=int, default=2)
    c.set_defaults(run=cmd_gen)

    c = sub.add_parser("mall", help="check or compare classical proofs")
    c.add_argument("action", choices=["check", "equiv"])
    c.add_argument("first")
    c.add_argument("second", nargs="?")
    c.add_argument("--oracle", action="store_true")
    c.add_argument("--witness", action="store_true")
    c.set_defaults(run=cmd_mall)
    return ap


def run(argv) -> tuple[int, str]:
    """Run one command; returns ``(exit code, output text)``."""
    out: list[str] = []
    try:
        args = build_parser().parse_args(argv)
        if args.command == "bdt" and args.action == "equiv" and args.second is None:
            raise UsageError("bdt equiv needs two tree files")
        code = args.run(args, out)
    except (MalleqError, ValueError) as e:
        return BAD, f"error: {e}"
    return code, "\n".join(out)


def main(argv=None) -> int:
    code, text = run(sys.argv[1:] if argv is None else argv)
    if text:
        print(text, file=sys.stderr if code == BAD else sys.stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
