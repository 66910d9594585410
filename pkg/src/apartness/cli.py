"""Command-line entry point.

Every command builds a :class:`Report` (command echo, structure digests,
named checks, constructed outputs) and exits 0 when every check passed,
1 when one failed and 2 on input or usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import maps as mp
from . import quotient as qt
from . import relcalc as rc
from . import semigroup as sg
from .carrier import (ApartnessError, ApartnessSet, AxiomError, Rel, check_apartness_axioms,
                      classify_detachability, complements)
from .certificate import Certificate, CertificateFailure
from .structfile import (FIXTURES, ParseError, StructureFile, digest, load_fixture, parse,
                         structure_of, to_document)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class Report:
    command: list
    digests: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)
    outputs: dict = field(default_factory=dict)
    error: str | None = None
    usage_error: bool = False

    def check(self, name: str, passed: bool, witness=None) -> bool:
        self.checks.append({"name": name, "passed": bool(passed), "witness": _plain(witness) if not passed else None})
        return bool(passed)

    def certificate(self, cert: Certificate, prefix: str = "") -> None:
        for c in cert.checks:
            self.check(prefix + c.name, c.passed, c.witness)

    @property
    def exit_code(self) -> int:
        if self.usage_error:
            return EXIT_USAGE
        if self.error is not None or not all(c["passed"] for c in self.checks):
            return EXIT_FAIL
        return EXIT_OK

    def to_dict(self) -> dict:
        return {"command": self.command, "digests": self.digests, "checks": self.checks,
                "outputs": self.outputs, "error": self.error, "exit": self.exit_code}

    def render_text(self) -> str:
        lines = ["command: " + " ".join(self.command)]
        for k, v in self.digests.items():
            lines.append(f"digest {k}: {v[:16]}")
        for c in self.checks:
            mark = "PASS" if c["passed"] else "FAIL"
            wit = "" if c["witness"] is None else f"  witness={json.dumps(c['witness'])}"
            lines.append(f"[{mark}] {c['name']}{wit}")
        for k, v in self.outputs.items():
            if isinstance(v, dict):
                lines.append(f"{k}:")
                lines.extend(f"  {kk}: {_compact(vv)}" for kk, vv in v.items())
            else:
                lines.append(f"{k}: {_compact(v)}")
        if self.error:
            lines.append(f"error: {self.error}")
        lines.append(f"exit: {self.exit_code}")
        return "\n".join(lines) + "\n"


def _compact(v) -> str:
    return v if isinstance(v, str) else json.dumps(v, separators=(",", ":"))


def _plain(w):
    if isinstance(w, (tuple, list)):
        return [_plain(v) for v in w]
    if isinstance(w, np.integer):
        return int(w)
    if isinstance(w, np.bool_):
        return bool(w)
    if isinstance(w, dict):
        return {str(k): _plain(v) for k, v in w.items()}
    if w is None or isinstance(w, (int, float, str, bool)):
        return w
    return str(w)


# -- input ------------------------------------------------------------------------------

def load_structure(arg: str) -> StructureFile:
    """A path, or the name of a bundled fixture (``example4``, ``example4.struct``)."""
    p = Path(arg)
    if p.exists():
        return parse(p)
    stem = p.name.split(".")[0]
    if stem in FIXTURES:
        return load_fixture(stem)
    raise UsageError(f"no such file or bundled fixture: {arg}")


def _relation(sf: StructureFile, name: str) -> Rel:
    if name not in sf.relations:
        raise UsageError(f"no relation named {name!r}; have {sorted(sf.relations)}")
    return sf.relations[name]


def _rel_out(rel: Rel) -> list:
    return [list(p) for p in rel.pairs()]


def _quotient_doc(A: ApartnessSet, order: Rel | None = None, table=None) -> dict:
    rels = {"order": order} if order is not None else {}
    return to_document(structure_of(A, rels, table))


# -- commands ---------------------------------------------------------------------------

def cmd_check(args, rep: Report) -> None:
    sf = load_structure(args.file)
    rep.digests["input"] = digest(sf)
    bad = check_apartness_axioms(sf.carrier, sf.eq, sf.ap)
    rep.check("apartness-axioms", not bad, [str(v) for v in bad])
    if bad:
        return
    A = sf.apartness_set()
    rep.outputs["size"] = A.n
    rep.outputs["tight"] = A.tight
    if sf.operation is not None:
        viol = sg.check_semigroup_axioms(A, sf.operation)
        for axiom in ("well-defined", "A", "S"):
            hits = [v for v in viol if v.axiom == axiom]
            rep.check(f"semigroup-{axiom}", not hits, [list(v.witness) for v in hits[:1]])
    for name, R in sorted(sf.relations.items()):
        rep.outputs[f"relation {name}"] = rc.classify(A, R).kind
    for name in sorted(sf.subsets):
        Y = sf.subset(name)
        logical, apart = complements(A, Y)
        det = classify_detachability(A, Y)
        rep.outputs[f"subset {name}"] = {"logical_complement": sorted(logical.labels()),
                                         "apartness_complement": sorted(apart.labels()),
                                         "d": det.d, "sd": det.sd, "qd": det.qd}
    for name in sorted(sf.maps):
        f = sf.map(name)
        rep.outputs[f"map {name}"] = {"se": f.se, "injective": f.injective, "a_injective": f.a_injective,
                                      "surjective": f.surjective}


def cmd_classify(args, rep: Report) -> None:
    sf = load_structure(args.file)
    rep.digests["input"] = digest(sf)
    A = sf.apartness_set()
    R = _relation(sf, args.rel)
    props = rc.check_properties(A, R)
    rep.outputs["kind"] = rc.classify(A, R).kind
    rep.outputs["properties"] = props.as_dict()
    rep.outputs["witnesses"] = _plain(props.witnesses)
    logical, apart = rc.rel_complements(A, R)
    rep.outputs["logical_complement"] = _rel_out(logical)
    rep.outputs["apartness_complement"] = _rel_out(apart)
    if sf.operation is not None:
        cp = sg.check_compatibility(sf.semigroup(), R)
        rep.outputs["compatibility"] = {k: getattr(cp, k) for k in
                                        ("left", "right", "full", "co_left", "co_right", "co_full")}


def cmd_quotient(args, rep: Report) -> None:
    sf = load_structure(args.file)
    rep.digests["input"] = digest(sf)
    A = sf.apartness_set()
    Sg = sf.semigroup() if sf.operation is not None else None
    if args.equiv:
        eps = _relation(sf, args.equiv)
        if Sg is not None and sg.is_congruence(Sg, eps):
            q = sg.quotient_semigroup(Sg, congruence=eps)
            Q, table = q.witness, q.semigroup.mul
            rep.certificate(q.certificate)
        else:
            Q, table = qt.quotient_by_equivalence(A, eps), None
            rep.certificate(Q.certificate)
        order = None
    elif args.coequiv:
        kappa = _relation(sf, args.coequiv)
        if Sg is not None and sg.is_cocongruence(Sg, kappa):
            q = sg.quotient_semigroup(Sg, cocongruence=kappa)
            Q, table = q.witness, q.semigroup.mul
            rep.certificate(q.certificate)
        else:
            Q, table = qt.quotient_by_coequivalence(A, kappa), None
            rep.certificate(Q.certificate)
        order = None
    else:
        if not args.rel or not args.mode:
            raise UsageError("give --equiv, --coequiv, or --rel with --mode")
        rho = _relation(sf, args.rel)
        Q, table, order = _ordered_quotient(A, Sg, rho, args.mode, rep)
    rep.outputs["classes"] = [sorted(c) for c in Q.class_sets()]
    doc = _quotient_doc(Q.quotient, order, table)
    rep.outputs["quotient"] = doc
    rep.digests["quotient"] = digest(structure_of(Q.quotient, {"order": order} if order is not None else {}, table))


def _ordered_quotient(A, Sg, rho, mode, rep: Report):
    if mode == "birkhoff":
        Q = qt.birkhoff_classical(A, rho)
        rep.certificate(Q.certificate, "set:")
        sym = rho & rho.inverse
    elif mode == "co-birkhoff":
        Q = qt.birkhoff_constructive(A, rho)
        rep.certificate(Q.certificate, "set:")
        sym = rho | rho.inverse
    else:
        raise UsageError(f"unknown mode {mode!r}")
    table = None
    if Sg is not None:
        cp = sg.check_compatibility(Sg, rho)
        if mode == "birkhoff":
            rep.check("relation-compatible", cp.full, cp.witnesses.get("full"))
            if sg.is_congruence(Sg, sym):
                q = sg.quotient_semigroup(Sg, congruence=sym)
                rep.certificate(q.certificate, "semigroup:")
                table = q.semigroup.mul
                rep.check("order-compatible", sg.check_compatibility(q.semigroup, Q.induced_rel).full)
        else:
            rep.check("relation-co-compatible", cp.co_full, cp.witnesses.get("co_full"))
            if sg.is_cocongruence(Sg, sym):
                q = sg.quotient_semigroup(Sg, cocongruence=sym)
                rep.certificate(q.certificate, "semigroup:")
                table = q.semigroup.mul
                rep.check("order-co-compatible", sg.check_compatibility(q.semigroup, Q.induced_rel).co_full)
            else:
                rep.check("symmetrisation-co-congruence", False)
    return Q, table, Q.induced_rel


def cmd_iso(args, rep: Report) -> None:
    sf = load_structure(args.file)
    rep.digests["input"] = digest(sf)
    if args.map not in sf.maps:
        raise UsageError(f"no map named {args.map!r}; have {sorted(sf.maps)}")
    cod = sf.codomain(args.map)
    rep.digests["codomain"] = digest(cod)
    f = sf.map(args.map)
    kappa = _relation(sf, args.kappa) if args.kappa else None
    if sf.operation is not None and cod.operation is not None:
        w = sg.semigroup_iso_theorems(sf.semigroup(), cod.semigroup(), f.graph, kappa=kappa,
                                      classical=args.classical)
        rep.certificate(w.certificate)
        iso, table = w.iso, w.quotient.semigroup.mul
        rep.outputs.update({f"flag {k}": v for k, v in w.flags.items()})
    else:
        if args.classical:
            iso = mp.first_iso_classical(f)
        elif kappa is not None:
            iso = mp.second_apartness_iso(f, kappa)
        else:
            iso = mp.first_apartness_iso(f)
        rep.certificate(iso.certificate)
        rep.outputs.update({f"flag {k}": v for k, v in iso.flags.items()})
        table = None
    rep.outputs["classes"] = [sorted(c) for c in iso.quotient.class_sets()]
    rep.outputs["phi"] = iso.phi.as_labels()
    rep.outputs["phi_flags"] = {"se": iso.phi.se, "injective": iso.phi.injective,
                                "a_injective": iso.phi.a_injective, "surjective": iso.phi.surjective}
    rep.outputs["quotient"] = _quotient_doc(iso.quotient.quotient, None, table)


def cmd_tse(args, rep: Report) -> None:
    sf = load_structure(args.file)
    rep.digests["input"] = digest(sf)
    T = sg.build_se_transformation_semigroup(sf.apartness_set(), seed=args.seed)
    rep.certificate(T.certificate)
    labels = sf.carrier.labels
    rep.outputs["size"] = T.size
    rep.outputs["tight"] = T.is_tight()
    rep.outputs["elements"] = {T.label(i): [labels[v] for v in T.elements[i]] for i in range(T.size)}
    for name in sorted(sf.maps):
        g = sf.maps[name].graph
        rep.outputs[f"map {name}"] = T.label(T.index(g)) if tuple(g) in T else None


def cmd_cayley(args, rep: Report) -> None:
    sf = load_structure(args.file)
    rep.digests["input"] = digest(sf)
    w = sg.cayley_embedding(sf.semigroup())
    rep.certificate(w.certificate)
    labels = w.extended.labels
    rep.outputs["translations"] = {labels[a]: [labels[v] for v in w.extended.mul[a]] for a in range(w.extended.n)}
    rep.outputs["target_size"] = w.target.size
    rep.outputs["embedding"] = {labels[a]: w.target.label(g) for a, g in enumerate(w.graph)}


def cmd_enumerate(args, rep: Report) -> None:
    from .oracle import enumerate as en
    over = None
    if args.over:
        sf = load_structure(args.over)
        rep.digests["over"] = digest(sf)
        m = lambda R: tuple(tuple(bool(v) for v in row) for row in R.matrix)
        over = (m(sf.eq), m(sf.ap))
        if len(over[0]) != args.size:
            raise UsageError(f"--over has {len(over[0])} elements, --size is {args.size}")
    filt = tuple(f for f in (args.filter or "").split(",") if f)
    spec = en.EnumSpec(args.size, args.kind, over=over, filter=filt, budget=args.budget,
                       seed=args.seed if args.budget is not None else None)
    try:
        items = list(en.enumerate_structures(spec))
    except ValueError as e:
        raise UsageError(str(e)) from None
    except en.SpaceTooLarge as e:
        raise UsageError(f"{e}; pass --budget to sample") from None
    rep.outputs["mode"] = "exhaustive" if args.budget is None else f"sampled({args.budget}, seed={args.seed})"
    rep.outputs["count"] = len(items)
    rep.outputs["structures"] = [_encode(x) for x in items[:args.limit]]


def _encode(x):
    """Matrices as rows of 0/1 strings, tables and graphs as int lists."""
    if _is_mat(x):
        return ["".join("1" if v else "0" for v in row) for row in x]
    if isinstance(x, tuple) and x and all(isinstance(v, (int, np.integer)) for v in x):
        return [int(v) for v in x]
    if isinstance(x, tuple) and x and isinstance(x[0], tuple) and isinstance(x[0][0], (int, np.integer)):
        return [[int(v) for v in row] for row in x]
    return [_encode(v) for v in x]


def _is_mat(x) -> bool:
    return (isinstance(x, tuple) and bool(x) and isinstance(x[0], tuple) and bool(x[0])
            and isinstance(x[0][0], (bool, np.bool_)))


def cmd_fuzz(args, rep: Report) -> None:
    from .oracle.campaign import fuzz_campaign, select_theorems
    from .oracle.instances import FAMILIES
    from .oracle.registry import UnknownTheorem
    theorems = args.theorems
    if args.kind:
        theorems = f"kind:{args.kind}"
    try:
        select_theorems(theorems)
    except UnknownTheorem as e:
        raise UsageError(f"unknown theorem {e}") from None
    sizes = range(args.min_size, args.max_size + 1)
    samples = None if args.exhaustive or args.samples is None else args.samples
    caps = {}
    for c in args.cap:
        fam, _, size = c.partition("=")
        if fam not in FAMILIES or not size.isdigit():
            raise UsageError(f"bad --cap {c!r}; expected FAMILY=N with a known family")
        caps[fam] = int(size)
    r = fuzz_campaign(sizes, theorems, samples=samples, seed=args.seed, workers=args.workers, caps=caps)
    for t in r.theorems:
        status = "expected-fail" if t.expected_fail else "holds"
        rep.check(f"{t.theorem_id} [{status}]", not t.unexpected,
                  t.disagreements[:1] or t.first_failure)
    rep.outputs["campaign"] = r.to_dict(timings=not args.no_timings)


def cmd_example(args, rep: Report) -> None:
    from .oracle.instances import fixture_data
    from .oracle.registry import REGISTRY, verify
    name = args.name.replace("-", "")
    if name not in FIXTURES:
        raise UsageError(f"unknown example {args.name!r}; choose from {list(FIXTURES)}")
    sf = load_fixture(name)
    rep.digests["input"] = digest(sf)
    tid = f"example-{name[len('example'):]}"
    spec = REGISTRY[tid]
    res = verify(tid, fixture_data(name))
    want = "fail" if spec.expected_fail else "pass"
    rep.check(f"{tid} oracle verdict is {want}", res.verdict == want, res.witness)
    rep.check(f"{tid} construction verdict is {want}", res.construction == want, res.construction_witness)
    rep.outputs["claim"] = spec.summary
    rep.outputs["oracle"] = {"verdict": res.verdict, "witness": _plain(res.witness)}
    rep.outputs["construction"] = {"verdict": res.construction, "witness": _plain(res.construction_witness)}
    rep.outputs.update(_EXAMPLE_OUTPUTS[name](sf))


def _ex1(sf):
    A = sf.apartness_set()
    Q = qt.quotient_by_equivalence(A, sf.relations["epsilon"])
    theta, well = qt.induced_quotient_relation(Q, sf.relations["alpha"])
    p = rc.check_properties(Q.quotient, theta)
    return {"classes": [sorted(c) for c in Q.class_sets()], "induced": _rel_out(theta),
            "antisymmetric": p.antisymmetric, "antisymmetry_witness": _plain(p.witnesses.get("antisymmetric"))}


def _ex2(sf):
    A = sf.apartness_set()
    Y = sf.subset("Y")
    logical, apart = complements(A, Y)
    det = classify_detachability(A, Y)
    return {"apartness_complement": sorted(apart.labels()), "logical_complement": sorted(logical.labels()),
            "detachability": {"d": det.d, "sd": det.sd, "qd": det.qd}, "tight": A.tight}


def _ex3(sf):
    A = sf.apartness_set()
    logical, apart = rc.rel_complements(A, sf.relations["alpha"])
    return {"apartness_complement": _rel_out(apart), "logical_complement": _rel_out(logical),
            "proper_subset": apart < logical}


def _ex4(sf):
    A = sf.apartness_set()
    viol = sg.check_semigroup_axioms(A, sf.operation)
    flipped = ApartnessSet(A.carrier, A.eq, ~A.eq)
    fviol = sg.check_semigroup_axioms(flipped, sf.operation)
    return {"violations": [str(v) for v in viol], "full_apartness_violations": [str(v) for v in fviol]}


def _ex5(sf):
    T = sg.build_se_transformation_semigroup(sf.apartness_set())
    i, j = T.index(sf.maps["f"].graph), T.index(sf.maps["g"].graph)
    return {"tse_size": T.size, "f_apart_g": T.ap(i, j), "f_equals_g": T.eq(i, j), "tight": T.is_tight()}


def _ex6(sf):
    A = sf.apartness_set()
    tau = sf.relations["tau"]
    Sg = sf.semigroup()
    cp = sg.check_compatibility(Sg, tau)
    Q = qt.birkhoff_constructive(A, tau)
    kappa = tau | tau.inverse
    out = {"kind": rc.classify(A, tau).kind, "co_compatible": cp.co_full,
           "co_compatibility_witness": _plain(cp.witnesses.get("co_full")),
           "classes": [sorted(c) for c in Q.class_sets()], "order": _rel_out(Q.induced_rel),
           "kappa_co_congruence": sg.is_cocongruence(Sg, kappa)}
    if out["kappa_co_congruence"]:
        q = sg.quotient_semigroup(Sg, cocongruence=kappa)
        out["quotient_table"] = q.semigroup.table_labels()
    return out


_EXAMPLE_OUTPUTS = {"example1": _ex1, "example2": _ex2, "example3": _ex3, "example4": _ex4,
                    "example5": _ex5, "example6": _ex6}


# -- argument parsing -------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    # suppressed defaults, so an option given before the command survives the sub-parser
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--out", default=argparse.SUPPRESS, help="write the report here instead of stdout")
    p = _Parser(prog="apartness", description="Finite sets and semigroups with apartness.", parents=[common])
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    s = sub.add_parser("check", parents=[common], help="validate a structure file")
    s.add_argument("file")
    s = sub.add_parser("classify", parents=[common], help="properties of a named relation")
    s.add_argument("file")
    s.add_argument("--rel", required=True)
    s = sub.add_parser("quotient", parents=[common], help="quotient by a relation")
    s.add_argument("file")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--equiv")
    g.add_argument("--coequiv")
    g.add_argument("--rel")
    s.add_argument("--mode", choices=("birkhoff", "co-birkhoff"))
    s = sub.add_parser("iso", parents=[common], help="isomorphism theorems for a named map")
    s.add_argument("file")
    s.add_argument("--map", required=True)
    s.add_argument("--kappa")
    s.add_argument("--classical", action="store_true")
    s = sub.add_parser("tse", parents=[common], help="semigroup of strongly extensional self-maps")
    s.add_argument("file")
    s.add_argument("--seed", type=int, default=0)
    s = sub.add_parser("cayley", parents=[common], help="Cayley embedding of a semigroup")
    s.add_argument("file")
    s = sub.add_parser("enumerate", parents=[common], help="enumerate or sample structures")
    s.add_argument("--size", type=int, required=True)
    s.add_argument("--kind", required=True)
    s.add_argument("--over")
    s.add_argument("--budget", type=int)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--filter", help="comma-separated property filters")
    s.add_argument("--limit", type=int, default=50, help="structures listed in the report")
    s = sub.add_parser("fuzz", parents=[common], help="check registered theorems on many instances")
    s.add_argument("--max-size", type=int, required=True)
    s.add_argument("--min-size", type=int, default=1)
    m = s.add_mutually_exclusive_group()
    m.add_argument("--exhaustive", action="store_true")
    m.add_argument("--samples", type=int)
    s.add_argument("--theorems", default="all")
    s.add_argument("--kind", help="select theorems whose instance family starts with this prefix")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--no-timings", action="store_true", help="omit wall-clock fields")
    s.add_argument("--cap", action="append", default=[], metavar="FAMILY=N",
                   help="walk an instance family exhaustively up to size N (repeatable)")
    s = sub.add_parser("example", parents=[common], help="reproduce a bundled example")
    s.add_argument("--name", required=True)
    return p


COMMANDS = {"check": cmd_check, "classify": cmd_classify, "quotient": cmd_quotient, "iso": cmd_iso,
            "tse": cmd_tse, "cayley": cmd_cayley, "enumerate": cmd_enumerate, "fuzz": cmd_fuzz,
            "example": cmd_example}


def run(argv: list[str]) -> tuple[Report, str, str | None]:
    """Execute a command; returns the report, the output format and the output path."""
    rep = Report(list(argv))
    fmt, out = "text", None
    try:
        args = build_parser().parse_args(argv)
        fmt, out = getattr(args, "format", "text"), getattr(args, "out", None)
        if args.command is None:
            raise UsageError("no command given")
        COMMANDS[args.command](args, rep)
    except (UsageError, ParseError) as e:
        rep.error, rep.usage_error = str(e), True
    except AxiomError as e:
        rep.check("axioms", False, [str(v) for v in e.report])
    except CertificateFailure as e:
        rep.certificate(e.certificate)
    except ApartnessError as e:
        rep.error = f"{type(e).__name__}: {e}"
    return rep, fmt, out


def main(argv: list[str] | None = None) -> int:
    rep, fmt, out = run(sys.argv[1:] if argv is None else argv)
    text = json.dumps(rep.to_dict(), indent=2) + "\n" if fmt == "json" else rep.render_text()
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)
    return rep.exit_code


if __name__ == "__main__":
    sys.exit(main())
