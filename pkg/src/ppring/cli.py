"""Command-line front end: reports on pairs, lattices, marks, species and
idempotents, plus the full verification suite and the finite-field oracle
check.

Exit codes: 0 when every requested verification passes, 1 on a verification
failure, 2 on a usage or configuration error.  Identical configurations
produce byte-identical reports.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from dataclasses import dataclass

from . import burnside as bd
from . import ffq, idem, species
from .cyclo import Cyclotomic
from .grp import (DEFAULT_ORDER_CAP, FiniteGroup, GroupError, Permutation,
                  alternating, close_generators, cyclic, dihedral,
                  direct_product, klein_four, normalizer, promote,
                  quaternion8, quotient, symmetric)
from .lattice import subgroup_lattice
from .ppelem import (PPElement, brauer_elt, default_conductor, ind_elt,
                     inf_elt, res_elt)


class ParseError(Exception):
    """Raised for malformed group specifications."""


class UnknownName(ParseError):
    """Raised for group names outside the built-in list."""


@dataclass
class RunConfig:
    """Everything one CLI invocation needs, in one deterministic bundle."""

    command: str
    group: str = ""
    p: int = 2
    fmt: str = "pretty"
    max_order: int = DEFAULT_ORDER_CAP
    oracle_n_cap: int = ffq.DEFAULT_N_CAP
    oracle_dim_cap: int = ffq.DEFAULT_DIM_CAP
    samples: int = 50
    seed: int = 0
    out: str | None = None

    def __post_init__(self):
        from .grp import _check_prime
        _check_prime(self.p)
        if self.max_order <= 0 or self.oracle_n_cap <= 0 or self.oracle_dim_cap <= 0:
            raise ParseError("caps must be positive")


def _named_group(name: str, max_order: int) -> FiniteGroup:
    name = name.strip()
    if "x" in name:
        parts = name.split("x")
        group = _named_group(parts[0], max_order)
        for part in parts[1:]:
            group = direct_product(group, _named_group(part, max_order), max_order)
        return group
    try:
        if name.startswith("C") and name[1:].isdigit():
            return cyclic(int(name[1:]), max_order)
        if name.startswith("S") and name[1:].isdigit():
            return symmetric(int(name[1:]), max_order)
        if name.startswith("A") and name[1:].isdigit():
            return alternating(int(name[1:]), max_order)
        if name.startswith("D") and name[1:].isdigit():
            return dihedral(int(name[1:]), max_order)
        if name == "Q8":
            return quaternion8(max_order)
        if name == "V4":
            return klein_four(max_order)
    except ValueError as exc:
        raise UnknownName(f"cannot build group {name!r}: {exc}") from exc
    raise UnknownName(f"unknown group name {name!r}")


def parse_group_spec(text: str, max_order: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Build a group from a name like ``S4`` / ``C2xC2`` or a JSON object
    ``{"degree": d, "generators": [[cycle, ...], ...]}`` (cycles are integer
    lists) or ``{"name": "S4"}``."""
    text = text.strip()
    if not text:
        raise ParseError("empty group specification")
    if text.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
        if "name" in data:
            return _named_group(str(data["name"]), max_order)
        if "degree" not in data or "generators" not in data:
            raise ParseError("JSON group spec needs 'name' or 'degree'+'generators'")
        try:
            degree = int(data["degree"])
            gens = [Permutation.from_cycles(degree, [tuple(c) for c in g])
                    for g in data["generators"]]
            return close_generators(degree, gens, max_order)
        except (TypeError, ValueError, GroupError) as exc:
            if isinstance(exc, GroupError) and "cap" in str(exc):
                raise
            raise ParseError(f"bad group spec: {exc}") from exc
    return _named_group(text, max_order)


# ---------------------------------------------------------------------------
# report assembly


def _subgroup_json(H) -> dict:
    return {"order": H.order,
            "generators": [list(g.images) for g in H.generators()]}


def _pair_json(q) -> dict:
    return {
        "P": _subgroup_json(q.P),
        "lift": list(q.lift.images),
        "s_order": q.s_order,
        "ps_order": q.ps.order,
        "stabilizer_order": q.stabilizer.order,
        "centralizer_order": q.centralizer_order,
    }


def cmd_pairs(config: RunConfig, G: FiniteGroup) -> tuple[bool, dict]:
    pairs = species.enumerate_pairs(G, config.p)
    return True, {
        "group_order": G.order,
        "p": config.p,
        "conductor": default_conductor(G, config.p),
        "pairs": [_pair_json(q) for q in pairs],
    }


def cmd_lattice(config: RunConfig, G: FiniteGroup) -> tuple[bool, dict]:
    lat = subgroup_lattice(G)
    rows = []
    for H in lat.subgroups:
        rows.append({
            "order": H.order,
            "generators": [list(g.images) for g in H.generators()],
            "normal": H.is_normal(),
            "mu_to_top": lat.moebius(H, lat.top),
        })
    return True, {
        "group_order": G.order,
        "subgroup_count": len(lat.subgroups),
        "class_count": len(lat.conjugacy_classes()),
        "subgroups": rows,
    }


def cmd_burnside(config: RunConfig, G: FiniteGroup) -> tuple[bool, dict]:
    lat = subgroup_lattice(G)
    reps = lat.class_reps()
    marks = [[bd.mark(G, L, K) for K in reps] for L in reps]
    idems = {}
    for H in reps:
        e = bd.gluck_yoshida(G, H)
        idems[f"order_{H.order}_{reps.index(H)}"] = [
            {"subgroup": _subgroup_json(L), "coeff": str(c)}
            for L, c in e.sorted_terms()
        ]
    return True, {
        "class_orders": [H.order for H in reps],
        "table_of_marks": marks,
        "idempotents": idems,
    }


def cmd_species_table(config: RunConfig, G: FiniteGroup) -> tuple[bool, dict]:
    n = default_conductor(G, config.p)
    pairs = species.enumerate_pairs(G, config.p)
    gens = species.standard_generators(G, config.p, n)
    table = []
    for gen in gens:
        table.append([str(species.tau_generator(q, gen)) for q in pairs])
    return True, {
        "p": config.p,
        "conductor": n,
        "columns": [q.label() for q in pairs],
        "rows": [
            {"subgroup_order": g.subgroup.order,
             "character": list(g.character.table()),
             "values": row}
            for g, row in zip(gens, table)
        ],
    }


def cmd_idempotents(config: RunConfig, G: FiniteGroup) -> tuple[bool, dict]:
    reports = []
    ok = True
    for q in species.enumerate_pairs(G, config.p):
        rep = idem.idempotent_report(G, config.p, q)
        ok = ok and rep.delta_ok and rep.routes_agree
        reports.append({
            "pair": _pair_json(q),
            "element": rep.element.to_json(),
            "species": species.species_vector(rep.element).to_json(),
            "delta_ok": rep.delta_ok,
            "routes_agree": rep.routes_agree,
        })
    return ok, {"p": config.p, "idempotents": reports, "all_ok": ok}


def identity_suite(G: FiniteGroup, p: int) -> list[dict]:
    """Every identity the library verifies, for one (group, prime) run."""
    n = default_conductor(G, p)
    lat = subgroup_lattice(G)
    pairs = species.enumerate_pairs(G, p)
    checks: list[dict] = []

    def add(name: str, ok: bool):
        checks.append({"check": name, "ok": bool(ok)})

    for q in pairs:
        rep = idem.idempotent_report(G, p, q)
        add(f"delta {q.label()}", rep.delta_ok)
        add(f"routes {q.label()}", rep.routes_agree)
    add("partition of unity", idem.partition_of_unity(G, p))

    for H in lat.class_reps():
        for q in pairs:
            add(f"restriction law |H|={H.order} {q.label()}",
                idem.verify_restriction(G, p, H, q, n))
        for hq in species.enumerate_pairs(promote(H), p):
            add(f"induction law |H|={H.order} {hq.label()}",
                idem.verify_induction(G, p, H, hq, n))

    checks.extend(burnside_suite(G, p))
    checks.extend(factorization_suite(G, p))
    return checks


def burnside_suite(G: FiniteGroup, p: int) -> list[dict]:
    """Marks-delta, idempotency, commutation squares and fixed-point checks."""
    n = default_conductor(G, p)
    lat = subgroup_lattice(G)
    reps = lat.class_reps()
    checks: list[dict] = []

    def add(name: str, ok: bool):
        checks.append({"check": name, "ok": bool(ok)})

    for H in reps:
        e = bd.gluck_yoshida(G, H)
        delta_ok = all(
            bd.mark_element(e, K) == (1 if lat.rep_of(K) == lat.rep_of(H) else 0)
            for K in reps
        )
        add(f"marks delta |H|={H.order}", delta_ok)
        add(f"idempotency |H|={H.order}", bd.burnside_product(e, e) == e)

    for H in reps:
        for L in reps:
            x = bd.transitive(G, L)
            lhs = bd.linearize(bd.burnside_res(x, H), p, n)
            rhs = res_elt(bd.linearize(x, p, n), H)
            add(f"commute res |H|={H.order} |L|={L.order}",
                species.equal_elements(lhs, rhs))
        HH = promote(H)
        for S in subgroup_lattice(HH).class_reps():
            y = bd.transitive(HH, S)
            lhs = bd.linearize(bd.burnside_ind(y, G), p, n)
            rhs = ind_elt(bd.linearize(y, p, n), G)
            add(f"commute ind |H|={H.order} |S|={S.order}",
                species.equal_elements(lhs, rhs))

    for P in reps:
        if not _is_p_power(P.order, p):
            continue
        for L in reps:
            x = bd.transitive(G, L)
            lhs = bd.linearize(bd.fixed_point_functor(P, x), p, n)
            rhs = brauer_elt(bd.linearize(x, p, n), P)
            if P.order == 1:
                # the Brauer morphism at the trivial subgroup is the identity,
                # while the fixed-point functor lands over the regular
                # realization G/1; inflate back along the isomorphism
                N = normalizer(G, P)
                Q = quotient(promote(N), P.reparent(promote(N)))
                ok = species.equal_elements(inf_elt(lhs, Q), rhs)
            else:
                ok = species.equal_elements(lhs, rhs)
            add(f"commute Brauer |P|={P.order} |L|={L.order}", ok)

    for N in lat.subgroups:
        if not N.is_normal():
            continue
        ex = bd.gluck_yoshida(G, G.full_subgroup())
        lhs = bd.fixed_point_functor(N, ex)
        NN = promote(normalizer(G, N))
        Q = quotient(NN, N.reparent(NN))
        rhs = bd.gluck_yoshida(Q.group, Q.group.full_subgroup())
        add(f"fixed points of top idempotent |N|={N.order}", lhs == rhs)
    return checks


def factorization_suite(G: FiniteGroup, p: int) -> list[dict]:
    """The two factorizations of a species through restriction and the
    Brauer morphism, checked cell by cell."""
    n = default_conductor(G, p)
    checks: list[dict] = []
    pairs = species.enumerate_pairs(G, p)
    gens = species.standard_generators(G, p, n)
    for q in pairs:
        ok_res = all(
            species.tau_generator(q, gen) == tau_via_restriction(q, gen)
            for gen in gens
        )
        checks.append({"check": f"species restriction factorization {q.label()}",
                       "ok": ok_res})
        ok_brauer = all(
            species.tau_generator(q, gen) == tau_via_brauer(q, gen)
            for gen in gens
        )
        checks.append({"check": f"species Brauer factorization {q.label()}",
                       "ok": ok_brauer})
    return checks


def tau_via_restriction(pair, gen) -> Cyclotomic:
    """tau computed after restriction to the subgroup generated by the pair."""
    H = promote(pair.ps)
    x = PPElement.from_generator(pair.p, gen)
    y = res_elt(x, pair.ps)
    sub_pair = species.build_pair(H, pair.p, pair.P.reparent(H), pair.lift)
    return species.tau_element(sub_pair, y)


def tau_via_brauer(pair, gen) -> Cyclotomic:
    """tau computed through the Brauer morphism at P and the quotient species."""
    H = promote(pair.ps)
    x = PPElement.from_generator(pair.p, gen)
    y = res_elt(x, pair.ps)
    if pair.P.order > 1:
        PH = pair.P.reparent(H)
        Q = quotient(H, PH)
        z = brauer_elt(y, PH)
        base = Q.group
        lift = Q.project(pair.lift)
    else:
        z = y
        base = H
        lift = pair.lift
    pair0 = species.build_pair(base, pair.p, base.trivial_subgroup(), lift)
    return species.tau_element(pair0, z)


def _is_p_power(m: int, p: int) -> bool:
    while m % p == 0:
        m //= p
    return m == 1


def cmd_verify(config: RunConfig, G: FiniteGroup) -> tuple[bool, dict]:
    checks = identity_suite(G, config.p)
    ok = all(c["ok"] for c in checks)
    return ok, {
        "p": config.p,
        "checks": checks,
        "passed": sum(1 for c in checks if c["ok"]),
        "failed": sum(1 for c in checks if not c["ok"]),
        "all_ok": ok,
    }


def cmd_oracle_check(config: RunConfig, G: FiniteGroup) -> tuple[bool, dict]:
    n = default_conductor(G, config.p)
    F = ffq.build_field(config.p, n, config.oracle_n_cap)
    rng = random.Random(config.seed)
    pairs = species.enumerate_pairs(G, config.p)
    gens = species.standard_generators(G, config.p, n)
    results = []
    ok = True
    for _ in range(config.samples):
        q = rng.choice(pairs)
        gen = rng.choice(gens)
        expected = species.tau_generator(q, gen)
        got = ffq.oracle_tau(q, gen, F, config.oracle_dim_cap)
        agree = expected == got
        ok = ok and agree
        results.append({
            "pair": q.label(),
            "generator_subgroup_order": gen.subgroup.order,
            "character": list(gen.character.table()),
            "value": str(expected),
            "agree": agree,
        })
    return ok, {
        "p": config.p,
        "field": {"p": F.p, "m": F.m, "n": F.n},
        "samples": results,
        "all_agree": ok,
    }


COMMANDS = {
    "pairs": cmd_pairs,
    "lattice": cmd_lattice,
    "burnside": cmd_burnside,
    "species-table": cmd_species_table,
    "idempotents": cmd_idempotents,
    "verify": cmd_verify,
    "oracle-check": cmd_oracle_check,
}


def _format_report(config: RunConfig, report: dict) -> str:
    if config.fmt == "json":
        return json.dumps(report, indent=2, sort_keys=True) + "\n"
    if config.fmt == "csv":
        return _format_csv(config, report)
    return _format_pretty(config, report)


def _format_csv(config: RunConfig, report: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if config.command == "burnside":
        writer.writerow(["transitive_set"] + [f"|K|={o}" for o in report["class_orders"]])
        for order, row in zip(report["class_orders"], report["table_of_marks"]):
            writer.writerow([f"G/|{order}|"] + row)
    elif config.command == "species-table":
        writer.writerow(["subgroup_order", "character"] + report["columns"])
        for row in report["rows"]:
            writer.writerow([row["subgroup_order"], str(row["character"])]
                            + row["values"])
    elif config.command == "verify":
        writer.writerow(["check", "ok"])
        for c in report["checks"]:
            writer.writerow([c["check"], c["ok"]])
    else:
        return json.dumps(report, indent=2, sort_keys=True) + "\n"
    return buf.getvalue()


def _format_pretty(config: RunConfig, report: dict) -> str:
    lines: list[str] = []

    def walk(obj, indent=0):
        pad = "  " * indent
        if isinstance(obj, dict):
            for k in obj:
                v = obj[k]
                if isinstance(v, (dict, list)):
                    lines.append(f"{pad}{k}:")
                    walk(v, indent + 1)
                else:
                    lines.append(f"{pad}{k}: {v}")
        elif isinstance(obj, list):
            for v in obj:
                if isinstance(v, (dict, list)):
                    walk(v, indent)
                    lines.append("")
                else:
                    lines.append(f"{pad}- {v}")
        else:
            lines.append(f"{pad}{obj}")

    walk(report)
    return "\n".join(line for line in lines if line is not None) + "\n"


def run(config: RunConfig) -> tuple[int, str]:
    """Execute one configuration; returns (exit code, report text)."""
    try:
        G = parse_group_spec(config.group, config.max_order)
    except (ParseError, GroupError) as exc:
        return 2, f"error: {exc}\n"
    try:
        handler = COMMANDS[config.command]
    except KeyError:
        return 2, f"error: unknown command {config.command!r}\n"
    try:
        ok, report = handler(config, G)
    except ffq.CapExceeded as exc:
        return 2, f"error: {exc}\n"
    return (0 if ok else 1), _format_report(config, report)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ppring",
        description="Species and primitive idempotents of p-permutation rings, "
                    "in exact arithmetic.",
    )
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--group", required=True,
                        help="group name (S4, C6, D8, Q8, A4, C2xC2, ...) or JSON spec")
    parser.add_argument("--p", type=int, default=2, help="the prime p")
    parser.add_argument("--format", dest="fmt", default="pretty",
                        choices=["json", "csv", "pretty"])
    parser.add_argument("--max-order", type=int, default=DEFAULT_ORDER_CAP)
    parser.add_argument("--oracle-n-cap", type=int, default=ffq.DEFAULT_N_CAP)
    parser.add_argument("--samples", type=int, default=50)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out", default=None, help="write the report to a file")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = RunConfig(
            command=args.command, group=args.group, p=args.p, fmt=args.fmt,
            max_order=args.max_order, oracle_n_cap=args.oracle_n_cap,
            samples=args.samples, seed=args.seed, out=args.out,
        )
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    code, text = run(config)
    if config.out:
        with open(config.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
