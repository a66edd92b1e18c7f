"""Machine-readable report documents and their plain-text rendering."""
from __future__ import annotations

import json

from . import bounds, pathmod
from .algebra import Algebra, loewy_length
from .pathmod import INFINITE

INF_TOKEN = "infinite"


def homdim(x) -> int | str:
    return INF_TOKEN if x == INFINITE else int(x)


def algebra_section(alg: Algebra) -> dict:
    return {
        "vertices": list(alg.vertices),
        "arrows": [{"name": a.name, "source": a.source, "target": a.target}
                   for a in alg.presentation.quiver.arrows],
        "relations": [list(r) for r in alg.relations],
        "dimension": alg.dimension,
        "loewyLength": loewy_length(alg),
    }


def simples_section(alg: Algebra) -> list[dict]:
    return [{"vertex": v, "pd": homdim(pathmod.pd_simple(alg, v)),
             "id": homdim(pathmod.id_simple(alg, v))} for v in alg.vertices]


def classes_section(alg: Algebra) -> dict:
    c = pathmod.simple_classes(alg)
    return {"finitePd": pathmod.ordered(alg, c.finite_pd),
            "infinitePd": pathmod.ordered(alg, c.infinite_pd),
            "finiteId": pathmod.ordered(alg, c.finite_id)}


def layer_section(alg: Algebra, V) -> dict:
    V = pathmod.simple_set(alg, V)
    per = [{"vertex": v, "ll": pathmod.layer_length(alg, pathmod.projective(alg, v), V)}
           for v in alg.vertices]
    return {"V": pathmod.ordered(alg, V), "perProjective": per,
            "llAlgebra": max(r["ll"] for r in per)}


def bounds_section(r: bounds.BoundReport) -> dict:
    cl = r.classical
    return {
        "V": list(r.V),
        "a": homdim(r.a),
        "c": homdim(r.c),
        "d": homdim(r.d),
        "n": r.n,
        "dbBound": homdim(r.db_bound),
        "dsgBound": "n/a" if r.dsg_bound is None else r.dsg_bound,
        "classical": {"llMinus1": cl.ll_minus_1, "gldim": homdim(cl.gldim),
                      "llMinus2": cl.ll_minus_2},
    }


def full_report(alg: Algebra, V=(), optimize: bool = False) -> dict:
    """Everything ``qha bounds`` prints; with ``optimize`` V is the best derived-bound set."""
    opt = None
    if optimize:
        db, dsg = bounds.optimize_db(alg), bounds.optimize_dsg(alg)
        V = db.V
        opt = {"bestV": list(db.V), "bestDb": homdim(db.value),
               "bestDsgV": list(dsg.V), "bestDsg": dsg.value}
    br = bounds.bound_report(alg, V)
    g = br.classical.gldim
    return {
        "algebra": algebra_section(alg),
        "simples": simples_section(alg),
        "classes": classes_section(alg),
        "layer": layer_section(alg, V),
        "bounds": bounds_section(br),
        "headline": {"db": homdim(br.db_headline), "dsg": br.dsg_headline,
                     # finite gldim: the singularity category is zero, not just bounded
                     "dsgIsZeroByFiniteGldim": g < INFINITE},
        "optimize": opt,
    }


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=False, ensure_ascii=False) + "\n"


# ------------------------------------------------------------------ text tables

def _table(header: list[str], rows: list[list]) -> str:
    cells = [header] + [[str(x) for x in r] for r in rows]
    widths = [max(len(r[k]) for r in cells) for k in range(len(header))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def text_algebra(sec: dict) -> str:
    return (f"vertices     {len(sec['vertices'])}\n"
            f"arrows       {len(sec['arrows'])}\n"
            f"relations    {len(sec['relations'])}\n"
            f"dimension    {sec['dimension']}\n"
            f"basis size   {sec['dimension']}\n"
            f"Loewy length {sec['loewyLength']}\n")


def text_simples(rows: list[dict]) -> str:
    return _table(["vertex", "pd", "id"], [[r["vertex"], r["pd"], r["id"]] for r in rows]) + "\n"


def text_layer(sec: dict) -> str:
    out = f"V = {{{', '.join(sec['V'])}}}\n"
    out += _table(["P(i)", "ll"], [[r["vertex"], r["ll"]] for r in sec["perProjective"]])
    return out + f"\nll(Λ) = {sec['llAlgebra']}\n"


def text_full(doc: dict) -> str:
    b = doc["bounds"]
    cl = b["classical"]
    parts = [text_algebra(doc["algebra"]), text_simples(doc["simples"]), text_layer(doc["layer"])]
    parts.append(
        f"a = pd V = {b['a']}, c = id V = {b['c']}, d = {b['d']}, n = {b['n']}\n"
        f"derived bound       (d+2)(n+1)-2 = {b['dbBound']}\n"
        f"singularity bound   max(0, n-2)  = {b['dsgBound']}\n"
        f"classical           LL-1 = {cl['llMinus1']}, gldim = {cl['gldim']}, "
        f"max(0, LL-2) = {cl['llMinus2']}\n"
        f"headline            dim D^b <= {doc['headline']['db']}, "
        f"dim D_sg <= {doc['headline']['dsg']}"
        + (" (= 0: finite global dimension)" if doc["headline"]["dsgIsZeroByFiniteGldim"] else "")
        + "\n")
    if doc["optimize"]:
        o = doc["optimize"]
        parts.append(f"optimum derived bound {o['bestDb']} at V = {{{', '.join(o['bestV'])}}}\n"
                     f"optimum singularity bound {o['bestDsg']} at V = {{{', '.join(o['bestDsgV'])}}}\n")
    return "\n".join(parts)
