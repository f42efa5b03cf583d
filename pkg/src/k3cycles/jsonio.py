"""JSON encodings shared by the library and the CLI.

Rationals travel as strings "p/q" (bare "p" when q = 1), Gauss rationals as
{"re": ..., "im": ...}, matrices as row-major arrays.  Numeric (sampled or
intersection) data is emitted as decimal strings tagged with the binary
precision used to compute it.
"""

from __future__ import annotations

import mpmath

from .cyclespace import (
    CycleClassification,
    DomainStatus,
    HyperplaneIntersection,
    ThreeSpace,
    TwistorStatus,
)
from .errors import InputError
from .gaussrat import GaussRational, format_rational, parse_rational
from .quadspace import IntegralLattice, QuadraticSpace
from .rootenum import RootList, Sublattice
from .weyl import ChamberPartition, PartitionCheck


def encode_rational(x) -> str:
    return format_rational(x)


def decode_rational(s):
    return parse_rational(s)


def encode_gauss(x) -> dict:
    g = GaussRational.of(x)
    return {"re": format_rational(g.re), "im": format_rational(g.im)}


def decode_gauss(obj) -> GaussRational:
    if isinstance(obj, (int, str)):
        return GaussRational.of(parse_rational(obj))
    if isinstance(obj, dict):
        return GaussRational(parse_rational(obj.get("re", 0)), parse_rational(obj.get("im", 0)))
    raise InputError(f"bad Gauss-rational value {obj!r}")


def encode_rational_vector(v) -> list:
    return [format_rational(x) for x in v]


def decode_rational_vector(obj) -> tuple:
    if not isinstance(obj, list):
        raise InputError("expected a JSON array for a rational vector")
    return tuple(parse_rational(x) for x in obj)


def encode_rational_matrix(m) -> list:
    return [encode_rational_vector(row) for row in m]


def decode_rational_matrix(obj) -> tuple:
    if not isinstance(obj, list):
        raise InputError("expected a JSON array of rows")
    return tuple(decode_rational_vector(row) for row in obj)


def decode_int_vector(obj) -> tuple:
    v = decode_rational_vector(obj)
    if any(x.denominator != 1 for x in v):
        raise InputError("expected integer entries")
    return tuple(int(x) for x in v)


def decode_int_matrix(obj) -> tuple:
    return tuple(decode_int_vector(row) for row in obj)


def encode_gauss_vector(v) -> list:
    return [encode_gauss(x) for x in v]


def decode_gauss_vector(obj) -> tuple:
    if not isinstance(obj, list):
        raise InputError("expected a JSON array for a vector")
    return tuple(decode_gauss(x) for x in obj)


def space_to_json(space: QuadraticSpace) -> dict:
    return {"gram": encode_rational_matrix(space.gram)}


def space_from_json(obj) -> QuadraticSpace:
    if not isinstance(obj, dict) or "gram" not in obj:
        raise InputError("quadratic space JSON needs a 'gram' key")
    return QuadraticSpace(gram=decode_rational_matrix(obj["gram"]))


def lattice_from_json(obj) -> IntegralLattice:
    return IntegralLattice(space=space_from_json(obj))


def threespace_to_json(v: ThreeSpace) -> dict:
    return {
        "ambient": space_to_json(v.ambient),
        "basis": [encode_gauss_vector(row) for row in v.basis],
    }


def threespace_from_json(obj) -> ThreeSpace:
    if not isinstance(obj, dict) or "ambient" not in obj or "basis" not in obj:
        raise InputError("three-space JSON needs 'ambient' and 'basis'")
    ambient = space_from_json(obj["ambient"])
    basis = tuple(decode_gauss_vector(row) for row in obj["basis"])
    return ThreeSpace(ambient=ambient, basis=basis)


def rootlist_to_json(r: RootList) -> dict:
    return {
        "complete": r.complete,
        "bound": r.bound_used,
        "roots": [list(v) for v in r.roots],
    }


def rootlist_from_json(obj) -> RootList:
    if not isinstance(obj, dict) or "roots" not in obj:
        raise InputError("root list JSON needs a 'roots' key")
    roots = tuple(tuple(int(x) for x in row) for row in obj["roots"])
    return RootList(roots=roots, complete=bool(obj.get("complete", False)), bound_used=obj.get("bound"))


def sublattice_to_json(s: Sublattice) -> dict:
    return {
        "rank": s.rank,
        "basis": [list(row) for row in s.basis],
        "restricted_gram": [list(row) for row in s.restricted_gram],
    }


def _digits_for_bits(bits: int) -> int:
    return max(int(bits * 0.30103) - 2, 8)


def encode_numeric_complex(x, bits: int) -> dict:
    digits = _digits_for_bits(bits)
    z = mpmath.mpc(x)
    return {
        "re": mpmath.nstr(z.real, digits),
        "im": mpmath.nstr(z.imag, digits),
    }


def encode_numeric_vector(v, bits: int) -> list:
    return [encode_numeric_complex(x, bits) for x in v]


def twistor_to_json(t: TwistorStatus) -> dict:
    return {
        "status": t.status,
        "certificate": list(t.certificate) if t.certificate is not None else None,
        "reason": t.reason,
    }


def domain_to_json(d: DomainStatus) -> dict:
    out = {"status": d.kind}
    if d.kind != "verified_positive":
        out["samples"] = d.samples
        out["precision_bits"] = d.precision_bits
    if d.kind == "counterexample":
        out["point"] = encode_numeric_vector(d.point, d.precision_bits or 53)
        out["exact_point"] = (
            [encode_gauss(x) for x in d.exact_point] if d.exact_point is not None else None
        )
        out["certified_exact"] = d.certified_exact
    return out


def classification_to_json(c: CycleClassification) -> dict:
    return {
        "smooth": c.smooth,
        "hermitian_signature": list(c.hermitian_signature),
        "real": c.real,
        "positive": c.positive,
        "twistor": twistor_to_json(c.twistor),
        "domain": domain_to_json(c.domain_status),
    }


def intersection_to_json(h: HyperplaneIntersection) -> dict:
    if h.kind == "containment":
        return {"kind": "containment"}
    a, b, c = h.quad_coeffs
    return {
        "kind": "two_points",
        "line_basis": [encode_gauss_vector(row) for row in h.line_basis],
        "quad_coeffs": {"a": encode_gauss(a), "b": encode_gauss(b), "c": encode_gauss(c)},
        "discriminant": encode_gauss(h.discriminant),
        "points": [encode_numeric_vector(p, h.precision_bits or 53) for p in h.numeric_points],
        "precision_bits": h.precision_bits,
    }


def partition_to_json(p: ChamberPartition) -> dict:
    return {
        "kappa": encode_rational_vector(p.kappa),
        "plus": [list(v) for v in p.plus],
        "minus": [list(v) for v in p.minus],
    }


def partition_check_to_json(c: PartitionCheck) -> dict:
    if c.ok:
        return {"ok": True, "violation": None}
    coeffs, delta = c.violation
    return {"ok": False, "violation": {"coefficients": list(coeffs), "delta": list(delta)}}
