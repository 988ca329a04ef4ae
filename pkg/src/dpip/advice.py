"""Advice bundles: subfield polynomials plus the exceptional prime set.

A bundle packages, for one number field, monic polynomials f_1..f_t over
O_K whose root fields are the small unramified relative extensions that
together cut out the class group, and the set S of principal primes
dividing some disc(f_i) (those primes cannot be classified by the
splitting test and are answered from S directly). Discriminants are cached
in the bundle and recomputed on load, so tampered files are rejected.
"""

import json
from dataclasses import dataclass

from . import fppoly
from .errors import AdviceError
from .nf import (
    FieldElement,
    NumberField,
    PrimeIdeal,
    kummer_dedekind,
    poly_discriminant,
    prime_power,
)
from .residue import element_in_prime
from .serialize import decode_int, encode_int, field_from_dict, field_to_dict


@dataclass(frozen=True)
class AdviceBundle:
    field: NumberField
    subfields: tuple  # ((q_i, poly_i), ...) with poly_i a tuple of FieldElement
    S: tuple  # PrimeIdeal entries
    disc_cache: tuple  # FieldElement, one per subfield

    @property
    def t(self):
        return len(self.subfields)

    def smoothness(self):
        """Largest subfield degree (the group's smoothness parameter)."""
        return max((q for q, _ in self.subfields), default=1)

    def __repr__(self):
        qs = [q for q, _ in self.subfields]
        return f"AdviceBundle(degrees={qs}, |S|={len(self.S)})"


def build_advice(K, polys, S=(), principal_test=None):
    """Assemble and validate a bundle from subfield polynomials.

    `polys` are sequences of FieldElement coefficients (low to high, monic).
    When `principal_test` is given, S is computed by enumerating the prime
    ideals dividing each polynomial discriminant and keeping the principal
    ones; otherwise the provided S is validated as-is.
    """
    polys = [tuple(p) for p in polys]
    try:
        discs = tuple(poly_discriminant(list(p)) for p in polys)
    except (ValueError, AttributeError) as exc:
        raise AdviceError(f"invalid subfield polynomial: {exc}") from exc
    if principal_test is not None:
        found = []
        for disc in discs:
            for P in _primes_dividing(K, disc):
                if P not in found and principal_test(P):
                    found.append(P)
        S = tuple(found)
    subfields = tuple((len(p) - 1, p) for p in polys)
    bundle = AdviceBundle(field=K, subfields=subfields, S=tuple(S), disc_cache=discs)
    validate_advice(bundle)
    return bundle


def _primes_dividing(K, disc_elem):
    """Prime ideals containing a nonzero integral element."""
    n = abs(disc_elem.norm_int())
    if n == 0:
        raise AdviceError("subfield polynomial has vanishing discriminant")
    from sympy import factorint

    out = []
    for p in sorted(factorint(n)):
        for P in kummer_dedekind(p, K):
            if element_in_prime(disc_elem, P):
                out.append(P)
    return out


def validate_advice(bundle):
    """Check every bundle invariant; raise AdviceError on the first failure."""
    K = bundle.field
    if len(bundle.disc_cache) != len(bundle.subfields):
        raise AdviceError("disc_cache length does not match the subfield list")
    for idx, (q, poly) in enumerate(bundle.subfields):
        if len(poly) - 1 != q:
            raise AdviceError(f"subfield {idx}: declared degree {q} != polynomial degree")
        if q < 2:
            raise AdviceError(f"subfield {idx}: degree must be at least 2")
        if prime_power(q) is None:
            raise AdviceError(f"subfield {idx}: degree {q} is not a prime power")
        for c in poly:
            if not isinstance(c, FieldElement) or c.K != K:
                raise AdviceError(f"subfield {idx}: coefficient outside the field")
            if not c.is_integral():
                raise AdviceError(f"subfield {idx}: coefficients must be integral")
        if poly[-1] != K.one():
            raise AdviceError(f"subfield {idx}: polynomial must be monic")
        recomputed = poly_discriminant(list(poly))
        if recomputed != bundle.disc_cache[idx]:
            raise AdviceError(f"subfield {idx}: cached discriminant mismatch")
    for P in bundle.S:
        _validate_prime(K, P)
        if not any(element_in_prime(disc, P) for disc in bundle.disc_cache):
            raise AdviceError(
                f"exceptional prime {P.label()} divides no subfield discriminant"
            )


def _validate_prime(K, P):
    from sympy import isprime

    if P.K != K:
        raise AdviceError("exceptional prime belongs to a different field")
    if not isprime(P.p):
        raise AdviceError(f"{P.p} is not prime")
    g = list(P.gen_poly)
    if not fppoly.is_irreducible(g, P.p):
        raise AdviceError(f"gen_poly of {P.label()} is reducible mod {P.p}")
    if fppoly.mod(fppoly.from_ints(list(K.poly), P.p), g, P.p):
        raise AdviceError(
            f"gen_poly of {P.label()} does not divide the defining polynomial mod {P.p}"
        )


# ---------------------------------------------------------------------------
# File format

def advice_to_dict(bundle):
    return {
        "field": field_to_dict(bundle.field),
        "subfields": [
            {
                "q": q,
                "poly": [[encode_int(x) for x in c.coords] for c in poly],
            }
            for q, poly in bundle.subfields
        ],
        "S": [
            {"p": encode_int(P.p), "gen_poly": [encode_int(c) for c in P.gen_poly]}
            for P in bundle.S
        ],
        "disc_cache": [
            [encode_int(x) for x in c.coords] for c in bundle.disc_cache
        ],
    }


def advice_from_dict(data):
    try:
        K = field_from_dict(data["field"])
        subfields = []
        for entry in data["subfields"]:
            q = decode_int(entry["q"])
            poly = tuple(
                K.element([decode_int(x) for x in coords]) for coords in entry["poly"]
            )
            subfields.append((q, poly))
        S = []
        for entry in data.get("S", []):
            p = decode_int(entry["p"])
            gen = [decode_int(c) for c in entry["gen_poly"]]
            deg = len(gen) - 1
            e = _multiplicity(K, p, gen)
            S.append(PrimeIdeal(K, p, gen, deg, e))
        cached = None
        if "disc_cache" in data:
            cached = tuple(
                K.element([decode_int(x) for x in coords])
                for coords in data["disc_cache"]
            )
    except (KeyError, TypeError, ValueError) as exc:
        raise AdviceError(f"malformed advice file: {exc}") from exc
    discs = tuple(poly_discriminant(list(p)) for _, p in subfields)
    if cached is not None and discs != cached:
        raise AdviceError("disc_cache does not match the recomputed discriminants")
    bundle = AdviceBundle(
        field=K, subfields=tuple(subfields), S=tuple(S), disc_cache=discs
    )
    validate_advice(bundle)
    return bundle


def _multiplicity(K, p, gen):
    """Multiplicity of gen inside the defining polynomial mod p."""
    e = 0
    rem = fppoly.from_ints(list(K.poly), p)
    g = fppoly.from_ints(gen, p)
    while rem:
        q, r = fppoly.divmod_(rem, g, p)
        if r:
            break
        e += 1
        rem = q
    if e == 0:
        raise AdviceError("gen_poly does not divide the defining polynomial mod p")
    return e


def load_advice(path):
    with open(path) as fh:
        data = json.load(fh)
    return advice_from_dict(data)


def store_advice(bundle, path):
    with open(path, "w") as fh:
        json.dump(advice_to_dict(bundle), fh, indent=1)
        fh.write("\n")
