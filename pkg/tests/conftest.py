"""Shared corpus of generated diagrams for the test suite."""

from __future__ import annotations

import pytest

from altknot import families as fam


def small_member_specs() -> list[fam.FamilySpec]:
    """A spread of members across every family, kept small enough that
    structural sweeps stay fast."""
    specs: list[fam.FamilySpec] = []
    for v in range(1, 7):
        specs.append(fam.FamilySpec(fam.CYCLIC_TORUS, (v,)))
        specs.append(fam.FamilySpec(fam.TWIST_CHAIN, (v,)))
    specs += [fam.FamilySpec(fam.HOPF_TWIST, (v,)) for v in range(2, 7)]
    specs += [fam.FamilySpec(fam.TREFOIL_TWIST, (v,)) for v in range(3, 7)]
    specs += [fam.FamilySpec(fam.FOUR_KNOT_TWIST, (v,)) for v in range(4, 8)]
    specs += [fam.FamilySpec(fam.TWIST_KNOTS, (v,)) for v in range(3, 7)]
    specs += [fam.FamilySpec(fam.TWO_RIBBON, (j, k))
              for j in range(1, 5) for k in range(1, 4)]
    specs += [fam.FamilySpec(fam.THREE_RIBBON_P, (k, l, m))
              for k in (1, 2, 3) for l in (1, 2) for m in (1, 2)]
    specs += [fam.FamilySpec(fam.THREE_RIBBON_G, (k, l, m))
              for k in (1, 2, 3) for l in (1, 2) for m in (1, 2)]
    specs += [fam.FamilySpec(fam.CLOSED_CHAIN, (k,)) for k in (1, 2, 3, 4)]
    specs += [fam.FamilySpec(fam.K_RIBBON_CYCLIC, (k, m))
              for k in (1, 2, 3) for m in (1, 2, 3)]
    specs += [fam.FamilySpec(fam.CHAINED_CYCLIC, (k, n))
              for k in (0, 1, 2) for n in (1, 2, 3)]
    return specs


@pytest.fixture(scope="session")
def member_specs() -> list[fam.FamilySpec]:
    return small_member_specs()


@pytest.fixture(scope="session")
def member_diagrams(member_specs):
    return [(spec, fam.generate(spec)) for spec in member_specs]
