"""The default collection of algebras used by batch verification.

Entries are constructor expressions (see :func:`hyperalg.algebra.from_spec`);
the expression doubles as the registry name.  The collection covers the
cyclic groups through order 60, the standard small non-abelian groups,
direct products giving every order-16 and order-27 shape the grammar can
express, the multiplicative monoids mod n through 30, and the full
transformation monoids on 2 and 3 points.
"""

from __future__ import annotations

from .algebra import FiniteAlgebra, from_spec


def default_registry() -> tuple[str, ...]:
    names: list[str] = []
    names += [f"cyclic:{n}" for n in range(1, 61)]
    names += ["klein", "quaternion"]
    names += [f"dihedral:{n}" for n in range(2, 9)]
    names += ["sym:3", "sym:4"]
    names += ["elemab:2:3", "elemab:2:4", "elemab:3:2", "elemab:3:3"]
    names += [
        "product:(cyclic:4),(cyclic:2)",
        "product:(cyclic:8),(cyclic:2)",
        "product:(cyclic:4),(cyclic:4)",
        "product:(cyclic:4),(klein)",
        "product:(cyclic:2),(cyclic:6)",
        "product:(cyclic:9),(cyclic:3)",
        "product:(quaternion),(cyclic:2)",
        "product:(dihedral:4),(cyclic:2)",
        "product:(cyclic:6),(cyclic:6)",
    ]
    names += [f"multmod:{n}" for n in range(1, 31)]
    names += ["fulltrans:2", "fulltrans:3"]
    return tuple(names)


def build_registry(names=None) -> tuple[tuple[str, FiniteAlgebra], ...]:
    """Build (name, algebra) pairs, preserving the given order."""
    if names is None:
        names = default_registry()
    return tuple((name, from_spec(name)) for name in names)
