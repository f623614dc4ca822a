"""
Factory functions for creating coefficient rings.

This module provides convenient functions to create ring descriptors
from standard presets, generator tables and bundled configuration files.
"""

import re
from collections.abc import Iterable, Mapping
from typing import Optional

from fgl_steenrod.configs.data_sources import DataSources
from fgl_steenrod.ring_core.data_models.ring_model import GeneratorSpec, RingDescriptor


def polynomial_ring(generators: Mapping[str, int], truncation_degree: int) -> RingDescriptor:
    """
    Create a truncated polynomial ring from a name -> degree table.

    Args:
        generators: Ordered mapping of generator names to degrees
        truncation_degree: Hard degree cutoff

    Returns:
        RingDescriptor with the generators in the given order

    Examples:
        >>> ring = polynomial_ring({"a1": 1, "a2": 2}, truncation_degree=3)
        >>> ring.names
        ('a1', 'a2')
    """
    return RingDescriptor(
        generators=tuple(GeneratorSpec(name=name, degree=degree) for name, degree in generators.items()),
        truncation_degree=truncation_degree,
    )


def ground_field(truncation_degree: int = 1) -> RingDescriptor:
    """GF(2) itself: no generators, only constants."""
    return RingDescriptor(generators=(), truncation_degree=truncation_degree)


def dual_steenrod_ring(generator_count: int, truncation_degree: Optional[int] = None) -> RingDescriptor:
    """
    Create GF(2)[xi1, ..., xik] with |xi_i| = 2^i - 1.

    Args:
        generator_count: Number k of generators
        truncation_degree: Cutoff; defaults to 2^k, the smallest window that sees xi_k

    Returns:
        RingDescriptor for the dual Steenrod presentation
    """
    truncation = truncation_degree if truncation_degree is not None else 2**generator_count
    return polynomial_ring({f"xi{i}": 2**i - 1 for i in range(1, generator_count + 1)}, truncation)


def cooperation_ring(
    generator_count: int,
    truncation_degree: int,
    coefficient_generators: Iterable[GeneratorSpec] = (),
) -> RingDescriptor:
    """
    Create the cooperation ring: optional base coefficients followed by a1, ..., am with |a_i| = i.
    """
    specs = list(coefficient_generators) + [GeneratorSpec(name=f"a{i}", degree=i) for i in range(1, generator_count + 1)]
    return RingDescriptor(generators=tuple(specs), truncation_degree=truncation_degree)


def infer_ring(names: Iterable[str], truncation_degree: int) -> RingDescriptor:
    """
    Build a ring from bare generator names, reading each degree from trailing digits (``a3`` has degree 3).

    Names without trailing digits get degree 1. Generators are ordered by (degree, name).
    """
    specs = []
    for name in sorted(set(names)):
        match = re.search(r"(\d+)$", name)
        degree = int(match.group(1)) if match and int(match.group(1)) > 0 else 1
        specs.append(GeneratorSpec(name=name, degree=degree))
    specs.sort(key=lambda g: (g.degree, g.name))
    return RingDescriptor(generators=tuple(specs), truncation_degree=truncation_degree)


# Predefined ring configurations bundled with the package
STANDARD_RINGS = {
    "ground-field": DataSources.GROUND_FIELD,
    "polynomial-t": DataSources.POLYNOMIAL_T,
    "dual-steenrod-3": DataSources.DUAL_STEENROD_3,
    "mo-cooperations-3": DataSources.MO_COOPERATIONS_3,
    "solver-a2-a6": DataSources.SOLVER_A2_A6,
}


def create_standard_ring(preset: str, truncation_degree: Optional[int] = None) -> RingDescriptor:
    """
    Create a ring from a bundled preset.

    Args:
        preset: One of the keys from STANDARD_RINGS
        truncation_degree: Optional override of the configured cutoff

    Returns:
        RingDescriptor loaded from the preset's configuration file

    Raises:
        ValueError: If preset is not recognized
    """
    if preset not in STANDARD_RINGS:
        available = list(STANDARD_RINGS.keys())
        raise ValueError(f"Unknown ring preset: {preset}. Available: {available}")

    ring = RingDescriptor.from_config(STANDARD_RINGS[preset])
    if truncation_degree is not None:
        ring = ring.with_truncation(truncation_degree)
    return ring
