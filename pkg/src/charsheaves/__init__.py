"""Nilpotent orbits and character sheaves on graded Lie algebras of classical symmetric pairs."""
from .syd import OrbitLabel, Partition, SignedYoungDiagram, SymmetricPair, enumerate_syd
from .orbits import (
    ComponentGroup,
    SupportLabel,
    component_group,
    fundamental_group_descriptor,
    orbital_complex_count,
    support_set,
)
from .richardson import calibrate, is_richardson, nilpotent_support_count, omega_data, pi_characters
from .series import TruncatedSeries1, TruncatedSeries2, expand
from .counts import d, e, full_support_count, hecke_count, HeckeFamily
from .identities import verify_identity
from .atlas import (
    bijection_orbital_to_char,
    char_count,
    enumerate_char_labels,
    verify_bijection,
    verify_counts,
)
from .weyl import character_orbit_reps, i_group, restricted_root_datum, stabilizer

__all__ = [
    "OrbitLabel", "Partition", "SignedYoungDiagram", "SymmetricPair", "enumerate_syd",
    "ComponentGroup", "SupportLabel", "component_group", "fundamental_group_descriptor",
    "orbital_complex_count", "support_set",
    "calibrate", "is_richardson", "nilpotent_support_count", "omega_data", "pi_characters",
    "TruncatedSeries1", "TruncatedSeries2", "expand",
    "d", "e", "full_support_count", "hecke_count", "HeckeFamily",
    "verify_identity",
    "bijection_orbital_to_char", "char_count", "enumerate_char_labels", "verify_bijection", "verify_counts",
    "character_orbit_reps", "i_group", "restricted_root_datum", "stabilizer",
]
