"""QET protocol steps: measurement, free evolution, conditioned extraction."""

from __future__ import annotations


__all__ = [
    "BranchEnergy",
    "MeasurementBranch",
    "MeasurementEnsemble",
    "ProtocolTrace",
    "apply_measurement",
    "bob_unitary",
    "energy_at_B",
    "energy_curve",
    "ensemble_energy",
    "extracted_energy",
    "extraction_objective",
    "injected_energy",
    "local_unitary_energy",
    "measurement_projectors",
    "prepare_run",
]

from qet_sim.protocol.extraction import (
    BranchEnergy,
    ProtocolTrace,
    bob_unitary,
    extracted_energy,
    extraction_objective,
    local_unitary_energy,
    prepare_run,
)
from qet_sim.protocol.measurement import (
    MeasurementBranch,
    MeasurementEnsemble,
    apply_measurement,
    energy_at_B,
    energy_curve,
    ensemble_energy,
    injected_energy,
    measurement_projectors,
)
