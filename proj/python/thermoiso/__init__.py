"""Thermomajorization toolkit for photoisomerization quantum yields."""

from thermoiso._core import (
    AdvantageMap,
    BasisRotation,
    CoherentBlock,
    CoherentBlockState,
    EnergySpectrum,
    GapSweepRow,
    Level,
    LorenzCurve,
    PhotoswitchParams,
    RidgeFit,
    RidgePoint,
    ThermalContext,
    YieldDefinition,
    YieldReport,
    advantage_map,
    any_trans_subset,
    both_trans_subset,
    brute_force_yield,
    build_curve,
    diagonalize_blocks,
    evaluate,
    extract_zero_mode,
    fit_ridge,
    gap_sweep,
    general_two_molecule_initial,
    gibbs_state,
    max_subset_mass,
    partition_function,
    purity,
    qy_any,
    qy_both,
    qy_single,
    ridge_extract,
    rotate_back,
    single_molecule_initial,
    single_molecule_model,
    superposition_initial_state,
    thermomajorizes,
    two_molecule_model,
    validate_population,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
