"""Exact and numeric experiments on the spt-crank functions N_C1, N_C5 and spt_omega."""

__version__ = "0.1.0"
