"""rosenlab: a desk-scale numerical laboratory for 2+1 Einstein-scalar gravity
with a translational Killing reduction, its cone-like backgrounds, transport
approximation and the analytic-estimate verification batteries."""

__version__ = "0.1.0"
