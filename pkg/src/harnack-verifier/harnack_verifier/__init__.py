"""Numerical verification of Harnack-type determinantal inequalities.

The package is organized as:

- ``linalg``: dense complex kernels, the matrix JSON codec and sampling
- ``majorization``: majorization predicates and product inequalities
- ``inequalities``: one verifier per inequality and the counterexample
- ``search``: the seeded Monte-Carlo harness
- ``cli``: the ``harnack-verifier`` command
"""

__version__ = "0.1.0"
