"""Legendrian link invariants from front diagrams.

Modules:

* ``laurent``  — exact Laurent polynomial arithmetic and encodings
* ``front``    — plat event words: validation, components, classical
  invariants, branches, Maslov potentials, gradings
* ``families`` — the rational / flyped / twist link families: parser,
  front builders, closed-form polynomials, orderedness
* ``dga``      — link differential graded algebra over Z/2:
  disk-counted differential, augmentations, linearized polynomials
* ``rulings``  — admissible decompositions and their polynomials
* ``morse``    — geometric front realizations and difference-function
  critical pairs
* ``cli``      — the ``leglab`` command-line front end
"""

from __future__ import annotations

__version__ = "0.1.0"
