"""Exact verification toolkit for the algebra around rational double points:
McKay correspondence data for the finite SL2 subgroups, equivariant Tor
modules of exceptional-fiber cluster ideals, and the Euler-characteristic
Hall algebra of double-quiver representations with its Serre-relation and
graded-dimension checks."""

__version__ = "0.1.0"
