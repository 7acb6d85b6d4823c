"""Exact computer algebra: tame symbols on the projective line, Groebner
bases over Q and small extension fields, graded Jacobian quotients, residue
linear systems, and a replay interpreter for recorded computer algebra
sessions."""

__version__ = "0.1.0"
