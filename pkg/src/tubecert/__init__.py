"""tubecert: exact certificates for homogeneous tube-domain geometry.

The package certifies, with zero-remainder polynomial identities wherever the
data is rational, that a catalog of unbounded domains in complex space is
homogeneous and behaves as claimed: affine generators preserve the tube
domains, the closed-form transitivity solver works, the normalizing
equivalences carry tubes onto their models, a 13-parameter group preserves
the quartic models, Levi signatures and normal-form trace conditions hold,
and the supporting Lie-algebra dimension counts come out exactly.

Entry points: the :mod:`tubecert.catalog` registry for the named objects,
:func:`tubecert.maps.invariance_certificate` for the central proof object,
and the ``tubecert`` command line (``verify``, ``describe``, ``list``) for
the batch suite.
"""

__version__ = "0.1.0"
