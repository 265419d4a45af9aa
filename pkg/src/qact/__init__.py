"""qact: exact computations for generalized quaternion group actions.

Subpackages cover the finite-group engine (`groups`), 2-power cyclotomic
arithmetic (`cyclo`), Q(2^n) character theory (`reptheory`), isogeny-factor
dimension calculus (`decomp`), surface-kernel epimorphism classification
(`actions`), symplectic/Siegel verification (`siegel`), hyperelliptic models
(`curves`) and the command-line front end (`cli`).
"""

__version__ = "0.1.0"
