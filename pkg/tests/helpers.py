import numpy as np

from thermal_jc import XState


def random_xstate(rng: np.random.Generator) -> XState:
    """Random valid X state: Dirichlet populations, coherences drawn inside
    the positivity disks |w| <= sqrt(a*d), |z| <= sqrt(b*c)."""
    a, b, c, d = rng.dirichlet(np.ones(4))
    w = np.sqrt(a * d) * rng.uniform() * np.exp(2j * np.pi * rng.uniform())
    z = np.sqrt(b * c) * rng.uniform() * np.exp(2j * np.pi * rng.uniform())
    return XState(a=a, b=b, c=c, d=d, w=w, z=z)
