#!/usr/bin/env python3
# package imports
from brpiclab.backend.cohomology.cohomology import h2
from brpiclab.backend.cohomology.extension import extension_group, extension_kernel, extension_projection, semidirect
from brpiclab.backend.cohomology.module import GModule
from brpiclab.backend.group.automorphism import is_isomorphic
from brpiclab.backend.group.builders import abelian, cyclic, symmetric

# third party imports
import numpy as np
import pytest


def test_nonsplit_cyclic_extension(C2):
    module = GModule.trivial(C2, 2)
    cocycle = h2(module).generators[0]
    group = extension_group(module, cocycle)
    assert group.order == 4
    assert is_isomorphic(group, cyclic(4)) is not None
    assert is_isomorphic(extension_group(module), abelian((2, 2))) is not None


def test_semidirect_is_s3():
    module = GModule(cyclic(2), [3], np.array([[[1]], [[2]]]))
    group = semidirect(module)
    assert is_isomorphic(group, symmetric(3)) is not None
    kernel = extension_kernel(group, module)
    assert kernel.order == 3 and kernel.is_normal
    projection = extension_projection(group, module)
    assert projection.is_homomorphism()
    assert projection.kernel() == kernel


def test_foreign_cocycle(C2, C3):
    cocycle = h2(GModule.trivial(C3, 3)).generators[0]
    with pytest.raises(ValueError):
        extension_group(GModule.trivial(C2, 2), cocycle)


if __name__ == "__main__":
    pytest.main([__file__])
