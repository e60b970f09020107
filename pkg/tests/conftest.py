import pytest

from r22sdf._kernels import available_impls


@pytest.fixture(params=sorted(available_impls()), ids=lambda name: f"kernel-{name}")
def kernel_impl(request):
    """Each importable kernel implementation (pure, and cython if built)."""
    return available_impls()[request.param]
