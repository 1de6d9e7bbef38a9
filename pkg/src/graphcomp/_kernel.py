"""Selects the counting kernel at import: compiled core if built, else pure Python."""

try:
    from . import _core as _impl

    KERNEL_BACKEND = "compiled"
except ImportError:  # extension not built; the pure twin behaves identically
    from . import _core_py as _impl

    KERNEL_BACKEND = "pure-python"

connected_subsets = _impl.connected_subsets
count_masks = _impl.count_masks


def kernel_backend() -> str:
    """Name of the kernel implementation in use."""
    return KERNEL_BACKEND
