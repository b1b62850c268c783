"""Finite-field polynomial system solving via Groebner bases, quotient-ring
multiplication matrices, and recurrence-based change of ordering."""

__version__ = "0.1.0"

_SUBMODULES = ("bench", "change_order", "cli", "errors", "field", "gb",
               "linalg", "poly", "quotient", "recur", "solver", "sysfile")

__all__ = list(_SUBMODULES)


def __getattr__(name):
    # submodules are imported on first touch so the CLI can configure the
    # numerical backend's environment before it loads
    if name in _SUBMODULES:
        import importlib

        module = importlib.import_module(f".{name}", __name__)
        globals()[name] = module
        return module
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
