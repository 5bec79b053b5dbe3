"""Power graphs of finite groups: construction, reconstruction and invariants."""

__version__ = "0.1.0"
