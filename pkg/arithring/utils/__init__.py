from ._track import track

__all__ = ["track"]
