from .BaseCycle import BaseCycle

__all__ = ["BaseCycle"]
