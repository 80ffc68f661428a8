"""Operations-research solvers and expert-evaluation statistics."""

__version__ = "0.1.0"
