"""Vieta-jumping solution trees and the generalized cluster patterns behind them."""

from vietacluster.laurent import ExchangePoly, LaurentPoly, NotDivisible

__all__ = ["ExchangePoly", "LaurentPoly", "NotDivisible"]
__version__ = "0.1.0"
