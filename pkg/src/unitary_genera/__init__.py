# -*- coding: utf-8 -*-
"""
Created on Mon Oct  5 09:12:41 2026

Exact multiplicative sequences, genera and characteristic-number vanishing checks
for unitary manifolds.
"""
__version__ = "0.1.0"
