# -*- coding: utf-8 -*-
"""
Created on Mon Oct  5 09:12:40 2026
"""
