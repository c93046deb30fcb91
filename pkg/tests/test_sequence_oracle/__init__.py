# -*- coding: utf-8 -*-
"""
Created on Thu Oct 15 09:17:11 2026
"""
