# -*- coding: utf-8 -*-
"""
Created on Thu Oct 15 09:28:11 2026
"""
