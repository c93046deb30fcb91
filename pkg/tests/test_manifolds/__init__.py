# -*- coding: utf-8 -*-
"""
Created on Thu Oct 15 09:42:11 2026
"""
