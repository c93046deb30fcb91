# -*- coding: utf-8 -*-
"""
Created on Thu Oct 15 09:27:11 2026
"""
