# -*- coding: utf-8 -*-
"""
Created on Thu Oct 15 09:01:11 2026
"""
