# -*- coding: utf-8 -*-
"""
Created on Thu Oct 15 09:00:11 2026
"""
