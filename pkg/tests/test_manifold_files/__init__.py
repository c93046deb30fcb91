# -*- coding: utf-8 -*-
"""
Created on Thu Oct 15 09:58:11 2026
"""
