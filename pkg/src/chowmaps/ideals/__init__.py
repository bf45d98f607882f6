"""Graded ideals over Z and Q"""
