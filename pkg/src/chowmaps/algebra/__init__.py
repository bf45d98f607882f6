"""Polynomial rings, torus weights and integer lattices"""
