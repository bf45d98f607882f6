"""Presentation and verification services"""
