"""Configuration, logging and exceptions for chowmaps"""
