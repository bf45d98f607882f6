"""Relation classes alpha_{i,k} and their computation paths"""
