"""Core layer unit tests"""
