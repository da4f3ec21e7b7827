"""Module unit tests"""
