"""Test suite for Clean Architecture application"""
