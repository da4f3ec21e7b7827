"""End-to-end tests"""
