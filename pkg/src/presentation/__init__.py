"""
Presentation Layer.

Command-line front end over the bounded contexts.
"""
