"""semiauto test suite.

Unit and integration tests for the automata, structures, decision procedures,
rewriting encoding and command-line interface.
"""
