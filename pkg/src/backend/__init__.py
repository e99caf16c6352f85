"""
Command-line services for pclosed:

- expression parsing and evaluation
- subcommand dispatch and output
- batch trial execution for bench and selftest
"""
