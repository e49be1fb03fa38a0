"""
Command scripts of the preprojective Hochschild toolkit, one per subcommand.
"""

# Each run_<command>.py exposes main(args=None) -> int and runs on its own as well
