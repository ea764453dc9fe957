"""Allow running semiauto with: python -m semiauto"""
from semiauto.main import cli_main

if __name__ == "__main__":
    cli_main()
