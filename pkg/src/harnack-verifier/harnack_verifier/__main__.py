# Standard Library
import sys

# Local Modules
from harnack_verifier.cli import main

if __name__ == "__main__":
    sys.exit(main())
