import sys

from fgl_steenrod.cli.main import main

if __name__ == "__main__":
    sys.exit(main())
