import sys

from trendcast.applications import main

if __name__ == "__main__":
    sys.exit(main())
